//! Exhaustive reference search used to cross-check `find_typed`.

use super::{Match, MatchSet, PatternError, TypedPattern};
use crate::diagram::SimpleGraph;

pub const ORACLE_MAX_HOST: usize = 12;

/// Enumerates every injective assignment in lexicographic order, assigning
/// pattern vertices in declaration order and discarding a prefix as soon as
/// it breaks a bound or an edge.
pub fn oracle_find_typed(g: &SimpleGraph, p: &TypedPattern) -> Result<Vec<Match>, PatternError> {
    if g.order() > ORACLE_MAX_HOST {
        return Err(PatternError::HostTooLarge(g.order()));
    }
    let mut found = MatchSet::default();
    let mut images = Vec::with_capacity(p.order());
    enumerate(g, p, &mut images, &mut found);
    Ok(found.into_matches())
}

fn enumerate(g: &SimpleGraph, p: &TypedPattern, images: &mut Vec<usize>, found: &mut MatchSet) {
    let i = images.len();
    if i == p.order() {
        found.offer(p, images);
        return;
    }
    for v in 0..g.order() {
        if images.contains(&v) || !p.bounds()[i].contains(g.degree(v)) {
            continue;
        }
        let edges_ok = p
            .edges()
            .iter()
            .filter_map(|&(a, b)| match (a == i, b == i) {
                (true, false) if b < i => Some(b),
                (false, true) if a < i => Some(a),
                _ => None,
            })
            .all(|u| g.has_edge(images[u], v));
        if !edges_ok {
            continue;
        }
        images.push(v);
        enumerate(g, p, images, found);
        images.pop();
    }
}
