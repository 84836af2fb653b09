//! Degree-typed subgraph search.
//!
//! A [`TypedPattern`] is a small connected graph whose vertices carry degree
//! intervals measured in the host graph. Matches are injective, need not be
//! induced, and are reported once per image (vertex set plus edge set), each
//! by its lexicographically smallest assignment.

mod catalog;
mod guarantees;
mod oracle;

pub use catalog::{catalog, catalog_pattern};
pub use guarantees::{check_guarantees, GuaranteeEntry, GuaranteeError, GuaranteeReport};
pub use oracle::{oracle_find_typed, ORACLE_MAX_HOST};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{is_valid_id, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreeInterval {
    pub lo: usize,
    /// `None` is unbounded.
    pub hi: Option<usize>,
}

impl DegreeInterval {
    pub const ANY: DegreeInterval = DegreeInterval { lo: 0, hi: None };

    pub fn new(lo: usize, hi: Option<usize>) -> Self {
        Self { lo, hi }
    }

    pub fn exactly(k: usize) -> Self {
        Self::new(k, Some(k))
    }

    pub fn at_most(k: usize) -> Self {
        Self::new(0, Some(k))
    }

    pub fn contains(self, k: usize) -> bool {
        k >= self.lo && self.hi.is_none_or(|hi| k <= hi)
    }

    /// True if every degree allowed by `self` is allowed by `other`.
    pub fn within(self, other: DegreeInterval) -> bool {
        self.lo >= other.lo
            && match (self.hi, other.hi) {
                (_, None) => true,
                (Some(a), Some(b)) => a <= b,
                (None, Some(_)) => false,
            }
    }
}

impl fmt::Display for DegreeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(hi) => write!(f, "[{},{}]", self.lo, hi),
            None => write!(f, "[{},inf]", self.lo),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("pattern has no vertices")]
    Empty,
    #[error("pattern vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("unknown pattern vertex `{0}`")]
    UnknownVertex(String),
    #[error("pattern edge `{0}`-`{1}` is a loop or repeated")]
    NotSimple(String, String),
    #[error("pattern graph is not connected")]
    NotConnected,
    #[error("empty degree interval at `{0}`")]
    EmptyInterval(String),
    #[error("host has {0} vertices; the exhaustive oracle accepts at most {ORACLE_MAX_HOST}")]
    HostTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedPattern {
    name: String,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    bounds: Vec<DegreeInterval>,
    adj: Vec<Vec<usize>>,
}

impl TypedPattern {
    pub fn new(
        name: &str,
        vertices: &[&str],
        edges: &[(usize, usize)],
        bounds: &[DegreeInterval],
    ) -> Result<Self, PatternError> {
        assert_eq!(vertices.len(), bounds.len(), "one interval per pattern vertex");
        if vertices.is_empty() {
            return Err(PatternError::Empty);
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(PatternError::DuplicateVertex(v.to_string()));
            }
            if bounds[i].hi.is_some_and(|hi| hi < bounds[i].lo) {
                return Err(PatternError::EmptyInterval(v.to_string()));
            }
        }
        let k = vertices.len();
        let mut adj = vec![Vec::new(); k];
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= k || b >= k {
                return Err(PatternError::UnknownVertex(a.max(b).to_string()));
            }
            if a == b || adj[a].contains(&b) {
                return Err(PatternError::NotSimple(vertices[a].into(), vertices[b].into()));
            }
            adj[a].push(b);
            adj[b].push(a);
            norm.push((a.min(b), a.max(b)));
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.contains(&false) {
            return Err(PatternError::NotConnected);
        }
        Ok(Self {
            name: name.to_string(),
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: norm,
            bounds: bounds.to_vec(),
            adj,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bounds(&self) -> &[DegreeInterval] {
        &self.bounds
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Same shape with different intervals.
    pub fn with_bounds(&self, bounds: &[DegreeInterval]) -> Self {
        assert_eq!(bounds.len(), self.order());
        Self { bounds: bounds.to_vec(), ..self.clone() }
    }
}

/// Reads `pvertex <id> <lo> <hi|inf>` lines followed by `pedge <a> <b>` lines.
pub fn parse_pattern(name: &str, text: &str) -> Result<TypedPattern, PatternError> {
    let mut names: Vec<String> = Vec::new();
    let mut bounds = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let tokens: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        let syntax = |message: &str| PatternError::Syntax { line, message: message.to_string() };
        match tokens.as_slice() {
            [] => {}
            ["pvertex", id, lo, hi] => {
                if !edges.is_empty() {
                    return Err(syntax("pvertex lines must precede pedge lines"));
                }
                if !is_valid_id(id) {
                    return Err(syntax("invalid pattern vertex id"));
                }
                let lo = lo.parse().map_err(|_| syntax("lower bound is not a count"))?;
                let hi = match *hi {
                    "inf" => None,
                    h => Some(h.parse().map_err(|_| syntax("upper bound is not a count or `inf`"))?),
                };
                names.push(id.to_string());
                bounds.push(DegreeInterval::new(lo, hi));
            }
            ["pedge", a, b] => {
                let find = |id: &str| {
                    names
                        .iter()
                        .position(|n| n == id)
                        .ok_or_else(|| PatternError::UnknownVertex(id.to_string()))
                };
                edges.push((find(a)?, find(b)?));
            }
            _ => return Err(syntax("expected `pvertex <id> <lo> <hi|inf>` or `pedge <a> <b>`")),
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    TypedPattern::new(name, &refs, &edges, &bounds)
}

/// Host vertex assigned to each pattern vertex, in pattern order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Match {
    pub images: Vec<usize>,
}

/// Sorted image vertices and sorted image edges.
pub type ImageKey = (Vec<usize>, Vec<(usize, usize)>);

impl Match {
    pub fn key(&self, p: &TypedPattern) -> ImageKey {
        let mut vs = self.images.clone();
        vs.sort_unstable();
        let mut es: Vec<(usize, usize)> = p
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.images[a], self.images[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        es.sort_unstable();
        (vs, es)
    }

    /// Independent re-check of injectivity, edges and degree bounds.
    pub fn verify(&self, g: &SimpleGraph, p: &TypedPattern) -> bool {
        let mut vs = self.images.clone();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == p.order()
            && self.images.iter().all(|&v| v < g.order())
            && p.edges().iter().all(|&(a, b)| g.has_edge(self.images[a], self.images[b]))
            && (0..p.order()).all(|i| p.bounds()[i].contains(g.degree(self.images[i])))
    }

    pub fn line(&self, g: &SimpleGraph, p: &TypedPattern) -> String {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("{}={}", p.vertex(i), g.name(v)))
            .collect();
        format!("match {}", parts.join(" "))
    }
}

/// Collects matches by image, keeping the smallest assignment per image.
#[derive(Debug, Default)]
pub(crate) struct MatchSet {
    by_key: BTreeMap<ImageKey, Vec<usize>>,
}

impl MatchSet {
    pub(crate) fn offer(&mut self, p: &TypedPattern, images: &[usize]) {
        let m = Match { images: images.to_vec() };
        let key = m.key(p);
        match self.by_key.get_mut(&key) {
            Some(best) if *best <= m.images => {}
            Some(best) => *best = m.images,
            None => {
                self.by_key.insert(key, m.images);
            }
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.by_key.len()
    }

    pub(crate) fn into_matches(self) -> Vec<Match> {
        self.by_key.into_values().map(|images| Match { images }).collect()
    }
}

/// All matches (or the first `limit` distinct images found) of `p` in `g`,
/// sorted by image.
pub fn find_typed(g: &SimpleGraph, p: &TypedPattern, limit: Option<usize>) -> Vec<Match> {
    let k = p.order();
    if k > g.order() || limit == Some(0) {
        return Vec::new();
    }
    let allowed: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..g.order())
                .map(|v| p.bounds()[i].contains(g.degree(v)) && g.degree(v) >= p.degree(i))
                .collect()
        })
        .collect();
    let counts: Vec<usize> = allowed.iter().map(|a| a.iter().filter(|&&x| x).count()).collect();
    if counts.contains(&0) {
        return Vec::new();
    }

    // most constrained first; afterwards prefer vertices tied to many placed ones
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    let first = (0..k)
        .min_by_key(|&i| (counts[i], std::cmp::Reverse(p.degree(i)), i))
        .expect("nonempty pattern");
    order.push(first);
    placed[first] = true;
    while order.len() < k {
        let next = (0..k)
            .filter(|&i| !placed[i])
            .min_by_key(|&i| {
                let links = p.neighbors(i).iter().filter(|&&u| placed[u]).count();
                (std::cmp::Reverse(links), counts[i], i)
            })
            .expect("unplaced vertex remains");
        order.push(next);
        placed[next] = true;
    }
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(pos, &i)| {
            p.neighbors(i)
                .iter()
                .copied()
                .filter(|u| order[..pos].contains(u))
                .collect()
        })
        .collect();

    let mut search = Search {
        g,
        p,
        order: &order,
        back: &back,
        allowed: &allowed,
        images: vec![usize::MAX; k],
        used: vec![false; g.order()],
        found: MatchSet::default(),
        limit,
    };
    search.extend(0);
    search.found.into_matches()
}

struct Search<'a> {
    g: &'a SimpleGraph,
    p: &'a TypedPattern,
    order: &'a [usize],
    back: &'a [Vec<usize>],
    allowed: &'a [Vec<bool>],
    images: Vec<usize>,
    used: Vec<bool>,
    found: MatchSet,
    limit: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn extend(&mut self, pos: usize) {
        if pos == self.order.len() {
            self.found.offer(self.p, &self.images);
            return;
        }
        let i = self.order[pos];
        let candidates: Vec<usize> = match self.back[pos].first() {
            Some(&anchor) => self.g.neighbors(self.images[anchor]).iter().copied().collect(),
            None => (0..self.g.order()).collect(),
        };
        for v in candidates {
            if self.used[v] || !self.allowed[i][v] {
                continue;
            }
            if !self.back[pos].iter().all(|&u| self.g.has_edge(self.images[u], v)) {
                continue;
            }
            self.images[i] = v;
            self.used[v] = true;
            self.extend(pos + 1);
            self.used[v] = false;
            self.images[i] = usize::MAX;
            if self.done() {
                return;
            }
        }
    }
}

/// `match` lines followed by `count=<n>`, as printed by the `find` subcommand.
pub fn find_report(g: &SimpleGraph, p: &TypedPattern, matches: &[Match]) -> String {
    let mut out = String::new();
    for m in matches {
        out.push_str(&m.line(g, p));
        out.push('\n');
    }
    out.push_str(&format!("count={}\n", matches.len()));
    out
}
