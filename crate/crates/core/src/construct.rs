//! Built-in fixture diagrams and the n-fold gluing construction used to show
//! that no connected graph is light among 1-planar graphs.

use thiserror::Error;

use crate::diagram::{self, Diagram, VertexKind};
use crate::embedding;

const TETRAHEDRON: &str = "\
onepl 1
vertex a true
vertex b true
vertex c true
vertex d true
rot a b c d
rot b a d c
rot c a b d
rot d a c b
";

const C4: &str = "\
onepl 1
vertex a true
vertex b true
vertex c true
vertex d true
rot a b d
rot b c a
rot c d b
rot d a c
";

// square a b c d with crossing diagonals, e outside joined to all four
const K5: &str = "\
onepl 1
vertex a true
vertex b true
vertex c true
vertex d true
vertex e true
vertex x crossing
rot a b x d e
rot b e c x a
rot c b e d x
rot d a x c e
rot e b a d c
rot x b c d a
";

// octahedron plus its three antipodal chords, each crossing one octahedron edge
const K6: &str = "\
onepl 1
vertex v1 true
vertex v2 true
vertex v3 true
vertex v4 true
vertex v5 true
vertex v6 true
vertex x1 crossing
vertex x2 crossing
vertex x3 crossing
rot v1 v4 x2 v5 x1 v6
rot v2 v3 v5 x2 v4 x3
rot v3 v2 x3 v6 x1 v5
rot v4 v1 v6 x3 v2 x2
rot v5 v1 x2 v2 v3 x1
rot v6 v1 x1 v3 x3 v4
rot x1 v1 v5 v3 v6
rot x2 v1 v4 v2 v5
rot x3 v2 v4 v6 v3
";

pub const FIXTURE_NAMES: [&str; 4] = ["tetrahedron", "c4", "k5", "k6"];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture `{0}` (expected one of tetrahedron, c4, k5, k6)")]
    UnknownFixture(String),
}

pub fn fixture(name: &str) -> Result<Diagram, FixtureError> {
    let text = match name {
        "tetrahedron" => TETRAHEDRON,
        "c4" => C4,
        "k5" => K5,
        "k6" => K6,
        _ => return Err(FixtureError::UnknownFixture(name.to_string())),
    };
    Ok(diagram::parse(text).expect("built-in fixture parses"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueSpec {
    pub w1: String,
    pub w2: String,
    /// Face of the base diagram whose boundary holds both `w1` and `w2`.
    pub face: usize,
    pub n: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlueError {
    #[error("base diagram is invalid: {0}")]
    InvalidBase(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("w1 and w2 must be distinct")]
    SameVertex,
    #[error("`{0}` is not a true vertex")]
    NotTrueVertex(String),
    #[error("face {0} does not exist")]
    UnknownFace(usize),
    #[error("`{0}` is not on the boundary of face {1}")]
    NotOnFace(String, usize),
    #[error("`{0}` has degree {1}, need at least 2")]
    DegreeTooSmall(String, usize),
    #[error("need at least one copy")]
    NoCopies,
}

/// Glues `n` copies of `base` around the face `spec.face`, identifying all
/// copies of `w1` and all copies of `w2`.
///
/// Non-shared vertices are renamed `<id>__<copy>`. Around `w1` the copies
/// appear clockwise in order `1..n`; around `w2` they appear in order `n..1`,
/// which is what planarity forces once `w1` is fixed. If the base contains
/// the edge `w1w2` only copy 1 keeps it; a crossed `w1w2` edge is removed
/// from the other copies together with its crossing point.
pub fn glue(base: &Diagram, spec: &GlueSpec) -> Result<Diagram, GlueError> {
    let report = diagram::validate(base);
    if !report.ok() {
        return Err(GlueError::InvalidBase(report.to_string().trim_end().replace('\n', "; ")));
    }
    let resolve = |id: &str| base.index_of(id).ok_or_else(|| GlueError::UnknownVertex(id.to_string()));
    let (w1, w2) = (resolve(&spec.w1)?, resolve(&spec.w2)?);
    if w1 == w2 {
        return Err(GlueError::SameVertex);
    }
    for w in [w1, w2] {
        if base.kind(w) != VertexKind::True {
            return Err(GlueError::NotTrueVertex(base.id(w).to_string()));
        }
    }
    if spec.n == 0 {
        return Err(GlueError::NoCopies);
    }
    if base.degree(w1) < 2 {
        return Err(GlueError::DegreeTooSmall(spec.w1.clone(), base.degree(w1)));
    }
    let faces = embedding::trace_faces(base);
    if spec.face >= faces.len() {
        return Err(GlueError::UnknownFace(spec.face));
    }
    let boundary = &faces.face(spec.face).boundary;
    let m = boundary.len();
    let i1 = boundary
        .iter()
        .position(|dart| dart.tail == w1)
        .ok_or_else(|| GlueError::NotOnFace(spec.w1.clone(), spec.face))?;
    let i2 = (1..m)
        .map(|k| (i1 + k) % m)
        .find(|&p| boundary[p].tail == w2)
        .ok_or_else(|| GlueError::NotOnFace(spec.w2.clone(), spec.face))?;
    let cut1 = boundary[i1].index;
    let cut2 = boundary[i2].index;

    let direct_edge = base.position(w1, w2).is_some();
    let crossed_edge = base
        .rotation(w1)
        .iter()
        .copied()
        .find(|&c| base.is_crossing(c) && base.through(w1, c) == Some(w2));
    let dropped = |copy: usize, v: usize| copy >= 2 && Some(v) == crossed_edge;

    let n = spec.n;
    let mut out = Diagram::new();
    let mut slot = vec![vec![usize::MAX; base.len()]; n + 1];
    for copy in 1..=n {
        for v in 0..base.len() {
            if v == w1 || v == w2 {
                if copy == 1 {
                    let idx = out.add_vertex(base.id(v), VertexKind::True).expect("fresh id");
                    for s in slot.iter_mut() {
                        s[v] = idx;
                    }
                }
                continue;
            }
            if dropped(copy, v) {
                continue;
            }
            let id = format!("{}__{}", base.id(v), copy);
            slot[copy][v] = out
                .add_vertex(&id, base.kind(v))
                .map_err(|_| GlueError::InvalidBase(format!("renamed id `{id}` collides")))?;
        }
    }

    for copy in 1..=n {
        for v in 0..base.len() {
            if v == w1 || v == w2 || dropped(copy, v) {
                continue;
            }
            let rot = base
                .rotation(v)
                .iter()
                .map(|&u| {
                    if dropped(copy, u) {
                        // v is an endpoint of the edge that crossed w1w2; it now runs straight
                        slot[copy][base.through(v, u).expect("crossing of degree 4")]
                    } else {
                        slot[copy][u]
                    }
                })
                .collect();
            out.set_rotation(slot[copy][v], rot);
        }
    }

    let merged = |w: usize, other: usize, cut: usize, order: Vec<usize>| -> Vec<usize> {
        let rot = base.rotation(w);
        let deg = rot.len();
        let mut seq = Vec::new();
        for copy in order {
            for k in 0..deg {
                let u = rot[(cut + k) % deg];
                let duplicate = copy >= 2 && ((direct_edge && u == other) || Some(u) == crossed_edge);
                if !duplicate {
                    seq.push(slot[copy][u]);
                }
            }
        }
        seq
    };
    out.set_rotation(slot[1][w1], merged(w1, w2, cut1, (1..=n).collect()));
    out.set_rotation(slot[1][w2], merged(w2, w1, cut2, (1..=n).rev().collect()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{smooth, validate};
    use crate::embedding::trace_faces;

    fn spec(w1: &str, w2: &str, face: usize, n: usize) -> GlueSpec {
        GlueSpec { w1: w1.into(), w2: w2.into(), face, n }
    }

    fn face_with(d: &Diagram, a: &str, b: &str) -> usize {
        let (a, b) = (d.index_of(a).unwrap(), d.index_of(b).unwrap());
        let fs = trace_faces(d);
        fs.faces()
            .iter()
            .find(|f| f.vertices().any(|v| v == a) && f.vertices().any(|v| v == b))
            .unwrap()
            .id
    }

    #[test]
    fn fixtures_are_valid() {
        for name in FIXTURE_NAMES {
            let d = fixture(name).unwrap();
            assert!(validate(&d).ok(), "{name}: {}", validate(&d));
        }
        let k5 = fixture("k5").unwrap();
        assert_eq!((k5.len() - k5.crossing_count(), k5.crossing_count()), (5, 1));
        let g = smooth(&k5).unwrap();
        assert_eq!((g.order(), g.size()), (5, 10));
        assert_eq!(fixture("k7"), Err(FixtureError::UnknownFixture("k7".into())));
    }

    #[test]
    fn glued_tetrahedra_are_valid() {
        let base = fixture("tetrahedron").unwrap();
        let face = face_with(&base, "a", "b");
        for n in 1..=5 {
            let g = glue(&base, &spec("a", "b", face, n)).unwrap();
            assert!(validate(&g).ok(), "n={n}: {}", validate(&g));
            assert_eq!(g.len(), n * 2 + 2);
            let a = g.index_of("a").unwrap();
            // edge ab kept once
            assert_eq!(g.degree(a), 3 * n - (n - 1));
        }
    }

    #[test]
    fn glue_removes_crossed_shared_edge() {
        // K4 drawn as a square with crossing diagonals; the outer face is a 4-face
        let base = diagram::parse(
            "onepl 1\nvertex a true\nvertex b true\nvertex c true\nvertex d true\nvertex x crossing\n\
             rot a b x d\nrot b c x a\nrot c d x b\nrot d a x c\nrot x a b c d\n",
        )
        .unwrap();
        assert!(validate(&base).ok());
        let fs = trace_faces(&base);
        let outer = fs.faces().iter().find(|f| f.degree() == 4).unwrap().id;
        let g = glue(&base, &spec("a", "c", outer, 3)).unwrap();
        assert!(validate(&g).ok(), "{}", validate(&g));
        assert_eq!(g.crossing_count(), 1);
        let sg = smooth(&g).unwrap();
        // copy 1 keeps all 6 edges, copies 2 and 3 lose a-c
        assert_eq!(sg.size(), 6 + 5 + 5);
        assert!(sg.has_edge(sg.index_of("b__2").unwrap(), sg.index_of("d__2").unwrap()));
    }

    #[test]
    fn glue_errors() {
        let base = fixture("k6").unwrap();
        let face = face_with(&base, "v1", "v4");
        assert_eq!(glue(&base, &spec("v1", "v1", face, 2)), Err(GlueError::SameVertex));
        assert_eq!(glue(&base, &spec("v1", "x1", face, 2)), Err(GlueError::NotTrueVertex("x1".into())));
        assert_eq!(glue(&base, &spec("v1", "v4", 99, 2)), Err(GlueError::UnknownFace(99)));
        assert_eq!(glue(&base, &spec("v1", "v4", face, 0)), Err(GlueError::NoCopies));
        assert_eq!(glue(&base, &spec("v1", "zz", face, 2)), Err(GlueError::UnknownVertex("zz".into())));
        let other = face_with(&base, "v2", "v3");
        assert!(matches!(glue(&base, &spec("v1", "v4", other, 2)), Err(GlueError::NotOnFace(..))));

        let path = diagram::parse("onepl 1\nvertex a true\nvertex b true\nvertex c true\nrot a b\nrot b a c\nrot c b\n").unwrap();
        assert_eq!(glue(&path, &spec("a", "b", 0, 2)), Err(GlueError::DegreeTooSmall("a".into(), 1)));
    }
}
