//! 1-planar diagrams stored as the rotation system of their associated plane
//! graph, where every crossing point is an explicit degree-4 vertex.
//!
//! Rotations list neighbors in clockwise order. At a crossing vertex the
//! entries at positions 0/2 and 1/3 are the two halves of the same original
//! edge.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::embedding;

pub const FORMAT_MAGIC: &str = "onepl 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    True,
    Crossing,
}

impl VertexKind {
    fn token(self) -> &'static str {
        match self {
            VertexKind::True => "true",
            VertexKind::Crossing => "crossing",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub kind: VertexKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex id `{0}` (expected letters, digits or underscore)")]
    InvalidId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("diagram has no vertices")]
    EmptyDiagram,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate vertex id `{id}`")]
    DuplicateVertex { line: usize, id: String },
    #[error("line {line}: unknown vertex `{id}`")]
    UnknownVertex { line: usize, id: String },
    #[error("line {line}: `{neighbor}` listed twice in rotation of `{id}`")]
    DuplicateNeighbor { line: usize, id: String, neighbor: String },
    #[error("line {line}: rotation of `{id}` contains itself")]
    SelfLoop { line: usize, id: String },
    #[error("line {line}: second rotation line for `{id}`")]
    DuplicateRotation { line: usize, id: String },
    #[error("diagram has no vertices")]
    EmptyDiagram,
}

/// Rotation system of the associated plane graph of a 1-diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    vertices: Vec<Vertex>,
    rotation: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_valid_id(id: &str) -> bool {
    !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: &str, kind: VertexKind) -> Result<usize, DiagramError> {
        if !is_valid_id(id) {
            return Err(DiagramError::InvalidId(id.to_string()));
        }
        if self.index.contains_key(id) {
            return Err(DiagramError::DuplicateVertex(id.to_string()));
        }
        let v = self.vertices.len();
        self.vertices.push(Vertex { id: id.to_string(), kind });
        self.rotation.push(Vec::new());
        self.index.insert(id.to_string(), v);
        Ok(v)
    }

    /// Replaces the clockwise rotation of `v`. No symmetry checks happen here.
    pub fn set_rotation(&mut self, v: usize, neighbors: Vec<usize>) {
        assert!(neighbors.iter().all(|&u| u < self.vertices.len()));
        self.rotation[v] = neighbors;
    }

    pub fn set_rotation_by_id(&mut self, id: &str, neighbors: &[&str]) -> Result<(), DiagramError> {
        let v = self.require(id)?;
        let rot = neighbors
            .iter()
            .map(|n| self.require(n))
            .collect::<Result<Vec<_>, _>>()?;
        self.rotation[v] = rot;
        Ok(())
    }

    fn require(&self, id: &str) -> Result<usize, DiagramError> {
        self.index_of(id)
            .ok_or_else(|| DiagramError::UnknownVertex(id.to_string()))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.vertices[v].kind
    }

    pub fn is_crossing(&self, v: usize) -> bool {
        self.kind(v) == VertexKind::Crossing
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Degree in the associated graph, which equals the degree in the
    /// original graph for true vertices.
    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Number of edges in the associated graph (half the rotation total).
    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn crossing_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Crossing)
            .count()
    }

    pub fn true_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&v| !self.is_crossing(v))
    }

    /// Position of `u` in the rotation of `v`.
    pub fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&w| w == u)
    }

    /// The original-graph neighbor of `v` whose edge passes through crossing
    /// `c`, i.e. the entry opposite to `v` in the rotation of `c`.
    pub fn through(&self, v: usize, c: usize) -> Option<usize> {
        let rot = &self.rotation[c];
        if rot.len() != 4 {
            return None;
        }
        self.position(c, v).map(|p| rot[(p + 2) % 4])
    }

    /// Neighbors of a true vertex in the original graph, in rotation order,
    /// with crossings replaced by the far endpoint of the crossed edge.
    pub fn original_neighbors(&self, v: usize) -> Vec<usize> {
        self.rotation[v]
            .iter()
            .filter_map(|&u| if self.is_crossing(u) { self.through(v, u) } else { Some(u) })
            .collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{FORMAT_MAGIC}")?;
        writeln!(f, "# rotations are clockwise")?;
        for v in &self.vertices {
            writeln!(f, "vertex {} {}", v.id, v.kind.token())?;
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            write!(f, "rot {}", self.id(v))?;
            for &u in rot {
                write!(f, " {}", self.id(u))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn parse(text: &str) -> Result<Diagram, ParseError> {
    let mut d = Diagram::new();
    let mut seen_magic = false;
    let mut has_rot = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let syntax = |message: String| ParseError::Syntax { line, message };
        if !seen_magic {
            if tokens.join(" ") != FORMAT_MAGIC {
                return Err(syntax(format!("expected `{FORMAT_MAGIC}` header")));
            }
            seen_magic = true;
            continue;
        }
        match tokens[0] {
            "vertex" => {
                let [_, id, kind] = tokens[..] else {
                    return Err(syntax("expected `vertex <id> true|crossing`".into()));
                };
                let kind = match kind {
                    "true" => VertexKind::True,
                    "crossing" => VertexKind::Crossing,
                    other => return Err(syntax(format!("unknown vertex kind `{other}`"))),
                };
                match d.add_vertex(id, kind) {
                    Ok(_) => has_rot.push(false),
                    Err(DiagramError::DuplicateVertex(id)) => {
                        return Err(ParseError::DuplicateVertex { line, id })
                    }
                    Err(_) => return Err(syntax(format!("invalid vertex id `{id}`"))),
                }
            }
            "rot" => {
                if tokens.len() < 2 {
                    return Err(syntax("expected `rot <id> <neighbors...>`".into()));
                }
                let lookup = |id: &str| {
                    d.index_of(id).ok_or_else(|| ParseError::UnknownVertex {
                        line,
                        id: id.to_string(),
                    })
                };
                let v = lookup(tokens[1])?;
                if has_rot[v] {
                    return Err(ParseError::DuplicateRotation { line, id: tokens[1].into() });
                }
                let mut rot = Vec::with_capacity(tokens.len() - 2);
                let mut seen = BTreeSet::new();
                for &tok in &tokens[2..] {
                    let u = lookup(tok)?;
                    if u == v {
                        return Err(ParseError::SelfLoop { line, id: tokens[1].into() });
                    }
                    if !seen.insert(u) {
                        return Err(ParseError::DuplicateNeighbor {
                            line,
                            id: tokens[1].into(),
                            neighbor: tok.into(),
                        });
                    }
                    rot.push(u);
                }
                d.set_rotation(v, rot);
                has_rot[v] = true;
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }
    if !seen_magic {
        return Err(ParseError::Syntax { line: 1, message: format!("expected `{FORMAT_MAGIC}` header") });
    }
    if d.is_empty() {
        return Err(ParseError::EmptyDiagram);
    }
    Ok(d)
}

/// Canonical text form; `parse(&serialize(d)?)` reproduces `d` exactly.
pub fn serialize(d: &Diagram) -> Result<String, DiagramError> {
    if d.is_empty() {
        return Err(DiagramError::EmptyDiagram);
    }
    Ok(d.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationCode {
    EmptyDiagram,
    SelfLoop,
    DuplicateNeighbor,
    Asymmetric,
    CrossingDegree,
    AdjacentCrossings,
    Disconnected,
    SmoothingCreatesLoop,
    SmoothingCreatesMultiEdge,
    EulerMismatch,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub elements: Vec<String>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    fn push(&mut self, code: ViolationCode, elements: Vec<String>, message: String) {
        self.violations.push(Violation { code, elements, message });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            let elements = if v.elements.is_empty() { "-".to_string() } else { v.elements.join(",") };
            writeln!(f, "violation {} {} {}", v.code, elements, v.message)?;
        }
        Ok(())
    }
}

pub fn validate(d: &Diagram) -> ValidationReport {
    let mut report = ValidationReport::default();
    if d.is_empty() {
        report.push(ViolationCode::EmptyDiagram, vec![], "diagram has no vertices".into());
        return report;
    }

    let mut well_formed = true;
    for v in 0..d.len() {
        let mut seen = BTreeSet::new();
        for &u in d.rotation(v) {
            if u == v {
                well_formed = false;
                report.push(ViolationCode::SelfLoop, vec![d.id(v).into()], "rotation contains its own vertex".into());
            } else if !seen.insert(u) {
                well_formed = false;
                report.push(
                    ViolationCode::DuplicateNeighbor,
                    vec![d.id(v).into(), d.id(u).into()],
                    "neighbor listed more than once".into(),
                );
            }
        }
    }
    for v in 0..d.len() {
        for &u in d.rotation(v) {
            if u != v && d.position(u, v).is_none() {
                well_formed = false;
                report.push(
                    ViolationCode::Asymmetric,
                    vec![d.id(v).into(), d.id(u).into()],
                    format!("`{}` lists `{}` but not conversely", d.id(v), d.id(u)),
                );
            }
        }
    }

    let mut crossings_ok = true;
    for v in 0..d.len() {
        if !d.is_crossing(v) {
            continue;
        }
        if d.degree(v) != 4 {
            crossings_ok = false;
            report.push(
                ViolationCode::CrossingDegree,
                vec![d.id(v).into()],
                format!("crossing vertex has rotation length {}", d.degree(v)),
            );
        }
        for &u in d.rotation(v) {
            if d.is_crossing(u) && v < u {
                crossings_ok = false;
                report.push(
                    ViolationCode::AdjacentCrossings,
                    vec![d.id(v).into(), d.id(u).into()],
                    "an edge is crossed more than once".into(),
                );
            }
        }
    }

    if !is_connected(d) {
        report.push(ViolationCode::Disconnected, vec![], "associated graph is not connected".into());
    }

    if well_formed && crossings_ok {
        match smooth(d) {
            Ok(_) => {}
            Err(SmoothError::Loop(id)) => report.push(
                ViolationCode::SmoothingCreatesLoop,
                vec![id],
                "a crossed edge would become a loop".into(),
            ),
            Err(SmoothError::MultiEdge(a, b)) => report.push(
                ViolationCode::SmoothingCreatesMultiEdge,
                vec![a, b],
                "smoothing yields a parallel edge".into(),
            ),
            Err(SmoothError::Malformed(_)) => unreachable!("checked above"),
        }
    }

    if well_formed {
        let faces = embedding::trace_faces(d);
        if !embedding::euler_check(d, &faces) {
            let chi = d.len() as i64 - d.edge_count() as i64 + faces.len() as i64;
            report.push(
                ViolationCode::EulerMismatch,
                vec![],
                format!("V - E + F = {chi}, expected 2"),
            );
        }
    }
    report
}

fn is_connected(d: &Diagram) -> bool {
    // asymmetric rotations still count as adjacency in both directions
    let mut adj = vec![Vec::new(); d.len()];
    for (v, rot) in d.rotation.iter().enumerate() {
        for &u in rot {
            adj[v].push(u);
            adj[u].push(v);
        }
    }
    let mut seen = vec![false; d.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    count == d.len()
}

/// Finite simple undirected graph over named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    names: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at `{0}`")]
    Loop(String),
    #[error("parallel edge `{0}`-`{1}`")]
    MultiEdge(String, String),
    #[error("vertex index {0} out of range")]
    OutOfRange(usize),
}

impl SimpleGraph {
    pub fn new(names: Vec<String>) -> Self {
        let adj = vec![BTreeSet::new(); names.len()];
        Self { names, adj }
    }

    /// Graph on vertices `0..n` named by their index.
    pub fn with_order(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::with_order(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let n = self.names.len();
        if a >= n || b >= n {
            return Err(GraphError::OutOfRange(a.max(b)));
        }
        if a == b {
            return Err(GraphError::Loop(self.names[a].clone()));
        }
        if !self.adj[a].insert(b) {
            return Err(GraphError::MultiEdge(self.names[a].clone(), self.names[b].clone()));
        }
        self.adj[b].insert(a);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.range(a + 1..).map(move |&b| (a, b)))
            .collect()
    }

    /// Connected components of the graph with `removed` deleted.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SmoothError {
    #[error("smoothing creates a parallel edge `{0}`-`{1}`")]
    MultiEdge(String, String),
    #[error("smoothing creates a loop at `{0}`")]
    Loop(String),
    #[error("cannot smooth: {0}")]
    Malformed(String),
}

/// Recovers the original graph by suppressing every crossing vertex.
///
/// Vertices of the result are the true vertices in declaration order.
pub fn smooth(d: &Diagram) -> Result<SimpleGraph, SmoothError> {
    let true_ids: Vec<usize> = d.true_vertices().collect();
    let mut slot = vec![usize::MAX; d.len()];
    for (i, &v) in true_ids.iter().enumerate() {
        slot[v] = i;
    }
    let mut g = SimpleGraph::new(true_ids.iter().map(|&v| d.id(v).to_string()).collect());

    let add = |g: &mut SimpleGraph, a: usize, b: usize| -> Result<(), SmoothError> {
        match g.add_edge(slot[a], slot[b]) {
            Ok(()) => Ok(()),
            Err(GraphError::Loop(id)) => Err(SmoothError::Loop(id)),
            Err(GraphError::MultiEdge(x, y)) => Err(SmoothError::MultiEdge(x, y)),
            Err(GraphError::OutOfRange(_)) => unreachable!(),
        }
    };

    for &v in &true_ids {
        for &u in d.rotation(v) {
            if !d.is_crossing(u) && v < u {
                add(&mut g, v, u)?;
            }
        }
    }
    for c in 0..d.len() {
        if !d.is_crossing(c) {
            continue;
        }
        let rot = d.rotation(c);
        if rot.len() != 4 {
            return Err(SmoothError::Malformed(format!("crossing `{}` has rotation length {}", d.id(c), rot.len())));
        }
        if let Some(&u) = rot.iter().find(|&&u| d.is_crossing(u)) {
            return Err(SmoothError::Malformed(format!("crossings `{}` and `{}` are adjacent", d.id(c), d.id(u))));
        }
        for (a, b) in [(rot[0], rot[2]), (rot[1], rot[3])] {
            add(&mut g, a, b)?;
        }
    }
    Ok(g)
}

/// Degree of every true vertex (its rotation length).
pub fn true_degrees(d: &Diagram) -> BTreeMap<String, usize> {
    d.true_vertices().map(|v| (d.id(v).to_string(), d.degree(v))).collect()
}

pub fn min_true_degree(d: &Diagram) -> Option<usize> {
    d.true_vertices().map(|v| d.degree(v)).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixture;

    const TETRA: &str = "onepl 1\nvertex a true\nvertex b true\nvertex c true\nvertex d true\n\
                         rot a b c d\nrot b a d c\nrot c a b d\nrot d a c b\n";

    #[test]
    fn parses_tetrahedron() {
        let d = parse(TETRA).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.vertices().iter().all(|v| v.kind == VertexKind::True));
        assert!((0..4).all(|v| d.degree(v) == 3));
        assert!(validate(&d).ok());
    }

    #[test]
    fn parse_keeps_short_crossing_for_validation() {
        let text = "onepl 1\nvertex a true\nvertex b true\nvertex c crossing\nvertex e true\n\
                    rot a c\nrot b c\nrot c a b e\nrot e c\n";
        let d = parse(text).unwrap();
        let mut short = d.clone();
        short.set_rotation(2, vec![0, 1, 3]);
        short.set_rotation(3, vec![]);
        let report = validate(&short);
        assert!(report.has(ViolationCode::CrossingDegree));
        assert!(!report.ok());
    }

    #[test]
    fn parse_errors() {
        let dup = "onepl 1\nvertex a true\nvertex b true\nvertex c true\nrot a b b c\n";
        assert!(matches!(parse(dup), Err(ParseError::DuplicateNeighbor { line: 5, .. })));

        let unknown = "onepl 1\nvertex a true\nrot a z\n";
        assert!(matches!(parse(unknown), Err(ParseError::UnknownVertex { line: 3, .. })));

        let twice = "onepl 1\nvertex a true\nvertex a crossing\n";
        assert!(matches!(parse(twice), Err(ParseError::DuplicateVertex { line: 3, .. })));

        assert!(matches!(parse("onepl 2\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse("# only a comment\n\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("onepl 1\nvertex a maybe\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse("onepl 1\nvertex a true\nrot a a\n"), Err(ParseError::SelfLoop { .. })));
        assert_eq!(parse("onepl 1\n"), Err(ParseError::EmptyDiagram));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header comment\n\nonepl 1   # magic\nvertex a true\nvertex b true # x\n\nrot a b\nrot b a\n";
        let d = parse(text).unwrap();
        assert_eq!(d.rotation(0), &[1]);
    }

    #[test]
    fn serialize_round_trips() {
        for name in ["tetrahedron", "c4", "k5", "k6"] {
            let d = fixture(name).unwrap();
            let text = serialize(&d).unwrap();
            assert_eq!(parse(&text).unwrap(), d);
            assert_eq!(serialize(&parse(&text).unwrap()).unwrap(), text);
        }
        assert_eq!(serialize(&Diagram::new()), Err(DiagramError::EmptyDiagram));
    }

    #[test]
    fn k6_validates_and_smooths() {
        let d = fixture("k6").unwrap();
        assert!(validate(&d).ok(), "{}", validate(&d));
        assert_eq!(d.edge_count(), 21);
        let g = smooth(&d).unwrap();
        assert_eq!((g.order(), g.size()), (6, 15));
        assert!(true_degrees(&d).values().all(|&k| k == 5));
    }

    #[test]
    fn asymmetric_rotation_is_reported() {
        let mut d = fixture("k6").unwrap();
        let v = d.index_of("v1").unwrap();
        let mut rot = d.rotation(v).to_vec();
        rot.pop();
        d.set_rotation(v, rot);
        let report = validate(&d);
        assert!(report.has(ViolationCode::Asymmetric));
    }

    #[test]
    fn disconnected_triangles() {
        let text = "onepl 1\nvertex a true\nvertex b true\nvertex c true\n\
                    vertex d true\nvertex e true\nvertex f true\n\
                    rot a b c\nrot b c a\nrot c a b\nrot d e f\nrot e f d\nrot f d e\n";
        let report = validate(&parse(text).unwrap());
        assert!(report.has(ViolationCode::Disconnected));
        assert!(report.has(ViolationCode::EulerMismatch));
    }

    #[test]
    fn adjacent_crossings_are_reported() {
        // a-x-y-b chain where x and y are crossings
        let mut d = Diagram::new();
        for (id, kind) in [("x", VertexKind::Crossing), ("y", VertexKind::Crossing)] {
            d.add_vertex(id, kind).unwrap();
        }
        for id in ["a", "b", "c", "e", "f", "g"] {
            d.add_vertex(id, VertexKind::True).unwrap();
        }
        d.set_rotation_by_id("x", &["a", "y", "c", "e"]).unwrap();
        d.set_rotation_by_id("y", &["x", "b", "f", "g"]).unwrap();
        for (v, c) in [("a", "x"), ("c", "x"), ("e", "x"), ("b", "y"), ("f", "y"), ("g", "y")] {
            d.set_rotation_by_id(v, &[c]).unwrap();
        }
        let report = validate(&d);
        assert!(report.has(ViolationCode::AdjacentCrossings));
        assert!(matches!(smooth(&d), Err(SmoothError::Malformed(_))));
    }

    #[test]
    fn crossing_of_adjacent_edges_makes_multi_edge() {
        // edges a-c and b-c would both be routed through x, and a-c is
        // also drawn directly: smoothing must reject the parallel edge
        let mut d = Diagram::new();
        for id in ["a", "b", "c", "e"] {
            d.add_vertex(id, VertexKind::True).unwrap();
        }
        d.add_vertex("x", VertexKind::Crossing).unwrap();
        d.set_rotation_by_id("x", &["a", "b", "c", "e"]).unwrap();
        d.set_rotation_by_id("a", &["x", "c"]).unwrap();
        d.set_rotation_by_id("c", &["a", "x"]).unwrap();
        d.set_rotation_by_id("b", &["x"]).unwrap();
        d.set_rotation_by_id("e", &["x"]).unwrap();
        assert!(matches!(smooth(&d), Err(SmoothError::MultiEdge(..))));
        assert!(validate(&d).has(ViolationCode::SmoothingCreatesMultiEdge));
    }

    #[test]
    fn through_uses_opposite_position() {
        let d = fixture("k5").unwrap();
        let x = d.index_of("x").unwrap();
        let rot = d.rotation(x).to_vec();
        assert_eq!(d.through(rot[0], x), Some(rot[2]));
        assert_eq!(d.through(rot[3], x), Some(rot[1]));
    }
}
