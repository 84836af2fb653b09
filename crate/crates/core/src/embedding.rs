//! Face tracing on the rotation system of the associated plane graph.
//!
//! From dart `u -> v` the face continues with the dart leaving `v` toward the
//! neighbor immediately after `u` in the clockwise rotation of `v`. Faces are
//! numbered by their smallest dart, `(tail, index)` in declaration order, and
//! each boundary starts at that dart.

use std::fmt;

use thiserror::Error;

use crate::diagram::Diagram;

/// A directed edge side: the `index`-th rotation entry leaving `tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: usize,
    pub index: usize,
}

impl Dart {
    pub fn head(self, d: &Diagram) -> usize {
        d.rotation(self.tail)[self.index]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceClass {
    TrueTriangle,
    FalseTriangle,
    Big,
}

impl FaceClass {
    pub fn token(self) -> &'static str {
        match self {
            FaceClass::TrueTriangle => "true3",
            FaceClass::FalseTriangle => "false3",
            FaceClass::Big => "big",
        }
    }
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Boundary vertices in traversal order (with repetitions).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|dart| dart.tail)
    }

    /// The two boundary neighbors of the corner at position `pos`.
    pub fn corners(&self, pos: usize) -> (usize, usize) {
        let m = self.boundary.len();
        (self.boundary[(pos + m - 1) % m].tail, self.boundary[(pos + 1) % m].tail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Face>,
    offsets: Vec<usize>,
    dart_face: Vec<usize>,
    dart_pos: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` is incident with a face of degree other than 3")]
    PreconditionNotTriangulated(String),
}

impl FaceSet {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, dart: Dart) -> usize {
        self.dart_face[self.offsets[dart.tail] + dart.index]
    }

    /// Position of `dart` within the boundary of its face.
    pub fn position_of(&self, dart: Dart) -> usize {
        self.dart_pos[self.offsets[dart.tail] + dart.index]
    }

    /// `(face, boundary position)` of every angle at `v`, in rotation order.
    pub fn angles(&self, v: usize) -> Vec<(usize, usize)> {
        (self.offsets[v]..self.offsets[v + 1])
            .map(|slot| (self.dart_face[slot], self.dart_pos[slot]))
            .collect()
    }

    /// One face id per dart leaving `v`, in rotation order. The face of dart
    /// `i` holds the angle between rotation entries `i - 1` and `i`.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (self.offsets[v]..self.offsets[v + 1])
            .map(|slot| self.dart_face[slot])
            .collect()
    }
}

/// Traces all faces. Panics if the rotation system is not symmetric; run
/// `diagram::validate` first on untrusted input.
pub fn trace_faces(d: &Diagram) -> FaceSet {
    let n = d.len();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for v in 0..n {
        offsets.push(offsets[v] + d.degree(v));
    }
    let total = offsets[n];

    // rev[slot of u->v] = position of u in rotation(v)
    let mut rev = vec![0; total];
    for u in 0..n {
        for (i, &v) in d.rotation(u).iter().enumerate() {
            rev[offsets[u] + i] = d
                .position(v, u)
                .unwrap_or_else(|| panic!("rotation of `{}` lacks `{}`", d.id(v), d.id(u)));
        }
    }

    let unassigned = usize::MAX;
    let mut dart_face = vec![unassigned; total];
    let mut dart_pos = vec![0; total];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..d.degree(u) {
            if dart_face[offsets[u] + i] != unassigned {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut dart = Dart { tail: u, index: i };
            while dart_face[offsets[dart.tail] + dart.index] == unassigned {
                dart_face[offsets[dart.tail] + dart.index] = id;
                dart_pos[offsets[dart.tail] + dart.index] = boundary.len();
                boundary.push(dart);
                let v = dart.head(d);
                let p = rev[offsets[dart.tail] + dart.index];
                dart = Dart { tail: v, index: (p + 1) % d.degree(v) };
            }
            faces.push(Face { id, boundary });
        }
    }
    FaceSet { faces, offsets, dart_face, dart_pos }
}

/// `|V| - |E| + |F| == 2`. An edgeless diagram has the single empty face.
pub fn euler_check(d: &Diagram, fs: &FaceSet) -> bool {
    let edges = d.edge_count();
    let faces = if edges == 0 { 1 } else { fs.len() };
    d.len() as i64 - edges as i64 + faces as i64 == 2
}

pub fn classify(d: &Diagram, f: &Face) -> FaceClass {
    if f.degree() != 3 {
        return FaceClass::Big;
    }
    if f.vertices().any(|v| d.is_crossing(v)) {
        FaceClass::FalseTriangle
    } else {
        FaceClass::TrueTriangle
    }
}

/// Classes of every face, indexed by face id.
pub fn classify_all(d: &Diagram, fs: &FaceSet) -> Vec<FaceClass> {
    fs.faces().iter().map(|f| classify(d, f)).collect()
}

pub fn incident_faces(d: &Diagram, fs: &FaceSet, id: &str) -> Result<Vec<usize>, EmbeddingError> {
    let v = d
        .index_of(id)
        .ok_or_else(|| EmbeddingError::UnknownVertex(id.to_string()))?;
    Ok(fs.incident(v))
}

pub fn false_triangle_count(d: &Diagram, fs: &FaceSet, v: usize) -> usize {
    fs.incident(v)
        .into_iter()
        .filter(|&f| classify(d, fs.face(f)) == FaceClass::FalseTriangle)
        .count()
}

/// Number of false triangles at a true vertex whose incident faces are all
/// triangles. The count is always even.
pub fn false_triangle_parity(d: &Diagram, fs: &FaceSet, id: &str) -> Result<usize, EmbeddingError> {
    let faces = incident_faces(d, fs, id)?;
    if faces.iter().any(|&f| fs.face(f).degree() != 3) {
        return Err(EmbeddingError::PreconditionNotTriangulated(id.to_string()));
    }
    let v = d.index_of(id).expect("resolved above");
    let count = false_triangle_count(d, fs, v);
    debug_assert!(count.is_multiple_of(2), "odd false-triangle count at `{id}`");
    Ok(count)
}

/// One line per face, as printed by the `faces` subcommand.
pub fn face_report(d: &Diagram, fs: &FaceSet) -> String {
    let mut out = String::new();
    for f in fs.faces() {
        let boundary: Vec<&str> = f.vertices().map(|v| d.id(v)).collect();
        out.push_str(&format!(
            "face {} deg={} class={} boundary={}\n",
            f.id,
            f.degree(),
            classify(d, f),
            boundary.join(",")
        ));
    }
    out
}
