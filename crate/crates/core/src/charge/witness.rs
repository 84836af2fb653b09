//! Local structure around a negatively charged element after discharging.

use num_traits::Signed;

use super::{format_rational, ChargeError, ChargeState, Element, Rational, RuleSet};
use crate::diagram::Diagram;
use crate::embedding::{classify, FaceClass, FaceSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub name: &'static str,
    pub pass: bool,
}

/// Degrees around a rule-set-C witness `w0`: `w1` is a 7-corner of the true
/// triangle at `w0`, `w2` its other corner, and `pair` two further
/// neighbors of `w0` in the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub w1: usize,
    pub w2: usize,
    pub pair: (usize, usize),
    pub cases: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    /// Rule set A: the four faces at a crossing vertex and, when they are all
    /// triangles, its four neighbors (which then span a K4 of the graph).
    CrossingK4 { faces: Vec<usize>, k4: Option<[usize; 4]> },
    /// Rule sets B and C: the corners of the true triangle at a 7-vertex.
    /// For rule set C, `positional` uses the two remaining true neighbors in
    /// the rotation, and `consistent` lists every neighbor pair that fits
    /// one of the three cases.
    Star {
        true_triangle: Option<(usize, usize)>,
        positional: Option<CaseReport>,
        consistent: Vec<CaseReport>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub rules: RuleSet,
    pub center: usize,
    pub final_charge: Rational,
    pub incident_face_classes: Vec<FaceClass>,
    /// Graph neighbors of the center with their degrees, in rotation order.
    pub neighbor_degrees: Vec<(usize, usize)>,
    pub extraction: Extraction,
    pub verdicts: Vec<Verdict>,
}

impl Witness {
    pub fn verified(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn describe(&self, d: &Diagram) -> String {
        let classes: Vec<&str> = self.incident_face_classes.iter().map(|c| c.token()).collect();
        let nbrs: Vec<String> = self
            .neighbor_degrees
            .iter()
            .map(|&(v, k)| format!("{}:{}", d.id(v), k))
            .collect();
        let mut out = format!(
            "witness {} v:{} charge={} faces={} neighbors={}",
            self.rules,
            d.id(self.center),
            format_rational(&self.final_charge),
            classes.join(","),
            nbrs.join(",")
        );
        match &self.extraction {
            Extraction::CrossingK4 { k4: Some(k4), .. } => {
                let ids: Vec<&str> = k4.iter().map(|&v| d.id(v)).collect();
                out.push_str(&format!(" k4={}", ids.join(",")));
            }
            Extraction::CrossingK4 { k4: None, .. } => {}
            Extraction::Star { true_triangle, positional, .. } => {
                if let Some((a, b)) = true_triangle {
                    out.push_str(&format!(" true3={},{}", d.id(*a), d.id(*b)));
                }
                if let Some(r) = positional {
                    let cases: Vec<String> = r.cases.iter().map(u8::to_string).collect();
                    out.push_str(&format!(
                        " w2={} w4={} w6={} cases={}",
                        d.id(r.w2),
                        d.id(r.pair.0),
                        d.id(r.pair.1),
                        if cases.is_empty() { "-".to_string() } else { cases.join(",") }
                    ));
                }
            }
        }
        for v in &self.verdicts {
            out.push_str(&format!(" {}={}", v.name, if v.pass { "pass" } else { "fail" }));
        }
        out
    }
}

/// Which of the three degree cases around a 7-vertex with a negative final
/// charge under rule set C the degrees `(deg w2, deg w4, deg w6)` fit.
pub fn seven_star_cases(w2: usize, w4: usize, w6: usize) -> Vec<u8> {
    let small = |k: usize| k == 7 || k == 8;
    let (lo, hi) = (w4.min(w6), w4.max(w6));
    let mut cases = Vec::new();
    if small(w4) && small(w6) && w2 <= 11 {
        cases.push(1);
    }
    if small(w4) != small(w6) {
        let ok = match w2 {
            7 => hi <= 11,
            8 => hi <= 10,
            9 => hi == 9,
            _ => false,
        };
        if ok {
            cases.push(2);
        }
    }
    // both at least 9, the smaller exactly 9
    if lo == 9 {
        let ok = match w2 {
            7 => hi <= 10,
            8 => hi <= 9,
            _ => false,
        };
        if ok {
            cases.push(3);
        }
    }
    cases
}

pub fn extract_witness(
    d: &Diagram,
    fs: &FaceSet,
    final_state: &ChargeState,
    e: Element,
    rules: RuleSet,
) -> Result<Witness, ChargeError> {
    if let Some(v) = d.true_vertices().find(|&v| d.degree(v) < 7) {
        return Err(ChargeError::PreconditionMinDegree { vertex: d.id(v).to_string(), degree: d.degree(v) });
    }
    let charge = final_state.get(e).clone();
    if !charge.is_negative() {
        return Err(ChargeError::NotNegative(e.label(d)));
    }
    let wrong = |expected| ChargeError::WrongElementKind { element: e.label(d), expected, rules };
    let center = match (e, rules) {
        (Element::Vertex(c), RuleSet::A) if d.is_crossing(c) => c,
        (_, RuleSet::A) => return Err(wrong("crossing vertex")),
        (Element::Vertex(w), _) if !d.is_crossing(w) && d.degree(w) == 7 => w,
        _ => return Err(wrong("7-vertex")),
    };

    let faces = fs.incident(center);
    let classes: Vec<FaceClass> = faces.iter().map(|&f| classify(d, fs.face(f))).collect();
    let adjacent = |a: usize, b: usize| d.original_neighbors(a).contains(&b);

    let (neighbor_degrees, extraction, verdicts) = if rules == RuleSet::A {
        let nbrs = d.rotation(center).to_vec();
        let degrees: Vec<(usize, usize)> = nbrs.iter().map(|&u| (u, d.degree(u))).collect();
        let all_triangles = faces.iter().all(|&f| fs.face(f).degree() == 3);
        let k4 = all_triangles.then(|| [nbrs[0], nbrs[1], nbrs[2], nbrs[3]]);
        let spans_k4 = k4.is_some_and(|q| (0..4).all(|i| (i + 1..4).all(|j| adjacent(q[i], q[j]))));
        let mut sorted: Vec<usize> = degrees.iter().map(|&(_, k)| k).collect();
        sorted.sort_unstable();
        let typed = all_triangles && sorted[0] == 7 && sorted[2] <= 8 && sorted[3] <= 10;
        let verdicts = vec![
            Verdict { name: "four_3_faces", pass: all_triangles },
            Verdict { name: "neighbors_form_k4", pass: spans_k4 },
            Verdict { name: "k4_type_7_8-_8-_10-", pass: typed },
        ];
        (degrees, Extraction::CrossingK4 { faces, k4 }, verdicts)
    } else {
        let nbrs = d.original_neighbors(center);
        let degrees: Vec<(usize, usize)> = nbrs.iter().map(|&u| (u, d.degree(u))).collect();
        let falses = classes.iter().filter(|&&c| c == FaceClass::FalseTriangle).count();
        let trues = classes.iter().filter(|&&c| c == FaceClass::TrueTriangle).count();
        let star = falses == 6 && trues == 1;
        let true_triangle = fs
            .angles(center)
            .into_iter()
            .find(|&(f, _)| classify(d, fs.face(f)) == FaceClass::TrueTriangle)
            .map(|(f, pos)| fs.face(f).corners(pos));
        let corner7 = true_triangle.is_some_and(|(a, b)| d.degree(a).min(d.degree(b)) == 7);

        let mut verdicts = vec![
            Verdict { name: "six_false_one_true", pass: star },
            Verdict { name: "true_triangle_has_7_corner", pass: star && corner7 },
        ];
        let mut positional = None;
        let mut consistent = Vec::new();
        if rules == RuleSet::B {
            let big = degrees.iter().filter(|&&(_, k)| k >= 12).count();
            verdicts.push(Verdict { name: "neighbors_23-", pass: degrees.iter().all(|&(_, k)| k <= 23) });
            verdicts.push(Verdict { name: "at_most_one_12+", pass: big <= 1 });
        } else if let Some((p, q)) = true_triangle {
            let assignments: Vec<(usize, usize)> = [(p, q), (q, p)]
                .into_iter()
                .filter(|&(w1, _)| d.degree(w1) == 7)
                .collect();
            let others: Vec<usize> = d
                .rotation(center)
                .iter()
                .copied()
                .filter(|&u| !d.is_crossing(u) && u != p && u != q)
                .collect();
            if let (Some(&(w1, w2)), [a, b]) = (assignments.first(), others.as_slice()) {
                positional = Some(CaseReport {
                    w1,
                    w2,
                    pair: (*a, *b),
                    cases: seven_star_cases(d.degree(w2), d.degree(*a), d.degree(*b)),
                });
            }
            for &(w1, w2) in &assignments {
                let rest: Vec<usize> = nbrs.iter().copied().filter(|&u| u != w1 && u != w2).collect();
                for i in 0..rest.len() {
                    for j in i + 1..rest.len() {
                        let cases = seven_star_cases(d.degree(w2), d.degree(rest[i]), d.degree(rest[j]));
                        if !cases.is_empty() {
                            consistent.push(CaseReport { w1, w2, pair: (rest[i], rest[j]), cases });
                        }
                    }
                }
            }
            verdicts.push(Verdict { name: "case_consistent", pass: !consistent.is_empty() });
        } else {
            verdicts.push(Verdict { name: "case_consistent", pass: false });
        }
        (degrees, Extraction::Star { true_triangle, positional, consistent }, verdicts)
    };

    Ok(Witness {
        rules,
        center,
        final_charge: charge,
        incident_face_classes: classes,
        neighbor_degrees,
        extraction,
        verdicts,
    })
}
