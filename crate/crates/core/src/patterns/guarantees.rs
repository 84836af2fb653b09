//! Checks every light-subgraph guarantee and discharging claim on one diagram.

use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use super::{catalog, find_typed};
use crate::charge::{
    apply_rule_set, extract_witness, format_rational, initial_charges, ChargeError, Element, RuleSet,
};
use crate::diagram::{smooth, validate, Diagram, ValidationReport};
use crate::embedding::trace_faces;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuaranteeEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GuaranteeReport {
    pub entries: Vec<GuaranteeEntry>,
}

impl GuaranteeReport {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.entries.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn entry(&self, name: &str) -> Option<&GuaranteeEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    fn push(&mut self, name: String, pass: bool, detail: String) {
        self.entries.push(GuaranteeEntry { name, pass, detail });
    }
}

impl fmt::Display for GuaranteeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {} {}", if e.pass { "PASS" } else { "FAIL" }, e.name, e.detail)?;
        }
        writeln!(f, "summary pass={} fail={}", self.passed(), self.failed())
    }
}

#[derive(Debug, Error)]
pub enum GuaranteeError {
    #[error("diagram is invalid:\n{0}")]
    InvalidDiagram(ValidationReport),
    #[error("vertex `{vertex}` has degree {degree}; the guarantees need minimum degree 7")]
    PreconditionMinDegree { vertex: String, degree: usize },
    #[error(transparent)]
    Charge(#[from] ChargeError),
}

pub fn check_guarantees(d: &Diagram) -> Result<GuaranteeReport, GuaranteeError> {
    let report = validate(d);
    if !report.ok() {
        return Err(GuaranteeError::InvalidDiagram(report));
    }
    if let Some(v) = d.true_vertices().min_by_key(|&v| (d.degree(v), v)).filter(|&v| d.degree(v) < 7) {
        return Err(GuaranteeError::PreconditionMinDegree { vertex: d.id(v).to_string(), degree: d.degree(v) });
    }
    let g = smooth(d).expect("validated diagram smooths to a simple graph");
    let mut out = GuaranteeReport::default();

    for p in catalog() {
        let found = find_typed(&g, &p, Some(1));
        let detail = match found.first() {
            Some(m) => m.line(&g, &p),
            None => "no match".to_string(),
        };
        out.push(format!("pattern:{}", p.name()), !found.is_empty(), detail);
    }

    let fs = trace_faces(d);
    for rules in [RuleSet::A, RuleSet::B, RuleSet::C] {
        let initial = initial_charges(d, &fs, rules.scheme());
        let total = initial.total();
        out.push(
            format!("charge_total:{}", rules),
            total == rules.scheme().expected_total(),
            format!("total={}", format_rational(&total)),
        );

        let (final_state, _) = apply_rule_set(d, &fs, &initial, rules)?;
        let conserved = final_state.total() == total;
        // only the intended witness class may end up negative
        let stray: Vec<String> = final_state
            .iter()
            .filter(|(_, r)| r.is_negative())
            .filter(|&(e, _)| match (e, rules) {
                (Element::Vertex(v), RuleSet::A) => !d.is_crossing(v),
                (Element::Vertex(v), _) => d.is_crossing(v) || d.degree(v) != 7,
                (Element::Face(_), _) => true,
            })
            .map(|(e, r)| format!("{}={}", e.label(d), format_rational(r)))
            .collect();
        out.push(
            format!("nonnegative:{}", rules),
            conserved && stray.is_empty(),
            if stray.is_empty() {
                format!("conserved={}", conserved)
            } else {
                format!("conserved={} negative={}", conserved, stray.join(","))
            },
        );

        let negatives: Vec<Element> = final_state
            .iter()
            .filter(|(_, r)| r.is_negative())
            .map(|(e, _)| e)
            .collect();
        let mut verified = 0;
        let mut first_failure = None;
        for &e in &negatives {
            match extract_witness(d, &fs, &final_state, e, rules) {
                Ok(w) if w.verified() => verified += 1,
                Ok(w) => {
                    first_failure.get_or_insert_with(|| w.describe(d));
                }
                Err(err) => {
                    first_failure.get_or_insert_with(|| err.to_string());
                }
            }
        }
        let pass = !negatives.is_empty() && verified == negatives.len();
        let mut detail = format!("negative={} verified={}", negatives.len(), verified);
        if let Some(f) = first_failure {
            detail.push_str(&format!(" first_failure=({})", f));
        }
        out.push(format!("witnesses:{}", rules), pass, detail);
    }
    Ok(out)
}
