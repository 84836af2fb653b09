//! Exact-rational discharging on the associated plane graph.
//!
//! Two initial charge schemes are supported:
//!
//! * `A`: vertex `deg - 6`, face `2 deg - 6`, total `-12`;
//! * `B`: vertex `deg - 4`, face `deg - 4`, total `-8`.
//!
//! Rule set `A` runs on scheme `A` in three stages, each reading the state
//! left by the previous one. Rule sets `B` and `C` run on scheme `B`; their
//! amounts depend only on degrees, so all their transfers form one batch.
//! Every application returns the new state together with the full transfer
//! log, sorted canonically, and the state is always the log folded over the
//! input.

mod witness;

pub use witness::{extract_witness, seven_star_cases, CaseReport, Extraction, Verdict, Witness};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::diagram::Diagram;
use crate::embedding::{classify_all, FaceClass, FaceSet};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` in lowest terms, also for integers.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    A,
    B,
}

impl Scheme {
    pub fn vertex_charge(self, degree: usize) -> Rational {
        match self {
            Scheme::A => int(degree as i64 - 6),
            Scheme::B => int(degree as i64 - 4),
        }
    }

    pub fn face_charge(self, degree: usize) -> Rational {
        match self {
            Scheme::A => int(2 * degree as i64 - 6),
            Scheme::B => int(degree as i64 - 4),
        }
    }

    pub fn expected_total(self) -> Rational {
        match self {
            Scheme::A => int(-12),
            Scheme::B => int(-8),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleSet {
    A,
    B,
    C,
}

impl RuleSet {
    pub fn scheme(self) -> Scheme {
        match self {
            RuleSet::A => Scheme::A,
            RuleSet::B | RuleSet::C => Scheme::B,
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A vertex (by diagram index) or a face (by face id). Vertices sort first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl Element {
    pub fn label(self, d: &Diagram) -> String {
        match self {
            Element::Vertex(v) => format!("v:{}", d.id(v)),
            Element::Face(f) => format!("f:{f}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeState {
    scheme: Scheme,
    charges: BTreeMap<Element, Rational>,
}

impl ChargeState {
    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn get(&self, e: Element) -> &Rational {
        &self.charges[&e]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, &Rational)> {
        self.charges.iter().map(|(&e, r)| (e, r))
    }

    pub fn total(&self) -> Rational {
        self.charges.values().sum()
    }

    fn apply(&mut self, t: &Transfer) {
        *self.charges.get_mut(&t.from).expect("known element") -= &t.amount;
        *self.charges.get_mut(&t.to).expect("known element") += &t.amount;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    A1,
    A2,
    A3,
    B1,
    B2a,
    B2b,
    B2c,
    B2d,
    B2e,
    C1,
    C2a,
    C2b,
    C2c,
    C2d,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format!("{self:?}");
        let (set, rest) = s.split_at(1);
        write!(f, "{set}.R{rest}")
    }
}

/// The face angle mediating a transfer: position `pos` on the boundary of
/// `face`, optionally passing through the crossing vertex `via`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub face: usize,
    pub pos: usize,
    pub via: Option<usize>,
}

impl Site {
    pub fn label(self, d: &Diagram) -> String {
        match self.via {
            Some(c) => format!("f:{}@{}~{}", self.face, self.pos, d.id(c)),
            None => format!("f:{}@{}", self.face, self.pos),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Transfer {
    pub rule: Rule,
    pub site: Site,
    pub from: Element,
    pub to: Element,
    pub amount: Rational,
}

impl Transfer {
    pub fn line(&self, d: &Diagram) -> String {
        format!(
            "transfer {} {} {} {} {}",
            self.rule,
            self.from.label(d),
            self.to.label(d),
            format_rational(&self.amount),
            self.site.label(d)
        )
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChargeError {
    #[error("rule set {rules} needs scheme {expected} charges, got scheme {found}")]
    SchemeMismatch { rules: RuleSet, expected: Scheme, found: Scheme },
    #[error("rule {rule} produced negative amount {amount}")]
    NegativeAmount { rule: Rule, amount: String },
    #[error("vertex `{vertex}` has degree {degree}; witnesses need minimum degree 7")]
    PreconditionMinDegree { vertex: String, degree: usize },
    #[error("{element} is not a {expected} witness for rule set {rules}")]
    WrongElementKind { element: String, expected: &'static str, rules: RuleSet },
    #[error("{0} does not have negative final charge")]
    NotNegative(String),
}

pub fn initial_charges(d: &Diagram, fs: &FaceSet, scheme: Scheme) -> ChargeState {
    let mut charges = BTreeMap::new();
    for v in 0..d.len() {
        charges.insert(Element::Vertex(v), scheme.vertex_charge(d.degree(v)));
    }
    for f in fs.faces() {
        charges.insert(Element::Face(f.id), scheme.face_charge(f.degree()));
    }
    ChargeState { scheme, charges }
}

pub fn total_charge(cs: &ChargeState) -> Rational {
    cs.total()
}

/// Folds `transfers` over `initial` in order.
pub fn replay(initial: &ChargeState, transfers: &[Transfer]) -> ChargeState {
    let mut cs = initial.clone();
    for t in transfers {
        cs.apply(t);
    }
    cs
}

/// Elements with negative charge in canonical order.
pub fn negative_elements(cs: &ChargeState) -> Vec<(Element, Rational)> {
    cs.iter()
        .filter(|(_, r)| r.is_negative())
        .map(|(e, r)| (e, r.clone()))
        .collect()
}

/// Clauses of the second rule in rule sets B and C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// True triangle, one 7-corner and one 8⁺-corner: paid to the 7-corner.
    A,
    /// True triangle with two 7-corners: paid to each.
    B,
    /// False triangle: paid to the true corner (and in rule set B also
    /// through the crossing corner).
    C,
    /// Big face, true corner.
    D,
    /// Big face, crossing corner: paid through the crossing (rule set B only).
    E,
}

/// Amount a `k`-vertex pays per recipient under `clause`.
pub fn clause_amount(rules: RuleSet, clause: Clause, k: usize) -> Rational {
    let k = k as i64;
    let full = rat(k - 4, k);
    let half = rat(k - 4, 2 * k);
    match (rules, clause) {
        (_, Clause::A) => full - rat(1, 3),
        (_, Clause::B) => half - rat(1, 6),
        (RuleSet::C, Clause::C) => full - rat(1, 2),
        (_, Clause::C) | (_, Clause::D) | (_, Clause::E) => half - rat(1, 4),
    }
}

fn clause_rule(rules: RuleSet, clause: Clause) -> Rule {
    match (rules, clause) {
        (RuleSet::C, Clause::A) => Rule::C2a,
        (RuleSet::C, Clause::B) => Rule::C2b,
        (RuleSet::C, Clause::C) => Rule::C2c,
        (RuleSet::C, Clause::D) => Rule::C2d,
        (_, Clause::A) => Rule::B2a,
        (_, Clause::B) => Rule::B2b,
        (_, Clause::C) => Rule::B2c,
        (_, Clause::D) => Rule::B2d,
        (_, Clause::E) => Rule::B2e,
    }
}

/// Per-angle share of a `k`-vertex's whole charge `k - 6` when it is
/// split over `2⌊k/2⌋` false triangles (first rule set, second rule).
pub fn equal_split_share(k: usize) -> Rational {
    rat(k as i64 - 6, 2 * (k as i64 / 2))
}

pub fn apply_rule_set(
    d: &Diagram,
    fs: &FaceSet,
    cs: &ChargeState,
    rules: RuleSet,
) -> Result<(ChargeState, Vec<Transfer>), ChargeError> {
    if cs.scheme != rules.scheme() {
        return Err(ChargeError::SchemeMismatch { rules, expected: rules.scheme(), found: cs.scheme });
    }
    match rules {
        RuleSet::A => Ok(rule_set_a(d, fs, cs)),
        RuleSet::B | RuleSet::C => rule_set_bc(d, fs, cs, rules),
    }
}

pub fn apply_rule_set_a(d: &Diagram, fs: &FaceSet, cs: &ChargeState) -> Result<(ChargeState, Vec<Transfer>), ChargeError> {
    apply_rule_set(d, fs, cs, RuleSet::A)
}

pub fn apply_rule_set_b(d: &Diagram, fs: &FaceSet, cs: &ChargeState) -> Result<(ChargeState, Vec<Transfer>), ChargeError> {
    apply_rule_set(d, fs, cs, RuleSet::B)
}

pub fn apply_rule_set_c(d: &Diagram, fs: &FaceSet, cs: &ChargeState) -> Result<(ChargeState, Vec<Transfer>), ChargeError> {
    apply_rule_set(d, fs, cs, RuleSet::C)
}

fn run_stage(state: &mut ChargeState, log: &mut Vec<Transfer>, mut stage: Vec<Transfer>) {
    stage.sort();
    for t in &stage {
        state.apply(t);
    }
    log.extend(stage);
}

fn rule_set_a(d: &Diagram, fs: &FaceSet, cs: &ChargeState) -> (ChargeState, Vec<Transfer>) {
    let classes = classify_all(d, fs);
    let mut state = cs.clone();
    let mut log = Vec::new();

    // R1: faces of degree >= 4 pay their charge equally to crossing corners
    let mut stage = Vec::new();
    for f in fs.faces().iter().filter(|f| f.degree() >= 4) {
        let charge = state.get(Element::Face(f.id)).clone();
        let corners: Vec<(usize, usize)> = f
            .vertices()
            .enumerate()
            .filter(|&(_, v)| d.is_crossing(v))
            .collect();
        if corners.is_empty() || !charge.is_positive() {
            continue;
        }
        let share = charge / int(corners.len() as i64);
        for (pos, c) in corners {
            stage.push(Transfer {
                rule: Rule::A1,
                site: Site { face: f.id, pos, via: None },
                from: Element::Face(f.id),
                to: Element::Vertex(c),
                amount: share.clone(),
            });
        }
    }
    run_stage(&mut state, &mut log, stage);

    // R2: 7+-vertices pay their charge equally to incident false triangles
    let mut stage = Vec::new();
    for v in d.true_vertices().filter(|&v| d.degree(v) >= 7) {
        let charge = state.get(Element::Vertex(v)).clone();
        let angles: Vec<(usize, usize)> = fs
            .angles(v)
            .into_iter()
            .filter(|&(f, _)| classes[f] == FaceClass::FalseTriangle)
            .collect();
        if angles.is_empty() || !charge.is_positive() {
            continue;
        }
        let share = charge / int(angles.len() as i64);
        for (face, pos) in angles {
            stage.push(Transfer {
                rule: Rule::A2,
                site: Site { face, pos, via: None },
                from: Element::Vertex(v),
                to: Element::Face(face),
                amount: share.clone(),
            });
        }
    }
    run_stage(&mut state, &mut log, stage);

    // R3: false triangles pass everything on to their crossing vertex
    let mut stage = Vec::new();
    for f in fs.faces().iter().filter(|f| classes[f.id] == FaceClass::FalseTriangle) {
        let charge = state.get(Element::Face(f.id)).clone();
        if !charge.is_positive() {
            continue;
        }
        let (pos, c) = f
            .vertices()
            .enumerate()
            .find(|&(_, v)| d.is_crossing(v))
            .expect("false triangle has a crossing vertex");
        stage.push(Transfer {
            rule: Rule::A3,
            site: Site { face: f.id, pos, via: None },
            from: Element::Face(f.id),
            to: Element::Vertex(c),
            amount: charge,
        });
    }
    run_stage(&mut state, &mut log, stage);
    (state, log)
}

fn rule_set_bc(
    d: &Diagram,
    fs: &FaceSet,
    cs: &ChargeState,
    rules: RuleSet,
) -> Result<(ChargeState, Vec<Transfer>), ChargeError> {
    let classes = classify_all(d, fs);
    let deg = |v: usize| if d.is_crossing(v) { None } else { Some(d.degree(v)) };
    let r1 = if rules == RuleSet::B { Rule::B1 } else { Rule::C1 };

    let mut transfers = Vec::new();
    for f in fs.faces() {
        let class = classes[f.id];
        for (pos, w) in f.vertices().enumerate() {
            let Some(k) = deg(w).filter(|&k| k >= 7) else { continue };
            let site = Site { face: f.id, pos, via: None };
            let from = Element::Vertex(w);

            let r1_amount = match class {
                FaceClass::FalseTriangle => Some(rat(1, 2)),
                FaceClass::TrueTriangle => Some(rat(1, 3)),
                FaceClass::Big => None,
            };
            if let Some(amount) = r1_amount {
                transfers.push(Transfer { rule: r1, site, from, to: Element::Face(f.id), amount });
            }
            if k < 8 {
                continue;
            }

            // (clause, recipient, via) triples: each pays at most once per angle
            let (x, y) = f.corners(pos);
            let mut sends: BTreeSet<(Clause, usize, Option<usize>)> = BTreeSet::new();
            for (w1, w2) in [(x, y), (y, x)] {
                match class {
                    FaceClass::TrueTriangle => {
                        if deg(w1) == Some(7) && deg(w2).is_some_and(|k2| k2 >= 8) {
                            sends.insert((Clause::A, w1, None));
                        }
                        if deg(w1) == Some(7) && deg(w2) == Some(7) {
                            sends.insert((Clause::B, w1, None));
                        }
                    }
                    FaceClass::FalseTriangle => {
                        if d.is_crossing(w1) {
                            sends.insert((Clause::C, w2, None));
                            if rules == RuleSet::B {
                                let target = d.through(w, w1).expect("crossing of degree 4");
                                sends.insert((Clause::C, target, Some(w1)));
                            }
                        }
                    }
                    FaceClass::Big => {
                        if !d.is_crossing(w1) {
                            sends.insert((Clause::D, w1, None));
                        } else if rules == RuleSet::B {
                            let target = d.through(w, w1).expect("crossing of degree 4");
                            sends.insert((Clause::E, target, Some(w1)));
                        }
                    }
                }
            }
            for (clause, to, via) in sends {
                let amount = clause_amount(rules, clause, k);
                let rule = clause_rule(rules, clause);
                if amount.is_negative() {
                    return Err(ChargeError::NegativeAmount { rule, amount: format_rational(&amount) });
                }
                transfers.push(Transfer {
                    rule,
                    site: Site { via, ..site },
                    from,
                    to: Element::Vertex(to),
                    amount,
                });
            }
        }
    }

    let mut state = cs.clone();
    let mut log = Vec::new();
    run_stage(&mut state, &mut log, transfers);
    Ok((state, log))
}

/// Header, negative elements and optionally the transfer log, as printed by
/// the `discharge` subcommand.
pub fn discharge_report(d: &Diagram, initial: &ChargeState, final_state: &ChargeState, log: Option<&[Transfer]>) -> String {
    let mut out = format!(
        "total_initial={} total_final={}\n",
        format_rational(&initial.total()),
        format_rational(&final_state.total())
    );
    for (e, r) in negative_elements(final_state) {
        out.push_str(&format!("negative {} {}\n", e.label(d), format_rational(&r)));
    }
    if let Some(log) = log {
        for t in log {
            out.push_str(&t.line(d));
            out.push('\n');
        }
    }
    out
}
