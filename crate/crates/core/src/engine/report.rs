use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::sweep::SweepResult;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::rational::{self, Rational};
use crate::symbolic::SymbolicPowerSpec;

/// What a provenance entry asserts about the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Exact,
    Lower,
    Upper,
    /// Agrees with the exact value through an independent route.
    Corroborates,
}

/// The result a bound rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    BipartiteTheorem,
    OddCycleTheorem,
    CompleteMultipartiteTheorem,
    ChiEqualsOmegaCorollary,
    CliqueSumTheorem,
    CactusTheorem,
    ComponentRule,
    ChromaticUpperBound,
    CliqueLowerBound,
    IndependenceLowerBound,
    AlphaOverWaldschmidt,
    SweepWitness,
    EdgeClassAsymptotic,
    EdgeClassResurgence,
    RestrictionBound,
    CycleWitness,
    Literature,
    BigHeightBound,
    HypergraphBound,
    ProductMaxRule,
    SumFormula,
    SumWitness,
    SymbolicEqualsOrdinary,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::BipartiteTheorem => "bipartite theorem",
            Tag::OddCycleTheorem => "odd-cycle theorem",
            Tag::CompleteMultipartiteTheorem => "complete multipartite theorem",
            Tag::ChiEqualsOmegaCorollary => "chi=omega corollary",
            Tag::CliqueSumTheorem => "clique-sum theorem",
            Tag::CactusTheorem => "cactus theorem",
            Tag::ComponentRule => "component rule",
            Tag::ChromaticUpperBound => "chromatic upper bound",
            Tag::CliqueLowerBound => "clique lower bound",
            Tag::IndependenceLowerBound => "independence lower bound",
            Tag::AlphaOverWaldschmidt => "alpha/alpha-hat lower bound",
            Tag::SweepWitness => "sweep witness",
            Tag::EdgeClassAsymptotic => "edge-class asymptotic formula",
            Tag::EdgeClassResurgence => "edge-class resurgence formula",
            Tag::RestrictionBound => "restriction bound",
            Tag::CycleWitness => "distant odd cycles witness",
            Tag::Literature => "literature",
            Tag::BigHeightBound => "big height bound",
            Tag::HypergraphBound => "hypergraph bound",
            Tag::ProductMaxRule => "product max rule",
            Tag::SumFormula => "sum formula",
            Tag::SumWitness => "sum witness",
            Tag::SymbolicEqualsOrdinary => "symbolic equals ordinary",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub role: Role,
    #[serde(with = "rational")]
    pub value: Rational,
    pub tag: Tag,
    /// The data the bound was computed from, e.g. `"chi = 3"`.
    pub inputs: String,
}

/// An exact value or an interval, with the bounds behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueReport {
    #[serde(with = "rational::option")]
    pub exact: Option<Rational>,
    #[serde(with = "rational")]
    pub lower: Rational,
    #[serde(with = "rational")]
    pub upper: Rational,
    pub provenance: Vec<Provenance>,
}

impl ValueReport {
    /// Combine entries: lower is the largest lower or exact value, upper the
    /// smallest upper or exact value. Exact entries must agree and sit
    /// inside the bounds; when the bounds meet, the value is exact.
    pub fn from_entries(provenance: Vec<Provenance>) -> Result<Self> {
        let exacts: Vec<Rational> = provenance.iter().filter(|p| p.role == Role::Exact).map(|p| p.value).collect();
        if exacts.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Inconsistent(format!("exact routes disagree: {}", describe(&provenance))));
        }
        let lower = provenance
            .iter()
            .filter(|p| matches!(p.role, Role::Lower | Role::Exact))
            .map(|p| p.value)
            .max()
            .ok_or_else(|| Error::Precondition("no lower bound recorded".into()))?;
        let upper = provenance
            .iter()
            .filter(|p| matches!(p.role, Role::Upper | Role::Exact))
            .map(|p| p.value)
            .min()
            .ok_or_else(|| Error::Precondition("no upper bound recorded".into()))?;
        if lower > upper {
            return Err(Error::Inconsistent(format!(
                "lower bound {} exceeds upper bound {}: {}",
                rational::format(&lower),
                rational::format(&upper),
                describe(&provenance)
            )));
        }
        if let Some(c) = provenance.iter().find(|p| p.role == Role::Corroborates) {
            if exacts.first().is_some_and(|&e| e != c.value) {
                return Err(Error::Inconsistent(format!("{} disagrees with the exact value", c.tag)));
            }
        }
        let exact = exacts.first().copied().or((lower == upper).then_some(lower));
        Ok(ValueReport { exact, lower, upper, provenance })
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Tag of the first exact entry, if any.
    pub fn primary_tag(&self) -> Option<Tag> {
        self.provenance.iter().find(|p| p.role == Role::Exact).map(|p| p.tag)
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.provenance.iter().any(|p| p.tag == tag)
    }

    /// `"6/5"` or `"[6/5, 4/3]"`.
    pub fn summary(&self) -> String {
        match &self.exact {
            Some(v) => rational::format(v),
            None => format!("[{}, {}]", rational::format(&self.lower), rational::format(&self.upper)),
        }
    }
}

fn describe(p: &[Provenance]) -> String {
    p.iter().map(|p| format!("{} {:?} {}", p.tag, p.role, rational::format(&p.value))).collect::<Vec<_>>().join("; ")
}

/// Accumulates provenance entries.
#[derive(Clone, Debug, Default)]
pub(crate) struct Entries(pub Vec<Provenance>);

impl Entries {
    pub fn push(&mut self, role: Role, value: Rational, tag: Tag, inputs: impl Into<String>) {
        self.0.push(Provenance { role, value, tag, inputs: inputs.into() });
    }

    pub fn finish(self) -> Result<ValueReport> {
        ValueReport::from_entries(self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub s: u32,
    pub t: u32,
    pub monomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellRecord {
    pub s: u32,
    pub t: u32,
    /// `null` when the search budget ran out.
    pub holds: Option<bool>,
}

/// `ρ` and `ρ_a` for one ideal, with every bound's source.
#[derive(Clone, Debug, Serialize)]
pub struct ResurgenceReport {
    /// Human-readable description of the ideal.
    pub ideal: String,
    pub rho: ValueReport,
    pub rho_a: ValueReport,
    pub witnesses: Vec<WitnessRecord>,
    pub containments: Vec<CellRecord>,
    pub flags: Vec<String>,
    pub invariants: BTreeMap<String, serde_json::Value>,
    #[serde(skip)]
    pub(crate) base: MonomialIdeal,
    #[serde(skip)]
    pub(crate) raw_witnesses: Vec<(u32, u32, Monomial)>,
}

impl ResurgenceReport {
    pub(crate) fn new(description: String, base: MonomialIdeal, rho: ValueReport, rho_a: ValueReport) -> Self {
        ResurgenceReport {
            ideal: description,
            rho,
            rho_a,
            witnesses: Vec::new(),
            containments: Vec::new(),
            flags: Vec::new(),
            invariants: BTreeMap::new(),
            base,
            raw_witnesses: Vec::new(),
        }
    }

    /// The ideal the report is about.
    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    /// Failing `(s, t, monomial)` triples, in canonical order.
    pub fn raw_witnesses(&self) -> &[(u32, u32, Monomial)] {
        &self.raw_witnesses
    }

    pub(crate) fn add_witness(&mut self, s: u32, t: u32, m: Monomial) {
        if !self.raw_witnesses.iter().any(|(a, b, _)| *a == s && *b == t) {
            self.raw_witnesses.push((s, t, m));
        }
        self.raw_witnesses.sort();
        let vars = self.base.ambient().clone();
        self.witnesses = self
            .raw_witnesses
            .iter()
            .map(|(s, t, m)| WitnessRecord { s: *s, t: *t, monomial: m.display(&vars).to_string() })
            .collect();
    }

    /// Record a sweep: all cells, every failure as a witness, truncation flags.
    pub(crate) fn absorb_sweep(&mut self, sweep: &SweepResult) {
        self.containments = sweep.cells.iter().map(|c| CellRecord { s: c.s, t: c.t, holds: c.holds }).collect();
        for c in sweep.failures() {
            if let Some(w) = &c.witness {
                self.add_witness(c.s, c.t, w.clone());
            }
        }
        let truncated = sweep.truncated();
        if !truncated.is_empty() {
            self.flags.push(format!("search budget exceeded at (s, t) in {truncated:?}; those cells are undecided"));
        }
    }

    pub(crate) fn flag(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        if !self.flags.contains(&msg) {
            self.flags.push(msg);
        }
    }

    pub(crate) fn set_invariant(&mut self, key: &str, value: impl Serialize) {
        self.invariants.insert(key.into(), serde_json::to_value(value).expect("serializable invariant"));
    }

    /// Largest `s/t` over recorded witnesses with `s > t`.
    pub fn witness_lower_bound(&self) -> Option<Rational> {
        self.raw_witnesses.iter().filter(|(s, t, _)| s > t).map(|(s, t, _)| Rational::new(*s as i64, *t as i64)).max()
    }

    /// True when some cell of the recorded sweep ran out of budget.
    pub fn is_truncated(&self) -> bool {
        self.containments.iter().any(|c| c.holds.is_none())
    }

    /// Re-check the report: bounds ordered, every witness in `I^(s) ∖ I^t`,
    /// and the witness lower bound not above the upper bound of `ρ`.
    pub fn verify(&self) -> Result<bool> {
        for v in [&self.rho, &self.rho_a] {
            if v.lower > v.upper || v.exact.is_some_and(|e| e < v.lower || e > v.upper) {
                return Ok(false);
            }
            if v.exact.is_some() && v.provenance.is_empty() {
                return Ok(false);
            }
        }
        if self.rho_a.upper > self.rho.upper {
            return Ok(false);
        }
        for (s, t, w) in &self.raw_witnesses {
            let spec = SymbolicPowerSpec::new(&self.base, *s)?;
            if !spec.member(w)? || self.base.member_of_power(w, *t)? {
                return Ok(false);
            }
        }
        Ok(self.witness_lower_bound().is_none_or(|l| l <= self.rho.upper))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn entry(role: Role, v: Rational, tag: Tag) -> Provenance {
        Provenance { role, value: v, tag, inputs: String::new() }
    }

    #[test]
    fn combining_entries() {
        let v = ValueReport::from_entries(vec![
            entry(Role::Lower, ratio(6, 5), Tag::SweepWitness),
            entry(Role::Upper, ratio(4, 3), Tag::ChromaticUpperBound),
        ])
        .unwrap();
        assert_eq!((v.exact, v.lower, v.upper), (None, ratio(6, 5), ratio(4, 3)));
        assert_eq!(v.summary(), "[6/5, 4/3]");

        let v = ValueReport::from_entries(vec![
            entry(Role::Exact, ratio(6, 5), Tag::OddCycleTheorem),
            entry(Role::Upper, ratio(4, 3), Tag::ChromaticUpperBound),
            entry(Role::Lower, ratio(1, 1), Tag::SweepWitness),
        ])
        .unwrap();
        assert_eq!(v.exact, Some(ratio(6, 5)));
        assert_eq!(v.primary_tag(), Some(Tag::OddCycleTheorem));

        let pinched = ValueReport::from_entries(vec![
            entry(Role::Lower, ratio(4, 3), Tag::CliqueLowerBound),
            entry(Role::Upper, ratio(4, 3), Tag::ChromaticUpperBound),
        ])
        .unwrap();
        assert_eq!(pinched.exact, Some(ratio(4, 3)));
    }

    #[test]
    fn contradictions_are_errors() {
        let bad = ValueReport::from_entries(vec![
            entry(Role::Exact, ratio(6, 5), Tag::OddCycleTheorem),
            entry(Role::Exact, ratio(4, 3), Tag::CactusTheorem),
        ]);
        assert!(matches!(bad, Err(Error::Inconsistent(_))));
        let bad = ValueReport::from_entries(vec![
            entry(Role::Lower, ratio(3, 2), Tag::SweepWitness),
            entry(Role::Upper, ratio(4, 3), Tag::ChromaticUpperBound),
        ]);
        assert!(matches!(bad, Err(Error::Inconsistent(_))));
    }

    #[test]
    fn tag_names_serialize() {
        let json = serde_json::to_string(&entry(Role::Exact, ratio(8, 7), Tag::OddCycleTheorem)).unwrap();
        assert_eq!(json, r#"{"role":"exact","value":"8/7","tag":"odd-cycle theorem","inputs":""}"#);
    }
}
