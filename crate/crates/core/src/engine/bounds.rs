//! Bounds on `ρ` and `ρ_a` from graph and hypergraph invariants, and the
//! containment families behind them.

use serde::Serialize;

use super::containment::{check_containment_with, ContainmentResult};
use super::node_budget;
use crate::error::{Error, Result};
use crate::graph::{invariants, Graph, Hypergraph};
use crate::ideal::MonomialIdeal;
use crate::rational::{int, ratio, Rational};
use crate::symbolic::{symbolic_power, WaldschmidtEstimate};

/// `α(I)/α̂(I) ≤ ρ_a(I) ≤ ρ(I)`. With only an upper estimate of `α̂` the
/// quotient by that estimate is still a valid lower bound.
pub fn rho_alpha_lower(ideal: &MonomialIdeal, estimate: &WaldschmidtEstimate) -> Result<Rational> {
    let denom = estimate.exact.unwrap_or(estimate.upper);
    if denom <= int(0) {
        return Err(Error::Precondition("Waldschmidt estimate must be positive".into()));
    }
    Ok(int(ideal.alpha()? as i64) / denom)
}

/// `ρ(J(G)) ≤ 2 − 2/χ(G)`.
pub fn cover_upper_chi(g: &Graph) -> Result<Rational> {
    g.require_connected()?;
    g.require_no_isolated()?;
    let chi = invariants::chromatic_number(g)?;
    Ok(int(2) - ratio(2, chi as i64))
}

/// `2 − 2/ω(G) ≤ ρ_a(J(G))`.
pub fn cover_lower_omega(g: &Graph) -> Result<Rational> {
    g.require_no_isolated()?;
    Ok(int(2) - ratio(2, invariants::clique_number(g)? as i64))
}

/// `2 − 2α(G)/n ≤ ρ_a(J(G))` for connected `G`.
pub fn cover_lower_independence(g: &Graph) -> Result<Rational> {
    g.require_connected()?;
    g.require_no_isolated()?;
    let a = invariants::independence_number(g)? as i64;
    Ok(int(2) - ratio(2 * a, g.num_vertices() as i64))
}

/// `ρ_a(J(H)) ≤ h − 1/χ(H)` with `h` the big height of `J(H)`.
pub fn hypergraph_rho_a_upper(h: &Hypergraph) -> Result<Rational> {
    let j = h.cover_ideal()?;
    let height = j.big_height()? as i64;
    Ok(int(height) - ratio(1, h.chromatic_number()? as i64))
}

/// `J(H)^(rh − h) ⊆ J(H)^r` for each requested `r`; these are asserted by
/// the theorem only for `r ≥ χ(H)`.
pub fn hypergraph_containment_suite(h: &Hypergraph, rs: impl IntoIterator<Item = u32>) -> Result<Vec<ContainmentResult>> {
    let j = h.cover_ideal()?;
    let height = j.big_height()? as u32;
    rs.into_iter()
        .map(|r| {
            let s = r * height;
            if r < 2 || s <= height {
                return Err(Error::Precondition(format!("r = {r} gives a non-positive symbolic exponent")));
            }
            let sym = symbolic_power(&j, s - height)?;
            check_containment_with(&j, &sym, s - height, r, false, node_budget())
        })
        .collect()
}

/// One member of a `χ`-family containment.
#[derive(Clone, Debug)]
pub struct ChiSuiteEntry {
    /// 1 for `J^(2r−2c) ⊆ J^r`, 2 for `J^(2r−2c−1) ⊆ J^r`.
    pub family: u8,
    pub r: u32,
    /// Whether the theorem asserts this containment (`r ≥ cχ`, resp. `cχ + 1`).
    pub in_hypothesis: bool,
    pub result: ContainmentResult,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiSuiteSummary {
    pub checked: usize,
    pub asserted: usize,
    pub asserted_failures: Vec<(u8, u32)>,
}

/// Both families `J(G)^(2r−2c) ⊆ J(G)^r` and `J(G)^(2r−2c−1) ⊆ J(G)^r`
/// for each `r`. Values of `r` below the thresholds are checked and
/// recorded with `in_hypothesis = false`; exponents below 1 are skipped.
pub fn cover_chi_containment_suite(
    g: &Graph,
    c: u32,
    rs: impl IntoIterator<Item = u32>,
) -> Result<Vec<ChiSuiteEntry>> {
    if c == 0 {
        return Err(Error::Precondition("c must be at least 1".into()));
    }
    g.require_no_isolated()?;
    let chi = invariants::chromatic_number(g)? as u32;
    let j = g.cover_ideal()?;
    let budget = node_budget();
    let mut out = Vec::new();
    for r in rs {
        for (family, s, threshold) in [(1u8, (2 * r) as i64 - 2 * c as i64, c * chi), (2, (2 * r) as i64 - 2 * c as i64 - 1, c * chi + 1)] {
            if s < 1 {
                continue;
            }
            let s = s as u32;
            let sym = symbolic_power(&j, s)?;
            let result = check_containment_with(&j, &sym, s, r, false, budget)?;
            out.push(ChiSuiteEntry { family, r, in_hypothesis: r >= threshold, result });
        }
    }
    Ok(out)
}

/// Counts over a suite; any asserted containment that fails is listed.
pub fn summarize_chi_suite(entries: &[ChiSuiteEntry]) -> ChiSuiteSummary {
    let asserted: Vec<&ChiSuiteEntry> = entries.iter().filter(|e| e.in_hypothesis).collect();
    ChiSuiteSummary {
        checked: entries.len(),
        asserted: asserted.len(),
        asserted_failures: asserted.iter().filter(|e| !e.result.holds).map(|e| (e.family, e.r)).collect(),
    }
}
