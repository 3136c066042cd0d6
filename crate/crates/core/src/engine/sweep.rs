//! Finite search over the pairs `(s, t)` defining `ρ(I)`.

use rayon::prelude::*;

use super::containment::check_containment_with;
use super::node_budget;
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::rational::{one, ratio, Rational};
use crate::symbolic::symbolic_power;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub s_max: u32,
    pub t_max: u32,
    pub budget: u64,
}

impl Default for SweepConfig {
    /// `s ≤ 10`, `t ≤ 8`, budget from the environment.
    fn default() -> Self {
        SweepConfig { s_max: 10, t_max: 8, budget: node_budget() }
    }
}

impl SweepConfig {
    pub fn new(s_max: u32, t_max: u32) -> Self {
        SweepConfig { s_max, t_max, budget: node_budget() }
    }
}

/// One `(s, t)` cell. `holds = None` means the search budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCell {
    pub s: u32,
    pub t: u32,
    pub holds: Option<bool>,
    pub witness: Option<Monomial>,
    /// Settled by monotonicity in `t` instead of a full check.
    pub inferred: bool,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub s_max: u32,
    pub t_max: u32,
    /// Sorted by `(s, t)`.
    pub cells: Vec<SweepCell>,
}

impl SweepResult {
    pub fn cell(&self, s: u32, t: u32) -> Option<&SweepCell> {
        self.cells.iter().find(|c| c.s == s && c.t == t)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepCell> {
        self.cells.iter().filter(|c| c.holds == Some(false))
    }

    pub fn truncated(&self) -> Vec<(u32, u32)> {
        self.cells.iter().filter(|c| c.holds.is_none()).map(|c| (c.s, c.t)).collect()
    }

    /// Largest `s/t` over failures with `s > t`; 1 when there are none.
    pub fn lower_bound(&self) -> Rational {
        self.failures().filter(|c| c.s > c.t).map(|c| ratio(c.s as i64, c.t as i64)).max().unwrap_or_else(one)
    }

    /// A failing cell attaining [`lower_bound`](Self::lower_bound), least `s` first.
    pub fn best_failure(&self) -> Option<&SweepCell> {
        let best = self.lower_bound();
        self.failures().filter(|c| c.s > c.t).find(|c| ratio(c.s as i64, c.t as i64) == best)
    }
}

/// Evaluate every `1 ≤ t ≤ s ≤ s_max` with `t ≤ t_max`.
///
/// Rows (fixed `s`) run in parallel. Within a row `t` descends: a failure
/// at `t` is retried at `t − 1` with the same witness before a full check,
/// and the first containment that holds settles every smaller `t`, since
/// `I^t ⊆ I^(t−1)`.
pub fn sweep(ideal: &MonomialIdeal, config: SweepConfig) -> Result<SweepResult> {
    ideal.require_squarefree_proper()?;
    if config.s_max == 0 || config.t_max == 0 {
        return Err(Error::ZeroPower);
    }
    let rows: Vec<Vec<SweepCell>> =
        (1..=config.s_max).into_par_iter().map(|s| sweep_row(ideal, s, config)).collect::<Result<_>>()?;
    let mut cells: Vec<SweepCell> = rows.into_iter().flatten().collect();
    cells.sort_by_key(|c| (c.s, c.t));
    Ok(SweepResult { s_max: config.s_max, t_max: config.t_max, cells })
}

fn sweep_row(ideal: &MonomialIdeal, s: u32, config: SweepConfig) -> Result<Vec<SweepCell>> {
    let sym = symbolic_power(ideal, s)?;
    let mut out = Vec::new();
    let mut previous: Option<Monomial> = None;
    let top = s.min(config.t_max);
    let mut t = top;
    while t >= 1 {
        if let Some(w) = &previous {
            match ideal.power_certificate(w, t, config.budget) {
                Ok(None) => {
                    out.push(SweepCell { s, t, holds: Some(false), witness: Some(w.clone()), inferred: true });
                    t -= 1;
                    continue;
                }
                Ok(Some(_)) => {}
                Err(e) if e.is_resource_guard() => {}
                Err(e) => return Err(e),
            }
        }
        match check_containment_with(ideal, &sym, s, t, false, config.budget) {
            Ok(r) if r.holds => {
                out.push(SweepCell { s, t, holds: Some(true), witness: None, inferred: false });
                for lower in (1..t).rev() {
                    out.push(SweepCell { s, t: lower, holds: Some(true), witness: None, inferred: true });
                }
                break;
            }
            Ok(r) => {
                previous = r.witness.clone();
                out.push(SweepCell { s, t, holds: Some(false), witness: r.witness, inferred: false });
            }
            Err(e) if e.is_resource_guard() => {
                previous = None;
                out.push(SweepCell { s, t, holds: None, witness: None, inferred: false });
            }
            Err(e) => return Err(e),
        }
        t -= 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::check_containment;
    use crate::graph::Graph;

    #[test]
    fn bipartite_has_no_proper_failures() {
        let j = Graph::cycle(6).unwrap().cover_ideal().unwrap();
        let r = sweep(&j, SweepConfig::new(6, 6)).unwrap();
        assert!(r.failures().all(|c| c.s <= c.t));
        assert_eq!(r.lower_bound(), one());
    }

    #[test]
    fn triangle_cover_failures() {
        let j = Graph::cycle(3).unwrap().cover_ideal().unwrap();
        let r = sweep(&j, SweepConfig::new(8, 8)).unwrap();
        assert_eq!(r.cell(2, 2).unwrap().holds, Some(false));
        assert!(r.failures().all(|c| ratio(c.s as i64, c.t as i64) <= ratio(4, 3)));
        assert!(r.lower_bound() <= ratio(4, 3));
    }

    #[test]
    fn monotone_shortcuts_match_full_checks() {
        let i = Graph::cycle(5).unwrap().edge_ideal().unwrap();
        let r = sweep(&i, SweepConfig::new(7, 6)).unwrap();
        for c in &r.cells {
            let full = check_containment(&i, c.s, c.t, false).unwrap();
            assert_eq!(c.holds, Some(full.holds), "cell ({}, {})", c.s, c.t);
        }
        // failures propagate upward in t
        for c in r.failures() {
            if let Some(next) = r.cell(c.s, c.t + 1) {
                assert_eq!(next.holds, Some(false));
            }
        }
        assert!(r.lower_bound() <= ratio(6, 5));
        assert_eq!(r.cell(3, 3).unwrap().holds, Some(false));
    }
}
