//! Resurgence of products and sums of ideals in disjoint variables.

use super::checks::{least_noneq_witness, LEAST_NONEQ_DEFAULT};
use super::dispatch::{exact_cover_resurgence, exact_edge_resurgence, finish_pair, max_of, MaxOf};
use super::report::{Entries, ResurgenceReport, Role, Tag, ValueReport};
use super::sweep::{sweep, SweepConfig};
use super::ReportConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};
use crate::rational::{self, int, one, ratio, Rational};
use crate::symbolic::symbolic_power;

fn union_ring<'a>(rings: impl IntoIterator<Item = &'a VariableSet>) -> Result<VariableSet> {
    let mut it = rings.into_iter();
    let first = it.next().ok_or_else(|| Error::Precondition("need at least one part".into()))?.clone();
    it.try_fold(first, |acc, r| acc.disjoint_union(r))
}

/// `ρ(I_1 ⋯ I_k) = max ρ(I_i)` for ideals in pairwise disjoint variables,
/// and the same for `ρ_a`. Witnesses of each part are lifted to the product.
pub fn disjoint_product_rho(parts: &[ResurgenceReport]) -> Result<ResurgenceReport> {
    let ring = union_ring(parts.iter().map(|p| p.base().ambient()))?;
    let mut product: Option<MonomialIdeal> = None;
    for p in parts {
        let e = p.base().embed_by_name(&ring)?;
        product = Some(match product {
            None => e,
            Some(acc) => acc.product(&e)?,
        });
    }
    let description = parts.iter().map(|p| format!("({})", p.ideal)).collect::<Vec<_>>().join(" · ");
    max_rule(parts, product.expect("non-empty"), Tag::ProductMaxRule, description)
}

/// Max rule for `ρ` and `ρ_a` over ideals in disjoint variables whose
/// product (equivalently intersection) is `combined`.
///
/// A failure `w ∈ I_i^(s) ∖ I_i^t` lifts to `w · v` with `v` a generator of
/// `I_j^(s)` for every other part `j`.
pub(crate) fn max_rule(
    parts: &[ResurgenceReport],
    combined: MonomialIdeal,
    tag: Tag,
    description: String,
) -> Result<ResurgenceReport> {
    if parts.is_empty() {
        return Err(Error::Precondition("need at least one part".into()));
    }
    let inputs = format!("max over {} parts", parts.len());
    let mut rho = Entries::default();
    let mut rho_a = Entries::default();
    for (entries, values) in [
        (&mut rho, parts.iter().map(|p| &p.rho).collect::<Vec<&ValueReport>>()),
        (&mut rho_a, parts.iter().map(|p| &p.rho_a).collect()),
    ] {
        match max_of(&values) {
            MaxOf::Exact(v) => entries.push(Role::Exact, v, tag, inputs.clone()),
            MaxOf::Interval(lo, hi) => {
                entries.push(Role::Lower, lo, tag, inputs.clone());
                entries.push(Role::Upper, hi, tag, inputs.clone());
            }
        }
    }
    let (rho, rho_a) = finish_pair(rho, rho_a)?;
    let ring = combined.ambient().clone();
    let n = ring.len();
    let mut lifted = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        let mapping = p.base().ambient().mapping_into(&ring)?;
        for (s, t, w) in p.raw_witnesses() {
            let mut m = w.reindex(&mapping, n);
            for (j, other) in parts.iter().enumerate() {
                if j != i {
                    let sym = symbolic_power(other.base(), *s)?;
                    let v = sym.generators().first().ok_or(Error::ZeroIdeal)?;
                    m = m.mul(&v.reindex(&other.base().ambient().mapping_into(&ring)?, n));
                }
            }
            lifted.push((*s, *t, m));
        }
    }
    let mut report = ResurgenceReport::new(description, combined, rho, rho_a);
    for (s, t, w) in lifted {
        report.add_witness(s, t, w);
    }
    report.set_invariant("parts", parts.len());
    Ok(report)
}

/// One summand, optionally with a known resurgence report.
#[derive(Clone, Debug)]
pub struct SumPart {
    pub ideal: MonomialIdeal,
    pub rho: Option<ValueReport>,
}

impl SumPart {
    pub fn new(ideal: MonomialIdeal) -> Self {
        SumPart { ideal, rho: None }
    }

    pub fn with_rho(ideal: MonomialIdeal, rho: ValueReport) -> Self {
        SumPart { ideal, rho: Some(rho) }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SumConfig {
    /// Search bound for the least `p` with `I^(p) ≠ I^p`.
    pub s_max: u32,
    pub sweep: Option<SweepConfig>,
}

impl Default for SumConfig {
    fn default() -> Self {
        SumConfig { s_max: LEAST_NONEQ_DEFAULT, sweep: None }
    }
}

/// A product `w_1 ⋯ w_r` of `w_i ∈ I_i^(p_i) ∖ I_i^(p_i)`, lying in
/// `(Σ I)^(Σp)` but not in `(Σ I)^(Σp − r + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TechResWitness {
    /// Indices into the input parts.
    pub parts: Vec<usize>,
    pub p: Vec<u32>,
    pub s: u32,
    pub t: u32,
    pub monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct SumReport {
    pub report: ResurgenceReport,
    /// Least `p_i ≤ s_max` with `I_i^(p_i) ≠ I_i^(p_i)`, per input part.
    pub p: Vec<Option<u32>>,
    /// Parts with symbolic = ordinary up to the bound, dropped from `ρ`.
    pub dropped: Vec<usize>,
    /// `max_r (p_1+⋯+p_r)/(p_1+⋯+p_r−r+1)` over the kept parts, `p` ascending.
    pub formula: Option<Rational>,
    /// Every kept part has exact `ρ = 1`.
    pub hypothesis_met: bool,
    pub tech_res: Vec<TechResWitness>,
}

/// `max_{2 ≤ r ≤ k} (p_1+⋯+p_r)/(p_1+⋯+p_r−r+1)` for ascending `p`; 1 for `k < 2`.
pub fn sum_formula(p_sorted: &[u32]) -> Rational {
    let mut best = one();
    let mut total = 0i64;
    for (i, &p) in p_sorted.iter().enumerate() {
        total += p as i64;
        let r = i as i64 + 1;
        if r >= 2 {
            best = best.max(ratio(total, total - r + 1));
        }
    }
    best
}

/// Resurgence of a squarefree monomial ideal recognised as an edge ideal
/// (all generators of degree 2, every variable used) or a graph cover
/// ideal (all minimal primes of size 2).
pub(crate) fn recognise_graph_ideal(ideal: &MonomialIdeal, cfg: &ReportConfig) -> Result<Option<ResurgenceReport>> {
    let n = ideal.ambient().len();
    let gens = ideal.generators();
    let pairs = |sets: Vec<Vec<usize>>| -> Option<Vec<(usize, usize)>> {
        sets.into_iter().map(|s| (s.len() == 2).then(|| (s[0], s[1]))).collect()
    };
    let used: Vec<bool> = (0..n).map(|v| gens.iter().any(|g| g.exponent(v) > 0)).collect();
    if ideal.is_squarefree() && used.iter().all(|&u| u) {
        if let Some(edges) = pairs(gens.iter().map(|g| g.support()).collect()) {
            let g = Graph::new(ideal.ambient().clone(), edges)?;
            return exact_edge_resurgence(&g, cfg).map(Some);
        }
    }
    if let Some(edges) = pairs(ideal.minimal_primes()?) {
        let g = Graph::new(ideal.ambient().clone(), edges)?;
        if g.isolated_vertices().is_empty() && g.cover_ideal()?.equals(ideal)? {
            return exact_cover_resurgence(&g, cfg).map(Some);
        }
    }
    Ok(None)
}

/// `ρ(I_1 + ⋯ + I_k)` for ideals in pairwise disjoint variables.
///
/// Parts with `I^(s) = I^s` for all `s ≤ s_max` are dropped, with a flag
/// since equality beyond the bound is not checked. Products of witnesses
/// of the remaining parts give certified lower bounds. The closed formula
/// is exact when every kept part has exact `ρ = 1`; otherwise the sum is
/// also recognised as a graph ideal where possible, and the big height
/// bounds `ρ` from above.
pub fn disjoint_sum_rho(parts: &[SumPart], cfg: &SumConfig) -> Result<SumReport> {
    let ring = union_ring(parts.iter().map(|p| p.ideal.ambient()))?;
    let n = ring.len();
    let mut sum: Option<MonomialIdeal> = None;
    for p in parts {
        p.ideal.require_squarefree_proper()?;
        let e = p.ideal.embed_by_name(&ring)?;
        sum = Some(match sum {
            None => e,
            Some(acc) => acc.sum(&e)?,
        });
    }
    let sum = sum.expect("non-empty");
    let quiet = ReportConfig::without_sweep();

    let mut p = Vec::new();
    let mut witnesses = Vec::new();
    let mut dropped = Vec::new();
    let mut flags = Vec::new();
    let mut kept: Vec<(usize, u32, Monomial)> = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        match least_noneq_witness(&part.ideal, cfg.s_max)? {
            Some((pi, w)) => {
                p.push(Some(pi));
                witnesses.push(Some(w.clone()));
                kept.push((i, pi, w));
            }
            None => {
                p.push(None);
                witnesses.push(None);
                dropped.push(i);
                flags.push(format!("part {i}: symbolic = ordinary for s ≤ {} only; dropped (bound-dependent)", cfg.s_max));
            }
        }
    }
    kept.sort_by_key(|&(i, pi, _)| (pi, i));

    let mut rho = Entries::default();
    let mut rho_a = Entries::default();
    let mut tech_res = Vec::new();
    let mut acc = Monomial::one(n);
    let mut total = 0u32;
    for (r, (i, pi, w)) in kept.iter().enumerate() {
        let mapping = parts[*i].ideal.ambient().mapping_into(&ring)?;
        acc = acc.mul(&w.reindex(&mapping, n));
        total += pi;
        let r = r as u32 + 1;
        if r < 2 {
            continue;
        }
        let t = total - r + 1;
        let idx: Vec<usize> = kept[..r as usize].iter().map(|k| k.0).collect();
        let ps: Vec<u32> = kept[..r as usize].iter().map(|k| k.1).collect();
        rho.push(Role::Lower, ratio(total as i64, t as i64), Tag::SumWitness, format!("parts {idx:?}, p = {ps:?}"));
        tech_res.push(TechResWitness { parts: idx, p: ps, s: total, t, monomial: acc.clone() });
    }

    // part reports, given or recognised
    let mut part_rho: Vec<Option<ValueReport>> = Vec::new();
    for part in parts {
        let v = match &part.rho {
            Some(v) => Some(v.clone()),
            None => recognise_graph_ideal(&part.ideal, &quiet)?.map(|r| r.rho),
        };
        if let Some(v) = &v {
            rho.push(Role::Lower, v.lower, Tag::RestrictionBound, "a summand's resurgence");
        }
        part_rho.push(v);
    }
    let kept_rho: Vec<Option<&ValueReport>> = kept.iter().map(|k| part_rho[k.0].as_ref()).collect();
    let hypothesis_met = !kept.is_empty() && kept_rho.iter().all(|v| v.is_some_and(|v| v.exact == Some(one())));
    let ps: Vec<u32> = kept.iter().map(|k| k.1).collect();
    let formula = hypothesis_met.then(|| sum_formula(&ps));
    if let Some(f) = formula {
        rho.push(Role::Exact, f, Tag::SumFormula, format!("p = {ps:?}"));
    } else if !kept.is_empty() {
        flags.push("unit-resurgence hypothesis unmet; the sum formula gives no exact value".into());
    }
    if kept.is_empty() {
        rho.push(Role::Exact, one(), Tag::SymbolicEqualsOrdinary, "every part has symbolic = ordinary up to the bound");
        flags.push("exact value depends on symbolic = ordinary beyond the bound".into());
    } else if kept.len() == 1 && !dropped.is_empty() {
        if let Some(v) = kept_rho[0] {
            let inputs = "one part left after dropping symbolic = ordinary parts";
            match v.exact {
                Some(e) => rho.push(Role::Exact, e, Tag::SymbolicEqualsOrdinary, inputs),
                None => rho.push(Role::Upper, v.upper, Tag::SymbolicEqualsOrdinary, inputs),
            }
        }
    }

    let mut whole_witnesses = Vec::new();
    if let Some(whole) = recognise_graph_ideal(&sum, &quiet)? {
        let inputs = format!("sum is {}", whole.ideal);
        for (entries, v) in [(&mut rho, &whole.rho), (&mut rho_a, &whole.rho_a)] {
            match v.exact {
                Some(e) => entries.push(Role::Exact, e, v.primary_tag().unwrap_or(Tag::Literature), inputs.clone()),
                None => {
                    entries.push(Role::Lower, v.lower, Tag::RestrictionBound, inputs.clone());
                    entries.push(Role::Upper, v.upper, v.primary_tag().unwrap_or(Tag::Literature), inputs.clone());
                }
            }
        }
        flags.extend(whole.flags.iter().cloned());
        whole_witnesses.extend(whole.raw_witnesses().iter().cloned());
    }
    let h = sum.big_height()?;
    for e in [&mut rho, &mut rho_a] {
        e.push(Role::Upper, int(h as i64), Tag::BigHeightBound, format!("big height {h}"));
    }
    rho_a.push(Role::Lower, one(), Tag::AlphaOverWaldschmidt, "alpha/alpha-hat ≥ 1");

    let swept = match cfg.sweep {
        Some(c) => {
            let s = sweep(&sum, c)?;
            rho.push(Role::Lower, s.lower_bound(), Tag::SweepWitness, format!("s ≤ {}, t ≤ {}", c.s_max, c.t_max));
            Some(s)
        }
        None => None,
    };
    let (rho, rho_a) = finish_pair(rho, rho_a)?;
    let description = parts.iter().map(|p| format!("({})", p.ideal.display_generators().join(", "))).collect::<Vec<_>>().join(" + ");
    let mut report = ResurgenceReport::new(description, sum, rho, rho_a);
    if let Some(s) = &swept {
        report.absorb_sweep(s);
    }
    for w in &tech_res {
        report.add_witness(w.s, w.t, w.monomial.clone());
    }
    for (s, t, w) in whole_witnesses {
        report.add_witness(s, t, w);
    }
    for f in flags {
        report.flag(f);
    }
    report.set_invariant("p", &p);
    if let Some(f) = formula {
        report.set_invariant("sum_formula", rational::format(&f));
    }
    Ok(SumReport { report, p, dropped, formula, hypothesis_met, tech_res })
}
