//! Machine checks of containment hypotheses and witness transport between
//! related ideals.

use serde::Serialize;

use super::containment::check_containment;
use super::dispatch::exact_cover_resurgence;
use super::node_budget;
use super::report::Tag;
use super::sweep::{sweep, SweepConfig};
use super::ReportConfig;
use crate::error::{Error, Result};
use crate::graph::{invariants, Graph, Hypergraph};
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};
use crate::rational::{self, int, ratio, Rational};
use crate::symbolic::{cover_waldschmidt, edge_class_of, jn_ideal, symbolic_power, SymbolicPowerSpec};

/// Default search bound for [`least_noneq_power`].
pub const LEAST_NONEQ_DEFAULT: u32 = 6;

/// Least `p ≤ s_max` with `I^(p) ≠ I^p`, or `None` when equality holds
/// throughout the bound. `None` says nothing about `p > s_max`.
pub fn least_noneq_power(ideal: &MonomialIdeal, s_max: u32) -> Result<Option<u32>> {
    Ok(least_noneq_witness(ideal, s_max)?.map(|(p, _)| p))
}

/// As [`least_noneq_power`], with a generator of `I^(p)` outside `I^p`.
pub fn least_noneq_witness(ideal: &MonomialIdeal, s_max: u32) -> Result<Option<(u32, Monomial)>> {
    ideal.require_squarefree_proper()?;
    for p in 1..=s_max {
        // I^p ⊆ I^(p) always, so inequality is a failed containment
        let r = check_containment(ideal, p, p, false)?;
        if let Some(w) = r.witness {
            return Ok(Some((p, w)));
        }
    }
    Ok(None)
}

/// `A ⊆ B` for monomial ideals, with the first generator of `A` outside `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealContainment {
    pub holds: bool,
    pub witness: Option<Monomial>,
}

fn ideal_containment(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<IdealContainment> {
    for g in a.generators() {
        if !b.contains_monomial(g)? {
            return Ok(IdealContainment { holds: false, witness: Some(g.clone()) });
        }
    }
    Ok(IdealContainment { holds: true, witness: None })
}

#[derive(Clone, Debug)]
pub struct GhmReport {
    pub n: u32,
    pub k: u32,
    /// `P · I^(n) ⊆ I^n`.
    pub first: IdealContainment,
    /// `I^(n) ⊆ P^k · I^(n−1)`.
    pub second: IdealContainment,
    /// `(a, I^(a) = Σ_q (I^(n))^q · I^(a−qn))` for `a ≤ a_max`.
    pub rees: Vec<(u32, bool)>,
    /// `I^(nk+n) ⊆ I^(nk+n−1)`, recorded for information.
    pub conclusion_holds: Option<bool>,
    /// `(nk+n)/(nk+n−1)` when both containments verify.
    pub bound: Option<Rational>,
    pub flags: Vec<String>,
}

impl GhmReport {
    pub fn hypotheses_verified(&self) -> bool {
        self.first.holds && self.second.holds && self.rees.iter().all(|&(_, ok)| ok)
    }
}

/// Upper bound `ρ(I) ≤ (nk+n)/(nk+n−1)` from `P I^(n) ⊆ I^n` and
/// `I^(n) ⊆ P^k I^(n−1)`, with the Rees consequences checked to `a ≤ 2n + 1`.
pub fn gen_ghm_bound(ideal: &MonomialIdeal, n: u32, p: &MonomialIdeal, k: u32) -> Result<GhmReport> {
    gen_ghm_bound_with(ideal, n, p, k, 2 * n + 1)
}

/// As [`gen_ghm_bound`] with an explicit range for the Rees consequences.
///
/// The symbolic Rees algebra being generated by `It` and `I^(n)t^n` is an
/// assumption: only its consequences up to `a_max` are verified, and the
/// report carries a flag saying so.
pub fn gen_ghm_bound_with(ideal: &MonomialIdeal, n: u32, p: &MonomialIdeal, k: u32, a_max: u32) -> Result<GhmReport> {
    ideal.require_squarefree_proper()?;
    if n < 2 || k == 0 {
        return Err(Error::Precondition("gen-GHM needs n ≥ 2 and k ≥ 1".into()));
    }
    if p.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch);
    }
    let sym_n = symbolic_power(ideal, n)?;
    let first = ideal_containment(&p.product(&sym_n)?, &ideal.power(n)?)?;
    let second = ideal_containment(&sym_n, &p.power(k)?.product(&ideal.power(n - 1)?)?)?;

    let mut rees = Vec::new();
    for a in 1..=a_max {
        let mut rhs = ideal.power(a)?;
        for q in 1..=a / n {
            let mut term = sym_n.power(q)?;
            if a > q * n {
                term = term.product(&ideal.power(a - q * n)?)?;
            }
            rhs = rhs.sum(&term)?;
        }
        rees.push((a, symbolic_power(ideal, a)?.equals(&rhs)?));
    }

    let mut flags = vec![format!(
        "symbolic Rees algebra generated by It and I^({n})t^{n}: assumed, consequences checked for a ≤ {a_max}"
    )];
    let ok = first.holds && second.holds;
    let bound = ok.then(|| ratio((n * k + n) as i64, (n * k + n - 1) as i64));
    let conclusion_holds = if ok {
        let s = n * k + n;
        Some(check_containment(ideal, s, s - 1, false)?.holds)
    } else {
        flags.push("a containment hypothesis failed; no bound".into());
        None
    };
    if rees.iter().any(|&(_, eq)| !eq) {
        flags.push("a Rees consequence failed; the bound is not supported".into());
    }
    Ok(GhmReport { n, k, first, second, rees, conclusion_holds, bound, flags })
}

/// Outcome of checking `J_n(G)^b ⊆ I(G)^t`, `t = bn + ⌈(b − k_n(G))/2⌉`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tech3Verdict {
    pub n: usize,
    pub k: usize,
    pub b: u32,
    pub t: u32,
    pub holds: bool,
    pub witness: Option<Monomial>,
}

pub fn tech3_containment_check(g: &Graph, n: usize, b: u32) -> Result<Tech3Verdict> {
    let class = edge_class_of(g)?;
    if class.halves != [n] {
        return Err(Error::Precondition(format!("expected induced odd cycles of length {} only", 2 * n + 1)));
    }
    let k = invariants::k_n(g, n)?;
    if b as usize <= k {
        return Err(Error::Precondition(format!("b = {b} must exceed k_n(G) = {k}")));
    }
    let t = b * n as u32 + (b - k as u32).div_ceil(2);
    let i = g.edge_ideal()?;
    let jb = jn_ideal(g, n)?.power(b)?;
    let budget = node_budget();
    for m in jb.generators() {
        if i.power_certificate(m, t, budget)?.is_none() {
            return Ok(Tech3Verdict { n, k, b, t, holds: false, witness: Some(m.clone()) });
        }
    }
    Ok(Tech3Verdict { n, k, b, t, holds: true, witness: None })
}

/// Transport of sweep failures from a smaller ideal into a larger one.
#[derive(Clone, Debug, Default)]
pub struct LiftVerdict {
    /// Failures `(s, t)` with `s ≥ t` found on the smaller ideal.
    pub failures: usize,
    /// How many of them lifted to verified failures of the larger ideal.
    pub lifted: usize,
    /// Lifted witnesses, in the larger ring.
    pub witnesses: Vec<(u32, u32, Monomial)>,
    /// Failures whose lift did not verify.
    pub unlifted: Vec<(u32, u32)>,
    /// Sweep cells that hit the search budget.
    pub truncated: Vec<(u32, u32)>,
}

impl LiftVerdict {
    pub fn all_lift(&self) -> bool {
        self.unlifted.is_empty()
    }
}

fn is_failure(ideal: &MonomialIdeal, s: u32, t: u32, w: &Monomial) -> Result<bool> {
    Ok(SymbolicPowerSpec::new(ideal, s)?.member(w)? && !ideal.member_of_power(w, t)?)
}

/// Sweep `small`, map each failure witness with `lift`, and re-verify it
/// as a failure of `large` at the same `(s, t)`.
fn transport(
    small: &MonomialIdeal,
    large: &MonomialIdeal,
    cfg: SweepConfig,
    lift: impl Fn(u32, &Monomial) -> Monomial,
) -> Result<LiftVerdict> {
    let swept = sweep(small, cfg)?;
    let mut v = LiftVerdict { truncated: swept.truncated(), ..LiftVerdict::default() };
    for c in swept.failures() {
        let w = c.witness.as_ref().expect("failing cells carry witnesses");
        v.failures += 1;
        let lifted = lift(c.s, w);
        if is_failure(large, c.s, c.t, &lifted)? {
            v.lifted += 1;
            v.witnesses.push((c.s, c.t, lifted));
        } else {
            v.unlifted.push((c.s, c.t));
        }
    }
    Ok(v)
}

/// Lifts for the induced subgraph `G[A]`: edge ideal failures by renaming,
/// cover ideal failures as `w · x_U^s` with `U = V(G) ∖ A`.
#[derive(Clone, Debug)]
pub struct RestrictionVerdict {
    pub edge: LiftVerdict,
    pub cover: LiftVerdict,
}

pub fn restriction_monotonicity_check(g: &Graph, subset: &[usize], cfg: SweepConfig) -> Result<RestrictionVerdict> {
    let h = g.induced_subgraph(subset)?;
    if h.num_edges() == 0 {
        return Err(Error::Precondition("the subset induces no edges".into()));
    }
    let h = drop_isolated(&h)?;
    let mapping = h.vertices().mapping_into(g.vertices())?;
    let n = g.num_vertices();
    let outside = outside_monomial(g.vertices(), &mapping);

    let (ig, ih) = (g.edge_ideal()?, h.edge_ideal()?);
    let edge = transport(&ih, &ig, cfg, |_, w| w.reindex(&mapping, n))?;
    let (jg, jh) = (g.cover_ideal()?, h.cover_ideal()?);
    let cover = transport(&jh, &jg, cfg, |s, w| w.reindex(&mapping, n).mul(&outside.pow(s)))?;
    Ok(RestrictionVerdict { edge, cover })
}

/// `J(H') ↪ J(H)` for the induced subhypergraph on `subset`, lifting
/// `w ↦ w · x_U^s`.
pub fn hypergraph_restriction_check(h: &Hypergraph, subset: &[usize], cfg: SweepConfig) -> Result<LiftVerdict> {
    let sub = h.induced(subset)?;
    if sub.edges().is_empty() {
        return Err(Error::Precondition("the subset contains no edge".into()));
    }
    let used: Vec<usize> = {
        let mut u: Vec<usize> = sub.edges().iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    };
    let sub = sub.induced(&used)?;
    let mapping = sub.vertices().mapping_into(h.vertices())?;
    let n = h.num_vertices();
    let outside = outside_monomial(h.vertices(), &mapping);
    transport(&sub.cover_ideal()?, &h.cover_ideal()?, cfg, |s, w| w.reindex(&mapping, n).mul(&outside.pow(s)))
}

fn drop_isolated(h: &Graph) -> Result<Graph> {
    let keep: Vec<usize> = (0..h.num_vertices()).filter(|&v| h.degree(v) > 0).collect();
    h.induced_subgraph(&keep)
}

fn outside_monomial(vars: &VariableSet, mapping: &[usize]) -> Monomial {
    let n = vars.len();
    Monomial::from_support(n, (0..n).filter(|v| !mapping.contains(v)))
}

/// Lifts failures of `I : m` to failures of `I` as `w · m^s`.
pub fn colon_monotonicity_check(ideal: &MonomialIdeal, m: &Monomial, cfg: SweepConfig) -> Result<LiftVerdict> {
    ideal.require_squarefree_proper()?;
    if !m.is_squarefree() || ideal.contains_monomial(m)? {
        return Err(Error::Precondition("m must be squarefree and outside I".into()));
    }
    let colon = ideal.colon(m)?;
    if !colon.is_proper_nonzero() {
        return Err(Error::Precondition("I : m is not proper".into()));
    }
    transport(&colon, ideal, cfg, |s, w| w.mul(&m.pow(s)))
}

#[derive(Clone, Debug)]
pub struct IntersectionVerdict {
    /// `(I∩J)^t = I^t ∩ J^t` and `(I∩J)^(s) = I^(s) ∩ J^(s)` for `s, t ≤ 3`.
    pub distributive: bool,
    pub failures: usize,
    /// Failures of `I ∩ J` at `(s, t)` that are also failures of `I` or `J`.
    pub explained: usize,
    pub unexplained: Vec<(u32, u32)>,
}

pub fn intersection_rule_check(i: &MonomialIdeal, j: &MonomialIdeal, cfg: SweepConfig) -> Result<IntersectionVerdict> {
    let ij = i.intersect(j)?;
    ij.require_squarefree_proper()?;
    let mut distributive = true;
    for e in 1..=3 {
        distributive &= ij.power(e)?.equals(&i.power(e)?.intersect(&j.power(e)?)?)?;
        distributive &= symbolic_power(&ij, e)?.equals(&symbolic_power(i, e)?.intersect(&symbolic_power(j, e)?)?)?;
    }
    let mut v = IntersectionVerdict { distributive, failures: 0, explained: 0, unexplained: Vec::new() };
    if !distributive {
        return Ok(v);
    }
    for c in sweep(&ij, cfg)?.failures() {
        v.failures += 1;
        let fails_i = !check_containment(i, c.s, c.t, false)?.holds;
        if fails_i || !check_containment(j, c.s, c.t, false)?.holds {
            v.explained += 1;
        } else {
            v.unexplained.push((c.s, c.t));
        }
    }
    Ok(v)
}

#[derive(Clone, Debug)]
pub enum JoinCase {
    /// `K_m^c * H` with `H` bipartite with at least one edge.
    Bipartite { m: usize, h: Graph },
    /// `K_{n_1, …, n_k}` with `k ≥ 3`.
    Multipartite { parts: Vec<usize> },
}

#[derive(Clone, Debug, Serialize)]
pub struct JoinVerdict {
    #[serde(with = "rational")]
    pub rho: Rational,
    pub alpha: u32,
    #[serde(with = "rational")]
    pub alpha_hat: Rational,
    /// `ρ = α/α̂`.
    pub equality: bool,
    /// The combinatorial side of the characterization.
    pub condition: bool,
    /// The closed forms for `α` and `α̂` agree with the computed values.
    pub formulas_agree: bool,
}

impl JoinVerdict {
    pub fn consistent(&self) -> bool {
        self.equality == self.condition && self.formulas_agree
    }
}

/// Compute `ρ(J(G))` by dispatch and `α/α̂` directly, and compare equality
/// against the condition `m = α(J(H)) = n/2` (resp. equal part sizes).
pub fn join_characterization_check(case: &JoinCase) -> Result<JoinVerdict> {
    let (g, condition, expected) = match case {
        JoinCase::Bipartite { m, h } => {
            if *m == 0 || h.num_edges() == 0 || !invariants::is_bipartite(h) {
                return Err(Error::Precondition("need m ≥ 1 and H bipartite with an edge".into()));
            }
            let h = drop_isolated(h)?;
            let n = h.num_vertices();
            let aj = h.cover_ideal()?.alpha()? as usize;
            let empty = Graph::new(VariableSet::numbered("y", *m), Vec::new())?;
            let g = empty.join(&h.rename(|s| format!("h_{s}"))?)?;
            let alpha = n.min(aj + m);
            let alpha_hat = int((aj + m) as i64).min(int(n as i64)).min(ratio((n + m) as i64, 2));
            (g, *m == aj && 2 * m == n, (alpha as u32, alpha_hat))
        }
        JoinCase::Multipartite { parts } => {
            if parts.len() < 3 || parts.contains(&0) {
                return Err(Error::Precondition("need at least three non-empty parts".into()));
            }
            let g = Graph::complete_multipartite(parts)?;
            let total: usize = parts.iter().sum();
            let largest = *parts.iter().max().unwrap();
            // covers omit one part; optimal fractional covers put 1/2
            // everywhere or weight 1 off a largest part
            let alpha = (total - largest) as u32;
            let alpha_hat = int(alpha as i64).min(ratio(total as i64, 2));
            (g, parts.iter().all(|&p| p == parts[0]), (alpha, alpha_hat))
        }
    };
    let report = exact_cover_resurgence(&g, &ReportConfig::without_sweep())?;
    let rho = report.rho.exact.ok_or_else(|| Error::Inconsistent("join dispatch was not exact".into()))?;
    if !report.rho.has_tag(Tag::ChiEqualsOmegaCorollary) && !report.rho.has_tag(Tag::CompleteMultipartiteTheorem) {
        return Err(Error::Inconsistent("join dispatch missed the chi = omega route".into()));
    }
    let alpha = g.cover_ideal()?.alpha()?;
    let alpha_hat = cover_waldschmidt(&g)?.exact.expect("cover Waldschmidt constant is exact");
    let equality = rho == int(alpha as i64) / alpha_hat;
    let formulas_agree = alpha == expected.0 && alpha_hat == expected.1;
    Ok(JoinVerdict { rho, alpha, alpha_hat, equality, condition, formulas_agree })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSumVerdict {
    /// Exponents `e ≤ max` with `J(G)^e = J(G_1)^e ∩ J(G_2)^e`.
    pub powers: Vec<(u32, bool)>,
    /// Same for symbolic powers.
    pub symbolic: Vec<(u32, bool)>,
}

impl CliqueSumVerdict {
    pub fn holds(&self) -> bool {
        self.powers.iter().chain(&self.symbolic).all(|&(_, ok)| ok)
    }
}

/// `J(G)^e = J(G_1)^e ∩ J(G_2)^e` and the symbolic analogue, where
/// `G_i = G[V_i]` and `V_1 ∩ V_2` is a clique separating `G`.
pub fn clique_sum_identity_check(g: &Graph, v1: &[usize], v2: &[usize], max: u32) -> Result<CliqueSumVerdict> {
    let shared: Vec<usize> = v1.iter().copied().filter(|v| v2.contains(v)).collect();
    let clique = shared.iter().all(|&a| shared.iter().all(|&b| a == b || g.has_edge(a, b)));
    let covers_all = (0..g.num_vertices()).all(|v| v1.contains(&v) || v2.contains(&v));
    let crossing = g.edges().iter().any(|&(a, b)| {
        let (a1, b1) = (v1.contains(&a), v1.contains(&b));
        let (a2, b2) = (v2.contains(&a), v2.contains(&b));
        !(a1 && b1) && !(a2 && b2)
    });
    if !clique || !covers_all || crossing {
        return Err(Error::Precondition("V_1, V_2 do not describe a clique-sum".into()));
    }
    let jg = g.cover_ideal()?;
    let j1 = g.induced_subgraph(v1)?.cover_ideal()?.embed_by_name(g.vertices())?;
    let j2 = g.induced_subgraph(v2)?.cover_ideal()?.embed_by_name(g.vertices())?;
    let mut v = CliqueSumVerdict { powers: Vec::new(), symbolic: Vec::new() };
    for e in 1..=max {
        v.powers.push((e, jg.power(e)?.equals(&j1.power(e)?.intersect(&j2.power(e)?)?)?));
        let sym = symbolic_power(&jg, e)?;
        let s1 = symbolic_power(&j1, e)?;
        let s2 = symbolic_power(&j2, e)?;
        v.symbolic.push((e, sym.equals(&s1.intersect(&s2)?)?));
    }
    Ok(v)
}
