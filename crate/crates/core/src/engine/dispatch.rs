//! Exact resurgence by graph class, with interval fallbacks.

use super::bounds;
use super::combine::max_rule;
use super::report::{Entries, ResurgenceReport, Role, Tag, ValueReport};
use super::sweep::{sweep, SweepConfig};
use crate::error::Result;
use crate::graph::{classify, invariants, Graph, GraphClassification, Hypergraph};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::rational::{self, int, ratio, Rational};
use crate::symbolic::{cover_waldschmidt, edge_class_waldschmidt, generic_waldschmidt};

#[derive(Clone, Copy, Debug)]
pub struct ReportConfig {
    /// Sweep box for witness lower bounds; `None` skips the sweep.
    pub sweep: Option<SweepConfig>,
    /// Samples `s ≤ waldschmidt_s_max` for generic Waldschmidt estimates.
    pub waldschmidt_s_max: u32,
}

impl Default for ReportConfig {
    /// A `6 × 5` sweep: enough to expose the small failures of most graphs
    /// on a dozen vertices without the cost of the full default box.
    fn default() -> Self {
        ReportConfig { sweep: Some(SweepConfig::new(6, 5)), waldschmidt_s_max: 4 }
    }
}

impl ReportConfig {
    pub fn without_sweep() -> Self {
        ReportConfig { sweep: None, ..Self::default() }
    }

    pub fn with_sweep(sweep: SweepConfig) -> Self {
        ReportConfig { sweep: Some(sweep), ..Self::default() }
    }
}

fn fmt(r: Rational) -> String {
    rational::format(&r)
}

/// Finish both values, feeding `ρ_a ≤ ρ` across in each direction.
pub(crate) fn finish_pair(mut rho: Entries, mut rho_a: Entries) -> Result<(ValueReport, ValueReport)> {
    let pre_a = rho_a.clone().finish()?;
    if let Some(src) = pre_a.provenance.iter().find(|p| matches!(p.role, Role::Exact | Role::Lower) && p.value == pre_a.lower) {
        rho.push(Role::Lower, pre_a.lower, src.tag, format!("ρ ≥ ρ_a; {}", src.inputs));
    }
    let rho = rho.finish()?;
    if let Some(src) = rho.provenance.iter().find(|p| matches!(p.role, Role::Exact | Role::Upper) && p.value == rho.upper) {
        rho_a.push(Role::Upper, rho.upper, src.tag, format!("ρ_a ≤ ρ; {}", src.inputs));
    }
    Ok((rho, rho_a.finish()?))
}

/// Push the first route as exact and the rest as corroborating.
fn push_routes(entries: &mut Entries, routes: &[(Rational, Tag, String)]) {
    for (i, (v, tag, inputs)) in routes.iter().enumerate() {
        let role = if i == 0 { Role::Exact } else { Role::Corroborates };
        entries.push(role, *v, *tag, inputs.clone());
    }
}

/// `ρ(J(G))` and `ρ_a(J(G))`.
///
/// Exact routes, in order: bipartite, odd cycle, complete multipartite,
/// `χ = ω`, clique-sum over atoms, cactus. Every route that applies is
/// recorded and they must agree. The chromatic, clique, independence and
/// `α/α̂` bounds are always attached; the sweep bounds `ρ` from below.
/// Disconnected graphs use the component max rule.
pub fn exact_cover_resurgence(g: &Graph, cfg: &ReportConfig) -> Result<ResurgenceReport> {
    g.require_no_isolated()?;
    let j = g.cover_ideal()?;
    let description = format!("J(G), G on {} vertices with {} edges", g.num_vertices(), g.num_edges());
    if !g.is_connected() {
        let inner = ReportConfig { sweep: cfg.sweep, ..*cfg };
        let parts = g
            .components()
            .iter()
            .map(|c| exact_cover_resurgence(&g.induced_subgraph(c)?, &inner))
            .collect::<Result<Vec<_>>>()?;
        return max_rule(&parts, j, Tag::ComponentRule, description);
    }

    let class = classify(g)?;
    let mut rho_routes: Vec<(Rational, Tag, String)> = Vec::new();
    let mut rho_a_routes: Vec<(Rational, Tag, String)> = Vec::new();
    let mut both = |v: Rational, tag: Tag, inputs: String| {
        rho_routes.push((v, tag, inputs.clone()));
        rho_a_routes.push((v, tag, inputs));
    };
    if class.bipartite {
        both(int(1), Tag::BipartiteTheorem, "G bipartite".into());
    }
    if let Some(len) = class.smallest_odd_cycle.filter(|_| crate::graph::classify::is_odd_cycle(g)) {
        both(ratio(len as i64 + 1, len as i64), Tag::OddCycleTheorem, format!("G = C_{len}"));
    }
    if let Some(parts) = class.multipartite_parts.as_ref().filter(|p| p.len() >= 3) {
        let k = parts.len() as i64;
        both(int(2) - ratio(2, k), Tag::CompleteMultipartiteTheorem, format!("parts {parts:?}"));
    }
    if class.chi_equals_omega {
        both(int(2) - ratio(2, class.omega as i64), Tag::ChiEqualsOmegaCorollary, format!("chi = omega = {}", class.omega));
    }
    let mut rho = Entries::default();
    let mut rho_a = Entries::default();
    let atoms = &class.certificates.atoms;
    if atoms.len() > 1 {
        let inner = ReportConfig::without_sweep();
        let reports = atoms
            .iter()
            .map(|a| exact_cover_resurgence(&g.induced_subgraph(a)?, &inner))
            .collect::<Result<Vec<_>>>()?;
        let inputs = format!("{} clique-separator atoms", atoms.len());
        let rho_parts: Vec<&ValueReport> = reports.iter().map(|r| &r.rho).collect();
        let rho_a_parts: Vec<&ValueReport> = reports.iter().map(|r| &r.rho_a).collect();
        match max_of(&rho_parts) {
            MaxOf::Exact(v) => rho_routes.push((v, Tag::CliqueSumTheorem, inputs.clone())),
            MaxOf::Interval(lo, hi) => {
                rho.push(Role::Lower, lo, Tag::CliqueSumTheorem, inputs.clone());
                rho.push(Role::Upper, hi, Tag::CliqueSumTheorem, inputs.clone());
            }
        }
        match max_of(&rho_a_parts) {
            MaxOf::Exact(v) => rho_a_routes.push((v, Tag::CliqueSumTheorem, inputs)),
            MaxOf::Interval(lo, hi) => {
                rho_a.push(Role::Lower, lo, Tag::CliqueSumTheorem, inputs.clone());
                rho_a.push(Role::Upper, hi, Tag::CliqueSumTheorem, inputs);
            }
        }
    }
    if class.cactus && !class.bipartite {
        let n = class.smallest_odd_cycle.expect("non-bipartite graphs have an odd cycle") as i64;
        let v = ratio(n + 1, n);
        let inputs = format!("smallest odd cycle C_{n}");
        rho_routes.push((v, Tag::CactusTheorem, inputs.clone()));
        rho_a_routes.push((v, Tag::CactusTheorem, inputs));
    }
    push_routes(&mut rho, &rho_routes);
    push_routes(&mut rho_a, &rho_a_routes);

    let n = g.num_vertices() as i64;
    let chi_bound = int(2) - ratio(2, class.chi as i64);
    let omega_bound = int(2) - ratio(2, class.omega as i64);
    let indep_bound = int(2) - ratio(2 * class.independence as i64, n);
    let walds = cover_waldschmidt(g)?;
    let alpha_j = j.alpha()?;
    let alpha_hat = walds.exact.expect("cover Waldschmidt constant is exact");
    let alpha_bound = int(alpha_j as i64) / alpha_hat;
    for e in [&mut rho, &mut rho_a] {
        e.push(Role::Upper, chi_bound, Tag::ChromaticUpperBound, format!("chi = {}", class.chi));
        e.push(Role::Lower, omega_bound, Tag::CliqueLowerBound, format!("omega = {}", class.omega));
        e.push(Role::Lower, indep_bound, Tag::IndependenceLowerBound, format!("alpha(G) = {}, n = {n}", class.independence));
        e.push(
            Role::Lower,
            alpha_bound,
            Tag::AlphaOverWaldschmidt,
            format!("alpha(J) = {alpha_j}, alpha-hat = {}", fmt(alpha_hat)),
        );
    }
    let swept = match cfg.sweep {
        Some(c) => {
            let s = sweep(&j, c)?;
            let inputs = match s.best_failure() {
                Some(f) => format!("J^({}) ⊄ J^{} within s ≤ {}, t ≤ {}", f.s, f.t, c.s_max, c.t_max),
                None => format!("no failure with s > t within s ≤ {}, t ≤ {}", c.s_max, c.t_max),
            };
            rho.push(Role::Lower, s.lower_bound(), Tag::SweepWitness, inputs);
            Some(s)
        }
        None => None,
    };
    let (rho, rho_a) = finish_pair(rho, rho_a)?;
    let mut report = ResurgenceReport::new(description, j, rho, rho_a);
    if let Some(s) = &swept {
        report.absorb_sweep(s);
    }
    record_class(&mut report, &class);
    report.set_invariant("alpha_J", alpha_j);
    report.set_invariant("alpha_hat", fmt(alpha_hat));
    Ok(report)
}

fn record_class(report: &mut ResurgenceReport, class: &GraphClassification) {
    report.set_invariant("kind", &class.kind);
    report.set_invariant("n", class.num_vertices);
    report.set_invariant("chi", class.chi);
    report.set_invariant("omega", class.omega);
    report.set_invariant("independence", class.independence);
    if let Some(c) = class.smallest_odd_cycle {
        report.set_invariant("smallest_odd_cycle", c);
    }
}

pub(crate) enum MaxOf {
    Exact(Rational),
    Interval(Rational, Rational),
}

/// Max rule over parts: exact if every part is exact, else the interval
/// of maxima of lower and upper ends.
pub(crate) fn max_of(parts: &[&ValueReport]) -> MaxOf {
    let lo = parts.iter().map(|v| v.lower).max().expect("at least one part");
    let hi = parts.iter().map(|v| v.upper).max().expect("at least one part");
    if parts.iter().all(|v| v.is_exact()) {
        MaxOf::Exact(parts.iter().filter_map(|v| v.exact).max().expect("at least one part"))
    } else {
        MaxOf::Interval(lo, hi)
    }
}

/// `ρ(I(G))` and `ρ_a(I(G))`.
///
/// Bipartite graphs give 1. Clique-sums of bipartite graphs and odd cycles
/// get the exact `ρ_a`, and the exact `ρ` when one cycle length occurs and
/// `k_n(G)` is known. Otherwise `ρ` is bracketed by witnesses below and the
/// bound 2 from the literature above.
pub fn exact_edge_resurgence(g: &Graph, cfg: &ReportConfig) -> Result<ResurgenceReport> {
    g.require_no_isolated()?;
    let i = g.edge_ideal()?;
    let description = format!("I(G), G on {} vertices with {} edges", g.num_vertices(), g.num_edges());
    let mut rho = Entries::default();
    let mut rho_a = Entries::default();
    let mut flags = Vec::new();
    let mut lifted: Vec<(u32, u32, Monomial)> = Vec::new();
    let two = int(2);
    for e in [&mut rho, &mut rho_a] {
        e.push(Role::Upper, two, Tag::Literature, "only known general upper bound for edge ideals");
    }

    let classes: Vec<(Graph, GraphClassification)> = g
        .components()
        .iter()
        .map(|c| {
            let h = g.induced_subgraph(c)?;
            let class = classify(&h)?;
            Ok((h, class))
        })
        .collect::<Result<_>>()?;
    let odd: Vec<&(Graph, GraphClassification)> = classes.iter().filter(|(_, c)| !c.bipartite).collect();

    if odd.is_empty() {
        for e in [&mut rho, &mut rho_a] {
            e.push(Role::Exact, int(1), Tag::BipartiteTheorem, "G bipartite");
        }
    } else if classes.len() > 1 && odd.len() == 1 {
        // bipartite components have I^(s) = I^s and drop out of ρ
        let (h, _) = odd[0];
        let part = exact_edge_resurgence(h, &ReportConfig::without_sweep())?;
        let inputs = format!("bipartite components dropped; remaining component on {} vertices", h.num_vertices());
        match part.rho.exact {
            Some(v) => rho.push(Role::Exact, v, Tag::ComponentRule, inputs),
            None => {
                rho.push(Role::Lower, part.rho.lower, Tag::ComponentRule, inputs.clone());
                rho.push(Role::Upper, part.rho.upper, Tag::ComponentRule, inputs);
            }
        }
        rho_a.push(Role::Lower, part.rho_a.lower, Tag::RestrictionBound, "induced component");
        lifted.extend(lift_by_name(&part, &i)?);
    }

    let all_in_class = classes.iter().all(|(_, c)| c.edge_class.is_some());
    if !odd.is_empty() && all_in_class {
        let disjoint = classes.len() > 1;
        if disjoint {
            flags.push("disjoint union treated as a clique-sum along the empty clique".to_string());
        }
        let n1 = odd.iter().filter_map(|(_, c)| c.edge_class.as_ref().and_then(|e| e.n1())).min().expect("odd part") as i64;
        let v = ratio(2 * n1 + 2, 2 * n1 + 1);
        rho_a.push(Role::Exact, v, Tag::EdgeClassAsymptotic, format!("n_1 = {n1}"));
        let walds = if disjoint { None } else { Some(edge_class_waldschmidt(g)?) };
        if let Some(w) = walds {
            let a = int(i.alpha()? as i64) / w.exact.expect("edge-class Waldschmidt constant is exact");
            rho_a.push(Role::Lower, a, Tag::AlphaOverWaldschmidt, format!("alpha(I) = 2, alpha-hat = {}", fmt(w.exact.unwrap())));
        }
        // ρ needs a single cycle length over the odd components
        let mut halves: Vec<usize> =
            odd.iter().flat_map(|(_, c)| c.edge_class.as_ref().unwrap().halves.iter().copied()).collect();
        halves.sort_unstable();
        halves.dedup();
        let ks: Option<Vec<usize>> =
            odd.iter().map(|(_, c)| c.edge_class.as_ref().unwrap().k.first().copied().flatten()).collect();
        if halves.len() == 1 && (classes.len() == 1 || odd.len() > 1) {
            if let Some(ks) = ks {
                let n = halves[0] as i64;
                let k: i64 = ks.iter().sum::<usize>() as i64;
                let v = if k == 1 { ratio(2 * n + 2, 2 * n + 1) } else { ratio(k * n + k, k * n + 1) };
                rho.push(Role::Exact, v, Tag::EdgeClassResurgence, format!("n = {n}, k_n = {k}"));
            } else {
                flags.push("k_n(G) beyond the exact solver guard; ρ left as an interval".to_string());
            }
        }
    } else if !odd.is_empty() {
        let len = odd
            .iter()
            .filter_map(|(_, c)| c.smallest_odd_cycle)
            .min()
            .expect("non-bipartite components have odd cycles") as i64;
        let n = (len - 1) / 2;
        for e in [&mut rho, &mut rho_a] {
            e.push(Role::Lower, ratio(2 * n + 2, 2 * n + 1), Tag::RestrictionBound, format!("induced C_{len}"));
        }
        let est = generic_waldschmidt(&i, cfg.waldschmidt_s_max)?;
        let a = int(i.alpha()? as i64) / est.upper;
        rho_a.push(
            Role::Lower,
            a,
            Tag::AlphaOverWaldschmidt,
            format!("alpha(I) = 2, alpha-hat ≤ {} from s ≤ {}", fmt(est.upper), cfg.waldschmidt_s_max),
        );
    }

    // witness from odd cycles pairwise at distance ≥ 2
    let mut cycle_witness = None;
    if let Some(n) = single_half(&classes) {
        if let Ok((s, t, w)) = distant_cycle_witness(g, n) {
            if s > t {
                rho.push(Role::Lower, ratio(s as i64, t as i64), Tag::CycleWitness, format!("product of {} cycles", s as usize / (n + 1)));
                cycle_witness = Some((s, t, w));
            }
        }
    }

    let swept = match cfg.sweep {
        Some(c) => {
            let s = sweep(&i, c)?;
            rho.push(Role::Lower, s.lower_bound(), Tag::SweepWitness, format!("s ≤ {}, t ≤ {}", c.s_max, c.t_max));
            Some(s)
        }
        None => None,
    };
    let (rho, rho_a) = finish_pair(rho, rho_a)?;
    let mut report = ResurgenceReport::new(description, i, rho, rho_a);
    if let Some(s) = &swept {
        report.absorb_sweep(s);
    }
    for (s, t, w) in lifted.into_iter().chain(cycle_witness) {
        report.add_witness(s, t, w);
    }
    for f in flags {
        report.flag(f);
    }
    if classes.len() == 1 {
        record_class(&mut report, &classes[0].1);
        if let Some(ec) = &classes[0].1.edge_class {
            report.set_invariant("edge_class", ec);
        }
    } else {
        report.set_invariant("components", classes.len());
    }
    Ok(report)
}

/// The common half-length when every odd component has exactly one cycle length.
fn single_half(classes: &[(Graph, GraphClassification)]) -> Option<usize> {
    let mut halves = Vec::new();
    for (_, c) in classes.iter().filter(|(_, c)| !c.bipartite) {
        let ec = c.edge_class.as_ref()?;
        halves.extend(ec.halves.iter().copied());
    }
    halves.sort_unstable();
    halves.dedup();
    (halves.len() == 1).then(|| halves[0])
}

/// `u_{C_1} ⋯ u_{C_k} ∈ I(G)^(k(n+1)) ∖ I(G)^(kn+1)` for a largest family
/// of induced `(2n+1)`-cycles pairwise at distance at least 2. Returns
/// `(s, t, monomial)`.
pub fn distant_cycle_witness(g: &Graph, n: usize) -> Result<(u32, u32, Monomial)> {
    let cycles = invariants::induced_odd_cycles(g, Some(2 * n + 1));
    let m = cycles.len();
    let mut conflicts = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if g.subgraph_distance(&cycles[a], &cycles[b])?.is_some_and(|d| d <= 1) {
                conflicts.push((a, b));
            }
        }
    }
    if m == 0 {
        return Err(crate::Error::Precondition(format!("no induced cycle of length {}", 2 * n + 1)));
    }
    let conflict = Graph::new(crate::ideal::VariableSet::numbered("c", m), conflicts)?;
    let chosen = invariants::maximum_independent_set(&conflict)?;
    let k = chosen.len() as u32;
    let nv = g.num_vertices();
    let w = chosen.iter().fold(Monomial::one(nv), |acc, &c| acc.mul(&Monomial::from_support(nv, cycles[c].iter().copied())));
    Ok((k * (n as u32 + 1), k * n as u32 + 1, w))
}

/// Witnesses of a report on an induced subgraph, renamed into `target`'s ring.
fn lift_by_name(part: &ResurgenceReport, target: &crate::ideal::MonomialIdeal) -> Result<Vec<(u32, u32, Monomial)>> {
    let mapping = part.base().ambient().mapping_into(target.ambient())?;
    let n = target.ambient().len();
    Ok(part.raw_witnesses().iter().map(|(s, t, w)| (*s, *t, w.reindex(&mapping, n))).collect())
}

/// Report for any squarefree ideal, optionally the cover ideal of `hypergraph`.
///
/// Graph edge and cover ideals are recognised and dispatched. Otherwise
/// `ρ` and `ρ_a` lie between `α/α̂` (with `α̂` sampled) and the big height;
/// for hypergraph cover ideals `ρ_a ≤ h − 1/χ(H)` also applies.
pub fn ideal_resurgence(
    ideal: &MonomialIdeal,
    hypergraph: Option<&Hypergraph>,
    cfg: &ReportConfig,
) -> Result<ResurgenceReport> {
    ideal.require_squarefree_proper()?;
    match hypergraph {
        Some(hg) if hg.edges().iter().all(|e| e.len() == 2) => {
            let g = Graph::new(hg.vertices().clone(), hg.edges().iter().map(|e| (e[0], e[1])).collect::<Vec<_>>())?;
            if g.cover_ideal()?.equals(ideal)? {
                return exact_cover_resurgence(&g, cfg);
            }
        }
        Some(_) => {}
        None => {
            if let Some(report) = super::combine::recognise_graph_ideal(ideal, cfg)? {
                return Ok(report);
            }
        }
    }
    let mut rho = Entries::default();
    let mut rho_a = Entries::default();
    let h = ideal.big_height()? as i64;
    for e in [&mut rho, &mut rho_a] {
        e.push(Role::Upper, int(h), Tag::BigHeightBound, format!("big height {h}"));
    }
    let est = generic_waldschmidt(ideal, cfg.waldschmidt_s_max)?;
    let alpha = ideal.alpha()?;
    rho_a.push(
        Role::Lower,
        int(alpha as i64) / est.upper,
        Tag::AlphaOverWaldschmidt,
        format!("alpha = {alpha}, alpha-hat ≤ {} from s ≤ {}", fmt(est.upper), cfg.waldschmidt_s_max),
    );
    if let Some(hg) = hypergraph {
        if !hg.cover_ideal()?.equals(ideal)? {
            return Err(crate::Error::Precondition("ideal is not the cover ideal of the hypergraph".into()));
        }
        let chi = hg.chromatic_number()?;
        rho_a.push(Role::Upper, bounds::hypergraph_rho_a_upper(hg)?, Tag::HypergraphBound, format!("h = {h}, chi = {chi}"));
    }
    let swept = match cfg.sweep {
        Some(c) => {
            let s = sweep(ideal, c)?;
            rho.push(Role::Lower, s.lower_bound(), Tag::SweepWitness, format!("s ≤ {}, t ≤ {}", c.s_max, c.t_max));
            Some(s)
        }
        None => None,
    };
    let (rho, rho_a) = finish_pair(rho, rho_a)?;
    let description = format!("ideal with {} generators in {} variables", ideal.num_generators(), ideal.ambient().len());
    let mut report = ResurgenceReport::new(description, ideal.clone(), rho, rho_a);
    if let Some(s) = &swept {
        report.absorb_sweep(s);
    }
    report.set_invariant("alpha", alpha);
    report.set_invariant("big_height", h);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    fn quick() -> ReportConfig {
        ReportConfig::with_sweep(SweepConfig::new(4, 4))
    }

    #[test]
    fn odd_cycles_cover() {
        for (n, v) in [(3, ratio(4, 3)), (5, ratio(6, 5)), (7, ratio(8, 7))] {
            let r = exact_cover_resurgence(&Graph::cycle(n).unwrap(), &quick()).unwrap();
            assert_eq!(r.rho.exact, Some(v));
            assert_eq!(r.rho_a.exact, Some(v));
            assert_eq!(r.rho.primary_tag(), Some(Tag::OddCycleTheorem));
            assert!(r.verify().unwrap());
        }
    }

    #[test]
    fn cover_classes() {
        let r = exact_cover_resurgence(&builtin_graph("K222").unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(4, 3)));
        assert_eq!(r.rho.primary_tag(), Some(Tag::CompleteMultipartiteTheorem));
        let r = exact_cover_resurgence(&builtin_graph("bowtie").unwrap(), &quick()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(4, 3)));
        assert!(r.rho.has_tag(Tag::CliqueSumTheorem) && r.rho.has_tag(Tag::CactusTheorem));
        let r = exact_cover_resurgence(&builtin_graph("c5-pendant").unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(6, 5)));
        let r = exact_cover_resurgence(&Graph::cycle(6).unwrap(), &quick()).unwrap();
        assert_eq!(r.rho.exact, Some(int(1)));
        assert_eq!(r.rho.primary_tag(), Some(Tag::BipartiteTheorem));
    }

    #[test]
    fn cover_components() {
        let g = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(5).unwrap().rename(|s| format!("y{s}")).unwrap()).unwrap();
        let r = exact_cover_resurgence(&g, &quick()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(4, 3)));
        assert_eq!(r.rho.primary_tag(), Some(Tag::ComponentRule));
        assert!(r.verify().unwrap());
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn cover_interval_for_petersen_like() {
        // Petersen: χ = 3, ω = 2, not a cactus, no clique separator
        let r = exact_cover_resurgence(&builtin_graph("Petersen").unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert!(r.rho.upper == ratio(4, 3));
        assert!(r.rho.lower >= ratio(6, 5));
    }

    #[test]
    fn edge_examples() {
        let r = exact_edge_resurgence(&Graph::cycle(5).unwrap(), &quick()).unwrap();
        assert_eq!((r.rho.exact, r.rho_a.exact), (Some(ratio(6, 5)), Some(ratio(6, 5))));
        let r = exact_edge_resurgence(&Graph::cycle(6).unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert_eq!(r.rho.exact, Some(int(1)));
        let r = exact_edge_resurgence(&builtin_graph("two-triangles-d2").unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert_eq!((r.rho.exact, r.rho_a.exact), (Some(ratio(4, 3)), Some(ratio(4, 3))));
        assert!(r.raw_witnesses().iter().any(|(s, t, _)| (*s, *t) == (4, 3)));
        assert!(r.verify().unwrap());
        let r = exact_edge_resurgence(&builtin_graph("three-triangles-d2").unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert_eq!((r.rho.exact, r.rho_a.exact), (Some(ratio(3, 2)), Some(ratio(4, 3))));
    }

    #[test]
    fn edge_outside_class() {
        let r = exact_edge_resurgence(&Graph::complete(4).unwrap(), &ReportConfig::without_sweep()).unwrap();
        assert!(r.rho.exact.is_none());
        assert!(r.rho_a.lower >= ratio(4, 3));
        assert_eq!(r.rho.upper, int(2));
        assert!(r.rho.has_tag(Tag::Literature));
    }

    #[test]
    fn generic_ideals() {
        let h = Hypergraph::numbered(5, &[&[1, 2, 3], &[3, 4, 5], &[5, 1, 2]]).unwrap();
        let j = h.cover_ideal().unwrap();
        let r = ideal_resurgence(&j, Some(&h), &quick()).unwrap();
        assert_eq!(r.rho_a.upper, ratio(5, 2));
        assert!(r.rho_a.has_tag(Tag::HypergraphBound));
        assert!(r.verify().unwrap());
        // recognised as J(C5)
        let r = ideal_resurgence(&Graph::cycle(5).unwrap().cover_ideal().unwrap(), None, &quick()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(6, 5)));
    }

    #[test]
    fn edge_disjoint_triangles() {
        let g = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap().rename(|s| format!("y{s}")).unwrap()).unwrap();
        let r = exact_edge_resurgence(&g, &ReportConfig::without_sweep()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(4, 3)));
        assert!(r.flags.iter().any(|f| f.contains("empty clique")));
        let with_tree = Graph::cycle(5).unwrap().disjoint_union(&Graph::path(3).unwrap().rename(|s| format!("p{s}")).unwrap()).unwrap();
        let r = exact_edge_resurgence(&with_tree, &ReportConfig::without_sweep()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(6, 5)));
        assert_eq!(r.rho.primary_tag(), Some(Tag::ComponentRule));
    }
}
