use proptest::prelude::*;

use resurgence::engine::checks::{colon_monotonicity_check, intersection_rule_check};
use resurgence::engine::{
    check_containment, exact_cover_resurgence, exact_edge_resurgence, sweep, ReportConfig, SweepConfig,
};
use resurgence::graph::format::{parse_graph, write_graph};
use resurgence::rational::{self, ratio};
use resurgence::symbolic::{symbolic_power_with, SymbolicEngine};
use resurgence::{Graph, Monomial, MonomialIdeal, VariableSet};

/// Graphs on up to six vertices with isolated vertices dropped.
fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_filter_map("no edges", move |mask| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(&e, _)| e).collect();
            if edges.is_empty() {
                return None;
            }
            let g = Graph::new(VariableSet::numbered("x", n), edges).ok()?;
            let used: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
            g.induced_subgraph(&used).ok()
        })
    })
}

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn reports_reverify_and_bounds_are_ordered(g in small_graph()) {
        let conf = ReportConfig::with_sweep(SweepConfig::new(4, 3));
        for report in [exact_cover_resurgence(&g, &conf).unwrap(), exact_edge_resurgence(&g, &conf).unwrap()] {
            prop_assert!(report.verify().unwrap());
            for v in [&report.rho, &report.rho_a] {
                prop_assert!(v.lower <= v.upper);
                prop_assert!(v.lower >= ratio(1, 1));
                if let Some(e) = v.exact {
                    prop_assert!(v.lower == e && v.upper == e);
                }
            }
            prop_assert!(report.rho_a.lower <= report.rho.upper);
            // each witness is a failure s/t, so ρ is at least s/t
            for w in &report.witnesses {
                prop_assert!(ratio(w.s as i64, w.t as i64) <= report.rho.upper);
            }
        }
    }

    #[test]
    fn sweep_is_monotone(g in small_graph()) {
        let r = sweep(&g.cover_ideal().unwrap(), SweepConfig::new(5, 4)).unwrap();
        for c in &r.cells {
            if c.holds == Some(true) {
                if let Some(next) = r.cell(c.s + 1, c.t) {
                    prop_assert_eq!(next.holds, Some(true));
                }
                if c.t > 1 {
                    prop_assert_eq!(r.cell(c.s, c.t - 1).unwrap().holds, Some(true));
                }
            }
        }
        prop_assert!(r.lower_bound() >= ratio(1, 1));
    }

    #[test]
    fn sweep_witnesses_verify(g in small_graph()) {
        let i = g.edge_ideal().unwrap();
        let r = sweep(&i, SweepConfig::new(4, 4)).unwrap();
        for c in r.failures() {
            let w = c.witness.as_ref().unwrap();
            let sym = symbolic_power_with(&i, c.s, SymbolicEngine::Intersection).unwrap();
            prop_assert!(sym.contains_monomial(w).unwrap());
            prop_assert!(!i.member_of_power(w, c.t).unwrap());
        }
    }

    #[test]
    fn symbolic_engines_agree(g in small_graph(), s in 1u32..=3) {
        for i in [g.cover_ideal().unwrap(), g.edge_ideal().unwrap()] {
            let a = symbolic_power_with(&i, s, SymbolicEngine::Enumeration).unwrap();
            let b = symbolic_power_with(&i, s, SymbolicEngine::Intersection).unwrap();
            prop_assert!(a.equals(&b).unwrap());
            // I^s ⊆ I^(s) always
            prop_assert!(a.contains_ideal(&i.power(s).unwrap()).unwrap());
        }
    }

    #[test]
    fn containment_agrees_with_certificate(g in small_graph(), s in 1u32..=4, t in 1u32..=3) {
        let i = g.cover_ideal().unwrap();
        let r = check_containment(&i, s, t, true).unwrap();
        prop_assert!(r.verify(&i).unwrap());
        prop_assert_eq!(r.holds, r.witness.is_none());
        prop_assert_eq!(r.holds, r.certificate.is_some());
    }

    #[test]
    fn colon_failures_lift(g in small_graph(), v in 0usize..6) {
        let i = g.edge_ideal().unwrap();
        let v = v % g.num_vertices();
        let m = Monomial::var(v, g.num_vertices());
        let verdict = colon_monotonicity_check(&i, &m, SweepConfig::new(4, 3)).unwrap();
        prop_assert!(verdict.unlifted.is_empty());
        prop_assert_eq!(verdict.lifted + verdict.truncated.len(), verdict.failures);
    }

    #[test]
    fn intersection_of_cover_ideals(a in small_graph(), b in small_graph()) {
        // both cover ideals in one ring, as intersections of edge primes
        let n = a.num_vertices().max(b.num_vertices());
        let vars = VariableSet::numbered("x", n);
        let cover = |g: &Graph| {
            g.edges()
                .iter()
                .map(|&(u, v)| MonomialIdeal::prime(&vars, &[u, v]))
                .reduce(|x, y| x.intersect(&y).unwrap())
                .unwrap()
        };
        let verdict = intersection_rule_check(&cover(&a), &cover(&b), SweepConfig::new(3, 3)).unwrap();
        // J(G) ∩ J(H) = J(G ∪ H), and symbolic powers distribute over it
        prop_assert!(verdict.unexplained.is_empty());
    }

    #[test]
    fn graph_text_round_trip(g in small_graph()) {
        let back = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back.vertices().names(), g.vertices().names());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn rational_text_round_trip(p in -500i64..500, q in 1i64..500) {
        let r = ratio(p, q);
        prop_assert_eq!(rational::parse(&rational::format(&r)), Some(r));
    }
}
