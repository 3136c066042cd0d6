//! Library results against brute-force computations written from the
//! definitions, sharing no code with the engines.

use resurgence::engine::{exact_cover_resurgence, exact_edge_resurgence, ReportConfig};
use resurgence::graph::enumerate::graphs_without_isolated;
use resurgence::graph::invariants;
use resurgence::rational::ratio;
use resurgence::symbolic::symbolic_power;
use resurgence::{Graph, Monomial};

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.num_vertices();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn chromatic_brute(g: &Graph) -> usize {
    let n = g.num_vertices();
    let a = adjacency(g);
    (1..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let mut colour = vec![0; n];
                for c in colour.iter_mut() {
                    *c = code % k;
                    code /= k;
                }
                (0..n).all(|u| (u + 1..n).all(|v| !a[u][v] || colour[u] != colour[v]))
            })
        })
        .unwrap()
}

fn independent(a: &[Vec<bool>], set: u32) -> bool {
    let n = a.len();
    (0..n).all(|u| (u + 1..n).all(|v| set >> u & 1 == 0 || set >> v & 1 == 0 || !a[u][v]))
}

fn independence_brute(g: &Graph) -> usize {
    let a = adjacency(g);
    (0u32..1 << g.num_vertices()).filter(|&s| independent(&a, s)).map(|s| s.count_ones() as usize).max().unwrap()
}

fn clique_brute(g: &Graph) -> usize {
    independence_brute(&g.complement())
}

/// Minimal vertex covers, by checking every subset.
fn minimal_covers(g: &Graph) -> Vec<u32> {
    let covers: Vec<u32> = (0u32..1 << g.num_vertices())
        .filter(|&c| g.edges().iter().all(|&(u, v)| c >> u & 1 == 1 || c >> v & 1 == 1))
        .collect();
    covers.iter().copied().filter(|&c| !covers.iter().any(|&d| d != c && d & c == d)).collect()
}

fn weight(exps: &[u32], set: u32) -> u32 {
    exps.iter().enumerate().filter(|(i, _)| set >> i & 1 == 1).map(|(_, &e)| e).sum()
}

/// All exponent vectors with entries at most `bound`.
fn boxed(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..=bound).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out
}

#[test]
fn chromatic_clique_independence() {
    for g in graphs_without_isolated(6) {
        assert_eq!(invariants::chromatic_number(&g).unwrap(), chromatic_brute(&g), "{:?}", g.edges());
        assert_eq!(invariants::clique_number(&g).unwrap(), clique_brute(&g));
        assert_eq!(invariants::independence_number(&g).unwrap(), independence_brute(&g));
    }
}

#[test]
fn minimal_vertex_covers() {
    for g in graphs_without_isolated(5) {
        let mut ours: Vec<u32> = g
            .minimal_vertex_covers()
            .unwrap()
            .iter()
            .map(|c| c.iter().map(|&v| 1u32 << v).sum())
            .collect();
        let mut brute = minimal_covers(&g);
        ours.sort_unstable();
        brute.sort_unstable();
        assert_eq!(ours, brute);
    }
}

/// `m ∈ J(G)^(s)` iff every edge carries exponent weight at least `s`;
/// `m ∈ I(G)^(s)` iff every minimal vertex cover does.
#[test]
fn symbolic_membership_by_weights() {
    for name in ["C5", "bowtie", "diamond", "K4"] {
        let g = resurgence::graph::builtin_graph(name).unwrap();
        let n = g.num_vertices();
        let covers = minimal_covers(&g);
        for s in 1..=3 {
            let jc = symbolic_power(&g.cover_ideal().unwrap(), s).unwrap();
            let ie = symbolic_power(&g.edge_ideal().unwrap(), s).unwrap();
            for e in boxed(n, s) {
                let m = Monomial::new(e.clone());
                let in_cover = g.edges().iter().all(|&(u, v)| e[u] + e[v] >= s);
                let in_edge = covers.iter().all(|&c| weight(&e, c) >= s);
                assert_eq!(jc.contains_monomial(&m).unwrap(), in_cover, "{name} J^({s}) {e:?}");
                assert_eq!(ie.contains_monomial(&m).unwrap(), in_edge, "{name} I^({s}) {e:?}");
            }
        }
    }
}

/// `m ∈ I^t` iff some `t` generators (with repetition) multiply to a divisor.
fn in_power_brute(gens: &[Vec<u32>], m: &[u32], t: u32) -> bool {
    if t == 0 {
        return true;
    }
    gens.iter().any(|g| {
        g.iter().zip(m).all(|(a, b)| a <= b) && {
            let rest: Vec<u32> = m.iter().zip(g).map(|(b, a)| b - a).collect();
            in_power_brute(gens, &rest, t - 1)
        }
    })
}

#[test]
fn ordinary_power_membership() {
    for name in ["C5", "triangle-pendant", "K4"] {
        let g = resurgence::graph::builtin_graph(name).unwrap();
        let i = g.edge_ideal().unwrap();
        let gens: Vec<Vec<u32>> = i.generators().iter().map(|m| m.exponents().to_vec()).collect();
        for e in boxed(g.num_vertices(), 2) {
            let m = Monomial::new(e.clone());
            for t in 1..=3 {
                assert_eq!(i.member_of_power(&m, t).unwrap(), in_power_brute(&gens, &e, t), "{name} {e:?} t={t}");
            }
        }
    }
}

#[test]
fn odd_cycle_closed_forms() {
    // C_{2n+1}: both ideals have ρ = ρ_a = (2n+2)/(2n+1)
    for n in 1..=4i64 {
        let g = Graph::cycle(2 * n as usize + 1).unwrap();
        let want = ratio(2 * n + 2, 2 * n + 1);
        let cfg = ReportConfig::without_sweep();
        for r in [exact_cover_resurgence(&g, &cfg).unwrap(), exact_edge_resurgence(&g, &cfg).unwrap()] {
            assert_eq!(r.rho.exact, Some(want));
            assert_eq!(r.rho_a.exact, Some(want));
        }
    }
}

#[test]
fn bipartite_graphs_have_unit_resurgence() {
    // König: symbolic and ordinary powers agree, checked directly for small s
    for g in graphs_without_isolated(5).into_iter().filter(|g| chromatic_brute(g) <= 2) {
        let cfg = ReportConfig::without_sweep();
        assert_eq!(exact_cover_resurgence(&g, &cfg).unwrap().rho.exact, Some(ratio(1, 1)));
        assert_eq!(exact_edge_resurgence(&g, &cfg).unwrap().rho.exact, Some(ratio(1, 1)));
        let i = g.edge_ideal().unwrap();
        for s in 2..=3 {
            assert!(symbolic_power(&i, s).unwrap().equals(&i.power(s).unwrap()).unwrap());
        }
    }
}

#[test]
fn complete_graph_cover_resurgence() {
    // J(K_n) is the squarefree Veronese of degree n-1: ρ = 2(n-1)/n
    for n in 3..=5i64 {
        let g = Graph::complete(n as usize).unwrap();
        let r = exact_cover_resurgence(&g, &ReportConfig::without_sweep()).unwrap();
        assert_eq!(r.rho.exact, Some(ratio(2 * (n - 1), n)));
    }
}
