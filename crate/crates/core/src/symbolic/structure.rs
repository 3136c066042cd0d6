//! Structured descriptions of symbolic powers for cover ideals of graphs and
//! for edge ideals of clique-sums of bipartite graphs and odd cycles.

use std::collections::HashMap;

use super::power::symbolic_power;
use crate::error::{Error, Result};
use crate::graph::{classify, invariants, EdgeClass, Graph};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::rational::{ratio, Rational};

/// `J(G)^(s)` from `J(G)^(2)` alone: `(J^(2))^q` for `s = 2q` and
/// `J · (J^(2))^q` for `s = 2q + 1`.
pub fn cover_symbolic_fast(g: &Graph, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    let j = g.cover_ideal()?;
    if s == 1 {
        return Ok(j);
    }
    let j2 = symbolic_power(&j, 2)?;
    let q = s / 2;
    let even = j2.power(q)?;
    if s % 2 == 0 {
        Ok(even)
    } else {
        j.product(&even)
    }
}

/// `J_n(G)`, generated by `u_C = ∏_{x ∈ C} x` over induced cycles `C` of
/// length `2n + 1`. The zero ideal signals that there are none.
pub fn jn_ideal(g: &Graph, n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::Precondition("J_n needs n ≥ 1".into()));
    }
    let nv = g.num_vertices();
    let gens: Vec<Monomial> =
        invariants::induced_odd_cycles(g, Some(2 * n + 1)).into_iter().map(|c| Monomial::from_support(nv, c)).collect();
    MonomialIdeal::minimalize(gens, g.vertices())
}

/// The edge-class data of `g`, or a precondition error.
pub fn edge_class_of(g: &Graph) -> Result<EdgeClass> {
    classify(g)?
        .edge_class
        .ok_or_else(|| Error::Precondition("graph is not a clique-sum of bipartite graphs and odd cycles".into()))
}

/// `I(G)^(s) = Σ I(G)^t · J_{n_1}(G)^{a_1} ⋯ J_{n_r}(G)^{a_r}` over
/// `s = t + (n_1+1)a_1 + ⋯ + (n_r+1)a_r`.
pub fn edge_symbolic_decomposition(g: &Graph, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::ZeroPower);
    }
    let class = edge_class_of(g)?;
    let i = g.edge_ideal()?;
    let js: Vec<MonomialIdeal> = class.halves.iter().map(|&n| jn_ideal(g, n)).collect::<Result<_>>()?;
    let weights: Vec<u32> = class.halves.iter().map(|&n| n as u32 + 1).collect();

    let mut cache: HashMap<(usize, u32), MonomialIdeal> = HashMap::new();
    let mut power = |which: usize, e: u32, base: &MonomialIdeal| -> Result<MonomialIdeal> {
        if e == 0 {
            return Ok(MonomialIdeal::unit(base.ambient()));
        }
        if let Some(p) = cache.get(&(which, e)) {
            return Ok(p.clone());
        }
        let p = base.power(e)?;
        cache.insert((which, e), p.clone());
        Ok(p)
    };

    let mut total = MonomialIdeal::zero(i.ambient());
    let mut tuples = Vec::new();
    compositions(&weights, s, &mut vec![0; weights.len()], 0, &mut tuples);
    for a in tuples {
        let used: u32 = a.iter().zip(&weights).map(|(x, w)| x * w).sum();
        let mut term = power(usize::MAX, s - used, &i)?;
        for (k, &ak) in a.iter().enumerate() {
            term = term.product(&power(k, ak, &js[k])?)?;
        }
        total = total.sum(&term)?;
    }
    Ok(total)
}

/// All `(a_1, …, a_r)` with `Σ w_i a_i ≤ budget`.
fn compositions(weights: &[u32], budget: u32, cur: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k == weights.len() {
        out.push(cur.clone());
        return;
    }
    for a in 0..=budget / weights[k] {
        cur[k] = a;
        compositions(weights, budget - a * weights[k], cur, k + 1, out);
    }
    cur[k] = 0;
}

/// `α(I(G)^(s)) = 2s − ⌊s/(n_1+1)⌋` for the edge class with least half-length `n_1`.
pub fn edge_alpha_formula(n1: usize, s: u32) -> u32 {
    2 * s - s / (n1 as u32 + 1)
}

/// `χ_f(G) = 2 + 1/n_1` for a non-bipartite member of the edge class.
pub fn fractional_chromatic_for_class(g: &Graph) -> Result<Rational> {
    let class = edge_class_of(g)?;
    let n1 = class
        .n1()
        .ok_or_else(|| Error::Precondition("bipartite graph: the closed form needs an odd cycle".into()))?;
    Ok(ratio(2 * n1 as i64 + 1, n1 as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    #[test]
    fn cover_fast_matches_generic() {
        for (name, s) in [("C5", 4), ("C3", 3), ("C5", 1), ("bowtie", 3)] {
            let g = builtin_graph(name).unwrap();
            let j = g.cover_ideal().unwrap();
            assert_eq!(cover_symbolic_fast(&g, s).unwrap(), symbolic_power(&j, s).unwrap(), "{name} s={s}");
        }
    }

    #[test]
    fn jn_examples() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(jn_ideal(&c3, 1).unwrap().generators(), &[Monomial::new(vec![1, 1, 1])]);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(jn_ideal(&c5, 2).unwrap().generators(), &[Monomial::new(vec![1; 5])]);
        assert!(jn_ideal(&c5, 1).unwrap().is_zero());
        let d2 = builtin_graph("two-triangles-d2").unwrap();
        let j1 = jn_ideal(&d2, 1).unwrap();
        assert_eq!(j1.num_generators(), 2);
        assert!(j1.generators().iter().all(|g| g.degree() == 3));
    }

    #[test]
    fn decomposition_matches_generic() {
        for (name, s) in [("C5", 3), ("C5", 2), ("two-triangles-d2", 4), ("bowtie", 3), ("diamond", 3)] {
            let g = builtin_graph(name).unwrap();
            let i = g.edge_ideal().unwrap();
            assert_eq!(edge_symbolic_decomposition(&g, s).unwrap(), symbolic_power(&i, s).unwrap(), "{name} s={s}");
        }
        let c5 = Graph::cycle(5).unwrap();
        let i = c5.edge_ideal().unwrap();
        assert_eq!(edge_symbolic_decomposition(&c5, 2).unwrap(), i.power(2).unwrap());
        assert!(edge_symbolic_decomposition(&Graph::complete(4).unwrap(), 2).is_err());
    }

    #[test]
    fn alpha_formula_matches() {
        let i = Graph::cycle(5).unwrap().edge_ideal().unwrap();
        for s in 1..=6 {
            assert_eq!(symbolic_power(&i, s).unwrap().alpha().unwrap(), edge_alpha_formula(2, s));
        }
    }

    #[test]
    fn fractional_chromatic() {
        assert_eq!(fractional_chromatic_for_class(&Graph::cycle(5).unwrap()).unwrap(), ratio(5, 2));
        assert_eq!(fractional_chromatic_for_class(&builtin_graph("bowtie").unwrap()).unwrap(), ratio(3, 1));
        assert!(fractional_chromatic_for_class(&Graph::cycle(6).unwrap()).is_err());
    }
}
