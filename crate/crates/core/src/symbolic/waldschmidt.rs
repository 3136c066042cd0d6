//! Waldschmidt constant `α̂(I) = lim α(I^(s))/s`.

use serde::Serialize;

use super::power::symbolic_power;
use super::structure::edge_class_of;
use crate::error::{Error, Result};
use crate::graph::{invariants, Graph};
use crate::ideal::MonomialIdeal;
use crate::rational::{self, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WaldschmidtMode {
    /// Cover ideal of a graph: `α̂(J(G)) = α(J(G)^(2))/2`.
    Cover,
    /// Edge ideal of a clique-sum of bipartite graphs and odd cycles.
    EdgeClass,
    /// Any squarefree ideal, from samples `s = 1..=s_max`.
    Generic { s_max: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WaldschmidtEstimate {
    #[serde(with = "rational::option")]
    pub exact: Option<Rational>,
    #[serde(with = "rational")]
    pub lower: Rational,
    #[serde(with = "rational")]
    pub upper: Rational,
    /// `(s, α(I^(s)))` pairs computed by the generic engine.
    pub samples: Vec<(u32, u32)>,
    /// How each bound was obtained.
    pub notes: Vec<String>,
}

impl WaldschmidtEstimate {
    fn exact(value: Rational, samples: Vec<(u32, u32)>, note: &str) -> Self {
        WaldschmidtEstimate { exact: Some(value), lower: value, upper: value, samples, notes: vec![note.into()] }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

fn sample(ideal: &MonomialIdeal, s_values: impl IntoIterator<Item = u32>) -> Result<Vec<(u32, u32)>> {
    s_values.into_iter().map(|s| Ok((s, symbolic_power(ideal, s)?.alpha()?))).collect()
}

fn min_ratio(samples: &[(u32, u32)]) -> Rational {
    samples.iter().map(|&(s, a)| ratio(a as i64, s as i64)).min().expect("at least one sample")
}

/// `α̂(J(G))` exactly; the samples are `s = 1, 2` from the generic engine.
pub fn cover_waldschmidt(g: &Graph) -> Result<WaldschmidtEstimate> {
    let j = g.cover_ideal()?;
    let samples = sample(&j, [1, 2])?;
    Ok(WaldschmidtEstimate::exact(
        ratio(samples[1].1 as i64, 2),
        samples,
        "cover ideal: symbolic Rees algebra generated in degree at most 2, so α̂ = α(J^(2))/2",
    ))
}

/// `α̂(I(G)) = (2n_1+1)/(n_1+1)` for the edge class (2 when bipartite).
pub fn edge_class_waldschmidt(g: &Graph) -> Result<WaldschmidtEstimate> {
    let class = edge_class_of(g)?;
    let i = g.edge_ideal()?;
    match class.n1() {
        None => {
            let samples = sample(&i, [1])?;
            Ok(WaldschmidtEstimate::exact(ratio(2, 1), samples, "bipartite: symbolic and ordinary powers agree"))
        }
        Some(n1) => {
            let samples = sample(&i, 1..=(n1 as u32 + 1))?;
            Ok(WaldschmidtEstimate::exact(
                ratio(2 * n1 as i64 + 1, n1 as i64 + 1),
                samples,
                "edge class: α(I^(s)) = 2s − ⌊s/(n_1+1)⌋",
            ))
        }
    }
}

/// Sampled bounds for any squarefree ideal. The upper bound is
/// `min_s α(I^(s))/s` (valid by subadditivity of `s ↦ α(I^(s))`); the
/// lower bound is `α(I)/h` from `I^(hr) ⊆ I^r` with `h` the big height.
/// Never claims exactness.
pub fn generic_waldschmidt(ideal: &MonomialIdeal, s_max: u32) -> Result<WaldschmidtEstimate> {
    if s_max == 0 {
        return Err(Error::ZeroPower);
    }
    let samples = sample(ideal, 1..=s_max)?;
    let h = ideal.big_height()? as i64;
    let lower = ratio(ideal.alpha()? as i64, h);
    Ok(WaldschmidtEstimate {
        exact: None,
        lower,
        upper: min_ratio(&samples),
        samples,
        notes: vec![
            format!("upper: least sampled α(I^(s))/s for s ≤ {s_max}"),
            format!("lower: α(I)/h with big height h = {h}, from I^(hr) ⊆ I^r"),
        ],
    })
}

/// Dispatch on `mode`; `Cover` and `EdgeClass` need the graph.
pub fn waldschmidt(ideal: &MonomialIdeal, graph: Option<&Graph>, mode: WaldschmidtMode) -> Result<WaldschmidtEstimate> {
    let need_graph = || Error::Precondition("this mode needs the underlying graph".into());
    match mode {
        WaldschmidtMode::Cover => {
            let g = graph.ok_or_else(need_graph)?;
            check_same(ideal, &g.cover_ideal()?)?;
            cover_waldschmidt(g)
        }
        WaldschmidtMode::EdgeClass => {
            let g = graph.ok_or_else(need_graph)?;
            check_same(ideal, &g.edge_ideal()?)?;
            edge_class_waldschmidt(g)
        }
        WaldschmidtMode::Generic { s_max } => generic_waldschmidt(ideal, s_max),
    }
}

fn check_same(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.equals(b)? {
        Ok(())
    } else {
        Err(Error::Precondition("ideal does not match the graph for this mode".into()))
    }
}

/// `α(J(G)) = |V(G)| − α(G)`: the complement of a maximum independent set
/// is a minimum vertex cover.
pub fn cover_alpha_from_independence(g: &Graph) -> Result<u32> {
    Ok((g.num_vertices() - invariants::independence_number(g)?) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    #[test]
    fn known_values() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(cover_waldschmidt(&c5).unwrap().exact, Some(ratio(5, 2)));
        assert_eq!(edge_class_waldschmidt(&c5).unwrap().exact, Some(ratio(5, 3)));
        assert_eq!(edge_class_waldschmidt(&Graph::cycle(6).unwrap()).unwrap().exact, Some(ratio(2, 1)));
    }

    #[test]
    fn bipartite_cover_is_alpha() {
        let c6 = Graph::cycle(6).unwrap();
        let j = c6.cover_ideal().unwrap();
        let w = cover_waldschmidt(&c6).unwrap();
        let a2 = symbolic_power(&j, 2).unwrap().alpha().unwrap();
        assert_eq!(a2, 2 * j.alpha().unwrap());
        assert_eq!(w.exact, Some(ratio(j.alpha().unwrap() as i64, 1)));
    }

    #[test]
    fn generic_brackets_exact() {
        let c5 = Graph::cycle(5).unwrap();
        let i = c5.edge_ideal().unwrap();
        let g = generic_waldschmidt(&i, 6).unwrap();
        assert!(g.exact.is_none());
        assert!(g.lower <= ratio(5, 3) && ratio(5, 3) <= g.upper);
        assert_eq!(g.upper, ratio(5, 3));
        let j = builtin_graph("Petersen").unwrap().cover_ideal().unwrap();
        assert!(waldschmidt(&j, None, WaldschmidtMode::Cover).is_err());
    }

    #[test]
    fn cover_alpha_identity() {
        for name in ["C5", "K4", "Petersen", "bowtie", "K222"] {
            let g = builtin_graph(name).unwrap();
            assert_eq!(cover_alpha_from_independence(&g).unwrap(), g.cover_ideal().unwrap().alpha().unwrap());
        }
    }
}
