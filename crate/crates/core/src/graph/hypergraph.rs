use std::fmt;

use super::Graph;
use crate::error::{Error, Result};
use crate::ideal::transversal::{bits, mask_of, minimal_transversals};
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};

/// A simple hypergraph: every edge has at least two vertices and no edge
/// contains another.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: VariableSet,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertices: VariableSet, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        if n > 128 {
            return Err(Error::TooManyVariables(n));
        }
        let mut list: Vec<Vec<usize>> = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.iter().any(|&v| v >= n) {
                return Err(Error::InvalidHypergraph("edge vertex out of range".into()));
            }
            if e.len() < 2 {
                return Err(Error::InvalidHypergraph(format!("edge {:?} has fewer than two vertices", e)));
            }
            list.push(e);
        }
        list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if a.iter().all(|v| b.contains(v)) {
                    return Err(Error::InvalidHypergraph(format!(
                        "edge {} is contained in edge {}",
                        render(&vertices, a),
                        render(&vertices, b)
                    )));
                }
            }
        }
        Ok(Hypergraph { vertices, edges: list })
    }

    /// Vertices `x1..xn` with 1-based vertex numbers in the edges.
    pub fn numbered(n: usize, edges: &[&[usize]]) -> Result<Self> {
        if edges.iter().any(|e| e.contains(&0)) {
            return Err(Error::InvalidHypergraph("vertex numbers start at 1".into()));
        }
        Hypergraph::new(VariableSet::numbered("x", n), edges.iter().map(|e| e.iter().map(|v| v - 1).collect()))
    }

    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>();
        Hypergraph::new(g.vertices().clone(), edges).expect("graph edges form a simple hypergraph")
    }

    /// The hypergraph whose cover ideal is `I`: its edges are the minimal primes of `I`.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let primes = ideal.minimal_primes()?;
        if let Some(p) = primes.iter().find(|p| p.len() < 2) {
            return Err(Error::InvalidHypergraph(format!(
                "minimal prime ({}) has a single variable",
                render(ideal.ambient(), p)
            )));
        }
        Hypergraph::new(ideal.ambient().clone(), primes)
    }

    pub fn vertices(&self) -> &VariableSet {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Largest edge size; equals the big height of `J(H)`.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn require_no_isolated(&self) -> Result<()> {
        let covered = self.edges.iter().fold(0u128, |m, e| m | mask_of(e.iter().copied()));
        match (0..self.num_vertices()).find(|&v| covered >> v & 1 == 0) {
            Some(v) => Err(Error::IsolatedVertex(self.vertices.name(v).to_string())),
            None => Ok(()),
        }
    }

    pub fn minimal_vertex_covers(&self) -> Result<Vec<Vec<usize>>> {
        self.require_no_isolated()?;
        let family: Vec<u128> = self.edges.iter().map(|e| mask_of(e.iter().copied())).collect();
        Ok(minimal_transversals(&family).into_iter().map(|m| bits(m).collect()).collect())
    }

    /// `J(H)`, generated by the products over minimal vertex covers.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.num_vertices();
        let gens = self.minimal_vertex_covers()?.into_iter().map(|c| Monomial::from_support(n, c)).collect();
        Ok(MonomialIdeal::from_unchecked(gens, &self.vertices))
    }

    /// Induced subhypergraph on `subset`: exactly the edges lying inside it.
    pub fn induced(&self, subset: &[usize]) -> Result<Hypergraph> {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let vars = self.vertices.subset(&subset)?;
        let pos = |v: usize| subset.binary_search(&v).ok();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| e.iter().map(|&v| pos(v)).collect::<Option<Vec<_>>>())
            .collect::<Vec<_>>();
        Hypergraph::new(vars, edges)
    }

    /// Least number of colours with no monochromatic edge.
    pub fn chromatic_number(&self) -> Result<usize> {
        Ok(super::invariants::hypergraph_coloring(self)?.0)
    }
}

fn render(vars: &VariableSet, e: &[usize]) -> String {
    e.iter().map(|&v| vars.name(v)).collect::<Vec<_>>().join(" ")
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|e| format!("{{{}}}", render(&self.vertices, e))).collect();
        write!(f, "Hypergraph[{}; {}]", self.vertices, edges.join(" "))
    }
}
