use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::transversal::{bits, minimal_transversals};
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};

/// Adjacency rows are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph whose vertices double as ring variables.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: VariableSet,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Edges are index pairs; each is stored as `(min, max)` and the list is sorted.
    /// Loops and repeated edges are rejected.
    pub fn new(vertices: VariableSet, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { limit: MAX_VERTICES, found: n });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {}", vertices.name(a))));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge {} {}",
                    vertices.name(a),
                    vertices.name(b)
                )));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        Ok(Graph { vertices, edges: list, adj })
    }

    /// Vertices `x1..xn` with 1-based edge endpoints, e.g. `numbered(3, &[(1, 2), (2, 3)])`.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::InvalidGraph("vertex numbers start at 1".into()));
        }
        Graph::new(VariableSet::numbered("x", n), edges.iter().map(|&(a, b)| (a - 1, b - 1)))
    }

    pub fn from_names<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let vars = VariableSet::new(vertices.iter().map(|s| s.as_ref()))?;
        let idx = |s: &S| vars.index_of(s.as_ref()).ok_or_else(|| Error::UnknownVertex(s.as_ref().to_string()));
        let pairs = edges.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
        Graph::new(vars, pairs)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph("a cycle needs at least 3 vertices".into()));
        }
        Graph::new(VariableSet::numbered("x", n), (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(VariableSet::numbered("x", n), (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(VariableSet::numbered("x", n), (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// Complete multipartite graph on consecutive blocks of `x1..xn`.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(size));
        }
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| part_of[i] != part_of[j]);
        Graph::new(VariableSet::numbered("x", n), edges.collect::<Vec<_>>())
    }

    pub fn vertices(&self) -> &VariableSet {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        self.vertices.name(v)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vertices.index_of(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        mask_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn all_mask(&self) -> u64 {
        full_mask(self.num_vertices())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertices().first() {
            Some(&v) => Err(Error::IsolatedVertex(self.name(v).to_string())),
            None => Ok(()),
        }
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.num_vertices() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let comp = self.reach(1 << v, self.all_mask());
            seen |= comp;
            out.push(mask_bits(comp).collect());
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut comp = start & within;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() > 0 && self.reach(1, self.all_mask()) == self.all_mask()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// `G[A]`; vertex order follows `subset` after sorting.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if subset.iter().any(|&v| v >= self.num_vertices()) {
            return Err(Error::Precondition("vertex set is not a subset of V(G)".into()));
        }
        let vars = self.vertices.subset(&subset)?;
        let mut pos = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in subset.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]))
            .collect::<Vec<_>>();
        Graph::new(vars, edges)
    }

    pub fn induced_subgraph_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Graph> {
        let idx = names.iter().map(|s| self.index_of(s.as_ref())).collect::<Result<Vec<_>>>()?;
        self.induced_subgraph(&idx)
    }

    pub fn complement(&self) -> Graph {
        let n = self.num_vertices();
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !self.has_edge(i, j));
        Graph::new(self.vertices.clone(), edges.collect::<Vec<_>>()).expect("complement of a valid graph")
    }

    /// Disjoint union; vertex names must not collide.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let vars = self.vertices.disjoint_union(&other.vertices)?;
        let off = self.num_vertices();
        let edges = self.edges.iter().copied().chain(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        Graph::new(vars, edges.collect::<Vec<_>>())
    }

    /// `G1 * G2`: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let vars = self.vertices.disjoint_union(&other.vertices)?;
        let off = self.num_vertices();
        let mut edges: Vec<_> =
            self.edges.iter().copied().chain(other.edges.iter().map(|&(a, b)| (a + off, b + off))).collect();
        for a in 0..off {
            for b in 0..other.num_vertices() {
                edges.push((a, b + off));
            }
        }
        Graph::new(vars, edges)
    }

    /// Same graph with vertices renamed by `f`.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Result<Graph> {
        let vars = VariableSet::new(self.vertices.names().iter().map(|s| f(s)))?;
        Graph::new(vars, self.edges.clone())
    }

    /// `I(G) = (x_i x_j : {x_i, x_j} ∈ E(G))`.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        self.require_no_isolated()?;
        let n = self.num_vertices();
        let gens = self.edges.iter().map(|&(a, b)| Monomial::from_support(n, [a, b])).collect();
        Ok(MonomialIdeal::from_unchecked(gens, &self.vertices))
    }

    /// Inclusion-minimal vertex covers, sorted by size then lexicographically.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<Vec<usize>>> {
        self.require_no_isolated()?;
        let family: Vec<u128> = self.edges.iter().map(|&(a, b)| (1u128 << a) | (1u128 << b)).collect();
        Ok(minimal_transversals(&family).into_iter().map(|m| bits(m).collect()).collect())
    }

    /// `J(G)`, generated by the products over minimal vertex covers.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.num_vertices();
        let gens = self.minimal_vertex_covers()?.into_iter().map(|c| Monomial::from_support(n, c)).collect();
        Ok(MonomialIdeal::from_unchecked(gens, &self.vertices))
    }

    /// Breadth-first distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_vertices()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `d(A, B)`: least distance between a vertex of `A` and one of `B`
    /// (0 when they meet, `None` when no path joins them).
    pub fn subgraph_distance(&self, a: &[usize], b: &[usize]) -> Result<Option<usize>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::Precondition("subgraph distance needs nonempty vertex sets".into()));
        }
        let target: u64 = b.iter().fold(0, |m, &v| m | 1 << v);
        let source: u64 = a.iter().fold(0, |m, &v| m | 1 << v);
        let mut seen = source;
        let mut frontier = source;
        let mut d = 0;
        while frontier != 0 {
            if frontier & target != 0 {
                return Ok(Some(d));
            }
            let mut next = 0;
            for v in mask_bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            d += 1;
        }
        Ok(None)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph[{}; ", self.vertices)?;
        let edges: Vec<String> = self.edges.iter().map(|&(a, b)| format!("{}-{}", self.name(a), self.name(b))).collect();
        write!(f, "{}]", edges.join(" "))
    }
}

pub(crate) fn mask_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: &Graph, sets: &[Vec<usize>]) -> Vec<Vec<String>> {
        sets.iter().map(|s| s.iter().map(|&v| g.name(v).to_string()).collect()).collect()
    }

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(Graph::numbered(2, &[(1, 1)]).is_err());
        assert!(Graph::numbered(2, &[(1, 2), (2, 1)]).is_err());
        assert!(Graph::numbered(2, &[(1, 3)]).is_err());
    }

    #[test]
    fn vertex_covers() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.minimal_vertex_covers().unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let c5 = Graph::cycle(5).unwrap();
        let covers = c5.minimal_vertex_covers().unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.len() == 3));
        assert!(names(&c5, &covers).contains(&vec!["x1".into(), "x2".into(), "x4".into()]));
        let edge = Graph::path(2).unwrap();
        assert_eq!(edge.minimal_vertex_covers().unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn isolated_vertices_are_rejected_by_ideals() {
        let g = Graph::numbered(3, &[(1, 2)]).unwrap();
        assert!(matches!(g.edge_ideal(), Err(Error::IsolatedVertex(v)) if v == "x3"));
        assert!(g.cover_ideal().is_err());
        assert!(g.minimal_vertex_covers().is_err());
    }

    #[test]
    fn triangle_is_self_dual() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.edge_ideal().unwrap(), c3.cover_ideal().unwrap());
        let j5 = Graph::cycle(5).unwrap().cover_ideal().unwrap();
        assert_eq!(j5.num_generators(), 5);
        assert!(j5.generators().iter().all(|g| g.degree() == 3));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5);
        let p = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(c5.induced_subgraph(&[0, 2]).unwrap().num_edges(), 0);
        assert!(c5.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn distances() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.subgraph_distance(&[0, 1], &[1, 2]).unwrap(), Some(0));
        assert_eq!(p3.subgraph_distance(&[0], &[1]).unwrap(), Some(1));
        assert_eq!(p3.subgraph_distance(&[0], &[2]).unwrap(), Some(2));
        assert!(p3.subgraph_distance(&[], &[2]).is_err());
    }

    #[test]
    fn components_and_join() {
        let g = Graph::numbered(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        let a = Graph::path(2).unwrap();
        let b = a.rename(|s| format!("y{}", &s[1..])).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.num_edges(), 6);
        assert_eq!(Graph::complete_multipartite(&[2, 2, 2]).unwrap().num_edges(), 12);
    }
}
