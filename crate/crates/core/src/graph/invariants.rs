//! Exact graph invariants by branch and bound. All solvers refuse graphs
//! with more than [`EXACT_VERTEX_LIMIT`] vertices.

use std::collections::VecDeque;

use super::graph::mask_bits;
use super::{Graph, Hypergraph};
use crate::error::{Error, Result};

pub const EXACT_VERTEX_LIMIT: usize = 24;

fn guard(n: usize) -> Result<()> {
    if n > EXACT_VERTEX_LIMIT {
        Err(Error::TooLarge { limit: EXACT_VERTEX_LIMIT, found: n })
    } else {
        Ok(())
    }
}

/// Result of the colouring solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub chi: usize,
    /// Colour of each vertex, in `0..chi`.
    pub colors: Vec<usize>,
    /// Set when the edge set is empty; `chi` is then reported as 1.
    pub edgeless: bool,
}

/// Largest clique as a sorted vertex list (Bron–Kerbosch with pivoting).
pub fn maximum_clique(g: &Graph) -> Result<Vec<usize>> {
    guard(g.num_vertices())?;
    let adj = g.adjacency();
    let mut best = 0u64;
    bron_kerbosch(adj, 0, g.all_mask(), 0, &mut best);
    Ok(mask_bits(best).collect())
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut u64) {
    if p == 0 {
        if x == 0 && r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = mask_bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
    for v in mask_bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Every maximal clique, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    guard(g.num_vertices())?;
    fn rec(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = mask_bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).unwrap();
        for v in mask_bits(p & !adj[pivot]) {
            rec(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    rec(g.adjacency(), 0, g.all_mask(), 0, &mut out);
    let mut cliques: Vec<Vec<usize>> = out.into_iter().map(|m| mask_bits(m).collect()).collect();
    cliques.sort();
    Ok(cliques)
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(maximum_clique(g)?.len())
}

pub fn maximum_independent_set(g: &Graph) -> Result<Vec<usize>> {
    maximum_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(maximum_independent_set(g)?.len())
}

/// Exact chromatic number: try `k = ω, ω+1, …` with a backtracking
/// colourer that always branches on the most constrained vertex.
pub fn coloring(g: &Graph) -> Result<Coloring> {
    let n = g.num_vertices();
    guard(n)?;
    if g.num_edges() == 0 {
        return Ok(Coloring { chi: 1, colors: vec![0; n], edgeless: true });
    }
    let adj = g.adjacency();
    let (greedy_k, greedy) = greedy_coloring(adj);
    let lower = clique_number(g)?;
    for k in lower..greedy_k {
        let mut colors = vec![usize::MAX; n];
        if color_rec(adj, k, &mut colors, 0) {
            return Ok(Coloring { chi: k, colors, edgeless: false });
        }
    }
    Ok(Coloring { chi: greedy_k, colors: greedy, edgeless: false })
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let c = coloring(g)?;
    if c.edgeless {
        return Err(Error::EmptyEdgeSet);
    }
    Ok(c.chi)
}

fn greedy_coloring(adj: &[u64]) -> (usize, Vec<usize>) {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut colors = vec![usize::MAX; n];
    for &v in &order {
        let used: Vec<usize> = mask_bits(adj[v]).map(|u| colors[u]).collect();
        colors[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    (colors.iter().max().map_or(0, |&c| c + 1), colors)
}

fn color_rec(adj: &[u64], k: usize, colors: &mut [usize], done: usize) -> bool {
    let n = colors.len();
    if done == n {
        return true;
    }
    // most distinct neighbour colours first, then highest degree
    let mut pick = usize::MAX;
    let mut pick_key = (0, 0);
    let mut pick_used = 0u64;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let used = mask_bits(adj[v]).filter(|&u| colors[u] != usize::MAX).fold(0u64, |m, u| m | 1 << colors[u]);
        let key = (used.count_ones(), adj[v].count_ones());
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
            pick_used = used;
        }
    }
    let max_used = colors.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
    // colours beyond the first unused one are symmetric
    for c in 0..k.min(max_used + 1) {
        if pick_used >> c & 1 == 0 {
            colors[pick] = c;
            if color_rec(adj, k, colors, done + 1) {
                return true;
            }
        }
    }
    colors[pick] = usize::MAX;
    false
}

/// Exact hypergraph chromatic number with a witness colouring.
pub(crate) fn hypergraph_coloring(h: &Hypergraph) -> Result<(usize, Vec<usize>)> {
    let n = h.num_vertices();
    guard(n)?;
    if h.edges().is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    for k in 2..=n {
        let mut colors = vec![usize::MAX; n];
        if hyper_rec(h.edges(), k, &mut colors, 0) {
            return Ok((k, colors));
        }
    }
    unreachable!("distinct colours never leave an edge monochromatic")
}

fn hyper_rec(edges: &[Vec<usize>], k: usize, colors: &mut [usize], v: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    let max_used = colors[..v].iter().max().map_or(0, |&c| c + 1);
    for c in 0..k.min(max_used + 1) {
        colors[v] = c;
        let bad = edges.iter().any(|e| e.last() == Some(&v) && e.iter().all(|&u| colors[u] == c));
        if !bad && hyper_rec(edges, k, colors, v + 1) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Outcome of the bipartiteness test, with a re-checkable certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of each vertex.
    TwoColoring(Vec<u8>),
    /// Vertices of an odd cycle, in order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::TwoColoring(_))
    }

    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Bipartition::TwoColoring(side) => g.edges().iter().all(|&(a, b)| side[a] != side[b]),
            Bipartition::OddCycle(c) => {
                c.len() % 2 == 1 && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
            }
        }
    }
}

/// Breadth-first two-colouring; on failure, returns the odd cycle closed
/// by the offending edge.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.num_vertices();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartition::OddCycle(close_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Bipartition::TwoColoring(side)
}

fn close_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut left, mut right) = (vec![], vec![]);
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_bipartite()
}

/// Induced (chordless) odd cycles, optionally of one length. Each cycle
/// starts at its least vertex, continues towards the smaller of its two
/// neighbours, and the list is sorted.
pub fn induced_odd_cycles(g: &Graph, length: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for v in 0..g.num_vertices() {
        let mut path = vec![v];
        chordless_paths(g, v, 0, &mut path, length, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn chordless_paths(
    g: &Graph,
    start: usize,
    interior: u64,
    path: &mut Vec<usize>,
    length: Option<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
    if length.is_some_and(|l| path.len() >= l) {
        return;
    }
    for w in g.neighbors(last) {
        if w <= start || on_path >> w & 1 == 1 || g.neighbor_mask(w) & interior != 0 {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(w, start);
        if closes {
            let len = path.len() + 1;
            if len % 2 == 1 && path[1] < w && length.map_or(true, |l| l == len) {
                let mut c = path.clone();
                c.push(w);
                out.push(c);
            }
            continue;
        }
        let next_interior = if path.len() >= 2 { interior | 1 << last } else { interior };
        path.push(w);
        chordless_paths(g, start, next_interior, path, length, out);
        path.pop();
    }
}

/// `k_n(G)`: most induced `(2n+1)`-cycles pairwise at distance at least 2.
pub fn k_n(g: &Graph, n: usize) -> Result<usize> {
    let cycles = induced_odd_cycles(g, Some(2 * n + 1));
    if cycles.is_empty() {
        return Err(Error::Precondition(format!("no induced cycle of length {}", 2 * n + 1)));
    }
    let m = cycles.len();
    if m > EXACT_VERTEX_LIMIT {
        return Err(Error::TooLarge { limit: EXACT_VERTEX_LIMIT, found: m });
    }
    let mut conflicts = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if g.subgraph_distance(&cycles[i], &cycles[j])?.is_some_and(|d| d <= 1) {
                conflicts.push((i, j));
            }
        }
    }
    let conflict_graph = Graph::new(crate::ideal::VariableSet::numbered("c", m), conflicts)?;
    independence_number(&conflict_graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::new(crate::ideal::VariableSet::numbered("x", 10), e).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number(&petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6).unwrap()).unwrap(), 2);
        let empty = Graph::numbered(3, &[]).unwrap();
        assert!(matches!(chromatic_number(&empty), Err(Error::EmptyEdgeSet)));
        let c = coloring(&empty).unwrap();
        assert!(c.edgeless && c.chi == 1);
    }

    #[test]
    fn coloring_is_proper() {
        let g = petersen();
        let c = coloring(&g).unwrap();
        assert!(g.edges().iter().all(|&(a, b)| c.colors[a] != c.colors[b]));
    }

    #[test]
    fn clique_and_independence() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(clique_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&c5).unwrap(), 2);
        let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(clique_number(&k222).unwrap(), 3);
        assert_eq!(independence_number(&k222).unwrap(), 2);
        assert_eq!(maximal_cliques(&Graph::path(3).unwrap()).unwrap(), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn bipartite_examples() {
        assert!(is_bipartite(&Graph::cycle(6).unwrap()));
        assert!(is_bipartite(&Graph::path(5).unwrap()));
        let c5 = Graph::cycle(5).unwrap();
        let b = bipartition(&c5);
        assert!(!b.is_bipartite());
        assert!(b.verify(&c5));
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(induced_odd_cycles(&Graph::cycle(5).unwrap(), None), vec![vec![0, 1, 2, 3, 4]]);
        assert!(induced_odd_cycles(&Graph::cycle(6).unwrap(), None).is_empty());
        assert_eq!(induced_odd_cycles(&Graph::complete(4).unwrap(), None).len(), 4);
        assert!(induced_odd_cycles(&Graph::complete(4).unwrap(), Some(5)).is_empty());
        // C5 with a chord: a triangle and a 4-cycle
        let g = Graph::numbered(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)]).unwrap();
        assert_eq!(induced_odd_cycles(&g, None), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn k_n_examples() {
        assert_eq!(k_n(&Graph::cycle(3).unwrap(), 1).unwrap(), 1);
        let bowtie = Graph::numbered(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(k_n(&bowtie, 1).unwrap(), 1);
        let d2 = Graph::numbered(7, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]).unwrap();
        assert_eq!(k_n(&d2, 1).unwrap(), 2);
        assert!(k_n(&Graph::cycle(6).unwrap(), 1).is_err());
    }

    #[test]
    fn hypergraph_chromatic() {
        let h = Hypergraph::from_graph(&Graph::cycle(5).unwrap());
        assert_eq!(h.chromatic_number().unwrap(), 3);
    }
}
