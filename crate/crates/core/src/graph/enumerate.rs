//! Small graphs: exhaustive enumeration up to isomorphism and random
//! connected samples.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;
use crate::ideal::VariableSet;

/// Enumeration is by canonical edge masks over all `n!` relabelings.
pub const MAX_ENUMERATION_VERTICES: usize = 6;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices (isolated vertices allowed), ordered by edge count then mask.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_VERTICES, "enumeration limited to {MAX_ENUMERATION_VERTICES} vertices");
    let idx = pair_index(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| idx[p[i]][p[j]]).collect())
        .collect();
    let m = pairs.len();
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let canon = perm_maps
            .iter()
            .map(|map| (0..m).filter(|&e| mask >> e & 1 == 1).fold(0u32, |acc, e| acc | 1 << map[e]))
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            reps.push(canon);
        }
    }
    reps.sort_by_key(|&c| (c.count_ones(), c));
    reps.into_iter()
        .map(|c| {
            let edges: Vec<_> = (0..m).filter(|&e| c >> e & 1 == 1).map(|e| pairs[e]).collect();
            Graph::new(VariableSet::numbered("x", n), edges).expect("enumerated graphs are simple")
        })
        .collect()
}

/// Graphs without isolated vertices on 2..=`max_n` vertices, up to isomorphism.
pub fn graphs_without_isolated(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(graphs_up_to_isomorphism).filter(|g| g.isolated_vertices().is_empty()).collect()
}

/// Connected graphs on 2..=`max_n` vertices, up to isomorphism.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(graphs_up_to_isomorphism).filter(Graph::is_connected).collect()
}

/// A random connected graph on `n ≥ 2` vertices: a random spanning tree
/// plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(VariableSet::numbered("x", n), edges).expect("random graphs are simple")
}
