//! Blocks, cut vertices and clique-separator decomposition.

use serde::Serialize;

use super::graph::mask_bits;
use super::Graph;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted; blocks ordered lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Edges of each block, parallel to `blocks`.
    pub block_edges: Vec<Vec<(usize, usize)>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Every block is a single edge or a cycle.
    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().zip(&self.block_edges).all(|(v, e)| e.len() == 1 || (v.len() >= 3 && e.len() == v.len()))
    }
}

/// Block / cut-vertex decomposition (Tarjan's edge stack).
pub fn blocks_and_cut_vertices(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.num_vertices();
    let mut st = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
        cut: vec![false; n],
    };
    st.dfs(0, usize::MAX);
    let mut pairs: Vec<(Vec<usize>, Vec<(usize, usize)>)> = st
        .out
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.sort_unstable();
            vs.dedup();
            (vs, edges)
        })
        .collect();
    pairs.sort();
    let (blocks, block_edges) = pairs.into_iter().unzip();
    let cut_vertices = (0..n).filter(|&v| st.cut[v]).collect();
    Ok(BlockDecomposition { blocks, block_edges, cut_vertices })
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
    cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn dfs(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.stack.push((u.min(w), u.max(w)));
                self.dfs(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.cut[u] = true;
                    }
                    let e = (u.min(w), u.max(w));
                    let mut block = Vec::new();
                    while let Some(top) = self.stack.pop() {
                        block.push(top);
                        if top == e {
                            break;
                        }
                    }
                    self.out.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u.min(w), u.max(w)));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.cut[u] = true;
        }
    }
}

pub fn is_cactus(g: &Graph) -> Result<bool> {
    Ok(blocks_and_cut_vertices(g)?.is_cactus())
}

/// Atoms of the clique-separator decomposition, as sorted vertex lists in
/// lexicographic order.
///
/// At each step the smallest clique whose removal disconnects the current
/// part is used (ties broken by the sorted vertex names); the part splits
/// into `G[C ∪ S]` for each component `C` of `G − S`.
pub fn clique_separator_atoms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    g.require_connected()?;
    let mut atoms: Vec<u64> = Vec::new();
    let mut work = vec![g.all_mask()];
    while let Some(part) = work.pop() {
        match smallest_clique_separator(g, part) {
            None => atoms.push(part),
            Some(sep) => {
                let mut rest = part & !sep;
                while rest != 0 {
                    let comp = g.reach(1 << rest.trailing_zeros(), part & !sep);
                    rest &= !comp;
                    work.push(comp | sep);
                }
            }
        }
    }
    let mut out: Vec<Vec<usize>> = atoms.into_iter().map(|m| mask_bits(m).collect()).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest clique `S ⊂ part` such that `G[part − S]` is disconnected.
pub(crate) fn smallest_clique_separator(g: &Graph, part: u64) -> Option<u64> {
    let verts: Vec<usize> = mask_bits(part).collect();
    let mut cliques_by_size: Vec<Vec<u64>> = vec![Vec::new()];
    cliques_by_size[0].push(0);
    let mut size = 0;
    loop {
        let mut next = Vec::new();
        for &c in &cliques_by_size[size] {
            let start = if c == 0 { 0 } else { 64 - c.leading_zeros() as usize };
            for &v in verts.iter().filter(|&&v| v >= start) {
                if g.neighbor_mask(v) & c == c {
                    next.push(c | 1 << v);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        size += 1;
        let mut found: Vec<u64> = next.iter().copied().filter(|&s| separates(g, part, s)).collect();
        if !found.is_empty() {
            found.sort_by_key(|&s| name_key(g, s));
            return found.into_iter().next();
        }
        cliques_by_size.push(next);
    }
}

fn separates(g: &Graph, part: u64, sep: u64) -> bool {
    let rest = part & !sep;
    rest != 0 && g.reach(1 << rest.trailing_zeros(), rest) != rest
}

fn name_key(g: &Graph, set: u64) -> Vec<String> {
    let mut names: Vec<String> = mask_bits(set).map(|v| g.name(v).to_string()).collect();
    names.sort();
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_examples() {
        let bowtie = Graph::numbered(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let b = blocks_and_cut_vertices(&bowtie).unwrap();
        assert_eq!(b.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(b.cut_vertices, vec![2]);
        assert!(b.is_cactus());

        let c5 = blocks_and_cut_vertices(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.blocks.len(), 1);
        assert!(c5.cut_vertices.is_empty());

        let p4 = blocks_and_cut_vertices(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.blocks.len(), 3);
        assert_eq!(p4.cut_vertices, vec![1, 2]);

        assert!(!is_cactus(&Graph::complete(4).unwrap()).unwrap());
        assert!(blocks_and_cut_vertices(&Graph::numbered(4, &[(1, 2), (3, 4)]).unwrap()).is_err());
    }

    #[test]
    fn block_edges_partition_edges() {
        let g = Graph::numbered(6, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let b = blocks_and_cut_vertices(&g).unwrap();
        let mut all: Vec<_> = b.block_edges.concat();
        all.sort();
        assert_eq!(all, g.edges());
    }

    #[test]
    fn atoms_examples() {
        let diamond = Graph::numbered(4, &[(1, 2), (2, 3), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(clique_separator_atoms(&diamond).unwrap(), vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(clique_separator_atoms(&Graph::cycle(5).unwrap()).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        let pendant = Graph::numbered(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert_eq!(clique_separator_atoms(&pendant).unwrap(), vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(clique_separator_atoms(&Graph::complete(4).unwrap()).unwrap(), vec![vec![0, 1, 2, 3]]);
    }
}
