use serde::Serialize;

use super::invariants::{self, Bipartition};
use super::structure::{blocks_and_cut_vertices, clique_separator_atoms};
use super::Graph;
use crate::error::Result;

/// The most specific class found, in the order bipartite, odd cycle,
/// cactus, clique-sum of bipartite graphs and odd cycles, complete
/// multipartite, `χ = ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphKind {
    Bipartite,
    OddCycle { length: usize },
    Cactus { smallest_odd_cycle: Option<usize> },
    CliquesumBipartiteOddcycles { halves: Vec<usize>, k: Vec<Option<usize>> },
    CompleteMultipartite { parts: Vec<usize> },
    ChiEqualsOmega,
    Unknown,
}

/// Data for clique-sums of bipartite graphs and odd cycles: the distinct
/// half-lengths `n_1 < … < n_r` of induced odd cycles (cycle length
/// `2n_i + 1`) and `k_{n_i}(G)` for each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClass {
    pub halves: Vec<usize>,
    /// `None` when the conflict graph exceeds the exact-solver guard.
    pub k: Vec<Option<usize>>,
}

impl EdgeClass {
    pub fn n1(&self) -> Option<usize> {
        self.halves.first().copied()
    }

    pub fn is_bipartite_only(&self) -> bool {
        self.halves.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub coloring: Vec<usize>,
    pub max_clique: Vec<usize>,
    pub max_independent_set: Vec<usize>,
    pub odd_cycle: Option<Vec<usize>>,
    pub blocks: Vec<Vec<usize>>,
    pub atoms: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClassification {
    pub kind: GraphKind,
    pub num_vertices: usize,
    pub chi: usize,
    pub omega: usize,
    pub independence: usize,
    pub bipartite: bool,
    pub chi_equals_omega: bool,
    pub cactus: bool,
    pub smallest_odd_cycle: Option<usize>,
    pub multipartite_parts: Option<Vec<usize>>,
    pub edge_class: Option<EdgeClass>,
    pub certificates: Certificates,
}

pub fn classify(g: &Graph) -> Result<GraphClassification> {
    g.require_connected()?;
    g.require_no_isolated()?;
    let coloring = invariants::coloring(g)?;
    let max_clique = invariants::maximum_clique(g)?;
    let max_independent_set = invariants::maximum_independent_set(g)?;
    let bip = invariants::bipartition(g);
    let bipartite = bip.is_bipartite();
    let odd_cycles = invariants::induced_odd_cycles(g, None);
    let smallest_odd_cycle = odd_cycles.first().map(Vec::len);
    let blocks = blocks_and_cut_vertices(g)?;
    let cactus = blocks.is_cactus();
    let atoms = clique_separator_atoms(g)?;
    let multipartite_parts = multipartite_parts(g);
    let chi = coloring.chi;
    let omega = max_clique.len();

    let in_edge_class = atoms.iter().all(|a| {
        let h = g.induced_subgraph(a).expect("atoms are vertex subsets");
        invariants::is_bipartite(&h) || is_odd_cycle(&h)
    });
    let edge_class = in_edge_class.then(|| {
        let mut halves: Vec<usize> = odd_cycles.iter().map(|c| (c.len() - 1) / 2).collect();
        halves.dedup();
        let k = halves.iter().map(|&n| invariants::k_n(g, n).ok()).collect();
        EdgeClass { halves, k }
    });

    let kind = if bipartite {
        GraphKind::Bipartite
    } else if is_odd_cycle(g) {
        GraphKind::OddCycle { length: g.num_vertices() }
    } else if cactus {
        GraphKind::Cactus { smallest_odd_cycle }
    } else if let Some(ec) = &edge_class {
        GraphKind::CliquesumBipartiteOddcycles { halves: ec.halves.clone(), k: ec.k.clone() }
    } else if let Some(parts) = &multipartite_parts {
        GraphKind::CompleteMultipartite { parts: parts.clone() }
    } else if chi == omega {
        GraphKind::ChiEqualsOmega
    } else {
        GraphKind::Unknown
    };

    Ok(GraphClassification {
        kind,
        num_vertices: g.num_vertices(),
        chi,
        omega,
        independence: max_independent_set.len(),
        bipartite,
        chi_equals_omega: chi == omega,
        cactus,
        smallest_odd_cycle,
        multipartite_parts,
        edge_class,
        certificates: Certificates {
            coloring: coloring.colors,
            max_clique,
            max_independent_set,
            odd_cycle: match bip {
                Bipartition::OddCycle(c) => Some(c),
                Bipartition::TwoColoring(_) => None,
            },
            blocks: blocks.blocks,
            atoms,
        },
    })
}

impl GraphClassification {
    /// Re-check every certificate directly against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let c = &self.certificates;
        let proper = c.coloring.len() == g.num_vertices()
            && c.coloring.iter().all(|&x| x < self.chi)
            && g.edges().iter().all(|&(a, b)| c.coloring[a] != c.coloring[b]);
        let clique = c.max_clique.len() == self.omega
            && c.max_clique.iter().enumerate().all(|(i, &a)| c.max_clique[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        let indep = c.max_independent_set.len() == self.independence
            && c.max_independent_set
                .iter()
                .enumerate()
                .all(|(i, &a)| c.max_independent_set[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
        let odd = match &c.odd_cycle {
            Some(cyc) => !self.bipartite && Bipartition::OddCycle(cyc.clone()).verify(g),
            None => self.bipartite && self.chi <= 2,
        };
        let atoms_ok = match &self.edge_class {
            Some(_) => c.atoms.iter().all(|a| {
                let h = g.induced_subgraph(a).expect("atoms are vertex subsets");
                invariants::is_bipartite(&h) || is_odd_cycle(&h)
            }),
            None => true,
        };
        let multi_ok = match &self.multipartite_parts {
            Some(p) => p.iter().sum::<usize>() == g.num_vertices() && multipartite_parts(g).as_ref() == Some(p),
            None => true,
        };
        proper && clique && indep && odd && atoms_ok && multi_ok && self.chi >= self.omega
    }
}

/// Connected, 2-regular, odd number of vertices.
pub fn is_odd_cycle(g: &Graph) -> bool {
    let n = g.num_vertices();
    n >= 3 && n % 2 == 1 && g.num_edges() == n && (0..n).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Part sizes (ascending) when the complement is a disjoint union of cliques.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let co = g.complement();
    let mut parts = Vec::new();
    for comp in co.components() {
        let k = comp.len();
        if co.induced_subgraph(&comp).ok()?.num_edges() != k * (k - 1) / 2 {
            return None;
        }
        parts.push(k);
    }
    parts.sort_unstable();
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds() {
        let c7 = classify(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(c7.kind, GraphKind::OddCycle { length: 7 });
        assert!(c7.verify(&Graph::cycle(7).unwrap()));

        let k222 = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        let c = classify(&k222).unwrap();
        assert_eq!(c.kind, GraphKind::CompleteMultipartite { parts: vec![2, 2, 2] });
        assert!(c.chi_equals_omega);
        assert!(c.verify(&k222));

        assert_eq!(classify(&Graph::cycle(6).unwrap()).unwrap().kind, GraphKind::Bipartite);
    }

    #[test]
    fn two_triangles_at_distance_two() {
        let g = Graph::numbered(7, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]).unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(c.kind, GraphKind::Cactus { smallest_odd_cycle: Some(3) });
        let ec = c.edge_class.clone().unwrap();
        assert_eq!(ec.halves, vec![1]);
        assert_eq!(ec.k, vec![Some(2)]);
        assert_eq!(c.certificates.atoms.len(), 4);
        assert!(c.verify(&g));
    }

    #[test]
    fn non_cactus_edge_class() {
        // two triangles sharing an edge, plus a pendant 5-cycle through x4
        let g = Graph::numbered(
            8,
            &[(1, 2), (2, 3), (1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)],
        )
        .unwrap();
        let c = classify(&g).unwrap();
        assert_eq!(c.kind, GraphKind::CliquesumBipartiteOddcycles { halves: vec![1, 2], k: vec![Some(1), Some(1)] });
    }

    #[test]
    fn unknown_and_chi_omega() {
        // wheel on 6 vertices (odd rim): chi 4, omega 3
        let w = Graph::numbered(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)])
            .unwrap();
        let c = classify(&w).unwrap();
        assert_eq!(c.kind, GraphKind::Unknown);
        assert_eq!((c.chi, c.omega), (4, 3));
        let k4 = classify(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(k4.kind, GraphKind::CompleteMultipartite { parts: vec![1, 1, 1, 1] });
        assert!(k4.chi_equals_omega);
        assert!(classify(&Graph::numbered(4, &[(1, 2), (3, 4)]).unwrap()).is_err());
    }
}
