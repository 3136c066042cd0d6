//! Named graphs: `C<n>`, `P<n>`, `K<n>`, multipartite `K222` / `K1,2,2`,
//! `K<m>c` (edgeless), joins `A*B`, `Petersen`, and a few cacti and
//! clique-sums used throughout the examples and tests.

use super::Graph;
use crate::error::{Error, Result};
use crate::ideal::VariableSet;

pub const CATALOG: &[(&str, &str)] = &[
    ("C<n>", "cycle on x1..xn"),
    ("P<n>", "path on n vertices"),
    ("K<n>, K_<n>", "complete graph"),
    ("K<a><b>.., K<a>,<b>,..", "complete multipartite graph"),
    ("K<m>c", "m isolated vertices (for joins)"),
    ("A*B", "join of two named graphs"),
    ("Petersen", "Petersen graph"),
    ("bowtie", "two triangles sharing a vertex"),
    ("diamond", "two triangles sharing an edge"),
    ("triangle-c4", "triangle glued to a 4-cycle along an edge"),
    ("triangle-pendant", "triangle with a pendant edge"),
    ("two-triangles-d2", "two triangles joined by a path with two edges"),
    ("three-triangles-d2", "three triangles chained by paths with two edges"),
    ("cactus-c5-c7", "5-cycle and 7-cycle sharing a vertex, plus a pendant edge"),
    ("c5-pendant", "5-cycle with a pendant vertex"),
];

/// Look up a named graph; vertices are always `x1..xn`.
pub fn builtin_graph(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownGraph(name.to_string());
    if let Some((a, b)) = name.split_once('*') {
        let (ga, gb) = (builtin_graph(a.trim())?, builtin_graph(b.trim())?);
        let gb = gb.rename(|s| format!("__{s}"))?;
        return renumber(&ga.join(&gb)?);
    }
    match name {
        "Petersen" | "petersen" => {
            let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            e.extend((0..5).map(|i| (i, i + 5)));
            e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            return Graph::new(VariableSet::numbered("x", 10), e);
        }
        "bowtie" => return Graph::numbered(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]),
        "diamond" => return Graph::numbered(4, &[(1, 2), (2, 3), (1, 3), (2, 4), (3, 4)]),
        "triangle-c4" => return Graph::numbered(5, &[(1, 2), (2, 3), (1, 3), (2, 4), (4, 5), (5, 3)]),
        "triangle-pendant" => return Graph::numbered(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]),
        "two-triangles-d2" => {
            return Graph::numbered(7, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])
        }
        "three-triangles-d2" => {
            return Graph::numbered(
                11,
                &[
                    (1, 2),
                    (2, 3),
                    (1, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (5, 7),
                    (7, 8),
                    (8, 9),
                    (9, 10),
                    (10, 11),
                    (9, 11),
                ],
            )
        }
        "cactus-c5-c7" => {
            let mut e: Vec<(usize, usize)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
            // 7-cycle through x5 and x6..x11
            let ring = [5, 6, 7, 8, 9, 10, 11];
            e.extend((0..7).map(|i| (ring[i], ring[(i + 1) % 7])));
            e.push((1, 12));
            return Graph::numbered(12, &e);
        }
        "c5-pendant" => return Graph::numbered(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6)]),
        _ => {}
    }
    let (head, rest) = name.split_at(1.min(name.len()));
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    match head {
        "C" => Graph::cycle(num(rest)?),
        "P" => Graph::path(num(rest)?),
        "K" => {
            if let Some(m) = rest.strip_suffix('c') {
                let m = num(m)?;
                return Graph::new(VariableSet::numbered("x", m), Vec::new());
            }
            if let Some(n) = rest.strip_prefix('_') {
                return Graph::complete(num(n)?);
            }
            if rest.contains(',') {
                let parts = rest.split(',').map(num).collect::<Result<Vec<_>>>()?;
                return Graph::complete_multipartite(&parts);
            }
            if rest.len() == 1 {
                return Graph::complete(num(rest)?);
            }
            let parts = rest.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(unknown)).collect::<Result<Vec<_>>>()?;
            if parts.contains(&0) {
                return Err(unknown());
            }
            Graph::complete_multipartite(&parts)
        }
        _ => Err(unknown()),
    }
}

/// Rename vertices to `x1..xn` keeping their order.
fn renumber(g: &Graph) -> Result<Graph> {
    Graph::new(VariableSet::numbered("x", g.num_vertices()), g.edges().to_vec())
}
