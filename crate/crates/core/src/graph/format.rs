//! Graph and hypergraph files.
//!
//! Text form:
//! ```text
//! vertices: x1 x2 x3
//! edge: x1 x2
//! edge: x2 x3
//! ```
//! Hypergraph edges list any number of vertices. The JSON form is
//! `{"vertices": [...], "edges": [[...], ...]}`; input starting with `{` is
//! read as JSON.

use serde::{Deserialize, Serialize};

use super::{Graph, Hypergraph};
use crate::error::{Error, Result};
use crate::ideal::VariableSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

/// Vertex names and raw edges, before validation as a graph or hypergraph.
fn parse_raw(text: &str) -> Result<GraphJson> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    let mut vertices: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| Error::parse(i + 1, "expected `key: values`"))?;
        let items: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        match key.trim() {
            "vertices" if vertices.is_none() => vertices = Some(items),
            "vertices" => return Err(Error::parse(i + 1, "repeated vertices line")),
            "edge" => {
                if vertices.is_none() {
                    return Err(Error::parse(i + 1, "edge before vertices line"));
                }
                edges.push(items);
            }
            other => return Err(Error::parse(i + 1, format!("unknown key {other:?}"))),
        }
    }
    let vertices = vertices.ok_or_else(|| Error::parse(1, "missing vertices line"))?;
    Ok(GraphJson { vertices, edges })
}

fn indices(vars: &VariableSet, edge: &[String]) -> Result<Vec<usize>> {
    edge.iter().map(|s| vars.index_of(s).ok_or_else(|| Error::UnknownVertex(s.clone()))).collect()
}

pub fn graph_from_json(raw: &GraphJson) -> Result<Graph> {
    let vars = VariableSet::new(raw.vertices.iter().cloned())?;
    let mut pairs = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        match indices(&vars, e)?[..] {
            [a, b] => pairs.push((a, b)),
            _ => return Err(Error::InvalidGraph(format!("edge {e:?} does not have two vertices"))),
        }
    }
    Graph::new(vars, pairs)
}

pub fn hypergraph_from_json(raw: &GraphJson) -> Result<Hypergraph> {
    let vars = VariableSet::new(raw.vertices.iter().cloned())?;
    let edges = raw.edges.iter().map(|e| indices(&vars, e)).collect::<Result<Vec<_>>>()?;
    Hypergraph::new(vars, edges)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    graph_from_json(&parse_raw(text)?)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    hypergraph_from_json(&parse_raw(text)?)
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson {
        vertices: g.vertices().names().to_vec(),
        edges: g.edges().iter().map(|&(a, b)| vec![g.name(a).to_string(), g.name(b).to_string()]).collect(),
    }
}

pub fn hypergraph_to_json(h: &Hypergraph) -> GraphJson {
    GraphJson {
        vertices: h.vertices().names().to_vec(),
        edges: h.edges().iter().map(|e| e.iter().map(|&v| h.vertices().name(v).to_string()).collect()).collect(),
    }
}

fn write_raw(raw: &GraphJson) -> String {
    let mut out = format!("vertices: {}\n", raw.vertices.join(" "));
    for e in &raw.edges {
        out.push_str(&format!("edge: {}\n", e.join(" ")));
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    write_raw(&graph_to_json(g))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    write_raw(&hypergraph_to_json(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write_graph(&g);
        assert!(text.starts_with("vertices: x1 x2 x3 x4 x5\nedge: x1 x2\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(write_graph(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn json_round_trip() {
        let h = Hypergraph::numbered(5, &[&[1, 2, 3], &[3, 4, 5], &[5, 1, 2]]).unwrap();
        let json = serde_json::to_string(&hypergraph_to_json(&h)).unwrap();
        assert_eq!(parse_hypergraph(&json).unwrap(), h);
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph("edge: a b\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("vertices: a b\nedge: a c\n"), Err(Error::UnknownVertex(_))));
        assert!(matches!(parse_graph("vertices: a b c\nedge: a b c\n"), Err(Error::InvalidGraph(_))));
        assert!(matches!(parse_graph("vertices: a b\nfoo: a\n"), Err(Error::Parse { line: 2, .. })));
    }
}
