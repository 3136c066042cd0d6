//! Read a graph file (default: the five-cycle from the corpus) and report
//! both ideals.

use resurgence::engine::{exact_cover_resurgence, exact_edge_resurgence, ReportConfig};
use resurgence::graph::format::parse_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/c5.graph").to_string());
    let g = parse_graph(&std::fs::read_to_string(&path)?)?;
    let cfg = ReportConfig::default();
    let cover = exact_cover_resurgence(&g, &cfg)?;
    let edge = exact_edge_resurgence(&g, &cfg)?;
    println!("{path}");
    println!("  J(G): rho = {}, rho_a = {}", cover.rho.summary(), cover.rho_a.summary());
    println!("  I(G): rho = {}, rho_a = {}", edge.rho.summary(), edge.rho_a.summary());
    Ok(())
}
