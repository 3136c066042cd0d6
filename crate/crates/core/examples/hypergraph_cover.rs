//! Bounds for the cover ideal of a 3-uniform hypergraph.

use resurgence::engine::{ideal_resurgence, ReportConfig};
use resurgence::graph::format::parse_hypergraph;

fn main() -> resurgence::Result<()> {
    let h = parse_hypergraph("vertices: 1 2 3 4 5\nedge: 1 2 3\nedge: 3 4 5\nedge: 5 1 2\n")?;
    let j = h.cover_ideal()?;
    let r = ideal_resurgence(&j, Some(&h), &ReportConfig::default())?;
    println!("J(H) = ({})", j.display_generators().join(", "));
    println!("rho in {}, rho_a in {}", r.rho.summary(), r.rho_a.summary());
    println!("{}", r.to_json());
    Ok(())
}
