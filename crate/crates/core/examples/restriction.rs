//! Failures for an induced subgraph lift to failures for the whole graph.

use resurgence::engine::checks::restriction_monotonicity_check;
use resurgence::engine::SweepConfig;
use resurgence::graph::builtin_graph;

fn main() -> resurgence::Result<()> {
    let g = builtin_graph("c5-pendant")?;
    let cycle: Vec<usize> = (0..5).collect();
    let v = restriction_monotonicity_check(&g, &cycle, SweepConfig::new(6, 5))?;
    println!("edge: {} failures, all lift: {}", v.edge.failures, v.edge.all_lift());
    println!("cover: {} failures, all lift: {}", v.cover.failures, v.cover.all_lift());
    Ok(())
}
