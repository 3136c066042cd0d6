//! Resurgence of a sum of ideals in disjoint variables.

use resurgence::engine::combine::{disjoint_sum_rho, SumConfig, SumPart};
use resurgence::Graph;

fn main() -> resurgence::Result<()> {
    let parts = ["a", "b", "c"]
        .iter()
        .map(|p| Ok(SumPart::new(Graph::cycle(3)?.rename(|s| format!("{p}{s}"))?.cover_ideal()?)))
        .collect::<resurgence::Result<Vec<_>>>()?;
    for k in 1..=parts.len() {
        let r = disjoint_sum_rho(&parts[..k], &SumConfig::default())?;
        println!("{k} triangle covers: p = {:?}, rho = {}", r.p, r.report.rho.summary());
        for w in &r.tech_res {
            println!("  witness at ({}, {})", w.s, w.t);
        }
    }
    Ok(())
}
