//! Resurgence of cover ideals of odd cycles, with the failing containments
//! that realise the value.

use resurgence::engine::{exact_cover_resurgence, ReportConfig};
use resurgence::Graph;

fn main() -> resurgence::Result<()> {
    for n in [3, 5, 7, 9] {
        let g = Graph::cycle(n)?;
        let report = exact_cover_resurgence(&g, &ReportConfig::without_sweep())?;
        println!("C{n}: rho = {}, rho_a = {}", report.rho.summary(), report.rho_a.summary());
    }
    Ok(())
}
