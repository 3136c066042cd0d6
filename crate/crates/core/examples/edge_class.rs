//! Edge ideals of graphs built from triangles kept apart by paths: the
//! resurgence grows with the number of far-apart triangles while the
//! asymptotic resurgence does not.

use resurgence::engine::{exact_edge_resurgence, ReportConfig};
use resurgence::graph::{builtin_graph, classify};
use resurgence::symbolic::edge_class_waldschmidt;

fn main() -> resurgence::Result<()> {
    for name in ["triangle-pendant", "two-triangles-d2", "three-triangles-d2", "cactus-c5-c7"] {
        let g = builtin_graph(name)?;
        let class = classify(&g)?.edge_class;
        let r = exact_edge_resurgence(&g, &ReportConfig::without_sweep())?;
        let w = edge_class_waldschmidt(&g)?;
        println!(
            "{name}: class {:?}, alpha-hat = {}, rho = {}, rho_a = {}",
            class.map(|c| c.halves),
            resurgence::rational::format(&w.upper),
            r.rho.summary(),
            r.rho_a.summary()
        );
    }
    Ok(())
}
