//! Waldschmidt constants: exact for cover ideals, sampled for anything else.

use resurgence::graph::builtin_graph;
use resurgence::rational::format;
use resurgence::symbolic::{cover_waldschmidt, generic_waldschmidt};

fn main() -> resurgence::Result<()> {
    for name in ["C5", "K4", "Petersen", "K222"] {
        let g = builtin_graph(name)?;
        let w = cover_waldschmidt(&g)?;
        println!("alpha-hat(J({name})) = {}", format(&w.upper));
    }
    let i = builtin_graph("C5")?.edge_ideal()?;
    let w = generic_waldschmidt(&i, 6)?;
    println!("alpha-hat(I(C5)) in [{}, {}] from samples {:?}", format(&w.lower), format(&w.upper), w.samples);
    Ok(())
}
