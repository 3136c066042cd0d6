//! Symbolic powers of the cover ideal of the bowtie, computed by both
//! engines, against the ordinary powers.

use resurgence::graph::builtin_graph;
use resurgence::symbolic::{symbolic_power_cross_checked};

fn main() -> resurgence::Result<()> {
    let j = builtin_graph("bowtie")?.cover_ideal()?;
    println!("J = ({})", j.display_generators().join(", "));
    for s in 1..=4 {
        let sym = symbolic_power_cross_checked(&j, s)?;
        let same = sym.equals(&j.power(s)?)?;
        println!("s = {s}: {} generators, alpha = {}, equals J^{s}: {same}", sym.num_generators(), sym.alpha()?);
    }
    Ok(())
}
