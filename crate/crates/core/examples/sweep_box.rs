//! Every containment I^(s) ⊆ I^t with t ≤ s in a box, with the lower bound
//! the failures give.

use resurgence::engine::{sweep, SweepConfig};
use resurgence::graph::builtin_graph;

fn main() -> resurgence::Result<()> {
    let i = builtin_graph("two-triangles-d2")?.edge_ideal()?;
    let r = sweep(&i, SweepConfig::new(8, 6))?;
    for t in (1..=r.t_max).rev() {
        let row: String = (1..=r.s_max)
            .map(|s| match r.cell(s, t).map(|c| c.holds) {
                Some(Some(true)) => '.',
                Some(Some(false)) => 'x',
                Some(None) => '?',
                // s < t fails for degree reasons and is not evaluated
                None => ' ',
            })
            .collect();
        println!("t = {t}: {row}");
    }
    println!("sup s/t over failures ≥ {}", resurgence::rational::format(&r.lower_bound()));
    Ok(())
}
