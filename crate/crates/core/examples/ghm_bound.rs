//! Upper bounds on resurgence from two checkable containments.

use resurgence::engine::checks::gen_ghm_bound;
use resurgence::graph::builtin_graph;
use resurgence::MonomialIdeal;

fn main() -> resurgence::Result<()> {
    let g = builtin_graph("C5")?;
    for (label, i, n, k) in [("I(C5)", g.edge_ideal()?, 3, 1), ("J(C5)", g.cover_ideal()?, 2, 2)] {
        let m = MonomialIdeal::maximal(i.ambient());
        let r = gen_ghm_bound(&i, n, &m, k)?;
        println!(
            "{label} n = {n} k = {k}: first {}, second {}, bound {:?}",
            r.first.holds,
            r.second.holds,
            r.bound.map(|b| resurgence::rational::format(&b))
        );
        for f in &r.flags {
            println!("  {f}");
        }
    }
    Ok(())
}
