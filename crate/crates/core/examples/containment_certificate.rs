//! Decide I^(s) ⊆ I^t and print either a witness or a factorisation of
//! every generator.

use resurgence::engine::check_containment;
use resurgence::graph::builtin_graph;

fn main() -> resurgence::Result<()> {
    let g = builtin_graph("C5")?;
    let i = g.edge_ideal()?;
    for (s, t) in [(3, 2), (3, 3), (6, 5)] {
        let r = check_containment(&i, s, t, true)?;
        let view = r.view(i.ambient());
        match &view.witness {
            Some(w) => println!("I^({s}) ⊄ I^{t}, witness {w}"),
            None => println!("I^({s}) ⊆ I^{t}, {} generators certified", view.certificate.map_or(0, |c| c.len())),
        }
    }
    Ok(())
}
