//! Cover ideals of joins, where symbolic and ordinary powers agree exactly
//! when the resurgence is 1.

use resurgence::engine::checks::{join_characterization_check, JoinCase};
use resurgence::Graph;

fn main() -> resurgence::Result<()> {
    let cases = [
        ("K_{2,2,2}", JoinCase::Multipartite { parts: vec![2, 2, 2] }),
        ("K_{1,1,3}", JoinCase::Multipartite { parts: vec![1, 1, 3] }),
        ("K_2c join P3", JoinCase::Bipartite { m: 2, h: Graph::path(3)? }),
    ];
    for (label, case) in &cases {
        let v = join_characterization_check(case)?;
        println!("{label}: {}", serde_json::to_string(&v).expect("serialisable"));
    }
    Ok(())
}
