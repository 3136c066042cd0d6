//! One line per acceptance criterion; the test fails if any line fails.

use std::io::Write;
use std::time::Instant;

use resurgence::verify::{run, CRITERIA};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let outcome = run(id);
        // written to the stderr handle directly so the lines survive output capture
        let _ = writeln!(std::io::stderr(), "{outcome} ({:.1}s)", start.elapsed().as_secs_f64());
        if !outcome.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
