//! Runs catalog identities on a reduced grid and prints one line per identity.
use qprob::qverify::{default_grid, gate, run_identities};

fn main() -> qprob::Result<()> {
    let ids: Vec<String> = std::env::args().skip(1).collect();
    let ids = if ids.is_empty() { vec!["I2_39".into(), "I3_16".into(), "I4_10".into(), "I7_12".into()] } else { ids };
    let grid = default_grid().with_overrides(&["max_int=5"])?;
    let reports = run_identities(&ids, &grid)?;
    for r in &reports {
        println!("{:<7} {:<14} {:?}  ({} bindings)", r.id, r.mode.to_string(), r.outcome, r.bindings);
    }
    println!("all gated identities pass: {}", gate(&reports, false));
    Ok(())
}
