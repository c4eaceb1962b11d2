//! Convergence tables for the tabulated limits.
use qprob::qnum::{approx, ratio, QBase};
use qprob::qverify::{limit_table, LimitName, LimitSpec, LIMIT_NAMES};

fn main() -> qprob::Result<()> {
    let eps = ratio(1, 10).pow(30);
    for name in LIMIT_NAMES {
        let name: LimitName = name.parse()?;
        let table = limit_table(&name.default_spec(), &name.default_sequence(), &eps)?;
        let rows: Vec<String> = table.rows.iter().map(|r| format!("{}: {:.3e}", r.index, approx(r.distance.hi()))).collect();
        println!("{name}  {}  decreasing: {}", rows.join(", "), table.strictly_decreasing);
    }
    // For q != 2 the super-unit product tends to 1/E_1(lambda).
    let q = QBase::from_ratio(3, 1);
    for spec in [
        LimitSpec::SuperUnitProduct { lambda: ratio(1, 5), q: q.clone() },
        LimitSpec::SuperUnitExponential { lambda: ratio(1, 5), q },
    ] {
        let table = limit_table(&spec, &[10, 20, 30], &eps)?;
        let rows: Vec<String> = table.rows.iter().map(|r| format!("{:.3e}", approx(r.distance.hi()))).collect();
        println!("{:?}: {}", spec.params(), rows.join(", "));
    }
    Ok(())
}
