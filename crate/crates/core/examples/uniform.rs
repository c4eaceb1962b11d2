//! q-uniform draws and the law of the range of several draws.
use qprob::qdist::{range_pmf, range_pmf_brute_force, uniform_moments, uniform_pmf};
use qprob::qnum::QBase;

fn main() -> qprob::Result<()> {
    let q = QBase::from_ratio(1, 2);
    println!("uniform M = 3:\n{}", uniform_pmf(3, &q));
    println!("moments: {}", uniform_moments(3, &q));
    for n in 1..=3 {
        let range = range_pmf(3, n, &q)?;
        assert_eq!(range, range_pmf_brute_force(3, n, &q)?);
        println!("range of {n} draws:\n{range}");
    }
    Ok(())
}
