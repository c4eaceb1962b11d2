//! q-Poisson laws for q < 1 and q > 1, with certified enclosures.
use qprob::qdist::{poisson_moments, poisson_pmf};
use qprob::qnum::{q_exponential, ratio, QBase};

fn main() -> qprob::Result<()> {
    let eps = ratio(1, 1_000_000_000_000);
    let q = QBase::from_ratio(1, 2);
    println!("lambda = 1, q = 1/2:\n{}", poisson_pmf(&ratio(1, 1), &q, 5, &eps)?);
    println!("moments: {}", poisson_moments(&ratio(1, 1), &q)?);
    println!("E_0(1) in {}", q_exponential(0, &ratio(1, 1), &q, &eps)?);
    let big = QBase::from_ratio(2, 1);
    let pmf = poisson_pmf(&ratio(1, 3), &big, 12, &eps)?;
    println!("lambda = 1/3, q = 2: total mass in {}", pmf.total());
    Ok(())
}
