//! Waiting times: q-geometric and q-negative-binomial laws, and the problem of parties.
use qprob::qdist::{geometric_pmf, negbinomial_pmf, parties_probabilities};
use qprob::qnum::{approx, ratio, QBase};

fn main() -> qprob::Result<()> {
    let (p, q) = (ratio(1, 2), QBase::from_ratio(1, 2));
    let eps = ratio(1, 1_000_000_000_000);
    let geo = geometric_pmf(&p, &q, 6, false, &eps)?;
    println!("geometric (defect holds the chance of never seeing a nonzero):\n{geo}");
    let rescaled = geometric_pmf(&p, &q, 6, true, &eps)?;
    println!("rescaled:\n{rescaled}");
    println!("second nonzero:\n{}", negbinomial_pmf(2, &p, &q, 6, &eps)?);
    for (a, b) in [(1, 2), (2, 3), (3, 3)] {
        let parties = parties_probabilities(a, b, &p, &q)?;
        println!("a = {a}, b = {b}: P1 = {} ~ {:.6}, P2 = {}", parties.p1, approx(&parties.p1), parties.p2);
    }
    Ok(())
}
