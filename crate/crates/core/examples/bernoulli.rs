//! q-Bernoulli law: pmf, moments, tails and the infinite-trial limit.
use qprob::qdist::{bernoulli_inf_pmf, bernoulli_moments, bernoulli_nonzero_tail, bernoulli_pmf};
use qprob::qnum::{ratio, QBase};

fn main() -> qprob::Result<()> {
    let (p, q) = (ratio(1, 2), QBase::from_ratio(1, 2));
    for n in [2, 4] {
        println!("n = {n}:\n{}", bernoulli_pmf(n, &p, &q)?);
        println!("moments: {}", bernoulli_moments(n, &p, &q)?);
        println!("Pr(at most 1 nonzero) = {}", bernoulli_nonzero_tail(n, &p, &q, 1)?);
    }
    let inf = bernoulli_inf_pmf(&p, &q, 8, &ratio(1, 1_000_000_000_000))?;
    println!("infinitely many trials, first entries:\n{inf}");
    Ok(())
}
