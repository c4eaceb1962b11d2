//! Path patterns, step conditionals and seeded simulation of the trial processes.
use qprob::qnum::{approx, ratio, QBase};
use qprob::qprocess::{enumerate_patterns, pattern_probability, sample_paths, Scheme};

fn main() -> qprob::Result<()> {
    let q = QBase::from_ratio(1, 2);
    let scheme = Scheme::Bernoulli { p: ratio(1, 2), q: q.clone() };
    for pattern in enumerate_patterns(3, 1) {
        println!("{pattern}: {}", pattern_probability(&pattern, &scheme)?);
    }
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for scheme in [scheme, Scheme::Contagious { m: 2, u: 2, s: 1, q }] {
        let report = sample_paths(&scheme, 4, 100_000, seed)?;
        println!("{scheme}: counts {:?}, TV = {:.5}", report.counts, approx(&report.tv_distance));
    }
    Ok(())
}
