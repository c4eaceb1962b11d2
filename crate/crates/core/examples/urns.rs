//! Urn laws: q-hypergeometric draws and contagion, checked against path enumeration.
use qprob::qdist::{contagious_pmf, hypergeom_pmf};
use qprob::qnum::QBase;
use qprob::qprocess::{aggregate, Scheme};

fn main() -> qprob::Result<()> {
    let q = QBase::from_ratio(1, 2);
    let hyper = hypergeom_pmf(3, 2, 3, &q)?;
    println!("hypergeometric m = 3, u = 2, n = 3:\n{hyper}");
    assert_eq!(hyper, aggregate(&Scheme::Hypergeom { m: 3, u: 2, q: q.clone() }, 3)?);
    for s in [-1, 0, 1, 2] {
        let pmf = contagious_pmf(2, 2, s, 3, &q)?;
        assert_eq!(pmf, aggregate(&Scheme::Contagious { m: 2, u: 2, s, q: q.clone() }, 3)?);
        println!("contagion s = {s}:\n{pmf}");
    }
    Ok(())
}
