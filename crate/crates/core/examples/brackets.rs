//! q-brackets, factorials, binomials and their rebased forms.
use qprob::qnum::{bracket, q_binomial, q_factorial, rebase_binomial, QBase};

fn main() {
    let q = QBase::from_ratio(1, 2);
    println!("q = {q}");
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| q_binomial(n, k, &q).to_string()).collect();
        println!("[{n}] = {:<8} [{n}]! = {:<10} row: {}", bracket(n, &q).to_string(), q_factorial(n as u32, &q).to_string(), row.join(" "));
    }
    println!("[4 choose 2] in base 2 = {}", rebase_binomial(4, 2, &q));
}
