//! The identity catalog. Each entry evaluates both sides of one identity
//! over the grid and records the first mismatch.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::check::{Binding, CheckMode, Checker, IdentityCheck};
use super::grid::{GridSpec, QDomain};
use super::limits::{limit_table, LimitSpec};
use crate::error::{QError, Result};
use crate::qdist::urn::hypergeom_entry;
use crate::qdist::{
    bernoulli_inf_pmf, bernoulli_moments, bernoulli_nonzero_tail, bernoulli_nonzero_tail_infinite,
    bernoulli_nonzero_tail_integral, bernoulli_pmf, bernoulli_pmf_formal, bernoulli_zero_tail,
    bernoulli_zero_tail_integral, central_moment_poly, contagious_pmf, factorial_moment, factorial_moment_closed,
    fewer_than_r_mass, geometric_entry, geometric_pmf, hypergeom_dual, hypergeom_pmf, negbinomial_pmf,
    negbinomial_tail, parties_p1_by_count, parties_probabilities, poisson_moments, poisson_pmf, range_pmf,
    range_pmf_alt_n2, range_pmf_brute_force, raw_moment, raw_moment_direct, uniform_moments, uniform_pmf,
};
use crate::qnum::scalar::choose2;
use crate::qnum::{
    approx, bracket, certified_sum, euler_coefficients, euler_operator_coefficients, int, powi, q_binomial, q_exponential,
    q_factorial, q_pochhammer, ratio, rebase_binomial, rebase_bracket, rebase_factorial, shifted_pow,
    shifted_pow_infinite, Interval, PPoly, QBase, Rational, TermSign,
};
use crate::qprocess::enumerate_patterns;

/// How an entry compares its two sides; tolerances are `10^-k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ModeSpec {
    Exact,
    Interval(u32),
    Monotone,
}

impl ModeSpec {
    fn mode(self) -> CheckMode {
        match self {
            ModeSpec::Exact => CheckMode::Exact,
            ModeSpec::Interval(k) => CheckMode::Interval(tenth_power(k)),
            ModeSpec::Monotone => CheckMode::Monotone,
        }
    }
}

struct Ctx<'a> {
    grid: &'a GridSpec,
    qs: Vec<QBase>,
}

type Runner = fn(&Ctx<'_>, &mut Checker);

/// One identity of the catalog.
pub struct CatalogEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub domain: QDomain,
    pub watchlist: bool,
    mode: ModeSpec,
    run: Runner,
}

impl CatalogEntry {
    pub fn mode(&self) -> CheckMode {
        self.mode.mode()
    }
}

macro_rules! entry {
    ($id:literal, $statement:literal, $mode:expr, $domain:expr, $run:expr) => {
        CatalogEntry { id: $id, statement: $statement, domain: $domain, watchlist: false, mode: $mode, run: $run }
    };
    ($id:literal, $statement:literal, $mode:expr, $domain:expr, $run:expr, watchlist) => {
        CatalogEntry { id: $id, statement: $statement, domain: $domain, watchlist: true, mode: $mode, run: $run }
    };
}

use ModeSpec::{Exact, Monotone};
use QDomain::{Any, SubUnit, SuperUnit, UpToOne};

static CATALOG: [CatalogEntry; 48] = [
    entry!("I2_7", "sum_k [n k] p^k (1 ∸ p)^(n-k) = 1", Exact, Any, i2_7),
    entry!("I2_8", "sum_k [n k] p^k (1 ∸ v)^(n-k) = sum_k [n k] (p ∸ v)^(n-k)", Exact, Any, i2_8),
    entry!("I2_10", "sum_k [n k] a^k (b ∔ v)^(n-k) = sum_k [n k] b^k (a ∔ v)^(n-k)", Exact, Any, i2_10),
    entry!("I2_11", "(x ∔ y)^m = sum_j [m j] x^(m-j) y^j q^C(j,2)", Exact, Any, i2_11),
    entry!("I2_13", "(x D_q)^m x^s = sum_k c_k x^k D_q^k x^s with the Euler operator coefficients", Exact, Any, i2_13),
    entry!("I2_32", "sum over compositions of n-k into k+1 runs of prod_{i<k} q^|a(i)| = [n k]", Exact, Any, i2_32),
    entry!("I2_35", "sum over compositions of N into k+1 runs of q^(-sum s a(s)) = q^(-Nk) [N+k k]", Exact, Any, i2_35),
    entry!("I2_39", "[n+k k] + [n+k k-1] q^(n+1) = [n+1+k k]", Exact, Any, i2_39),
    entry!("I2_41", "Pr(at most k zeros) equals its Jackson-integral form and the ratio of integrals", Exact, Any, i2_41),
    entry!("I2_42", "Pr(at most l nonzeros) = 1 - [n][n-1 l] ∫_0^p x^l (1 ∸ qx)^(n-1-l) d_qx", Exact, Any, i2_42),
    entry!("I2_43", "D_q (1 ∸ p)^n = -[n] (1 ∸ qp)^(n-1)", Exact, Any, i2_43),
    entry!(
        "I2_44",
        "sum_{i<=l} c^i/[i]! (1 ∸ p)^∞ = 1 - 1/(1-q) ∫_0^p (x/(1-q))^l/[l]! (1 ∸ qx)^∞ d_qx, c = p/(1-q)",
        ModeSpec::Interval(9),
        SubUnit,
        i2_44,
        watchlist
    ),
    entry!("I2_46", "E prod_{i<r} q^(-i) (xi - [i]) = p^r prod_{i<r} [n-i]", Exact, UpToOne, i2_46),
    entry!("I2_51", "mu'_(r+1) = ([n] p + p (1-p) D_q) mu'_r reproduces the direct raw moments", Exact, Any, i2_51),
    entry!(
        "I2_57",
        "mu_(r+1)(0; p) = p(1-p) (q [n][r] mu_(r-1)(1; pq) + D_q mu_r(1; p))",
        Exact,
        Any,
        i2_57
    ),
    entry!(
        "I2_58",
        "mu_(r+1)(-r; p) = p(1-p) (q^(-r) [n][r] mu_(r-1)(-r; pq) + D_q mu_r(-r; p))",
        Exact,
        Any,
        i2_58
    ),
    entry!("I2_20", "q-Bernoulli mean [n]p, second moment [n]p + q p^2 [n][n-1], variance [n]p(1-p)", Exact, UpToOne, i2_20),
    entry!("I3_3", "sum_{j>=1} (1 ∸ p)^(j-1) q^(j-1) p = 1 - (1 ∸ p)^∞", ModeSpec::Interval(12), SubUnit, i3_3),
    entry!("I3_4", "sum_{s>=0} (1 ∸ p)^s q^s = (1 - (1 ∸ p)^∞) / p", ModeSpec::Interval(12), SubUnit, i3_4),
    entry!("I3_5", "sum_{s<=N} (1 ∸ x)^s q^s = (1 - (1 ∸ x)^(N+1)) / x", Exact, Any, i3_5),
    entry!(
        "I3_9",
        "sum_s (1 ∸ p)^s q^s [r-1+s s] = p^(-r) (1 - (1 ∸ p)^∞ sum_{l<r} c^l/[l]!), c = p/(1-q)",
        ModeSpec::Interval(12),
        SubUnit,
        i3_9
    ),
    entry!("I3_16", "P1 + P2 = 1 for the division of stakes", Exact, Any, i3_16),
    entry!("I3_18", "P1 by waiting time equals P1 by count of nonzeros in a+b-1 trials", Exact, Any, i3_18),
    entry!("I4_6", "E_0(lambda) = 1 / (1 ∸ lambda(1-q))^∞", ModeSpec::Interval(12), SubUnit, i4_6),
    entry!("I4_10", "E_0(lambda) E_1(-lambda) = 1", ModeSpec::Interval(12), SubUnit, i4_10),
    entry!(
        "I4_13",
        "(1 ∸ x)^(a+b) = (1 ∸ x)^a (1 ∸ q^a x)^b and (1 ∸ x)^(-b) = 1 / (1 ∸ q^(-b) x)^b",
        Exact,
        Any,
        i4_13
    ),
    entry!("I4_15", "E_0(lambda z) / E_0(lambda) = sum_k lambda^k/[k]! (z ∸ 1)^k", ModeSpec::Interval(10), SubUnit, i4_15),
    entry!("I4_16", "E_0(b) E_1(-a) = sum_k (b ∸ a)^k / [k]!", ModeSpec::Interval(10), SubUnit, i4_16),
    entry!("I4_18", "q-Poisson mean lambda and variance lambda (1 - (1-q) lambda)", ModeSpec::Interval(9), SubUnit, i4_18),
    entry!(
        "I4_24",
        "(1 ∸ lambda/[n])^n tends to the reciprocal of sum_k q^(-C(k,2)) lambda^k / ([k]! (1 ∸ lambda)^k)",
        ModeSpec::Interval(6),
        SuperUnit,
        i4_24,
        watchlist
    ),
    entry!(
        "I4_24E",
        "(1 ∸ lambda/[n])^n tends to 1/E_1(lambda) = prod_(j>=1) (1 - (q-1) lambda q^(-j)); equals I4_24 at q = 2",
        ModeSpec::Interval(6),
        SuperUnit,
        i4_24e
    ),
    entry!("L4_3", "the n-trial q-Bernoulli law tends to the infinite-trial law", Monotone, SubUnit, l4_3),
    entry!("I5_3", "sum_k [m k][u n-k] q^((m-k)(n-k)) = [m+u n]", Exact, Any, i5_3),
    entry!("I5_5", "(1 ∸ x)^m (1 ∸ q^m x)^u = (1 ∸ x)^(m+u), coefficientwise", Exact, Any, i5_5),
    entry!("I5_11", "sum over compositions of q^(sum (m-s) a(s)) = q^((m-k)(n-k)) [n k]", Exact, Any, i5_11),
    entry!("I5_19", "[x]_(1/q) = q^(1-x)[x], [k]!_(1/q) = q^(-C(k,2))[k]!, [a b]_(1/q) = q^(b(b-a))[a b]", Exact, Any, i5_19),
    entry!(
        "I5_20",
        "the base-1/q hypergeometric pmf equals q^((u-k')(n-k')) [u k'][m n-k'] / [N n] with k' = n-k",
        Exact,
        Any,
        i5_20
    ),
    entry!("L5_17", "hypergeometric law with [m]/[N] -> p tends to the q-Bernoulli law (q > 1)", Monotone, SuperUnit, l5_17),
    entry!(
        "L5_25",
        "hypergeometric law with [u]/[N] -> p' tends to [n k] (1 ∸ p')^k p'^(n-k) (q < 1)",
        Monotone,
        SubUnit,
        l5_25
    ),
    entry!("I6_3", "sum_k [n k]_(q^-s) q^((m+sk)(n-k)) prod [m+as] prod [u+bs] = prod [m+u+gs]", Exact, Any, i6_3),
    entry!(
        "I6_5",
        "the rebased form in Q = q^(-s) with integer M, U, and its link [-s][M-a]_Q = [m+as]",
        Exact,
        Any,
        i6_5
    ),
    entry!("I6_11", "sum over compositions of q^(sum (m+si) a(i)) = q^((m+sk)(n-k)) [n k]_(q^-s)", Exact, Any, i6_11),
    entry!("I7_5", "q-uniform mean q[M]/[2], second moment q[M](q[2][M]+1)/([2][3])", Exact, Any, i7_5),
    entry!("I7_11", "the range pmf sums to 1 and matches brute force over all (M+1)^n tuples", Exact, Any, i7_11),
    entry!("I7_12", "Pr(r_1 > 0) = 0", Exact, Any, i7_12),
    entry!("I7_13", "the alternative two-draw range law sums to 1", Exact, Any, i7_13),
    entry!("N_ALL", "every closed-form pmf family sums to 1 (exactly, or with 1 inside a certified enclosure)", Exact, Any, n_all),
    entry!("I2_24", "infinite-trial mean p/(1-q) and variance p(1-p)/(1-q)", ModeSpec::Interval(9), SubUnit, i2_24),
];

/// Every catalog entry, in report order.
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn catalog_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.id).collect()
}

fn lookup(id: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| QError::Unknown(format!("unknown identity `{id}`; known ids: {}", catalog_ids().join(", "))))
}

fn evaluate(entry: &CatalogEntry, grid: &GridSpec) -> IdentityCheck {
    let mut checker = Checker::new(entry.mode());
    let (qs, skipped) = entry.domain.select(grid);
    checker.skip_all(skipped);
    (entry.run)(&Ctx { grid, qs }, &mut checker);
    checker.finish(entry.id, entry.statement, entry.watchlist)
}

/// Evaluates one identity over `grid`.
pub fn run_identity(id: &str, grid: &GridSpec) -> Result<IdentityCheck> {
    Ok(evaluate(lookup(id)?, grid))
}

/// Evaluates several identities concurrently; reports come back in the order requested.
pub fn run_identities<S: AsRef<str> + Sync>(ids: &[S], grid: &GridSpec) -> Result<Vec<IdentityCheck>> {
    let entries = ids.iter().map(|id| lookup(id.as_ref())).collect::<Result<Vec<_>>>()?;
    Ok(entries.par_iter().map(|e| evaluate(e, grid)).collect())
}

/// Evaluates the whole catalog.
pub fn run_all(grid: &GridSpec) -> Vec<IdentityCheck> {
    CATALOG.par_iter().map(|e| evaluate(e, grid)).collect()
}

/// True when every report passes, ignoring watchlist entries unless asked.
pub fn gate(reports: &[IdentityCheck], include_watchlist: bool) -> bool {
    reports.iter().filter(|r| include_watchlist || !r.watchlist).all(|r| r.outcome.passed())
}

fn tenth_power(k: u32) -> Rational {
    powi(&ratio(1, 10), k.into())
}

fn sum(items: impl Iterator<Item = Rational>) -> Rational {
    items.fold(Rational::zero(), |a, t| a + t)
}

fn ib(n: i64, k: i64, q: &QBase) -> Rational {
    q_binomial(n, k, q)
}

/// `(1 ∸ x)^n` for any integer `n`.
fn minus_pow(x: &Rational, n: i64, q: &QBase) -> Result<Rational> {
    shifted_pow(&Rational::one(), &-x, n, q)
}

fn binding(q: &QBase) -> Binding {
    Binding::new().with("q", q)
}

fn p_values(ctx: &Ctx<'_>, extra: &[Rational]) -> Vec<Rational> {
    let mut out = ctx.grid.ps.clone();
    out.extend(extra.iter().cloned());
    out
}

fn i2_7(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 0..=ctx.grid.max_int {
            for p in &ctx.grid.ps {
                let b = binding(q).with("n", n).with("p", p);
                c.exact(b, Ok(bernoulli_pmf_formal(n, p, q).total()), Ok(Rational::one()));
            }
        }
    }
}

fn i2_8(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 0..=i64::from(ctx.grid.max_int) {
            for p in &ctx.grid.ps {
                for v in &ctx.grid.ps {
                    let lhs = sum((0..=n).map(|k| ib(n, k, q) * powi(p, k) * q_pochhammer(v, (n - k) as u32, q)));
                    let rhs = (0..=n).try_fold(Rational::zero(), |acc, k| {
                        shifted_pow(p, &-v, n - k, q).map(|s| acc + ib(n, k, q) * s)
                    });
                    c.exact(binding(q).with("n", n).with("p", p).with("v", v), Ok(lhs), rhs);
                }
            }
        }
    }
}

fn i2_10(ctx: &Ctx<'_>, c: &mut Checker) {
    let n_max = i64::from(ctx.grid.max_int.min(6));
    let bs = p_values(ctx, &[Rational::one()]);
    let vs = p_values(ctx, &[ratio(-1, 2)]);
    let side = |a: &Rational, b: &Rational, v: &Rational, n: i64, q: &QBase| {
        (0..=n).try_fold(Rational::zero(), |acc, k| shifted_pow(b, v, n - k, q).map(|s| acc + ib(n, k, q) * powi(a, k) * s))
    };
    for q in &ctx.qs {
        for n in 0..=n_max {
            for a in &ctx.grid.ps {
                for b in &bs {
                    for v in &vs {
                        let bind = binding(q).with("n", n).with("a", a).with("b", b).with("v", v);
                        c.exact(bind, side(a, b, v, n, q), side(b, a, v, n, q));
                    }
                }
            }
        }
    }
}

fn i2_11(ctx: &Ctx<'_>, c: &mut Checker) {
    let values = p_values(ctx, &[Rational::one(), ratio(-1, 2)]);
    for q in &ctx.qs {
        for m in 0..=ctx.grid.max_int + 2 {
            let coefficients = euler_coefficients(m, q);
            for x in &values {
                for y in &values {
                    let m_i = i64::from(m);
                    let lhs = sum(coefficients.iter().enumerate().map(|(j, cj)| {
                        let j = j as i64;
                        cj * powi(x, m_i - j) * powi(y, j)
                    }));
                    c.exact(binding(q).with("m", m).with("x", x).with("y", y), Ok(lhs), shifted_pow(x, y, m_i, q));
                }
            }
        }
    }
}

fn i2_13(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for m in 1..=5u32 {
            let coefficients = match euler_operator_coefficients(m, q) {
                Ok(v) => v,
                Err(e) => {
                    c.exact(binding(q).with("m", m), Err::<Rational, _>(e), Ok(Rational::zero()));
                    continue;
                }
            };
            for s in 0..=i64::from(m) + 3 {
                let lhs = powi(&bracket(s, q), m.into());
                let rhs = sum(coefficients.iter().enumerate().map(|(idx, ck)| {
                    let k = idx as i64 + 1;
                    ck * (0..k).fold(Rational::one(), |acc, i| acc * bracket(s - i, q))
                }));
                c.exact(binding(q).with("m", m).with("s", s), Ok(lhs), Ok(rhs));
            }
        }
        c.exact(
            binding(q).with("m", 2).with("coefficients", "c_1, c_2"),
            euler_operator_coefficients(2, q).map(PPoly::new),
            Ok(PPoly::new(vec![Rational::one(), q.value().clone()])),
        );
    }
}

fn i2_32(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 0..=ctx.grid.max_int {
            for k in 0..=n {
                let lhs = sum(enumerate_patterns(n, k).iter().map(|pattern| {
                    let exponent: u32 = pattern.partial_sums()[..k as usize].iter().sum();
                    q.pow(exponent.into())
                }));
                c.exact(binding(q).with("n", n).with("k", k), Ok(lhs), Ok(ib(n.into(), k.into(), q)));
            }
        }
    }
}

fn i2_35(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = ctx.grid.max_int.saturating_sub(1);
    for q in &ctx.qs {
        for big_n in 0..=bound {
            for k in 0..=bound {
                let lhs = sum(enumerate_patterns(big_n + k, k).iter().map(|pattern| {
                    let exponent: i64 =
                        pattern.runs().iter().enumerate().map(|(s, a)| s as i64 * i64::from(*a)).sum();
                    q.pow(-exponent)
                }));
                let (n_i, k_i) = (i64::from(big_n), i64::from(k));
                let rhs = q.pow(-n_i * k_i) * ib(n_i + k_i, k_i, q);
                c.exact(binding(q).with("N", big_n).with("k", k), Ok(lhs), Ok(rhs));
            }
        }
    }
}

fn i2_39(ctx: &Ctx<'_>, c: &mut Checker) {
    let total = i64::from(ctx.grid.max_int) + 4;
    for q in &ctx.qs {
        for n in 0..=total {
            for k in 0..=total - n {
                let lhs = ib(n + k, k, q) + ib(n + k, k - 1, q) * q.pow(n + 1);
                c.exact(binding(q).with("n", n).with("k", k), Ok(lhs), Ok(ib(n + 1 + k, k, q)));
            }
        }
    }
}

fn i2_41(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 1..=ctx.grid.max_int {
            for k in 0..n {
                let integrand =
                    PPoly::monomial(Rational::one(), (n - 1 - k) as usize) * PPoly::q_pochhammer(q.value(), k, q);
                let whole = crate::qnum::jackson_integral(&integrand, &Rational::one(), q);
                for p in &ctx.grid.ps {
                    let b = binding(q).with("n", n).with("k", k).with("p", p);
                    c.exact(b.clone(), bernoulli_zero_tail(n, p, q, k), bernoulli_zero_tail_integral(n, p, q, k));
                    if !whole.is_zero() {
                        let ratio_form = crate::qnum::jackson_integral(&integrand, p, q) / &whole;
                        c.exact(b.with("form", "ratio"), bernoulli_zero_tail(n, p, q, k), Ok(ratio_form));
                    }
                }
            }
        }
    }
}

fn i2_42(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 1..=ctx.grid.max_int {
            for l in 0..n {
                for p in &ctx.grid.ps {
                    let b = binding(q).with("n", n).with("l", l).with("p", p);
                    c.exact(b, bernoulli_nonzero_tail(n, p, q, l), bernoulli_nonzero_tail_integral(n, p, q, l));
                }
            }
        }
    }
}

fn i2_43(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 1..=ctx.grid.max_int {
            let lhs = PPoly::q_pochhammer(&Rational::one(), n, q).q_derivative(q);
            let rhs = PPoly::q_pochhammer(q.value(), n - 1, q).scale(&-bracket(n.into(), q));
            c.exact(binding(q).with("n", n), Ok(lhs), Ok(rhs));
        }
    }
}

fn i2_44(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(12);
    for q in &ctx.qs {
        for p in ctx.grid.ps.iter().filter(|p| *p < &Rational::one()) {
            for l in 0..=4 {
                let b = binding(q).with("p", p).with("l", l);
                match bernoulli_nonzero_tail_infinite(p, q, l, &eps) {
                    Ok(t) => c.interval(b, Ok(t.direct), Ok(t.integral)),
                    Err(e) => c.interval(b, Err(e), Ok(Interval::point(Rational::zero()))),
                }
            }
        }
    }
}

fn i2_46(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 0..=ctx.grid.max_int {
            for r in 0..=n + 1 {
                for p in &ctx.grid.ps {
                    let b = binding(q).with("n", n).with("r", r).with("p", p);
                    c.exact(b, factorial_moment(n, p, q, r), Ok(factorial_moment_closed(n, p, q, r)));
                }
            }
        }
    }
}

fn i2_51(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 0..=ctx.grid.max_int {
            for r in 0..=4 {
                c.exact(binding(q).with("n", n).with("r", r), Ok(raw_moment(n, q, r)), Ok(raw_moment_direct(n, q, r)));
            }
        }
    }
}

fn p_one_minus_p() -> PPoly {
    PPoly::new(vec![Rational::zero(), Rational::one(), -Rational::one()])
}

/// Checks `mu_(r+1)(s_out) = p(1-p) (w [n][r] mu_(r-1)(s_in; pq) + D_q mu_r(s_in))`.
fn central_recursion(ctx: &Ctx<'_>, c: &mut Checker, shift: fn(u32) -> i64, weight: fn(&QBase, u32) -> Rational) {
    let n_max = ctx.grid.max_int.min(5);
    for q in &ctx.qs {
        for n in 0..=n_max {
            for r in 1..=3u32 {
                let (s_out, s_in) = (shift(r).min(0), shift(r));
                let lower = central_moment_poly(n, q, r - 1, s_in).rescale(q.value());
                let current = central_moment_poly(n, q, r, s_in).q_derivative(q);
                let scale = weight(q, r) * bracket(n.into(), q) * bracket(r.into(), q);
                let rhs = p_one_minus_p() * (lower.scale(&scale) + current);
                let lhs = central_moment_poly(n, q, r + 1, s_out);
                c.exact(binding(q).with("n", n).with("r", r), Ok(lhs), Ok(rhs));
            }
        }
    }
}

fn i2_57(ctx: &Ctx<'_>, c: &mut Checker) {
    central_recursion(ctx, c, |_| 1, |q, _| q.value().clone());
}

fn i2_58(ctx: &Ctx<'_>, c: &mut Checker) {
    central_recursion(ctx, c, |r| -i64::from(r), |q, r| q.pow(-i64::from(r)));
}

fn i2_20(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for n in 0..=ctx.grid.max_int {
            for p in &ctx.grid.ps {
                let b = binding(q).with("n", n).with("p", p);
                let from_pmf = bernoulli_pmf(n, p, q).map(|pmf| pmf.moments());
                let closed = bernoulli_moments(n, p, q);
                let n_i = i64::from(n);
                let second = bracket(n_i, q) * p + q.value() * p * p * bracket(n_i, q) * bracket(n_i - 1, q);
                c.exact(b.clone().with("moment", "second"), closed.as_ref().map(|m| m.second_moment.clone()).map_err(Clone::clone), Ok(second));
                c.exact(b, from_pmf, closed);
            }
        }
    }
}

fn i2_24(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(20);
    for q in &ctx.qs {
        for p in ctx.grid.ps.iter().filter(|p| *p < &Rational::one()) {
            let b = binding(q).with("p", p);
            let one_minus_q = Rational::one() - q.value();
            let moments = bernoulli_inf_pmf(p, q, 120, &eps).map(|pmf| enclosed_moments(&pmf, &one_minus_q));
            let mean = p / &one_minus_q;
            let variance = p * (Rational::one() - p) / &one_minus_q;
            match moments {
                Ok((m, v)) => {
                    c.interval(b.clone().with("moment", "mean"), Ok(m), Ok(Interval::point(mean)));
                    c.interval(b.with("moment", "variance"), Ok(v), Ok(Interval::point(variance)));
                }
                Err(e) => c.interval(b, Err(e), Ok(Interval::point(mean))),
            }
        }
    }
}

/// Mean and variance enclosures of a law on the values `[k]`, `q < 1`.
///
/// The unlisted mass sits on values in `[0, 1/(1-q)]`.
fn enclosed_moments(pmf: &crate::qdist::EnclosedPmf, one_minus_q: &Rational) -> (Interval, Interval) {
    let cap = one_minus_q.recip();
    let spread = |power: i64| {
        let unlisted = Interval::new(Rational::zero(), powi(&cap, power)).expect("ordered");
        &pmf.defect * &unlisted
    };
    let mut mean = spread(1);
    let mut second = spread(2);
    for (k, e) in &pmf.entries {
        let v = &pmf.values[k];
        mean = &mean + &e.scale(v);
        second = &second + &e.scale(&(v * v));
    }
    let variance = &second - &(&mean * &mean);
    (mean, variance)
}

fn i3_3(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(15);
    let j_max = ctx.grid.max_int.max(1);
    for q in &ctx.qs {
        for p in open_unit(&ctx.grid.ps) {
            let listed = sum((1..=j_max).map(|j| geometric_entry(j, p, q)));
            let lhs = negbinomial_tail(1, p, q, j_max, &eps).map(|t| t.shift(&listed));
            let rhs = shifted_pow_infinite(p, q, &eps).map(|i| (-&i).shift(&Rational::one()));
            c.interval(binding(q).with("p", p).with("j_max", j_max), lhs, rhs);
        }
    }
}

fn open_unit(ps: &[Rational]) -> impl Iterator<Item = &Rational> {
    ps.iter().filter(|p| p.is_positive() && *p < &Rational::one())
}

fn i3_4(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(15);
    for q in &ctx.qs {
        for p in open_unit(&ctx.grid.ps) {
            let mut t = Rational::zero();
            let lhs = certified_sum(
                |s| {
                    t = if s == 0 { Rational::one() } else { &t * (Rational::one() - q.pow(s as i64 - 1) * p) * q.value() };
                    t.clone()
                },
                |_| Some(q.value().clone()),
                &eps,
                TermSign::NonNegative,
            )
            .map(|s| s.enclosure());
            let rhs = shifted_pow_infinite(p, q, &(&eps * p)).map(|i| (-&i).shift(&Rational::one()).scale(&p.recip()));
            c.interval(binding(q).with("p", p), lhs, rhs);
        }
    }
}

fn i3_5(ctx: &Ctx<'_>, c: &mut Checker) {
    let xs = p_values(ctx, &[ratio(-1, 2), int(2)]);
    for q in &ctx.qs {
        for big_n in 0..=ctx.grid.max_int {
            for x in xs.iter().filter(|x| !x.is_zero()) {
                let lhs = sum((0..=big_n).map(|s| q_pochhammer(x, s, q) * q.pow(s.into())));
                let rhs = (Rational::one() - q_pochhammer(x, big_n + 1, q)) / x;
                c.exact(binding(q).with("N", big_n).with("x", x), Ok(lhs), Ok(rhs));
            }
        }
    }
}

fn i3_9(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(15);
    for q in &ctx.qs {
        for p in open_unit(&ctx.grid.ps) {
            for r in 1..=4u32 {
                let r_i = i64::from(r);
                let mut t = Rational::zero();
                let lhs = certified_sum(
                    |s| {
                        let s = s as i64;
                        t = if s == 0 {
                            Rational::one()
                        } else {
                            &t * (Rational::one() - q.pow(s - 1) * p) * q.value() * bracket(r_i - 1 + s, q) / bracket(s, q)
                        };
                        t.clone()
                    },
                    |k| Some(q.value() * bracket(r_i + k as i64, q) / bracket(k as i64 + 1, q)),
                    &eps,
                    TermSign::NonNegative,
                )
                .map(|s| s.enclosure());
                let scale = powi(p, -r_i);
                let rhs = fewer_than_r_mass(r, p, q, &(&eps / &scale))
                    .map(|m| (-&m).shift(&Rational::one()).scale(&scale));
                c.interval(binding(q).with("p", p).with("r", r), lhs, rhs);
            }
        }
    }
}

fn i3_16(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = ctx.grid.max_int.clamp(1, 6);
    for q in &ctx.qs {
        for a in 1..=bound {
            for b in 1..=bound {
                for p in &ctx.grid.ps {
                    let total = parties_probabilities(a, b, p, q).map(|pp| pp.p1 + pp.p2);
                    c.exact(binding(q).with("a", a).with("b", b).with("p", p), total, Ok(Rational::one()));
                }
            }
        }
    }
}

fn i3_18(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = ctx.grid.max_int.clamp(1, 6);
    for q in &ctx.qs {
        for a in 1..=bound {
            for b in 1..=bound {
                for p in &ctx.grid.ps {
                    let waiting = parties_probabilities(a, b, p, q).map(|pp| pp.p1);
                    c.exact(binding(q).with("a", a).with("b", b).with("p", p), waiting, parties_p1_by_count(a, b, p, q));
                }
            }
        }
    }
}

fn lambdas(ctx: &Ctx<'_>) -> Vec<Rational> {
    p_values(ctx, &[Rational::one()])
}

fn i4_6(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(15);
    for q in &ctx.qs {
        for lambda in lambdas(ctx) {
            let lhs = q_exponential(0, &lambda, q, &eps);
            let arg = &lambda * (Rational::one() - q.value());
            let rhs = shifted_pow_infinite(&arg, q, &tenth_power(18)).and_then(|i| i.recip());
            c.interval(binding(q).with("lambda", &lambda), lhs, rhs);
        }
    }
}

fn i4_10(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(15);
    for q in &ctx.qs {
        for lambda in lambdas(ctx) {
            let lhs = q_exponential(0, &lambda, q, &eps)
                .and_then(|e0| q_exponential(1, &-&lambda, q, &eps).map(|e1| &e0 * &e1));
            c.interval(binding(q).with("lambda", &lambda), lhs, Ok(Interval::point(Rational::one())));
        }
    }
}

fn i4_13(ctx: &Ctx<'_>, c: &mut Checker) {
    let xs = p_values(ctx, &[int(2), ratio(-1, 2)]);
    let mut vanishing = 0usize;
    for q in &ctx.qs {
        for x in &xs {
            for alpha in -4..=4i64 {
                for beta in -4..=4i64 {
                    let lhs = minus_pow(x, alpha + beta, q);
                    let rhs = minus_pow(x, alpha, q).and_then(|a| minus_pow(&(q.pow(alpha) * x), beta, q).map(|b| a * b));
                    if matches!((&lhs, &rhs), (Err(QError::DivisionByZero(_)), _) | (_, Err(QError::DivisionByZero(_)))) {
                        vanishing += 1;
                        continue;
                    }
                    c.exact(binding(q).with("x", x).with("a", alpha).with("b", beta).with("law", "split"), lhs, rhs);
                }
            }
            for beta in 1..=4i64 {
                let lhs = minus_pow(x, -beta, q);
                let rhs = minus_pow(&(q.pow(-beta) * x), beta, q);
                match rhs {
                    Ok(d) if d.is_zero() => vanishing += 1,
                    Ok(d) => c.exact(binding(q).with("x", x).with("b", beta).with("law", "negative"), lhs, Ok(d.recip())),
                    Err(e) => c.exact(binding(q).with("x", x).with("b", beta).with("law", "negative"), lhs, Err(e)),
                }
            }
        }
    }
    if vanishing > 0 {
        c.skip(format!("{vanishing} bindings: a factor 1 - q^i x vanishes in a negative power"));
    }
}

/// Certified `sum_k coefficient_k / [k]!` where consecutive terms have ratio
/// `step(k) / [k+1]` and `|step(j)| <= bound(k)` for `j >= k`.
fn factorial_series(
    step: impl Fn(i64) -> Rational,
    bound: impl Fn(i64) -> Rational,
    q: &QBase,
    eps: &Rational,
) -> Result<Interval> {
    let mut t = Rational::zero();
    certified_sum(
        |k| {
            let k = k as i64;
            t = if k == 0 { Rational::one() } else { &t * step(k - 1) / bracket(k, q) };
            t.clone()
        },
        |k| {
            let k = k as i64;
            Some(bound(k) / bracket(k + 1, q))
        },
        eps,
        TermSign::Any,
    )
    .map(|s| s.enclosure())
}

fn i4_15(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(13);
    let lambdas = [ratio(1, 5), ratio(1, 2), Rational::one()];
    let zs = [ratio(-1, 2), ratio(1, 5), ratio(1, 2), Rational::one()];
    for q in &ctx.qs {
        for lambda in &lambdas {
            for z in &zs {
                let lhs = q_exponential(0, &(lambda * z), q, &eps)
                    .and_then(|top| q_exponential(0, lambda, q, &eps).and_then(|bottom| top.div(&bottom)));
                let rhs = factorial_series(
                    |k| lambda * (z - q.pow(k)),
                    |k| lambda * (z.abs() + q.pow(k)),
                    q,
                    &eps,
                );
                c.interval(binding(q).with("lambda", lambda).with("z", z), lhs, rhs);
            }
        }
    }
}

fn i4_16(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(13);
    let values = [ratio(-1, 2), ratio(1, 5), ratio(1, 2), Rational::one()];
    for q in &ctx.qs {
        for a in &values {
            for b in &values {
                let lhs = q_exponential(0, b, q, &eps)
                    .and_then(|e0| q_exponential(1, &-a, q, &eps).map(|e1| &e0 * &e1));
                let rhs = factorial_series(|k| b - q.pow(k) * a, |k| b.abs() + q.pow(k) * a.abs(), q, &eps);
                c.interval(binding(q).with("a", a).with("b", b), lhs, rhs);
            }
        }
    }
}

fn i4_18(ctx: &Ctx<'_>, c: &mut Checker) {
    let eps = tenth_power(20);
    for q in &ctx.qs {
        for lambda in lambdas(ctx) {
            let b = binding(q).with("lambda", &lambda);
            let one_minus_q = Rational::one() - q.value();
            let enclosed = poisson_pmf(&lambda, q, 80, &eps).map(|pmf| enclosed_moments(&pmf, &one_minus_q));
            match (enclosed, poisson_moments(&lambda, q)) {
                (Ok((m, v)), Ok(closed)) => {
                    c.interval(b.clone().with("moment", "mean"), Ok(m), Ok(Interval::point(closed.mean)));
                    c.interval(b.with("moment", "variance"), Ok(v), Ok(Interval::point(closed.variance)));
                }
                (Err(e), _) | (_, Err(e)) => c.interval(b, Err(e), Ok(Interval::point(Rational::zero()))),
            }
        }
    }
}

fn limit_rows(c: &mut Checker, spec: LimitSpec, sequence: &[u32], threshold: Option<&Rational>) {
    let bind = spec.params().into_iter().fold(Binding::new(), |b, (k, v)| b.with(&k, v));
    let table = limit_table(&spec, sequence, &tenth_power(30));
    let observed = |t: &Result<super::limits::ConvergenceTable>| match t {
        Ok(t) => t
            .rows
            .iter()
            .map(|r| format!("{}: [{:.6e}, {:.6e}]", r.index, approx(r.distance.lo()), approx(r.distance.hi())))
            .collect::<Vec<_>>()
            .join("; "),
        Err(e) => format!("error: {e}"),
    };
    let text = observed(&table);
    let ok = table.as_ref().map_err(Clone::clone).map(|t| {
        let last_small = threshold.is_none_or(|th| t.rows.last().is_some_and(|r| r.distance.hi() <= th));
        t.strictly_decreasing && last_small
    });
    if let Ok(t) = &table {
        for r in &t.rows {
            c.record_width(r.distance.width());
        }
    }
    c.holds(bind, ok, || text);
}

fn i4_24(ctx: &Ctx<'_>, c: &mut Checker) {
    let threshold = tenth_power(6);
    for q in &ctx.qs {
        for lambda in ctx.grid.ps.iter().filter(|l| !l.is_negative() && *l < q.value()) {
            let spec = LimitSpec::SuperUnitProduct { lambda: lambda.clone(), q: q.clone() };
            limit_rows(c, spec, &[20, 30, 40], Some(&threshold));
        }
    }
}

fn i4_24e(ctx: &Ctx<'_>, c: &mut Checker) {
    let threshold = tenth_power(6);
    for q in &ctx.qs {
        let cap = q.value() / (q.value() - Rational::one());
        for lambda in ctx.grid.ps.iter().filter(|l| !l.is_negative() && *l < &cap) {
            let spec = LimitSpec::SuperUnitExponential { lambda: lambda.clone(), q: q.clone() };
            limit_rows(c, spec, &[20, 30, 40], Some(&threshold));
        }
    }
}

fn l4_3(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for p in open_unit(&ctx.grid.ps) {
            limit_rows(c, LimitSpec::BernoulliInfinite { p: p.clone(), q: q.clone() }, &[10, 20, 30], None);
        }
    }
}

fn l5_17(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for cc in [2, 4] {
            limit_rows(c, LimitSpec::UrnToBernoulli { q: q.clone(), c: cc, n: 3 }, &[10, 20, 30], None);
        }
    }
}

fn l5_25(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for cc in [2, 4] {
            limit_rows(c, LimitSpec::UrnToDualBernoulli { big_q: q.clone(), c: cc, n: 3 }, &[10, 20, 30], None);
        }
    }
}

fn i5_3(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = i64::from(ctx.grid.max_int.min(6));
    for q in &ctx.qs {
        for m in 0..=bound {
            for u in 0..=bound {
                for n in 0..=m + u {
                    let lhs = sum((0..=n).map(|k| ib(m, k, q) * ib(u, n - k, q) * q.pow((m - k) * (n - k))));
                    c.exact(binding(q).with("m", m).with("u", u).with("n", n), Ok(lhs), Ok(ib(m + u, n, q)));
                }
            }
        }
    }
}

fn i5_5(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = ctx.grid.max_int.min(6);
    for q in &ctx.qs {
        for m in 0..=bound {
            for u in 0..=bound {
                let one = Rational::one();
                let product = PPoly::q_pochhammer(&one, m, q) * PPoly::q_pochhammer(&q.pow(m.into()), u, q);
                let b = binding(q).with("m", m).with("u", u);
                c.exact(b.clone(), Ok(product.clone()), Ok(PPoly::q_pochhammer(&one, m + u, q)));
                let (m, u) = (i64::from(m), i64::from(u));
                for n in 0..=m + u {
                    let sign = if n % 2 == 0 { one.clone() } else { -one.clone() };
                    let inner = sum((0..=n).map(|k| ib(m, k, q) * ib(u, n - k, q) * q.pow((m - k) * (n - k))));
                    let rhs = sign * q.pow(choose2(n)) * inner;
                    c.exact(b.clone().with("coefficient", n), Ok(product.coefficient(n as usize)), Ok(rhs));
                }
            }
        }
    }
}

fn i5_11(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = ctx.grid.max_int.min(7);
    for q in &ctx.qs {
        for m in 0..=i64::from(bound) {
            for n in 0..=bound {
                for k in 0..=n {
                    let lhs = sum(enumerate_patterns(n, k).iter().map(|pattern| {
                        let e: i64 = pattern.runs().iter().enumerate().map(|(s, a)| (m - s as i64) * i64::from(*a)).sum();
                        q.pow(e)
                    }));
                    let (n_i, k_i) = (i64::from(n), i64::from(k));
                    let rhs = q.pow((m - k_i) * (n_i - k_i)) * ib(n_i, k_i, q);
                    c.exact(binding(q).with("m", m).with("n", n).with("k", k), Ok(lhs), Ok(rhs));
                }
            }
        }
    }
}

fn i5_19(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = i64::from(ctx.grid.max_int);
    for q in &ctx.qs {
        for x in -5..=bound {
            c.exact(binding(q).with("x", x).with("law", "bracket"), Ok(rebase_bracket(x, q)), Ok(q.pow(1 - x) * bracket(x, q)));
        }
        for k in 0..=bound {
            let rhs = q.pow(-choose2(k)) * q_factorial(k as u32, q);
            c.exact(binding(q).with("k", k).with("law", "factorial"), Ok(rebase_factorial(k as u32, q)), Ok(rhs));
        }
        for a in 0..=bound {
            for b in 0..=a {
                let rhs = q.pow(b * (b - a)) * ib(a, b, q);
                c.exact(binding(q).with("a", a).with("b", b).with("law", "binomial"), Ok(rebase_binomial(a, b, q)), Ok(rhs));
            }
        }
    }
}

fn i5_20(ctx: &Ctx<'_>, c: &mut Checker) {
    let bound = ctx.grid.max_int.min(5);
    for q in &ctx.qs {
        for m in 0..=bound {
            for u in 0..=bound {
                for n in 0..=m + u {
                    for k in 0..=n {
                        let b = binding(q).with("m", m).with("u", u).with("n", n).with("k", k);
                        let inverted = hypergeom_entry(m, u, n, k, &q.inverse());
                        let (m_i, u_i, n_i) = (i64::from(m), i64::from(u), i64::from(n));
                        let kp = n_i - i64::from(k);
                        let rhs = q.pow((u_i - kp) * (n_i - kp)) * ib(u_i, kp, q) * ib(m_i, n_i - kp, q)
                            / ib(m_i + u_i, n_i, q);
                        c.exact(b.clone(), Ok(inverted.clone()), Ok(rhs));
                        c.exact(b.with("form", "mirrored urn"), hypergeom_dual(m, u, n, q, k), Ok(inverted));
                    }
                }
            }
        }
    }
}

/// Left side of the contagious normalization for arbitrary integers `m`, `u`.
fn contagious_sum(m: i64, u: i64, s: i64, n: i64, q: &QBase) -> Rational {
    let base = q.power(-s);
    sum((0..=n).map(|k| {
        let marked = (0..k).fold(Rational::one(), |acc, a| acc * bracket(m + a * s, q));
        let unmarked = (0..n - k).fold(Rational::one(), |acc, b| acc * bracket(u + b * s, q));
        ib(n, k, &base) * q.pow((m + s * k) * (n - k)) * marked * unmarked
    }))
}

fn contagious_product(m: i64, u: i64, s: i64, n: i64, q: &QBase) -> Rational {
    (0..n).fold(Rational::one(), |acc, g| acc * bracket(m + u + g * s, q))
}

fn i6_3(ctx: &Ctx<'_>, c: &mut Checker) {
    let n_max = i64::from(ctx.grid.max_int.min(5));
    for q in &ctx.qs {
        for m in 0..=4i64 {
            for u in 0..=4i64 {
                for s in -2..=3i64 {
                    for n in 0..=n_max {
                        let b = binding(q).with("m", m).with("u", u).with("s", s).with("n", n);
                        c.exact(b.clone(), Ok(contagious_sum(m, u, s, n, q)), Ok(contagious_product(m, u, s, n, q)));
                        if let Ok(pmf) = contagious_pmf(m as u32, u as u32, s, n as u32, q) {
                            c.exact(b.with("form", "pmf total"), Ok(pmf.total()), Ok(Rational::one()));
                        }
                    }
                }
            }
        }
    }
}

fn i6_5(ctx: &Ctx<'_>, c: &mut Checker) {
    let n_max = i64::from(ctx.grid.max_int.min(5));
    for q in &ctx.qs {
        for s in [-2i64, -1, 1, 2] {
            let big_q = q.power(-s);
            let step = bracket(-s, q);
            for big_m in -3..=4i64 {
                for big_u in -3..=4i64 {
                    for n in 0..=n_max {
                        let b = binding(q).with("s", s).with("M", big_m).with("U", big_u).with("n", n);
                        let lhs = sum((0..=n).map(|k| {
                            let marked = (0..k).fold(Rational::one(), |acc, a| acc * bracket(big_m - a, &big_q));
                            let unmarked = (0..n - k).fold(Rational::one(), |acc, j| acc * bracket(big_u - j, &big_q));
                            ib(n, k, &big_q) * big_q.pow((big_m - k) * (n - k)) * marked * unmarked
                        }));
                        let rhs = (0..n).fold(Rational::one(), |acc, g| acc * bracket(big_m + big_u - g, &big_q));
                        c.exact(b.clone(), Ok(lhs.clone()), Ok(rhs));
                        let (m, u) = (-s * big_m, -s * big_u);
                        for a in 0..n {
                            c.exact(
                                b.clone().with("link", a),
                                Ok(&step * bracket(big_m - a, &big_q)),
                                Ok(bracket(m + a * s, q)),
                            );
                        }
                        for k in 0..=n {
                            c.exact(
                                b.clone().with("exponent", k),
                                Ok(big_q.pow((big_m - k) * (n - k))),
                                Ok(q.pow((m + k * s) * (n - k))),
                            );
                        }
                        c.exact(b.with("form", "base q"), Ok(powi(&step, n) * lhs), Ok(contagious_sum(m, u, s, n, q)));
                    }
                }
            }
        }
    }
}

fn i6_11(ctx: &Ctx<'_>, c: &mut Checker) {
    let n_max = ctx.grid.max_int.min(6);
    for q in &ctx.qs {
        for m in 0..=4i64 {
            for s in -2..=3i64 {
                let base = q.power(-s);
                for n in 0..=n_max {
                    for k in 0..=n {
                        let lhs = sum(enumerate_patterns(n, k).iter().map(|pattern| {
                            let e: i64 =
                                pattern.runs().iter().enumerate().map(|(i, a)| (m + s * i as i64) * i64::from(*a)).sum();
                            q.pow(e)
                        }));
                        let (n_i, k_i) = (i64::from(n), i64::from(k));
                        let rhs = q.pow((m + s * k_i) * (n_i - k_i)) * ib(n_i, k_i, &base);
                        c.exact(binding(q).with("m", m).with("s", s).with("n", n).with("k", k), Ok(lhs), Ok(rhs));
                    }
                }
            }
        }
    }
}

fn i7_5(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for big_m in 0..=ctx.grid.max_int {
            c.exact(binding(q).with("M", big_m), Ok(uniform_pmf(big_m, q).moments()), Ok(uniform_moments(big_m, q)));
        }
    }
}

fn i7_11(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for big_m in 0..=4 {
            for n in 1..=4 {
                let b = binding(q).with("M", big_m).with("n", n);
                let closed = range_pmf(big_m, n, q);
                c.exact(b.clone().with("form", "total"), closed.as_ref().map(|p| p.total()).map_err(Clone::clone), Ok(Rational::one()));
                c.exact(b, closed, range_pmf_brute_force(big_m, n, q));
            }
        }
    }
}

fn i7_12(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for big_m in 0..=ctx.grid.max_int {
            let positive = range_pmf(big_m, 1, q).map(|pmf| sum(pmf.entries.range(1..).map(|(_, e)| e.clone())));
            c.exact(binding(q).with("M", big_m), positive, Ok(Rational::zero()));
        }
    }
}

fn i7_13(ctx: &Ctx<'_>, c: &mut Checker) {
    for q in &ctx.qs {
        for big_m in 0..=ctx.grid.max_int {
            c.exact(binding(q).with("M", big_m), Ok(range_pmf_alt_n2(big_m, q).total()), Ok(Rational::one()));
        }
    }
}

fn n_all(ctx: &Ctx<'_>, c: &mut Checker) {
    let one = Rational::one();
    let eps = tenth_power(12);
    let encloses_one = |total: Result<Interval>| total.map(|t| t.contains(&Rational::one()) && t.width() <= tenth_power(9));
    for q in &ctx.qs {
        let sub_unit = q.value() < &one;
        for n in 0..=ctx.grid.max_int {
            for p in &ctx.grid.ps {
                if q.value() <= &one {
                    let b = binding(q).with("family", "bernoulli").with("n", n).with("p", p);
                    c.exact(b, bernoulli_pmf(n, p, q).map(|pmf| pmf.total()), Ok(one.clone()));
                }
            }
        }
        for m in 0..=4 {
            for u in 0..=4 {
                for n in 0..=m + u {
                    let b = binding(q).with("family", "hypergeom").with("m", m).with("u", u).with("n", n);
                    c.exact(b, hypergeom_pmf(m, u, n, q).map(|pmf| pmf.total()), Ok(one.clone()));
                    for s in -2..=3 {
                        if let Ok(pmf) = contagious_pmf(m, u, s, n, q) {
                            let b = binding(q).with("family", "contagious").with("m", m).with("u", u).with("s", s).with("n", n);
                            c.exact(b, Ok(pmf.total()), Ok(one.clone()));
                        }
                    }
                }
            }
        }
        for big_m in 0..=ctx.grid.max_int {
            c.exact(binding(q).with("family", "uniform").with("M", big_m), Ok(uniform_pmf(big_m, q).total()), Ok(one.clone()));
            c.exact(binding(q).with("family", "range2alt").with("M", big_m), Ok(range_pmf_alt_n2(big_m, q).total()), Ok(one.clone()));
        }
        for big_m in 0..=4 {
            for n in 1..=4 {
                let b = binding(q).with("family", "range").with("M", big_m).with("n", n);
                c.exact(b, range_pmf(big_m, n, q).map(|pmf| pmf.total()), Ok(one.clone()));
            }
        }
        let lambdas = lambdas(ctx);
        for lambda in lambdas.iter().filter(|l| q.value() <= &one || *l < q.value()) {
            let b = binding(q).with("family", "poisson").with("lambda", lambda);
            c.holds(b, encloses_one(poisson_pmf(lambda, q, 30, &eps).map(|pmf| pmf.total())), || format!("total not 1 at lambda = {lambda}"));
        }
        if sub_unit {
            for p in open_unit(&ctx.grid.ps) {
                let b = binding(q).with("p", p);
                c.holds(
                    b.clone().with("family", "bernoulli_inf"),
                    encloses_one(bernoulli_inf_pmf(p, q, 20, &eps).map(|pmf| pmf.total())),
                    || "total not 1".into(),
                );
                for rescaled in [false, true] {
                    let total = geometric_pmf(p, q, 20, rescaled, &eps).map(|pmf| pmf.total());
                    c.holds(b.clone().with("family", "geometric").with("rescaled", rescaled), encloses_one(total), || {
                        "total not 1".into()
                    });
                }
                for r in 1..=3 {
                    let total = negbinomial_pmf(r, p, q, 20, &eps).map(|pmf| pmf.total());
                    c.holds(b.clone().with("family", "negbinomial").with("r", r), encloses_one(total), || "total not 1".into());
                }
            }
        }
    }
}
