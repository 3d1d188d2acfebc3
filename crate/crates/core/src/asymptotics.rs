//! Growth rates of words in `[n]^n` avoiding a monotone pattern.
//!
//! Limits are exact rationals. Everything checked here is a consequence that
//! holds at finite `n`: supermultiplicativity, the bound it implies on every
//! `n`-th root, the surjection bound, and the maximality of the uniform point
//! for the two simplex objectives.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{monotone_word_count, w321_closed, MonotoneSpec};
use crate::combinatorics::{binomial, BigCount, Partition};
use crate::patterns::{av_count, MonotoneMode, Permutation};
use crate::tableaux::{f_lambda, schur_ones};
use crate::{Error, Result};

/// Largest `n` evaluated through the two-row closed form.
pub const CLOSED_FORM_BOUND: usize = 1000;
/// Largest `n` evaluated as a sum over partitions.
pub const PARTITION_SUM_BOUND: usize = 120;
/// Slack allowed when comparing objective values in floating point.
pub const OBJECTIVE_TOL: f64 = 1e-12;
/// Allowed deviation of a simplex point's coordinate sum from 1.
pub const SIMPLEX_SUM_TOL: f64 = 1e-12;

/// `(k+1)^(k+1) / k^(k-1)`, the growth rate for `k+1, k, ..., 1`.
pub fn decreasing_limit(k: u32) -> Result<BigRational> {
    if k < 1 {
        return Err(Error::invalid("decreasing growth rate needs k >= 1"));
    }
    let num = BigInt::from(k + 1).pow(k + 1);
    let den = BigInt::from(k).pow(k - 1);
    Ok(BigRational::new(num, den))
}

/// `k^(k+1) / (k-1)^(k-1)`, the growth rate for `1, 2, ..., k+1` (weakly).
/// `k = 1` is only accepted with `degenerate`, giving 1 under `0^0 = 1`.
pub fn increasing_limit(k: u32, degenerate: bool) -> Result<BigRational> {
    match k {
        0 => Err(Error::invalid("increasing growth rate needs k >= 1")),
        1 if degenerate => Ok(BigRational::one()),
        1 => Err(Error::invalid(
            "k = 1 is degenerate; request the 0^0 = 1 convention explicitly",
        )),
        _ => Ok(BigRational::new(
            BigInt::from(k).pow(k + 1),
            BigInt::from(k - 1).pow(k - 1),
        )),
    }
}

pub fn limit_for(spec: MonotoneSpec) -> BigRational {
    let k = spec.r as u32 - 1;
    match spec.direction {
        MonotoneMode::StrictDecreasing => decreasing_limit(k),
        MonotoneMode::WeakIncreasing => increasing_limit(k, true),
    }
    .expect("r >= 2")
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().expect("finite rational")
}

/// `a_n = w_{n,n}` for the spec (standardized sense for the increasing
/// pattern).
pub fn diagonal_count(spec: MonotoneSpec, n: usize) -> Result<BigCount> {
    if spec.direction == MonotoneMode::StrictDecreasing && spec.r == 3 {
        Error::check_bound("diagonal_count", n, CLOSED_FORM_BOUND)?;
        return Ok(w321_closed(n as u64, (n as u64).max(1)));
    }
    Error::check_bound("diagonal_count", n, PARTITION_SUM_BOUND)?;
    Ok(monotone_word_count(n, (n as u64).max(1), spec, true))
}

/// `count^(1/n)` through the natural log of the exact count.
pub fn nth_root(count: &BigCount, n: usize) -> f64 {
    assert!(n > 0, "root of order 0");
    if count.is_zero() {
        return 0.0;
    }
    (count.ln() / n as f64).exp()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthSample {
    pub n: usize,
    pub count: BigCount,
    pub root: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub direction: MonotoneMode,
    pub r: usize,
    pub k: usize,
    /// Exact limit as `p/q`.
    pub limit_exact: String,
    pub limit: f64,
    pub samples: Vec<GrowthSample>,
}

/// Exact counts and their roots for the given `n`, in the order given.
pub fn growth_report(spec: MonotoneSpec, ns: &[usize]) -> Result<GrowthReport> {
    if let Some(&bad) = ns.iter().find(|&&n| n == 0) {
        return Err(Error::invalid(format!("n = {bad}: roots need n >= 1")));
    }
    let samples = ns
        .par_iter()
        .map(|&n| {
            let count = diagonal_count(spec, n)?;
            let root = nth_root(&count, n);
            Ok(GrowthSample { n, count, root })
        })
        .collect::<Result<Vec<_>>>()?;
    let limit = limit_for(spec);
    Ok(GrowthReport {
        direction: spec.direction,
        r: spec.r,
        k: spec.r - 1,
        limit_exact: limit.to_string(),
        limit: rational_to_f64(&limit),
        samples,
    })
}

/// [`growth_report`] for `n = 1..=n_max`.
pub fn empirical_roots(spec: MonotoneSpec, n_max: usize) -> Result<GrowthReport> {
    let ns: Vec<usize> = (1..=n_max).collect();
    growth_report(spec, &ns)
}

/// Exact test of `a_n a_m <= a_{n+m}`.
pub fn supermultiplicativity_check(spec: MonotoneSpec, n: usize, m: usize) -> Result<bool> {
    let lhs = &diagonal_count(spec, n)? * &diagonal_count(spec, m)?;
    Ok(lhs <= diagonal_count(spec, n + m)?)
}

/// Exact test that `a_n <= limit^n` with the limit as a rational `p/q`, i.e.
/// `q^n a_n <= p^n`.
pub fn root_bound_check(spec: MonotoneSpec, n: usize) -> Result<bool> {
    Ok(count_below_power(&diagonal_count(spec, n)?, n, &limit_for(spec)))
}

fn xlnx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `prod (1 + a_i)^(1 + a_i) / a_i^(2 a_i)` (decreasing) or
/// `1 / prod (1 - a_i)^(1 - a_i) a_i^(2 a_i)` (increasing), with `0^0 = 1`.
pub fn growth_objective(direction: MonotoneMode, a: &[f64]) -> Result<f64> {
    if a.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::invalid(format!("{a:?} has a component outside [0, 1]")));
    }
    let sum: f64 = a.iter().sum();
    if (sum - 1.0).abs() > SIMPLEX_SUM_TOL {
        return Err(Error::invalid(format!("components sum to {sum}, not 1")));
    }
    let log: f64 = match direction {
        MonotoneMode::StrictDecreasing => a.iter().map(|&x| xlnx(1.0 + x) - 2.0 * xlnx(x)).sum(),
        MonotoneMode::WeakIncreasing => a.iter().map(|&x| -xlnx(1.0 - x) - 2.0 * xlnx(x)).sum(),
    };
    Ok(log.exp())
}

/// A uniformly random point of the `k`-simplex (normalized exponentials).
pub fn sample_simplex<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..k).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|x| x / total).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimplexCheck {
    pub direction: MonotoneMode,
    pub k: usize,
    pub samples: usize,
    pub uniform: f64,
    pub best_sample: f64,
    pub passed: bool,
}

/// Compares the objective at the uniform point against `samples` seeded
/// random points.
pub fn uniform_maximizes(
    direction: MonotoneMode,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<SimplexCheck> {
    if k == 0 {
        return Err(Error::invalid("simplex dimension must be positive"));
    }
    let uniform = growth_objective(direction, &vec![1.0 / k as f64; k])?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32));
    let mut best = f64::NEG_INFINITY;
    for _ in 0..samples {
        let a = sample_simplex(&mut rng, k);
        let value = growth_objective(direction, &renormalize(a))?;
        best = best.max(value);
    }
    Ok(SimplexCheck {
        direction,
        k,
        samples,
        uniform,
        best_sample: best,
        passed: best <= uniform * (1.0 + OBJECTIVE_TOL),
    })
}

fn renormalize(mut a: Vec<f64>) -> Vec<f64> {
    // push the rounding error of the sum into the largest coordinate
    let err = 1.0 - a.iter().sum::<f64>();
    if let Some(i) = (0..a.len()).max_by(|&i, &j| a[i].total_cmp(&a[j])) {
        a[i] = (a[i] + err).clamp(0.0, 1.0);
    }
    a
}

/// `w_{n,n}(k+1, ..., 1) <= C(2n-1, n) |Av_n(k+1, ..., 1)|`, exactly.
pub fn surjection_bound_check(n: usize, k: usize) -> Result<bool> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("surjection bound needs n, k >= 1"));
    }
    Error::check_bound("surjection_bound_check", n, 8)?;
    let spec = MonotoneSpec::decreasing(k + 1)?;
    let words = monotone_word_count(n, n as u64, spec, true);
    let multisets = binomial(2 * n as i64 - 1, n as i64)?;
    let perms = av_count(n, &Permutation::decreasing(k + 1))?;
    Ok(words <= &multisets * &perms)
}

/// The single rectangular term `s_{(n^k)}(1^{nk}) f^{(n^k)}`.
pub fn rectangular_term(n: usize, k: usize) -> BigCount {
    let lam: Partition = Partition::rectangle(k, n);
    let s = schur_ones(&lam, (n * k) as u64);
    &s * &f_lambda(&lam)
}

/// `(nk)`-th roots of [`rectangular_term`] for `n = 1..=n_max`.
pub fn rectangular_roots(k: usize, n_max: usize) -> Vec<(usize, f64)> {
    (1..=n_max)
        .map(|n| (n, nth_root(&rectangular_term(n, k), n * k)))
        .collect()
}

/// `a_n <= p^n / q^n` via exact integers, for a count `a_n` and rational `p/q`.
pub fn count_below_power(count: &BigCount, n: usize, q: &BigRational) -> bool {
    let lhs = q.denom().pow(n as u32) * count.to_bigint();
    lhs <= q.numer().pow(n as u32)
}
