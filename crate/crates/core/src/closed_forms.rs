//! Closed-form counts of pattern-avoiding words and parking functions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    bigint_abs_to_count, binomial, composition_from_mask, factorial, falling_factorial, partitions, BigCount,
    Composition, IntegerMatrix, Partition, WeakComposition,
};
use crate::lattice_paths::dyck_by_ascent_det;
use crate::parking::{content_of, enumerate_pf_bounded, pf_avoids, PF_BOUND};
use crate::patterns::{MonotoneMode, Permutation};
use crate::tableaux::{f_lambda, schur_ones};
use crate::{Error, Result};

/// Avoidance of a monotone pattern of length `r`: `r, r-1, ..., 1` when the
/// direction is [`MonotoneMode::StrictDecreasing`], `1, 2, ..., r` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneSpec {
    pub direction: MonotoneMode,
    pub r: usize,
}

impl MonotoneSpec {
    pub fn new(direction: MonotoneMode, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::invalid(format!(
                "monotone pattern length {r} must be at least 2"
            )));
        }
        Ok(MonotoneSpec { direction, r })
    }

    pub fn decreasing(r: usize) -> Result<Self> {
        Self::new(MonotoneMode::StrictDecreasing, r)
    }

    pub fn increasing(r: usize) -> Result<Self> {
        Self::new(MonotoneMode::WeakIncreasing, r)
    }

    /// The pattern as a permutation.
    pub fn pattern(&self) -> Permutation {
        match self.direction {
            MonotoneMode::StrictDecreasing => Permutation::decreasing(self.r),
            MonotoneMode::WeakIncreasing => Permutation::identity(self.r),
        }
    }
}

/// `w_{n,k}(321)` as a sum over two-row shapes `(n - a, a)`.
pub fn w321_closed(n: u64, k: u64) -> BigCount {
    assert!(k >= 1, "alphabet size must be positive");
    let nf = BigInt::from(factorial(n));
    let (n, k) = (n as i64, k as i64);
    let mut total = BigInt::zero();
    for a in 0..=n / 2 {
        let numerator =
            &nf * falling_factorial(k + n - a - 1, (n - a) as u64) * falling_factorial(k + a - 2, a as u64);
        let hooks = BigInt::from(factorial(a as u64))
            * BigInt::from(factorial((n - 2 * a) as u64))
            * falling_factorial(n - a + 1, a as u64);
        let (term, rem) = numerator.div_rem(&(&hooks * &hooks));
        assert!(rem.is_zero(), "term a={a} of w321({n},{k}) is not integral");
        total += term;
    }
    BigCount::try_from_bigint(total).expect("word counts are nonnegative")
}

/// `pf_n(321) = w_{n,n+1}(321) / (n + 1)`.
pub fn pf321_closed(n: u64) -> BigCount {
    w321_closed(n, n + 1).exact_div(&BigUint::from(n + 1))
}

/// Shapes `lambda |- n` that index the monotone avoiders: `l(lambda) < r` for
/// the decreasing pattern, `lambda_1 < r` for the increasing one.
pub fn monotone_shapes(n: usize, spec: MonotoneSpec) -> impl Iterator<Item = Partition> {
    let (len, part) = match spec.direction {
        MonotoneMode::StrictDecreasing => (Some(spec.r - 1), None),
        MonotoneMode::WeakIncreasing => (None, Some(spec.r - 1)),
    };
    partitions(n, len, part).map(|p| Partition::new(p.parts().to_vec()).expect("iterator yields partitions"))
}

/// Words in `[k]^n` avoiding the monotone pattern.
///
/// With `standardized` the increasing pattern is matched in `std(w)`, so a
/// weakly increasing subword of length `r` is forbidden and the count is the
/// sum of `s_lambda(1^k) f^lambda` over `lambda_1 < r`. Without it only
/// strictly increasing subwords are forbidden, which complementation
/// `x -> k + 1 - x` turns into the decreasing count. For the decreasing
/// pattern the flag makes no difference.
pub fn monotone_word_count(n: usize, k: u64, spec: MonotoneSpec, standardized: bool) -> BigCount {
    let spec = match spec.direction {
        MonotoneMode::WeakIncreasing if !standardized => MonotoneSpec {
            direction: MonotoneMode::StrictDecreasing,
            r: spec.r,
        },
        _ => spec,
    };
    monotone_shapes(n, spec)
        .map(|lam| {
            let s = schur_ones(&lam, k);
            if s.is_zero() {
                s
            } else {
                &s * &f_lambda(&lam)
            }
        })
        .sum()
}

/// Parking functions whose label permutation avoids the monotone pattern:
/// `w_{n,n+1} / (n + 1)`, standardized sense.
pub fn monotone_pf_count(n: usize, spec: MonotoneSpec) -> BigCount {
    monotone_word_count(n, n as u64 + 1, spec, true).exact_div(&BigUint::from(n + 1))
}

/// `det[C(j + T_i, j - i + 1)]` for `1 <= i, j <= k - 1`, where `T_i` is the
/// sum of the last `i` parts of `alpha`.
pub fn sylvester_class_count_det(alpha: &Composition) -> BigCount {
    sharp_sylvester_class_count_det(&alpha.reversed())
}

/// `det[C(j + S_i, j - i + 1)]` with `S_i` the sum of the first `i` parts.
pub fn sharp_sylvester_class_count_det(alpha: &Composition) -> BigCount {
    let sums = alpha.partial_sums();
    let m = IntegerMatrix::from_fn(alpha.len().saturating_sub(1), |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        binomial(j + sums[i0] as i64, j - i + 1)
            .expect("upper index is positive")
            .to_bigint()
    });
    let det = m.determinant();
    assert!(!det.is_negative(), "class count determinant negative for {alpha}");
    bigint_abs_to_count(&det)
}

/// The four length-3 patterns counted by composition sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NonmonotonePattern {
    P132,
    P231,
    P213,
    P312,
}

impl NonmonotonePattern {
    pub const ALL: [NonmonotonePattern; 4] = [Self::P132, Self::P231, Self::P213, Self::P312];

    pub fn permutation(self) -> Permutation {
        let v = match self {
            Self::P132 => vec![1, 3, 2],
            Self::P231 => vec![2, 3, 1],
            Self::P213 => vec![2, 1, 3],
            Self::P312 => vec![3, 1, 2],
        };
        Permutation::new(v).expect("valid pattern")
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "132" => Ok(Self::P132),
            "231" => Ok(Self::P231),
            "213" => Ok(Self::P213),
            "312" => Ok(Self::P312),
            other => Err(Error::invalid(format!(
                "{other:?} is not one of 132, 231, 213, 312"
            ))),
        }
    }

    /// Class count for packed content `alpha`.
    pub fn class_count(self, alpha: &Composition) -> BigCount {
        match self {
            Self::P132 | Self::P231 => sylvester_class_count_det(alpha),
            Self::P213 | Self::P312 => sharp_sylvester_class_count_det(alpha),
        }
    }
}

/// Largest `n` for which the composition sum is indexed by a `u64` mask.
pub const COMPOSITION_SUM_BOUND: usize = 64;

/// The term of [`pf_nonmonotone_count`] for one composition: parking
/// function contents with positive parts `alpha`, times classes per content.
pub fn composition_term(alpha: &Composition, pattern: NonmonotonePattern) -> BigCount {
    &dyck_by_ascent_det(alpha) * &pattern.class_count(alpha)
}

/// `pf_n(sigma)` for `sigma` in {132, 231, 213, 312}, summing over all
/// `2^(n-1)` compositions of `n`. Terms are evaluated in parallel and added in
/// mask order.
pub fn pf_nonmonotone_count(n: usize, pattern: NonmonotonePattern) -> Result<BigCount> {
    Error::check_bound("pf_nonmonotone_count", n, COMPOSITION_SUM_BOUND)?;
    if n == 0 {
        return Ok(BigCount::one());
    }
    let masks = 1u64 << (n - 1);
    let terms: Vec<BigCount> = (0..masks)
        .into_par_iter()
        .map(|mask| composition_term(&composition_from_mask(n, mask), pattern))
        .collect();
    Ok(terms.into_iter().sum())
}

/// Exhaustive count of parking functions of length `n` avoiding `sigma`.
pub fn pf_bruteforce_count(n: usize, sigma: &Permutation) -> Result<BigCount> {
    pf_bruteforce_count_bounded(n, sigma, PF_BOUND)
}

pub fn pf_bruteforce_count_bounded(n: usize, sigma: &Permutation, bound: usize) -> Result<BigCount> {
    let count = enumerate_pf_bounded(n, bound)?
        .filter(|p| pf_avoids(p, sigma))
        .count();
    Ok(BigCount::from(count))
}

/// Brute-force strata: for every parking function content, how many parking
/// functions with that content avoid `sigma`. Sorted by content.
pub fn pf_content_strata(n: usize, sigma: &Permutation) -> Result<Vec<(WeakComposition, usize)>> {
    let mut strata = std::collections::BTreeMap::new();
    for p in enumerate_pf_bounded(n, PF_BOUND)? {
        let slot = strata.entry(content_of(&p).parts().to_vec()).or_insert(0usize);
        if pf_avoids(&p, sigma) {
            *slot += 1;
        }
    }
    Ok(strata
        .into_iter()
        .map(|(c, count)| (WeakComposition::new(c), count))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn w321_values() {
        assert_eq!(w321_closed(2, 2), 4);
        assert_eq!(w321_closed(3, 3), 26);
        assert_eq!(w321_closed(3, 4), 60);
        assert_eq!(w321_closed(0, 1), 1);
        assert_eq!(w321_closed(1, 1), 1);
        // only the constant word over a one-letter alphabet
        assert_eq!(w321_closed(5, 1), 1);
    }

    #[test]
    fn pf321_values() {
        assert_eq!(pf321_closed(1), 1);
        assert_eq!(pf321_closed(3), 15);
        assert_eq!(pf321_closed(4), 97);
    }

    #[test]
    fn monotone_values() {
        let dec3 = MonotoneSpec::decreasing(3).unwrap();
        assert_eq!(monotone_word_count(3, 3, dec3, true), 26);
        assert_eq!(
            monotone_word_count(2, 2, MonotoneSpec::increasing(2).unwrap(), true),
            1
        );
        assert_eq!(
            monotone_word_count(2, 2, MonotoneSpec::increasing(2).unwrap(), false),
            3
        );
        assert_eq!(monotone_word_count(0, 4, dec3, true), 1);
        assert_eq!(monotone_pf_count(3, dec3), 15);
        assert_eq!(monotone_pf_count(3, MonotoneSpec::decreasing(2).unwrap()), 5);
        assert!(MonotoneSpec::decreasing(1).is_err());
        for n in 0..=12u64 {
            for k in 1..=12 {
                assert_eq!(w321_closed(n, k), monotone_word_count(n as usize, k, dec3, true));
            }
        }
    }

    #[test]
    fn class_determinants() {
        assert_eq!(sylvester_class_count_det(&comp(&[2, 2, 1])), 7);
        assert_eq!(sylvester_class_count_det(&comp(&[5])), 1);
        assert_eq!(sylvester_class_count_det(&comp(&[1, 1, 1])), 5);
        assert_eq!(sharp_sylvester_class_count_det(&comp(&[1, 2, 2])), 7);
        assert_eq!(sharp_sylvester_class_count_det(&comp(&[5])), 1);
        assert_eq!(sharp_sylvester_class_count_det(&comp(&[1, 1, 1])), 5);
        for n in 1..=7 {
            for alpha in compositions(n) {
                assert_eq!(
                    sharp_sylvester_class_count_det(&alpha),
                    sylvester_class_count_det(&alpha.reversed())
                );
            }
        }
    }

    #[test]
    fn nonmonotone_values() {
        let count = |n, p: &str| pf_nonmonotone_count(n, NonmonotonePattern::parse(p).unwrap()).unwrap();
        assert_eq!(count(3, "132"), 13);
        assert_eq!(count(3, "231"), 13);
        assert_eq!(count(3, "213"), 14);
        assert_eq!(count(3, "312"), 14);
        for p in NonmonotonePattern::ALL {
            assert_eq!(pf_nonmonotone_count(1, p).unwrap(), 1);
        }
        assert!(NonmonotonePattern::parse("123").is_err());
    }

    #[test]
    fn bruteforce_values() {
        let perm = |s: &str| s.parse::<Permutation>().unwrap();
        assert_eq!(pf_bruteforce_count(3, &perm("321")).unwrap(), 15);
        assert_eq!(pf_bruteforce_count(3, &perm("132")).unwrap(), 13);
        for sigma in ["123", "132", "321"] {
            assert_eq!(pf_bruteforce_count(2, &perm(sigma)).unwrap(), 3);
        }
        assert!(pf_bruteforce_count(8, &perm("321")).is_err());
    }

    #[test]
    fn strata_match_terms() {
        for n in 1..=5 {
            for pattern in NonmonotonePattern::ALL {
                let strata = pf_content_strata(n, &pattern.permutation()).unwrap();
                for alpha in compositions(n) {
                    let matching: Vec<usize> = strata
                        .iter()
                        .filter(|(c, _)| c.packed() == alpha)
                        .map(|(_, count)| *count)
                        .collect();
                    assert_eq!(BigCount::from(matching.len()), dyck_by_ascent_det(&alpha));
                    for count in &matching {
                        assert_eq!(
                            BigCount::from(*count),
                            pattern.class_count(&alpha),
                            "{alpha} {pattern:?}"
                        );
                    }
                    let total: usize = matching.iter().sum();
                    assert_eq!(BigCount::from(total), composition_term(&alpha, pattern));
                }
            }
        }
    }
}
