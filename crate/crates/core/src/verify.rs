//! Invariant suites: every closed form against its oracle, grouped by topic.
//!
//! Each suite clamps `n_max` to the range its brute force can cover; the
//! clamped value shows up in the check names.

use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{
    root_bound_check, supermultiplicativity_check, surjection_bound_check, uniform_maximizes,
};
use crate::closed_forms::{
    monotone_pf_count, monotone_word_count, pf321_closed, pf_bruteforce_count_bounded, pf_nonmonotone_count,
    sharp_sylvester_class_count_det, sylvester_class_count_det, w321_closed, MonotoneSpec,
    NonmonotonePattern,
};
use crate::combinatorics::{catalan, compositions, partitions, BigCount, Partition, WeakComposition};
use crate::lattice_paths::{
    ascent_comp, descent_class, descent_comp, dyck_by_ascent_bruteforce, dyck_by_ascent_det,
    dyck_coarsening_bruteforce, dyck_refining_count, dyck_to_family, family_to_dyck, lgv_families,
    rothe_dyck,
};
use crate::oracle::{
    monotone_pf_bruteforce, monotone_word_bruteforce, sharp_class_count_bfs, ssyt_count,
    sylv_class_count_bfs, syt_count,
};
use crate::parking::{enumerate_pf_bounded, pollak_representative};
use crate::patterns::{all_words, contains_order_isomorphic, longest_monotone, permutations, MonotoneMode};
use crate::sylvester::{sharp_classes, sylv_classes};
use crate::tableaux::{f_lambda, greene_invariants, rsk, schur_ones};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Suite {
    Pf,
    Words,
    Sylvester,
    Lgv,
    Rsk,
    Growth,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Pf,
        Suite::Words,
        Suite::Sylvester,
        Suite::Lgv,
        Suite::Rsk,
        Suite::Growth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pf => "pf",
            Suite::Words => "words",
            Suite::Sylvester => "sylvester",
            Suite::Lgv => "lgv",
            Suite::Rsk => "rsk",
            Suite::Growth => "growth",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .find(|suite| suite.name() == s)
            .map(|&suite| vec![suite])
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Admit the slow tier (parking functions of length 7).
    pub slow: bool,
    pub seed: u64,
    /// Random simplex points per dimension in the growth suite.
    pub simplex_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 6,
            slow: false,
            seed: 0,
            simplex_samples: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(suite: Suite, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        suite: suite.name(),
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn equal(suite: Suite, name: String, formula: &BigCount, oracle: &BigCount) -> Check {
    check(
        suite,
        name,
        formula == oracle,
        format!("formula {formula}, oracle {oracle}"),
    )
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    match suite {
        Suite::Pf => pf_suite(opts),
        Suite::Words => words_suite(opts),
        Suite::Sylvester => sylvester_suite(opts),
        Suite::Lgv => lgv_suite(opts),
        Suite::Rsk => rsk_suite(opts),
        Suite::Growth => growth_suite(opts),
    }
}

fn pf_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Pf;
    let top = opts.n_max.min(if opts.slow { 7 } else { 6 });
    let rows: Vec<Vec<Check>> = (1..=top)
        .into_par_iter()
        .map(|n| -> Result<Vec<Check>> {
            let mut out = Vec::new();
            let total = enumerate_pf_bounded(n, 7)?.count();
            let expected = (n as u64 + 1).pow(n as u32 - 1);
            out.push(check(
                s,
                format!("|PF_{n}| = (n+1)^(n-1)"),
                total as u64 == expected,
                format!("{total} vs {expected}"),
            ));
            let p321 = "321".parse().expect("pattern");
            out.push(equal(
                s,
                format!("pf_{n}(321) closed = brute"),
                &pf321_closed(n as u64),
                &pf_bruteforce_count_bounded(n, &p321, 7)?,
            ));
            for pattern in NonmonotonePattern::ALL {
                let sigma = pattern.permutation();
                out.push(equal(
                    s,
                    format!("pf_{n}({sigma}) composition sum = brute"),
                    &pf_nonmonotone_count(n, pattern)?,
                    &pf_bruteforce_count_bounded(n, &sigma, 7)?,
                ));
            }
            for r in 2..=4 {
                for spec in [MonotoneSpec::decreasing(r)?, MonotoneSpec::increasing(r)?] {
                    out.push(equal(
                        s,
                        format!("pf_{n}({}) partition sum = brute", spec.pattern()),
                        &monotone_pf_count(n, spec),
                        &monotone_pf_bruteforce(n, spec)?,
                    ));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<Check> = rows.into_iter().flatten().collect();
    for n in 1..=opts.n_max.min(6) {
        let mut all_unique = true;
        let mut total = 0;
        for beta in weak_compositions(n, n + 1) {
            total += 1;
            all_unique &= pollak_representative(&WeakComposition::new(beta)).is_ok();
        }
        out.push(check(
            s,
            format!("cyclic rotation unique, n={n}"),
            all_unique,
            format!("{total} weak compositions"),
        ));
    }
    Ok(out)
}

/// Weak compositions of `n` into exactly `parts` parts.
pub fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rem {
            cur.push(x);
            go(rem - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

fn words_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Words;
    let top = opts.n_max.min(6);
    let mut cases = Vec::new();
    for n in 0..=top {
        for k in 1..=6u32 {
            for r in 2..=4 {
                for dir in [MonotoneMode::StrictDecreasing, MonotoneMode::WeakIncreasing] {
                    for standardized in [true, false] {
                        cases.push((n, k, MonotoneSpec::new(dir, r)?, standardized));
                    }
                }
            }
        }
    }
    let mut out: Vec<Check> = cases
        .par_iter()
        .map(|&(n, k, spec, standardized)| {
            let tag = if standardized { "std" } else { "raw" };
            equal(
                s,
                format!("w_{{{n},{k}}}({}) {tag}", spec.pattern()),
                &monotone_word_count(n, k as u64, spec, standardized),
                &monotone_word_bruteforce(n, k, spec, standardized),
            )
        })
        .collect();
    let dec3 = MonotoneSpec::decreasing(3)?;
    let mut consistent = true;
    for n in 0..=12u64 {
        for k in 1..=12 {
            consistent &= w321_closed(n, k) == monotone_word_count(n as usize, k, dec3, true);
        }
    }
    out.push(check(
        s,
        "w321 closed form = partition sum, n,k <= 12",
        consistent,
        "",
    ));
    Ok(out)
}

fn sylvester_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Sylvester;
    let top = opts.n_max.min(7);
    let alphas: Vec<_> = (1..=top).flat_map(compositions).collect();
    alphas
        .par_iter()
        .map(|alpha| -> Result<Vec<Check>> {
            let content = WeakComposition::from(alpha.clone());
            let table = sylv_classes(&content)?;
            let sharp = sharp_classes(&content)?;
            let det = sylvester_class_count_det(alpha);
            let sharp_det = sharp_sylvester_class_count_det(alpha);
            let bfs = sylv_class_count_bfs(&content);
            let sharp_bfs = sharp_class_count_bfs(&content);
            Ok(vec![
                check(
                    s,
                    format!("sylv classes {alpha}"),
                    det == table.class_count() as u64 && bfs == table.class_count(),
                    format!("det {det}, trees {}, moves {bfs}", table.class_count()),
                ),
                check(
                    s,
                    format!("#-sylv classes {alpha}"),
                    sharp_det == sharp.class_count() as u64 && sharp_bfs == sharp.class_count(),
                    format!(
                        "det {sharp_det}, trees {}, moves {sharp_bfs}",
                        sharp.class_count()
                    ),
                ),
            ])
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn lgv_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Lgv;
    let mut out = Vec::new();
    for n in 1..=opts.n_max.min(12) {
        let sum: BigCount = compositions(n).map(|a| dyck_by_ascent_det(&a)).sum();
        out.push(equal(
            s,
            format!("sum of ascent determinants, n={n}"),
            &sum,
            &catalan(n),
        ));
    }
    for n in 1..=opts.n_max.min(8) {
        let mut ok = true;
        let mut detail = String::new();
        for alpha in compositions(n) {
            let det = dyck_by_ascent_det(&alpha);
            let brute = dyck_by_ascent_bruteforce(&alpha)?;
            let families: Vec<_> = lgv_families(&alpha).collect();
            let roundtrip = families.iter().all(|f| {
                let d = family_to_dyck(f);
                ascent_comp(&d) == alpha && dyck_to_family(&d).as_ref() == Ok(f)
            });
            let refine = dyck_refining_count(&alpha) == dyck_coarsening_bruteforce(&alpha)?;
            if det != brute || det != families.len() as u64 || !roundtrip || !refine {
                ok = false;
                detail = format!("{alpha}: det {det}, brute {brute}, families {}", families.len());
                break;
            }
        }
        out.push(check(
            s,
            format!("det = brute = families, roundtrip, n={n}"),
            ok,
            detail,
        ));
    }
    for n in 1..=opts.n_max.min(8) {
        let avoiders: Vec<_> = permutations(n)
            .filter(|p| !contains_order_isomorphic(p.one_line(), &[1, 3, 2]))
            .collect();
        let ok = avoiders.iter().all(|p| {
            rothe_dyck(p)
                .map(|d| descent_comp(&d) == descent_class(p))
                .unwrap_or(false)
        });
        out.push(check(
            s,
            format!("Rothe descent composition, n={n}"),
            ok,
            format!("{} avoiders", avoiders.len()),
        ));
    }
    Ok(out)
}

fn rsk_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Rsk;
    let mut out = Vec::new();
    for n in 0..=opts.n_max.min(6) {
        let mut ok = true;
        let mut pairs = std::collections::HashSet::new();
        let mut total = 0;
        for w in all_words(n, 4) {
            let pair = rsk(&w);
            let shape = pair.shape();
            let (lis, lds) = greene_invariants(&w);
            ok &= shape.first() == lis && shape.len() == lds;
            ok &= lis == longest_monotone(w.letters(), MonotoneMode::WeakIncreasing);
            ok &= pair.insertion.is_semistandard() && pair.recording.is_standard();
            pairs.insert(pair);
            total += 1;
        }
        out.push(check(
            s,
            format!("Greene shape and RSK injectivity, words of length {n} over [4]"),
            ok && pairs.len() == total,
            format!("{total} words"),
        ));
    }
    for n in 0..=opts.n_max.min(8) {
        let ok = partitions(n, None, None).all(|p| {
            let lam = Partition::new(p.parts().to_vec()).expect("partition");
            f_lambda(&lam) == syt_count(&lam)
        });
        out.push(check(
            s,
            format!("hook length formula = SYT count, |lambda|={n}"),
            ok,
            "",
        ));
    }
    for n in 0..=opts.n_max.min(6) {
        let ok = partitions(n, None, None).all(|p| {
            let lam = Partition::new(p.parts().to_vec()).expect("partition");
            (1..=5).all(|t| schur_ones(&lam, t as u64) == ssyt_count(&lam, t))
        });
        out.push(check(
            s,
            format!("hook content formula = SSYT count, |lambda|={n}, t<=5"),
            ok,
            "",
        ));
    }
    Ok(out)
}

fn growth_suite(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let s = Suite::Growth;
    let mut out = Vec::new();
    let top = opts.n_max.max(2);
    for spec in [MonotoneSpec::decreasing(3)?, MonotoneSpec::increasing(3)?] {
        let mut ok = true;
        let mut failed = String::new();
        for total in 2..=top {
            for n in 1..total {
                if !supermultiplicativity_check(spec, n, total - n)? {
                    ok = false;
                    failed = format!("fails at ({n}, {})", total - n);
                }
            }
        }
        out.push(check(
            s,
            format!("a_n a_m <= a_(n+m) for {}, n+m <= {top}", spec.pattern()),
            ok,
            failed,
        ));
        let bounded = (1..=top)
            .map(|n| root_bound_check(spec, n))
            .collect::<Result<Vec<_>>>()?;
        out.push(check(
            s,
            format!("a_n <= limit^n for {}, n <= {top}", spec.pattern()),
            bounded.iter().all(|&b| b),
            "",
        ));
    }
    for k in 2..=6 {
        for dir in [MonotoneMode::StrictDecreasing, MonotoneMode::WeakIncreasing] {
            let c = uniform_maximizes(dir, k, opts.simplex_samples, opts.seed)?;
            out.push(check(
                s,
                format!("uniform point maximizes {dir:?} objective, k={k}"),
                c.passed,
                format!("uniform {:.12}, best sample {:.12}", c.uniform, c.best_sample),
            ));
        }
    }
    for n in 1..=opts.n_max.min(8) {
        let ok = (1..=3)
            .map(|k| surjection_bound_check(n, k))
            .collect::<Result<Vec<_>>>()?;
        out.push(check(
            s,
            format!("surjection bound, n={n}, k<=3"),
            ok.iter().all(|&b| b),
            "",
        ));
    }
    Ok(out)
}

/// Runs the suites in order; checks come back in a deterministic order.
pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &suite in suites {
        out.extend(run_suite(suite, opts)?);
    }
    Ok(out)
}
