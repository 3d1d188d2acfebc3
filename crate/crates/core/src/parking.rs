//! The parking process and parking functions.
//!
//! A parking function is stored by its preference sequence. Its labeled Dyck
//! path lies weakly below the diagonal: one horizontal run per spot, holding
//! the cars that prefer that spot.

use serde::Serialize;

use crate::combinatorics::WeakComposition;
use crate::lattice_paths::{DyckPath, Step};
use crate::patterns::{perm_contains, standardize_letters, Permutation};
use crate::{Error, Result};

/// Largest `n` accepted by [`enumerate_pf`] unless a larger bound is passed.
pub const PF_BOUND: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ParkingFunction(Vec<u32>);

impl ParkingFunction {
    pub fn new(prefs: Vec<u32>) -> Result<Self> {
        if is_parking_function(&prefs) {
            Ok(ParkingFunction(prefs))
        } else {
            Err(Error::NotParkingFunction(prefs))
        }
    }

    pub fn preferences(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Result of running the parking process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ParkingOutcome {
    /// `spot_of_car[i]` is the 1-based spot taken by car `i + 1`.
    Parked { spot_of_car: Vec<u32> },
    /// Car `car` (1-based) found no free spot at or after its preference.
    Failed { car: usize },
}

impl ParkingOutcome {
    pub fn is_total(&self) -> bool {
        matches!(self, ParkingOutcome::Parked { .. })
    }
}

/// Runs cars `1..=n` in order on a street with `prefs.len()` spots.
pub fn park(prefs: &[u32]) -> ParkingOutcome {
    let n = prefs.len();
    let mut taken = vec![false; n];
    let mut spot_of_car = Vec::with_capacity(n);
    for (car, &pref) in prefs.iter().enumerate() {
        let start = (pref as usize).saturating_sub(1);
        match (start..n).find(|&s| !taken[s]) {
            Some(s) if pref >= 1 => {
                taken[s] = true;
                spot_of_car.push(s as u32 + 1);
            }
            _ => return ParkingOutcome::Failed { car: car + 1 },
        }
    }
    ParkingOutcome::Parked { spot_of_car }
}

/// The sorted-prefix criterion: the `i`-th smallest preference is at most `i`.
pub fn is_parking_function(prefs: &[u32]) -> bool {
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &p)| p >= 1 && p as usize <= i + 1)
}

/// Every parking function of length `n`, lexicographically.
pub fn enumerate_pf(n: usize) -> Result<ParkingFunctions> {
    enumerate_pf_bounded(n, PF_BOUND)
}

pub fn enumerate_pf_bounded(n: usize, bound: usize) -> Result<ParkingFunctions> {
    Error::check_bound("enumerate_pf", n, bound)?;
    Ok(ParkingFunctions {
        current: Some(vec![1; n]),
        done_empty: false,
    })
}

/// Odometer over `[n]^n`; each candidate is checked with the sorted-prefix
/// criterion.
pub struct ParkingFunctions {
    current: Option<Vec<u32>>,
    done_empty: bool,
}

impl ParkingFunctions {
    fn advance(v: &mut [u32]) -> bool {
        let n = v.len() as u32;
        for i in (0..v.len()).rev() {
            if v[i] < n {
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for ParkingFunctions {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        let current = self.current.as_mut()?;
        if current.is_empty() {
            if self.done_empty {
                return None;
            }
            self.done_empty = true;
            return Some(ParkingFunction(Vec::new()));
        }
        loop {
            let candidate = current.clone();
            let more = Self::advance(current);
            if is_parking_function(&candidate) {
                if !more {
                    self.current = None;
                }
                return Some(ParkingFunction(candidate));
            }
            if !more {
                self.current = None;
                return None;
            }
        }
    }
}

/// Reads the run labels spot by spot: the cars preferring spot 1 in
/// increasing order, then spot 2, and so on.
pub fn label_permutation(p: &ParkingFunction) -> Permutation {
    let labels: Vec<u32> = run_labels(p).into_iter().flatten().collect();
    Permutation::new(labels).expect("runs partition the cars")
}

fn run_labels(p: &ParkingFunction) -> Vec<Vec<u32>> {
    let n = p.len();
    let mut runs = vec![Vec::new(); n];
    for (car, &pref) in p.preferences().iter().enumerate() {
        runs[pref as usize - 1].push(car as u32 + 1);
    }
    runs
}

/// `content_i = #{j : p_j = i}`, with exactly `n` entries.
pub fn content_of(p: &ParkingFunction) -> WeakComposition {
    WeakComposition::new(run_labels(p).iter().map(Vec::len).collect())
}

/// The labeled Dyck path of `p`: for each spot, an up step per car preferring
/// it (the horizontal run) followed by one down step. The labels are the
/// nonempty runs in spot order.
pub fn dyck_of_pf(p: &ParkingFunction) -> (DyckPath, Vec<Vec<u32>>) {
    let runs = run_labels(p);
    let mut steps = Vec::with_capacity(2 * p.len());
    for run in &runs {
        steps.extend(std::iter::repeat_n(Step::U, run.len()));
        steps.push(Step::D);
    }
    let path = DyckPath::new(steps).expect("parking content dominates the diagonal");
    let labels = runs.into_iter().filter(|r| !r.is_empty()).collect();
    (path, labels)
}

/// The unique rotation `r` of `beta` (n + 1 parts summing to n) whose last
/// part is 0 and whose first `n` parts are the content of a parking function.
pub fn pollak_representative(beta: &WeakComposition) -> Result<usize> {
    let parts = beta.parts();
    if parts.is_empty() || beta.sum() + 1 != parts.len() {
        return Err(Error::invalid(format!(
            "{beta} must have n + 1 parts summing to n"
        )));
    }
    let valid: Vec<usize> = (0..parts.len())
        .filter(|&r| is_valid_content_rotation(parts, r))
        .collect();
    assert_eq!(
        valid.len(),
        1,
        "cyclic-shift uniqueness violated for {beta}: {valid:?}"
    );
    Ok(valid[0])
}

fn is_valid_content_rotation(parts: &[usize], r: usize) -> bool {
    let m = parts.len();
    if parts[(r + m - 1) % m] != 0 {
        return false;
    }
    let mut acc = 0;
    (0..m - 1).all(|i| {
        acc += parts[(r + i) % m];
        acc > i
    })
}

/// Whether `p` avoids `sigma` in the label-permutation sense.
pub fn pf_avoids(p: &ParkingFunction, sigma: &Permutation) -> bool {
    !perm_contains(&label_permutation(p), sigma)
}

/// Same as [`label_permutation`], through standardization: `std(p)^{-1}`.
pub fn label_permutation_via_std(p: &ParkingFunction) -> Permutation {
    standardize_letters(p.preferences()).inverse()
}
