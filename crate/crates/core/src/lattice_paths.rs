//! Dyck paths counted by ascent composition.
//!
//! Paths are stored as `U`/`D` words. The count of paths with a given ascent
//! composition is a determinant of binomials; [`lgv_families`] enumerates the
//! nonintersecting lattice path families that the determinant counts, and
//! [`family_to_dyck`] / [`dyck_to_family`] carry the bijection between the two.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinatorics::{bigint_abs_to_count, binomial, BigCount, Composition, IntegerMatrix};
use crate::patterns::{comp_of_set, contains_order_isomorphic, descent_set, Permutation};
use crate::{Error, Result};

/// Largest semilength [`enumerate_dyck`] will list.
pub const DYCK_BOUND: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    U,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for &s in &steps {
            height += if s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::invalid(format!(
                    "{} dips below the axis",
                    render_word(&steps)
                )));
            }
        }
        if height != 0 {
            return Err(Error::invalid(format!(
                "{} does not return to the axis",
                render_word(&steps)
            )));
        }
        Ok(DyckPath(steps))
    }

    /// `U^n D^n`.
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::U; n];
        steps.extend(std::iter::repeat_n(Step::D, n));
        DyckPath(steps)
    }

    /// Builds `U^{a1} D^{d1} U^{a2} D^{d2} ...`.
    pub fn from_runs(ascents: &[usize], descents: &[usize]) -> Result<Self> {
        if ascents.len() != descents.len() || ascents.contains(&0) || descents.contains(&0) {
            return Err(Error::invalid(format!(
                "run lengths {ascents:?} / {descents:?} must be positive and paired"
            )));
        }
        let mut steps = Vec::new();
        for (&a, &d) in ascents.iter().zip(descents) {
            steps.extend(std::iter::repeat_n(Step::U, a));
            steps.extend(std::iter::repeat_n(Step::D, d));
        }
        DyckPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// The mirror image: steps read backwards with `U` and `D` exchanged.
    pub fn reversed(&self) -> DyckPath {
        DyckPath(
            self.0
                .iter()
                .rev()
                .map(|s| match s {
                    Step::U => Step::D,
                    Step::D => Step::U,
                })
                .collect(),
        )
    }
}

fn render_word(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| if *s == Step::U { 'U' } else { 'D' })
        .collect()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(&self.0))
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                _ => Err(Error::invalid(format!("{s:?}: steps must be U or D"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

fn run_lengths(steps: &[Step], which: Step) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0;
    for &s in steps {
        if s == which {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// Lengths of the maximal runs of up steps.
pub fn ascent_comp(d: &DyckPath) -> Composition {
    Composition::new(run_lengths(&d.0, Step::U)).expect("runs are positive")
}

/// Lengths of the maximal runs of down steps.
pub fn descent_comp(d: &DyckPath) -> Composition {
    Composition::new(run_lengths(&d.0, Step::D)).expect("runs are positive")
}

/// Every Dyck path of semilength `n`, lexicographically with `U < D`.
pub fn enumerate_dyck(n: usize) -> Result<DyckPaths> {
    Error::check_bound("enumerate_dyck", n, DYCK_BOUND)?;
    Ok(DyckPaths {
        next: Some(DyckPath::pyramid(n).0),
    })
}

pub struct DyckPaths {
    next: Option<Vec<Step>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        let n = current.len() / 2;
        // Rightmost U that can turn into D (height before it is positive);
        // the suffix is then refilled with the smallest completion U..UD..D.
        let mut height_before = Vec::with_capacity(current.len());
        let mut h = 0i64;
        for &s in &current {
            height_before.push(h);
            h += if s == Step::U { 1 } else { -1 };
        }
        let flip = (0..current.len())
            .rev()
            .find(|&i| current[i] == Step::U && height_before[i] > 0);
        if let Some(i) = flip {
            let mut succ = current[..i].to_vec();
            succ.push(Step::D);
            let ups = current[..i].iter().filter(|&&s| s == Step::U).count();
            let remaining_ups = n - ups;
            succ.extend(std::iter::repeat_n(Step::U, remaining_ups));
            let remaining = 2 * n - succ.len();
            succ.extend(std::iter::repeat_n(Step::D, remaining));
            self.next = Some(succ);
        }
        Some(DyckPath(current))
    }
}

/// The binomial matrix `[C(j - i + S_i, j - i + 1)]`, `1 <= i, j <= k - 1`,
/// where `S_i` are the partial sums of `alpha`.
pub fn ascent_matrix(alpha: &Composition) -> IntegerMatrix {
    let sums = alpha.partial_sums();
    let k = alpha.len();
    IntegerMatrix::from_fn(k.saturating_sub(1), |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let top = j - i + sums[i0] as i64;
        BigInt::from(
            binomial(top, j - (i - 1))
                .expect("S_i >= i keeps the upper index positive")
                .into_biguint(),
        )
    })
}

/// Number of Dyck paths with ascent composition `alpha`, by determinant.
pub fn dyck_by_ascent_det(alpha: &Composition) -> BigCount {
    let det = ascent_matrix(alpha).determinant();
    assert!(
        det >= BigInt::from(0),
        "path count determinant is negative for {alpha}"
    );
    bigint_abs_to_count(&det)
}

/// Same count by listing every Dyck path of the right semilength.
pub fn dyck_by_ascent_bruteforce(alpha: &Composition) -> Result<BigCount> {
    let count = enumerate_dyck(alpha.size())?
        .filter(|d| ascent_comp(d) == *alpha)
        .count();
    Ok(BigCount::from(count))
}

/// `(a1+1, a2+1, ..., a_{k-1}+1, a_k)`.
pub fn peak_shift(alpha: &Composition) -> Composition {
    let k = alpha.len();
    let parts = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &a)| if i + 1 < k { a + 1 } else { a })
        .collect();
    Composition::new(parts).expect("parts stay positive")
}

/// Number of Dyck paths whose ascent composition is coarser than `alpha`
/// (its partial sums are a subset of those of `alpha`), computed as the
/// ascent determinant of [`peak_shift`]`(alpha)`.
pub fn dyck_refining_count(alpha: &Composition) -> BigCount {
    dyck_by_ascent_det(&peak_shift(alpha))
}

/// Brute-force counterpart of [`dyck_refining_count`].
pub fn dyck_coarsening_bruteforce(alpha: &Composition) -> Result<BigCount> {
    let cuts = crate::patterns::set_of_comp(alpha);
    let count = enumerate_dyck(alpha.size())?
        .filter(|d| crate::patterns::set_of_comp(&ascent_comp(d)).is_subset(&cuts))
        .count();
    Ok(BigCount::from(count))
}

/// Deletes the first `k - 1` peaks of a path with ascent composition
/// `peak_shift(alpha)`.
pub fn delete_peaks(d: &DyckPath, count: usize) -> DyckPath {
    let mut steps = Vec::with_capacity(d.0.len());
    let mut deleted = 0;
    let mut i = 0;
    while i < d.0.len() {
        if deleted < count && i + 1 < d.0.len() && d.0[i] == Step::U && d.0[i + 1] == Step::D {
            deleted += 1;
            i += 2;
            continue;
        }
        steps.push(d.0[i]);
        i += 1;
    }
    DyckPath(steps)
}

fn lehmer_code(p: &Permutation) -> Vec<usize> {
    let v = p.one_line();
    (0..v.len())
        .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
        .collect()
}

fn from_lehmer_code(code: &[usize]) -> Permutation {
    let mut free: Vec<u32> = (1..=code.len() as u32).collect();
    let one_line = code.iter().map(|&c| free.remove(c)).collect();
    Permutation::new(one_line).expect("a Lehmer code determines a permutation")
}

/// Boundary path of the Rothe diagram of a 132-avoiding permutation.
///
/// The inversion cells of a 132-avoider form a Young diagram whose row `i`
/// has `c_i` cells (the Lehmer code, weakly decreasing). Reading the rows top
/// to bottom, the `i`-th down step is preceded by `n - c_i` up steps. Runs of
/// down steps are runs of equal code values, so the descent composition is
/// the composition of `Des(pi)`.
pub fn rothe_dyck(pi: &Permutation) -> Result<DyckPath> {
    if contains_order_isomorphic(pi.one_line(), &[1, 3, 2]) {
        return Err(Error::ContainsPattern {
            text: pi.to_string(),
            pattern: "132".into(),
        });
    }
    let n = pi.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut ups = 0;
    for c in lehmer_code(pi) {
        let target = n - c;
        steps.extend(std::iter::repeat_n(Step::U, target - ups));
        ups = target;
        steps.push(Step::D);
    }
    DyckPath::new(steps)
}

/// Inverse of [`rothe_dyck`].
pub fn rothe_permutation(d: &DyckPath) -> Permutation {
    let n = d.semilength();
    let mut ups = 0;
    let mut code = Vec::with_capacity(n);
    for &s in &d.0 {
        match s {
            Step::U => ups += 1,
            Step::D => code.push(n - ups),
        }
    }
    from_lehmer_code(&code)
}

/// A family of `k - 1` lattice paths on the grid with north and west steps.
///
/// Path `i` starts at `s_i = (S_i - 1, i - 1)` and ends at `t_i = (0, i)`,
/// so it has exactly one north step, at abscissa `x_i`. The abscissae are
/// the whole content of the family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PathFamily {
    alpha: Composition,
    abscissae: Vec<i64>,
}

impl PathFamily {
    pub fn new(alpha: Composition, abscissae: Vec<i64>) -> Result<Self> {
        let k = alpha.len();
        if abscissae.len() + 1 != k.max(1) {
            return Err(Error::MalformedFamily(format!(
                "{} paths for a composition with {k} parts",
                abscissae.len()
            )));
        }
        let sums = alpha.partial_sums();
        for (i, &x) in abscissae.iter().enumerate() {
            if x < 0 || x > sums[i] as i64 - 1 {
                return Err(Error::MalformedFamily(format!(
                    "path {} turns north at x = {x}, outside [0, {}]",
                    i + 1,
                    sums[i] - 1
                )));
            }
        }
        let family = PathFamily { alpha, abscissae };
        if let Some(i) = family.first_intersection() {
            return Err(Error::MalformedFamily(format!(
                "paths {} and {} share a vertex",
                i + 1,
                i + 2
            )));
        }
        Ok(family)
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn abscissae(&self) -> &[i64] {
        &self.abscissae
    }

    pub fn sources(&self) -> Vec<(i64, i64)> {
        let sums = self.alpha.partial_sums();
        (0..self.abscissae.len())
            .map(|i| (sums[i] as i64 - 1, i as i64))
            .collect()
    }

    pub fn sinks(&self) -> Vec<(i64, i64)> {
        (0..self.abscissae.len()).map(|i| (0, i as i64 + 1)).collect()
    }

    /// Vertices of path `i` (0-based), from source to sink.
    pub fn path_vertices(&self, i: usize) -> Vec<(i64, i64)> {
        let (sx, sy) = self.sources()[i];
        let x = self.abscissae[i];
        let mut vertices: Vec<(i64, i64)> = (x..=sx).rev().map(|cx| (cx, sy)).collect();
        vertices.extend((0..=x).rev().map(|cx| (cx, sy + 1)));
        vertices
    }

    fn first_intersection(&self) -> Option<usize> {
        let sets: Vec<HashSet<(i64, i64)>> = (0..self.abscissae.len())
            .map(|i| self.path_vertices(i).into_iter().collect())
            .collect();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if !sets[i].is_disjoint(&sets[j]) {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// Every nonintersecting family for `alpha`, in lexicographic order of abscissae.
pub fn lgv_families(alpha: &Composition) -> impl Iterator<Item = PathFamily> {
    let sums = alpha.partial_sums();
    let paths = alpha.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut xs = Vec::with_capacity(paths);
    collect_families(&sums, paths, &mut xs, &mut out);
    let alpha = alpha.clone();
    out.into_iter()
        .map(move |xs| PathFamily::new(alpha.clone(), xs).expect("search yields disjoint families"))
}

fn collect_families(sums: &[usize], paths: usize, xs: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let i = xs.len();
    if i == paths {
        out.push(xs.clone());
        return;
    }
    for x in 0..sums[i] as i64 {
        // only consecutive paths can meet: they share the row y = i
        if let Some(&prev) = xs.last() {
            let prev_row: BTreeSet<i64> = (0..=prev).collect();
            let this_row: BTreeSet<i64> = (x..sums[i] as i64).collect();
            if !prev_row.is_disjoint(&this_row) {
                continue;
            }
        }
        xs.push(x);
        collect_families(sums, paths, xs, out);
        xs.pop();
    }
}

/// The Dyck path with ascent composition `alpha` and descent composition
/// `(x_1 - x_0, ..., x_{k-1} - x_{k-2}, n - 1 - x_{k-1})`, `x_0 = -1`.
pub fn family_to_dyck(family: &PathFamily) -> DyckPath {
    let n = family.alpha.size() as i64;
    let mut descents = Vec::with_capacity(family.alpha.len());
    let mut prev = -1;
    for &x in &family.abscissae {
        descents.push((x - prev) as usize);
        prev = x;
    }
    descents.push((n - 1 - prev) as usize);
    DyckPath::from_runs(family.alpha.parts(), &descents).expect("nonintersecting families give Dyck paths")
}

/// Inverse of [`family_to_dyck`]: `x_i = -1 + d_1 + ... + d_i`.
pub fn dyck_to_family(d: &DyckPath) -> Result<PathFamily> {
    let alpha = ascent_comp(d);
    let delta = descent_comp(d);
    let mut abscissae = Vec::with_capacity(alpha.len().saturating_sub(1));
    let mut acc = -1i64;
    for &part in delta.parts().iter().take(alpha.len().saturating_sub(1)) {
        acc += part as i64;
        abscissae.push(acc);
    }
    PathFamily::new(alpha, abscissae)
}

/// Mountain drawing of a path, top row first.
pub fn render_path(d: &DyckPath) -> String {
    let height =
        d.0.iter()
            .scan(0i64, |h, &s| {
                *h += if s == Step::U { 1 } else { -1 };
                Some(*h)
            })
            .max()
            .unwrap_or(0) as usize;
    let mut grid = vec![vec![' '; d.0.len()]; height.max(1)];
    let mut h = 0usize;
    for (col, &s) in d.0.iter().enumerate() {
        match s {
            Step::U => {
                grid[height - 1 - h][col] = '/';
                h += 1;
            }
            Step::D => {
                h -= 1;
                grid[height - 1 - h][col] = '\\';
            }
        }
    }
    grid.iter()
        .map(|row| row.iter().collect::<String>().trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Permutation diagram with `X` at `(i, pi_i)` and `#` on Rothe cells
/// `(i, pi_j)`, `i < j`, `pi_i > pi_j`. Row `i` is position `i`.
pub fn render_rothe(pi: &Permutation) -> String {
    let v = pi.one_line();
    let n = v.len();
    let mut lines = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec!['.'; n];
        row[v[i] as usize - 1] = 'X';
        for j in i + 1..n {
            if v[j] < v[i] {
                row[v[j] as usize - 1] = '#';
            }
        }
        lines.push(row.into_iter().collect::<String>());
    }
    lines.join("\n")
}

/// Text picture of a path family: row `y` printed top down, path `i` drawn with
/// its 1-based index.
pub fn render_family(family: &PathFamily) -> String {
    let width = family
        .alpha
        .partial_sums()
        .iter()
        .rev()
        .nth(1)
        .copied()
        .unwrap_or(1);
    let rows = family.abscissae.len() + 1;
    let mut grid = vec![vec!['.'; width.max(1)]; rows];
    for i in 0..family.abscissae.len() {
        let mark = char::from_digit((i as u32 + 1) % 36, 36).unwrap_or('*');
        for (x, y) in family.path_vertices(i) {
            grid[y as usize][x as usize] = mark;
        }
    }
    grid.iter()
        .rev()
        .map(|r| r.iter().collect::<String>())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Descent composition of the Rothe boundary predicted from `Des(pi)`.
pub fn descent_class(pi: &Permutation) -> Composition {
    comp_of_set(&descent_set(pi), pi.len()).expect("descents lie in [n - 1]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{catalan, compositions};
    use crate::patterns::permutations;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    const BIG_EXAMPLE: &str = "UUDUUDDUUUDUDDDDUUUDDUUUDUUUDDDDDD";

    #[test]
    fn run_compositions() {
        let d = path(BIG_EXAMPLE);
        assert_eq!(d.semilength(), 17);
        assert_eq!(ascent_comp(&d).parts(), &[2, 2, 3, 1, 3, 3, 3]);
        assert_eq!(descent_comp(&d).parts(), &[1, 2, 1, 4, 2, 1, 6]);
        assert_eq!(ascent_comp(&DyckPath::pyramid(5)).parts(), &[5]);
        assert_eq!(descent_comp(&DyckPath::pyramid(5)).parts(), &[5]);
        let zigzag = path("UDUDUD");
        assert_eq!(ascent_comp(&zigzag).parts(), &[1, 1, 1]);
        assert_eq!(descent_comp(&zigzag).parts(), &[1, 1, 1]);
    }

    #[test]
    fn path_validation() {
        assert!("UDDU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UXD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_dyck(3).unwrap().count(), 5);
        assert_eq!(enumerate_dyck(4).unwrap().count(), 14);
        assert_eq!(
            enumerate_dyck(0).unwrap().collect::<Vec<_>>(),
            vec![DyckPath(vec![])]
        );
        for n in 0..=10 {
            assert_eq!(BigCount::from(enumerate_dyck(n).unwrap().count()), catalan(n));
        }
        assert!(enumerate_dyck(15).is_err());
        let listed: Vec<DyckPath> = enumerate_dyck(6).unwrap().collect();
        let mut sorted = listed.clone();
        sorted.sort();
        assert_eq!(listed, sorted);
    }

    #[test]
    fn ascent_determinants() {
        assert_eq!(dyck_by_ascent_det(&comp(&[6])), 1);
        assert_eq!(dyck_by_ascent_det(&comp(&[2, 1])), 2);
        assert_eq!(dyck_by_ascent_det(&comp(&[1, 1, 1])), 1);
        assert_eq!(dyck_by_ascent_det(&comp(&[2, 2, 1])), 5);
        assert_eq!(dyck_by_ascent_det(&comp(&[2, 3, 2])), 7);
    }

    #[test]
    fn ascent_bruteforce() {
        assert_eq!(dyck_by_ascent_bruteforce(&comp(&[2, 1])).unwrap(), 2);
        assert_eq!(dyck_by_ascent_bruteforce(&comp(&[1, 2])).unwrap(), 1);
        assert_eq!(dyck_by_ascent_bruteforce(&comp(&[2, 2, 1])).unwrap(), 5);
        for n in 1..=9 {
            for alpha in compositions(n) {
                assert_eq!(
                    dyck_by_ascent_det(&alpha),
                    dyck_by_ascent_bruteforce(&alpha).unwrap(),
                    "{alpha}"
                );
            }
        }
    }

    #[test]
    fn refinement_counts() {
        assert_eq!(dyck_refining_count(&comp(&[2])), 1);
        assert_eq!(dyck_refining_count(&comp(&[1, 1])), 2);
        assert_eq!(dyck_refining_count(&comp(&[2, 1])), 3);
        for n in 1..=8 {
            for alpha in compositions(n) {
                assert_eq!(
                    dyck_refining_count(&alpha),
                    dyck_coarsening_bruteforce(&alpha).unwrap(),
                    "{alpha}"
                );
            }
        }
    }

    #[test]
    fn peak_deletion_is_a_bijection() {
        for n in 1..=7 {
            for alpha in compositions(n) {
                let beta = peak_shift(&alpha);
                let cuts = crate::patterns::set_of_comp(&alpha);
                let images: HashSet<DyckPath> = enumerate_dyck(beta.size())
                    .unwrap()
                    .filter(|d| ascent_comp(d) == beta)
                    .map(|d| delete_peaks(&d, alpha.len() - 1))
                    .collect();
                for img in &images {
                    assert!(crate::patterns::set_of_comp(&ascent_comp(img)).is_subset(&cuts));
                }
                assert_eq!(
                    BigCount::from(images.len()),
                    dyck_coarsening_bruteforce(&alpha).unwrap()
                );
            }
        }
    }

    #[test]
    fn rothe_example() {
        let pi: Permutation = "45637812".parse().unwrap();
        let d = rothe_dyck(&pi).unwrap();
        assert_eq!(d.to_string(), "UUUUUDDDUDDDUUDD");
        assert_eq!(descent_comp(&d).parts(), &[3, 3, 2]);
        assert_eq!(rothe_permutation(&d), pi);
        assert_eq!(
            descent_comp(&rothe_dyck(&Permutation::identity(5)).unwrap()).parts(),
            &[5]
        );
        assert_eq!(
            descent_comp(&rothe_dyck(&Permutation::decreasing(5)).unwrap()).parts(),
            &[1, 1, 1, 1, 1]
        );
        assert!(matches!(
            rothe_dyck(&"132".parse().unwrap()),
            Err(Error::ContainsPattern { .. })
        ));
    }

    #[test]
    fn rothe_is_bijective_on_avoiders() {
        for n in 1..=7 {
            let avoiders: Vec<Permutation> = permutations(n)
                .filter(|p| !contains_order_isomorphic(p.one_line(), &[1, 3, 2]))
                .collect();
            let paths: HashSet<DyckPath> = avoiders.iter().map(|p| rothe_dyck(p).unwrap()).collect();
            assert_eq!(paths.len(), avoiders.len());
            assert_eq!(BigCount::from(paths.len()), catalan(n));
            for p in &avoiders {
                let d = rothe_dyck(p).unwrap();
                assert_eq!(descent_comp(&d), descent_class(p));
                assert_eq!(&rothe_permutation(&d), p);
            }
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(lgv_families(&comp(&[2, 2, 1])).count(), 5);
        // the seven families drawn with sources (1,0) and (4,1)
        let seven: Vec<PathFamily> = lgv_families(&comp(&[2, 3, 2])).collect();
        assert_eq!(seven.len(), 7);
        assert_eq!(seven[0].sources(), vec![(1, 0), (4, 1)]);
        let single: Vec<PathFamily> = lgv_families(&comp(&[4])).collect();
        assert_eq!(single.len(), 1);
        assert_eq!(family_to_dyck(&single[0]), DyckPath::pyramid(4));
    }

    #[test]
    fn big_family_example() {
        let d = path(BIG_EXAMPLE);
        let fam = dyck_to_family(&d).unwrap();
        assert_eq!(
            fam.sources(),
            vec![(1, 0), (3, 1), (6, 2), (7, 3), (10, 4), (13, 5)]
        );
        assert_eq!(fam.abscissae(), &[0, 2, 3, 7, 9, 10]);
        assert_eq!(family_to_dyck(&fam), d);
    }

    #[test]
    fn family_roundtrips() {
        for n in 1..=7 {
            for alpha in compositions(n) {
                let families: Vec<PathFamily> = lgv_families(&alpha).collect();
                assert_eq!(BigCount::from(families.len()), dyck_by_ascent_det(&alpha));
                for f in &families {
                    let d = family_to_dyck(f);
                    assert_eq!(ascent_comp(&d), alpha);
                    assert_eq!(&dyck_to_family(&d).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn malformed_families_rejected() {
        // paths 1 and 2 both occupy (0, 1) and (1, 1)
        assert!(matches!(
            PathFamily::new(comp(&[2, 2, 1]), vec![1, 1]),
            Err(Error::MalformedFamily(_))
        ));
        assert!(PathFamily::new(comp(&[2, 2, 1]), vec![2, 3]).is_err());
        assert!(PathFamily::new(comp(&[2, 2, 1]), vec![0]).is_err());
    }

    #[test]
    fn reversal_swaps_compositions() {
        for n in 0..=8 {
            for d in enumerate_dyck(n).unwrap() {
                assert_eq!(ascent_comp(&d.reversed()), descent_comp(&d).reversed());
            }
        }
    }

    #[test]
    fn renderings() {
        assert_eq!(render_path(&path("UUDD")), " /\\\n/  \\");
        assert_eq!(render_rothe(&"21".parse().unwrap()), "#X\nX.");
        let fam = dyck_to_family(&path("UUDUDD")).unwrap();
        assert!(render_family(&fam).contains('1'));
    }
}
