//! Brute-force counters used to check the closed forms.
//!
//! Nothing here uses a product formula or a determinant: tableaux are filled
//! cell by cell, words are filtered by direct pattern search, and classes are
//! grown by elementary moves.

use std::collections::BTreeSet;

use crate::closed_forms::MonotoneSpec;
use crate::combinatorics::{BigCount, Partition, WeakComposition};
use crate::parking::enumerate_pf_bounded;
use crate::patterns::{
    all_words, contains_order_isomorphic, standardize, words_with_content, MonotoneMode, Word,
};
use crate::sylvester::{sharp_class_bfs, sylv_class_bfs};
use crate::Result;

/// Number of standard Young tableaux, by removing the largest entry from
/// each corner in turn.
pub fn syt_count(lam: &Partition) -> BigCount {
    fn go(rows: &mut Vec<usize>) -> u64 {
        if rows.iter().all(|&r| r == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..rows.len() {
            let below = rows.get(i + 1).copied().unwrap_or(0);
            if rows[i] > below {
                rows[i] -= 1;
                total += go(rows);
                rows[i] += 1;
            }
        }
        total
    }
    BigCount::from(go(&mut lam.parts().to_vec()))
}

/// Number of semistandard tableaux with entries in `1..=t`, filling cells in
/// row-major order.
pub fn ssyt_count(lam: &Partition, t: u32) -> BigCount {
    let cells: Vec<(usize, usize)> = lam.cells().collect();
    let mut grid: Vec<Vec<u32>> = lam.parts().iter().map(|&len| vec![0; len]).collect();
    fn go(cells: &[(usize, usize)], idx: usize, grid: &mut Vec<Vec<u32>>, t: u32) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in left.max(above)..=t {
            grid[i][j] = v;
            total += go(cells, idx + 1, grid, t);
        }
        grid[i][j] = 0;
        total
    }
    BigCount::from(go(&cells, 0, &mut grid, t))
}

/// Hook lengths by counting cells to the right and below directly.
pub fn hook_lengths_by_count(lam: &Partition) -> Vec<Vec<i64>> {
    let cells: BTreeSet<(usize, usize)> = lam.cells().collect();
    lam.parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| {
                    let right = cells.iter().filter(|&&(r, c)| r == i && c > j).count();
                    let below = cells.iter().filter(|&&(r, c)| c == j && r > i).count();
                    (right + below + 1) as i64
                })
                .collect()
        })
        .collect()
}

/// Whether `w` avoids the monotone pattern, by direct search.
pub fn avoids_monotone(w: &Word, spec: MonotoneSpec, standardized: bool) -> bool {
    let pattern: Vec<u32> = spec.pattern().one_line().to_vec();
    match (spec.direction, standardized) {
        (MonotoneMode::WeakIncreasing, true) => {
            !contains_order_isomorphic(standardize(w).one_line(), &pattern)
        }
        _ => !contains_order_isomorphic(w.letters(), &pattern),
    }
}

/// Words of `[k]^n` avoiding the monotone pattern, by filtering all `k^n`.
pub fn monotone_word_bruteforce(n: usize, k: u32, spec: MonotoneSpec, standardized: bool) -> BigCount {
    BigCount::from(
        all_words(n, k)
            .filter(|w| avoids_monotone(w, spec, standardized))
            .count(),
    )
}

/// Parking functions whose preference word avoids the monotone pattern after
/// standardization.
pub fn monotone_pf_bruteforce(n: usize, spec: MonotoneSpec) -> Result<BigCount> {
    let count = enumerate_pf_bounded(n, crate::parking::PF_BOUND)?
        .filter(|p| {
            let w = Word::new(p.preferences().to_vec()).expect("preferences are positive");
            !contains_order_isomorphic(standardize(&w).one_line(), spec.pattern().one_line())
        })
        .count();
    Ok(BigCount::from(count))
}

fn count_classes(content: &WeakComposition, closure: fn(&Word) -> BTreeSet<Word>) -> usize {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut classes = 0;
    for w in words_with_content(content) {
        if !seen.contains(&w) {
            classes += 1;
            seen.extend(closure(&w));
        }
    }
    classes
}

/// Sylvester classes of words with the content, grown by elementary moves.
pub fn sylv_class_count_bfs(content: &WeakComposition) -> usize {
    count_classes(content, sylv_class_bfs)
}

/// #-Sylvester classes of words with the content, grown by elementary moves.
pub fn sharp_class_count_bfs(content: &WeakComposition) -> usize {
    count_classes(content, sharp_class_bfs)
}
