//! Hook lengths, contents, the hook length and hook content formulas,
//! Kostka numbers and RSK row insertion for words.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{factorial, BigCount, Partition, WeakComposition};
use crate::patterns::{longest_monotone, MonotoneMode, Word};
use crate::{Error, Result};

/// Largest tableau size [`kostka`] will enumerate.
pub const KOSTKA_BOUND: usize = 16;

/// One integer per cell of a partition, row by row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellGrid {
    shape: Partition,
    rows: Vec<Vec<i64>>,
}

impl CellGrid {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.rows.iter().flatten().copied()
    }
}

/// Cells weakly right in the row plus cells strictly below in the column.
pub fn hook_lengths(lam: &Partition) -> CellGrid {
    let conj = lam.conjugate();
    let rows = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| ((len - j) + (conj.parts()[j] - i) - 1) as i64)
                .collect()
        })
        .collect();
    CellGrid {
        shape: lam.clone(),
        rows,
    }
}

/// Content `column - row` of each cell; the first row reads `0, 1, 2, ...`.
pub fn cell_contents(lam: &Partition) -> CellGrid {
    let rows = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| j as i64 - i as i64).collect())
        .collect();
    CellGrid {
        shape: lam.clone(),
        rows,
    }
}

fn hook_product(lam: &Partition) -> BigUint {
    hook_lengths(lam)
        .values()
        .fold(BigUint::one(), |acc, h| acc * h as u64)
}

/// Number of standard Young tableaux of shape `lam`, `n! / prod h(u)`.
pub fn f_lambda(lam: &Partition) -> BigCount {
    BigCount::from(factorial(lam.size() as u64)).exact_div(&hook_product(lam))
}

/// Number of semistandard tableaux of shape `lam` with entries at most `t`,
/// `prod (t + c(u)) / prod h(u)`.
pub fn schur_ones(lam: &Partition, t: u64) -> BigCount {
    let numerator = cell_contents(lam)
        .values()
        .fold(BigInt::one(), |acc, c| acc * (t as i64 + c));
    if numerator.is_zero() {
        return BigCount::zero();
    }
    // every factor is positive once no cell has content -t
    debug_assert!(numerator.is_positive());
    let (q, r) = numerator.magnitude().div_rem(&hook_product(lam));
    assert!(
        r.is_zero(),
        "hook content quotient for {lam} at t={t} is not integral"
    );
    BigCount::from(q)
}

/// A Young tableau: rows weakly increasing, columns strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        if Partition::new(t.rows.iter().map(Vec::len).collect()).is_err() || !t.is_semistandard() {
            return Err(Error::invalid(format!(
                "{:?} is not a semistandard tableau",
                t.rows
            )));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    /// Semistandard with entries exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let mut entries: Vec<u32> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        self.is_semistandard() && entries.iter().enumerate().all(|(i, &e)| e as usize == i + 1)
    }

    /// Row-inserts `x`, returning the row index where the tableau grew.
    fn row_insert(&mut self, mut x: u32) -> usize {
        for (i, row) in self.rows.iter_mut().enumerate() {
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                return i;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Insertion tableau `P` (semistandard) and recording tableau `Q` (standard).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TableauPair {
    pub insertion: Tableau,
    pub recording: Tableau,
}

impl TableauPair {
    pub fn shape(&self) -> Partition {
        self.insertion.shape()
    }
}

/// RSK row insertion of `w`, left to right.
pub fn rsk(w: &Word) -> TableauPair {
    let mut insertion = Tableau::default();
    let mut recording = Tableau::default();
    for (step, &x) in w.letters().iter().enumerate() {
        let row = insertion.row_insert(x);
        if row == recording.rows.len() {
            recording.rows.push(Vec::new());
        }
        recording.rows[row].push(step as u32 + 1);
    }
    TableauPair { insertion, recording }
}

/// `(longest weakly increasing, longest strictly decreasing)` subsequence lengths.
pub fn greene_invariants(w: &Word) -> (usize, usize) {
    (
        longest_monotone(w.letters(), MonotoneMode::WeakIncreasing),
        longest_monotone(w.letters(), MonotoneMode::StrictDecreasing),
    )
}

/// Semistandard tableaux of shape `mu` and content `content`, counted by
/// stacking one horizontal strip per letter.
pub fn kostka(mu: &Partition, content: &WeakComposition) -> Result<BigCount> {
    if mu.size() != content.sum() {
        return Err(Error::invalid(format!(
            "shape {mu} has {} cells but content {content} sums to {}",
            mu.size(),
            content.sum()
        )));
    }
    Error::check_bound("kostka", mu.size(), KOSTKA_BOUND)?;
    let strips: Vec<usize> = content.parts().iter().copied().filter(|&c| c > 0).collect();
    let target = mu.parts().to_vec();
    let mut shape = vec![0; target.len()];
    Ok(BigCount::from(count_strip_chains(&mut shape, &target, &strips)))
}

fn count_strip_chains(shape: &mut Vec<usize>, target: &[usize], strips: &[usize]) -> u64 {
    let Some((&size, rest)) = strips.split_first() else {
        return u64::from(shape.as_slice() == target);
    };
    let mut total = 0;
    let before = shape.clone();
    add_strip(shape, &before, target, 0, size, &mut |s| {
        total += count_strip_chains(s, target, rest);
    });
    total
}

/// Grows `shape` row by row from `row`, adding `left` cells so that no
/// column receives two (row `i` may not pass the old length of row `i - 1`).
fn add_strip(
    shape: &mut Vec<usize>,
    before: &[usize],
    target: &[usize],
    row: usize,
    left: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if left == 0 {
        visit(shape);
        return;
    }
    if row == target.len() {
        return;
    }
    let ceiling = if row == 0 {
        target[0]
    } else {
        target[row].min(before[row - 1])
    };
    let room = ceiling.saturating_sub(before[row]);
    for add in (0..=room.min(left)).rev() {
        shape[row] = before[row] + add;
        add_strip(shape, before, target, row + 1, left - add, visit);
    }
    shape[row] = before[row];
}
