//! Exact integer arithmetic and the basic combinatorial families.
//!
//! Everything here is exact: counts are [`BigCount`]s backed by [`BigUint`],
//! signed intermediate values (falling factorials with negative arguments,
//! determinant entries) are [`BigInt`]s.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An exact nonnegative count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn one() -> Self {
        BigCount(BigUint::one())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.0.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Converts a signed value, failing if it is negative.
    pub fn try_from_bigint(value: BigInt) -> Result<Self> {
        match value.sign() {
            Sign::Minus => Err(Error::invalid(format!("negative count {value}"))),
            _ => Ok(BigCount(value.magnitude().clone())),
        }
    }

    /// Divides exactly, panicking if `divisor` does not divide `self`.
    ///
    /// Every division performed by the closed forms is guaranteed integral;
    /// a remainder means a bug, not an input problem.
    pub fn exact_div(&self, divisor: &BigUint) -> BigCount {
        let (q, r) = self.0.div_rem(divisor);
        assert!(r.is_zero(), "inexact division: {} / {}", self.0, divisor);
        BigCount(q)
    }

    /// Natural logarithm, accurate to f64 precision even past the f64 range.
    pub fn ln(&self) -> f64 {
        biguint_ln(&self.0)
    }
}

pub(crate) fn biguint_ln(value: &BigUint) -> f64 {
    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = value.bits();
    if bits <= 64 {
        return (value.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (value >> shift).to_u64().unwrap() as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::invalid(format!("{s:?}: {e}")))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for BigCount {
    type Output = BigCount;
    fn add(self, rhs: &'a BigCount) -> BigCount {
        BigCount(self.0 + &rhs.0)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &'a BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), |acc, x| acc + x)
    }
}

impl Serialize for BigCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Binomial coefficient with the convention that it vanishes for `k < 0` or
/// `k > n`. A negative upper index is rejected.
pub fn binomial(n: i64, k: i64) -> Result<BigCount> {
    if n < 0 {
        return Err(Error::invalid(format!("binomial upper index {n} is negative")));
    }
    if k < 0 || k > n {
        return Ok(BigCount::zero());
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact
        acc = acc * (n - i) / (i + 1);
    }
    Ok(BigCount(acc))
}

/// `x (x-1) ... (x-m+1)`; the empty product is 1.
pub fn falling_factorial(x: i64, m: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..m {
        let factor = BigInt::from(x) - BigInt::from(i);
        if factor.is_zero() {
            return BigInt::zero();
        }
        acc *= factor;
    }
    acc
}

/// A square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    order: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        IntegerMatrix { order, entries }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != order) {
            return Err(Error::invalid(format!(
                "row {bad} has length {}, expected {order}",
                rows[bad].len()
            )));
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        Ok(IntegerMatrix { order, entries })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.order + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    ///
    /// Every intermediate division is exact, so the computation never leaves
    /// the integers. The empty matrix has determinant 1.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.rows().map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(swap) => {
                        a.swap(k, swap);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    debug_assert!((&v % &prev).is_zero());
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

pub fn determinant(m: &IntegerMatrix) -> BigInt {
    m.determinant()
}

/// A composition: a sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Partial sums `a1, a1+a2, ..., a1+...+ak`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A weak composition: nonnegative parts, zeros allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The composition of positive parts, in order (the packed content).
    pub fn packed(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn sorted(&self) -> Partition {
        self.packed().sorted()
    }

    /// Rotation starting at index `start`.
    pub fn rotated(&self, start: usize) -> WeakComposition {
        let mut parts = self.0.clone();
        if !parts.is_empty() {
            let len = parts.len();
            parts.rotate_left(start % len);
        }
        WeakComposition(parts)
    }
}

impl From<Composition> for WeakComposition {
    fn from(c: Composition) -> Self {
        WeakComposition(c.0)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "{parts:?} is not a weakly decreasing sequence of positive parts"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            Partition::empty()
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first row, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Cells as `(row, col)`, zero-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// All compositions of `n` in reverse lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn compositions(n: usize) -> Compositions {
    Compositions {
        next: if n == 0 { None } else { Some(vec![n]) },
    }
}

pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let tail: usize = current[i + 1..].iter().sum();
            let mut succ = current[..=i].to_vec();
            succ[i] -= 1;
            succ.push(tail + 1);
            self.next = Some(succ);
        }
        Some(Composition(current))
    }
}

/// The composition of `n` whose cut set is encoded by the bits of `mask`:
/// bit `i` set means a part ends after position `i + 1`.
pub fn composition_from_mask(n: usize, mask: u64) -> Composition {
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..n {
        if mask >> (i - 1) & 1 == 1 {
            parts.push(i - last);
            last = i;
        }
    }
    parts.push(n - last);
    Composition(parts)
}

/// Partitions of `n` with at most `max_length` parts and parts at most
/// `max_part`, in reverse lexicographic order.
pub fn partitions(n: usize, max_length: Option<usize>, max_part: Option<usize>) -> Partitions {
    let max_length = max_length.unwrap_or(n);
    let max_part = max_part.unwrap_or(n);
    let first = if n == 0 {
        Some(Vec::new())
    } else if max_part == 0 || max_length == 0 || max_part.saturating_mul(max_length) < n {
        None
    } else {
        Some(greedy_fill(Vec::new(), n, max_part))
    };
    Partitions {
        next: first,
        max_length,
    }
}

fn greedy_fill(mut parts: Vec<usize>, mut rem: usize, cap: usize) -> Vec<usize> {
    while rem > 0 {
        let p = rem.min(cap);
        parts.push(p);
        rem -= p;
    }
    parts
}

pub struct Partitions {
    next: Option<Vec<usize>>,
    max_length: usize,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Rightmost part that can shrink by one while the remainder still
        // fits into the rows left under it.
        let mut tail = 0;
        for i in (0..current.len()).rev() {
            let cap = current[i] - 1;
            let rem = tail + 1;
            let rows_left = self.max_length - i - 1;
            if cap >= 1 && cap * rows_left >= rem {
                let mut succ = current[..i].to_vec();
                succ.push(cap);
                self.next = Some(greedy_fill(succ, rem, cap));
                break;
            }
            tail += current[i];
        }
        Some(Partition(current))
    }
}

/// Rearranges `v` into the next permutation in lexicographic order; returns
/// false (leaving `v` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigCount {
    binomial(2 * n as i64, n as i64)
        .unwrap()
        .exact_div(&BigUint::from(n + 1))
}

pub(crate) fn bigint_abs_to_count(v: &BigInt) -> BigCount {
    BigCount(v.abs().magnitude().clone())
}
