//! Words, permutations, standardization and pattern containment.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{next_permutation, BigCount, Composition, WeakComposition};
use crate::{Error, Result};

/// Largest `n` for which [`av_count`] will filter all of `S_n`.
pub const AV_BOUND: usize = 10;

/// A finite word over the positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::invalid(format!("word {letters:?} has a zero letter")));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each letter `1..=max`.
    pub fn content(&self) -> WeakComposition {
        let mut counts = vec![0usize; self.max_letter() as usize];
        for &x in &self.0 {
            counts[x as usize - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    /// True when the letter set is exactly `1..=max`.
    pub fn is_cayley(&self) -> bool {
        self.content().parts().iter().all(|&c| c > 0)
    }

    /// Reverse the word and complement each letter `x -> max + 1 - x`.
    pub fn reverse_complement(&self) -> Word {
        let top = self.max_letter() + 1;
        Word(self.0.iter().rev().map(|&x| top - x).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.iter().all(|&x| x <= 9) {
        for x in letters {
            write!(f, "{x}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = letters.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `"2,3,3,5"` or the digit shorthand `"2335"` (letters 1..=9 only).
pub fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::invalid(format!("{t:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d > 0 => Ok(d),
                _ => Err(Error::invalid(format!(
                    "{s:?}: digit shorthand allows only 1-9; use commas for larger letters"
                ))),
            })
            .collect()
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &x in &one_line {
            let i = x as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::invalid(format!("{one_line:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// `n, n-1, ..., 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

/// The permutation order-isomorphic to `w`, equal letters ranked left to right.
pub fn standardize(w: &Word) -> Permutation {
    standardize_letters(w.letters())
}

pub(crate) fn standardize_letters(letters: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&i| (letters[i], i));
    let mut ranks = vec![0; letters.len()];
    for (rank, i) in order.into_iter().enumerate() {
        ranks[i] = rank as u32 + 1;
    }
    Permutation(ranks)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

/// Whether some subsequence of `text` is order-isomorphic to `pattern`,
/// comparing every pair of chosen letters (equalities included).
pub fn contains_order_isomorphic(text: &[u32], pattern: &[u32]) -> bool {
    fn extend(text: &[u32], pattern: &[u32], chosen: &mut Vec<usize>, from: usize) -> bool {
        let j = chosen.len();
        if j == pattern.len() {
            return true;
        }
        let last_start = text.len() - (pattern.len() - j);
        for pos in from..=last_start {
            let fits = chosen
                .iter()
                .zip(pattern)
                .all(|(&c, &p)| text[c].cmp(&text[pos]) == p.cmp(&pattern[j]));
            if fits {
                chosen.push(pos);
                if extend(text, pattern, chosen, pos + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > text.len() {
        return false;
    }
    extend(text, pattern, &mut Vec::with_capacity(pattern.len()), 0)
}

pub fn perm_contains(pi: &Permutation, sigma: &Permutation) -> bool {
    contains_order_isomorphic(pi.one_line(), sigma.one_line())
}

/// Cayley-word containment: equal letters of `c` must match equal letters of `w`.
pub fn word_contains(w: &Word, c: &Word) -> Result<bool> {
    if !c.is_cayley() {
        return Err(Error::NotCayleyWord(c.to_string()));
    }
    Ok(contains_order_isomorphic(w.letters(), c.letters()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonotoneMode {
    StrictDecreasing,
    WeakIncreasing,
}

/// Length of the longest strictly decreasing or weakly increasing subsequence.
pub fn longest_monotone(w: &[u32], mode: MonotoneMode) -> usize {
    // patience-style tails: tails[l] is the best last letter of a run of length l + 1
    let mut tails: Vec<u32> = Vec::new();
    for &x in w {
        let pos = match mode {
            // strictly decreasing in x == strictly increasing in -x
            MonotoneMode::StrictDecreasing => tails.partition_point(|&t| t > x),
            MonotoneMode::WeakIncreasing => tails.partition_point(|&t| t <= x),
        };
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// Descent positions `i` (1-based) with `p_i > p_{i+1}`.
pub fn descent_set(p: &Permutation) -> BTreeSet<usize> {
    p.one_line()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Descent set of the inverse.
pub fn ides(p: &Permutation) -> BTreeSet<usize> {
    descent_set(&p.inverse())
}

/// The composition of `n` with partial sums `S`.
pub fn comp_of_set(set: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::invalid(format!(
            "{bad} is outside [1, {}]",
            n.saturating_sub(1)
        )));
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut last = 0;
    for &s in set.iter().chain(std::iter::once(&n)) {
        parts.push(s - last);
        last = s;
    }
    Composition::new(parts)
}

/// Proper partial sums of `alpha`.
pub fn set_of_comp(alpha: &Composition) -> BTreeSet<usize> {
    let mut sums = alpha.partial_sums();
    sums.pop();
    sums.into_iter().collect()
}

/// All words whose letter `i` occurs `content[i - 1]` times, in lexicographic order.
pub fn words_with_content(content: &WeakComposition) -> WordsWithContent {
    let letters: Vec<u32> = content
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i as u32 + 1, c))
        .collect();
    WordsWithContent {
        current: Some(letters),
    }
}

pub struct WordsWithContent {
    current: Option<Vec<u32>>,
}

impl Iterator for WordsWithContent {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let word = self.current.take()?;
        let mut succ = word.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(Word(word))
    }
}

/// All of `S_n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    words_with_content(&WeakComposition::new(vec![1; n])).map(|w| Permutation(w.0))
}

/// All words of length `n` over `[k]`, lexicographically.
pub fn all_words(n: usize, k: u32) -> impl Iterator<Item = Word> {
    let total = if k == 0 && n > 0 {
        0
    } else {
        (k as u64).pow(n as u32)
    };
    (0..total).map(move |mut idx| {
        let mut letters = vec![1u32; n];
        for slot in letters.iter_mut().rev() {
            *slot = (idx % k as u64) as u32 + 1;
            idx /= k as u64;
        }
        Word(letters)
    })
}

/// `|Av_n(sigma)|` by filtering all of `S_n`.
pub fn av_count(n: usize, sigma: &Permutation) -> Result<BigCount> {
    Error::check_bound("av_count", n, AV_BOUND)?;
    let count = permutations(n).filter(|p| !perm_contains(p, sigma)).count();
    Ok(BigCount::from(count))
}
