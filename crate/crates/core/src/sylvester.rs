//! Binary search trees of words and the Sylvester / #-Sylvester congruences.
//!
//! Two words are Sylvester equivalent exactly when their right-to-left
//! insertion trees coincide. The #-congruence is its image under
//! reverse-complement. Breadth-first closures of the elementary moves are kept
//! as oracles for both.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::combinatorics::WeakComposition;
use crate::patterns::{contains_order_isomorphic, standardize, words_with_content, Word};
use crate::{Error, Result};

/// Largest word length [`sylv_classes`] will partition.
pub const CLASS_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
struct Node {
    label: u32,
    left: Option<Box<Node>>,
    right: Option<Box<Node>>,
}

/// Binary search tree: labels `<=` the root go left, `>` go right.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SearchTree {
    root: Option<Box<Node>>,
}

impl SearchTree {
    pub fn new() -> Self {
        SearchTree { root: None }
    }

    /// Leaf insertion of one label.
    pub fn insert(&mut self, label: u32) {
        let mut slot = &mut self.root;
        while let Some(node) = slot {
            slot = if label <= node.label {
                &mut node.left
            } else {
                &mut node.right
            };
        }
        *slot = Some(Box::new(Node {
            label,
            left: None,
            right: None,
        }));
    }

    pub fn root_label(&self) -> Option<u32> {
        self.root.as_ref().map(|n| n.label)
    }

    pub fn len(&self) -> usize {
        fn count(n: &Option<Box<Node>>) -> usize {
            n.as_ref().map_or(0, |n| 1 + count(&n.left) + count(&n.right))
        }
        count(&self.root)
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Labels in order (left, root, right): the sorted word.
    pub fn in_order(&self) -> Vec<u32> {
        fn walk(n: &Option<Box<Node>>, out: &mut Vec<u32>) {
            if let Some(n) = n {
                walk(&n.left, out);
                out.push(n.label);
                walk(&n.right, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        out
    }

    /// Checks the `<=` / `>` search property at every node.
    pub fn is_search_tree(&self) -> bool {
        fn ok(n: &Option<Box<Node>>, lo: Option<u32>, hi: Option<u32>) -> bool {
            // labels in the subtree must lie in (lo, hi]
            match n {
                None => true,
                Some(n) => {
                    lo.is_none_or(|lo| n.label > lo)
                        && hi.is_none_or(|hi| n.label <= hi)
                        && ok(&n.left, lo, Some(n.label))
                        && ok(&n.right, Some(n.label), hi)
                }
            }
        }
        ok(&self.root, None, None)
    }

    /// Sideways drawing, right subtree on top, one node per line.
    pub fn render(&self) -> String {
        fn walk(n: &Option<Box<Node>>, depth: usize, out: &mut Vec<String>) {
            if let Some(n) = n {
                walk(&n.right, depth + 1, out);
                out.push(format!("{}{}", "    ".repeat(depth), n.label));
                walk(&n.left, depth + 1, out);
            }
        }
        let mut out = Vec::new();
        walk(&self.root, 0, &mut out);
        out.join("\n")
    }
}

impl fmt::Display for SearchTree {
    /// Bracket form `root(left,right)`, with `.` for an empty subtree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn walk(n: &Option<Box<Node>>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match n {
                None => f.write_str("."),
                Some(n) if n.left.is_none() && n.right.is_none() => write!(f, "{}", n.label),
                Some(n) => {
                    write!(f, "{}(", n.label)?;
                    walk(&n.left, f)?;
                    f.write_str(",")?;
                    walk(&n.right, f)?;
                    f.write_str(")")
                }
            }
        }
        walk(&self.root, f)
    }
}

/// `P(w)`: insert the letters of `w` from right to left.
pub fn bst_of(w: &Word) -> SearchTree {
    let mut t = SearchTree::new();
    for &x in w.letters().iter().rev() {
        t.insert(x);
    }
    t
}

/// Position `i` such that `v` is `u` with letters `i`, `i + 1` exchanged.
fn swapped_at(u: &Word, v: &Word) -> Option<usize> {
    let (a, b) = (u.letters(), v.letters());
    if a.len() != b.len() {
        return None;
    }
    let diff: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    match diff[..] {
        [i, j] if j == i + 1 && a[i] == b[j] && a[j] == b[i] => Some(i),
        _ => None,
    }
}

fn sylv_move_allowed(w: &[u32], i: usize) -> bool {
    let (a, c) = (w[i].min(w[i + 1]), w[i].max(w[i + 1]));
    a < c && w[i + 2..].iter().any(|&b| a <= b && b < c)
}

fn sharp_move_allowed(w: &[u32], i: usize) -> bool {
    let (a, c) = (w[i].min(w[i + 1]), w[i].max(w[i + 1]));
    a < c && w[..i].iter().any(|&b| a < b && b <= c)
}

/// One elementary move `u ac v b w <-> u ca v b w` with `a <= b < c`.
pub fn sylv_adjacent(u: &Word, v: &Word) -> bool {
    swapped_at(u, v).is_some_and(|i| sylv_move_allowed(u.letters(), i))
}

/// One elementary move `u b v ac w <-> u b v ca w` with `a < b <= c`.
pub fn sharp_adjacent(u: &Word, v: &Word) -> bool {
    swapped_at(u, v).is_some_and(|i| sharp_move_allowed(u.letters(), i))
}

pub fn sylv_equivalent(u: &Word, v: &Word) -> bool {
    let same = bst_of(u) == bst_of(v);
    if same {
        debug_assert_eq!(u.content(), v.content());
    }
    same
}

pub fn sharp_equivalent(u: &Word, v: &Word) -> bool {
    u.content() == v.content() && sylv_equivalent(&u.reverse_complement(), &v.reverse_complement())
}

fn bfs_closure(w: &Word, allowed: fn(&[u32], usize) -> bool) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        let letters = cur.letters();
        for i in 0..letters.len().saturating_sub(1) {
            if allowed(letters, i) {
                let mut next = letters.to_vec();
                next.swap(i, i + 1);
                let next = Word::new(next).expect("swapping keeps letters positive");
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Sylvester class of `w` by closing under elementary moves.
pub fn sylv_class_bfs(w: &Word) -> BTreeSet<Word> {
    bfs_closure(w, sylv_move_allowed)
}

/// #-Sylvester class of `w` by closing under elementary moves.
pub fn sharp_class_bfs(w: &Word) -> BTreeSet<Word> {
    bfs_closure(w, sharp_move_allowed)
}

/// Classes of all words with a given content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTable {
    pub content: WeakComposition,
    /// Each class sorted; classes ordered by their least word.
    pub classes: Vec<Vec<Word>>,
    /// `canonical[i]` is the representative of `classes[i]`.
    pub canonical: Vec<Word>,
}

impl ClassTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn word_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

fn partition_by<K: std::hash::Hash + Eq>(
    content: &WeakComposition,
    key: impl Fn(&Word) -> K,
) -> Result<Vec<Vec<Word>>> {
    Error::check_bound("class partition", content.sum(), CLASS_BOUND)?;
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<Word>> = Vec::new();
    // words arrive in lexicographic order, so classes come out sorted and
    // ordered by their least member
    for w in words_with_content(content) {
        let slot = *index.entry(key(&w)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(w);
    }
    Ok(classes)
}

/// Partition of the words with content `content` into Sylvester classes.
pub fn sylv_classes(content: &WeakComposition) -> Result<ClassTable> {
    let classes = partition_by(content, bst_of)?;
    let canonical = classes.iter().map(|c| canonical_rep(c)).collect::<Result<_>>()?;
    Ok(ClassTable {
        content: content.clone(),
        classes,
        canonical,
    })
}

/// Partition into #-Sylvester classes; representatives standardize to
/// 213-avoiders (the reverse-complement image of 132).
pub fn sharp_classes(content: &WeakComposition) -> Result<ClassTable> {
    let classes = partition_by(content, |w| bst_of(&w.reverse_complement()))?;
    let canonical = classes
        .iter()
        .map(|c| unique_avoiding_member(c, &[2, 1, 3]))
        .collect::<Result<_>>()?;
    Ok(ClassTable {
        content: content.clone(),
        classes,
        canonical,
    })
}

/// The member of a Sylvester class whose standardization avoids 132.
pub fn canonical_rep(class: &[Word]) -> Result<Word> {
    unique_avoiding_member(class, &[1, 3, 2])
}

fn unique_avoiding_member(class: &[Word], pattern: &[u32]) -> Result<Word> {
    let mut hits = class
        .iter()
        .filter(|w| !contains_order_isomorphic(standardize(w).one_line(), pattern));
    match (hits.next(), hits.next()) {
        (Some(w), None) => Ok(w.clone()),
        (None, _) => Err(Error::invalid(format!(
            "no member of a {}-word class avoids the pattern after standardization",
            class.len()
        ))),
        (Some(a), Some(b)) => Err(Error::invalid(format!(
            "class holds two representatives {a} and {b}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::all_words;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn insertion() {
        assert_eq!(bst_of(&w("155432")), bst_of(&w("554312")));
        assert_eq!(bst_of(&w("7")).to_string(), "7");
        let chain = bst_of(&w("321"));
        assert_eq!(chain.to_string(), "1(.,2(.,3))");
        assert_eq!(chain.root_label(), Some(1));
        assert_eq!(bst_of(&w("155432")).to_string(), "2(1,3(.,4(.,5(5,.))))");
        for word in all_words(5, 3) {
            let t = bst_of(&word);
            assert!(t.is_search_tree());
            let mut sorted = word.letters().to_vec();
            sorted.sort();
            assert_eq!(t.in_order(), sorted);
        }
    }

    #[test]
    fn adjacency_chains() {
        let chain = ["155432", "515432", "551432", "554132", "554312"];
        for pair in chain.windows(2) {
            assert!(sylv_adjacent(&w(pair[0]), &w(pair[1])), "{pair:?}");
            assert!(sylv_adjacent(&w(pair[1]), &w(pair[0])));
        }
        assert!(!sylv_adjacent(&w("155432"), &w("155432")));
        assert!(!sylv_adjacent(&w("12"), &w("21")));
        let sharp = ["432115", "432151", "432511", "435211", "453211"];
        for pair in sharp.windows(2) {
            assert!(sharp_adjacent(&w(pair[0]), &w(pair[1])), "{pair:?}");
        }
        assert!(!sharp_adjacent(&w("12"), &w("21")));
    }

    #[test]
    fn equivalences() {
        assert!(sylv_equivalent(&w("155432"), &w("554312")));
        assert!(!sylv_equivalent(&w("12"), &w("21")));
        assert!(!sylv_equivalent(&w("112"), &w("122")));
        assert!(sharp_equivalent(&w("432115"), &w("453211")));
        assert!(!sharp_equivalent(&w("112"), &w("122")));
    }

    #[test]
    fn bfs_agrees_with_trees() {
        for n in 0..=5 {
            for k in 1..=4 {
                for u in all_words(n, k) {
                    let by_tree: BTreeSet<Word> = words_with_content(&u.content())
                        .filter(|v| sylv_equivalent(&u, v))
                        .collect();
                    assert_eq!(sylv_class_bfs(&u), by_tree, "{u}");
                    let by_rc: BTreeSet<Word> = words_with_content(&u.content())
                        .filter(|v| sharp_equivalent(&u, v))
                        .collect();
                    assert_eq!(sharp_class_bfs(&u), by_rc, "{u}");
                }
            }
        }
    }

    #[test]
    fn class_tables() {
        let t = sylv_classes(&WeakComposition::new(vec![2, 2, 1])).unwrap();
        assert_eq!(t.word_count(), 30);
        assert_eq!(t.class_count(), 7);
        assert_eq!(
            sylv_classes(&WeakComposition::new(vec![4]))
                .unwrap()
                .class_count(),
            1
        );
        assert_eq!(
            sylv_classes(&WeakComposition::new(vec![1, 1, 1]))
                .unwrap()
                .class_count(),
            5
        );
        assert_eq!(
            sharp_classes(&WeakComposition::new(vec![1, 2, 2]))
                .unwrap()
                .class_count(),
            7
        );
        assert!(sylv_classes(&WeakComposition::new(vec![9])).is_err());
    }

    #[test]
    fn canonical_representatives() {
        let class: Vec<Word> = sylv_class_bfs(&w("155432")).into_iter().collect();
        let rep = canonical_rep(&class).unwrap();
        assert!(class.contains(&rep));
        assert!(!contains_order_isomorphic(
            standardize(&rep).one_line(),
            &[1, 3, 2]
        ));
        assert_eq!(canonical_rep(&[w("2")]).unwrap(), w("2"));
        let class: Vec<Word> = sylv_class_bfs(&w("132")).into_iter().collect();
        assert_eq!(class, vec![w("132"), w("312")]);
        assert_eq!(canonical_rep(&class).unwrap(), w("312"));
        assert!(canonical_rep(&[w("12"), w("21")]).is_err());
    }
}
