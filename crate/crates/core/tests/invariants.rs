use parkav_core::lattice_paths::{ascent_comp, descent_comp, dyck_to_family, family_to_dyck, DyckPath, Step};
use parkav_core::parking::{is_parking_function, label_permutation};
use parkav_core::patterns::{perm_contains, standardize};
use parkav_core::sylvester::{bst_of, sharp_class_bfs, sharp_equivalent, sylv_class_bfs, sylv_equivalent};
use parkav_core::tableaux::{greene_invariants, rsk};
use parkav_core::{Permutation, Word};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn word(max_len: usize, k: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=k, 1..=max_len).prop_map(|v| Word::new(v).unwrap())
}

/// A word and a rearrangement of it.
fn word_pair(max_len: usize, k: u32) -> impl Strategy<Value = (Word, Word)> {
    word(max_len, k).prop_flat_map(|w| {
        let letters = w.letters().to_vec();
        (
            Just(w),
            Just(letters).prop_shuffle().prop_map(|v| Word::new(v).unwrap()),
        )
    })
}

fn dyck(max_n: usize) -> impl Strategy<Value = DyckPath> {
    // a random walk, cut back to a Dyck path
    prop::collection::vec(any::<bool>(), 2..=2 * max_n).prop_map(|bits| {
        let mut steps = Vec::new();
        let mut h = 0i32;
        for up in bits {
            if up || h == 0 {
                steps.push(Step::U);
                h += 1;
            } else {
                steps.push(Step::D);
                h -= 1;
            }
        }
        steps.extend(std::iter::repeat_n(Step::D, h as usize));
        DyckPath::new(steps).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rsk_shape_and_greene(w in word(9, 5)) {
        let pair = rsk(&w);
        let shape = pair.shape();
        prop_assert!(pair.insertion.is_semistandard());
        prop_assert!(pair.recording.is_standard());
        prop_assert_eq!(pair.insertion.shape(), pair.recording.shape());
        prop_assert_eq!(shape.cells().count(), w.len());
        let (inc, dec) = greene_invariants(&w);
        prop_assert_eq!(shape.first(), inc);
        prop_assert_eq!(shape.len(), dec);
    }

    #[test]
    fn sylvester_tree_matches_moves((u, v) in word_pair(6, 3)) {
        prop_assert_eq!(sylv_equivalent(&u, &v), sylv_class_bfs(&u).contains(&v));
        prop_assert_eq!(bst_of(&u).in_order(), {
            let mut s = u.letters().to_vec();
            s.sort();
            s
        });
    }

    #[test]
    fn sylvester_commutes_with_standardization((u, v) in word_pair(7, 4)) {
        let su = standardize(&u).as_word();
        let sv = standardize(&v).as_word();
        prop_assert_eq!(sylv_equivalent(&u, &v), sylv_equivalent(&su, &sv));
    }

    #[test]
    fn sharp_via_reverse_complement((u, v) in word_pair(6, 3)) {
        prop_assert_eq!(sharp_equivalent(&u, &v), sharp_class_bfs(&u).contains(&v));
        let ru = u.reverse_complement();
        let rv = v.reverse_complement();
        prop_assert_eq!(sharp_equivalent(&u, &v), sylv_class_bfs(&ru).contains(&rv));
    }

    #[test]
    fn parking_is_symmetric(prefs in prop::collection::vec(1u32..=6, 1..=6), seed in any::<u64>()) {
        let n = prefs.len() as u64;
        let mut shuffled = prefs.clone();
        shuffled.rotate_left((seed % n) as usize);
        prop_assert_eq!(is_parking_function(&prefs), is_parking_function(&shuffled));
    }

    #[test]
    fn label_avoidance_matches_standardization(perm in Just((1..=6).collect::<Vec<u32>>()).prop_shuffle()) {
        // a permutation is its own parking function; its label permutation is its inverse
        let p = parkav_core::parking::ParkingFunction::new(perm.clone()).unwrap();
        let pi = Permutation::new(perm).unwrap();
        prop_assert_eq!(label_permutation(&p), pi.inverse());
        let sigma: Permutation = "231".parse().unwrap();
        prop_assert_eq!(
            perm_contains(&label_permutation(&p), &sigma),
            perm_contains(&pi, &sigma.inverse())
        );
    }

    #[test]
    fn dyck_round_trips(d in dyck(10)) {
        let back: DyckPath = d.to_string().parse().unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(family_to_dyck(&dyck_to_family(&d).unwrap()), d.clone());
        prop_assert_eq!(ascent_comp(&d).size(), d.semilength());
        prop_assert_eq!(descent_comp(&d.reversed()), ascent_comp(&d).reversed());
    }

    #[test]
    fn subword_of_avoider_avoids(w in word(8, 4), keep in subsequence((0..8usize).collect::<Vec<_>>(), 0..=8)) {
        let sigma: Permutation = "321".parse().unwrap();
        let sub: Vec<u32> = keep.into_iter().filter(|&i| i < w.len()).map(|i| w.letters()[i]).collect();
        if sub.is_empty() {
            return Ok(());
        }
        let sub = Word::new(sub).unwrap();
        if !perm_contains(&standardize(&w), &sigma) {
            prop_assert!(!perm_contains(&standardize(&sub), &sigma));
        }
    }
}
