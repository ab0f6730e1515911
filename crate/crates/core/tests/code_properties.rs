use std::collections::BTreeSet;

use griesmer_lab::{parse_code, write_code, Code, Execution, FieldSpec};
use proptest::prelude::*;

fn brute_min_distance(words: &[Vec<u8>]) -> usize {
    let mut best = usize::MAX;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            best = best.min(words[i].iter().zip(&words[j]).filter(|(a, b)| a != b).count());
        }
    }
    best
}

/// Distinct random words over GF(q), at least two of them.
fn small_code() -> impl Strategy<Value = (u32, usize, Vec<Vec<u8>>)> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 1usize..8).prop_flat_map(|(q, n)| {
        let word = prop::collection::vec(0..q as u8, n);
        prop::collection::vec(word, 2..10).prop_filter_map("need two distinct words", move |ws| {
            let mut seen = BTreeSet::new();
            let ws: Vec<Vec<u8>> = ws.into_iter().filter(|w| seen.insert(w.clone())).collect();
            (ws.len() >= 2).then_some((q, n, ws))
        })
    })
}

fn build(q: u32, n: usize, words: Vec<Vec<u8>>) -> Code {
    Code::new(FieldSpec::new(q).unwrap(), n, words).unwrap()
}

proptest! {
    #[test]
    fn min_distance_matches_brute_force((q, n, words) in small_code()) {
        let expected = brute_min_distance(&words);
        let code = build(q, n, words);
        prop_assert_eq!(code.min_distance().unwrap(), expected);
        prop_assert_eq!(code.min_distance_with(Execution::Sequential).unwrap(), expected);
    }

    #[test]
    fn canonical_form_is_invariant(
        (q, n, words) in small_code(),
        seed in any::<u64>(),
    ) {
        let code = build(q, n, words.clone());
        let canon = code.canonical_form().unwrap();

        // coordinate permutation, per-coordinate symbol permutation, word shuffle
        let mut rng = seed;
        let mut next = |bound: usize| {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng >> 33) as usize % bound
        };
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, next(i + 1));
        }
        let relabel: Vec<Vec<u8>> = (0..n)
            .map(|_| {
                let mut s: Vec<u8> = (0..q as u8).collect();
                for i in (1..s.len()).rev() {
                    s.swap(i, next(i + 1));
                }
                s
            })
            .collect();
        let mut moved: Vec<Vec<u8>> = words
            .iter()
            .map(|w| (0..n).map(|c| relabel[c][w[perm[c]] as usize]).collect())
            .collect();
        for i in (1..moved.len()).rev() {
            moved.swap(i, next(i + 1));
        }
        let other = build(q, n, moved).canonical_form().unwrap();
        prop_assert!(canon.same_words(&other));
        prop_assert!(canon.canonical_form().unwrap().same_words(&canon));
        prop_assert_eq!(canon.min_distance().unwrap(), code.min_distance().unwrap());
    }

    #[test]
    fn puncture_lowers_distance_by_at_most_one((q, n, words) in small_code(), coord in 0usize..8) {
        prop_assume!(n >= 2);
        let coord = coord % n;
        let code = build(q, n, words);
        let d = code.min_distance().unwrap();
        let p = code.puncture(&[coord]).unwrap();
        prop_assert_eq!(p.n(), n - 1);
        if p.size() == code.size() {
            let pd = p.min_distance().unwrap();
            prop_assert!(pd + 1 >= d && pd <= d);
        } else {
            prop_assert_eq!(d, 1);
        }
    }

    #[test]
    fn shorten_keeps_distance((q, n, words) in small_code(), coord in 0usize..8) {
        prop_assume!(n >= 2);
        let coord = coord % n;
        let code = build(q, n, words.clone());
        let value = words[0][coord];
        let s = code.shorten(coord, code.field().element(value as u32).unwrap()).unwrap();
        let expected = words.iter().filter(|w| w[coord] == value).count();
        prop_assert_eq!(s.size(), expected);
        prop_assert_eq!(s.n(), n - 1);
        if expected >= 2 {
            prop_assert!(s.min_distance().unwrap() >= code.min_distance().unwrap());
        }
    }

    #[test]
    fn parity_makes_distance_even((_, n, words) in small_code()) {
        let words: BTreeSet<Vec<u8>> = words.into_iter().map(|w| w.iter().map(|s| s % 2).collect()).collect();
        prop_assume!(words.len() >= 2);
        let code = build(2, n, words.into_iter().collect());
        let d = code.min_distance().unwrap();
        let e = code.extend_parity().unwrap();
        prop_assert_eq!(e.min_distance().unwrap(), d + d % 2);
    }

    #[test]
    fn repeat_scales_distance((q, n, words) in small_code(), times in 1usize..4) {
        let code = build(q, n, words);
        let r = code.repeat(times).unwrap();
        prop_assert_eq!(r.n(), n * times);
        prop_assert_eq!(r.min_distance().unwrap(), code.min_distance().unwrap() * times);
    }

    #[test]
    fn translation_preserves_distances((q, n, words) in small_code(), shift in prop::collection::vec(0u8..5, 8)) {
        let code = build(q, n, words);
        let shift: Vec<u8> = shift[..n].iter().map(|s| s % q as u8).collect();
        let t = code.translate(&shift).unwrap();
        for i in 0..code.size() {
            for j in 0..code.size() {
                prop_assert_eq!(t.distance(i, j), code.distance(i, j));
            }
        }
    }

    #[test]
    fn span_is_linear((q, n, words) in small_code()) {
        prop_assume!((q as u64).pow(n as u32) <= 1024);
        let field = FieldSpec::new(q).unwrap();
        let span = Code::linear_span(field, &words).unwrap();
        prop_assert!(span.is_linear());
        prop_assert!(griesmer_lab::code::exact_log(span.size(), q).is_some());
        for w in &words {
            prop_assert!(span.contains(w));
        }
    }

    #[test]
    fn codefile_round_trip((q, n, words) in small_code()) {
        let code = build(q, n, words);
        let text = write_code(&code);
        let back = parse_code(&text).unwrap();
        prop_assert_eq!(back.q(), code.q());
        prop_assert!(back.same_words(&code));
        prop_assert_eq!(write_code(&back), text);
    }
}

#[test]
fn reduce_distance_hits_every_target() {
    let c4 = griesmer_lab::construct::counterexample_ck(4).unwrap();
    let sys = c4.systematic_coords().unwrap().to_vec();
    for target in 1..=18 {
        let r = c4.reduce_distance(target).unwrap();
        assert_eq!((r.n(), r.size()), (34, 16));
        assert_eq!(r.min_distance().unwrap(), target, "target {target}");
        assert_eq!(r.systematic_coords().unwrap(), sys.as_slice());
        let projections: BTreeSet<Vec<u8>> = r.words().map(|w| sys.iter().map(|&c| w[c]).collect()).collect();
        assert_eq!(projections.len(), 16);
    }
    assert!(c4.reduce_distance(19).is_err());
}

#[test]
fn systematic_round_trip_through_codefile() {
    let c4 = griesmer_lab::construct::counterexample_ck(4).unwrap();
    let back = parse_code(&write_code(&c4)).unwrap();
    assert_eq!(back.systematic_coords(), c4.systematic_coords());
    assert!(back.same_words(&c4));
}
