use std::collections::BTreeSet;

use griesmer_lab::construct::{
    counterexample_ck, hadamard_of_order, hadamard_recipe, levenshtein_code, simplex, simplex_sequence, BuildError,
    Family,
};
use griesmer_lab::search::{
    classify_optimal_four, max_code_size, min_length_exhaustive, min_length_systematic, verify_griesmer_family,
    verify_n4, verify_n8, ClassificationReport, FamilyReport,
};
use griesmer_lab::{Budget, Execution, HadamardMatrix, SearchOptions, SearchResult, SearchStatus};

fn distances(code: &griesmer_lab::Code) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for i in 0..code.size() {
        for j in i + 1..code.size() {
            out.insert(code.distance(i, j));
        }
    }
    out
}

#[test]
fn levenshtein_codes_are_equidistant() {
    let mut built = 0;
    for order in (4..=68).step_by(4) {
        let h = match hadamard_of_order(order) {
            Ok(h) => h,
            Err(BuildError::UnknownOrder(_)) => continue,
            Err(e) => panic!("order {order}: {e}"),
        };
        assert_eq!(h.order(), order);
        let code = levenshtein_code(&h, order).unwrap();
        assert_eq!(code.n(), order - 1);
        assert_eq!(distances(&code), BTreeSet::from([order / 2]), "order {order}");
        built += 1;
    }
    assert!(built >= 16, "only {built} orders built");
}

#[test]
fn hadamard_text_round_trip() {
    let h = hadamard_of_order(12).unwrap();
    assert_eq!(HadamardMatrix::parse(&h.to_text()).unwrap(), h);
    assert!(HadamardMatrix::parse("1 1\n1 1\n").is_err());
}

#[test]
fn recipes_prefer_simpler_families() {
    assert_eq!(hadamard_recipe(64).unwrap().family, Family::Sylvester);
    assert_eq!(hadamard_recipe(20).unwrap().family, Family::Paley1);
    assert_eq!(hadamard_recipe(68).unwrap().parameters, vec![67]);
}

#[test]
fn simplex_codes_are_equidistant() {
    for k in 1..=10u32 {
        let code = simplex(k).unwrap().span();
        assert_eq!((code.n(), code.size()), ((1 << k) - 1, 1 << k));
        let d = 1usize << (k - 1);
        if k > 1 {
            assert_eq!(code.is_equidistant().unwrap(), Some(d), "k={k}");
        }
        assert!(code.is_linear());
    }
    let seq = simplex_sequence(3, 4).unwrap();
    assert_eq!((seq.n(), seq.min_distance().unwrap()), (28, 16));
}

#[test]
fn counterexample_punctures_to_its_parts() {
    for k in 2..=7u32 {
        let s = 1usize << k;
        let ck = counterexample_ck(k).unwrap();
        let simplex_part = ck.puncture(&(s - 1..ck.n()).collect::<Vec<_>>()).unwrap();
        assert!(simplex_part.same_words(&simplex(k).unwrap().span()), "k={k}");
        let d_part = ck.puncture(&(0..s - 1).collect::<Vec<_>>()).unwrap();
        let dk = levenshtein_code(&hadamard_of_order(s + 4).unwrap(), s).unwrap();
        assert!(d_part.same_words(&dk), "k={k}");
        assert_eq!(distances(&ck), BTreeSet::from([s + 2]));
    }
}

#[test]
fn hint_search_settles_c4() {
    let c4 = counterexample_ck(4).unwrap();
    let r = min_length_systematic(2, 4, 18, 34, Some(&c4), &SearchOptions::default()).unwrap();
    assert_eq!(r.status, SearchStatus::Found);
    assert_eq!(r.value, Some(34));
    assert!(r.witness.unwrap().same_words(&c4));
}

#[test]
fn small_max_sizes() {
    let opts = SearchOptions::default();
    // sizes of the best binary codes, from the standard table
    for (n, d, a) in [(5, 3, 4), (6, 3, 8), (7, 3, 16), (8, 4, 16), (8, 5, 4)] {
        let r = max_code_size(2, n, d, None, &opts).unwrap();
        assert_eq!((r.status, r.value), (SearchStatus::Found, Some(a)), "A({n},{d})");
    }
    // optimality here is out of reach, but the goal mode finds the codes
    for (n, d, a) in [(8, 3, 20), (9, 4, 20)] {
        let r = max_code_size(2, n, d, Some(a), &opts).unwrap();
        assert_eq!(r.status, SearchStatus::Found, "A({n},{d})");
        let w = r.witness.unwrap();
        assert!(w.size() >= a && w.min_distance().unwrap() >= d);
    }
    let r = max_code_size(3, 4, 3, None, &opts).unwrap();
    assert_eq!(r.value, Some(9));
}

#[test]
fn length_searches_agree_with_closed_forms() {
    let opts = SearchOptions::default();
    assert!(verify_n8(6, &opts).unwrap().iter().all(|c| c.pass));
    assert!(verify_n4(8, &opts).unwrap().iter().all(|c| c.pass));
    let r = min_length_exhaustive(3, 9, 3, 10, &opts).unwrap();
    assert_eq!(r.value, Some(4));
}

#[test]
fn sequential_and_parallel_agree() {
    for exec in [Execution::Sequential, Execution::Parallel] {
        let opts = SearchOptions { execution: exec, ..SearchOptions::default() };
        let r = min_length_exhaustive(2, 8, 5, 12, &opts).unwrap();
        assert_eq!(r.value, Some(10));
        let c = classify_optimal_four(5, exec).unwrap();
        assert!(c.all_linear);
    }
}

#[test]
fn tiny_budget_is_reported() {
    let opts = SearchOptions { budget: Budget { node_limit: 1, ..Budget::default() }, ..SearchOptions::default() };
    let r = max_code_size(2, 9, 4, None, &opts).unwrap();
    assert_eq!(r.status, SearchStatus::BudgetExceeded);
}

#[test]
fn ternary_family_is_confirmed() {
    let r = verify_griesmer_family(3, 4, 8, &SearchOptions::default()).unwrap();
    assert!(r.all_confirmed(), "{r:?}");
}

#[test]
fn reports_round_trip_through_json() {
    let opts = SearchOptions::default();
    let r = min_length_exhaustive(2, 4, 3, 8, &opts).unwrap();
    let back: SearchResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back.status, r.status);
    assert!(back.witness.unwrap().same_words(r.witness.as_ref().unwrap()));

    let f = verify_griesmer_family(2, 3, 8, &opts).unwrap();
    let back: FamilyReport = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(back, f);

    let c = classify_optimal_four(3, Execution::Sequential).unwrap();
    let back: ClassificationReport = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!((back.n, back.count_up_to_equivalence, back.all_linear), (c.n, c.count_up_to_equivalence, c.all_linear));
}
