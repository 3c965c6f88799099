//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the instance counts it covered. Run with `--nocapture` to see them.

mod common;

use std::time::Instant;

use common::{count_gt_patterns, regular_corpus};
use posetpoly::decompose::{
    brute_force_split, decompose, is_c_indecomposable, omega, verify_minkowski,
};
use posetpoly::equivalence::{build_unimodular_map, verify_equivalence};
use posetpoly::families::{gt_poset, lambda_from_gaps, sl_iso_condition, symplectic_poset};
use posetpoly::lattice::{dilate_counts, enumerate_chain_points, enumerate_order_points};
use posetpoly::oracle::{f_vector, irredundant_facets};
use posetpoly::polytope::{
    chain_hrep, facet_count_chain, facet_count_order, has_star_relation, order_hrep,
};
use posetpoly::regularize::regularize;
use posetpoly::Marking;
use rand::SeedableRng;

const CORPUS_SIZE: usize = 220;
const CORPUS_MAX_DIM: usize = 6;

#[test]
fn criterion_1_facet_formulas_match_oracle() {
    let start = Instant::now();
    let corpus = regular_corpus(CORPUS_SIZE, CORPUS_MAX_DIM);
    assert!(corpus.len() >= 200);
    for p in &corpus {
        let order_formula = facet_count_order(p).unwrap();
        let order_oracle = irredundant_facets(&order_hrep(p)).unwrap().len() as u64;
        assert_eq!(order_formula, order_oracle, "order facets on {:?}", p.data());
        let chain_formula = facet_count_chain(p).unwrap();
        let chain_oracle = irredundant_facets(&chain_hrep(p).unwrap()).unwrap().len() as u64;
        assert_eq!(chain_formula, chain_oracle, "chain facets on {:?}", p.data());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "criterion 1 exceeded 5 minutes: {elapsed:?}");
    println!(
        "criterion 1 (facet formulas vs oracle): PASS on {} regular posets in {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn criterion_2_order_facets_at_most_chain_facets_iff_star() {
    let corpus = regular_corpus(CORPUS_SIZE, CORPUS_MAX_DIM);
    let mut with_star = 0;
    for p in &corpus {
        let order = facet_count_order(p).unwrap();
        let chain = facet_count_chain(p).unwrap();
        assert!(order <= chain, "order > chain on {:?}", p.data());
        let star = has_star_relation(p);
        assert_eq!(order == chain, star.is_none(), "star mismatch on {:?}", p.data());
        if star.is_some() {
            with_star += 1;
        }
    }
    println!(
        "criterion 2 (order <= chain, equality iff star-free): PASS on {} posets ({} with a star)",
        corpus.len(),
        with_star
    );
}

#[test]
fn criterion_3_gelfand_tsetlin_facet_counts() {
    // order facets n(n+1) for strictly decreasing weights
    for n in 2..=5 {
        let lambda: Vec<i64> = (0..=n as i64).rev().collect();
        let p = gt_poset(&lambda).unwrap();
        assert_eq!(facet_count_order(&p).unwrap(), (n * (n + 1)) as u64);
    }
    // chain facets by the direct count; the n = 3 weight (3,2,1,0) gives 13
    let p = gt_poset(&[3, 2, 1, 0]).unwrap();
    assert_eq!(facet_count_chain(&p).unwrap(), 13);

    // The once-printed closed form n(n-1)/2 + sum i*C(n-i) does not match
    // the direct count from n = 3 on (13 vs 10 at n = 3); the variant with
    // n(n+1)/2 does on every rank checked here. Recorded, not asserted.
    fn catalan(k: usize) -> u64 {
        (0..k).fold(1u64, |c, i| c * 2 * (2 * i as u64 + 1) / (i as u64 + 2))
    }
    for n in 2..=5usize {
        let lambda: Vec<i64> = (0..=n as i64).rev().collect();
        let p = gt_poset(&lambda).unwrap();
        let direct = facet_count_chain(&p).unwrap();
        let catalan_sum: u64 = (1..=n).map(|i| i as u64 * catalan(n - i)).sum();
        let printed = (n * (n - 1) / 2) as u64 + catalan_sum;
        let corrected = (n * (n + 1) / 2) as u64 + catalan_sum;
        assert_eq!(direct, corrected, "corrected closed form at n = {n}");
        if n >= 3 {
            assert_ne!(direct, printed, "printed closed form unexpectedly matches at n = {n}");
        }
    }
    println!("criterion 3 (Gelfand-Tsetlin facet counts, closed-form discrepancy recorded): PASS");
}

#[test]
fn criterion_4_unimodular_equivalence_iff_star_free() {
    let corpus = regular_corpus(CORPUS_SIZE, CORPUS_MAX_DIM);
    let mut star_free = 0;
    let mut starred = 0;
    let mut fvec_checked = 0;
    for p in &corpus {
        match has_star_relation(p) {
            None => {
                star_free += 1;
                let map = build_unimodular_map(p).unwrap();
                let report = verify_equivalence(p, &map).unwrap();
                assert!(report.all_passed(), "equivalence failed on {:?}: {report:?}", p.data());
                if p.unmarked_elements().len() <= 5 {
                    let fo = f_vector(&order_hrep(p)).unwrap();
                    let fc = f_vector(&chain_hrep(p).unwrap()).unwrap();
                    assert_eq!(fo, fc, "f-vectors differ on {:?}", p.data());
                    fvec_checked += 1;
                }
            }
            Some(_) => {
                starred += 1;
                let order = facet_count_order(p).unwrap();
                let chain = facet_count_chain(p).unwrap();
                assert_ne!(order, chain, "starred poset with equal counts: {:?}", p.data());
            }
        }
    }
    println!(
        "criterion 4 (unimodular equivalence iff star-free): PASS on {star_free} star-free \
         ({fvec_checked} f-vector pairs) and {starred} starred posets"
    );
}

#[test]
fn criterion_5_equal_lattice_point_counts_under_dilation() {
    let corpus = regular_corpus(CORPUS_SIZE, CORPUS_MAX_DIM);
    for p in &corpus {
        for dc in dilate_counts(p, 3).unwrap() {
            assert_eq!(dc.chain, dc.order, "dilate {} on {:?}", dc.k, p.data());
        }
    }
    println!(
        "criterion 5 (chain and order polytopes have equal point counts, dilations 1..3): \
         PASS on {} posets",
        corpus.len()
    );
}

#[test]
fn criterion_6_minkowski_peeling_and_component_splits() {
    // corpus instances with marks at most 4, padded with clamped variants
    // so the identities are exercised on at least a hundred markings
    let mut instances = Vec::new();
    for p in regular_corpus(CORPUS_SIZE, CORPUS_MAX_DIM) {
        if p.marking().values().values().all(|&v| v <= 4) {
            instances.push(p);
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51a7);
    while instances.len() < 110 {
        let p = common::random_marked_poset(&mut rng);
        let clamped = Marking::new(
            p.marking().values().iter().map(|(a, &v)| (a.clone(), v.min(4))).collect(),
        );
        instances.push(p.with_marking(&clamped).unwrap());
    }
    let mut peels = 0;
    let mut splits = 0;
    for p in &instances {
        let (p, _) = p.normalize_marking();
        let marking = p.marking();
        if marking.is_zero() {
            continue;
        }
        // peel identity
        let layer = omega(&marking);
        let rest = marking.checked_sub(&layer).unwrap();
        assert!(
            verify_minkowski(&p, &marking, &[rest, layer.clone()]).unwrap(),
            "peel failed on {:?}",
            p.data()
        );
        peels += 1;
        // component split of the 0/1 layer
        let components = p.reduced_poset(&layer).unwrap().connected_components();
        if components.len() >= 2 {
            let first = Marking::new(
                layer
                    .values()
                    .iter()
                    .map(|(a, &v)| (a.clone(), if components[0].contains(a) { v } else { 0 }))
                    .collect(),
            );
            let rest = layer.checked_sub(&first).unwrap();
            assert!(
                verify_minkowski(&p, &layer, &[first, rest]).unwrap(),
                "component split failed on {:?}",
                p.data()
            );
            splits += 1;
        }
        // the full decomposition re-assembles the point set
        let d = decompose(&p, &marking).unwrap();
        assert!(
            verify_minkowski(&p, &marking, &d.markings()).unwrap(),
            "full decomposition failed on {:?}",
            p.data()
        );
    }
    assert!(peels >= 100 && splits >= 3);
    println!(
        "criterion 6 (Minkowski peeling and component splits): PASS on {peels} peels, \
         {splits} component splits"
    );
}

#[test]
fn criterion_7_indecomposability_criterion_vs_brute_force() {
    let start = Instant::now();
    // corpus survivors within the brute-force guards, padded with dedicated
    // small instances (marks clamped to 3, at most 5 marked elements)
    let mut instances = Vec::new();
    for p in regular_corpus(CORPUS_SIZE, CORPUS_MAX_DIM) {
        let (p, _) = p.normalize_marking();
        let marking = p.marking();
        if marking.values().len() <= 5 && marking.values().values().all(|&v| v <= 3) {
            instances.push(p);
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1dec);
    while instances.len() < 120 {
        let p = common::random_marked_poset(&mut rng);
        let clamped = Marking::new(
            p.marking().values().iter().map(|(a, &v)| (a.clone(), v.min(3))).collect(),
        );
        let p = p.with_marking(&clamped).unwrap();
        let (p, _) = p.normalize_marking();
        if p.marking().values().len() <= 5 && p.unmarked_elements().len() <= 6 {
            instances.push(p);
        }
    }
    let checked = instances.len();
    for p in &instances {
        let marking = p.marking();
        let fast = is_c_indecomposable(p, &marking).unwrap().is_indecomposable();
        let slow = brute_force_split(p, &marking).unwrap().is_none();
        assert_eq!(fast, slow, "indecomposability mismatch on {:?}", p.data());
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "criterion 7 exceeded 10 minutes: {elapsed:?}");
    println!(
        "criterion 7 (two-condition test vs brute force): PASS on {checked} markings in {elapsed:?}"
    );
}

#[test]
fn criterion_8_pattern_counts_and_fundamental_decomposition() {
    for (lambda, expected) in [(vec![2, 1, 0], 8u64), (vec![3, 2, 1, 0], 64)] {
        let p = gt_poset(&lambda).unwrap();
        let order = enumerate_order_points(&p).unwrap().len() as u64;
        let chain = enumerate_chain_points(&p).unwrap().len() as u64;
        let patterns = count_gt_patterns(&lambda);
        assert_eq!(patterns, expected);
        assert_eq!(order, expected);
        assert_eq!(chain, expected);
    }

    let p = gt_poset(&[3, 2, 1, 0]).unwrap();
    let d = decompose(&p, &p.marking()).unwrap();
    let got: Vec<Vec<i64>> = d
        .markings()
        .iter()
        .map(|m| (1..=4).map(|j| m.get(&format!("mark_{j}")).unwrap()).collect())
        .collect();
    assert_eq!(got, vec![vec![1, 1, 1, 0], vec![1, 1, 0, 0], vec![1, 0, 0, 0]]);
    assert!(verify_minkowski(&p, &p.marking(), &d.markings()).unwrap());
    println!(
        "criterion 8 (pattern-count cross-checks and fundamental-weight decomposition): PASS"
    );
}

#[test]
fn criterion_9_iso_condition_sweep_and_symplectic_star_freeness() {
    // every 0/1 gap vector at ranks 3 and 4
    let mut swept = 0;
    for n in [3usize, 4] {
        for bits in 0..(1 << n) {
            let m: Vec<i64> = (0..n).map(|i| ((bits >> i) & 1) as i64).collect();
            let lambda = lambda_from_gaps(&m);
            let p = gt_poset(&lambda).unwrap();
            let regular = regularize(&p).unwrap().poset;
            let star_free = has_star_relation(&regular).is_none();
            assert_eq!(
                sl_iso_condition(&m),
                star_free,
                "iso condition mismatch at n = {n}, m = {m:?}"
            );
            swept += 1;
        }
    }
    // symplectic rank 4: star-free exactly when the third weight vanishes
    let mut sp_swept = 0;
    for l1 in 0..=2i64 {
        for l2 in 0..=l1 {
            for l3 in 0..=l2 {
                for l4 in 0..=l3 {
                    let p = symplectic_poset(&[l1, l2, l3, l4]).unwrap();
                    let regular = regularize(&p).unwrap().poset;
                    let star_free = has_star_relation(&regular).is_none();
                    assert_eq!(
                        star_free,
                        l3 == 0,
                        "symplectic star-freeness mismatch at ({l1},{l2},{l3},{l4})"
                    );
                    sp_swept += 1;
                }
            }
        }
    }
    println!(
        "criterion 9 (isomorphism-condition sweep, {swept} gap vectors; symplectic rank 4, \
         {sp_swept} weights): PASS"
    );
}
