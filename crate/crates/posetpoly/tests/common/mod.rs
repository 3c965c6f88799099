//! Shared corpus builders and independent counting oracles for the
//! integration suites.

use std::collections::BTreeMap;

use posetpoly::families::{demazure_poset, gt_poset, star_poset, symplectic_poset};
use posetpoly::regularize::regularize;
use posetpoly::{MarkedPoset, PosetData};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random marked poset on a handful of elements: a random DAG on an index
/// order, transitively reduced, with all extremals plus a few extras marked
/// by a random monotone potential.
pub fn random_poset_data(rng: &mut ChaCha8Rng) -> PosetData {
    let n = rng.gen_range(3..=10);
    let density = rng.gen_range(0.15..0.50);
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                adj[i][j] = true;
            }
        }
    }
    // transitive closure, then drop implied edges
    let mut less = adj.clone();
    for k in 0..n {
        for i in 0..n {
            if less[i][k] {
                for j in 0..n {
                    if less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if less[i][j] && !(0..n).any(|z| less[i][z] && less[z][j]) {
                covers.push((i, j));
            }
        }
    }
    // monotone potential along the index order
    let mut potential = vec![0i64; n];
    for j in 0..n {
        let base = covers
            .iter()
            .filter(|&&(_, b)| b == j)
            .map(|&(a, _)| potential[a])
            .max()
            .unwrap_or_else(|| rng.gen_range(0..=1));
        potential[j] = base + rng.gen_range(0..=2);
    }
    let mut marked = vec![false; n];
    for i in 0..n {
        let has_lower = covers.iter().any(|&(_, b)| b == i);
        let has_upper = covers.iter().any(|&(a, _)| a == i);
        marked[i] = !has_lower || !has_upper || rng.gen_bool(0.25);
    }
    let name = |i: usize| format!("e{i}");
    let mut marking = BTreeMap::new();
    for i in 0..n {
        if marked[i] {
            marking.insert(name(i), potential[i]);
        }
    }
    PosetData {
        elements: (0..n).map(name).collect(),
        covers: covers.into_iter().map(|(a, b)| (name(a), name(b))).collect(),
        marking,
    }
}

pub fn random_marked_poset(rng: &mut ChaCha8Rng) -> MarkedPoset {
    loop {
        let data = random_poset_data(rng);
        if let Ok(p) = MarkedPoset::new(data) {
            return p;
        }
    }
}

/// Family instances at small rank used throughout the suites.
pub fn family_instances() -> Vec<MarkedPoset> {
    let mut out = Vec::new();
    for lambda in [
        vec![1, 0],
        vec![2, 0],
        vec![3, 0],
        vec![1, 1, 0],
        vec![2, 1, 0],
        vec![2, 2, 0],
        vec![3, 1, 0],
        vec![1, 0, 0],
        vec![2, 1, 1, 0],
        vec![3, 2, 1, 0],
        vec![1, 1, 0, 0],
        vec![2, 2, 1, 0],
    ] {
        out.push(gt_poset(&lambda).unwrap());
    }
    for lambda in [vec![1, 0], vec![1, 1], vec![2, 1], vec![2, 0], vec![3, 2]] {
        out.push(symplectic_poset(&lambda).unwrap());
    }
    for (lengths, m) in [
        (vec![1], 1),
        (vec![2, 1], 2),
        (vec![2, 2], 1),
        (vec![3, 2, 1], 2),
        (vec![2, 2, 1], 3),
    ] {
        out.push(demazure_poset(&lengths, m).unwrap());
    }
    for marks in [[0, 1, 2, 3], [0, 2, 3, 5], [1, 2, 3, 4], [0, 0, 1, 1], [0, 1, 1, 2]] {
        out.push(star_poset(marks).unwrap());
    }
    out.extend(framed_star_posets());
    out
}

/// Star relations that survive regularization: an unmarked center whose feet
/// are unmarked (behind a marked frame) or partly marked.
pub fn framed_star_posets() -> Vec<MarkedPoset> {
    let mut out = Vec::new();
    // fully unmarked star behind a frame of four distinct marks
    for marks in [[0i64, 1, 2, 3], [0, 2, 5, 7], [1, 3, 4, 6]] {
        let [a1, a2, b1, b2] = marks;
        out.push(
            MarkedPoset::new(PosetData {
                elements: ["a1", "a2", "l1", "l2", "c", "u1", "u2", "b1", "b2"]
                    .map(String::from)
                    .to_vec(),
                covers: [
                    ("a1", "l1"),
                    ("a2", "l2"),
                    ("l1", "c"),
                    ("l2", "c"),
                    ("c", "u1"),
                    ("c", "u2"),
                    ("u1", "b1"),
                    ("u2", "b2"),
                ]
                .map(|(x, y)| (String::from(x), String::from(y)))
                .to_vec(),
                marking: [("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)]
                    .map(|(x, v)| (String::from(x), v))
                    .into_iter()
                    .collect(),
            })
            .unwrap(),
        );
    }
    // star whose lower feet are one marked and one unmarked element
    for (a1_mark, spread) in [(5i64, 4i64), (3, 2), (2, 6)] {
        out.push(
            MarkedPoset::new(PosetData {
                elements: ["a2", "u", "a1", "x", "y3", "y4", "b1", "b2"]
                    .map(String::from)
                    .to_vec(),
                covers: [
                    ("a2", "u"),
                    ("u", "x"),
                    ("a1", "x"),
                    ("x", "y3"),
                    ("x", "y4"),
                    ("y3", "b1"),
                    ("y4", "b2"),
                ]
                .map(|(x, y)| (String::from(x), String::from(y)))
                .to_vec(),
                marking: [
                    ("a2", 0),
                    ("a1", a1_mark),
                    ("b1", a1_mark + spread),
                    ("b2", a1_mark + spread - 1),
                ]
                .map(|(x, v)| (String::from(x), v))
                .into_iter()
                .collect(),
            })
            .unwrap(),
        );
    }
    out
}

/// Regularized corpus for the facet-count and equivalence sweeps: random
/// posets plus the families, regularized, restricted to at most
/// `max_unmarked` coordinates. Deterministic across runs.
pub fn regular_corpus(minimum: usize, max_unmarked: usize) -> Vec<MarkedPoset> {
    let mut out = Vec::new();
    for p in family_instances() {
        let regular = regularize(&p).unwrap().poset;
        if regular.unmarked_elements().len() <= max_unmarked {
            out.push(regular);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x706f7365);
    while out.len() < minimum {
        let p = random_marked_poset(&mut rng);
        let regular = regularize(&p).unwrap().poset;
        if !regular.unmarked_elements().is_empty()
            && regular.unmarked_elements().len() <= max_unmarked
        {
            out.push(regular);
        }
    }
    out
}

/// Independent oracle: counts triangular interlacing patterns with the given
/// top row by direct recursive enumeration.
pub fn count_gt_patterns(top: &[i64]) -> u64 {
    fn count(row: &[i64]) -> u64 {
        if row.len() == 1 {
            return 1;
        }
        let mut total = 0;
        let mut next = Vec::new();
        enumerate_next(row, 0, &mut next, &mut total);
        total
    }
    fn enumerate_next(row: &[i64], pos: usize, next: &mut Vec<i64>, total: &mut u64) {
        if pos + 1 == row.len() {
            *total += count(next);
            return;
        }
        for v in row[pos + 1]..=row[pos] {
            next.push(v);
            enumerate_next(row, pos + 1, next, total);
            next.pop();
        }
    }
    count(top)
}
