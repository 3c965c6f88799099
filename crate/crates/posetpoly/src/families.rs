//! Generators for the classical marked-poset families.
//!
//! Element names are canonical (`mark_j`, `x_i_j`, `zero_i`, `top`) so
//! expected outputs in tests and files stay stable. For shapes beyond the
//! built-in adjacency conventions, build a [`MarkedPoset`] from explicit
//! covers instead.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;

use crate::error::Error;
use crate::poset::{MarkedPoset, PosetData};

fn check_weakly_decreasing(values: &[i64], what: &str) -> Result<(), Error> {
    if values.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!("{what} must be weakly decreasing")));
    }
    if values.last().is_some_and(|&v| v < 0) {
        return Err(Error::InvalidParameter(format!("{what} must be nonnegative")));
    }
    Ok(())
}

/// The triangular Gelfand-Tsetlin marked poset for a weakly decreasing
/// weight `(lambda_1, ..., lambda_n, lambda_{n+1} = 0)`.
///
/// Marks are `mark_j` carrying `lambda_j`; the interior grid `x_i_j`
/// (row `i` in `1..=n`, position `j` in `1..=n+1-i`) interlaces row `i-1`,
/// with `x_0_j = mark_j`. The order polytope's lattice points are the
/// Gelfand-Tsetlin patterns with top row `lambda`.
pub fn gt_poset(lambda: &[i64]) -> Result<MarkedPoset, Error> {
    if lambda.len() < 2 {
        return Err(Error::InvalidParameter("weight needs at least two entries".into()));
    }
    check_weakly_decreasing(lambda, "weight")?;
    if *lambda.last().unwrap() != 0 {
        return Err(Error::InvalidParameter("last weight entry must be zero".into()));
    }
    let n = lambda.len() - 1;
    let name = |i: usize, j: usize| -> String {
        if i == 0 {
            format!("mark_{j}")
        } else {
            format!("x_{i}_{j}")
        }
    };
    let mut elements = Vec::new();
    let mut marking = BTreeMap::new();
    for j in 1..=n + 1 {
        elements.push(name(0, j));
        marking.insert(name(0, j), lambda[j - 1]);
    }
    let mut covers = Vec::new();
    for i in 1..=n {
        for j in 1..=n + 1 - i {
            elements.push(name(i, j));
            // row i interlaces row i-1: below is the (j+1)-st, above the j-th
            covers.push((name(i - 1, j + 1), name(i, j)));
            covers.push((name(i, j), name(i - 1, j)));
        }
    }
    MarkedPoset::new(PosetData { elements, covers, marking })
}

/// Converts gap coordinates `m_i = lambda_i - lambda_{i+1}` into the weight
/// `(lambda_1, ..., lambda_n, 0)` by partial sums.
pub fn lambda_from_gaps(gaps: &[i64]) -> Vec<i64> {
    let n = gaps.len();
    let mut lambda = vec![0i64; n + 1];
    for j in (0..n).rev() {
        lambda[j] = lambda[j + 1] + gaps[j];
    }
    lambda
}

/// Isomorphism criterion for the two toric degenerations attached to the
/// Gelfand-Tsetlin weight with gaps `m`: true iff the gaps are supported on
/// `{m_1, m_2}`, on `{m_{n-1}, m_n}`, or on `{m_1, m_n}`.
pub fn sl_iso_condition(m: &[i64]) -> bool {
    let n = m.len();
    let zero_in = |range: core::ops::Range<usize>| m[range].iter().all(|&v| v == 0);
    // gaps beyond the second vanish
    let head = n <= 2 || zero_in(2..n);
    // gaps before the last two vanish
    let tail = n <= 2 || zero_in(0..n - 2);
    // only the first and last gaps survive: the poset is linear
    let ends = n <= 2 || zero_in(1..n - 1);
    head || tail || ends
}

/// The trapezoidal symplectic marked poset for a weakly decreasing weight
/// `(lambda_1, ..., lambda_n)`.
///
/// The left boundary carries `zero_0` and `mark_n, ..., mark_1` bottom-up;
/// columns `x_k_r` (position `r` from the bottom) have heights
/// `n, n-1, n-1, ..., 1, 1` for `k = 1, ..., 2n-1`, and each odd column's
/// bottom cell sits above the interior zero mark `zero_i` shared with the
/// next odd column.
pub fn symplectic_poset(lambda: &[i64]) -> Result<MarkedPoset, Error> {
    if lambda.is_empty() {
        return Err(Error::InvalidParameter("weight must be nonempty".into()));
    }
    check_weakly_decreasing(lambda, "weight")?;
    let n = lambda.len();
    // left boundary mark at height t: zero_0 at the bottom, then
    // mark_n, ..., mark_1 with values lambda_n <= ... <= lambda_1
    let left = |t: usize| -> String {
        if t == 0 {
            "zero_0".into()
        } else {
            format!("mark_{}", n + 1 - t)
        }
    };
    let height = |k: usize| -> usize {
        if k % 2 == 1 {
            n - (k - 1) / 2
        } else {
            n - k / 2
        }
    };
    let cell = |k: usize, r: usize| format!("x_{k}_{r}");

    let mut elements = Vec::new();
    let mut marking = BTreeMap::new();
    elements.push(left(0));
    marking.insert(left(0), 0);
    for t in 1..=n {
        elements.push(left(t));
        marking.insert(left(t), lambda[n - t]);
    }
    for i in 1..=n {
        let z = format!("zero_{i}");
        elements.push(z.clone());
        marking.insert(z, 0);
    }
    let mut covers = Vec::new();
    for k in 1..=2 * n - 1 {
        for r in 1..=height(k) {
            elements.push(cell(k, r));
        }
    }
    // column 1 interlaces the left boundary
    for r in 1..=n {
        covers.push((left(r - 1), cell(1, r)));
        covers.push((cell(1, r), left(r)));
    }
    for i in 1..=n - 1 {
        // even column 2i interlaces column 2i-1
        let k = 2 * i;
        for r in 1..=height(k) {
            covers.push((cell(k - 1, r), cell(k, r)));
            covers.push((cell(k, r), cell(k - 1, r + 1)));
        }
        // odd column 2i+1 shifts down one step against column 2i
        let k = 2 * i + 1;
        for r in 1..=height(k) {
            if r >= 2 {
                covers.push((cell(k - 1, r - 1), cell(k, r)));
            }
            covers.push((cell(k, r), cell(k - 1, r)));
        }
        covers.push((format!("zero_{i}"), cell(k, 1)));
    }
    // every odd column's bottom cell also caps an interior zero mark
    for i in 1..=n {
        covers.push((format!("zero_{i}"), cell(2 * i - 1, 1)));
    }
    MarkedPoset::new(PosetData { elements, covers, marking })
}

/// The Demazure marked poset for weakly decreasing diagonal lengths and a
/// top mark `m`.
///
/// Diagonals are top-aligned: cell `x_d_k` is the `k`-th from the top of
/// diagonal `d`. Covers run within each diagonal and from each diagonal to
/// the previous one at equal depth; `top` (marked `m`) caps the first
/// diagonal and a `zero_d` mark sits under each minimal cell.
pub fn demazure_poset(lengths: &[usize], m: i64) -> Result<MarkedPoset, Error> {
    if lengths.is_empty() {
        return Err(Error::InvalidParameter("lengths must be nonempty".into()));
    }
    if lengths.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter("lengths must be weakly decreasing".into()));
    }
    if lengths.iter().any(|&l| l == 0) {
        return Err(Error::InvalidParameter("lengths must be positive".into()));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("top mark must be positive".into()));
    }
    let p = lengths.len();
    let cell = |d: usize, k: usize| format!("x_{d}_{k}");
    let mut elements = vec![String::from("top")];
    let mut marking = BTreeMap::new();
    marking.insert(String::from("top"), m);
    let mut covers = vec![(cell(1, 1), String::from("top"))];
    for d in 1..=p {
        for k in 1..=lengths[d - 1] {
            elements.push(cell(d, k));
            if k > 1 {
                covers.push((cell(d, k), cell(d, k - 1)));
            }
        }
        if d > 1 {
            for k in 1..=lengths[d - 1] {
                covers.push((cell(d, k), cell(d - 1, k)));
            }
        }
        let minimal = d == p || lengths[d] < lengths[d - 1];
        if minimal {
            let z = format!("zero_{d}");
            elements.push(z.clone());
            marking.insert(z.clone(), 0);
            covers.push((z, cell(d, lengths[d - 1])));
        }
    }
    MarkedPoset::new(PosetData { elements, covers, marking })
}

/// The five-element star poset `a1, a2 < x < b1, b2` with the given marks.
pub fn star_poset(marks: [i64; 4]) -> Result<MarkedPoset, Error> {
    let [a1, a2, b1, b2] = marks;
    MarkedPoset::new(PosetData {
        elements: vec!["a1".into(), "a2".into(), "x".into(), "b1".into(), "b2".into()],
        covers: vec![
            ("a1".into(), "x".into()),
            ("a2".into(), "x".into()),
            ("x".into(), "b1".into()),
            ("x".into(), "b2".into()),
        ],
        marking: [
            (String::from("a1"), a1),
            (String::from("a2"), a2),
            (String::from("b1"), b1),
            (String::from("b2"), b2),
        ]
        .into_iter()
        .collect(),
    })
}
