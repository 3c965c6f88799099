//! H-representations of the marked order and marked chain polytopes, facet
//! counting for regular posets, and star-relation detection.
//!
//! Both polytopes live in the space indexed by the unmarked elements. The
//! order polytope has one inequality per cover relation; the chain polytope
//! has one nonnegativity bound per coordinate plus one inequality per
//! saturated chain between marked elements with unmarked interior. Longer or
//! non-saturated chains are implied by these and never emitted.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;
use core::fmt;

use crate::error::Error;
use crate::poset::{MarkedPoset, DEFAULT_CHAIN_CAP};
use crate::regularize::require_regular;

/// One inequality `coeffs . s <= rhs` with exact integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRow {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

/// A system of linear inequalities over the unmarked coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub coordinates: Vec<String>,
    pub rows: Vec<HRow>,
}

impl HRep {
    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn satisfied_by(&self, point: &[i64]) -> bool {
        debug_assert_eq!(point.len(), self.dim());
        self.rows.iter().all(|row| {
            let lhs: i64 = row.coeffs.iter().zip(point).map(|(c, x)| c * x).sum();
            lhs <= row.rhs
        })
    }
}

/// H-representation of the marked order polytope: for each cover, the value
/// below is at most the value above, with marked ends substituted by their
/// marks. Covers inside the marked set produce no row.
pub fn order_hrep(p: &MarkedPoset) -> HRep {
    let coordinates = p.unmarked_elements();
    let coord_of = coord_index(p);
    let d = coordinates.len();
    let mut rows = Vec::new();
    for &(lo, hi) in p.covers_idx() {
        let mut coeffs = vec![0i64; d];
        match (p.mark_idx(lo), p.mark_idx(hi)) {
            (None, None) => {
                coeffs[coord_of[&lo]] = 1;
                coeffs[coord_of[&hi]] = -1;
                rows.push(HRow { coeffs, rhs: 0 });
            }
            (Some(va), None) => {
                coeffs[coord_of[&hi]] = -1;
                rows.push(HRow { coeffs, rhs: -va });
            }
            (None, Some(vb)) => {
                coeffs[coord_of[&lo]] = 1;
                rows.push(HRow { coeffs, rhs: vb });
            }
            (Some(_), Some(_)) => {}
        }
    }
    HRep { coordinates, rows }
}

/// H-representation of the marked chain polytope: nonnegativity for every
/// coordinate, then one row per saturated chain with nonempty unmarked
/// interior between marked elements.
pub fn chain_hrep(p: &MarkedPoset) -> Result<HRep, Error> {
    chain_hrep_capped(p, DEFAULT_CHAIN_CAP)
}

pub fn chain_hrep_capped(p: &MarkedPoset, cap: usize) -> Result<HRep, Error> {
    let coordinates = p.unmarked_elements();
    let coord_of = coord_index(p);
    let d = coordinates.len();
    let mut rows = Vec::new();
    for i in 0..d {
        let mut coeffs = vec![0i64; d];
        coeffs[i] = -1;
        rows.push(HRow { coeffs, rhs: 0 });
    }
    let marked: Vec<(usize, i64)> = p.marked_indices().collect();
    for &(a, va) in &marked {
        for &(b, vb) in &marked {
            if a == b || !p.less_idx(a, b) {
                continue;
            }
            for chain in p.chains_between_idx(a, b, cap)? {
                if chain.len() <= 2 {
                    continue; // direct cover: bound is vacuous
                }
                let mut coeffs = vec![0i64; d];
                for &x in &chain[1..chain.len() - 1] {
                    coeffs[coord_of[&x]] = 1;
                }
                rows.push(HRow { coeffs, rhs: vb - va });
            }
        }
    }
    Ok(HRep { coordinates, rows })
}

fn coord_index(p: &MarkedPoset) -> BTreeMap<usize, usize> {
    p.unmarked_indices().into_iter().enumerate().map(|(pos, i)| (i, pos)).collect()
}

/// Facet count of the marked order polytope of a regular poset: the number
/// of cover relations.
pub fn facet_count_order(p: &MarkedPoset) -> Result<u64, Error> {
    require_regular(p)?;
    Ok(p.cover_count() as u64)
}

/// Facet count of the marked chain polytope of a regular poset: the number
/// of unmarked elements plus, for every marked pair, the number of saturated
/// chains with unmarked interior between them.
pub fn facet_count_chain(p: &MarkedPoset) -> Result<u64, Error> {
    require_regular(p)?;
    let marked: Vec<(usize, i64)> = p.marked_indices().collect();
    let mut total = p.unmarked_indices().len() as u64;
    for &(a, _) in &marked {
        for &(b, _) in &marked {
            if a != b && p.less_idx(a, b) {
                total = total
                    .checked_add(p.count_chains_idx(a, b)?)
                    .ok_or(Error::ResourceExceeded { what: "chain facet count", limit: u64::MAX })?;
            }
        }
    }
    Ok(total)
}

/// A five-element witness of the star relation: two incomparable elements
/// below an unmarked center and two incomparable elements above it. The
/// induced Hasse diagram on the five elements is exactly the star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWitness {
    pub center: String,
    pub lower: (String, String),
    pub upper: (String, String),
}

impl fmt::Display for StarWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, {} < {} < {}, {}",
            self.lower.0, self.lower.1, self.center, self.upper.0, self.upper.1
        )
    }
}

/// Searches for a star relation: an unmarked center with an incomparable
/// pair strictly below and an incomparable pair strictly above. Marked
/// elements may serve as feet. Returns the lexicographically first witness
/// (by center name, then foot pairs), or `None`.
///
/// Intended for regular posets, where the presence of a star is exactly what
/// separates the chain polytope's facet count from the order polytope's.
pub fn has_star_relation(p: &MarkedPoset) -> Option<StarWitness> {
    let mut names: Vec<(String, usize)> = (0..p.len())
        .map(|i| (String::from(p.name(i)), i))
        .collect();
    names.sort();
    let sorted_idx: Vec<usize> = names.iter().map(|&(_, i)| i).collect();
    for &x in &sorted_idx {
        if p.mark_idx(x).is_some() {
            continue;
        }
        let below: Vec<usize> =
            sorted_idx.iter().copied().filter(|&u| p.less_idx(u, x)).collect();
        let above: Vec<usize> =
            sorted_idx.iter().copied().filter(|&u| p.less_idx(x, u)).collect();
        let lower = first_incomparable_pair(p, &below);
        let upper = first_incomparable_pair(p, &above);
        if let (Some((l1, l2)), Some((u1, u2))) = (lower, upper) {
            return Some(StarWitness {
                center: p.name(x).into(),
                lower: (p.name(l1).into(), p.name(l2).into()),
                upper: (p.name(u1).into(), p.name(u2).into()),
            });
        }
    }
    None
}

fn first_incomparable_pair(p: &MarkedPoset, sorted: &[usize]) -> Option<(usize, usize)> {
    for (k, &u) in sorted.iter().enumerate() {
        for &v in &sorted[k + 1..] {
            if !p.less_idx(u, v) && !p.less_idx(v, u) {
                return Some((u, v));
            }
        }
    }
    None
}
