//! The explicit unimodular equivalence between the marked chain and marked
//! order polytopes of a star-free regular poset.
//!
//! Each unmarked coordinate is rewritten either downward (partial sum along
//! its unique descending saturated chain plus the mark below) or upward
//! (mark above minus the partial sum along its unique ascending chain).
//! Star-freeness guarantees one of the two directions is unique for every
//! coordinate, and the resulting integer matrix has determinant ±1.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::lattice::{enumerate_chain_points_with, enumerate_order_points_with, DEFAULT_MAX_POINTS};
use crate::linalg;
use crate::oracle::{enumerate_vertices, RationalPoint};
use crate::polytope::{chain_hrep, has_star_relation, order_hrep};
use crate::poset::MarkedPoset;
use crate::regularize::require_regular;

/// An integer affine map `s -> matrix . s + translation` on the lattice of
/// unmarked coordinates. Unimodular when `|det matrix| = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLatticeMap {
    pub coordinates: Vec<String>,
    /// Row-major square matrix over the coordinates.
    pub matrix: Vec<Vec<i64>>,
    pub translation: Vec<i64>,
}

impl AffineLatticeMap {
    pub fn dim(&self) -> usize {
        self.coordinates.len()
    }

    pub fn apply(&self, point: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .zip(&self.translation)
            .map(|(row, w)| row.iter().zip(point).map(|(c, x)| c * x).sum::<i64>() + w)
            .collect()
    }

    pub fn apply_rational(&self, point: &RationalPoint) -> RationalPoint {
        let coords = self
            .matrix
            .iter()
            .zip(&self.translation)
            .map(|(row, w)| {
                row.iter()
                    .zip(&point.coords)
                    .map(|(&c, x)| linalg::rat(c) * x)
                    .sum::<BigRational>()
                    + linalg::rat(*w)
            })
            .collect();
        RationalPoint { coords }
    }

    pub fn determinant(&self) -> BigInt {
        linalg::det_int(&self.matrix)
    }

    /// Exact inverse; exists iff the matrix is unimodular.
    pub fn inverse(&self) -> Option<AffineLatticeMap> {
        let inv = linalg::invert_unimodular(&self.matrix)?;
        let translation = inv
            .iter()
            .map(|row| -row.iter().zip(&self.translation).map(|(c, w)| c * w).sum::<i64>())
            .collect();
        Some(AffineLatticeMap { coordinates: self.coordinates.clone(), matrix: inv, translation })
    }
}

/// All maximal ascending saturated chains from `x` through unmarked
/// elements, each returned as (interior including x, terminal marked
/// element).
fn chains_up(p: &MarkedPoset, x: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut path = vec![x];
    fn rec(p: &MarkedPoset, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        let v = *path.last().unwrap();
        for &w in p.upper_covers(v) {
            if p.mark_idx(w).is_some() {
                out.push((path.clone(), w));
            } else {
                path.push(w);
                rec(p, path, out);
                path.pop();
            }
        }
    }
    rec(p, &mut path, &mut out);
    out
}

fn chains_down(p: &MarkedPoset, x: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut path = vec![x];
    fn rec(p: &MarkedPoset, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
        let v = *path.last().unwrap();
        for &w in p.lower_covers(v) {
            if p.mark_idx(w).is_some() {
                out.push((path.clone(), w));
            } else {
                path.push(w);
                rec(p, path, out);
                path.pop();
            }
        }
    }
    rec(p, &mut path, &mut out);
    out
}

/// Builds the unimodular map carrying the chain polytope onto the order
/// polytope of a star-free regular poset. Case order per coordinate:
/// maximal-not-minimal among the unmarked, minimal, unique ascending chain,
/// unique descending chain.
pub fn build_unimodular_map(p: &MarkedPoset) -> Result<AffineLatticeMap, Error> {
    require_regular(p)?;
    if let Some(w) = has_star_relation(p) {
        return Err(Error::StarPresent { center: w.center });
    }
    let coordinates = p.unmarked_elements();
    let coord_indices = p.unmarked_indices();
    let d = coordinates.len();
    let col_of = |i: usize| coord_indices.iter().position(|&j| j == i).unwrap();

    let mut matrix = vec![vec![0i64; d]; d];
    let mut translation = vec![0i64; d];
    for (row, &x) in coord_indices.iter().enumerate() {
        let has_up = p.upper_covers(x).iter().any(|&w| p.mark_idx(w).is_none());
        let has_down = p.lower_covers(x).iter().any(|&w| p.mark_idx(w).is_none());
        let up = chains_up(p, x);
        let down = chains_down(p, x);
        let descending = if !has_up && has_down {
            debug_assert_eq!(up.len(), 1);
            false
        } else if !has_down {
            debug_assert_eq!(down.len(), 1);
            true
        } else if up.len() == 1 {
            false
        } else if down.len() == 1 {
            true
        } else {
            // two ascending and two descending chains would be a star
            return Err(Error::StarPresent { center: String::from(p.name(x)) });
        };
        if descending {
            let (interior, a) = &down[0];
            for &y in interior {
                matrix[row][col_of(y)] = 1;
            }
            translation[row] = p.mark_idx(*a).unwrap();
        } else {
            let (interior, b) = &up[0];
            for &y in interior {
                matrix[row][col_of(y)] = -1;
            }
            translation[row] = p.mark_idx(*b).unwrap();
        }
    }
    let map = AffineLatticeMap { coordinates, matrix, translation };
    debug_assert!(map.determinant().abs() == BigInt::one());
    Ok(map)
}

/// Result of checking a candidate equivalence map against a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub determinant: BigInt,
    pub determinant_unimodular: bool,
    /// For each dilation factor checked: did the image of the chain-polytope
    /// lattice points equal the order-polytope lattice points?
    pub lattice_images_match: Vec<(i64, bool)>,
    /// Do the mapped chain-polytope vertices equal the order-polytope
    /// vertices (exact rational comparison)?
    pub vertex_images_match: bool,
    /// Does the inverse map compose to the identity on the lattice?
    pub round_trip_identity: bool,
}

impl EquivalenceReport {
    pub fn all_passed(&self) -> bool {
        self.determinant_unimodular
            && self.vertex_images_match
            && self.round_trip_identity
            && self.lattice_images_match.iter().all(|&(_, ok)| ok)
    }
}

/// Verifies a map against the poset: determinant, lattice-point images for
/// dilations 1 and 2, vertex images against the oracle, and the inverse
/// round trip. The translation scales with the dilation, matching the
/// mark-difference structure of the map.
pub fn verify_equivalence(
    p: &MarkedPoset,
    map: &AffineLatticeMap,
) -> Result<EquivalenceReport, Error> {
    let determinant = map.determinant();
    let determinant_unimodular = determinant.abs() == BigInt::one();

    let base = p.marking();
    let mut lattice_images_match = Vec::new();
    for k in 1..=2 {
        let scaled = base.scaled(k);
        let map_k = AffineLatticeMap {
            coordinates: map.coordinates.clone(),
            matrix: map.matrix.clone(),
            translation: map.translation.iter().map(|w| w * k).collect(),
        };
        let chain = enumerate_chain_points_with(p, &scaled, DEFAULT_MAX_POINTS)?;
        let order = enumerate_order_points_with(p, &scaled, DEFAULT_MAX_POINTS)?;
        let image = chain.map(|pt| map_k.apply(pt));
        lattice_images_match.push((k, image == order));
    }

    let chain_vertices = enumerate_vertices(&chain_hrep(p)?)?;
    let order_vertices = enumerate_vertices(&order_hrep(p))?;
    let mut images: Vec<Vec<BigRational>> =
        chain_vertices.iter().map(|v| map.apply_rational(v).coords).collect();
    images.sort();
    let targets: Vec<Vec<BigRational>> =
        order_vertices.iter().map(|v| v.coords.clone()).collect();
    let vertex_images_match = images == targets;

    let round_trip_identity = match map.inverse() {
        None => false,
        Some(inv) => {
            let d = map.dim();
            let mut ok = true;
            for col in 0..d {
                let mut e = vec![0i64; d];
                e[col] = 1;
                let there = map.apply(&e);
                let back = inv.apply(&there);
                ok &= back == e;
            }
            let zero = vec![0i64; d];
            ok && inv.apply(&map.apply(&zero)) == zero
        }
    };

    Ok(EquivalenceReport {
        determinant,
        determinant_unimodular,
        lattice_images_match,
        vertex_images_match,
        round_trip_identity,
    })
}
