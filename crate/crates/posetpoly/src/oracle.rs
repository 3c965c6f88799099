//! Exact polyhedral ground truth at desk scale.
//!
//! Vertices are enumerated by solving every d-subset of inequality rows at
//! equality with exact arithmetic and keeping the feasible solutions; facet
//! irredundancy and f-vectors follow from vertex-row tightness. This is slow
//! and trustworthy by design: it exists to check the combinatorial formulas,
//! not to scale. Hard resource guards reject inputs beyond desk size; there
//! is never partial output.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use alloc::vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Error;
use crate::linalg;
use crate::polytope::HRep;

/// Dimension guard for vertex enumeration.
pub const MAX_VERTEX_DIM: usize = 8;
/// Row-count guard for vertex enumeration.
pub const MAX_VERTEX_ROWS: usize = 64;
/// Ambient dimension guard for f-vector computation.
pub const MAX_FVECTOR_DIM: usize = 6;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: Vec<BigRational>,
}

impl RationalPoint {
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn cmp_points(a: &[BigRational], b: &[BigRational]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

fn guard(h: &HRep) -> Result<(), Error> {
    if h.dim() > MAX_VERTEX_DIM {
        return Err(Error::ResourceExceeded {
            what: "oracle dimension",
            limit: MAX_VERTEX_DIM as u64,
        });
    }
    if h.rows.len() > MAX_VERTEX_ROWS {
        return Err(Error::ResourceExceeded { what: "oracle rows", limit: MAX_VERTEX_ROWS as u64 });
    }
    Ok(())
}

/// Iterates all k-subsets of 0..n in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<(), Error>) -> Result<(), Error> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Errors with [`Error::Unbounded`] when the recession cone is nontrivial.
///
/// The cone `{r : A r <= 0}` is nontrivial iff either the rows do not span
/// (the kernel gives a free line) or some extreme-ray candidate from a
/// (d-1)-subset of rows satisfies every inequality.
fn check_bounded(h: &HRep) -> Result<(), Error> {
    let d = h.dim();
    if d == 0 {
        return Ok(());
    }
    let rows_rat: Vec<Vec<BigRational>> = h
        .rows
        .iter()
        .map(|r| r.coeffs.iter().map(|&c| linalg::rat(c)).collect())
        .collect();
    if linalg::rank(&rows_rat) < d {
        return Err(Error::Unbounded);
    }
    let m = h.rows.len();
    for_each_subset(m, d - 1, |subset| {
        // candidate ray = signed maximal minors of the (d-1) x d submatrix
        let mut ray = vec![0i128; d];
        let mut nonzero = false;
        for j in 0..d {
            let minor: Vec<Vec<i128>> = subset
                .iter()
                .map(|&r| {
                    h.rows[r]
                        .coeffs
                        .iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v as i128)
                        .collect()
                })
                .collect();
            let det = linalg::det_bareiss_i128(&minor).ok_or(Error::ResourceExceeded {
                what: "oracle coefficient magnitude",
                limit: i64::MAX as u64,
            })?;
            ray[j] = if j % 2 == 0 { det } else { -det };
            nonzero |= det != 0;
        }
        if !nonzero {
            return Ok(());
        }
        let mut all_nonpos = true;
        let mut all_nonneg = true;
        for row in &h.rows {
            let dot: i128 = row.coeffs.iter().zip(&ray).map(|(&c, &r)| c as i128 * r).sum();
            all_nonpos &= dot <= 0;
            all_nonneg &= dot >= 0;
        }
        if all_nonpos || all_nonneg {
            return Err(Error::Unbounded);
        }
        Ok(())
    })
}

/// All vertices of a bounded H-representation, deduplicated and sorted
/// lexicographically.
pub fn enumerate_vertices(h: &HRep) -> Result<Vec<RationalPoint>, Error> {
    guard(h)?;
    let d = h.dim();
    if d == 0 {
        let feasible = h.rows.iter().all(|r| 0 <= r.rhs);
        return Ok(if feasible { vec![RationalPoint { coords: Vec::new() }] } else { Vec::new() });
    }
    check_bounded(h)?;
    let m = h.rows.len();
    // normalized (numerator, denominator) coordinates, denominator > 0
    let mut seen: BTreeSet<Vec<(i128, i128)>> = BTreeSet::new();
    for_each_subset(m, d, |subset| {
        let mat: Vec<Vec<i128>> = subset
            .iter()
            .map(|&r| h.rows[r].coeffs.iter().map(|&c| c as i128).collect())
            .collect();
        let overflow =
            Error::ResourceExceeded { what: "oracle coefficient magnitude", limit: i64::MAX as u64 };
        let det = linalg::det_bareiss_i128(&mat).ok_or(overflow.clone())?;
        if det == 0 {
            return Ok(());
        }
        // Cramer: x_j = det(mat with column j replaced by rhs) / det
        let mut nums = vec![0i128; d];
        for j in 0..d {
            let mut mj = mat.clone();
            for (row, &r) in mj.iter_mut().zip(subset) {
                row[j] = h.rows[r].rhs as i128;
            }
            nums[j] = linalg::det_bareiss_i128(&mj).ok_or(overflow.clone())?;
        }
        // feasibility: for every row, sum(c_j * x_j) <= rhs
        for row in &h.rows {
            let mut lhs: i128 = 0;
            for (c, n) in row.coeffs.iter().zip(&nums) {
                lhs = lhs.checked_add((*c as i128).checked_mul(*n).ok_or(overflow.clone())?)
                    .ok_or(overflow.clone())?;
            }
            let rhs = (row.rhs as i128).checked_mul(det).ok_or(overflow.clone())?;
            let ok = if det > 0 { lhs <= rhs } else { lhs >= rhs };
            if !ok {
                return Ok(());
            }
        }
        let point: Vec<(i128, i128)> = nums.iter().map(|&n| reduce(n, det)).collect();
        seen.insert(point);
        Ok(())
    })?;
    let mut vertices: Vec<RationalPoint> = seen
        .into_iter()
        .map(|p| RationalPoint {
            coords: p
                .into_iter()
                .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        })
        .collect();
    vertices.sort_by(|a, b| cmp_points(&a.coords, &b.coords));
    Ok(vertices)
}

fn reduce(num: i128, den: i128) -> (i128, i128) {
    debug_assert!(den != 0);
    if num == 0 {
        return (0, 1);
    }
    let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    (n, d)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn tight_vertices(h: &HRep, row: usize, vertices: &[RationalPoint]) -> Vec<usize> {
    let r = &h.rows[row];
    let rhs = linalg::rat(r.rhs);
    vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| {
            let lhs: BigRational =
                r.coeffs.iter().zip(&v.coords).map(|(&c, x)| linalg::rat(c) * x).sum();
            lhs == rhs
        })
        .map(|(i, _)| i)
        .collect()
}

fn coords_of<'a>(vertices: &'a [RationalPoint], idx: &[usize]) -> Vec<Vec<BigRational>> {
    idx.iter().map(|&i| vertices[i].coords.clone()).collect()
}

/// Row indices defining facets of a full-dimensional polytope: rows whose
/// tight vertex set spans an affine hyperplane. Duplicate rows supporting
/// the same facet keep only the smallest index.
pub fn irredundant_facets(h: &HRep) -> Result<Vec<usize>, Error> {
    let vertices = enumerate_vertices(h)?;
    let d = h.dim();
    if vertices.is_empty() {
        return Err(Error::NotFullDimensional { ambient: d, actual: 0 });
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let all: Vec<Vec<BigRational>> = vertices.iter().map(|v| v.coords.clone()).collect();
    let dim = linalg::affine_dim(&all).unwrap_or(0);
    if dim != d {
        return Err(Error::NotFullDimensional { ambient: d, actual: dim });
    }
    let mut facets = Vec::new();
    let mut seen_supports: BTreeSet<Vec<usize>> = BTreeSet::new();
    for row in 0..h.rows.len() {
        let tight = tight_vertices(h, row, &vertices);
        if tight.is_empty() {
            continue;
        }
        let fdim = linalg::affine_dim(&coords_of(&vertices, &tight)).unwrap();
        if fdim == d - 1 && seen_supports.insert(tight) {
            facets.push(row);
        }
    }
    Ok(facets)
}

/// Vertex-facet structure with the face counts by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    pub vertices: Vec<RationalPoint>,
    /// Row indices supporting the maximal proper faces.
    pub facets: Vec<usize>,
    /// `incidence[f][v]` is true when vertex `v` lies on facet `f`.
    pub incidence: Vec<Vec<bool>>,
    /// Face counts `(f_0, ..., f_{D-1})` by dimension, `D` the intrinsic
    /// dimension.
    pub f_vector: Vec<u64>,
}

/// Full face enumeration by closing the facet vertex sets under
/// intersection. Faces are graded by the affine dimension of their vertex
/// sets, so the result is the intrinsic f-vector.
pub fn face_lattice(h: &HRep) -> Result<FaceLattice, Error> {
    if h.dim() > MAX_FVECTOR_DIM {
        return Err(Error::ResourceExceeded {
            what: "f-vector dimension",
            limit: MAX_FVECTOR_DIM as u64,
        });
    }
    let vertices = enumerate_vertices(h)?;
    if vertices.is_empty() {
        return Err(Error::NotFullDimensional { ambient: h.dim(), actual: 0 });
    }
    let all: Vec<Vec<BigRational>> = vertices.iter().map(|v| v.coords.clone()).collect();
    let dim = linalg::affine_dim(&all).unwrap_or(0);
    if dim == 0 {
        return Ok(FaceLattice {
            vertices,
            facets: Vec::new(),
            incidence: Vec::new(),
            f_vector: Vec::new(),
        });
    }
    // maximal proper faces relative to the affine hull
    let mut facet_rows = Vec::new();
    let mut facet_sets: Vec<BTreeSet<usize>> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for row in 0..h.rows.len() {
        let tight = tight_vertices(h, row, &vertices);
        if tight.is_empty() {
            continue;
        }
        let fdim = linalg::affine_dim(&coords_of(&vertices, &tight)).unwrap();
        if fdim == dim - 1 && seen.insert(tight.clone()) {
            facet_rows.push(row);
            facet_sets.push(tight.into_iter().collect());
        }
    }
    // close under intersection
    let mut faces: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
    let mut frontier: Vec<BTreeSet<usize>> = facet_sets.clone();
    while let Some(face) = frontier.pop() {
        for fs in &facet_sets {
            let inter: BTreeSet<usize> = face.intersection(fs).copied().collect();
            if !inter.is_empty() && inter != face && faces.insert(inter.clone()) {
                frontier.push(inter);
            }
        }
    }
    let mut f_vector = vec![0u64; dim];
    for face in &faces {
        let pts: Vec<usize> = face.iter().copied().collect();
        let fdim = linalg::affine_dim(&coords_of(&vertices, &pts)).unwrap();
        f_vector[fdim] += 1;
    }
    let incidence: Vec<Vec<bool>> = facet_sets
        .iter()
        .map(|fs| (0..vertices.len()).map(|v| fs.contains(&v)).collect())
        .collect();
    Ok(FaceLattice { vertices, facets: facet_rows, incidence, f_vector })
}

/// Face counts by dimension; empty for a point.
pub fn f_vector(h: &HRep) -> Result<Vec<u64>, Error> {
    Ok(face_lattice(h)?.f_vector)
}
