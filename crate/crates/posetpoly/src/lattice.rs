//! Lattice points of the marked poset polytopes, dilation counts, and
//! Minkowski sums of point sets.
//!
//! Order points are enumerated along a linear extension with bounds from the
//! nearest marks; chain points by per-chain residual budgets. Both walks are
//! complete and allocation-light, and both are checked against the
//! H-representations in the tests. Point sets are kept sorted for
//! deterministic output and fast set equality.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;

use crate::error::Error;
use crate::poset::{MarkedPoset, Marking, DEFAULT_CHAIN_CAP};

/// Default cap on enumerated lattice points per polytope.
pub const DEFAULT_MAX_POINTS: u64 = 10_000_000;

/// A finite set of integer vectors over a fixed coordinate list, sorted
/// lexicographically and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePointSet {
    pub coordinates: Vec<String>,
    points: Vec<Vec<i64>>,
}

impl LatticePointSet {
    pub fn new(coordinates: Vec<String>, points: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let set: BTreeSet<Vec<i64>> = points.into_iter().collect();
        LatticePointSet { coordinates, points: set.into_iter().collect() }
    }

    /// The set containing only the origin.
    pub fn origin(coordinates: Vec<String>) -> Self {
        let d = coordinates.len();
        LatticePointSet { coordinates, points: vec![vec![0; d]] }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(point)).is_ok()
    }

    /// Applies an integer map to every point.
    pub fn map(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> LatticePointSet {
        LatticePointSet::new(self.coordinates.clone(), self.points.iter().map(|p| f(p)))
    }
}

/// Pointwise sums `{a + b}` of two point sets over the same coordinates.
pub fn minkowski_sum(a: &LatticePointSet, b: &LatticePointSet) -> Result<LatticePointSet, Error> {
    if a.coordinates != b.coordinates {
        return Err(Error::CoordinateMismatch);
    }
    let mut out = BTreeSet::new();
    for p in &a.points {
        for q in &b.points {
            let sum: Vec<i64> = p.iter().zip(q).map(|(x, y)| x + y).collect();
            out.insert(sum);
        }
    }
    Ok(LatticePointSet { coordinates: a.coordinates.clone(), points: out.into_iter().collect() })
}

struct OrderWalk {
    /// unmarked element indices in topological order
    coords: Vec<usize>,
    /// column in the emitted vector for each walk position
    emit_pos: Vec<usize>,
    static_lb: Vec<i64>,
    static_ub: Vec<i64>,
    /// walk position of each unmarked lower cover, per walk position
    lower_positions: Vec<Vec<usize>>,
}

impl OrderWalk {
    fn new(p: &MarkedPoset, marking: &Marking) -> OrderWalk {
        let declared = p.unmarked_indices();
        let topo: Vec<usize> =
            p.topo_order().into_iter().filter(|i| p.mark_idx(*i).is_none()).collect();
        let emit_pos: Vec<usize> = topo
            .iter()
            .map(|i| declared.iter().position(|j| j == i).unwrap())
            .collect();
        let value_of = |a: usize| marking.get(p.name(a)).unwrap();
        let mut static_lb = Vec::with_capacity(topo.len());
        let mut static_ub = Vec::with_capacity(topo.len());
        for &x in &topo {
            let lb = p
                .marked_indices()
                .filter(|&(a, _)| p.less_idx(a, x))
                .map(|(a, _)| value_of(a))
                .max()
                .expect("every unmarked element lies above a marked one");
            let ub = p
                .marked_indices()
                .filter(|&(b, _)| p.less_idx(x, b))
                .map(|(b, _)| value_of(b))
                .min()
                .expect("every unmarked element lies below a marked one");
            static_lb.push(lb);
            static_ub.push(ub);
        }
        let pos_of = |i: usize| topo.iter().position(|&j| j == i);
        let lower_positions: Vec<Vec<usize>> = topo
            .iter()
            .map(|&x| {
                p.lower_covers(x)
                    .iter()
                    .filter(|&&u| p.mark_idx(u).is_none())
                    .map(|&u| pos_of(u).unwrap())
                    .collect()
            })
            .collect();
        OrderWalk { coords: topo, emit_pos, static_lb, static_ub, lower_positions }
    }

    fn walk(
        &self,
        t: usize,
        values: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[usize], &[i64]) -> Result<(), Error>,
    ) -> Result<(), Error> {
        if t == self.coords.len() {
            return visit(&self.emit_pos, values);
        }
        let mut lb = self.static_lb[t];
        for &u in &self.lower_positions[t] {
            lb = lb.max(values[u]);
        }
        for v in lb..=self.static_ub[t] {
            values.push(v);
            self.walk(t + 1, values, visit)?;
            values.pop();
        }
        Ok(())
    }
}

fn order_walk(
    p: &MarkedPoset,
    marking: &Marking,
    visit: &mut dyn FnMut(&[usize], &[i64]) -> Result<(), Error>,
) -> Result<(), Error> {
    p.check_in_q_a(marking)?;
    let walk = OrderWalk::new(p, marking);
    let mut values = Vec::with_capacity(walk.coords.len());
    walk.walk(0, &mut values, visit)
}

struct ChainWalk {
    /// per chain: (member walk positions, budget)
    budgets: Vec<i64>,
    chains_of: Vec<Vec<usize>>,
    n_coords: usize,
}

impl ChainWalk {
    fn new(p: &MarkedPoset, marking: &Marking) -> Result<ChainWalk, Error> {
        let declared = p.unmarked_indices();
        let n_coords = declared.len();
        let col_of = |i: usize| declared.iter().position(|&j| j == i).unwrap();
        let value_of = |a: usize| marking.get(p.name(a)).unwrap();
        let marked: Vec<usize> = p.marked_indices().map(|(i, _)| i).collect();
        let mut budgets = Vec::new();
        let mut chains_of = vec![Vec::new(); n_coords];
        for &a in &marked {
            for &b in &marked {
                if a == b || !p.less_idx(a, b) {
                    continue;
                }
                let budget = value_of(b) - value_of(a);
                for chain in p.chains_between_idx(a, b, DEFAULT_CHAIN_CAP)? {
                    if chain.len() <= 2 {
                        continue;
                    }
                    let id = budgets.len();
                    budgets.push(budget);
                    for &x in &chain[1..chain.len() - 1] {
                        chains_of[col_of(x)].push(id);
                    }
                }
            }
        }
        Ok(ChainWalk { budgets, chains_of, n_coords })
    }

    fn walk(
        &self,
        col: usize,
        values: &mut Vec<i64>,
        remaining: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]) -> Result<(), Error>,
    ) -> Result<(), Error> {
        if col == self.n_coords {
            return visit(values);
        }
        let chains = &self.chains_of[col];
        if chains.is_empty() {
            // cannot happen for a valid marked poset: every unmarked element
            // lies on a saturated chain between marks
            return Err(Error::Unbounded);
        }
        let ub = chains.iter().map(|&c| remaining[c]).min().unwrap();
        for v in 0..=ub {
            for &c in chains {
                remaining[c] -= v;
            }
            values.push(v);
            self.walk(col + 1, values, remaining, visit)?;
            values.pop();
            for &c in chains {
                remaining[c] += v;
            }
        }
        Ok(())
    }
}

fn chain_walk(
    p: &MarkedPoset,
    marking: &Marking,
    visit: &mut dyn FnMut(&[i64]) -> Result<(), Error>,
) -> Result<(), Error> {
    p.check_in_q_a(marking)?;
    let walk = ChainWalk::new(p, marking)?;
    let mut values = Vec::with_capacity(walk.n_coords);
    let mut remaining = walk.budgets.clone();
    walk.walk(0, &mut values, &mut remaining, visit)
}

/// Integer points of the marked order polytope for the poset's own marking.
pub fn enumerate_order_points(p: &MarkedPoset) -> Result<LatticePointSet, Error> {
    enumerate_order_points_with(p, &p.marking(), DEFAULT_MAX_POINTS)
}

/// Integer points of the marked order polytope for an arbitrary admissible
/// marking, capped.
pub fn enumerate_order_points_with(
    p: &MarkedPoset,
    marking: &Marking,
    max_points: u64,
) -> Result<LatticePointSet, Error> {
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    order_walk(p, marking, &mut |emit_pos, values| {
        if out.len() as u64 >= max_points {
            return Err(Error::ResourceExceeded { what: "lattice points", limit: max_points });
        }
        let mut point = vec![0i64; values.len()];
        for (t, &v) in values.iter().enumerate() {
            point[emit_pos[t]] = v;
        }
        out.insert(point);
        Ok(())
    })?;
    Ok(LatticePointSet { coordinates: p.unmarked_elements(), points: out.into_iter().collect() })
}

/// Integer points of the marked chain polytope for the poset's own marking.
pub fn enumerate_chain_points(p: &MarkedPoset) -> Result<LatticePointSet, Error> {
    enumerate_chain_points_with(p, &p.marking(), DEFAULT_MAX_POINTS)
}

/// Integer points of the marked chain polytope for an arbitrary admissible
/// marking, capped.
pub fn enumerate_chain_points_with(
    p: &MarkedPoset,
    marking: &Marking,
    max_points: u64,
) -> Result<LatticePointSet, Error> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    chain_walk(p, marking, &mut |values| {
        if out.len() as u64 >= max_points {
            return Err(Error::ResourceExceeded { what: "lattice points", limit: max_points });
        }
        out.push(values.to_vec());
        Ok(())
    })?;
    // the chain walk emits in coordinate order, already lexicographic
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(LatticePointSet { coordinates: p.unmarked_elements(), points: out })
}

/// Lattice-point counts of both polytopes for the marking scaled by
/// `k = 1..=max_k`. Both polytopes scale linearly in the marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilateCount {
    pub k: i64,
    pub chain: u64,
    pub order: u64,
}

pub fn dilate_counts(p: &MarkedPoset, max_k: i64) -> Result<Vec<DilateCount>, Error> {
    dilate_counts_capped(p, max_k, DEFAULT_MAX_POINTS)
}

pub fn dilate_counts_capped(
    p: &MarkedPoset,
    max_k: i64,
    max_points: u64,
) -> Result<Vec<DilateCount>, Error> {
    let base = p.marking();
    let mut out = Vec::new();
    for k in 1..=max_k {
        let scaled = base.scaled(k);
        let mut chain: u64 = 0;
        chain_walk(p, &scaled, &mut |_| {
            chain += 1;
            if chain > max_points {
                return Err(Error::ResourceExceeded { what: "lattice points", limit: max_points });
            }
            Ok(())
        })?;
        let mut order: u64 = 0;
        order_walk(p, &scaled, &mut |_, _| {
            order += 1;
            if order > max_points {
                return Err(Error::ResourceExceeded { what: "lattice points", limit: max_points });
            }
            Ok(())
        })?;
        out.push(DilateCount { k, chain, order });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{chain_hrep, order_hrep};
    use crate::poset::PosetData;
    use alloc::string::ToString;

    fn build(
        elements: &[&str],
        covers: &[(&str, &str)],
        marking: &[(&str, i64)],
    ) -> MarkedPoset {
        MarkedPoset::new(PosetData {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            covers: covers.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            marking: marking.iter().map(|(a, v)| (a.to_string(), *v)).collect(),
        })
        .unwrap()
    }

    fn chain_ab() -> MarkedPoset {
        build(&["a", "x", "y", "b"], &[("a", "x"), ("x", "y"), ("y", "b")], &[("a", 0), ("b", 2)])
    }

    #[test]
    fn chain_points_of_triangle() {
        let s = enumerate_chain_points(&chain_ab()).unwrap();
        assert_eq!(
            s.points(),
            &[
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0]
            ]
        );
    }

    #[test]
    fn order_points_of_triangle() {
        let s = enumerate_order_points(&chain_ab()).unwrap();
        assert_eq!(
            s.points(),
            &[
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
    }

    #[test]
    fn zero_marking_gives_origin() {
        let p = build(&["a", "x", "b"], &[("a", "x"), ("x", "b")], &[("a", 0), ("b", 0)]);
        let c = enumerate_chain_points(&p).unwrap();
        assert_eq!(c.points(), &[vec![0]]);
        let o = enumerate_order_points(&p).unwrap();
        assert_eq!(o.points(), &[vec![0]]);
    }

    #[test]
    fn every_point_satisfies_the_hrep() {
        let p = chain_ab();
        let ch = chain_hrep(&p).unwrap();
        for pt in enumerate_chain_points(&p).unwrap().points() {
            assert!(ch.satisfied_by(pt));
        }
        let oh = order_hrep(&p);
        for pt in enumerate_order_points(&p).unwrap().points() {
            assert!(oh.satisfied_by(pt));
        }
    }

    #[test]
    fn dilate_counts_of_triangle() {
        let counts = dilate_counts(&chain_ab(), 3).unwrap();
        let expected: Vec<(i64, u64)> = vec![(1, 6), (2, 15), (3, 28)];
        for (dc, (k, n)) in counts.iter().zip(expected) {
            assert_eq!(dc.k, k);
            assert_eq!(dc.chain, n);
            assert_eq!(dc.order, n);
        }
    }

    #[test]
    fn minkowski_identity_and_segment() {
        let coords = vec!["x".to_string()];
        let zero = LatticePointSet::origin(coords.clone());
        let seg = LatticePointSet::new(coords.clone(), [vec![0], vec![1]]);
        assert_eq!(minkowski_sum(&zero, &seg).unwrap(), seg);
        let two = minkowski_sum(&seg, &seg).unwrap();
        assert_eq!(two.points(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn minkowski_coordinate_mismatch() {
        let a = LatticePointSet::origin(vec!["x".to_string()]);
        let b = LatticePointSet::origin(vec!["y".to_string()]);
        assert_eq!(minkowski_sum(&a, &b), Err(Error::CoordinateMismatch));
    }

    #[test]
    fn cap_is_enforced() {
        let p = chain_ab();
        let err = enumerate_chain_points_with(&p, &p.marking(), 3);
        assert!(matches!(err, Err(Error::ResourceExceeded { .. })));
    }

    #[test]
    fn scaled_marking_points_match_hrep_membership() {
        let p = chain_ab();
        let m2 = p.marking().scaled(2);
        let s = enumerate_chain_points_with(&p, &m2, DEFAULT_MAX_POINTS).unwrap();
        assert_eq!(s.len(), 15);
        let p2 = p.with_marking(&m2).unwrap();
        let h2 = chain_hrep(&p2).unwrap();
        for pt in s.points() {
            assert!(h2.satisfied_by(pt));
        }
    }
}
