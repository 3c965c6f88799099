//! Minkowski decomposition of chain-polytope lattice points.
//!
//! Peeling the 0/1 support indicator off a marking splits its chain-polytope
//! lattice points as a Minkowski sum; splitting each 0/1 layer over the
//! connected components of its reduced poset refines this further. A
//! normalized marking is indecomposable exactly when it is 0/1-valued and
//! its reduced poset is connected; `brute_force_split` checks the defining
//! property directly by exhausting all complementary splittings.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::lattice::{enumerate_chain_points_with, minkowski_sum, LatticePointSet, DEFAULT_MAX_POINTS};
use crate::poset::{MarkedPoset, Marking};

/// The 0/1 indicator of a marking's support; always admissible when the
/// input is.
pub fn omega(marking: &Marking) -> Marking {
    marking.support_indicator()
}

/// Outcome of the indecomposability characterization, with a witness for
/// the failing condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CIndecomposability {
    Indecomposable,
    /// Some mark exceeds one, so the support indicator peels off.
    MarkExceedsOne { element: String, value: i64 },
    /// The reduced poset falls apart, so the marking splits by components.
    ReducedDisconnected { components: Vec<BTreeSet<String>> },
}

impl CIndecomposability {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, CIndecomposability::Indecomposable)
    }
}

/// Decides chain-polytope indecomposability of a normalized marking:
/// indecomposable iff every mark is 0 or 1 and the reduced poset is
/// connected (an empty reduced poset counts as connected).
pub fn is_c_indecomposable(
    p: &MarkedPoset,
    marking: &Marking,
) -> Result<CIndecomposability, Error> {
    p.check_in_q_a(marking)?;
    if !marking.is_normalized() {
        return Err(Error::NotNormalized);
    }
    for (a, &v) in marking.values() {
        if v > 1 {
            return Ok(CIndecomposability::MarkExceedsOne { element: a.clone(), value: v });
        }
    }
    let components = p.reduced_poset(marking)?.connected_components();
    if components.len() > 1 {
        return Ok(CIndecomposability::ReducedDisconnected { components });
    }
    Ok(CIndecomposability::Indecomposable)
}

/// One indecomposable summand with its provenance: which peel round and
/// which connected component of that round's reduced poset produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPart {
    pub marking: Marking,
    pub round: usize,
    pub component: usize,
}

/// A full decomposition into indecomposable markings summing to the input.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub parts: Vec<DecompositionPart>,
}

impl Decomposition {
    pub fn markings(&self) -> Vec<Marking> {
        self.parts.iter().map(|p| p.marking.clone()).collect()
    }

    pub fn sum(&self) -> Option<Marking> {
        let mut iter = self.parts.iter();
        let first = iter.next()?.marking.clone();
        iter.try_fold(first, |acc, p| acc.add(&p.marking))
    }
}

/// Decomposes a normalized marking: repeatedly peel the support indicator
/// and split every 0/1 layer over the connected components of its reduced
/// poset. Each part is indecomposable and the parts sum to the input.
pub fn decompose(p: &MarkedPoset, marking: &Marking) -> Result<Decomposition, Error> {
    p.check_in_q_a(marking)?;
    if !marking.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let mut parts = Vec::new();
    let mut current = marking.clone();
    let mut round = 0;
    while !current.is_zero() {
        let layer = omega(&current);
        let components = p.reduced_poset(&layer)?.connected_components();
        for (ci, comp) in components.iter().enumerate() {
            let values = layer
                .values()
                .iter()
                .map(|(a, &v)| (a.clone(), if comp.contains(a) { v } else { 0 }))
                .collect();
            let part = Marking::new(values);
            debug_assert!(!part.is_zero());
            debug_assert!(is_c_indecomposable(p, &part).unwrap().is_indecomposable());
            parts.push(DecompositionPart { marking: part, round, component: ci });
        }
        current = current.checked_sub(&layer).expect("support indicator is pointwise at most");
        round += 1;
    }
    Ok(Decomposition { parts })
}

/// Checks `S_C(marking) = S_C(part_1) + ... + S_C(part_s)` as sets by
/// explicit enumeration. The parts must sum to the marking.
pub fn verify_minkowski(
    p: &MarkedPoset,
    marking: &Marking,
    parts: &[Marking],
) -> Result<bool, Error> {
    verify_minkowski_capped(p, marking, parts, DEFAULT_MAX_POINTS)
}

pub fn verify_minkowski_capped(
    p: &MarkedPoset,
    marking: &Marking,
    parts: &[Marking],
    max_points: u64,
) -> Result<bool, Error> {
    let mut total: Option<Marking> = None;
    for part in parts {
        total = Some(match total {
            None => part.clone(),
            Some(t) => t.add(part).ok_or(Error::PartsDoNotSum)?,
        });
    }
    let sums_ok = match total {
        None => marking.is_zero(),
        Some(t) => t == *marking,
    };
    if !sums_ok {
        return Err(Error::PartsDoNotSum);
    }
    let target = enumerate_chain_points_with(p, marking, max_points)?;
    let mut acc = LatticePointSet::origin(p.unmarked_elements());
    for part in parts {
        let pts = enumerate_chain_points_with(p, part, max_points)?;
        acc = minkowski_sum(&acc, &pts)?;
    }
    Ok(acc == target)
}

/// Guard on the marked-set size for the brute-force search.
pub const MAX_BRUTE_FORCE_MARKS: usize = 6;
/// Guard on the largest mark for the brute-force search.
pub const MAX_BRUTE_FORCE_VALUE: i64 = 4;

/// Exhaustive search for a nontrivial splitting `marking = mu + tau` with
/// `S_C(marking) = S_C(mu) + S_C(tau)`; both summands admissible and
/// nonzero. Returns the first witness found, or `None` when the marking is
/// indecomposable with respect to complementary splittings.
pub fn brute_force_split(
    p: &MarkedPoset,
    marking: &Marking,
) -> Result<Option<(Marking, Marking)>, Error> {
    p.check_in_q_a(marking)?;
    let names: Vec<String> = marking.values().keys().cloned().collect();
    if names.len() > MAX_BRUTE_FORCE_MARKS {
        return Err(Error::ResourceExceeded {
            what: "brute-force marked set size",
            limit: MAX_BRUTE_FORCE_MARKS as u64,
        });
    }
    let bounds: Vec<i64> = names.iter().map(|a| marking.get(a).unwrap()).collect();
    if bounds.iter().any(|&b| b > MAX_BRUTE_FORCE_VALUE) {
        return Err(Error::ResourceExceeded {
            what: "brute-force mark value",
            limit: MAX_BRUTE_FORCE_VALUE as u64,
        });
    }
    let target = enumerate_chain_points_with(p, marking, DEFAULT_MAX_POINTS)?;
    // odometer over all mu with 0 <= mu <= marking pointwise
    let mut digits: Vec<i64> = alloc::vec![0; names.len()];
    loop {
        // advance
        let mut i = 0;
        loop {
            if i == names.len() {
                return Ok(None);
            }
            digits[i] += 1;
            if digits[i] <= bounds[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let mu = Marking::new(names.iter().cloned().zip(digits.iter().copied()).collect());
        let tau = marking.checked_sub(&mu).unwrap();
        if mu.is_zero() || tau.is_zero() || mu > tau {
            continue;
        }
        if p.check_in_q_a(&mu).is_err() || p.check_in_q_a(&tau).is_err() {
            continue;
        }
        let s_mu = enumerate_chain_points_with(p, &mu, DEFAULT_MAX_POINTS)?;
        let s_tau = enumerate_chain_points_with(p, &tau, DEFAULT_MAX_POINTS)?;
        if minkowski_sum(&s_mu, &s_tau)? == target {
            return Ok(Some((mu, tau)));
        }
    }
}
