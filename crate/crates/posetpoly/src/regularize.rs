//! Rewriting a marked poset into its regular normal form.
//!
//! Regular means: the marking is injective on the marked set, no cover
//! touches a marked element redundantly (the two drop rules below), and no
//! cover has both ends marked. The three rewrites preserve both polytopes up
//! to dropping coordinates that were constant, so facet counts and
//! lattice-point counts are unchanged.
//!
//! Rewrite order is fixed: collapse equal-marked chains, drop redundant
//! covers, merge equal marks, then drop again to a fixpoint. Every step is
//! recorded in a [`Trace`] mapping old elements to new ones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::vec;

use crate::error::Error;
use crate::poset::MarkedPoset;

/// Fresh vertices created by collapses and merges carry this prefix.
pub const FRESH_PREFIX: &str = "⊕";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// A chain between equal-marked comparable elements collapsed to one
    /// fresh marked vertex (the whole closed interval is constant in both
    /// polytopes).
    CollapseEqualChain,
    /// A cover between a marked and an unmarked element deleted because a
    /// second marked element makes it redundant.
    DropRedundantCover,
    /// Two equal-marked incomparable elements merged into one fresh vertex.
    MergeEqualMarks,
    /// A cover with both ends marked deleted.
    DropMarkedCover,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::CollapseEqualChain => "collapse-equal-chain",
            StepKind::DropRedundantCover => "drop-redundant-cover",
            StepKind::MergeEqualMarks => "merge-equal-marks",
            StepKind::DropMarkedCover => "drop-AA-cover",
        }
    }
}

/// One rewrite application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    /// Elements consumed (collapse/merge) or the justifying witness (drop).
    pub elements: Vec<String>,
    /// Covers deleted by this step, if any.
    pub covers: Vec<(String, String)>,
    /// Fresh vertex created by this step, if any.
    pub created: Option<String>,
}

/// Provenance of a rewrite run: the steps in order and the map from input
/// elements to the elements representing them in the output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    pub steps: Vec<Step>,
    pub element_map: BTreeMap<String, String>,
}

impl Trace {
    fn identity(p: &MarkedPoset) -> Trace {
        Trace {
            steps: Vec::new(),
            element_map: p.elements().map(|e| (e.into(), e.into())).collect(),
        }
    }

    fn remap(&mut self, consumed: &BTreeSet<String>, replacement: &str) {
        for v in self.element_map.values_mut() {
            if consumed.contains(v.as_str()) {
                *v = replacement.into();
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

pub struct RegularizeOutcome {
    pub poset: MarkedPoset,
    pub trace: Trace,
}

struct Rewriter {
    poset: MarkedPoset,
    trace: Trace,
    fresh: u64,
}

impl Rewriter {
    fn new(p: &MarkedPoset) -> Rewriter {
        let mut fresh = 1;
        for e in p.elements() {
            if let Some(rest) = e.strip_prefix(FRESH_PREFIX) {
                if let Ok(k) = rest.parse::<u64>() {
                    fresh = fresh.max(k + 1);
                }
            }
        }
        Rewriter { poset: p.clone(), trace: Trace::identity(p), fresh }
    }

    fn next_fresh(&mut self) -> String {
        let name = format!("{FRESH_PREFIX}{}", self.fresh);
        self.fresh += 1;
        name
    }

    /// Replaces a nonempty element set by one fresh marked vertex carrying
    /// `mark`, inheriting all external relations, and closes transitively.
    fn quotient(&mut self, consumed: &BTreeSet<String>, mark: i64, kind: StepKind) {
        let fresh_name = self.next_fresh();
        let p = &self.poset;
        let consumed_idx: BTreeSet<usize> =
            consumed.iter().map(|e| p.idx(e).expect("consumed element exists")).collect();

        let retained: Vec<usize> =
            (0..p.len()).filter(|i| !consumed_idx.contains(i)).collect();
        let mut elements: Vec<String> = retained.iter().map(|&i| p.name(i).into()).collect();
        elements.push(fresh_name.clone());
        let c = retained.len();

        let n = elements.len();
        let mut less = vec![vec![false; n]; n];
        for (pa, &a) in retained.iter().enumerate() {
            for (pb, &b) in retained.iter().enumerate() {
                less[pa][pb] = p.less_idx(a, b);
            }
        }
        for (pa, &a) in retained.iter().enumerate() {
            less[pa][c] = consumed_idx.iter().any(|&y| p.less_idx(a, y));
            less[c][pa] = consumed_idx.iter().any(|&y| p.less_idx(y, a));
        }
        // identification can chain relations through the fresh vertex
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

        let mut marking: BTreeMap<String, i64> = BTreeMap::new();
        for (id, v) in p.marked_elements() {
            if !consumed.contains(&id) {
                marking.insert(id, v);
            }
        }
        marking.insert(fresh_name.clone(), mark);

        let next = MarkedPoset::from_relation(elements, &|a, b| less[a][b], marking)
            .expect("quotient of a valid marked poset stays valid");
        self.trace.steps.push(Step {
            kind,
            elements: consumed.iter().cloned().collect(),
            covers: Vec::new(),
            created: Some(fresh_name.clone()),
        });
        self.trace.remap(consumed, &fresh_name);
        self.poset = next;
    }

    fn delete_cover(&mut self, lower: &str, upper: &str, witness: Option<String>, kind: StepKind) {
        let mut data = self.poset.data();
        data.covers.retain(|(l, u)| !(l == lower && u == upper));
        self.poset = MarkedPoset::new(data).expect("cover deletion keeps the poset valid");
        self.trace.steps.push(Step {
            kind,
            elements: witness.into_iter().collect(),
            covers: vec![(lower.into(), upper.into())],
            created: None,
        });
    }

    /// Smallest comparable pair of distinct marked elements with equal marks,
    /// by name.
    fn comparable_equal_pair(&self) -> Option<(String, String)> {
        let p = &self.poset;
        let mut best: Option<(String, String)> = None;
        for (a, va) in p.marked_indices() {
            for (b, vb) in p.marked_indices() {
                if a != b && va == vb && p.less_idx(a, b) {
                    let cand = (String::from(p.name(a)), String::from(p.name(b)));
                    if best.as_ref().is_none_or(|cur| cand < *cur) {
                        best = Some(cand);
                    }
                }
            }
        }
        best
    }

    fn collapse_to_fixpoint(&mut self) {
        while let Some((a, b)) = self.comparable_equal_pair() {
            let p = &self.poset;
            let (ai, bi) = (p.idx(&a).unwrap(), p.idx(&b).unwrap());
            let mark = p.mark_idx(bi).unwrap();
            let interval: BTreeSet<String> = (0..p.len())
                .filter(|&x| {
                    (x == ai || p.less_idx(ai, x)) && (x == bi || p.less_idx(x, bi))
                })
                .map(|x| String::from(p.name(x)))
                .collect();
            self.quotient(&interval, mark, StepKind::CollapseEqualChain);
        }
    }

    fn drop_to_fixpoint(&mut self) {
        while let Some((lower, upper, witness)) = find_drop_candidate(&self.poset) {
            self.delete_cover(&lower, &upper, Some(witness), StepKind::DropRedundantCover);
        }
    }

    fn merge_equal_marks(&mut self) -> Result<(), Error> {
        loop {
            // smallest equal-marked pair by name; must be incomparable
            let p = &self.poset;
            let mut best: Option<(String, String)> = None;
            for (a, va) in p.marked_indices() {
                for (b, vb) in p.marked_indices() {
                    if a < b && va == vb {
                        let (x, y) = (String::from(p.name(a)), String::from(p.name(b)));
                        let cand = if x < y { (x, y) } else { (y, x) };
                        if best.as_ref().is_none_or(|cur| cand < *cur) {
                            best = Some(cand);
                        }
                    }
                }
            }
            let Some((a, b)) = best else { break };
            if self.poset.less_than(&a, &b).unwrap() || self.poset.less_than(&b, &a).unwrap() {
                return Err(Error::MergeWouldCycle { first: a, second: b });
            }
            let mark = self.poset.mark(&a).unwrap();
            let consumed: BTreeSet<String> = [a, b].into_iter().collect();
            self.quotient(&consumed, mark, StepKind::MergeEqualMarks);
        }
        // covers inside the marked set carry no constraint; delete them
        loop {
            let p = &self.poset;
            let cand = p
                .covers_idx()
                .iter()
                .filter(|&&(l, u)| p.mark_idx(l).is_some() && p.mark_idx(u).is_some())
                .map(|&(l, u)| (String::from(p.name(l)), String::from(p.name(u))))
                .min();
            let Some((l, u)) = cand else { break };
            self.delete_cover(&l, &u, None, StepKind::DropMarkedCover);
        }
        Ok(())
    }
}

/// Smallest redundant cover adjacent to a marked element, with the witness
/// justifying the deletion. The witness mark must dominate strictly:
/// equal-marked elements are not witnesses for each other, they collapse or
/// merge instead. After merging, marks are injective, so the strictness
/// makes no difference on regular posets.
fn find_drop_candidate(p: &MarkedPoset) -> Option<(String, String, String)> {
    let mut best: Option<(String, String, String)> = None;
    for &(lo, hi) in p.covers_idx() {
        let cand = match (p.mark_idx(lo), p.mark_idx(hi)) {
            // marked a covered by unmarked x: redundant when some other
            // marked b below x has a larger mark
            (Some(va), None) => p
                .marked_indices()
                .find(|&(b, vb)| b != lo && p.less_idx(b, hi) && vb > va)
                .map(|(b, _)| b),
            // unmarked x covered by marked a: redundant when some other
            // marked b above x has a smaller mark
            (None, Some(va)) => p
                .marked_indices()
                .find(|&(b, vb)| b != hi && p.less_idx(lo, b) && vb < va)
                .map(|(b, _)| b),
            _ => None,
        };
        if let Some(b) = cand {
            let entry =
                (String::from(p.name(lo)), String::from(p.name(hi)), String::from(p.name(b)));
            if best.as_ref().is_none_or(|cur| (&entry.0, &entry.1) < (&cur.0, &cur.1)) {
                best = Some(entry);
            }
        }
    }
    best
}

/// Collapses every chain between comparable equal-marked elements to a fresh
/// marked vertex, iterated to a fixpoint. All polytope coordinates removed
/// this way were constant.
pub fn collapse_equal_chains(p: &MarkedPoset) -> (MarkedPoset, Trace) {
    let mut rw = Rewriter::new(p);
    rw.collapse_to_fixpoint();
    (rw.poset, rw.trace)
}

/// Deletes redundant covers adjacent to marked elements, iterated to a
/// fixpoint. Expects the output of [`collapse_equal_chains`].
pub fn drop_redundant_covers(p: &MarkedPoset) -> Result<(MarkedPoset, Trace), Error> {
    let mut rw = Rewriter::new(p);
    if let Some((a, b)) = rw.comparable_equal_pair() {
        return Err(Error::CollapseRequired { first: a, second: b });
    }
    rw.drop_to_fixpoint();
    Ok((rw.poset, rw.trace))
}

/// Merges equal-marked incomparable elements into fresh vertices until the
/// marking is injective, then deletes covers lying inside the marked set.
pub fn merge_equal_marks(p: &MarkedPoset) -> Result<(MarkedPoset, Trace), Error> {
    let mut rw = Rewriter::new(p);
    rw.merge_equal_marks()?;
    Ok((rw.poset, rw.trace))
}

/// Full regularization: collapse, drop, merge, then drop again to a
/// fixpoint. The result satisfies [`is_regular`].
pub fn regularize(p: &MarkedPoset) -> Result<RegularizeOutcome, Error> {
    let mut rw = Rewriter::new(p);
    rw.collapse_to_fixpoint();
    rw.drop_to_fixpoint();
    rw.merge_equal_marks()?;
    rw.drop_to_fixpoint();
    debug_assert!(regularity_defects(&rw.poset).is_empty());
    Ok(RegularizeOutcome { poset: rw.poset, trace: rw.trace })
}

/// A way in which a marked poset fails to be regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityDefect {
    EqualMarks { first: String, second: String, value: i64 },
    RedundantCover { lower: String, upper: String, witness: String },
    MarkedCover { lower: String, upper: String },
}

impl core::fmt::Display for RegularityDefect {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RegularityDefect::EqualMarks { first, second, value } => {
                write!(f, "elements {first:?} and {second:?} share mark {value}")
            }
            RegularityDefect::RedundantCover { lower, upper, witness } => {
                write!(f, "cover ({lower:?}, {upper:?}) is redundant via {witness:?}")
            }
            RegularityDefect::MarkedCover { lower, upper } => {
                write!(f, "cover ({lower:?}, {upper:?}) has both ends marked")
            }
        }
    }
}

/// All regularity defects of a marked poset, empty iff regular.
pub fn regularity_defects(p: &MarkedPoset) -> Vec<RegularityDefect> {
    let mut out = Vec::new();
    let marked = p.marked_elements();
    for (i, (a, va)) in marked.iter().enumerate() {
        for (b, vb) in marked.iter().skip(i + 1) {
            if va == vb {
                out.push(RegularityDefect::EqualMarks {
                    first: a.clone(),
                    second: b.clone(),
                    value: *va,
                });
            }
        }
    }
    if let Some((lower, upper, witness)) = find_drop_candidate(p) {
        out.push(RegularityDefect::RedundantCover { lower, upper, witness });
    }
    for &(lo, hi) in p.covers_idx() {
        if p.mark_idx(lo).is_some() && p.mark_idx(hi).is_some() {
            out.push(RegularityDefect::MarkedCover {
                lower: p.name(lo).into(),
                upper: p.name(hi).into(),
            });
        }
    }
    out
}

pub fn is_regular(p: &MarkedPoset) -> bool {
    regularity_defects(p).is_empty()
}

/// Errors with the first defect when the poset is not regular.
pub(crate) fn require_regular(p: &MarkedPoset) -> Result<(), Error> {
    match regularity_defects(p).first() {
        None => Ok(()),
        Some(d) => Err(Error::NotRegular(format!("{d}"))),
    }
}
