//! Crossing and nesting numbers.
//!
//! A set of k arcs is a k-crossing when every pair crosses, and a k-nesting
//! when every pair nests. On the upper diagram the enhanced convention
//! applies (shared endpoints and loops count); on the lower diagram the
//! proper, strict convention applies.
//!
//! The fast path sweeps straddle points: every k-crossing or k-nesting
//! straddles a common point (an integer vertex under enhanced semantics, a
//! gap between consecutive vertices under proper semantics), and within the
//! arcs straddling a fixed point, sorted by left endpoint, a chain is
//! exactly a strictly increasing (crossing) or strictly decreasing
//! (nesting) run of right endpoints.

use thiserror::Error;

use crate::perm::{arc_diagram, Arc, Permutation, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("arc set mixes upper and lower arcs")]
    MixedSides,
    #[error("arc set too large for subset enumeration ({0} arcs, limit 25)")]
    TooManyArcs(usize),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Crossing,
    Nesting,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    /// Upper-diagram convention: a loop inside an arc nests, an arc ending
    /// where another starts crosses.
    Enhanced,
    /// Lower-diagram convention: strict inequalities only.
    Proper,
}

/// A one-sided chain-number query.
#[derive(Clone, Debug)]
pub struct ChainQuery {
    arcs: Vec<(usize, usize)>,
    pub kind: ChainKind,
    pub semantics: Semantics,
}

impl ChainQuery {
    /// Rejects arc sets that mix sides.
    pub fn new(arcs: &[Arc], kind: ChainKind, semantics: Semantics) -> Result<Self, ChainError> {
        if let Some(first) = arcs.first() {
            if arcs.iter().any(|a| a.side != first.side) {
                return Err(ChainError::MixedSides);
            }
        }
        Ok(ChainQuery {
            arcs: arcs.iter().map(|a| (a.left, a.right)).collect(),
            kind,
            semantics,
        })
    }

    pub fn from_pairs(
        arcs: Vec<(usize, usize)>,
        kind: ChainKind,
        semantics: Semantics,
    ) -> Self {
        ChainQuery {
            arcs,
            kind,
            semantics,
        }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }
}

/// Longest strictly increasing subsequence length, patience style.
fn lis_strict(seq: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::with_capacity(seq.len());
    for &x in seq {
        // first tail >= x gets replaced; strictly increasing runs only
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

pub fn chain_number(query: &ChainQuery) -> usize {
    chain_number_pairs(&query.arcs, query.kind, query.semantics)
}

/// Sweep over straddle points. `arcs` are `(left, right)` pairs with
/// `left ≤ right` and distinct left endpoints, distinct right endpoints.
pub fn chain_number_pairs(
    arcs: &[(usize, usize)],
    kind: ChainKind,
    semantics: Semantics,
) -> usize {
    if arcs.is_empty() {
        return 0;
    }
    let max_r = arcs.iter().map(|&(_, r)| r).max().unwrap();
    let mut sorted: Vec<(usize, usize)> = arcs.to_vec();
    sorted.sort_unstable();
    let mut best = 0;
    let mut straddle: Vec<usize> = Vec::with_capacity(sorted.len());
    for t in 1..=max_r {
        straddle.clear();
        for &(l, r) in &sorted {
            let hit = match semantics {
                Semantics::Enhanced => l <= t && t <= r,
                // t names the gap between vertices t and t+1
                Semantics::Proper => l <= t && t < r,
            };
            if hit {
                straddle.push(r);
            }
        }
        let len = match kind {
            ChainKind::Crossing => lis_strict(&straddle),
            ChainKind::Nesting => {
                straddle.reverse();
                lis_strict(&straddle)
            }
        };
        best = best.max(len);
    }
    best
}

/// Whether two arcs (sorted internally by left endpoint) satisfy the
/// pairwise crossing or nesting relation.
pub fn arcs_related(
    a: (usize, usize),
    b: (usize, usize),
    kind: ChainKind,
    semantics: Semantics,
) -> bool {
    let (x, y) = if a.0 < b.0 { (a, b) } else { (b, a) };
    if x.0 == y.0 {
        return false;
    }
    match kind {
        ChainKind::Crossing => match semantics {
            Semantics::Enhanced => y.0 <= x.1 && x.1 < y.1,
            Semantics::Proper => y.0 < x.1 && x.1 < y.1,
        },
        ChainKind::Nesting => match semantics {
            Semantics::Enhanced => y.1 < x.1,
            Semantics::Proper => y.0 < y.1 && y.1 < x.1,
        },
    }
}

/// Brute-force oracle: the largest arc subset that is pairwise related.
pub fn brute_force_chain_number(query: &ChainQuery) -> Result<usize, ChainError> {
    let arcs = &query.arcs;
    if arcs.len() > 25 {
        return Err(ChainError::TooManyArcs(arcs.len()));
    }
    let mut sorted = arcs.clone();
    sorted.sort_unstable();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut best = 0;
    fn extend(
        sorted: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        best: &mut usize,
        kind: ChainKind,
        semantics: Semantics,
    ) {
        *best = (*best).max(chosen.len());
        for i in start..sorted.len() {
            if chosen
                .iter()
                .all(|&c| arcs_related(c, sorted[i], kind, semantics))
            {
                chosen.push(sorted[i]);
                extend(sorted, i + 1, chosen, best, kind, semantics);
                chosen.pop();
            }
        }
    }
    extend(
        &sorted,
        0,
        &mut chosen,
        &mut best,
        query.kind,
        query.semantics,
    );
    Ok(best)
}

fn sided_queries(perm: &Permutation, kind: ChainKind) -> (ChainQuery, ChainQuery) {
    let d = arc_diagram(perm);
    (
        ChainQuery::from_pairs(d.upper_pairs(), kind, Semantics::Enhanced),
        ChainQuery::from_pairs(d.lower_pairs(), kind, Semantics::Proper),
    )
}

/// `Cr(σ)`: the largest k such that the diagram contains a k-crossing.
pub fn crossing_number(perm: &Permutation) -> usize {
    let (up, lo) = sided_queries(perm, ChainKind::Crossing);
    chain_number(&up).max(chain_number(&lo))
}

/// `Ne(σ)`: the largest k such that the diagram contains a k-nesting.
pub fn nesting_number(perm: &Permutation) -> usize {
    let (up, lo) = sided_queries(perm, ChainKind::Nesting);
    chain_number(&up).max(chain_number(&lo))
}

/// Counts of 2-crossings and 2-nestings over both sides.
pub fn pair_counts(perm: &Permutation) -> (usize, usize) {
    let d = arc_diagram(perm);
    let mut crossings = 0;
    let mut nestings = 0;
    let mut count = |arcs: &[Arc], semantics: Semantics| {
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                let a = (arcs[i].left, arcs[i].right);
                let b = (arcs[j].left, arcs[j].right);
                if arcs_related(a, b, ChainKind::Crossing, semantics) {
                    crossings += 1;
                }
                if arcs_related(a, b, ChainKind::Nesting, semantics) {
                    nestings += 1;
                }
            }
        }
    };
    count(d.upper(), Semantics::Enhanced);
    count(d.lower(), Semantics::Proper);
    (crossings, nestings)
}

/// `(weak exceedances, deficiencies)`; the former is the upper arc count,
/// the latter the lower arc count.
pub fn exceedance_descent_counts(perm: &Permutation) -> (usize, usize) {
    let n = perm.n();
    let weak = (1..=n).filter(|&a| perm.apply(a) >= a).count();
    (weak, n - weak)
}

/// Convenience for callers inspecting sides separately.
pub fn side_chain_number(perm: &Permutation, side: Side, kind: ChainKind) -> usize {
    let d = arc_diagram(perm);
    match side {
        Side::Upper => chain_number_pairs(&d.upper_pairs(), kind, Semantics::Enhanced),
        Side::Lower => chain_number_pairs(&d.lower_pairs(), kind, Semantics::Proper),
    }
}
