//! The crossing-nesting involution on permutations.
//!
//! Pipeline, applied independently to the upper and lower arc diagrams:
//! inflate loop/transient vertices into adjacent vertex pairs so the
//! diagram becomes a partial matching, encode the matching as an
//! oscillating tableau, conjugate every shape, decode, and deflate the
//! copies back. Recombining the two transformed diagrams yields a
//! permutation with crossing and nesting numbers swapped and the per-vertex
//! degree classes unchanged.

use thiserror::Error;

use crate::perm::{arc_diagram, recombine, PermError, Permutation};
use crate::stats::Semantics;
use crate::tableau::{
    conjugate_oscillating, matching_to_oscillating, oscillating_to_matching, PartialMatching,
    TableauError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("vertex {vertex} is the {role} endpoint of two arcs")]
    DuplicateEndpoint { vertex: usize, role: &'static str },
    #[error("loop at vertex {0} is not allowed under proper semantics")]
    LoopInProperDiagram(usize),
    #[error("arc ({0}, {1}) must satisfy left <= right")]
    BadArc(usize, usize),
    #[error("arc endpoint {0} out of range 1..={1}")]
    ArcOutOfRange(usize, usize),
    #[error("matching has {got} vertices, inflation map expects {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("inflated position {position} plays the wrong endpoint role for vertex {vertex}")]
    RoleMismatch { position: usize, vertex: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// One side of an arc diagram, standing alone. Enhanced diagrams may carry
/// loops; proper diagrams may not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidedDiagram {
    n: usize,
    arcs: Vec<(usize, usize)>,
    semantics: Semantics,
}

impl SidedDiagram {
    pub fn new(
        n: usize,
        mut arcs: Vec<(usize, usize)>,
        semantics: Semantics,
    ) -> Result<Self, InvolutionError> {
        let mut left_used = vec![false; n + 1];
        let mut right_used = vec![false; n + 1];
        for &(l, r) in &arcs {
            if l > r {
                return Err(InvolutionError::BadArc(l, r));
            }
            for v in [l, r] {
                if v < 1 || v > n {
                    return Err(InvolutionError::ArcOutOfRange(v, n));
                }
            }
            if l == r && semantics == Semantics::Proper {
                return Err(InvolutionError::LoopInProperDiagram(l));
            }
            if left_used[l] {
                return Err(InvolutionError::DuplicateEndpoint {
                    vertex: l,
                    role: "left",
                });
            }
            if right_used[r] {
                return Err(InvolutionError::DuplicateEndpoint {
                    vertex: r,
                    role: "right",
                });
            }
            left_used[l] = true;
            right_used[r] = true;
        }
        arcs.sort_unstable();
        Ok(SidedDiagram { n, arcs, semantics })
    }

    pub fn upper_of(perm: &Permutation) -> Self {
        let d = arc_diagram(perm);
        SidedDiagram {
            n: perm.n(),
            arcs: d.upper_pairs(),
            semantics: Semantics::Enhanced,
        }
    }

    pub fn lower_of(perm: &Permutation) -> Self {
        let d = arc_diagram(perm);
        SidedDiagram {
            n: perm.n(),
            arcs: d.lower_pairs(),
            semantics: Semantics::Proper,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }
}

/// Records how original vertices map to inflated positions. Split vertices
/// occupy two adjacent positions whose order depends on the semantics:
/// enhanced puts the opener copy (outgoing arc end) first, proper puts the
/// closer copy first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationMap {
    original_n: usize,
    inflated_n: usize,
    forward: Vec<Vec<usize>>,
    semantics: Semantics,
}

impl InflationMap {
    pub fn original_n(&self) -> usize {
        self.original_n
    }

    pub fn inflated_n(&self) -> usize {
        self.inflated_n
    }

    /// Inflated positions of original vertex `v` (1-indexed), in order.
    pub fn positions(&self, v: usize) -> &[usize] {
        &self.forward[v - 1]
    }

    fn left_role_position(&self, v: usize) -> usize {
        let ps = self.positions(v);
        if ps.len() == 1 {
            ps[0]
        } else {
            match self.semantics {
                Semantics::Enhanced => ps[0],
                Semantics::Proper => ps[1],
            }
        }
    }

    fn right_role_position(&self, v: usize) -> usize {
        let ps = self.positions(v);
        if ps.len() == 1 {
            ps[0]
        } else {
            match self.semantics {
                Semantics::Enhanced => ps[1],
                Semantics::Proper => ps[0],
            }
        }
    }
}

/// Splits every doubly-incident vertex into two adjacent copies, turning
/// the diagram into a partial matching on the inflated positions. Loops
/// become arcs joining the two copies of their vertex.
pub fn inflate(d: &SidedDiagram) -> (PartialMatching, InflationMap) {
    let n = d.n;
    let mut has_left = vec![false; n + 1];
    let mut has_right = vec![false; n + 1];
    for &(l, r) in &d.arcs {
        has_left[l] = true;
        has_right[r] = true;
    }
    let mut forward: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut next = 1;
    for v in 1..=n {
        if has_left[v] && has_right[v] {
            forward.push(vec![next, next + 1]);
            next += 2;
        } else {
            forward.push(vec![next]);
            next += 1;
        }
    }
    let map = InflationMap {
        original_n: n,
        inflated_n: next - 1,
        forward,
        semantics: d.semantics,
    };
    let edges: Vec<(usize, usize)> = d
        .arcs
        .iter()
        .map(|&(l, r)| (map.left_role_position(l), map.right_role_position(r)))
        .collect();
    let matching = PartialMatching::new(map.inflated_n, edges)
        .expect("inflation of a valid sided diagram always yields a matching");
    (matching, map)
}

/// Merges inflated copies back into original vertices, validating that each
/// split copy plays the endpoint role the map assigned it.
pub fn deflate(m: &PartialMatching, map: &InflationMap) -> Result<SidedDiagram, InvolutionError> {
    if m.n() != map.inflated_n {
        return Err(InvolutionError::SizeMismatch {
            got: m.n(),
            expected: map.inflated_n,
        });
    }
    // position -> original vertex
    let mut owner = vec![0usize; map.inflated_n + 1];
    for v in 1..=map.original_n {
        for &p in map.positions(v) {
            owner[p] = v;
        }
    }
    // role check: split copies must be matched with the expected role
    let partners = m.partners();
    for v in 1..=map.original_n {
        if map.positions(v).len() == 2 {
            let lp = map.left_role_position(v);
            let rp = map.right_role_position(v);
            match partners[lp] {
                Some(w) if w > lp => {}
                _ => return Err(InvolutionError::RoleMismatch {
                    position: lp,
                    vertex: v,
                }),
            }
            match partners[rp] {
                Some(w) if w < rp => {}
                _ => return Err(InvolutionError::RoleMismatch {
                    position: rp,
                    vertex: v,
                }),
            }
        }
    }
    let arcs: Vec<(usize, usize)> = m
        .edges()
        .iter()
        .map(|&(p, q)| (owner[p], owner[q]))
        .collect();
    SidedDiagram::new(map.original_n, arcs, map.semantics)
}

/// Inflate, conjugate the oscillating-tableau encoding, deflate.
pub fn transform_sided(d: &SidedDiagram) -> Result<SidedDiagram, InvolutionError> {
    let (m, map) = inflate(d);
    let o = matching_to_oscillating(&m)?;
    let m2 = oscillating_to_matching(&conjugate_oscillating(&o))?;
    deflate(&m2, &map)
}

/// The involution: swaps crossing and nesting numbers, preserves the
/// per-vertex degree classes, and is its own inverse.
pub fn psi(perm: &Permutation) -> Result<Permutation, InvolutionError> {
    let upper = transform_sided(&SidedDiagram::upper_of(perm))?;
    let lower = transform_sided(&SidedDiagram::lower_of(perm))?;
    Ok(recombine(upper.arcs(), lower.arcs(), perm.n())?)
}
