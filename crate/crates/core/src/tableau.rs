//! Partitions, partial tableaux, and the matching/oscillating-tableau
//! bijection.
//!
//! A partial matching on `1..N` is encoded as a sequence of partition
//! shapes `λ⁰..λᴺ`, starting and ending empty: an opener inserts its
//! partner into a tableau by row insertion (adding a box), a closer removes
//! the minimal entry by a jeu-de-taquin slide (removing a box), an isolated
//! vertex leaves the shape untouched. Conjugating every shape in the
//! sequence swaps the crossing and nesting numbers of the matching while
//! preserving which vertices are openers, closers, and isolated.

use std::fmt;

use thiserror::Error;

use crate::stats::{chain_number_pairs, ChainKind, Semantics};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("parts must be weakly decreasing and positive")]
    BadPartition,
    #[error("entry {0} already present in tableau")]
    DuplicateEntry(usize),
    #[error("cell ({0}, {1}) is not a removable corner")]
    NotACorner(usize, usize),
    #[error("cell ({0}, {1}) is not an addable cell")]
    NotAddable(usize, usize),
    #[error("cannot delete from an empty tableau")]
    EmptyTableau,
    #[error("value {0} is not smaller than every tableau entry")]
    NotMinimal(usize),
    #[error("shape sequence must start and end empty and change by at most one box")]
    BadShapeSequence,
    #[error("matching edges are not pairwise disjoint")]
    EdgesNotDisjoint,
    #[error("edge endpoint {0} is out of range 1..={1}")]
    EdgeOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) must satisfy left < right")]
    BadEdge(usize, usize),
    #[error("closer {0} did not find its label at the tableau head")]
    CorruptMatching(usize),
}

/// A partition of a nonnegative integer: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return Err(TableauError::BadPartition);
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row count.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Column count (the first part).
    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transposes the Young diagram.
    pub fn conjugate(&self) -> IntegerPartition {
        let cols = self.cols();
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        IntegerPartition { parts }
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A cell of a Young diagram, 0-indexed.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// A tableau with distinct positive entries, rows and columns strictly
/// increasing, row lengths weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PartialTableau {
    rows: Vec<Vec<usize>>,
}

impl PartialTableau {
    pub fn empty() -> Self {
        PartialTableau { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        let t = PartialTableau { rows };
        debug_assert!(t.is_valid());
        t
    }

    fn is_valid(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() || row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(b, a)| b <= a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    fn contains(&self, x: usize) -> bool {
        self.rows.iter().any(|r| r.binary_search(&x).is_ok())
    }

    /// Classical row insertion by bumping; returns the new corner cell.
    pub fn row_insert(&mut self, x: usize) -> Result<Cell, TableauError> {
        if self.contains(x) {
            return Err(TableauError::DuplicateEntry(x));
        }
        let mut carry = x;
        for r in 0..self.rows.len() {
            let row = &mut self.rows[r];
            let pos = row.partition_point(|&e| e < carry);
            if pos == row.len() {
                row.push(carry);
                return Ok(Cell {
                    row: r,
                    col: row.len() - 1,
                });
            }
            std::mem::swap(&mut carry, &mut row[pos]);
        }
        self.rows.push(vec![carry]);
        Ok(Cell {
            row: self.rows.len() - 1,
            col: 0,
        })
    }

    fn is_removable_corner(&self, cell: Cell) -> bool {
        cell.row < self.rows.len()
            && cell.col + 1 == self.rows[cell.row].len()
            && (cell.row + 1 == self.rows.len() || self.rows[cell.row + 1].len() <= cell.col)
    }

    /// Inverse bumping from a removable corner; returns the ejected value.
    pub fn reverse_row_insert(&mut self, corner: Cell) -> Result<usize, TableauError> {
        if !self.is_removable_corner(corner) {
            return Err(TableauError::NotACorner(corner.row, corner.col));
        }
        let mut carry = self.rows[corner.row].pop().unwrap();
        if self.rows[corner.row].is_empty() {
            self.rows.pop();
        }
        for r in (0..corner.row).rev() {
            let row = &mut self.rows[r];
            // rightmost entry smaller than the carried value
            let pos = row.partition_point(|&e| e < carry);
            debug_assert!(pos > 0, "reverse bump found no smaller entry");
            std::mem::swap(&mut carry, &mut row[pos - 1]);
        }
        Ok(carry)
    }

    /// Removes the minimum entry (always at the head cell) and slides the
    /// hole to an outer corner; returns the vacated corner.
    pub fn delete_min(&mut self) -> Result<(Cell, usize), TableauError> {
        if self.rows.is_empty() {
            return Err(TableauError::EmptyTableau);
        }
        let removed = self.rows[0][0];
        let (mut r, mut c) = (0, 0);
        loop {
            let right = self
                .rows
                .get(r)
                .and_then(|row| row.get(c + 1))
                .copied();
            let below = self
                .rows
                .get(r + 1)
                .and_then(|row| row.get(c))
                .copied();
            match (right, below) {
                (None, None) => break,
                (Some(v), None) => {
                    self.rows[r][c] = v;
                    c += 1;
                }
                (None, Some(v)) => {
                    self.rows[r][c] = v;
                    r += 1;
                }
                (Some(a), Some(b)) => {
                    if a < b {
                        self.rows[r][c] = a;
                        c += 1;
                    } else {
                        self.rows[r][c] = b;
                        r += 1;
                    }
                }
            }
        }
        self.rows[r].pop();
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        Ok((Cell { row: r, col: c }, removed))
    }

    fn is_addable(&self, cell: Cell) -> bool {
        if cell.row > self.rows.len() {
            return false;
        }
        let row_len = self.rows.get(cell.row).map_or(0, |r| r.len());
        cell.col == row_len
            && (cell.row == 0 || self.rows[cell.row - 1].len() > cell.col)
    }

    /// Inverse slide: opens a hole at `vacated`, pulls entries toward it
    /// until the hole reaches the head, then places `x` there.
    pub fn reverse_delete_min(&mut self, vacated: Cell, x: usize) -> Result<(), TableauError> {
        if !self.is_addable(vacated) {
            return Err(TableauError::NotAddable(vacated.row, vacated.col));
        }
        if !self.rows.is_empty() && x >= self.rows[0][0] {
            return Err(TableauError::NotMinimal(x));
        }
        if vacated.row == self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[vacated.row].push(0); // placeholder hole
        let (mut r, mut c) = (vacated.row, vacated.col);
        while (r, c) != (0, 0) {
            let left = if c > 0 { Some(self.rows[r][c - 1]) } else { None };
            let above = if r > 0 && self.rows[r - 1].len() > c {
                Some(self.rows[r - 1][c])
            } else {
                None
            };
            match (left, above) {
                (Some(a), Some(b)) => {
                    if a > b {
                        self.rows[r][c] = a;
                        c -= 1;
                    } else {
                        self.rows[r][c] = b;
                        r -= 1;
                    }
                }
                (Some(a), None) => {
                    self.rows[r][c] = a;
                    c -= 1;
                }
                (None, Some(b)) => {
                    self.rows[r][c] = b;
                    r -= 1;
                }
                (None, None) => unreachable!("hole cannot move past the head"),
            }
        }
        self.rows[0][0] = x;
        debug_assert!(self.is_valid());
        Ok(())
    }
}

/// A partial matching on `1..n`: pairwise disjoint edges `(i, j)` with
/// `i < j`; unmatched vertices are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMatching {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl PartialMatching {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, TableauError> {
        let mut used = vec![false; n + 1];
        for &(i, j) in &edges {
            if i >= j {
                return Err(TableauError::BadEdge(i, j));
            }
            for v in [i, j] {
                if v < 1 || v > n {
                    return Err(TableauError::EdgeOutOfRange(v, n));
                }
                if used[v] {
                    return Err(TableauError::EdgesNotDisjoint);
                }
                used[v] = true;
            }
        }
        edges.sort_unstable();
        Ok(PartialMatching { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// 1-indexed partner lookup: `partner[v] = Some(w)` if `(v,w)` or
    /// `(w,v)` is an edge.
    pub fn partners(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.n + 1];
        for &(i, j) in &self.edges {
            p[i] = Some(j);
            p[j] = Some(i);
        }
        p
    }

    /// Proper crossing number of the matching viewed as an arc diagram.
    pub fn crossing_number(&self) -> usize {
        chain_number_pairs(&self.edges, ChainKind::Crossing, Semantics::Proper)
    }

    /// Proper nesting number of the matching.
    pub fn nesting_number(&self) -> usize {
        chain_number_pairs(&self.edges, ChainKind::Nesting, Semantics::Proper)
    }
}

/// A shape sequence `λ⁰..λᴺ` with empty ends, changing by at most one box
/// per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillatingTableau {
    shapes: Vec<IntegerPartition>,
}

/// Difference between two consecutive shapes.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Same,
    Added(Cell),
    Removed(Cell),
}

/// Classifies the step from `a` to `b`, rejecting anything other than a
/// one-box change or equality.
pub fn step_between(a: &IntegerPartition, b: &IntegerPartition) -> Result<Step, TableauError> {
    let (ap, bp) = (a.parts(), b.parts());
    let rows = ap.len().max(bp.len());
    let mut diff = None;
    for r in 0..rows {
        let x = ap.get(r).copied().unwrap_or(0);
        let y = bp.get(r).copied().unwrap_or(0);
        match (y as isize) - (x as isize) {
            0 => {}
            1 if diff.is_none() => diff = Some(Step::Added(Cell { row: r, col: x })),
            -1 if diff.is_none() => diff = Some(Step::Removed(Cell { row: r, col: y })),
            _ => return Err(TableauError::BadShapeSequence),
        }
    }
    Ok(diff.unwrap_or(Step::Same))
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<IntegerPartition>) -> Result<Self, TableauError> {
        if shapes.is_empty()
            || shapes.first().unwrap().size() != 0
            || shapes.last().unwrap().size() != 0
        {
            return Err(TableauError::BadShapeSequence);
        }
        for w in shapes.windows(2) {
            step_between(&w[0], &w[1])?;
        }
        Ok(OscillatingTableau { shapes })
    }

    pub fn shapes(&self) -> &[IntegerPartition] {
        &self.shapes
    }

    /// Number of matching vertices encoded (one per step).
    pub fn steps(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(|s| s.rows()).max().unwrap_or(0)
    }

    pub fn max_cols(&self) -> usize {
        self.shapes.iter().map(|s| s.cols()).max().unwrap_or(0)
    }
}

/// Shape-wise conjugation; involutive, preserves the step pattern.
pub fn conjugate_oscillating(o: &OscillatingTableau) -> OscillatingTableau {
    OscillatingTableau {
        shapes: o.shapes.iter().map(|s| s.conjugate()).collect(),
    }
}

/// Scans the matching left to right, inserting each opener's partner and
/// deleting at each closer, recording the shape after each step.
pub fn matching_to_oscillating(m: &PartialMatching) -> Result<OscillatingTableau, TableauError> {
    let partners = m.partners();
    let mut t = PartialTableau::empty();
    let mut shapes = Vec::with_capacity(m.n() + 1);
    shapes.push(IntegerPartition::empty());
    for (i, partner) in partners.iter().enumerate().skip(1) {
        match *partner {
            Some(j) if j > i => {
                t.row_insert(j)?;
            }
            Some(_) => {
                if t.is_empty() || t.rows()[0][0] != i {
                    return Err(TableauError::CorruptMatching(i));
                }
                t.delete_min()?;
            }
            None => {}
        }
        shapes.push(t.shape());
    }
    debug_assert!(t.is_empty());
    Ok(OscillatingTableau { shapes })
}

/// Exact inverse of [`matching_to_oscillating`]: scans the shape sequence
/// right to left, undoing each insertion or slide.
pub fn oscillating_to_matching(o: &OscillatingTableau) -> Result<PartialMatching, TableauError> {
    let n = o.steps();
    let mut t = PartialTableau::empty();
    let mut edges = Vec::new();
    for i in (1..=n).rev() {
        match step_between(&o.shapes[i - 1], &o.shapes[i])? {
            Step::Same => {}
            Step::Added(cell) => {
                let j = t.reverse_row_insert(cell)?;
                edges.push((i, j));
            }
            Step::Removed(cell) => {
                t.reverse_delete_min(cell, i)?;
            }
        }
    }
    if !t.is_empty() {
        return Err(TableauError::BadShapeSequence);
    }
    PartialMatching::new(n, edges)
}

/// All partial matchings on `1..n`, generated recursively. Intended for
/// exhaustive verification at small `n`.
pub fn all_partial_matchings(n: usize) -> Vec<PartialMatching> {
    fn go(free: &[usize], edges: &mut Vec<(usize, usize)>, n: usize, out: &mut Vec<PartialMatching>) {
        match free.split_first() {
            None => out.push(PartialMatching {
                n,
                edges: {
                    let mut e = edges.clone();
                    e.sort_unstable();
                    e
                },
            }),
            Some((&v, rest)) => {
                // v isolated
                go(rest, edges, n, out);
                // v matched to each later free vertex
                for (k, &w) in rest.iter().enumerate() {
                    let remaining: Vec<usize> = rest
                        .iter()
                        .enumerate()
                        .filter(|&(idx, _)| idx != k)
                        .map(|(_, &x)| x)
                        .collect();
                    edges.push((v, w));
                    go(&remaining, edges, n, out);
                    edges.pop();
                }
            }
        }
    }
    let free: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    go(&free, &mut Vec::new(), n, &mut out);
    out
}
