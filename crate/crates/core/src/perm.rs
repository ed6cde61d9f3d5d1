//! Permutations and their arc diagrams.
//!
//! A permutation `σ` of `{1..n}` is drawn with the vertices `1..n` on a
//! horizontal line. Pairs `(a, σ(a))` with `a ≤ σ(a)` are drawn above the
//! line (upper arcs, where `a = σ(a)` is a loop); the remaining pairs are
//! drawn below with their orientation reversed, so that both sub-diagrams
//! read left-to-right as classical arc diagrams.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("empty permutation")]
    Empty,
    #[error("cannot parse `{0}` as a vertex label")]
    BadToken(String),
    #[error("value {value} at position {position} is out of range 1..={n}")]
    OutOfRange {
        value: usize,
        position: usize,
        n: usize,
    },
    #[error("value {value} repeated at position {position}")]
    Repeated { value: usize, position: usize },
    #[error("vertex {0} has no image")]
    NoImage(usize),
    #[error("vertex {0} has two images")]
    TwoImages(usize),
    #[error("value {0} has two pre-images")]
    TwoPreimages(usize),
}

/// A permutation of `{1..n}` in one-line notation, 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validates that `image` is a bijection on `{1..n}` with `n ≥ 1`.
    pub fn new(image: Vec<usize>) -> Result<Self, PermError> {
        if image.is_empty() {
            return Err(PermError::Empty);
        }
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in image.iter().enumerate() {
            if v < 1 || v > n {
                return Err(PermError::OutOfRange {
                    value: v,
                    position: pos + 1,
                    n,
                });
            }
            if seen[v] {
                return Err(PermError::Repeated {
                    value: v,
                    position: pos + 1,
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Constructor for callers that guarantee validity (e.g. lexicographic
    /// successors of a known-valid permutation).
    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `σ(i)`, 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// The inverse as a 1-indexed image vector: `result[i-1] = σ⁻¹(i)`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.image.len()];
        for (pos, &v) in self.image.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        inv
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.image {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let mut image = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| PermError::BadToken(tok.to_string()))?;
            image.push(v);
        }
        Permutation::new(image)
    }
}

/// Parses one-line notation, whitespace- or comma-separated.
pub fn parse_permutation(text: &str) -> Result<Permutation, PermError> {
    text.parse()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Upper,
    Lower,
}

/// A single arc of the diagram. Upper arcs have `left ≤ right` (equality is
/// a loop); lower arcs are stored orientation-reversed with `left < right`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    pub side: Side,
}

/// The full arc diagram of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    upper: Vec<Arc>,
    lower: Vec<Arc>,
}

impl ArcDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[Arc] {
        &self.upper
    }

    pub fn lower(&self) -> &[Arc] {
        &self.lower
    }

    pub fn upper_pairs(&self) -> Vec<(usize, usize)> {
        self.upper.iter().map(|a| (a.left, a.right)).collect()
    }

    pub fn lower_pairs(&self) -> Vec<(usize, usize)> {
        self.lower.iter().map(|a| (a.left, a.right)).collect()
    }
}

/// Splits `σ` into upper arcs `(a, σ(a))` for the weak exceedances
/// `a ≤ σ(a)` and lower arcs `(σ(a), a)` for the deficiencies, both sorted
/// by left endpoint.
pub fn arc_diagram(perm: &Permutation) -> ArcDiagram {
    let n = perm.n();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for a in 1..=n {
        let s = perm.apply(a);
        if a <= s {
            upper.push(Arc {
                left: a,
                right: s,
                side: Side::Upper,
            });
        } else {
            lower.push(Arc {
                left: s,
                right: a,
                side: Side::Lower,
            });
        }
    }
    lower.sort();
    ArcDiagram { n, upper, lower }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    Opener,
    Closer,
    Loop,
    UpperTransient,
    LowerTransient,
}

impl VertexType {
    /// The `(upper, lower)` degree pairs of this vertex type.
    pub fn degree_pairs(self) -> ((u8, u8), (u8, u8)) {
        match self {
            VertexType::Opener => ((1, 0), (1, 0)),
            VertexType::Closer => ((0, 1), (0, 1)),
            VertexType::Loop | VertexType::UpperTransient => ((1, 1), (0, 0)),
            VertexType::LowerTransient => ((0, 0), (1, 1)),
        }
    }

    pub fn degree_class(self) -> DegreeClass {
        match self {
            VertexType::Opener => DegreeClass::O,
            VertexType::Closer => DegreeClass::C,
            VertexType::Loop | VertexType::UpperTransient => DegreeClass::U,
            VertexType::LowerTransient => DegreeClass::L,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VertexType::Opener => "opener",
            VertexType::Closer => "closer",
            VertexType::Loop => "loop",
            VertexType::UpperTransient => "upper_transient",
            VertexType::LowerTransient => "lower_transient",
        }
    }
}

/// The 4-way per-vertex class determined by the upper degree pair alone.
/// Loops and upper transient vertices share `U`; this is the invariant the
/// crossing-nesting involution preserves.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegreeClass {
    O,
    C,
    U,
    L,
}

impl DegreeClass {
    pub fn as_char(self) -> char {
        match self {
            DegreeClass::O => 'O',
            DegreeClass::C => 'C',
            DegreeClass::U => 'U',
            DegreeClass::L => 'L',
        }
    }
}

/// Renders a class sequence as a compact string, one character per vertex.
pub fn degree_class_string(classes: &[DegreeClass]) -> String {
    classes.iter().map(|c| c.as_char()).collect()
}

/// Per-vertex upper and lower degree pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    pub upper: Vec<(u8, u8)>,
    pub lower: Vec<(u8, u8)>,
}

/// Classifies each vertex: a loop if `σ(i) = i`, otherwise by which sides
/// its outgoing arc (`σ(i)` vs `i`) and incoming arc (`σ⁻¹(i)` vs `i`) lie on.
pub fn vertex_types(perm: &Permutation) -> Vec<VertexType> {
    let inv = perm.inverse();
    (1..=perm.n())
        .map(|i| {
            let out = perm.apply(i);
            let into = inv[i - 1];
            if out == i {
                VertexType::Loop
            } else {
                match (out > i, into < i) {
                    (true, false) => VertexType::Opener,
                    (true, true) => VertexType::UpperTransient,
                    (false, true) => VertexType::Closer,
                    (false, false) => VertexType::LowerTransient,
                }
            }
        })
        .collect()
}

pub fn degree_sequence(perm: &Permutation) -> DegreeSequence {
    let mut upper = Vec::with_capacity(perm.n());
    let mut lower = Vec::with_capacity(perm.n());
    for t in vertex_types(perm) {
        let (d, dbar) = t.degree_pairs();
        upper.push(d);
        lower.push(dbar);
    }
    DegreeSequence { upper, lower }
}

pub fn degree_classes(perm: &Permutation) -> Vec<DegreeClass> {
    vertex_types(perm).into_iter().map(|t| t.degree_class()).collect()
}

/// Rebuilds the permutation from its two arc sets: `σ(l) = r` for upper
/// arcs and `σ(r) = l` for lower arcs. Rejects diagrams that fail to give
/// every vertex exactly one image and one pre-image.
pub fn recombine(
    upper: &[(usize, usize)],
    lower: &[(usize, usize)],
    n: usize,
) -> Result<Permutation, PermError> {
    let mut image = vec![0usize; n];
    let mut set = |src: usize, dst: usize| -> Result<(), PermError> {
        if image[src - 1] != 0 {
            return Err(PermError::TwoImages(src));
        }
        image[src - 1] = dst;
        Ok(())
    };
    for &(l, r) in upper {
        set(l, r)?;
    }
    for &(l, r) in lower {
        set(r, l)?;
    }
    let mut hit = vec![false; n + 1];
    for (pos, &v) in image.iter().enumerate() {
        if v == 0 {
            return Err(PermError::NoImage(pos + 1));
        }
        if hit[v] {
            return Err(PermError::TwoPreimages(v));
        }
        hit[v] = true;
    }
    Permutation::new(image)
}
