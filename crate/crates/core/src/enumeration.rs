//! Exhaustive enumeration over S_n: distribution tables, symmetry checks,
//! maximum-nesting counts against their closed form, Catalan counts, and
//! the bijection from non-crossing permutations to non-crossing partitions.
//!
//! Enumeration streams permutations in lexicographic order and never
//! materializes S_n. Counting is parallel over contiguous rank blocks;
//! block tallies merge associatively, so the result is independent of the
//! block layout and worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::perm::{degree_class_string, degree_classes, Permutation};
use crate::stats::{crossing_number, nesting_number, ChainKind};

/// Practical bound for exhaustive runs (12! ≈ 4.8e8).
pub const MAX_ENUM_N: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("n = {0} out of range 1..={1}")]
    NOutOfRange(usize, usize),
    #[error("n must be positive")]
    ZeroN,
    #[error("permutation has a 2-crossing; only non-crossing permutations map to partitions")]
    HasCrossing,
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic successor in place; false when `image` was the last one.
fn next_permutation(image: &mut [usize]) -> bool {
    let n = image.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| image[i] < image[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| image[j] > image[i]).unwrap();
    image.swap(i, j);
    image[i + 1..].reverse();
    true
}

/// The permutation of rank `rank` (0-based) in lexicographic order, via the
/// factorial number system.
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    let mut available: Vec<usize> = (1..=n).collect();
    let mut image = Vec::with_capacity(n);
    for pos in (0..n).rev() {
        let f = factorial(pos);
        let idx = (rank / f) as usize;
        rank %= f;
        image.push(available.remove(idx));
    }
    Permutation::from_image_unchecked(image)
}

/// Streams all of S_n in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_image_unchecked(current))
    }
}

pub fn iterate_permutations(n: usize) -> Result<Permutations, EnumError> {
    if !(1..=MAX_ENUM_N).contains(&n) {
        return Err(EnumError::NOutOfRange(n, MAX_ENUM_N));
    }
    Ok(Permutations {
        next: Some((1..=n).collect()),
    })
}

/// Parallel tally: applies `key` to every permutation of S_n and counts by
/// key. Blocks are contiguous lexicographic rank ranges; merging is
/// associative, so the table is identical to a sequential pass.
pub fn tally_permutations<K, F>(n: usize, key: F) -> Result<BTreeMap<K, u64>, EnumError>
where
    K: Ord + Send,
    F: Fn(&Permutation) -> K + Sync,
{
    if !(1..=MAX_ENUM_N).contains(&n) {
        return Err(EnumError::NOutOfRange(n, MAX_ENUM_N));
    }
    let total = factorial(n);
    let blocks = (rayon::current_num_threads() as u64 * 8).max(1);
    let block_len = total.div_ceil(blocks);
    let starts: Vec<u64> = (0..blocks).map(|b| b * block_len).filter(|&s| s < total).collect();
    let merged = starts
        .into_par_iter()
        .map(|start| {
            let len = block_len.min(total - start);
            let mut image = unrank(n, start).image().to_vec();
            let mut local: BTreeMap<K, u64> = BTreeMap::new();
            for step in 0..len {
                let perm = Permutation::from_image_unchecked(image.clone());
                *local.entry(key(&perm)).or_insert(0) += 1;
                if step + 1 < len {
                    next_permutation(&mut image);
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(merged)
}

/// A count table over S_n; counts always sum to n!.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable<K> {
    pub n: usize,
    pub entries: BTreeMap<K, u64>,
}

impl<K: Ord> DistributionTable<K> {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Counts permutations of S_n by crossing (or nesting) number.
pub fn crossing_distribution(
    n: usize,
    stat: ChainKind,
) -> Result<DistributionTable<usize>, EnumError> {
    let entries = tally_permutations(n, |p| match stat {
        ChainKind::Crossing => crossing_number(p),
        ChainKind::Nesting => nesting_number(p),
    })?;
    Ok(DistributionTable { n, entries })
}

/// Key of the joint table: `(Cr, Ne, optional degree-class string)`.
pub type JointKey = (usize, usize, Option<String>);

/// Counts by `(Cr, Ne)`, optionally refined by the degree-class string.
pub fn joint_distribution(
    n: usize,
    refine: bool,
) -> Result<DistributionTable<JointKey>, EnumError> {
    let bound = if refine { 7 } else { 8 };
    if n < 1 || n > bound {
        return Err(EnumError::NOutOfRange(n, bound));
    }
    let entries = tally_permutations(n, |p| {
        let cls = refine.then(|| degree_class_string(&degree_classes(p)));
        (crossing_number(p), nesting_number(p), cls)
    })?;
    Ok(DistributionTable { n, entries })
}

/// Result of a symmetry check over the joint distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub n: usize,
    pub refined: bool,
    pub violations: Vec<String>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the joint distribution is symmetric under swapping the
/// crossing and nesting numbers within every degree-class key.
pub fn verify_symmetry(n: usize, refine: bool) -> Result<SymmetryReport, EnumError> {
    let table = joint_distribution(n, refine)?;
    let mut violations = Vec::new();
    for ((i, j, d), &count) in &table.entries {
        let mirror = table
            .entries
            .get(&(*j, *i, d.clone()))
            .copied()
            .unwrap_or(0);
        if mirror != count {
            violations.push(format!(
                "n={n} (cr={i}, ne={j}, class={}) has {count} but mirror has {mirror}",
                d.as_deref().unwrap_or("-")
            ));
        }
    }
    Ok(SymmetryReport {
        n,
        refined: refine,
        violations,
    })
}

/// Counts permutations of S_n whose nesting number is the maximum ⌈n/2⌉.
pub fn max_nesting_count(n: usize) -> Result<u64, EnumError> {
    if !(1..=9).contains(&n) {
        return Err(EnumError::NOutOfRange(n, 9));
    }
    let target = n.div_ceil(2);
    let table = tally_permutations(n, |p| nesting_number(p) == target)?;
    Ok(table.get(&true).copied().unwrap_or(0))
}

/// Counts permutations of S_n whose crossing number is the maximum ⌈n/2⌉.
pub fn max_crossing_count(n: usize) -> Result<u64, EnumError> {
    if !(1..=9).contains(&n) {
        return Err(EnumError::NOutOfRange(n, 9));
    }
    let target = n.div_ceil(2);
    let table = tally_permutations(n, |p| crossing_number(p) == target)?;
    Ok(table.get(&true).copied().unwrap_or(0))
}

/// Closed form for the number of permutations with a maximum nesting:
/// `m!` for `n = 2m+1`, `2(m+1)! − (m−1)! − 1` for `n = 2m`.
pub fn max_nesting_closed_form(n: usize) -> Result<u64, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroN);
    }
    let m = n / 2;
    if n % 2 == 1 {
        Ok(factorial(m))
    } else {
        Ok(2 * factorial(m + 1) - factorial(m - 1) - 1)
    }
}

/// The n-th Catalan number via the product formula.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// A partition of `{1..n}` into disjoint nonempty blocks, stored
/// canonically (blocks sorted by minimum, elements ascending).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let p = SetPartition { n, blocks };
        debug_assert!(p.is_valid());
        p
    }

    fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        for b in &self.blocks {
            if b.is_empty() {
                return false;
            }
            for &v in b {
                if v < 1 || v > self.n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        let mut block_of = vec![0usize; self.n + 1];
        for (idx, b) in self.blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = idx;
            }
        }
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if block_of[a] == block_of[b] {
                    continue;
                }
                for c in b + 1..=self.n {
                    if block_of[c] != block_of[a] {
                        continue;
                    }
                    for d in c + 1..=self.n {
                        if block_of[d] == block_of[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// All set partitions of `{1..n}` via restricted growth strings.
    pub fn all(n: usize) -> Vec<SetPartition> {
        fn go(rgs: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<SetPartition>) {
            if rgs.len() == n {
                let blocks_count = max + 1;
                let mut blocks = vec![Vec::new(); blocks_count];
                for (i, &b) in rgs.iter().enumerate() {
                    blocks[b].push(i + 1);
                }
                out.push(SetPartition::new(n, blocks));
                return;
            }
            for b in 0..=max + 1 {
                rgs.push(b);
                go(rgs, max.max(b), n, out);
                rgs.pop();
            }
        }
        if n == 0 {
            return vec![SetPartition {
                n: 0,
                blocks: Vec::new(),
            }];
        }
        let mut out = Vec::new();
        go(&mut vec![0], 0, n, &mut out);
        out
    }
}

/// Maps a non-crossing permutation to the set partition whose blocks are
/// the orbits of the lower arcs; loops and upper arcs contribute only
/// singleton membership. Rejects permutations with a 2-crossing.
pub fn noncrossing_to_partition(perm: &Permutation) -> Result<SetPartition, EnumError> {
    if crossing_number(perm) != 1 {
        return Err(EnumError::HasCrossing);
    }
    let n = perm.n();
    // union-find over lower arcs
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for a in 1..=n {
        let s = perm.apply(a);
        if s < a {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, s));
            parent[ra] = rb;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=n {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    Ok(SetPartition::new(n, groups.into_values().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    #[test]
    fn iterate_examples() {
        let one: Vec<_> = iterate_permutations(1).unwrap().collect();
        assert_eq!(one, vec![Permutation::identity(1)]);

        let three: Vec<_> = iterate_permutations(3).unwrap().collect();
        assert_eq!(three.len(), 6);
        assert_eq!(three[0], parse_permutation("1 2 3").unwrap());
        assert_eq!(three[5], parse_permutation("3 2 1").unwrap());

        assert_eq!(iterate_permutations(5).unwrap().count() as u64, factorial(5));
        assert!(iterate_permutations(0).is_err());
        assert!(iterate_permutations(13).is_err());
    }

    #[test]
    fn unrank_agrees_with_iteration() {
        let all: Vec<_> = iterate_permutations(5).unwrap().collect();
        for (rank, perm) in all.iter().enumerate() {
            assert_eq!(&unrank(5, rank as u64), perm);
        }
    }

    #[test]
    fn crossing_distribution_small_rows() {
        let t = crossing_distribution(4, ChainKind::Crossing).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(1, 14), (2, 10)]));
        assert_eq!(t.total(), factorial(4));

        let t = crossing_distribution(6, ChainKind::Crossing).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(1, 132), (2, 543), (3, 45)]));
        assert_eq!(t.total(), factorial(6));
    }

    #[test]
    fn nesting_distribution_matches_crossing() {
        // corollary of the symmetric joint distribution
        for n in 1..=6 {
            assert_eq!(
                crossing_distribution(n, ChainKind::Crossing).unwrap(),
                crossing_distribution(n, ChainKind::Nesting).unwrap()
            );
        }
    }

    #[test]
    fn joint_distribution_small() {
        let t = joint_distribution(3, false).unwrap();
        assert_eq!(
            t.entries,
            BTreeMap::from([((1, 1, None), 4), ((2, 1, None), 1), ((1, 2, None), 1)])
        );

        let t = joint_distribution(3, true).unwrap();
        assert_eq!(t.entries.get(&(2, 1, Some("OUC".into()))), Some(&1));
        assert_eq!(t.entries.get(&(1, 2, Some("OUC".into()))), Some(&1));

        let t = joint_distribution(1, false).unwrap();
        assert_eq!(t.entries, BTreeMap::from([((1, 1, None), 1)]));

        assert!(joint_distribution(8, true).is_err());
        assert!(joint_distribution(9, false).is_err());
    }

    #[test]
    fn symmetry_small() {
        assert!(verify_symmetry(1, false).unwrap().passed());
        for n in 1..=5 {
            assert!(verify_symmetry(n, true).unwrap().passed());
            assert!(verify_symmetry(n, false).unwrap().passed());
        }
    }

    #[test]
    fn max_nesting_counts_and_closed_form() {
        assert_eq!(max_nesting_count(6).unwrap(), 45);
        assert_eq!(max_nesting_count(7).unwrap(), 6);
        assert_eq!(max_nesting_closed_form(8).unwrap(), 233);
        assert_eq!(max_nesting_closed_form(5).unwrap(), 2);
        assert_eq!(max_nesting_closed_form(4).unwrap(), 10);
        assert!(max_nesting_closed_form(0).is_err());
        for n in 2..=7 {
            assert_eq!(
                max_nesting_count(n).unwrap(),
                max_nesting_closed_form(n).unwrap(),
                "n = {n}"
            );
            assert_eq!(max_crossing_count(n).unwrap(), max_nesting_count(n).unwrap());
        }
    }

    #[test]
    fn catalan_values() {
        let values: Vec<u64> = (0..=9).map(catalan).collect();
        assert_eq!(values, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn catalan_column_small() {
        for n in 1..=6 {
            let t = crossing_distribution(n, ChainKind::Crossing).unwrap();
            assert_eq!(t.entries.get(&1), Some(&catalan(n)));
        }
    }

    #[test]
    fn noncrossing_partition_examples() {
        let p = noncrossing_to_partition(&parse_permutation("3 1 2").unwrap()).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2, 3]]);

        let p = noncrossing_to_partition(&parse_permutation("1 2 3").unwrap()).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![2], vec![3]]);

        let p = noncrossing_to_partition(&parse_permutation("3 2 1").unwrap()).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2]]);

        assert_eq!(
            noncrossing_to_partition(&parse_permutation("2 3 1").unwrap()),
            Err(EnumError::HasCrossing)
        );
    }

    #[test]
    fn noncrossing_bijection_small() {
        use std::collections::BTreeSet;
        for n in 1..=6 {
            let mut images = BTreeSet::new();
            let mut count = 0u64;
            for perm in iterate_permutations(n).unwrap() {
                if crossing_number(&perm) == 1 {
                    count += 1;
                    let part = noncrossing_to_partition(&perm).unwrap();
                    assert!(part.is_noncrossing(), "image of {perm:?} crosses");
                    assert!(images.insert(part), "not injective at {perm:?}");
                }
            }
            let noncrossing_parts: BTreeSet<SetPartition> = SetPartition::all(n)
                .into_iter()
                .filter(|p| p.is_noncrossing())
                .collect();
            assert_eq!(count, catalan(n));
            assert_eq!(images, noncrossing_parts);
        }
    }

    #[test]
    fn bell_numbers_sanity() {
        let bells: Vec<usize> = (0..=6).map(|n| SetPartition::all(n).len()).collect();
        assert_eq!(bells, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn parallel_tally_matches_sequential() {
        let n = 6;
        let parallel = tally_permutations(n, crossing_number).unwrap();
        let mut sequential: BTreeMap<usize, u64> = BTreeMap::new();
        for perm in iterate_permutations(n).unwrap() {
            *sequential.entry(crossing_number(&perm)).or_insert(0) += 1;
        }
        assert_eq!(parallel, sequential);
    }
}
