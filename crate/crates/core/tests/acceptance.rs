//! Acceptance suite. Each test exercises one acceptance criterion at full
//! scale and prints a pass line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crossnest::enumeration::{
    catalan, crossing_distribution, factorial, iterate_permutations, max_crossing_count,
    max_nesting_closed_form, max_nesting_count, noncrossing_to_partition, verify_symmetry,
    SetPartition,
};
use crossnest::involution::psi;
use crossnest::perm::{arc_diagram, degree_classes, parse_permutation, Permutation};
use crossnest::stats::{
    brute_force_chain_number, chain_number, crossing_number, nesting_number, ChainKind,
    ChainQuery, Semantics,
};
use crossnest::tableau::{
    all_partial_matchings, conjugate_oscillating, matching_to_oscillating,
    oscillating_to_matching,
};

fn random_permutation(n: usize, rng: &mut StdRng) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(rng);
    Permutation::new(image).unwrap()
}

fn figure_perm() -> Permutation {
    parse_permutation("9 5 6 7 8 3 2 1 4 12 11 10").unwrap()
}

/// Every entry of the published crossing-number table for n = 1..9.
const CROSSING_TABLE: &[(usize, &[u64])] = &[
    (1, &[1]),
    (2, &[2]),
    (3, &[5, 1]),
    (4, &[14, 10]),
    (5, &[42, 76, 2]),
    (6, &[132, 543, 45]),
    (7, &[429, 3904, 701, 6]),
    (8, &[1430, 29034, 9623, 233]),
    (9, &[4862, 225753, 126327, 5914, 24]),
];

#[test]
fn criterion_1_crossing_table_reproduction() {
    let result = crossnest::cli::run(["crossnest", "table", "--stat", "crossing", "--max-n", "9"]);
    assert_eq!(result.exit_code, 0);
    let mut rows: Vec<(usize, usize, u64)> = Vec::new();
    for line in result.payload.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        rows.push((f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap()));
    }
    for &(n, expected) in CROSSING_TABLE {
        let got: Vec<(usize, u64)> = rows
            .iter()
            .filter(|&&(rn, _, _)| rn == n)
            .map(|&(_, k, c)| (k, c))
            .collect();
        let want: Vec<(usize, u64)> = expected
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1, c))
            .collect();
        assert_eq!(got, want, "crossing table row n = {n}");
        assert_eq!(
            got.iter().map(|&(_, c)| c).sum::<u64>(),
            factorial(n),
            "row sum n = {n}"
        );
    }
    println!("[acceptance] criterion 1 (crossing table n<=9 reproduced exactly): PASS");
}

#[test]
fn criterion_2_catalan_column() {
    let expected: [u64; 9] = [1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    for n in 1..=9usize {
        let table = crossing_distribution(n, ChainKind::Crossing).unwrap();
        let col = table.entries.get(&1).copied().unwrap_or(0);
        assert_eq!(col, catalan(n), "catalan column n = {n}");
        assert_eq!(col, expected[n - 1]);
    }
    println!("[acceptance] criterion 2 (non-crossing column equals catalan, n=1..9): PASS");
}

#[test]
fn criterion_3_max_nesting_theorem() {
    let expected: [(usize, u64); 6] = [(4, 10), (5, 2), (6, 45), (7, 6), (8, 233), (9, 24)];
    for n in 2..=9usize {
        let brute = max_nesting_count(n).unwrap();
        let closed = max_nesting_closed_form(n).unwrap();
        let crossings = max_crossing_count(n).unwrap();
        assert_eq!(brute, closed, "closed form n = {n}");
        assert_eq!(brute, crossings, "crossing symmetry n = {n}");
    }
    for (n, count) in expected {
        assert_eq!(max_nesting_count(n).unwrap(), count, "n = {n}");
    }
    println!("[acceptance] criterion 3 (max-nesting counts match closed form and max-crossing, n=2..9): PASS");
}

#[test]
fn criterion_4_joint_distribution_symmetry() {
    for n in 1..=7 {
        let report = verify_symmetry(n, true).unwrap();
        assert!(report.passed(), "refined symmetry n = {n}: {:?}", report.violations);
    }
    let report = verify_symmetry(8, false).unwrap();
    assert!(report.passed(), "unrefined symmetry n = 8: {:?}", report.violations);
    println!("[acceptance] criterion 4 (joint distribution symmetric: refined n<=7, unrefined n=8): PASS");
}

fn check_psi(perm: &Permutation) {
    let tau = psi(perm).unwrap();
    assert_eq!(psi(&tau).unwrap(), *perm, "involution failed at {perm:?}");
    assert_eq!(crossing_number(&tau), nesting_number(perm), "cr swap at {perm:?}");
    assert_eq!(nesting_number(&tau), crossing_number(perm), "ne swap at {perm:?}");
    assert_eq!(degree_classes(&tau), degree_classes(perm), "degree at {perm:?}");
}

#[test]
fn criterion_5_involution_suite() {
    for n in 1..=7 {
        for perm in iterate_permutations(n).unwrap() {
            check_psi(&perm);
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5150);
    for _ in 0..10_000 {
        let n = rng.gen_range(8..=12);
        check_psi(&random_permutation(n, &mut rng));
    }
    // the published worked instance
    let sigma = figure_perm();
    assert_eq!((crossing_number(&sigma), nesting_number(&sigma)), (4, 3));
    let tau = psi(&sigma).unwrap();
    assert_eq!((crossing_number(&tau), nesting_number(&tau)), (3, 4));
    assert_eq!(degree_classes(&tau), degree_classes(&sigma));
    println!("[acceptance] criterion 5 (involution, swap, degree preservation: n<=7 exhaustive + 10^4 random n<=12): PASS");
}

fn check_oracle(perm: &Permutation) {
    let d = arc_diagram(perm);
    for (arcs, sem) in [
        (d.upper_pairs(), Semantics::Enhanced),
        (d.lower_pairs(), Semantics::Proper),
    ] {
        for kind in [ChainKind::Crossing, ChainKind::Nesting] {
            let q = ChainQuery::from_pairs(arcs.clone(), kind, sem);
            assert_eq!(
                chain_number(&q),
                brute_force_chain_number(&q).unwrap(),
                "oracle mismatch at {perm:?} ({kind:?}, {sem:?})"
            );
        }
    }
}

#[test]
fn criterion_6_oracle_equivalence() {
    for n in 1..=7 {
        for perm in iterate_permutations(n).unwrap() {
            check_oracle(&perm);
        }
    }
    let mut rng = StdRng::seed_from_u64(0xCAB);
    for _ in 0..10_000 {
        let n = rng.gen_range(8..=14);
        check_oracle(&random_permutation(n, &mut rng));
    }
    println!("[acceptance] criterion 6 (sweep equals brute-force oracle, all sides and kinds): PASS");
}

#[test]
fn criterion_7_tableau_layer() {
    for n in 0..=10 {
        for m in all_partial_matchings(n) {
            let o = matching_to_oscillating(&m).unwrap();
            assert_eq!(oscillating_to_matching(&o).unwrap(), m, "round trip {m:?}");

            // shape maxima against the independent subset oracle
            let cr_oracle = brute_force_chain_number(&ChainQuery::from_pairs(
                m.edges().to_vec(),
                ChainKind::Crossing,
                Semantics::Proper,
            ))
            .unwrap();
            let ne_oracle = brute_force_chain_number(&ChainQuery::from_pairs(
                m.edges().to_vec(),
                ChainKind::Nesting,
                Semantics::Proper,
            ))
            .unwrap();
            assert_eq!(o.max_cols(), cr_oracle, "columns vs crossings {m:?}");
            assert_eq!(o.max_rows(), ne_oracle, "rows vs nestings {m:?}");

            let m2 = oscillating_to_matching(&conjugate_oscillating(&o)).unwrap();
            assert_eq!(m2.crossing_number(), ne_oracle, "conjugation swap {m:?}");
            assert_eq!(m2.nesting_number(), cr_oracle, "conjugation swap {m:?}");
        }
    }
    println!("[acceptance] criterion 7 (matching<->oscillating round trip, chain maxima, conjugation swap, N<=10): PASS");
}

#[test]
fn criterion_8_noncrossing_partition_bijection() {
    for n in 1..=8 {
        let mut images = BTreeSet::new();
        let mut noncrossing_perms = 0u64;
        for perm in iterate_permutations(n).unwrap() {
            if crossing_number(&perm) == 1 {
                noncrossing_perms += 1;
                let part = noncrossing_to_partition(&perm).unwrap();
                assert!(part.is_noncrossing(), "image of {perm:?} is crossing");
                assert!(images.insert(part), "map not injective at {perm:?}");
            }
        }
        let noncrossing_partitions: BTreeSet<SetPartition> = SetPartition::all(n)
            .into_iter()
            .filter(|p| p.is_noncrossing())
            .collect();
        assert_eq!(noncrossing_perms, catalan(n), "domain size n = {n}");
        assert_eq!(noncrossing_partitions.len() as u64, catalan(n), "image size n = {n}");
        assert_eq!(images, noncrossing_partitions, "image mismatch n = {n}");
    }
    println!("[acceptance] criterion 8 (bijection onto non-crossing partitions, n<=8, both sides catalan): PASS");
}
