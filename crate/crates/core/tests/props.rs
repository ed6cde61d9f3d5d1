//! Property tests for the structural invariants: diagram round trips,
//! degree-pair consistency, the involution contract, and mutual inversion
//! of the tableau operations.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crossnest::involution::psi;
use crossnest::perm::{
    arc_diagram, degree_classes, degree_sequence, recombine, vertex_types, Permutation,
};
use crossnest::stats::{crossing_number, exceedance_descent_counts, nesting_number};
use crossnest::tableau::{Cell, PartialTableau};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|image| Permutation::new(image).unwrap())
}

proptest! {
    #[test]
    fn arc_diagram_round_trips(perm in permutation(24)) {
        let d = arc_diagram(&perm);
        prop_assert_eq!(d.upper().len() + d.lower().len(), perm.n());
        let (weak, low) = exceedance_descent_counts(&perm);
        prop_assert_eq!(d.upper().len(), weak);
        prop_assert_eq!(d.lower().len(), low);
        prop_assert_eq!(recombine(&d.upper_pairs(), &d.lower_pairs(), perm.n()).unwrap(), perm);
    }

    #[test]
    fn degree_pairs_consistent_with_types(perm in permutation(24)) {
        let ds = degree_sequence(&perm);
        let types = vertex_types(&perm);
        for (i, ty) in types.iter().enumerate() {
            let (d, dbar) = (ds.upper[i], ds.lower[i]);
            // D(i) + swap(D̄(i)) = (1,1)
            prop_assert_eq!((d.0 + dbar.1, d.1 + dbar.0), (1, 1));
            prop_assert_eq!((d, dbar), ty.degree_pairs());
        }
    }

    #[test]
    fn psi_contract(perm in permutation(12)) {
        let tau = psi(&perm).unwrap();
        prop_assert_eq!(psi(&tau).unwrap(), perm.clone());
        prop_assert_eq!(crossing_number(&tau), nesting_number(&perm));
        prop_assert_eq!(nesting_number(&tau), crossing_number(&perm));
        prop_assert_eq!(degree_classes(&tau), degree_classes(&perm));
    }

    #[test]
    fn chain_numbers_positive(perm in permutation(16)) {
        prop_assert!(crossing_number(&perm) >= 1);
        prop_assert!(nesting_number(&perm) >= 1);
    }
}

/// Builds a random tableau by inserting distinct values.
fn random_tableau(rng: &mut StdRng) -> PartialTableau {
    let mut t = PartialTableau::empty();
    let size = rng.gen_range(0..12);
    let mut values: Vec<usize> = (1..=50).collect();
    for _ in 0..size {
        let v = values.remove(rng.gen_range(0..values.len()));
        t.row_insert(v).unwrap();
    }
    t
}

#[test]
fn insertion_deletion_pairs_mutually_inverse_10k() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10_000 {
        let t = random_tableau(&mut rng);

        // row_insert then reverse_row_insert restores the tableau
        let mut a = t.clone();
        let fresh = loop {
            let v = rng.gen_range(1..=50);
            if !a.rows().iter().any(|r| r.contains(&v)) {
                break v;
            }
        };
        let cell = a.row_insert(fresh).unwrap();
        assert_eq!(a.reverse_row_insert(cell).unwrap(), fresh);
        assert_eq!(a, t);

        // delete_min then reverse_delete_min restores the tableau
        if !t.is_empty() {
            let mut b = t.clone();
            let (vacated, removed) = b.delete_min().unwrap();
            b.reverse_delete_min(vacated, removed).unwrap();
            assert_eq!(b, t);
        }

        // reverse_delete_min then delete_min restores the tableau
        let mut c = t.clone();
        let addable = Cell {
            row: 0,
            col: c.rows().first().map_or(0, |r| r.len()),
        };
        let small = 1;
        if c.is_empty() || small < c.rows()[0][0] {
            c.reverse_delete_min(addable, small).unwrap();
            let (vac, rem) = c.delete_min().unwrap();
            assert_eq!((vac, rem), (addable, small));
            assert_eq!(c, t);
        }
    }
}
