use proptest::prelude::*;

use ptloc_core::lattice::{check_prime_point_duality, open_set_lattice, sobrification};
use ptloc_core::mask::SubsetMask;
use ptloc_core::reconstruct::verify_reconstruction;
use ptloc_core::topology::{are_homeomorphic, FiniteSpace, Preorder};

/// A random preorder on up to `max` points, from a random relation closed
/// reflexively and transitively.
fn preorder(max: usize) -> impl Strategy<Value = Preorder> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n * n)
                .filter(|&i| bits[i] && (i / n != i % n))
                .map(|i| (i / n, i % n))
                .collect();
            Preorder::closure_of(n, &pairs).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_closure_operator(order in preorder(6), bits in any::<u64>()) {
        let x = FiniteSpace::from_preorder(&order);
        let s = SubsetMask::from_bits(bits).intersection(x.full());
        let c = x.closure(s);
        prop_assert!(s.is_subset_of(c));
        prop_assert_eq!(x.closure(c), c);
        prop_assert!(x.interior(s).is_subset_of(s));
        prop_assert_eq!(x.interior(x.interior(s)), x.interior(s));
    }

    #[test]
    fn relabelling_preserves_homeomorphism_type(
        (order, perm) in preorder(6).prop_flat_map(|o| { let n = o.len(); (Just(o), permutation(n)) })
    ) {
        let x = FiniteSpace::from_preorder(&order);
        let y = x.permuted(&perm);
        let map = are_homeomorphic(&x, &y);
        prop_assert!(map.is_some());
        let map = map.unwrap();
        for &u in x.opens() {
            prop_assert!(y.is_open(FiniteSpace::map_subset(&map, u)));
        }
    }

    #[test]
    fn pipeline_recovers_sobrification(order in preorder(6)) {
        let x = FiniteSpace::from_preorder(&order);
        let report = verify_reconstruction(&x).unwrap();
        prop_assert!(report.all_ok());
        prop_assert_eq!(report.homeomorphic_to_input, order.is_partial_order());
        let sob = sobrification(&x);
        prop_assert!(report.stage_invariants_hold(sob.space.len()));
    }

    #[test]
    fn sobrification_is_idempotent(order in preorder(5)) {
        let x = FiniteSpace::from_preorder(&order);
        let once = sobrification(&x).space;
        let twice = sobrification(&once).space;
        prop_assert!(are_homeomorphic(&once, &twice).is_some());
        prop_assert!(check_prime_point_duality(&open_set_lattice(&x)).is_ok());
    }
}
