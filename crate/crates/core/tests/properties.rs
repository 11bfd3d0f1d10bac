use hyperdual::oracle::{enumerate_elements, DEFAULT_CUTOFF};
use hyperdual::{parse_cycles, OrientedRegularHypermap, Parity, Permutation, PermutationGroup};
use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn perms(count: usize, max_degree: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=max_degree).prop_flat_map(move |d| proptest::collection::vec(perm(d), count))
}

fn pair(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    perms(2, max_degree).prop_map(|mut v| {
        let b = v.pop().unwrap();
        (v.pop().unwrap(), b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cycle_notation_round_trips(p in (1usize..12).prop_flat_map(perm)) {
        let text = p.to_string();
        prop_assert_eq!(parse_cycles(&text, Some(p.degree())).unwrap(), p);
    }

    #[test]
    fn product_is_associative(v in perms(3, 9)) {
        prop_assert_eq!(&(&v[0] * &v[1]) * &v[2], &v[0] * &(&v[1] * &v[2]));
    }

    #[test]
    fn inverse_of_product(v in perms(2, 9)) {
        let lhs = (&v[0] * &v[1]).inverse();
        prop_assert_eq!(lhs, &v[1].inverse() * &v[0].inverse());
        prop_assert!((&v[0] * &v[0].inverse()).is_identity());
    }

    #[test]
    fn right_factor_acts_first(v in perms(2, 9), i in 0usize..9) {
        let i = i % v[0].degree();
        prop_assert_eq!((&v[0] * &v[1]).apply(i), v[0].apply(v[1].apply(i)));
    }

    #[test]
    fn parity_is_a_homomorphism(v in perms(2, 9)) {
        let lhs = (&v[0] * &v[1]).parity();
        prop_assert_eq!(lhs, v[0].parity().combine(v[1].parity()));
        let sign_from_transpositions = (v[0].support_size() - v[0].cycles().len()) % 2;
        prop_assert_eq!(v[0].parity() == Parity::Even, sign_from_transpositions == 0);
    }

    #[test]
    fn power_by_order_is_identity(p in (1usize..12).prop_flat_map(perm)) {
        let k: u64 = p.order().try_into().unwrap();
        prop_assert!(p.pow(k as i64).is_identity());
        prop_assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn element_orders_divide_group_order((x, y) in pair(7)) {
        let g = PermutationGroup::new(vec![x.clone(), y.clone()]).unwrap();
        let order = g.order();
        prop_assert!(order.is_multiple_of(&x.order()));
        prop_assert!(order.is_multiple_of(&(&x * &y).order()));
        prop_assert!(g.contains(&(&x * &y.inverse())).unwrap());
    }

    #[test]
    fn group_order_matches_enumeration((x, y) in pair(6)) {
        let g = PermutationGroup::new(vec![x, y]).unwrap();
        let table = enumerate_elements(&g, DEFAULT_CUTOFF).unwrap();
        prop_assert_eq!(g.order(), BigUint::from(table.len()));
        for e in table.elements().iter().take(20) {
            prop_assert!(g.contains(e).unwrap());
        }
    }

    #[test]
    fn duality_index_is_invariant_under_duality((x, y) in pair(7)) {
        let h = OrientedRegularHypermap::new(x, y).unwrap();
        prop_assert_eq!(h.duality_index(), h.dual().duality_index());
        prop_assert_eq!(h.dual().dual(), h);
    }

    #[test]
    fn unequal_orders_are_never_self_dual((x, y) in pair(7)) {
        let h = OrientedRegularHypermap::new(x, y).unwrap();
        if h.x().order() != h.y().order() {
            prop_assert!(!h.is_self_dual());
        }
    }

    #[test]
    fn duality_group_is_normal_with_matching_index((x, y) in pair(6)) {
        let h = OrientedRegularHypermap::new(x, y).unwrap();
        let g = h.monodromy();
        let d = h.duality_group();
        prop_assert!(d.is_normal_in(g).unwrap());
        prop_assert!(g.order().is_multiple_of(&d.order()));
        prop_assert_eq!(h.product_group().order(), g.order() * d.order());
        let r = h.analyze().unwrap();
        prop_assert_eq!(r.self_dual, r.duality_index == BigUint::from(1u32));
    }

    #[test]
    fn conjugate_pairs_share_duality_index(v in perms(3, 6)) {
        let (x, y, g) = (&v[0], &v[1], &v[2]);
        let h = OrientedRegularHypermap::new(x.clone(), y.clone()).unwrap();
        let c = OrientedRegularHypermap::new(x.conjugate_by(g), y.conjugate_by(g)).unwrap();
        prop_assert_eq!(h.duality_index(), c.duality_index());
    }

    #[test]
    fn block_systems_are_invariant((x, y) in pair(8)) {
        let g = PermutationGroup::new(vec![x.clone(), y.clone()]).unwrap();
        if g.is_transitive() {
            for b in g.block_systems().unwrap() {
                prop_assert!(b.is_invariant_under(&x) && b.is_invariant_under(&y));
                prop_assert!(b.num_blocks() > 1 && b.num_blocks() < g.degree());
                prop_assert_eq!(b.num_blocks() * b.block_size(), g.degree());
            }
        }
    }
}
