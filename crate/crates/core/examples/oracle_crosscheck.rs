//! The engine's duality group against brute force over explicit element
//! tables, for every generating pair of S_4.

use hyperdual::oracle::{brute_duality_group, enumerate_elements, DEFAULT_CUTOFF};
use hyperdual::{OrientedRegularHypermap, PermutationGroup};
use num_bigint::BigUint;

fn main() {
    let table = enumerate_elements(&PermutationGroup::symmetric(4), DEFAULT_CUTOFF).unwrap();
    let mut checked = 0;
    for a in table.elements() {
        for b in table.elements() {
            let h = OrientedRegularHypermap::new(a.clone(), b.clone()).unwrap();
            if h.monodromy().order() != BigUint::from(24u32) {
                continue;
            }
            let brute = brute_duality_group(&h, DEFAULT_CUTOFF).unwrap();
            let engine = h.duality_group();
            assert_eq!(engine.order(), BigUint::from(brute.duality_group.order()));
            for p in brute.duality_group.permutations(&brute.table) {
                assert!(engine.contains(&p).unwrap());
            }
            checked += 1;
        }
    }
    println!("{checked} generating pairs of S_4: engine and oracle agree");
}
