//! A transposition and a 4-cycle generate S_4 with duality group V_4; the
//! quotient by V_4 is a self-dual hypermap on S_3.

use hyperdual::{parse_cycles, OrientedRegularHypermap};

fn main() {
    let h = OrientedRegularHypermap::new(
        parse_cycles("(1,2)", Some(4)).unwrap(),
        parse_cycles("(1,2,3,4)", None).unwrap(),
    )
    .unwrap();
    let d = h.duality_group();
    println!("monodromy order {}", h.monodromy().order());
    println!("duality index {}", h.duality_index());
    let gens: Vec<String> = d.reduced_generators().iter().map(|g| g.to_string()).collect();
    println!("duality group generated by {}", gens.join(", "));
    println!("S_n prediction: {:?}", h.classify_sn_pair().unwrap());

    let q = h.quotient(&d).unwrap();
    println!(
        "quotient: x = {}, y = {} on {} cosets, monodromy order {}, self-dual {}",
        q.x(),
        q.y(),
        q.degree(),
        q.monodromy().order(),
        q.is_self_dual()
    );
}
