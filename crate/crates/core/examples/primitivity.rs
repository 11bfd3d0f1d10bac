//! Block systems, primitivity and k-transitivity.

use hyperdual::{parse_cycles, PermutationGroup};

fn group(gens: &[&str], degree: usize) -> PermutationGroup {
    PermutationGroup::new(gens.iter().map(|g| parse_cycles(g, Some(degree)).unwrap()).collect()).unwrap()
}

fn main() {
    let c4 = group(&["(1,2,3,4)"], 4);
    println!("<(1,2,3,4)> blocks: {:?}", c4.block_systems().unwrap());

    let wreath = group(&["(1,2,3,4,5,6)", "(1,3)"], 6);
    println!("<(1,2,3,4,5,6),(1,3)> of order {} blocks: {:?}", wreath.order(), wreath.block_systems().unwrap());

    let case_c = group(&["(1,2,3,4,5,6)", "(1,2)(6,7,8,9)"], 9);
    println!("order {}, primitive {}", case_c.order(), case_c.is_primitive());
    for k in 1..=5 {
        println!("  {k}-transitive: {}", case_c.is_k_transitive(k).unwrap());
    }
    println!("class {}", case_c.classify_natural());

    let stab = case_c.pointwise_stabilizer(&[0, 1]).unwrap();
    println!("stabilizer of 1 and 2 has order {}", stab.order());
}
