//! Cycle notation, the product convention and commutators.

use hyperdual::{parse_cycles, Permutation};

fn main() {
    let p = parse_cycles("(1,2,3)", Some(4)).unwrap();
    let q = parse_cycles("(3,4)", None).unwrap().embed(4).unwrap();
    // the right factor acts first: (p*q)(i) = p(q(i))
    println!("p = {p}, q = {q}");
    println!("p*q = {}", &p * &q);
    println!("q*p = {}", &q * &p);
    println!("order of p*q = {}, parity {}", (&p * &q).order(), (&p * &q).parity());

    let x = Permutation::cycle_range(9, 0, 8);
    let y = Permutation::cycle_range(9, 0, 4);
    println!("x = {x}, y = {y}");
    println!("y^-1 x^-1 y x = {}", y.commutator(&x).unwrap());
    println!("x^-3 = {}", x.pow(-3));

    match parse_cycles("(1,2,2)", None) {
        Ok(_) => unreachable!(),
        Err(e) => println!("(1,2,2) rejected: {e}"),
    }
}
