//! Self-duality through the product group K = <(x,y),(y,x)> on two copies
//! of the domain: |K| = |G| exactly when the hypermap is self-dual.

use hyperdual::{parse_cycles, OrientedRegularHypermap};

fn show(x: &str, y: &str, degree: usize) {
    let h = OrientedRegularHypermap::new(
        parse_cycles(x, Some(degree)).unwrap(),
        parse_cycles(y, Some(degree)).unwrap(),
    )
    .unwrap();
    println!(
        "x = {x:<14} y = {y:<14} |G| = {:<6} |K| = {:<8} self-dual {:<5} index {}",
        h.monodromy().order(),
        h.product_group().order(),
        h.is_self_dual(),
        h.duality_index()
    );
}

fn main() {
    show("(1,2,3)", "(1,2,3)", 3);
    show("(1,2)", "(2,3)", 3);
    show("(2,3,4)", "(1,2,3)", 4);
    show("(1,2)(3,4)", "(1,2,3)", 4);
    show("(1,2,3,4,5,6,7)", "(2,3,4,5,6,7,8)", 8);
    show("(1,2,3,4,5,6,7)", "(1,3,4,5,6,7,8)", 8);
}
