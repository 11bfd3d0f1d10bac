//! The alternating group A_5 generated by a 5-cycle and a 3-cycle: extreme
//! duality index 60.

use hyperdual::{cli, parse_cycles, OrientedRegularHypermap};

fn main() {
    let x = parse_cycles("(1,2,3,4,5)", None).unwrap();
    let y = parse_cycles("(1,2,3)", Some(5)).unwrap();
    let h = OrientedRegularHypermap::new(x, y).unwrap();
    let report = h.analyze().unwrap();
    print!("{}", cli::report_text(&report));
    assert!(report.extreme);

    let start = std::time::Instant::now();
    let dual = h.dual();
    println!(
        "dual: x = {}, y = {}, index {} ({:?})",
        dual.x(),
        dual.y(),
        dual.duality_index(),
        start.elapsed()
    );
}
