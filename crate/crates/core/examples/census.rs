//! Duality indices of all generating pairs of a small symmetric or
//! alternating group, raw and up to simultaneous conjugation.
//!
//! `cargo run --example census -- A5`

use hyperdual::cli::{cmd_census, CensusGroup};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let group: CensusGroup = name.parse().unwrap();
    let out = cmd_census(group).unwrap();
    print!("{}", out.text);
}
