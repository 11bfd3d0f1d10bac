//! The certificate attached to each construction, with the witnesses and
//! checks that were re-run against the engine.

use hyperdual::construct::{duality_type_extreme, theorem2_alt_extreme};

fn main() {
    let (_, cert) = theorem2_alt_extreme(5).unwrap();
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
    for (l, n) in [(11, 7), (10, 6), (9, 9)] {
        let (h, cert) = duality_type_extreme(l, n).unwrap();
        println!("{{{l},{n}}}: x = {}, y = {}", h.x(), h.y());
        for w in &cert.witnesses {
            println!("  witness {} = {}", w.description, w.permutation);
        }
        for c in &cert.checks {
            println!("  {c}");
        }
    }
}
