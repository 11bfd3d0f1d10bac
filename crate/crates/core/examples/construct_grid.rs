//! Hypermaps with extreme duality index for every duality-type {l, n}
//! with 2 <= l, n <= 12. The pair {2,2} has no such hypermap.

use hyperdual::construct::duality_type_extreme;

fn main() {
    let start = std::time::Instant::now();
    for l in 2..=12 {
        for n in 2..=l {
            match duality_type_extreme(l, n) {
                Ok((h, cert)) => println!(
                    "{{{l},{n}}} {:<16} degree {:>2}  {:<11} index {}",
                    cert.case_tag.to_string(),
                    h.degree(),
                    cert.claimed_class.to_string(),
                    h.duality_index()
                ),
                Err(e) => println!("{{{l},{n}}} {e}"),
            }
        }
    }
    println!("{:?}", start.elapsed());
}
