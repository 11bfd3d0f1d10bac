//! The deterministic search behind the small-case table.

use hyperdual::construct::search::search_extreme_pair;
use hyperdual::construct::{SEARCH_EXTRA_DEGREE, SMALL_CASES};

fn main() {
    for case in SMALL_CASES {
        match search_extreme_pair(case.l, case.n, SEARCH_EXTRA_DEGREE) {
            Some((x, y)) => println!("{{{},{}}} degree {}: x = {x}, y = {y}", case.l, case.n, x.degree()),
            None => println!("{{{},{}}}: nothing found", case.l, case.n),
        }
    }
    println!("{{2,2}}: {:?}", search_extreme_pair(2, 2, SEARCH_EXTRA_DEGREE));
}
