//! Deterministic search for generating pairs of orders `(l, n)` whose
//! hypermap has extreme duality index and natural alternating or symmetric
//! monodromy. Used to (re)generate the small-case table.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::group::NaturalClass;
use crate::hypermap::OrientedRegularHypermap;
use crate::perm::Permutation;

/// Cycle types (parts ≥ 2, total ≤ `degree`) whose lcm is `order`, listed
/// with fewer cycles first and then larger parts first.
pub fn cycle_types(degree: usize, order: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    collect_types(degree, order, degree, &mut parts, &mut out);
    if order == 1 {
        out.push(Vec::new());
    }
    out.retain(|t| {
        t.iter()
            .fold(BigUint::one(), |acc, &p| acc.lcm(&BigUint::from(p)))
            == BigUint::from(order)
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    out
}

fn collect_types(room: usize, order: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if !parts.is_empty() {
        out.push(parts.clone());
    }
    for p in (2..=max_part.min(room)).rev() {
        if !order.is_multiple_of(p) {
            continue;
        }
        parts.push(p);
        collect_types(room - p, order, p, parts, out);
        parts.pop();
    }
}

/// Consecutive cycles of the given lengths starting at `offset`, wrapping
/// around the domain.
pub fn place(degree: usize, lengths: &[usize], offset: usize) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = offset;
    for &len in lengths {
        cycles.push((0..len).map(|k| (next + k) % degree).collect::<Vec<_>>());
        next += len;
    }
    Permutation::from_cycles(degree, &cycles).expect("total length within degree")
}

/// Whether `(x, y)` realizes duality-type `{l, n}` (with `x` of order `l`)
/// with extreme duality index and monodromy `A_d` or `S_d`.
pub fn qualifies(x: &Permutation, y: &Permutation, l: usize, n: usize) -> bool {
    if x.order() != BigUint::from(l) || y.order() != BigUint::from(n) {
        return false;
    }
    let h = OrientedRegularHypermap::new(x.clone(), y.clone()).expect("equal degrees");
    let g = h.monodromy();
    if g.classify_natural() == NaturalClass::Other {
        return false;
    }
    h.duality_index() == g.order()
}

/// First qualifying pair in the canonical search order: ambient degree
/// ascending from `max(l, n)` up to `max(l, n) + extra`, then `x` over cycle
/// types placed from point 1, then `y` over cycle types placed at each
/// offset.
pub fn search_extreme_pair(l: usize, n: usize, extra: usize) -> Option<(Permutation, Permutation)> {
    let start = l.max(n).max(2);
    for degree in start..=start + extra {
        let x_types = cycle_types(degree, l);
        let y_types = cycle_types(degree, n);
        for xt in &x_types {
            let x = place(degree, xt, 0);
            for yt in &y_types {
                for offset in 0..degree {
                    let y = place(degree, yt, offset);
                    if qualifies(&x, &y, l, n) {
                        return Some((x, y));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_types_of_order_six() {
        let t = cycle_types(6, 6);
        assert_eq!(t, vec![vec![6], vec![3, 2]]);
    }

    #[test]
    fn cycle_types_with_repeats() {
        let t = cycle_types(7, 2);
        assert_eq!(t, vec![vec![2], vec![2, 2], vec![2, 2, 2]]);
        assert_eq!(cycle_types(4, 1), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn placement_wraps() {
        assert_eq!(place(5, &[3], 3).to_string(), "(1,4,5)");
        assert_eq!(place(6, &[2, 2], 0).to_string(), "(1,2)(3,4)");
    }
}
