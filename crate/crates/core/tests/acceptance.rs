//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperdual::construct::{duality_type_extreme, CaseTag};
use hyperdual::oracle::{self, ElementTable};
use hyperdual::{parse_cycles, OrientedRegularHypermap, Permutation, PermutationGroup};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_TIME_LIMIT: Duration = Duration::from_millis(100);
const SN_TIME_LIMIT: Duration = Duration::from_secs(120);
const GRID_TIME_LIMIT: Duration = Duration::from_secs(300);
const GRID_MAX: usize = 12;
const RANDOM_PAIRS: usize = 200;
const BLOCK_SAMPLES: usize = 120;
const SEED: u64 = 20_240_601;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn p(s: &str, d: usize) -> Permutation {
    parse_cycles(s, Some(d)).unwrap()
}

fn fact(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |a, k| a * BigUint::from(k))
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let h = OrientedRegularHypermap::new(p("(1,2,3,4,5)", 5), p("(1,2,3)", 5)).unwrap();
    let r = h.analyze().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(r.duality_index == BigUint::from(60u32), format!("index {}", r.duality_index))?;
    check(r.extreme, "not extreme")?;
    check(r.monodromy_order == fact(5) / 2u32, "monodromy order")?;
    check(r.monodromy_class.to_string() == "alternating", "class")?;
    check(elapsed < GOLDEN_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("index 60, extreme, A_5 of order 60 in {elapsed:?}"))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let h = OrientedRegularHypermap::new(p("(1,2)", 4), p("(1,2,3,4)", 4)).unwrap();
    let r = h.analyze().map_err(|e| e.to_string())?;
    let d = h.duality_group();
    let q = h.quotient(&d).map_err(|e| e.to_string())?;
    let q_self_dual = q.is_self_dual();
    let q_order = q.monodromy().order();
    let elapsed = start.elapsed();

    let elements: BTreeSet<String> = oracle::enumerate_elements(&d, oracle::DEFAULT_CUTOFF)
        .map_err(|e| e.to_string())?
        .elements()
        .iter()
        .map(|e| e.to_string())
        .collect();
    let expected: BTreeSet<String> = ["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    check(r.duality_index == BigUint::from(4u32), format!("index {}", r.duality_index))?;
    check(elements == expected, format!("duality group {elements:?}"))?;
    check(q_self_dual, "quotient not self-dual")?;
    check(q_order == BigUint::from(6u32), format!("quotient order {q_order}"))?;
    check(elapsed < GOLDEN_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("index 4, D = V_4, quotient self-dual of order 6 in {elapsed:?}"))
}

/// Generating pairs of the group of `table`, by closure in the table.
fn generating_pairs(table: &ElementTable) -> Vec<(usize, usize)> {
    let n = table.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if table.closure(&[a, b]).len() == n {
                out.push((a, b));
            }
        }
    }
    out
}

fn hyp(table: &ElementTable, (a, b): (usize, usize)) -> OrientedRegularHypermap {
    OrientedRegularHypermap::new(table.element(a).clone(), table.element(b).clone()).unwrap()
}

fn is_odd(p: &Permutation) -> bool {
    // sign from the number of even-length cycles
    p.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in [4usize, 5] {
        let table = oracle::enumerate_elements(&PermutationGroup::symmetric(n), oracle::DEFAULT_CUTOFF)
            .map_err(|e| e.to_string())?;
        let pairs = generating_pairs(&table);
        let full = fact(n);
        let both_odd: Vec<BigUint> = if n == 4 {
            vec![1u32.into(), 4u32.into()]
        } else {
            vec![1u32.into(), &full / 2u32]
        };
        for &pair in &pairs {
            let h = hyp(&table, pair);
            let index = h.duality_index();
            let ok = if is_odd(h.x()) && is_odd(h.y()) {
                both_odd.contains(&index)
            } else {
                index == full
            };
            check(ok, format!("S_{n}: x = {}, y = {} has index {index}", h.x(), h.y()))?;
        }
        summary.push(format!("S_{n}: {} pairs", pairs.len()));
    }
    let elapsed = start.elapsed();
    check(elapsed < SN_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("{} in {elapsed:?}, zero exceptions", summary.join(", ")))
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut passed = 0;
    for l in 2..=GRID_MAX {
        for n in 2..=GRID_MAX {
            let (h, _) = match duality_type_extreme(l, n) {
                Ok(v) => v,
                Err(e) => {
                    failures.push(format!("{{{l},{n}}}: {e}"));
                    continue;
                }
            };
            let d = h.degree();
            let g = h.monodromy();
            let order = g.order();
            let all_even = !is_odd(h.x()) && !is_odd(h.y());
            let natural = order == fact(d) || (order == fact(d) / 2u32 && all_even);
            let ok = h.x().order() == BigUint::from(l)
                && h.y().order() == BigUint::from(n)
                && h.duality_index() == order
                && natural;
            if ok {
                passed += 1;
            } else {
                failures.push(format!("{{{l},{n}}}: x = {}, y = {}", h.x(), h.y()));
            }
        }
    }
    let elapsed = start.elapsed();
    if !failures.is_empty() {
        return Err(format!("{passed}/121 cells; failing {}", failures.join("; ")));
    }
    check(elapsed < GRID_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("121/121 cells extreme with A_d or S_d in {elapsed:?}"))
}

fn random_generating_pairs(table: &ElementTable, count: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let n = table.len();
    let mut out = Vec::new();
    while out.len() < count {
        let pair = (rng.gen_range(0..n), rng.gen_range(0..n));
        if table.closure(&[pair.0, pair.1]).len() == n {
            out.push(pair);
        }
    }
    out
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cutoff = oracle::DEFAULT_CUTOFF;
    let s4 = oracle::enumerate_elements(&PermutationGroup::symmetric(4), cutoff).unwrap();
    let s5 = oracle::enumerate_elements(&PermutationGroup::symmetric(5), cutoff).unwrap();
    let a5 = oracle::enumerate_elements(&PermutationGroup::alternating(5), cutoff).unwrap();
    let corpora = [
        ("S_4 all", generating_pairs(&s4), &s4),
        ("S_5 random", random_generating_pairs(&s5, RANDOM_PAIRS, &mut rng), &s5),
        ("A_5 random", random_generating_pairs(&a5, RANDOM_PAIRS, &mut rng), &a5),
    ];
    let mut summary = Vec::new();
    for (name, pairs, table) in &corpora {
        for &pair in pairs {
            let h = hyp(table, pair);
            let brute = oracle::brute_duality_group(&h, cutoff).map_err(|e| e.to_string())?;
            let engine = h.duality_group();
            let same = engine.order() == BigUint::from(brute.duality_group.order())
                && brute
                    .duality_group
                    .permutations(&brute.table)
                    .iter()
                    .all(|e| engine.contains(e).unwrap());
            check(same, format!("{name}: x = {}, y = {}", h.x(), h.y()))?;
        }
        summary.push(format!("{name} {}", pairs.len()));
    }
    Ok(format!("{} pairs, zero discrepancies", summary.join(", ")))
}

fn random_permutation(d: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..d).collect();
    for i in (1..d).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(images).unwrap()
}

/// `a` is strictly finer than `b` (both canonical label vectors).
fn finer(a: &[usize], b: &[usize]) -> bool {
    a != b && (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] != a[j] || b[i] == b[j]))
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xb10c);
    let mut tested = 0;
    let mut imprimitive = 0;
    while tested < BLOCK_SAMPLES {
        let d = rng.gen_range(4..=7);
        let gens = if rng.gen_bool(0.25) {
            vec![random_permutation(d, &mut rng)]
        } else {
            vec![random_permutation(d, &mut rng), random_permutation(d, &mut rng)]
        };
        let g = PermutationGroup::new(gens).unwrap();
        if !g.is_transitive() {
            continue;
        }
        tested += 1;
        let brute = oracle::brute_block_systems(&g).map_err(|e| e.to_string())?;
        let mut brute_min: Vec<Vec<usize>> = brute
            .iter()
            .filter(|a| !brute.iter().any(|b| finer(b, a)))
            .cloned()
            .collect();
        let mut engine: Vec<Vec<usize>> = g
            .block_systems()
            .unwrap()
            .iter()
            .map(|b| b.labels().to_vec())
            .collect();
        brute_min.sort();
        engine.sort();
        let every_coarser = brute.iter().all(|a| engine.iter().any(|e| e == a || finer(e, a)));
        check(
            brute_min == engine && every_coarser && g.is_primitive() == brute.is_empty(),
            format!("generators {:?}", g.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>()),
        )?;
        if !brute.is_empty() {
            imprimitive += 1;
        }
    }
    Ok(format!("{tested} transitive groups ({imprimitive} imprimitive), zero discrepancies"))
}

fn criterion_7() -> Verdict {
    let mut count = 0;
    for l in (3..=15).step_by(2) {
        for n in (3..l).step_by(2) {
            let x = Permutation::cycle_range(l, 0, l - 1);
            let y = Permutation::cycle_range(l, 0, n - 1);
            let z = &(&(&y.inverse() * &x.inverse()) * &y) * &x;
            let expected = p(&format!("({n},{},{l})", n - 1), l);
            check(z == expected, format!("l = {l}, n = {n}: got {z}"))?;
            count += 1;
        }
    }
    for l in (5..=15).step_by(2) {
        let x = Permutation::cycle_range(l + 1, 0, l - 1);
        let y = Permutation::cycle_range(l + 1, 1, l);
        let z = &(&(&x.inverse() * &y.inverse()) * &x) * &y;
        let expected = p(&format!("(1,{})({},{l})", l + 1, l - 1), l + 1);
        check(z == expected, format!("l = {l}: got {z}"))?;
        count += 1;
    }
    Ok(format!("{count} commutators bit-exact"))
}

fn criterion_8() -> Verdict {
    let mut low_support = 0;
    let mut transitivity = 0;
    for l in 2..=GRID_MAX {
        for n in 2..=GRID_MAX {
            let Ok((h, cert)) = duality_type_extreme(l, n) else {
                continue;
            };
            let g = h.monodromy();
            let d = h.degree();
            let (big, small) = (l.max(n), l.min(n));
            match cert.case_tag {
                CaseTag::CaseA | CaseTag::CaseE if d > 8 => {
                    let all_even = !is_odd(h.x()) && !is_odd(h.y());
                    let witness = cert
                        .witnesses
                        .iter()
                        .map(|w| &w.permutation)
                        .find(|w| !w.is_identity() && w.support().len() <= 4)
                        .ok_or(format!("{{{l},{n}}}: no support-4 witness"))?;
                    check(g.contains(witness).unwrap(), format!("{{{l},{n}}}: witness not in G"))?;
                    check(
                        all_even && g.order() == fact(d) / 2u32,
                        format!("{{{l},{n}}}: not alternating"),
                    )?;
                    low_support += 1;
                }
                CaseTag::CaseC => {
                    let cycle = Permutation::cycle_range(d, 0, big - 1);
                    check(d == big + small - 1, format!("{{{l},{n}}}: degree {d}"))?;
                    check(g.contains(&cycle).unwrap(), format!("{{{l},{n}}}: no {big}-cycle"))?;
                    check(
                        g.is_k_transitive(small).unwrap(),
                        format!("{{{l},{n}}}: not {small}-transitive"),
                    )?;
                    transitivity += 1;
                }
                _ => {}
            }
        }
    }
    Ok(format!("{low_support} low-support witnesses, {transitivity} transitivity checks, zero failures"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden A_5", criterion_1),
        ("S_4 exceptional case", criterion_2),
        ("S_4 and S_5 parity trichotomy", criterion_3),
        ("duality-type grid 2..12", criterion_4),
        ("engine = oracle duality groups", criterion_5),
        ("block systems = brute force", criterion_6),
        ("commutator fidelity", criterion_7),
        ("certificate checks", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {} PASS {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
