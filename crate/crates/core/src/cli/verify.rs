use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{elapsed_ms, to_value, CliError, Outcome, ReportEnvelope, EXIT_OK, EXIT_VERIFICATION};
use crate::construct::{self, CaseTag};
use crate::group::{factorial, NaturalClass, PermutationGroup};
use crate::hypermap::OrientedRegularHypermap;
use crate::oracle::{self, ElementTable};
use crate::perm::Permutation;

pub const SN_MAX_N: usize = 6;
pub const GRID_MAX_N: usize = 16;
pub const MAX_SAMPLES: usize = 10_000;
const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Suite {
    SnClassification,
    MainTheoremGrid,
    OracleAgreement,
    JordanMiller,
}

impl Suite {
    fn default_max_n(self) -> usize {
        match self {
            Suite::SnClassification => 5,
            Suite::MainTheoremGrid | Suite::JordanMiller => 12,
            Suite::OracleAgreement => 5,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub max_n: Option<usize>,
    pub seed: u64,
    /// Random instances per sampled family (oracle agreement only).
    pub samples: usize,
}

impl VerifyOptions {
    pub fn new(suite: Suite) -> Self {
        VerifyOptions {
            suite,
            max_n: None,
            seed: 0,
            samples: 200,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceResult {
    pub key: String,
    pub passed: bool,
    pub summary: String,
    pub counterexamples: Vec<serde_json::Value>,
}

impl InstanceResult {
    fn pass(key: String, summary: String) -> Self {
        InstanceResult {
            key,
            passed: true,
            summary,
            counterexamples: Vec::new(),
        }
    }

    fn fail(key: String, summary: String, counterexample: serde_json::Value) -> Self {
        InstanceResult {
            key,
            passed: false,
            summary,
            counterexamples: vec![counterexample],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct VerifyReport {
    suite: Suite,
    all_passed: bool,
    instances: usize,
    failures: usize,
    results: Vec<InstanceResult>,
}

pub fn cmd_verify(opts: VerifyOptions) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let max_n = opts.max_n.unwrap_or(opts.suite.default_max_n());
    let results = match opts.suite {
        Suite::SnClassification => {
            check_bounds("max-n", max_n, 2, SN_MAX_N)?;
            sn_classification(max_n)?
        }
        Suite::MainTheoremGrid => {
            check_bounds("max-n", max_n, 2, GRID_MAX_N)?;
            main_theorem_grid(max_n)
        }
        Suite::JordanMiller => {
            check_bounds("max-n", max_n, 2, GRID_MAX_N)?;
            jordan_miller(max_n)?
        }
        Suite::OracleAgreement => {
            check_bounds("samples", opts.samples, 1, MAX_SAMPLES)?;
            oracle_agreement(opts.seed, opts.samples)?
        }
    };
    let failures = results.iter().filter(|r| !r.passed).count();
    let report = VerifyReport {
        suite: opts.suite,
        all_passed: failures == 0,
        instances: results.len(),
        failures,
        results,
    };
    let mut text = String::new();
    for r in &report.results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{mark} {:<28} {}\n", r.key, r.summary));
        for c in &r.counterexamples {
            text.push_str(&format!("     counterexample {c}\n"));
        }
    }
    text.push_str(&format!(
        "{}: {} instances, {} failed\n",
        to_value(&opts.suite).as_str().unwrap_or_default(),
        report.instances,
        report.failures
    ));
    Ok(Outcome {
        envelope: ReportEnvelope {
            command: "verify".into(),
            inputs: json!({
                "suite": opts.suite,
                "max_n": max_n,
                "seed": opts.seed,
                "samples": opts.samples,
            }),
            report: to_value(&report),
            certificates: Vec::new(),
            timing_ms: elapsed_ms(start),
        },
        text,
        exit_code: if failures == 0 { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

fn check_bounds(name: &str, value: usize, min: usize, max: usize) -> Result<(), CliError> {
    if value < min || value > max {
        return Err(CliError::Usage(format!("{name} = {value} is outside {min}..={max}")));
    }
    Ok(())
}

fn pair_json(h: &OrientedRegularHypermap) -> serde_json::Value {
    json!({ "x": h.x().to_string(), "y": h.y().to_string(), "degree": h.degree() })
}

fn sn_classification(max_n: usize) -> Result<Vec<InstanceResult>, CliError> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let table = oracle::enumerate_elements(&PermutationGroup::symmetric(n), oracle::default_cutoff())?;
        let full = factorial(n);
        let rows: Vec<(String, Option<serde_json::Value>)> = table
            .elements()
            .par_iter()
            .flat_map_iter(|a| {
                let full = &full;
                table.elements().iter().filter_map(move |b| {
                    let h = OrientedRegularHypermap::new(a.clone(), b.clone()).expect("same degree");
                    if h.monodromy().order() != *full {
                        return None;
                    }
                    let prediction = h.classify_sn_pair().expect("monodromy is symmetric");
                    let index = h.duality_index();
                    let tally = format!("{}/{} index {}", h.x().parity(), h.y().parity(), index);
                    let bad = (!prediction.admits(n, &index)).then(|| {
                        let mut c = pair_json(&h);
                        c["duality_index"] = index.to_string().into();
                        c["prediction"] = to_value(&prediction);
                        c
                    });
                    Some((tally, bad))
                })
            })
            .collect();
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        let mut bad = Vec::new();
        for (tally, c) in rows {
            *counts.entry(tally).or_default() += 1;
            bad.extend(c);
        }
        let total: usize = counts.values().sum();
        let summary = format!(
            "{total} generating pairs: {}",
            counts
                .iter()
                .map(|(k, v)| format!("{k} x{v}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
        let failed = !bad.is_empty();
        bad.truncate(MAX_COUNTEREXAMPLES);
        out.push(InstanceResult {
            key: format!("S{n}"),
            passed: !failed,
            summary,
            counterexamples: bad,
        });
    }
    Ok(out)
}

fn grid(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n).flat_map(|l| (2..=max_n).map(move |n| (l, n))).collect()
}

fn main_theorem_grid(max_n: usize) -> Vec<InstanceResult> {
    grid(max_n)
        .into_par_iter()
        .map(|(l, n)| {
            let key = format!("{{{l},{n}}}");
            let (h, cert) = match construct::duality_type_extreme(l, n) {
                Ok(v) => v,
                Err(e) => return InstanceResult::fail(key, e.to_string(), json!({ "l": l, "n": n })),
            };
            let d = h.degree();
            let order = h.monodromy().order();
            let class = h.monodromy().classify_natural();
            let full = factorial(d);
            let class_ok = match class {
                NaturalClass::Symmetric => order == full,
                NaturalClass::Alternating => order == full / 2u32,
                NaturalClass::Other => false,
            };
            let orders_ok = h.x().order() == BigUint::from(l) && h.y().order() == BigUint::from(n);
            let extreme = h.duality_index() == order;
            let summary = format!("{} degree {d}, {class} of order {order}", cert.case_tag);
            if class_ok && orders_ok && extreme {
                InstanceResult::pass(key, summary)
            } else {
                let mut c = pair_json(&h);
                c["orders_ok"] = orders_ok.into();
                c["class_ok"] = class_ok.into();
                c["extreme"] = extreme.into();
                InstanceResult::fail(key, summary, c)
            }
        })
        .collect()
}

fn jordan_miller(max_n: usize) -> Result<Vec<InstanceResult>, CliError> {
    let rows: Vec<Option<InstanceResult>> = grid(max_n)
        .into_par_iter()
        .map(|(l, n)| {
            let (h, cert) = construct::duality_type_extreme(l, n).ok()?;
            let key = format!("{{{l},{n}}} {}", cert.case_tag);
            let g = h.monodromy();
            let d = h.degree();
            let (big, small) = (l.max(n), l.min(n));
            match cert.case_tag {
                CaseTag::CaseA | CaseTag::CaseE if d > 8 => {
                    let witness = cert
                        .witnesses
                        .iter()
                        .map(|w| &w.permutation)
                        .find(|p| !p.is_identity() && p.support_size() <= 4);
                    let result = match witness {
                        Some(w) if g.contains(w).unwrap_or(false) && g.classify_natural() == NaturalClass::Alternating => {
                            InstanceResult::pass(key, format!("contains {w} (support {}), alternating", w.support_size()))
                        }
                        _ => InstanceResult::fail(key, "no contained support-4 witness or not alternating".into(), pair_json(&h)),
                    };
                    Some(result)
                }
                CaseTag::CaseC | CaseTag::CaseD => {
                    let cyc = [h.x(), h.y()]
                        .into_iter()
                        .find(|p| p.cycle_type().iter().filter(|&&c| c > 1).eq([big].iter()))
                        .cloned();
                    let ok = d == big + small - 1
                        && cyc.is_some()
                        && g.is_primitive()
                        && g.is_k_transitive(small).unwrap_or(false);
                    Some(if ok {
                        InstanceResult::pass(key, format!("primitive, {big}-cycle on {d} points, {small}-transitive"))
                    } else {
                        InstanceResult::fail(key, format!("{small}-transitivity check failed"), pair_json(&h))
                    })
                }
                _ => None,
            }
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

/// Generating pairs of the group of `table`, as element indices.
fn generating_pairs(table: &ElementTable) -> Vec<(usize, usize)> {
    let n = table.len();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            (0..n)
                .filter(move |&b| table.closure(&[a, b]).len() == n)
                .map(move |b| (a, b))
        })
        .collect()
}

fn random_generating_pairs(table: &ElementTable, count: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let n = table.len();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if table.closure(&[a, b]).len() == n {
            out.push((a, b));
        }
    }
    out
}

fn duality_agreement(table: &ElementTable, pairs: &[(usize, usize)], label: &str) -> Result<InstanceResult, CliError> {
    let cutoff = table.cutoff();
    let outcomes: Vec<Result<Option<serde_json::Value>, CliError>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let h = OrientedRegularHypermap::new(table.element(a).clone(), table.element(b).clone())
                .expect("same degree");
            let brute = oracle::brute_duality_group(&h, cutoff)?;
            let engine = h.duality_group();
            let same = engine.order() == BigUint::from(brute.duality_group.order())
                && brute
                    .duality_group
                    .permutations(&brute.table)
                    .iter()
                    .all(|p| engine.contains(p).unwrap_or(false));
            Ok((!same).then(|| {
                let mut c = pair_json(&h);
                c["engine_order"] = engine.order().to_string().into();
                c["oracle_order"] = brute.duality_group.order().into();
                c
            }))
        })
        .collect();
    let mut bad = Vec::new();
    for o in outcomes {
        bad.extend(o?);
    }
    let summary = format!("{} pairs, {} discrepancies", pairs.len(), bad.len());
    let passed = bad.is_empty();
    bad.truncate(MAX_COUNTEREXAMPLES);
    Ok(InstanceResult {
        key: label.to_string(),
        passed,
        summary,
        counterexamples: bad,
    })
}

/// Whether the engine's minimal block systems are exactly the
/// inclusion-minimal partitions among the oracle's invariant partitions.
pub(crate) fn blocks_agree(g: &PermutationGroup) -> Result<bool, CliError> {
    let engine: Vec<Vec<usize>> = g
        .block_systems()
        .map_err(|e| CliError::Verification(e.to_string()))?
        .iter()
        .map(|b| b.labels().to_vec())
        .collect();
    let brute = oracle::brute_block_systems(g)?;
    let finer = |a: &[usize], b: &[usize]| {
        a != b && (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] != a[j] || b[i] == b[j]))
    };
    let mut minimal: Vec<Vec<usize>> = brute
        .iter()
        .filter(|p| !brute.iter().any(|q| finer(q, p)))
        .cloned()
        .collect();
    let mut engine_sorted = engine;
    minimal.sort();
    engine_sorted.sort();
    Ok(minimal == engine_sorted && g.is_primitive() == brute.is_empty())
}

/// A uniformly random permutation of `0..degree`.
pub(crate) fn random_permutation(degree: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle is a bijection")
}

fn block_agreement(rng: &mut ChaCha8Rng, count: usize) -> Result<InstanceResult, CliError> {
    let mut groups = Vec::with_capacity(count);
    while groups.len() < count {
        let d = rng.gen_range(4..=7);
        let g = PermutationGroup::new(vec![random_permutation(d, rng), random_permutation(d, rng)])
            .expect("same degree");
        if g.is_transitive() {
            groups.push(g);
        }
    }
    let outcomes: Vec<Result<Option<serde_json::Value>, CliError>> = groups
        .par_iter()
        .map(|g| {
            Ok((!blocks_agree(g)?).then(|| {
                json!({
                    "generators": g.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "degree": g.degree(),
                })
            }))
        })
        .collect();
    let mut bad = Vec::new();
    for o in outcomes {
        bad.extend(o?);
    }
    let imprimitive = groups.iter().filter(|g| !g.is_primitive()).count();
    let summary = format!("{count} transitive groups ({imprimitive} imprimitive), {} discrepancies", bad.len());
    let passed = bad.is_empty();
    bad.truncate(MAX_COUNTEREXAMPLES);
    Ok(InstanceResult {
        key: "blocks degree 4-7".into(),
        passed,
        summary,
        counterexamples: bad,
    })
}

fn oracle_agreement(seed: u64, samples: usize) -> Result<Vec<InstanceResult>, CliError> {
    let cutoff = oracle::default_cutoff();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s4 = oracle::enumerate_elements(&PermutationGroup::symmetric(4), cutoff)?;
    let s5 = oracle::enumerate_elements(&PermutationGroup::symmetric(5), cutoff)?;
    let a5 = oracle::enumerate_elements(&PermutationGroup::alternating(5), cutoff)?;
    let s5_pairs = random_generating_pairs(&s5, samples, &mut rng);
    let a5_pairs = random_generating_pairs(&a5, samples, &mut rng);
    Ok(vec![
        duality_agreement(&s4, &generating_pairs(&s4), "S4 all generating pairs")?,
        duality_agreement(&s5, &s5_pairs, "S5 random generating pairs")?,
        duality_agreement(&a5, &a5_pairs, "A5 random generating pairs")?,
        block_agreement(&mut rng, samples.max(100))?,
    ])
}
