use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{elapsed_ms, to_value, CliError, Outcome, ReportEnvelope, EXIT_OK};
use crate::exact;
use crate::group::PermutationGroup;
use crate::hypermap::{cycle_string, DualityType, OrientedRegularHypermap};
use crate::oracle;
use crate::perm::{Parity, Permutation};

pub const CENSUS_MAX_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusGroup {
    Symmetric(usize),
    Alternating(usize),
}

impl CensusGroup {
    pub fn degree(self) -> usize {
        match self {
            CensusGroup::Symmetric(n) | CensusGroup::Alternating(n) => n,
        }
    }

    fn group(self) -> PermutationGroup {
        match self {
            CensusGroup::Symmetric(n) => PermutationGroup::symmetric(n),
            CensusGroup::Alternating(n) => PermutationGroup::alternating(n),
        }
    }
}

impl fmt::Display for CensusGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusGroup::Symmetric(n) => write!(f, "S{n}"),
            CensusGroup::Alternating(n) => write!(f, "A{n}"),
        }
    }
}

impl FromStr for CensusGroup {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Usage(format!("group must look like S4 or A5, got {s:?}"));
        let s = s.trim();
        let (family, digits) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = digits.parse().map_err(|_| bad())?;
        match family {
            "S" | "s" => Ok(CensusGroup::Symmetric(n)),
            "A" | "a" => Ok(CensusGroup::Alternating(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct ClassRow {
    #[serde(serialize_with = "cycle_string")]
    x: Permutation,
    #[serde(serialize_with = "cycle_string")]
    y: Permutation,
    x_parity: Parity,
    y_parity: Parity,
    duality_type: DualityType,
    #[serde(with = "exact")]
    duality_index: num_bigint::BigUint,
    /// Number of generating pairs conjugate to this one.
    pairs: usize,
}

#[derive(Debug, Clone, Serialize)]
struct TallyRow {
    duality_type: DualityType,
    #[serde(with = "exact")]
    duality_index: num_bigint::BigUint,
    pairs: usize,
    classes: usize,
}

#[derive(Debug, Clone, Serialize)]
struct CensusReport {
    group: String,
    order: usize,
    generating_pairs: usize,
    conjugacy_classes_of_pairs: usize,
    by_duality_type: Vec<TallyRow>,
    classes: Vec<ClassRow>,
}

/// Lexicographically least simultaneous conjugate of `(x, y)`.
fn canonical(x: &Permutation, y: &Permutation, conjugators: &[Permutation]) -> (Permutation, Permutation) {
    conjugators
        .iter()
        .map(|g| (x.conjugate_by(g), y.conjugate_by(g)))
        .min()
        .expect("conjugators include the identity")
}

pub fn cmd_census(group: CensusGroup) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let n = group.degree();
    if n == 0 || n > CENSUS_MAX_N {
        return Err(CliError::Usage(format!("census needs 1 <= n <= {CENSUS_MAX_N}, got {n}")));
    }
    let cutoff = oracle::default_cutoff();
    let table = oracle::enumerate_elements(&group.group(), cutoff)?;
    let sym = oracle::enumerate_elements(&PermutationGroup::symmetric(n), cutoff)?;
    let order = table.len();
    let canon: Vec<(Permutation, Permutation)> = (0..order)
        .into_par_iter()
        .flat_map_iter(|a| {
            let (table, sym) = (&table, &sym);
            (0..order)
                .filter(move |&b| table.closure(&[a, b]).len() == order)
                .map(move |b| canonical(table.element(a), table.element(b), sym.elements()))
        })
        .collect();
    let generating_pairs = canon.len();
    let mut class_sizes: BTreeMap<(Permutation, Permutation), usize> = BTreeMap::new();
    for c in canon {
        *class_sizes.entry(c).or_default() += 1;
    }
    let classes: Vec<ClassRow> = class_sizes
        .into_par_iter()
        .map(|((x, y), pairs)| {
            let h = OrientedRegularHypermap::new(x.clone(), y.clone()).expect("same degree");
            ClassRow {
                x_parity: x.parity(),
                y_parity: y.parity(),
                duality_type: h.duality_type(),
                duality_index: h.duality_index(),
                x,
                y,
                pairs,
            }
        })
        .collect();
    let mut tallies: BTreeMap<(DualityType, num_bigint::BigUint), (usize, usize)> = BTreeMap::new();
    for c in &classes {
        let t = tallies
            .entry((c.duality_type.clone(), c.duality_index.clone()))
            .or_default();
        t.0 += c.pairs;
        t.1 += 1;
    }
    let by_duality_type: Vec<TallyRow> = tallies
        .into_iter()
        .map(|((duality_type, duality_index), (pairs, classes))| TallyRow {
            duality_type,
            duality_index,
            pairs,
            classes,
        })
        .collect();
    let report = CensusReport {
        group: group.to_string(),
        order,
        generating_pairs,
        conjugacy_classes_of_pairs: classes.len(),
        by_duality_type,
        classes,
    };

    let mut text = format!(
        "{}: order {}, {} generating pairs in {} classes under conjugation\n",
        report.group, report.order, report.generating_pairs, report.conjugacy_classes_of_pairs
    );
    text.push_str("duality-type  index  pairs  classes\n");
    for t in &report.by_duality_type {
        text.push_str(&format!(
            "{:<12}  {:>5}  {:>5}  {:>7}\n",
            t.duality_type.to_string(),
            t.duality_index.to_string(),
            t.pairs,
            t.classes
        ));
    }
    Ok(Outcome {
        envelope: ReportEnvelope {
            command: "census".into(),
            inputs: json!({ "group": group.to_string() }),
            report: to_value(&report),
            certificates: Vec::new(),
            timing_ms: elapsed_ms(start),
        },
        text,
        exit_code: EXIT_OK,
    })
}
