//! Explicit generator families for hypermaps that are not self-dual or have
//! extreme duality index, each returned with a certificate that has been
//! re-checked by the engine.

pub mod search;
mod table;

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::group::{GroupError, NaturalClass};
use crate::hypermap::{cycle_string, DualityReport, DualityType, HypermapError, OrientedRegularHypermap};
use crate::perm::Permutation;

pub use table::{SmallCase, SEARCH_EXTRA_DEGREE, SMALL_CASES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameter {name} = {value} is below the minimum {min}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("no hypermap of duality-type {{{l},{n}}} has extreme duality index: {reason}")]
    Impossible { l: usize, n: usize, reason: &'static str },
    #[error("certificate check failed for {tag}: {msg}")]
    Verification { tag: CaseTag, msg: String },
    #[error(transparent)]
    Hypermap(#[from] HypermapError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Lemma1Sym,
    Lemma1Alt,
    Theorem2,
    CaseA,
    CaseB,
    CaseC,
    CaseD,
    CaseE,
    SmallCaseTable,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Lemma1Sym => "lemma1_sym",
            CaseTag::Lemma1Alt => "lemma1_alt",
            CaseTag::Theorem2 => "theorem2",
            CaseTag::CaseA => "case_a",
            CaseTag::CaseB => "case_b",
            CaseTag::CaseC => "case_c",
            CaseTag::CaseD => "case_d",
            CaseTag::CaseE => "case_e",
            CaseTag::SmallCaseTable => "small_case_table",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    #[serde(serialize_with = "cycle_string")]
    pub permutation: Permutation,
}

impl Witness {
    fn new(description: impl Into<String>, permutation: Permutation) -> Self {
        Witness {
            description: description.into(),
            permutation,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionCertificate {
    pub case_tag: CaseTag,
    pub ambient_degree: usize,
    pub claimed_class: NaturalClass,
    pub claimed_extreme: bool,
    pub witnesses: Vec<Witness>,
    /// Human-readable record of each check that passed.
    pub checks: Vec<String>,
}

/// What a construction asserts before it is checked.
struct Claim {
    tag: CaseTag,
    class: Option<NaturalClass>,
    extreme: bool,
    witnesses: Vec<Witness>,
    /// Run the low-support-witness check when the degree exceeds 8.
    low_support: bool,
    /// Length of a cycle in the group for the transitivity check.
    transitivity_cycle: Option<usize>,
}

impl Claim {
    fn new(tag: CaseTag, class: Option<NaturalClass>, extreme: bool) -> Self {
        Claim {
            tag,
            class,
            extreme,
            witnesses: Vec::new(),
            low_support: false,
            transitivity_cycle: None,
        }
    }
}

fn fail(tag: CaseTag, msg: impl Into<String>) -> ConstructError {
    ConstructError::Verification {
        tag,
        msg: msg.into(),
    }
}

/// Recomputes everything the claim asserts. `class = None` means the class
/// is whatever the engine computes, provided it is not `other`.
fn certify(
    h: &OrientedRegularHypermap,
    claim: Claim,
) -> Result<(ConstructionCertificate, DualityReport), ConstructError> {
    let tag = claim.tag;
    let report = h.analyze()?;
    let g = h.monodromy();
    let degree = h.degree();
    let mut checks = Vec::new();

    let class = match claim.class {
        Some(c) if c != report.monodromy_class => {
            return Err(fail(tag, format!("claimed {c}, computed {}", report.monodromy_class)))
        }
        Some(c) => c,
        None if report.monodromy_class == NaturalClass::Other => {
            return Err(fail(tag, "monodromy group is neither alternating nor symmetric"))
        }
        None => report.monodromy_class,
    };
    checks.push(format!("monodromy {class} of order {}", report.monodromy_order));

    if report.extreme != claim.extreme {
        return Err(fail(
            tag,
            format!("claimed extreme = {}, duality index {}", claim.extreme, report.duality_index),
        ));
    }
    checks.push(format!("duality index {}", report.duality_index));

    for w in &claim.witnesses {
        if !g.contains(&w.permutation)? {
            return Err(fail(tag, format!("witness {} not in the group", w.permutation)));
        }
    }

    if claim.low_support && degree > 8 {
        let small = claim
            .witnesses
            .iter()
            .find(|w| w.permutation.support_size() <= 4 && !w.permutation.is_identity())
            .ok_or_else(|| fail(tag, "no witness of support at most 4"))?;
        if !g.is_primitive() {
            return Err(fail(tag, "group is not primitive"));
        }
        if report.monodromy_class == NaturalClass::Other {
            return Err(fail(tag, "primitive group with small support witness is not Alt/Sym"));
        }
        checks.push(format!(
            "primitive of degree {degree} > 8 containing {} (support {}): alternating or symmetric",
            small.permutation,
            small.permutation.support_size()
        ));
    }

    if let Some(m) = claim.transitivity_cycle {
        if 1 < m && m < degree {
            if !g.is_primitive() {
                return Err(fail(tag, "group is not primitive"));
            }
            let k = degree - m + 1;
            if !g.is_k_transitive(k)? {
                return Err(fail(tag, format!("not {k}-transitive despite an {m}-cycle")));
            }
            checks.push(format!("primitive with a {m}-cycle: {k}-transitive"));
        }
    }

    let cert = ConstructionCertificate {
        case_tag: tag,
        ambient_degree: degree,
        claimed_class: class,
        claimed_extreme: claim.extreme,
        witnesses: claim.witnesses,
        checks,
    };
    Ok((cert, report))
}

fn cycle(degree: usize, first: usize, last: usize) -> Permutation {
    // 1-based inclusive range
    Permutation::cycle_range(degree, first - 1, last - 1)
}

fn order_is(p: &Permutation, k: usize) -> bool {
    p.order() == BigUint::from(k)
}

/// `x = (1,…,n)`, `y = (1,2)` for `n > 2`; `(1, (1,2))` for `n = 2`.
pub fn lemma1_sym(n: usize) -> Result<OrientedRegularHypermap, ConstructError> {
    if n < 2 {
        return Err(ConstructError::OutOfRange {
            name: "n",
            value: n,
            min: 2,
        });
    }
    let h = if n == 2 {
        OrientedRegularHypermap::new(Permutation::identity(2), cycle(2, 1, 2))?
    } else {
        OrientedRegularHypermap::new(cycle(n, 1, n), cycle(n, 1, 2))?
    };
    Ok(h)
}

/// `((1,…,n), (1,2,3))` for odd `n`, `((2,…,n), (1,2,3))` for even `n`,
/// `(1, (1,2,3))` for `n = 3`. For `n = 4` the even-degree pair has equal
/// orders and is self-dual, so `((1,2)(3,4), (1,2,3))` is used instead.
pub fn lemma1_alt(n: usize) -> Result<OrientedRegularHypermap, ConstructError> {
    if n < 3 {
        return Err(ConstructError::OutOfRange {
            name: "n",
            value: n,
            min: 3,
        });
    }
    let y = cycle(n, 1, 3);
    let x = match n {
        3 => Permutation::identity(3),
        4 => Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).expect("valid"),
        _ if n % 2 == 1 => cycle(n, 1, n),
        _ => cycle(n, 2, n),
    };
    Ok(OrientedRegularHypermap::new(x, y)?)
}

/// Extreme duality index with monodromy group `A_n`.
pub fn theorem2_alt_extreme(
    n: usize,
) -> Result<(OrientedRegularHypermap, ConstructionCertificate), ConstructError> {
    let h = lemma1_alt(n)?;
    let mut claim = Claim::new(CaseTag::Theorem2, Some(NaturalClass::Alternating), true);
    claim.witnesses.push(Witness::new("3-cycle generator", h.y().clone()));
    let (cert, _) = certify(&h, claim)?;
    Ok((h, cert))
}

/// A hypermap of duality-type `{l, n}` (with `order(x) = l`,
/// `order(y) = n`), extreme duality index and natural alternating or
/// symmetric monodromy.
pub fn duality_type_extreme(
    l: usize,
    n: usize,
) -> Result<(OrientedRegularHypermap, ConstructionCertificate), ConstructError> {
    for (name, value) in [("l", l), ("n", n)] {
        if value < 2 {
            return Err(ConstructError::OutOfRange { name, value, min: 2 });
        }
    }
    if l == 2 && n == 2 {
        return Err(ConstructError::Impossible {
            l,
            n,
            reason: "two involutions generate a dihedral group, where swapping the generators is always an automorphism",
        });
    }
    let (big, small) = (l.max(n), l.min(n));
    let (h, cert) = oriented(big, small)?;
    let h = if l < n { h.dual() } else { h };
    if !order_is(h.x(), l) || !order_is(h.y(), n) {
        return Err(fail(cert.case_tag, "generator orders do not match the duality-type"));
    }
    debug_assert_eq!(h.duality_type(), DualityType::from_pair(l as u64, n as u64));
    Ok((h, cert))
}

/// Which construction handles `{l, n}` with `l ≥ n`.
pub fn case_for(l: usize, n: usize) -> CaseTag {
    debug_assert!(l >= n);
    let (l_even, n_even) = (l.is_multiple_of(2), n.is_multiple_of(2));
    if table::lookup(l, n).is_some() {
        return CaseTag::SmallCaseTable;
    }
    match (l_even, n_even) {
        (false, false) if l == n => CaseTag::CaseE,
        (false, false) => CaseTag::CaseA,
        (true, true) if l == n => CaseTag::CaseD,
        (true, true) => CaseTag::CaseC,
        _ => CaseTag::CaseB,
    }
}

fn oriented(
    l: usize,
    n: usize,
) -> Result<(OrientedRegularHypermap, ConstructionCertificate), ConstructError> {
    let tag = case_for(l, n);
    let (h, claim) = match tag {
        CaseTag::SmallCaseTable => {
            let entry = table::lookup(l, n).expect("table entry");
            let (x, y) = entry.generators();
            let h = OrientedRegularHypermap::new(x, y)?;
            (h, Claim::new(tag, None, true))
        }
        CaseTag::CaseA | CaseTag::CaseB => {
            let x = cycle(l, 1, l);
            let y = cycle(l, 1, n);
            let z = y.commutator(&x).expect("equal degrees");
            let class = if tag == CaseTag::CaseA {
                NaturalClass::Alternating
            } else {
                NaturalClass::Symmetric
            };
            let mut claim = Claim::new(tag, Some(class), true);
            claim.witnesses.push(Witness::new("commutator y^-1 x^-1 y x", z));
            claim.low_support = true;
            (OrientedRegularHypermap::new(x, y)?, claim)
        }
        CaseTag::CaseC | CaseTag::CaseD => {
            let degree = l + n - 1;
            let x = cycle(degree, 1, l);
            let y = Permutation::from_cycles(degree, &[vec![0, 1], (l - 1..degree).collect()])
                .expect("disjoint for l > 2");
            let mut claim = Claim::new(tag, Some(NaturalClass::Symmetric), true);
            claim.witnesses.push(Witness::new("l-cycle x", x.clone()));
            if n == 4 {
                claim.witnesses.push(Witness::new("y^2", y.pow(2)));
                claim.low_support = true;
            }
            claim.transitivity_cycle = Some(l);
            (OrientedRegularHypermap::new(x, y)?, claim)
        }
        CaseTag::CaseE => {
            // y is the l-cycle (1,3,4,…,l+1) on every point except 2
            let degree = l + 1;
            let x = cycle(degree, 1, l);
            let y_points: Vec<usize> = std::iter::once(0).chain(2..degree).collect();
            let y = Permutation::from_cycles(degree, &[y_points]).expect("valid cycle");
            let z = x.commutator(&y).expect("equal degrees");
            let double = Permutation::from_cycles(degree, &[vec![0, l], vec![l - 2, l - 1]])
                .expect("valid for l >= 3");
            let mut claim = Claim::new(tag, Some(NaturalClass::Alternating), true);
            claim.transitivity_cycle = Some(z.support_size());
            claim.witnesses.push(Witness::new("commutator x^-1 y^-1 x y", z));
            claim.witnesses.push(Witness::new("(1,l+1)(l-1,l)", double));
            claim.low_support = true;
            (OrientedRegularHypermap::new(x, y)?, claim)
        }
        _ => unreachable!("not a duality-type case"),
    };
    let (cert, _) = certify(&h, claim)?;
    Ok((h, cert))
}
