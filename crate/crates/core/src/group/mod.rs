//! Finite permutation groups given by generators.
//!
//! Order and membership come from a stabilizer chain built on first use and
//! cached; the group value is immutable afterwards and can be shared across
//! threads.

mod blocks;
mod chain;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

pub use blocks::BlockSystem;
use chain::StabChain;

use crate::perm::{PermError, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group is not transitive")]
    Intransitive,
    #[error("k = {k} out of range for degree {degree}")]
    KOutOfRange { k: usize, degree: usize },
    #[error("permutation {0} is not an element of the group")]
    NotInGroup(String),
    #[error("point {point} outside domain of degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// Recognition of the natural actions of `S_d` and `A_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NaturalClass {
    Symmetric,
    Alternating,
    Other,
}

impl fmt::Display for NaturalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NaturalClass::Symmetric => "symmetric",
            NaturalClass::Alternating => "alternating",
            NaturalClass::Other => "other",
        })
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    base_prefix: Vec<usize>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            base_prefix: self.base_prefix.clone(),
            chain: self.chain.clone(),
        }
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermutationGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::with_base_prefix(generators, Vec::new())
    }

    /// A group whose stabilizer chain will start with the given base points.
    pub fn with_base_prefix(
        generators: Vec<Permutation>,
        base_prefix: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let degree = generators.first().ok_or(GroupError::NoGenerators)?.degree();
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()).into());
            }
        }
        if let Some(&p) = base_prefix.iter().find(|&&p| p >= degree) {
            return Err(GroupError::PointOutOfRange { point: p, degree });
        }
        Ok(PermutationGroup {
            degree,
            generators,
            base_prefix,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(vec![Permutation::identity(degree)]).expect("one generator")
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = vec![Permutation::cycle_range(degree, 0, degree - 1)];
        if degree > 2 {
            gens.push(Permutation::cycle_range(degree, 0, 1));
        }
        Self::new(gens).expect("generators share a degree")
    }

    pub fn alternating(degree: usize) -> Self {
        if degree < 3 {
            return Self::trivial(degree);
        }
        let gens = (2..degree)
            .map(|k| Permutation::from_cycles(degree, &[vec![0, 1, k]]).expect("in range"))
            .collect();
        Self::new(gens).expect("generators share a degree")
    }

    fn from_chain(generators: Vec<Permutation>, chain: StabChain) -> Self {
        let degree = chain.degree;
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        let lock = OnceLock::new();
        let _ = lock.set(chain);
        PermutationGroup {
            degree,
            generators,
            base_prefix: Vec::new(),
            chain: lock,
        }
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &self.base_prefix))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    /// All strong generators, deduplicated.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.chain().levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch(self.degree, p.degree()).into());
        }
        Ok(self.chain().contains(p))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermutationGroup) -> Result<bool, GroupError> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ⊴ ambient`: a subgroup closed under conjugation by the
    /// ambient generators.
    pub fn is_normal_in(&self, ambient: &PermutationGroup) -> Result<bool, GroupError> {
        if !ambient.contains_group(self)? {
            return Ok(false);
        }
        for n in &self.generators {
            for g in ambient.generators() {
                if !self.contains(&n.conjugate_by(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let mut orbit = self.orbit(p);
                orbit.iter().for_each(|&q| seen[q] = true);
                orbit.sort_unstable();
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Minimal nontrivial block systems; empty iff the group is primitive.
    pub fn block_systems(&self) -> Result<Vec<BlockSystem>, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::Intransitive);
        }
        Ok(blocks::minimal_block_systems(self.degree, &self.generators))
    }

    pub fn is_primitive(&self) -> bool {
        self.is_transitive()
            && blocks::minimal_block_systems(self.degree, &self.generators).is_empty()
    }

    /// Transitive on ordered `k`-tuples of distinct points.
    ///
    /// Read off a chain with base `0, 1, …, k−1`: the group is
    /// `k`-transitive iff the fundamental orbit at level `j` has size
    /// `degree − j` for each `j < k`, i.e. each successive point
    /// stabilizer is transitive on the remaining points.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool, GroupError> {
        if k == 0 || k > self.degree {
            return Err(GroupError::KOutOfRange {
                k,
                degree: self.degree,
            });
        }
        if !self.is_transitive() {
            return Ok(false);
        }
        let prefix: Vec<usize> = (0..k).collect();
        let chain = self.chain_with_prefix(&prefix);
        Ok(chain
            .levels
            .iter()
            .take(k)
            .enumerate()
            .all(|(j, level)| level.orbit_len() == self.degree - j))
    }

    fn chain_with_prefix(&self, prefix: &[usize]) -> StabChain {
        let current = self.chain();
        let base = current.base();
        let mut wanted: Vec<usize> = prefix.to_vec();
        wanted.sort_unstable();
        if base.len() >= prefix.len() {
            let mut head = base[..prefix.len()].to_vec();
            head.sort_unstable();
            if head == wanted {
                return current.clone();
            }
        }
        StabChain::build(self.degree, &self.generators, prefix)
    }

    /// Subgroup fixing every listed point.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup, GroupError> {
        if let Some(&p) = points.iter().find(|&&p| p >= self.degree) {
            return Err(GroupError::PointOutOfRange {
                point: p,
                degree: self.degree,
            });
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        let chain = self.chain_with_prefix(&prefix);
        let tail = chain.tail(prefix.len());
        let gens = tail.levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        Ok(PermutationGroup::from_chain(gens, tail))
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermutationGroup, GroupError> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(GroupError::NotInGroup(s.to_string()));
            }
        }
        let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut chain = StabChain::build(self.degree, &gens, &[]);
        let mut queue = gens.clone();
        while let Some(n) = queue.pop() {
            for g in &self.generators {
                let c = n.conjugate_by(g);
                if chain.extend(&c) {
                    gens.push(c.clone());
                    queue.push(c);
                }
            }
        }
        Ok(PermutationGroup::from_chain(gens, chain))
    }

    /// A subset of the generators (in order) generating the same group,
    /// dropping any generator already in the span of its predecessors.
    pub fn reduced_generators(&self) -> Vec<Permutation> {
        let mut kept = Vec::new();
        let mut chain = StabChain::build(self.degree, &[], &[]);
        for g in &self.generators {
            if chain.extend(g) {
                kept.push(g.clone());
            }
        }
        kept
    }

    pub fn all_generators_even(&self) -> bool {
        self.generators.iter().all(|g| g.parity().is_even())
    }

    pub fn classify_natural(&self) -> NaturalClass {
        if !self.is_transitive() {
            return NaturalClass::Other;
        }
        let order = self.order();
        let full = factorial(self.degree);
        if order == full {
            NaturalClass::Symmetric
        } else if order * 2u32 == full && self.all_generators_even() {
            NaturalClass::Alternating
        } else {
            NaturalClass::Other
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str, d: usize) -> Permutation {
        parse_cycles(s, Some(d)).unwrap()
    }

    fn group(gens: &[&str], d: usize) -> PermutationGroup {
        PermutationGroup::new(gens.iter().map(|s| p(s, d)).collect()).unwrap()
    }

    fn a5() -> PermutationGroup {
        group(&["(1,2,3,4,5)", "(1,2,3)"], 5)
    }

    #[test]
    fn orders_of_examples() {
        assert_eq!(a5().order(), BigUint::from(60u32));
        assert_eq!(group(&["(1,2,3,4,5)", "(1,2)"], 5).order(), BigUint::from(120u32));
        assert_eq!(PermutationGroup::trivial(4).order(), BigUint::one());
        assert_eq!(group(&["(1,2,3,4,5,6,7)"], 7).order(), BigUint::from(7u32));
        let case_c = group(&["(1,2,3,4,5,6)", "(1,2)(6,7,8,9)"], 9);
        assert_eq!(case_c.order(), BigUint::from(362880u32));
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        for n in 1..=12 {
            assert_eq!(PermutationGroup::symmetric(n).order(), factorial(n), "S_{n}");
            let expected = if n < 2 { BigUint::one() } else { factorial(n) / 2u32 };
            assert_eq!(PermutationGroup::alternating(n).order(), expected, "A_{n}");
        }
        assert_eq!(
            PermutationGroup::symmetric(23).order().to_string(),
            "25852016738884976640000"
        );
    }

    #[test]
    fn membership() {
        let g = a5();
        assert!(g.contains(&p("(1,2,3)", 5)).unwrap());
        assert!(!g.contains(&p("(1,2)", 5)).unwrap());
        assert!(g.contains(&Permutation::identity(5)).unwrap());
        assert!(g.contains(&p("(1,2,3)", 6)).is_err());
        let s4 = PermutationGroup::symmetric(4);
        assert!(s4.contains(&p("(1,3)(2,4)", 4)).unwrap());
    }

    #[test]
    fn group_errors() {
        assert!(matches!(PermutationGroup::new(vec![]), Err(GroupError::NoGenerators)));
        assert!(matches!(
            PermutationGroup::new(vec![p("(1,2)", 2), p("(1,2)", 3)]),
            Err(GroupError::Perm(PermError::DegreeMismatch(2, 3)))
        ));
    }

    #[test]
    fn transitivity() {
        assert!(group(&["(1,2,3,4)"], 4).is_transitive());
        assert!(!group(&["(1,2)"], 3).is_transitive());
        assert!(group(&["(1,2,3,4,5,6)", "(1,2)(6,7,8,9)"], 9).is_transitive());
    }

    #[test]
    fn blocks_of_cyclic_four() {
        let systems = group(&["(1,2,3,4)"], 4).block_systems().unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].blocks(), vec![vec![0, 2], vec![1, 3]]);
        assert!(a5().block_systems().unwrap().is_empty());
        assert!(a5().is_primitive());
        let case_c = group(&["(1,2,3,4,5,6)", "(1,2)(6,7,8,9)"], 9);
        assert!(case_c.block_systems().unwrap().is_empty());
        assert!(matches!(
            group(&["(1,2)", "(3,4)"], 4).block_systems(),
            Err(GroupError::Intransitive)
        ));
    }

    #[test]
    fn minimal_systems_only() {
        // C_8 has systems with blocks of size 2 and 4; only size 2 is minimal.
        let systems = group(&["(1,2,3,4,5,6,7,8)"], 8).block_systems().unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].block_size(), 2);
    }

    #[test]
    fn k_transitivity() {
        let s4 = PermutationGroup::symmetric(4);
        assert!(s4.is_k_transitive(4).unwrap());
        assert!(a5().is_k_transitive(3).unwrap());
        assert!(!a5().is_k_transitive(4).unwrap());
        let case_c = group(&["(1,2,3,4,5,6)", "(1,2)(6,7,8,9)"], 9);
        assert!(case_c.is_k_transitive(4).unwrap());
        assert!(matches!(s4.is_k_transitive(0), Err(GroupError::KOutOfRange { .. })));
        assert!(matches!(s4.is_k_transitive(5), Err(GroupError::KOutOfRange { .. })));
        assert!(!group(&["(1,2)"], 3).is_k_transitive(1).unwrap());
    }

    #[test]
    fn normal_closures() {
        let s4 = PermutationGroup::symmetric(4);
        let v4 = s4.normal_closure(&[p("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(v4.order(), BigUint::from(4u32));
        let triv = s4.normal_closure(&[Permutation::identity(4)]).unwrap();
        assert_eq!(triv.order(), BigUint::one());
        let s5 = PermutationGroup::symmetric(5);
        let a5 = s5.normal_closure(&[p("(1,2,3)", 5)]).unwrap();
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(matches!(
            a5.normal_closure(&[p("(1,2)", 5)]),
            Err(GroupError::NotInGroup(_))
        ));
    }

    #[test]
    fn stabilizers() {
        let c5 = group(&["(1,2,3,4,5)"], 5);
        assert_eq!(c5.pointwise_stabilizer(&[4]).unwrap().order(), BigUint::one());
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(a5().pointwise_stabilizer(&all).unwrap().order(), BigUint::one());
        let s3 = PermutationGroup::symmetric(3);
        let stab = s3.pointwise_stabilizer(&[0]).unwrap();
        assert_eq!(stab.order(), BigUint::from(2u32));
        assert!(stab.generators().iter().all(|g| g.apply(0) == 0));
        let s6 = PermutationGroup::symmetric(6);
        assert_eq!(s6.pointwise_stabilizer(&[5, 2]).unwrap().order(), BigUint::from(24u32));
    }

    #[test]
    fn natural_classification() {
        let case_c = group(&["(1,2,3,4,5,6)", "(1,2)(6,7,8,9)"], 9);
        assert_eq!(case_c.classify_natural(), NaturalClass::Symmetric);
        assert_eq!(a5().classify_natural(), NaturalClass::Alternating);
        assert_eq!(group(&["(1,2,3,4)"], 4).classify_natural(), NaturalClass::Other);
    }

    #[test]
    fn reduced_generators_span() {
        let g = group(&["(1,2,3)", "(1,3,2)", "(1,2,3,4,5)", "(1,2)"], 5);
        let r = g.reduced_generators();
        assert_eq!(r.len(), 3);
        assert_eq!(PermutationGroup::new(r).unwrap().order(), BigUint::from(120u32));
    }
}
