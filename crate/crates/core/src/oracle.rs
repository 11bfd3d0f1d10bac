//! Brute-force ground truth for small groups.
//!
//! Nothing here touches stabilizer chains: groups are handled through their
//! generators and explicit element tables, so agreement with the engine is
//! an independent check.

use std::collections::HashMap;

use thiserror::Error;

use crate::group::PermutationGroup;
use crate::hypermap::OrientedRegularHypermap;
use crate::perm::Permutation;

pub const DEFAULT_CUTOFF: usize = 100_000;
pub const CUTOFF_ENV: &str = "HYPERDUAL_ORACLE_CUTOFF";
pub const MAX_PARTITION_DEGREE: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("group has more than {0} elements")]
    CutoffExceeded(usize),
    #[error("degree {0} exceeds the partition enumeration limit")]
    DegreeTooLarge(usize),
    #[error("group is not transitive")]
    Intransitive,
    #[error("minimal normal subgroup with self-dual quotient is not unique: orders {0} and {1} are incomparable")]
    NonUniqueMinimum(usize, usize),
}

/// Element cutoff, overridable through `HYPERDUAL_ORACLE_CUTOFF`.
pub fn default_cutoff() -> usize {
    std::env::var(CUTOFF_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CUTOFF)
}

/// Every element of a group, indexed.
#[derive(Debug, Clone)]
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generators: Vec<usize>,
    cutoff: usize,
}

impl ElementTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&(&self.elements[a] * &self.elements[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Conjugacy classes, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            class_of[start] = id;
            let mut head = 0;
            while head < class.len() {
                let e = class[head];
                head += 1;
                for &g in &self.generators {
                    let c = self.index[&self.elements[e].conjugate_by(&self.elements[g])];
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        class.push(c);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Element set of the subgroup generated by `seeds`, sorted.
    pub fn closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.len()];
        let mut elems = vec![self.identity()];
        member[self.identity()] = true;
        let mut gens: Vec<usize> = Vec::new();
        for &s in seeds {
            if member[s] {
                continue;
            }
            gens.push(s);
            // Re-close from scratch with the enlarged generator list.
            let mut head = 0;
            while head < elems.len() {
                let e = elems[head];
                head += 1;
                for &g in &gens {
                    let c = self.mul(e, g);
                    if !member[c] {
                        member[c] = true;
                        elems.push(c);
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Minimum number of points moved by a non-identity element.
    pub fn minimal_degree(&self) -> Option<usize> {
        self.elements
            .iter()
            .filter(|e| !e.is_identity())
            .map(Permutation::support_size)
            .min()
    }
}

/// Breadth-first closure of the generators under composition.
pub fn enumerate_elements(g: &PermutationGroup, cutoff: usize) -> Result<ElementTable, OracleError> {
    let degree = g.degree();
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0);
    let gens = g.generators();
    let mut head = 0;
    while head < elements.len() {
        for s in gens {
            let c = s * &elements[head];
            if !index.contains_key(&c) {
                if elements.len() >= cutoff {
                    return Err(OracleError::CutoffExceeded(cutoff));
                }
                index.insert(c.clone(), elements.len());
                elements.push(c);
            }
        }
        head += 1;
    }
    let generators = gens.iter().map(|s| index[s]).collect();
    Ok(ElementTable {
        elements,
        index,
        generators,
        cutoff,
    })
}

/// A subgroup of an [`ElementTable`] given by its sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn permutations(&self, table: &ElementTable) -> Vec<Permutation> {
        self.elements.iter().map(|&i| table.element(i).clone()).collect()
    }

    pub fn to_group(&self, table: &ElementTable) -> PermutationGroup {
        PermutationGroup::new(self.permutations(table)).expect("common degree")
    }
}

/// All normal subgroups, ascending by order (ties by element set).
///
/// Each is the join of the normal closures of the conjugacy classes it
/// contains, so joins of class closures reach them all.
pub fn all_normal_subgroups(table: &ElementTable) -> Vec<Subgroup> {
    let mut subs: Vec<Subgroup> = Vec::new();
    for class in table.conjugacy_classes() {
        let s = Subgroup {
            elements: table.closure(&class),
        };
        if !subs.contains(&s) {
            subs.push(s);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = subs.clone();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                let mut seeds = a.elements.clone();
                seeds.extend(&b.elements);
                let join = Subgroup {
                    elements: table.closure(&seeds),
                };
                if !subs.contains(&join) {
                    subs.push(join);
                    changed = true;
                }
            }
        }
    }
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    subs
}

/// Whether `x̄ ↦ ȳ, ȳ ↦ x̄` extends to an automorphism of `G/N`.
///
/// The candidate images of the generators are fixed by the swap, so the
/// search reduces to propagating the assignment over the Cayley graph of the
/// quotient and checking it never conflicts and is injective.
pub fn quotient_is_self_dual(table: &ElementTable, normal: &Subgroup, x: usize, y: usize) -> bool {
    let coset_of = coset_labels(table, normal);
    let num_cosets = table.len() / normal.order();
    let mut rep = vec![usize::MAX; num_cosets];
    for (e, &c) in coset_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = e;
        }
    }
    let mut image = vec![usize::MAX; num_cosets];
    let start = coset_of[table.identity()];
    image[start] = start;
    let mut queue = vec![start];
    while let Some(c) = queue.pop() {
        let d = image[c];
        for (s, t) in [(x, y), (y, x)] {
            let c2 = coset_of[table.mul(rep[c], s)];
            let d2 = coset_of[table.mul(rep[d], t)];
            if image[c2] == usize::MAX {
                image[c2] = d2;
                queue.push(c2);
            } else if image[c2] != d2 {
                return false;
            }
        }
    }
    let mut hit = vec![false; num_cosets];
    image.iter().all(|&d| d != usize::MAX && !std::mem::replace(&mut hit[d], true))
}

/// Label of the coset `gN` for every element `g`.
fn coset_labels(table: &ElementTable, normal: &Subgroup) -> Vec<usize> {
    let mut label = vec![usize::MAX; table.len()];
    let mut next = 0;
    for g in 0..table.len() {
        if label[g] != usize::MAX {
            continue;
        }
        for &n in &normal.elements {
            label[table.mul(g, n)] = next;
        }
        next += 1;
    }
    label
}

/// Result of the exhaustive duality-group search.
#[derive(Debug, Clone)]
pub struct BruteDuality {
    pub table: ElementTable,
    pub duality_group: Subgroup,
    /// Every normal subgroup with a self-dual quotient.
    pub self_dual_quotients: Vec<Subgroup>,
}

/// The smallest normal subgroup with self-dual quotient, found by trying
/// every normal subgroup; errors if the minimum is not unique under inclusion.
pub fn brute_duality_group(h: &OrientedRegularHypermap, cutoff: usize) -> Result<BruteDuality, OracleError> {
    let table = enumerate_elements(h.monodromy(), cutoff)?;
    let x = table.index_of(h.x()).expect("generator enumerated");
    let y = table.index_of(h.y()).expect("generator enumerated");
    let qualifying: Vec<Subgroup> = all_normal_subgroups(&table)
        .into_iter()
        .filter(|n| quotient_is_self_dual(&table, n, x, y))
        .collect();
    let minimum = qualifying.first().cloned().expect("the whole group always qualifies");
    for other in &qualifying[1..] {
        if !minimum.is_subset_of(other) {
            return Err(OracleError::NonUniqueMinimum(minimum.order(), other.order()));
        }
    }
    Ok(BruteDuality {
        table,
        duality_group: minimum,
        self_dual_quotients: qualifying,
    })
}

fn orbit_of_zero(degree: usize, gens: &[Permutation]) -> usize {
    let mut seen = vec![false; degree];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    count
}

/// Every nontrivial invariant partition, as canonical label vectors, found
/// by filtering all set partitions of the domain.
pub fn brute_block_systems(g: &PermutationGroup) -> Result<Vec<Vec<usize>>, OracleError> {
    let degree = g.degree();
    if degree > MAX_PARTITION_DEGREE {
        return Err(OracleError::DegreeTooLarge(degree));
    }
    let gens = g.generators();
    if orbit_of_zero(degree, gens) != degree {
        return Err(OracleError::Intransitive);
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; degree];
    set_partitions(&mut labels, 1, 0, &mut |labels, blocks| {
        if blocks > 1 && blocks < degree && gens.iter().all(|s| preserves(labels, blocks, s)) {
            out.push(labels.to_vec());
        }
    });
    Ok(out)
}

fn preserves(labels: &[usize], blocks: usize, g: &Permutation) -> bool {
    let mut image = vec![usize::MAX; blocks];
    (0..labels.len()).all(|p| {
        let b = labels[g.apply(p)];
        let slot = &mut image[labels[p]];
        if *slot == usize::MAX {
            *slot = b;
        }
        *slot == b
    })
}

/// Restricted growth strings: `labels[0] = 0`, each later label at most one
/// more than the maximum so far.
fn set_partitions(labels: &mut [usize], pos: usize, max: usize, visit: &mut dyn FnMut(&[usize], usize)) {
    if pos == labels.len() {
        visit(labels, max + 1);
        return;
    }
    for l in 0..=max + 1 {
        labels[pos] = l;
        set_partitions(labels, pos + 1, max.max(l), visit);
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

    fn hyp(x: &str, y: &str, d: usize) -> OrientedRegularHypermap {
        OrientedRegularHypermap::new(p(x, d), p(y, d)).unwrap()
    }

    #[test]
    fn element_counts() {
        let s4 = group(&["(1,2,3,4)", "(1,2)"], 4);
        assert_eq!(enumerate_elements(&s4, DEFAULT_CUTOFF).unwrap().len(), 24);
        let a5 = group(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        assert_eq!(enumerate_elements(&a5, DEFAULT_CUTOFF).unwrap().len(), 60);
        let triv = PermutationGroup::trivial(3);
        assert_eq!(enumerate_elements(&triv, DEFAULT_CUTOFF).unwrap().len(), 1);
        assert_eq!(
            enumerate_elements(&s4, 10).unwrap_err(),
            OracleError::CutoffExceeded(10)
        );
    }

    #[test]
    fn normal_subgroups_of_small_groups() {
        let s4 = enumerate_elements(&group(&["(1,2,3,4)", "(1,2)"], 4), DEFAULT_CUTOFF).unwrap();
        let orders: Vec<usize> = all_normal_subgroups(&s4).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let s5 = enumerate_elements(&group(&["(1,2,3,4,5)", "(1,2)"], 5), DEFAULT_CUTOFF).unwrap();
        let orders: Vec<usize> = all_normal_subgroups(&s5).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 60, 120]);
        let a5 = enumerate_elements(&group(&["(1,2,3,4,5)", "(1,2,3)"], 5), DEFAULT_CUTOFF).unwrap();
        let orders: Vec<usize> = all_normal_subgroups(&a5).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 60]);
    }

    #[test]
    fn class_counts() {
        let s5 = enumerate_elements(&group(&["(1,2,3,4,5)", "(1,2)"], 5), DEFAULT_CUTOFF).unwrap();
        assert_eq!(s5.conjugacy_classes().len(), 7);
        assert_eq!(s5.minimal_degree(), Some(2));
    }

    #[test]
    fn brute_duality_examples() {
        let a5 = brute_duality_group(&hyp("(1,2,3,4,5)", "(1,2,3)", 5), DEFAULT_CUTOFF).unwrap();
        assert_eq!(a5.duality_group.order(), 60);
        let s4 = brute_duality_group(&hyp("(1,2)", "(1,2,3,4)", 4), DEFAULT_CUTOFF).unwrap();
        let mut v4: Vec<String> = s4
            .duality_group
            .permutations(&s4.table)
            .iter()
            .map(|q| q.to_string())
            .collect();
        v4.sort();
        assert_eq!(v4, vec!["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]);
        let same = brute_duality_group(&hyp("(1,2,3)(4,5)", "(1,2,3)(4,5)", 5), DEFAULT_CUTOFF).unwrap();
        assert_eq!(same.duality_group.order(), 1);
    }

    #[test]
    fn block_enumeration() {
        let c4 = group(&["(1,2,3,4)"], 4);
        assert_eq!(brute_block_systems(&c4).unwrap(), vec![vec![0, 1, 0, 1]]);
        let a5 = group(&["(1,2,3,4,5)", "(1,2,3)"], 5);
        assert!(brute_block_systems(&a5).unwrap().is_empty());
        assert_eq!(
            brute_block_systems(&group(&["(1,2)", "(3,4)"], 4)).unwrap_err(),
            OracleError::Intransitive
        );
        assert_eq!(
            brute_block_systems(&PermutationGroup::symmetric(11)).unwrap_err(),
            OracleError::DegreeTooLarge(11)
        );
    }

    #[test]
    fn partition_count_is_bell_number() {
        let mut labels = vec![0; 6];
        let mut count = 0;
        set_partitions(&mut labels, 1, 0, &mut |_, _| count += 1);
        assert_eq!(count, 203);
    }
}
