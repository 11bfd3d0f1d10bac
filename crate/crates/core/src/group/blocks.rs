//! Block systems of transitive groups.

use std::fmt;

use crate::perm::Permutation;

/// A nontrivial partition of the domain preserved by a group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockSystem {
    /// Block id of each point; ids are numbered by first appearance.
    block_of: Vec<usize>,
    num_blocks: usize,
}

impl BlockSystem {
    /// Canonicalizes arbitrary labels (ids renumbered by first appearance).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let block_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        BlockSystem {
            block_of,
            num_blocks: map.len(),
        }
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn block_size(&self) -> usize {
        self.block_of.len() / self.num_blocks
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (p, &b) in self.block_of.iter().enumerate() {
            out[b].push(p);
        }
        out
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &BlockSystem) -> bool {
        let mut image = vec![usize::MAX; self.num_blocks];
        self.block_of.iter().zip(&other.block_of).all(|(&a, &b)| {
            if image[a] == usize::MAX {
                image[a] = b;
            }
            image[a] == b
        })
    }

    pub fn is_invariant_under(&self, g: &Permutation) -> bool {
        let mut image = vec![usize::MAX; self.num_blocks];
        (0..self.block_of.len()).all(|p| {
            let a = self.block_of[p];
            let b = self.block_of[g.apply(p)];
            if image[a] == usize::MAX {
                image[a] = b;
            }
            image[a] == b
        })
    }
}

impl fmt::Debug for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            write!(f, "{{")?;
            for (k, p) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Finest partition invariant under `gens` in which `alpha` and `beta`
/// share a block.
pub(crate) fn minimal_block_system(
    degree: usize,
    gens: &[Permutation],
    alpha: usize,
    beta: usize,
) -> BlockSystem {
    let mut uf = UnionFind::new(degree);
    let mut pending = vec![(alpha, beta)];
    uf.union(alpha, beta);
    while let Some((a, b)) = pending.pop() {
        for g in gens {
            let (ga, gb) = (g.apply(a), g.apply(b));
            if uf.union(ga, gb) {
                pending.push((ga, gb));
            }
        }
    }
    let labels: Vec<usize> = (0..degree).map(|p| uf.find(p)).collect();
    BlockSystem::from_labels(&labels)
}

/// All minimal nontrivial block systems of a transitive group.
pub(crate) fn minimal_block_systems(degree: usize, gens: &[Permutation]) -> Vec<BlockSystem> {
    let mut found: Vec<BlockSystem> = Vec::new();
    for beta in 1..degree {
        let sys = minimal_block_system(degree, gens, 0, beta);
        if sys.num_blocks() > 1 && !found.contains(&sys) {
            found.push(sys);
        }
    }
    let minimal: Vec<BlockSystem> = found
        .iter()
        .filter(|s| !found.iter().any(|t| t != *s && t.refines(s)))
        .cloned()
        .collect();
    minimal
}
