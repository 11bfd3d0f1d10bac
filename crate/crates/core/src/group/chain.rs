//! Stabilizer chains (bases and strong generating sets).
//!
//! Construction runs a randomized Schreier–Sims phase seeded from a fixed
//! RNG, then a deterministic completion sweep in which every Schreier
//! generator at every level must sift to the identity. The result is exact
//! regardless of how well the random phase did.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

const RANDOM_SEED: u64 = 0x5eed_d0a1;
/// Consecutive random elements that must sift to the identity before the
/// random phase stops.
const RANDOM_QUIET_ROUNDS: usize = 24;
const PRODUCT_REPLACEMENT_SLOTS: usize = 10;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub base: usize,
    /// Strong generators fixing every earlier base point.
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    /// `transversal[p] = Some((u, u⁻¹))` with `u(base) = p` for `p` in the orbit.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.transversal.iter_mut().for_each(|t| *t = None);
        self.transversal[self.base] = Some((id.clone(), id));
        self.orbit.clear();
        self.orbit.push(self.base);
        let inverses: Vec<Permutation> = self.gens.iter().map(Permutation::inverse).collect();
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            for (s, s_inv) in self.gens.iter().zip(&inverses) {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let (u, u_inv) = self.transversal[beta].as_ref().expect("orbit point");
                    let rep = s * u;
                    let rep_inv = u_inv * s_inv;
                    self.transversal[gamma] = Some((rep, rep_inv));
                    self.orbit.push(gamma);
                }
            }
        }
    }

    pub fn rep(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref().map(|(u, _)| u)
    }

    fn rep_inv(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref().map(|(_, u)| u)
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base begins with `prefix` (in the given order);
    /// further base points are the smallest points moved by residues.
    pub fn build(degree: usize, generators: &[Permutation], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for level in 0..chain.levels.len() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| chain.levels[..level].iter().all(|l| g.apply(l.base) == l.base))
                .cloned()
                .collect();
            chain.levels[level].gens = fixing;
            chain.levels[level].rebuild_orbit(degree);
        }
        chain.random_phase(&gens);
        chain.complete(chain.levels.len());
        chain
    }

    /// Strips `g` through the chain starting at `from`. Returns the residue
    /// and the level at which sifting stopped (`levels.len()` if it passed
    /// every level).
    pub fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base);
            match level.rep_inv(beta) {
                Some(u_inv) => g = u_inv * &g,
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit_len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Adds a non-identity residue `r` (which fixes the base points of
    /// levels `..upto`) to levels `from..=upto`, appending a level if needed.
    fn add_residue(&mut self, r: Permutation, from: usize, upto: usize) {
        if upto == self.levels.len() {
            let b = r.smallest_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for level in from..=upto {
            self.levels[level].gens.push(r.clone());
            self.levels[level].rebuild_orbit(self.degree);
        }
    }

    fn random_phase(&mut self, gens: &[Permutation]) {
        let mut source = ProductReplacement::new(gens, self.degree);
        let mut quiet = 0;
        while quiet < RANDOM_QUIET_ROUNDS {
            let g = source.next();
            let (r, j) = self.sift(&g, 0);
            if r.is_identity() {
                quiet += 1;
            } else {
                self.add_residue(r, 0, j);
                quiet = 0;
            }
        }
    }

    /// Deterministic Schreier–Sims sweep, processing levels bottom-up from
    /// `levels - 1`; on finding a non-sifting Schreier generator the residue
    /// is added and processing resumes at the level where it stopped.
    pub fn complete(&mut self, top: usize) {
        let mut i = top.min(self.levels.len()) as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &beta in &orbit {
                for s in &gens {
                    let gamma = s.apply(beta);
                    let level = &self.levels[lvl];
                    let u = level.rep(beta).expect("orbit point");
                    let u_gamma_inv = level.rep_inv(gamma).expect("orbit closed");
                    let h = &(u_gamma_inv * s) * u;
                    if h.is_identity() {
                        continue;
                    }
                    let (r, j) = self.sift(&h, lvl + 1);
                    if !r.is_identity() {
                        self.add_residue(r, lvl + 1, j);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Adds a new generator of the whole group and restores the chain.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (r, j) = self.sift(g, 0);
        if r.is_identity() {
            return false;
        }
        self.add_residue(r, 0, j);
        self.complete(self.levels.len());
        true
    }

    /// Chain for the stabilizer of the first `k` base points.
    pub fn tail(&self, k: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[k..].to_vec(),
        }
    }
}

/// Random group elements by the product replacement algorithm with an
/// accumulator.
struct ProductReplacement {
    rng: ChaCha8Rng,
    slots: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    fn new(gens: &[Permutation], degree: usize) -> Self {
        let slots: Vec<Permutation> = gens
            .iter()
            .cycle()
            .take(PRODUCT_REPLACEMENT_SLOTS.max(gens.len()))
            .cloned()
            .collect();
        let mut pr = ProductReplacement {
            rng: ChaCha8Rng::seed_from_u64(RANDOM_SEED),
            slots,
            acc: Permutation::identity(degree),
        };
        for _ in 0..50 {
            pr.next();
        }
        pr
    }

    fn next(&mut self) -> Permutation {
        let len = self.slots.len();
        let i = self.rng.gen_range(0..len);
        let mut j = self.rng.gen_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        self.slots[i] = if self.rng.gen_bool(0.5) {
            &self.slots[i] * &self.slots[j]
        } else {
            &self.slots[j] * &self.slots[i]
        };
        self.acc = &self.acc * &self.slots[i];
        self.acc.clone()
    }
}
