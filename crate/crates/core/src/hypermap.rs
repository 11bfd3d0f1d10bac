//! Oriented regular hypermaps as marked groups `(⟨x, y⟩, x, y)` and their
//! duality invariants.
//!
//! Self-duality and the duality group are both read off the subgroup
//! `K ≤ G × G` generated by `(x, y)` and `(y, x)`, realized as a
//! permutation group on two disjoint copies of the domain. Both coordinate
//! projections of `K` are onto `G`, and swapping coordinates maps `K` to
//! itself, so the two kernels coincide; call that common kernel `D`. Then
//! `K/(D × D)` is the graph of an automorphism of `G/D` exchanging `xD` and
//! `yD`, so `G/D` is self-dual and `|K| = |G|·|D|`. Conversely, if `G/M` is
//! self-dual via `φ`, then the image of `K` in `G/M × G/M` lies in the
//! graph of `φ`, which forces `D ≤ M`. Hence `D` is the duality group, and
//! the hypermap is self-dual iff `|K| = |G|`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact;
use crate::group::{GroupError, NaturalClass, PermutationGroup};
use crate::perm::{Parity, PermError, Permutation};

/// Quotients of at most this index are rebuilt during [`OrientedRegularHypermap::analyze`]
/// to confirm that they are self-dual.
pub const QUOTIENT_CHECK_LIMIT: usize = 240;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypermapError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("subgroup is not contained in the monodromy group")]
    NotSubgroup,
    #[error("subgroup is not normal in the monodromy group")]
    NotNormal,
    #[error("monodromy group is {0}, not the full symmetric group")]
    NotSymmetric(NaturalClass),
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub struct OrientedRegularHypermap {
    x: Permutation,
    y: Permutation,
    monodromy: OnceLock<PermutationGroup>,
    product: OnceLock<PermutationGroup>,
}

impl Clone for OrientedRegularHypermap {
    fn clone(&self) -> Self {
        OrientedRegularHypermap {
            x: self.x.clone(),
            y: self.y.clone(),
            monodromy: self.monodromy.clone(),
            product: self.product.clone(),
        }
    }
}

impl PartialEq for OrientedRegularHypermap {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl Eq for OrientedRegularHypermap {}

impl fmt::Debug for OrientedRegularHypermap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypermap(x = {}, y = {}, degree {})", self.x, self.y, self.degree())
    }
}

impl OrientedRegularHypermap {
    pub fn new(x: Permutation, y: Permutation) -> Result<Self, HypermapError> {
        if x.degree() != y.degree() {
            return Err(PermError::DegreeMismatch(x.degree(), y.degree()).into());
        }
        Ok(OrientedRegularHypermap {
            x,
            y,
            monodromy: OnceLock::new(),
            product: OnceLock::new(),
        })
    }

    /// Hypervertex rotation.
    pub fn x(&self) -> &Permutation {
        &self.x
    }

    /// Hyperface rotation.
    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn dual(&self) -> Self {
        Self::new(self.y.clone(), self.x.clone()).expect("equal degrees")
    }

    pub fn monodromy(&self) -> &PermutationGroup {
        self.monodromy.get_or_init(|| {
            PermutationGroup::new(vec![self.x.clone(), self.y.clone()]).expect("equal degrees")
        })
    }

    /// `K = ⟨(x, y), (y, x)⟩` on `2·degree` points, with a base exhausting
    /// the first copy before touching the second.
    pub fn product_group(&self) -> &PermutationGroup {
        self.product.get_or_init(|| {
            let d = self.degree();
            PermutationGroup::with_base_prefix(
                vec![self.x.direct_sum(&self.y), self.y.direct_sum(&self.x)],
                (0..d).collect(),
            )
            .expect("valid product generators")
        })
    }

    pub fn type_triple(&self) -> TypeTriple {
        TypeTriple {
            l: self.x.order(),
            m: (&self.x * &self.y).order(),
            n: self.y.order(),
        }
    }

    pub fn duality_type(&self) -> DualityType {
        DualityType::new(self.x.order(), self.y.order())
    }

    /// Whether `x ↦ y, y ↦ x` extends to an automorphism of the monodromy group.
    pub fn is_self_dual(&self) -> bool {
        self.product_group().order() == self.monodromy().order()
    }

    /// `D = { g : (1, g) ∈ K }` as a subgroup of the monodromy group.
    pub fn duality_group(&self) -> PermutationGroup {
        let d = self.degree();
        let first_copy: Vec<usize> = (0..d).collect();
        let kernel = self
            .product_group()
            .pointwise_stabilizer(&first_copy)
            .expect("points in range");
        let gens: Vec<Permutation> = kernel
            .generators()
            .iter()
            .map(|g| g.restrict(d, d))
            .filter(|g| !g.is_identity())
            .collect();
        if gens.is_empty() {
            PermutationGroup::trivial(d)
        } else {
            PermutationGroup::new(gens).expect("equal degrees")
        }
    }

    pub fn duality_index(&self) -> BigUint {
        self.product_group().order() / self.monodromy().order()
    }

    /// The action of the monodromy group on the cosets of a normal subgroup.
    pub fn quotient(&self, normal: &PermutationGroup) -> Result<Self, HypermapError> {
        let g = self.monodromy();
        if normal.degree() != self.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), normal.degree()).into());
        }
        if !g.contains_group(normal)? {
            return Err(HypermapError::NotSubgroup);
        }
        if !normal.is_normal_in(g)? {
            return Err(HypermapError::NotNormal);
        }
        let gens = [&self.x, &self.y];
        let mut reps = vec![Permutation::identity(self.degree())];
        let mut rep_invs = vec![Permutation::identity(self.degree())];
        let mut action: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        let mut head = 0;
        while head < reps.len() {
            for (k, s) in gens.iter().enumerate() {
                let c = *s * &reps[head];
                let mut found = None;
                for (i, r_inv) in rep_invs.iter().enumerate() {
                    if normal.contains(&(r_inv * &c))? {
                        found = Some(i);
                        break;
                    }
                }
                let idx = match found {
                    Some(i) => i,
                    None => {
                        rep_invs.push(c.inverse());
                        reps.push(c);
                        reps.len() - 1
                    }
                };
                action[k].push(idx);
            }
            head += 1;
        }
        let [ax, ay] = action;
        let q = Self::new(Permutation::from_images(ax)?, Permutation::from_images(ay)?)?;
        let expected = g.order() / normal.order();
        if q.monodromy().order() != expected {
            return Err(HypermapError::Verification(format!(
                "quotient monodromy order {} differs from index {}",
                q.monodromy().order(),
                expected
            )));
        }
        Ok(q)
    }

    /// Computes every invariant and cross-checks the algebraic identities
    /// tying them together.
    pub fn analyze(&self) -> Result<DualityReport, HypermapError> {
        let g = self.monodromy();
        let monodromy_order = g.order();
        let k_order = self.product_group().order();
        let (duality_index, rem) = k_order.div_rem(&monodromy_order);
        if rem != BigUint::ZERO {
            return Err(HypermapError::Verification(
                "|K| is not a multiple of |G|".into(),
            ));
        }
        let dgroup = self.duality_group();
        if dgroup.order() != duality_index {
            return Err(HypermapError::Verification(format!(
                "|D| = {} but |K|/|G| = {}",
                dgroup.order(),
                duality_index
            )));
        }
        if !dgroup.is_normal_in(g)? {
            return Err(HypermapError::Verification(
                "duality group is not a normal subgroup".into(),
            ));
        }
        let index = &monodromy_order / &duality_index;
        if index <= BigUint::from(QUOTIENT_CHECK_LIMIT) && !dgroup.is_trivial() {
            let q = self.quotient(&dgroup)?;
            if !q.is_self_dual() {
                return Err(HypermapError::Verification(
                    "quotient by the duality group is not self-dual".into(),
                ));
            }
        }
        let self_dual = duality_index.is_one();
        let extreme = duality_index == monodromy_order;
        Ok(DualityReport {
            degree: self.degree(),
            x: self.x.clone(),
            y: self.y.clone(),
            x_parity: self.x.parity(),
            y_parity: self.y.parity(),
            type_triple: self.type_triple(),
            duality_type: self.duality_type(),
            self_dual,
            duality_index,
            duality_group_generators: dgroup.reduced_generators(),
            extreme,
            monodromy_class: g.classify_natural(),
            monodromy_order,
        })
    }

    /// Parity-based prediction for hypermaps whose monodromy group is the
    /// full symmetric group on the domain.
    pub fn classify_sn_pair(&self) -> Result<SnPrediction, HypermapError> {
        let class = self.monodromy().classify_natural();
        if class != NaturalClass::Symmetric {
            return Err(HypermapError::NotSymmetric(class));
        }
        Ok(
            match (self.x.parity(), self.y.parity(), self.degree()) {
                (Parity::Odd, Parity::Odd, 4) => SnPrediction::S4Exceptional,
                (Parity::Odd, Parity::Odd, _) => SnPrediction::SelfDualOrHalf,
                _ => SnPrediction::Extreme,
            },
        )
    }
}

/// What the parity of the generators predicts for a hypermap on `S_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SnPrediction {
    /// At least one generator is even: index `d!`.
    Extreme,
    /// Both odd, `d ≠ 4`: index `1` or `d!/2`.
    SelfDualOrHalf,
    /// Both odd, `d = 4`: index `1` or `4`.
    S4Exceptional,
}

impl SnPrediction {
    /// The admissible duality indices on `degree` points.
    pub fn admissible(self, degree: usize) -> Vec<BigUint> {
        let full = crate::group::factorial(degree);
        match self {
            SnPrediction::Extreme => vec![full],
            SnPrediction::SelfDualOrHalf => vec![BigUint::one(), full / 2u32],
            SnPrediction::S4Exceptional => vec![BigUint::one(), BigUint::from(4u32)],
        }
    }

    pub fn admits(self, degree: usize, index: &BigUint) -> bool {
        self.admissible(degree).contains(index)
    }
}

/// Orders of `x`, `x·y` and `y`: valencies of hypervertices, hyperedges
/// and hyperfaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TypeTriple {
    #[serde(with = "exact")]
    pub l: BigUint,
    #[serde(with = "exact")]
    pub m: BigUint,
    #[serde(with = "exact")]
    pub n: BigUint,
}

impl fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.l, self.m, self.n)
    }
}

/// The unordered pair `{order(x), order(y)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualityType {
    lo: BigUint,
    hi: BigUint,
}

impl DualityType {
    pub fn new(a: BigUint, b: BigUint) -> Self {
        if a <= b {
            DualityType { lo: a, hi: b }
        } else {
            DualityType { lo: b, hi: a }
        }
    }

    pub fn from_pair(a: u64, b: u64) -> Self {
        Self::new(BigUint::from(a), BigUint::from(b))
    }

    pub fn pair(&self) -> (&BigUint, &BigUint) {
        (&self.lo, &self.hi)
    }
}

impl fmt::Display for DualityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl Serialize for DualityType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Pair<'a>(
            #[serde(with = "exact")] &'a BigUint,
            #[serde(with = "exact")] &'a BigUint,
        );
        Pair(&self.lo, &self.hi).serialize(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub degree: usize,
    #[serde(serialize_with = "cycle_string")]
    pub x: Permutation,
    #[serde(serialize_with = "cycle_string")]
    pub y: Permutation,
    pub x_parity: Parity,
    pub y_parity: Parity,
    pub type_triple: TypeTriple,
    pub duality_type: DualityType,
    pub self_dual: bool,
    #[serde(with = "exact")]
    pub duality_index: BigUint,
    #[serde(serialize_with = "cycle_strings")]
    pub duality_group_generators: Vec<Permutation>,
    pub extreme: bool,
    pub monodromy_class: NaturalClass,
    #[serde(with = "exact")]
    pub monodromy_order: BigUint,
}

pub(crate) fn cycle_string<S: Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

pub(crate) fn cycle_strings<S: Serializer>(ps: &[Permutation], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}
