//! Oriented regular hypermaps given by a pair of permutations `(x, y)`,
//! with exact duality invariants and explicit families of extreme duality
//! index for every attainable duality-type.
//!
//! ```
//! use hyperdual::{parse_cycles, OrientedRegularHypermap};
//!
//! let x = parse_cycles("(1,2,3,4,5)", None).unwrap();
//! let y = parse_cycles("(1,2,3)", Some(5)).unwrap();
//! let h = OrientedRegularHypermap::new(x, y).unwrap();
//! assert_eq!(h.duality_index(), 60u32.into());
//! ```

pub mod cli;
pub mod construct;
pub mod exact;
pub mod group;
pub mod hypermap;
#[doc(hidden)]
pub mod oracle;
pub mod perm;

pub use construct::{CaseTag, ConstructError, ConstructionCertificate, Witness};
pub use group::{BlockSystem, GroupError, NaturalClass, PermutationGroup};
pub use hypermap::{DualityReport, DualityType, HypermapError, OrientedRegularHypermap, SnPrediction, TypeTriple};
pub use perm::{parse_cycles, CycleExpr, Parity, PermError, Permutation};
