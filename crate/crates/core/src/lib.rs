//! Classification of periodic orientation-reversing surface homeomorphisms
//! of order `2q`, `q` even, through their monodromy on the quotient orbifold.
//!
//! The crate is organised bottom-up:
//!
//! * [`zmod`]: exact arithmetic in `Z_n`;
//! * [`datum`]: admissible monodromy vectors, JSON format, Riemann–Hurwitz;
//! * [`moves`]: the automorphism moves `H1`–`H4`, orbits and witnesses;
//! * [`invariants`]: isotropies, `h1`, `l`, `h2` and canonical representatives;
//! * [`classify`]: equivalence, censuses, orbit-oracle verification,
//!   embeddability and the orientable-quotient invariant.
//!
//! ```
//! use orbiclass::{classify, MonodromyDatum};
//!
//! let a = MonodromyDatum::new(8, &[1, 7], &[]).unwrap();
//! let b = MonodromyDatum::new(8, &[3, 5], &[]).unwrap();
//! assert!(!classify::equivalent(&a, &b).unwrap());
//! ```

pub mod classify;
pub mod datum;
pub mod invariants;
pub mod moves;
pub mod zmod;

pub use classify::{
    census, embeddable, equivalent, verify_theorem, CensusParams, CensusReport,
    EmbeddabilityVerdict, VerifyParams, VerifyReport,
};
pub use datum::{MonodromyDatum, OrientableQuotientDatum, RawDatum, ValidationErrors};
pub use invariants::{invariant_tuple, InvariantTuple};
pub use moves::{apply_move, orbit, witness, BfsLimits, Move, MoveKind};
pub use zmod::CyclicValue;
