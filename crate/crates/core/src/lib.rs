//! Covering-based rough sets over finite universes: neighborhoods,
//! minimal descriptions, covering reduction, the block and neighborhood
//! lower/upper approximation operators, and the two families of lower
//! approximation fixed points with a full lattice / algebra
//! classification. A verification harness enumerates coverings of small
//! universes and checks every structural law on each of them.
//!
//! Universes of up to 64 elements run on single-word bit sets; larger
//! universes transparently use dynamic bit vectors with the same
//! semantics. All values are immutable after construction and safe to
//! share across threads.

mod bits;

pub mod approx;
pub mod classify;
pub mod covering;
pub mod descriptions;
pub mod error;
pub mod family;
pub mod hasse;
pub mod reduction;
pub mod set;
pub mod verify;

pub use classify::{AlgebraObstruction, ClassificationReport};
pub use covering::{ApproxSpace, Covering};
pub use descriptions::{MinimalDescriptions, NeighborhoodSystem};
pub use error::Error;
pub use family::{FamilyKind, FixedPointFamily};
pub use hasse::HasseDiagram;
pub use set::{Subset, Universe};
pub use verify::{
    enumerate_coverings, find_counterexample, random_covering, run_theorem_suite,
    run_theorem_suite_capped, Counterexample, GeneratorConfig, SweepSummary, TheoremReport,
};
