//! Signatures of finite-index subgroups of cocompact NEC groups.
//!
//! A non-Euclidean crystallographic (NEC) group is a discrete cocompact
//! group of isometries of the hyperbolic plane, possibly containing
//! orientation-reversing elements. Up to isomorphism it is described by a
//! signature
//!
//! ```text
//! (g; ±; [m1, ..., mr]; {(n11, ..., n1s1), ..., (nk1, ..., nksk)})
//! ```
//!
//! recording the genus and orientability of the quotient orbifold, the
//! proper periods of its cone points, and one period cycle of link periods
//! per boundary component. The signature determines a canonical generating
//! set and relations ([`presentation`]).
//!
//! Given such a group and the permutation action of its canonical
//! generators on the cosets of a finite-index subgroup, this crate computes
//! the subgroup's signature ([`hoare::subgroup_signature`]):
//!
//! - fixed cosets of reflection generators give the subgroup's reflections;
//! - orbit analysis of each adjacent reflection pair yields elliptic
//!   periods and links between reflections;
//! - the links close up into chains, the subgroup's period cycles;
//! - sign propagation over the coset graph decides orientability, with a
//!   checkable witness word in the nonorientable case;
//! - the genus follows from exact rational area bookkeeping
//!   (Riemann-Hurwitz: the subgroup's reduced area is the index times the
//!   group's).
//!
//! Everything is exact: areas are arbitrary-precision rationals and every
//! intermediate artifact is kept in the report for inspection.
//!
//! [`lowindex`] enumerates subgroups of small index outright, either
//! analytically (index 2, via sign characters) or by exhaustive search over
//! transitive actions of a given small degree.

pub mod hoare;
pub mod lowindex;
pub mod permutation;
pub mod presentation;
pub mod representation;
pub mod signature;

pub use hoare::{
    subgroup_signature, AreaDerivation, Chain, InducedReflection, Link, LinkSource, OrbitAnalysis,
    OrbitKind, PipelineError, PipelineOptions, SubgroupReport,
};
pub use lowindex::{
    index_two_subgroups, search_actions, IndexTwoSubgroup, SearchError, SearchOutcome,
    MAX_SEARCH_DEGREE,
};
pub use permutation::{parse_cycles, PermError, Permutation};
pub use presentation::{canonical_presentation, Presentation};
pub use representation::{
    ActionError, ActionReport, CosetAction, NegativeWitness, OrientabilityKind,
    OrientabilityVerdict, RelatorCheck,
};
pub use signature::{
    canonical_cycle, genus_from_area, parse_signature, FuchsianSignature, GenusError,
    InvalidSignature, NecSignature, Rational, SigParseError, SignSymbol, Violation,
};
