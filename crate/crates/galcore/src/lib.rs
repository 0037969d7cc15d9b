//! Finite-structure engine for order-reversing Galois connections and
//! formal concept analysis.
//!
//! The layers, bottom up: [`poset`] holds explicit finite orders and maps
//! between them; [`galois`] validates and dissects antitone adjoint pairs
//! (nodes, leaves, the leafwise anti-isomorphism); [`context`] supplies
//! object/attribute incidence relations and their derivation pair;
//! [`concepts`] enumerates the concept lattice and the preconcept and
//! protoconcept structure around it; [`ordering`] compares whole
//! connections; [`category`] treats connections as objects with morphism
//! pairs between them, including the embedding of any connection into a
//! powerset polarity; [`rdf`] projects triple data into contexts; and
//! [`oracle`] re-derives everything naively so the fast paths can be
//! certified against quantifier-literal implementations.
//!
//! Carriers are index sets; subsets travel as `u64` masks, so contexts
//! cap at 64 objects and 64 attributes, and exponential materializations
//! (powerset orders, polarity tables) cap at a configurable base size
//! (`GALCORE_CAP`, default 12).

pub mod bits;
pub mod category;
pub mod cli;
pub mod concepts;
pub mod context;
pub mod dot;
pub mod galois;
pub mod json;
pub mod oracle;
pub mod ordering;
pub mod poset;
pub mod rdf;
pub mod report;
pub mod samples;

pub use category::GalMorphism;
pub use concepts::{Concept, ConceptLattice};
pub use context::{FormalContext, PolarityHandle};
pub use galois::{GaloisConnection, LeafDecomposition};
pub use ordering::{OrderVerdict, Witness};
pub use poset::{OrderMap, Poset};
pub use report::{Side, ValidationReport, Violation};
