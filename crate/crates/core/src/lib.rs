//! A finite-model toolkit for Heyting and Gödel algebras and the structures
//! dual to them: two-valued hom spectra, finite Esakia-style posets,
//! I-topological systems, and intuitionistic Kripke models.
//!
//! Every construction is validated rather than assumed: lattices are checked
//! for distributivity and residuation, systems for the satisfaction axioms,
//! round trips return explicit isomorphism witnesses, and the functorial
//! identities of the dual adjunction are re-checked pointwise on each
//! instance. All values are immutable once built and every operation is pure.

// Table math reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod duality;
pub mod files;
pub mod formula;
pub mod kripke;
pub mod lattice;
pub mod poset;
pub mod topsys;

pub use duality::{
    dualize_hom, prime_filters, roundtrip_algebra, roundtrip_poset, spectrum, upset_algebra,
    DualityError, Isomorphism, SpectrumPoset, TwoValuedHom,
};
pub use formula::{Formula, ParseError};
pub use kripke::{countermodel_search, model_from_system, KripkeError, KripkeModel};
pub use lattice::{
    build_lattice, check_hom, enumerate_homs, residuate, DistributiveLattice, HeytingAlgebra,
    HomCandidate, HomKind, LatticeError, LatticeSpec,
};
pub use poset::{enumerate_posets, enumerate_posets_upto, Poset, PosetError};
pub use topsys::{
    build_system, canonical_system, check_morphism, counit_is_identity, dual_system_morphism,
    unit_and_triangle, ITopSystem, SystemClassification, SystemError, SystemMorphism,
};
