//! Exact-arithmetic invariants of graded level-zero integrable
//! representations of affine Lie algebras.
//!
//! The crate computes, over exact rational and cyclotomic arithmetic:
//!
//! * finite root systems with their lattice data (positive roots, highest
//!   and highest short roots, dominance order, Gamma = P/Q with minimal
//!   dominant representatives, the -w0 involution, and the graded-reduction
//!   constant r_lambda) — [`root_systems`];
//! * the free monoid of Drinfeld polynomials in the generator basis, with
//!   degree weights, the periodicity m(pi), coprime factorization, the
//!   scaling action, and exact coefficient extraction — [`drinfeld`];
//! * the block invariant chi and its orbit canonical forms, deciding when
//!   two simple modules generate the same block — [`blocks`];
//! * the character-level classification of the simple summands produced by
//!   the loop-space functor — [`graded_loop`];
//! * a finite-dimensional character engine (Freudenthal multiplicities, Weyl
//!   dimensions, tensor decomposition, type-A universal module dimensions)
//!   — [`characters`].
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across threads.

pub mod blocks;
pub mod cache;
pub mod characters;
pub mod cyclotomic;
pub mod drinfeld;
pub mod error;
pub mod exact_point;
pub mod graded_loop;
mod linalg;
pub mod root_systems;

pub use blocks::{same_block, BlockDecision, XiFunction, XiOrbitKey};
pub use characters::CharacterTable;
pub use cyclotomic::CyclotomicNumber;
pub use drinfeld::{DrinfeldPoly, PolyCoeffs};
pub use error::{Error, ParseError};
pub use exact_point::ExactPoint;
pub use graded_loop::{GradedWeight, SimpleLabel};
pub use root_systems::{
    build_root_system, DominanceRelation, Family, GammaElt, GammaGroup, RootSystem, RootVector,
    SimpleType, Weight,
};
