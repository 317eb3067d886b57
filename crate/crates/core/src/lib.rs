//! Reconstructing finite topological spaces from the lattice of filtering
//! subsets of their support posets.
//!
//! The pipeline runs
//!
//! ```text
//! X  ->  support poset PS(X)  ->  Loc(PS(X))  ->  pt(Loc(PS(X)))
//! ```
//!
//! where [`support`] models principal thick subcategories by their supports,
//! [`loc`] builds the lattice of filtering subsets, and [`lattice`] computes
//! its space of points. [`reconstruct`] composes the stages and checks the
//! result against the input; [`ring`] supplies Zariski spectra of finite
//! commutative rings as inputs.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod lattice;
pub mod loc;
pub mod mask;
pub mod reconstruct;
pub mod ring;
pub mod suite;
pub mod support;
pub mod topology;

pub use lattice::{open_set_lattice, sobrification, BoundedDistributiveLattice, LatticePoint, ProperPrime};
pub use loc::{loc_as_lattice, FilteringSubset};
pub use mask::SubsetMask;
pub use reconstruct::{reconstruct, verify_reconstruction, ReconstructionReport};
pub use ring::{ring_from_descriptor, zariski_spectrum, FiniteRing, Ideal};
pub use support::{thomason_supports, ClosedSet, SupportPoset};
pub use topology::{are_homeomorphic, FiniteSpace, Preorder};
