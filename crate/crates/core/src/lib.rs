//! Exact character arithmetic for stable algebraic `GL(n,Z)`-representations.
//!
//! The library is organized around a handful of index types and rings:
//!
//! * [`Partition`] and [`Bipartition`] index irreducible representations of
//!   symmetric groups and of `GL(n)`.
//! * [`charring`] holds the character rings: the free two-alphabet ring
//!   ([`PairVector`]), the stable ring with the contraction-aware product
//!   ([`StableCharacter`]), and the finite-rank Laurent oracle
//!   ([`LaurentCharacter`]) that every stable claim is checked against.
//! * [`tensor`] decomposes the mixed tensor spaces `H^{p,q}` and their
//!   traceless parts into irreducibles.
//! * [`cohomology`] serves the twisted first-cohomology tables of
//!   `Aut(F_n)` and `Out(F_n)`, stable vanishing criteria, and the closed-form
//!   stable Hilbert series of `GL(n,Z)`, `Sp(2g,Z)`, the mapping class groups
//!   and the Torelli groups.
//! * [`albanese`] builds the graded characters `W` and `W^O` on the Albanese
//!   generators `U_i = Hom(H, Λ^{i+1}H)` and the conjectural stable
//!   cohomology characters of `IA_n` and `IO_n`.
//! * [`specseq`] does dimension-level spectral-sequence bookkeeping: Koszul
//!   Euler checks, the degree shift sending odd Borel generators to even
//!   invariant classes, and truncated series products.
//!
//! All values are immutable after construction and all operations are pure;
//! internal memo tables are guarded by mutexes, so everything is safe to use
//! from multiple threads.

pub mod albanese;
pub mod charring;
pub mod cohomology;
pub mod error;
pub mod hilbert;
pub mod partitions;
pub mod specseq;
pub mod tensor;
pub mod verify;

pub use charring::{GradedCharacter, LaurentCharacter, PairVector, SchurVector, StableCharacter};
pub use error::Error;
pub use hilbert::HilbertSeries;
pub use partitions::{Bipartition, Partition};

/// Convenient result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
