//! Exact computations in the monomial group `Pₙ = S₂ ≀ Sₙ` of signed
//! permutations and in the linear structures it generates.
//!
//! * [`perm`]: signed permutation arithmetic, parity and matrix representation.
//! * [`arrangements`]: arrangement parity over a row subset and the
//!   rectangular determinant built from it.
//! * [`subgroups`]: generating sets, exhaustive closure, and comparison of
//!   generated groups against their determinant characterizations.
//! * [`matalg`]: rational spans, group algebras and Lie normalizers.
//! * [`lie`]: rotation and boost generators, bracket closure, rational
//!   points of `SO(2)` and `SO(1,1)`.
//! * [`zquot`]: GF(2) subgroups and quotients, base-set classes and the
//!   automorphism groups they allow.
//!
//! No floating point is used anywhere; all ranks and determinants are exact.

pub mod arrangements;
pub mod echelon;
pub mod error;
pub mod lie;
pub mod matalg;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod subgroups;
pub mod verdict;
pub mod zquot;

pub use arrangements::{ArrangementParity, ParityConvention, SignedArrangement};
pub use error::{Error, Result};
pub use matalg::SpanBasis;
pub use matrix::{Rational, RationalMatrix};
pub use partition::Partition;
pub use perm::{Parity, SignedPermutation};
pub use subgroups::{GeneratorKind, GeneratorSet, GroupClosure};
pub use verdict::{Status, Verdict};
