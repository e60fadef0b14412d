//! Construction and analysis of binary hierarchical quasi-cyclic (HQC)
//! parity-check codes derived from nonbinary polynomial evaluation codes.
//!
//! The pipeline implemented here is:
//!
//! 1. [`gf`]: exact arithmetic in GF(p^r) with a canonical p-ary
//!    lexicographic indexing of field elements.
//! 2. [`codes`]: q-ary evaluation codes (Reed-Solomon, Reed-Muller, generic
//!    generator-matrix codes) with a total codeword ordering.
//! 3. [`construct`]: the unit-vector symbol expansion that turns the n x q^k
//!    codeword array of a q-ary code into an nq x q^k binary parity-check
//!    matrix, plus disjunct-matrix verification and the (q-1)-fold matrix
//!    dispersion construction.
//! 4. [`hqc`]: the compact multivariate-monomial representation of those
//!    matrices (Kronecker products of cyclically shifted identities), with
//!    exact round-trip extraction and expansion.
//! 5. [`analysis`]: GF(2) rank/dimension, certified minimum distance, Tanner
//!    graph girth and regularity, and the structural parameter bounds.
//! 6. [`equiv`]: monomial/permutation transforms of the starting codes and
//!    their effect on the binary constructions.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion crate
//! `hqc-tools` carries file formats and the command-line front end.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod analysis;
pub mod bits;
pub mod codes;
pub mod construct;
pub mod equiv;
pub mod gf;
pub mod hqc;

pub use analysis::{BoundCheck, BoundReport, CodeParams, Distance, DistanceBudget, Girth};
pub use bits::{BitVec, BinaryMatrix};
pub use codes::{CodeKind, EvalCode, QaryMatrix};
pub use construct::{DisjunctReport, MatrixDispersion};
pub use equiv::MonomialTransform;
pub use gf::{FieldElement, FieldSpec};
pub use hqc::{HqcPolyMatrix, Polynomial, WeightMatrix};
