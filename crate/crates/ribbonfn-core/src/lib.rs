//! Exact arithmetic for symmetric functions in the Schur basis, together with
//! the vertex operators that build Schur and Hall-Littlewood polynomials row
//! by row and column by column.
//!
//! Everything is computed over `Z[q]` with arbitrary-precision integer
//! coefficients; rational numbers appear only inside the power-sum kernel of
//! the plethystic substitution layer and are checked to cancel on the way
//! out.  The main pieces:
//!
//! * [`partition`] / [`ribbon`] — partitions, conjugation, and ribbons (border
//!   strips) with their descent-set encoding and maj/comaj statistics.
//! * [`qpoly`] — sparse polynomials in `q` over big integers.
//! * [`symfunc`] / [`schur`] — finite Schur expansions, multiplication by the
//!   Littlewood-Richardson rule (via iterated Pieri chains), skewing, the
//!   Hall inner product, straightening of integer Jacobi-Trudi indices.
//! * [`bases`] — conversions between the schur/h/e/p/m bases.
//! * [`plethysm`] — `f[X + c/z]` substitutions and truncated `z`-series with
//!   symmetric-function coefficients.
//! * [`ops`] — the operator layer: Bernstein row operator `S_m`, its column
//!   analogue `St_m`, the Hall-Littlewood row operator `H_m`, ribbon
//!   operators, the hat involution, omega conjugation, and the column-adding
//!   operator `Hcol[k]`.
//! * [`hall`] — Hall-Littlewood polynomials `H_lambda[X;q]` built by rows or
//!   by columns, and Kostka-Foulkes coefficients.
//! * [`oracle`] — deliberately naive combinatorial reference implementations
//!   (RSK, tableau enumeration, Littlewood-Richardson fillings) used to
//!   cross-check the algebraic paths.
//! * [`suite`] — named, bounded verification suites for the operator
//!   identities; every identity the crate implements can be re-checked from
//!   the command line.
//!
//! The crate is `no_std`-compatible (with `alloc`).  The default `std`
//! feature only enables the global memo tables; results are identical either
//! way, computation is just slower without them.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bases;
mod cache;
pub mod error;
pub mod hall;
pub mod ops;
pub mod oracle;
pub mod partition;
pub mod plethysm;
pub mod qpoly;
pub mod ratpoly;
pub mod ribbon;
pub mod schur;
pub mod suite;
pub mod symfunc;

pub use error::Error;
pub use partition::Partition;
pub use qpoly::QPoly;
pub use ribbon::Ribbon;
pub use symfunc::SymFunc;

// Coefficient arithmetic is exposed in the public API (`QPoly::constant`
// takes a `BigInt`), so re-export the crate to keep callers on our version.
pub use num_bigint;
