//! Binary duadic codes of length 2^m - 1 built from base-2 weight
//! classes, together with the machinery to certify their parameters:
//!
//! - [`gf2poly`]: GF(2) polynomials and GF(2^m) fields,
//! - [`cosets`]: cyclotomic cosets, weight-class defining sets
//!   T\[r,m,S\], and the duadic splitting scan,
//! - [`cyclic`]: cyclic codes, duals, even-weight subcodes, extended
//!   codes,
//! - [`bounds`]: BCH and unit-scaled BCH lower bounds, the square-root
//!   bound, and the consecutive-multiple containment suite,
//! - [`distance`]: exact minimum distances by exhaustive enumeration
//!   and certified minimum distances by information-set enumeration.
//!
//! The enumeration-heavy paths run on rayon when the default
//! `parallel` feature is on; every engine also has a sequential path
//! selected per call, and results are bit-identical either way.

pub mod bounds;
pub mod cosets;
pub mod cyclic;
pub mod distance;
pub mod error;
pub mod gf2poly;

pub use error::{Error, Result};
