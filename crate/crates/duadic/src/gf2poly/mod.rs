//! GF(2) polynomial arithmetic and GF(2^m) extension fields.

mod field;
mod poly;

pub use field::{default_primitive_poly, is_primitive, minimal_polynomial, FieldContext};
pub use poly::BinaryPolynomial;
