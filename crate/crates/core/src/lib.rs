//! Exact-arithmetic kernel for the isolated differential data criterion.
//!
//! The crate decides, for a quadruple (p, m, u~, N), whether a polynomial
//! f in k[t^m] of degree N makes the differential form dt / (f t^{u~+1})
//! transform correctly under the Cartier operator, and whether such a
//! solution is isolated. Three independent routes are provided: direct
//! solution search over small extension fields, a coefficient-matrix
//! isolatedness test, and a Groebner-basis existence certificate.

pub mod certificate;
pub mod ddc;
pub mod error;
pub mod gf;
pub mod mpoly;
pub mod search;
pub mod upoly;

pub use error::{Error, Result};
