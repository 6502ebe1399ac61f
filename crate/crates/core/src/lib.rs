//! Exact trigonometric Dunkl-operator calculus for root systems, with the
//! special hypergeometric exponents and a verification harness.
//!
//! Everything is computed over [`RatFunc`], the field of rational functions in
//! the couplings `k` and `kp` over the rationals, so identities are checked
//! symbolically rather than numerically.

pub mod coeff;
pub mod dunkl;
pub mod error;
pub mod laurent;
pub mod rootsys;
pub mod special;
pub mod verify;

pub use coeff::{CouplingVector, RatFunc};
pub use error::{Error, Result};
pub use laurent::{LaurentElement, LocalizedElement};
pub use rootsys::{CorootVector, Family, HStarElement, PlusOrder, RootSystem, RootSystemSpec, Weight};
