//! Root systems in their Bourbaki realizations: roots, coroots, weights,
//! Weyl group action and the orderings on the weight lattice.

mod family;
mod order;
mod system;
mod weight;

pub use family::{Family, RootSystemSpec};
pub use order::PlusOrder;
pub use system::{Root, RootClass, RootSystem, RootSystemDoc};
pub use weight::{CorootVector, HStarElement, Weight};

pub(crate) use system::q_to_ratfunc;
