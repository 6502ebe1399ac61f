//! The group algebra C[P] and its localization at the factors `1 - e^{-alpha}`.

mod element;
mod localized;

pub use element::{inner_product, inner_product_with, weight_function, LaurentElement};
pub use localized::{DenomFactor, LocalizedDoc, LocalizedElement};

pub(crate) use element::integer_coupling;

#[cfg(test)]
mod tests;
