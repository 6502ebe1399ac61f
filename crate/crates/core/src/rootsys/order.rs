use std::cmp::Ordering;

use num_rational::Rational64;

use super::system::RootSystem;
use super::weight::Weight;

/// Outcome of comparing two weights in the `<=_+` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlusOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl RootSystem {
    /// `mu <=_+ nu` iff `mu_+ < nu_+`, or `mu_+ = nu_+` and `nu <= mu`.
    pub fn le_plus(&self, mu: &Weight, nu: &Weight) -> PlusOrder {
        if mu == nu {
            return PlusOrder::Equal;
        }
        let mp = self.to_dominant(mu);
        let np = self.to_dominant(nu);
        if mp == np {
            if self.dominance_le(nu, mu) {
                PlusOrder::Less
            } else if self.dominance_le(mu, nu) {
                PlusOrder::Greater
            } else {
                PlusOrder::Incomparable
            }
        } else if self.dominance_le(&mp, &np) {
            PlusOrder::Less
        } else if self.dominance_le(&np, &mp) {
            PlusOrder::Greater
        } else {
            PlusOrder::Incomparable
        }
    }

    /// Sort key compatible with `<=_+`: `mu <_+ nu` implies `key(mu) < key(nu)`.
    pub fn plus_key(&self, mu: &Weight) -> (Rational64, Rational64) {
        let dom = self.to_dominant(mu);
        (self.height(&dom), -self.height(mu))
    }

    pub fn cmp_plus_key(&self, mu: &Weight, nu: &Weight) -> Ordering {
        self.plus_key(mu)
            .cmp(&self.plus_key(nu))
            .then_with(|| mu.cmp(nu))
    }
}
