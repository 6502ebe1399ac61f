use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::RatFunc;
use crate::dunkl::SymH;
use crate::rootsys::{q_to_ratfunc, HStarElement, RootSystem, Weight};

/// Element of Sym^2(h*) as a symmetric matrix in the fundamental-weight
/// basis; `lambda^2` is `c c^T` for the coordinate vector `c` of `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SymTwoDual(pub Vec<Vec<RatFunc>>);

impl SymTwoDual {
    pub fn zero(rank: usize) -> Self {
        SymTwoDual(vec![vec![RatFunc::zero(); rank]; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn square(lambda: &HStarElement) -> Self {
        SymTwoDual(
            lambda
                .0
                .iter()
                .map(|a| lambda.0.iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    pub fn weight_square(mu: &Weight) -> Self {
        Self::square(&mu.to_hstar())
    }

    /// `C^vee`: the inner product on h dual to the one on h*. In this basis
    /// its matrix is `((alpha_i^vee, alpha_j^vee))`, the inverse of the Gram
    /// matrix of the fundamental weights.
    pub fn dual_casimir(rs: &RootSystem) -> Self {
        SymTwoDual(
            rs.coroot_gram
                .iter()
                .map(|r| r.iter().map(|&q| q_to_ratfunc(q)).collect())
                .collect(),
        )
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (r, s) in self.0.iter_mut().zip(&other.0) {
            for (a, b) in r.iter_mut().zip(s) {
                if !b.is_zero() {
                    *a += &(b * c);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|c| c.is_zero())
    }

    /// Trace pairing with Sym^2(h), normalized so `<mu^2, xi eta> = mu(xi) mu(eta)`.
    pub fn pair(&self, p: &SymH) -> RatFunc {
        let mut s = RatFunc::zero();
        for (r, q) in self.0.iter().zip(&p.quadratic) {
            for (a, b) in r.iter().zip(q) {
                if !a.is_zero() && !b.is_zero() {
                    s += &(a * b);
                }
            }
        }
        s
    }
}

impl fmt::Display for SymTwoDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
