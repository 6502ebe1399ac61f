use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::RatFunc;
use crate::error::{Error, Result};
use crate::rootsys::{q_to_ratfunc, CorootVector, HStarElement, RootSystem};

/// Element of Sym(h) of degree at most 2, coordinates in the simple-coroot
/// basis: `constant + sum_i linear_i xi_i + sum_ij quadratic_ij xi_i xi_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymH {
    pub constant: RatFunc,
    pub linear: Vec<RatFunc>,
    /// Symmetric.
    pub quadratic: Vec<Vec<RatFunc>>,
}

impl SymH {
    pub fn zero(rank: usize) -> Self {
        SymH {
            constant: RatFunc::zero(),
            linear: vec![RatFunc::zero(); rank],
            quadratic: vec![vec![RatFunc::zero(); rank]; rank],
        }
    }

    pub fn from_constant(rank: usize, c: RatFunc) -> Self {
        SymH {
            constant: c,
            ..Self::zero(rank)
        }
    }

    pub fn linear(xi: &CorootVector) -> Self {
        SymH {
            linear: xi.0.clone(),
            ..Self::zero(xi.rank())
        }
    }

    /// The product `xi eta`.
    pub fn product(xi: &CorootVector, eta: &CorootVector) -> Self {
        let n = xi.rank();
        let half = RatFunc::frac(1, 2);
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.quadratic[i][j] = &half * &(&(&xi.0[i] * &eta.0[j]) + &(&xi.0[j] * &eta.0[i]));
            }
        }
        out
    }

    /// The distinguished quadratic element `C` with `partial(C) e^mu = (mu, mu) e^mu`.
    pub fn casimir(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.quadratic[i][j] = q_to_ratfunc(rs.weight_gram[i][j]);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.linear.len()
    }

    pub fn is_homogeneous_quadratic(&self) -> bool {
        self.constant.is_zero() && self.linear.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        SymH {
            constant: &self.constant + &other.constant,
            linear: self.linear.iter().zip(&other.linear).map(|(a, b)| a + b).collect(),
            quadratic: self
                .quadratic
                .iter()
                .zip(&other.quadratic)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        SymH {
            constant: &self.constant * c,
            linear: self.linear.iter().map(|a| a * c).collect(),
            quadratic: self
                .quadratic
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    pub fn check(&self) -> Result<()> {
        let n = self.rank();
        if self.quadratic.len() != n || self.quadratic.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                got: self.quadratic.len(),
            });
        }
        for i in 0..n {
            for j in 0..i {
                if self.quadratic[i][j] != self.quadratic[j][i] {
                    return Err(Error::Precondition("quadratic part is not symmetric".into()));
                }
            }
        }
        Ok(())
    }

    /// `q(lambda)`, viewing `q` as a polynomial function on h*.
    pub fn evaluate(&self, lambda: &HStarElement) -> RatFunc {
        let n = self.rank();
        let mut s = self.constant.clone();
        for i in 0..n {
            if lambda.0[i].is_zero() {
                continue;
            }
            s += &(&self.linear[i] * &lambda.0[i]);
            for j in 0..n {
                if !self.quadratic[i][j].is_zero() {
                    s += &(&(&self.quadratic[i][j] * &lambda.0[i]) * &lambda.0[j]);
                }
            }
        }
        s
    }

    /// Invariance under every simple reflection.
    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            // s_i on h* in the weight basis: lambda_j -> lambda_j - lambda_i cartan[j][i]
            let r = |j: usize, l: usize| -> i64 {
                let d = i64::from(j == l);
                if l == i {
                    d - rs.cartan[j][i]
                } else {
                    d
                }
            };
            let lin_ok = (0..n).all(|l| {
                let v: RatFunc = (0..n)
                    .filter(|&j| r(j, l) != 0)
                    .map(|j| &self.linear[j] * &RatFunc::from_int(r(j, l)))
                    .sum();
                v == self.linear[l]
            });
            lin_ok
                && (0..n).all(|a| {
                    (0..n).all(|b| {
                        let mut v = RatFunc::zero();
                        for j in 0..n {
                            let rja = r(j, a);
                            if rja == 0 {
                                continue;
                            }
                            for l in 0..n {
                                let rlb = r(l, b);
                                if rlb != 0 && !self.quadratic[j][l].is_zero() {
                                    v += &(&self.quadratic[j][l] * &RatFunc::from_int(rja * rlb));
                                }
                            }
                        }
                        v == self.quadratic[a][b]
                    })
                })
        })
    }
}

impl fmt::Display for SymH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() {
            parts.push(format!("({})", self.constant));
        }
        for (i, c) in self.linear.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c})*h{}", i + 1));
            }
        }
        let n = self.rank();
        for i in 0..n {
            for j in i..n {
                let c = &self.quadratic[i][j];
                if c.is_zero() {
                    continue;
                }
                if i == j {
                    parts.push(format!("({c})*h{}^2", i + 1));
                } else {
                    parts.push(format!("({})*h{}*h{}", c * &RatFunc::from_int(2), i + 1, j + 1));
                }
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
