use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::coeff::RatFunc;

/// Integral weight, coordinates in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The `i`-th fundamental weight (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// Pairing with a coroot given in the simple-coroot basis.
    pub fn pair(&self, coroot: &[i64]) -> i64 {
        self.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    pub fn to_hstar(&self) -> HStarElement {
        HStarElement(self.0.iter().map(|&c| RatFunc::from_int(c)).collect())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Element of h* with coefficient-field coordinates in the
/// fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HStarElement(pub Vec<RatFunc>);

/// Element of h, coordinates in the simple-coroot basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorootVector(pub Vec<RatFunc>);

macro_rules! vector_ops {
    ($t:ident) => {
        impl $t {
            pub fn zero(rank: usize) -> Self {
                $t(vec![RatFunc::zero(); rank])
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|c| c.is_zero())
            }

            pub fn scale(&self, c: &RatFunc) -> Self {
                $t(self.0.iter().map(|x| x * c).collect())
            }

            pub fn from_ints(v: &[i64]) -> Self {
                $t(v.iter().map(|&c| RatFunc::from_int(c)).collect())
            }
        }

        impl Add<&$t> for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                $t(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    };
}

vector_ops!(HStarElement);
vector_ops!(CorootVector);

impl HStarElement {
    /// `lambda(xi)`.
    pub fn pair(&self, xi: &CorootVector) -> RatFunc {
        self.0.iter().zip(&xi.0).map(|(a, b)| a * b).sum()
    }

    /// `lambda(xi)` for an integral coroot.
    pub fn pair_int(&self, coroot: &[i64]) -> RatFunc {
        self.0
            .iter()
            .zip(coroot)
            .filter(|(_, &b)| b != 0)
            .map(|(a, &b)| a * &RatFunc::from_int(b))
            .sum()
    }
}

impl CorootVector {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![RatFunc::zero(); rank];
        v[i] = RatFunc::one();
        CorootVector(v)
    }
}
