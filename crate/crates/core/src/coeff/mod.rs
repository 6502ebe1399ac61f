//! Exact coefficient field: rational functions in the couplings `k`, `kp`.

mod poly;
mod ratfunc;

pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// W-invariant coupling data, one value per root class.
///
/// * `k` is the coupling on the orbit of the first simple root.
/// * `k_prime` is the coupling on the orbit of the last simple root for
///   types B, C, F, G (and the short roots `e_i` of BC_n, n >= 2); it is
///   ignored when that orbit coincides with the first one.
/// * `k_extra` is the additional A_n parameter of the special system, or the
///   coupling of the doubled roots `2e_i` for BC_n. For other reduced types
///   it must be zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingVector {
    pub k: RatFunc,
    pub k_prime: RatFunc,
    pub k_extra: RatFunc,
}

impl CouplingVector {
    pub fn new(k: RatFunc, k_prime: RatFunc, k_extra: RatFunc) -> Self {
        CouplingVector { k, k_prime, k_extra }
    }

    /// Same coupling on every reduced root class, nothing extra.
    pub fn uniform(k: RatFunc) -> Self {
        CouplingVector {
            k_prime: k.clone(),
            k,
            k_extra: RatFunc::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::uniform(RatFunc::zero())
    }

    /// Rational-valued version, `None` if any entry is still symbolic.
    pub fn as_rational(&self) -> Option<[BigRational; 3]> {
        Some([
            self.k.as_constant()?,
            self.k_prime.as_constant()?,
            self.k_extra.as_constant()?,
        ])
    }

    pub fn specialize(&self, k: Option<&BigRational>, kp: Option<&BigRational>) -> crate::Result<Self> {
        Ok(CouplingVector {
            k: self.k.specialize(k, kp)?,
            k_prime: self.k_prime.specialize(k, kp)?,
            k_extra: self.k_extra.specialize(k, kp)?,
        })
    }
}

/// Serde adapters writing exact rationals as strings such as `"-1/6"`.
pub mod qstr {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use num_rational::BigRational;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_some(&q.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}
