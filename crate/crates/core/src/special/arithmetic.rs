use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `q` in the Schwarz condition: a positive integer or infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchwarzQ {
    Finite(BigInt),
    Infinity,
}

impl fmt::Display for SchwarzQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchwarzQ::Finite(q) => write!(f, "{q}"),
            SchwarzQ::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for SchwarzQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SchwarzQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "infinity" {
            Ok(SchwarzQ::Infinity)
        } else {
            s.parse().map(SchwarzQ::Finite).map_err(serde::de::Error::custom)
        }
    }
}

/// One admissible row `(n, k, q)` with `(n + 3) k = 2` and `1/(1/2 - k) = q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchwarzRow {
    pub n: u64,
    #[serde(with = "crate::coeff::qstr")]
    pub k: BigRational,
    pub q: SchwarzQ,
}

/// `k = 2/(n+3)` and `q = 1/(1/2 - k)` for a single `n >= 1`; `None` when `q`
/// is not a positive integer.
pub fn schwarz_row(n: u64) -> Option<SchwarzRow> {
    let k = BigRational::new(BigInt::from(2), BigInt::from(n + 3));
    let gap = BigRational::new(BigInt::one(), BigInt::from(2)) - &k;
    let q = if gap.is_zero() {
        SchwarzQ::Infinity
    } else {
        let q = gap.recip();
        if !q.is_integer() || q <= BigRational::zero() {
            return None;
        }
        SchwarzQ::Finite(q.to_integer())
    };
    Some(SchwarzRow { n, k, q })
}

/// Scans `n = 1..=max_n`.
pub fn schwarz_table_up_to(max_n: u64) -> Vec<SchwarzRow> {
    (1..=max_n).filter_map(schwarz_row).collect()
}

/// The complete table. `q` is integral only when `n - 1` divides 8, so
/// scanning to `n = 9` is exhaustive.
pub fn schwarz_table() -> Vec<SchwarzRow> {
    schwarz_table_up_to(9)
}

/// `(1 - h k, (1 - h k)/2)` for Coxeter number `h`.
pub fn exponent_difference(coxeter_number: u64, k: &BigRational) -> (BigRational, BigRational) {
    let d = BigRational::one() - BigRational::from_integer(coxeter_number.into()) * k;
    let half = &d / BigRational::from_integer(2.into());
    (d, half)
}

/// The E8 case, `h = 30`.
pub fn e8_exponent_difference(k: &BigRational) -> (BigRational, BigRational) {
    exponent_difference(30, k)
}
