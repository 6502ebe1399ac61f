use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::exponents::{special_couplings, xy};
use crate::coeff::{CouplingVector, RatFunc};
use crate::dunkl::rho;
use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn constant(c: &RatFunc) -> Result<BigRational> {
    c.as_constant()
        .ok_or_else(|| Error::Domain(format!("{c} is not a rational number")))
}

fn rational_couplings(kvec: &CouplingVector) -> Result<()> {
    kvec.as_rational()
        .map(|_| ())
        .ok_or_else(|| Error::Domain("couplings must be rational numbers".into()))
}

/// A root `sign * alpha` with `lambda(alpha^vee) + k_alpha` integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index into the positive roots.
    pub root_index: usize,
    pub sign: i8,
    /// Weight coordinates of `sign * alpha`.
    pub root: Vec<i64>,
    #[serde(with = "crate::coeff::qstr")]
    pub value: BigRational,
}

/// The reducibility criterion: every `alpha in R` (both signs) with
/// `lambda(alpha^vee) + k_alpha in Z`.
pub fn reducibility_check(rs: &RootSystem, lambda: &[BigRational], kvec: &CouplingVector) -> Result<Vec<Witness>> {
    rational_couplings(kvec)?;
    if lambda.len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            got: lambda.len(),
        });
    }
    let mut out = Vec::new();
    for (idx, root) in rs.positive_roots.iter().enumerate() {
        let k = constant(rs.coupling(kvec, idx))?;
        let pairing: BigRational = lambda
            .iter()
            .zip(&root.coroot)
            .map(|(l, &c)| l * BigRational::from_integer(c.into()))
            .sum();
        for sign in [1i8, -1] {
            let v = &pairing * BigRational::from_integer(sign.into()) + &k;
            if v.is_integer() {
                out.push(Witness {
                    root_index: idx,
                    sign,
                    root: root.weight.0.iter().map(|&c| c * sign as i64).collect(),
                    value: v,
                });
            }
        }
    }
    Ok(out)
}

fn dominant(rs: &RootSystem, v: &[BigRational]) -> Vec<BigRational> {
    let mut cur = v.to_vec();
    while let Some(i) = cur.iter().position(|c| c.is_negative()) {
        let c = cur[i].clone();
        for (j, x) in cur.iter_mut().enumerate() {
            *x -= &c * BigRational::from_integer(rs.cartan[j][i].into());
        }
    }
    cur
}

/// `mu in W lambda - rho_k`: the indicial equation at `mu`.
pub fn indicial_member(
    rs: &RootSystem,
    mu: &[BigRational],
    lambda: &[BigRational],
    kvec: &CouplingVector,
) -> Result<bool> {
    rational_couplings(kvec)?;
    let r = rho(rs, kvec);
    let shifted: Vec<BigRational> = mu
        .iter()
        .zip(&r.0)
        .map(|(m, c)| Ok(m + constant(c)?))
        .collect::<Result<_>>()?;
    Ok(dominant(rs, &shifted) == dominant(rs, lambda))
}

/// Eigenvalue `-exp(2 pi i r)` stored by its rotation number `r` in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    #[serde(with = "crate::coeff::qstr")]
    pub rotation: BigRational,
    pub multiplicity: usize,
}

/// Predicted eigenvalues of the monodromy generator `M_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    pub node: usize,
    #[serde(with = "crate::coeff::qstr")]
    pub coupling: BigRational,
    pub eigenvalues: Vec<Eigenvalue>,
    /// `-exp(2 pi i k_i)` solves `(M - 1)(M + exp(-2 pi i k_i)) = 0`.
    pub plus_convention: bool,
    /// `-exp(-2 pi i k_i)` solves the same quadratic.
    pub minus_convention: bool,
}

fn frac_part(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Eigenvalue 1 with multiplicity n and `-exp(2 pi i k_i)` once, per node.
pub fn monodromy_spec(rs: &RootSystem, kvec: &CouplingVector) -> Result<Vec<GeneratorReport>> {
    rational_couplings(kvec)?;
    let n = rs.rank();
    let half = q(1, 2);
    (0..n)
        .map(|i| {
            let k = constant(rs.simple_coupling(kvec, i))?;
            let r = frac_part(&k);
            // -exp(2 pi i k) = -exp(-2 pi i k) iff 2k is an integer; the case
            // -exp(2 pi i k) = 1 (k = 1/2 mod 1) is contained in that
            let plus = (&k * BigRational::from_integer(2.into())).is_integer();
            let mut eigenvalues = vec![Eigenvalue {
                rotation: half.clone(),
                multiplicity: n,
            }];
            match r.cmp(&half) {
                Ordering::Equal => eigenvalues[0].multiplicity += 1,
                _ => eigenvalues.push(Eigenvalue {
                    rotation: r,
                    multiplicity: 1,
                }),
            }
            Ok(GeneratorReport {
                node: i + 1,
                coupling: k,
                eigenvalues,
                plus_convention: plus,
                minus_convention: true,
            })
        })
        .collect()
}

/// Membership in the Lorentzian parameter region, with the `(x, y)` used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPlusReport {
    pub member: bool,
    #[serde(with = "crate::coeff::qstr::option")]
    pub x: Option<BigRational>,
    #[serde(with = "crate::coeff::qstr::option")]
    pub y: Option<BigRational>,
}

fn open(lo: &BigRational, x: &BigRational, hi: &BigRational) -> bool {
    lo < x && x < hi
}

/// `(0, 1/(n-2))` for D_n, `(0, 1/(n-3))` for E_n, otherwise
/// `k, k' in (-1/2, 1/2)` with `0 < x, y < 1`. Boundaries are excluded.
pub fn kplus_membership(rs: &RootSystem, k: &BigRational, kp: &BigRational) -> Result<KPlusReport> {
    let n = rs.rank() as i64;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let kr = RatFunc::from_rational(k.clone());
    let kpr = RatFunc::from_rational(kp.clone());
    let pair = xy(rs.spec, &kr, &kpr)
        .map(|(x, y)| Ok::<_, Error>((constant(&x)?, constant(&y)?)))
        .transpose()?;
    let (x, y) = match pair {
        Some((x, y)) => (Some(x), Some(y)),
        None => (None, None),
    };
    let member = match rs.family() {
        Family::D => open(&zero, k, &q(1, n - 2)),
        Family::E => open(&zero, k, &q(1, n - 3)),
        Family::BC => {
            return Err(Error::UnsupportedType("BC has no special system".into()));
        }
        _ => {
            let h = q(1, 2);
            let (xv, yv) = (x.as_ref().unwrap(), y.as_ref().unwrap());
            open(&-&h, k, &h) && open(&-&h, kp, &h) && open(&zero, xv, &one) && open(&zero, yv, &one)
        }
    };
    Ok(KPlusReport { member, x, y })
}

/// `(k, k')` as used by [`kplus_membership`], read off a coupling vector.
pub fn kplus_from_couplings(rs: &RootSystem, kvec: &CouplingVector) -> Result<KPlusReport> {
    let (k, kp) = special_couplings(rs, kvec);
    kplus_membership(rs, &constant(&k)?, &constant(&kp)?)
}
