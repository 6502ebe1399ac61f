use serde::{Deserialize, Serialize};

use crate::coeff::{CouplingVector, RatFunc};
use crate::dunkl::rho;
use crate::error::{Error, Result};
use crate::rootsys::{q_to_ratfunc, Family, HStarElement, RootSystem, RootSystemSpec};

/// The n+1 special exponents of a reduced irreducible root system with
/// their spectral parameters and the constant `a` of the quadratic equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialExponentReport {
    pub spec: RootSystemSpec,
    pub couplings: CouplingVector,
    /// `mu_1, ..., mu_{n+1}` in the fundamental-weight basis.
    pub exponents: Vec<HStarElement>,
    /// `lambda_i = mu_i + rho_k`.
    pub spectral: Vec<HStarElement>,
    /// Undefined for type E.
    pub x: Option<RatFunc>,
    pub y: Option<RatFunc>,
    pub a_value: RatFunc,
    pub verdicts: Option<Verdicts>,
}

/// Outcome of the checks run by [`super::verify_report`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// One entry per exponent: the quadratic residual vanishes.
    pub quadratic: Vec<bool>,
    /// The tabulated `a` agrees with the value forced by the equation.
    pub a_value: bool,
    pub relations: bool,
    /// A generic weight leaves a nonzero residual.
    pub exactness: bool,
    /// `C(lambda_i) = C(rho_k) - a n` for every exponent.
    pub casimir: bool,
}

impl Verdicts {
    pub fn all_hold(&self) -> bool {
        self.quadratic.iter().all(|&b| b) && self.a_value && self.relations && self.exactness && self.casimir
    }
}

/// The two couplings `(k, k')` the special exponents are written in. For A_n
/// the second one is the extra parameter; for D and E it is unused.
pub fn special_couplings(rs: &RootSystem, kvec: &CouplingVector) -> (RatFunc, RatFunc) {
    match rs.family() {
        Family::A => (kvec.k.clone(), kvec.k_extra.clone()),
        Family::D | Family::E => (kvec.k.clone(), RatFunc::zero()),
        _ => (kvec.k.clone(), kvec.k_prime.clone()),
    }
}

/// Weight with the given coefficients on `varpi_i` (1-based; indices 0 and
/// n+1 are dropped).
fn varpi(n: usize, parts: &[(usize, RatFunc)]) -> HStarElement {
    let mut v = HStarElement::zero(n);
    for (i, c) in parts {
        if (1..=n).contains(i) {
            v.0[i - 1] += c;
        }
    }
    v
}

fn int(i: i64) -> RatFunc {
    RatFunc::from_int(i)
}

/// `mu_i = (x - i k) varpi_{i-1} + ((i-1) k - x) varpi_i`.
fn chain_exponent(n: usize, i: usize, x: &RatFunc, k: &RatFunc) -> HStarElement {
    let ii = i as i64;
    varpi(
        n,
        &[(i - 1, x - &(k * &int(ii))), (i, &(k * &int(ii - 1)) - x)],
    )
}

/// `(x, y)` for the type, as functions of `(k, k')`; `None` for type E.
pub fn xy(spec: RootSystemSpec, k: &RatFunc, kp: &RatFunc) -> Option<(RatFunc, RatFunc)> {
    let n = spec.rank as i64;
    let half = RatFunc::frac(1, 2);
    Some(match spec.family {
        Family::A => {
            let s = &(k * &int(n + 1)) * &half;
            let d = &(kp * &int(n + 1)) * &half;
            (&s + &d, &s - &d)
        }
        Family::B => (&(k * &int(n - 2)) + kp, k * &int(2)),
        Family::C => (&(k * &int(n - 2)) + &(kp * &int(2)), k.clone()),
        Family::F => (k + kp, &(k * &int(2)) + kp),
        Family::G => (&(k + &(kp * &int(3))) * &half, &(k + kp) * &half),
        Family::D => (k * &int(n - 2), k * &int(2)),
        Family::E | Family::BC => return None,
    })
}

/// Computes the special exponents `mu_1, ..., mu_{n+1}`.
pub fn special_exponents(rs: &RootSystem, kvec: &CouplingVector) -> Result<SpecialExponentReport> {
    let spec = rs.spec;
    let n = spec.rank;
    if spec.family == Family::BC {
        return Err(Error::UnsupportedType(
            "special exponents are defined for reduced root systems only".into(),
        ));
    }
    let (k, kp) = special_couplings(rs, kvec);
    let xy_pair = xy(spec, &k, &kp);
    let ni = n as i64;
    let exponents: Vec<HStarElement> = match spec.family {
        Family::A => {
            let (x, _) = xy_pair.clone().unwrap();
            (1..=n + 1).map(|i| chain_exponent(n, i, &x, &k)).collect()
        }
        Family::B => {
            let (x, _) = xy_pair.clone().unwrap();
            let mut v: Vec<HStarElement> = (1..n).map(|i| chain_exponent(n, i, &x, &k)).collect();
            v.push(varpi(
                n,
                &[
                    (n - 1, &x - &(&k * &int(ni))),
                    (n, &(&k * &int(2 * (ni - 1))) - &(&x * &int(2))),
                ],
            ));
            v.push(varpi(
                n,
                &[
                    (n - 1, &(&(&k * &int(ni - 2)) + &kp) - &x),
                    (n, &(&(&x * &int(2)) - &(&k * &int(2 * (ni - 1)))) - &(&kp * &int(2))),
                ],
            ));
            v
        }
        Family::C => {
            let (x, _) = xy_pair.clone().unwrap();
            let mut v: Vec<HStarElement> = (1..n).map(|i| chain_exponent(n, i, &x, &k)).collect();
            v.push(varpi(
                n,
                &[(n - 1, &x - &(&k * &int(ni))), (n, &(&k * &int(ni - 1)) - &x)],
            ));
            v.push(varpi(
                n,
                &[
                    (n - 1, &(&(&k * &int(ni - 2)) + &(&kp * &int(2))) - &x),
                    (n, &(&x - &(&k * &int(ni - 1))) - &(&kp * &int(2))),
                ],
            ));
            v
        }
        Family::F => vec![
            varpi(4, &[(1, -(&k + &kp))]),
            varpi(4, &[(1, &kp - &k), (2, -&kp)]),
            varpi(4, &[(2, &kp - &(&k * &int(2))), (3, &(&k - &kp) * &int(2))]),
            varpi(4, &[(3, &k * &int(-2)), (4, &(&k * &int(2)) - &kp)]),
            varpi(4, &[(4, -(&(&k * &int(2)) + &kp))]),
        ],
        Family::G => {
            let (x, y) = xy_pair.clone().unwrap();
            vec![
                varpi(2, &[(1, -&x)]),
                varpi(2, &[(1, &x - &(&k * &int(2))), (2, &k - &x)]),
                varpi(2, &[(2, -&y)]),
            ]
        }
        Family::D => {
            let mut v: Vec<HStarElement> = (1..=n - 2)
                .map(|i| {
                    let ii = i as i64;
                    varpi(
                        n,
                        &[(i - 1, &k * &int(ni - 2 - ii)), (i, &k * &int(-(ni - 1 - ii)))],
                    )
                })
                .collect();
            v.push(varpi(n, &[(n - 1, &k * &int(-2))]));
            v.push(varpi(n, &[(n, &k * &int(-2))]));
            v.push(v[n - 3].clone());
            v
        }
        Family::E => {
            let full = [
                vec![(1, -3)],
                vec![(2, -2)],
                vec![(1, 1), (3, -2)],
                vec![(4, -1)],
                vec![(5, -2), (6, 1)],
                vec![(6, -3), (7, 2)],
                vec![(7, -4), (8, 3)],
                vec![(8, -5)],
            ];
            let mut v: Vec<HStarElement> = full[..n]
                .iter()
                .map(|parts| {
                    let p: Vec<(usize, RatFunc)> = parts.iter().map(|&(i, c)| (i, &k * &int(c))).collect();
                    varpi(n, &p)
                })
                .collect();
            v.push(v[3].clone());
            v
        }
        Family::BC => unreachable!(),
    };
    let r = rho(rs, kvec);
    let spectral = exponents.iter().map(|m| m + &r).collect();
    let a_value = match spec.family {
        Family::D => &(&k * &k) * &int(ni - 2),
        Family::E => {
            let c = match n {
                6 => 6,
                7 => 12,
                _ => 30,
            };
            &(&k * &k) * &int(c)
        }
        _ => {
            let (x, y) = xy_pair.clone().unwrap();
            &(&x * &y) * &q_to_ratfunc(rs.weight_gram[0][n - 1])
        }
    };
    let (x, y) = match xy_pair {
        Some((x, y)) => (Some(x), Some(y)),
        None => (None, None),
    };
    Ok(SpecialExponentReport {
        spec,
        couplings: kvec.clone(),
        exponents,
        spectral,
        x,
        y,
        a_value,
        verdicts: None,
    })
}
