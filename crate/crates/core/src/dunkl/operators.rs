use serde::{Deserialize, Serialize};

use crate::coeff::{CouplingVector, RatFunc};
use crate::error::{Error, Result};
use crate::laurent::LaurentElement;
use crate::rootsys::{CorootVector, HStarElement, RootSystem, Weight};

/// `rho_k = 1/2 sum_{alpha > 0} k_alpha alpha`.
pub fn rho(rs: &RootSystem, kvec: &CouplingVector) -> HStarElement {
    let n = rs.rank();
    let mut twice = HStarElement::zero(n);
    for (idx, r) in rs.positive_roots.iter().enumerate() {
        let k = rs.coupling(kvec, idx);
        if k.is_zero() {
            continue;
        }
        for (c, &a) in twice.0.iter_mut().zip(&r.weight.0) {
            if a != 0 {
                *c += &(k * &RatFunc::from_int(a));
            }
        }
    }
    twice.scale(&RatFunc::frac(1, 2))
}

/// `epsilon(x) = 1` for `x > 0`, else `-1`.
fn epsilon(x: i64) -> i64 {
    if x > 0 {
        1
    } else {
        -1
    }
}

/// `mu~ = mu + 1/2 sum_{alpha > 0} k_alpha epsilon(mu(alpha^vee)) alpha`.
pub fn mu_tilde(rs: &RootSystem, mu: &Weight, kvec: &CouplingVector) -> HStarElement {
    let n = rs.rank();
    let mut shift = HStarElement::zero(n);
    for (idx, r) in rs.positive_roots.iter().enumerate() {
        let k = rs.coupling(kvec, idx);
        if k.is_zero() {
            continue;
        }
        let s = epsilon(mu.pair(&r.coroot));
        for (c, &a) in shift.0.iter_mut().zip(&r.weight.0) {
            if a != 0 {
                *c += &(k * &RatFunc::from_int(s * a));
            }
        }
    }
    &mu.to_hstar() + &shift.scale(&RatFunc::frac(1, 2))
}

/// A weight with its spectral parameter `mu~`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenData {
    pub mu: Weight,
    pub mu_tilde: HStarElement,
}

impl EigenData {
    pub fn new(rs: &RootSystem, mu: &Weight, kvec: &CouplingVector) -> Self {
        EigenData {
            mu: mu.clone(),
            mu_tilde: mu_tilde(rs, mu, kvec),
        }
    }
}

/// `alpha(xi)` for a positive root.
pub(crate) fn root_value(rs: &RootSystem, root: usize, xi: &CorootVector) -> RatFunc {
    rs.positive_roots[root]
        .weight
        .0
        .iter()
        .zip(&xi.0)
        .filter(|(&a, x)| a != 0 && !x.is_zero())
        .map(|(&a, x)| x * &RatFunc::from_int(a))
        .sum()
}

/// `(e^mu - e^{s_alpha mu}) / (1 - e^{-alpha})` as a list of weights with
/// unit coefficients and a common sign.
fn divided_difference_monomial(rs: &RootSystem, root: usize, mu: &Weight) -> (i64, Vec<Weight>) {
    let r = &rs.positive_roots[root];
    let m = mu.pair(&r.coroot);
    let step = |j: i64| Weight(mu.0.iter().zip(&r.weight.0).map(|(x, a)| x - j * a).collect());
    if m > 0 {
        (1, (0..m).map(step).collect())
    } else if m < 0 {
        (-1, (1..=-m).map(|j| step(-j)).collect())
    } else {
        (1, Vec::new())
    }
}

fn check_rank(rs: &RootSystem, xi: &CorootVector) -> Result<()> {
    if xi.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            got: xi.rank(),
        });
    }
    Ok(())
}

/// `T_k(xi) f = (partial(xi) - rho_k(xi)) f + sum_{alpha > 0} k_alpha alpha(xi)
/// (f - s_alpha f) / (1 - e^{-alpha})`.
pub fn dunkl_apply(
    rs: &RootSystem,
    xi: &CorootVector,
    f: &LaurentElement,
    kvec: &CouplingVector,
) -> Result<LaurentElement> {
    check_rank(rs, xi)?;
    let rho_xi = rho(rs, kvec).pair(xi);
    let weights: Vec<(usize, RatFunc)> = (0..rs.positive_roots.len())
        .filter_map(|idx| {
            let c = rs.coupling(kvec, idx) * &root_value(rs, idx, xi);
            (!c.is_zero()).then_some((idx, c))
        })
        .collect();
    let mut out = f.derivative(xi);
    if !rho_xi.is_zero() {
        out = out.sub(&f.scale(&rho_xi));
    }
    for (mu, c) in f.terms() {
        for (idx, kc) in &weights {
            let (sign, ws) = divided_difference_monomial(rs, *idx, mu);
            if ws.is_empty() {
                continue;
            }
            let coeff = &(c * kc) * &RatFunc::from_int(sign);
            for w in ws {
                out.add_term(w, &coeff);
            }
        }
    }
    Ok(out)
}

/// Same operator, with every divided difference computed through
/// [`LaurentElement::exact_divide`]. Slower; used as a cross-check.
pub fn dunkl_apply_by_division(
    rs: &RootSystem,
    xi: &CorootVector,
    f: &LaurentElement,
    kvec: &CouplingVector,
) -> Result<LaurentElement> {
    check_rank(rs, xi)?;
    let rho_xi = rho(rs, kvec).pair(xi);
    let mut out = f.derivative(xi).sub(&f.scale(&rho_xi));
    for idx in 0..rs.positive_roots.len() {
        let c = rs.coupling(kvec, idx) * &root_value(rs, idx, xi);
        if c.is_zero() {
            continue;
        }
        out = out.add(&f.divided_difference(rs, idx)?.scale(&c));
    }
    Ok(out)
}

/// Applies `T_k(alpha_i^vee)` for every simple coroot.
pub(crate) fn dunkl_basis(rs: &RootSystem, f: &LaurentElement, kvec: &CouplingVector) -> Result<Vec<LaurentElement>> {
    (0..rs.rank())
        .map(|i| dunkl_apply(rs, &CorootVector::simple(rs.rank(), i), f, kvec))
        .collect()
}
