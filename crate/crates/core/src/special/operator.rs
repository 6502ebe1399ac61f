use std::collections::BTreeMap;

use super::exponents::special_couplings;
use crate::coeff::{CouplingVector, RatFunc};
use crate::dunkl::{rho, SymH};
use crate::error::{Error, Result};
use crate::laurent::{LaurentElement, LocalizedElement};
use crate::rootsys::{q_to_ratfunc, CorootVector, Family, RootSystem, Weight};

/// `p(alpha)` for a quadratic `p` and an integral weight.
fn eval_weight(p: &SymH, w: &Weight) -> RatFunc {
    p.evaluate(&w.to_hstar())
}

/// The degree-two operator attached to a homogeneous quadratic `p`, applied
/// to `f`. On the monomial `xi eta` it is
/// `partial(xi) partial(eta) + 1/2 sum_{alpha > 0} alpha(xi) alpha(eta)
/// [(1 + e^{-alpha})/(1 - e^{-alpha}) k_alpha partial(alpha^vee) (+ k' partial(alpha'))]
/// + rho_k(xi) rho_k(eta)`, the `alpha'` term only for A_n.
pub fn dk2_apply(
    rs: &RootSystem,
    p: &SymH,
    f: &LocalizedElement,
    kvec: &CouplingVector,
) -> Result<LocalizedElement> {
    p.check()?;
    if !p.is_homogeneous_quadratic() {
        return Err(Error::Precondition("expected a homogeneous quadratic".into()));
    }
    let n = rs.rank();
    if p.rank() != n {
        return Err(Error::Dimension {
            expected: n,
            got: p.rank(),
        });
    }
    // second-order part
    let mut out = LocalizedElement::zero();
    for j in 0..n {
        let col = CorootVector((0..n).map(|i| p.quadratic[i][j].clone()).collect());
        if col.is_zero() {
            continue;
        }
        let dj = f.derivative(rs, &CorootVector::simple(n, j));
        out = out.add(rs, &dj.derivative(rs, &col));
    }
    let half = RatFunc::frac(1, 2);
    let (_, kp) = special_couplings(rs, kvec);
    let with_prime = rs.family() == Family::A && !kp.is_zero();
    for (idx, root) in rs.positive_roots.iter().enumerate() {
        let pa = eval_weight(p, &root.weight);
        if pa.is_zero() {
            continue;
        }
        let c = &(&pa * &half) * rs.coupling(kvec, idx);
        if !c.is_zero() {
            let d = f.derivative(rs, &CorootVector::from_ints(&root.coroot));
            if !d.is_zero() {
                let num = LaurentElement::from_terms([
                    (Weight::zero(n), RatFunc::one()),
                    (-&root.weight, RatFunc::one()),
                ]);
                let coth = LocalizedElement::new(rs, num, BTreeMap::from([(idx, 1)]));
                out = out.add(rs, &d.mul(rs, &coth).scale(&c));
            }
        }
        if with_prime {
            let ap = rs.alpha_prime(idx)?;
            let xi = CorootVector(ap.iter().map(|&q| q_to_ratfunc(q)).collect());
            let d = f.derivative(rs, &xi);
            out = out.add(rs, &d.scale(&(&(&pa * &half) * &kp)));
        }
    }
    let r = rho(rs, kvec);
    out = out.add(rs, &f.scale(&p.evaluate(&r)));
    Ok(out)
}

/// Right-hand side constant of the special system for `p`:
/// `p(rho_k) - a (C^vee, p)`.
pub fn special_eigenvalue(rs: &RootSystem, p: &SymH, kvec: &CouplingVector, a: &RatFunc) -> RatFunc {
    let cv = super::SymTwoDual::dual_casimir(rs);
    &p.evaluate(&rho(rs, kvec)) - &(a * &cv.pair(p))
}
