use std::collections::BTreeMap;

use super::operators::{dunkl_apply, dunkl_basis, rho};
use super::symh::SymH;
use crate::coeff::{CouplingVector, RatFunc};
use crate::error::{Error, Result};
use crate::laurent::{integer_coupling, LaurentElement, LocalizedElement};
use crate::rootsys::{q_to_ratfunc, CorootVector, RootSystem, Weight};

/// `D_k(q) f = q(T_k) f` for W-invariant `q` and `f`.
pub fn invariant_apply(
    rs: &RootSystem,
    q: &SymH,
    f: &LaurentElement,
    kvec: &CouplingVector,
) -> Result<LaurentElement> {
    q.check()?;
    if q.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            got: q.rank(),
        });
    }
    if !q.is_w_invariant(rs) {
        return Err(Error::Precondition(format!("{q} is not W-invariant")));
    }
    if !f.is_w_invariant(rs) {
        return Err(Error::Precondition("argument is not W-invariant".into()));
    }
    apply_polynomial(rs, q, f, kvec)
}

/// `q(T_k) f` with no invariance requirement.
pub fn apply_polynomial(
    rs: &RootSystem,
    q: &SymH,
    f: &LaurentElement,
    kvec: &CouplingVector,
) -> Result<LaurentElement> {
    let n = rs.rank();
    let mut out = f.scale(&q.constant);
    let needs_first = q.linear.iter().any(|c| !c.is_zero())
        || q.quadratic.iter().flatten().any(|c| !c.is_zero());
    if !needs_first {
        return Ok(out);
    }
    let first = dunkl_basis(rs, f, kvec)?;
    for (c, tf) in q.linear.iter().zip(&first) {
        if !c.is_zero() {
            out = out.add(&tf.scale(c));
        }
    }
    for j in 0..n {
        // sum_i Q_ij T_i applied to T_j f
        let col = CorootVector((0..n).map(|i| q.quadratic[i][j].clone()).collect());
        if col.is_zero() {
            continue;
        }
        out = out.add(&dunkl_apply(rs, &col, &first[j], kvec)?);
    }
    Ok(out)
}

/// `partial(C)` on a Laurent element: `e^mu -> (mu, mu) e^mu`.
pub fn laplacian(rs: &RootSystem, f: &LaurentElement) -> LaurentElement {
    let mut out = LaurentElement::zero();
    for (mu, c) in f.terms() {
        out.add_term(mu.clone(), &(c * &q_to_ratfunc(rs.inner_weights(mu, mu))));
    }
    out
}

/// `partial(C)` on the localized ring.
pub fn laplacian_localized(rs: &RootSystem, f: &LocalizedElement) -> LocalizedElement {
    let n = rs.rank();
    let firsts: Vec<LocalizedElement> = (0..n)
        .map(|i| f.derivative(rs, &CorootVector::simple(n, i)))
        .collect();
    let mut out = LocalizedElement::zero();
    for (j, dj) in firsts.iter().enumerate() {
        let col = CorootVector((0..n).map(|i| q_to_ratfunc(rs.weight_gram[i][j])).collect());
        if col.is_zero() {
            continue;
        }
        out = out.add(rs, &dj.derivative(rs, &col));
    }
    out
}

/// `(1 + e^{-alpha})`.
fn one_plus_exp_neg(rs: &RootSystem, root: usize) -> LaurentElement {
    let a = &rs.positive_roots[root].weight;
    LaurentElement::from_terms([(Weight::zero(rs.rank()), RatFunc::one()), (-a, RatFunc::one())])
}

/// `1/2 k_alpha (alpha, alpha)`.
fn lk_weight(rs: &RootSystem, kvec: &CouplingVector, root: usize) -> RatFunc {
    rs.coupling(kvec, root) * &q_to_ratfunc(rs.positive_roots[root].norm / 2)
}

/// The first-order part of `L_k` on a localized element.
fn lk_first_order(rs: &RootSystem, f: &LocalizedElement, kvec: &CouplingVector) -> LocalizedElement {
    let mut out = LocalizedElement::zero();
    for (idx, root) in rs.positive_roots.iter().enumerate() {
        let c = lk_weight(rs, kvec, idx);
        if c.is_zero() {
            continue;
        }
        let xi = CorootVector::from_ints(&root.coroot);
        let d = f.derivative(rs, &xi);
        if d.is_zero() {
            continue;
        }
        let term = d
            .mul_laurent(rs, &one_plus_exp_neg(rs, idx))
            .div_factor(rs, idx, 1)
            .scale(&c);
        out = out.add(rs, &term);
    }
    out
}

/// `L_k = partial(C) + 1/2 sum_{alpha > 0} k_alpha (alpha, alpha)
/// (1 + e^{-alpha}) / (1 - e^{-alpha}) partial(alpha^vee)` on a W-invariant
/// Laurent element. The localized sum must cancel to a Laurent element.
pub fn lk_apply(rs: &RootSystem, f: &LaurentElement, kvec: &CouplingVector) -> Result<LaurentElement> {
    if !f.is_w_invariant(rs) {
        return Err(Error::Precondition("argument is not W-invariant".into()));
    }
    let first = lk_first_order(rs, &LocalizedElement::from_laurent(f.clone()), kvec);
    let first = first.to_laurent(rs).ok_or_else(|| Error::NotDivisible {
        root: first
            .denominator()
            .keys()
            .next()
            .map(|&i| rs.positive_roots[i].weight.to_string())
            .unwrap_or_default(),
    })?;
    Ok(laplacian(rs, f).add(&first))
}

/// `L_k` applied in the localized ring, without invariance.
pub fn lk_localized(rs: &RootSystem, f: &LocalizedElement, kvec: &CouplingVector) -> LocalizedElement {
    laplacian_localized(rs, f).add(rs, &lk_first_order(rs, f, kvec))
}

/// `k_{2 alpha}`, zero when `2 alpha` is not a root.
fn doubled_coupling(rs: &RootSystem, kvec: &CouplingVector, root: usize) -> RatFunc {
    rs.doubled(root)
        .map(|d| rs.coupling(kvec, d).clone())
        .unwrap_or_else(RatFunc::zero)
}

/// Potential coefficient `k_alpha (1 - k_alpha - 2 k_{2 alpha}) (alpha, alpha)`
/// of `e^{-alpha} / (1 - e^{-alpha})^2`, after pairing `alpha` with `-alpha`.
pub fn potential_coefficient(rs: &RootSystem, kvec: &CouplingVector, root: usize) -> RatFunc {
    let k = rs.coupling(kvec, root);
    let k2 = doubled_coupling(rs, kvec, root);
    let norm = q_to_ratfunc(rs.positive_roots[root].norm);
    &(k * &(&(&RatFunc::one() - k) - &(&k2 * &RatFunc::from_int(2)))) * &norm
}

/// The quantum Hamiltonian `H_k = partial(C) + 1/2 sum_{alpha in R}
/// k_alpha (1 - k_alpha - 2 k_{2 alpha}) (alpha, alpha) / (e^{alpha/2} - e^{-alpha/2})^2`.
pub fn hamiltonian_apply(rs: &RootSystem, f: &LocalizedElement, kvec: &CouplingVector) -> LocalizedElement {
    let mut out = laplacian_localized(rs, f);
    for idx in 0..rs.positive_roots.len() {
        let c = potential_coefficient(rs, kvec, idx);
        if c.is_zero() {
            continue;
        }
        let a = &rs.positive_roots[idx].weight;
        let pot = LocalizedElement::new(rs, LaurentElement::monomial(-a, c), BTreeMap::from([(idx, 2)]));
        out = out.add(rs, &f.mul(rs, &pot));
    }
    out
}

/// Outcome of the conjugation identity on one input.
#[derive(Clone, Debug)]
pub struct ConjugationCheck {
    pub holds: bool,
    /// `H_k(delta^{1/2} f)`.
    pub lhs: LocalizedElement,
    /// `delta^{1/2} (L_k f + (rho_k, rho_k) f)`.
    pub rhs: LocalizedElement,
}

/// `delta^{1/2} = e^{rho_k} prod_{alpha > 0} (1 - e^{-alpha})^{k_alpha}` for even
/// nonnegative integer couplings.
pub fn delta_half(rs: &RootSystem, kvec: &CouplingVector) -> Result<LaurentElement> {
    let n = rs.rank();
    let mut out = LaurentElement::one(n);
    for idx in 0..rs.positive_roots.len() {
        let e = integer_coupling(rs, kvec, idx)?;
        if e % 2 != 0 {
            return Err(Error::Domain(format!("coupling {e} is not even")));
        }
        if e > 0 {
            out = out.mul(&LaurentElement::one_minus_exp_neg(rs, idx).pow(n, e));
        }
    }
    let r = rho(rs, kvec);
    let coords = r
        .0
        .iter()
        .map(|c| {
            c.as_constant()
                .filter(|q| q.is_integer())
                .and_then(|q| i64::try_from(q.to_integer()).ok())
                .ok_or_else(|| Error::Domain(format!("rho_k coordinate {c} is not integral")))
        })
        .collect::<Result<Vec<i64>>>()?;
    Ok(out.shift(&Weight(coords)))
}

/// Checks `delta^{-1/2} H_k delta^{1/2} = L_k + (rho_k, rho_k)` on `f`.
pub fn conjugation_check(rs: &RootSystem, f: &LocalizedElement, kvec: &CouplingVector) -> Result<ConjugationCheck> {
    let d = delta_half(rs, kvec)?;
    let r = rho(rs, kvec);
    let rr = rs.inner(&r, &r);
    let lhs = hamiltonian_apply(rs, &f.mul_laurent(rs, &d), kvec);
    let inner = lk_localized(rs, f, kvec).add(rs, &f.scale(&rr));
    let rhs = inner.mul_laurent(rs, &d);
    Ok(ConjugationCheck {
        holds: lhs.equals(rs, &rhs),
        lhs,
        rhs,
    })
}
