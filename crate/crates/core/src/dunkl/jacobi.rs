use std::collections::{BTreeMap, BTreeSet};

use super::operators::{dunkl_apply, mu_tilde};
use crate::coeff::{CouplingVector, RatFunc};
use crate::error::{Error, Result};
use crate::laurent::LaurentElement;
use crate::rootsys::{CorootVector, PlusOrder, RootSystem, Weight};

/// Weights `nu` with `nu_+ <= mu_+` in the same class modulo the root
/// lattice: the closure of `mu_+` under root strings and W.
pub fn saturated_set(rs: &RootSystem, mu: &Weight) -> BTreeSet<Weight> {
    let top = rs.to_dominant(mu);
    let mut seen = BTreeSet::new();
    let mut stack = vec![top];
    while let Some(nu) = stack.pop() {
        if !seen.insert(nu.clone()) {
            continue;
        }
        for r in &rs.positive_roots {
            let m = nu.pair(&r.coroot);
            let (lo, hi) = if m >= 0 { (1, m) } else { (m, -1) };
            for j in lo..=hi {
                let w = Weight(nu.0.iter().zip(&r.weight.0).map(|(x, a)| x - j * a).collect());
                if !seen.contains(&w) {
                    stack.push(w);
                }
            }
        }
    }
    seen
}

/// The weights `nu <=_+ mu` of the saturated set, sorted by decreasing
/// `<=_+` key (so `mu` comes first).
pub fn lower_set(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let mut v: Vec<Weight> = saturated_set(rs, mu)
        .into_iter()
        .filter(|nu| matches!(rs.le_plus(nu, mu), PlusOrder::Less | PlusOrder::Equal))
        .collect();
    v.sort_by(|a, b| rs.cmp_plus_key(b, a));
    v
}

/// The `t`-th generic direction `sum_i (t + i) alpha_i^vee`.
pub fn generic_xi(rank: usize, t: usize) -> CorootVector {
    CorootVector((0..rank).map(|i| RatFunc::from_int((t + i + 1) as i64)).collect())
}

/// The nonsymmetric Jacobi polynomial `E_k(mu) = e^mu + lower terms`, the
/// common eigenfunction of the Dunkl operators with spectral parameter `mu~`.
pub fn jacobi(rs: &RootSystem, mu: &Weight, kvec: &CouplingVector) -> Result<LaurentElement> {
    if mu.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            got: mu.rank(),
        });
    }
    let basis = lower_set(rs, mu);
    let n = rs.rank();
    // a generic direction first; the simple coroots separate any two
    // distinct spectral weights, so they resolve whatever it misses
    let mut directions = vec![Direction::new(rs, &basis, mu, kvec, generic_xi(n, 1))?];
    let mut coeffs: BTreeMap<Weight, RatFunc> = BTreeMap::new();
    coeffs.insert(mu.clone(), RatFunc::one());
    for (pos, nu) in basis.iter().enumerate().skip(1) {
        let mut solved = false;
        for d in 0..=n {
            if d == directions.len() {
                let xi = CorootVector::simple(n, d - 1);
                directions.push(Direction::new(rs, &basis, mu, kvec, xi)?);
            }
            let dir = &directions[d];
            let gap = &dir.target - &dir.images[pos].coeff(nu);
            if gap.is_zero() {
                continue;
            }
            // sum over already solved weights of t_{nu, nu'} c_{nu'}
            let mut rhs = RatFunc::zero();
            for (prev, img) in basis[..pos].iter().zip(&dir.images) {
                if let Some(c) = coeffs.get(prev) {
                    let t = img.coeff(nu);
                    if !t.is_zero() {
                        rhs += &(&t * c);
                    }
                }
            }
            if !rhs.is_zero() {
                coeffs.insert(nu.clone(), &rhs / &gap);
            }
            solved = true;
            break;
        }
        if !solved {
            return Err(Error::Resonance {
                mu: mu.to_string(),
                tries: n + 1,
            });
        }
    }
    Ok(LaurentElement::from_terms(coeffs))
}

/// One direction `xi` with the eigenvalue `mu~(xi)` and the images
/// `T(xi) e^nu` of the basis.
struct Direction {
    target: RatFunc,
    images: Vec<LaurentElement>,
}

impl Direction {
    fn new(rs: &RootSystem, basis: &[Weight], mu: &Weight, kvec: &CouplingVector, xi: CorootVector) -> Result<Self> {
        let target = mu_tilde(rs, mu, kvec).pair(&xi);
        let images = basis
            .iter()
            .map(|nu| dunkl_apply(rs, &xi, &LaurentElement::exp(nu.clone()), kvec))
            .collect::<Result<_>>()?;
        Ok(Direction { target, images })
    }
}
