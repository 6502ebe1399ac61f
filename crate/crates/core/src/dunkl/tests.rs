use super::*;
use crate::coeff::{CouplingVector, RatFunc};
use crate::error::Error;
use crate::laurent::{LaurentElement, LocalizedElement};
use crate::rootsys::{CorootVector, HStarElement, RootSystem, Weight};

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

fn e(v: &[i64]) -> LaurentElement {
    LaurentElement::exp(Weight(v.to_vec()))
}

fn k() -> RatFunc {
    RatFunc::k()
}

fn int(i: i64) -> RatFunc {
    RatFunc::from_int(i)
}

fn sym(label: &str) -> (RootSystem, CouplingVector) {
    let r = rs(label);
    let kv = r.symbolic_couplings();
    (r, kv)
}

#[test]
fn rho_examples() {
    let (a1, kv) = sym("A1");
    assert_eq!(rho(&a1, &kv), HStarElement(vec![k()]));
    let (a2, kv) = sym("A2");
    assert_eq!(rho(&a2, &kv), HStarElement(vec![k(), k()]));
    // rho_k(alpha_i^vee) = k_i
    for label in ["B2", "B3", "C3", "F4", "G2"] {
        let (r, kv) = sym(label);
        let p = rho(&r, &kv);
        for i in 0..r.rank() {
            assert_eq!(&p.0[i], r.simple_coupling(&kv, i), "{label} {i}");
        }
    }
}

#[test]
fn mu_tilde_examples() {
    let (a1, kv) = sym("A1");
    let one = RatFunc::one();
    assert_eq!(mu_tilde(&a1, &Weight(vec![1]), &kv), HStarElement(vec![&one + &k()]));
    assert_eq!(mu_tilde(&a1, &Weight(vec![-1]), &kv), HStarElement(vec![-(&one + &k())]));
    for label in ["A2", "B2", "G2"] {
        let (r, kv) = sym(label);
        let n = r.rank();
        assert_eq!(mu_tilde(&r, &Weight::zero(n), &kv), -&rho(&r, &kv));
        let dom = Weight(vec![2; n]);
        assert_eq!(mu_tilde(&r, &dom, &kv), &dom.to_hstar() + &rho(&r, &kv));
        let anti = Weight(vec![-1; n]);
        assert_eq!(mu_tilde(&r, &anti, &kv), &anti.to_hstar() - &rho(&r, &kv));
    }
}

#[test]
fn dunkl_examples() {
    let (a1, kv) = sym("A1");
    let xi = CorootVector::from_ints(&[1]);
    let one = RatFunc::one();
    assert_eq!(dunkl_apply(&a1, &xi, &e(&[1]), &kv).unwrap(), e(&[1]).scale(&(&one + &k())));
    let expect = e(&[-1]).scale(&-(&one + &k())).sub(&e(&[1]).scale(&(&k() * &int(2))));
    assert_eq!(dunkl_apply(&a1, &xi, &e(&[-1]), &kv).unwrap(), expect);
    for label in ["A2", "B2", "G2"] {
        let (r, kv) = sym(label);
        let xi = CorootVector::from_ints(&[2, -1]);
        let c = rho(&r, &kv).pair(&xi);
        assert_eq!(
            dunkl_apply(&r, &xi, &LaurentElement::one(2), &kv).unwrap(),
            LaurentElement::constant(2, -c)
        );
    }
    assert!(matches!(
        dunkl_apply(&a1, &CorootVector::from_ints(&[1, 0]), &e(&[1]), &kv),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn closed_form_matches_division() {
    for label in ["A2", "B2", "G2", "BC2"] {
        let (r, kv) = sym(label);
        let xi = CorootVector::from_ints(&[1, 3]);
        for mu in [[1, 0], [-2, 1], [0, -1], [3, -2]] {
            let f = e(&mu);
            assert_eq!(
                dunkl_apply(&r, &xi, &f, &kv).unwrap(),
                dunkl_apply_by_division(&r, &xi, &f, &kv).unwrap(),
                "{label} {mu:?}"
            );
        }
    }
}

#[test]
fn jacobi_examples() {
    let (a1, kv) = sym("A1");
    assert_eq!(jacobi(&a1, &Weight(vec![0]), &kv).unwrap(), LaurentElement::one(1));
    assert_eq!(jacobi(&a1, &Weight(vec![1]), &kv).unwrap(), e(&[1]));
    let c = &k() / &(&RatFunc::one() + &k());
    assert_eq!(jacobi(&a1, &Weight(vec![-1]), &kv).unwrap(), e(&[-1]).add(&e(&[1]).scale(&c)));
    let (a2, kv) = sym("A2");
    assert_eq!(jacobi(&a2, &Weight(vec![0, 0]), &kv).unwrap(), LaurentElement::one(2));
}

#[test]
fn jacobi_is_eigenfunction() {
    for label in ["A2", "B2"] {
        let (r, kv) = sym(label);
        let mu = Weight(vec![-1, 1]);
        let ej = jacobi(&r, &mu, &kv).unwrap();
        let mt = mu_tilde(&r, &mu, &kv);
        for i in 0..2 {
            let xi = CorootVector::simple(2, i);
            let lhs = dunkl_apply(&r, &xi, &ej, &kv).unwrap();
            assert_eq!(lhs, ej.scale(&mt.pair(&xi)), "{label} xi {i}");
        }
    }
}

#[test]
fn a1_rank_one_hand_values() {
    // T(alpha^vee) on E(-2 varpi) with E = e^{-2w} + c1 e^{0} + c2 e^{2w}
    let (a1, kv) = sym("A1");
    let ej = jacobi(&a1, &Weight(vec![-2]), &kv).unwrap();
    assert_eq!(ej.coeff(&Weight(vec![-2])), RatFunc::one());
    let xi = CorootVector::from_ints(&[1]);
    let mt = mu_tilde(&a1, &Weight(vec![-2]), &kv).pair(&xi);
    assert_eq!(mt, -(&int(2) + &k()));
    assert_eq!(dunkl_apply(&a1, &xi, &ej, &kv).unwrap(), ej.scale(&mt));
}

#[test]
fn invariant_examples() {
    let (a1, kv) = sym("A1");
    let f = e(&[1]).add(&e(&[-1]));
    let q = SymH::product(&CorootVector::from_ints(&[1]), &CorootVector::from_ints(&[1]));
    let one_k = &RatFunc::one() + &k();
    assert_eq!(invariant_apply(&a1, &q, &f, &kv).unwrap(), f.scale(&(&one_k * &one_k)));
    // q quadratic on 1 gives q(rho_k)
    for label in ["A2", "B2"] {
        let (r, kv) = sym(label);
        let c = SymH::casimir(&r);
        let val = c.evaluate(&rho(&r, &kv));
        assert_eq!(
            invariant_apply(&r, &c, &LaurentElement::one(2), &kv).unwrap(),
            LaurentElement::constant(2, val)
        );
    }
    // non-invariant input is rejected
    assert!(matches!(invariant_apply(&a1, &q, &e(&[1]), &kv), Err(Error::Precondition(_))));
    let lin = SymH::linear(&CorootVector::from_ints(&[1]));
    assert!(matches!(invariant_apply(&a1, &lin, &f, &kv), Err(Error::Precondition(_))));
}

#[test]
fn a2_casimir_on_orbit_sum() {
    let (a2, kv) = sym("A2");
    let f = LaurentElement::orbit_sum(&a2, &Weight(vec![1, 0]));
    let c = SymH::casimir(&a2);
    let lambda = &Weight(vec![1, 0]).to_hstar() + &rho(&a2, &kv);
    let got = invariant_apply(&a2, &c, &f, &kv).unwrap();
    assert_eq!(got, f.scale(&c.evaluate(&lambda)));
    let r = rho(&a2, &kv);
    let lk = lk_apply(&a2, &f, &kv).unwrap().add(&f.scale(&a2.inner(&r, &r)));
    assert_eq!(got, lk);
}

#[test]
fn lk_examples() {
    let (a1, kv) = sym("A1");
    let f = e(&[1]).add(&e(&[-1]));
    let half = RatFunc::frac(1, 2);
    assert_eq!(lk_apply(&a1, &f, &kv).unwrap(), f.scale(&(&half + &k())));
    assert!(lk_apply(&a1, &LaurentElement::one(1), &kv).unwrap().is_zero());
    // D_k(C) f = 1/2 (1 + k)^2 f
    let c = SymH::casimir(&a1);
    let one_k = &RatFunc::one() + &k();
    assert_eq!(
        invariant_apply(&a1, &c, &f, &kv).unwrap(),
        f.scale(&(&half * &(&one_k * &one_k)))
    );
    assert!(matches!(lk_apply(&a1, &e(&[1]), &kv), Err(Error::Precondition(_))));
}

#[test]
fn hamiltonian_examples() {
    let (a1, kv) = sym("A1");
    let one = LocalizedElement::from_laurent(LaurentElement::one(1));
    let h = hamiltonian_apply(&a1, &one, &kv);
    // 2 k (1 - k) e^{-alpha} / (1 - e^{-alpha})^2
    let coeff = &(&int(2) * &k()) * &(&RatFunc::one() - &k());
    let expect = LocalizedElement::new(
        &a1,
        LaurentElement::monomial(Weight(vec![-2]), coeff),
        [(0, 2)].into_iter().collect(),
    );
    assert!(h.equals(&a1, &expect));
    // free Laplacian at k = 0
    let b2 = rs("B2");
    let f = LocalizedElement::from_laurent(e(&[1, -1]));
    let h0 = hamiltonian_apply(&b2, &f, &CouplingVector::zero());
    let mu = Weight(vec![1, -1]);
    let norm = crate::rootsys::q_to_ratfunc(b2.inner_weights(&mu, &mu));
    assert!(h0.equals(&b2, &LocalizedElement::from_laurent(e(&[1, -1]).scale(&norm))));
    // BC1 potential coefficient k (1 - k - 2 k2) (alpha, alpha) on e_1
    let (bc1, kv) = sym("BC1");
    let i = bc1.indivisible_simple(0);
    let kk = RatFunc::k();
    let k2 = RatFunc::kp();
    let norm = crate::rootsys::q_to_ratfunc(bc1.positive_roots[i].norm);
    let expect = &(&kk * &(&(&RatFunc::one() - &kk) - &(&k2 * &int(2)))) * &norm;
    assert_eq!(potential_coefficient(&bc1, &kv, i), expect);
}

#[test]
fn conjugation_examples() {
    let a1 = rs("A1");
    let two = CouplingVector::uniform(int(2));
    let one = LocalizedElement::from_laurent(LaurentElement::one(1));
    assert!(conjugation_check(&a1, &one, &two).unwrap().holds);
    let f = LocalizedElement::from_laurent(e(&[1]));
    assert!(conjugation_check(&a1, &f, &CouplingVector::zero()).unwrap().holds);
    let a2 = rs("A2");
    let f = LocalizedElement::from_laurent(e(&[1, 0]));
    assert!(conjugation_check(&a2, &f, &two).unwrap().holds);
    assert!(matches!(
        conjugation_check(&a1, &one, &CouplingVector::uniform(int(1))),
        Err(Error::Domain(_))
    ));
}

#[test]
fn symh_invariance() {
    for label in ["A2", "B2", "G2", "F4"] {
        let r = rs(label);
        assert!(SymH::casimir(&r).is_w_invariant(&r));
        let xi = CorootVector::simple(r.rank(), 0);
        assert!(!SymH::product(&xi, &xi).is_w_invariant(&r));
    }
}

#[test]
fn triangular_support() {
    let (b2, kv) = sym("B2");
    let xi = CorootVector::from_ints(&[1, 1]);
    for mu in [[1, 1], [-1, 2], [2, -2]] {
        let mu = Weight(mu.to_vec());
        let img = dunkl_apply(&b2, &xi, &LaurentElement::exp(mu.clone()), &kv).unwrap();
        for nu in img.support() {
            assert!(matches!(
                b2.le_plus(nu, &mu),
                crate::rootsys::PlusOrder::Less | crate::rootsys::PlusOrder::Equal
            ));
        }
        assert_eq!(img.coeff(&mu), mu_tilde(&b2, &mu, &kv).pair(&xi));
    }
}

#[test]
fn jacobi_at_zero_coupling_in_rank_three() {
    // the generic direction alone cannot separate every pair here
    let r = rs("A3");
    let kv = CouplingVector::zero();
    let mu = Weight(vec![1, 2, 0]);
    assert_eq!(jacobi(&r, &mu, &kv).unwrap(), LaurentElement::exp(mu.clone()));
}

#[test]
fn jacobi_reports_resonance() {
    // at k = -1 the spectral weights of varpi and -varpi coincide in A1
    let r = rs("A1");
    let kv = CouplingVector::uniform(int(-1));
    assert_eq!(mu_tilde(&r, &Weight(vec![-1]), &kv), mu_tilde(&r, &Weight(vec![1]), &kv));
    assert!(matches!(jacobi(&r, &Weight(vec![-1]), &kv), Err(Error::Resonance { .. })));
}
