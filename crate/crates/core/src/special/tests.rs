use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::coeff::{CouplingVector, RatFunc};
use crate::dunkl::{invariant_apply, rho, SymH};
use crate::error::Error;
use crate::laurent::{LaurentElement, LocalizedElement};
use crate::rootsys::{CorootVector, HStarElement, RootSystem, Weight};

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

fn report(label: &str) -> (RootSystem, SpecialExponentReport) {
    let r = rs(label);
    let kv = r.symbolic_couplings();
    let rep = special_exponents(&r, &kv).unwrap();
    (r, rep)
}

fn k() -> RatFunc {
    RatFunc::k()
}

fn kp() -> RatFunc {
    RatFunc::kp()
}

fn int(i: i64) -> RatFunc {
    RatFunc::from_int(i)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational_kvec(r: &RootSystem, k: BigRational) -> CouplingVector {
    r.symbolic_couplings().specialize(Some(&k), Some(&BigRational::from_integer(0.into()))).unwrap()
}

const TYPES: [&str; 18] = [
    "A1", "A2", "A5", "A8", "B2", "B3", "B8", "C2", "C4", "C8", "D4", "D5", "D8", "E6", "E7", "E8", "F4", "G2",
];

#[test]
fn a2_exponents() {
    let (_, rep) = report("A2");
    let x = rep.x.clone().unwrap();
    let y = rep.y.clone().unwrap();
    assert_eq!(rep.exponents.len(), 3);
    assert_eq!(rep.exponents[0], HStarElement(vec![-&x, RatFunc::zero()]));
    assert_eq!(rep.exponents[1], HStarElement(vec![&x - &(&k() * &int(2)), &k() - &x]));
    assert_eq!(rep.exponents[2], HStarElement(vec![RatFunc::zero(), -&y]));
    // x + y = 3k, x - y = 3k'
    assert_eq!(&x + &y, &k() * &int(3));
    assert_eq!(&x - &y, &kp() * &int(3));
}

#[test]
fn e8_exponents() {
    let (_, rep) = report("E8");
    assert_eq!(rep.exponents.len(), 9);
    let mut last = HStarElement::zero(8);
    last.0[7] = &k() * &int(-5);
    assert_eq!(rep.exponents[7], last);
    assert_eq!(rep.exponents[8], rep.exponents[3]);
    assert!(rep.x.is_none() && rep.y.is_none());
}

#[test]
fn g2_middle_exponent() {
    let (_, rep) = report("G2");
    let x = (&k() + &(&kp() * &int(3))) * RatFunc::frac(1, 2);
    assert_eq!(rep.x.as_ref(), Some(&x));
    assert_eq!(rep.exponents[1], HStarElement(vec![&x - &(&k() * &int(2)), &k() - &x]));
}

#[test]
fn exponents_are_linear_in_couplings() {
    for label in TYPES {
        let (_, rep) = report(label);
        for mu in &rep.exponents {
            for c in &mu.0 {
                assert!(c.is_polynomial() && c.numer().total_degree() <= 1, "{label}: {c}");
            }
        }
    }
}

#[test]
fn nonreduced_is_rejected() {
    let r = rs("BC2");
    let kv = r.symbolic_couplings();
    assert!(matches!(special_exponents(&r, &kv), Err(Error::UnsupportedType(_))));
}

#[test]
fn tabulated_a_values() {
    let k2 = &k() * &k();
    for (label, c) in [("E6", 6), ("E7", 12), ("E8", 30), ("D4", 2), ("D5", 3), ("D7", 5)] {
        let (r, rep) = report(label);
        assert_eq!(rep.a_value, &k2 * &int(c), "{label}");
        assert_eq!(derived_a_value(&r, &rep), rep.a_value, "{label}");
    }
    // a = xy(varpi_1, varpi_n) = (mu_1, mu_{n+1})
    let (r, rep) = report("A2");
    let xy = rep.x.as_ref().unwrap() * rep.y.as_ref().unwrap();
    assert_eq!(rep.a_value, &xy * &RatFunc::frac(1, 3));
    assert_eq!(rep.a_value, r.inner(&rep.exponents[0], &rep.exponents[2]));
}

#[test]
fn quadratic_equation_holds_everywhere() {
    for label in TYPES {
        let (r, rep) = report(label);
        for c in verify_quadratic(&r, &rep).unwrap() {
            assert!(c.holds, "{label}: {} | {} | {}", c.name, c.lhs, c.rhs);
        }
        assert!(exactness_check(&r, &rep).unwrap().holds, "{label}");
    }
}

#[test]
fn residual_of_a_perturbed_exponent_is_nonzero() {
    let (r, rep) = report("B3");
    let mut mu = rep.exponents[1].clone();
    mu.0[0] += &int(1);
    assert!(!quadratic_residual(&r, &rep.couplings, &mu, &rep.a_value).unwrap().is_zero());
}

#[test]
fn relations_hold() {
    for label in TYPES {
        let (r, rep) = report(label);
        for c in consecutive_relations(&r, &rep).unwrap() {
            assert!(c.holds, "{label}: {} | {} | {}", c.name, c.lhs, c.rhs);
        }
    }
}

#[test]
fn a3_spectral_chain() {
    let (r, rep) = report("A3");
    for i in 0..3 {
        assert_eq!(rep.spectral[i + 1], r.reflect(i, &rep.spectral[i]).unwrap());
    }
}

#[test]
fn f4_last_difference() {
    let (r, rep) = report("F4");
    let d = &rep.exponents[4] - &rep.exponents[3];
    assert_eq!(d, r.simple_root_weight(3).to_hstar().scale(&(&k() * &int(-2))));
}

#[test]
fn e6_triple_node_distances() {
    let r = rs("E6");
    assert_eq!(triple_node_distances(&r).unwrap(), vec![2, 1, 1, 0, 1, 2]);
    let (_, rep) = report("E6");
    let alpha2 = &r.positive_roots[r.indivisible_simple(1)].coroot;
    assert_eq!(rep.spectral[1].pair_int(alpha2), -k());
}

#[test]
fn casimir_values() {
    for label in TYPES {
        let (r, rep) = report(label);
        for c in casimir_checks(&r, &rep) {
            assert!(c.holds, "{label}: {}", c.name);
        }
    }
}

#[test]
fn verdicts_serialize() {
    let (r, mut rep) = report("A2");
    verify_report(&r, &mut rep).unwrap();
    assert!(rep.verdicts.as_ref().unwrap().all_hold());
    let doc = ReportDoc::from(&rep);
    let json = serde_json::to_string(&doc).unwrap();
    let back: ReportDoc = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), json);
    assert!(json.contains("\"type\""));
}

#[test]
fn dual_casimir_pairs_to_rank() {
    for label in ["A3", "B2", "G2", "E6"] {
        let r = rs(label);
        let cv = SymTwoDual::dual_casimir(&r);
        assert_eq!(cv.pair(&SymH::casimir(&r)), int(r.rank() as i64), "{label}");
    }
}

#[test]
fn dk2_on_constants() {
    for label in ["A2", "B2", "G2"] {
        let r = rs(label);
        let kv = r.symbolic_couplings();
        let xi = CorootVector::simple(2, 0);
        let eta = CorootVector::simple(2, 1);
        let p = SymH::product(&xi, &eta);
        let one = LocalizedElement::from_laurent(LaurentElement::one(2));
        let got = dk2_apply(&r, &p, &one, &kv).unwrap();
        let rk = rho(&r, &kv);
        let expect = &rk.pair(&xi) * &rk.pair(&eta);
        assert!(got.equals(&r, &one.scale(&expect)), "{label}");
    }
}

#[test]
fn dk2_a1_example() {
    let r = rs("A1");
    let kv = r.symbolic_couplings();
    let f = LaurentElement::orbit_sum(&r, &Weight(vec![1]));
    let got = dk2_apply(&r, &SymH::casimir(&r), &LocalizedElement::from_laurent(f.clone()), &kv).unwrap();
    let one_k = &int(1) + &k();
    let expect = f.scale(&(&(&one_k * &one_k) * &RatFunc::frac(1, 2)));
    assert_eq!(got.to_laurent(&r), Some(expect));
}

#[test]
fn dk2_matches_invariant_operator() {
    for label in ["A1", "A2", "B2"] {
        let r = rs(label);
        let kv = r.symbolic_couplings();
        let c = SymH::casimir(&r);
        let n = r.rank();
        let mut weights = vec![Weight::zero(n)];
        for i in 0..n {
            weights.push(Weight::fundamental(n, i));
        }
        if n == 2 {
            weights.push(Weight(vec![1, 1]));
        }
        for w in weights {
            let f = LaurentElement::orbit_sum(&r, &w);
            let lhs = dk2_apply(&r, &c, &LocalizedElement::from_laurent(f.clone()), &kv).unwrap();
            let rhs = invariant_apply(&r, &c, &f, &kv).unwrap();
            assert_eq!(lhs.to_laurent(&r), Some(rhs), "{label} {w}");
        }
    }
}

#[test]
fn dk2_rejects_non_quadratic() {
    let r = rs("A1");
    let kv = r.symbolic_couplings();
    let p = SymH::linear(&CorootVector::simple(1, 0));
    let f = LocalizedElement::from_laurent(LaurentElement::one(1));
    assert!(dk2_apply(&r, &p, &f, &kv).is_err());
}

#[test]
fn special_eigenvalue_is_casimir_of_lambda() {
    for label in ["A2", "B3", "G2", "D4"] {
        let (r, rep) = report(label);
        let c = SymH::casimir(&r);
        let ev = special_eigenvalue(&r, &c, &rep.couplings, &rep.a_value);
        for l in &rep.spectral {
            assert_eq!(c.evaluate(l), ev, "{label}");
        }
    }
}

#[test]
fn reducibility_examples() {
    let r = rs("A1");
    let kv = rational_kvec(&r, q(1, 4));
    // lambda = (1 + k) varpi at k = 1/4
    let w = reducibility_check(&r, &[q(5, 4)], &kv).unwrap();
    assert!(w.iter().any(|w| w.sign == -1 && w.value == q(-1, 1)));
    assert!(reducibility_check(&r, &[q(3, 10)], &kv).unwrap().is_empty());
    // mu = 0: lambda = rho_k, every root witnesses
    let r2 = rs("B2");
    let kv2 = r2.symbolic_couplings().specialize(Some(&q(1, 3)), Some(&q(1, 5))).unwrap();
    let lambda: Vec<BigRational> = rho(&r2, &kv2).0.iter().map(|c| c.as_constant().unwrap()).collect();
    let w = reducibility_check(&r2, &lambda, &kv2).unwrap();
    // lambda(-alpha_i^vee) + k_i = 0 for each simple root
    for i in 0..2 {
        let idx = r2.indivisible_simple(i);
        assert!(w.iter().any(|x| x.root_index == idx && x.sign == -1 && x.value == q(0, 1)));
    }
    // the highest short root of B2 pairs to 2/3 + 1/5 against rho_k, so not every root witnesses
    assert!(w.len() < 2 * r2.positive_roots.len());
}

#[test]
fn reducibility_needs_rational_couplings() {
    let r = rs("A1");
    let kv = r.symbolic_couplings();
    assert!(matches!(reducibility_check(&r, &[q(1, 2)], &kv), Err(Error::Domain(_))));
}

#[test]
fn indicial_membership() {
    let r = rs("A2");
    let kv = rational_kvec(&r, q(1, 3));
    let lambda = vec![q(4, 3), q(1, 3)];
    // mu + rho_k = lambda
    assert!(indicial_member(&r, &[q(1, 1), q(0, 1)], &lambda, &kv).unwrap());
    // mu + rho_k = s_1 lambda = (-4/3, 5/3)
    assert!(indicial_member(&r, &[q(-5, 3), q(4, 3)], &lambda, &kv).unwrap());
    assert!(!indicial_member(&r, &[q(1, 2), q(0, 1)], &lambda, &kv).unwrap());
}

#[test]
fn monodromy_examples() {
    let r = rs("A2");
    let rep = monodromy_spec(&r, &rational_kvec(&r, q(1, 3))).unwrap();
    assert_eq!(rep.len(), 2);
    for g in &rep {
        assert_eq!(
            g.eigenvalues,
            vec![
                Eigenvalue { rotation: q(1, 2), multiplicity: 2 },
                Eigenvalue { rotation: q(1, 3), multiplicity: 1 },
            ]
        );
        assert!(!g.plus_convention);
        assert!(g.minus_convention);
    }
    let rep = monodromy_spec(&r, &rational_kvec(&r, q(0, 1))).unwrap();
    for g in &rep {
        // {1, 1, -1}
        assert_eq!(
            g.eigenvalues,
            vec![
                Eigenvalue { rotation: q(1, 2), multiplicity: 2 },
                Eigenvalue { rotation: q(0, 1), multiplicity: 1 },
            ]
        );
        assert!(g.plus_convention);
    }
    let e8 = rs("E8");
    let rep = monodromy_spec(&e8, &rational_kvec(&e8, q(1, 6))).unwrap();
    assert_eq!(rep.len(), 8);
    for g in &rep {
        assert_eq!(g.eigenvalues[0], Eigenvalue { rotation: q(1, 2), multiplicity: 8 });
        assert_eq!(g.eigenvalues[1], Eigenvalue { rotation: q(1, 6), multiplicity: 1 });
    }
}

#[test]
fn monodromy_at_half_merges_eigenvalues() {
    let r = rs("A1");
    let rep = monodromy_spec(&r, &rational_kvec(&r, q(1, 2))).unwrap();
    assert_eq!(rep[0].eigenvalues, vec![Eigenvalue { rotation: q(1, 2), multiplicity: 2 }]);
}

#[test]
fn kplus_examples() {
    assert!(kplus_membership(&rs("E8"), &q(1, 6), &q(0, 1)).unwrap().member);
    assert!(!kplus_membership(&rs("E8"), &q(1, 5), &q(0, 1)).unwrap().member);
    assert!(!kplus_membership(&rs("D5"), &q(1, 3), &q(0, 1)).unwrap().member);
    assert!(kplus_membership(&rs("D5"), &q(1, 4), &q(0, 1)).unwrap().member);
    let a9 = kplus_membership(&rs("A9"), &q(1, 6), &q(0, 1)).unwrap();
    assert!(a9.member);
    assert_eq!(a9.x, Some(q(5, 6)));
    assert_eq!(a9.y, Some(q(5, 6)));
    assert!(!kplus_membership(&rs("A9"), &q(1, 5), &q(0, 1)).unwrap().member);
    assert!(!kplus_membership(&rs("A1"), &q(0, 1), &q(0, 1)).unwrap().member);
    assert!(matches!(
        kplus_membership(&rs("BC2"), &q(1, 6), &q(0, 1)),
        Err(Error::UnsupportedType(_))
    ));
}

#[test]
fn schwarz_examples() {
    let t = schwarz_table();
    let got: Vec<(u64, String)> = t.iter().map(|r| (r.n, r.q.to_string())).collect();
    let expect: Vec<(u64, String)> = [(1, "infinity"), (2, "10"), (3, "6"), (5, "4"), (9, "3")]
        .iter()
        .map(|&(n, q)| (n, q.to_string()))
        .collect();
    assert_eq!(got, expect);
    assert_eq!(schwarz_table_up_to(100), t);
    assert_eq!(t[4].k, q(1, 6));
    assert_eq!(t[0].k, q(1, 2));
    assert!(schwarz_row(4).is_none());
}

#[test]
fn schwarz_json_uses_infinity_token() {
    let json = serde_json::to_string(&schwarz_table()).unwrap();
    assert!(json.contains("\"infinity\""));
    let back: Vec<SchwarzRow> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, schwarz_table());
}

#[test]
fn e8_differences() {
    assert_eq!(e8_exponent_difference(&q(1, 6)), (q(-4, 1), q(-2, 1)));
    assert_eq!(e8_exponent_difference(&q(0, 1)), (q(1, 1), q(1, 2)));
    assert_eq!(e8_exponent_difference(&q(1, 30)), (q(0, 1), q(0, 1)));
}

mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn quadratic_holds_after_substitution(kn in -20i64..20, kd in 1i64..12, pn in -20i64..20, pd in 1i64..12) {
            let r = rs("B3");
            let kv = r.symbolic_couplings().specialize(Some(&q(kn, kd)), Some(&q(pn, pd))).unwrap();
            let rep = special_exponents(&r, &kv).unwrap();
            for mu in &rep.exponents {
                prop_assert!(quadratic_residual(&r, &kv, mu, &rep.a_value).unwrap().is_zero());
            }
        }

        #[test]
        fn e8_difference_is_affine(n in -50i64..50, d in 1i64..50) {
            let (a, b) = e8_exponent_difference(&q(n, d));
            prop_assert_eq!(&a, &(q(1, 1) - q(30 * n, d)));
            prop_assert_eq!(b * q(2, 1), a);
        }
    }
}
