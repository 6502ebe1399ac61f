//! Acceptance criteria 1-9. Each test prints one PASS/FAIL line.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use trigdunkl_core::coeff::CouplingVector;
use trigdunkl_core::dunkl::{dunkl_apply, jacobi};
use trigdunkl_core::special::{monodromy_spec, Eigenvalue};
use trigdunkl_core::verify::{run_suite, weight_box, Suite, SuiteReport};
use trigdunkl_core::{CorootVector, LaurentElement, RootSystem};

fn report(criterion: u32, what: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {criterion} [{what}]: {verdict} {detail}");
}

fn suites(criterion: u32, what: &str, list: &[Suite], limit: Option<Duration>) {
    let start = Instant::now();
    let reports: Vec<SuiteReport> = list.iter().map(|&s| run_suite(s).unwrap()).collect();
    let elapsed = start.elapsed();
    let failure = reports.iter().find_map(|r| r.first_failure.clone());
    let in_time = limit.is_none_or(|l| elapsed < l);
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let ok = failure.is_none() && in_time;
    report(criterion, what, ok, &format!("({checked} identities, {:.2?})", elapsed));
    if let Some(f) = &failure {
        println!("  first failure: {}\n  lhs: {}\n  rhs: {}", f.name, f.lhs, f.rhs);
    }
    assert!(failure.is_none(), "criterion {criterion}: {failure:?}");
    assert!(in_time, "criterion {criterion}: took {elapsed:?}, limit {limit:?}");
}

#[test]
fn criterion_1_commutativity() {
    suites(1, "commutativity", &[Suite::Commute], Some(Duration::from_secs(60)));
}

#[test]
fn criterion_2_eigenfunctions() {
    suites(2, "eigenfunctions", &[Suite::Eigen, Suite::Triangular], None);
}

#[test]
fn criterion_3_hermiticity() {
    suites(3, "hermiticity", &[Suite::Hermitian], None);
}

#[test]
fn criterion_4_casimir_and_conjugation() {
    suites(4, "casimir and conjugation", &[Suite::Thm23, Suite::Conjugation], None);
}

#[test]
fn criterion_5_quadratic_equation() {
    suites(5, "quadratic equation", &[Suite::Prop32], Some(Duration::from_secs(120)));
}

#[test]
fn criterion_6_relations() {
    suites(6, "consecutive relations", &[Suite::Relations], None);
}

#[test]
fn criterion_7_compatibility() {
    suites(7, "compatibility", &[Suite::Compat], None);
}

#[test]
fn criterion_8_arithmetic() {
    suites(8, "arithmetic", &[Suite::Schwarz], None);
}

#[test]
fn criterion_9_degenerate_coupling() {
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut failures = Vec::new();
    let mut checked = 0;
    for label in ["A1", "A2", "B2", "G2", "BC1", "BC2", "A3", "C3"] {
        let rs = RootSystem::from_label(label).unwrap();
        let kv = CouplingVector::zero();
        let n = rs.rank();
        for mu in weight_box(n, 2) {
            let f = LaurentElement::exp(mu.clone());
            for i in 0..n {
                let xi = CorootVector::simple(n, i);
                let got = dunkl_apply(&rs, &xi, &f, &kv).unwrap();
                let expect = f.scale(&mu.to_hstar().pair(&xi));
                checked += 1;
                if got != expect {
                    failures.push(format!("{label}: T_0(a{}) e^{mu} = {got}, expected {expect}", i + 1));
                }
            }
            if mu.is_dominant() {
                checked += 1;
                let e = jacobi(&rs, &mu, &kv).unwrap();
                if e != f {
                    failures.push(format!("{label}: E_0({mu}) = {e}"));
                }
            }
        }
        if rs.family().is_reduced() {
            for g in monodromy_spec(&rs, &kv).unwrap() {
                checked += 1;
                let expect = vec![
                    Eigenvalue {
                        rotation: BigRational::new(1.into(), 2.into()),
                        multiplicity: n,
                    },
                    Eigenvalue {
                        rotation: zero.clone(),
                        multiplicity: 1,
                    },
                ];
                if g.eigenvalues != expect {
                    failures.push(format!("{label}: monodromy at node {} = {:?}", g.node, g.eigenvalues));
                }
            }
        }
    }
    report(9, "degenerate coupling", failures.is_empty(), &format!("({checked} identities)"));
    for f in failures.iter().take(3) {
        println!("  {f}");
    }
    assert!(failures.is_empty());
}
