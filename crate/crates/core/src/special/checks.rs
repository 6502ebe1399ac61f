use std::collections::VecDeque;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::exponents::{special_couplings, special_exponents, SpecialExponentReport, Verdicts};
use super::symtwo::SymTwoDual;
use crate::coeff::{CouplingVector, RatFunc};
use crate::dunkl::{rho, SymH};
use crate::error::Result;
use crate::rootsys::{q_to_ratfunc, Family, HStarElement, RootSystem, Weight};

/// `mu^2 + 1/2 sum_{alpha > 0} mu(k_alpha alpha^vee [+ k' alpha']) alpha^2 + a C^vee`.
pub fn quadratic_residual(
    rs: &RootSystem,
    kvec: &CouplingVector,
    mu: &HStarElement,
    a: &RatFunc,
) -> Result<SymTwoDual> {
    let mut out = SymTwoDual::square(mu);
    let half = RatFunc::frac(1, 2);
    let (_, kp) = special_couplings(rs, kvec);
    let with_prime = rs.family() == Family::A && !kp.is_zero();
    for (idx, root) in rs.positive_roots.iter().enumerate() {
        let mut c = &mu.pair_int(&root.coroot) * rs.coupling(kvec, idx);
        if with_prime {
            let ap = rs.alpha_prime(idx)?;
            let val: RatFunc = mu
                .0
                .iter()
                .zip(&ap)
                .filter(|(_, q)| !q.is_zero())
                .map(|(m, &q)| m * &q_to_ratfunc(q))
                .sum();
            c += &(&val * &kp);
        }
        if c.is_zero() {
            continue;
        }
        out.add_scaled(&SymTwoDual::weight_square(&root.weight), &(&c * &half));
    }
    out.add_scaled(&SymTwoDual::dual_casimir(rs), a);
    Ok(out)
}

/// `a` as forced by the quadratic equation: pairing it with `C` gives
/// `(lambda, lambda) = (rho_k, rho_k) - a n`.
pub fn derived_a_value(rs: &RootSystem, report: &SpecialExponentReport) -> RatFunc {
    let r = rho(rs, &report.couplings);
    let l = &report.spectral[0];
    &(&rs.inner(&r, &r) - &rs.inner(l, l)) / &RatFunc::from_int(rs.rank() as i64)
}

/// One identity with both sides rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new<T: PartialEq + std::fmt::Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        IdentityCheck {
            name: name.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds: lhs == rhs,
        }
    }
}

/// Per-exponent quadratic verdicts plus the `a` cross-check.
pub fn verify_quadratic(rs: &RootSystem, report: &SpecialExponentReport) -> Result<Vec<IdentityCheck>> {
    let n = rs.rank();
    let zero = SymTwoDual::zero(n);
    let mut out = Vec::with_capacity(report.exponents.len() + 1);
    for (i, mu) in report.exponents.iter().enumerate() {
        let res = quadratic_residual(rs, &report.couplings, mu, &report.a_value)?;
        out.push(IdentityCheck::new(format!("quadratic residual of mu_{}", i + 1), &res, &zero));
    }
    out.push(IdentityCheck::new("a value", &report.a_value, &derived_a_value(rs, report)));
    Ok(out)
}

/// A weight with generic symbolic coordinates must not solve the equation.
pub fn exactness_check(rs: &RootSystem, report: &SpecialExponentReport) -> Result<IdentityCheck> {
    let n = rs.rank();
    let generic = HStarElement(
        (0..n as i64)
            .map(|i| {
                &(&(&RatFunc::k() * &RatFunc::from_int(i + 2)) + &(&RatFunc::kp() * &RatFunc::from_int(2 * i + 3)))
                    + &RatFunc::frac(i + 1, i + 7)
            })
            .collect(),
    );
    let res = quadratic_residual(rs, &report.couplings, &generic, &report.a_value)?;
    Ok(IdentityCheck {
        name: "generic weight leaves a nonzero residual".into(),
        lhs: res.to_string(),
        rhs: "nonzero".into(),
        holds: !res.is_zero(),
    })
}

/// `C(lambda_i) = C(rho_k) - a n`.
pub fn casimir_checks(rs: &RootSystem, report: &SpecialExponentReport) -> Vec<IdentityCheck> {
    let r = rho(rs, &report.couplings);
    let c = SymH::casimir(rs);
    let n = RatFunc::from_int(rs.rank() as i64);
    let rhs = &c.evaluate(&r) - &(&report.a_value * &n);
    report
        .spectral
        .iter()
        .enumerate()
        .map(|(i, l)| IdentityCheck::new(format!("C(lambda_{})", i + 1), &c.evaluate(l), &rhs))
        .collect()
}

fn root_hstar(rs: &RootSystem, i: usize) -> HStarElement {
    rs.simple_root_weight(i).to_hstar()
}

fn varpi(rs: &RootSystem, i: usize) -> HStarElement {
    Weight::fundamental(rs.rank(), i).to_hstar()
}

/// Distance in the Dynkin diagram from each node to the triple node.
pub fn triple_node_distances(rs: &RootSystem) -> Option<Vec<usize>> {
    let n = rs.rank();
    let neighbours = |i: usize| (0..n).filter(move |&j| j != i && rs.cartan[i][j] != 0);
    let triple = (0..n).find(|&i| neighbours(i).count() == 3)?;
    let mut dist = vec![usize::MAX; n];
    dist[triple] = 0;
    let mut queue = VecDeque::from([triple]);
    while let Some(i) = queue.pop_front() {
        for j in neighbours(i) {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    Some(dist)
}

/// The type-specific relations between consecutive exponents.
pub fn consecutive_relations(rs: &RootSystem, report: &SpecialExponentReport) -> Result<Vec<IdentityCheck>> {
    let n = rs.rank();
    let mu = &report.exponents;
    let lam = &report.spectral;
    let (k, kp) = special_couplings(rs, &report.couplings);
    let int = RatFunc::from_int;
    let mut out = Vec::new();
    let family = rs.family();
    if matches!(family, Family::D | Family::E) {
        let d = triple_node_distances(rs).expect("D and E have a triple node");
        for i in 0..n {
            let lhs = lam[i].pair_int(&rs.positive_roots[rs.indivisible_simple(i)].coroot);
            let rhs = &k * &int(-(d[i] as i64));
            out.push(IdentityCheck::new(format!("lambda_{0}(alpha_{0}^vee) = -d({0}) k", i + 1), &lhs, &rhs));
        }
        return Ok(out);
    }
    let x = report.x.clone().expect("chain types define x");
    let y = report.y.clone().expect("chain types define y");
    for i in 0..n {
        let lhs = rs.reflect(i, &lam[i])?;
        out.push(IdentityCheck::new(
            format!("lambda_{} = s_{} lambda_{}", i + 2, i + 1, i + 1),
            &lam[i + 1],
            &lhs,
        ));
    }
    out.push(IdentityCheck::new("mu_1 = -x varpi_1", &mu[0], &varpi(rs, 0).scale(&-&x)));
    out.push(IdentityCheck::new(
        format!("mu_{} = -y varpi_{}", n + 1, n),
        &mu[n],
        &varpi(rs, n - 1).scale(&-&y),
    ));
    // mu_{i+1} - mu_i = c_i alpha_i
    let diffs: Vec<RatFunc> = match family {
        Family::A => (1..=n).map(|i| &x - &(&k * &int(i as i64))).collect(),
        Family::B | Family::C => {
            let ni = n as i64;
            let mut v: Vec<RatFunc> = (1..n - 1).map(|i| &x - &(&k * &int(i as i64))).collect();
            v.push(-(&(&k * &int(ni - 1)) - &x));
            v.push(if family == Family::B {
                -(&(&(&k * &int(2 * (ni - 1))) + &kp) - &(&x * &int(2)))
            } else {
                -(&(&(&k * &int(ni - 1)) + &kp) - &x)
            });
            v
        }
        Family::F => vec![kp.clone(), &kp - &k, &kp - &(&k * &int(2)), &k * &int(-2)],
        Family::G => vec![&x - &k, &(&kp - &k) * &RatFunc::frac(1, 2)],
        _ => unreachable!(),
    };
    for (i, c) in diffs.iter().enumerate() {
        out.push(IdentityCheck::new(
            format!("mu_{} - mu_{} = ({c}) alpha_{}", i + 2, i + 1, i + 1),
            &(&mu[i + 1] - &mu[i]),
            &root_hstar(rs, i).scale(c),
        ));
    }
    // root-basis forms for F4 and G2
    let root_forms: Vec<Vec<RatFunc>> = match family {
        Family::F => {
            let m = |a: i64, b: &RatFunc| b * &int(-a);
            vec![
                vec![m(2, &x), m(3, &x), m(4, &x), m(2, &x)],
                vec![m(1, &y), m(3, &x), m(4, &x), m(2, &x)],
                vec![m(1, &y), m(2, &y), m(4, &x), m(2, &x)],
                vec![m(1, &y), m(2, &y), m(3, &y), m(2, &x)],
                // alpha_4 coefficient 2y: varpi_4 = a1 + 2a2 + 3a3 + 2a4
                vec![m(1, &y), m(2, &y), m(3, &y), m(2, &y)],
            ]
        }
        Family::G => vec![
            vec![&x * &int(-2), -&x],
            vec![&y * &int(-3), -&x],
            vec![&y * &int(-3), &y * &int(-2)],
        ],
        _ => Vec::new(),
    };
    for (i, coeffs) in root_forms.iter().enumerate() {
        let mut v = HStarElement::zero(n);
        for (j, c) in coeffs.iter().enumerate() {
            v = &v + &root_hstar(rs, j).scale(c);
        }
        out.push(IdentityCheck::new(format!("mu_{} in the root basis", i + 1), &mu[i], &v));
    }
    if family == Family::A {
        // k' = 0 forces x = y and -w0 mu_1 = mu_{n+1}
        let mut kv0 = report.couplings.clone();
        kv0.k_extra = RatFunc::zero();
        let r0 = special_exponents(rs, &kv0)?;
        let w0mu1 = HStarElement(
            (0..n)
                .map(|i| {
                    let (sign, j) = rs
                        .longest_element_action
                        .iter()
                        .enumerate()
                        .find(|(_, &(_, t))| t == i)
                        .map(|(j, &(s, _))| (s, j))
                        .unwrap();
                    &r0.exponents[0].0[j] * &int(-(sign as i64))
                })
                .collect(),
        );
        out.push(IdentityCheck::new("-w0 mu_1 = mu_{n+1} at k' = 0", &w0mu1, &r0.exponents[n]));
    }
    Ok(out)
}

/// Runs every check and stores the verdicts in the report.
pub fn verify_report(rs: &RootSystem, report: &mut SpecialExponentReport) -> Result<Vec<IdentityCheck>> {
    let quad = verify_quadratic(rs, report)?;
    let rel = consecutive_relations(rs, report)?;
    let exact = exactness_check(rs, report)?;
    let cas = casimir_checks(rs, report);
    let m = report.exponents.len();
    report.verdicts = Some(Verdicts {
        quadratic: quad[..m].iter().map(|c| c.holds).collect(),
        a_value: quad[m].holds,
        relations: rel.iter().all(|c| c.holds),
        exactness: exact.holds,
        casimir: cas.iter().all(|c| c.holds),
    });
    let mut all = quad;
    all.extend(rel);
    all.push(exact);
    all.extend(cas);
    Ok(all)
}
