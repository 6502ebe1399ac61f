//! Verification harness: named suites of exact identities, each run over a
//! default list of root systems. Cases run in parallel; reports are
//! assembled in a fixed order so output is deterministic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeff::{CouplingVector, RatFunc};
use crate::dunkl::{
    conjugation_check, dunkl_apply, invariant_apply, jacobi, lk_apply, mu_tilde, rho, saturated_set, SymH,
};
use crate::error::{Error, Result};
use crate::laurent::{inner_product_with, weight_function, LaurentElement, LocalizedElement};
use crate::rootsys::{CorootVector, Family, PlusOrder, RootSystem, Weight};
use crate::special::{
    casimir_checks, consecutive_relations, dk2_apply, e8_exponent_difference, exactness_check, kplus_membership,
    schwarz_table, schwarz_table_up_to, special_exponents, verify_quadratic, IdentityCheck,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Commute,
    Triangular,
    Eigen,
    Cross,
    Hermitian,
    Thm23,
    Conjugation,
    Prop32,
    Relations,
    Compat,
    Schwarz,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Commute,
        Suite::Triangular,
        Suite::Eigen,
        Suite::Cross,
        Suite::Hermitian,
        Suite::Thm23,
        Suite::Conjugation,
        Suite::Prop32,
        Suite::Relations,
        Suite::Compat,
        Suite::Schwarz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Commute => "commute",
            Suite::Triangular => "triangular",
            Suite::Eigen => "eigen",
            Suite::Cross => "cross",
            Suite::Hermitian => "hermitian",
            Suite::Thm23 => "thm23",
            Suite::Conjugation => "conjugation",
            Suite::Prop32 => "prop32",
            Suite::Relations => "relations",
            Suite::Compat => "compat",
            Suite::Schwarz => "schwarz",
        }
    }

    /// Root systems the suite runs on when none is given.
    pub fn default_types(self) -> Vec<&'static str> {
        match self {
            Suite::Commute => vec!["A1", "A2", "A3", "B2", "G2", "BC1", "BC2"],
            Suite::Triangular | Suite::Eigen => vec!["A1", "A2", "B2"],
            Suite::Cross => vec!["A1", "A2", "A3", "B2", "C3", "G2", "BC1", "BC2"],
            Suite::Hermitian => vec!["A1", "A2", "B2"],
            Suite::Thm23 => vec!["A1", "A2", "A3", "B2"],
            Suite::Conjugation => vec!["A1", "A2"],
            Suite::Prop32 | Suite::Relations | Suite::Compat => special_types(),
            Suite::Schwarz => vec!["E8"],
        }
    }
}

fn special_types() -> Vec<&'static str> {
    vec![
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2", "C3", "C4",
        "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2",
    ]
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Outcome of one suite: the number of identities checked and the first
/// one that failed, with both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub types: Vec<String>,
    pub checked: usize,
    pub passed: bool,
    pub first_failure: Option<IdentityCheck>,
}

/// Runs `suite` on its default root systems.
pub fn run_suite(suite: Suite) -> Result<SuiteReport> {
    let labels: Vec<String> = suite.default_types().into_iter().map(String::from).collect();
    run_suite_on(suite, &labels)
}

/// Runs `suite` on the given root systems.
pub fn run_suite_on(suite: Suite, labels: &[String]) -> Result<SuiteReport> {
    let systems: Vec<RootSystem> = labels.iter().map(|l| RootSystem::from_label(l)).collect::<Result<_>>()?;
    let per_type: Vec<Vec<IdentityCheck>> = systems
        .par_iter()
        .map(|rs| {
            let checks = match suite {
                Suite::Commute => commute(rs),
                Suite::Triangular => triangular(rs),
                Suite::Eigen => eigen(rs),
                Suite::Cross => cross(rs),
                Suite::Hermitian => hermitian(rs),
                Suite::Thm23 => thm23(rs),
                Suite::Conjugation => conjugation(rs),
                Suite::Prop32 => prop32(rs),
                Suite::Relations => relations(rs),
                Suite::Compat => compat(rs),
                Suite::Schwarz => schwarz(rs),
            }?;
            Ok(checks
                .into_iter()
                .map(|mut c| {
                    c.name = format!("{}: {}", rs.spec, c.name);
                    c
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let checked = per_type.iter().map(Vec::len).sum();
    let first_failure = per_type.into_iter().flatten().find(|c| !c.holds);
    Ok(SuiteReport {
        suite,
        types: systems.iter().map(|r| r.spec.to_string()).collect(),
        checked,
        passed: first_failure.is_none(),
        first_failure,
    })
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Symbolic couplings; BC_n (n >= 2) additionally gets a nonzero rational
/// coupling on the doubled roots so every root class is exercised.
pub fn suite_couplings(rs: &RootSystem) -> CouplingVector {
    let mut kv = rs.symbolic_couplings();
    if rs.family() == Family::BC && kv.k_extra.is_zero() {
        kv.k_extra = RatFunc::frac(1, 3);
    }
    kv
}

/// Dominant weights with coordinate sum at most `h`.
pub fn dominant_up_to(rank: usize, h: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=h - used).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// All weights with every coordinate in `[-b, b]`.
pub fn weight_box(rank: usize, b: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-b..=b).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

fn basis(rs: &RootSystem) -> Vec<CorootVector> {
    (0..rs.rank()).map(|i| CorootVector::simple(rs.rank(), i)).collect()
}

fn zero_check(name: String, residual: &LaurentElement) -> IdentityCheck {
    IdentityCheck::new(name, residual, &LaurentElement::zero())
}

/// `[T(xi), T(eta)] e^nu = 0` for basis pairs and every `nu` in the
/// saturated set of a dominant weight of height at most 3.
fn commute(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let kv = suite_couplings(rs);
    let xs = basis(rs);
    let mut weights = std::collections::BTreeSet::new();
    for mu in dominant_up_to(rs.rank(), 3) {
        weights.extend(saturated_set(rs, &mu));
    }
    let mut out = Vec::new();
    for nu in weights {
        let f = LaurentElement::exp(nu.clone());
        let once: Vec<LaurentElement> = xs.iter().map(|x| dunkl_apply(rs, x, &f, &kv)).collect::<Result<_>>()?;
        if rs.rank() == 1 {
            // a single direction: compare T(xi) T(2 xi) with T(2 xi) T(xi)
            let two = xs[0].scale(&RatFunc::from_int(2));
            let a = dunkl_apply(rs, &two, &once[0], &kv)?;
            let b = dunkl_apply(rs, &xs[0], &dunkl_apply(rs, &two, &f, &kv)?, &kv)?;
            out.push(zero_check(format!("[T(a1), T(2 a1)] e^{nu}"), &a.sub(&b)));
            continue;
        }
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let a = dunkl_apply(rs, &xs[i], &once[j], &kv)?;
                let b = dunkl_apply(rs, &xs[j], &once[i], &kv)?;
                out.push(zero_check(format!("[T(a{}), T(a{})] e^{nu}", i + 1, j + 1), &a.sub(&b)));
            }
        }
    }
    Ok(out)
}

/// `T(xi) e^mu = mu~(xi) e^mu + lower terms`, and `E_k(mu)` is monic with
/// support below `mu`.
fn triangular(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let kv = suite_couplings(rs);
    let mut out = Vec::new();
    for mu in weight_box(rs.rank(), 2) {
        let mt = mu_tilde(rs, &mu, &kv);
        for (i, xi) in basis(rs).iter().enumerate() {
            let t = dunkl_apply(rs, xi, &LaurentElement::exp(mu.clone()), &kv)?;
            out.push(IdentityCheck::new(
                format!("leading coefficient of T(a{}) e^{mu}", i + 1),
                &t.coeff(&mu),
                &mt.pair(xi),
            ));
            let stray: Vec<&Weight> = t
                .support()
                .filter(|nu| *nu != &mu && !matches!(rs.le_plus(nu, &mu), PlusOrder::Less))
                .collect();
            out.push(support_check(format!("T(a{}) e^{mu} lies below e^{mu}", i + 1), &stray));
        }
        let e = jacobi(rs, &mu, &kv)?;
        out.push(IdentityCheck::new(format!("E({mu}) is monic"), &e.coeff(&mu), &RatFunc::one()));
        let stray: Vec<&Weight> = e
            .support()
            .filter(|nu| *nu != &mu && !matches!(rs.le_plus(nu, &mu), PlusOrder::Less))
            .collect();
        out.push(support_check(format!("E({mu}) lies below e^{mu}"), &stray));
    }
    Ok(out)
}

fn support_check(name: String, stray: &[&Weight]) -> IdentityCheck {
    let lhs: Vec<String> = stray.iter().map(|w| w.to_string()).collect();
    IdentityCheck {
        name,
        lhs: format!("[{}]", lhs.join(", ")),
        rhs: "[]".into(),
        holds: stray.is_empty(),
    }
}

/// `T(xi) E_k(mu) = mu~(xi) E_k(mu)` for every weight in the box `|mu_i| <= 2`.
fn eigen(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let kv = suite_couplings(rs);
    let mut out = Vec::new();
    for mu in weight_box(rs.rank(), 2) {
        let e = jacobi(rs, &mu, &kv)?;
        let mt = mu_tilde(rs, &mu, &kv);
        for (i, xi) in basis(rs).iter().enumerate() {
            let lhs = dunkl_apply(rs, xi, &e, &kv)?;
            let rhs = e.scale(&mt.pair(xi));
            out.push(IdentityCheck::new(format!("T(a{}) E({mu})", i + 1), &lhs, &rhs));
        }
    }
    if rs.spec.to_string() == "A1" {
        out.push(IdentityCheck::new("E(0) = 1", &jacobi(rs, &Weight(vec![0]), &kv)?, &LaurentElement::one(1)));
        let k = RatFunc::k();
        let c = &k / &(&RatFunc::one() + &k);
        let expect = LaurentElement::from_terms([(Weight(vec![-1]), RatFunc::one()), (Weight(vec![1]), c)]);
        out.push(IdentityCheck::new("E(-varpi)", &jacobi(rs, &Weight(vec![-1]), &kv)?, &expect));
    }
    Ok(out)
}

/// `s_i T(xi) f - T(s_i xi) s_i f = -(k_{alpha_i} + 2 k_{2 alpha_i}) alpha_i(xi) f`
/// with `alpha_i` the indivisible simple root.
fn cross(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let kv = suite_couplings(rs);
    let n = rs.rank();
    let mut out = Vec::new();
    let xs = basis(rs);
    for mu in weight_box(n, 1) {
        let f = LaurentElement::exp(mu.clone());
        for i in 0..n {
            let idx = rs.indivisible_simple(i);
            let mut c = rs.coupling(&kv, idx).clone();
            if let Some(d) = rs.doubled(idx) {
                c += &(rs.coupling(&kv, d) * &RatFunc::from_int(2));
            }
            let sf = f.reflect(rs, i);
            for (j, xi) in xs.iter().enumerate() {
                let a_xi = rs.positive_roots[idx].weight.to_hstar().pair(xi);
                let lhs = dunkl_apply(rs, xi, &f, &kv)?
                    .reflect(rs, i)
                    .sub(&dunkl_apply(rs, &rs.reflect_coroot(i, xi)?, &sf, &kv)?);
                let rhs = f.scale(&-&(&c * &a_xi));
                out.push(IdentityCheck::new(format!("s{} T(a{}) e^{mu}", i + 1, j + 1), &lhs, &rhs));
            }
        }
    }
    Ok(out)
}

/// `(T(xi) f, g)_k = (f, T(xi) g)_k` at integral `k` in {1, 2}.
fn hermitian(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let monomials: Vec<LaurentElement> = weight_box(rs.rank(), 2).into_iter().map(LaurentElement::exp).collect();
    for k in [1, 2] {
        let kv = CouplingVector::uniform(RatFunc::from_int(k));
        let w = weight_function(rs, &kv)?;
        for (i, xi) in basis(rs).iter().enumerate() {
            let images: Vec<LaurentElement> =
                monomials.iter().map(|f| dunkl_apply(rs, xi, f, &kv)).collect::<Result<_>>()?;
            for (a, f) in monomials.iter().enumerate() {
                for (b, g) in monomials.iter().enumerate() {
                    let lhs = inner_product_with(rs, &images[a], g, &w);
                    let rhs = inner_product_with(rs, f, &images[b], &w);
                    out.push(IdentityCheck::new(
                        format!("k = {k}: (T(a{0}) {f}, {g}) = ({f}, T(a{0}) {g})", i + 1),
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// `C(T) f = L_k f + (rho_k, rho_k) f` on orbit sums.
fn thm23(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let kv = suite_couplings(rs);
    let c = SymH::casimir(rs);
    let r = rho(rs, &kv);
    let rr = rs.inner(&r, &r);
    let mut out = Vec::new();
    for mu in dominant_up_to(rs.rank(), 2) {
        let f = LaurentElement::orbit_sum(rs, &mu);
        let lhs = invariant_apply(rs, &c, &f, &kv)?;
        let rhs = lk_apply(rs, &f, &kv)?.add(&f.scale(&rr));
        out.push(IdentityCheck::new(format!("C(T) m({mu})"), &lhs, &rhs));
    }
    Ok(out)
}

/// `delta^{-1/2} H_k delta^{1/2} = L_k + (rho_k, rho_k)` at `k = 2`.
fn conjugation(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let kv = CouplingVector::uniform(RatFunc::from_int(2));
    let mut out = Vec::new();
    for mu in dominant_up_to(rs.rank(), 2) {
        let f = LocalizedElement::from_laurent(LaurentElement::orbit_sum(rs, &mu));
        let c = conjugation_check(rs, &f, &kv)?;
        out.push(IdentityCheck {
            name: format!("conjugation on m({mu})"),
            lhs: c.lhs.to_string(),
            rhs: c.rhs.to_string(),
            holds: c.holds,
        });
    }
    Ok(out)
}

fn special_report(rs: &RootSystem) -> Result<crate::special::SpecialExponentReport> {
    special_exponents(rs, &rs.symbolic_couplings())
}

/// The quadratic equation for every special exponent, the tabulated `a`,
/// and the failure on a generic weight.
fn prop32(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let rep = special_report(rs)?;
    let mut out = verify_quadratic(rs, &rep)?;
    out.push(exactness_check(rs, &rep)?);
    Ok(out)
}

fn relations(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    consecutive_relations(rs, &special_report(rs)?)
}

/// `dk2_apply(C) = invariant_apply(C)` on orbit sums (ranks up to 2) and
/// `C(lambda_i) = C(rho_k) - a n`.
fn compat(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let rep = special_report(rs)?;
    let mut out = casimir_checks(rs, &rep);
    if rs.rank() <= 2 && matches!(rs.family(), Family::A | Family::B | Family::C) {
        let kv = rs.symbolic_couplings();
        let c = SymH::casimir(rs);
        for mu in dominant_up_to(rs.rank(), 2) {
            let f = LaurentElement::orbit_sum(rs, &mu);
            let lhs = dk2_apply(rs, &c, &LocalizedElement::from_laurent(f.clone()), &kv)?;
            let rhs = LocalizedElement::from_laurent(invariant_apply(rs, &c, &f, &kv)?);
            out.push(IdentityCheck {
                name: format!("dk2(C) m({mu}) = C(T) m({mu})"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                holds: lhs.equals(rs, &rhs),
            });
        }
    }
    Ok(out)
}

fn schwarz(rs: &RootSystem) -> Result<Vec<IdentityCheck>> {
    let table = schwarz_table();
    let got: Vec<String> = table.iter().map(|r| format!("({}, {})", r.n, r.q)).collect();
    let expect = ["(1, infinity)", "(2, 10)", "(3, 6)", "(5, 4)", "(9, 3)"];
    let mut out = vec![IdentityCheck::new("schwarz table", &got.join(" "), &expect.join(" "))];
    let wide: Vec<String> = schwarz_table_up_to(100).iter().map(|r| format!("({}, {})", r.n, r.q)).collect();
    out.push(IdentityCheck::new("stable up to n = 100", &wide.join(" "), &got.join(" ")));
    if rs.spec.to_string() == "E8" {
        let (d, h) = e8_exponent_difference(&q(1, 6));
        out.push(IdentityCheck::new("1 - 30k at k = 1/6", &d, &q(-4, 1)));
        out.push(IdentityCheck::new("quotient difference at k = 1/6", &h, &q(-2, 1)));
        let kp = kplus_membership(rs, &q(1, 6), &q(0, 1))?;
        out.push(IdentityCheck::new("k = 1/6 in K+", &kp.member, &true));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(dominant_up_to(2, 1).len(), 3);
        assert_eq!(dominant_up_to(3, 3).len(), 20);
        assert_eq!(weight_box(2, 2).len(), 25);
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [Suite::Cross, Suite::Thm23, Suite::Relations, Suite::Schwarz] {
            let r = run_suite(s).unwrap();
            assert!(r.passed, "{s}: {:?}", r.first_failure);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn failure_is_reported_with_both_sides() {
        let c = zero_check("x".into(), &LaurentElement::exp(Weight(vec![1])));
        assert!(!c.holds);
        assert_eq!(c.rhs, LaurentElement::zero().to_string());
        assert!(run_suite_on(Suite::Eigen, &["Q9".to_string()]).is_err());
    }
}
