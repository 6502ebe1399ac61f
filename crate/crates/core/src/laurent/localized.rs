use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::{LaurentElement, TermDoc};
use crate::coeff::RatFunc;
use crate::error::{Error, Result};
use crate::rootsys::{CorootVector, RootSystem, Weight};

/// Element of C[H°]: a Laurent numerator over `prod_{alpha>0} (1 - e^{-alpha})^{m_alpha}`.
#[derive(Clone, Default)]
pub struct LocalizedElement {
    numerator: LaurentElement,
    /// positive-root index -> exponent; zero exponents are not stored
    denom: BTreeMap<usize, u32>,
}

impl LocalizedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_laurent(f: LaurentElement) -> Self {
        LocalizedElement {
            numerator: f,
            denom: BTreeMap::new(),
        }
    }

    /// `f / prod (1 - e^{-alpha})^{m}`, normalized.
    pub fn new(rs: &RootSystem, numerator: LaurentElement, denom: BTreeMap<usize, u32>) -> Self {
        let mut out = LocalizedElement {
            numerator,
            denom: denom.into_iter().filter(|(_, m)| *m > 0).collect(),
        };
        out.normalize(rs);
        out
    }

    pub fn numerator(&self) -> &LaurentElement {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<usize, u32> {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Cancels every factor `1 - e^{-alpha}` that divides the numerator.
    pub fn normalize(&mut self, rs: &RootSystem) {
        if self.numerator.is_zero() {
            self.denom.clear();
            return;
        }
        let roots: Vec<usize> = self.denom.keys().copied().collect();
        for r in roots {
            loop {
                let m = self.denom[&r];
                if m == 0 {
                    break;
                }
                match self.numerator.exact_divide(rs, r) {
                    Ok(q) => {
                        self.numerator = q;
                        self.denom.insert(r, m - 1);
                    }
                    Err(_) => break,
                }
            }
        }
        self.denom.retain(|_, m| *m > 0);
    }

    pub fn normalized(mut self, rs: &RootSystem) -> Self {
        self.normalize(rs);
        self
    }

    /// The Laurent element if the denominator cancels completely.
    pub fn to_laurent(&self, rs: &RootSystem) -> Option<LaurentElement> {
        let n = self.clone().normalized(rs);
        if n.denom.is_empty() {
            Some(n.numerator)
        } else {
            None
        }
    }

    fn factor_power(rs: &RootSystem, root: usize, m: u32) -> LaurentElement {
        LaurentElement::one_minus_exp_neg(rs, root).pow(rs.rank(), m)
    }

    /// Rewrites the numerator over a larger denominator.
    fn lift(&self, rs: &RootSystem, target: &BTreeMap<usize, u32>) -> LaurentElement {
        let mut num = self.numerator.clone();
        for (&r, &m) in target {
            let have = self.denom.get(&r).copied().unwrap_or(0);
            if m > have {
                num = num.mul(&Self::factor_power(rs, r, m - have));
            }
        }
        num
    }

    fn common_denom(&self, other: &Self) -> BTreeMap<usize, u32> {
        let mut d = self.denom.clone();
        for (&r, &m) in &other.denom {
            let e = d.entry(r).or_insert(0);
            *e = (*e).max(m);
        }
        d
    }

    pub fn add(&self, rs: &RootSystem, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let d = self.common_denom(other);
        let num = self.lift(rs, &d).add(&other.lift(rs, &d));
        Self::new(rs, num, d)
    }

    pub fn sub(&self, rs: &RootSystem, other: &Self) -> Self {
        self.add(rs, &other.neg())
    }

    pub fn neg(&self) -> Self {
        LocalizedElement {
            numerator: self.numerator.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LocalizedElement {
            numerator: self.numerator.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, rs: &RootSystem, other: &Self) -> Self {
        let mut d = self.denom.clone();
        for (&r, &m) in &other.denom {
            *d.entry(r).or_insert(0) += m;
        }
        Self::new(rs, self.numerator.mul(&other.numerator), d)
    }

    /// Product without cancelling common factors afterwards.
    pub fn mul_raw(&self, other: &Self) -> Self {
        let mut d = self.denom.clone();
        for (&r, &m) in &other.denom {
            *d.entry(r).or_insert(0) += m;
        }
        LocalizedElement {
            numerator: self.numerator.mul(&other.numerator),
            denom: d,
        }
    }

    pub fn mul_laurent(&self, rs: &RootSystem, f: &LaurentElement) -> Self {
        Self::new(rs, self.numerator.mul(f), self.denom.clone())
    }

    /// Divides by `(1 - e^{-alpha})^m`.
    pub fn div_factor(&self, rs: &RootSystem, root: usize, m: u32) -> Self {
        let mut d = self.denom.clone();
        *d.entry(root).or_insert(0) += m;
        Self::new(rs, self.numerator.clone(), d)
    }

    /// `partial(xi)` via the quotient rule, using
    /// `partial(xi)(1 - e^{-alpha}) = alpha(xi) e^{-alpha}`.
    pub fn derivative(&self, rs: &RootSystem, xi: &CorootVector) -> Self {
        let dn = self.numerator.derivative(xi);
        if self.denom.is_empty() {
            return LocalizedElement::from_laurent(dn);
        }
        // N'/D - N * sum_alpha m_alpha alpha(xi) e^{-alpha} / ((1 - e^{-alpha}) D)
        let roots: Vec<(usize, u32)> = self.denom.iter().map(|(&r, &m)| (r, m)).collect();
        let extra: BTreeMap<usize, u32> = roots.iter().map(|&(r, _)| (r, 1)).collect();
        let mut num = dn;
        for &(r, _) in &roots {
            num = num.mul(&LaurentElement::one_minus_exp_neg(rs, r));
        }
        for &(r, m) in &roots {
            let root = &rs.positive_roots[r];
            let a_xi: RatFunc = root
                .weight
                .0
                .iter()
                .zip(&xi.0)
                .filter(|(&a, _)| a != 0)
                .map(|(&a, x)| x * &RatFunc::from_int(a))
                .sum();
            if a_xi.is_zero() {
                continue;
            }
            let mut t = self
                .numerator
                .shift(&-&root.weight)
                .scale(&(&a_xi * &RatFunc::from_int(m as i64)));
            for &(s, _) in &roots {
                if s != r {
                    t = t.mul(&LaurentElement::one_minus_exp_neg(rs, s));
                }
            }
            num = num.sub(&t);
        }
        let mut d = self.denom.clone();
        for (r, e) in extra {
            *d.get_mut(&r).unwrap() += e;
        }
        Self::new(rs, num, d)
    }

    /// Exact equality in C[H°] by cross-multiplication.
    pub fn equals(&self, rs: &RootSystem, other: &Self) -> bool {
        let d = self.common_denom(other);
        self.lift(rs, &d) == other.lift(rs, &d)
    }

    pub fn weyl_reflect_free(&self) -> bool {
        self.denom.is_empty()
    }

    pub fn to_doc(&self) -> LocalizedDoc {
        LocalizedDoc {
            terms: self
                .numerator
                .terms()
                .map(|(w, c)| TermDoc {
                    weight: w.0.clone(),
                    coeff: c.clone(),
                })
                .collect(),
            denom: self
                .denom
                .iter()
                .map(|(&root_index, &exponent)| DenomFactor { root_index, exponent })
                .collect(),
        }
    }

    pub fn from_doc(rs: &RootSystem, doc: &LocalizedDoc) -> Result<Self> {
        let mut denom = BTreeMap::new();
        for f in &doc.denom {
            if f.root_index >= rs.positive_roots.len() {
                return Err(Error::IndexOutOfRange {
                    index: f.root_index,
                    rank: rs.positive_roots.len(),
                });
            }
            *denom.entry(f.root_index).or_insert(0) += f.exponent;
        }
        let num = LaurentElement::from_terms(
            doc.terms
                .iter()
                .map(|t| (Weight(t.weight.clone()), t.coeff.clone())),
        );
        Ok(Self::new(rs, num, denom))
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let d: Vec<String> = self
            .denom
            .iter()
            .map(|(r, m)| format!("(1 - e^-a{r})^{m}"))
            .collect();
        write!(f, "[{}] / [{}]", self.numerator, d.join(" "))
    }
}

impl fmt::Debug for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalizedElement({self})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenomFactor {
    pub root_index: usize,
    pub exponent: u32,
}

/// JSON form: the numerator terms plus the denominator factors.
#[derive(Serialize, Deserialize)]
pub struct LocalizedDoc {
    pub(crate) terms: Vec<TermDoc>,
    pub denom: Vec<DenomFactor>,
}
