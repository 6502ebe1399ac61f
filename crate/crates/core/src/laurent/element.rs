use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{CouplingVector, RatFunc};
use crate::error::{Error, Result};
use crate::rootsys::{CorootVector, RootSystem, Weight};

/// Element of the group algebra C[P]: a finitely supported map from weights
/// to coefficients, written `sum c_mu e^mu`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentElement {
    terms: BTreeMap<Weight, RatFunc>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(rank: usize, c: RatFunc) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, RatFunc::one())
    }

    pub fn monomial(mu: Weight, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        LaurentElement { terms }
    }

    /// `e^mu`.
    pub fn exp(mu: Weight) -> Self {
        Self::monomial(mu, RatFunc::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, RatFunc)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in it {
            out.add_term(w, &c);
        }
        out
    }

    pub fn add_term(&mut self, mu: Weight, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &RatFunc)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn coeff(&self, mu: &Weight) -> RatFunc {
        self.terms.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> RatFunc {
        self.terms
            .iter()
            .find(|(w, _)| w.is_zero())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> Self {
        LaurentElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coeffs<F: Fn(&RatFunc) -> Result<RatFunc>>(&self, f: F) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<Weight, RatFunc> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let w = a + b;
                let p = ca * cb;
                match acc.get_mut(&w) {
                    Some(x) => *x += &p,
                    None => {
                        acc.insert(w, p);
                    }
                }
            }
        }
        LaurentElement {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, rank: usize, e: u32) -> Self {
        (0..e).fold(Self::one(rank), |acc, _| acc.mul(self))
    }

    /// Multiplication by `e^mu`.
    pub fn shift(&self, mu: &Weight) -> Self {
        LaurentElement {
            terms: self.terms.iter().map(|(w, c)| (w + mu, c.clone())).collect(),
        }
    }

    /// The involution `e^mu -> e^{-mu}`; coefficients are real so conjugation
    /// acts trivially on them.
    pub fn bar(&self) -> Self {
        LaurentElement {
            terms: self.terms.iter().map(|(w, c)| (-w, c.clone())).collect(),
        }
    }

    pub fn reflect(&self, rs: &RootSystem, i: usize) -> Self {
        LaurentElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (rs.reflect_weight(i, w), c.clone()))
                .collect(),
        }
    }

    pub fn reflect_by_root(&self, rs: &RootSystem, root: usize) -> Self {
        LaurentElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (rs.reflect_weight_by_root(root, w), c.clone()))
                .collect(),
        }
    }

    /// `w f` for a word in simple reflections (rightmost letter acts first).
    pub fn weyl_act(&self, rs: &RootSystem, word: &[usize]) -> Result<Self> {
        if let Some(&i) = word.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: rs.rank(),
            });
        }
        Ok(LaurentElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (rs.act_word(word, w), c.clone()))
                .collect(),
        })
    }

    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| &self.reflect(rs, i) == self)
    }

    /// `sum_{w in W} e^{w mu}` over the orbit (each weight once).
    pub fn orbit_sum(rs: &RootSystem, mu: &Weight) -> Self {
        LaurentElement::from_terms(rs.weyl_orbit(mu).into_iter().map(|w| (w, RatFunc::one())))
    }

    /// `partial(xi)`: `e^mu -> mu(xi) e^mu`.
    pub fn derivative(&self, xi: &CorootVector) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let m: RatFunc = w
                .0
                .iter()
                .zip(&xi.0)
                .filter(|(&a, b)| a != 0 && !b.is_zero())
                .map(|(&a, b)| b * &RatFunc::from_int(a))
                .sum();
            out.add_term(w.clone(), &(c * &m));
        }
        out
    }

    /// `partial(xi)` for an integral coroot-basis vector.
    pub fn derivative_int(&self, xi: &[i64]) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let m = w.pair(xi);
            if m != 0 {
                out.add_term(w.clone(), &(c * &RatFunc::from_int(m)));
            }
        }
        out
    }

    /// `1 - e^{-alpha}` for the positive root with the given index.
    pub fn one_minus_exp_neg(rs: &RootSystem, root: usize) -> Self {
        let a = &rs.positive_roots[root].weight;
        LaurentElement::from_terms([
            (Weight::zero(rs.rank()), RatFunc::one()),
            (-a, RatFunc::from_int(-1)),
        ])
    }

    /// Exact quotient by `1 - e^{-alpha}`.
    pub fn exact_divide(&self, rs: &RootSystem, root: usize) -> Result<Self> {
        let a = &rs.positive_roots[root].weight;
        let j = a.0.iter().position(|&x| x != 0).expect("nonzero root");
        let aj = a.0[j];
        // weights along each alpha-string share a representative; t is the
        // position along the string
        let mut strings: BTreeMap<Weight, Vec<(i64, &RatFunc)>> = BTreeMap::new();
        for (w, c) in &self.terms {
            let r = w.0[j].rem_euclid(aj.abs());
            let t = (w.0[j] - r) / aj;
            let rep = Weight(w.0.iter().zip(&a.0).map(|(x, y)| x - t * y).collect());
            strings.entry(rep).or_default().push((t, c));
        }
        let mut out = BTreeMap::new();
        for (rep, mut entries) in strings {
            entries.sort_by_key(|e| std::cmp::Reverse(e.0));
            let mut running = RatFunc::zero();
            for (idx, (t, c)) in entries.iter().enumerate() {
                running += *c;
                let lower = entries.get(idx + 1).map_or(*t, |(s, _)| s + 1);
                if running.is_zero() {
                    continue;
                }
                for pos in lower..=*t {
                    let w = Weight(rep.0.iter().zip(&a.0).map(|(x, y)| x + pos * y).collect());
                    out.insert(w, running.clone());
                }
            }
            if !running.is_zero() {
                return Err(Error::NotDivisible {
                    root: a.to_string(),
                });
            }
        }
        Ok(LaurentElement { terms: out })
    }

    /// `(f - s_alpha f) / (1 - e^{-alpha})`.
    pub fn divided_difference(&self, rs: &RootSystem, root: usize) -> Result<Self> {
        self.sub(&self.reflect_by_root(rs, root)).exact_divide(rs, root)
    }

    /// Evaluates every coefficient at rational couplings.
    pub fn substitute(&self, k: &BigRational, kp: &BigRational) -> Result<Self> {
        self.try_map_coeffs(|c| Ok(RatFunc::from_rational(c.substitute(k, kp)?)))
    }

    pub fn specialize(&self, k: Option<&BigRational>, kp: Option<&BigRational>) -> Result<Self> {
        self.try_map_coeffs(|c| c.specialize(k, kp))
    }
}

/// `delta^{1/2} bar(delta)^{1/2} = prod_{alpha > 0} (2 - e^alpha - e^{-alpha})^{k_alpha}`
/// for nonnegative integer couplings.
pub fn weight_function(rs: &RootSystem, kvec: &CouplingVector) -> Result<LaurentElement> {
    let n = rs.rank();
    let mut out = LaurentElement::one(n);
    for (idx, r) in rs.positive_roots.iter().enumerate() {
        let e = integer_coupling(rs, kvec, idx)?;
        if e == 0 {
            continue;
        }
        let factor = LaurentElement::from_terms([
            (Weight::zero(n), RatFunc::from_int(2)),
            (r.weight.clone(), RatFunc::from_int(-1)),
            (-&r.weight, RatFunc::from_int(-1)),
        ]);
        out = out.mul(&factor.pow(n, e));
    }
    Ok(out)
}

pub(crate) fn integer_coupling(rs: &RootSystem, kvec: &CouplingVector, root: usize) -> Result<u32> {
    let k = rs.coupling(kvec, root);
    let q = k
        .as_constant()
        .ok_or_else(|| Error::Domain(format!("coupling {k} is not a rational constant")))?;
    if !q.is_integer() || q < BigRational::zero() {
        return Err(Error::Domain(format!(
            "coupling {q} is not a nonnegative integer"
        )));
    }
    u32::try_from(q.to_integer()).map_err(|_| Error::Domain(format!("coupling {q} too large")))
}

/// `(f, g)_k = ct(f bar(g) delta^{1/2} bar(delta)^{1/2}) / |W|`.
pub fn inner_product(
    rs: &RootSystem,
    f: &LaurentElement,
    g: &LaurentElement,
    kvec: &CouplingVector,
) -> Result<RatFunc> {
    let w = weight_function(rs, kvec)?;
    Ok(inner_product_with(rs, f, g, &w))
}

/// Inner product against a precomputed weight function.
pub fn inner_product_with(
    rs: &RootSystem,
    f: &LaurentElement,
    g: &LaurentElement,
    weight: &LaurentElement,
) -> RatFunc {
    let h = f.mul(&g.bar());
    let mut s = RatFunc::zero();
    for (mu, c) in h.terms() {
        let wc = weight.coeff(&-mu);
        if !wc.is_zero() {
            s += &(c * &wc);
        }
    }
    s.scale(&BigRational::new(1.into(), rs.weyl_order.into()))
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_zero() {
                    format!("({c})")
                } else {
                    format!("({c})*e^{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentElement({self})")
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermDoc {
    pub weight: Vec<i64>,
    pub coeff: RatFunc,
}

impl Serialize for LaurentElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let docs: Vec<TermDoc> = self
            .terms
            .iter()
            .map(|(w, c)| TermDoc {
                weight: w.0.clone(),
                coeff: c.clone(),
            })
            .collect();
        docs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let docs = Vec::<TermDoc>::deserialize(d)?;
        Ok(LaurentElement::from_terms(
            docs.into_iter().map(|t| (Weight(t.weight), t.coeff)),
        ))
    }
}
