//! Polynomials in the two coupling variables `k` and `kp` over the rationals.
//!
//! Terms are kept sorted in descending graded-lexicographic order with
//! `k > kp`, zero coefficients are never stored, so structural equality is
//! value equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `k^k * kp^kp`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub k: u32,
    pub kp: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { k: 0, kp: 0 };

    pub fn new(k: u32, kp: u32) -> Self {
        Monomial { k, kp }
    }

    pub fn degree(&self) -> u32 {
        self.k + self.kp
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.k <= other.k && self.kp <= other.kp
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.k + other.k, self.kp + other.kp)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.k - other.k, self.kp - other.kp)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.k.cmp(&other.k))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var_k() -> Self {
        Self::term(Monomial::new(1, 0), BigRational::one())
    }

    pub fn var_kp() -> Self {
        Self::term(Monomial::new(0, 1), BigRational::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut v: Vec<(Monomial, BigRational)> = it.into_iter().collect();
        v.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_k(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.k).max().unwrap_or(0)
    }

    pub fn degree_kp(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.kp).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, -x)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_terms(acc)
    }

    fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(x, y)| (x.mul(m), y * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, k: &BigRational, kp: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (m, c)| {
            acc + c * pow_rat(k, m.k) * pow_rat(kp, m.kp)
        })
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?.clone();
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !dm.divides(&m) {
                return None;
            }
            let qm = m.div(&dm);
            let qc = c / &dc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly::from_terms(quot))
    }

    /// Rescales so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        if a == b {
            return a.monic();
        }
        let ra = to_recursive(a);
        let rb = to_recursive(b);
        let ca = content(&ra);
        let cb = content(&rb);
        let c = upoly::gcd(&ca, &cb);
        let mut pa = primitive(&ra, &ca);
        let mut pb = primitive(&rb, &cb);
        if pa.len() < pb.len() {
            std::mem::swap(&mut pa, &mut pb);
        }
        while !pb.is_empty() {
            let r = pseudo_rem(&pa, &pb);
            pa = pb;
            pb = if r.is_empty() {
                r
            } else {
                let cr = content(&r);
                primitive(&r, &cr)
            };
        }
        let g: Vec<Vec<BigRational>> = pa.iter().map(|u| upoly::mul(u, &c)).collect();
        from_recursive(&g).monic()
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= x;
    }
    out
}

// Recursive view: coefficient vector in `k` (ascending), each coefficient a
// dense ascending univariate polynomial in `kp`.
type Rec = Vec<Vec<BigRational>>;

fn to_recursive(p: &Poly) -> Rec {
    let dk = p.degree_k() as usize;
    let mut out: Rec = vec![Vec::new(); dk + 1];
    for (m, c) in &p.terms {
        let u = &mut out[m.k as usize];
        if u.len() <= m.kp as usize {
            u.resize(m.kp as usize + 1, BigRational::zero());
        }
        u[m.kp as usize] = c.clone();
    }
    for u in out.iter_mut() {
        upoly::trim(u);
    }
    trim_rec(&mut out);
    out
}

fn from_recursive(r: &Rec) -> Poly {
    Poly::from_terms(r.iter().enumerate().flat_map(|(i, u)| {
        u.iter()
            .enumerate()
            .map(move |(j, c)| (Monomial::new(i as u32, j as u32), c.clone()))
    }))
}

fn trim_rec(r: &mut Rec) {
    while r.last().is_some_and(|u| u.is_empty()) {
        r.pop();
    }
}

fn content(r: &Rec) -> Vec<BigRational> {
    let mut g: Vec<BigRational> = Vec::new();
    for u in r {
        if u.is_empty() {
            continue;
        }
        g = if g.is_empty() { upoly::monic(u) } else { upoly::gcd(&g, u) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn primitive(r: &Rec, c: &[BigRational]) -> Rec {
    let mut out: Rec = r
        .iter()
        .map(|u| {
            if u.is_empty() {
                Vec::new()
            } else {
                upoly::div_exact(u, c)
            }
        })
        .collect();
    trim_rec(&mut out);
    out
}

fn pseudo_rem(a: &Rec, b: &Rec) -> Rec {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Rec = r.iter().map(|u| upoly::mul(u, lc)).collect();
        for (i, bu) in b.iter().enumerate() {
            let t = upoly::mul(bu, &lr);
            next[i + shift] = upoly::sub(&next[i + shift], &t);
        }
        trim_rec(&mut next);
        r = next;
    }
    r
}

/// Dense univariate polynomials over the rationals, ascending coefficients.
mod upoly {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    pub fn trim(u: &mut Vec<BigRational>) {
        while u.last().is_some_and(|c| c.is_zero()) {
            u.pop();
        }
    }

    pub fn monic(u: &[BigRational]) -> Vec<BigRational> {
        match u.last() {
            Some(l) => u.iter().map(|c| c / l).collect(),
            None => Vec::new(),
        }
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out: Vec<BigRational> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
                match b.get(i) {
                    Some(y) => x - y,
                    None => x,
                }
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lb = b.last().expect("division by zero polynomial");
        let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() / lb;
            for (i, y) in b.iter().enumerate() {
                r[i + shift] -= &c * y;
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if b.len() == 1 {
            return a.iter().map(|c| c / &b[0]).collect();
        }
        let (q, r) = divrem(a, b);
        debug_assert!(r.is_empty(), "inexact univariate division");
        q
    }

    pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            if y.len() == 1 {
                return vec![BigRational::one()];
            }
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        monic(&x)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.k == 1 {
                factors.push("k".into());
            } else if m.k > 1 {
                factors.push(format!("k^{}", m.k));
            }
            if m.kp == 1 {
                factors.push("kp".into());
            } else if m.kp > 1 {
                factors.push(format!("kp^{}", m.kp));
            }
            if factors.is_empty() {
                write_rational(f, &a)?;
            } else {
                if !a.is_one() {
                    write_rational(f, &a)?;
                    write!(f, "*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
