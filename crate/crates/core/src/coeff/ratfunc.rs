use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

/// Exact rational function in the coupling variables `k` and `kp`.
///
/// Always stored reduced: numerator and denominator are coprime and the
/// denominator has leading coefficient one, so `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn k() -> Self {
        Self::from_poly(Poly::var_k())
    }

    pub fn kp() -> Self {
        Self::from_poly(Poly::var_kp())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::poly::int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// `n / d` as a rational constant. Panics if `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.constant_value() {
            let inv = c.recip();
            return RatFunc {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_lead(num, den)
    }

    fn normalize_lead(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The rational value if this function does not depend on `k`, `kp`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize_lead(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Option<RatFunc> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Option<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Some(out)
    }

    /// Exact evaluation at `k = k_val`, `kp = kp_val`.
    pub fn substitute(&self, k_val: &BigRational, kp_val: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(k_val, kp_val);
        if d.is_zero() {
            return Err(Error::Pole {
                value: self.to_string(),
                k: k_val.to_string(),
                kp: kp_val.to_string(),
            });
        }
        Ok(self.num.eval(k_val, kp_val) / d)
    }

    /// Partial substitution, keeping the result symbolic.
    pub fn specialize(&self, k_val: Option<&BigRational>, kp_val: Option<&BigRational>) -> Result<RatFunc> {
        let sub = |p: &Poly| -> Poly {
            Poly::from_terms(p.terms().iter().map(|(m, c)| {
                let mut c = c.clone();
                let mut mk = m.k;
                let mut mkp = m.kp;
                if let Some(v) = k_val {
                    for _ in 0..m.k {
                        c *= v;
                    }
                    mk = 0;
                }
                if let Some(v) = kp_val {
                    for _ in 0..m.kp {
                        c *= v;
                    }
                    mkp = 0;
                }
                (Monomial::new(mk, mkp), c)
            }))
        };
        let den = sub(&self.den);
        if den.is_zero() {
            return Err(Error::Pole {
                value: self.to_string(),
                k: k_val.map_or("k".into(), |v| v.to_string()),
                kp: kp_val.map_or("kp".into(), |v| v.to_string()),
            });
        }
        Ok(Self::reduce(sub(&self.num), den))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> Self {
        Self::from_rational(c)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

fn add_impl(a: &RatFunc, b: &RatFunc, negate: bool) -> RatFunc {
    let combine = |x: &Poly, y: &Poly| if negate { x.sub(y) } else { x.add(y) };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    if a.den.is_one() && b.den.is_one() {
        return RatFunc::from_poly(combine(&a.num, &b.num));
    }
    if a.den == b.den {
        return RatFunc::reduce(combine(&a.num, &b.num), a.den.clone());
    }
    let num = combine(&a.num.mul(&b.den), &b.num.mul(&a.den));
    RatFunc::reduce(num, a.den.mul(&b.den))
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, false)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        add_impl(self, rhs, true)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&rhs.num));
        }
        // cross-cancel so the product is already reduced
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let an = self.num.div_exact(&g1).expect("gcd");
        let bd = rhs.den.div_exact(&g1).expect("gcd");
        let bn = rhs.num.div_exact(&g2).expect("gcd");
        let ad = self.den.div_exact(&g2).expect("gcd");
        RatFunc::normalize_lead(an.mul(&bn), ad.mul(&bd))
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; use [`RatFunc::checked_div`] otherwise.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("RatFunc division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl AddAssign for RatFunc {
    fn add_assign(&mut self, rhs: RatFunc) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a RatFunc> for RatFunc {
    fn sum<I: Iterator<Item = &'a RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| a + b)
    }
}

impl Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |a, b| a * b)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Recursive-descent parser for expressions in `k`, `kp` with integer
/// literals and `+ - * / ^ ( )`.
mod parse {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::RatFunc;
    use crate::error::{Error, Result};

    #[derive(Debug, Clone, PartialEq)]
    enum Tok {
        Num(BigInt),
        Var(bool),
        Op(char),
    }

    fn lex(s: &str) -> Result<Vec<Tok>> {
        let mut out = Vec::new();
        let cs: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < cs.len() {
            let c = cs[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = cs[start..i].iter().collect();
                out.push(Tok::Num(lit.parse().expect("digits")));
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                let id: String = cs[start..i].iter().collect();
                match id.as_str() {
                    "k" => out.push(Tok::Var(false)),
                    "kp" => out.push(Tok::Var(true)),
                    _ => return Err(Error::Parse(format!("unknown variable `{id}` in `{s}`"))),
                }
            } else if "+-*/^()".contains(c) {
                out.push(Tok::Op(c));
                i += 1;
            } else {
                return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`")));
            }
        }
        Ok(out)
    }

    struct Parser {
        toks: Vec<Tok>,
        pos: usize,
    }

    impl Parser {
        fn peek_op(&self) -> Option<char> {
            match self.toks.get(self.pos) {
                Some(Tok::Op(c)) => Some(*c),
                _ => None,
            }
        }

        fn expr(&mut self) -> Result<RatFunc> {
            let mut acc = self.term()?;
            while let Some(c @ ('+' | '-')) = self.peek_op() {
                self.pos += 1;
                let rhs = self.term()?;
                acc = if c == '+' { acc + rhs } else { acc - rhs };
            }
            Ok(acc)
        }

        fn term(&mut self) -> Result<RatFunc> {
            let mut acc = self.unary()?;
            while let Some(c @ ('*' | '/')) = self.peek_op() {
                self.pos += 1;
                let rhs = self.unary()?;
                acc = if c == '*' {
                    acc * rhs
                } else {
                    acc.checked_div(&rhs)
                        .ok_or_else(|| Error::Parse("division by zero".into()))?
                };
            }
            Ok(acc)
        }

        fn unary(&mut self) -> Result<RatFunc> {
            if self.peek_op() == Some('-') {
                self.pos += 1;
                return Ok(-self.unary()?);
            }
            if self.peek_op() == Some('+') {
                self.pos += 1;
            }
            self.power()
        }

        fn power(&mut self) -> Result<RatFunc> {
            let base = self.atom()?;
            if self.peek_op() == Some('^') {
                self.pos += 1;
                let neg = if self.peek_op() == Some('-') {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let e = match self.toks.get(self.pos) {
                    Some(Tok::Num(n)) => i32::try_from(n.clone())
                        .map_err(|_| Error::Parse("exponent too large".into()))?,
                    _ => return Err(Error::Parse("expected integer exponent".into())),
                };
                self.pos += 1;
                let e = if neg { -e } else { e };
                return base
                    .pow(e)
                    .ok_or_else(|| Error::Parse("zero raised to a negative power".into()));
            }
            Ok(base)
        }

        fn atom(&mut self) -> Result<RatFunc> {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    Ok(RatFunc::from_rational(BigRational::from_integer(n)))
                }
                Some(Tok::Var(prime)) => {
                    self.pos += 1;
                    Ok(if prime { RatFunc::kp() } else { RatFunc::k() })
                }
                Some(Tok::Op('(')) => {
                    self.pos += 1;
                    let v = self.expr()?;
                    if self.peek_op() != Some(')') {
                        return Err(Error::Parse("unbalanced parentheses".into()));
                    }
                    self.pos += 1;
                    Ok(v)
                }
                other => Err(Error::Parse(format!("unexpected token {other:?}"))),
            }
        }
    }

    pub fn parse(s: &str) -> Result<RatFunc> {
        let toks = lex(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut p = Parser { toks, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn substitute_examples() {
        let k = RatFunc::k();
        let f = &k / &(&RatFunc::one() + &k);
        assert_eq!(f.substitute(&q(1, 1), &q(0, 1)).unwrap(), q(1, 2));

        let g = RatFunc::from_int(30) * &k * &k;
        assert_eq!(g.substitute(&q(1, 6), &q(0, 1)).unwrap(), q(5, 6));

        let h = RatFunc::one() / (&k - &RatFunc::one());
        assert!(matches!(h.substitute(&q(1, 1), &q(0, 1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn canonical_form() {
        let k = RatFunc::k();
        let a = (&k * &k - &k) / k.clone();
        assert_eq!(a, &k - &RatFunc::one());
        assert!(a.is_polynomial());
    }

    #[test]
    fn text_round_trip() {
        let f: RatFunc = "(2*k^2 - 3/2*k*kp + 1) / (3*k + kp)".parse().unwrap();
        let again: RatFunc = f.to_string().parse().unwrap();
        assert_eq!(f, again);
        assert_eq!(f.denom().leading().unwrap().1, q(1, 1));
        assert_eq!("1/6".parse::<RatFunc>().unwrap(), RatFunc::frac(1, 6));
        assert!("k +".parse::<RatFunc>().is_err());
        assert!("x".parse::<RatFunc>().is_err());
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        let poly = prop::collection::vec((0u32..3, 0u32..2, -4i64..5), 1..4).prop_map(|ts| {
            Poly::from_terms(
                ts.into_iter()
                    .map(|(a, b, c)| (Monomial::new(a, b), super::super::poly::int(c))),
            )
        });
        (poly.clone(), poly).prop_filter_map("nonzero denominator", |(n, d)| {
            if d.is_zero() {
                None
            } else {
                RatFunc::new(n, d).ok()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatFunc::zero());
            if let Some(inv) = a.inv() {
                prop_assert_eq!(&a * &inv, RatFunc::one());
            }
        }

        #[test]
        fn display_parses_back(a in small_ratfunc()) {
            let back: RatFunc = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
