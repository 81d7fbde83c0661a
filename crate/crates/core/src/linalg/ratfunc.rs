//! Multivariate polynomials and rational functions over Q in named
//! indeterminates. Enough algebra for symbolic 2x2 matrix identities.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Domain, Field, Rational, Scalar};

/// Exponent map with no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn var(name: &str) -> Self {
        Monomial(BTreeMap::from([(name.to_string(), 1)]))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    fn exponent(&self, v: &str) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }
}

/// Graded lexicographic order with variables compared by name.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let vars: BTreeSet<&String> = self.0.keys().chain(other.0.keys()).collect();
            vars.into_iter()
                .map(|v| self.exponent(v).cmp(&other.exponent(v)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| {
                if e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Sparse polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly(BTreeMap<Monomial, Rational>);

impl MPoly {
    pub fn var(name: &str) -> Self {
        MPoly(BTreeMap::from([(Monomial::var(name), Rational::one())]))
    }

    pub fn constant(c: Rational) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Monomial::default(), c);
        }
        MPoly(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.0.iter()
    }

    /// Leading term in graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.0.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.0.len() {
            0 => Some(Rational::zero()),
            1 => self.0.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.0 {
            let mut term = c.clone();
            for (v, &e) in &m.0 {
                let x = point.get(v)?;
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        Some(acc)
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MPoly::default();
        }
        MPoly(self.0.iter().map(|(m, a)| (m.clone(), a * c)).collect())
    }

    fn add_term(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        let slot = map.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            map.retain(|_, v| !v.is_zero());
        }
    }
}

impl Add for MPoly {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (m, c) in rhs.0 {
            MPoly::add_term(&mut out, m, c);
        }
        MPoly(out)
    }
}

impl Neg for MPoly {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly(self.0.into_iter().map(|(m, c)| (m, -c)).collect())
    }
}

impl Sub for MPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for MPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = BTreeMap::new();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &rhs.0 {
                MPoly::add_term(&mut out, ma.mul(mb), ca * cb);
            }
        }
        MPoly(out)
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.0.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Quotient of polynomials. Normalized so the denominator's leading
/// coefficient is 1; equality is decided by cross-multiplication, so no gcd
/// cancellation is needed.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MPoly,
    den: MPoly,
}

impl RationalFunction {
    /// Panics on a zero denominator.
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: MPoly::one(),
            };
        }
        let lc = den.leading().unwrap().1.clone();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn var(name: &str) -> Self {
        RationalFunction::from(MPoly::var(name))
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from(MPoly::constant(c))
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    /// `None` if a variable is unbound or the denominator vanishes.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Option<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point)? / d)
    }
}

impl From<MPoly> for RationalFunction {
    fn from(p: MPoly) -> Self {
        RationalFunction::new(p, MPoly::one())
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction::new(self.num + rhs.num, self.den);
        }
        RationalFunction::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        RationalFunction::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RationalFunction {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        RationalFunction::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from(MPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from(MPoly::one())
    }
}

impl Scalar for RationalFunction {
    fn from_int(n: i64) -> Self {
        RationalFunction::constant(Rational::from_int(n))
    }
}

impl Domain for RationalFunction {
    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }
}

impl Field for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn v(n: &str) -> RationalFunction {
        RationalFunction::var(n)
    }

    #[test]
    fn arithmetic_identities() {
        let (a, b) = (v("a"), v("b"));
        let lhs = (a.clone() + b.clone()) * (a.clone() - b.clone());
        let rhs = a.clone() * a.clone() - b.clone() * b.clone();
        assert_eq!(lhs, rhs);
        let q = (a.clone() * b.clone()) / a.clone();
        assert_eq!(q, b);
        assert!((q - b).is_zero());
    }

    #[test]
    fn grlex_order() {
        let x2 = Monomial::var("a").mul(&Monomial::var("a"));
        let xy = Monomial::var("a").mul(&Monomial::var("b"));
        let y = Monomial::var("b");
        assert!(x2 > xy);
        assert!(xy > y);
        assert!(Monomial::var("a") > Monomial::var("b"));
    }

    #[test]
    fn normalization_and_eval() {
        let f = RationalFunction::new(MPoly::var("a"), MPoly::var("a").scale(&int(2)));
        assert_eq!(f.denominator(), &MPoly::var("a"));
        let point = BTreeMap::from([("a".to_string(), int(3))]);
        assert_eq!(f.eval(&point), Some(Rational::new(1.into(), 2.into())));
        assert_eq!(v("c").eval(&point), None);
    }
}
