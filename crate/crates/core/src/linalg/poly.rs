//! Dense univariate polynomials, Sturm chains, and exact root search over Q
//! and Q(i).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{Field, GaussRational, Rational, Scalar};
use crate::error::{Error, Result};

/// Polynomial in one indeterminate, coefficients lowest degree first. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

pub type RatPoly = UniPoly<Rational>;

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        UniPoly::new(vec![T::zero(), T::one()])
    }

    /// `x - root`
    pub fn linear(root: T) -> Self {
        UniPoly::new(vec![-root, T::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(UniPoly::constant(T::one()), |acc, _| &acc * self)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &super::Matrix<T>) -> super::Matrix<T> {
        let n = m.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(super::Matrix::zeros(n, n), |acc, c| {
                &(&acc * m) + &super::Matrix::identity(n).scale(c)
            })
    }
}

impl<T: Field> UniPoly<T> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = rem.last().unwrap().clone() * lc_inv.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - factor.clone() * c.clone();
            }
            quot[k] = factor;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl<T: Scalar> Add for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: Self) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
                    let b = rhs.coeffs.get(k).cloned().unwrap_or_else(T::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<T: Scalar> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Sub for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: Self) -> UniPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: Self) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

/// Rendered in the indeterminate `x`, e.g. `x^2 - 3*x + 1`. Coefficients with
/// both a real and an imaginary part are parenthesized.
impl<T: Scalar> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                // A leading minus on a compound Gaussian value is not an overall sign.
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, text),
            };
            let body = if body.contains(['+', '-']) {
                format!("({body})")
            } else {
                body
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                f.write_str(&body)?;
            } else if body == "1" {
                f.write_str(&mono)?;
            } else {
                write!(f, "{body}*{mono}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers and Sturm chains
// ---------------------------------------------------------------------------

/// Clears denominators and removes content: the result has integer
/// coefficients with gcd 1 and a positive leading coefficient.
pub fn primitive_integer_part(p: &RatPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    normalize_int(ints)
}

fn normalize_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return v;
    }
    let sign = if v.last().unwrap().is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let div = content * sign;
    v.iter().map(|c| c / &div).collect()
}

fn int_derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// Sign-preserving pseudo-remainder: `|lc(b)|^(deg a - deg b + 1) * a mod b`.
fn signed_pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc = b[db].abs();
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let k = rem.len() - 1 - db;
        let top = rem.last().unwrap().clone();
        // rem <- lc * rem - top * sign(lc(b)) * x^k * b
        let b_lead_sign = if b[db].is_negative() { -1 } else { 1 };
        for c in rem.iter_mut() {
            *c = &*c * &lc;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= &top * c * BigInt::from(b_lead_sign);
        }
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

/// Sign of an integer polynomial at the rational point `x`.
fn sign_at(p: &[BigInt], x: &Rational) -> i32 {
    if p.is_empty() {
        return 0;
    }
    // Homogenize: sum c_k u^k v^(n-k) with v > 0 has the sign of p(u/v).
    let (u, v) = (x.numer(), x.denom());
    let n = p.len() - 1;
    let mut acc = BigInt::zero();
    let mut upow = BigInt::one();
    let mut vpows = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        vpows[k] = &vpows[k - 1] * v;
    }
    for (k, c) in p.iter().enumerate() {
        acc += c * &upow * &vpows[n - k];
        upow *= u;
    }
    sign_of(&acc)
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm sequence of an integer polynomial, built with sign-preserving
/// pseudo-remainders so every member stays in Z[x].
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &[BigInt]) -> Self {
        let mut chain = vec![normalize_int(p.to_vec())];
        let d = int_derivative(&chain[0]);
        if !d.is_empty() {
            chain.push(normalize_keep_sign(d));
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = signed_pseudo_remainder(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            let neg: Vec<BigInt> = r.into_iter().map(|c| -c).collect();
            chain.push(normalize_keep_sign(neg));
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations_at(&self, x: &Rational) -> usize {
        variations(self.chain.iter().map(|p| sign_at(p, x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.chain.iter().map(|p| {
            let lc = sign_of(p.last().unwrap());
            if positive || (p.len() - 1) % 2 == 0 {
                lc
            } else {
                -lc
            }
        }))
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Distinct real roots in the open interval `(a, b)`; neither endpoint may
    /// be a root.
    pub fn count_between(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Divides out the positive content only, so signs are untouched.
fn normalize_keep_sign(v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Number of distinct real roots of `p`. When `squarefree` is false the
/// polynomial is first divided by `gcd(p, p')`.
pub fn sturm_real_root_count(p: &RatPoly, squarefree: bool) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let work = if squarefree {
        p.clone()
    } else {
        p.squarefree_part()
    };
    Ok(SturmChain::new(&primitive_integer_part(&work)).count_all())
}

/// Strict bound on the absolute value of every complex root.
fn cauchy_bound(p: &RatPoly) -> Rational {
    let lc = p.leading().unwrap().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    Rational::one() + max
}

/// All distinct rational roots, ascending. Real roots are isolated by Sturm
/// bisection until each interval can hold at most one candidate `k / lc`,
/// which is then tested exactly.
pub fn rational_roots(p: &RatPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let q = primitive_integer_part(&sf);
    let lc = Rational::from_integer(q.last().unwrap().clone());
    let step = lc.recip();
    let chain = SturmChain::new(&q);
    let is_root = |x: &Rational| sign_at(&q, x) == 0;

    let bound = cauchy_bound(&sf);
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let count = chain.count_between(&a, &b);
        if count == 0 {
            continue;
        }
        if count == 1 && (&b - &a) < step {
            let lo = (&a * &lc).floor() + Rational::one();
            let candidate = &lo / &lc;
            if candidate > a && candidate < b && is_root(&candidate) {
                roots.push(candidate);
            }
            continue;
        }
        let mid = split_point(&a, &b, &is_root);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots.sort();
    Ok(roots)
}

/// A point strictly inside `(a, b)` that is not a root.
fn split_point(a: &Rational, b: &Rational, is_root: &impl Fn(&Rational) -> bool) -> Rational {
    let width = b - a;
    (2..)
        .flat_map(|den: i64| (1..den).map(move |num| (num, den)))
        .map(|(num, den)| a + &width * Rational::new(num.into(), den.into()))
        .find(|x| !is_root(x))
        .expect("a polynomial has finitely many roots")
}

/// Norms above this are not factored when searching for Gaussian roots.
const GAUSSIAN_NORM_LIMIT: u128 = 100_000_000_000_000;

/// All distinct roots in Q(i). After substituting `x = s / D` the polynomial
/// becomes monic over Z[i], so every root `s` is a Gaussian integer dividing
/// the constant term; candidates come from the divisors of its norm.
pub fn gaussian_roots(p: &UniPoly<GaussRational>) -> Result<Vec<GaussRational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut sf = p.squarefree_part();
    let mut roots = Vec::new();
    if sf.degree() == Some(0) {
        return Ok(roots);
    }
    if sf.coeffs()[0].is_zero() {
        roots.push(GaussRational::zero());
        sf = UniPoly::new(sf.coeffs()[1..].to_vec());
    }
    let n = sf.degree().unwrap();
    if n == 0 {
        return Ok(roots);
    }
    let denom_lcm = sf.coeffs().iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.re.denom()).lcm(c.im.denom())
    });
    let d = Rational::from_integer(denom_lcm);
    // q(s) = D^n p(s / D), monic with Gaussian integer coefficients.
    let mut scaled = Vec::with_capacity(n + 1);
    let mut dpow = Rational::one();
    for c in sf.coeffs().iter().rev() {
        scaled.push(GaussRational::new(&c.re * &dpow, &c.im * &dpow));
        dpow *= &d;
    }
    scaled.reverse();
    let q = UniPoly::new(scaled);
    let c0 = &q.coeffs()[0];
    let norm = c0.norm().to_integer();
    let norm = norm
        .to_u128()
        .filter(|&v| v <= GAUSSIAN_NORM_LIMIT)
        .ok_or_else(|| Error::RootSearchLimit(format!("constant term norm {norm} too large")))?;

    let bound: Rational = {
        let max = q.coeffs()[..n]
            .iter()
            .map(|c| c.re.abs() + c.im.abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        Rational::one() + max
    };
    let bound_sq = (&bound * &bound)
        .ceil()
        .to_integer()
        .to_u128()
        .unwrap_or(u128::MAX);

    for m in divisors(norm).into_iter().filter(|&m| m <= bound_sq) {
        for (a, b) in sums_of_two_squares(m) {
            let s = GaussRational::new(
                Rational::from_integer(BigInt::from(a)),
                Rational::from_integer(BigInt::from(b)),
            );
            if q.eval(&s).is_zero() {
                roots.push(GaussRational::new(&s.re / &d, &s.im / &d));
            }
        }
    }
    Ok(roots)
}

fn divisors(n: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u128;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All integer pairs `(a, b)` with `a² + b² = m`.
fn sums_of_two_squares(m: u128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    let mut a = 0u128;
    while a * a <= m {
        let rest = m - a * a;
        let b = isqrt(rest);
        if b * b == rest {
            for sa in [1i128, -1] {
                for sb in [1i128, -1] {
                    let pair = (sa * a as i128, sb * b as i128);
                    if !out.contains(&pair) {
                        out.push(pair);
                    }
                }
            }
        }
        a += 1;
    }
    out
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::{int, rat};

    fn p(c: &[i64]) -> RatPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2 - 3*x + 1");
        assert_eq!(p(&[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(RatPoly::zero().to_string(), "0");
        let g = UniPoly::new(vec![
            GaussRational::new(int(1), int(1)),
            GaussRational::one(),
        ]);
        assert_eq!(g.to_string(), "x + (1+i)");
    }

    #[test]
    fn division_and_gcd() {
        let a = &p(&[-1, 1]) * &p(&[-2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_real_root_count(&p(&[1, 0, 1]), true).unwrap(), 0);
        assert_eq!(sturm_real_root_count(&p(&[0, -2, 0, 1]), true).unwrap(), 3);
        assert_eq!(sturm_real_root_count(&p(&[1, -3, 1]), true).unwrap(), 2);
        // (x-1)^3 (x+2): two distinct roots either way.
        let rep = &p(&[-1, 1]).pow(3) * &p(&[2, 1]);
        assert_eq!(sturm_real_root_count(&rep, false).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&rep, true).unwrap(), 2);
        assert!(matches!(
            sturm_real_root_count(&RatPoly::zero(), true),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn rational_root_search() {
        // (2x - 1)(x + 3)(x^2 - 2)
        let poly = &(&p(&[-1, 2]) * &p(&[3, 1])) * &p(&[-2, 0, 1]);
        assert_eq!(rational_roots(&poly).unwrap(), vec![int(-3), rat(1, 2)]);
        assert!(rational_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&p(&[0, 0, 1])).unwrap(), vec![int(0)]);
    }

    #[test]
    fn gaussian_root_search() {
        let roots = gaussian_roots(&p(&[1, 0, 1]).map(|c| GaussRational::from(c.clone()))).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&GaussRational::i()));
        assert!(roots.contains(&-GaussRational::i()));
        // x^2 - i has no Gaussian rational roots, x^2 - i/2 has (1+i)/2.
        let q = UniPoly::new(vec![
            GaussRational::new(int(0), int(-1)),
            GaussRational::zero(),
            GaussRational::one(),
        ]);
        assert!(gaussian_roots(&q).unwrap().is_empty());
        let half = UniPoly::new(vec![
            GaussRational::new(int(0), rat(-1, 2)),
            GaussRational::zero(),
            GaussRational::one(),
        ]);
        assert!(gaussian_roots(&half)
            .unwrap()
            .contains(&GaussRational::new(rat(1, 2), rat(1, 2))));
        // (x - (1/2 + 2i)) x^2
        let r = &UniPoly::linear(GaussRational::new(rat(1, 2), int(2)))
            * &UniPoly::from_ints(&[0, 0, 1]);
        let roots = gaussian_roots(&r).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&GaussRational::new(rat(1, 2), int(2))));
    }
}
