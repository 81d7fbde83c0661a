//! Exact scalar types and the small algebraic trait hierarchy the matrix
//! code is generic over.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Commutative ring with exact equality.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

/// Integral domain with exact division: `div_exact(a, b)` is only called when
/// `b` divides `a`.
pub trait Domain: Scalar {
    fn div_exact(&self, rhs: &Self) -> Self;
}

pub trait Field: Domain + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Which exact field a Lie algebra is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Q,
    Qi,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Q => f.write_str("Q"),
            FieldKind::Qi => f.write_str("Qi"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(FieldKind::Q),
            "Qi" | "Q(i)" => Ok(FieldKind::Qi),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown field `{other}` (expected Q or Qi)"),
            }),
        }
    }
}

/// The two base fields the Lie algebra layer works over. Root search is the
/// only place where the fields genuinely differ.
pub trait BaseField: Field {
    const KIND: FieldKind;

    fn parse_scalar(s: &str) -> Result<Self>;

    fn from_rational(r: Rational) -> Self;
    fn to_gauss(&self) -> GaussRational;
    /// `Some` when the value lies in Q.
    fn as_rational(&self) -> Option<Rational>;
    /// All distinct roots of `p` that lie in this field.
    fn roots_in_field(p: &super::UniPoly<Self>) -> Result<Vec<Self>>;
}

impl Scalar for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Domain for BigInt {
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!((self % rhs).is_zero(), "inexact integer division");
        self / rhs
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        int(n)
    }
}

impl Domain for Rational {
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Field for Rational {}

impl BaseField for Rational {
    const KIND: FieldKind = FieldKind::Q;

    fn parse_scalar(s: &str) -> Result<Self> {
        parse_rational(s.trim())
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_gauss(&self) -> GaussRational {
        GaussRational::from(self.clone())
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn roots_in_field(p: &super::UniPoly<Self>) -> Result<Vec<Self>> {
        super::poly::rational_roots(p)
    }
}

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn i() -> Self {
        GaussRational::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::new(re, Rational::zero())
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        let num = self * rhs.conj();
        GaussRational::new(num.re / &n, num.im / n)
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational::new(-self.re, -self.im)
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::new(Rational::one(), Rational::zero())
    }
}

impl Scalar for GaussRational {
    fn from_int(n: i64) -> Self {
        GaussRational::from(int(n))
    }
}

impl Domain for GaussRational {
    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }
}

impl Field for GaussRational {}

impl BaseField for GaussRational {
    const KIND: FieldKind = FieldKind::Qi;

    fn parse_scalar(s: &str) -> Result<Self> {
        s.parse()
    }

    fn from_rational(r: Rational) -> Self {
        GaussRational::from(r)
    }

    fn to_gauss(&self) -> GaussRational {
        self.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.clone())
    }

    fn roots_in_field(p: &super::UniPoly<Self>) -> Result<Vec<Self>> {
        super::poly::gaussian_roots(p)
    }
}

/// Canonical text form: `re`, `imi`, or `re+imi` / `re-imi`, with `i` and
/// `-i` for unit imaginary parts.
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let im_body = if im_abs.is_one() {
            String::new()
        } else {
            im_abs.to_string()
        };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{lead}{im_body}i")
        } else {
            write!(f, "{}{sign}{im_body}i", self.re)
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("invalid rational `{s}`"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl FromStr for GaussRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            line: 0,
            message: format!("invalid Gaussian rational `{s}`"),
        };
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussRational::from(parse_rational(s).map_err(|_| bad())?));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_part).map_err(|_| bad())?
        };
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other)).map_err(|_| bad())?,
        };
        Ok(GaussRational::new(re, im))
    }
}

/// Parses `p` or `p/q` into a reduced rational.
pub fn parse_rational_str(s: &str) -> Result<Rational> {
    parse_rational(s.trim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussRational {
        GaussRational::new(int(re), int(im))
    }

    #[test]
    fn gauss_display_and_parse() {
        let cases = [
            (g(0, 0), "0"),
            (g(3, 0), "3"),
            (g(0, 1), "i"),
            (g(0, -1), "-i"),
            (g(0, 2), "2i"),
            (g(1, -1), "1-i"),
            (g(-2, 5), "-2+5i"),
            (GaussRational::new(rat(1, 2), rat(-3, 4)), "1/2-3/4i"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<GaussRational>().unwrap(), value);
        }
        assert!("1+".parse::<GaussRational>().is_err());
        assert!("x".parse::<GaussRational>().is_err());
    }

    #[test]
    fn gauss_field_ops() {
        let a = g(1, 2);
        let b = g(3, -1);
        assert_eq!((a.clone() / b.clone()) * b.clone(), a);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(GaussRational::i() * GaussRational::i(), g(-1, 0));
    }

    #[test]
    fn rational_parse_rejects_zero_denominator() {
        assert!(parse_rational_str("1/0").is_err());
        assert_eq!(parse_rational_str("-4/6").unwrap(), rat(-2, 3));
    }
}
