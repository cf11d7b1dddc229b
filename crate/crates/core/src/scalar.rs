//! Exact scalars: rationals extended by `+∞`, and Gaussian rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Evaluation(format!("invalid rational `{s}`"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// Natural logarithm of a positive rational, computed through its bit length so
/// that huge numerators and denominators do not overflow `f64`.
pub fn ln_rational(r: &BigRational) -> f64 {
    fn ln_big(n: &BigInt) -> f64 {
        let bits = n.bits();
        if bits <= 1000 {
            return n.to_string().parse::<f64>().unwrap().ln();
        }
        let shift = bits - 64;
        let top: BigInt = n >> shift;
        top.to_string().parse::<f64>().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
    }
    ln_big(&r.numer().abs()) - ln_big(r.denom())
}

/// A rational number or `+∞`. Used both for truncation orders and valuations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    pub fn finite(r: BigRational) -> Self {
        ExtRational::Finite(r)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinity => None,
        }
    }

    /// Compares against a finite rational without allocating.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        match self {
            ExtRational::Finite(v) => v.cmp(r),
            ExtRational::Infinity => Ordering::Greater,
        }
    }

    pub fn add_rational(&self, r: &BigRational) -> ExtRational {
        match self {
            ExtRational::Finite(v) => ExtRational::Finite(v + r),
            ExtRational::Infinity => ExtRational::Infinity,
        }
    }
}

impl From<BigRational> for ExtRational {
    fn from(r: BigRational) -> Self {
        ExtRational::Finite(r)
    }
}

impl Add for &ExtRational {
    type Output = ExtRational;
    fn add(self, other: &ExtRational) -> ExtRational {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinity,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => f.write_str(&fmt_rational(r)),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtRational::Infinity),
            other => parse_rational(other).map(ExtRational::Finite),
        }
    }
}

/// Gaussian rational `re + im·I`. Real scalars simply carry `im = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    re: BigRational,
    im: BigRational,
}

impl Coeff {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coeff { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Coeff { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::real(int(n))
    }

    pub fn imaginary_unit() -> Self {
        Coeff::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Coeff::from_int(0)
    }

    pub fn one() -> Self {
        Coeff::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Coeff {
        Coeff::new(self.re.clone(), -&self.im)
    }

    /// `|c|²`, always a non-negative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Coeff::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, r: &BigRational) -> Coeff {
        Coeff::new(&self.re * r, &self.im * r)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        if self.im.is_zero() && o.im.is_zero() {
            return Coeff::real(&self.re + &o.re);
        }
        Coeff::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        if self.im.is_zero() && o.im.is_zero() {
            return Coeff::real(&self.re * &o.re);
        }
        Coeff::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for Coeff {
    /// Real coefficients print as `p/q`; others as `(a+b*I)`, `b*I` or `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im = if self.im.is_one() {
            "I".to_string()
        } else if (-&self.im).is_one() {
            "-I".to_string()
        } else {
            format!("{}*I", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            return f.write_str(&im);
        }
        let sep = if im.starts_with('-') { "" } else { "+" };
        write!(f, "({}{}{})", fmt_rational(&self.re), sep, im)
    }
}

impl FromStr for Coeff {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let bad = || Error::Evaluation(format!("invalid coefficient `{s}`"));
        let imag = |t: &str| -> Result<BigRational> {
            let t = t.strip_suffix('I').ok_or_else(bad)?;
            let t = t.strip_suffix('*').unwrap_or(t);
            match t {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                other => parse_rational(other),
            }
        };
        if !s.ends_with('I') {
            return parse_rational(s).map(Coeff::real);
        }
        let split = s
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => Ok(Coeff::new(parse_rational(&s[..i])?, imag(&s[i..])?)),
            None => Ok(Coeff::new(BigRational::zero(), imag(s)?)),
        }
    }
}
