//! Generalized quaternions `H̄ = ℍ(ℝ̄)` on the basis `{1, i, j, k}`.
//!
//! Every decision procedure works with `norm_sq(x) = x·x̄ = x₀² + x₁² + x₂² + x₃²`
//! instead of `n(x) = √(x x̄)`: both have the same support and leading data,
//! and the square root would leave the rational-coefficient class. The inverse
//! of a unit is `x̄ · (x x̄)^{-1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;

use crate::epsset::IndexSet;
use crate::error::{Error, Result};
use crate::gennum::{Classification, GenNumber, Negligibility, Valuation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenQuaternion {
    parts: [GenNumber; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuatClassification {
    Unit { inverse: GenQuaternion },
    /// `witness` is a central idempotent with `x·e = e·x = 0`.
    ZeroDivisor { witness: GenNumber },
    Zero,
    Indeterminate,
}

impl QuatClassification {
    pub fn kind(&self) -> &'static str {
        match self {
            QuatClassification::Unit { .. } => "unit",
            QuatClassification::ZeroDivisor { .. } => "zero_divisor",
            QuatClassification::Zero => "zero",
            QuatClassification::Indeterminate => "indeterminate",
        }
    }
}

impl GenQuaternion {
    pub fn new(x0: GenNumber, x1: GenNumber, x2: GenNumber, x3: GenNumber) -> Result<Self> {
        let parts = [x0, x1, x2, x3];
        if parts.iter().any(|p| !p.is_real()) {
            return Err(Error::NonRealComponent);
        }
        Ok(GenQuaternion { parts })
    }

    pub fn from_parts(parts: [GenNumber; 4]) -> Result<Self> {
        let [a, b, c, d] = parts;
        GenQuaternion::new(a, b, c, d)
    }

    /// Embeds a real generalized number as `x + 0i + 0j + 0k`.
    pub fn from_real(x: GenNumber) -> Result<Self> {
        GenQuaternion::new(x, GenNumber::zero(), GenNumber::zero(), GenNumber::zero())
    }

    fn basis(idx: usize) -> Self {
        let mut parts = [GenNumber::zero(), GenNumber::zero(), GenNumber::zero(), GenNumber::zero()];
        parts[idx] = GenNumber::one();
        GenQuaternion { parts }
    }

    pub fn zero() -> Self {
        GenQuaternion::from_real(GenNumber::zero()).unwrap()
    }

    pub fn one() -> Self {
        GenQuaternion::basis(0)
    }

    pub fn i() -> Self {
        GenQuaternion::basis(1)
    }

    pub fn j() -> Self {
        GenQuaternion::basis(2)
    }

    pub fn k() -> Self {
        GenQuaternion::basis(3)
    }

    pub fn parts(&self) -> &[GenNumber; 4] {
        &self.parts
    }

    pub fn scalar_part(&self) -> &GenNumber {
        &self.parts[0]
    }

    /// Least period shared by all four components: their common region
    /// partition is the residue classes modulo this number.
    pub fn common_period(&self) -> usize {
        self.parts.iter().fold(1, |acc, p| acc.lcm(&p.period()))
    }

    fn zip(&self, other: &Self, f: impl Fn(&GenNumber, &GenNumber) -> GenNumber) -> Self {
        GenQuaternion { parts: std::array::from_fn(|i| f(&self.parts[i], &other.parts[i])) }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, GenNumber::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, GenNumber::sub)
    }

    pub fn neg(&self) -> Self {
        GenQuaternion { parts: std::array::from_fn(|i| GenNumber::neg(&self.parts[i])) }
    }

    /// Hamilton product.
    pub fn mul(&self, other: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.parts;
        let [b0, b1, b2, b3] = &other.parts;
        GenQuaternion {
            parts: [
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            ],
        }
    }

    /// Multiplication by a real generalized number, which is central.
    pub fn scale(&self, r: &GenNumber) -> Self {
        GenQuaternion { parts: std::array::from_fn(|i| &self.parts[i] * r) }
    }

    pub fn conj(&self) -> Self {
        let [a0, a1, a2, a3] = &self.parts;
        GenQuaternion { parts: [a0.clone(), -a1, -a2, -a3] }
    }

    /// `x₀² + x₁² + x₂² + x₃²`, the scalar part of `x·x̄`.
    pub fn norm_sq(&self) -> GenNumber {
        self.parts.iter().fold(GenNumber::zero(), |acc, p| acc + p * p)
    }

    pub fn norm(&self, window: &BigRational) -> Result<GenNumber> {
        self.norm_sq().sqrt(window)
    }

    pub fn is_exact(&self) -> bool {
        self.parts.iter().all(GenNumber::is_exact)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(GenNumber::is_zero)
    }

    pub fn is_negligible(&self) -> Negligibility {
        let verdicts: Vec<_> = self.parts.iter().map(GenNumber::is_negligible).collect();
        if verdicts.contains(&Negligibility::No) {
            Negligibility::No
        } else if verdicts.contains(&Negligibility::ZeroUpToPrecision) {
            Negligibility::ZeroUpToPrecision
        } else {
            Negligibility::Yes
        }
    }

    /// Classification driven by `classify(norm_sq(x))`.
    pub fn qclassify(&self, window: &BigRational) -> QuatClassification {
        match self.norm_sq().classify(window) {
            Classification::Unit { inverse } => QuatClassification::Unit { inverse: self.conj().scale(&inverse) },
            Classification::ZeroDivisor { witness } => QuatClassification::ZeroDivisor { witness },
            Classification::Zero => QuatClassification::Zero,
            Classification::Indeterminate => QuatClassification::Indeterminate,
        }
    }

    /// `min_i V(x_i)`; the quaternion modulus is comparable to the largest
    /// component modulus, so this is `V` for the quaternion metric.
    pub fn qvaluation(&self) -> Valuation {
        let vals: Vec<Valuation> = self.parts.iter().map(GenNumber::valuation).collect();
        let value = vals.iter().map(|v| v.value.clone()).min().unwrap();
        let exact = vals.iter().any(|v| v.exact && v.value == value);
        Valuation { value, exact }
    }

    pub fn qdistance(&self, other: &Self) -> Valuation {
        self.sub(other).qvaluation()
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_exact() && self.mul(self) == *self
    }

    /// The region `A` with `x = χ_A · 1`. Every idempotent of `H̄` in the class
    /// has this shape; anything else is reported as a violation.
    pub fn idempotent_decompose(&self) -> Result<IndexSet> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        if self.parts[1..].iter().any(|p| !p.is_zero()) {
            return Err(Error::NonRealIdempotent(self.to_string()));
        }
        self.parts[0].idempotent_region().ok_or_else(|| Error::NonRealIdempotent(self.to_string()))
    }

    /// `x + χ_Z α_n · 1`, `Z` the certified-zero region of `norm_sq(x)`.
    pub fn unit_near(&self, n: &BigRational) -> Result<Self> {
        let ns = self.norm_sq();
        if !ns.uncertain_region().is_empty() {
            return Err(Error::IndeterminateInput);
        }
        let bump = GenNumber::chi(&ns.zero_region()) * GenNumber::alpha(n.clone());
        Ok(self.add(&GenQuaternion::from_real(bump).unwrap()))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&GenQuaternion> for &GenQuaternion {
            type Output = GenQuaternion;
            fn $method(self, rhs: &GenQuaternion) -> GenQuaternion {
                GenQuaternion::$method(self, rhs)
            }
        }
        impl $trait<GenQuaternion> for GenQuaternion {
            type Output = GenQuaternion;
            fn $method(self, rhs: GenQuaternion) -> GenQuaternion {
                GenQuaternion::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &GenQuaternion {
    type Output = GenQuaternion;
    fn neg(self) -> GenQuaternion {
        GenQuaternion::neg(self)
    }
}

impl fmt::Display for GenQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.parts;
        write!(f, "quat({a}; {b}; {c}; {d})")
    }
}
