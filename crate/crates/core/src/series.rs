//! Truncated Puiseux series `Σ c_i ε^{q_i} + O(ε^P)`.
//!
//! Terms are kept sorted by strictly increasing exponent with nonzero
//! coefficients, all below the truncation order `P`. `P = +∞` marks an exact
//! series: the representative is literally the finite sum.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, rational_sqrt, Coeff, ExtRational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuiseuxSeries {
    terms: Vec<(BigRational, Coeff)>,
    order: ExtRational,
}

impl PuiseuxSeries {
    /// Normalizes arbitrary `(exponent, coefficient)` pairs: merges equal
    /// exponents, drops zeros and anything at or beyond `order`.
    pub fn new(terms: impl IntoIterator<Item = (BigRational, Coeff)>, order: ExtRational) -> Self {
        let mut merged: BTreeMap<BigRational, Coeff> = BTreeMap::new();
        for (q, c) in terms {
            if order.cmp_rational(&q).is_le() {
                continue;
            }
            let slot = merged.entry(q).or_insert_with(Coeff::zero);
            *slot = &*slot + &c;
        }
        let terms = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        PuiseuxSeries { terms, order }
    }

    pub fn zero() -> Self {
        PuiseuxSeries { terms: Vec::new(), order: ExtRational::Infinity }
    }

    pub fn one() -> Self {
        PuiseuxSeries::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        PuiseuxSeries::monomial(c, BigRational::zero())
    }

    pub fn monomial(c: Coeff, exponent: BigRational) -> Self {
        PuiseuxSeries::new([(exponent, c)], ExtRational::Infinity)
    }

    /// The termless series `O(ε^P)`: zero up to the given order.
    pub fn big_o(order: BigRational) -> Self {
        PuiseuxSeries { terms: Vec::new(), order: ExtRational::Finite(order) }
    }

    pub fn terms(&self) -> &[(BigRational, Coeff)] {
        &self.terms
    }

    pub fn order(&self) -> &ExtRational {
        &self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_infinite()
    }

    pub fn is_termless(&self) -> bool {
        self.terms.is_empty()
    }

    /// Certified zero: no terms and no truncation.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.is_exact()
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real())
    }

    pub fn leading(&self) -> Option<&(BigRational, Coeff)> {
        self.terms.first()
    }

    /// Exponent of the leading term, or the order of a termless series.
    pub fn leading_exponent(&self) -> ExtRational {
        match self.terms.first() {
            Some((q, _)) => ExtRational::Finite(q.clone()),
            None => self.order.clone(),
        }
    }

    /// Lowers the order to `min(order, new_order)`, dropping terms beyond it.
    pub fn truncate(&self, new_order: &ExtRational) -> Self {
        if *new_order >= self.order {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .filter(|(q, _)| new_order.cmp_rational(q).is_gt())
            .cloned()
            .collect();
        PuiseuxSeries { terms, order: new_order.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.clone().min(other.order.clone());
        let below = |q: &BigRational| order.cmp_rational(q).is_gt();
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().cloned(),
                (None, Some(_)) => b.next().cloned(),
                (Some((qa, ca)), Some((qb, cb))) => match qa.cmp(qb) {
                    std::cmp::Ordering::Less => a.next().cloned(),
                    std::cmp::Ordering::Greater => b.next().cloned(),
                    std::cmp::Ordering::Equal => {
                        let sum = (qa.clone(), ca + cb);
                        a.next();
                        b.next();
                        Some(sum)
                    }
                },
            };
            match next {
                Some((q, _)) if !below(&q) => break,
                Some((q, c)) if !c.is_zero() => terms.push((q, c)),
                _ => {}
            }
        }
        PuiseuxSeries { terms, order }
    }

    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(q, c)| (q.clone(), -c)).collect(),
            order: self.order.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product truncated at `min(P₁ + v₂, P₂ + v₁)`, `v` the leading exponents.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (&self.order + &other.leading_exponent()).min(&other.order + &self.leading_exponent());
        if self.terms.is_empty() || other.terms.is_empty() {
            return PuiseuxSeries { terms: Vec::new(), order };
        }
        // exponents on a common lattice (1/L)ℤ so products are keyed by integers
        let l = self.terms.iter().chain(&other.terms).fold(BigInt::one(), |acc, (q, _)| lcm_into(acc, q.denom()));
        let index = |q: &BigRational| q.numer() * (&l / q.denom());
        // integer numerators over one common denominator per operand
        let clear = |terms: &[(BigRational, Coeff)]| {
            let d = terms.iter().fold(BigInt::one(), |acc, (_, c)| lcm_into(lcm_into(acc, c.re().denom()), c.im().denom()));
            let scaled: Vec<(BigInt, GaussInt)> = terms.iter().map(|(q, c)| (index(q), GaussInt::clear(c, &d))).collect();
            (d, scaled)
        };
        let (d1, left) = clear(&self.terms);
        let (d2, right) = clear(&other.terms);
        let mut sums: BTreeMap<BigInt, GaussInt> = BTreeMap::new();
        for (k1, c1) in &left {
            for (k2, c2) in &right {
                sums.entry(k1 + k2).or_insert_with(GaussInt::zero).add_product(c1, c2);
            }
        }
        let d = d1 * d2;
        let merged = sums.into_iter().map(|(k, c)| (k, c.over(&d)));
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (BigRational::new(k, l.clone()), c))
            .filter(|(q, _)| order.cmp_rational(q).is_gt())
            .collect();
        PuiseuxSeries { terms, order }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return PuiseuxSeries::zero();
        }
        PuiseuxSeries {
            terms: self.terms.iter().map(|(q, d)| (q.clone(), d * c)).collect(),
            order: self.order.clone(),
        }
    }

    /// Multiplies by `ε^shift`.
    pub fn shift(&self, shift: &BigRational) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(q, c)| (q + shift, c.clone())).collect(),
            order: self.order.add_rational(shift),
        }
    }

    pub fn conj(&self) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(q, c)| (q.clone(), c.conj())).collect(),
            order: self.order.clone(),
        }
    }

    /// Splits a series with leading term `c ε^q` as `c ε^q (1 + u)` and returns
    /// `(q, c, u)`; `u` has strictly positive leading exponent.
    fn normalized_tail(&self) -> Option<(BigRational, Coeff, PuiseuxSeries)> {
        let (q, c) = self.leading()?;
        let c_inv = c.inv().expect("stored coefficients are nonzero");
        let minus_q = -q;
        let tail = PuiseuxSeries {
            terms: self.terms[1..].iter().map(|(p, d)| (p + &minus_q, d * &c_inv)).collect(),
            order: self.order.add_rational(&minus_q),
        };
        Some((q.clone(), c.clone(), tail))
    }

    /// Dense coefficients of `u` on the lattice `(1/L)ℕ`, `L` the common
    /// denominator of its exponents, for lattice indices `k/L < rel`.
    fn lattice(u: &PuiseuxSeries, rel: &ExtRational) -> (BigInt, Vec<Coeff>) {
        let l = u.terms.iter().fold(BigInt::one(), |acc, (q, _)| lcm_into(acc, q.denom()));
        let bound = rel.as_finite().expect("finite relative window") * BigRational::from_integer(l.clone());
        let len = bound.ceil().to_integer().to_usize().unwrap_or(0);
        let mut dense = vec![Coeff::zero(); len];
        for (q, c) in &u.terms {
            let k = (q * BigRational::from_integer(l.clone())).to_integer().to_usize().expect("small lattice index");
            if k < len {
                dense[k] = c.clone();
            }
        }
        (l, dense)
    }

    fn from_lattice(l: &BigInt, coeffs: Vec<Coeff>, order: ExtRational) -> PuiseuxSeries {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (BigRational::new(BigInt::from(k), l.clone()), c));
        PuiseuxSeries::new(terms, order)
    }

    /// Multiplicative inverse. Output order is `-q + min(W, P - q)` for leading
    /// exponent `q` and input order `P`; exact monomials invert exactly.
    /// Returns `None` for a termless series.
    pub fn invert(&self, window: &BigRational) -> Option<Self> {
        let (q, c, u) = self.normalized_tail()?;
        let c_inv = c.inv().expect("nonzero");
        if u.is_zero() {
            return Some(PuiseuxSeries::monomial(c_inv, -q));
        }
        let rel = ExtRational::Finite(window.clone()).min(u.order.clone());
        // b = 1/(1+u): b_0 = 1, b_k = -Σ_{j≥1} u_j b_{k-j}. With D clearing
        // the coefficient denominators, B_k = D^k b_k stays integral.
        let (l, u_dense) = PuiseuxSeries::lattice(&u, &rel);
        let d = u_dense.iter().fold(BigInt::one(), |acc, c| lcm_into(lcm_into(acc, c.re().denom()), c.im().denom()));
        let mut d_pow = BigInt::one();
        let mut v: Vec<(usize, GaussInt)> = Vec::new();
        for (j, c) in u_dense.iter().enumerate().skip(1) {
            if !c.is_zero() {
                v.push((j, GaussInt::clear(c, &d).scale(&d_pow)));
            }
            d_pow *= &d;
        }
        let mut big_b: Vec<GaussInt> = Vec::with_capacity(u_dense.len());
        let mut b: Vec<Coeff> = Vec::with_capacity(u_dense.len());
        let mut denom = BigInt::one();
        for k in 0..u_dense.len() {
            let next = if k == 0 {
                GaussInt::one()
            } else {
                let mut acc = GaussInt::zero();
                for (j, vj) in v.iter().take_while(|(j, _)| *j <= k) {
                    acc.add_product(vj, &big_b[k - j]);
                }
                acc.negate();
                acc
            };
            b.push(next.over(&denom));
            big_b.push(next);
            denom *= &d;
        }
        let series = PuiseuxSeries::from_lattice(&l, b, rel);
        Some(series.scale(&c_inv).shift(&-q))
    }

    /// Square root of a series with positive rational-square leading
    /// coefficient. Output order is `q/2 + min(W, P - q)`.
    pub fn sqrt(&self, window: &BigRational) -> Result<Self> {
        let Some((q, c, u)) = self.normalized_tail() else {
            return if self.is_exact() { Ok(PuiseuxSeries::zero()) } else { Err(Error::IndeterminateSign) };
        };
        if !c.is_real() {
            return Err(Error::ComplexOrderUndefined);
        }
        if c.re().is_negative() {
            return Err(Error::NotQPositive);
        }
        let root = rational_sqrt(c.re()).ok_or_else(|| Error::IrrationalLeadingCoefficient(c.to_string()))?;
        let half_q = &q / int(2);
        if u.is_zero() {
            return Ok(PuiseuxSeries::monomial(Coeff::real(root), half_q));
        }
        let rel = ExtRational::Finite(window.clone()).min(u.order.clone());
        // s = √(1+u): s_0 = 1, 2 s_k = u_k - Σ_{0<j<k} s_j s_{k-j}
        let (l, u_dense) = PuiseuxSeries::lattice(&u, &rel);
        let half = BigRational::new(1.into(), 2.into());
        let mut r: Vec<Coeff> = Vec::with_capacity(u_dense.len());
        for k in 0..u_dense.len() {
            if k == 0 {
                r.push(Coeff::one());
                continue;
            }
            let mut acc = u_dense[k].clone();
            for j in 1..k {
                if !r[j].is_zero() && !r[k - j].is_zero() {
                    acc = &acc - &(&r[j] * &r[k - j]);
                }
            }
            r.push(acc.scale(&half));
        }
        let series = PuiseuxSeries::from_lattice(&l, r, rel);
        Ok(series.scale(&Coeff::real(root)).shift(&half_q))
    }
}

fn lcm_into(acc: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() || (&acc % d).is_zero() {
        acc
    } else {
        acc.lcm(d)
    }
}

/// Gaussian integer used by the fraction-free inversion.
#[derive(Clone)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> Self {
        GaussInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    /// `c·d` for `d` a common multiple of the denominators of `c`.
    fn clear(c: &Coeff, d: &BigInt) -> Self {
        let part = |r: &BigRational| r.numer() * (d / r.denom());
        GaussInt { re: part(c.re()), im: part(c.im()) }
    }

    fn scale(mut self, k: &BigInt) -> Self {
        self.re *= k;
        if !self.im.is_zero() {
            self.im *= k;
        }
        self
    }

    fn add_product(&mut self, a: &GaussInt, b: &GaussInt) {
        if a.im.is_zero() && b.im.is_zero() {
            self.re += &a.re * &b.re;
        } else {
            self.re += &a.re * &b.re - &a.im * &b.im;
            self.im += &a.re * &b.im + &a.im * &b.re;
        }
    }

    fn negate(&mut self) {
        self.re = -std::mem::take(&mut self.re);
        self.im = -std::mem::take(&mut self.im);
    }

    fn over(&self, d: &BigInt) -> Coeff {
        if self.im.is_zero() {
            return Coeff::real(BigRational::new(self.re.clone(), d.clone()));
        }
        Coeff::new(BigRational::new(self.re.clone(), d.clone()), BigRational::new(self.im.clone(), d.clone()))
    }
}
