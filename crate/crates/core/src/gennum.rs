//! Generalized numbers as eventually periodic families of truncated Puiseux
//! series.
//!
//! A [`GenNumber`] assigns a [`PuiseuxSeries`] to every mesh index `n`; the
//! assignment depends only on `n mod period`. Behaviour on finitely many
//! indices is a negligible perturbation, so a value is stored as one series per
//! residue class of its least period. Structural equality of the canonical form
//! is therefore equality in the ring for exact values.
//!
//! Decision procedures never look at the real number `e^{-V}`; all topology is
//! done with exact rational valuations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::epsset::IndexSet;
use crate::error::{Error, Result};
use crate::scalar::{int, Coeff, ExtRational};
use crate::series::PuiseuxSeries;

/// Window used for inversion and square roots when the caller does not pick one.
pub const DEFAULT_WINDOW: i64 = 16;

pub fn default_window() -> BigRational {
    int(DEFAULT_WINDOW)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenNumber {
    cells: Vec<PuiseuxSeries>,
}

/// Sharp valuation `V(x)`. When `exact` is false the value is only a lower
/// bound, because some region is zero only up to a finite order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    pub value: ExtRational,
    pub exact: bool,
}

impl Valuation {
    /// `e^{-V}` rounded to six decimals. Display only.
    pub fn display(&self) -> String {
        match &self.value {
            ExtRational::Infinity => format!("{:.6}", 0.0),
            ExtRational::Finite(v) => {
                let v = v.numer().to_string().parse::<f64>().unwrap() / v.denom().to_string().parse::<f64>().unwrap();
                format!("{:.6}", (-v).exp())
            }
        }
    }

    pub fn at_least(&self, bound: &BigRational) -> bool {
        self.value.cmp_rational(bound).is_ge()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Negligibility {
    Yes,
    No,
    ZeroUpToPrecision,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equality {
    Equal,
    NotEqual,
    EqualUpToPrecision,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QPositivity {
    Yes,
    No,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Unit { inverse: GenNumber },
    ZeroDivisor { witness: GenNumber },
    Zero,
    Indeterminate,
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::Unit { .. } => "unit",
            Classification::ZeroDivisor { .. } => "zero_divisor",
            Classification::Zero => "zero",
            Classification::Indeterminate => "indeterminate",
        }
    }
}

impl GenNumber {
    /// Builds from one series per residue class modulo `cells.len()` and
    /// reduces to the least period.
    pub fn from_cells(cells: Vec<PuiseuxSeries>) -> GenNumber {
        assert!(!cells.is_empty(), "a generalized number needs at least one cell");
        let len = cells.len();
        let period = (1..=len)
            .filter(|d| len % d == 0)
            .find(|&d| (d..len).all(|i| cells[i] == cells[i % d]))
            .unwrap_or(len);
        let mut cells = cells;
        cells.truncate(period);
        GenNumber { cells }
    }

    pub fn from_series(s: PuiseuxSeries) -> GenNumber {
        GenNumber { cells: vec![s] }
    }

    /// Builds from pieces whose regions must partition ℕ exactly. Pieces on
    /// finite regions are accepted and then erased.
    pub fn from_pieces(pieces: Vec<(IndexSet, PuiseuxSeries)>) -> Result<GenNumber> {
        let regions: Vec<&IndexSet> = pieces.iter().map(|(r, _)| r).collect();
        check_partition(&regions)?;
        Ok(pieces
            .iter()
            .map(|(region, s)| GenNumber::chi(region).mul(&GenNumber::from_series(s.clone())))
            .fold(GenNumber::zero(), |acc, x| acc.add(&x)))
    }

    pub fn zero() -> GenNumber {
        GenNumber::from_series(PuiseuxSeries::zero())
    }

    pub fn one() -> GenNumber {
        GenNumber::from_series(PuiseuxSeries::one())
    }

    pub fn from_coeff(c: Coeff) -> GenNumber {
        GenNumber::from_series(PuiseuxSeries::constant(c))
    }

    pub fn from_rational(r: BigRational) -> GenNumber {
        GenNumber::from_coeff(Coeff::real(r))
    }

    pub fn from_int(n: i64) -> GenNumber {
        GenNumber::from_rational(int(n))
    }

    /// `α_r`, represented by `ε ↦ ε^r`.
    pub fn alpha(r: BigRational) -> GenNumber {
        GenNumber::from_series(PuiseuxSeries::monomial(Coeff::one(), r))
    }

    /// The zero with uncertainty `O(ε^P)`.
    pub fn big_o(order: BigRational) -> GenNumber {
        GenNumber::from_series(PuiseuxSeries::big_o(order))
    }

    /// Characteristic function `χ_S`: 1 on `S`, 0 elsewhere.
    pub fn chi(region: &IndexSet) -> GenNumber {
        let m = region.modulus() as usize;
        let cells = (0..m)
            .map(|r| if region.residues().contains(&(r as u64)) { PuiseuxSeries::one() } else { PuiseuxSeries::zero() })
            .collect();
        GenNumber::from_cells(cells)
    }

    pub fn period(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[PuiseuxSeries] {
        &self.cells
    }

    /// Series used at mesh index `n`.
    pub fn series_at(&self, n: u64) -> &PuiseuxSeries {
        &self.cells[(n % self.cells.len() as u64) as usize]
    }

    /// Canonical pieces: one region per distinct series, in order of the first
    /// residue where each series appears.
    pub fn pieces(&self) -> Vec<(IndexSet, &PuiseuxSeries)> {
        let m = self.period();
        let mut seen: Vec<&PuiseuxSeries> = Vec::new();
        for s in &self.cells {
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        seen.into_iter()
            .map(|s| {
                let residues = (0..m).filter(|&r| self.cells[r] == *s).map(|r| r as u64);
                (IndexSet::periodic(m as u64, residues).unwrap(), s)
            })
            .collect()
    }

    fn zip_with(&self, other: &GenNumber, f: impl Fn(&PuiseuxSeries, &PuiseuxSeries) -> PuiseuxSeries) -> GenNumber {
        let m = self.period().lcm(&other.period());
        GenNumber::from_cells((0..m).map(|r| f(&self.cells[r % self.period()], &other.cells[r % other.period()])).collect())
    }

    fn map(&self, f: impl Fn(&PuiseuxSeries) -> PuiseuxSeries) -> GenNumber {
        GenNumber::from_cells(self.cells.iter().map(f).collect())
    }

    fn try_map(&self, f: impl Fn(&PuiseuxSeries) -> Result<PuiseuxSeries>) -> Result<GenNumber> {
        Ok(GenNumber::from_cells(self.cells.iter().map(f).collect::<Result<_>>()?))
    }

    pub fn add(&self, other: &GenNumber) -> GenNumber {
        self.zip_with(other, PuiseuxSeries::add)
    }

    pub fn sub(&self, other: &GenNumber) -> GenNumber {
        self.zip_with(other, PuiseuxSeries::sub)
    }

    pub fn mul(&self, other: &GenNumber) -> GenNumber {
        self.zip_with(other, PuiseuxSeries::mul)
    }

    pub fn neg(&self) -> GenNumber {
        self.map(PuiseuxSeries::neg)
    }

    pub fn scale(&self, c: &Coeff) -> GenNumber {
        self.map(|s| s.scale(c))
    }

    pub fn pow(&self, k: u32) -> GenNumber {
        (0..k).fold(GenNumber::one(), |acc, _| acc.mul(self))
    }

    /// Complex conjugation of the coefficients.
    pub fn conj(&self) -> GenNumber {
        self.map(PuiseuxSeries::conj)
    }

    pub fn is_exact(&self) -> bool {
        self.cells.iter().all(PuiseuxSeries::is_exact)
    }

    pub fn is_real(&self) -> bool {
        self.cells.iter().all(PuiseuxSeries::is_real)
    }

    /// The scalar field the value needs: real unless some coefficient has an
    /// imaginary part. Reals embed in the complex numbers, so mixing is free.
    pub fn field(&self) -> Field {
        if self.is_real() {
            Field::Real
        } else {
            Field::Complex
        }
    }

    /// Structural zero: every region certified zero.
    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(PuiseuxSeries::is_zero)
    }

    fn region_where(&self, pred: impl Fn(&PuiseuxSeries) -> bool) -> IndexSet {
        let m = self.period() as u64;
        IndexSet::periodic(m, (0..m).filter(|&r| pred(&self.cells[r as usize]))).unwrap()
    }

    /// Regions where the series is certified zero.
    pub fn zero_region(&self) -> IndexSet {
        self.region_where(PuiseuxSeries::is_zero)
    }

    /// Regions carrying at least one term.
    pub fn support(&self) -> IndexSet {
        self.region_where(|s| !s.is_termless())
    }

    /// Regions that are zero only up to a finite order.
    pub fn uncertain_region(&self) -> IndexSet {
        self.region_where(|s| s.is_termless() && !s.is_exact())
    }

    pub fn is_negligible(&self) -> Negligibility {
        if self.cells.iter().any(|s| !s.is_termless()) {
            Negligibility::No
        } else if self.is_exact() {
            Negligibility::Yes
        } else {
            Negligibility::ZeroUpToPrecision
        }
    }

    /// `V(x)`: least leading exponent over all regions.
    pub fn valuation(&self) -> Valuation {
        let value = self.cells.iter().map(PuiseuxSeries::leading_exponent).min().expect("nonempty");
        let exact = match &value {
            ExtRational::Infinity => true,
            ExtRational::Finite(v) => self.cells.iter().any(|s| s.leading().is_some_and(|(q, _)| q == v)),
        };
        Valuation { value, exact }
    }

    /// Sharp norm in exponent space: `‖x‖ = e^{-V(x)}`.
    pub fn sharp_norm(&self) -> Valuation {
        self.valuation()
    }

    pub fn distance(&self, other: &GenNumber) -> Valuation {
        self.sub(other).valuation()
    }

    pub fn equals(&self, other: &GenNumber) -> Equality {
        match self.sub(other).is_negligible() {
            Negligibility::Yes => Equality::Equal,
            Negligibility::No => Equality::NotEqual,
            Negligibility::ZeroUpToPrecision => Equality::EqualUpToPrecision,
        }
    }

    /// Unit / zero-divisor dichotomy with constructive witnesses.
    pub fn classify(&self, window: &BigRational) -> Classification {
        if self.is_zero() {
            return Classification::Zero;
        }
        let zeros = self.zero_region();
        if !zeros.is_empty() {
            return Classification::ZeroDivisor { witness: GenNumber::chi(&zeros) };
        }
        if !self.uncertain_region().is_empty() {
            return Classification::Indeterminate;
        }
        Classification::Unit { inverse: self.invert(window).expect("every region has a leading term") }
    }

    pub fn invert(&self, window: &BigRational) -> Result<GenNumber> {
        self.try_map(|s| s.invert(window).ok_or(Error::NotAUnit))
    }

    /// `x + χ_Z α_n` with `Z` the certified-zero region: a unit within sharp
    /// distance `e^{-n}` of `x`.
    pub fn unit_near(&self, n: &BigRational) -> Result<GenNumber> {
        if !self.uncertain_region().is_empty() {
            return Err(Error::IndeterminateInput);
        }
        Ok(self.add(&GenNumber::chi(&self.zero_region()).mul(&GenNumber::alpha(n.clone()))))
    }

    fn require_real(&self) -> Result<()> {
        if self.is_real() {
            Ok(())
        } else {
            Err(Error::ComplexOrderUndefined)
        }
    }

    /// Quasi-positivity: on every region the series is zero or its leading
    /// coefficient is positive (the leading term dominates eventually).
    pub fn is_qpositive(&self) -> Result<QPositivity> {
        self.require_real()?;
        let mut uncertain = false;
        for s in &self.cells {
            match s.leading() {
                Some((_, c)) if c.re().is_negative() => return Ok(QPositivity::No),
                Some(_) => {}
                None if !s.is_exact() => uncertain = true,
                None => {}
            }
        }
        Ok(if uncertain { QPositivity::Indeterminate } else { QPositivity::Yes })
    }

    /// `x ≥ y` in the q-positive order.
    pub fn geq(&self, other: &GenNumber) -> Result<QPositivity> {
        self.sub(other).is_qpositive()
    }

    pub fn abs(&self) -> Result<GenNumber> {
        self.require_real()?;
        self.try_map(|s| match s.leading() {
            Some((_, c)) if c.re().is_negative() => Ok(s.neg()),
            Some(_) => Ok(s.clone()),
            None if s.is_exact() => Ok(s.clone()),
            None => Err(Error::IndeterminateSign),
        })
    }

    /// `x·conj(x)`, the replacement for `|x|` over the complex field.
    pub fn abs_sq(&self) -> GenNumber {
        self.mul(&self.conj())
    }

    pub fn sqrt(&self, window: &BigRational) -> Result<GenNumber> {
        match self.is_qpositive()? {
            QPositivity::No => return Err(Error::NotQPositive),
            QPositivity::Indeterminate => return Err(Error::IndeterminateSign),
            QPositivity::Yes => {}
        }
        self.try_map(|s| s.sqrt(window))
    }

    /// `e² = e` structurally; only meaningful for exact values.
    pub fn is_idempotent(&self) -> bool {
        self.is_exact() && self.mul(self) == *self
    }

    /// The region `S` with `self = χ_S`, if the value is an idempotent.
    pub fn idempotent_region(&self) -> Option<IndexSet> {
        let all_01 = self.cells.iter().all(|s| s.is_zero() || *s == PuiseuxSeries::one());
        all_01.then(|| self.region_where(|s| !s.is_zero()))
    }
}

/// Checks that regions are pairwise disjoint and cover ℕ.
pub fn check_partition(regions: &[&IndexSet]) -> Result<()> {
    for (i, a) in regions.iter().enumerate() {
        for b in &regions[i + 1..] {
            let overlap = a.intersect(b);
            if !overlap.is_empty() {
                return Err(Error::RegionsNotPartition(format!("{a} and {b} overlap in {overlap}")));
            }
        }
    }
    let union = regions.iter().fold(IndexSet::empty(), |acc, r| acc.union(r));
    if !union.is_full() {
        return Err(Error::RegionsNotPartition(format!("{} is not covered", union.complement())));
    }
    Ok(())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&GenNumber> for &GenNumber {
            type Output = GenNumber;
            fn $method(self, rhs: &GenNumber) -> GenNumber {
                GenNumber::$method(self, rhs)
            }
        }
        impl $trait<GenNumber> for GenNumber {
            type Output = GenNumber;
            fn $method(self, rhs: GenNumber) -> GenNumber {
                GenNumber::$method(&self, &rhs)
            }
        }
        impl $trait<&GenNumber> for GenNumber {
            type Output = GenNumber;
            fn $method(self, rhs: &GenNumber) -> GenNumber {
                GenNumber::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &GenNumber {
    type Output = GenNumber;
    fn neg(self) -> GenNumber {
        GenNumber::neg(self)
    }
}

impl Neg for GenNumber {
    type Output = GenNumber;
    fn neg(self) -> GenNumber {
        GenNumber::neg(&self)
    }
}

impl fmt::Display for GenNumber {
    /// Canonical expression syntax; parsing the output gives the value back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.period() == 1 {
            return write!(f, "{}", SeriesDisplay(&self.cells[0]));
        }
        if let Some(region) = self.idempotent_region() {
            return write!(f, "{region}");
        }
        f.write_str("piece[")?;
        for (i, (region, s)) in self.pieces().into_iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{region}: {}", SeriesDisplay(s))?;
        }
        f.write_str("]")
    }
}

/// Prints a series as `c0 + c1*eps^(q1) - ... + O(eps^(P))`.
pub struct SeriesDisplay<'a>(pub &'a PuiseuxSeries);

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0;
        let mut parts: Vec<String> = s
            .terms()
            .iter()
            .map(|(q, c)| {
                let power = format!("eps^({})", crate::scalar::fmt_rational(q));
                if q.is_zero() {
                    c.to_string()
                } else if c.is_one() {
                    power
                } else if (-c).is_one() {
                    format!("-{power}")
                } else {
                    format!("{c}*{power}")
                }
            })
            .collect();
        if let ExtRational::Finite(p) = s.order() {
            parts.push(format!("O(eps^({}))", crate::scalar::fmt_rational(p)));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, part) in parts.iter().enumerate() {
            match (i, part.strip_prefix('-')) {
                (0, _) => f.write_str(part)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {part}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn w() -> BigRational {
        default_window()
    }

    fn a(r: BigRational) -> GenNumber {
        GenNumber::alpha(r)
    }

    fn chi_evens() -> GenNumber {
        GenNumber::chi(&IndexSet::evens())
    }

    fn chi_odds() -> GenNumber {
        GenNumber::chi(&IndexSet::odds())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(a(int(1)) * a(int(2)), a(int(3)));
        assert_eq!(chi_evens() + chi_odds(), GenNumber::one());
        assert_eq!(a(int(1)) * a(int(-1)), GenNumber::one());
        assert_eq!(a(int(0)), GenNumber::one());
        assert_eq!(GenNumber::chi(&IndexSet::full()), GenNumber::one());
        assert_eq!(chi_evens() * chi_evens(), chi_evens());
        assert!((chi_evens() * chi_odds()).is_zero());
    }

    #[test]
    fn negligibility() {
        assert_eq!(GenNumber::zero().is_negligible(), Negligibility::Yes);
        assert_eq!(GenNumber::chi(&IndexSet::finite([1, 5])).is_negligible(), Negligibility::Yes);
        assert_eq!(GenNumber::big_o(int(5)).is_negligible(), Negligibility::ZeroUpToPrecision);
        assert_eq!(a(int(1)).is_negligible(), Negligibility::No);
    }

    #[test]
    fn valuations() {
        let v = a(rat(3, 2)).valuation();
        assert_eq!(v, Valuation { value: ExtRational::Finite(rat(3, 2)), exact: true });
        let x = chi_evens() * a(int(1)) + chi_odds() * a(int(2));
        assert_eq!(x.valuation(), Valuation { value: ExtRational::Finite(int(1)), exact: true });
        assert_eq!(GenNumber::zero().valuation(), Valuation { value: ExtRational::Infinity, exact: true });
        let o = GenNumber::big_o(int(3));
        assert_eq!(o.valuation(), Valuation { value: ExtRational::Finite(int(3)), exact: false });
        // An uncertain region above the certified minimum does not spoil exactness.
        let mixed = chi_evens() * a(int(1)) + chi_odds() * GenNumber::big_o(int(4));
        assert!(mixed.valuation().exact);
    }

    #[test]
    fn distances() {
        let x = a(int(1)) + chi_odds();
        assert_eq!(x.distance(&x).value, ExtRational::Infinity);
        assert_eq!(a(int(1)).distance(&a(int(2))).value, ExtRational::Finite(int(1)));
        assert_eq!(a(int(2)).sharp_norm().display(), "0.135335");
    }

    #[test]
    fn classification() {
        match a(int(-2)).classify(&w()) {
            Classification::Unit { inverse } => assert_eq!(inverse, a(int(2))),
            other => panic!("{other:?}"),
        }
        match chi_evens().classify(&w()) {
            Classification::ZeroDivisor { witness } => {
                assert_eq!(witness, chi_odds());
                assert!((chi_evens() * &witness).is_zero());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(GenNumber::zero().classify(&w()), Classification::Zero);
        assert_eq!(GenNumber::big_o(int(7)).classify(&w()), Classification::Indeterminate);
    }

    #[test]
    fn inversion() {
        let x = GenNumber::one() + a(int(1));
        let expected = GenNumber::from_series(PuiseuxSeries::new(
            [(int(0), Coeff::one()), (int(1), Coeff::from_int(-1)), (int(2), Coeff::one())],
            ExtRational::Finite(int(3)),
        ));
        assert_eq!(x.invert(&int(3)).unwrap(), expected);
        assert_eq!(a(int(5)).invert(&int(1)).unwrap(), a(int(-5)));
        let y = chi_evens().scale(&Coeff::from_int(2)) + chi_odds();
        let inv = y.invert(&int(4)).unwrap();
        assert_eq!(inv, chi_evens().scale(&Coeff::real(rat(1, 2))) + chi_odds());
        assert!(inv.is_exact());
        assert_eq!(chi_evens().invert(&int(4)), Err(Error::NotAUnit));
    }

    #[test]
    fn order_and_abs() {
        assert_eq!((a(int(1)) - a(int(2))).is_qpositive(), Ok(QPositivity::Yes));
        assert_eq!((chi_evens() - chi_odds()).is_qpositive(), Ok(QPositivity::No));
        assert_eq!(GenNumber::zero().is_qpositive(), Ok(QPositivity::Yes));
        assert_eq!(GenNumber::big_o(int(1)).is_qpositive(), Ok(QPositivity::Indeterminate));
        assert_eq!(GenNumber::from_coeff(Coeff::imaginary_unit()).is_qpositive(), Err(Error::ComplexOrderUndefined));
        assert_eq!((-a(int(1))).abs().unwrap(), a(int(1)));
        assert_eq!((chi_evens() - chi_odds()).abs().unwrap(), GenNumber::one());
        assert_eq!(GenNumber::big_o(int(2)).abs(), Err(Error::IndeterminateSign));
    }

    #[test]
    fn square_roots() {
        assert_eq!(a(int(2)).sqrt(&int(1)).unwrap(), a(int(1)));
        let r = (GenNumber::from_int(4) + a(int(1))).sqrt(&int(2)).unwrap();
        assert_eq!(r.to_string(), "2 + 1/4*eps^(1) + O(eps^(2))");
        assert_eq!(
            chi_evens().scale(&Coeff::from_int(2)).sqrt(&int(4)),
            Err(Error::IrrationalLeadingCoefficient("2".into()))
        );
        assert_eq!((-a(int(1))).sqrt(&int(4)), Err(Error::NotQPositive));
    }

    #[test]
    fn equality_verdicts() {
        assert_eq!((chi_evens() + chi_odds()).equals(&GenNumber::one()), Equality::Equal);
        assert_eq!(a(int(1)).equals(&a(int(2))), Equality::NotEqual);
        let x = a(int(1)) + chi_odds();
        assert_eq!(x.equals(&(&x + &GenNumber::big_o(int(9)))), Equality::EqualUpToPrecision);
    }

    #[test]
    fn units_near_zero_divisors() {
        let x = chi_evens().scale(&Coeff::from_int(3));
        let u = x.unit_near(&int(4)).unwrap();
        assert!(matches!(u.classify(&w()), Classification::Unit { .. }));
        assert!(u.distance(&x).at_least(&int(4)));
        assert_eq!(GenNumber::big_o(int(2)).unit_near(&int(1)), Err(Error::IndeterminateInput));
    }

    #[test]
    fn pieces_partition() {
        let pieces = vec![
            (IndexSet::evens(), PuiseuxSeries::monomial(Coeff::one(), int(1))),
            (IndexSet::odds(), PuiseuxSeries::monomial(Coeff::one(), int(2))),
        ];
        let x = GenNumber::from_pieces(pieces).unwrap();
        assert_eq!(x, chi_evens() * a(int(1)) + chi_odds() * a(int(2)));
        let bad = vec![(IndexSet::evens(), PuiseuxSeries::one())];
        assert!(matches!(GenNumber::from_pieces(bad), Err(Error::RegionsNotPartition(_))));
    }

    #[test]
    fn display_forms() {
        assert_eq!((a(int(1)) + a(int(1))).to_string(), "2*eps^(1)");
        assert_eq!(chi_odds().to_string(), "chi{m=2;T=[1];N=0}");
        assert_eq!((GenNumber::one() - a(rat(1, 2))).to_string(), "1 - eps^(1/2)");
        assert_eq!(GenNumber::big_o(int(3)).to_string(), "O(eps^(3))");
        let x = chi_evens() * a(int(1)) + chi_odds().scale(&Coeff::from_int(2));
        assert_eq!(x.to_string(), "piece[chi{m=2;T=[0];N=0}: eps^(1); chi{m=2;T=[1];N=0}: 2]");
    }
}
