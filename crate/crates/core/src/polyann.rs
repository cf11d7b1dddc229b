//! Multivariate polynomials over `K̄` and their constant annihilators.
//!
//! `K̄` is commutative and reduced, so `b` kills `f·K̄[x]` exactly when it kills
//! every coefficient of `f`. The largest such idempotent is `χ_Z`, `Z` the
//! complement of the union of coefficient supports; any nonzero polynomial
//! annihilator therefore yields this nonzero constant one.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gennum::GenNumber;
use crate::ideals::FgIdeal;

type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, GenNumber>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// `a·L(u) = 0` for every `u` while `a·f ≠ 0`: `L(u) = f` has no solution.
    Unsolvable,
    NoVerdict,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: GenNumber) -> MultiPoly {
        MultiPoly::from_terms(nvars, [(vec![0; nvars], c)]).expect("arity matches")
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> MultiPoly {
        let mut e = vec![0; nvars];
        e[index] = 1;
        MultiPoly::from_terms(nvars, [(e, GenNumber::one())]).expect("arity matches")
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, GenNumber)>) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch(nvars, e.len()));
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: &GenNumber) {
        let sum = match self.terms.get(&e) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, GenNumber> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.terms.values().all(GenNumber::is_exact)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &GenNumber> {
        self.terms.values()
    }

    fn check_arity(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.nvars, other.nvars))
        }
    }

    pub fn padd(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn pmul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, r: &GenNumber) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &(c * r));
        }
        out
    }

    /// The same polynomial in a ring with more variables.
    pub fn embed(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars, "cannot embed into fewer variables");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(nvars, 0);
                (e, c.clone())
            })
            .collect();
        MultiPoly { nvars, terms }
    }

    /// Views `f ∈ R[x₁..x_{n-1}][x_n]`: the coefficient polynomials of
    /// `x_n^0, x_n^1, …`.
    pub fn coefficients_in_last_variable(&self) -> Vec<MultiPoly> {
        assert!(self.nvars >= 1);
        let inner = self.nvars - 1;
        let degree = self.terms.keys().map(|e| e[inner]).max().unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(inner); degree + 1];
        for (e, c) in &self.terms {
            out[e[inner] as usize].add_term(e[..inner].to_vec(), c);
        }
        out
    }

    /// The largest idempotent constant `b` with `b·f = 0`.
    pub fn ann_constant(&self) -> Result<GenNumber> {
        if !self.is_exact() {
            return Err(Error::InexactCoefficient);
        }
        let mut gens: Vec<GenNumber> = self.coefficients().cloned().collect();
        if gens.is_empty() {
            gens.push(GenNumber::zero());
        }
        Ok(FgIdeal::new(gens).expect("exact coefficients").annihilator_idempotent())
    }

    /// Constant annihilator computed one variable at a time through
    /// `R[x₁..x_{n-1}][x_n]`: the intersection (product of idempotents) of the
    /// annihilators of the coefficient polynomials.
    pub fn ann_constant_iterated(&self) -> Result<GenNumber> {
        if self.nvars == 0 {
            return self.ann_constant();
        }
        self.coefficients_in_last_variable()
            .iter()
            .try_fold(GenNumber::one(), |acc, c| Ok(acc * c.ann_constant_iterated()?))
    }

    /// `b·c = 0` for every coefficient `c`.
    pub fn annihilated_coefficientwise(&self, b: &GenNumber) -> bool {
        self.coefficients().all(|c| (c * b).is_zero())
    }

    /// `f·h·b = 0` for `trials` random polynomials `h`.
    pub fn annihilated_in_sandwich(&self, b: &GenNumber, trials: usize, rng: &mut impl Rng) -> bool {
        let constant = MultiPoly::constant(self.nvars, b.clone());
        (0..trials).all(|_| {
            let h = crate::testing::random_multipoly(rng, self.nvars, 3, 2);
            let fh = self.pmul(&h).expect("same arity");
            fh.pmul(&constant).expect("same arity").is_zero()
        })
    }

    /// Coefficientwise check, then the polynomial sandwich check; both must
    /// agree for the annihilator to be accepted.
    pub fn verify_annihilator(&self, b: &GenNumber, trials: usize, rng: &mut impl Rng) -> bool {
        let coefficientwise = self.annihilated_coefficientwise(b);
        let sandwich = self.annihilated_in_sandwich(b, trials, rng);
        coefficientwise && sandwich
    }
}

/// Pointwise obstruction for `L(u) = target` where `a` annihilates the
/// coefficients of the operator symbol `symbol`.
pub fn operator_obstruction(a: &GenNumber, symbol: &MultiPoly, target: &MultiPoly) -> Result<Obstruction> {
    if !a.is_exact() {
        return Err(Error::InexactInput);
    }
    if a.is_zero() {
        return Err(Error::PreconditionFailed("annihilator must be nonzero".into()));
    }
    if !symbol.annihilated_coefficientwise(a) {
        return Err(Error::PreconditionFailed(format!("{a} does not annihilate the operator coefficients")));
    }
    symbol.check_arity(target)?;
    Ok(if target.scale(a).is_zero() { Obstruction::NoVerdict } else { Obstruction::Unsolvable })
}

impl fmt::Display for MultiPoly {
    /// Terms in graded lexicographic order, highest first, as
    /// `(<coeff>)*x1^a*x2^b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, e) in keys.into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({})", self.terms[e])?;
            for (v, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{}", v + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epsset::IndexSet;
    use crate::scalar::int;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn chi_a() -> GenNumber {
        GenNumber::chi(&IndexSet::evens())
    }

    fn chi_ac() -> GenNumber {
        GenNumber::chi(&IndexSet::odds())
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    fn c(v: GenNumber) -> MultiPoly {
        MultiPoly::constant(2, v)
    }

    #[test]
    fn arithmetic() {
        let p = x(0).pmul(&x(1)).unwrap();
        assert_eq!(p, MultiPoly::from_terms(2, [(vec![1, 1], GenNumber::one())]).unwrap());
        let f = x(0).scale(&chi_a());
        let g = x(1).scale(&chi_ac());
        assert!(f.pmul(&g).unwrap().is_zero());
        let s = x(0).padd(&x(1)).unwrap().scale(&GenNumber::alpha(int(1)));
        let expected = x(0).scale(&GenNumber::alpha(int(1))).padd(&x(1).scale(&GenNumber::alpha(int(1)))).unwrap();
        assert_eq!(s, expected);
        assert_eq!(x(0).padd(&MultiPoly::var(3, 0)), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn constant_annihilators() {
        let f = c(chi_a()).padd(&x(0).pmul(&x(1)).unwrap().scale(&chi_a())).unwrap();
        assert_eq!(f.ann_constant().unwrap(), chi_ac());
        let g = c(GenNumber::one()).padd(&x(0)).unwrap();
        assert!(g.ann_constant().unwrap().is_zero());
        let a = IndexSet::periodic(3, [0, 1]).unwrap();
        let b = IndexSet::periodic(3, [1, 2]).unwrap();
        let h = x(0).scale(&GenNumber::chi(&a)).padd(&x(1).scale(&GenNumber::chi(&b))).unwrap();
        assert!(h.ann_constant().unwrap().is_zero());
        assert_eq!(MultiPoly::zero(2).ann_constant().unwrap(), GenNumber::one());
        assert_eq!(c(GenNumber::big_o(int(1))).ann_constant(), Err(Error::InexactCoefficient));
    }

    #[test]
    fn annihilator_verification() {
        let mut rng = StdRng::seed_from_u64(7);
        let f = c(chi_a()).padd(&x(0).scale(&chi_a())).unwrap();
        assert!(f.verify_annihilator(&chi_ac(), 50, &mut rng));
        let g = c(GenNumber::one()).padd(&x(0)).unwrap();
        assert!(!g.verify_annihilator(&chi_a(), 5, &mut rng));
        assert!(MultiPoly::zero(2).verify_annihilator(&GenNumber::from_int(3), 5, &mut rng));
    }

    #[test]
    fn iterated_view_agrees() {
        let f = c(chi_a()).padd(&x(0).pmul(&x(1)).unwrap().scale(&chi_a())).unwrap();
        assert_eq!(f.ann_constant_iterated().unwrap(), f.ann_constant().unwrap());
        assert_eq!(f.embed(3).ann_constant().unwrap(), f.ann_constant().unwrap());
        let parts = f.coefficients_in_last_variable();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1], MultiPoly::var(1, 0).scale(&chi_a()));
    }

    #[test]
    fn obstructions() {
        let lf = x(0).scale(&chi_a());
        assert_eq!(operator_obstruction(&chi_ac(), &lf, &c(GenNumber::one())), Ok(Obstruction::Unsolvable));
        assert_eq!(operator_obstruction(&chi_ac(), &lf, &c(chi_a())), Ok(Obstruction::NoVerdict));
        assert!(matches!(operator_obstruction(&GenNumber::zero(), &lf, &c(GenNumber::one())), Err(Error::PreconditionFailed(_))));
        assert!(matches!(operator_obstruction(&chi_a(), &lf, &c(GenNumber::one())), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn display_in_graded_order() {
        let f = c(chi_a()).padd(&x(0).pmul(&x(1)).unwrap()).unwrap().padd(&x(1).scale(&GenNumber::from_int(2))).unwrap();
        assert_eq!(f.to_string(), "(1)*x1*x2, (2)*x2, (chi{m=2;T=[0];N=0})");
    }
}
