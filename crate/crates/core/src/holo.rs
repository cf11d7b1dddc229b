//! Generalized polynomials over `ℂ̄` and the identity-theorem criterion.
//!
//! `C_f(z₀)` is the ideal generated by the Taylor coefficients of `f` at `z₀`
//! of order at least one. When it has a nonzero annihilating idempotent `e`,
//! the points `x_n = z₀ + e·α_n` converge sharply to `z₀` and all satisfy
//! `f(x_n) = f(z₀)`, so `f` fails the identity theorem. Density of `C_f(z₀)` is
//! only a necessary condition; a dense verdict is labelled as such.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::gennum::{Classification, GenNumber, Negligibility};
use crate::ideals::FgIdeal;
use crate::scalar::Coeff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPolynomial {
    coeffs: Vec<GenNumber>,
}

/// `x_n = z₀ + e·α_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleSequence {
    pub base: GenNumber,
    pub idempotent: GenNumber,
}

impl CounterexampleSequence {
    pub fn term(&self, n: &BigRational) -> GenNumber {
        &self.base + &(&self.idempotent * &GenNumber::alpha(n.clone()))
    }

    pub fn describe(&self) -> String {
        format!("x_n = {} + ({})*alpha(n)", self.base, self.idempotent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityVerdict {
    /// `C_f(z₀)` has zero annihilator. Necessary for the identity theorem,
    /// not a proof of it.
    DenseNecessaryConditionHolds,
    Counterexample {
        idempotent: GenNumber,
        sequence: CounterexampleSequence,
        /// Sample indices at which the sequence was checked.
        verified_n: Vec<BigRational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticVerdict {
    /// `a₁, a₂` units with `V(a₁⁻¹a₂) > 0`: `z₀` is the only solution of
    /// `p(z) = p(z₀)` in the closed unit ball. Also returned for a linear `p`
    /// with unit slope, where the solution is unique everywhere.
    UniqueInUnitBall { ratio_valuation: Option<BigRational> },
    /// `a₁` unit and `e·a₂ = 0` for the nonzero idempotent `e`.
    IdempotentKillsQuadratic { idempotent: GenNumber },
    Inconclusive { reason: String },
}

impl QuadraticVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            QuadraticVerdict::UniqueInUnitBall { .. } => "unique_in_unit_ball",
            QuadraticVerdict::IdempotentKillsQuadratic { .. } => "idempotent_kills_quadratic",
            QuadraticVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::from(1);
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

impl GenPolynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial keeps a
    /// single zero coefficient.
    pub fn new(mut coeffs: Vec<GenNumber>) -> GenPolynomial {
        while coeffs.len() > 1 && coeffs.last().is_some_and(GenNumber::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(GenNumber::zero());
        }
        GenPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[GenNumber] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(GenNumber::is_exact)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &GenNumber) -> GenNumber {
        self.coeffs.iter().rev().fold(GenNumber::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn derivative(&self) -> GenPolynomial {
        GenPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Coeff::from_int(k as i64)))
                .collect(),
        )
    }

    /// Coefficients of `w ↦ f(z₀ + w)`: `b_k = Σ_{j≥k} C(j,k) a_j z₀^{j-k}`.
    pub fn taylor_shift(&self, z0: &GenNumber) -> GenPolynomial {
        let d = self.coeffs.len();
        let powers: Vec<GenNumber> = std::iter::successors(Some(GenNumber::one()), |p| Some(p * z0)).take(d).collect();
        GenPolynomial::new(
            (0..d)
                .map(|k| {
                    (k..d).fold(GenNumber::zero(), |acc, j| {
                        let c = Coeff::real(BigRational::from_integer(binomial(j, k)));
                        acc + (&self.coeffs[j] * &powers[j - k]).scale(&c)
                    })
                })
                .collect(),
        )
    }

    /// The ideal generated by the Taylor coefficients of order `≥ 1`.
    pub fn cf_ideal(&self, z0: &GenNumber) -> FgIdeal {
        let shifted = self.taylor_shift(z0);
        let gens: Vec<GenNumber> = shifted.coeffs.into_iter().skip(1).collect();
        let gens = if gens.is_empty() { vec![GenNumber::zero()] } else { gens };
        FgIdeal::new(gens).expect("exact inputs give exact Taylor coefficients")
    }

    fn check_point(&self, z0: &GenNumber) -> Result<()> {
        if !self.is_exact() || !z0.is_exact() {
            return Err(Error::InexactInput);
        }
        if z0.valuation().value.cmp_rational(&BigRational::from_integer(0.into())).is_lt() {
            return Err(Error::UnboundedPoint(z0.to_string()));
        }
        Ok(())
    }

    pub fn identity_check(&self, z0: &GenNumber, verify_n: &[BigRational]) -> Result<IdentityVerdict> {
        self.check_point(z0)?;
        let ideal = self.cf_ideal(z0);
        if ideal.is_dense() {
            return Ok(IdentityVerdict::DenseNecessaryConditionHolds);
        }
        let e = ideal.annihilator_idempotent();
        for n in verify_n {
            if !self.verify_counterexample(z0, &e, n)? {
                return Err(Error::PreconditionFailed(format!("counterexample sequence fails at n = {n}")));
            }
        }
        Ok(IdentityVerdict::Counterexample {
            idempotent: e.clone(),
            sequence: CounterexampleSequence { base: z0.clone(), idempotent: e },
            verified_n: verify_n.to_vec(),
        })
    }

    /// `f(z₀ + e·α_n) − f(z₀)` is exactly zero while `e·α_n` is nonzero with
    /// valuation `n`.
    pub fn verify_counterexample(&self, z0: &GenNumber, e: &GenNumber, n: &BigRational) -> Result<bool> {
        if !e.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let step = e * &GenNumber::alpha(n.clone());
        let moved = self.eval(&(z0 + &step)) - self.eval(z0);
        let valuation = step.valuation();
        Ok(moved.is_negligible() == Negligibility::Yes
            && step.is_negligible() == Negligibility::No
            && valuation.exact
            && valuation.value.cmp_rational(n).is_eq())
    }

    pub fn quadratic_unique_solution_check(&self, z0: &GenNumber, window: &BigRational) -> Result<QuadraticVerdict> {
        if self.degree() > 2 {
            return Err(Error::DegreeTooHigh(self.degree()));
        }
        self.check_point(z0)?;
        let coeff = |k: usize| self.coeffs.get(k).cloned().unwrap_or_else(GenNumber::zero);
        let (a1, a2) = (coeff(1), coeff(2));
        let Classification::Unit { inverse: a1_inv } = a1.classify(window) else {
            return Ok(QuadraticVerdict::Inconclusive { reason: "a1 is not a unit".into() });
        };
        if a2.is_zero() {
            return Ok(QuadraticVerdict::UniqueInUnitBall { ratio_valuation: None });
        }
        if let Classification::Unit { .. } = a2.classify(window) {
            let ratio = &a1_inv * &a2;
            let v = ratio.valuation();
            let v = match (&v.value, v.exact) {
                (crate::scalar::ExtRational::Finite(v), true) => v.clone(),
                _ => return Ok(QuadraticVerdict::Inconclusive { reason: "valuation of a1^-1 a2 not certified".into() }),
            };
            if v <= BigRational::from_integer(0.into()) {
                return Ok(QuadraticVerdict::Inconclusive {
                    reason: format!("V(a1^-1 a2) = {v} does not certify ||a1^-1 a2|| < 1/2"),
                });
            }
            // With V(z), V(z0) ≥ 0 the factor 1 + a1⁻¹a2(z + z0) has constant
            // leading term 1 on every region; check it at z = z0.
            let factor = GenNumber::one() + &ratio * &(z0 + z0);
            if !matches!(factor.classify(window), Classification::Unit { .. }) {
                return Ok(QuadraticVerdict::Inconclusive { reason: "unit factor not certified".into() });
            }
            return Ok(QuadraticVerdict::UniqueInUnitBall { ratio_valuation: Some(v) });
        }
        let e = FgIdeal::new(vec![a2]).map_err(|_| Error::InexactInput)?.annihilator_idempotent();
        if e.is_zero() {
            return Ok(QuadraticVerdict::Inconclusive { reason: "a2 has no annihilating idempotent".into() });
        }
        Ok(QuadraticVerdict::IdempotentKillsQuadratic { idempotent: e })
    }
}
