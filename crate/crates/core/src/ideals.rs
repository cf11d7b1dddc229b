//! Finitely generated ideals of `K̄` and `H̄`.
//!
//! For exact generators every question reduces to the support of the ideal,
//! the union of regions where some generator has a nonzero series:
//!
//! * the largest idempotent annihilating the ideal is `χ_Z`, `Z` the
//!   complement of the support;
//! * the ideal has zero annihilator ("dense" in the algebraic sense) iff the
//!   support is everything, which is also when it is the whole ring;
//! * `y ∈ I` iff `supp(y) ⊆ supp(I)`. On each region of the support pick a
//!   generator `g` that is nonzero there; `y/g` is again a Puiseux series with
//!   a moderate representative, so `y = Σ g_i z_i` with `z_i` the regionwise
//!   quotients. Off the support every element of `I` vanishes.
//!
//! Quaternion ideals are handled through the norm ideal generated by
//! `norm_sq(g)`, which has the same support as the ideal generated by the
//! norms themselves.

use num_rational::BigRational;

use crate::epsset::IndexSet;
use crate::error::{Error, Result};
use crate::gennum::{Classification, Field, GenNumber};
use crate::quat::GenQuaternion;
use crate::series::PuiseuxSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgIdeal {
    generators: Vec<GenNumber>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatFgIdeal {
    generators: Vec<GenQuaternion>,
}

impl FgIdeal {
    pub fn new(generators: Vec<GenNumber>) -> Result<FgIdeal> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.iter().any(|g| !g.is_exact()) {
            return Err(Error::InexactGenerator);
        }
        Ok(FgIdeal { generators })
    }

    pub fn generators(&self) -> &[GenNumber] {
        &self.generators
    }

    pub fn support(&self) -> IndexSet {
        self.generators.iter().fold(IndexSet::empty(), |acc, g| acc.union(&g.support()))
    }

    /// `χ_Z` for the largest region `Z` on which every generator vanishes.
    pub fn annihilator_idempotent(&self) -> GenNumber {
        GenNumber::chi(&self.support().complement())
    }

    /// Zero annihilator.
    pub fn is_dense(&self) -> bool {
        self.annihilator_idempotent().is_zero()
    }

    /// `Σ |g_i|` (or `Σ g_i ḡ_i` over ℂ) is a unit.
    pub fn is_whole_ring(&self, window: &BigRational) -> bool {
        let sum = self.generators.iter().fold(GenNumber::zero(), |acc, g| {
            let size = match g.field() {
                Field::Real => g.abs().expect("exact real generators have a determinate sign"),
                Field::Complex => g.abs_sq(),
            };
            acc + size
        });
        matches!(sum.classify(window), Classification::Unit { .. })
    }

    pub fn contains(&self, y: &GenNumber) -> Result<bool> {
        if !y.is_exact() {
            return Err(Error::InexactElement);
        }
        Ok(y.support().is_subset(&self.support()))
    }

    /// Cofactors `z_i` with `y ≈ Σ g_i z_i`, accurate to relative order
    /// `window` on every region. `None` when `y ∉ I`.
    pub fn membership_cofactors(&self, y: &GenNumber, window: &BigRational) -> Result<Option<Vec<GenNumber>>> {
        if !self.contains(y)? {
            return Ok(None);
        }
        let period = self.generators.iter().fold(y.period(), |acc, g| num_integer::lcm(acc, g.period()));
        let mut cells: Vec<Vec<PuiseuxSeries>> = vec![vec![PuiseuxSeries::zero(); period]; self.generators.len()];
        for r in 0..period as u64 {
            let target = y.series_at(r);
            if target.is_zero() {
                continue;
            }
            let (idx, g) = self
                .generators
                .iter()
                .enumerate()
                .find(|(_, g)| !g.series_at(r).is_zero())
                .expect("support inclusion checked");
            let inv = g.series_at(r).invert(window).expect("nonzero exact series");
            cells[idx][r as usize] = target.mul(&inv);
        }
        Ok(Some(cells.into_iter().map(GenNumber::from_cells).collect()))
    }
}

impl QuatFgIdeal {
    pub fn new(generators: Vec<GenQuaternion>) -> Result<QuatFgIdeal> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.iter().any(|g| !g.is_exact()) {
            return Err(Error::InexactGenerator);
        }
        Ok(QuatFgIdeal { generators })
    }

    pub fn generators(&self) -> &[GenQuaternion] {
        &self.generators
    }

    pub fn norm_ideal(&self) -> FgIdeal {
        FgIdeal::new(self.generators.iter().map(GenQuaternion::norm_sq).collect()).expect("norms of exact generators are exact")
    }

    pub fn is_dense(&self) -> bool {
        self.norm_ideal().is_dense()
    }

    /// Central idempotent `χ_Z` with `g·χ_Z = χ_Z·g = 0` for every generator,
    /// so the ideal sits inside `H̄·(1 − χ_Z)`.
    pub fn annihilator(&self) -> GenNumber {
        self.norm_ideal().annihilator_idempotent()
    }

    /// The quaternion ideal generated by the norm ideal, after checking that
    /// every component of every generator lies in the norm ideal.
    pub fn hull(&self) -> Result<QuatFgIdeal> {
        let norms = self.norm_ideal();
        for g in &self.generators {
            for part in g.parts() {
                if !norms.contains(part)? {
                    return Err(Error::ContainmentViolation(part.to_string()));
                }
            }
        }
        QuatFgIdeal::new(norms.generators.into_iter().map(|n| GenQuaternion::from_real(n).expect("norms are real")).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gennum::default_window;
    use crate::scalar::{int, Coeff};

    fn chi_a() -> GenNumber {
        GenNumber::chi(&IndexSet::periodic(3, [0, 1]).unwrap())
    }

    fn chi_ac() -> GenNumber {
        GenNumber::chi(&IndexSet::periodic(3, [2]).unwrap())
    }

    fn alpha(n: i64) -> GenNumber {
        GenNumber::alpha(int(n))
    }

    fn ideal(gens: Vec<GenNumber>) -> FgIdeal {
        FgIdeal::new(gens).unwrap()
    }

    #[test]
    fn annihilators() {
        let i = ideal(vec![alpha(1) * chi_a(), alpha(2) * chi_a()]);
        assert_eq!(i.annihilator_idempotent(), chi_ac());
        assert!(ideal(vec![GenNumber::one()]).annihilator_idempotent().is_zero());
        assert!(ideal(vec![chi_a(), chi_ac()]).annihilator_idempotent().is_zero());
    }

    #[test]
    fn density() {
        assert!(ideal(vec![chi_a(), chi_ac() * alpha(1)]).is_dense());
        assert!(!ideal(vec![chi_a()]).is_dense());
        assert!(ideal(vec![alpha(7)]).is_dense());
    }

    #[test]
    fn whole_ring() {
        let w = default_window();
        assert!(ideal(vec![chi_a(), chi_ac()]).is_whole_ring(&w));
        assert!(ideal(vec![alpha(1) * chi_a(), chi_ac()]).is_whole_ring(&w));
        assert!(!ideal(vec![chi_a()]).is_whole_ring(&w));
        let complex = GenNumber::from_coeff(Coeff::imaginary_unit());
        assert!(ideal(vec![complex]).is_whole_ring(&w));
    }

    #[test]
    fn membership() {
        let w = default_window();
        let i = ideal(vec![chi_a()]);
        assert!(i.contains(&(alpha(9) * chi_a())).unwrap());
        assert!(!i.contains(&chi_ac()).unwrap());
        let j = ideal(vec![alpha(1)]);
        assert!(j.contains(&GenNumber::one()).unwrap());
        let z = j.membership_cofactors(&GenNumber::one(), &w).unwrap().unwrap();
        assert_eq!(z, vec![alpha(-1)]);
        assert_eq!(i.contains(&GenNumber::big_o(int(1))), Err(Error::InexactElement));
    }

    #[test]
    fn cofactors_reconstruct_the_element() {
        let w = default_window();
        let g1 = chi_a() * (GenNumber::one() + alpha(1));
        let g2 = chi_ac() * alpha(2);
        let i = ideal(vec![g1.clone(), g2.clone()]);
        let y = alpha(3) + GenNumber::from_int(2);
        let z = i.membership_cofactors(&y, &w).unwrap().unwrap();
        let back = &g1 * &z[0] + &g2 * &z[1];
        assert!(back.distance(&y).at_least(&w));
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(FgIdeal::new(vec![]), Err(Error::EmptyGenerators));
        assert_eq!(FgIdeal::new(vec![GenNumber::big_o(int(2))]), Err(Error::InexactGenerator));
    }

    fn quat(a: GenNumber, b: GenNumber) -> GenQuaternion {
        GenQuaternion::new(a, b, GenNumber::zero(), GenNumber::zero()).unwrap()
    }

    #[test]
    fn norm_ideals() {
        let i = QuatFgIdeal::new(vec![quat(chi_a(), chi_a())]).unwrap();
        assert_eq!(i.norm_ideal(), ideal(vec![chi_a().scale(&Coeff::from_int(2))]));
        let i = QuatFgIdeal::new(vec![GenQuaternion::i()]).unwrap();
        assert_eq!(i.norm_ideal(), ideal(vec![GenNumber::one()]));
        let i = QuatFgIdeal::new(vec![GenQuaternion::zero()]).unwrap();
        assert_eq!(i.norm_ideal(), ideal(vec![GenNumber::zero()]));
    }

    #[test]
    fn quaternion_density() {
        let x = quat(chi_a(), chi_a());
        let i = QuatFgIdeal::new(vec![x.clone()]).unwrap();
        assert!(!i.is_dense());
        let e = i.annihilator();
        assert_eq!(e, chi_ac());
        assert!(x.scale(&e).is_zero());
        assert!(QuatFgIdeal::new(vec![quat(GenNumber::one(), GenNumber::one())]).unwrap().is_dense());
        let mixed = QuatFgIdeal::new(vec![
            GenQuaternion::from_real(chi_a()).unwrap(),
            GenQuaternion::j().scale(&chi_ac()),
        ])
        .unwrap();
        assert!(mixed.is_dense());
    }

    #[test]
    fn hulls() {
        let i = QuatFgIdeal::new(vec![quat(chi_a(), chi_a())]).unwrap();
        let h = i.hull().unwrap();
        assert_eq!(h.generators(), &[GenQuaternion::from_real(chi_a().scale(&Coeff::from_int(2))).unwrap()]);
        let zero = QuatFgIdeal::new(vec![GenQuaternion::zero()]).unwrap();
        assert_eq!(zero.hull().unwrap().generators(), &[GenQuaternion::zero()]);
        let one_k = QuatFgIdeal::new(vec![GenQuaternion::one() + GenQuaternion::k()]).unwrap();
        let h = one_k.hull().unwrap();
        assert_eq!(h.generators(), &[GenQuaternion::from_real(GenNumber::from_int(2)).unwrap()]);
        assert!(h.is_dense());
    }
}
