//! Random generators for exact values, shared by the property suites and the
//! `selftest` command.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::epsset::IndexSet;
use crate::gennum::GenNumber;
use crate::polyann::MultiPoly;
use crate::quat::GenQuaternion;
use crate::scalar::{rat, Coeff, ExtRational};
use crate::series::PuiseuxSeries;

#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Candidate periods for the region partition.
    pub periods: Vec<usize>,
    /// Candidate exponent denominators.
    pub exponent_denominators: Vec<i64>,
    /// Exponents are drawn from `[lo, hi]`.
    pub exponent_range: (i64, i64),
    pub max_terms: usize,
    /// Probability that a region's series is exactly zero.
    pub zero_probability: f64,
    pub complex: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            periods: vec![1, 2, 3, 4],
            exponent_denominators: vec![1, 2, 3],
            exponent_range: (-3, 3),
            max_terms: 3,
            zero_probability: 0.25,
            complex: false,
        }
    }
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> BigRational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-5..=5);
    }
    rat(n, rng.gen_range(1..=3))
}

pub fn random_coeff(rng: &mut impl Rng, complex: bool) -> Coeff {
    if complex && rng.gen_bool(0.5) {
        let re = if rng.gen_bool(0.3) { rat(0, 1) } else { random_nonzero_rational(rng) };
        Coeff::new(re, random_nonzero_rational(rng))
    } else {
        Coeff::real(random_nonzero_rational(rng))
    }
}

pub fn random_exponent(rng: &mut impl Rng, cfg: &GenConfig) -> BigRational {
    let d = *cfg.exponent_denominators.choose(rng).expect("nonempty");
    let (lo, hi) = cfg.exponent_range;
    rat(rng.gen_range(lo * d..=hi * d), d)
}

/// An exact series with between one and `max_terms` terms.
pub fn random_nonzero_series(rng: &mut impl Rng, cfg: &GenConfig) -> PuiseuxSeries {
    let count = rng.gen_range(1..=cfg.max_terms.max(1));
    let terms: Vec<_> = (0..count).map(|_| (random_exponent(rng, cfg), random_coeff(rng, cfg.complex))).collect();
    let s = PuiseuxSeries::new(terms, ExtRational::Infinity);
    if s.is_termless() {
        PuiseuxSeries::one()
    } else {
        s
    }
}

pub fn random_series(rng: &mut impl Rng, cfg: &GenConfig) -> PuiseuxSeries {
    if rng.gen_bool(cfg.zero_probability) {
        PuiseuxSeries::zero()
    } else {
        random_nonzero_series(rng, cfg)
    }
}

pub fn random_gennum_with_period(rng: &mut impl Rng, period: usize, cfg: &GenConfig) -> GenNumber {
    GenNumber::from_cells((0..period).map(|_| random_series(rng, cfg)).collect())
}

/// A random exact generalized number.
pub fn random_gennum(rng: &mut impl Rng, cfg: &GenConfig) -> GenNumber {
    let period = *cfg.periods.choose(rng).expect("nonempty");
    random_gennum_with_period(rng, period, cfg)
}

/// A random idempotent `χ_S` with `S` periodic of one of the configured periods.
pub fn random_idempotent(rng: &mut impl Rng, cfg: &GenConfig) -> GenNumber {
    GenNumber::chi(&random_periodic_set(rng, cfg))
}

pub fn random_periodic_set(rng: &mut impl Rng, cfg: &GenConfig) -> IndexSet {
    let m = *cfg.periods.choose(rng).expect("nonempty") as u64;
    IndexSet::periodic(m, (0..m).filter(|_| rng.gen_bool(0.5))).unwrap()
}

/// Random raw constructor data `(m, T, N, ins, outs)` satisfying the
/// constructor preconditions.
pub fn random_index_set_data(rng: &mut impl Rng) -> (u64, Vec<u64>, u64, Vec<u64>, Vec<u64>) {
    let m = rng.gen_range(1..=6);
    let residues: Vec<u64> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
    let threshold = rng.gen_range(0..=8);
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for n in 0..threshold {
        match rng.gen_range(0..4) {
            0 => ins.push(n),
            1 => outs.push(n),
            _ => {}
        }
    }
    (m, residues, threshold, ins, outs)
}

pub fn random_index_set(rng: &mut impl Rng) -> IndexSet {
    let (m, t, n, ins, outs) = random_index_set_data(rng);
    IndexSet::make_periodic(m, t, n, ins, outs).unwrap()
}

pub fn random_quaternion(rng: &mut impl Rng, cfg: &GenConfig) -> GenQuaternion {
    let real = GenConfig { complex: false, ..cfg.clone() };
    GenQuaternion::from_parts(std::array::from_fn(|_| random_gennum(rng, &real))).expect("real components")
}

/// Random polynomial with up to `max_terms` terms of partial degree at most
/// `max_degree`, coefficients drawn from the default configuration.
pub fn random_multipoly(rng: &mut impl Rng, nvars: usize, max_terms: usize, max_degree: u32) -> MultiPoly {
    random_multipoly_with(rng, nvars, max_terms, max_degree, &GenConfig::default())
}

pub fn random_multipoly_with(rng: &mut impl Rng, nvars: usize, max_terms: usize, max_degree: u32, cfg: &GenConfig) -> MultiPoly {
    let count = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_degree)).collect();
            (e, random_gennum(rng, cfg))
        })
        .collect();
    MultiPoly::from_terms(nvars, terms).expect("arity matches")
}
