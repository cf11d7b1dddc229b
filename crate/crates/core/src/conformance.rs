//! Seeded conformance suites. Each suite checks one family of laws on
//! randomized or exhaustive inputs and reports a case count and the first
//! failure, if any. Used by the `selftest` command and the acceptance tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::epsset::IndexSet;
use crate::gennum::{default_window, Classification, GenNumber, Negligibility};
use crate::holo::{GenPolynomial, IdentityVerdict, QuadraticVerdict};
use crate::ideals::{FgIdeal, QuatFgIdeal};
use crate::polyann::{operator_obstruction, MultiPoly, Obstruction};
use crate::quat::{GenQuaternion, QuatClassification};
use crate::scalar::{int, ln_rational, rat, ExtRational};
use crate::testing::{random_gennum, random_gennum_with_period, random_multipoly_with, random_periodic_set, random_quaternion, GenConfig};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub detail: String,
}

impl SuiteOutcome {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("[{status}] {:>2}. {} ({} cases, {} failures)", self.id, self.name, self.cases, self.failures);
        if !self.detail.is_empty() {
            line.push_str(": ");
            line.push_str(&self.detail);
        }
        line
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    fn finish(self, id: u32, name: &'static str) -> SuiteOutcome {
        SuiteOutcome {
            id,
            name,
            passed: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            detail: self.first.unwrap_or_default(),
        }
    }
}

pub const SUITE_NAMES: [&str; 11] = [
    "ultrametric inequality",
    "alpha_r norm law",
    "unit / zero-divisor dichotomy",
    "constructive unit density",
    "quaternion norm laws",
    "topology equivalence with mesh oracle",
    "quaternion idempotent rigidity",
    "ideal collapse",
    "norm-ideal transfer",
    "identity theorem examples",
    "constant annihilators",
];

pub fn run_suite(id: u32) -> Option<SuiteOutcome> {
    let name = *SUITE_NAMES.get((id as usize).checked_sub(1)?)?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0000 + id as u64);
    let tally = match id {
        1 => ultrametric(&mut rng),
        2 => alpha_law(&mut rng),
        3 => dichotomy(&mut rng),
        4 => unit_density(&mut rng),
        5 => quaternion_norms(&mut rng),
        6 => topology(&mut rng),
        7 => idempotent_rigidity(),
        8 => ideal_collapse(&mut rng),
        9 => norm_ideal_transfer(&mut rng),
        10 => identity_theorem(),
        11 => mccoy(&mut rng),
        _ => return None,
    };
    Some(tally.finish(id, name))
}

/// Runs suites 1 to 11 on separate threads; results come back in suite order.
pub fn run_all() -> Vec<SuiteOutcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=11).map(|id| s.spawn(move || run_suite(id).expect("known suite"))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    })
}

/// Quaternion inputs for the inversion-heavy suites: periods dividing 4 and
/// half-integer exponents keep a window-16 inverse at 32 lattice terms.
fn quaternion_config() -> GenConfig {
    GenConfig { periods: vec![1, 2, 4], exponent_denominators: vec![1, 2], ..GenConfig::default() }
}

fn mixed_config(rng: &mut StdRng) -> GenConfig {
    GenConfig { complex: rng.gen_bool(0.5), ..GenConfig::default() }
}

fn ultrametric(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..1000 {
        let cfg = mixed_config(rng);
        let (x, y, z) = (random_gennum(rng, &cfg), random_gennum(rng, &cfg), random_gennum(rng, &cfg));
        t.case();
        let (dxz, dxy, dyz) = (x.distance(&z), x.distance(&y), y.distance(&z));
        let bound = dxy.value.clone().min(dyz.value.clone());
        t.check(dxz.value >= bound, || format!("d({x}, {z}) = {} below min({}, {})", dxz.value, dxy.value, dyz.value));
        t.check(dxy == y.distance(&x), || format!("asymmetric distance for {x}, {y}"));
        t.check(x.distance(&x).value.is_infinite(), || format!("d(x, x) finite for {x}"));
    }
    t
}

fn alpha_law(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..100 {
        let cfg = mixed_config(rng);
        let r = rat(rng.gen_range(-40..=40), rng.gen_range(1..=7));
        let x = random_gennum(rng, &cfg);
        t.case();
        let lhs = (GenNumber::alpha(r.clone()) * &x).valuation();
        let rhs = &ExtRational::Finite(r.clone()) + &x.valuation().value;
        t.check(lhs.value == rhs, || format!("V(alpha({r})*{x}) = {} but r + V(x) = {rhs}", lhs.value));
        t.check(GenNumber::alpha(r.clone()).valuation().value == ExtRational::Finite(r.clone()), || format!("V(alpha({r})) != {r}"));
    }
    t
}

/// Cells of `x` on a common period, read directly from the representation.
fn cell_pattern(x: &GenNumber) -> (usize, usize) {
    let zero = x.cells().iter().filter(|s| s.is_zero()).count();
    (zero, x.period())
}

fn dichotomy(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    let w = default_window();
    for _ in 0..1000 {
        let cfg = mixed_config(rng);
        let x = random_gennum(rng, &cfg);
        t.case();
        let (zero_cells, period) = cell_pattern(&x);
        match x.classify(&w) {
            Classification::Unit { inverse } => {
                t.check(zero_cells == 0, || format!("{x} classified unit with a zero region"));
                let residual = &x * &inverse - GenNumber::one();
                t.check(residual.valuation().at_least(&w), || format!("x*invert(x) - 1 = {residual} for x = {x}"));
            }
            Classification::ZeroDivisor { witness } => {
                t.check(zero_cells > 0 && zero_cells < period, || format!("{x} classified zero divisor"));
                t.check((&x * &witness).is_zero(), || format!("witness {witness} does not kill {x}"));
                t.check(witness.is_idempotent() && !witness.is_zero(), || format!("bad witness {witness}"));
            }
            Classification::Zero => t.check(zero_cells == period, || format!("{x} classified zero")),
            Classification::Indeterminate => t.check(false, || format!("exact {x} classified indeterminate")),
        }
    }
    t
}

fn unit_density(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    let w = default_window();
    for _ in 0..200 {
        let cfg = mixed_config(rng);
        let x = random_gennum(rng, &cfg);
        let q = random_quaternion(rng, &quaternion_config());
        for n in [int(1), int(4), int(16)] {
            t.case();
            match x.unit_near(&n) {
                Ok(u) => {
                    t.check(matches!(u.classify(&w), Classification::Unit { .. }), || format!("unit_near({x}, {n}) = {u} is not a unit"));
                    t.check(u.distance(&x).at_least(&n), || format!("unit_near({x}, {n}) too far"));
                }
                Err(e) => t.check(false, || format!("unit_near({x}, {n}): {e}")),
            }
            t.case();
            match q.unit_near(&n) {
                Ok(u) => {
                    t.check(matches!(u.qclassify(&w), QuatClassification::Unit { .. }), || format!("unit_near({q}, {n}) = {u} is not a unit"));
                    t.check(u.qdistance(&q).at_least(&n), || format!("unit_near({q}, {n}) too far"));
                }
                Err(e) => t.check(false, || format!("unit_near({q}, {n}): {e}")),
            }
        }
    }
    t
}

fn quaternion_norms(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    let w = default_window();
    let cfg = quaternion_config();
    for _ in 0..500 {
        let (x, y) = (random_quaternion(rng, &cfg), random_quaternion(rng, &cfg));
        t.case();
        t.check((&x * &y).norm_sq() == &x.norm_sq() * &y.norm_sq(), || format!("norm_sq not multiplicative on {x}, {y}"));
        let scalar_unit = matches!(x.norm_sq().classify(&w), Classification::Unit { .. });
        match x.qclassify(&w) {
            QuatClassification::Unit { inverse } => {
                t.check(scalar_unit, || format!("{x} is a unit but its norm is not"));
                let one = GenQuaternion::one();
                t.check((&x * &inverse).qdistance(&one).at_least(&w), || format!("right inverse of {x} off"));
                t.check((&inverse * &x).qdistance(&one).at_least(&w), || format!("left inverse of {x} off"));
            }
            _ => t.check(!scalar_unit, || format!("norm of {x} is a unit but {x} is not")),
        }
    }
    t
}

/// `2^{-k}` for an integer `k`.
fn pow2_neg(k: &BigInt) -> BigRational {
    let e = u32::try_from(k.magnitude()).expect("small exponent");
    let p = BigRational::from_integer(BigInt::from(1) << e);
    if *k >= BigInt::zero() {
        p.recip()
    } else {
        p
    }
}

/// Exact `|Σ x_i(ε_n)|²` summed over the components, for `n` a multiple of
/// every exponent denominator.
fn mesh_norm_sq(parts: &[GenNumber], n: u64) -> BigRational {
    let mut total = BigRational::zero();
    for x in parts {
        let (mut re, mut im) = (BigRational::zero(), BigRational::zero());
        for (q, c) in x.series_at(n).terms() {
            let k = q * BigRational::from_integer(n.into());
            assert!(k.is_integer(), "mesh index must clear exponent denominators");
            let p = pow2_neg(k.numer());
            re += c.re() * &p;
            im += c.im() * &p;
        }
        total += &re * &re + &im * &im;
    }
    total
}

/// Per-residue slope estimate of `V` from exact mesh values of `|x(ε_n)|²`
/// on `n ∈ 20..=60`. Entry `r` is `None` when every sampled value on the class
/// is zero.
pub fn mesh_slopes(parts: &[GenNumber]) -> Vec<Option<f64>> {
    let period = parts.iter().fold(1usize, |acc, x| num_integer::lcm(acc, x.period()));
    let denominator = parts
        .iter()
        .flat_map(|x| x.cells().iter().flat_map(|s| s.terms().iter().map(|(q, _)| q.denom().clone())))
        .fold(BigInt::one(), |acc, d| num_integer::Integer::lcm(&acc, &d));
    let d = u64::try_from(denominator).expect("small denominators");
    (0..period as u64)
        .map(|r| {
            let ns: Vec<u64> = (20..=60u64).filter(|n| n % period as u64 == r && n % d == 0).collect();
            assert!(ns.len() >= 2, "period and denominators must leave two samples per class");
            let values: Vec<BigRational> = ns.iter().map(|&n| mesh_norm_sq(parts, n)).collect();
            if values.iter().all(|v| v.is_zero()) {
                return None;
            }
            let hi = ns.len() - 1;
            let lo = ns.iter().position(|&n| n >= 30 && n < ns[hi]).unwrap_or(0);
            let slope = (ln_rational(&values[hi]) - ln_rational(&values[lo])) / (-((ns[hi] - ns[lo]) as f64) * std::f64::consts::LN_2);
            Some(slope / 2.0)
        })
        .collect()
}

/// Compares the symbolic region valuations of `parts` with [`mesh_slopes`].
pub fn mesh_oracle_agrees(parts: &[GenNumber]) -> bool {
    let slopes = mesh_slopes(parts);
    let period = slopes.len() as u64;
    slopes.iter().enumerate().all(|(r, slope)| {
        let symbolic = parts.iter().map(|x| x.series_at(r as u64).leading_exponent()).min().expect("nonempty");
        match (symbolic, slope) {
            (ExtRational::Infinity, None) => true,
            (ExtRational::Finite(v), Some(s)) => {
                let v = v.numer().to_string().parse::<f64>().unwrap() / v.denom().to_string().parse::<f64>().unwrap();
                (v - s).abs() < 1.0 / 12.0
            }
            _ => false,
        }
    }) && period > 0
}

/// Generator settings whose exponent denominators are coprime to the period,
/// so every residue class meets mesh indices clearing the denominators.
pub fn oracle_config(rng: &mut impl Rng) -> (usize, GenConfig) {
    let period = [1usize, 2, 3, 4][rng.gen_range(0..4)];
    let dens = if period == 3 { vec![1, 2] } else { vec![1, 3] };
    (period, GenConfig { exponent_denominators: dens, ..GenConfig::default() })
}

fn topology(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..500 {
        let (period, cfg) = oracle_config(rng);
        let parts: [GenNumber; 4] = std::array::from_fn(|_| {
            let p = [1, period][rng.gen_range(0..2)];
            random_gennum_with_period(rng, p, &cfg)
        });
        let x = GenQuaternion::from_parts(parts.clone()).expect("real parts");
        t.case();
        let componentwise = parts.iter().map(|p| p.valuation().value).min().unwrap();
        t.check(x.qvaluation().value == componentwise, || format!("qvaluation({x}) = {} but componentwise min {componentwise}", x.qvaluation().value));
        t.check(mesh_oracle_agrees(&parts), || format!("mesh slopes {:?} disagree with {x}", mesh_slopes(&parts)));
    }
    t
}

fn idempotent_rigidity() -> Tally {
    let mut t = Tally::default();
    let a = IndexSet::evens();
    let values = [
        GenNumber::zero(),
        GenNumber::one(),
        GenNumber::from_rational(rat(1, 2)),
        GenNumber::chi(&a),
        GenNumber::chi(&a.complement()),
    ];
    let expected: Vec<GenQuaternion> = [IndexSet::empty(), IndexSet::full(), a.clone(), a.complement()]
        .iter()
        .map(|s| GenQuaternion::from_real(GenNumber::chi(s)).unwrap())
        .collect();
    let mut found = Vec::new();
    for idx in 0..625usize {
        let parts: [GenNumber; 4] = std::array::from_fn(|k| values[(idx / 5usize.pow(k as u32)) % 5].clone());
        let x = GenQuaternion::from_parts(parts).unwrap();
        t.case();
        let idempotent = &x * &x == x;
        t.check(idempotent == x.is_idempotent(), || format!("is_idempotent disagrees on {x}"));
        match x.idempotent_decompose() {
            Ok(s) => {
                t.check(idempotent, || format!("decomposed non-idempotent {x}"));
                t.check(GenQuaternion::from_real(GenNumber::chi(&s)).unwrap() == x, || format!("{x} is not chi({s})"));
            }
            Err(e) => t.check(!idempotent, || format!("idempotent {x} failed to decompose: {e}")),
        }
        if idempotent {
            found.push(x);
        }
    }
    t.check(found.len() == expected.len() && expected.iter().all(|e| found.contains(e)), || {
        format!("idempotents found: {}", found.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", "))
    });
    t
}

fn sparse_config(rng: &mut StdRng) -> GenConfig {
    GenConfig { zero_probability: 0.45, complex: rng.gen_bool(0.3), ..GenConfig::default() }
}

fn ideal_collapse(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    let w = default_window();
    for _ in 0..300 {
        let cfg = sparse_config(rng);
        let count = rng.gen_range(1..=3);
        let gens: Vec<GenNumber> = (0..count).map(|_| random_gennum(rng, &cfg)).collect();
        let ideal = FgIdeal::new(gens.clone()).expect("exact generators");
        t.case();
        let period = gens.iter().fold(1, |acc, g| num_integer::lcm(acc, g.period()));
        let covered = (0..period as u64).all(|r| gens.iter().any(|g| !g.series_at(r).is_zero()));
        let ann = ideal.annihilator_idempotent();
        let (dense, whole) = (ideal.is_dense(), ideal.is_whole_ring(&w));
        t.check(dense == covered && whole == covered && ann.is_zero() == covered, || {
            format!("dense {dense}, whole {whole}, ann {ann} for generators {gens:?}")
        });
        if !covered {
            t.check(!ann.is_zero() && ann.is_idempotent(), || format!("annihilator {ann} of a proper ideal"));
            t.check(gens.iter().all(|g| (g * &ann).is_zero()), || format!("{ann} does not annihilate the generators"));
        }
    }
    t
}

fn norm_ideal_transfer(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..300 {
        let cfg = GenConfig { complex: false, ..sparse_config(rng) };
        let count = rng.gen_range(1..=3);
        let gens: Vec<GenQuaternion> = (0..count).map(|_| random_quaternion(rng, &cfg)).collect();
        let ideal = QuatFgIdeal::new(gens.clone()).expect("exact generators");
        t.case();
        let norms = ideal.norm_ideal();
        t.check(ideal.is_dense() == norms.is_dense(), || format!("density disagrees with the norm ideal for {gens:?}"));
        let period = gens.iter().fold(1, |acc, g| num_integer::lcm(acc, g.common_period()));
        let covered = (0..period as u64).all(|r| gens.iter().any(|g| g.parts().iter().any(|p| !p.series_at(r).is_zero())));
        t.check(ideal.is_dense() == covered, || format!("density of {gens:?} disagrees with the component supports"));
        for g in &gens {
            for part in g.parts() {
                t.check(norms.contains(part) == Ok(true), || format!("component {part} of {g} not in the norm ideal"));
            }
        }
        if !ideal.is_dense() {
            let e = GenQuaternion::from_real(ideal.annihilator()).unwrap();
            t.check(!e.is_zero() && e.is_idempotent(), || format!("central idempotent {e} for a non-dense ideal"));
            t.check(gens.iter().all(|g| (g * &e).is_zero() && (&e * g).is_zero()), || format!("{e} does not annihilate {gens:?}"));
        }
    }
    t
}

fn identity_theorem() -> Tally {
    let mut t = Tally::default();
    let w = default_window();
    let chi_a = GenNumber::chi(&IndexSet::evens());
    let chi_ac = GenNumber::chi(&IndexSet::odds());
    let zero = GenNumber::zero();
    let ns: Vec<BigRational> = [1, 2, 5, 16].into_iter().map(int).collect();

    let f = GenPolynomial::new(vec![zero.clone(), chi_a.clone()]);
    t.case();
    match f.identity_check(&zero, &[]) {
        Ok(IdentityVerdict::Counterexample { idempotent, sequence, .. }) => {
            t.check(idempotent == chi_ac, || format!("idempotent {idempotent}, expected {chi_ac}"));
            for n in &ns {
                t.case();
                t.check(f.verify_counterexample(&zero, &idempotent, n) == Ok(true), || format!("verify_counterexample fails at n = {n}"));
                let xn = sequence.term(n);
                let moved = f.eval(&xn) - f.eval(&zero);
                t.check(moved.is_negligible() == Negligibility::Yes, || format!("f(x_{n}) - f(0) = {moved}"));
                let v = xn.distance(&zero);
                t.check(v.exact && v.value == ExtRational::Finite(n.clone()), || format!("V(x_{n}) = {}", v.value));
            }
        }
        other => t.check(false, || format!("identity_check(chi_A z, 0) = {other:?}")),
    }

    t.case();
    let id = GenPolynomial::new(vec![zero.clone(), GenNumber::one()]);
    t.check(id.identity_check(&zero, &ns) == Ok(IdentityVerdict::DenseNecessaryConditionHolds), || "identity_check(z, 0) not dense".into());

    let one = GenNumber::one();
    let quadratic = |a2: GenNumber| GenPolynomial::new(vec![one.clone(), one.clone(), a2]).quadratic_unique_solution_check(&zero, &w);
    t.case();
    t.check(quadratic(chi_a.clone()) == Ok(QuadraticVerdict::IdempotentKillsQuadratic { idempotent: chi_ac.clone() }), || {
        format!("1 + z + chi_A z^2: {:?}", quadratic(chi_a.clone()))
    });
    t.case();
    let unique = quadratic(GenNumber::alpha(int(1)));
    t.check(matches!(unique, Ok(QuadraticVerdict::UniqueInUnitBall { .. })), || format!("1 + z + alpha(1) z^2: {unique:?}"));
    t.case();
    let boundary = quadratic(GenNumber::from_int(2));
    t.check(matches!(boundary, Ok(QuadraticVerdict::Inconclusive { .. })), || format!("1 + z + 2 z^2: {boundary:?}"));
    t
}

/// `f` supported on `S` and `g` on its complement, both over `nvars`
/// variables, with `g ≠ 0`.
fn orthogonal_pair(rng: &mut StdRng, nvars: usize) -> (MultiPoly, MultiPoly) {
    let cfg = GenConfig { periods: vec![2, 3, 4], ..GenConfig::default() };
    loop {
        let s = random_periodic_set(rng, &cfg);
        if s.is_empty() || s.is_full() {
            continue;
        }
        let f = random_multipoly_with(rng, nvars, 3, 2, &cfg).scale(&GenNumber::chi(&s));
        let g = random_multipoly_with(rng, nvars, 3, 2, &cfg).scale(&GenNumber::chi(&s.complement()));
        if !g.is_zero() {
            return (f, g);
        }
    }
}

fn mccoy(rng: &mut StdRng) -> Tally {
    let mut t = Tally::default();
    for k in 0..500 {
        let nvars = 2 + k % 2;
        let (f, g) = orthogonal_pair(rng, nvars);
        t.case();
        t.check(f.pmul(&g).map(|p| p.is_zero()) == Ok(true), || format!("constructed pair does not multiply to zero: {f} / {g}"));
        match f.ann_constant() {
            Ok(b) => {
                t.check(!b.is_zero(), || format!("zero constant annihilator for {f}"));
                t.check(f.verify_annihilator(&b, 20, rng), || format!("{b} fails verification on {f}"));
                t.check(g.coefficients().all(|c| c.support().is_subset(&b.support())), || format!("{b} misses the support of {g}"));
            }
            Err(e) => t.check(false, || format!("ann_constant({f}): {e}")),
        }
    }
    for _ in 0..100 {
        let cfg = GenConfig { zero_probability: 0.4, ..GenConfig::default() };
        let f = random_multipoly_with(rng, 2, 3, 2, &cfg);
        t.case();
        let direct = f.ann_constant().unwrap();
        t.check(f.ann_constant_iterated().as_ref() == Ok(&direct), || format!("iterated annihilator differs on {f}"));
        t.check(f.embed(3).ann_constant().as_ref() == Ok(&direct), || format!("embedding changes the annihilator of {f}"));
    }
    let a = IndexSet::evens();
    let (chi_a, chi_ac) = (GenNumber::chi(&a), GenNumber::chi(&a.complement()));
    let symbol = MultiPoly::var(1, 0).scale(&chi_a);
    t.case();
    t.check(operator_obstruction(&chi_ac, &symbol, &MultiPoly::constant(1, GenNumber::one())) == Ok(Obstruction::Unsolvable), || {
        "obstruction instance not unsolvable".into()
    });
    t.case();
    t.check(operator_obstruction(&chi_ac, &symbol, &MultiPoly::constant(1, chi_a.clone())) == Ok(Obstruction::NoVerdict), || {
        "annihilated variant not NoVerdict".into()
    });
    t
}
