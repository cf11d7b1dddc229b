use colombeau::conformance::{run_all, SuiteOutcome};
use colombeau::expr::{eval_str, parse_gennum, split_top_level, Value};
use colombeau::holo::{GenPolynomial, IdentityVerdict, QuadraticVerdict};
use colombeau::ideals::{FgIdeal, QuatFgIdeal};
use colombeau::json::{GenNumberDoc, QuaternionDoc};
use colombeau::polyann::MultiPoly;
use colombeau::scalar::fmt_rational;
use colombeau::{Classification, Error, GenNumber, GenQuaternion, QPositivity, QuatClassification, Valuation};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::report::{CliError, Outcome};
use crate::{HoloOp, IdealOp, QuatOp, Settings};

type Res = Result<Outcome, CliError>;

fn value(text: &str, s: &Settings) -> Result<Value, CliError> {
    Ok(eval_str(text, &s.window)?)
}

fn quaternion(text: &str, s: &Settings) -> Result<GenQuaternion, CliError> {
    Ok(match value(text, s)? {
        Value::Num(x) => GenQuaternion::from_real(x)?,
        Value::Quat(q) => q,
    })
}

#[derive(Serialize)]
struct EvalReport<'a> {
    command: &'static str,
    input: &'a str,
    kind: &'static str,
    value: String,
    canonical: serde_json::Value,
}

pub fn eval(expr: &str, s: &Settings) -> Res {
    let v = value(expr, s)?;
    let (kind, canonical) = match &v {
        Value::Num(x) => ("number", serde_json::to_value(GenNumberDoc::from(x))),
        Value::Quat(q) => ("quaternion", serde_json::to_value(QuaternionDoc::from(q))),
    };
    Ok(Outcome::of(EvalReport { command: "eval", input: expr, kind, value: v.to_string(), canonical: canonical.expect("plain data") }))
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    command: &'static str,
    input: &'a str,
    window: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<String>,
}

fn scalar_verdict(c: Classification) -> (&'static str, Option<String>, Option<String>) {
    let kind = c.kind();
    match c {
        Classification::Unit { inverse } => (kind, None, Some(inverse.to_string())),
        Classification::ZeroDivisor { witness } => (kind, Some(witness.to_string()), None),
        _ => (kind, None, None),
    }
}

fn quat_verdict(c: QuatClassification) -> (&'static str, Option<String>, Option<String>) {
    let kind = c.kind();
    match c {
        QuatClassification::Unit { inverse } => (kind, None, Some(inverse.to_string())),
        QuatClassification::ZeroDivisor { witness } => (kind, Some(witness.to_string()), None),
        _ => (kind, None, None),
    }
}

pub fn classify(expr: &str, s: &Settings) -> Res {
    let (kind, witness, inverse) = match value(expr, s)? {
        Value::Num(x) => scalar_verdict(x.classify(&s.window)),
        Value::Quat(q) => quat_verdict(q.qclassify(&s.window)),
    };
    Ok(Outcome::of(ClassifyReport { command: "classify", input: expr, window: fmt_rational(&s.window), kind, witness, inverse }))
}

#[derive(Serialize)]
struct NormReport<'a> {
    command: &'static str,
    inputs: Vec<&'a str>,
    valuation: String,
    exact: bool,
    display: String,
}

fn norm_report<'a>(command: &'static str, inputs: Vec<&'a str>, v: Valuation) -> NormReport<'a> {
    NormReport { command, inputs, valuation: v.value.to_string(), exact: v.exact, display: v.display() }
}

pub fn norm(expr: &str, s: &Settings) -> Res {
    let v = match value(expr, s)? {
        Value::Num(x) => x.sharp_norm(),
        Value::Quat(q) => q.qvaluation(),
    };
    Ok(Outcome::of(norm_report("norm", vec![expr], v)))
}

pub fn dist(a: &str, b: &str, s: &Settings) -> Res {
    let v = match (value(a, s)?, value(b, s)?) {
        (Value::Num(x), Value::Num(y)) => x.distance(&y),
        _ => quaternion(a, s)?.qdistance(&quaternion(b, s)?),
    };
    Ok(Outcome::of(norm_report("dist", vec![a, b], v)))
}

#[derive(Serialize)]
struct OrderReport<'a> {
    command: &'static str,
    inputs: Vec<&'a str>,
    relation: &'static str,
    verdict: &'static str,
}

fn qpositivity(q: QPositivity) -> &'static str {
    match q {
        QPositivity::Yes => "yes",
        QPositivity::No => "no",
        QPositivity::Indeterminate => "indeterminate",
    }
}

pub fn order(a: &str, b: Option<&str>, s: &Settings) -> Res {
    let x = parse_gennum(a, &s.window)?;
    let (relation, verdict, inputs) = match b {
        None => ("qpositive", x.is_qpositive()?, vec![a]),
        Some(b) => ("geq", x.geq(&parse_gennum(b, &s.window)?)?, vec![a, b]),
    };
    Ok(Outcome::of(OrderReport { command: "order", inputs, relation, verdict: qpositivity(verdict) }))
}

#[derive(Serialize, Default)]
struct QuatReport<'a> {
    command: &'static str,
    op: &'static str,
    inputs: Vec<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    norm_sq: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    valuation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    display: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    region: Option<String>,
}

pub fn quat(op: QuatOp, x: &str, y: Option<&str>, s: &Settings) -> Res {
    let q = quaternion(x, s)?;
    let mut r = QuatReport { command: "quat", inputs: vec![x], ..Default::default() };
    match op {
        QuatOp::Mul => {
            let y = y.ok_or_else(|| CliError::Usage("quat mul needs two operands".into()))?;
            r.inputs.push(y);
            r.op = "mul";
            r.result = Some((&q * &quaternion(y, s)?).to_string());
        }
        QuatOp::Conj => {
            r.op = "conj";
            r.result = Some(q.conj().to_string());
        }
        QuatOp::Norm => {
            let v = q.qvaluation();
            r.op = "norm";
            r.norm_sq = Some(q.norm_sq().to_string());
            r.valuation = Some(v.value.to_string());
            r.display = Some(v.display());
        }
        QuatOp::Classify => {
            let (kind, witness, inverse) = quat_verdict(q.qclassify(&s.window));
            r.op = "classify";
            (r.kind, r.witness, r.inverse) = (Some(kind), witness, inverse);
        }
        QuatOp::Decompose => {
            r.op = "decompose";
            r.region = Some(q.idempotent_decompose()?.to_string());
        }
    }
    Ok(Outcome::of(r))
}

#[derive(Serialize)]
struct IdealReport {
    command: &'static str,
    op: &'static str,
    field: &'static str,
    generators: Vec<String>,
    support: String,
    annihilator: String,
    /// Zero annihilator; not topological density.
    dense_algebraic: bool,
    whole_ring: bool,
    verdict: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cofactors: Option<Vec<String>>,
}

pub fn ideal(op: IdealOp, gens: &str, elem: Option<&str>, s: &Settings) -> Res {
    let values = split_top_level(gens, ';').into_iter().map(|g| value(g, s)).collect::<Result<Vec<_>, _>>()?;
    let is_quat = values.iter().any(|v| matches!(v, Value::Quat(_)));
    let elem_value = match (op, elem) {
        (IdealOp::Member, None) => return Err(CliError::Usage("ideal member needs --elem".into())),
        (IdealOp::Member, Some(e)) => Some(value(e, s)?),
        _ => None,
    };
    let mut report = if is_quat {
        let quats = values
            .into_iter()
            .map(|v| match v {
                Value::Num(x) => GenQuaternion::from_real(x),
                Value::Quat(q) => Ok(q),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ideal = QuatFgIdeal::new(quats)?;
        let norms = ideal.norm_ideal();
        let member = match elem_value {
            Some(v) => {
                let y = match v {
                    Value::Num(x) => GenQuaternion::from_real(x)?,
                    Value::Quat(q) => q,
                };
                ideal.hull()?;
                let mut inside = true;
                for part in y.parts() {
                    inside &= norms.contains(part)?;
                }
                Some(inside)
            }
            None => None,
        };
        IdealReport {
            command: "ideal",
            op: "",
            field: "quaternion",
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            support: norms.support().to_string(),
            annihilator: ideal.annihilator().to_string(),
            dense_algebraic: ideal.is_dense(),
            whole_ring: norms.is_whole_ring(&s.window),
            verdict: serde_json::Value::Null,
            member,
            cofactors: None,
        }
    } else {
        let nums: Vec<GenNumber> = values
            .into_iter()
            .map(|v| match v {
                Value::Num(x) => x,
                Value::Quat(_) => unreachable!("checked above"),
            })
            .collect();
        let ideal = FgIdeal::new(nums)?;
        let (member, cofactors) = match elem_value {
            Some(Value::Num(y)) => {
                let cof = ideal.membership_cofactors(&y, &s.window)?;
                (Some(cof.is_some()), cof.map(|c| c.iter().map(|z| z.to_string()).collect()))
            }
            Some(Value::Quat(_)) => return Err(Error::Evaluation("quaternion element for a scalar ideal".into()).into()),
            None => (None, None),
        };
        IdealReport {
            command: "ideal",
            op: "",
            field: "scalar",
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            support: ideal.support().to_string(),
            annihilator: ideal.annihilator_idempotent().to_string(),
            dense_algebraic: ideal.is_dense(),
            whole_ring: ideal.is_whole_ring(&s.window),
            verdict: serde_json::Value::Null,
            member,
            cofactors,
        }
    };
    let (name, verdict) = match op {
        IdealOp::Dense => ("dense", report.dense_algebraic.into()),
        IdealOp::Ann => ("ann", report.annihilator.clone().into()),
        IdealOp::Member => ("member", report.member.unwrap_or(false).into()),
        IdealOp::Whole => ("whole", report.whole_ring.into()),
    };
    report.op = name;
    report.verdict = verdict;
    Ok(Outcome::of(report))
}

#[derive(Serialize)]
struct HoloCheckReport<'a> {
    command: &'static str,
    op: &'static str,
    poly: Vec<String>,
    at: &'a str,
    dense: bool,
    verdict: &'static str,
    idempotent: Option<String>,
    sequence: Option<String>,
    verified_n: Vec<String>,
    /// `V(x_n − z₀)` for each verified `n`.
    valuations: Vec<String>,
}

#[derive(Serialize)]
struct QuadraticReport<'a> {
    command: &'static str,
    op: &'static str,
    poly: Vec<String>,
    at: &'a str,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    idempotent: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio_valuation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

pub fn holo(op: HoloOp, poly: &str, at: &str, s: &Settings) -> Res {
    let coeffs = split_top_level(poly, ';').into_iter().map(|c| parse_gennum(c, &s.window)).collect::<Result<Vec<_>, _>>()?;
    let f = GenPolynomial::new(coeffs);
    let z0 = parse_gennum(at, &s.window)?;
    let printed: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
    match op {
        HoloOp::Check => {
            let report = match f.identity_check(&z0, &s.verify_n)? {
                IdentityVerdict::DenseNecessaryConditionHolds => HoloCheckReport {
                    command: "holo",
                    op: "check",
                    poly: printed,
                    at,
                    dense: true,
                    verdict: "dense_necessary_condition_holds",
                    idempotent: None,
                    sequence: None,
                    verified_n: vec![],
                    valuations: vec![],
                },
                IdentityVerdict::Counterexample { idempotent, sequence, verified_n } => HoloCheckReport {
                    command: "holo",
                    op: "check",
                    poly: printed,
                    at,
                    dense: false,
                    verdict: "counterexample",
                    idempotent: Some(idempotent.to_string()),
                    sequence: Some(sequence.describe()),
                    valuations: verified_n.iter().map(|n| sequence.term(n).distance(&z0).value.to_string()).collect(),
                    verified_n: verified_n.iter().map(fmt_rational).collect(),
                },
            };
            Ok(Outcome::of(report))
        }
        HoloOp::Quadratic => {
            let verdict = f.quadratic_unique_solution_check(&z0, &s.window)?;
            let mut report = QuadraticReport {
                command: "holo",
                op: "quadratic",
                poly: printed,
                at,
                verdict: verdict.kind(),
                idempotent: None,
                ratio_valuation: None,
                reason: None,
            };
            match verdict {
                QuadraticVerdict::UniqueInUnitBall { ratio_valuation } => report.ratio_valuation = ratio_valuation.as_ref().map(fmt_rational),
                QuadraticVerdict::IdempotentKillsQuadratic { idempotent } => report.idempotent = Some(idempotent.to_string()),
                QuadraticVerdict::Inconclusive { reason } => report.reason = Some(reason),
            }
            Ok(Outcome::of(report))
        }
    }
}

/// Parses `(<expr>)*x1^a*x2^b, ...`; factors that are not variable powers
/// multiply into the coefficient.
pub fn parse_multipoly(nvars: usize, text: &str, s: &Settings) -> Result<MultiPoly, CliError> {
    let mut terms = Vec::new();
    for term in split_top_level(text, ',') {
        if term.is_empty() {
            continue;
        }
        let (negative, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, term),
        };
        let mut exps = vec![0u32; nvars];
        let mut coeff = GenNumber::one();
        for factor in split_top_level(body, '*') {
            match variable_power(factor) {
                Some((index, power)) => {
                    if index == 0 || index > nvars {
                        return Err(CliError::Usage(format!("variable x{index} outside x1..x{nvars}")));
                    }
                    exps[index - 1] += power;
                }
                None => coeff = coeff * parse_gennum(factor, &s.window)?,
            }
        }
        terms.push((exps, if negative { -coeff } else { coeff }));
    }
    Ok(MultiPoly::from_terms(nvars, terms)?)
}

fn variable_power(factor: &str) -> Option<(usize, u32)> {
    let rest = factor.strip_prefix('x')?;
    let (index, power) = match rest.split_once('^') {
        Some((i, p)) => (i, p.trim().parse().ok()?),
        None => (rest, 1),
    };
    Some((index.trim().parse().ok()?, power))
}

#[derive(Serialize)]
struct PolyannReport {
    command: &'static str,
    vars: usize,
    poly: String,
    annihilator: String,
    verified: bool,
    trials: usize,
}

pub fn polyann(vars: usize, poly: &str, trials: usize, s: &Settings) -> Res {
    if vars == 0 {
        return Err(CliError::Usage("--vars must be positive".into()));
    }
    let f = parse_multipoly(vars, poly, s)?;
    let b = f.ann_constant()?;
    let mut rng = StdRng::seed_from_u64(0x706f_6c79);
    let verified = f.verify_annihilator(&b, trials, &mut rng);
    Ok(Outcome::of(PolyannReport { command: "polyann", vars, poly: f.to_string(), annihilator: b.to_string(), verified, trials }))
}

#[derive(Serialize)]
struct SelftestReport {
    command: &'static str,
    passed: bool,
    suites: Vec<SuiteOutcome>,
    lines: Vec<String>,
}

pub fn selftest() -> Outcome {
    let suites = run_all();
    let passed = suites.iter().all(|o| o.passed);
    let mut lines: Vec<String> = suites.iter().map(SuiteOutcome::line).collect();
    let count = suites.iter().filter(|o| o.passed).count();
    lines.push(format!("selftest: {count}/{} suites passed", suites.len()));
    let mut outcome = Outcome::of(SelftestReport { command: "selftest", passed, suites, lines });
    outcome.ok = passed;
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use colombeau::gennum::default_window;
    use colombeau::IndexSet;

    fn settings() -> Settings {
        Settings { window: default_window(), verify_n: vec![] }
    }

    #[test]
    fn polynomial_terms() {
        let s = settings();
        let f = parse_multipoly(2, "(chi{m=2;T=[0];N=0})*x1^2*x2, (alpha(1)), -x2", &s).unwrap();
        let chi = GenNumber::chi(&IndexSet::evens());
        let expected = MultiPoly::from_terms(
            2,
            [(vec![2, 1], chi), (vec![0, 0], GenNumber::alpha(colombeau::scalar::rat(1, 1))), (vec![0, 1], -GenNumber::one())]
                .map(|(e, c)| (e, c.clone())),
        )
        .unwrap();
        assert_eq!(f, expected);
        assert!(parse_multipoly(1, "x2", &s).is_err());
    }

    #[test]
    fn variable_factors() {
        assert_eq!(variable_power("x1"), Some((1, 1)));
        assert_eq!(variable_power("x12^3"), Some((12, 3)));
        assert_eq!(variable_power("(x1)"), None);
        assert_eq!(variable_power("eps"), None);
    }
}
