//! Instance checks for the periodicity statements, the cyclotomic
//! congruences behind them, and the quantum binomial and commutation
//! identities used along the way.
//!
//! # Validity filter
//!
//! The congruence `[m + l g]_alpha = [m]_alpha mod sigma_l` breaks down when
//! `sigma_l` divides `v_alpha - v_alpha^-1`, that is when `l | 2 d_alpha`.
//! The smallest case is `l = 2`, `d = 1`: `[3] - [1] = v^2 + v^-2`, which is
//! `2` modulo `v + 1`. For normalized Gram entries the factorials
//! `[k]!_alpha` with `k <= c_alpha(nu)` are divided out as well, so `l` must
//! also avoid `2 d_alpha k` for those `k`. Instances outside the filter are
//! reported as `hypothesis-unsatisfied` unless `force` is set, in which case
//! the check is run and its real outcome is recorded.
//!
//! The filter is not applied to the characteristic `p`, `q = 1`, `l = p^r`
//! regime: there the statement holds over `F_p` even where the integral
//! congruence fails (for instance `l = 2` in `F_2`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::characters::session_multiplicity;
use crate::coefficients::{Field, FieldSpec, QKind};
use crate::error::Result;
use crate::exec::{self, Strategy};
use crate::gram::GramSession;
use crate::laurent::{cyclotomic, mod_cyclotomic, qbinom, qint, LaurentPoly};
use crate::pathspace::{epsilon_divided, phi_divided, Path, PathVector};
use crate::rootsystem::{RootSystem, RootVector, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    HypothesisUnsatisfied,
}

/// Result of one check on one instance. A failing report always carries a
/// witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: Map<String, Value>,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn new(check: &str, instance: Value) -> Self {
        let Value::Object(instance) = instance else {
            panic!("instance description must be a JSON object");
        };
        CheckReport { check: check.into(), instance, outcome: Outcome::Pass, witness: None, note: None }
    }

    fn fail(mut self, witness: String) -> Self {
        self.outcome = Outcome::Fail;
        self.witness = Some(witness);
        self
    }

    fn unsatisfied(mut self, why: String) -> Self {
        self.outcome = Outcome::HypothesisUnsatisfied;
        self.note = Some(why);
        self
    }

    fn noted(mut self, note: Option<String>) -> Self {
        self.note = note;
        self
    }

    fn forced(mut self, force: bool) -> Self {
        if force {
            self.instance.insert("forced".into(), Value::Bool(true));
        }
        self
    }

    pub fn is_pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Counts per outcome for a batch.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub check: String,
    pub seed: u64,
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "hypothesis-unsatisfied")]
    pub hypothesis_unsatisfied: usize,
}

impl BatchSummary {
    pub fn of(check: &str, seed: u64, reports: &[CheckReport]) -> Self {
        let count = |o| reports.iter().filter(|r| r.outcome == o).count();
        BatchSummary {
            check: check.into(),
            seed,
            pass: count(Outcome::Pass),
            fail: count(Outcome::Fail),
            hypothesis_unsatisfied: count(Outcome::HypothesisUnsatisfied),
        }
    }

    pub fn to_json_line(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            summary: &'a BatchSummary,
        }
        serde_json::to_string(&Line { summary: self }).expect("summary serializes")
    }
}

/// Reason `l` is outside the validity filter for `rs`, taking the
/// factorials up to `nu` into account when given.
pub fn validity_violation(rs: &RootSystem, l: u64, nu: Option<&RootVector>) -> Option<String> {
    for a in 0..rs.rank() {
        let d = u64::from(rs.symmetrizer(a));
        if (2 * d) % l == 0 {
            return Some(format!("l = {l} divides 2*d = {} for simple root {a}", 2 * d));
        }
        let top = nu.map_or(0, |nu| nu.0[a].max(0) as u64);
        if let Some(k) = (1..=top).find(|k| (2 * d * k) % l == 0) {
            return Some(format!("l = {l} divides 2*d*k = {} for simple root {a}, k = {k}", 2 * d * k));
        }
    }
    None
}

fn filter_gate(rs: &RootSystem, l: u64, nu: Option<&RootVector>, force: bool) -> std::result::Result<Option<String>, String> {
    match validity_violation(rs, l, nu) {
        Some(why) if !force => Err(why),
        Some(why) => Ok(Some(format!("forced past validity filter: {why}"))),
        None => Ok(None),
    }
}

fn shifted(lambda: &Weight, gamma: &Weight, l: u64) -> Weight {
    lambda + &gamma.scaled(l as i64)
}

/// `[<lambda + l gamma, alpha^vee>]_alpha = [<lambda, alpha^vee>]_alpha` modulo
/// `sigma_l`, for every simple root.
pub fn check_qint_periodicity(rs: &RootSystem, lambda: &Weight, gamma: &Weight, l: u64, force: bool) -> CheckReport {
    let report = CheckReport::new(
        "qint-periodicity",
        json!({ "system": rs.name(), "lambda": lambda, "gamma": gamma, "l": l }),
    )
    .forced(force);
    let note = match filter_gate(rs, l, None, force) {
        Ok(note) => note,
        Err(why) => return report.unsatisfied(why),
    };
    let top = shifted(lambda, gamma, l);
    for a in 0..rs.rank() {
        let d = rs.symmetrizer(a);
        let diff = &qint(rs.pairing(&top, a), d) - &qint(rs.pairing(lambda, a), d);
        let rem = mod_cyclotomic(&diff, l);
        if !rem.is_zero() {
            return report.noted(note).fail(format!("simple root {a}: difference {diff} reduces to {rem}"));
        }
    }
    report.noted(note)
}

/// Entrywise `A_nu(lambda + l gamma) = A_nu(lambda)` modulo `sigma_l`.
pub fn check_matrix_congruence(
    rs: &RootSystem,
    lambda: &Weight,
    gamma: &Weight,
    l: u64,
    nu: &RootVector,
    force: bool,
) -> Result<CheckReport> {
    let report = CheckReport::new(
        "matrix-congruence",
        json!({ "system": rs.name(), "lambda": lambda, "gamma": gamma, "l": l, "nu": nu }),
    )
    .forced(force);
    if !nu.is_nonnegative() {
        return Ok(report.unsatisfied(format!("height {nu} is not nonnegative")));
    }
    if let Some(a) = (0..rs.rank()).find(|&a| nu.0[a] as u64 >= l) {
        return Ok(report.unsatisfied(format!("l = {l} does not exceed c_{a} = {}", nu.0[a])));
    }
    let note = match filter_gate(rs, l, Some(nu), force) {
        Ok(note) => note,
        Err(why) => return Ok(report.unsatisfied(why)),
    };
    let low = GramSession::new(rs, lambda.clone()).matrix(nu, Strategy::Sequential)?;
    let high = GramSession::new(rs, shifted(lambda, gamma, l)).matrix(nu, Strategy::Sequential)?;
    for (i, (ra, rb)) in high.entries.iter().zip(&low.entries).enumerate() {
        for (j, (a, b)) in ra.iter().zip(rb).enumerate() {
            let rem = mod_cyclotomic(&(a - b), l);
            if !rem.is_zero() {
                let (p, q) = (&low.paths[i], &low.paths[j]);
                return Ok(report.noted(note).fail(format!("entry ({p}, {q}): {a} - {b} reduces to {rem}")));
            }
        }
    }
    Ok(report.noted(note))
}

/// True when the field is a characteristic `p` field with `q = 1`.
fn is_classical_modular(field: &Field) -> bool {
    field.characteristic() > 0 && field.spec().q == QKind::One
}

/// `dim L(lambda)_mu = dim L(lambda + l gamma)_(mu + l gamma)` over `field`.
pub fn check_periodicity_theorem(
    field: &Field,
    l: u64,
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    gamma: &Weight,
    force: bool,
) -> Result<CheckReport> {
    let report = CheckReport::new(
        "periodicity",
        json!({
            "system": rs.name(), "field": field.spec(), "lambda": lambda,
            "mu": mu, "gamma": gamma, "l": l,
        }),
    )
    .forced(force);
    let Some(nu) = rs.root_decompose(&(lambda - mu)) else {
        return Ok(report.unsatisfied(format!("{mu} is not below {lambda}")));
    };
    if let Some(a) = (0..rs.rank()).find(|&a| nu.0[a] as u64 >= l) {
        return Ok(report.unsatisfied(format!("l = {l} does not exceed c_{a} = {}", nu.0[a])));
    }
    let sigma = LaurentPoly::from(&cyclotomic(l));
    if !field.specialize(&sigma).is_zero() {
        return Ok(report.unsatisfied(format!("sigma_{l}(q) is nonzero in {}", field.spec())));
    }
    let note = if is_classical_modular(field) {
        None
    } else {
        match filter_gate(rs, l, Some(&nu), force) {
            Ok(note) => note,
            Err(why) => return Ok(report.unsatisfied(why)),
        }
    };
    let low = session_multiplicity(&GramSession::new(rs, lambda.clone()), field, mu)?;
    let high = session_multiplicity(
        &GramSession::new(rs, shifted(lambda, gamma, l)),
        field,
        &shifted(mu, gamma, l),
    )?;
    let report = report.noted(note);
    Ok(if low == high { report } else { report.fail(format!("multiplicities differ: {low} vs {high}")) })
}

/// Quantum binomial with the convention that a negative lower index gives 0.
fn binom_or_zero(n: i64, r: i64) -> LaurentPoly {
    if r < 0 {
        LaurentPoly::zero()
    } else {
        qbinom(n, r as u32, 1)
    }
}

/// `[a] [b choose c] = [a - c] [b - 1 choose c] + [a + b - c] [b - 1 choose c - 1]`.
pub fn check_qbinom_identity(a: i64, b: i64, c: u32) -> CheckReport {
    let report = CheckReport::new("qbinom-identity", json!({ "a": a, "b": b, "c": c }));
    let ci = i64::from(c);
    let lhs = &qint(a, 1) * &binom_or_zero(b, ci);
    let rhs = &(&qint(a - ci, 1) * &binom_or_zero(b - 1, ci)) + &(&qint(a + b - ci, 1) * &binom_or_zero(b - 1, ci - 1));
    if lhs == rhs {
        report
    } else {
        report.fail(format!("left {lhs}, right {rhs}"))
    }
}

/// `eps_alpha^[m] phi_beta^[n]` against the commuted form on the path
/// `delta`: plain commutation for `alpha != beta`, otherwise
/// `sum_r [<mu, alpha^vee> + m - n choose r]_alpha phi_alpha^[n-r] eps_alpha^[m-r]`.
pub fn check_commutation(
    rs: &RootSystem,
    lambda: &Weight,
    alpha: usize,
    beta: usize,
    m: usize,
    n: usize,
    delta: &Path,
) -> CheckReport {
    let report = CheckReport::new(
        "commutation",
        json!({
            "system": rs.name(), "lambda": lambda, "alpha": alpha, "beta": beta,
            "m": m, "n": n, "path": delta,
        }),
    );
    let x = PathVector::basis(delta.clone());
    let lhs = epsilon_divided(rs, lambda, alpha, m, &phi_divided(rs, beta, n, &x));
    let rhs = if alpha != beta {
        phi_divided(rs, beta, n, &epsilon_divided(rs, lambda, alpha, m, &x))
    } else {
        let mu = lambda - &rs.root_to_weight(&delta.height(rs.rank()));
        let top = rs.pairing(&mu, alpha) + m as i64 - n as i64;
        let d = rs.symmetrizer(alpha);
        (0..=m.min(n)).fold(PathVector::zero(), |acc, r| {
            let term = phi_divided(rs, alpha, n - r, &epsilon_divided(rs, lambda, alpha, m - r, &x));
            acc.add(&term.scale(&qbinom(top, r as u32, d)))
        })
    };
    if lhs.same_vector(&rhs) {
        report
    } else {
        report.fail(format!("vectors differ: left has {} terms, right has {}", lhs.len(), rhs.len()))
    }
}

/// Shared knobs for the seeded batch runners.
#[derive(Clone, Copy, Debug)]
pub struct BatchConfig {
    pub samples: usize,
    pub seed: u64,
    /// Cap on each `c_alpha` of generated heights.
    pub max_height: i64,
    pub force: bool,
    pub strategy: Strategy,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig { samples: 100, seed: 0, max_height: 3, force: false, strategy: Strategy::default() }
    }
}

const WEIGHT_BOUND: i64 = 6;
const SHIFT_BOUND: i64 = 2;
pub const DEFAULT_ORDERS: [u64; 5] = [3, 4, 5, 6, 7];

fn random_weight(rng: &mut ChaCha8Rng, rank: usize, bound: i64) -> Weight {
    Weight((0..rank).map(|_| rng.gen_range(-bound..=bound)).collect())
}

fn random_height(rng: &mut ChaCha8Rng, rank: usize, cap: i64) -> RootVector {
    RootVector((0..rank).map(|_| rng.gen_range(0..=cap)).collect())
}

/// Orders in `candidates` that pass the basic filter for `rs`.
pub fn admissible_orders(rs: &RootSystem, candidates: &[u64]) -> Vec<u64> {
    candidates.iter().copied().filter(|&l| validity_violation(rs, l, None).is_none()).collect()
}

pub fn identity_batch(cfg: &BatchConfig) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let triples: Vec<(i64, i64, u32)> = (0..cfg.samples)
        .map(|_| (rng.gen_range(-20..=20), rng.gen_range(-20..=20), rng.gen_range(0..=10)))
        .collect();
    exec::map(cfg.strategy, &triples, |&(a, b, c)| check_qbinom_identity(a, b, c))
}

/// Every path of length at most `max_len`, every pair of simple roots and
/// every `1 <= m, n <= max_power`, with one random weight per path.
pub fn commutation_batch(rs: &RootSystem, max_len: usize, max_power: usize, cfg: &BatchConfig) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let rank = rs.rank();
    let mut paths = vec![Path::empty()];
    let mut layer = vec![Path::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|p| (0..rank).map(move |a| Path([p.entries(), &[a as u8]].concat())))
            .collect();
        paths.extend(layer.iter().cloned());
    }
    let mut jobs = Vec::new();
    for p in paths {
        let lambda = random_weight(&mut rng, rank, WEIGHT_BOUND);
        for a in 0..rank {
            for b in 0..rank {
                for m in 1..=max_power {
                    for n in 1..=max_power {
                        jobs.push((lambda.clone(), a, b, m, n, p.clone()));
                    }
                }
            }
        }
    }
    exec::map(cfg.strategy, &jobs, |(lambda, a, b, m, n, p)| check_commutation(rs, lambda, *a, *b, *m, *n, p))
}

pub fn qint_batch(rs: &RootSystem, orders: &[u64], cfg: &BatchConfig) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let jobs: Vec<(Weight, Weight, u64)> = (0..cfg.samples)
        .map(|_| {
            let lambda = random_weight(&mut rng, rs.rank(), WEIGHT_BOUND);
            let gamma = random_weight(&mut rng, rs.rank(), SHIFT_BOUND);
            (lambda, gamma, orders[rng.gen_range(0..orders.len())])
        })
        .collect();
    exec::map(cfg.strategy, &jobs, |(lambda, gamma, l)| check_qint_periodicity(rs, lambda, gamma, *l, cfg.force))
}

/// Draws a height below `l` in every coordinate; in default mode it is
/// redrawn until it passes the factorial part of the filter.
fn height_for(rng: &mut ChaCha8Rng, rs: &RootSystem, l: u64, cfg: &BatchConfig, filtered: bool) -> RootVector {
    let cap = cfg.max_height.min(l as i64 - 1).max(0);
    let mut nu = random_height(rng, rs.rank(), cap);
    for _ in 0..64 {
        if !filtered || cfg.force || validity_violation(rs, l, Some(&nu)).is_none() {
            break;
        }
        nu = random_height(rng, rs.rank(), cap);
    }
    nu
}

pub fn congruence_batch(rs: &RootSystem, orders: &[u64], cfg: &BatchConfig) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pool = if cfg.force { orders.to_vec() } else { admissible_orders(rs, orders) };
    let pool = if pool.is_empty() { orders.to_vec() } else { pool };
    let jobs: Vec<(Weight, Weight, u64, RootVector)> = (0..cfg.samples)
        .map(|_| {
            let l = pool[rng.gen_range(0..pool.len())];
            let nu = height_for(&mut rng, rs, l, cfg, true);
            let lambda = random_weight(&mut rng, rs.rank(), WEIGHT_BOUND);
            let gamma = random_weight(&mut rng, rs.rank(), SHIFT_BOUND);
            (lambda, gamma, l, nu)
        })
        .collect();
    exec::try_map(cfg.strategy, &jobs, |(lambda, gamma, l, nu)| {
        check_matrix_congruence(rs, lambda, gamma, *l, nu, cfg.force)
    })
}

/// A field together with the period `l` to test it at.
#[derive(Clone, Debug)]
pub struct PeriodicSetting {
    pub field: Field,
    pub l: u64,
}

impl PeriodicSetting {
    /// `l` is read from the field for a primitive root of unity and must be
    /// given for `q = 1` in characteristic `p`.
    pub fn new(field: Field, l: Option<u64>) -> Result<Self> {
        let l = match (&field.spec().q, l) {
            (_, Some(l)) => l,
            (QKind::One, None) => {
                return Err(crate::error::Error::Invalid(format!(
                    "{} needs an explicit period l", field.spec()
                )))
            }
            _ => field.spec().root_order(),
        };
        Ok(PeriodicSetting { field, l })
    }

    pub fn parse(spec: &str, l: Option<u64>) -> Result<Self> {
        PeriodicSetting::new(Field::new(spec.parse::<FieldSpec>()?)?, l)
    }
}

pub fn periodicity_batch(rs: &RootSystem, settings: &[PeriodicSetting], cfg: &BatchConfig) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let jobs: Vec<(usize, Weight, Weight, Weight)> = (0..cfg.samples)
        .map(|_| {
            let k = rng.gen_range(0..settings.len());
            let s = &settings[k];
            let filtered = !is_classical_modular(&s.field);
            let nu = height_for(&mut rng, rs, s.l, cfg, filtered);
            let lambda = random_weight(&mut rng, rs.rank(), WEIGHT_BOUND);
            let mu = &lambda - &rs.root_to_weight(&nu);
            let gamma = random_weight(&mut rng, rs.rank(), SHIFT_BOUND);
            (k, lambda, mu, gamma)
        })
        .collect();
    exec::try_map(cfg.strategy, &jobs, |(k, lambda, mu, gamma)| {
        let s = &settings[*k];
        check_periodicity_theorem(&s.field, s.l, rs, lambda, mu, gamma, cfg.force)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(xs: &[i64]) -> Weight {
        Weight(xs.to_vec())
    }

    #[test]
    fn qint_periodicity_examples() {
        let a1 = RootSystem::named("A1").unwrap();
        assert!(check_qint_periodicity(&a1, &w(&[1]), &w(&[1]), 3, false).is_pass());
        assert!(check_qint_periodicity(&a1, &w(&[5]), &w(&[0]), 7, false).is_pass());
        let r = check_qint_periodicity(&a1, &w(&[1]), &w(&[1]), 2, false);
        assert_eq!(r.outcome, Outcome::HypothesisUnsatisfied);
        let r = check_qint_periodicity(&a1, &w(&[1]), &w(&[1]), 2, true);
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.witness.unwrap().contains("reduces to 2"));
        assert_eq!(r.instance["forced"], Value::Bool(true));
    }

    #[test]
    fn filter_examples() {
        let b2 = RootSystem::named("B2").unwrap();
        let g2 = RootSystem::named("G2").unwrap();
        assert!(validity_violation(&b2, 4, None).is_some());
        assert!(validity_violation(&b2, 6, None).is_none());
        assert!(validity_violation(&b2, 6, Some(&RootVector(vec![3, 0]))).is_some());
        assert!(validity_violation(&g2, 3, None).is_some());
        assert!(validity_violation(&g2, 4, Some(&RootVector(vec![0, 2]))).is_some());
        assert_eq!(admissible_orders(&b2, &DEFAULT_ORDERS), vec![3, 5, 6, 7]);
    }

    #[test]
    fn congruence_examples() {
        let a1 = RootSystem::named("A1").unwrap();
        for (lam, g) in [(0, 1), (4, -2), (-3, 2)] {
            let r = check_matrix_congruence(&a1, &w(&[lam]), &w(&[g]), 3, &RootVector(vec![1]), false).unwrap();
            assert!(r.is_pass(), "{r:?}");
        }
        let r = check_matrix_congruence(&a1, &w(&[1]), &w(&[1]), 3, &RootVector(vec![2]), false).unwrap();
        assert!(r.is_pass());
        let r = check_matrix_congruence(&a1, &w(&[1]), &w(&[0]), 3, &RootVector(vec![2]), false).unwrap();
        assert!(r.is_pass());
        let r = check_matrix_congruence(&a1, &w(&[1]), &w(&[1]), 3, &RootVector(vec![3]), false).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisUnsatisfied);
    }

    #[test]
    fn periodicity_examples() {
        let a1 = RootSystem::named("A1").unwrap();
        let f2 = Field::parse("F2@1").unwrap();
        let r = check_periodicity_theorem(&f2, 2, &a1, &w(&[2]), &w(&[0]), &w(&[1]), false).unwrap();
        assert!(r.is_pass(), "{r:?}");
        let z3 = Field::parse("Q@zeta3").unwrap();
        let r = check_periodicity_theorem(&z3, 3, &a1, &w(&[3]), &w(&[1]), &w(&[1]), false).unwrap();
        assert!(r.is_pass(), "{r:?}");
        let r = check_periodicity_theorem(&z3, 3, &a1, &w(&[3]), &w(&[1]), &w(&[0]), false).unwrap();
        assert!(r.is_pass());
        let r = check_periodicity_theorem(&z3, 5, &a1, &w(&[3]), &w(&[1]), &w(&[1]), false).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisUnsatisfied);
        let r = check_periodicity_theorem(&z3, 3, &a1, &w(&[3]), &w(&[5]), &w(&[1]), false).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisUnsatisfied);
    }

    #[test]
    fn identity_examples() {
        assert!(check_qbinom_identity(5, -3, 0).is_pass());
        assert!(check_qbinom_identity(2, 2, 1).is_pass());
        assert!(check_qbinom_identity(-7, 4, 6).is_pass());
    }

    #[test]
    fn commutation_examples() {
        let a1 = RootSystem::named("A1").unwrap();
        let a2 = RootSystem::named("A2").unwrap();
        assert!(check_commutation(&a1, &w(&[4]), 0, 0, 1, 1, &Path::empty()).is_pass());
        assert!(check_commutation(&a2, &w(&[1, -2]), 0, 1, 2, 3, &Path(vec![1, 0, 1])).is_pass());
        assert!(check_commutation(&a2, &w(&[3, 2]), 1, 1, 3, 2, &Path(vec![1, 0, 1, 1])).is_pass());
    }

    #[test]
    fn reports_serialize_as_json_lines() {
        let r = check_qbinom_identity(2, 2, 1);
        let line = r.to_json_line();
        assert_eq!(line, r#"{"check":"qbinom-identity","instance":{"a":2,"b":2,"c":1},"outcome":"pass"}"#);
        let s = BatchSummary::of("qbinom-identity", 7, &[r]);
        assert_eq!(
            s.to_json_line(),
            r#"{"summary":{"check":"qbinom-identity","seed":7,"pass":1,"fail":0,"hypothesis-unsatisfied":0}}"#
        );
    }

    #[test]
    fn batches_are_reproducible() {
        let cfg = BatchConfig { samples: 20, seed: 11, ..BatchConfig::default() };
        assert_eq!(identity_batch(&cfg), identity_batch(&cfg));
        let a2 = RootSystem::named("A2").unwrap();
        let a = congruence_batch(&a2, &DEFAULT_ORDERS, &cfg).unwrap();
        assert_eq!(a, congruence_batch(&a2, &DEFAULT_ORDERS, &cfg).unwrap());
        assert!(a.iter().all(CheckReport::is_pass));
    }
}
