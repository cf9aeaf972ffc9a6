//! Large-`N` behaviour: threshold sweeps in `r = d/N`, scans of the
//! short-row/short-column lemmas and of the tail bounds, and Monte Carlo
//! estimators of the optimal success probability beyond exact range.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coding::{
    classical_success, info_bound, par_scan, quantum_pmax_exact_with_cap, CodingInstance, Method,
    Probability,
};
use crate::error::{Error, Result};
use crate::numeric::{big_ln, ln_factorial, rational_to_f64};
use crate::young::{
    factorial, log_mult_over_dim, multiplicity, partition_counts_through, sample_plancherel_with,
    sample_schur_weyl_with, seeded_rng, dim_irrep_with, YoungDiagram, DEFAULT_ENUMERATION_CAP,
};

/// `C = π·√(2/3)`, the Hardy–Ramanujan growth exponent of p(n).
pub fn hardy_ramanujan_c() -> f64 {
    std::f64::consts::PI * (2.0f64 / 3.0).sqrt()
}

/// Knobs shared by the sweeps and scans.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticParams {
    /// Multiplier `A` in the `A·√N` row/column length threshold.
    pub a_threshold: f64,
    /// Exponent `C` in the `e^{C√N}` bound on p(N).
    pub erdos_c: f64,
    pub ratio: f64,
    pub sample_count: u64,
    pub rng_seed: u64,
}

impl Default for AsymptoticParams {
    fn default() -> Self {
        AsymptoticParams {
            a_threshold: 2.0,
            erdos_c: hardy_ramanujan_c(),
            ratio: 0.5,
            sample_count: 10_000,
            rng_seed: 0,
        }
    }
}

impl AsymptoticParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.a_threshold > 0.0 && self.a_threshold.is_finite()) {
            return Err(Error::domain("threshold multiplier A must be a positive number"));
        }
        if !(self.erdos_c > 0.0 && self.erdos_c.is_finite()) {
            return Err(Error::domain("Erdős constant C must be a positive number"));
        }
        if self.sample_count == 0 {
            return Err(Error::domain("sample count must be >= 1"));
        }
        Ok(())
    }
}

/// Which direction a lemma scan checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaKind {
    /// Short first column should force `D < m`.
    ShortColumns,
    /// Short first row should force `m < D`.
    ShortRows,
}

/// Outcome of scanning every diagram of `n` against one of the two lemmas.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaScan {
    pub kind: LemmaKind,
    pub n: u32,
    pub d: u32,
    pub a_threshold: f64,
    /// `A·√n`; a diagram is short when the relevant length is below this.
    pub threshold: f64,
    pub short: u64,
    pub long: u64,
    /// Short diagrams where the expected strict inequality fails the other way.
    pub violations: u64,
    /// Short diagrams with `D = m`.
    pub ties: u64,
    /// A few violating diagrams for diagnostics.
    pub examples: Vec<YoungDiagram>,
}

impl LemmaScan {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

const MAX_EXAMPLES: usize = 5;

fn lemma_scan(kind: LemmaKind, n: u32, d: u32, a: f64, cap: u32) -> Result<LemmaScan> {
    if d == 0 {
        return Err(Error::domain("number of colors d must be >= 1"));
    }
    if !(a > 0.0) {
        return Err(Error::domain("threshold multiplier A must be positive"));
    }
    let threshold = a * (n as f64).sqrt();
    let n_fact = factorial(n);
    let empty = LemmaScan {
        kind,
        n,
        d,
        a_threshold: a,
        threshold,
        short: 0,
        long: 0,
        violations: 0,
        ties: 0,
        examples: Vec::new(),
    };
    par_scan(
        n,
        cap,
        |diagram| {
            let mut s = LemmaScan { examples: Vec::new(), ..empty.clone() };
            let len = match kind {
                LemmaKind::ShortColumns => diagram.first_column_len(),
                LemmaKind::ShortRows => diagram.first_row_len(),
            };
            if (len as f64) >= threshold {
                s.long = 1;
                return s;
            }
            s.short = 1;
            let dim = dim_irrep_with(&diagram, &n_fact);
            let mult = multiplicity(&diagram, d);
            let bad = match kind {
                LemmaKind::ShortColumns => dim > mult,
                LemmaKind::ShortRows => mult > dim,
            };
            if dim == mult {
                s.ties = 1;
            } else if bad {
                s.violations = 1;
                s.examples.push(diagram);
            }
            s
        },
        empty.clone(),
        |mut acc, s| {
            acc.short += s.short;
            acc.long += s.long;
            acc.violations += s.violations;
            acc.ties += s.ties;
            for e in s.examples {
                if acc.examples.len() < MAX_EXAMPLES {
                    acc.examples.push(e);
                }
            }
            acc
        },
    )
}

/// Diagrams with first column shorter than `A√n`: counts those with `D > m`
/// (violations) and `D = m` (ties). The lemma only claims this for large `n`.
pub fn lemma1_scan(n: u32, d: u32, a_threshold: f64) -> Result<LemmaScan> {
    lemma_scan(LemmaKind::ShortColumns, n, d, a_threshold, DEFAULT_ENUMERATION_CAP)
}

/// Mirror of [`lemma1_scan`]: first row shorter than `A√n`, violations are `m > D`.
pub fn lemma2_scan(n: u32, d: u32, a_threshold: f64) -> Result<LemmaScan> {
    lemma_scan(LemmaKind::ShortRows, n, d, a_threshold, DEFAULT_ENUMERATION_CAP)
}

pub fn lemma_scan_with_cap(kind: LemmaKind, n: u32, d: u32, a: f64, cap: u32) -> Result<LemmaScan> {
    lemma_scan(kind, n, d, a, cap)
}

/// Per-diagram comparison of a measure against an exponential tail bound,
/// done in log space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub n: u32,
    pub d: Option<u32>,
    pub diagrams: u64,
    /// Diagrams whose bound exponent is nonnegative, so the bound is trivially ≥ 1.
    pub vacuous: u64,
    pub violations: u64,
    /// Smallest `ln(bound) - ln(measure)` over diagrams with nonzero measure.
    pub min_log_slack: f64,
    /// Largest `ln(bound) - ln(measure)` over diagrams with nonzero measure.
    pub max_log_slack: f64,
    pub examples: Vec<YoungDiagram>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }

    fn empty(name: &'static str, n: u32, d: Option<u32>) -> Self {
        BoundReport {
            name,
            n,
            d,
            diagrams: 0,
            vacuous: 0,
            violations: 0,
            min_log_slack: f64::INFINITY,
            max_log_slack: f64::NEG_INFINITY,
            examples: Vec::new(),
        }
    }

    fn single(name: &'static str, n: u32, d: Option<u32>, diagram: YoungDiagram, log_bound: f64, log_measure: f64) -> Self {
        let mut r = Self::empty(name, n, d);
        r.diagrams = 1;
        if log_bound >= 0.0 {
            r.vacuous = 1;
        }
        if log_measure.is_finite() {
            let slack = log_bound - log_measure;
            r.min_log_slack = slack;
            r.max_log_slack = slack;
            // Relative tolerance for rounding in the log-domain evaluation.
            if slack < -1e-12 * log_measure.abs().max(1.0) {
                r.violations = 1;
                r.examples.push(diagram);
            }
        }
        r
    }

    fn merge(mut self, other: Self) -> Self {
        self.diagrams += other.diagrams;
        self.vacuous += other.vacuous;
        self.violations += other.violations;
        self.min_log_slack = self.min_log_slack.min(other.min_log_slack);
        self.max_log_slack = self.max_log_slack.max(other.max_log_slack);
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e);
            }
        }
        self
    }
}

/// Checks `D²/n! ≤ exp(-2λ₁(ln(λ₁/√n) - 1))` for every diagram of `n`,
/// where `λ₁` is the first-column length.
pub fn kerov_bound_check(n: u32) -> Result<BoundReport> {
    kerov_bound_check_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn kerov_bound_check_with_cap(n: u32, cap: u32) -> Result<BoundReport> {
    let n_fact = factorial(n);
    let ln_n_fact = big_ln(&n_fact).unwrap_or(0.0);
    let sqrt_n = (n as f64).sqrt();
    par_scan(
        n,
        cap,
        |diagram| {
            let l1 = diagram.first_column_len() as f64;
            let log_bound = -2.0 * l1 * ((l1 / sqrt_n).ln() - 1.0);
            let dim = dim_irrep_with(&diagram, &n_fact);
            let log_mu = 2.0 * big_ln(&dim).unwrap() - ln_n_fact;
            BoundReport::single("kerov-column", n, None, diagram, log_bound, log_mu)
        },
        BoundReport::empty("kerov-column", n, None),
        BoundReport::merge,
    )
}

/// Checks `m·D/d^n ≤ exp(-λ̃₁(2(ln(λ̃₁/√n) - 1) - 1/(2r)))` with `r = d/n` and
/// `λ̃₁` the first-row length. Stated only asymptotically, so violations at
/// finite `n` are reported rather than treated as errors.
pub fn kerov_row_bound_check(n: u32, d: u32) -> Result<BoundReport> {
    kerov_row_bound_check_with_cap(n, d, DEFAULT_ENUMERATION_CAP)
}

pub fn kerov_row_bound_check_with_cap(n: u32, d: u32, cap: u32) -> Result<BoundReport> {
    if d == 0 {
        return Err(Error::domain("number of colors d must be >= 1"));
    }
    let n_fact = factorial(n);
    let ln_d_pow = n as f64 * (d as f64).ln();
    let r = d as f64 / n as f64;
    let sqrt_n = (n as f64).sqrt();
    par_scan(
        n,
        cap,
        |diagram| {
            let l1 = diagram.first_row_len() as f64;
            let log_bound = -l1 * (2.0 * ((l1 / sqrt_n).ln() - 1.0) - 1.0 / (2.0 * r));
            let mult = multiplicity(&diagram, d);
            let log_mu = if mult.is_zero() {
                f64::NEG_INFINITY
            } else {
                let dim = dim_irrep_with(&diagram, &n_fact);
                big_ln(&mult).unwrap() + big_ln(&dim).unwrap() - ln_d_pow
            };
            BoundReport::single("kerov-row", n, Some(d), diagram, log_bound, log_mu)
        },
        BoundReport::empty("kerov-row", n, Some(d)),
        BoundReport::merge,
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErdosReport {
    pub n_max: u32,
    pub erdos_c: f64,
    /// Values of `n` with `p(n) ≥ e^{C√n}`.
    pub violations: Vec<u32>,
    /// Largest `ln p(n) - C√n` over `1 ≤ n ≤ n_max`.
    pub max_log_excess: f64,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub p_at_n_max: BigUint,
}

impl ErdosReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `p(n) < e^{C√n}` for every `1 ≤ n ≤ n_max`.
pub fn erdos_bound_check(n_max: u32, erdos_c: f64) -> Result<ErdosReport> {
    if n_max == 0 {
        return Err(Error::domain("n_max must be >= 1"));
    }
    if !(erdos_c > 0.0) {
        return Err(Error::domain("C must be positive"));
    }
    let counts = partition_counts_through(n_max);
    let mut violations = Vec::new();
    let mut max_excess = f64::NEG_INFINITY;
    for n in 1..=n_max {
        let excess = big_ln(&counts[n as usize]).unwrap() - erdos_c * (n as f64).sqrt();
        max_excess = max_excess.max(excess);
        if excess >= 0.0 {
            violations.push(n);
        }
    }
    Ok(ErdosReport {
        n_max,
        erdos_c,
        violations,
        max_log_excess: max_excess,
        p_at_n_max: counts[n_max as usize].clone(),
    })
}

/// Sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub method: Method,
    pub samples: u64,
    pub value: f64,
    pub stderr: f64,
}

/// Schur–Weyl estimate of `P_max / (d^N/N!)`, rescaled when that factor is
/// representable as a double.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SchurWeylEstimate {
    pub ratio: Estimate,
    /// `d^N / N!` (uncapped), when finite and nonzero in double precision.
    pub scale: Option<f64>,
    pub p_max: Option<Estimate>,
}

const BATCH: u64 = 1024;

/// Draws `samples` values in fixed-size batches, batch `k` from ChaCha stream
/// `k` under `seed`, and concatenates them in batch order so the result does
/// not depend on thread scheduling.
fn sample_values<F>(samples: u64, seed: u64, draw: F) -> Vec<f64>
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let batches = samples.div_ceil(BATCH);
    let per_batch: Vec<Vec<f64>> = (0..batches)
        .into_par_iter()
        .map(|k| {
            let mut rng = seeded_rng(seed);
            rng.set_stream(k);
            let len = BATCH.min(samples - k * BATCH);
            (0..len).map(|_| draw(&mut rng)).collect()
        })
        .collect();
    per_batch.into_iter().flatten().collect()
}

fn mean_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mut sum = 0.0;
    for v in values {
        sum += v;
    }
    let mean = sum / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let mut ss = 0.0;
    for v in values {
        ss += (v - mean) * (v - mean);
    }
    (mean, (ss / (n - 1.0) / n).sqrt())
}

fn check_mc_args(n: u32, d: u32, samples: u64) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::domain("N and d must be >= 1"));
    }
    if samples == 0 {
        return Err(Error::domain("sample count must be >= 1"));
    }
    Ok(())
}

/// `P_max = E_{ρ ~ Plancherel}[min(1, m_ρ/D_ρ)]`, estimated from RSK shapes of
/// uniform random permutations.
pub fn pmax_estimate_plancherel(n: u32, d: u32, samples: u64, seed: u64) -> Result<Estimate> {
    check_mc_args(n, d, samples)?;
    let ln_fact = ln_factorial(n);
    let values = sample_values(samples, seed, |rng| {
        let shape = sample_plancherel_with(rng, n);
        log_mult_over_dim(&shape, d, ln_fact).min(0.0).exp()
    });
    let (value, stderr) = mean_stderr(&values);
    Ok(Estimate { method: Method::PlancherelMc, samples, value, stderr })
}

/// `P_max / (d^N/N!) = E_{ρ ~ Schur–Weyl}[min(1, D_ρ/m_ρ)]`, estimated from
/// RSK shapes of uniform random words.
pub fn pmax_estimate_schur_weyl(n: u32, d: u32, samples: u64, seed: u64) -> Result<SchurWeylEstimate> {
    check_mc_args(n, d, samples)?;
    let ln_fact = ln_factorial(n);
    let values = sample_values(samples, seed, |rng| {
        let shape = sample_schur_weyl_with(rng, n, d);
        (-log_mult_over_dim(&shape, d, ln_fact)).min(0.0).exp()
    });
    let (value, stderr) = mean_stderr(&values);
    let ratio = Estimate { method: Method::SchurWeylMc, samples, value, stderr };
    let scale = (n as f64 * (d as f64).ln() - ln_fact).exp();
    let scale = (scale.is_finite() && scale > 0.0).then_some(scale);
    Ok(SchurWeylEstimate {
        ratio,
        scale,
        p_max: scale.map(|s| Estimate { value: value * s, stderr: stderr * s, ..ratio }),
    })
}

/// One point of a threshold sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub n_boxes: u32,
    pub n_colors: u32,
    pub ratio: f64,
    pub method: Method,
    pub p_quantum: Probability,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub p_classical: BigRational,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub info_bound: BigRational,
    pub ratio_to_bound: f64,
}

/// `d = ⌊rN⌋`, at least 1. A tiny guard absorbs products like `0.29 * 100`
/// landing just under an integer.
pub fn colors_for_ratio(ratio: f64, n: u32) -> u32 {
    ((ratio * n as f64 + 1e-9).floor() as u32).max(1)
}

/// Above `1/e` the Plancherel estimator, below it the Schur–Weyl one.
pub fn preferred_estimator(ratio: f64) -> Method {
    if ratio > (-1.0f64).exp() {
        Method::PlancherelMc
    } else {
        Method::SchurWeylMc
    }
}

/// Settings for [`theorem1_sweep`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepConfig {
    pub samples: u64,
    pub seed: u64,
    pub cap: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { samples: 10_000, seed: 0, cap: DEFAULT_ENUMERATION_CAP }
    }
}

/// For each `N`, sets `d = ⌊rN⌋` and computes the quantum optimum exactly up
/// to the enumeration cap, by the estimator matching `r` above it.
pub fn theorem1_sweep(ratio: f64, n_list: &[u32], config: SweepConfig) -> Result<Vec<SweepRow>> {
    if !(ratio > 0.0 && ratio.is_finite()) {
        return Err(Error::domain("ratio r must be a positive number"));
    }
    n_list
        .iter()
        .enumerate()
        .map(|(idx, &n)| {
            let d = colors_for_ratio(ratio, n);
            let instance = CodingInstance::new(n, d)?;
            let bound = info_bound(&instance);
            let bound_f = rational_to_f64(&bound);
            let (method, p_quantum) = if n <= config.cap {
                let report = quantum_pmax_exact_with_cap(&instance, config.cap)?;
                (report.method, report.p_quantum)
            } else {
                // Each row draws from its own seed so rows stay independent.
                let seed = config.seed.wrapping_add(idx as u64);
                match preferred_estimator(ratio) {
                    Method::PlancherelMc => {
                        let e = pmax_estimate_plancherel(n, d, config.samples, seed)?;
                        (e.method, Probability::Estimate { value: e.value, stderr: e.stderr })
                    }
                    _ => {
                        let e = pmax_estimate_schur_weyl(n, d, config.samples, seed)?;
                        let (value, stderr) = match e.p_max {
                            Some(p) => (p.value, p.stderr),
                            None => (f64::NAN, f64::NAN),
                        };
                        (Method::SchurWeylMc, Probability::Estimate { value, stderr })
                    }
                }
            };
            let ratio_to_bound = match (&p_quantum, bound_f) {
                (Probability::Exact { value }, _) => rational_to_f64(&(value / &bound)),
                (Probability::Estimate { value, .. }, b) => value / b,
            };
            Ok(SweepRow {
                n_boxes: n,
                n_colors: d,
                ratio,
                method,
                p_quantum,
                p_classical: classical_success(&instance),
                info_bound: bound,
                ratio_to_bound,
            })
        })
        .collect()
}

/// Exact `min(1, m/D)` for one diagram; test and diagnostic helper.
pub fn min_mult_over_dim(diagram: &YoungDiagram, d: u32) -> f64 {
    let n_fact = factorial(diagram.n());
    let dim = dim_irrep_with(diagram, &n_fact);
    let mult = multiplicity(diagram, d);
    if mult >= dim {
        1.0
    } else {
        mult.to_f64().unwrap_or(0.0) / dim.to_f64().unwrap_or(f64::INFINITY)
    }
}
