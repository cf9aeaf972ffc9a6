//! Success probabilities for recovering a random permutation of `N` labelled
//! objects: the quantum optimum, the classical optimum and the counting bound.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::to_big_int;
use crate::young::{
    check_cap, enumerate_partitions_with_cap, factorial, IrrepStats, MinSide, YoungDiagram,
    DEFAULT_ENUMERATION_CAP,
};

/// `N` objects coded with `d` colors (classical) or `d`-level systems (quantum).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CodingInstance {
    pub n_boxes: u32,
    pub n_colors: u32,
}

impl CodingInstance {
    pub fn new(n_boxes: u32, n_colors: u32) -> Result<Self> {
        if n_boxes == 0 {
            return Err(Error::domain("number of boxes N must be >= 1"));
        }
        if n_colors == 0 {
            return Err(Error::domain("number of colors d must be >= 1"));
        }
        Ok(CodingInstance { n_boxes, n_colors })
    }

    /// `r = d / N`
    pub fn ratio(&self) -> f64 {
        self.n_colors as f64 / self.n_boxes as f64
    }
}

impl fmt::Display for CodingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} d={}", self.n_boxes, self.n_colors)
    }
}

/// How a quantum success probability was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactEnumeration,
    PlancherelMc,
    SchurWeylMc,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactEnumeration => "exact-enumeration",
            Method::PlancherelMc => "plancherel-mc",
            Method::SchurWeylMc => "schur-weyl-mc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact-enumeration" => Ok(Method::ExactEnumeration),
            "plancherel-mc" => Ok(Method::PlancherelMc),
            "schur-weyl-mc" => Ok(Method::SchurWeylMc),
            other => Err(Error::parse(format!("unknown method {other:?}"))),
        }
    }
}

/// A probability that is either exact or a Monte Carlo estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Probability {
    Exact {
        #[serde(serialize_with = "crate::numeric::ser_display")]
        value: BigRational,
    },
    Estimate { value: f64, stderr: f64 },
}

impl Probability {
    pub fn value_f64(&self) -> f64 {
        match self {
            Probability::Exact { value } => crate::numeric::rational_to_f64(value),
            Probability::Estimate { value, .. } => *value,
        }
    }

    pub fn stderr(&self) -> f64 {
        match self {
            Probability::Exact { .. } => 0.0,
            Probability::Estimate { stderr, .. } => *stderr,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Probability::Exact { value } => Some(value),
            Probability::Estimate { .. } => None,
        }
    }
}

/// Per-diagram outcome of `min(m, D)`, counted over all diagrams of `N`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MinSideTally {
    /// Diagrams with `D < m`.
    pub dimension: u64,
    /// Diagrams with `m < D` (including `m = 0`).
    pub multiplicity: u64,
    /// Diagrams with `m = D`.
    pub tie: u64,
}

impl MinSideTally {
    fn add(&mut self, side: MinSide) {
        match side {
            MinSide::Dimension => self.dimension += 1,
            MinSide::Multiplicity => self.multiplicity += 1,
            MinSide::Tie => self.tie += 1,
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.dimension += other.dimension;
        self.multiplicity += other.multiplicity;
        self.tie += other.tie;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CodingReport {
    pub instance: CodingInstance,
    pub p_quantum: Probability,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub p_classical: BigRational,
    #[serde(serialize_with = "crate::numeric::ser_display")]
    pub p_info_bound: BigRational,
    #[serde(serialize_with = "ser_opt_display")]
    pub dim_w: Option<BigUint>,
    pub method: Method,
    pub min_sides: Option<MinSideTally>,
}

fn ser_opt_display<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

const CHUNK: usize = 1 << 13;

/// Maps every diagram of `n` through `f` in parallel and folds the results in
/// partition order. Chunking bounds memory for large `n`.
pub(crate) fn par_scan<T, F, R>(n: u32, cap: u32, f: F, init: T, fold: R) -> Result<T>
where
    T: Send,
    F: Fn(YoungDiagram) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let mut parts = enumerate_partitions_with_cap(n, cap)?;
    let mut acc = init;
    loop {
        let chunk: Vec<YoungDiagram> = parts.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let mapped: Vec<T> = chunk.into_par_iter().map(&f).collect();
        for v in mapped {
            acc = fold(acc, v);
        }
    }
    Ok(acc)
}

/// Optimal quantum success probability `(1/N!) Σ_ρ min(m_ρ, D_ρ) D_ρ`, summed
/// exactly over every partition of `N`.
pub fn quantum_pmax_exact(instance: &CodingInstance) -> Result<CodingReport> {
    quantum_pmax_exact_with_cap(instance, DEFAULT_ENUMERATION_CAP)
}

pub fn quantum_pmax_exact_with_cap(instance: &CodingInstance, cap: u32) -> Result<CodingReport> {
    let n = instance.n_boxes;
    let d = instance.n_colors;
    check_cap(n, cap)?;
    let n_fact = factorial(n);
    let d_pow = BigUint::from(d).pow(n);
    let (dim_w, tally) = par_scan(
        n,
        cap,
        |diagram| {
            let stats = IrrepStats::with_constants(diagram, d, &n_fact, &d_pow);
            let mut t = MinSideTally::default();
            t.add(stats.min_side());
            (stats.dim_w_contribution(), t)
        },
        (BigUint::zero(), MinSideTally::default()),
        |(w, t), (w2, t2)| (w + w2, t.merge(t2)),
    )?;
    if dim_w > d_pow {
        return Err(Error::invariant(format!("dim W = {dim_w} exceeds d^N = {d_pow}")));
    }
    let p = BigRational::new(to_big_int(dim_w.clone()), to_big_int(n_fact));
    Ok(CodingReport {
        instance: *instance,
        p_quantum: Probability::Exact { value: p },
        p_classical: classical_success(instance),
        p_info_bound: info_bound(instance),
        dim_w: Some(dim_w),
        method: Method::ExactEnumeration,
        min_sides: Some(tally),
    })
}

/// Class sizes of the balanced coloring: `N mod d` classes of size `⌈N/d⌉`,
/// the rest `⌊N/d⌋` (empty classes dropped).
pub fn balanced_split(instance: &CodingInstance) -> Vec<u32> {
    let (n, d) = (instance.n_boxes, instance.n_colors);
    let (q, rem) = (n / d, n % d);
    (0..d)
        .map(|c| if c < rem { q + 1 } else { q })
        .filter(|&s| s > 0)
        .collect()
}

/// Best classical success probability `1 / ∏ n_c!` over the balanced split.
///
/// Moving a box from a class of size `a` to one of size `b ≤ a - 2` changes
/// `∏ n_c!` by the factor `(b + 1) / a < 1`, so the balanced split minimizes
/// the product.
pub fn classical_success(instance: &CodingInstance) -> BigRational {
    let den = balanced_split(instance)
        .into_iter()
        .fold(BigUint::one(), |acc, s| acc * factorial(s));
    BigRational::new(1.into(), to_big_int(den))
}

/// Counting bound `min(1, d^N / N!)`.
pub fn info_bound(instance: &CodingInstance) -> BigRational {
    let raw = info_bound_uncapped(instance);
    if raw > BigRational::one() {
        BigRational::one()
    } else {
        raw
    }
}

/// `d^N / N!` without the cap at 1.
pub fn info_bound_uncapped(instance: &CodingInstance) -> BigRational {
    BigRational::new(
        to_big_int(BigUint::from(instance.n_colors).pow(instance.n_boxes)),
        to_big_int(factorial(instance.n_boxes)),
    )
}

/// Per-diagram dimensions, multiplicities and both measures.
pub fn measure_tables(instance: &CodingInstance) -> Result<Vec<IrrepStats>> {
    measure_tables_with_cap(instance, DEFAULT_ENUMERATION_CAP)
}

pub fn measure_tables_with_cap(instance: &CodingInstance, cap: u32) -> Result<Vec<IrrepStats>> {
    let n = instance.n_boxes;
    let n_fact = factorial(n);
    let d_pow = BigUint::from(instance.n_colors).pow(n);
    let diagrams: Vec<YoungDiagram> = enumerate_partitions_with_cap(n, cap)?.collect();
    Ok(diagrams
        .into_par_iter()
        .map(|dg| IrrepStats::with_constants(dg, instance.n_colors, &n_fact, &d_pow))
        .collect())
}
