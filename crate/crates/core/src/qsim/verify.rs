use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::seeded_rng;

use super::gamma::PermutationRep;
use super::linalg::{max_abs_diff, random_matrix, random_vector, CMatrix};
use super::n3::{build_n3_example, orthogonality_check_n3, overlap_residual};
use super::pgm::{pgm_success, whitened_optimal_povm};
use super::povm::{
    covariance_residual, success_probability, symmetrize_povm, symmetrized_elements, Povm, SignalState,
};

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationCheck {
    pub check_name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationCheck {
    pub fn new(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        VerificationCheck {
            check_name: name.into(),
            max_residual,
            tolerance,
            pass: max_residual.is_finite() && max_residual <= tolerance,
        }
    }
}

/// Named groups of checks runnable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// The three-object example.
    N3,
    /// Group averaging of random measurements.
    Symmetrize,
    /// Optimal covariant measurements against the exact formula.
    Optimal,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n3" => Ok(Suite::N3),
            "symmetrize" => Ok(Suite::Symmetrize),
            "optimal" => Ok(Suite::Optimal),
            "all" => Ok(Suite::All),
            other => Err(Error::parse(format!(
                "unknown suite {other:?}; expected one of n3, symmetrize, optimal, all"
            ))),
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<VerificationCheck>> {
    Ok(match suite {
        Suite::N3 => n3_checks()?,
        Suite::Symmetrize => symmetrize_checks(seed, 20)?,
        Suite::Optimal => optimal_checks(seed)?,
        Suite::All => {
            let mut all = n3_checks()?;
            all.extend(symmetrize_checks(seed, 20)?);
            all.extend(optimal_checks(seed)?);
            all
        }
    })
}

/// Everything about the three-object example.
pub fn n3_checks() -> Result<Vec<VerificationCheck>> {
    let rep = PermutationRep::new(3, 2)?;
    let (psi, povm) = build_n3_example()?;
    let elements = povm.elements(&rep);
    let success = success_probability(&rep, &psi, &elements)?;
    let pgm = pgm_success(&rep, &psi)?;
    let orth = orthogonality_check_n3()?;

    let mut rep_residual: f64 = 0.0;
    for a in &rep.ops {
        for b in &rep.ops {
            let ab = rep.get(&a.perm.compose(&b.perm)).matrix();
            rep_residual = rep_residual.max(max_abs_diff(&(a.matrix() * b.matrix()), &ab));
        }
    }
    let mut out = vec![
        VerificationCheck::new("representation-homomorphism", rep_residual, 0.0),
        VerificationCheck::new("signal-normalized", (psi.amplitudes.norm() - 1.0).abs(), 1e-12),
        VerificationCheck::new("overlap-one-fifth", overlap_residual(&rep, &psi.amplitudes), 1e-12),
        VerificationCheck::new("povm-completeness", povm.completeness_residual(&rep), 1e-12),
        VerificationCheck::new("povm-psd", (-povm.min_eigenvalue()).max(0.0), 1e-12),
        VerificationCheck::new("povm-covariance", covariance_residual(&rep, &elements)?, 1e-12),
        VerificationCheck::new("success-five-sixths", (success - 5.0 / 6.0).abs(), 1e-10),
        VerificationCheck::new("pgm-agrees", (pgm - success).abs(), 1e-8),
        VerificationCheck::new("orthogonality-cross-irrep", orth.cross_irrep_residual, 1e-12),
        VerificationCheck::new("orthogonality-same-irrep", orth.same_irrep_residual, 1e-12),
        VerificationCheck::new("equivalent-copies-aligned", orth.alignment_residual, 1e-12),
        VerificationCheck::new("phi-copy-norms", orth.phi_norm_residual, 1e-12),
        VerificationCheck::new("phi-copies-orthogonal", orth.phi_cross_overlap, 1e-12),
    ];
    // random signal states never beat the optimum
    let mut rng = seeded_rng(0x5eed);
    let mut excess: f64 = 0.0;
    for _ in 0..200 {
        let s = SignalState::new(random_vector(8, &mut rng))?;
        excess = excess.max(pgm_success(&rep, &s)? - 5.0 / 6.0);
    }
    out.push(VerificationCheck::new("random-states-below-optimum", excess.max(0.0), 1e-8));
    Ok(out)
}

/// A random POVM with `N!` outcomes: `E_k = S^{-1/2} B_k B_k† S^{-1/2}`.
pub fn random_povm(rep: &PermutationRep, seed: u64) -> Povm {
    let mut rng = seeded_rng(seed);
    let dim = rep.space.dim;
    let raw: Vec<CMatrix> = (0..rep.order())
        .map(|_| {
            let b = random_matrix(dim, 2, &mut rng);
            &b * b.adjoint()
        })
        .collect();
    let s = raw.iter().fold(CMatrix::zeros(dim, dim), |a, e| a + e);
    let s_inv_half = super::linalg::hermitian_map(&s, |v| 1.0 / v.sqrt());
    Povm { elements: raw.iter().map(|a| &s_inv_half * a * &s_inv_half).collect() }
}

/// Covariance and success preservation for `count` random POVMs at `N=3, d=2`.
pub fn symmetrize_checks(seed: u64, count: u64) -> Result<Vec<VerificationCheck>> {
    let rep = PermutationRep::new(3, 2)?;
    let mut rng = seeded_rng(seed ^ 0xa11ce);
    let mut cov: f64 = 0.0;
    let mut preserved: f64 = 0.0;
    let mut complete: f64 = 0.0;
    for k in 0..count {
        let raw = random_povm(&rep, seed.wrapping_add(k));
        let elems = symmetrized_elements(&rep, &raw)?;
        cov = cov.max(covariance_residual(&rep, &elems)?);
        let sym = symmetrize_povm(&rep, &raw)?;
        complete = complete.max(sym.completeness_residual(&rep));
        let psi = SignalState::new(random_vector(rep.space.dim, &mut rng))?;
        let before = success_probability(&rep, &psi, &raw.elements)?;
        let after = success_probability(&rep, &psi, &elems)?;
        preserved = preserved.max((before - after).abs());
    }
    Ok(vec![
        VerificationCheck::new("symmetrized-covariance", cov, 1e-12),
        VerificationCheck::new("symmetrized-success-preserved", preserved, 1e-12),
        VerificationCheck::new("symmetrized-completeness", complete, 1e-10),
    ])
}

/// Whitened optimal measurements reach `Σ min(m, D) D / N!` for small `(N, d)`.
pub fn optimal_checks(seed: u64) -> Result<Vec<VerificationCheck>> {
    let mut out = Vec::new();
    for (n, d) in [(2, 2), (3, 2), (4, 2), (3, 3), (5, 2), (4, 3)] {
        let rep = PermutationRep::new(n, d)?;
        let (signal, povm, _) = whitened_optimal_povm(&rep, seed)?;
        let exact = crate::coding::quantum_pmax_exact(&crate::coding::CodingInstance::new(n as u32, d as u32)?)?;
        let want = exact.p_quantum.value_f64();
        let elements = povm.elements(&rep);
        let got = success_probability(&rep, &signal, &elements)?;
        out.push(VerificationCheck::new(format!("optimal-success-N{n}-d{d}"), (got - want).abs(), 1e-8));
        out.push(VerificationCheck::new(
            format!("optimal-completeness-N{n}-d{d}"),
            povm.completeness_residual(&rep),
            1e-8,
        ));
        let pgm = pgm_success(&rep, &signal)?;
        out.push(VerificationCheck::new(format!("optimal-pgm-N{n}-d{d}"), (pgm - want).abs(), 1e-8));
    }
    Ok(out)
}
