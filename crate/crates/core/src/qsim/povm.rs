use crate::error::{Error, Result};

use super::gamma::PermutationRep;
use super::linalg::{max_abs, max_abs_diff, min_eigenvalue, outer, CMatrix, CVector};

/// Residual allowed in `Σ E = Id` for a POVM handed to us.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Residual allowed in `E_σ = Γ(σ) E_ε Γ(σ)†`.
pub const COVARIANCE_TOL: f64 = 1e-12;
/// Most negative eigenvalue accepted on input POVM elements.
pub const INPUT_PSD_TOL: f64 = 1e-9;

/// A normalized pure state on `(C^d)^{⊗N}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignalState {
    pub amplitudes: CVector,
    pub norm: f64,
}

impl SignalState {
    /// Normalizes `amplitudes`; `norm` records the original length.
    pub fn new(amplitudes: CVector) -> Result<Self> {
        let norm = amplitudes.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::domain("signal state must be finite and nonzero"));
        }
        Ok(SignalState { amplitudes: amplitudes.unscale(norm), norm })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }
}

/// One measurement operator per permutation, indexed by permutation rank.
#[derive(Clone, Debug)]
pub struct Povm {
    pub elements: Vec<CMatrix>,
}

impl Povm {
    pub fn completeness_residual(&self) -> f64 {
        let dim = self.elements[0].nrows();
        let sum = self.elements.iter().fold(CMatrix::zeros(dim, dim), |acc, e| acc + e);
        max_abs_diff(&sum, &CMatrix::identity(dim, dim))
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.elements.iter().map(min_eigenvalue).fold(f64::INFINITY, f64::min)
    }
}

/// A covariant POVM: `E_σ = Γ(σ) E_ε Γ(σ)†` for every `σ`, plus one extra
/// outcome `completion` covering the part of the space the `E_σ` miss.
#[derive(Clone, Debug)]
pub struct CovariantPovm {
    pub seed_operator: CMatrix,
    pub completion: CMatrix,
    pub group_order: usize,
}

impl CovariantPovm {
    /// Generates `E_σ` for every `σ` in rank order.
    pub fn elements(&self, rep: &PermutationRep) -> Vec<CMatrix> {
        rep.ops.iter().map(|g| g.conjugate(&self.seed_operator)).collect()
    }

    /// `max |Σ_σ E_σ + completion - Id|`
    pub fn completeness_residual(&self, rep: &PermutationRep) -> f64 {
        let dim = rep.space.dim;
        let sum = rep
            .ops
            .iter()
            .fold(self.completion.clone(), |acc, g| acc + g.conjugate(&self.seed_operator));
        max_abs_diff(&sum, &CMatrix::identity(dim, dim))
    }

    /// Smallest eigenvalue over the seed and completion; the `E_σ` are unitary
    /// conjugates of the seed and share its spectrum.
    pub fn min_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.seed_operator).min(min_eigenvalue(&self.completion))
    }
}

fn check_dims(rep: &PermutationRep, elements: &[CMatrix]) -> Result<()> {
    if elements.len() != rep.order() {
        return Err(Error::mismatch(format!(
            "{} POVM elements for a group of order {}",
            elements.len(),
            rep.order()
        )));
    }
    if let Some(e) = elements.iter().find(|e| e.nrows() != rep.space.dim || e.ncols() != rep.space.dim) {
        return Err(Error::mismatch(format!(
            "POVM element is {}x{}, space has dimension {}",
            e.nrows(),
            e.ncols(),
            rep.space.dim
        )));
    }
    Ok(())
}

/// `max_σ |E_σ - Γ(σ) E_ε Γ(σ)†|`
pub fn covariance_residual(rep: &PermutationRep, elements: &[CMatrix]) -> Result<f64> {
    check_dims(rep, elements)?;
    Ok(rep
        .ops
        .iter()
        .zip(elements)
        .map(|(g, e)| max_abs_diff(e, &g.conjugate(&elements[0])))
        .fold(0.0, f64::max))
}

/// Group-averages an arbitrary permutation-indexed POVM:
/// `E'_τ = (1/N!) Σ_σ Γ(σ)† E_{σ∘τ} Γ(σ)`.
///
/// The result is covariant and gives the same average success probability on
/// the ensemble `{Γ(σ)|Ψ⟩}` for every `Ψ`.
pub fn symmetrize_povm(rep: &PermutationRep, raw: &Povm) -> Result<CovariantPovm> {
    let elements = symmetrized_elements(rep, raw)?;
    let residual = covariance_residual(rep, &elements)?;
    if residual > COVARIANCE_TOL {
        return Err(Error::invariant(format!(
            "symmetrized POVM not covariant: residual {residual:e}"
        )));
    }
    let dim = rep.space.dim;
    Ok(CovariantPovm {
        seed_operator: elements[0].clone(),
        completion: CMatrix::zeros(dim, dim),
        group_order: rep.order(),
    })
}

/// The elements `E'_τ` of [`symmetrize_povm`], computed directly from the
/// averaging formula for every `τ`.
pub fn symmetrized_elements(rep: &PermutationRep, raw: &Povm) -> Result<Vec<CMatrix>> {
    check_dims(rep, &raw.elements)?;
    let residual = raw.completeness_residual();
    if residual > COMPLETENESS_TOL {
        return Err(Error::domain(format!(
            "POVM elements do not sum to the identity (residual {residual:e})"
        )));
    }
    let min_eig = raw.min_eigenvalue();
    if min_eig < -INPUT_PSD_TOL {
        return Err(Error::domain(format!(
            "POVM element is not positive semidefinite (eigenvalue {min_eig:e})"
        )));
    }
    let order = rep.order() as f64;
    let dim = rep.space.dim;
    Ok(rep
        .ops
        .iter()
        .map(|tau| {
            rep.ops
                .iter()
                .fold(CMatrix::zeros(dim, dim), |acc, sigma| {
                    let st = sigma.perm.compose(&tau.perm);
                    acc + sigma.conjugate_adjoint(&raw.elements[st.rank()])
                })
                .unscale(order)
        })
        .collect())
}

/// Average success `(1/N!) Σ_σ ⟨Ψ|Γ(σ)† E_σ Γ(σ)|Ψ⟩` when `Γ(σ)|Ψ⟩` is sent
/// with uniform `σ` and outcome `σ` is the guess.
pub fn success_probability(rep: &PermutationRep, signal: &SignalState, elements: &[CMatrix]) -> Result<f64> {
    check_dims(rep, elements)?;
    if signal.dim() != rep.space.dim {
        return Err(Error::mismatch(format!(
            "signal of dimension {} in a space of dimension {}",
            signal.dim(),
            rep.space.dim
        )));
    }
    let mut total = num_complex::Complex64::new(0.0, 0.0);
    for (g, e) in rep.ops.iter().zip(elements) {
        let moved = g.apply(&signal.amplitudes);
        total += moved.dotc(&(e * &moved));
    }
    let total = total / rep.order() as f64;
    if total.im.abs() > 1e-12 * total.re.abs().max(1.0) {
        return Err(Error::invariant(format!(
            "success probability has imaginary part {:e}",
            total.im
        )));
    }
    Ok(total.re)
}

/// `⟨Ψ|E_ε|Ψ⟩`, the success probability of a covariant POVM.
pub fn covariant_success(povm: &CovariantPovm, signal: &SignalState) -> f64 {
    signal.amplitudes.dotc(&(&povm.seed_operator * &signal.amplitudes)).re
}

/// A covariant POVM with rank-one seed `|Φ⟩⟨Φ|`, completed by `Id - P_W`
/// where `P_W = Σ_σ Γ(σ)|Φ⟩⟨Φ|Γ(σ)†` must be a projector.
pub fn rank_one_covariant(rep: &PermutationRep, phi: &CVector) -> Result<CovariantPovm> {
    let seed = outer(phi);
    let dim = rep.space.dim;
    let frame = rep.ops.iter().fold(CMatrix::zeros(dim, dim), |acc, g| acc + g.conjugate(&seed));
    let idempotence = max_abs_diff(&(&frame * &frame), &frame);
    if idempotence > COMPLETENESS_TOL {
        return Err(Error::invariant(format!(
            "Σ Γ|Φ⟩⟨Φ|Γ† is not a projector (residual {idempotence:e})"
        )));
    }
    let completion = CMatrix::identity(dim, dim) - frame;
    debug_assert!(max_abs(&completion) <= 1.0 + 1e-9);
    Ok(CovariantPovm { seed_operator: seed, completion, group_order: rep.order() })
}
