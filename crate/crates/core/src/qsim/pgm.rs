use crate::error::{Error, Result};

use super::gamma::PermutationRep;
use super::linalg::{psd_sqrt, CMatrix, CVector};
use super::povm::{rank_one_covariant, CovariantPovm, SignalState};

/// Eigenvalues at or below this are treated as zero in PSD square roots.
pub const EIGEN_CLIP: f64 = 1e-12;
/// Most negative Gram eigenvalue tolerated.
pub const GRAM_PSD_TOL: f64 = 1e-10;

/// `G_{στ} = ⟨Ψ|Γ(σ)†Γ(τ)|Ψ⟩` over all of `S_N`, rank-ordered.
pub fn gram_matrix(rep: &PermutationRep, signal: &SignalState) -> CMatrix {
    let moved: Vec<CVector> = rep.ops.iter().map(|g| g.apply(&signal.amplitudes)).collect();
    let k = moved.len();
    CMatrix::from_fn(k, k, |s, t| moved[s].dotc(&moved[t]))
}

/// Success probability of the pretty-good (square-root) measurement on the
/// equiprobable ensemble `{Γ(σ)|Ψ⟩}`: `(1/N!) Σ_σ ((√G)_{σσ})²`.
pub fn pgm_success(rep: &PermutationRep, signal: &SignalState) -> Result<f64> {
    if signal.dim() != rep.space.dim {
        return Err(Error::mismatch("signal dimension differs from tensor space"));
    }
    let gram = gram_matrix(rep, signal);
    let root = psd_sqrt(&gram, EIGEN_CLIP, GRAM_PSD_TOL)?;
    let k = rep.order() as f64;
    Ok((0..rep.order()).map(|s| root[(s, s)].norm_sqr()).sum::<f64>() / k)
}

/// An optimal covariant measurement for `(N, d)`, found without aligned
/// irrep bases.
///
/// Starting from a generic random `|ψ⟩`, the frame operator
/// `S = Σ_σ Γ(σ)|ψ⟩⟨ψ|Γ(σ)†` has support of dimension `Σ_ρ min(m_ρ, D_ρ) D_ρ`.
/// Whitening gives `|Φ⟩ = S^{-1/2}|ψ⟩`, for which `Σ_σ Γ(σ)|Φ⟩⟨Φ|Γ(σ)†` is the
/// projector onto that support. Signalling with `|Φ⟩/‖Φ‖` succeeds with
/// probability `‖Φ‖² = dim W / N!`.
pub fn whitened_optimal_povm(rep: &PermutationRep, seed: u64) -> Result<(SignalState, CovariantPovm, usize)> {
    let mut rng = crate::young::seeded_rng(seed);
    let psi = super::linalg::random_vector(rep.space.dim, &mut rng);
    let dim = rep.space.dim;
    let seed_op = super::linalg::outer(&psi);
    let frame = rep.ops.iter().fold(CMatrix::zeros(dim, dim), |acc, g| acc + g.conjugate(&seed_op));
    let (vals, _) = super::linalg::hermitian_eigen(&frame);
    let top = vals.iter().copied().fold(0.0, f64::max);
    let cutoff = top * 1e-9;
    let rank = vals.iter().filter(|&&v| v > cutoff).count();
    let inv_sqrt = super::linalg::hermitian_map(&frame, |v| if v > cutoff { 1.0 / v.sqrt() } else { 0.0 });
    let phi = &inv_sqrt * &psi;
    let povm = rank_one_covariant(rep, &phi)?;
    Ok((SignalState::new(phi)?, povm, rank))
}
