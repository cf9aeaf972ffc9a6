//! The three-object, two-level example: explicit irrep basis, the signal
//! state with constant overlaps `1/5`, and its covariant measurement.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::gamma::PermutationRep;
use super::linalg::{c, inner, CMatrix, CVector};
use super::povm::{rank_one_covariant, CovariantPovm, SignalState};

const UP: usize = 0;
const DOWN: usize = 1;

/// How the phase in the `|1,1⟩` coefficients is read.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OmegaReading {
    /// `ω = e^{2πi/3}`
    CubeRoot,
    /// `e^{2πi}/3 = 1/3` taken literally.
    Literal,
}

impl OmegaReading {
    pub fn value(self) -> Complex64 {
        match self {
            OmegaReading::CubeRoot => Complex64::from_polar(1.0, 2.0 * PI / 3.0),
            OmegaReading::Literal => Complex64::from_polar(1.0, 2.0 * PI) / 3.0,
        }
    }
}

/// Which spin-flipped vector is called `|2,1⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CopyLabeling {
    /// `|2,a⟩` is the spin flip of `|1,a⟩`.
    Flip,
    /// `|2,1⟩` and `|2,2⟩` exchanged relative to [`CopyLabeling::Flip`].
    FlipSwapped,
}

/// One irreducible subspace inside `(C²)^{⊗3}`.
#[derive(Clone, Debug)]
pub struct IrrepCopy {
    pub label: &'static str,
    /// Irrep dimension `D_ρ`: 1 for the symmetric copies, 2 for the standard ones.
    pub irrep_dim: usize,
    pub basis: Vec<CVector>,
}

/// The eight basis vectors: four symmetric one-dimensional spans, and two
/// copies of the two-dimensional irrep, `|1,a⟩` and `|2,a⟩`.
#[derive(Clone, Debug)]
pub struct IrrepBasisN3 {
    pub copies: Vec<IrrepCopy>,
}

impl IrrepBasisN3 {
    pub fn new(omega: OmegaReading, labeling: CopyLabeling) -> Self {
        let rep_space = super::gamma::TensorSpace::new(3, 2).expect("8-dim space");
        let ket = |s: [usize; 3]| rep_space.basis(&s);
        let w = omega.value();
        let sym = |a: [usize; 3], b: [usize; 3], cc: [usize; 3]| (ket(a) + ket(b) + ket(cc)).unscale(3f64.sqrt());
        let phased = |a: [usize; 3], b: [usize; 3], cc: [usize; 3], p: Complex64| {
            (ket(a) + ket(b) * p + ket(cc) * p.conj()).unscale(3f64.sqrt())
        };
        let one1 = phased([UP, DOWN, DOWN], [DOWN, UP, DOWN], [DOWN, DOWN, UP], w);
        let one2 = one1.map(|z| z.conj());
        let flip1 = phased([DOWN, UP, UP], [UP, DOWN, UP], [UP, UP, DOWN], w);
        let flip2 = flip1.map(|z| z.conj());
        let (two1, two2) = match labeling {
            CopyLabeling::Flip => (flip1, flip2),
            CopyLabeling::FlipSwapped => (flip2, flip1),
        };
        IrrepBasisN3 {
            copies: vec![
                IrrepCopy { label: "|↑↑↑⟩", irrep_dim: 1, basis: vec![ket([UP, UP, UP])] },
                IrrepCopy {
                    label: "sym(↑↑↓)",
                    irrep_dim: 1,
                    basis: vec![sym([UP, UP, DOWN], [UP, DOWN, UP], [DOWN, UP, UP])],
                },
                IrrepCopy {
                    label: "sym(↑↓↓)",
                    irrep_dim: 1,
                    basis: vec![sym([UP, DOWN, DOWN], [DOWN, UP, DOWN], [DOWN, DOWN, UP])],
                },
                IrrepCopy { label: "|↓↓↓⟩", irrep_dim: 1, basis: vec![ket([DOWN, DOWN, DOWN])] },
                IrrepCopy { label: "|1,a⟩", irrep_dim: 2, basis: vec![one1, one2] },
                IrrepCopy { label: "|2,a⟩", irrep_dim: 2, basis: vec![two1, two2] },
            ],
        }
    }

    /// All eight vectors, copy by copy.
    pub fn vectors(&self) -> Vec<&CVector> {
        self.copies.iter().flat_map(|c| c.basis.iter()).collect()
    }

    /// `max |⟨u_i|u_j⟩ - δ_ij|`
    pub fn orthonormality_residual(&self) -> f64 {
        let v = self.vectors();
        let mut worst: f64 = 0.0;
        for (i, a) in v.iter().enumerate() {
            for (j, b) in v.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner(a, b) - c(want, 0.0)).norm());
            }
        }
        worst
    }

    /// Largest norm of the component of `Γ(σ)|u⟩` leaving its own copy,
    /// over all `σ` and basis vectors `u`.
    pub fn invariance_residual(&self, rep: &PermutationRep) -> f64 {
        let mut worst: f64 = 0.0;
        for copy in &self.copies {
            for u in &copy.basis {
                for g in &rep.ops {
                    let moved = g.apply(u);
                    let inside = copy
                        .basis
                        .iter()
                        .fold(CVector::zeros(8), |acc, b| acc + b * inner(b, &moved));
                    worst = worst.max((moved - inside).norm());
                }
            }
        }
        worst
    }

    /// `(Γ^{copy}(σ))_{a,a'} = ⟨copy,a|Γ(σ)|copy,a'⟩`
    pub fn block(&self, copy: usize, rep: &PermutationRep, sigma: usize) -> CMatrix {
        let basis = &self.copies[copy].basis;
        let g = &rep.ops[sigma];
        CMatrix::from_fn(basis.len(), basis.len(), |a, b| inner(&basis[a], &g.apply(&basis[b])))
    }
}

/// `√(1/5)|↑↑↑⟩ + √(2/5)|1,1⟩ + √(2/5)|2,2⟩`
pub fn n3_signal(basis: &IrrepBasisN3) -> CVector {
    basis.copies[0].basis[0].scale(0.2f64.sqrt())
        + basis.copies[4].basis[0].scale(0.4f64.sqrt())
        + basis.copies[5].basis[1].scale(0.4f64.sqrt())
}

/// `max_{σ≠ε} ||⟨Ψ|Γ(σ)|Ψ⟩| - 1/5|`
pub fn overlap_residual(rep: &PermutationRep, psi: &CVector) -> f64 {
    rep.ops
        .iter()
        .skip(1)
        .map(|g| (inner(psi, &g.apply(psi)).norm() - 0.2).abs())
        .fold(0.0, f64::max)
}

/// Picks the labeling of the second two-dimensional copy for which the
/// signal has overlap exactly `1/5` with all its nontrivial permutations.
pub fn resolve_labeling(rep: &PermutationRep) -> CopyLabeling {
    [CopyLabeling::Flip, CopyLabeling::FlipSwapped]
        .into_iter()
        .min_by(|a, b| {
            let ra = overlap_residual(rep, &n3_signal(&IrrepBasisN3::new(OmegaReading::CubeRoot, *a)));
            let rb = overlap_residual(rep, &n3_signal(&IrrepBasisN3::new(OmegaReading::CubeRoot, *b)));
            ra.total_cmp(&rb)
        })
        .unwrap()
}

/// The example's signal state and covariant measurement:
/// `E_ε = (5/6)|Ψ⟩⟨Ψ|`, completed by the projector onto the three symmetric
/// spans the `E_σ` do not reach.
pub fn build_n3_example() -> Result<(SignalState, CovariantPovm)> {
    let rep = PermutationRep::new(3, 2)?;
    let basis = IrrepBasisN3::new(OmegaReading::CubeRoot, resolve_labeling(&rep));
    let psi = SignalState::new(n3_signal(&basis))?;
    let phi = psi.amplitudes.scale((5.0f64 / 6.0).sqrt());
    let povm = rank_one_covariant(&rep, &phi)?;
    let residual = povm.completeness_residual(&rep);
    if residual > 1e-10 {
        return Err(Error::invariant(format!(
            "N=3 POVM completeness residual {residual:e}"
        )));
    }
    Ok((psi, povm))
}

/// Results of checking the matrix-element orthogonality relations on the
/// explicit basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalityReport {
    /// `max |Σ_σ Γ^{(ρb)}(σ)*_{αβ} Γ^{(ρ'b')}(σ)_{γκ}|` over inequivalent pairs.
    pub cross_irrep_residual: f64,
    /// `max |(1/|G|) Σ_σ Γ^{(ρb)}(σ)*_{αβ} Γ^{(ρb')}(σ)_{γκ} - δ_γα δ_βκ / D_ρ|`
    /// over pairs of copies of the same irrep, including `b ≠ b'`.
    pub same_irrep_residual: f64,
    /// `Σ_σ |(Γ^{(ρ,1)}(σ))_{11}|²` for the two-dimensional irrep (expect 3).
    pub standard_diag_sum: f64,
    /// `max_σ |Γ^{(ρ,1)}(σ) - Γ^{(ρ,2)}(σ)|` before any basis adjustment.
    pub alignment_residual_printed: f64,
    /// Same after adjustment (equal to the printed value if none was needed).
    pub alignment_residual: f64,
    pub basis_adjusted: bool,
    /// `max_b |‖P_{ρ,b}Φ‖² - D_ρ/N!|` over the copies carrying `Φ`.
    pub phi_norm_residual: f64,
    /// `|Σ_a C_{ρ,1,a} C*_{ρ,2,a}|` for the two standard copies (expect 0).
    pub phi_cross_overlap: f64,
}

fn irrep_class(copy: &IrrepCopy) -> usize {
    copy.irrep_dim
}

/// Re-expresses the second standard copy so that both copies carry identical
/// matrices. Uses the intertwiner `T ∝ Σ_σ Γ¹(σ) X Γ²(σ)†` (Schur's lemma makes
/// it a multiple of a unitary) and maps basis `v` to `v T†`.
pub fn align_second_copy(basis: &mut IrrepBasisN3, rep: &PermutationRep) -> Result<()> {
    let (first, second) = (4, 5);
    let dim = basis.copies[first].irrep_dim;
    for unit in 0..dim * dim {
        let mut x = CMatrix::zeros(dim, dim);
        x[(unit / dim, unit % dim)] = c(1.0, 0.0);
        let t = (0..rep.order()).fold(CMatrix::zeros(dim, dim), |acc, s| {
            acc + basis.block(first, rep, s) * &x * basis.block(second, rep, s).adjoint()
        });
        let norm2 = (t.adjoint() * &t)[(0, 0)].re;
        if norm2 < 1e-8 {
            continue;
        }
        let t = t.unscale(norm2.sqrt());
        let old = basis.copies[second].basis.clone();
        basis.copies[second].basis = (0..dim)
            .map(|a| (0..dim).fold(CVector::zeros(8), |acc, b| acc + &old[b] * t[(a, b)].conj()))
            .collect();
        return Ok(());
    }
    Err(Error::invariant("no nonzero intertwiner between the two standard copies"))
}

fn alignment_residual(basis: &IrrepBasisN3, rep: &PermutationRep) -> f64 {
    (0..rep.order())
        .map(|s| super::linalg::max_abs_diff(&basis.block(4, rep, s), &basis.block(5, rep, s)))
        .fold(0.0, f64::max)
}

/// Checks both orthogonality relations for matrix elements on the explicit
/// basis, aligns the two standard copies if needed, and checks the component
/// norms of `|Φ⟩ = √(5/6)|Ψ⟩` in each copy.
pub fn orthogonality_check_n3() -> Result<OrthogonalityReport> {
    let rep = PermutationRep::new(3, 2)?;
    let mut basis = IrrepBasisN3::new(OmegaReading::CubeRoot, resolve_labeling(&rep));
    let printed = alignment_residual(&basis, &rep);
    let adjusted = printed > 1e-12;
    if adjusted {
        align_second_copy(&mut basis, &rep)?;
    }
    let aligned = alignment_residual(&basis, &rep);
    let order = rep.order() as f64;

    let blocks: Vec<Vec<CMatrix>> = (0..basis.copies.len())
        .map(|k| (0..rep.order()).map(|s| basis.block(k, &rep, s)).collect())
        .collect();
    let mut cross: f64 = 0.0;
    let mut same: f64 = 0.0;
    for (p, cp) in basis.copies.iter().enumerate() {
        for (q, cq) in basis.copies.iter().enumerate() {
            let dp = cp.irrep_dim;
            let dq = cq.irrep_dim;
            for al in 0..dp {
                for be in 0..dp {
                    for ga in 0..dq {
                        for ka in 0..dq {
                            let sum: Complex64 = (0..rep.order())
                                .map(|s| blocks[p][s][(al, be)].conj() * blocks[q][s][(ga, ka)])
                                .sum();
                            if irrep_class(cp) != irrep_class(cq) {
                                cross = cross.max(sum.norm());
                            } else {
                                let want = if ga == al && be == ka { 1.0 / dp as f64 } else { 0.0 };
                                same = same.max((sum / order - want).norm());
                            }
                        }
                    }
                }
            }
        }
    }
    let standard_diag_sum = (0..rep.order()).map(|s| blocks[4][s][(0, 0)].norm_sqr()).sum();

    // Φ in the (possibly realigned) basis; the state itself is basis-independent.
    let signal_basis = IrrepBasisN3::new(OmegaReading::CubeRoot, resolve_labeling(&rep));
    let phi = n3_signal(&signal_basis).scale((5.0f64 / 6.0).sqrt());
    let coeffs: Vec<Vec<Complex64>> = basis
        .copies
        .iter()
        .map(|cp| cp.basis.iter().map(|b| inner(b, &phi)).collect())
        .collect();
    let mut phi_norm_residual: f64 = 0.0;
    for (cp, cs) in basis.copies.iter().zip(&coeffs) {
        let norm2: f64 = cs.iter().map(|z| z.norm_sqr()).sum();
        if norm2 > 1e-12 {
            phi_norm_residual = phi_norm_residual.max((norm2 - cp.irrep_dim as f64 / order).abs());
        }
    }
    let phi_cross_overlap = coeffs[4]
        .iter()
        .zip(&coeffs[5])
        .map(|(a, b)| a * b.conj())
        .sum::<Complex64>()
        .norm();

    Ok(OrthogonalityReport {
        cross_irrep_residual: cross,
        same_irrep_residual: same,
        standard_diag_sum,
        alignment_residual_printed: printed,
        alignment_residual: aligned,
        basis_adjusted: adjusted,
        phi_norm_residual,
        phi_cross_overlap,
    })
}
