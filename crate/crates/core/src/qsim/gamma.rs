use crate::error::{Error, Result};

use super::linalg::{c, CMatrix, CVector};
use super::perm::{all_permutations, Permutation};

/// Largest tensor-space dimension `d^N` accepted for dense simulation.
pub const MAX_TENSOR_DIM: usize = 4096;

/// `(C^d)^{⊗N}` with computational basis `|i_1 … i_N⟩`, `i_1` the most
/// significant base-`d` digit. Level `0` is spin up, `1` spin down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub n: usize,
    pub d: usize,
    pub dim: usize,
}

impl TensorSpace {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::domain("tensor space needs N >= 1 and d >= 1"));
        }
        let dim = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(d).filter(|&v| v <= MAX_TENSOR_DIM));
        match dim {
            Some(dim) => Ok(TensorSpace { n, d, dim }),
            None => Err(Error::Capacity {
                what: "dense tensor space dimension d^N",
                requested: (d as f64).powi(n as i32).min(u64::MAX as f64) as u64,
                cap: MAX_TENSOR_DIM as u64,
            }),
        }
    }

    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = index % self.d;
            index /= self.d;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &x| acc * self.d + x)
    }

    /// Basis vector for a list of levels.
    pub fn basis(&self, digits: &[usize]) -> CVector {
        let mut v = CVector::zeros(self.dim);
        v[self.index(digits)] = c(1.0, 0.0);
        v
    }
}

/// `Γ(σ)`: moves the tensor factor in slot `k` to slot `σ(k)`, i.e.
/// `Γ(σ)|i_1 … i_N⟩ = |i_{σ⁻¹(1)} … i_{σ⁻¹(N)}⟩`. With this convention
/// `Γ(σ)Γ(τ) = Γ(σ∘τ)`.
///
/// Stored as the basis-index permutation it induces; the dense matrix is
/// built on request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationOperator {
    pub perm: Permutation,
    space: TensorSpace,
    /// `Γ|b⟩ = |target[b]⟩`
    target: Vec<usize>,
}

impl PermutationOperator {
    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn target(&self, basis_index: usize) -> usize {
        self.target[basis_index]
    }

    /// Dense 0/1 unitary.
    pub fn matrix(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.space.dim, self.space.dim);
        for (b, &t) in self.target.iter().enumerate() {
            m[(t, b)] = c(1.0, 0.0);
        }
        m
    }

    /// `Γ|ψ⟩`
    pub fn apply(&self, psi: &CVector) -> CVector {
        let mut out = CVector::zeros(psi.len());
        for (b, &t) in self.target.iter().enumerate() {
            out[t] = psi[b];
        }
        out
    }

    /// `Γ† |ψ⟩`
    pub fn apply_adjoint(&self, psi: &CVector) -> CVector {
        CVector::from_fn(psi.len(), |b, _| psi[self.target[b]])
    }

    /// `Γ A Γ†`, by relabelling rows and columns.
    pub fn conjugate(&self, a: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(a.nrows(), a.ncols());
        for (col, &tc) in self.target.iter().enumerate() {
            for (row, &tr) in self.target.iter().enumerate() {
                out[(tr, tc)] = a[(row, col)];
            }
        }
        out
    }

    /// `Γ† A Γ`
    pub fn conjugate_adjoint(&self, a: &CMatrix) -> CMatrix {
        CMatrix::from_fn(a.nrows(), a.ncols(), |r, col| a[(self.target[r], self.target[col])])
    }
}

/// Builds `Γ(σ)` on `(C^d)^{⊗N}`; `N` is the degree of `perm`.
pub fn build_gamma(perm: &Permutation, d: usize) -> Result<PermutationOperator> {
    let space = TensorSpace::new(perm.len(), d)?;
    Ok(gamma_on(space, perm))
}

pub(crate) fn gamma_on(space: TensorSpace, perm: &Permutation) -> PermutationOperator {
    assert_eq!(perm.len(), space.n);
    let target = (0..space.dim)
        .map(|b| {
            let src = space.digits(b);
            let mut dst = vec![0; space.n];
            for (k, &level) in src.iter().enumerate() {
                dst[perm.apply(k)] = level;
            }
            space.index(&dst)
        })
        .collect();
    PermutationOperator { perm: perm.clone(), space, target }
}

/// The representation `σ ↦ Γ(σ)` over all of `S_N`, indexed by permutation
/// rank (so index 0 is the identity).
#[derive(Clone, Debug)]
pub struct PermutationRep {
    pub space: TensorSpace,
    pub ops: Vec<PermutationOperator>,
}

/// Largest `N` for which [`PermutationRep`] materializes all of `S_N`.
pub const MAX_GROUP_DEGREE: usize = 7;

impl PermutationRep {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n > MAX_GROUP_DEGREE {
            return Err(Error::Capacity {
                what: "symmetric group order N! (N <= 7)",
                requested: n as u64,
                cap: MAX_GROUP_DEGREE as u64,
            });
        }
        let space = TensorSpace::new(n, d)?;
        let ops = all_permutations(n).iter().map(|p| gamma_on(space, p)).collect();
        Ok(PermutationRep { space, ops })
    }

    pub fn order(&self) -> usize {
        self.ops.len()
    }

    pub fn get(&self, perm: &Permutation) -> &PermutationOperator {
        &self.ops[perm.rank()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::linalg::max_abs_diff;
    use crate::young::seeded_rng;

    #[test]
    fn identity_and_swap() {
        let id = build_gamma(&Permutation::identity(3), 2).unwrap();
        assert_eq!(id.matrix(), CMatrix::identity(8, 8));
        let swap = build_gamma(&Permutation::transposition(2, 0, 1), 2).unwrap().matrix();
        let mut want = CMatrix::zeros(4, 4);
        for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            want[(r, col)] = c(1.0, 0.0);
        }
        assert_eq!(swap, want);
    }

    #[test]
    fn three_cycle_has_order_three() {
        let g = build_gamma(&Permutation::long_cycle(3), 2).unwrap().matrix();
        assert_eq!(&g * &g * &g, CMatrix::identity(8, 8));
        assert_ne!(&g * &g, CMatrix::identity(8, 8));
    }

    #[test]
    fn slot_convention() {
        // σ = (0→1→2→0) moves the up spin in slot 0 to slot 1
        let space = TensorSpace::new(3, 2).unwrap();
        let g = build_gamma(&Permutation::long_cycle(3), 2).unwrap();
        assert_eq!(g.apply(&space.basis(&[0, 1, 1])), space.basis(&[1, 0, 1]));
    }

    #[test]
    fn representation_property() {
        let mut rng = seeded_rng(5);
        for _ in 0..50 {
            let s = Permutation::random(4, &mut rng);
            let t = Permutation::random(4, &mut rng);
            let gs = build_gamma(&s, 2).unwrap().matrix();
            let gt = build_gamma(&t, 2).unwrap().matrix();
            let gst = build_gamma(&s.compose(&t), 2).unwrap().matrix();
            assert_eq!(&gs * &gt, gst);
        }
    }

    #[test]
    fn index_shortcuts_match_dense() {
        let mut rng = seeded_rng(8);
        let g = build_gamma(&Permutation::random(3, &mut rng), 3).unwrap();
        let m = g.matrix();
        let a = crate::qsim::linalg::random_matrix(27, 27, &mut rng);
        let v = crate::qsim::linalg::random_vector(27, &mut rng);
        assert!(max_abs_diff(&g.conjugate(&a), &(&m * &a * m.adjoint())) < 1e-14);
        assert!(max_abs_diff(&g.conjugate_adjoint(&a), &(m.adjoint() * &a * &m)) < 1e-14);
        assert_eq!(g.apply(&v), &m * &v);
        assert_eq!(g.apply_adjoint(&v), m.adjoint() * &v);
    }

    #[test]
    fn capacity() {
        assert!(matches!(TensorSpace::new(13, 2), Err(Error::Capacity { .. })));
        assert!(TensorSpace::new(12, 2).is_ok());
        assert!(PermutationRep::new(8, 1).is_err());
        assert!(TensorSpace::new(64, 3).is_err());
    }
}
