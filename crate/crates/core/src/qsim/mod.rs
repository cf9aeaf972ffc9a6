//! Dense-matrix simulation of the permutation channel at small `N` and `d`:
//! permutation operators, covariant measurements, the pretty-good
//! measurement, and a classical channel simulator.

mod classical;
mod gamma;
pub mod linalg;
mod n3;
mod perm;
mod pgm;
mod povm;
mod verify;

pub use classical::{classical_channel_mc, ClassicalMc};
pub use gamma::{build_gamma, PermutationOperator, PermutationRep, TensorSpace, MAX_GROUP_DEGREE, MAX_TENSOR_DIM};
pub use n3::{
    align_second_copy, build_n3_example, n3_signal, orthogonality_check_n3, overlap_residual,
    resolve_labeling, CopyLabeling, IrrepBasisN3, IrrepCopy, OmegaReading, OrthogonalityReport,
};
pub use perm::{all_permutations, Permutation};
pub use pgm::{gram_matrix, pgm_success, whitened_optimal_povm, EIGEN_CLIP, GRAM_PSD_TOL};
pub use povm::{
    covariance_residual, covariant_success, rank_one_covariant, success_probability,
    symmetrize_povm, symmetrized_elements, CovariantPovm, Povm, SignalState, COMPLETENESS_TOL,
    COVARIANCE_TOL, INPUT_PSD_TOL,
};
pub use verify::{
    n3_checks, optimal_checks, random_povm, run_suite, symmetrize_checks, Suite, VerificationCheck,
};
