//! Small dense complex helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Hermitian part `(A + A†)/2`, removing rounding asymmetry before an
/// eigendecomposition.
pub fn hermitian_part(a: &CMatrix) -> CMatrix {
    (a + a.adjoint()).scale(0.5)
}

/// Real eigenvalues and eigenvectors of a Hermitian matrix.
pub fn hermitian_eigen(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = hermitian_part(a).symmetric_eigen();
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

pub fn min_eigenvalue(a: &CMatrix) -> f64 {
    hermitian_eigen(a).0.into_iter().fold(f64::INFINITY, f64::min)
}

/// `V f(Λ) V†` for Hermitian `a = V Λ V†`.
pub fn hermitian_map(a: &CMatrix, f: impl Fn(f64) -> f64) -> CMatrix {
    let (vals, vecs) = hermitian_eigen(a);
    let mut scaled = vecs.clone();
    for (j, &lambda) in vals.iter().enumerate() {
        let fj = f(lambda);
        scaled.column_mut(j).scale_mut(fj);
    }
    scaled * vecs.adjoint()
}

/// Principal square root of a PSD matrix. Eigenvalues in `[-neg_tol, clip]`
/// are set to zero; anything more negative is an error.
pub fn psd_sqrt(a: &CMatrix, clip: f64, neg_tol: f64) -> Result<CMatrix> {
    let (vals, _) = hermitian_eigen(a);
    if let Some(&bad) = vals.iter().find(|&&v| v < -neg_tol) {
        return Err(Error::domain(format!(
            "matrix is not positive semidefinite: eigenvalue {bad:e} below -{neg_tol:e}"
        )));
    }
    Ok(hermitian_map(a, |v| if v <= clip { 0.0 } else { v.sqrt() }))
}

/// `|v⟩⟨v|`
pub fn outer(v: &CVector) -> CMatrix {
    v * v.adjoint()
}

/// `⟨a|b⟩`
pub fn inner(a: &CVector, b: &CVector) -> Complex64 {
    a.dotc(b)
}

/// Complex Gaussian random vector.
pub fn random_vector<R: rand::Rng + ?Sized>(dim: usize, rng: &mut R) -> CVector {
    CVector::from_fn(dim, |_, _| c(gauss(rng), gauss(rng)))
}

/// Complex Gaussian random matrix.
pub fn random_matrix<R: rand::Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| c(gauss(rng), gauss(rng)))
}

// Box–Muller; avoids pulling a distributions crate for one call site.
fn gauss<R: rand::Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = 1.0 - rng.random::<f64>();
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos()
}
