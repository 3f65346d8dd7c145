//! Sampling utilities: Haar-distributed unitaries and Gaussian Hermitian
//! matrices. Used by the test suites and benchmarks; exposed because callers
//! exercising the decompositions tend to need the same generators.

use num_complex::Complex;
use rand::Rng;

use crate::entanglement::PureState;
use crate::linalg::CMatrix;
use crate::scalar::Real;

/// Standard normal via Box-Muller, drawn as `f64` and converted.
fn gaussian<T: Real>(rng: &mut impl Rng) -> T {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    T::of((-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos())
}

fn gaussian_complex<T: Real>(rng: &mut impl Rng) -> Complex<T> {
    Complex::new(gaussian(rng), gaussian(rng))
}

/// Haar-distributed `n x n` unitary: QR of a complex Ginibre matrix with the
/// phase convention that makes the factorization unique.
pub fn haar_unitary<T: Real>(n: usize, rng: &mut impl Rng) -> CMatrix<T> {
    let g = CMatrix::from_fn(n, n, |_, _| gaussian_complex(rng));
    // modified Gram-Schmidt
    let mut q = g;
    for j in 0..n {
        for k in 0..j {
            let col_k = q.column(k);
            let col_j = q.column(j);
            let overlap = col_k
                .iter()
                .zip(col_j.iter())
                .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * *b);
            for i in 0..n {
                let sub = col_k[i] * overlap;
                q[(i, j)] = q[(i, j)] - sub;
            }
        }
        let norm: T = q.column(j).iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        for i in 0..n {
            q[(i, j)] = q[(i, j)] / norm;
        }
    }
    q
}

/// Haar-distributed element of SU(2).
pub fn haar_su2<T: Real>(rng: &mut impl Rng) -> CMatrix<T> {
    let u = haar_unitary::<T>(2, rng);
    // divide out the determinant phase: det(u / det^{1/2}) = 1
    let det = u.det();
    let half_phase = det.arg() * T::of(0.5);
    u.scale(Complex::from_polar(T::one(), -half_phase))
}

/// Gaussian Hermitian matrix `(g + g^dag) / 2`.
pub fn random_hermitian<T: Real>(n: usize, rng: &mut impl Rng) -> CMatrix<T> {
    let g = CMatrix::from_fn(n, n, |_, _| gaussian_complex(rng));
    (&g + &g.adjoint()).scale_re(T::of(0.5))
}

/// Haar-distributed pure state of two qubits.
pub fn random_state<T: Real>(rng: &mut impl Rng) -> PureState<T> {
    let amplitudes = [
        gaussian_complex(rng),
        gaussian_complex(rng),
        gaussian_complex(rng),
        gaussian_complex(rng),
    ];
    PureState::normalized(amplitudes).expect("gaussian draw is nonzero almost surely")
}
