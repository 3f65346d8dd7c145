//! Dense complex matrix kernel for small systems (n <= 8): products, tensor
//! products, Hermitian eigendecomposition, matrix exponentials of Hermitian
//! generators, and joint orthogonal diagonalization of real matrix pairs.
//!
//! Everything here is a pure function of its inputs; there is no shared
//! mutable state and all routines are safe to call concurrently.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::scalar::{default_tol, Real};

/// Seed for the deterministic retry policy in [`joint_orthogonal_diagonalize`].
pub const DEFAULT_RETRY_SEED: u64 = 0x6361_7274_616e_5f71;

const MAX_JACOBI_SWEEPS: usize = 64;
const MAX_DIAG_RETRIES: usize = 8;

#[derive(Debug, Error)]
pub enum LinalgError {
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("expected a Hermitian matrix (deviation {deviation:.3e} exceeds tol {tol:.3e})")]
    NotHermitian { deviation: f64, tol: f64 },
    #[error("not simultaneously diagonalizable (best residual {residual:.3e} exceeds tol {tol:.3e})")]
    NotSimultaneouslyDiagonalizable { residual: f64, tol: f64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// Dense complex matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T: Real = f64> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        CMatrix { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from nested rows, validating finiteness.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        if r == 0 {
            return Err(LinalgError::ShapeMismatch("no rows".into()));
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::ShapeMismatch("ragged or empty rows".into()));
        }
        let m = Self::from_fn(r, c, |i, j| rows[i][j]);
        m.check_finite()?;
        Ok(m)
    }

    /// Build a real matrix from nested `f64`-convertible rows.
    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self, LinalgError> {
        let complex: Vec<Vec<Complex<T>>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex::new(x, T::zero())).collect())
            .collect();
        Self::from_rows(&complex)
    }

    pub fn check_finite(&self) -> Result<(), LinalgError> {
        if self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(())
        } else {
            Err(LinalgError::NonFinite)
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, z: Complex<T>) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * z)
    }

    pub fn scale_re(&self, x: T) -> Self {
        self.scale(Complex::new(x, T::zero()))
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik.re.is_zero() && aik.im.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + aik * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.cols, v.len(), "vector length must match columns");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + self[(i, j)] * v[j]))
            .collect()
    }

    /// Kronecker product with block ordering `self (x) other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        Self::from_fn(ra * rb, ca * cb, |i, j| {
            self[(i / rb, j / cb)] * other[(i % rb, j % cb)]
        })
    }

    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square());
        (0..self.rows).fold(Complex::new(T::zero(), T::zero()), |acc, i| acc + self[(i, i)])
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn real_part(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| Complex::new(self[(i, j)].re, T::zero()))
    }

    pub fn imag_part(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| Complex::new(self[(i, j)].im, T::zero()))
    }

    pub fn column(&self, j: usize) -> Vec<Complex<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[Complex<T>]) {
        assert_eq!(col.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = col[i];
        }
    }

    pub fn negate_column(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)];
        }
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.is_square() && (self - &self.adjoint()).frobenius_norm() <= tol
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.is_square()
            && (&self.adjoint().matmul(self) - &Self::identity(self.rows)).frobenius_norm() <= tol
    }

    pub fn is_real(&self, tol: T) -> bool {
        self.data.iter().map(|z| z.im * z.im).sum::<T>().sqrt() <= tol
    }

    pub fn is_orthogonal(&self, tol: T) -> bool {
        self.is_real(tol)
            && self.is_square()
            && (&self.transpose().matmul(self) - &Self::identity(self.rows)).frobenius_norm() <= tol
    }

    /// Determinant via LU with partial pivoting. Intended for n <= 8.
    pub fn det(&self) -> Complex<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut lu = self.clone();
        let mut det = Complex::new(T::one(), T::zero());
        for k in 0..n {
            let (mut pivot_row, mut pivot_mag) = (k, lu[(k, k)].norm());
            for i in k + 1..n {
                let mag = lu[(i, k)].norm();
                if mag > pivot_mag {
                    pivot_row = i;
                    pivot_mag = mag;
                }
            }
            if pivot_mag.is_zero() {
                return Complex::new(T::zero(), T::zero());
            }
            if pivot_row != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(pivot_row, j)];
                    lu[(pivot_row, j)] = tmp;
                }
                det = -det;
            }
            det = det * lu[(k, k)];
            for i in k + 1..n {
                let factor = lu[(i, k)] / lu[(k, k)];
                for j in k..n {
                    let sub = factor * lu[(k, j)];
                    lu[(i, j)] = lu[(i, j)] - sub;
                }
            }
        }
        det
    }
}

impl<T: Real> Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl<T: Real> Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: &CMatrix<T>) -> CMatrix<T> {
        self.matmul(rhs)
    }
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, eigenvectors as orthonormal columns.
#[derive(Debug, Clone)]
pub struct EigenSystem<T: Real = f64> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: CMatrix<T>,
}

/// Kronecker product, free-function form of [`CMatrix::tensor`].
pub fn tensor<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    a.tensor(b)
}

fn hermitian_deviation<T: Real>(h: &CMatrix<T>) -> T {
    (h - &h.adjoint()).frobenius_norm()
}

/// Cyclic complex Jacobi on a Hermitian matrix. Returns unsorted diagonal
/// and the accumulated unitary. On exactly real input the rotations stay
/// real, so the eigenvector matrix comes out real as well.
fn jacobi_hermitian<T: Real>(h: &CMatrix<T>) -> (Vec<T>, CMatrix<T>) {
    let n = h.rows();
    let mut a = h.clone();
    let mut v = CMatrix::identity(n);
    let fro = a.frobenius_norm().max(T::epsilon());
    let floor = fro * T::epsilon() * T::of(n as f64);

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                off = off + a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= floor {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= floor * T::epsilon() {
                    continue;
                }
                let phase = apq / mag; // e^{i phi}
                let tau = (a[(q, q)].re - a[(p, p)].re) / (T::of(2.0) * mag);
                let t = if tau.is_zero() {
                    T::one()
                } else {
                    tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let cs = Complex::new(c, T::zero());
                let s_ph = phase * s; // s e^{i phi}
                let s_ph_c = phase.conj() * s; // s e^{-i phi}

                // A <- J^dag A J with J = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
                for i in 0..n {
                    let (aip, aiq) = (a[(i, p)], a[(i, q)]);
                    a[(i, p)] = aip * cs - aiq * s_ph_c;
                    a[(i, q)] = aip * s_ph + aiq * cs;
                }
                for j in 0..n {
                    let (apj, aqj) = (a[(p, j)], a[(q, j)]);
                    a[(p, j)] = apj * cs - aqj * s_ph;
                    a[(q, j)] = apj * s_ph_c + aqj * cs;
                }
                a[(p, q)] = Complex::new(T::zero(), T::zero());
                a[(q, p)] = Complex::new(T::zero(), T::zero());
                for i in 0..n {
                    let (vip, viq) = (v[(i, p)], v[(i, q)]);
                    v[(i, p)] = vip * cs - viq * s_ph_c;
                    v[(i, q)] = vip * s_ph + viq * cs;
                }
            }
        }
    }

    let eigs = (0..n).map(|i| a[(i, i)].re).collect();
    (eigs, v)
}

/// Scale each column so its largest-magnitude component is real positive.
fn fix_column_phases<T: Real>(v: &mut CMatrix<T>) {
    for j in 0..v.cols() {
        let mut best = 0;
        let mut best_mag = T::zero();
        for i in 0..v.rows() {
            let mag = v[(i, j)].norm();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        if best_mag.is_zero() {
            continue;
        }
        let phase = v[(best, j)] / best_mag;
        let correction = phase.conj();
        for i in 0..v.rows() {
            v[(i, j)] = v[(i, j)] * correction;
        }
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted ascending; each eigenvector is phase-normalized so
/// its largest-magnitude component is real positive.
pub fn eig_hermitian<T: Real>(h: &CMatrix<T>, tol: T) -> Result<EigenSystem<T>, LinalgError> {
    if !h.is_square() {
        return Err(LinalgError::ShapeMismatch(format!("{}x{} is not square", h.rows(), h.cols())));
    }
    h.check_finite()?;
    let deviation = hermitian_deviation(h);
    if deviation > tol {
        return Err(LinalgError::NotHermitian { deviation: deviation.as_f64(), tol: tol.as_f64() });
    }

    // Work on the exactly Hermitian average so roundoff in the input cannot
    // leak into complex diagonal entries.
    let sym = (h + &h.adjoint()).scale_re(T::of(0.5));
    let (eigs, vecs) = jacobi_hermitian(&sym);

    let mut order: Vec<usize> = (0..eigs.len()).collect();
    order.sort_by(|&i, &j| eigs[i].partial_cmp(&eigs[j]).expect("finite eigenvalues"));

    let mut sorted_vecs = CMatrix::zeros(vecs.rows(), vecs.cols());
    let mut sorted_eigs = Vec::with_capacity(eigs.len());
    for (dst, &src) in order.iter().enumerate() {
        sorted_eigs.push(eigs[src]);
        sorted_vecs.set_column(dst, &vecs.column(src));
    }
    fix_column_phases(&mut sorted_vecs);

    Ok(EigenSystem { eigenvalues: sorted_eigs, eigenvectors: sorted_vecs })
}

/// Evolution operator `exp(-i h t)` of a Hermitian generator, computed via
/// eigendecomposition. The result is unitary to working precision.
pub fn expm_i<T: Real>(h: &CMatrix<T>, t: T) -> Result<CMatrix<T>, LinalgError> {
    let eig = eig_hermitian(h, default_tol::<T>())?;
    let n = h.rows();
    let v = &eig.eigenvectors;
    let mut out = CMatrix::zeros(n, n);
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        let phase = Complex::from_polar(T::one(), -lambda * t);
        let col = v.column(k);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = out[(i, j)] + col[i] * phase * col[j].conj();
            }
        }
    }
    Ok(out)
}

fn real_det<T: Real>(m: &CMatrix<T>) -> T {
    m.det().re
}

fn offdiag_norm<T: Real>(m: &CMatrix<T>) -> T {
    let mut acc = T::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if i != j {
                acc = acc + m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

struct JointDiagAttempt<T: Real> {
    q_l: CMatrix<T>,
    q_r: CMatrix<T>,
    residual: T,
}

/// One joint-diagonalization attempt: eigenbasis of `seed_matrix` provides
/// the left factor, the right factor is propagated through `a` (or `b` where
/// `a` annihilates the column).
fn joint_diag_attempt<T: Real>(
    a: &CMatrix<T>,
    b: &CMatrix<T>,
    seed_matrix: &CMatrix<T>,
    scale: T,
) -> JointDiagAttempt<T> {
    let n = a.rows();
    let sym = (seed_matrix + &seed_matrix.transpose()).scale_re(T::of(0.5));
    let (_, q_l) = jacobi_hermitian(&sym);
    let q_l = q_l.real_part();

    let at = a.transpose();
    let bt = b.transpose();
    let tiny = scale * T::epsilon() * T::of(64.0);

    let mut q_r = CMatrix::zeros(n, n);
    let mut deferred = Vec::new();
    for j in 0..n {
        let col = q_l.column(j);
        let va = at.mul_vec(&col);
        let vb = bt.mul_vec(&col);
        let na: T = va.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        let nb: T = vb.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        let (v, norm) = if na >= nb { (va, na) } else { (vb, nb) };
        if norm <= tiny {
            deferred.push(j);
            continue;
        }
        let unit: Vec<Complex<T>> = v.iter().map(|z| z / norm).collect();
        q_r.set_column(j, &unit);
    }

    // Columns in the joint kernel of a^T and b^T: complete to an orthonormal
    // basis from coordinate vectors.
    for &j in &deferred {
        let mut best: Option<(T, Vec<Complex<T>>)> = None;
        for cand in 0..n {
            let mut v = vec![Complex::new(T::zero(), T::zero()); n];
            v[cand] = Complex::new(T::one(), T::zero());
            for k in 0..n {
                if deferred.contains(&k) && k >= j {
                    continue;
                }
                let col = q_r.column(k);
                let overlap = col
                    .iter()
                    .zip(v.iter())
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (c, x)| acc + c.conj() * *x);
                for i in 0..n {
                    let sub = col[i] * overlap;
                    v[i] = v[i] - sub;
                }
            }
            let norm: T = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
            if best.as_ref().map_or(true, |(bn, _)| norm > *bn) {
                best = Some((norm, v));
            }
        }
        let (norm, v) = best.expect("n > 0");
        let unit: Vec<Complex<T>> = v.iter().map(|z| z / norm).collect();
        q_r.set_column(j, &unit);
    }

    let da_full = &q_l.transpose().matmul(a) * &q_r;
    let db_full = &q_l.transpose().matmul(b) * &q_r;
    let ortho_defect = (&q_r.transpose().matmul(&q_r) - &CMatrix::identity(n)).frobenius_norm();
    let residual = offdiag_norm(&da_full).max(offdiag_norm(&db_full)).max(ortho_defect);

    JointDiagAttempt { q_l, q_r, residual }
}

/// Joint orthogonal diagonalization of a pair of real matrices `a`, `b` with
/// `a b^T` and `a^T b` symmetric: finds orthogonal `Q_L`, `Q_R` with both
/// `Q_L^T a Q_R` and `Q_L^T b Q_R` diagonal.
///
/// Degenerate spectra of `a b^T` are split by retrying on `a b^T + mu a a^T`
/// for random `mu` in (0, 1); the retry sequence is deterministic for a given
/// seed. After the sign-fixing pass both factors have determinant +1.
pub fn joint_orthogonal_diagonalize<T: Real>(
    a: &CMatrix<T>,
    b: &CMatrix<T>,
    tol: T,
) -> Result<(CMatrix<T>, CMatrix<T>, Vec<T>, Vec<T>), LinalgError> {
    joint_orthogonal_diagonalize_seeded(a, b, tol, DEFAULT_RETRY_SEED)
}

/// [`joint_orthogonal_diagonalize`] with an explicit retry seed.
pub fn joint_orthogonal_diagonalize_seeded<T: Real>(
    a: &CMatrix<T>,
    b: &CMatrix<T>,
    tol: T,
    seed: u64,
) -> Result<(CMatrix<T>, CMatrix<T>, Vec<T>, Vec<T>), LinalgError> {
    if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(LinalgError::ShapeMismatch("inputs must be square and same size".into()));
    }
    a.check_finite()?;
    b.check_finite()?;
    let n = a.rows();
    let scale = a.frobenius_norm().max(b.frobenius_norm()).max(T::one());

    let abt = a.matmul(&b.transpose());
    let atb = &a.transpose() * b;
    let sym_defect = (&abt - &abt.transpose())
        .frobenius_norm()
        .max((&atb - &atb.transpose()).frobenius_norm());
    if sym_defect > tol * scale * scale {
        return Err(LinalgError::NotSimultaneouslyDiagonalizable {
            residual: sym_defect.as_f64(),
            tol: tol.as_f64(),
        });
    }

    let aat = a.matmul(&a.transpose());
    let mut attempt = joint_diag_attempt(a, b, &abt, scale);
    if attempt.residual > tol {
        let mut best = attempt.residual;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut found = None;
        for _ in 0..MAX_DIAG_RETRIES {
            let mu = T::of(rng.gen_range(0.0..1.0f64));
            let seeded = &abt + &aat.scale_re(mu);
            let retry = joint_diag_attempt(a, b, &seeded, scale);
            best = best.min(retry.residual);
            if retry.residual <= tol {
                found = Some(retry);
                break;
            }
        }
        attempt = found.ok_or(LinalgError::NotSimultaneouslyDiagonalizable {
            residual: best.as_f64(),
            tol: tol.as_f64(),
        })?;
    }

    let JointDiagAttempt { mut q_l, mut q_r, .. } = attempt;

    let mut d_a: Vec<T> = {
        let full = &q_l.transpose().matmul(a) * &q_r;
        (0..n).map(|i| full[(i, i)].re).collect()
    };
    let mut d_b: Vec<T> = {
        let full = &q_l.transpose().matmul(b) * &q_r;
        (0..n).map(|i| full[(i, i)].re).collect()
    };

    if real_det(&q_l) < T::zero() {
        q_l.negate_column(n - 1);
        d_a[n - 1] = -d_a[n - 1];
        d_b[n - 1] = -d_b[n - 1];
    }
    if real_det(&q_r) < T::zero() {
        q_r.negate_column(n - 1);
        d_a[n - 1] = -d_a[n - 1];
        d_b[n - 1] = -d_b[n - 1];
    }

    Ok((q_l, q_r, d_a, d_b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{pauli_1q, pauli_2q};
    use crate::random::{haar_unitary, random_hermitian};
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let id2 = CMatrix::<f64>::identity(2);
        assert_eq!(id2.tensor(&id2), CMatrix::identity(4));
    }

    #[test]
    fn tensor_sigma_y_pair_is_antidiagonal() {
        let yy = pauli_2q::<f64>(2, 2);
        let expected = [
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(yy[(i, j)], c(expected[i][j], 0.0));
            }
        }
    }

    #[test]
    fn tensor_sigma_x_identity_swaps_blocks() {
        let m = pauli_1q::<f64>(1).tensor(&CMatrix::identity(2));
        let expected = [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[(i, j)], c(expected[i][j], 0.0));
            }
        }
    }

    #[test]
    fn eig_of_diagonal_sorts_ascending() {
        let h = CMatrix::<f64>::from_real_rows(&[vec![3.0, 0.0], vec![0.0, -1.0]]).unwrap();
        let eig = eig_hermitian(&h, 1e-9).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eig_of_sigma_x() {
        let eig = eig_hermitian(&pauli_1q::<f64>(1), 1e-9).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::from_rows(&[vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 0.0)]])
            .unwrap();
        assert!(matches!(eig_hermitian(&m, 1e-9), Err(LinalgError::NotHermitian { .. })));
    }

    #[test]
    fn eig_reconstructs_random_hermitian() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 4, 6, 8] {
            let h = random_hermitian::<f64>(n, &mut rng);
            let eig = eig_hermitian(&h, 1e-9).unwrap();
            let v = &eig.eigenvectors;
            assert!(v.is_unitary(1e-12), "eigenvectors not orthonormal for n={n}");
            for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
                let col = v.column(k);
                let hv = h.mul_vec(&col);
                let res: f64 = hv
                    .iter()
                    .zip(col.iter())
                    .map(|(a, b)| (a - b * c(lambda, 0.0)).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                assert!(res < 1e-9 * h.frobenius_norm().max(1.0));
            }
        }
    }

    #[test]
    fn eig_eigenvalues_invariant_under_permutation_similarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = random_hermitian::<f64>(4, &mut rng);
        // permutation (0 1 2 3) -> (2 0 3 1)
        let perm = [2usize, 0, 3, 1];
        let mut p = CMatrix::<f64>::zeros(4, 4);
        for (i, &pi) in perm.iter().enumerate() {
            p[(pi, i)] = c(1.0, 0.0);
        }
        let hp = &p.matmul(&h) * &p.transpose();
        let e1 = eig_hermitian(&h, 1e-9).unwrap().eigenvalues;
        let e2 = eig_hermitian(&hp, 1e-9).unwrap().eigenvalues;
        for (a, b) in e1.iter().zip(e2.iter()) {
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let z = CMatrix::<f64>::zeros(3, 3);
        let u = expm_i(&z, 5.0).unwrap();
        assert!((&u - &CMatrix::identity(3)).frobenius_norm() < 1e-14);
    }

    #[test]
    fn expm_of_sigma_xx_quarter_period() {
        // exp(-i (pi/2) XX) = -i XX since (XX)^2 = 1.
        let xx = pauli_2q::<f64>(1, 1);
        let u = expm_i(&xx, std::f64::consts::FRAC_PI_2).unwrap();
        let expected = xx.scale(c(0.0, -1.0));
        assert!((&u - &expected).frobenius_norm() < 1e-12);
    }

    #[test]
    fn expm_unitary_and_inverse_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let h = random_hermitian::<f64>(4, &mut rng);
            let t = rng.gen_range(0.0..10.0);
            let u = expm_i(&h, t).unwrap();
            assert!(u.is_unitary(1e-12));
            let v = expm_i(&h, -t).unwrap();
            assert!((&u.matmul(&v) - &CMatrix::identity(4)).frobenius_norm() < 1e-10);
        }
    }

    #[test]
    fn joint_diag_trivial_case() {
        let a = CMatrix::<f64>::identity(4);
        let b = CMatrix::<f64>::zeros(4, 4);
        let (q_l, q_r, d_a, d_b) = joint_orthogonal_diagonalize(&a, &b, 1e-9).unwrap();
        assert!((&q_l - &CMatrix::identity(4)).frobenius_norm() < 1e-12);
        assert!((&q_r - &CMatrix::identity(4)).frobenius_norm() < 1e-12);
        assert_eq!(d_a, vec![1.0; 4]);
        assert_eq!(d_b, vec![0.0; 4]);
    }

    #[test]
    fn joint_diag_degenerate_split_spectra() {
        let a = CMatrix::<f64>::from_real_rows(&[
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        let b = CMatrix::<f64>::from_real_rows(&[
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ])
        .unwrap();
        let (q_l, q_r, d_a, d_b) = joint_orthogonal_diagonalize(&a, &b, 1e-9).unwrap();
        let da_full = &q_l.transpose().matmul(&a) * &q_r;
        let db_full = &q_l.transpose().matmul(&b) * &q_r;
        assert!(offdiag_norm(&da_full) < 1e-9);
        assert!(offdiag_norm(&db_full) < 1e-9);
        // reconstruct from returned diagonals
        for i in 0..4 {
            assert!((da_full[(i, i)].re - d_a[i]).abs() < 1e-12);
            assert!((db_full[(i, i)].re - d_b[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn joint_diag_magic_basis_parts_of_random_unitary() {
        use crate::entanglement::magic_matrix;
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let m = magic_matrix::<f64>();
        for _ in 0..50 {
            let u = haar_unitary::<f64>(4, &mut rng);
            let o = &m.adjoint().matmul(&u) * &m;
            let a = o.real_part();
            let b = o.imag_part();
            let (q_l, q_r, d_a, d_b) = joint_orthogonal_diagonalize(&a, &b, 1e-9).unwrap();
            assert!(q_l.is_orthogonal(1e-10));
            assert!(q_r.is_orthogonal(1e-10));
            assert!((real_det(&q_l) - 1.0).abs() < 1e-10);
            assert!((real_det(&q_r) - 1.0).abs() < 1e-10);
            // reconstruction: a = Q_L D_a Q_R^T
            let mut da = CMatrix::<f64>::zeros(4, 4);
            let mut db = CMatrix::<f64>::zeros(4, 4);
            for i in 0..4 {
                da[(i, i)] = c(d_a[i], 0.0);
                db[(i, i)] = c(d_b[i], 0.0);
            }
            let ra = &q_l.matmul(&da) * &q_r.transpose();
            let rb = &q_l.matmul(&db) * &q_r.transpose();
            assert!((&ra - &a).frobenius_norm() < 1e-9);
            assert!((&rb - &b).frobenius_norm() < 1e-9);
        }
    }
}
