//! Antiunitary operators, the magic (Bell) basis, and concurrence.
//!
//! An antiunitary is stored as its unitary part `u` together with implicit
//! complex conjugation in the computational basis: `psi -> u conj(psi)`.
//! Conjugation in any other basis is derived through the similarity rule,
//! never stored, so there is exactly one representation per operator.

use num_complex::Complex;
use thiserror::Error;

use crate::linalg::CMatrix;
use crate::pauli::pauli_2q;
use crate::scalar::{default_tol, Real};

#[derive(Debug, Error)]
pub enum EntanglementError {
    #[error("state is not normalized (norm deviation {deviation:.3e})")]
    NotNormalized { deviation: f64 },
    #[error("state must have a nonzero norm")]
    ZeroState,
    #[error("invalid antiunitary: {0}")]
    InvalidAntiunitary(String),
    #[error("size mismatch: expected {expected}x{expected}, got {rows}x{cols}")]
    SizeMismatch { expected: usize, rows: usize, cols: usize },
}

/// Square of an antiunitary operator, always +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Antiunitary operator `psi -> u conj(psi)` with `u` unitary and
/// `u conj(u) = s 1`, `s` in {+1, -1}. Operators that do not square to a
/// sign are rejected at construction.
#[derive(Debug, Clone)]
pub struct Antiunitary<T: Real = f64> {
    u: CMatrix<T>,
    square: Sign,
}

impl<T: Real> Antiunitary<T> {
    pub fn new(u: CMatrix<T>, tol: T) -> Result<Self, EntanglementError> {
        if !u.is_square() {
            return Err(EntanglementError::InvalidAntiunitary("unitary part must be square".into()));
        }
        if !u.is_unitary(tol) {
            return Err(EntanglementError::InvalidAntiunitary("unitary part is not unitary".into()));
        }
        let uu = u.matmul(&u.conj());
        let n = u.rows();
        let id = CMatrix::identity(n);
        let square = if (&uu - &id).frobenius_norm() <= tol {
            Sign::Plus
        } else if (&(&uu + &id)).frobenius_norm() <= tol {
            Sign::Minus
        } else {
            return Err(EntanglementError::InvalidAntiunitary(
                "operator does not square to +1 or -1".into(),
            ));
        };
        Ok(Antiunitary { u, square })
    }

    pub fn unitary_part(&self) -> &CMatrix<T> {
        &self.u
    }

    pub fn square(&self) -> Sign {
        self.square
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    /// Apply to a coordinate vector: `u conj(psi)`.
    pub fn apply(&self, psi: &[Complex<T>]) -> Vec<Complex<T>> {
        let conj: Vec<Complex<T>> = psi.iter().map(|z| z.conj()).collect();
        self.u.mul_vec(&conj)
    }

    /// Conjugate a linear operator: `Theta A Theta^-1 = u conj(A) u^dag`.
    pub fn conjugate_operator(&self, a: &CMatrix<T>) -> CMatrix<T> {
        &self.u.matmul(&a.conj()) * &self.u.adjoint()
    }

    /// Alias of [`Self::conjugate_operator`] for Hamiltonians.
    pub fn conjugate_hamiltonian(&self, h: &CMatrix<T>) -> CMatrix<T> {
        self.conjugate_operator(h)
    }

    /// The same antiunitary expressed after the basis change `w`, i.e.
    /// `w Theta w^dag`, whose unitary part is `w u w^T`.
    pub fn conjugated_by(&self, w: &CMatrix<T>, tol: T) -> Result<Self, EntanglementError> {
        let u = &w.matmul(&self.u) * &w.transpose();
        Self::new(u, tol)
    }
}

/// Time-reversal operator of two spin-1/2 particles: `(sigma_y (x) sigma_y) K`,
/// squaring to +1. This is the operator behind the Wootters concurrence.
pub fn make_time_reversal_2q<T: Real>() -> Antiunitary<T> {
    Antiunitary::new(pauli_2q::<T>(2, 2), default_tol::<T>()).expect("valid by construction")
}

/// Spin-orbit style time reversal `(1 (x) i sigma_y) K` on a four-level
/// system, squaring to -1. Useful as the canonical example of an antiunitary
/// that admits no concurrence.
pub fn make_kane_mele_theta<T: Real>() -> Antiunitary<T> {
    let i_sy = pauli_1q_times_i::<T>();
    let u = CMatrix::<T>::identity(2).tensor(&i_sy);
    Antiunitary::new(u, default_tol::<T>()).expect("valid by construction")
}

fn pauli_1q_times_i<T: Real>() -> CMatrix<T> {
    // i sigma_y = [[0, 1], [-1, 0]]
    let mut m = CMatrix::zeros(2, 2);
    m[(0, 1)] = Complex::new(T::one(), T::zero());
    m[(1, 0)] = Complex::new(-T::one(), T::zero());
    m
}

/// Particle-hole conjugation `1 K` on a four-level system (plain complex
/// conjugation in the working basis), squaring to +1. Hamiltonians that
/// anticommute with it are purely imaginary, i.e. `i` times a real
/// antisymmetric matrix.
pub fn make_particle_hole_4<T: Real>() -> Antiunitary<T> {
    Antiunitary::new(CMatrix::identity(4), default_tol::<T>()).expect("valid by construction")
}

/// Normalized four-component pure state of two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T: Real = f64> {
    amplitudes: [Complex<T>; 4],
}

impl<T: Real> PureState<T> {
    /// Validates normalization to 1e-12.
    pub fn new(amplitudes: [Complex<T>; 4]) -> Result<Self, EntanglementError> {
        let norm = Self::norm_of(&amplitudes);
        let deviation = (norm - T::one()).abs();
        if deviation > T::of(1e-12) {
            return Err(EntanglementError::NotNormalized { deviation: deviation.as_f64() });
        }
        Ok(PureState { amplitudes })
    }

    /// Normalize arbitrary amplitudes; rejects the zero vector.
    pub fn normalized(amplitudes: [Complex<T>; 4]) -> Result<Self, EntanglementError> {
        let norm = Self::norm_of(&amplitudes);
        if norm <= T::zero() || !norm.is_finite() {
            return Err(EntanglementError::ZeroState);
        }
        let mut out = amplitudes;
        for z in &mut out {
            *z = *z / norm;
        }
        Ok(PureState { amplitudes: out })
    }

    fn norm_of(amplitudes: &[Complex<T>; 4]) -> T {
        amplitudes.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Computational basis state |index> with index in binary as |q1 q2>.
    pub fn basis_state(index: usize) -> Self {
        assert!(index < 4);
        let mut amplitudes = [Complex::new(T::zero(), T::zero()); 4];
        amplitudes[index] = Complex::new(T::one(), T::zero());
        PureState { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex<T>; 4] {
        &self.amplitudes
    }

    pub fn norm(&self) -> T {
        Self::norm_of(&self.amplitudes)
    }

    /// Norm deviation from 1.
    pub fn norm_deviation(&self) -> T {
        (self.norm() - T::one()).abs()
    }

    /// Apply a 4x4 operator.
    pub fn apply(&self, m: &CMatrix<T>) -> Result<Self, EntanglementError> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(EntanglementError::SizeMismatch { expected: 4, rows: m.rows(), cols: m.cols() });
        }
        let v = m.mul_vec(&self.amplitudes);
        Ok(PureState { amplitudes: [v[0], v[1], v[2], v[3]] })
    }
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellState {
    /// (|00> + |11>) / sqrt(2)
    PhiPlus,
    /// (|00> - |11>) / sqrt(2)
    PhiMinus,
    /// (|01> + |10>) / sqrt(2)
    PsiPlus,
    /// (|01> - |10>) / sqrt(2)
    PsiMinus,
}

impl BellState {
    pub fn label(self) -> &'static str {
        match self {
            BellState::PhiPlus => "Phi+",
            BellState::PhiMinus => "Phi-",
            BellState::PsiPlus => "Psi+",
            BellState::PsiMinus => "Psi-",
        }
    }

    pub fn state<T: Real>(self) -> PureState<T> {
        let h = T::FRAC_1_SQRT_2();
        let z = Complex::new(T::zero(), T::zero());
        let p = Complex::new(h, T::zero());
        let m = Complex::new(-h, T::zero());
        let amplitudes = match self {
            BellState::PhiPlus => [p, z, z, p],
            BellState::PhiMinus => [p, z, z, m],
            BellState::PsiPlus => [z, p, p, z],
            BellState::PsiMinus => [z, p, m, z],
        };
        PureState { amplitudes }
    }
}

/// Concurrence of a pure state with respect to an antiunitary operator:
/// `|<psi| Theta |psi>| = |psi^dag u conj(psi)|`.
///
/// Identically zero whenever the operator squares to -1.
pub fn concurrence<T: Real>(
    psi: &PureState<T>,
    theta: &Antiunitary<T>,
) -> Result<T, EntanglementError> {
    if theta.dim() != 4 {
        return Err(EntanglementError::SizeMismatch { expected: 4, rows: theta.dim(), cols: theta.dim() });
    }
    let deviation = psi.norm_deviation();
    if deviation > T::of(1e-9) {
        return Err(EntanglementError::NotNormalized { deviation: deviation.as_f64() });
    }
    let image = theta.apply(psi.amplitudes());
    let overlap = psi
        .amplitudes()
        .iter()
        .zip(image.iter())
        .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * *b);
    Ok(overlap.norm())
}

/// Concurrence along the evolution generated by a two-qubit Hamiltonian:
/// per time `t`, the concurrence of `exp(-i H t) psi0`.
pub fn concurrence_trajectory<T: Real>(
    psi0: &PureState<T>,
    h: &crate::pauli::PauliDecomposition<T>,
    theta: &Antiunitary<T>,
    times: &[T],
) -> Result<Vec<T>, crate::error::ToolkitError> {
    let matrix = h.to_matrix();
    let eig = crate::linalg::eig_hermitian(&matrix, default_tol::<T>())?;
    let v = &eig.eigenvectors;
    let vt_psi = v.adjoint().mul_vec(psi0.amplitudes());
    let mut out = Vec::with_capacity(times.len());
    for &t in times {
        if !t.is_finite() {
            return Err(crate::error::ToolkitError::Linalg(crate::linalg::LinalgError::NonFinite));
        }
        let mut evolved = [Complex::new(T::zero(), T::zero()); 4];
        for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
            let phase = Complex::from_polar(T::one(), -lambda * t);
            let coeff = vt_psi[k] * phase;
            let col = v.column(k);
            for (e, c) in evolved.iter_mut().zip(col.iter()) {
                *e = *e + *c * coeff;
            }
        }
        let state = PureState { amplitudes: evolved };
        out.push(concurrence(&state, theta)?);
    }
    Ok(out)
}

/// The magic-basis transfer matrix: columns are Bell states with fixed
/// phases. Conjugating by it maps local gates to real orthogonal matrices.
pub fn magic_matrix<T: Real>() -> CMatrix<T> {
    let h = T::FRAC_1_SQRT_2();
    let z = Complex::new(T::zero(), T::zero());
    let r = Complex::new(h, T::zero());
    let i = Complex::new(T::zero(), h);
    let rows = vec![
        vec![r, z, z, i],
        vec![z, i, r, z],
        vec![z, i, -r, z],
        vec![r, z, z, -i],
    ];
    CMatrix::from_rows(&rows).expect("fixed entries")
}

/// Conjugate an operator into the magic basis: `M^dag m M`.
pub fn magic_basis_transform<T: Real>(m: &CMatrix<T>) -> Result<CMatrix<T>, EntanglementError> {
    if m.rows() != 4 || m.cols() != 4 {
        return Err(EntanglementError::SizeMismatch { expected: 4, rows: m.rows(), cols: m.cols() });
    }
    let mm = magic_matrix::<T>();
    Ok(&mm.adjoint().matmul(m) * &mm)
}
