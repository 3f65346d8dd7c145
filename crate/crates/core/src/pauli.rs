//! Two-qubit Hamiltonians in the Pauli product basis and their Cartan split
//! into local and entangling sectors.
//!
//! Index convention: Pauli axes (x, y, z) are indices (1, 2, 3) with 0 the
//! identity; the computational basis is ordered |00>, |01>, |10>, |11>.

use num_complex::Complex;
use thiserror::Error;

use crate::entanglement::Antiunitary;
use crate::linalg::CMatrix;
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum PauliError {
    #[error("expected a Hermitian matrix (deviation {deviation:.3e} exceeds tol {tol:.3e})")]
    NotHermitian { deviation: f64, tol: f64 },
    #[error("expected a 4x4 two-qubit matrix, got {rows}x{cols}")]
    NotTwoQubit { rows: usize, cols: usize },
}

/// Single-qubit Pauli matrix; index 0 is the identity, 1..=3 are x, y, z.
pub fn pauli_1q<T: Real>(i: usize) -> CMatrix<T> {
    let o = T::zero();
    let l = T::one();
    let mut m = CMatrix::zeros(2, 2);
    match i {
        0 => {
            m[(0, 0)] = Complex::new(l, o);
            m[(1, 1)] = Complex::new(l, o);
        }
        1 => {
            m[(0, 1)] = Complex::new(l, o);
            m[(1, 0)] = Complex::new(l, o);
        }
        2 => {
            m[(0, 1)] = Complex::new(o, -l);
            m[(1, 0)] = Complex::new(o, l);
        }
        3 => {
            m[(0, 0)] = Complex::new(l, o);
            m[(1, 1)] = Complex::new(-l, o);
        }
        _ => panic!("pauli index must be 0..=3"),
    }
    m
}

/// Two-qubit Pauli product `sigma_i (x) sigma_j`.
pub fn pauli_2q<T: Real>(i: usize, j: usize) -> CMatrix<T> {
    pauli_1q::<T>(i).tensor(&pauli_1q::<T>(j))
}

/// The 16 real coefficients of a two-qubit Hamiltonian in the Pauli product
/// basis: `H = t0 + a_i sigma_i (x) 1 + b_j 1 (x) sigma_j + t_ij sigma_i (x) sigma_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliDecomposition<T: Real = f64> {
    pub t0: T,
    pub a: [T; 3],
    pub b: [T; 3],
    pub t: [[T; 3]; 3],
}

impl<T: Real> Default for PauliDecomposition<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Real> PauliDecomposition<T> {
    pub fn zero() -> Self {
        let z = T::zero();
        PauliDecomposition { t0: z, a: [z; 3], b: [z; 3], t: [[z; 3]; 3] }
    }

    /// Hamiltonian with only interaction coefficients (the entangling sector).
    pub fn from_interaction(t: [[T; 3]; 3]) -> Self {
        PauliDecomposition { t, ..Self::zero() }
    }

    /// Hamiltonian with only single-qubit coefficients (the local sector).
    pub fn from_local(a: [T; 3], b: [T; 3]) -> Self {
        PauliDecomposition { a, b, ..Self::zero() }
    }

    /// Project a 4x4 Hermitian matrix onto the Pauli product basis.
    ///
    /// Coefficients are `Tr(h P) / 4`; the imaginary residues of the traces
    /// must stay below `tol`.
    pub fn from_matrix(h: &CMatrix<T>, tol: T) -> Result<Self, PauliError> {
        if h.rows() != 4 || h.cols() != 4 {
            return Err(PauliError::NotTwoQubit { rows: h.rows(), cols: h.cols() });
        }
        if !h.is_hermitian(tol) {
            let deviation = (h - &h.adjoint()).frobenius_norm();
            return Err(PauliError::NotHermitian { deviation: deviation.as_f64(), tol: tol.as_f64() });
        }
        let quarter = T::of(0.25);
        let mut imag_residue = T::zero();
        let mut coeff = |i: usize, j: usize| -> T {
            let tr = h.matmul(&pauli_2q::<T>(i, j)).trace();
            imag_residue = imag_residue.max(tr.im.abs());
            tr.re * quarter
        };
        let t0 = coeff(0, 0);
        let a = [coeff(1, 0), coeff(2, 0), coeff(3, 0)];
        let b = [coeff(0, 1), coeff(0, 2), coeff(0, 3)];
        let mut t = [[T::zero(); 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = coeff(i + 1, j + 1);
            }
        }
        if imag_residue > tol {
            return Err(PauliError::NotHermitian { deviation: imag_residue.as_f64(), tol: tol.as_f64() });
        }
        Ok(PauliDecomposition { t0, a, b, t })
    }

    /// Assemble the 4x4 Hermitian matrix. Exactly Hermitian by construction
    /// since every coefficient is real.
    pub fn to_matrix(&self) -> CMatrix<T> {
        let mut h = pauli_2q::<T>(0, 0).scale_re(self.t0);
        for i in 0..3 {
            h = &h + &pauli_2q::<T>(i + 1, 0).scale_re(self.a[i]);
            h = &h + &pauli_2q::<T>(0, i + 1).scale_re(self.b[i]);
        }
        for i in 0..3 {
            for j in 0..3 {
                h = &h + &pauli_2q::<T>(i + 1, j + 1).scale_re(self.t[i][j]);
            }
        }
        h
    }

    pub fn max_interaction(&self) -> T {
        self.t
            .iter()
            .flat_map(|row| row.iter())
            .map(|x| x.abs())
            .fold(T::zero(), T::max)
    }
}

/// Cartan split of a two-qubit Hamiltonian: `h_part` carries the single-qubit
/// (non-entangling) coefficients, `p_part` the interaction (entangling) ones,
/// `trace_part` the identity coefficient.
#[derive(Debug, Clone)]
pub struct CartanSplit<T: Real = f64> {
    pub h_part: PauliDecomposition<T>,
    pub p_part: PauliDecomposition<T>,
    pub trace_part: T,
}

/// Split into local and entangling sectors. Reconstruction
/// `h_part + p_part + trace_part * 1` is exact.
pub fn cartan_split<T: Real>(p: &PauliDecomposition<T>) -> CartanSplit<T> {
    CartanSplit {
        h_part: PauliDecomposition::from_local(p.a, p.b),
        p_part: PauliDecomposition::from_interaction(p.t),
        trace_part: p.t0,
    }
}

/// True iff the Hamiltonian acts independently on each qubit, i.e. every
/// interaction coefficient is below `tol`.
pub fn is_local_hamiltonian<T: Real>(p: &PauliDecomposition<T>, tol: T) -> bool {
    p.max_interaction() < tol
}

/// Sector of a Hamiltonian under conjugation of its generator `i H` by an
/// antiunitary operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaSector {
    Commuting,
    Anticommuting,
    Mixed,
}

/// Classify the generator `i H` under conjugation by `theta`.
///
/// `Commuting` means `theta (iH) theta^-1 = iH`, which since `theta` is
/// antilinear is the same as `u conj(H) u^dag = -H`; `Anticommuting` is the
/// opposite sign, and matches the evolution-operator identity
/// `e^{iHt} theta = theta e^{-iHt}`. A zero Hamiltonian reports `Commuting`.
pub fn theta_conjugation_check<T: Real>(
    p: &PauliDecomposition<T>,
    theta: &Antiunitary<T>,
    tol: T,
) -> ThetaSector {
    let h = p.to_matrix();
    let i = Complex::new(T::zero(), T::one());
    let gen = h.scale(i);
    let gen_conj = theta.conjugate_operator(&gen);
    if (&gen_conj - &gen).frobenius_norm() < tol {
        ThetaSector::Commuting
    } else if (&(&gen_conj + &gen)).frobenius_norm() < tol {
        ThetaSector::Anticommuting
    } else {
        ThetaSector::Mixed
    }
}
