//! Wire formats for the file interfaces. Matrices and states use explicit
//! `re`/`im` arrays; no complex-literal parsing. These formats are `f64`
//! only, matching JSON number semantics.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::entanglement::{EntanglementError, PureState};
use crate::kak::KakFactors;
use crate::linalg::{CMatrix, LinalgError};
use crate::pauli::PauliDecomposition;

/// Complex matrix as parallel real/imaginary nested arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixWire {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixWire {
    pub fn from_matrix(m: &CMatrix<f64>) -> Self {
        let re = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m[(i, j)].re).collect())
            .collect();
        let im = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m[(i, j)].im).collect())
            .collect();
        MatrixWire { re, im }
    }

    pub fn to_matrix(&self) -> Result<CMatrix<f64>, LinalgError> {
        if self.re.len() != self.im.len()
            || self
                .re
                .iter()
                .zip(self.im.iter())
                .any(|(r, i)| r.len() != i.len())
        {
            return Err(LinalgError::ShapeMismatch("re and im arrays differ in shape".into()));
        }
        let rows: Vec<Vec<Complex64>> = self
            .re
            .iter()
            .zip(self.im.iter())
            .map(|(r, i)| r.iter().zip(i.iter()).map(|(&a, &b)| Complex64::new(a, b)).collect())
            .collect();
        CMatrix::from_rows(&rows)
    }
}

/// Pure state as four-component `re`/`im` arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PureStateWire {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl PureStateWire {
    pub fn from_state(psi: &PureState<f64>) -> Self {
        let amps = psi.amplitudes();
        PureStateWire {
            re: amps.iter().map(|z| z.re).collect(),
            im: amps.iter().map(|z| z.im).collect(),
        }
    }

    pub fn amplitudes(&self) -> Result<[Complex64; 4], EntanglementError> {
        if self.re.len() != 4 || self.im.len() != 4 {
            return Err(EntanglementError::SizeMismatch {
                expected: 4,
                rows: self.re.len(),
                cols: self.im.len(),
            });
        }
        Ok([
            Complex64::new(self.re[0], self.im[0]),
            Complex64::new(self.re[1], self.im[1]),
            Complex64::new(self.re[2], self.im[2]),
            Complex64::new(self.re[3], self.im[3]),
        ])
    }
}

/// Pauli coefficients, field-for-field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PauliWire {
    pub t0: f64,
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl PauliWire {
    pub fn from_decomposition(d: &PauliDecomposition<f64>) -> Self {
        PauliWire { t0: d.t0, a: d.a, b: d.b, t: d.t }
    }

    pub fn to_decomposition(&self) -> PauliDecomposition<f64> {
        PauliDecomposition { t0: self.t0, a: self.a, b: self.b, t: self.t }
    }
}

/// A 2x2 matrix as four row-major `[re, im]` pairs.
pub type Su2Wire = Vec<[f64; 2]>;

fn su2_to_wire(m: &CMatrix<f64>) -> Su2Wire {
    let mut out = Vec::with_capacity(4);
    for i in 0..2 {
        for j in 0..2 {
            out.push([m[(i, j)].re, m[(i, j)].im]);
        }
    }
    out
}

fn su2_from_wire(w: &Su2Wire) -> Result<CMatrix<f64>, LinalgError> {
    if w.len() != 4 {
        return Err(LinalgError::ShapeMismatch("2x2 factor needs 4 entries".into()));
    }
    let rows = vec![
        vec![Complex64::new(w[0][0], w[0][1]), Complex64::new(w[1][0], w[1][1])],
        vec![Complex64::new(w[2][0], w[2][1]), Complex64::new(w[3][0], w[3][1])],
    ];
    CMatrix::from_rows(&rows)
}

/// Cartan factors: the canonical coordinates plus the four local factors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KakFactorsWire {
    pub k0: f64,
    pub k: [f64; 3],
    #[serde(rename = "A1")]
    pub a1: Su2Wire,
    #[serde(rename = "A0")]
    pub a0: Su2Wire,
    #[serde(rename = "B1")]
    pub b1: Su2Wire,
    #[serde(rename = "B0")]
    pub b0: Su2Wire,
}

impl KakFactorsWire {
    pub fn from_factors(f: &KakFactors<f64>) -> Self {
        KakFactorsWire {
            k0: f.k0,
            k: f.k,
            a1: su2_to_wire(&f.a1),
            a0: su2_to_wire(&f.a0),
            b1: su2_to_wire(&f.b1),
            b0: su2_to_wire(&f.b0),
        }
    }

    pub fn to_factors(&self) -> Result<KakFactors<f64>, LinalgError> {
        Ok(KakFactors {
            k0: self.k0,
            k: self.k,
            a1: su2_from_wire(&self.a1)?,
            a0: su2_from_wire(&self.a0)?,
            b1: su2_from_wire(&self.b1)?,
            b0: su2_from_wire(&self.b0)?,
            normalization: crate::kak::KakNormalization {
                pi_shifts: [0; 3],
                axis_order: [0, 1, 2],
                sign_absorbed: false,
            },
        })
    }
}
