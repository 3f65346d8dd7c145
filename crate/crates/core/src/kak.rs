//! Constructive Cartan decomposition of U(4): any two-qubit operator factors
//! as `(A1 (x) A0) exp(i (k0 1 + k . Sigma)) (B1 (x) B0)` with `A_i, B_i` in
//! SU(2) and `Sigma_i = sigma_i (x) sigma_i`.
//!
//! The algorithm conjugates into the magic basis, where local gates are real
//! orthogonal; splitting the conjugated operator into real and imaginary
//! parts and jointly diagonalizing them over orthogonal factors yields the
//! canonical interaction phases, and the orthogonal factors map back to
//! SU(2) pairs.

use num_complex::Complex;
use thiserror::Error;

use crate::entanglement::{magic_basis_transform, magic_matrix};
use crate::linalg::{joint_orthogonal_diagonalize_seeded, CMatrix, DEFAULT_RETRY_SEED};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum KakError {
    #[error("expected a unitary matrix (defect {defect:.3e} exceeds tol {tol:.3e})")]
    NotUnitary { defect: f64, tol: f64 },
    #[error("expected a 4x4 operator, got {rows}x{cols}")]
    NotTwoQubitOperator { rows: usize, cols: usize },
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("expected a special orthogonal matrix: {0}")]
    NotSpecialOrthogonal(String),
}

/// Integer matrix relating the diagonal magic-basis phases `theta` to the
/// canonical coordinates `(k0, k)`: `theta = T k`. `T T^T = 4`, so the
/// inverse is `T^T / 4`, exactly.
const THETA_FROM_K: [[i32; 4]; 4] = [
    [1, 1, -1, 1],
    [1, 1, 1, -1],
    [1, -1, -1, -1],
    [1, -1, 1, 1],
];

/// Record of the normalization applied after the raw phase extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KakNormalization {
    /// Multiples of pi moved out of each interaction coordinate.
    pub pi_shifts: [i32; 3],
    /// `k[slot]` of the output came from raw axis `axis_order[slot]`.
    pub axis_order: [usize; 3],
    /// Whether an odd number of pi shifts flipped the sign of `A1`.
    pub sign_absorbed: bool,
}

impl KakNormalization {
    fn identity() -> Self {
        KakNormalization { pi_shifts: [0; 3], axis_order: [0, 1, 2], sign_absorbed: false }
    }

    pub fn is_identity(&self) -> bool {
        self.pi_shifts == [0; 3] && self.axis_order == [0, 1, 2] && !self.sign_absorbed
    }
}

/// Factors of the Cartan decomposition: global phase coordinate `k0`,
/// interaction vector `k`, and the four SU(2) locals in
/// `(A1 (x) A0) exp(i (k0 1 + k . Sigma)) (B1 (x) B0)`.
#[derive(Debug, Clone)]
pub struct KakFactors<T: Real = f64> {
    pub k0: T,
    pub k: [T; 3],
    pub a1: CMatrix<T>,
    pub a0: CMatrix<T>,
    pub b1: CMatrix<T>,
    pub b0: CMatrix<T>,
    pub normalization: KakNormalization,
}

impl<T: Real> KakFactors<T> {
    /// Largest interaction magnitude; zero for local operators.
    pub fn max_interaction(&self) -> T {
        self.k.iter().map(|x| x.abs()).fold(T::zero(), T::max)
    }
}

/// The canonical entangler `exp(i (k0 1 + k . Sigma))`, assembled from Bell
/// projectors so no iterative exponential is needed.
pub fn canonical_entangler<T: Real>(k0: T, k: [T; 3]) -> CMatrix<T> {
    let theta = theta_from_k(k0, k);
    let m = magic_matrix::<T>();
    let mut e = CMatrix::zeros(4, 4);
    for (j, &th) in theta.iter().enumerate() {
        let phase = Complex::from_polar(T::one(), th);
        let col = m.column(j);
        for i in 0..4 {
            for l in 0..4 {
                e[(i, l)] = e[(i, l)] + col[i] * phase * col[l].conj();
            }
        }
    }
    e
}

fn theta_from_k<T: Real>(k0: T, k: [T; 3]) -> [T; 4] {
    let kv = [k0, k[0], k[1], k[2]];
    let mut theta = [T::zero(); 4];
    for (j, row) in THETA_FROM_K.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            theta[j] = theta[j] + T::of(c as f64) * kv[i];
        }
    }
    theta
}

fn k_from_theta<T: Real>(theta: [T; 4]) -> (T, [T; 3]) {
    let quarter = T::of(0.25);
    let mut kv = [T::zero(); 4];
    for (i, entry) in kv.iter_mut().enumerate() {
        for (j, row) in THETA_FROM_K.iter().enumerate() {
            *entry = *entry + T::of(row[i] as f64) * theta[j];
        }
        *entry = *entry * quarter;
    }
    (kv[0], [kv[1], kv[2], kv[3]])
}

/// Split an exact tensor product of two SU(2) matrices into its factors,
/// with the sign chosen so the dominant entry of the first factor points
/// into the right half-plane.
fn factor_su2_tensor<T: Real>(l: &CMatrix<T>) -> Result<(CMatrix<T>, CMatrix<T>), KakError> {
    // Blocks of l are a[i][j] * c.
    let block = |bi: usize, bj: usize| {
        CMatrix::from_fn(2, 2, |i, j| l[(bi * 2 + i, bj * 2 + j)])
    };
    let (mut bi, mut bj, mut best) = (0, 0, T::zero());
    for i in 0..2 {
        for j in 0..2 {
            let norm = block(i, j).frobenius_norm();
            if norm > best {
                best = norm;
                bi = i;
                bj = j;
            }
        }
    }
    let c_raw = block(bi, bj);
    let s = c_raw.det(); // = a[bi][bj]^2 for a genuine tensor product
    if s.norm() < T::of(1e-6) {
        return Err(KakError::DecompositionFailed(
            "operator is not a tensor product of SU(2) factors".into(),
        ));
    }
    let root = s.sqrt();
    let c = c_raw.scale(Complex::new(T::one(), T::zero()) / root);
    let mut a = CMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let tr = block(i, j).matmul(&c.adjoint()).trace();
            a[(i, j)] = tr * Complex::new(T::of(0.5), T::zero());
        }
    }
    Ok(canonical_su2_pair(a, c))
}

/// Fix the overall +-(A, C) representative: the largest-magnitude entry of
/// `a` gets a positive real part (positive imaginary part on the boundary).
fn canonical_su2_pair<T: Real>(a: CMatrix<T>, c: CMatrix<T>) -> (CMatrix<T>, CMatrix<T>) {
    let mut dominant = Complex::new(T::zero(), T::zero());
    let mut best = T::zero();
    for i in 0..2 {
        for j in 0..2 {
            let mag = a[(i, j)].norm();
            if mag > best {
                best = mag;
                dominant = a[(i, j)];
            }
        }
    }
    let boundary = T::of(1e-12);
    let flip = dominant.re < -boundary || (dominant.re.abs() <= boundary && dominant.im < T::zero());
    if flip {
        (a.scale_re(-T::one()), c.scale_re(-T::one()))
    } else {
        (a, c)
    }
}

/// Invert the magic-basis homomorphism on SO(4): returns `(A, B)` in SU(2)
/// with `M q M^dag = A (x) conj(B)`, picking the sign representative of
/// [`canonical_su2_pair`].
pub fn phi_inverse<T: Real>(q: &CMatrix<T>, tol: T) -> Result<(CMatrix<T>, CMatrix<T>), KakError> {
    if q.rows() != 4 || q.cols() != 4 {
        return Err(KakError::NotTwoQubitOperator { rows: q.rows(), cols: q.cols() });
    }
    if !q.is_orthogonal(tol) {
        return Err(KakError::NotSpecialOrthogonal("matrix is not real orthogonal".into()));
    }
    let det = q.det().re;
    if (det - T::one()).abs() > tol.max(T::of(1e-6)) {
        return Err(KakError::NotSpecialOrthogonal(format!(
            "determinant {:.6} is not +1",
            det.as_f64()
        )));
    }
    let m = magic_matrix::<T>();
    let local = &m.matmul(q) * &m.adjoint();
    let (a, c) = factor_su2_tensor(&local)?;
    Ok((a, c.conj()))
}

/// SU(2) rotations whose simultaneous action on both qubits permutes the
/// interaction axes: `swap_rotation(i, j)` exchanges axes `i` and `j`.
fn swap_rotation<T: Real>(i: usize, j: usize) -> CMatrix<T> {
    let h = T::FRAC_1_SQRT_2();
    let mut m = CMatrix::zeros(2, 2);
    match (i.min(j), i.max(j)) {
        // -i (sigma_x + sigma_y) / sqrt(2)
        (0, 1) => {
            m[(0, 1)] = Complex::new(-h, -h);
            m[(1, 0)] = Complex::new(h, -h);
        }
        // -i (sigma_y + sigma_z) / sqrt(2)
        (1, 2) => {
            m[(0, 0)] = Complex::new(T::zero(), -h);
            m[(0, 1)] = Complex::new(-h, T::zero());
            m[(1, 0)] = Complex::new(h, T::zero());
            m[(1, 1)] = Complex::new(T::zero(), h);
        }
        // -i (sigma_x + sigma_z) / sqrt(2)
        (0, 2) => {
            m[(0, 0)] = Complex::new(T::zero(), -h);
            m[(0, 1)] = Complex::new(T::zero(), -h);
            m[(1, 0)] = Complex::new(T::zero(), -h);
            m[(1, 1)] = Complex::new(T::zero(), h);
        }
        _ => panic!("swap axes must be distinct and in 0..3"),
    }
    m
}

/// Cartan (KAK) decomposition of a two-qubit unitary with the default
/// deterministic retry seed.
pub fn kak_decompose<T: Real>(u: &CMatrix<T>, tol: T) -> Result<KakFactors<T>, KakError> {
    kak_decompose_seeded(u, tol, DEFAULT_RETRY_SEED)
}

/// [`kak_decompose`] with an explicit seed for the joint-diagonalization
/// retry policy.
pub fn kak_decompose_seeded<T: Real>(
    u: &CMatrix<T>,
    tol: T,
    seed: u64,
) -> Result<KakFactors<T>, KakError> {
    if u.rows() != 4 || u.cols() != 4 {
        return Err(KakError::NotTwoQubitOperator { rows: u.rows(), cols: u.cols() });
    }
    if !u.is_unitary(tol) {
        let defect = (&u.adjoint().matmul(u) - &CMatrix::identity(4)).frobenius_norm();
        return Err(KakError::NotUnitary { defect: defect.as_f64(), tol: tol.as_f64() });
    }

    let o_mag = magic_basis_transform(u).expect("size checked");
    let o_r = o_mag.real_part();
    let o_i = o_mag.imag_part();
    let (q_l, q_r, d_r, d_i) = joint_orthogonal_diagonalize_seeded(&o_r, &o_i, tol, seed)
        .map_err(|e| KakError::DecompositionFailed(e.to_string()))?;

    let theta = [
        d_i[0].atan2(d_r[0]),
        d_i[1].atan2(d_r[1]),
        d_i[2].atan2(d_r[2]),
        d_i[3].atan2(d_r[3]),
    ];
    let (k0, k) = k_from_theta(theta);

    let m = magic_matrix::<T>();
    let left_local = &m.matmul(&q_l) * &m.adjoint();
    let right_local = &m.matmul(&q_r.transpose()) * &m.adjoint();
    let (a1, a0) = factor_su2_tensor(&left_local)?;
    let (b1, b0) = factor_su2_tensor(&right_local)?;

    let factors = KakFactors {
        k0,
        k,
        a1,
        a0,
        b1,
        b0,
        normalization: KakNormalization::identity(),
    };
    Ok(canonicalize(factors))
}

/// Normalize the factors: each interaction coordinate is reduced into
/// `(-pi/2, pi/2]` by moving pi multiples into a sign on the left local,
/// coordinates are sorted by decreasing magnitude via paired single-qubit
/// rotations, and `k0` is reduced into `(-pi, pi]`.
fn canonicalize<T: Real>(mut f: KakFactors<T>) -> KakFactors<T> {
    let pi = T::PI();
    let half_pi = pi * T::of(0.5);
    let mut shifts = [0i32; 3];
    let mut parity = false;

    for i in 0..3 {
        while f.k[i] > half_pi {
            f.k[i] = f.k[i] - pi;
            shifts[i] -= 1;
            parity = !parity;
        }
        while f.k[i] <= -half_pi {
            f.k[i] = f.k[i] + pi;
            shifts[i] += 1;
            parity = !parity;
        }
    }
    if parity {
        f.a1 = f.a1.scale_re(-T::one());
    }

    // Stable selection of the descending-|k| order, realized by conjugating
    // the entangler with paired axis-swap rotations.
    let mut order = [0usize, 1, 2];
    for slot in 0..2 {
        let mut best = slot;
        for cand in slot + 1..3 {
            if f.k[cand].abs() > f.k[best].abs() {
                best = cand;
            }
        }
        if best != slot {
            let rot = swap_rotation::<T>(slot, best);
            let rot_dag = rot.adjoint();
            f.k.swap(slot, best);
            order.swap(slot, best);
            f.a1 = f.a1.matmul(&rot_dag);
            f.a0 = f.a0.matmul(&rot_dag);
            f.b1 = rot.matmul(&f.b1);
            f.b0 = rot.matmul(&f.b0);
        }
    }

    let two_pi = pi * T::of(2.0);
    while f.k0 > pi {
        f.k0 = f.k0 - two_pi;
    }
    while f.k0 <= -pi {
        f.k0 = f.k0 + two_pi;
    }

    let (a1, a0) = canonical_su2_pair(f.a1, f.a0);
    let (b1, b0) = canonical_su2_pair(f.b1, f.b0);
    f.a1 = a1;
    f.a0 = a0;
    f.b1 = b1;
    f.b0 = b0;

    let mut axis_order = [0usize; 3];
    for (slot, &axis) in order.iter().enumerate() {
        axis_order[slot] = axis;
    }
    f.normalization = KakNormalization { pi_shifts: shifts, axis_order, sign_absorbed: parity };
    f
}

/// Reassemble the unitary from its factors.
pub fn kak_rebuild<T: Real>(f: &KakFactors<T>) -> CMatrix<T> {
    let left = f.a1.tensor(&f.a0);
    let right = f.b1.tensor(&f.b0);
    let e = canonical_entangler(f.k0, f.k);
    &left.matmul(&e) * &right
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_hamiltonian, GraphParams};
    use crate::linalg::expm_i;
    use crate::pauli::pauli_2q;
    use crate::random::{haar_su2, haar_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cnot() -> CMatrix<f64> {
        let rows: Vec<Vec<f64>> = vec![
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ];
        CMatrix::from_real_rows(&rows).unwrap()
    }

    fn swap() -> CMatrix<f64> {
        let rows: Vec<Vec<f64>> = vec![
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ];
        CMatrix::from_real_rows(&rows).unwrap()
    }

    fn residual(u: &CMatrix<f64>, f: &KakFactors<f64>) -> f64 {
        (&kak_rebuild(f) - u).frobenius_norm()
    }

    #[test]
    fn identity_decomposes_trivially() {
        let id = CMatrix::<f64>::identity(4);
        let f = kak_decompose(&id, 1e-9).unwrap();
        assert!(f.k0.abs() < 1e-12);
        assert!(f.max_interaction() < 1e-12);
        assert!(residual(&id, &f) < 1e-12);
        assert!((&f.a1 - &CMatrix::identity(2)).frobenius_norm() < 1e-9);
    }

    #[test]
    fn local_gates_have_zero_interaction() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..100 {
            let u = haar_su2::<f64>(&mut rng).tensor(&haar_su2::<f64>(&mut rng));
            let f = kak_decompose(&u, 1e-9).unwrap();
            assert!(f.max_interaction() < 1e-9, "local gate produced k = {:?}", f.k);
            assert!(residual(&u, &f) < 1e-9);
        }
    }

    #[test]
    fn canonical_xx_quarter_turn() {
        let u = expm_i(&pauli_2q::<f64>(1, 1), -std::f64::consts::FRAC_PI_4).unwrap();
        // expm_i uses exp(-iHt); with t = -pi/4 this is exp(i pi/4 XX).
        let f = kak_decompose(&u, 1e-9).unwrap();
        assert!((f.k[0].abs() - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
        assert!(f.k[1].abs() < 1e-10 && f.k[2].abs() < 1e-10);
        assert!(residual(&u, &f) < 1e-9);
    }

    #[test]
    fn gate_zoo_interaction_magnitudes() {
        let pi4 = std::f64::consts::FRAC_PI_4;
        let cases: Vec<(CMatrix<f64>, [f64; 3])> = vec![
            (cnot(), [pi4, 0.0, 0.0]),
            (swap(), [pi4, pi4, pi4]),
        ];
        for (u, expected) in cases {
            let f = kak_decompose(&u, 1e-9).unwrap();
            for (i, &e) in expected.iter().enumerate() {
                assert!(
                    (f.k[i].abs() - e).abs() < 1e-9,
                    "|k| mismatch: got {:?}, expected {:?}",
                    f.k,
                    expected
                );
            }
            assert!(residual(&u, &f) < 1e-9);
        }
    }

    #[test]
    fn haar_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..500 {
            let u = haar_unitary::<f64>(4, &mut rng);
            let f = kak_decompose(&u, 1e-9).unwrap();
            assert!(residual(&u, &f) < 1e-8);
            for local in [&f.a1, &f.a0, &f.b1, &f.b0] {
                assert!(local.is_unitary(1e-9));
                assert!((local.det() - Complex::new(1.0, 0.0)).norm() < 1e-9);
            }
            assert!(f.k.iter().all(|x| x.abs() <= std::f64::consts::FRAC_PI_2 + 1e-12));
            assert!(f.k[0].abs() >= f.k[1].abs() && f.k[1].abs() >= f.k[2].abs());
        }
    }

    #[test]
    fn rejects_non_unitary_and_wrong_size() {
        let bad = CMatrix::<f64>::zeros(4, 4);
        assert!(matches!(kak_decompose(&bad, 1e-9), Err(KakError::NotUnitary { .. })));
        let small = CMatrix::<f64>::identity(2);
        assert!(matches!(
            kak_decompose(&small, 1e-9),
            Err(KakError::NotTwoQubitOperator { .. })
        ));
    }

    #[test]
    fn rebuild_of_pure_phase() {
        let f = KakFactors {
            k0: 0.7,
            k: [0.0; 3],
            a1: CMatrix::identity(2),
            a0: CMatrix::identity(2),
            b1: CMatrix::identity(2),
            b0: CMatrix::identity(2),
            normalization: KakNormalization::identity(),
        };
        let u = kak_rebuild(&f);
        let expected = CMatrix::identity(4).scale(Complex::from_polar(1.0, 0.7));
        assert!((&u - &expected).frobenius_norm() < 1e-12);
    }

    #[test]
    fn rebuild_matches_canonical_evolution() {
        // exp(i t (a XX + b YY + c ZZ)) is the canonical evolution run backwards.
        let p = GraphParams { alpha: 0.3, beta: -0.8, gamma: 0.45 };
        let t = 0.9;
        let f = KakFactors {
            k0: 0.0,
            k: [p.alpha * t, p.beta * t, p.gamma * t],
            a1: CMatrix::identity(2),
            a0: CMatrix::identity(2),
            b1: CMatrix::identity(2),
            b0: CMatrix::identity(2),
            normalization: KakNormalization::identity(),
        };
        let direct = expm_i(&canonical_hamiltonian(&p), -t).unwrap();
        assert!((&kak_rebuild(&f) - &direct).frobenius_norm() < 1e-11);
    }

    #[test]
    fn phi_inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let a = haar_su2::<f64>(&mut rng);
            let b = haar_su2::<f64>(&mut rng);
            let q = magic_basis_transform(&a.tensor(&b.conj())).unwrap();
            assert!(q.is_orthogonal(1e-10));
            let (ar, br) = phi_inverse(&q, 1e-9).unwrap();
            // recovered up to a joint sign
            let direct = (&ar - &a).frobenius_norm() + (&br - &b).frobenius_norm();
            let flipped = (&ar.scale_re(-1.0) - &a).frobenius_norm()
                + (&br.scale_re(-1.0) - &b).frobenius_norm();
            assert!(direct.min(flipped) < 1e-9);
            // reconstruction through the forward map
            let rebuilt = magic_basis_transform(&ar.tensor(&br.conj())).unwrap();
            assert!((&rebuilt - &q).frobenius_norm() < 1e-9);
            // the kernel pair maps to the same output
            let q_flipped =
                magic_basis_transform(&a.scale_re(-1.0).tensor(&b.scale_re(-1.0).conj())).unwrap();
            let (af, bf) = phi_inverse(&q_flipped, 1e-9).unwrap();
            assert!((&af - &ar).frobenius_norm() < 1e-9);
            assert!((&bf - &br).frobenius_norm() < 1e-9);
        }
    }

    #[test]
    fn phi_inverse_identity() {
        let (a, b) = phi_inverse(&CMatrix::<f64>::identity(4), 1e-9).unwrap();
        assert!((&a - &CMatrix::identity(2)).frobenius_norm() < 1e-12);
        assert!((&b - &CMatrix::identity(2)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn phi_inverse_rejects_improper_rotation() {
        let mut q = CMatrix::<f64>::identity(4);
        q[(3, 3)] = Complex::new(-1.0, 0.0);
        assert!(matches!(phi_inverse(&q, 1e-9), Err(KakError::NotSpecialOrthogonal(_))));
    }

    #[test]
    fn swap_rotations_permute_interaction_axes() {
        for (i, j) in [(0usize, 1usize), (1, 2), (0, 2)] {
            let rot = swap_rotation::<f64>(i, j);
            assert!(rot.is_unitary(1e-12));
            assert!((rot.det() - Complex::new(1.0, 0.0)).norm() < 1e-12);
            let pair = rot.tensor(&rot);
            for axis in 0..3usize {
                let sigma = pauli_2q::<f64>(axis + 1, axis + 1);
                let conj = &pair.matmul(&sigma) * &pair.adjoint();
                let target = if axis == i {
                    j
                } else if axis == j {
                    i
                } else {
                    axis
                };
                let expected = pauli_2q::<f64>(target + 1, target + 1);
                assert!(
                    (&conj - &expected).frobenius_norm() < 1e-12,
                    "swap({i},{j}) failed on axis {axis}"
                );
            }
        }
    }
}
