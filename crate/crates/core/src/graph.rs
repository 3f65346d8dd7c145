//! The canonical interaction Hamiltonian
//! `alpha XX + beta YY + gamma ZZ` as a four-site tight-binding graph: Weyl
//! symbol blocks, topological invariants, the closed-form Bell spectrum, and
//! zero-mode scans over the coupling `gamma`.
//!
//! Site order is `(a1, a2, b1, b2)`, i.e. the basis `|00>, |11>, |01>, |10>`.
//! The a-pair hops with `alpha - beta` at self-energy `+gamma`, the b-pair
//! with `alpha + beta` at `-gamma`.

use num_complex::Complex;
use thiserror::Error;

use crate::entanglement::{BellState, PureState};
use crate::linalg::CMatrix;
use crate::pauli::pauli_2q;
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("gapless symbol: a block vanishes at a momentum point (gap {gap:.3e}, tol {tol:.3e})")]
    GaplessSymbol { gap: f64, tol: f64 },
}

/// Couplings `(alpha, beta, gamma)` of the canonical interaction Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphParams<T: Real = f64> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

/// Weyl symbol of the graph Hamiltonian: two scalar blocks evaluated at
/// `k = 0` and `k = pi`, stored in that order.
///
/// `h1(k) = gamma + (alpha - beta) cos k`, `h2(k) = -gamma + (alpha + beta) cos k`,
/// computed with `cos k` substituted exactly as +-1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolBlocks<T: Real = f64> {
    pub h1: [T; 2],
    pub h2: [T; 2],
}

/// Spectrum line labels `(m, +-)` with their Bell eigenstates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineLabel {
    OnePlus,
    OneMinus,
    TwoPlus,
    TwoMinus,
}

impl LineLabel {
    pub const ALL: [LineLabel; 4] =
        [LineLabel::OnePlus, LineLabel::OneMinus, LineLabel::TwoPlus, LineLabel::TwoMinus];

    pub fn as_str(self) -> &'static str {
        match self {
            LineLabel::OnePlus => "1+",
            LineLabel::OneMinus => "1-",
            LineLabel::TwoPlus => "2+",
            LineLabel::TwoMinus => "2-",
        }
    }

    pub fn bell(self) -> BellState {
        match self {
            LineLabel::OnePlus => BellState::PhiPlus,
            LineLabel::OneMinus => BellState::PhiMinus,
            LineLabel::TwoPlus => BellState::PsiPlus,
            LineLabel::TwoMinus => BellState::PsiMinus,
        }
    }

    /// Label pair rendered as `line:bell`, e.g. `1+:Phi+`.
    pub fn pair_label(self) -> String {
        format!("{}:{}", self.as_str(), self.bell().label())
    }
}

impl std::fmt::Display for LineLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One labeled eigenvalue with its Bell eigenstate.
#[derive(Debug, Clone)]
pub struct SpectrumLine<T: Real = f64> {
    pub label: LineLabel,
    pub value: T,
    pub state: PureState<T>,
}

/// Topological data of a gapped parameter point.
#[derive(Debug, Clone)]
pub struct InvariantReport<T: Real = f64> {
    pub nu1: i32,
    pub nu2: i32,
    pub nu: i32,
    /// Eigenvalues in the fixed order `1+, 1-, 2+, 2-`.
    pub levels: [T; 4],
    /// Zero modes attached by a scan; empty for a single gapped point.
    pub zero_modes: Vec<LineLabel>,
}

/// The canonical Hamiltonian `alpha XX + beta YY + gamma ZZ` in the
/// computational basis.
pub fn canonical_hamiltonian<T: Real>(p: &GraphParams<T>) -> CMatrix<T> {
    let xx = pauli_2q::<T>(1, 1).scale_re(p.alpha);
    let yy = pauli_2q::<T>(2, 2).scale_re(p.beta);
    let zz = pauli_2q::<T>(3, 3).scale_re(p.gamma);
    &(&xx + &yy) + &zz
}

/// Permutation from the computational basis to the site basis
/// `(|00>, |11>, |01>, |10>)`.
pub fn site_basis_permutation<T: Real>() -> CMatrix<T> {
    // site index s holds computational index perm[s]
    let perm = [0usize, 3, 1, 2];
    let mut p = CMatrix::zeros(4, 4);
    for (site, &comp) in perm.iter().enumerate() {
        p[(site, comp)] = Complex::new(T::one(), T::zero());
    }
    p
}

/// The four-site tight-binding Hamiltonian in site order `(a1, a2, b1, b2)`:
/// two decoupled two-site blocks `[[g, a-b], [a-b, g]]` and
/// `[[-g, a+b], [a+b, -g]]`.
pub fn graph_hamiltonian<T: Real>(p: &GraphParams<T>) -> CMatrix<T> {
    let mut h = CMatrix::zeros(4, 4);
    let hop_a = p.alpha - p.beta;
    let hop_b = p.alpha + p.beta;
    let re = |x: T| Complex::new(x, T::zero());
    h[(0, 0)] = re(p.gamma);
    h[(1, 1)] = re(p.gamma);
    h[(0, 1)] = re(hop_a);
    h[(1, 0)] = re(hop_a);
    h[(2, 2)] = re(-p.gamma);
    h[(3, 3)] = re(-p.gamma);
    h[(2, 3)] = re(hop_b);
    h[(3, 2)] = re(hop_b);
    h
}

/// Weyl symbol blocks at the two momentum points, in closed form.
pub fn weyl_symbol<T: Real>(p: &GraphParams<T>) -> SymbolBlocks<T> {
    let hop_a = p.alpha - p.beta;
    let hop_b = p.alpha + p.beta;
    SymbolBlocks {
        h1: [p.gamma + hop_a, p.gamma - hop_a],
        h2: [-p.gamma + hop_b, -p.gamma - hop_b],
    }
}

/// Closed-form spectrum with Bell eigenstates, in the fixed order
/// `1+, 1-, 2+, 2-`.
pub fn spectrum<T: Real>(p: &GraphParams<T>) -> [SpectrumLine<T>; 4] {
    let levels = level_values(p);
    std::array::from_fn(|i| {
        let label = LineLabel::ALL[i];
        SpectrumLine { label, value: levels[i], state: label.bell().state() }
    })
}

fn level_values<T: Real>(p: &GraphParams<T>) -> [T; 4] {
    let hop_a = p.alpha - p.beta;
    let hop_b = p.alpha + p.beta;
    [p.gamma + hop_a, p.gamma - hop_a, -p.gamma + hop_b, -p.gamma - hop_b]
}

/// Default boundary tolerance, scale-free in the couplings:
/// `1e-8 * max(|alpha| + |beta| + |gamma|, 1)`.
pub fn default_boundary_tol<T: Real>(p: &GraphParams<T>) -> T {
    T::of(1e-8) * (p.alpha.abs() + p.beta.abs() + p.gamma.abs()).max(T::one())
}

fn half_sign_sum<T: Real>(values: [T; 2]) -> i32 {
    let sgn = |x: T| if x > T::zero() { 1 } else { -1 };
    (sgn(values[0]) + sgn(values[1])) / 2
}

/// Topological invariants of a gapped parameter point.
///
/// Each block contributes half the sum of its symbol signs over the two
/// momentum points. The first block is counted as `gamma + (alpha - beta) cos k`;
/// the second enters with its sign inverted, `gamma + (alpha + beta) cos k`,
/// orienting both counts toward increasing `gamma` so the total takes each
/// value in -2..=2 exactly once across the five gapped regions.
pub fn invariant_nu<T: Real>(p: &GraphParams<T>) -> Result<InvariantReport<T>, GraphError> {
    invariant_nu_with_tol(p, default_boundary_tol(p))
}

/// [`invariant_nu`] with an explicit boundary tolerance.
pub fn invariant_nu_with_tol<T: Real>(
    p: &GraphParams<T>,
    boundary_tol: T,
) -> Result<InvariantReport<T>, GraphError> {
    let blocks = weyl_symbol(p);
    let levels = level_values(p);
    let gap = levels.iter().map(|x| x.abs()).fold(T::infinity(), T::min);
    if gap <= boundary_tol {
        return Err(GraphError::GaplessSymbol { gap: gap.as_f64(), tol: boundary_tol.as_f64() });
    }
    let nu1 = half_sign_sum(blocks.h1);
    let nu2 = half_sign_sum([-blocks.h2[0], -blocks.h2[1]]);
    Ok(InvariantReport { nu1, nu2, nu: nu1 + nu2, levels, zero_modes: Vec::new() })
}

/// One scanned grid point: either a gapped invariant report or a phase
/// boundary with its zero modes.
#[derive(Debug, Clone)]
pub enum ScanCell<T: Real = f64> {
    Gapped {
        report: InvariantReport<T>,
        /// Lines that crossed zero since the previous gapped cell whenever
        /// the invariants changed.
        crossings: Vec<LineLabel>,
    },
    Boundary {
        zero_modes: Vec<LineLabel>,
    },
}

#[derive(Debug, Clone)]
pub struct ScanRow<T: Real = f64> {
    pub gamma: T,
    pub levels: [T; 4],
    pub cell: ScanCell<T>,
}

/// Scan the invariants along a `gamma` grid at fixed `alpha`, `beta`.
///
/// Boundary cells are grid points where some level sits within the boundary
/// tolerance of zero; on gapped cells any invariant change relative to the
/// previous gapped cell is annotated with the lines that crossed zero in
/// between.
pub fn phase_scan<T: Real>(alpha: T, beta: T, gamma_grid: &[T]) -> Vec<ScanRow<T>> {
    let mut rows = Vec::with_capacity(gamma_grid.len());
    let mut previous: Option<(i32, i32, [T; 4])> = None;
    for &gamma in gamma_grid {
        let p = GraphParams { alpha, beta, gamma };
        let levels = level_values(&p);
        let tol = default_boundary_tol(&p);
        match invariant_nu_with_tol(&p, tol) {
            Ok(report) => {
                let mut crossings = Vec::new();
                if let Some((prev_nu1, prev_nu2, prev_levels)) = previous {
                    let changed_pairs: [(bool, [usize; 2]); 2] = [
                        (report.nu1 != prev_nu1, [0, 1]),
                        (report.nu2 != prev_nu2, [2, 3]),
                    ];
                    for (changed, idx) in changed_pairs {
                        if !changed {
                            continue;
                        }
                        for line_idx in idx {
                            let sign_flip = (prev_levels[line_idx] > T::zero())
                                != (levels[line_idx] > T::zero());
                            if sign_flip {
                                crossings.push(LineLabel::ALL[line_idx]);
                            }
                        }
                    }
                }
                previous = Some((report.nu1, report.nu2, levels));
                rows.push(ScanRow { gamma, levels, cell: ScanCell::Gapped { report, crossings } });
            }
            Err(GraphError::GaplessSymbol { .. }) => {
                let zero_modes = LineLabel::ALL
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| levels[i].abs() <= tol)
                    .map(|(_, &l)| l)
                    .collect();
                rows.push(ScanRow { gamma, levels, cell: ScanCell::Boundary { zero_modes } });
            }
        }
    }
    rows
}

/// Render scan rows as CSV with the fixed column set
/// `gamma, lambda_1_plus, lambda_1_minus, lambda_2_plus, lambda_2_minus,
/// nu1, nu2, nu, boundary_flag, zero_mode_labels`.
pub fn scan_to_csv<T: Real>(rows: &[ScanRow<T>]) -> String {
    let mut out = String::from(
        "gamma,lambda_1_plus,lambda_1_minus,lambda_2_plus,lambda_2_minus,nu1,nu2,nu,boundary_flag,zero_mode_labels\n",
    );
    for row in rows {
        let labels;
        let (nu1, nu2, nu, flag) = match &row.cell {
            ScanCell::Gapped { report, crossings } => {
                labels = join_labels(crossings);
                (report.nu1.to_string(), report.nu2.to_string(), report.nu.to_string(), 0)
            }
            ScanCell::Boundary { zero_modes } => {
                labels = join_labels(zero_modes);
                (String::new(), String::new(), String::new(), 1)
            }
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            row.gamma,
            row.levels[0],
            row.levels[1],
            row.levels[2],
            row.levels[3],
            nu1,
            nu2,
            nu,
            flag,
            labels
        ));
    }
    out
}

fn join_labels(labels: &[LineLabel]) -> String {
    labels.iter().map(|l| l.pair_label()).collect::<Vec<_>>().join(";")
}
