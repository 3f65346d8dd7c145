//! Tenfold symmetry classification of finite Hamiltonians: antiunitary
//! symmetry detection, class assignment, flattened-Hamiltonian signatures,
//! Clifford algebra bookkeeping, and the stable and finite homotopy tables.

use thiserror::Error;

use crate::entanglement::{Antiunitary, Sign};
use crate::linalg::{eig_hermitian, CMatrix};
use crate::pauli::pauli_2q;
use crate::scalar::{default_tol, Real};

#[derive(Debug, Error)]
pub enum TenfoldError {
    #[error("inconsistent symmetry candidates: {0}")]
    InconsistentSymmetries(String),
    #[error("gapless Hamiltonian: smallest |eigenvalue| {gap:.3e} within tolerance {tol:.3e} of zero")]
    GaplessHamiltonian { gap: f64, tol: f64 },
    #[error("no finite signature construction for class {0}")]
    UnsupportedClass(String),
    #[error("outside table validity: {0}")]
    OutOfTableRange(String),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
}

/// The ten Cartan class labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassName {
    A,
    AIII,
    AI,
    BDI,
    D,
    DIII,
    AII,
    CII,
    C,
    CI,
}

impl ClassName {
    pub const ALL: [ClassName; 10] = [
        ClassName::A,
        ClassName::AIII,
        ClassName::AI,
        ClassName::BDI,
        ClassName::D,
        ClassName::DIII,
        ClassName::AII,
        ClassName::CII,
        ClassName::C,
        ClassName::CI,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::A => "A",
            ClassName::AIII => "AIII",
            ClassName::AI => "AI",
            ClassName::BDI => "BDI",
            ClassName::D => "D",
            ClassName::DIII => "DIII",
            ClassName::AII => "AII",
            ClassName::CII => "CII",
            ClassName::C => "C",
            ClassName::CI => "CI",
        }
    }
}

impl std::fmt::Display for ClassName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Symmetric space labels: the two complex series and the eight real ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceLabel {
    /// `C_i`, index mod 2.
    C(u8),
    /// `R_i`, index mod 8.
    R(u8),
}

impl SpaceLabel {
    pub fn shifted(self, by: i64) -> SpaceLabel {
        match self {
            SpaceLabel::C(i) => SpaceLabel::C((i as i64 + by).rem_euclid(2) as u8),
            SpaceLabel::R(i) => SpaceLabel::R((i as i64 + by).rem_euclid(8) as u8),
        }
    }
}

impl std::fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceLabel::C(i) => write!(f, "C{i}"),
            SpaceLabel::R(i) => write!(f, "R{i}"),
        }
    }
}

/// A symmetry class: the label plus the defining antiunitary data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryClass {
    pub name: ClassName,
    pub theta_square: Option<Sign>,
    pub pi_square: Option<Sign>,
    pub chiral: bool,
}

/// Homotopy groups that appear in the classification tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomotopyGroup {
    Zero,
    Z,
    Z2,
    TwoZ,
    /// Finite cyclic group `Z_m`, `m >= 2`.
    ZMod(u32),
}

impl std::fmt::Display for HomotopyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomotopyGroup::Zero => f.write_str("0"),
            HomotopyGroup::Z => f.write_str("Z"),
            HomotopyGroup::Z2 => f.write_str("Z2"),
            HomotopyGroup::TwoZ => f.write_str("2Z"),
            HomotopyGroup::ZMod(m) => write!(f, "Z{m}"),
        }
    }
}

/// One row of the classification table.
struct ClassRow {
    name: ClassName,
    theta: Option<Sign>,
    pi: Option<Sign>,
    chiral: bool,
    hamiltonian_space: SpaceLabel,
    evolution_space: SpaceLabel,
}

const P: Option<Sign> = Some(Sign::Plus);
const M: Option<Sign> = Some(Sign::Minus);

/// The ten classes, their antiunitary data, and their symmetric spaces for
/// Hamiltonians and evolution operators.
const CLASS_TABLE: [ClassRow; 10] = [
    ClassRow { name: ClassName::A,    theta: None, pi: None, chiral: false, hamiltonian_space: SpaceLabel::C(0), evolution_space: SpaceLabel::C(1) },
    ClassRow { name: ClassName::AIII, theta: None, pi: None, chiral: true,  hamiltonian_space: SpaceLabel::C(1), evolution_space: SpaceLabel::C(0) },
    ClassRow { name: ClassName::AI,   theta: P,    pi: None, chiral: false, hamiltonian_space: SpaceLabel::R(0), evolution_space: SpaceLabel::R(7) },
    ClassRow { name: ClassName::BDI,  theta: P,    pi: P,    chiral: true,  hamiltonian_space: SpaceLabel::R(1), evolution_space: SpaceLabel::R(0) },
    ClassRow { name: ClassName::D,    theta: None, pi: P,    chiral: false, hamiltonian_space: SpaceLabel::R(2), evolution_space: SpaceLabel::R(1) },
    ClassRow { name: ClassName::DIII, theta: M,    pi: P,    chiral: true,  hamiltonian_space: SpaceLabel::R(3), evolution_space: SpaceLabel::R(2) },
    ClassRow { name: ClassName::AII,  theta: M,    pi: None, chiral: false, hamiltonian_space: SpaceLabel::R(4), evolution_space: SpaceLabel::R(3) },
    ClassRow { name: ClassName::CII,  theta: M,    pi: M,    chiral: true,  hamiltonian_space: SpaceLabel::R(5), evolution_space: SpaceLabel::R(4) },
    ClassRow { name: ClassName::C,    theta: None, pi: M,    chiral: false, hamiltonian_space: SpaceLabel::R(6), evolution_space: SpaceLabel::R(5) },
    ClassRow { name: ClassName::CI,   theta: P,    pi: M,    chiral: true,  hamiltonian_space: SpaceLabel::R(7), evolution_space: SpaceLabel::R(6) },
];

/// pi_0 of the stable symmetric spaces, indexed C_0, C_1 then R_0..R_7.
const STABLE_PI0_C: [HomotopyGroup; 2] = [HomotopyGroup::Z, HomotopyGroup::Zero];
const STABLE_PI0_R: [HomotopyGroup; 8] = [
    HomotopyGroup::Z,
    HomotopyGroup::Z2,
    HomotopyGroup::Z2,
    HomotopyGroup::Zero,
    HomotopyGroup::TwoZ,
    HomotopyGroup::Zero,
    HomotopyGroup::Zero,
    HomotopyGroup::Zero,
];

/// pi_1 of the stable symmetric spaces, transcribed independently of pi_0 so
/// the Bott shift is a checkable property rather than a definition.
const STABLE_PI1_C: [HomotopyGroup; 2] = [HomotopyGroup::Zero, HomotopyGroup::Z];
const STABLE_PI1_R: [HomotopyGroup; 8] = [
    HomotopyGroup::Z2,
    HomotopyGroup::Z2,
    HomotopyGroup::Zero,
    HomotopyGroup::TwoZ,
    HomotopyGroup::Zero,
    HomotopyGroup::Zero,
    HomotopyGroup::Zero,
    HomotopyGroup::Z,
];

impl SymmetryClass {
    /// Look up the class for a combination of antiunitary squares and
    /// chirality. Every combination allowed by the table resolves; the
    /// chiral flag must be consistent (two antiunitaries force a chiral
    /// product, a single one forbids it).
    pub fn from_flags(
        theta_square: Option<Sign>,
        pi_square: Option<Sign>,
        chiral: bool,
    ) -> Result<SymmetryClass, TenfoldError> {
        for row in &CLASS_TABLE {
            if row.theta == theta_square && row.pi == pi_square && row.chiral == chiral {
                return Ok(SymmetryClass {
                    name: row.name,
                    theta_square,
                    pi_square,
                    chiral,
                });
            }
        }
        Err(TenfoldError::InconsistentSymmetries(format!(
            "no class with theta^2 = {theta_square:?}, pi^2 = {pi_square:?}, chiral = {chiral}"
        )))
    }

    pub fn of(name: ClassName) -> SymmetryClass {
        let row = CLASS_TABLE.iter().find(|r| r.name == name).expect("all classes present");
        SymmetryClass { name, theta_square: row.theta, pi_square: row.pi, chiral: row.chiral }
    }

    pub fn hamiltonian_space(&self) -> SpaceLabel {
        CLASS_TABLE
            .iter()
            .find(|r| r.name == self.name)
            .expect("all classes present")
            .hamiltonian_space
    }

    pub fn evolution_space(&self) -> SpaceLabel {
        CLASS_TABLE
            .iter()
            .find(|r| r.name == self.name)
            .expect("all classes present")
            .evolution_space
    }
}

/// Outcome of probing one antiunitary candidate against a Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    TimeReversal,
    ParticleHole,
    None,
}

/// Probe whether `candidate` commutes (time reversal) or anticommutes
/// (particle-hole) with the Hamiltonian. A zero Hamiltonian reports
/// time reversal.
pub fn detect_symmetry<T: Real>(
    h: &CMatrix<T>,
    candidate: &Antiunitary<T>,
    tol: T,
) -> SymmetryKind {
    if candidate.dim() != h.rows() || !h.is_square() {
        return SymmetryKind::None;
    }
    let conj = candidate.conjugate_hamiltonian(h);
    if (&conj - h).frobenius_norm() < tol {
        SymmetryKind::TimeReversal
    } else if (&(&conj + h)).frobenius_norm() < tol {
        SymmetryKind::ParticleHole
    } else {
        SymmetryKind::None
    }
}

/// Explicit chiral test: does the unitary `s` anticommute with `h`?
pub fn is_chiral<T: Real>(h: &CMatrix<T>, s: &CMatrix<T>, tol: T) -> bool {
    if s.rows() != h.rows() || s.cols() != h.cols() {
        return false;
    }
    let shs = &s.matmul(h) * &s.adjoint();
    (&shs + h).frobenius_norm() < tol
}

/// Assign the symmetry class of `h` given optional time-reversal and
/// particle-hole candidates.
///
/// Candidates must individually pass [`detect_symmetry`] with the matching
/// kind. When both are present their product is the chiral operator and its
/// anticommutation with `h` is verified; with at most one candidate the
/// class is non-chiral (a chiral-only system is reachable through
/// [`SymmetryClass::from_flags`] plus [`is_chiral`]).
pub fn classify<T: Real>(
    h: &CMatrix<T>,
    theta: Option<&Antiunitary<T>>,
    pi: Option<&Antiunitary<T>>,
    tol: T,
) -> Result<SymmetryClass, TenfoldError> {
    if let Some(t) = theta {
        if detect_symmetry(h, t, tol) != SymmetryKind::TimeReversal {
            return Err(TenfoldError::InconsistentSymmetries(
                "time-reversal candidate does not commute with the Hamiltonian".into(),
            ));
        }
    }
    if let Some(p) = pi {
        if detect_symmetry(h, p, tol) != SymmetryKind::ParticleHole {
            return Err(TenfoldError::InconsistentSymmetries(
                "particle-hole candidate does not anticommute with the Hamiltonian".into(),
            ));
        }
    }
    let chiral = match (theta, pi) {
        (Some(t), Some(p)) => {
            // S = Theta Pi is unitary: u_theta conj(u_pi).
            let s = t.unitary_part().matmul(&p.unitary_part().conj());
            if !is_chiral(h, &s, tol) {
                return Err(TenfoldError::InconsistentSymmetries(
                    "product of the antiunitaries fails the chiral anticommutation check".into(),
                ));
            }
            true
        }
        _ => false,
    };
    SymmetryClass::from_flags(theta.map(|t| t.square()), pi.map(|p| p.square()), chiral)
}

/// Search the 16 two-qubit Pauli strings for antiunitary symmetries of `h`:
/// returns the first time-reversal and the first particle-hole candidate in
/// the fixed (i, j) iteration order.
pub fn search_pauli_antiunitaries<T: Real>(
    h: &CMatrix<T>,
    tol: T,
) -> (Option<Antiunitary<T>>, Option<Antiunitary<T>>) {
    let mut theta = None;
    let mut pi = None;
    if h.rows() != 4 || h.cols() != 4 {
        return (theta, pi);
    }
    for i in 0..4 {
        for j in 0..4 {
            let candidate = Antiunitary::new(pauli_2q::<T>(i, j), default_tol::<T>())
                .expect("pauli strings square to a sign");
            match detect_symmetry(h, &candidate, tol) {
                SymmetryKind::TimeReversal if theta.is_none() => theta = Some(candidate),
                SymmetryKind::ParticleHole if pi.is_none() => pi = Some(candidate),
                _ => {}
            }
        }
    }
    (theta, pi)
}

/// Flattened Hamiltonian `sign(h)` together with the negative-eigenvalue
/// count and the spectral gap.
#[derive(Debug, Clone)]
pub struct FlattenResult<T: Real = f64> {
    pub k_negative: usize,
    pub flattened: CMatrix<T>,
    pub gap: T,
}

/// Flatten a gapped Hermitian matrix to `sign(h)`.
///
/// Fails with [`TenfoldError::GaplessHamiltonian`] when any eigenvalue sits
/// within `gap_tol` of zero, which marks a topological phase boundary.
pub fn flatten<T: Real>(h: &CMatrix<T>, gap_tol: T) -> Result<FlattenResult<T>, TenfoldError> {
    let eig = eig_hermitian(h, default_tol::<T>())?;
    let gap = eig.eigenvalues.iter().map(|x| x.abs()).fold(T::infinity(), T::min);
    if gap <= gap_tol {
        return Err(TenfoldError::GaplessHamiltonian { gap: gap.as_f64(), tol: gap_tol.as_f64() });
    }
    let k_negative = eig.eigenvalues.iter().filter(|&&x| x < T::zero()).count();
    let n = h.rows();
    let v = &eig.eigenvectors;
    let mut flattened = CMatrix::zeros(n, n);
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        let sign = if lambda < T::zero() { -T::one() } else { T::one() };
        let col = v.column(k);
        for i in 0..n {
            for j in 0..n {
                let contrib = col[i] * col[j].conj();
                flattened[(i, j)] = flattened[(i, j)] + contrib.scale(sign);
            }
        }
    }
    Ok(FlattenResult { k_negative, flattened, gap })
}

/// Default scale-free gap tolerance, `1e-8 * ||h||`.
pub fn default_gap_tol<T: Real>(h: &CMatrix<T>) -> T {
    T::of(1e-8) * h.frobenius_norm()
}

/// The pi_0 index of a gapped Hamiltonian: the number of negative
/// eigenvalues, counting the disjoint-union component of its flattened
/// form. Defined for the classes whose finite Hamiltonian spaces are the
/// Grassmannian unions (A and AI).
pub fn signature_invariant<T: Real>(
    h: &CMatrix<T>,
    class: &SymmetryClass,
) -> Result<usize, TenfoldError> {
    match class.name {
        ClassName::A | ClassName::AI => {
            let flat = flatten(h, default_gap_tol(h))?;
            Ok(flat.k_negative)
        }
        other => Err(TenfoldError::UnsupportedClass(other.as_str().into())),
    }
}

/// Clifford algebra bookkeeping for a symbol with `p` positive and `q`
/// negative generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliffordSignature {
    pub p: u32,
    pub q: u32,
    /// Matrix size of an irreducible representation.
    pub w: u64,
    /// Class index `p - q mod 8`.
    pub s: u32,
    /// Spatial dimension solving the index relations; the half-sum
    /// `(p + q) / 2` rounded down when `p + q` is odd.
    pub d: u32,
}

pub fn clifford_signature(p: u32, q: u32) -> CliffordSignature {
    let sum = p + q;
    let w = if sum % 2 == 0 { 1u64 << (sum / 2) } else { 1u64 << ((sum + 1) / 2) };
    let s = (p as i64 - q as i64).rem_euclid(8) as u32;
    let d = sum / 2;
    CliffordSignature { p, q, w, s, d }
}

/// Stable homotopy group `pi_i` of a symmetric space, for `i` in {0, 1}.
pub fn stable_pi(space: SpaceLabel, i: usize) -> HomotopyGroup {
    match (space, i) {
        (SpaceLabel::C(j), 0) => STABLE_PI0_C[j as usize],
        (SpaceLabel::C(j), 1) => STABLE_PI1_C[j as usize],
        (SpaceLabel::R(j), 0) => STABLE_PI0_R[j as usize],
        (SpaceLabel::R(j), 1) => STABLE_PI1_R[j as usize],
        _ => panic!("only pi_0 and pi_1 are tabulated"),
    }
}

/// Topological invariant group of a class in spatial dimension `d`
/// (any integer, reduced modulo the Bott period): the momentum-space
/// orientation reversal under antiunitary symmetries shifts the relevant
/// group to `pi_0` of the space shifted by `-d`.
pub fn stable_homotopy(class: &SymmetryClass, d: i64) -> HomotopyGroup {
    stable_pi(SymmetryClass::of(class.name).hamiltonian_space().shifted(-d), 0)
}

/// Finite symmetric spaces with tabulated low homotopy groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiniteSpace {
    C0,
    R0,
    R7,
}

impl FiniteSpace {
    pub fn as_str(self) -> &'static str {
        match self {
            FiniteSpace::C0 => "C0",
            FiniteSpace::R0 => "R0",
            FiniteSpace::R7 => "R7",
        }
    }
}

/// Human-readable description of a finite-space variant row.
pub fn finite_variant_name(space: FiniteSpace, variant: usize) -> Option<&'static str> {
    match (space, variant) {
        (FiniteSpace::C0, 0) => Some("disjoint union of U(n)/(U(n-k) x U(k))"),
        (FiniteSpace::C0, 1) => Some("Z x U(n)/(U(n/2) x U(n/2))"),
        (FiniteSpace::C0, 2) => Some("Z x SU(n)/(SU(n/2) x SU(n/2))"),
        (FiniteSpace::R0, 0) => Some("disjoint union of O(n)/(O(n-k) x O(k))"),
        (FiniteSpace::R0, 1) => Some("Z x O(n)/(O(n/2) x O(n/2))"),
        (FiniteSpace::R0, 2) => Some("Z x SO(n)/(SO(n/2) x SO(n/2))"),
        (FiniteSpace::R7, 0) => Some("U(n)/O(n)"),
        (FiniteSpace::R7, 1) => Some("SU(n)/SO(n)"),
        (FiniteSpace::R7, 2) => Some("U(n)/SO(n)"),
        (FiniteSpace::R7, 3) => Some("U(n)/O(n), cyclic fundamental group version"),
        _ => None,
    }
}

/// Number of tabulated variants for a finite space.
pub fn finite_variant_count(space: FiniteSpace) -> usize {
    match space {
        FiniteSpace::C0 | FiniteSpace::R0 => 3,
        FiniteSpace::R7 => 4,
    }
}

/// Low homotopy groups `(pi_0, pi_1)` of a finite symmetric space variant.
///
/// Validity: the `pi_1` entries require `n >= 3` for the `R7` rows and
/// `n >= 4` for the `R0` rows; the half-rank quotient variants need even
/// `n`. Requests outside these ranges fail with `OutOfTableRange`.
pub fn finite_homotopy(
    space: FiniteSpace,
    variant: usize,
    n: u32,
) -> Result<(HomotopyGroup, HomotopyGroup), TenfoldError> {
    use HomotopyGroup::*;
    if n == 0 {
        return Err(TenfoldError::OutOfTableRange("n must be positive".into()));
    }
    if variant >= finite_variant_count(space) {
        return Err(TenfoldError::OutOfTableRange(format!(
            "{} has {} variants, requested index {}",
            space.as_str(),
            finite_variant_count(space),
            variant
        )));
    }
    let needs_even = matches!(space, FiniteSpace::C0 | FiniteSpace::R0) && variant > 0;
    if needs_even && n % 2 != 0 {
        return Err(TenfoldError::OutOfTableRange(format!(
            "variant {} of {} needs even n, got {n}",
            variant,
            space.as_str()
        )));
    }
    match space {
        FiniteSpace::C0 => Ok(match variant {
            0 => (ZMod(n + 1), Zero),
            _ => (Z, Zero),
        }),
        FiniteSpace::R0 => {
            if n < 4 {
                return Err(TenfoldError::OutOfTableRange(format!(
                    "R0 rows tabulated for n >= 4, got {n}"
                )));
            }
            Ok(match variant {
                0 => (ZMod(n + 1), Z2),
                1 => (Z, Z2),
                _ => (Z, Zero),
            })
        }
        FiniteSpace::R7 => {
            if n < 3 {
                return Err(TenfoldError::OutOfTableRange(format!(
                    "R7 rows tabulated for n >= 3, got {n}"
                )));
            }
            Ok(match variant {
                0 => (Zero, Z),
                1 => (Zero, Zero),
                2 => (Zero, Z),
                _ => (Zero, ZMod(n)),
            })
        }
    }
}
