//! Acceptance suite: one test per release criterion, each ending with an
//! explicit PASS line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

use std::collections::BTreeSet;
use std::time::Instant;

use cartan_qubit::graph::{phase_scan, ScanCell};
use cartan_qubit::random::{haar_su2, haar_unitary, random_state};
use cartan_qubit::tenfold::{
    finite_homotopy, stable_homotopy, stable_pi, FiniteSpace, SpaceLabel,
};
use cartan_qubit::{
    canonical_hamiltonian, classify, concurrence, concurrence_trajectory, detect_symmetry,
    flatten, kak_decompose, kak_rebuild, make_kane_mele_theta, make_particle_hole_4,
    make_time_reversal_2q, spectrum, CMatrix64, ClassName, GraphParams64, HomotopyGroup,
    PauliDecomposition64, PureState64, SymmetryClass, SymmetryKind,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_interaction(rng: &mut impl Rng) -> PauliDecomposition64 {
    let mut t = [[0.0; 3]; 3];
    for row in &mut t {
        for entry in row.iter_mut() {
            *entry = rng.gen_range(-1.0..1.0);
        }
    }
    PauliDecomposition64::from_interaction(t)
}

fn random_local(rng: &mut impl Rng) -> PauliDecomposition64 {
    let mut v = || rng.gen_range(-1.0..1.0);
    PauliDecomposition64::from_local([v(), v(), v()], [v(), v(), v()])
}

#[test]
fn criterion_01_kak_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut durations = Vec::with_capacity(10_000);
    let mut worst = 0.0f64;
    for i in 0..10_000 {
        let u = haar_unitary::<f64>(4, &mut rng);
        let start = Instant::now();
        let f = kak_decompose(&u, 1e-9).unwrap_or_else(|e| panic!("sample {i} failed: {e}"));
        durations.push(start.elapsed());
        let residual = (&kak_rebuild(&f) - &u).frobenius_norm();
        assert!(residual < 1e-8, "sample {i}: residual {residual:e}");
        worst = worst.max(residual);
    }
    durations.sort();
    let median = durations[durations.len() / 2];
    assert!(
        median.as_secs_f64() < 1e-3,
        "median decomposition time {median:?} exceeds 1 ms"
    );
    println!(
        "acceptance 01 kak round trip: PASS (10000 samples, worst residual {worst:.2e}, median {median:?})"
    );
}

#[test]
fn criterion_02_local_gates_have_zero_interaction() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut worst = 0.0f64;
    for i in 0..1_000 {
        let u = haar_su2::<f64>(&mut rng).tensor(&haar_su2::<f64>(&mut rng));
        let f = kak_decompose(&u, 1e-9).unwrap_or_else(|e| panic!("sample {i} failed: {e}"));
        let k_max = f.max_interaction();
        assert!(k_max < 1e-8, "sample {i}: |k| = {k_max:e}");
        worst = worst.max(k_max);
    }
    println!("acceptance 02 locality: PASS (1000 samples, worst |k| {worst:.2e})");
}

#[test]
fn criterion_03_concurrence_conserved_under_local_evolution() {
    let theta = make_time_reversal_2q::<f64>();
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let times: Vec<f64> = (0..=100).map(|i| i as f64 * 0.2).collect();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let h = random_local(&mut rng);
        let psi = random_state::<f64>(&mut rng);
        let c = concurrence_trajectory(&psi, &h, &theta, &times).unwrap();
        let drift = c
            .iter()
            .map(|ci| (ci - c[0]).abs())
            .fold(0.0f64, f64::max);
        assert!(drift < 1e-9, "concurrence drifted by {drift:e}");
        worst = worst.max(drift);
    }
    println!("acceptance 03 concurrence conservation: PASS (200 trajectories, worst drift {worst:.2e})");
}

#[test]
fn criterion_04_entangling_dynamics_oracle() {
    // evolution of |00> under XX gives C(t) = |sin 2t|
    let mut t = [[0.0; 3]; 3];
    t[0][0] = 1.0;
    let h = PauliDecomposition64::from_interaction(t);
    let theta = make_time_reversal_2q::<f64>();
    let times: Vec<f64> = (0..1000).map(|i| i as f64 * 20.0 / 999.0).collect();
    let c = concurrence_trajectory(&PureState64::basis_state(0), &h, &theta, &times).unwrap();
    let mut worst = 0.0f64;
    for (i, &ti) in times.iter().enumerate() {
        let expected = (2.0 * ti).sin().abs();
        let err = (c[i] - expected).abs();
        assert!(err < 1e-10, "t = {ti}: |C - |sin 2t|| = {err:e}");
        worst = worst.max(err);
    }
    println!("acceptance 04 entangling dynamics oracle: PASS (1000 points, worst error {worst:.2e})");
}

#[test]
fn criterion_05_vanishing_concurrence_for_symplectic_time_reversal() {
    let theta = make_kane_mele_theta::<f64>();
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let psi = random_state::<f64>(&mut rng);
        let c = concurrence(&psi, &theta).unwrap();
        assert!(c < 1e-10, "nonzero concurrence {c:e} under a square -1 operator");
        worst = worst.max(c);
    }
    println!("acceptance 05 vanishing concurrence: PASS (500 states, max {worst:.2e})");
}

#[test]
fn criterion_06_classification_ensembles() {
    let theta = make_time_reversal_2q::<f64>();
    let mut rng = ChaCha8Rng::seed_from_u64(106);

    for _ in 0..100 {
        let h = random_interaction(&mut rng).to_matrix();
        let class = classify(&h, Some(&theta), None, 1e-10).unwrap();
        assert_eq!(class.name, ClassName::AI);
    }

    for _ in 0..100 {
        let mut d = random_interaction(&mut rng);
        // any nonzero single-qubit term breaks time reversal
        if rng.gen_bool(0.5) {
            d.a[rng.gen_range(0..3)] = rng.gen_range(0.2..1.0);
        } else {
            d.b[rng.gen_range(0..3)] = rng.gen_range(0.2..1.0);
        }
        let h = d.to_matrix();
        assert_eq!(detect_symmetry(&h, &theta, 1e-10), SymmetryKind::None);
        assert_eq!(classify(&h, None, None, 1e-10).unwrap().name, ClassName::A);
    }

    let pi = make_particle_hole_4::<f64>();
    for _ in 0..100 {
        // i * (real antisymmetric): particle-hole symmetric, nothing else
        let mut h = CMatrix64::zeros(4, 4);
        for i in 0..4 {
            for j in i + 1..4 {
                let x = rng.gen_range(-1.0..1.0);
                h[(i, j)] = Complex64::new(0.0, x);
                h[(j, i)] = Complex64::new(0.0, -x);
            }
        }
        let class = classify(&h, None, Some(&pi), 1e-10).unwrap();
        assert_eq!(class.name, ClassName::D);
    }
    println!("acceptance 06 classification ensembles: PASS (AI / A / D, 100 samples each)");
}

#[test]
fn criterion_07_z5_coverage() {
    // the invariant takes exactly the five values -2..2 over the couplings
    let mut nus = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..400 {
        let p = GraphParams64 {
            alpha: rng.gen_range(-2.0..2.0),
            beta: rng.gen_range(-2.0..2.0),
            gamma: rng.gen_range(-5.0..5.0),
        };
        if let Ok(report) = cartan_qubit::invariant_nu(&p) {
            nus.insert(report.nu);
        }
    }
    assert_eq!(nus.into_iter().collect::<Vec<_>>(), vec![-2, -1, 0, 1, 2]);

    // the flattened signature reaches all five Grassmannian components over
    // trace-shifted time-reversal-symmetric Hamiltonians
    let theta = make_time_reversal_2q::<f64>();
    let mut ks = BTreeSet::new();
    let base = canonical_hamiltonian(&GraphParams64 { alpha: 0.4, beta: 0.2, gamma: 0.1 });
    for shift in [-3.0, -0.4, 0.0, 0.4, 3.0f64] {
        let h = &base + &CMatrix64::identity(4).scale_re(shift);
        assert_eq!(
            classify(&h, Some(&theta), None, 1e-10).unwrap().name,
            ClassName::AI,
            "trace shifts must stay in class AI"
        );
        ks.insert(flatten(&h, 1e-10).unwrap().k_negative);
    }
    assert_eq!(ks.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
    println!("acceptance 07 Z5 coverage: PASS (nu in -2..2, signature k in 0..4)");
}

#[test]
fn criterion_08_figure_reproduction() {
    let (alpha, beta) = (1.0, 3.0);

    // the four lines are gamma -+ 2 and -gamma +- 4
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for _ in 0..100 {
        let gamma = rng.gen_range(-6.0..6.0);
        let p = GraphParams64 { alpha, beta, gamma };
        let lines = spectrum(&p);
        let expected = [gamma - 2.0, gamma + 2.0, -gamma + 4.0, -gamma - 4.0];
        for (line, exp) in lines.iter().zip(expected.iter()) {
            assert!((line.value - exp).abs() < 1e-12);
        }
    }

    // boundaries at -4, -2, 2, 4 and the invariant ladder across the five
    // open intervals
    let grid: Vec<f64> = (0..=48).map(|i| -6.0 + 0.25 * i as f64).collect();
    let rows = phase_scan(alpha, beta, &grid);
    let mut boundaries = Vec::new();
    let mut ladder = Vec::new();
    for row in &rows {
        match &row.cell {
            ScanCell::Boundary { .. } => boundaries.push(row.gamma),
            ScanCell::Gapped { report, .. } => {
                if ladder.last() != Some(&report.nu) {
                    ladder.push(report.nu);
                }
            }
        }
    }
    for (found, expected) in boundaries.iter().zip([-4.0, -2.0, 2.0, 4.0].iter()) {
        assert!((found - expected).abs() < 1e-10);
    }
    assert_eq!(boundaries.len(), 4);
    assert_eq!(ladder, vec![-2, -1, 0, 1, 2]);

    // 10^4-point scan below one second
    let fine: Vec<f64> = (0..10_000).map(|i| -6.0 + 12.0 * i as f64 / 9_999.0).collect();
    let start = Instant::now();
    let rows = phase_scan(alpha, beta, &fine);
    let elapsed = start.elapsed();
    assert_eq!(rows.len(), 10_000);
    assert!(elapsed.as_secs_f64() < 1.0, "scan took {elapsed:?}");
    println!(
        "acceptance 08 figure reproduction: PASS (boundaries at -4,-2,2,4; ladder -2..2; scan {elapsed:?})"
    );
}

#[test]
fn criterion_09_index_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..50 {
        let alpha = rng.gen_range(-2.0..2.0f64);
        let beta = rng.gen_range(-2.0..2.0f64);
        let extent = (alpha.abs() + beta.abs()).max(0.5) * 1.5;
        let grid: Vec<f64> = (0..2_000).map(|i| -extent + 2.0 * extent * i as f64 / 1_999.0).collect();
        let rows = phase_scan(alpha, beta, &grid);
        let mut prev: Option<(i32, i32, [f64; 4])> = None;
        for row in &rows {
            if let ScanCell::Gapped { report, .. } = &row.cell {
                if let Some((p1, p2, prev_levels)) = prev {
                    let flips = |idx: [usize; 2]| {
                        idx.iter()
                            .filter(|&&i| (prev_levels[i] > 0.0) != (row.levels[i] > 0.0))
                            .count() as i32
                    };
                    let d1 = report.nu1 - p1;
                    let d2 = report.nu2 - p2;
                    assert_eq!(d1.abs(), flips([0, 1]), "nu1 change without a lambda_1 zero");
                    assert_eq!(d2.abs(), flips([2, 3]), "nu2 change without a lambda_2 zero");
                }
                prev = Some((report.nu1, report.nu2, row.levels));
            }
        }
    }
    println!("acceptance 09 index consistency: PASS (50 scans, every nu step has its zero mode)");
}

#[test]
fn criterion_10_table_fidelity() {
    use HomotopyGroup::*;

    let pi0_column = [
        (ClassName::A, Z),
        (ClassName::AIII, Zero),
        (ClassName::AI, Z),
        (ClassName::BDI, Z2),
        (ClassName::D, Z2),
        (ClassName::DIII, Zero),
        (ClassName::AII, TwoZ),
        (ClassName::CII, Zero),
        (ClassName::C, Zero),
        (ClassName::CI, Zero),
    ];
    for (name, expected) in pi0_column {
        assert_eq!(stable_homotopy(&SymmetryClass::of(name), 0), expected, "{name}");
    }

    // every finite-table cell, n = 4
    let finite_cells = [
        (FiniteSpace::C0, 0, (ZMod(5), Zero)),
        (FiniteSpace::C0, 1, (Z, Zero)),
        (FiniteSpace::C0, 2, (Z, Zero)),
        (FiniteSpace::R0, 0, (ZMod(5), Z2)),
        (FiniteSpace::R0, 1, (Z, Z2)),
        (FiniteSpace::R0, 2, (Z, Zero)),
        (FiniteSpace::R7, 0, (Zero, Z)),
        (FiniteSpace::R7, 1, (Zero, Zero)),
        (FiniteSpace::R7, 2, (Zero, Z)),
        (FiniteSpace::R7, 3, (Zero, ZMod(4))),
    ];
    for (space, variant, expected) in finite_cells {
        assert_eq!(
            finite_homotopy(space, variant, 4).unwrap(),
            expected,
            "{}/{variant}",
            space.as_str()
        );
    }

    // Bott shift: pi_1 of each stored space equals pi_0 of its successor
    for j in 0..8u8 {
        assert_eq!(stable_pi(SpaceLabel::R(j), 1), stable_pi(SpaceLabel::R(j).shifted(1), 0));
    }
    for j in 0..2u8 {
        assert_eq!(stable_pi(SpaceLabel::C(j), 1), stable_pi(SpaceLabel::C(j).shifted(1), 0));
    }
    println!("acceptance 10 table fidelity: PASS (class column, finite cells, Bott shift)");
}
