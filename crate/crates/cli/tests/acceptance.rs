//! Acceptance suite: every release criterion as one test, each printing a
//! single pass/fail line (visible with `--nocapture`). All comparisons are
//! exact integer or exact rational equalities.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use latcoh_cli::{run_suite, SuiteKind, SuiteOptions};
use latcoh_core::{
    analytic_invariants, compute_summary, derive_seed, isomorphic, path_eu_weights, path_module,
    root_module, LatticePath, LatticePoint, Region, WeightModel, WeightedHomogeneousGerm,
};

fn criterion(number: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {number:02} ({name}): {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} ({name}) failed: {detail}");
}

fn suite_opts(seed: u64, trials: usize, rank: usize, cmax: i64) -> SuiteOptions {
    SuiteOptions {
        seed,
        trials,
        rank,
        cmax,
        budget: 12,
        amax: 12,
    }
}

/// Criterion 1 — alternating cube-weight sum equals the tower Euler
/// characteristic on 200 seeded tables (rank 2 up to (4,4), rank 3 up to
/// (3,3,3)), in under two minutes.
#[test]
fn criterion_01_euler_identity() {
    let start = Instant::now();
    let rank2 = run_suite(SuiteKind::Euler, &suite_opts(11, 100, 2, 4));
    let rank3 = run_suite(SuiteKind::Euler, &suite_opts(12, 100, 3, 3));
    let elapsed = start.elapsed();
    let pass = rank2.failed == 0 && rank3.failed == 0 && elapsed < Duration::from_secs(120);
    criterion(
        1,
        "euler identity",
        pass,
        &format!(
            "{}/{} rank-2 and {}/{} rank-3 tables, {:.2}s",
            rank2.passed, rank2.trials, rank3.passed, rank3.trials,
            elapsed.as_secs_f64()
        ),
    );
}

/// Criterion 2 — on 500 seeded random paths the closed-form Euler
/// characteristic equals `-m + rank H^0_red` from the computed module, and
/// higher path cohomology vanishes.
#[test]
fn criterion_02_path_formulas() {
    let mut checked = 0;
    for trial in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(21, trial));
        let rank = 1 + (trial as usize % 3);
        let corner = LatticePoint::new((0..rank).map(|_| rng.random_range(1..=3)).collect());
        let model = WeightModel::random(&mut rng, corner, -4, 4).unwrap();
        let max_len = rng.random_range(1..=10);
        let path = random_embedded_path(&mut rng, &model, max_len);

        let tower = path_module(&path, &model).unwrap();
        let closed_form = path_eu_weights(&path, &model).unwrap();
        assert_eq!(
            tower.eu(),
            closed_form,
            "path {:?} on {model:?}",
            path.points()
        );
        let summary = compute_summary(&model, &Region::Path(path.clone())).unwrap();
        for level in &summary.levels {
            assert!(
                level.betti.iter().skip(1).all(|&b| b == 0),
                "higher path cohomology at {:?}",
                path.points()
            );
        }
        checked += 1;
    }
    criterion(2, "path formulas", checked == 500, &format!("{checked}/500 paths"));
}

/// Criterion 3 — on 100 generated duality-passing pairs (rank <= 3,
/// corners <= (4,4,4)) the rectangle Euler characteristic, every increasing
/// path, and the series identity all match `h°(0) - h°(c)`.
#[test]
fn criterion_03_theorem_eu_coincidence() {
    let report = run_suite(SuiteKind::Theorem37, &suite_opts(37, 100, 3, 4));
    criterion(
        3,
        "eu coincidence",
        report.failed == 0,
        &format!("{}/{} pairs (exhaustive paths + series)", report.passed, report.trials),
    );
}

/// Criterion 4 — the path Euler characteristic bounds hold on 100 pairs
/// including duality-failing ones; the staircase attains strict inequality.
#[test]
fn criterion_04_bounds_without_duality() {
    let report = run_suite(SuiteKind::Cdp, &suite_opts(41, 100, 3, 4));
    criterion(
        4,
        "path eu bounds",
        report.failed == 0,
        &format!("{}/{} pairs, staircase strict at trial 0", report.passed, report.trials),
    );
}

/// Criterion 5 — the four Brieskorn fixtures, each in under a second.
#[test]
fn criterion_05_brieskorn_fixtures() {
    fn fixture(
        exponents: &[i64],
        spectrum: &[&str],
        p_g: usize,
        fibers: &[usize],
        reduced_rank: usize,
        eu: i64,
    ) -> (latcoh_core::AnalyticInvariants, bool, String) {
        let start = Instant::now();
        let germ = WeightedHomogeneousGerm::from_brieskorn(exponents).unwrap();
        let inv = analytic_invariants(&germ).unwrap();
        let elapsed = start.elapsed();
        let tower = root_module(&inv.root).unwrap();
        let ok = inv.spectrum.fraction_strings() == spectrum
            && inv.p_g == p_g
            && (0..fibers.len() as i64)
                .all(|n| inv.root.fiber_size(n) == fibers[n as usize])
            && inv.root.saturation() == fibers.len() as i64 - 1
            && tower.min_level == 0
            && tower.total_reduced_rank() == reduced_rank
            && inv.eu == eu
            && elapsed < Duration::from_secs(1);
        let line = format!(
            "{exponents:?}: spectrum {:?} p_g={} eu={} in {:.3}s",
            inv.spectrum.fraction_strings(),
            inv.p_g,
            inv.eu,
            elapsed.as_secs_f64()
        );
        (inv, ok, line)
    }

    let mut pass = true;
    let mut details = Vec::new();

    // (2,3,7): one spectral number, two leaves merging at one
    let (inv237, ok, line) = fixture(&[2, 3, 7], &["41/42"], 1, &[2, 1], 1, 1);
    pass &= ok;
    details.push(line);
    // (2,3,11): different spectrum, same graded root
    let (inv2311, ok, line) = fixture(&[2, 3, 11], &["61/66"], 1, &[2, 1], 1, 1);
    pass &= ok;
    details.push(line);
    if !isomorphic(&inv237.root, &inv2311.root) {
        pass = false;
        details.push("(2,3,7) and (2,3,11) roots differ".to_string());
    }
    // (2,3,5): empty spectrum, pure tower
    let (inv235, ok, line) = fixture(&[2, 3, 5], &[], 0, &[1], 0, 0);
    pass &= ok && inv235.root.vertices().len() == 1;
    details.push(line);
    // (2,3,13): two spectral numbers, three leaves
    let (_, ok, line) = fixture(&[2, 3, 13], &["71/78", "77/78"], 2, &[3, 1], 2, 2);
    pass &= ok;
    details.push(line);

    criterion(5, "brieskorn fixtures", pass, &details.join("; "));
}

/// Criterion 6 — lattice enumeration equals the product-formula oracle on
/// every Brieskorn triple with exponents up to 12 (boundary cases must be
/// refused), in under 30 seconds.
#[test]
fn criterion_06_spectrum_oracle() {
    let start = Instant::now();
    let report = run_suite(
        SuiteKind::GermOracle,
        &SuiteOptions {
            amax: 12,
            ..suite_opts(0, 0, 2, 4)
        },
    );
    let elapsed = start.elapsed();
    let pass = report.failed == 0 && elapsed < Duration::from_secs(30);
    criterion(
        6,
        "spectrum oracle equivalence",
        pass,
        &format!(
            "{} triples ({} refused on the boundary), {:.2}s",
            report.trials, report.skipped, elapsed.as_secs_f64()
        ),
    );
}

/// Criterion 7 — per-level degree-0 ranks from the graded root equal the
/// degree-0 ranks of the cohomology summary, on every model of criteria 1
/// and 5.
#[test]
fn criterion_07_root_module_coherence() {
    // same seeds as criterion 1; the euler suite checks coherence per trial
    let rank2 = run_suite(SuiteKind::Euler, &suite_opts(11, 100, 2, 4));
    let rank3 = run_suite(SuiteKind::Euler, &suite_opts(12, 100, 3, 3));
    let mut pass = rank2.failed == 0 && rank3.failed == 0;

    let mut germs_checked = 0;
    for exponents in [[2, 3, 7], [2, 3, 11], [2, 3, 5], [2, 3, 13]] {
        let germ = WeightedHomogeneousGerm::from_brieskorn(&exponents).unwrap();
        let inv = analytic_invariants(&germ).unwrap();
        let tower = root_module(&inv.root).unwrap();
        if tower != inv.summary.degree0() {
            pass = false;
        }
        germs_checked += 1;
    }
    criterion(
        7,
        "root/module coherence",
        pass,
        &format!("200 random models + {germs_checked} germ fixtures"),
    );
}

/// Criterion 8 — growing the rectangle along a direction satisfying the
/// retraction hypothesis never changes per-level Betti numbers or torsion.
#[test]
fn criterion_08_c_stability() {
    let report = run_suite(SuiteKind::Stability, &suite_opts(53, 50, 3, 3));
    criterion(
        8,
        "c-stability",
        report.failed == 0,
        &format!("{}/{} extensions", report.passed, report.trials),
    );
}

/// Criterion 9 — suite reports are byte-identical across parallelism
/// settings for a fixed seed.
#[test]
fn criterion_09_determinism() {
    let run = |suite: &str, parallel: &str| -> Vec<u8> {
        let out = Command::new(env!("CARGO_BIN_EXE_latcoh"))
            .args([
                "verify", suite, "--seed", "7", "--trials", "20", "--rank", "2", "--cmax",
                "4", "--amax", "8", "--parallel", parallel,
            ])
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0), "suite {suite} failed");
        out.stdout
    };
    let mut pass = true;
    for suite in ["euler", "theorem37", "cdp", "stability", "germ-oracle"] {
        let one = run(suite, "1");
        let four = run(suite, "4");
        if one != four {
            pass = false;
        }
    }
    criterion(
        9,
        "determinism across parallelism",
        pass,
        "5 suites, --parallel 1 vs 4, byte-compared",
    );
}

/// Random embedded path from the origin: unit steps in either direction,
/// no revisited points.
fn random_embedded_path(
    rng: &mut ChaCha8Rng,
    model: &WeightModel,
    max_len: usize,
) -> LatticePath {
    let rank = model.rect().rank();
    let mut points = vec![LatticePoint::origin(rank)];
    while points.len() < max_len {
        let last = points.last().unwrap().clone();
        let mut moves = Vec::new();
        for v in 0..rank {
            for delta in [1i64, -1] {
                let next = last.stepped(v, delta);
                if model.rect().contains(&next) && !points.contains(&next) {
                    moves.push(next);
                }
            }
        }
        if moves.is_empty() {
            break;
        }
        let pick = rng.random_range(0..moves.len());
        points.push(moves.swap_remove(pick));
    }
    LatticePath::new(points).unwrap()
}
