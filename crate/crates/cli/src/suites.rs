//! Seeded verification suites behind `latcoh verify`. Every trial derives
//! its own generator state from the master seed, trials fan out over the
//! installed worker pool, and results are gathered in trial order, so a
//! report depends only on the suite, its options and the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use latcoh_core::{
    analytic_invariants, brieskorn_spectrum_oracle, build_root, check_c_stability, check_cdp,
    compute_summary, cube_weight_alternating_sum, derive_seed, euler_characteristic,
    generate_pair, root_module, spectrum_unit_interval, verify_theorem_3_7, weight_from_pair,
    Error as CoreError, HilbertPair, LatticePoint, PairGenConfig, Rectangle, Region,
    WeightModel, WeightedHomogeneousGerm,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    /// Alternating cube-weight sum against the tower Euler characteristic,
    /// plus root/module coherence, on random tables.
    Euler,
    /// eu-coincidence on generated duality-passing pairs: rectangle, every
    /// increasing path, and the series identity.
    Theorem37,
    /// Path Euler characteristic bounds on pairs with and without the
    /// duality property.
    Cdp,
    /// Tower invariance under growing the rectangle along one direction.
    Stability,
    /// Brieskorn spectra: lattice enumeration against the product formula.
    GermOracle,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Euler => "euler",
            SuiteKind::Theorem37 => "theorem37",
            SuiteKind::Cdp => "cdp",
            SuiteKind::Stability => "stability",
            SuiteKind::GermOracle => "germ-oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: usize,
    pub rank: usize,
    pub cmax: i64,
    pub budget: usize,
    pub amax: i64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            trials: 100,
            rank: 2,
            cmax: 4,
            budget: 12,
            amax: 12,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub check: String,
    pub witness: Value,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<TrialFailure>,
}

fn model_witness(model: &WeightModel) -> Value {
    json!({
        "c": model.rect().upper().coords(),
        "values": model.values(),
    })
}

fn pair_witness(pair: &HilbertPair) -> Value {
    json!({
        "c": pair.rect().upper().coords(),
        "h": pair.h_table(),
        "h_circ": pair.hcirc_table(),
    })
}

fn error_failure(trial: usize, err: &CoreError, witness: Value) -> TrialFailure {
    TrialFailure {
        trial,
        check: "error".to_string(),
        witness: json!({ "message": err.to_string(), "input": witness }),
    }
}

// ---------------------------------------------------------------------------
// euler
// ---------------------------------------------------------------------------

fn euler_trial(opts: &SuiteOptions, trial: usize) -> Vec<TrialFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(opts.seed, trial as u64));
    let corner =
        LatticePoint::new((0..opts.rank).map(|_| rng.random_range(1..=opts.cmax)).collect());
    let model = WeightModel::random(&mut rng, corner, -4, 4).expect("valid corner");
    let mut failures = Vec::new();

    let summary = match compute_summary(&model, &Region::Full) {
        Ok(s) => s,
        Err(e) => return vec![error_failure(trial, &e, model_witness(&model))],
    };
    let eu = euler_characteristic(&summary);
    let alternating = cube_weight_alternating_sum(&model);
    if eu != alternating {
        failures.push(TrialFailure {
            trial,
            check: "euler_identity".to_string(),
            witness: json!({
                "model": model_witness(&model),
                "eu": eu,
                "alternating_sum": alternating,
            }),
        });
    }

    let root_route = build_root(&model, &Region::Full)
        .and_then(|root| root_module(&root));
    match root_route {
        Ok(tower) => {
            if tower != summary.degree0() {
                failures.push(TrialFailure {
                    trial,
                    check: "root_coherence".to_string(),
                    witness: json!({
                        "model": model_witness(&model),
                        "root_ranks": tower.ranks,
                        "summary_ranks": summary.degree0().ranks,
                    }),
                });
            }
        }
        Err(e) => failures.push(error_failure(trial, &e, model_witness(&model))),
    }
    failures
}

// ---------------------------------------------------------------------------
// theorem37
// ---------------------------------------------------------------------------

fn random_pair(seed: u64, opts: &SuiteOptions) -> HilbertPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = rng.random_range(1..=opts.rank.max(1));
    let cfg = PairGenConfig {
        vars: rng.random_range(1..=3),
        rank,
        corner: (0..rank).map(|_| rng.random_range(1..=opts.cmax)).collect(),
        max_entry: rng.random_range(1..=3),
    };
    generate_pair(derive_seed(seed, 1), &cfg).expect("valid generation config")
}

fn theorem37_trial(opts: &SuiteOptions, trial: usize) -> Vec<TrialFailure> {
    let master = derive_seed(opts.seed, trial as u64);
    for attempt in 0..2000u64 {
        let pair = random_pair(derive_seed(master, attempt), opts);
        if !check_cdp(&pair).is_empty() {
            continue;
        }
        return match verify_theorem_3_7(&pair, opts.budget) {
            Ok(report) if report.pass() => Vec::new(),
            Ok(report) => vec![TrialFailure {
                trial,
                check: "theorem37".to_string(),
                witness: json!({
                    "pair": pair_witness(&pair),
                    "expected": report.expected,
                    "rectangle_eu": report.rectangle_eu,
                    "hypotheses_met": report.hypotheses_met,
                    "paths_checked": report.paths_checked,
                    "path_failure": report.first_path_failure.as_ref().map(|(p, eu)| {
                        json!({
                            "points": p.points().iter().map(|x| x.coords().to_vec()).collect::<Vec<_>>(),
                            "eu": eu,
                        })
                    }),
                    "series_witness": report.series_witness.as_ref().map(|(p, a, b)| {
                        json!({ "point": p.coords(), "cube_route": a, "h_route": b })
                    }),
                }),
            }],
            Err(e) => vec![error_failure(trial, &e, pair_witness(&pair))],
        };
    }
    vec![TrialFailure {
        trial,
        check: "cdp_generation".to_string(),
        witness: json!({ "seed": master, "note": "no duality-passing pair found" }),
    }]
}

// ---------------------------------------------------------------------------
// cdp (path Euler characteristic bounds)
// ---------------------------------------------------------------------------

fn cdp_trial(opts: &SuiteOptions, trial: usize) -> Vec<TrialFailure> {
    let pair = if trial == 0 {
        // the staircase h(l) = l: duality fails at every step, the bounds
        // must still hold, strictly at the top
        let c = opts.cmax.max(1);
        let rect = Rectangle::new(LatticePoint::new(vec![c])).expect("valid corner");
        HilbertPair::with_sym(rect, (0..=c).collect()).expect("staircase is monotone")
    } else {
        random_pair(derive_seed(opts.seed, trial as u64), opts)
    };

    let rhs = pair.expected_eu();
    let model = weight_from_pair(&pair);
    let steps: i64 = pair.rect().upper().coords().iter().sum();
    if steps as usize > opts.budget {
        return vec![TrialFailure {
            trial,
            check: "budget".to_string(),
            witness: json!({ "needed": steps, "budget": opts.budget }),
        }];
    }

    let mut failures = Vec::new();
    let mut min_eu = i64::MAX;
    latcoh_core::for_each_increasing_path(pair.rect(), |points| {
        let eu: i64 = -model.weight(&points[0])
            + points
                .windows(2)
                .map(|w| (model.weight(&w[0]) - model.weight(&w[1])).max(0))
                .sum::<i64>();
        min_eu = min_eu.min(eu);
        let path_json = || {
            json!({
                "pair": pair_witness(&pair),
                "path": points.iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
                "eu": eu,
                "bound": rhs,
            })
        };
        if failures.is_empty() && !(0..=rhs).contains(&eu) {
            failures.push(TrialFailure {
                trial,
                check: "lemma_bounds".to_string(),
                witness: path_json(),
            });
        }
        let duality_along = points.windows(2).all(|w| {
            let dh = pair.h(&w[1]) - pair.h(&w[0]);
            let dhc = pair.hcirc(&w[1]) - pair.hcirc(&w[0]);
            dh == 0 || dhc == 0
        });
        if failures.is_empty() && (eu == rhs) != duality_along {
            failures.push(TrialFailure {
                trial,
                check: "equality_characterization".to_string(),
                witness: path_json(),
            });
        }
    });

    if trial == 0 && failures.is_empty() {
        // staircase: every path has eu 0, strictly below h°(0) - h°(c) = c
        if min_eu != 0 || min_eu >= rhs {
            failures.push(TrialFailure {
                trial,
                check: "staircase_strict".to_string(),
                witness: json!({ "min_eu": min_eu, "bound": rhs }),
            });
        }
    }
    failures
}

// ---------------------------------------------------------------------------
// stability
// ---------------------------------------------------------------------------

fn stability_trial(opts: &SuiteOptions, trial: usize) -> Vec<TrialFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(opts.seed, trial as u64));
    let rank = rng.random_range(1..=opts.rank.max(1));
    let corner =
        LatticePoint::new((0..rank).map(|_| rng.random_range(1..=opts.cmax)).collect());
    let model = WeightModel::random(&mut rng, corner, -4, 4).expect("valid corner");
    let dir = rng.random_range(0..rank);

    // grow one step along `dir`; new-face weights dominate their inner
    // neighbors, which is exactly the retraction hypothesis
    let grown = Rectangle::new(model.rect().upper().stepped(dir, 1)).expect("valid corner");
    let face_coord = grown.upper().coord(dir);
    let values: Vec<i64> = grown
        .points()
        .map(|p| {
            if p.coord(dir) < face_coord {
                model.weight(&p)
            } else {
                model.weight(&p.stepped(dir, -1)) + rng.random_range(0..=2)
            }
        })
        .collect();
    let extended = WeightModel::new(grown, values).expect("table matches rectangle");

    match check_c_stability(&model, &extended, dir) {
        Ok(report) if report.pass => Vec::new(),
        Ok(report) => vec![TrialFailure {
            trial,
            check: "c_stability".to_string(),
            witness: json!({
                "model": model_witness(&model),
                "extended": model_witness(&extended),
                "dir": dir + 1,
                "discrepancy": report.discrepancy.map(|d| {
                    json!({
                        "level": d.level,
                        "degree": d.degree,
                        "field": d.field,
                        "base": d.base,
                        "extended": d.extended,
                    })
                }),
            }),
        }],
        Err(e) => vec![error_failure(trial, &e, model_witness(&model))],
    }
}

// ---------------------------------------------------------------------------
// germ-oracle
// ---------------------------------------------------------------------------

struct TripleOutcome {
    skipped: bool,
    failures: Vec<TrialFailure>,
}

fn germ_triple(trial: usize, exponents: &[i64; 3]) -> TripleOutcome {
    let witness = json!({ "exponents": exponents });
    let germ = match WeightedHomogeneousGerm::from_brieskorn(exponents) {
        Ok(g) => g,
        Err(e) => {
            return TripleOutcome {
                skipped: false,
                failures: vec![error_failure(trial, &e, witness)],
            }
        }
    };
    let oracle = brieskorn_spectrum_oracle(exponents).expect("exponents validated");
    let boundary = latcoh_core::germ::brieskorn_has_boundary_point(exponents);
    match spectrum_unit_interval(&germ) {
        Ok(slice) => {
            let mut failures = Vec::new();
            if boundary {
                failures.push(TrialFailure {
                    trial,
                    check: "refusal_missed".to_string(),
                    witness: witness.clone(),
                });
            }
            if slice != oracle {
                failures.push(TrialFailure {
                    trial,
                    check: "spectrum_mismatch".to_string(),
                    witness: json!({
                        "exponents": exponents,
                        "enumeration": slice.fraction_strings(),
                        "product_formula": oracle.fraction_strings(),
                    }),
                });
            }
            if germ.reduced_length() >= 0 {
                // the reduced pipeline asserts eu = p_g internally
                if let Err(e) = analytic_invariants(&germ) {
                    failures.push(error_failure(trial, &e, witness.clone()));
                }
            }
            TripleOutcome {
                skipped: false,
                failures,
            }
        }
        Err(CoreError::SpectralNumberOne { .. }) => {
            if boundary {
                TripleOutcome {
                    skipped: true,
                    failures: Vec::new(),
                }
            } else {
                TripleOutcome {
                    skipped: false,
                    failures: vec![TrialFailure {
                        trial,
                        check: "refusal_wrong".to_string(),
                        witness,
                    }],
                }
            }
        }
        Err(e) => TripleOutcome {
            skipped: false,
            failures: vec![error_failure(trial, &e, witness)],
        },
    }
}

fn run_germ_oracle(opts: &SuiteOptions) -> SuiteReport {
    let mut triples = Vec::new();
    for a1 in 2..=opts.amax {
        for a2 in a1..=opts.amax {
            for a3 in a2..=opts.amax {
                triples.push([a1, a2, a3]);
            }
        }
    }
    let outcomes: Vec<TripleOutcome> = triples
        .par_iter()
        .enumerate()
        .map(|(i, t)| germ_triple(i, t))
        .collect();
    let skipped = outcomes.iter().filter(|o| o.skipped).count();
    let failed = outcomes
        .iter()
        .filter(|o| !o.failures.is_empty())
        .count();
    SuiteReport {
        suite: SuiteKind::GermOracle.name(),
        seed: opts.seed,
        trials: triples.len(),
        passed: triples.len() - skipped - failed,
        failed,
        skipped,
        failures: outcomes.into_iter().flat_map(|o| o.failures).collect(),
    }
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

fn run_trials(
    kind: SuiteKind,
    opts: &SuiteOptions,
    trial: impl Fn(&SuiteOptions, usize) -> Vec<TrialFailure> + Sync,
) -> SuiteReport {
    let per_trial: Vec<Vec<TrialFailure>> = (0..opts.trials)
        .into_par_iter()
        .map(|i| trial(opts, i))
        .collect();
    let failed = per_trial.iter().filter(|f| !f.is_empty()).count();
    SuiteReport {
        suite: kind.name(),
        seed: opts.seed,
        trials: opts.trials,
        passed: opts.trials - failed,
        failed,
        skipped: 0,
        failures: per_trial.into_iter().flatten().collect(),
    }
}

pub fn run_suite(kind: SuiteKind, opts: &SuiteOptions) -> SuiteReport {
    match kind {
        SuiteKind::Euler => run_trials(kind, opts, euler_trial),
        SuiteKind::Theorem37 => run_trials(kind, opts, theorem37_trial),
        SuiteKind::Cdp => run_trials(kind, opts, cdp_trial),
        SuiteKind::Stability => run_trials(kind, opts, stability_trial),
        SuiteKind::GermOracle => run_germ_oracle(opts),
    }
}
