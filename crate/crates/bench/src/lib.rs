//! Deterministic fixtures for the benchmark targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use latcoh_core::{
    boundary_matrices, sublevel_complex, IntMatrix, LatticePoint, Rectangle, WeightModel,
};

/// Random rank-3 table on `[0,(3,3,3)]`, the heaviest shape the randomized
/// suites exercise.
pub fn rank3_model(seed: u64) -> WeightModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corner = LatticePoint::new(vec![3, 3, 3]);
    WeightModel::random(&mut rng, corner, -4, 4).unwrap()
}

/// Random rank-2 table on `[0,(4,4)]`.
pub fn rank2_model(seed: u64) -> WeightModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corner = LatticePoint::new(vec![4, 4]);
    WeightModel::random(&mut rng, corner, -4, 4).unwrap()
}

/// The edge boundary matrix of the saturated rank-3 complex
/// (64 x 144, entries in {-1,0,1}).
pub fn boundary_fixture(seed: u64) -> IntMatrix {
    let model = rank3_model(seed);
    let cx = sublevel_complex(&model, model.max_weight());
    boundary_matrices(&cx).unwrap().boundary(1).unwrap().clone()
}

/// Large flat rectangle for the minimum-path dynamic program.
pub fn large_flat_model(seed: u64) -> WeightModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corner = LatticePoint::new(vec![24, 24]);
    let rect = Rectangle::new(corner).unwrap();
    let values = (0..rect.num_points())
        .map(|_| rng.random_range(-5..=5))
        .collect();
    WeightModel::new(rect, values).unwrap()
}
