//! Lattice cohomology of weight functions on integer lattices: sublevel
//! cubical complexes and their exact integral cohomology, graded `Z[U]`
//! module summaries, graded roots, path lattice cohomology, Hilbert pairs
//! with their Poincaré series, and the weighted homogeneous hypersurface
//! pipeline from Hodge-spectrum data.

pub mod cohomology;
pub mod error;
pub mod germ;
pub mod hilbert;
pub mod homology;
pub mod lattice;
pub mod path;
pub mod root;

pub use cohomology::{
    check_c_stability, compute_summary, cube_weight_alternating_sum, euler_characteristic,
    Degree0Tower, GradedModuleSummary, LevelSummary, Region, StabilityReport,
};
pub use error::{Error, Result};
pub use germ::{
    analytic_invariants, brieskorn_spectrum_oracle, reduced_hilbert, reduced_weight,
    spectrum_unit_interval, AnalyticInvariants, SpectrumSlice, WeightedHomogeneousGerm,
};
pub use hilbert::{
    check_axioms, check_cdp, generate_pair, poincare_from_h, symmetrize, verify_theorem_3_7,
    weight_from_pair, weighted_cube_series, HilbertPair, PairGenConfig, SeriesCoefficients,
    Theorem37Report,
};
pub use homology::{
    boundary_matrices, connected_components, homology, induced_map_rank, matrix_rank,
    smith_normal_form, ChainComplexData, HomologySummary, IntMatrix,
};
pub use lattice::{
    cube_weight, enumerate_cubes, sublevel_complex, Cube, CubicalComplex, DirSet, LatticePoint,
    Rectangle, WeightModel,
};
pub use path::{
    for_each_increasing_path, increasing_path_count, min_increasing_eu, path_eu_weights,
    path_module, LatticePath, MinEuMethod, MinEuOptions, MinEuResult,
};
pub use root::{
    build_root, export_root, import_root, isomorphic, root_module, validate_root, GradedRoot,
    RootFormat, RootReport, RootVertex,
};

/// Derives an independent per-trial seed from a master seed (SplitMix64
/// step), so suites stay deterministic under any parallel schedule.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
