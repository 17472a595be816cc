//! The level tower `{S_n}` of a weight model on a region: graded module
//! summaries (per-level cohomology ranks, torsion, U-ranks), Euler
//! characteristics, the alternating cube-weight identity, and stability of
//! the tower under growing the rectangle.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::{
    boundary_matrices, component_ids, homology, induced_map_rank, HomologySummary,
};
use crate::lattice::{
    cube_weight_unchecked, enumerate_cubes, Cube, CubicalComplex, LatticePoint, WeightModel,
};
use crate::path::LatticePath;

/// The part of the ambient decomposition the tower is restricted to.
#[derive(Clone, Debug)]
pub enum Region {
    /// The whole rectangle `[0,c]`.
    Full,
    /// A sub-rectangle `[lo,hi]` of the model rectangle.
    Sub { lo: LatticePoint, hi: LatticePoint },
    /// A lattice path, treated as a one-dimensional subcomplex.
    Path(LatticePath),
}

/// Cohomology of one sublevel space `S_n`, reported through universal
/// coefficients: `betti[q]` is the free rank of `H^q`, `torsion[q]` the
/// torsion of `H^q` (= torsion of `H_{q-1}`). The homogeneous degree of
/// level `n` is `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSummary {
    pub level: i64,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
    pub components: usize,
}

impl LevelSummary {
    pub fn degree(&self) -> i64 {
        2 * self.level
    }

    /// Profile of a contractible level (every region type here is
    /// contractible once saturated).
    pub fn stable(level: i64, rank: usize) -> LevelSummary {
        let mut betti = vec![0; rank + 1];
        betti[0] = 1;
        LevelSummary {
            level,
            betti,
            torsion: vec![Vec::new(); rank + 1],
            components: 1,
        }
    }
}

/// The graded module `H^*` of a tower: levels `min_level ..= stable_from`
/// are materialized; everything above `stable_from` equals the stable
/// profile (the infinite `T^+` tail).
#[derive(Clone, Debug)]
pub struct GradedModuleSummary {
    pub rank: usize,
    pub min_level: i64,
    pub stable_from: i64,
    pub levels: Vec<LevelSummary>,
    /// `u_ranks[k][q]` is the rank of the restriction
    /// `H^q(S_{n+1}) -> H^q(S_n)` for `n = min_level + k`.
    pub u_ranks: Vec<Vec<usize>>,
}

impl GradedModuleSummary {
    pub fn level(&self, n: i64) -> Option<&LevelSummary> {
        if n < self.min_level || n > self.stable_from {
            None
        } else {
            Some(&self.levels[(n - self.min_level) as usize])
        }
    }

    /// Level data with the stable profile extended above `stable_from`.
    pub fn level_or_stable(&self, n: i64) -> Option<LevelSummary> {
        if n > self.stable_from {
            Some(LevelSummary::stable(n, self.rank))
        } else {
            self.level(n).cloned()
        }
    }

    /// Reduced rank in degree q at level n (degree 0 drops the augmentation).
    pub fn reduced_rank(&self, n: i64, q: usize) -> usize {
        match self.level(n) {
            None => 0,
            Some(l) => {
                let b = l.betti.get(q).copied().unwrap_or(0);
                if q == 0 {
                    b.saturating_sub(1)
                } else {
                    b
                }
            }
        }
    }

    /// The degree-0 shadow: per-level component counts and U-ranks.
    pub fn degree0(&self) -> Degree0Tower {
        Degree0Tower {
            min_level: self.min_level,
            stable_from: self.stable_from,
            ranks: self.levels.iter().map(|l| l.betti[0]).collect(),
            u_ranks: self.u_ranks.iter().map(|r| r[0]).collect(),
        }
    }
}

/// Degree-0 module data: the `T^+_{2 min}` tower plus the reduced part,
/// described by per-level ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree0Tower {
    pub min_level: i64,
    pub stable_from: i64,
    /// Rank of `H^0` at levels `min_level ..= stable_from`.
    pub ranks: Vec<usize>,
    /// Rank of the degree-0 restriction per adjacent pair.
    pub u_ranks: Vec<usize>,
}

impl Degree0Tower {
    /// Homogeneous degree of the tower summand `T^+_{2 min}`.
    pub fn tplus_degree(&self) -> i64 {
        2 * self.min_level
    }

    pub fn reduced_ranks(&self) -> Vec<usize> {
        self.ranks.iter().map(|r| r.saturating_sub(1)).collect()
    }

    pub fn total_reduced_rank(&self) -> usize {
        self.reduced_ranks().iter().sum()
    }

    /// `-min_level + rank(H^0_red)` (no higher degrees contribute).
    pub fn eu(&self) -> i64 {
        -self.min_level + self.total_reduced_rank() as i64
    }
}

/// Cubes of the region with their weights, sorted per dimension.
pub(crate) fn region_cubes(
    model: &WeightModel,
    region: &Region,
) -> Result<Vec<Vec<(Cube, i64)>>> {
    let rank = model.rect().rank();
    let mut per_dim: Vec<Vec<(Cube, i64)>> = vec![Vec::new(); rank + 1];
    match region {
        Region::Full => {
            for cube in enumerate_cubes(model.rect()) {
                let w = cube_weight_unchecked(model, &cube);
                per_dim[cube.dim()].push((cube, w));
            }
        }
        Region::Sub { lo, hi } => {
            for p in [lo, hi] {
                if !model.rect().contains(p) {
                    return Err(Error::PointOutsideRectangle {
                        point: p.to_string(),
                        corner: model.rect().upper().to_string(),
                    });
                }
            }
            if !lo.le(hi) {
                return Err(Error::EmptyRegion);
            }
            for cube in enumerate_cubes(model.rect()) {
                if lo.le(cube.base()) && cube.top_vertex().le(hi) {
                    let w = cube_weight_unchecked(model, &cube);
                    per_dim[cube.dim()].push((cube, w));
                }
            }
        }
        Region::Path(path) => {
            for p in path.points() {
                if !model.rect().contains(p) {
                    return Err(Error::PointOutsideRectangle {
                        point: p.to_string(),
                        corner: model.rect().upper().to_string(),
                    });
                }
            }
            let (vertices, edges) = path.cells();
            per_dim[0] = vertices
                .into_iter()
                .map(|c| {
                    let w = model.weight(c.base());
                    (c, w)
                })
                .collect();
            if !edges.is_empty() {
                per_dim[1] = edges
                    .into_iter()
                    .map(|c| {
                        let w = cube_weight_unchecked(model, &c);
                        (c, w)
                    })
                    .collect();
            }
        }
    }
    if per_dim.iter().all(Vec::is_empty) {
        return Err(Error::EmptyRegion);
    }
    Ok(per_dim)
}

fn level_complex(rank: usize, per_dim: &[Vec<(Cube, i64)>], n: i64) -> CubicalComplex {
    let cells: Vec<Vec<Cube>> = per_dim
        .iter()
        .map(|dim_cells| {
            dim_cells
                .iter()
                .filter(|(_, w)| *w <= n)
                .map(|(c, _)| c.clone())
                .collect()
        })
        .collect();
    CubicalComplex::from_sorted(rank, cells)
}

/// Assembles the full tower `{S_n ∩ region}` from the minimum weight level
/// to saturation: per-level cohomology ranks and torsion, component counts,
/// and the U-ranks between adjacent levels. Levels are independent and
/// computed in parallel; the result does not depend on scheduling.
pub fn compute_summary(model: &WeightModel, region: &Region) -> Result<GradedModuleSummary> {
    let rank = model.rect().rank();
    let per_dim = region_cubes(model, region)?;

    let min_level = per_dim[0]
        .iter()
        .map(|(_, w)| *w)
        .min()
        .ok_or(Error::EmptyRegion)?;
    let stable_from = per_dim
        .iter()
        .flat_map(|cells| cells.iter().map(|(_, w)| *w))
        .max()
        .unwrap();

    let complexes: Vec<CubicalComplex> = (min_level..=stable_from)
        .map(|n| level_complex(rank, &per_dim, n))
        .collect();

    struct LevelData {
        hs: HomologySummary,
        comp_of_vertex: Vec<usize>,
        components: usize,
    }

    let computed: Vec<LevelData> = complexes
        .par_iter()
        .map(|cx| {
            let data = boundary_matrices(cx)?;
            let hs = homology(&data);
            let (comp_of_vertex, components) = component_ids(cx);
            debug_assert_eq!(hs.betti.first().copied().unwrap_or(0), components);
            Ok(LevelData {
                hs,
                comp_of_vertex,
                components,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let levels: Vec<LevelSummary> = computed
        .iter()
        .zip(min_level..=stable_from)
        .map(|(data, n)| {
            let mut betti = vec![0usize; rank + 1];
            for (q, &b) in data.hs.betti.iter().enumerate() {
                betti[q] = b;
            }
            // universal coefficients: torsion of H^q is the torsion of H_{q-1}
            let mut torsion = vec![Vec::new(); rank + 1];
            for (q, t) in data.hs.torsion.iter().enumerate() {
                if !t.is_empty() {
                    torsion[q + 1] = t.clone();
                }
            }
            LevelSummary {
                level: n,
                betti,
                torsion,
                components: data.components,
            }
        })
        .collect();

    let u_ranks: Vec<Vec<usize>> = (0..complexes.len().saturating_sub(1))
        .into_par_iter()
        .map(|k| {
            let (sub, sup) = (&complexes[k], &complexes[k + 1]);
            let mut ranks = vec![0usize; rank + 1];
            // degree 0 integrally, via components
            let mut parents: Vec<usize> = (0..computed[k].components)
                .map(|comp| {
                    let vertex_idx = computed[k]
                        .comp_of_vertex
                        .iter()
                        .position(|&c| c == comp)
                        .expect("component is nonempty");
                    let cube = &sub.cells(0)[vertex_idx];
                    let sup_idx = sup.index_of(0, cube).expect("tower is nested");
                    computed[k + 1].comp_of_vertex[sup_idx]
                })
                .collect();
            parents.sort_unstable();
            parents.dedup();
            ranks[0] = parents.len();
            // higher degrees over the rationals, only where both sides live
            for q in 1..=rank {
                if levels[k].betti[q] > 0 && levels[k + 1].betti[q] > 0 {
                    ranks[q] = induced_map_rank(sub, sup, q)?;
                }
            }
            Ok(ranks)
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GradedModuleSummary {
        rank,
        min_level,
        stable_from,
        levels,
        u_ranks,
    })
}

/// `eu(H^*) = -min w + sum_q (-1)^q rank H^q_red`, summed over the tower.
pub fn euler_characteristic(summary: &GradedModuleSummary) -> i64 {
    let mut reduced = 0i64;
    for level in &summary.levels {
        for (q, &b) in level.betti.iter().enumerate() {
            let red = if q == 0 { b.saturating_sub(1) } else { b } as i64;
            reduced += if q % 2 == 0 { red } else { -red };
        }
    }
    -summary.min_level + reduced
}

/// `sum_{cube in [0,c]} (-1)^{dim+1} w(cube)`; equals the Euler
/// characteristic of the full-rectangle tower.
pub fn cube_weight_alternating_sum(model: &WeightModel) -> i64 {
    enumerate_cubes(model.rect())
        .map(|cube| {
            let w = cube_weight_unchecked(model, &cube);
            if cube.dim() % 2 == 0 {
                -w
            } else {
                w
            }
        })
        .sum()
}

#[derive(Clone, Debug)]
pub struct StabilityDiscrepancy {
    pub level: i64,
    pub degree: usize,
    pub field: &'static str,
    pub base: String,
    pub extended: String,
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub pass: bool,
    pub discrepancy: Option<StabilityDiscrepancy>,
}

/// Checks that growing the rectangle one step in direction `dir` (weights
/// on the new face dominating their inner neighbors) leaves every level of
/// the tower unchanged: Betti numbers and torsion per level and degree.
pub fn check_c_stability(
    model: &WeightModel,
    extended: &WeightModel,
    dir: usize,
) -> Result<StabilityReport> {
    let rank = model.rect().rank();
    if dir >= rank {
        return Err(Error::InvalidDirection { dir, rank });
    }
    let grown = model.rect().upper().stepped(dir, 1);
    if extended.rect().upper() != &grown {
        return Err(Error::ExtensionMismatch {
            reason: format!(
                "expected corner {grown}, got {}",
                extended.rect().upper()
            ),
        });
    }
    for p in model.rect().points() {
        if extended.weight(&p) != model.weight(&p) {
            return Err(Error::ExtensionMismatch {
                reason: format!("weights disagree at {p}"),
            });
        }
    }
    let face_coord = grown.coord(dir);
    for p in extended.rect().points() {
        if p.coord(dir) == face_coord {
            let inner = p.stepped(dir, -1);
            if extended.weight(&p) < extended.weight(&inner) {
                return Err(Error::RetractionHypothesis {
                    point: p.to_string(),
                });
            }
        }
    }

    let base = compute_summary(model, &Region::Full)?;
    let ext = compute_summary(extended, &Region::Full)?;

    let lo = base.min_level.min(ext.min_level);
    let hi = base.stable_from.max(ext.stable_from);
    for n in lo..=hi {
        let a = base.level_or_stable(n);
        let b = ext.level_or_stable(n);
        let (a, b) = match (a, b) {
            (Some(a), Some(b)) => (a, b),
            (a, b) => {
                return Ok(StabilityReport {
                    pass: false,
                    discrepancy: Some(StabilityDiscrepancy {
                        level: n,
                        degree: 0,
                        field: "presence",
                        base: format!("{}", a.is_some()),
                        extended: format!("{}", b.is_some()),
                    }),
                });
            }
        };
        for q in 0..=rank {
            if a.betti[q] != b.betti[q] {
                return Ok(StabilityReport {
                    pass: false,
                    discrepancy: Some(StabilityDiscrepancy {
                        level: n,
                        degree: q,
                        field: "betti",
                        base: a.betti[q].to_string(),
                        extended: b.betti[q].to_string(),
                    }),
                });
            }
            if a.torsion[q] != b.torsion[q] {
                return Ok(StabilityReport {
                    pass: false,
                    discrepancy: Some(StabilityDiscrepancy {
                        level: n,
                        degree: q,
                        field: "torsion",
                        base: format!("{:?}", a.torsion[q]),
                        extended: format!("{:?}", b.torsion[q]),
                    }),
                });
            }
        }
    }
    Ok(StabilityReport {
        pass: true,
        discrepancy: None,
    })
}
