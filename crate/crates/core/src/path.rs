//! Path lattice cohomology: the degree-0 module of a weight function
//! restricted to a lattice path, its closed-form Euler characteristic, and
//! minimization over increasing paths.

use crate::cohomology::{compute_summary, Degree0Tower, Region};
use crate::error::{Error, Result};
use crate::lattice::{Cube, DirSet, LatticePoint, Rectangle, WeightModel};

/// A sequence `x_0, .., x_t` starting at the origin, with distinct points
/// and unit steps `x_{i+1} = x_i +- E_v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePath {
    points: Vec<LatticePoint>,
}

impl LatticePath {
    pub fn new(points: Vec<LatticePoint>) -> Result<LatticePath> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyRegion);
        };
        let rank = first.rank();
        if *first != LatticePoint::origin(rank) {
            return Err(Error::PathNotAtOrigin {
                start: first.to_string(),
            });
        }
        for (i, pair) in points.windows(2).enumerate() {
            let diff = pair[1].minus(&pair[0]);
            let nonzero: Vec<i64> = diff.coords().iter().copied().filter(|&d| d != 0).collect();
            if pair[1].rank() != rank || nonzero.len() != 1 || nonzero[0].abs() != 1 {
                return Err(Error::PathBadStep {
                    index: i,
                    from: pair[0].to_string(),
                    to: pair[1].to_string(),
                });
            }
        }
        let mut seen = points.clone();
        seen.sort();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::PathRepeatsPoint {
                point: w[0].to_string(),
            });
        }
        Ok(LatticePath { points })
    }

    /// Increasing path from the origin through unit steps `v_0, v_1, ..`
    /// (zero-based directions).
    pub fn from_steps(rank: usize, steps: &[usize]) -> Result<LatticePath> {
        let mut points = vec![LatticePoint::origin(rank)];
        for &v in steps {
            if v >= rank {
                return Err(Error::InvalidDirection { dir: v, rank });
            }
            let next = points.last().unwrap().stepped(v, 1);
            points.push(next);
        }
        LatticePath::new(points)
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn rank(&self) -> usize {
        self.points[0].rank()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_increasing(&self) -> bool {
        self.points
            .windows(2)
            .all(|pair| pair[0].le(&pair[1]))
    }

    /// Vertex and segment cubes of the path, sorted per dimension.
    pub(crate) fn cells(&self) -> (Vec<Cube>, Vec<Cube>) {
        let mut vertices: Vec<Cube> = self
            .points
            .iter()
            .map(|p| Cube::vertex(p.clone()))
            .collect();
        vertices.sort();
        let mut edges: Vec<Cube> = self
            .points
            .windows(2)
            .map(|pair| {
                let base = pair[0].meet(&pair[1]);
                let diff = pair[1].minus(&pair[0]);
                let v = diff
                    .coords()
                    .iter()
                    .position(|&d| d != 0)
                    .expect("validated step");
                Cube::new(base, DirSet::singleton(v))
            })
            .collect();
        edges.sort();
        (vertices, edges)
    }
}

/// Degree-0 module of the path: per-level component counts of the sublevel
/// pieces of the path. Higher cohomology vanishes (sublevel subsets of an
/// embedded path are disjoint unions of arcs); this is asserted.
pub fn path_module(path: &LatticePath, model: &WeightModel) -> Result<Degree0Tower> {
    let summary = compute_summary(model, &Region::Path(path.clone()))?;
    for level in &summary.levels {
        if level.betti.iter().skip(1).any(|&b| b != 0) {
            return Err(Error::Internal(format!(
                "path sublevel at n={} has nonzero higher cohomology",
                level.level
            )));
        }
    }
    Ok(summary.degree0())
}

/// Closed-form Euler characteristic of the path module:
/// `-w0(0) + sum_i max(0, w0(x_i) - w0(x_{i+1}))`.
pub fn path_eu_weights(path: &LatticePath, model: &WeightModel) -> Result<i64> {
    let weights: Vec<i64> = path
        .points()
        .iter()
        .map(|p| model.try_weight(p))
        .collect::<Result<_>>()?;
    Ok(-weights[0]
        + weights
            .windows(2)
            .map(|w| (w[0] - w[1]).max(0))
            .sum::<i64>())
}

/// Calls `f` on every increasing path from the origin to the corner, in
/// lexicographic order on the point sequences.
pub fn for_each_increasing_path<F: FnMut(&[LatticePoint])>(rect: &Rectangle, mut f: F) {
    fn rec<F: FnMut(&[LatticePoint])>(rect: &Rectangle, cur: &mut Vec<LatticePoint>, f: &mut F) {
        let last = cur.last().unwrap();
        if last == rect.upper() {
            f(cur);
            return;
        }
        // larger direction index first: that is the lexicographically
        // smaller next point
        for v in (0..rect.rank()).rev() {
            if cur.last().unwrap().coord(v) < rect.upper().coord(v) {
                let next = cur.last().unwrap().stepped(v, 1);
                cur.push(next);
                rec(rect, cur, f);
                cur.pop();
            }
        }
    }
    let mut cur = vec![LatticePoint::origin(rect.rank())];
    rec(rect, &mut cur, &mut f);
}

/// Number of increasing paths from 0 to the corner: a multinomial
/// coefficient; saturates at usize::MAX.
pub fn increasing_path_count(rect: &Rectangle) -> usize {
    let mut count: u128 = 1;
    let mut placed: u128 = 0;
    for &c in rect.upper().coords() {
        for k in 1..=(c as u128) {
            count = count.saturating_mul(placed + k) / k;
            if count > usize::MAX as u128 {
                return usize::MAX;
            }
        }
        placed += c as u128;
    }
    count as usize
}

#[derive(Clone, Copy, Debug)]
pub struct MinEuOptions {
    /// Exhaustive enumeration is used when the corner has at most this many
    /// unit steps in total.
    pub step_budget: usize,
    /// Past the budget, fall back to a dynamic program over the lattice.
    pub dp_fallback: bool,
}

impl Default for MinEuOptions {
    fn default() -> Self {
        MinEuOptions {
            step_budget: 12,
            dp_fallback: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinEuMethod {
    Exhaustive,
    DynamicProgramming,
}

#[derive(Clone, Debug)]
pub struct MinEuResult {
    pub eu: i64,
    pub witness: LatticePath,
    pub method: MinEuMethod,
}

/// Minimum of `path_eu_weights` over all increasing paths from 0 to the
/// corner, with the lexicographically smallest witness.
///
/// The Euler characteristic is a sum of per-step costs, so the dynamic
/// program past the step budget still returns the exact minimum; the method
/// flag records which route produced it.
pub fn min_increasing_eu(model: &WeightModel, opts: MinEuOptions) -> Result<MinEuResult> {
    let rect = model.rect();
    let total_steps: i64 = rect.upper().coords().iter().sum();
    let start_weight = model.weight(&LatticePoint::origin(rect.rank()));

    if total_steps as usize <= opts.step_budget {
        let mut best: Option<(i64, Vec<LatticePoint>)> = None;
        for_each_increasing_path(rect, |points| {
            let cost: i64 = points
                .windows(2)
                .map(|pair| (model.weight(&pair[0]) - model.weight(&pair[1])).max(0))
                .sum();
            if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                best = Some((cost, points.to_vec()));
            }
        });
        let (cost, points) = best.expect("rectangle has at least one increasing path");
        return Ok(MinEuResult {
            eu: -start_weight + cost,
            witness: LatticePath::new(points)?,
            method: MinEuMethod::Exhaustive,
        });
    }

    if !opts.dp_fallback {
        return Err(Error::Budget {
            needed: total_steps as usize,
            budget: opts.step_budget,
        });
    }

    // cost-to-go over the lattice, processed against the lexicographic order
    let n = rect.num_points();
    let mut togo = vec![i64::MAX; n];
    togo[n - 1] = 0;
    for idx in (0..n - 1).rev() {
        let p = rect.point_at(idx);
        let wp = model.weight(&p);
        let mut best = i64::MAX;
        for v in 0..rect.rank() {
            if p.coord(v) < rect.upper().coord(v) {
                let next = p.stepped(v, 1);
                let step = (wp - model.weight(&next)).max(0);
                best = best.min(step + togo[rect.index_of(&next).unwrap()]);
            }
        }
        togo[idx] = best;
    }
    let mut points = vec![LatticePoint::origin(rect.rank())];
    while points.last().unwrap() != rect.upper() {
        let p = points.last().unwrap().clone();
        let wp = model.weight(&p);
        let here = togo[rect.index_of(&p).unwrap()];
        // largest direction first: lexicographically smallest witness
        let mut chosen = None;
        for v in (0..rect.rank()).rev() {
            if p.coord(v) < rect.upper().coord(v) {
                let next = p.stepped(v, 1);
                let step = (wp - model.weight(&next)).max(0);
                if step + togo[rect.index_of(&next).unwrap()] == here {
                    chosen = Some(next);
                    break;
                }
            }
        }
        points.push(chosen.expect("cost-to-go admits a minimizing step"));
    }
    Ok(MinEuResult {
        eu: -start_weight + togo[0],
        witness: LatticePath::new(points)?,
        method: MinEuMethod::DynamicProgramming,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Rectangle;

    fn rank1_model(values: Vec<i64>) -> WeightModel {
        WeightModel::rank_one(values).unwrap()
    }

    #[test]
    fn path_validation() {
        assert!(matches!(
            LatticePath::new(vec![LatticePoint::new(vec![1])]),
            Err(Error::PathNotAtOrigin { .. })
        ));
        assert!(matches!(
            LatticePath::new(vec![
                LatticePoint::new(vec![0]),
                LatticePoint::new(vec![2])
            ]),
            Err(Error::PathBadStep { .. })
        ));
        let back_and_forth = LatticePath::new(vec![
            LatticePoint::new(vec![0]),
            LatticePoint::new(vec![1]),
            LatticePoint::new(vec![0]),
        ]);
        assert!(matches!(
            back_and_forth,
            Err(Error::PathRepeatsPoint { .. })
        ));
    }

    #[test]
    fn eu_weights_examples() {
        let model = rank1_model(vec![0, 1, 0]);
        let path = LatticePath::from_steps(1, &[0, 0]).unwrap();
        assert_eq!(path_eu_weights(&path, &model).unwrap(), 1);

        let monotone = rank1_model(vec![0, 0, 1, 3]);
        let path = LatticePath::from_steps(1, &[0, 0, 0]).unwrap();
        assert_eq!(path_eu_weights(&path, &monotone).unwrap(), 0);

        let zigzag = rank1_model(vec![0, 1, 0, 1, 0]);
        let path = LatticePath::from_steps(1, &[0, 0, 0, 0]).unwrap();
        assert_eq!(path_eu_weights(&path, &zigzag).unwrap(), 2);
    }

    #[test]
    fn module_examples() {
        let model = rank1_model(vec![0, 0, 0]);
        let path = LatticePath::from_steps(1, &[0, 0]).unwrap();
        let tower = path_module(&path, &model).unwrap();
        assert_eq!(tower.min_level, 0);
        assert_eq!(tower.ranks, vec![1]);
        assert_eq!(tower.eu(), 0);

        let model = rank1_model(vec![0, 1, 0]);
        let tower = path_module(&path, &model).unwrap();
        assert_eq!(tower.min_level, 0);
        assert_eq!(tower.ranks, vec![2, 1]);
        assert_eq!(tower.eu(), 1);
        assert_eq!(
            tower.eu(),
            path_eu_weights(&path, &model).unwrap()
        );

        let single = LatticePath::new(vec![LatticePoint::origin(1)]).unwrap();
        let shifted = rank1_model(vec![3, 0, 0]);
        let tower = path_module(&single, &shifted).unwrap();
        assert_eq!(tower.min_level, 3);
        assert_eq!(tower.tplus_degree(), 6);
        assert_eq!(tower.ranks, vec![1]);
    }

    #[test]
    fn path_outside_rectangle_is_error() {
        let model = rank1_model(vec![0, 1]);
        let path = LatticePath::from_steps(1, &[0, 0]).unwrap();
        assert!(matches!(
            path_eu_weights(&path, &model),
            Err(Error::PointOutsideRectangle { .. })
        ));
    }

    #[test]
    fn min_eu_constant_model() {
        let rect = Rectangle::new(LatticePoint::new(vec![2, 2])).unwrap();
        let model = WeightModel::constant(rect, 0);
        let res = min_increasing_eu(&model, MinEuOptions::default()).unwrap();
        assert_eq!(res.eu, 0);
        assert_eq!(res.method, MinEuMethod::Exhaustive);
    }

    #[test]
    fn min_eu_square_table() {
        let rect = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        let model = WeightModel::new(rect, vec![0, 1, 1, 0]).unwrap();
        let res = min_increasing_eu(&model, MinEuOptions::default()).unwrap();
        assert_eq!(res.eu, 1);
        // both staircase paths give 1; the witness is the lex-smallest one
        assert_eq!(
            res.witness.points(),
            &[
                LatticePoint::new(vec![0, 0]),
                LatticePoint::new(vec![0, 1]),
                LatticePoint::new(vec![1, 1]),
            ]
        );
    }

    #[test]
    fn dp_agrees_with_exhaustive() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let corner = LatticePoint::new(vec![3, 2]);
            let model = WeightModel::random(&mut rng, corner, -3, 3).unwrap();
            let a = min_increasing_eu(&model, MinEuOptions::default()).unwrap();
            let b = min_increasing_eu(
                &model,
                MinEuOptions {
                    step_budget: 0,
                    dp_fallback: true,
                },
            )
            .unwrap();
            assert_eq!(a.eu, b.eu);
            assert_eq!(a.witness, b.witness);
            assert_eq!(b.method, MinEuMethod::DynamicProgramming);
        }
    }

    #[test]
    fn budget_without_fallback_is_resource_error() {
        let rect = Rectangle::new(LatticePoint::new(vec![8, 8])).unwrap();
        let model = WeightModel::constant(rect, 0);
        let res = min_increasing_eu(
            &model,
            MinEuOptions {
                step_budget: 12,
                dp_fallback: false,
            },
        );
        assert!(matches!(res, Err(Error::Budget { .. })));
    }

    #[test]
    fn path_counts() {
        let r = Rectangle::new(LatticePoint::new(vec![4, 4])).unwrap();
        assert_eq!(increasing_path_count(&r), 70);
        let r3 = Rectangle::new(LatticePoint::new(vec![4, 4, 4])).unwrap();
        assert_eq!(increasing_path_count(&r3), 34650);
        let mut seen = 0;
        for_each_increasing_path(&r, |_| seen += 1);
        assert_eq!(seen, 70);
    }
}
