//! Lattice points, cubes, rectangles, weight tables and sublevel complexes.
//!
//! The ambient space is `Z^s` with the standard basis; a weight table on a
//! finite rectangle `[0,c]` induces weights on the cubes of the unit-cube
//! decomposition (maximum over vertices), and the sublevel sets of that cube
//! weight are the finite cubical complexes everything else is built from.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `Z^s`, ordered lexicographically (`Ord`) and coordinatewise
/// (`le`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint {
    coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint { coords }
    }

    pub fn origin(rank: usize) -> Self {
        LatticePoint {
            coords: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, v: usize) -> i64 {
        self.coords[v]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinatewise partial order.
    pub fn le(&self, other: &LatticePoint) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&a| a >= 0)
    }

    /// Coordinatewise minimum.
    pub fn meet(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Coordinatewise maximum.
    pub fn join(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// The point moved by `delta` along coordinate `v`.
    pub fn stepped(&self, v: usize, delta: i64) -> LatticePoint {
        let mut coords = self.coords.clone();
        coords[v] += delta;
        LatticePoint { coords }
    }

    /// The point plus the sum of unit vectors over `dirs` (`l + E_I`).
    pub fn plus_dirs(&self, dirs: DirSet) -> LatticePoint {
        let mut coords = self.coords.clone();
        for v in dirs.iter() {
            coords[v] += 1;
        }
        LatticePoint { coords }
    }

    pub fn minus(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Coordinatewise `max(0, .)`.
    pub fn clamped_nonnegative(&self) -> LatticePoint {
        LatticePoint::new(self.coords.iter().map(|&a| a.max(0)).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A subset of the coordinate directions `{1..s}`, stored as a bitmask
/// (direction `v` is bit `v`, zero-based internally).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DirSet(u32);

impl DirSet {
    pub const EMPTY: DirSet = DirSet(0);

    pub fn singleton(v: usize) -> DirSet {
        DirSet(1 << v)
    }

    pub fn full(rank: usize) -> DirSet {
        DirSet(if rank == 0 { 0 } else { (1u32 << rank) - 1 })
    }

    pub fn from_bits(bits: u32) -> DirSet {
        DirSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    pub fn without(self, v: usize) -> DirSet {
        DirSet(self.0 & !(1 << v))
    }

    /// Rank of `v` within the set in increasing order (used by the boundary
    /// sign rule).
    pub fn position_of(self, v: usize) -> usize {
        (self.0 & ((1u32 << v) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets, in increasing bitmask order.
    pub fn subsets(self) -> Vec<DirSet> {
        let mask = self.0;
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub = 0u32;
        loop {
            out.push(DirSet(sub));
            if sub == mask {
                break;
            }
            sub = (sub.wrapping_sub(mask)) & mask;
        }
        out
    }
}

impl fmt::Display for DirSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for DirSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A cube `(l, I)` of the unit-cube decomposition of `R^s`: base lattice
/// point `l` and direction subset `I`, of dimension `|I|`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    base: LatticePoint,
    dirs: DirSet,
}

impl Cube {
    pub fn new(base: LatticePoint, dirs: DirSet) -> Cube {
        Cube { base, dirs }
    }

    pub fn vertex(p: LatticePoint) -> Cube {
        Cube {
            base: p,
            dirs: DirSet::EMPTY,
        }
    }

    pub fn base(&self) -> &LatticePoint {
        &self.base
    }

    pub fn dirs(&self) -> DirSet {
        self.dirs
    }

    pub fn dim(&self) -> usize {
        self.dirs.len()
    }

    /// The `2^q` vertices `base + E_{I'}`, `I' <= I`, in subset-mask order.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        self.dirs
            .subsets()
            .into_iter()
            .map(|sub| self.base.plus_dirs(sub))
            .collect()
    }

    /// The vertex opposite to the base, `base + E_I`.
    pub fn top_vertex(&self) -> LatticePoint {
        self.base.plus_dirs(self.dirs)
    }

    /// The `2q` codimension-one faces.
    pub fn faces(&self) -> Vec<Cube> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for v in self.dirs.iter() {
            let rest = self.dirs.without(v);
            out.push(Cube::new(self.base.clone(), rest));
            out.push(Cube::new(self.base.stepped(v, 1), rest));
        }
        out
    }

    /// Codimension-one faces with boundary signs:
    /// `d(l,I) = sum_{v in I} (-1)^{pos(v,I)} [ (l+E_v, I\v) - (l, I\v) ]`.
    pub fn boundary_faces(&self) -> Vec<(Cube, i64)> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for v in self.dirs.iter() {
            let rest = self.dirs.without(v);
            let sign = if self.dirs.position_of(v) % 2 == 0 {
                1
            } else {
                -1
            };
            out.push((Cube::new(self.base.stepped(v, 1), rest), sign));
            out.push((Cube::new(self.base.clone(), rest), -sign));
        }
        out
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.base, self.dirs)
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The rectangle `[0,c]` for a corner `c >= 0`; lower corner fixed at the
/// origin.
#[derive(Clone, PartialEq, Eq)]
pub struct Rectangle {
    upper: LatticePoint,
}

impl Rectangle {
    pub fn new(upper: LatticePoint) -> Result<Rectangle> {
        if !upper.is_nonnegative() {
            return Err(Error::NegativeCorner {
                corner: upper.to_string(),
            });
        }
        if upper.rank() > 30 {
            return Err(Error::RankMismatch {
                expected: 30,
                got: upper.rank(),
            });
        }
        Ok(Rectangle { upper })
    }

    pub fn rank(&self) -> usize {
        self.upper.rank()
    }

    pub fn upper(&self) -> &LatticePoint {
        &self.upper
    }

    /// Number of lattice points, `prod(c_v + 1)`.
    pub fn num_points(&self) -> usize {
        self.upper
            .coords()
            .iter()
            .map(|&c| (c + 1) as usize)
            .product()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        p.rank() == self.rank() && p.is_nonnegative() && p.le(&self.upper)
    }

    /// A cube `(l,I)` lies inside iff `l >= 0` and `l + E_I <= c`.
    pub fn contains_cube(&self, cube: &Cube) -> bool {
        cube.base().rank() == self.rank()
            && cube.base().is_nonnegative()
            && cube.top_vertex().le(&self.upper)
    }

    /// Row-major index (last coordinate fastest); agrees with the
    /// lexicographic order on points.
    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        let mut idx = 0usize;
        for v in 0..self.rank() {
            idx = idx * (self.upper.coord(v) as usize + 1) + p.coord(v) as usize;
        }
        Some(idx)
    }

    pub fn point_at(&self, mut idx: usize) -> LatticePoint {
        let rank = self.rank();
        let mut coords = vec![0i64; rank];
        for v in (0..rank).rev() {
            let side = self.upper.coord(v) as usize + 1;
            coords[v] = (idx % side) as i64;
            idx /= side;
        }
        LatticePoint::new(coords)
    }

    /// Lattice points in lexicographic (= index) order.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        (0..self.num_points()).map(move |i| self.point_at(i))
    }

    /// Number of q-cubes: `sum_{|I|=q} prod_{v in I} c_v * prod_{v not in I} (c_v+1)`.
    pub fn cube_count(&self, q: usize) -> usize {
        let rank = self.rank();
        let mut total = 0usize;
        for bits in 0..(1u32 << rank) {
            let dirs = DirSet::from_bits(bits);
            if dirs.len() != q {
                continue;
            }
            let mut n = 1usize;
            for v in 0..rank {
                let c = self.upper.coord(v) as usize;
                n *= if dirs.contains(v) { c } else { c + 1 };
            }
            total += n;
        }
        total
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0,{}]", self.upper)
    }
}

/// Every cube inside `rect`, each exactly once, in lexicographic order on
/// `(base, dirs)`.
pub fn enumerate_cubes(rect: &Rectangle) -> impl Iterator<Item = Cube> + '_ {
    let masks = 1u32 << rect.rank();
    rect.points().flat_map(move |base| {
        let rect = rect.clone();
        (0..masks).filter_map(move |bits| {
            let cube = Cube::new(base.clone(), DirSet::from_bits(bits));
            rect.contains_cube(&cube).then_some(cube)
        })
    })
}

/// A total weight table `w_0` on the lattice points of a rectangle.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightModel {
    rect: Rectangle,
    values: Vec<i64>,
}

impl WeightModel {
    pub fn new(rect: Rectangle, values: Vec<i64>) -> Result<WeightModel> {
        if values.len() != rect.num_points() {
            return Err(Error::TableSize {
                corner: rect.upper().to_string(),
                expected: rect.num_points(),
                got: values.len(),
            });
        }
        Ok(WeightModel { rect, values })
    }

    /// Constant table.
    pub fn constant(rect: Rectangle, w: i64) -> WeightModel {
        let n = rect.num_points();
        WeightModel {
            rect,
            values: vec![w; n],
        }
    }

    /// Rank-one model from a flat list of values on `[0, len-1]`.
    pub fn rank_one(values: Vec<i64>) -> Result<WeightModel> {
        if values.is_empty() {
            return Err(Error::EmptyRegion);
        }
        let rect = Rectangle::new(LatticePoint::new(vec![values.len() as i64 - 1]))?;
        WeightModel::new(rect, values)
    }

    /// Uniform random table on `[0,corner]` with values in `lo..=hi`.
    pub fn random<R: Rng>(rng: &mut R, corner: LatticePoint, lo: i64, hi: i64) -> Result<WeightModel> {
        let rect = Rectangle::new(corner)?;
        let values = (0..rect.num_points())
            .map(|_| rng.random_range(lo..=hi))
            .collect();
        WeightModel::new(rect, values)
    }

    pub fn rect(&self) -> &Rectangle {
        &self.rect
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `w_0(p)`; panics if `p` is outside the rectangle.
    pub fn weight(&self, p: &LatticePoint) -> i64 {
        let idx = self
            .rect
            .index_of(p)
            .unwrap_or_else(|| panic!("point {p} outside rectangle [0,{}]", self.rect.upper()));
        self.values[idx]
    }

    pub fn try_weight(&self, p: &LatticePoint) -> Result<i64> {
        match self.rect.index_of(p) {
            Some(idx) => Ok(self.values[idx]),
            None => Err(Error::PointOutsideRectangle {
                point: p.to_string(),
                corner: self.rect.upper().to_string(),
            }),
        }
    }

    /// `m_w`, the minimum of `w_0` (attained: the domain is finite).
    pub fn min_weight(&self) -> i64 {
        *self.values.iter().min().expect("nonempty table")
    }

    /// Lexicographically smallest point attaining the minimum weight.
    pub fn min_point(&self) -> LatticePoint {
        let m = self.min_weight();
        let idx = self.values.iter().position(|&w| w == m).unwrap();
        self.rect.point_at(idx)
    }

    pub fn max_weight(&self) -> i64 {
        *self.values.iter().max().expect("nonempty table")
    }
}

impl fmt::Debug for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightModel({:?}, {:?})", self.rect, self.values)
    }
}

/// `w_q(cube) = max { w_0(l) : l vertex of cube }`.
pub fn cube_weight(model: &WeightModel, cube: &Cube) -> Result<i64> {
    if !model.rect().contains_cube(cube) {
        return Err(Error::CubeOutsideRectangle {
            cube: cube.to_string(),
            corner: model.rect().upper().to_string(),
        });
    }
    Ok(cube_weight_unchecked(model, cube))
}

pub(crate) fn cube_weight_unchecked(model: &WeightModel, cube: &Cube) -> i64 {
    cube.vertices()
        .iter()
        .map(|p| model.weight(p))
        .max()
        .expect("cube has at least one vertex")
}

/// A finite face-closed set of cubes, stored per dimension in sorted order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicalComplex {
    rank: usize,
    cells: Vec<Vec<Cube>>,
}

impl CubicalComplex {
    /// Builds a complex, validating rank agreement and face closure.
    pub fn new(rank: usize, cells: Vec<Vec<Cube>>) -> Result<CubicalComplex> {
        let mut by_dim: Vec<Vec<Cube>> = vec![Vec::new(); rank + 1];
        for dim_cells in cells {
            for cube in dim_cells {
                if cube.base().rank() != rank {
                    return Err(Error::RankMismatch {
                        expected: rank,
                        got: cube.base().rank(),
                    });
                }
                by_dim[cube.dim()].push(cube);
            }
        }
        for dim_cells in &mut by_dim {
            dim_cells.sort();
            dim_cells.dedup();
        }
        let cx = CubicalComplex {
            rank,
            cells: by_dim,
        };
        cx.check_face_closed()?;
        Ok(cx)
    }

    /// Builds from per-dimension lists already sorted, deduplicated and
    /// face-closed (checked only in debug builds).
    pub(crate) fn from_sorted(rank: usize, mut cells: Vec<Vec<Cube>>) -> CubicalComplex {
        cells.resize(rank + 1, Vec::new());
        let cx = CubicalComplex { rank, cells };
        debug_assert!(cx
            .cells
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1])));
        debug_assert!(cx.check_face_closed().is_ok());
        cx
    }

    pub fn empty(rank: usize) -> CubicalComplex {
        CubicalComplex {
            rank,
            cells: vec![Vec::new(); rank + 1],
        }
    }

    fn check_face_closed(&self) -> Result<()> {
        for q in 1..=self.rank {
            for cube in &self.cells[q] {
                for face in cube.faces() {
                    if self.index_of(q - 1, &face).is_none() {
                        return Err(Error::NotFaceClosed {
                            face: face.to_string(),
                            cube: cube.to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cells(&self, q: usize) -> &[Cube] {
        self.cells.get(q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn num_cells(&self, q: usize) -> usize {
        self.cells(q).len()
    }

    pub fn total_cells(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    /// Largest dimension with a cell, or None for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        (0..=self.rank).rev().find(|&q| !self.cells[q].is_empty())
    }

    pub fn index_of(&self, q: usize, cube: &Cube) -> Option<usize> {
        self.cells.get(q)?.binary_search(cube).ok()
    }

    pub fn is_subcomplex_of(&self, other: &CubicalComplex) -> Option<Cube> {
        for q in 0..=self.rank {
            for cube in self.cells(q) {
                if other.index_of(q, cube).is_none() {
                    return Some(cube.clone());
                }
            }
        }
        None
    }
}

/// `S_n`: all cubes of the rectangle with cube weight at most `n`.
/// Face-closed by construction since the cube weight is monotone under faces.
pub fn sublevel_complex(model: &WeightModel, n: i64) -> CubicalComplex {
    let rank = model.rect().rank();
    let mut cells: Vec<Vec<Cube>> = vec![Vec::new(); rank + 1];
    for cube in enumerate_cubes(model.rect()) {
        if cube_weight_unchecked(model, &cube) <= n {
            cells[cube.dim()].push(cube);
        }
    }
    CubicalComplex::from_sorted(rank, cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_0110() -> WeightModel {
        // values (0,1,1,0) at (0,0),(1,0),(0,1),(1,1): row-major order is
        // (0,0),(0,1),(1,0),(1,1) -> [0,1,1,0]
        let rect = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        WeightModel::new(rect, vec![0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn row_major_indexing_round_trips() {
        let rect = Rectangle::new(LatticePoint::new(vec![2, 1, 3])).unwrap();
        for (i, p) in rect.points().enumerate() {
            assert_eq!(rect.index_of(&p), Some(i));
            assert_eq!(rect.point_at(i), p);
        }
        assert_eq!(rect.num_points(), 3 * 2 * 4);
    }

    #[test]
    fn cube_weight_constant_table() {
        let rect = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        let model = WeightModel::constant(rect, 0);
        let cube = Cube::new(LatticePoint::origin(2), DirSet::full(2));
        assert_eq!(cube_weight(&model, &cube).unwrap(), 0);
    }

    #[test]
    fn cube_weight_square_table() {
        let model = square_0110();
        let square = Cube::new(LatticePoint::origin(2), DirSet::full(2));
        assert_eq!(cube_weight(&model, &square).unwrap(), 1);
        let edge = Cube::new(LatticePoint::origin(2), DirSet::singleton(0));
        assert_eq!(cube_weight(&model, &edge).unwrap(), 1);
    }

    #[test]
    fn cube_weight_outside_rectangle_is_error() {
        let model = square_0110();
        let cube = Cube::new(LatticePoint::new(vec![1, 1]), DirSet::singleton(0));
        assert!(matches!(
            cube_weight(&model, &cube),
            Err(Error::CubeOutsideRectangle { .. })
        ));
    }

    #[test]
    fn sublevel_square_table() {
        let model = square_0110();
        let s0 = sublevel_complex(&model, 0);
        assert_eq!(s0.num_cells(0), 2);
        assert_eq!(s0.num_cells(1), 0);
        assert_eq!(s0.num_cells(2), 0);
        assert_eq!(
            s0.cells(0),
            &[
                Cube::vertex(LatticePoint::new(vec![0, 0])),
                Cube::vertex(LatticePoint::new(vec![1, 1])),
            ]
        );
        let s1 = sublevel_complex(&model, 1);
        assert_eq!(s1.total_cells(), 9);
        // below the minimum the complex is empty
        let below = sublevel_complex(&model, model.min_weight() - 1);
        assert!(below.is_empty());
    }

    #[test]
    fn enumerate_cube_counts() {
        let r1 = Rectangle::new(LatticePoint::new(vec![1])).unwrap();
        assert_eq!(enumerate_cubes(&r1).count(), 3);
        let r11 = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        assert_eq!(enumerate_cubes(&r11).count(), 9);
        let r21 = Rectangle::new(LatticePoint::new(vec![2, 1])).unwrap();
        assert_eq!(enumerate_cubes(&r21).count(), 15);
        assert_eq!(r21.cube_count(0), 6);
        assert_eq!(r21.cube_count(1), 7);
        assert_eq!(r21.cube_count(2), 2);
    }

    #[test]
    fn enumeration_is_sorted_and_matches_counts() {
        let rect = Rectangle::new(LatticePoint::new(vec![2, 2])).unwrap();
        let cubes: Vec<Cube> = enumerate_cubes(&rect).collect();
        let mut sorted = cubes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(cubes.len(), sorted.len());
        for q in 0..=2 {
            assert_eq!(
                cubes.iter().filter(|c| c.dim() == q).count(),
                rect.cube_count(q)
            );
        }
    }

    #[test]
    fn sublevels_nest_and_saturate() {
        let model = square_0110();
        let lo = model.min_weight();
        let hi = model.max_weight();
        let mut prev = sublevel_complex(&model, lo - 1);
        for n in lo..=hi {
            let cur = sublevel_complex(&model, n);
            assert!(prev.is_subcomplex_of(&cur).is_none());
            prev = cur;
        }
        let full: usize = (0..=2).map(|q| model.rect().cube_count(q)).sum();
        assert_eq!(prev.total_cells(), full);
    }

    #[test]
    fn face_weights_are_monotone() {
        let model = square_0110();
        for cube in enumerate_cubes(model.rect()) {
            let w = cube_weight(&model, &cube).unwrap();
            for face in cube.faces() {
                assert!(cube_weight(&model, &face).unwrap() <= w);
            }
        }
    }

    #[test]
    fn table_size_mismatch_is_error() {
        let rect = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        assert!(matches!(
            WeightModel::new(rect, vec![0, 1, 2]),
            Err(Error::TableSize { .. })
        ));
    }
}
