//! Exact integral homology of cubical complexes: boundary matrices, Smith
//! normal form, connected components, and ranks of maps induced by
//! inclusions.
//!
//! Smith normal form runs on `i64` with checked arithmetic and falls back to
//! arbitrary-precision integers if anything would overflow, so results are
//! always exact.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{CubicalComplex, LatticePoint};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// Scalar the elimination runs over. `None` results signal overflow and make
/// the caller retry over `BigInt`, where every operation succeeds.
trait SnfScalar: Clone + Ord + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Option<Self>;
    fn is_negative(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    /// Quotient rounded to nearest (ties toward zero), so the remainder has
    /// absolute value at most half the divisor.
    fn div_nearest(&self, d: &Self) -> Option<Self>;
    fn divides(&self, other: &Self) -> bool;
    fn from_i64(v: i64) -> Self;
}

impl SnfScalar for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs(&self) -> Option<Self> {
        self.checked_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn div_nearest(&self, d: &Self) -> Option<Self> {
        let q = self.checked_div(*d)?;
        let r = self - q * d;
        let half = d.checked_abs()? - r.checked_abs()?;
        if r.checked_abs()? > half {
            q.checked_add(if (r < 0) == (*d < 0) { 1 } else { -1 })
        } else {
            Some(q)
        }
    }
    fn divides(&self, other: &Self) -> bool {
        *self != 0 && other % self == 0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl SnfScalar for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Option<Self> {
        Some(Signed::abs(self))
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        Signed::abs(self) == BigInt::from(1)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn div_nearest(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        if Signed::abs(&r) * 2 > Signed::abs(d) {
            let adj = if Signed::is_negative(&r) == Signed::is_negative(d) {
                1
            } else {
                -1
            };
            Some(q + adj)
        } else {
            Some(q)
        }
    }
    fn divides(&self, other: &Self) -> bool {
        !Zero::is_zero(self) && Zero::is_zero(&(other % self))
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: SnfScalar> Mat<T> {
    fn from_int(m: &IntMatrix) -> Mat<T> {
        Mat {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&x| T::from_i64(x)).collect(),
        }
    }

    fn identity(n: usize) -> Mat<T> {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::from_i64(1);
        }
        Mat {
            rows: n,
            cols: n,
            data,
        }
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_target -= q * row_source`, from column `from` on.
    fn row_sub_mul(&mut self, target: usize, source: usize, q: &T, from: usize) -> Option<()> {
        for j in from..self.cols {
            let x = self.at(source, j).clone();
            if !x.is_zero() {
                let v = self.at(target, j).sub_mul(q, &x)?;
                self.data[target * self.cols + j] = v;
            }
        }
        Some(())
    }

    /// `col_target -= q * col_source`.
    fn col_sub_mul(&mut self, target: usize, source: usize, q: &T) -> Option<()> {
        for i in 0..self.rows {
            let x = self.at(i, source).clone();
            if !x.is_zero() {
                let v = self.at(i, target).sub_mul(q, &x)?;
                self.data[i * self.cols + target] = v;
            }
        }
        Some(())
    }

    fn row_add(&mut self, target: usize, source: usize, from: usize) -> Option<()> {
        for j in from..self.cols {
            let x = self.at(source, j).clone();
            if !x.is_zero() {
                let v = self.at(target, j).add(&x)?;
                self.data[target * self.cols + j] = v;
            }
        }
        Some(())
    }

    fn negate_row(&mut self, row: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.at(row, j).neg()?;
            self.data[row * self.cols + j] = v;
        }
        Some(())
    }
}

/// Diagonalizes `m` by unimodular row/column operations; returns the nonzero
/// invariant factors (a divisibility chain). Column operations are mirrored
/// on `right` when present, so its trailing columns end up spanning the
/// kernel. Returns `None` on arithmetic overflow.
fn snf_diag<T: SnfScalar>(m: &mut Mat<T>, mut right: Option<&mut Mat<T>>) -> Option<Vec<T>> {
    let bound = m.rows.min(m.cols);
    let mut t = 0;
    while t < bound {
        // pivot: minimal absolute value in the submatrix, early exit on units
        let mut pivot: Option<(usize, usize, T)> = None;
        'search: for i in t..m.rows {
            for j in t..m.cols {
                let x = m.at(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs()?;
                match &pivot {
                    Some((_, _, best)) if *best <= a => {}
                    _ => {
                        let unit = a == T::from_i64(1);
                        pivot = Some((i, j, a));
                        if unit {
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            break;
        };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        if let Some(r) = right.as_deref_mut() {
            r.swap_cols(t, pj);
        }

        'position: loop {
            // clear column t then row t; remainders become smaller pivots
            'reduce: loop {
                let mut swapped = false;
                for i in t + 1..m.rows {
                    if m.at(i, t).is_zero() {
                        continue;
                    }
                    let q = m.at(i, t).div_nearest(m.at(t, t))?;
                    if !q.is_zero() {
                        m.row_sub_mul(i, t, &q, t)?;
                    }
                    if !m.at(i, t).is_zero() {
                        m.swap_rows(t, i);
                        swapped = true;
                    }
                }
                if swapped {
                    continue 'reduce;
                }
                for j in t + 1..m.cols {
                    if m.at(t, j).is_zero() {
                        continue;
                    }
                    let q = m.at(t, j).div_nearest(m.at(t, t))?;
                    if !q.is_zero() {
                        m.col_sub_mul(j, t, &q)?;
                        if let Some(r) = right.as_deref_mut() {
                            r.col_sub_mul(j, t, &q)?;
                        }
                    }
                    if !m.at(t, j).is_zero() {
                        m.swap_cols(t, j);
                        if let Some(r) = right.as_deref_mut() {
                            r.swap_cols(t, j);
                        }
                        swapped = true;
                    }
                }
                if !swapped {
                    break 'reduce;
                }
            }
            // the pivot must divide the rest of the submatrix
            let p = m.at(t, t).clone();
            if p.is_unit() {
                break 'position;
            }
            let mut offender = None;
            'scan: for i in t + 1..m.rows {
                for j in t + 1..m.cols {
                    if !p.divides(m.at(i, j)) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    m.row_add(t, i, t + 1)?;
                }
                None => break 'position,
            }
        }
        if m.at(t, t).is_negative() {
            m.negate_row(t)?;
        }
        t += 1;
    }
    Some((0..t).map(|i| m.at(i, i).clone()).collect())
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix, exact.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut fast: Mat<i64> = Mat::from_int(m);
    if let Some(d) = snf_diag(&mut fast, None) {
        return d.into_iter().map(BigInt::from).collect();
    }
    let mut big: Mat<BigInt> = Mat::from_int(m);
    snf_diag(&mut big, None).expect("BigInt elimination cannot overflow")
}

/// Rank over the integers (equivalently over the rationals).
pub fn matrix_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).len()
}

/// Basis of the integer kernel of `m` (columns of the right transform past
/// the rank).
pub(crate) fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let run_big = |m: &IntMatrix| {
        let mut mat: Mat<BigInt> = Mat::from_int(m);
        let mut right: Mat<BigInt> = Mat::identity(m.cols);
        let d = snf_diag(&mut mat, Some(&mut right)).expect("BigInt elimination cannot overflow");
        (d.len(), right)
    };
    let mut fast: Mat<i64> = Mat::from_int(m);
    let mut right: Mat<i64> = Mat::identity(m.cols);
    let (rank, cols_big): (usize, Vec<Vec<BigInt>>) = match snf_diag(&mut fast, Some(&mut right)) {
        Some(d) => (
            d.len(),
            (0..m.cols)
                .map(|j| (0..m.cols).map(|i| BigInt::from(*right.at(i, j))).collect())
                .collect(),
        ),
        None => {
            let (rank, right) = run_big(m);
            (
                rank,
                (0..m.cols)
                    .map(|j| (0..m.cols).map(|i| right.at(i, j).clone()).collect())
                    .collect(),
            )
        }
    };
    cols_big[rank..].to_vec()
}

fn bigint_rank(rows: usize, cols: usize, data: Vec<BigInt>) -> usize {
    let mut mat = Mat { rows, cols, data };
    snf_diag(&mut mat, None)
        .expect("BigInt elimination cannot overflow")
        .len()
}

// ---------------------------------------------------------------------------
// Chain complexes and homology
// ---------------------------------------------------------------------------

/// Boundary matrices of a cubical complex, indexed by the deterministic cell
/// order; `boundary(q)` maps q-cells to (q-1)-cells.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    cell_counts: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplexData {
    /// Assembles a chain complex from raw matrices, checking shapes and
    /// that consecutive boundaries compose to zero.
    pub fn from_parts(
        cell_counts: Vec<usize>,
        boundaries: Vec<IntMatrix>,
    ) -> Result<ChainComplexData> {
        if boundaries.len() + 1 != cell_counts.len().max(1) {
            return Err(Error::RankMismatch {
                expected: cell_counts.len().saturating_sub(1),
                got: boundaries.len(),
            });
        }
        for (q, m) in boundaries.iter().enumerate() {
            if m.rows() != cell_counts[q] || m.cols() != cell_counts[q + 1] {
                return Err(Error::RankMismatch {
                    expected: cell_counts[q],
                    got: m.rows(),
                });
            }
        }
        let data = ChainComplexData {
            cell_counts,
            boundaries,
        };
        data.check_square_zero()?;
        Ok(data)
    }

    /// Cell counts per dimension, `0..=dim`.
    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    pub fn dim(&self) -> usize {
        self.cell_counts.len().saturating_sub(1)
    }

    /// The matrix of `d_q`, for `1 <= q <= dim`.
    pub fn boundary(&self, q: usize) -> Option<&IntMatrix> {
        if q == 0 {
            return None;
        }
        self.boundaries.get(q - 1)
    }

    fn check_square_zero(&self) -> Result<()> {
        for q in 2..self.cell_counts.len() {
            let upper = &self.boundaries[q - 1];
            let lower = &self.boundaries[q - 2];
            let mut acc = vec![0i64; lower.rows()];
            for col in 0..upper.cols() {
                acc.iter_mut().for_each(|x| *x = 0);
                for mid in 0..upper.rows() {
                    let s = upper.get(mid, col);
                    if s == 0 {
                        continue;
                    }
                    for row in 0..lower.rows() {
                        acc[row] += s * lower.get(row, mid);
                    }
                }
                if acc.iter().any(|&x| x != 0) {
                    return Err(Error::BoundarySquare { dim: q });
                }
            }
        }
        Ok(())
    }
}

/// Builds the cubical boundary matrices of a face-closed complex and checks
/// that consecutive boundaries compose to zero.
pub fn boundary_matrices(cx: &CubicalComplex) -> Result<ChainComplexData> {
    let Some(dim) = cx.dim() else {
        return Ok(ChainComplexData {
            cell_counts: Vec::new(),
            boundaries: Vec::new(),
        });
    };
    let cell_counts: Vec<usize> = (0..=dim).map(|q| cx.num_cells(q)).collect();
    let mut boundaries = Vec::with_capacity(dim);
    for q in 1..=dim {
        let mut m = IntMatrix::zeros(cx.num_cells(q - 1), cx.num_cells(q));
        for (j, cube) in cx.cells(q).iter().enumerate() {
            for (face, sign) in cube.boundary_faces() {
                let i = cx
                    .index_of(q - 1, &face)
                    .ok_or_else(|| Error::NotFaceClosed {
                        face: face.to_string(),
                        cube: cube.to_string(),
                    })?;
                m.set(i, j, sign);
            }
        }
        boundaries.push(m);
    }
    let data = ChainComplexData {
        cell_counts,
        boundaries,
    };
    data.check_square_zero()?;
    Ok(data)
}

/// Betti numbers and torsion (invariant factors > 1) of integral homology,
/// per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologySummary {
    pub fn empty() -> HomologySummary {
        HomologySummary {
            betti: Vec::new(),
            torsion: Vec::new(),
        }
    }
}

/// `betti_q = #q-cells - rank d_q - rank d_{q+1}`; `torsion_q` from the
/// invariant factors of `d_{q+1}`.
pub fn homology(data: &ChainComplexData) -> HomologySummary {
    if data.cell_counts.is_empty() {
        return HomologySummary::empty();
    }
    let dim = data.dim();
    let factors: Vec<Vec<BigInt>> = (1..=dim)
        .map(|q| smith_normal_form(data.boundary(q).unwrap()))
        .collect();
    let rank = |q: usize| -> usize {
        if q == 0 || q > dim {
            0
        } else {
            factors[q - 1].len()
        }
    };
    let one = BigInt::from(1);
    let betti = (0..=dim)
        .map(|q| data.cell_counts[q] - rank(q) - rank(q + 1))
        .collect();
    let torsion = (0..=dim)
        .map(|q| {
            if q == dim {
                Vec::new()
            } else {
                factors[q].iter().filter(|d| **d > one).cloned().collect()
            }
        })
        .collect();
    HomologySummary { betti, torsion }
}

// ---------------------------------------------------------------------------
// Connected components
// ---------------------------------------------------------------------------

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Component id per vertex (ids ordered by each component's smallest vertex)
/// and the number of components.
pub(crate) fn component_ids(cx: &CubicalComplex) -> (Vec<usize>, usize) {
    let n = cx.num_cells(0);
    let mut uf = UnionFind::new(n);
    for edge in cx.cells(1) {
        let v = edge.dirs().iter().next().expect("edge has a direction");
        let a = cx
            .index_of(0, &crate::lattice::Cube::vertex(edge.base().clone()))
            .expect("face-closed");
        let b = cx
            .index_of(0, &crate::lattice::Cube::vertex(edge.base().stepped(v, 1)))
            .expect("face-closed");
        uf.union(a, b);
    }
    let mut ids = vec![usize::MAX; n];
    let mut next = 0;
    let mut root_to_id: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
        let root = uf.find(i);
        let id = *root_to_id.entry(root).or_insert_with(|| {
            let id = next;
            next += 1;
            id
        });
        ids[i] = id;
    }
    (ids, next)
}

/// Partition of the vertex set into connected components, each sorted, the
/// list ordered by smallest member.
pub fn connected_components(cx: &CubicalComplex) -> Vec<Vec<LatticePoint>> {
    let (ids, count) = component_ids(cx);
    let mut comps: Vec<Vec<LatticePoint>> = vec![Vec::new(); count];
    for (i, cube) in cx.cells(0).iter().enumerate() {
        comps[ids[i]].push(cube.base().clone());
    }
    comps
}

// ---------------------------------------------------------------------------
// Induced maps
// ---------------------------------------------------------------------------

/// Rank over the rationals of `H_q(sub) -> H_q(sup)` induced by inclusion
/// (equal to the rank of the restriction on degree-q cohomology).
pub fn induced_map_rank(sub: &CubicalComplex, sup: &CubicalComplex, q: usize) -> Result<usize> {
    if sub.rank() != sup.rank() {
        return Err(Error::RankMismatch {
            expected: sup.rank(),
            got: sub.rank(),
        });
    }
    if let Some(cube) = sub.is_subcomplex_of(sup) {
        return Err(Error::NotSubcomplex {
            cube: cube.to_string(),
        });
    }
    if sub.num_cells(q) == 0 {
        return Ok(0);
    }
    if q == 0 {
        let sub_comps = connected_components(sub);
        let (sup_ids, _) = component_ids(sup);
        let mut hit: Vec<usize> = sub_comps
            .iter()
            .map(|comp| {
                let idx = sup
                    .index_of(0, &crate::lattice::Cube::vertex(comp[0].clone()))
                    .expect("validated subcomplex");
                sup_ids[idx]
            })
            .collect();
        hit.sort_unstable();
        hit.dedup();
        return Ok(hit.len());
    }

    // kernel of d_q in the subcomplex, pushed into the ambient q-chains
    let sub_data = boundary_matrices(sub)?;
    let kernel = match sub_data.boundary(q) {
        Some(bq) => kernel_basis(bq),
        None => return Ok(0),
    };
    if kernel.is_empty() {
        return Ok(0);
    }
    let index_map: Vec<usize> = sub
        .cells(q)
        .iter()
        .map(|cube| sup.index_of(q, cube).expect("validated subcomplex"))
        .collect();

    let n_sup = sup.num_cells(q);
    let b_cols = sup.num_cells(q + 1);
    let sup_data = boundary_matrices(sup)?;
    let b = sup_data.boundary(q + 1);

    let k = kernel.len();
    let total_cols = k + b_cols;
    let mut data = vec![<BigInt as Zero>::zero(); n_sup * total_cols];
    for (col, vec) in kernel.iter().enumerate() {
        for (sub_row, value) in vec.iter().enumerate() {
            if !Zero::is_zero(value) {
                data[index_map[sub_row] * total_cols + col] = value.clone();
            }
        }
    }
    let mut b_data = vec![<BigInt as Zero>::zero(); n_sup * b_cols];
    if let Some(bm) = b {
        for i in 0..n_sup {
            for j in 0..b_cols {
                let v = bm.get(i, j);
                data[i * total_cols + k + j] = BigInt::from(v);
                b_data[i * b_cols + j] = BigInt::from(v);
            }
        }
    }
    let rank_joint = bigint_rank(n_sup, total_cols, data);
    let rank_b = if b_cols == 0 {
        0
    } else {
        bigint_rank(n_sup, b_cols, b_data)
    };
    Ok(rank_joint - rank_b)
}
