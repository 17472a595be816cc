//! Graded roots: trees with integer-graded vertices recording the component
//! tower of `{S_n}`, their defining axioms, the associated degree-0 module,
//! serialization, and grading-preserving isomorphism.

use serde::{Deserialize, Serialize};

use crate::cohomology::{region_cubes, Degree0Tower, Region};
use crate::error::{Error, Result};
use crate::homology::connected_components;
use crate::lattice::{CubicalComplex, LatticePoint, WeightModel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVertex {
    pub chi: i64,
    /// Lexicographically smallest lattice point of the component the vertex
    /// stands for; gives stable identities across runs.
    pub representative: LatticePoint,
}

/// A graded root, materialized up to `saturation`; from that level upward
/// the root is a single infinite ray (the truncation marker).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRoot {
    vertices: Vec<RootVertex>,
    /// Index pairs `(lower, upper)` with `chi(upper) = chi(lower) + 1` on
    /// well-formed roots.
    edges: Vec<(usize, usize)>,
    saturation: i64,
}

impl GradedRoot {
    /// Assembles a root from raw parts without validation; pair with
    /// [`validate_root`].
    pub fn from_parts(
        vertices: Vec<RootVertex>,
        edges: Vec<(usize, usize)>,
        saturation: i64,
    ) -> GradedRoot {
        GradedRoot {
            vertices,
            edges,
            saturation,
        }
    }

    pub fn vertices(&self) -> &[RootVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn saturation(&self) -> i64 {
        self.saturation
    }

    pub fn min_chi(&self) -> Option<i64> {
        self.vertices.iter().map(|v| v.chi).min()
    }

    pub fn fiber_size(&self, n: i64) -> usize {
        if n > self.saturation {
            1
        } else {
            self.vertices.iter().filter(|v| v.chi == n).count()
        }
    }

    /// Vertices with no edge to the level below: the local minima of the
    /// grading.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| {
                !self.edges.iter().any(|&(lo, hi)| {
                    (hi == i && self.vertices[lo].chi < self.vertices[i].chi)
                        || (lo == i && self.vertices[hi].chi < self.vertices[i].chi)
                })
            })
            .collect()
    }
}

/// Builds the graded root of a weight model over a region: one vertex per
/// `(level, connected component of S_n)`, an edge whenever a component is
/// contained in one at the next level.
pub fn build_root(model: &WeightModel, region: &Region) -> Result<GradedRoot> {
    let rank = model.rect().rank();
    let per_dim = region_cubes(model, region)?;
    let min_level = per_dim[0]
        .iter()
        .map(|(_, w)| *w)
        .min()
        .ok_or(Error::EmptyRegion)?;
    let saturation = per_dim
        .iter()
        .flat_map(|cells| cells.iter().map(|(_, w)| *w))
        .max()
        .unwrap();

    let mut vertices: Vec<RootVertex> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut prev: Vec<Vec<LatticePoint>> = Vec::new();
    let mut prev_offset = 0usize;

    for n in min_level..=saturation {
        let skeleton = CubicalComplex::from_sorted(
            rank,
            vec![
                per_dim[0]
                    .iter()
                    .filter(|(_, w)| *w <= n)
                    .map(|(c, _)| c.clone())
                    .collect(),
                per_dim
                    .get(1)
                    .map(|edges| {
                        edges
                            .iter()
                            .filter(|(_, w)| *w <= n)
                            .map(|(c, _)| c.clone())
                            .collect()
                    })
                    .unwrap_or_default(),
            ],
        );
        let comps = connected_components(&skeleton);
        let offset = vertices.len();
        for comp in &comps {
            vertices.push(RootVertex {
                chi: n,
                representative: comp[0].clone(),
            });
        }
        if n > min_level {
            for (i, comp) in prev.iter().enumerate() {
                let rep = &comp[0];
                let j = comps
                    .iter()
                    .position(|c| c.binary_search(rep).is_ok())
                    .expect("sublevels are nested");
                edges.push((prev_offset + i, offset + j));
            }
        }
        prev = comps;
        prev_offset = offset;
    }

    Ok(GradedRoot {
        vertices,
        edges,
        saturation,
    })
}

#[derive(Clone, Debug)]
pub struct RootViolation {
    /// Which requirement failed: "a" (edge gradings differ by one), "b" (no
    /// upward merging), "c" (single ray at the top), or "tree".
    pub axiom: String,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct RootReport {
    pub pass: bool,
    pub violation: Option<RootViolation>,
}

fn fail(axiom: &str, witness: String) -> RootReport {
    RootReport {
        pass: false,
        violation: Some(RootViolation {
            axiom: axiom.to_string(),
            witness,
        }),
    }
}

/// Checks the graded-root axioms on the materialized part.
pub fn validate_root(root: &GradedRoot) -> RootReport {
    let n = root.vertices.len();
    if n == 0 {
        return fail("c", "root has no vertices".to_string());
    }
    for &(a, b) in &root.edges {
        if a >= n || b >= n {
            return fail("tree", format!("edge ({a},{b}) out of range"));
        }
        let (ca, cb) = (root.vertices[a].chi, root.vertices[b].chi);
        if (ca - cb).abs() != 1 {
            return fail(
                "a",
                format!("edge ({a},{b}) joins gradings {ca} and {cb}"),
            );
        }
    }
    // no vertex has two distinct neighbors that both sit at or above it
    for u in 0..n {
        let mut up_neighbors = Vec::new();
        for &(a, b) in &root.edges {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if root.vertices[other].chi >= root.vertices[u].chi {
                up_neighbors.push(other);
            }
        }
        up_neighbors.sort_unstable();
        up_neighbors.dedup();
        if up_neighbors.len() >= 2 {
            return fail(
                "b",
                format!(
                    "vertex {u} (chi={}) merges upward into {} and {}",
                    root.vertices[u].chi, up_neighbors[0], up_neighbors[1]
                ),
            );
        }
    }
    // connected with |E| = |V| - 1: a finite tree carrying the ray
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edge_count = 0usize;
    for &(a, b) in &root.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return fail("tree", format!("edge ({a},{b}) closes a cycle"));
        }
        parent[ra] = rb;
        edge_count += 1;
    }
    if edge_count + 1 != n {
        return fail("tree", format!("{n} vertices but {edge_count} edges"));
    }
    // single vertex at the saturation level and nothing above it
    let top: Vec<usize> = (0..n)
        .filter(|&i| root.vertices[i].chi == root.saturation)
        .collect();
    if top.len() != 1 {
        return fail(
            "c",
            format!(
                "{} vertices at the saturation level {}",
                top.len(),
                root.saturation
            ),
        );
    }
    if let Some(i) = (0..n).find(|&i| root.vertices[i].chi > root.saturation) {
        return fail(
            "c",
            format!(
                "vertex {i} has chi={} above the saturation level {}",
                root.vertices[i].chi, root.saturation
            ),
        );
    }
    RootReport {
        pass: true,
        violation: None,
    }
}

/// Degree-0 module of the root: per-level rank is the fiber size, the
/// U-map is the parent map; split as `T^+_{2 min chi}` plus the reduced
/// part.
pub fn root_module(root: &GradedRoot) -> Result<Degree0Tower> {
    let report = validate_root(root);
    if let Some(v) = report.violation {
        return Err(Error::InvalidRoot {
            axiom: v.axiom,
            witness: v.witness,
        });
    }
    let min = root.min_chi().unwrap();
    let ranks: Vec<usize> = (min..=root.saturation)
        .map(|n| root.fiber_size(n))
        .collect();
    let u_ranks: Vec<usize> = (min..root.saturation)
        .map(|n| {
            let mut parents: Vec<usize> = root
                .edges
                .iter()
                .filter_map(|&(a, b)| {
                    let (lo, hi) = if root.vertices[a].chi < root.vertices[b].chi {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    (root.vertices[lo].chi == n).then_some(hi)
                })
                .collect();
            parents.sort_unstable();
            parents.dedup();
            parents.len()
        })
        .collect();
    Ok(Degree0Tower {
        min_level: min,
        stable_from: root.saturation,
        ranks,
        u_ranks,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootFormat {
    Dot,
    Json,
}

#[derive(Serialize, Deserialize)]
struct RootJsonVertex {
    id: usize,
    chi: i64,
    representative: LatticePoint,
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    min_chi: i64,
    saturation: i64,
    vertices: Vec<RootJsonVertex>,
    edges: Vec<(usize, usize)>,
}

/// Deterministic serialization; DOT ranks vertices by their grading and
/// marks the infinite ray above the saturation level.
pub fn export_root(root: &GradedRoot, format: RootFormat) -> String {
    match format {
        RootFormat::Json => {
            let json = RootJson {
                min_chi: root.min_chi().unwrap_or(root.saturation),
                saturation: root.saturation,
                vertices: root
                    .vertices
                    .iter()
                    .enumerate()
                    .map(|(id, v)| RootJsonVertex {
                        id,
                        chi: v.chi,
                        representative: v.representative.clone(),
                    })
                    .collect(),
                edges: root.edges.clone(),
            };
            serde_json::to_string(&json).expect("root serializes")
        }
        RootFormat::Dot => {
            let mut out = String::from("digraph graded_root {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n");
            for (i, v) in root.vertices.iter().enumerate() {
                out.push_str(&format!(
                    "  v{i} [label=\"{} @ {}\"];\n",
                    v.chi, v.representative
                ));
            }
            let min = root.min_chi().unwrap_or(root.saturation);
            for n in min..=root.saturation {
                let fiber: Vec<String> = root
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.chi == n)
                    .map(|(i, _)| format!("v{i};"))
                    .collect();
                out.push_str(&format!("  {{ rank=same; {} }}\n", fiber.join(" ")));
            }
            for &(a, b) in &root.edges {
                out.push_str(&format!("  v{a} -> v{b};\n"));
            }
            if let Some(top) = root
                .vertices
                .iter()
                .position(|v| v.chi == root.saturation)
            {
                out.push_str("  ray [shape=none, label=\"...\"];\n");
                out.push_str(&format!("  v{top} -> ray;\n"));
            }
            out.push_str("}\n");
            out
        }
    }
}

/// Reads back a JSON export; the result is re-sorted into canonical vertex
/// order so export/import round-trips built roots exactly.
pub fn import_root(text: &str) -> Result<GradedRoot> {
    let json: RootJson = serde_json::from_str(text).map_err(|e| Error::RootParse {
        reason: e.to_string(),
    })?;
    let n = json.vertices.len();
    for v in &json.vertices {
        if v.id >= n {
            return Err(Error::RootParse {
                reason: format!("vertex id {} out of range", v.id),
            });
        }
    }
    for &(a, b) in &json.edges {
        if a >= n || b >= n {
            return Err(Error::RootParse {
                reason: format!("edge ({a},{b}) out of range"),
            });
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let by_id: Vec<&RootJsonVertex> = {
        let mut v: Vec<&RootJsonVertex> = json.vertices.iter().collect();
        v.sort_by_key(|v| v.id);
        v
    };
    order.sort_by(|&a, &b| {
        (by_id[a].chi, &by_id[a].representative).cmp(&(by_id[b].chi, &by_id[b].representative))
    });
    let mut position = vec![0usize; n];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        position[old_idx] = new_idx;
    }
    let vertices = order
        .iter()
        .map(|&i| RootVertex {
            chi: by_id[i].chi,
            representative: by_id[i].representative.clone(),
        })
        .collect();
    let mut edges: Vec<(usize, usize)> = json
        .edges
        .iter()
        .map(|&(a, b)| (position[a], position[b]))
        .collect();
    edges.sort_unstable();
    Ok(GradedRoot {
        vertices,
        edges,
        saturation: json.saturation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct CanonEnc {
    chi: i64,
    children: Vec<CanonEnc>,
}

fn encode(root: &GradedRoot, vertex: usize, down: &[Vec<usize>]) -> CanonEnc {
    let mut children: Vec<CanonEnc> = down[vertex]
        .iter()
        .map(|&c| encode(root, c, down))
        .collect();
    children.sort();
    CanonEnc {
        chi: root.vertices[vertex].chi,
        children,
    }
}

fn canonical(root: &GradedRoot) -> Option<CanonEnc> {
    if !validate_root(root).pass {
        return None;
    }
    // trim the top bamboo: levels above the last branching are the ray
    let min = root.min_chi().unwrap();
    let last_multi = (min..=root.saturation)
        .rev()
        .find(|&n| root.fiber_size(n) > 1);
    let top_level = last_multi.map_or(min, |n| n + 1);
    let keep: Vec<usize> = (0..root.vertices.len())
        .filter(|&i| root.vertices[i].chi <= top_level)
        .collect();
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); root.vertices.len()];
    for &(a, b) in &root.edges {
        let (lo, hi) = if root.vertices[a].chi < root.vertices[b].chi {
            (a, b)
        } else {
            (b, a)
        };
        if root.vertices[hi].chi <= top_level {
            down[hi].push(lo);
        }
    }
    let top = *keep
        .iter()
        .find(|&&i| root.vertices[i].chi == top_level)
        .expect("validated roots have a vertex at every level");
    Some(encode(root, top, &down))
}

/// Grading-preserving isomorphism of graded roots (the infinite rays are
/// compared implicitly through the trimmed canonical encodings).
pub fn isomorphic(a: &GradedRoot, b: &GradedRoot) -> bool {
    match (canonical(a), canonical(b)) {
        (Some(x), Some(y)) => x == y,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Rectangle, WeightModel};

    fn full(model: &WeightModel) -> GradedRoot {
        build_root(model, &Region::Full).unwrap()
    }

    #[test]
    fn constant_model_gives_bamboo() {
        let rect = Rectangle::new(LatticePoint::new(vec![2, 2])).unwrap();
        let model = WeightModel::constant(rect, 0);
        let root = full(&model);
        assert_eq!(root.vertices().len(), 1);
        assert_eq!(root.saturation(), 0);
        assert!(validate_root(&root).pass);
        let tower = root_module(&root).unwrap();
        assert_eq!(tower.min_level, 0);
        assert_eq!(tower.total_reduced_rank(), 0);
        assert_eq!(tower.eu(), 0);
    }

    #[test]
    fn square_table_root_shape() {
        let rect = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        let model = WeightModel::new(rect, vec![0, 1, 1, 0]).unwrap();
        let root = full(&model);
        assert_eq!(root.fiber_size(0), 2);
        assert_eq!(root.fiber_size(1), 1);
        assert_eq!(root.saturation(), 1);
        assert!(validate_root(&root).pass);
        let tower = root_module(&root).unwrap();
        assert_eq!(tower.tplus_degree(), 0);
        assert_eq!(tower.reduced_ranks(), vec![1, 0]);
        assert_eq!(tower.u_ranks, vec![1]);
    }

    #[test]
    fn three_leaf_root() {
        let model = WeightModel::rank_one(vec![0, 1, 0, 0, 0, 0, 0, 1, 0]).unwrap();
        let root = full(&model);
        assert_eq!(root.fiber_size(0), 3);
        assert_eq!(root.fiber_size(1), 1);
        assert_eq!(root.leaves().len(), 3);
        let tower = root_module(&root).unwrap();
        assert_eq!(tower.total_reduced_rank(), 2);
    }

    #[test]
    fn hand_built_violations() {
        let v = |chi| RootVertex {
            chi,
            representative: LatticePoint::new(vec![0]),
        };
        // grading gap of two
        let gap = GradedRoot::from_parts(vec![v(0), v(2)], vec![(0, 1)], 2);
        let report = validate_root(&gap);
        assert!(!report.pass);
        assert_eq!(report.violation.unwrap().axiom, "a");
        // upward merging: one vertex with two parents
        let merge = GradedRoot::from_parts(
            vec![v(0), v(1), v(1), v(2)],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            2,
        );
        let report = validate_root(&merge);
        assert!(!report.pass);
        assert_eq!(report.violation.unwrap().axiom, "b");
        // two vertices at the saturation level
        let wide_top = GradedRoot::from_parts(vec![v(0), v(0)], vec![], 0);
        let report = validate_root(&wide_top);
        assert!(!report.pass);
        let axiom = report.violation.unwrap().axiom;
        assert!(axiom == "c" || axiom == "tree");
    }

    #[test]
    fn module_of_invalid_root_is_error() {
        let v = |chi| RootVertex {
            chi,
            representative: LatticePoint::new(vec![0]),
        };
        let gap = GradedRoot::from_parts(vec![v(0), v(2)], vec![(0, 1)], 2);
        assert!(matches!(
            root_module(&gap),
            Err(Error::InvalidRoot { .. })
        ));
    }

    #[test]
    fn export_import_round_trip() {
        let rect = Rectangle::new(LatticePoint::new(vec![1, 1])).unwrap();
        let model = WeightModel::new(rect, vec![0, 1, 1, 0]).unwrap();
        let root = full(&model);
        let json = export_root(&root, RootFormat::Json);
        let back = import_root(&json).unwrap();
        assert_eq!(root, back);
        assert!(json.contains("\"saturation\":1"));
    }

    #[test]
    fn dot_export_mentions_every_vertex() {
        let model = WeightModel::rank_one(vec![0, 1, 0]).unwrap();
        let root = full(&model);
        let dot = export_root(&root, RootFormat::Dot);
        assert!(dot.contains("v0"));
        assert!(dot.contains("rank=same"));
        assert!(dot.contains("ray"));
        assert!(dot.starts_with("digraph graded_root {"));
    }

    #[test]
    fn isomorphism_ignores_representatives_and_tail() {
        let a = full(&WeightModel::rank_one(vec![0, 1, 0]).unwrap());
        let b = full(&WeightModel::rank_one(vec![0, 1, 1, 1, 1, 1, 0]).unwrap());
        assert!(isomorphic(&a, &b));
        let c = full(&WeightModel::rank_one(vec![0, 1, 0, 0, 0, 0, 0, 1, 0]).unwrap());
        assert!(!isomorphic(&a, &c));
        // bamboos of different minimal grading are not isomorphic
        let d = full(&WeightModel::rank_one(vec![0]).unwrap());
        let e = full(&WeightModel::rank_one(vec![1]).unwrap());
        assert!(!isomorphic(&d, &e));
    }
}
