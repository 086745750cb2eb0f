//! Combinatorial orientable embeddings via rotation systems: face tracing
//! and Euler genus. Unsigned rotations cannot represent non-orientable
//! surfaces, so the genus computed here is an upper-bound witness over
//! orientable embeddings only.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::grid::GridGraph;

/// A directed edge (tail, head).
pub type Dart = (usize, usize);

/// Per-vertex cyclic order of neighbors.
#[derive(Debug, Clone)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Each vertex's list must be a permutation of its neighbor set.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<RotationSystem> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotation lists for {} vertices",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        for (v, order) in rotation.iter().enumerate() {
            let as_set: VertexSet = order.iter().copied().collect();
            if as_set.len() != order.len() || &as_set != graph.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(RotationSystem { graph, rotation })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Neighbor following `prev` in the cyclic order at `v`.
    fn successor(&self, v: usize, prev: usize) -> usize {
        let order = &self.rotation[v];
        let pos = order.iter().position(|&w| w == prev).expect("prev is a neighbor of v");
        order[(pos + 1) % order.len()]
    }

    /// The planar rotation of a grid: neighbors clockwise (up, right,
    /// down, left).
    pub fn grid_planar(w: &GridGraph) -> RotationSystem {
        let r = w.r();
        let rotation = (0..r * r)
            .map(|id| {
                let (i, j) = w.coord(id);
                let mut order = Vec::new();
                if i > 1 {
                    order.push(w.vertex_id(i - 1, j));
                }
                if j < r {
                    order.push(w.vertex_id(i, j + 1));
                }
                if i < r {
                    order.push(w.vertex_id(i + 1, j));
                }
                if j > 1 {
                    order.push(w.vertex_id(i, j - 1));
                }
                order
            })
            .collect();
        RotationSystem::new(w.graph().clone(), rotation).expect("grid rotation is a permutation")
    }
}

/// Faces of an embedded connected graph, each a closed dart walk. Every
/// dart appears in exactly one face, exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<Dart>>,
}

impl FaceSet {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.len()).collect()
    }

    /// Boundary walk of a face as a vertex cycle (dart tails).
    pub fn vertex_walk(&self, face: usize) -> Vec<usize> {
        self.faces[face].iter().map(|&(u, _)| u).collect()
    }
}

/// Traces the faces of a rotation system: the successor of dart (u, v) is
/// (v, w) where w follows u in the rotation at v. Faces are listed by
/// ascending smallest dart, so output is deterministic.
pub fn trace_faces(rs: &RotationSystem) -> Result<FaceSet> {
    let g = rs.graph();
    if g.vertex_count() == 0 {
        return Err(Error::TooSmall { need: 1, got: 0 });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if g.edge_count() == 0 {
        // a single vertex embeds with one face
        return Ok(FaceSet { faces: vec![Vec::new()] });
    }
    let mut darts: Vec<Dart> = Vec::with_capacity(2 * g.edge_count());
    for (u, v) in g.edges() {
        darts.push((u, v));
        darts.push((v, u));
    }
    darts.sort();
    let mut visited: std::collections::BTreeSet<Dart> = std::collections::BTreeSet::new();
    let mut faces = Vec::new();
    for &start in &darts {
        if visited.contains(&start) {
            continue;
        }
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            walk.push(dart);
            visited.insert(dart);
            let (u, v) = dart;
            dart = (v, rs.successor(v, u));
            if dart == start {
                break;
            }
        }
        faces.push(walk);
    }
    Ok(FaceSet { faces })
}

/// Euler genus of the embedding: ε = 2 - |V| + |E| - l where l is the
/// number of traced faces. For a rotation system of a connected graph ε
/// is even and non-negative.
pub fn euler_genus(rs: &RotationSystem) -> Result<usize> {
    let faces = trace_faces(rs)?;
    let g = rs.graph();
    genus_from_face_count(g, faces.face_count())
}

pub(crate) fn genus_from_face_count(g: &Graph, l: usize) -> Result<usize> {
    let eps = 2 + g.edge_count() as i64 - g.vertex_count() as i64 - l as i64;
    assert!(eps >= 0 && eps % 2 == 0, "face tracing broke the Euler identity: eps = {eps}");
    Ok(eps as usize)
}

/// Minimum Euler genus over every rotation system of g, by exhaustive
/// enumeration of cyclic neighbor orders. The search space has
/// prod_v (deg(v) - 1)! rotation systems; instances beyond `budget`
/// systems are refused.
pub fn min_euler_genus_exhaustive(g: &Graph, budget: u64) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::TooSmall { need: 1, got: 0 });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let mut space: u64 = 1;
    for v in g.vertices() {
        let d = g.degree(v).max(1) as u64;
        space = space.saturating_mul(factorial(d - 1));
    }
    if space > budget {
        return Err(Error::InstanceTooLarge { size: space as usize, cap: budget as usize });
    }

    // cyclic orders: first neighbor fixed, tails permuted
    let tails: Vec<Vec<Vec<usize>>> = g
        .vertices()
        .map(|v| {
            let neighbors: Vec<usize> = g.neighbors(v).iter().copied().collect();
            if neighbors.is_empty() {
                return vec![Vec::new()];
            }
            permutations(&neighbors[1..])
                .into_iter()
                .map(|tail| {
                    let mut order = vec![neighbors[0]];
                    order.extend(tail);
                    order
                })
                .collect()
        })
        .collect();

    let mut index = vec![0usize; g.vertex_count()];
    let mut best = usize::MAX;
    loop {
        let rotation: Vec<Vec<usize>> =
            index.iter().enumerate().map(|(v, &i)| tails[v][i].clone()).collect();
        let rs = RotationSystem::new(g.clone(), rotation)?;
        best = best.min(euler_genus(&rs)?);
        if best == 0 {
            return Ok(0);
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return Ok(best);
            }
            index[pos] += 1;
            if index[pos] < tails[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Checks the dart bookkeeping of a face set against its graph: every
/// dart in exactly one face exactly once, and total length 2|E|.
pub fn dart_partition_holds(g: &Graph, faces: &FaceSet) -> bool {
    let mut seen: std::collections::BTreeSet<Dart> = std::collections::BTreeSet::new();
    let mut total = 0usize;
    for face in &faces.faces {
        for &dart in face {
            total += 1;
            if !seen.insert(dart) {
                return false;
            }
            let (u, v) = dart;
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    total == 2 * g.edge_count()
}
