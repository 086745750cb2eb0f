//! Small named graphs and composite certificate fixtures used by the
//! verification harness, the test suites and the documentation.

use std::collections::{BTreeMap, BTreeSet};

use crate::constants::{compute_constants, ConstantsProfile};
use crate::graph::{Graph, Path, VertexSet};
use crate::grid::GridGraph;
use crate::minor::MinorModel;
use crate::nearembed::{
    DiscAssignment, DiscDirection, EmbeddedPart, LargeVortexCert, NearEmbeddingCertificate,
    SmallVortexCert,
};
use crate::surface::{trace_faces, RotationSystem};
use crate::vortex::{Comb, Vortex, VortexDecomposition};

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::build(n, edges).expect("complete graph edges are in range")
}

/// Path graph on n vertices: 0-1-...-(n-1).
pub fn path_graph(n: usize) -> Graph {
    Graph::build(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
}

/// Complete bipartite graph K_{m,n}: left side 0..m, right side m..m+n.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::build(m + n, edges).expect("bipartite edges are in range")
}

/// The Petersen graph: outer cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    edges.extend((0..5).map(|i| (i, 5 + i)));
    Graph::build(10, edges).expect("petersen edges are in range")
}

/// Cycle graph on n >= 3 vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::build(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are in range")
}

/// The caterpillar vortex: inner path u_1..u_4 (ids 0..3), society
/// w_1..w_4 (ids 4..7) pendant on the u_i, bags
/// X_i = {w_{i-1}, w_i, u_{i-1}, u_i} with w_0 := w_1 and u_0 dropped.
/// Linked with q = 1; the composed linkage is the inner chain u_1..u_3
/// (u_4 lies beyond the last adhesion set).
pub struct CaterpillarFixture {
    pub vortex: Vortex,
    pub decomposition: VortexDecomposition,
    /// Spine u_1..u_4 with teeth paths u_i - w_i; teeth are the society
    /// in order.
    pub comb: Comb,
    pub expected_linkage: Vec<Path>,
}

pub fn caterpillar() -> CaterpillarFixture {
    caterpillar_on_graph(caterpillar_graph())
}

/// The caterpillar with the inner edge u_2 u_3 removed; bag 3 then has no
/// disjoint path system.
pub fn caterpillar_with_deleted_inner_edge() -> CaterpillarFixture {
    let edges: Vec<(usize, usize)> = caterpillar_graph()
        .edges()
        .filter(|&(u, v)| (u, v) != (1, 2))
        .collect();
    caterpillar_on_graph(Graph::build(8, edges).unwrap())
}

fn caterpillar_graph() -> Graph {
    // u_i = i-1 for the inner chain, w_i = 3 + i for the society
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    edges.extend((0..4).map(|i| (i, 4 + i)));
    Graph::build(8, edges).unwrap()
}

fn caterpillar_on_graph(graph: Graph) -> CaterpillarFixture {
    let society = vec![4, 5, 6, 7];
    let vortex = Vortex::new(graph, society).unwrap();
    let bags = vec![
        VertexSet::from([4, 0]),
        VertexSet::from([4, 5, 0, 1]),
        VertexSet::from([5, 6, 1, 2]),
        VertexSet::from([6, 7, 2, 3]),
    ];
    let decomposition = VortexDecomposition { bags };
    let comb = Comb {
        spine: Path::new(vec![0, 1, 2, 3]).unwrap(),
        teeth_paths: (0..4).map(|i| Path::new(vec![i, 4 + i]).unwrap()).collect(),
    };
    let expected_linkage = vec![Path::new(vec![0, 1, 2]).unwrap()];
    CaterpillarFixture { vortex, decomposition, comb, expected_linkage }
}

/// The 3-grid with a pendant vertex attached at corner (1,1): the host for
/// the extended-tangle fixtures. Vertices 0..8 are the grid, 9 is the
/// pendant.
pub fn pendant_w3() -> Graph {
    let w = crate::grid::GridGraph::new(3);
    let mut edges: Vec<(usize, usize)> = w.graph().edges().collect();
    edges.push((0, 9));
    Graph::build(10, edges).unwrap()
}

/// Edge set helper for fixture construction.
pub fn edge_set(edges: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect()
}

/// A rotation system of K_5 with Euler genus 2, the minimum over all
/// rotation systems of K_5 (a toroidal embedding).
pub fn k5_rotation() -> RotationSystem {
    let rotation = vec![
        vec![1, 4, 2, 3],
        vec![0, 2, 3, 4],
        vec![0, 3, 1, 4],
        vec![0, 1, 2, 4],
        vec![0, 1, 2, 3],
    ];
    RotationSystem::new(complete(5), rotation).unwrap()
}

fn grid_rotation_map(w: &GridGraph) -> BTreeMap<usize, Vec<usize>> {
    let rs = RotationSystem::grid_planar(w);
    w.graph().vertices().map(|v| (v, rs.rotation(v).to_vec())).collect()
}

/// The r-grid as a planar embedded part of itself: no apex, no vortices.
pub fn trivial_grid_certificate(r: usize) -> (Graph, NearEmbeddingCertificate) {
    let w = GridGraph::new(r);
    let cert = NearEmbeddingCertificate {
        apex: VertexSet::new(),
        g0: EmbeddedPart {
            vertices: w.graph().vertex_set(),
            edges: w.graph().edge_set().clone(),
            rotation: grid_rotation_map(&w),
        },
        large_vortices: Vec::new(),
        small_vortices: Vec::new(),
        discs: BTreeMap::new(),
    };
    (w.graph().clone(), cert)
}

/// A grid with a caterpillar vortex and a small vortex attached along its
/// outer face, plus everything needed to exercise the near-embedding
/// checks end to end.
pub struct CompositeFixture {
    pub graph: Graph,
    pub cert: NearEmbeddingCertificate,
    pub grid: GridGraph,
    /// Singleton-branch-set model of the grid in the host.
    pub model: MinorModel,
    pub profile: ConstantsProfile,
}

/// Composite fixture on the r-grid (r >= 3): g0 = W_r with its planar
/// rotation; one large vortex whose society is the first four outer-walk
/// vertices, carrying the caterpillar chain u_1..u_4, per-bag comb
/// connectors t_2..t_4, a q = 1 linkage and a trivial-teeth comb; one
/// small vortex on three further outer-walk vertices.
///
/// Host ids: 0..r²-1 the grid; r²..r²+3 the chain u_1..u_4;
/// r²+4..r²+6 the connectors; r²+7 the small vortex's inner vertex.
pub fn composite(r: usize) -> CompositeFixture {
    assert!(r >= 3, "composite fixture needs r >= 3");
    let grid = GridGraph::new(r);
    let base = grid.graph().vertex_count();
    let u = [base, base + 1, base + 2, base + 3];
    let t = [base + 4, base + 5, base + 6];
    let p = base + 7;

    // outer-walk landmarks: the outer face of the planar rotation
    let outer = {
        let rs = RotationSystem::grid_planar(&grid);
        let faces = trace_faces(&rs).unwrap();
        let long = (0..faces.face_count())
            .max_by_key(|&i| faces.faces[i].len())
            .unwrap();
        faces.vertex_walk(long)
    };
    let large_society = [outer[0], outer[1], outer[2], outer[3]];
    let small_society = [outer[6], outer[5], outer[4]];

    let mut edges: Vec<(usize, usize)> = grid.graph().edges().collect();
    let chain = [(u[0], u[1]), (u[1], u[2]), (u[2], u[3])];
    let pendants: Vec<(usize, usize)> = (0..4).map(|i| (large_society[i], u[i])).collect();
    let comb_edges = [
        (large_society[0], t[0]),
        (t[0], large_society[1]),
        (large_society[1], t[1]),
        (t[1], large_society[2]),
        (large_society[2], t[2]),
        (t[2], large_society[3]),
    ];
    let small_edges: Vec<(usize, usize)> = small_society.iter().map(|&w| (w, p)).collect();
    edges.extend(chain);
    edges.extend(pendants.iter().copied());
    edges.extend(comb_edges);
    edges.extend(small_edges.iter().copied());
    let graph = Graph::build(p + 1, edges).unwrap();

    let large = LargeVortexCert {
        vertices: large_society.iter().copied().chain(u).chain(t).collect(),
        edges: edge_set(chain.into_iter().chain(pendants).chain(comb_edges)),
        society: large_society.to_vec(),
        bags: vec![
            VertexSet::from([large_society[0], u[0]]),
            VertexSet::from([large_society[0], large_society[1], u[0], u[1], t[0]]),
            VertexSet::from([large_society[1], large_society[2], u[1], u[2], t[1]]),
            VertexSet::from([large_society[2], large_society[3], u[2], u[3], t[2]]),
        ],
        linkage: vec![vec![u[0], u[1], u[2]]],
        comb_spine: vec![
            large_society[0],
            t[0],
            large_society[1],
            t[1],
            large_society[2],
            t[2],
            large_society[3],
        ],
        comb_teeth: large_society.iter().map(|&w| vec![w]).collect(),
    };
    let small = SmallVortexCert {
        vertices: small_society.iter().copied().chain([p]).collect(),
        edges: edge_set(small_edges),
        society: small_society.to_vec(),
    };

    // disc assignments on the outer face: the large society reads forward
    // from the walk's first dart, the small society reads backward from
    // the dart at walk position 6
    let cert_partial = NearEmbeddingCertificate {
        apex: VertexSet::new(),
        g0: EmbeddedPart {
            vertices: grid.graph().vertex_set(),
            edges: grid.graph().edge_set().clone(),
            rotation: grid_rotation_map(&grid),
        },
        large_vortices: vec![large],
        small_vortices: vec![small],
        discs: BTreeMap::new(),
    };
    let walks = crate::nearembed::g0_face_walks(&graph, &cert_partial).unwrap();
    let outer_face = (0..walks.len()).max_by_key(|&i| walks[i].len()).unwrap();
    let walk = &walks[outer_face];
    let mut cert = cert_partial;
    cert.discs.insert(
        0,
        DiscAssignment { face: outer_face, start: walk[0], direction: DiscDirection::Forward },
    );
    cert.discs.insert(
        1,
        DiscAssignment { face: outer_face, start: walk[6], direction: DiscDirection::Backward },
    );

    let model = MinorModel::singleton_embedding(graph.clone(), grid.graph().clone());
    let profile = compute_constants(1, 1, 1, 2, 5, 1).unwrap();
    CompositeFixture { graph, cert, grid, model, profile }
}

/// The composite fixture with its small vortex swollen to contain all of
/// the host except the first chain vertex; the extended tangle then has
/// members whose large side hides inside the vortex.
pub fn composite_with_swollen_small_vortex(r: usize) -> CompositeFixture {
    let mut fx = composite(r);
    let u1 = fx.grid.graph().vertex_count();
    fx.cert.small_vortices[0].vertices =
        fx.graph.vertices().filter(|&v| v != u1).collect();
    fx
}
