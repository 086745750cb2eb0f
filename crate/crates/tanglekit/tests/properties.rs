//! Property tests for the structural invariants: component partitions,
//! separation enumeration laws, induced-separation monotonicity, cross
//! monotonicity and face-tracing bookkeeping.

use proptest::prelude::*;

use tanglekit::graph::{Graph, VertexSet};
use tanglekit::grid::GridGraph;
use tanglekit::minor::{induced_separation, MinorModel};
use tanglekit::separation::{enumerate_separations, is_separation, Separation};
use tanglekit::surface::{dart_partition_holds, euler_genus, trace_faces, RotationSystem};
use tanglekit::{fixtures, DEFAULT_VERTEX_CAP};

/// A graph on up to `max_n` vertices with independently chosen edges.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges =
                pairs.iter().zip(&mask).filter(|(_, &keep)| keep).map(|(&e, _)| e);
            Graph::build(n, edges).unwrap()
        })
    })
}

/// A uniformly random cyclic neighbor order for every vertex.
fn arb_rotation(g: Graph) -> impl Strategy<Value = RotationSystem> {
    let shuffles: Vec<_> = g
        .vertices()
        .map(|v| {
            let neighbors: Vec<usize> = g.neighbors(v).iter().copied().collect();
            Just(neighbors).prop_shuffle()
        })
        .collect();
    shuffles.prop_map(move |rotation| RotationSystem::new(g.clone(), rotation).unwrap())
}

proptest! {
    #[test]
    fn components_partition_the_leftover_vertices(
        g in arb_graph(10),
        removed_bits in proptest::collection::vec(any::<bool>(), 10),
    ) {
        let removed: VertexSet = g
            .vertices()
            .filter(|&v| removed_bits.get(v).copied().unwrap_or(false))
            .collect();
        let parts = g.components(&removed);
        let mut seen = VertexSet::new();
        for part in &parts {
            prop_assert!(!part.is_empty());
            for &v in part {
                prop_assert!(!removed.contains(&v));
                prop_assert!(seen.insert(v), "vertex {} in two parts", v);
            }
        }
        let expected: VertexSet = g.vertices().filter(|v| !removed.contains(v)).collect();
        prop_assert_eq!(seen, expected);
        for (i, p) in parts.iter().enumerate() {
            // each part is internally connected
            let start = *p.iter().next().unwrap();
            let mut reach = VertexSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if p.contains(&w) && reach.insert(w) {
                        stack.push(w);
                    }
                }
            }
            prop_assert_eq!(&reach, p);
            for q in parts.iter().skip(i + 1) {
                for &u in p {
                    for &v in q {
                        prop_assert!(!g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn enumerated_separations_are_valid_and_orientation_closed(g in arb_graph(6)) {
        let seps = enumerate_separations(&g, 2, DEFAULT_VERTEX_CAP).unwrap();
        for s in &seps {
            prop_assert!(is_separation(&g, s.side_a(), s.side_b()));
            prop_assert!(s.order() <= 2);
            prop_assert!(seps.binary_search(&s.reversed()).is_ok());
        }
    }

    #[test]
    fn induced_separations_never_gain_order(
        seed_bits in proptest::collection::vec(any::<bool>(), 16),
        separator in proptest::collection::btree_set(0usize..10, 0..4),
    ) {
        let host = fixtures::pendant_w3();
        let w3 = GridGraph::new(3);
        let model = MinorModel::singleton_embedding(host.clone(), w3.graph().clone());
        let parts = host.components(&separator);
        let mut side_a: VertexSet = separator.clone();
        let mut side_b: VertexSet = separator;
        for (i, part) in parts.into_iter().enumerate() {
            if seed_bits.get(i).copied().unwrap_or(false) {
                side_a.extend(part);
            } else {
                side_b.extend(part);
            }
        }
        let s = Separation::from_sides(side_a, side_b);
        let induced = induced_separation(&model, &s).unwrap();
        prop_assert!(is_separation(w3.graph(), induced.side_a(), induced.side_b()));
        prop_assert!(induced.order() <= s.order());
    }

    #[test]
    fn cross_containment_is_monotone(
        r in 2usize..=4,
        bits in proptest::collection::vec(any::<bool>(), 16),
        extra in 0usize..16,
    ) {
        let w = GridGraph::new(r);
        let b: VertexSet =
            w.graph().vertices().filter(|&v| bits.get(v).copied().unwrap_or(false)).collect();
        let mut bigger = b.clone();
        bigger.insert(extra % (r * r));
        if w.contains_cross(&b) {
            prop_assert!(w.contains_cross(&bigger));
        }
        if b.len() < 2 * r - 1 {
            prop_assert!(!w.contains_cross(&b));
        }
    }

    #[test]
    fn face_tracing_bookkeeping(rs in arb_graph(7).prop_flat_map(arb_rotation)) {
        prop_assume!(rs.graph().is_connected());
        let faces = trace_faces(&rs).unwrap();
        prop_assert!(dart_partition_holds(rs.graph(), &faces));
        prop_assert_eq!(
            faces.lengths().iter().sum::<usize>(),
            2 * rs.graph().edge_count()
        );
        let genus = euler_genus(&rs).unwrap();
        prop_assert_eq!(genus % 2, 0);
    }
}
