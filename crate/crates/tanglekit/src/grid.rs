//! The r-grid: vertices (i, j) with 1 <= i, j <= r, edges between vertices
//! at Manhattan distance 1. A cross is the union of one full row and one
//! full column.

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone)]
pub struct GridGraph {
    r: usize,
    graph: Graph,
}

impl GridGraph {
    /// Grid on r^2 vertices; vertex id of (i, j) is (i-1)*r + (j-1).
    pub fn new(r: usize) -> GridGraph {
        assert!(r >= 1, "grid needs r >= 1");
        let mut edges = Vec::with_capacity(2 * r * (r - 1));
        for i in 1..=r {
            for j in 1..=r {
                if j < r {
                    edges.push((grid_id(r, i, j), grid_id(r, i, j + 1)));
                }
                if i < r {
                    edges.push((grid_id(r, i, j), grid_id(r, i + 1, j)));
                }
            }
        }
        let graph = Graph::build(r * r, edges).expect("grid edges are in range");
        GridGraph { r, graph }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_id(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= self.r && 1 <= j && j <= self.r);
        grid_id(self.r, i, j)
    }

    /// (i, j) coordinates of a vertex id.
    pub fn coord(&self, id: usize) -> (usize, usize) {
        (id / self.r + 1, id % self.r + 1)
    }

    /// The i-th row {i} x {1..r}.
    pub fn row(&self, i: usize) -> VertexSet {
        (1..=self.r).map(|j| self.vertex_id(i, j)).collect()
    }

    /// The j-th column {1..r} x {j}.
    pub fn column(&self, j: usize) -> VertexSet {
        (1..=self.r).map(|i| self.vertex_id(i, j)).collect()
    }

    /// True iff some full row and some full column are both contained in
    /// `b` (their union is then a cross inside `b`).
    pub fn contains_cross(&self, b: &VertexSet) -> bool {
        let has_row = (1..=self.r).any(|i| (1..=self.r).all(|j| b.contains(&self.vertex_id(i, j))));
        if !has_row {
            return false;
        }
        (1..=self.r).any(|j| (1..=self.r).all(|i| b.contains(&self.vertex_id(i, j))))
    }
}

fn grid_id(r: usize, i: usize, j: usize) -> usize {
    (i - 1) * r + (j - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_grid() {
        let w = GridGraph::new(1);
        assert_eq!(w.graph().vertex_count(), 1);
        assert_eq!(w.graph().edge_count(), 0);
    }

    #[test]
    fn two_grid_is_four_cycle() {
        let w = GridGraph::new(2);
        assert_eq!(w.graph().vertex_count(), 4);
        assert_eq!(w.graph().edge_count(), 4);
        assert!(w.graph().vertices().all(|v| w.graph().degree(v) == 2));
    }

    #[test]
    fn grid_sizes_match_formula() {
        for r in 1..=5 {
            let w = GridGraph::new(r);
            assert_eq!(w.graph().vertex_count(), r * r);
            assert_eq!(w.graph().edge_count(), 2 * r * (r - 1));
        }
    }

    #[test]
    fn adjacency_rule() {
        let w = GridGraph::new(4);
        for u in w.graph().vertices() {
            for v in w.graph().vertices() {
                let (i, j) = w.coord(u);
                let (i2, j2) = w.coord(v);
                let dist = i.abs_diff(i2) + j.abs_diff(j2);
                assert_eq!(w.graph().has_edge(u, v), dist == 1);
            }
        }
    }

    #[test]
    fn cross_row_union_column() {
        let w = GridGraph::new(2);
        let b: VertexSet = w.row(1).union(&w.column(1)).copied().collect();
        assert!(w.contains_cross(&b));
        assert!(!w.contains_cross(&VertexSet::from([w.vertex_id(1, 2), w.vertex_id(2, 1)])));
    }

    #[test]
    fn cross_avoiding_center() {
        let w = GridGraph::new(3);
        let b: VertexSet = w.graph().vertices().filter(|&v| v != w.vertex_id(2, 2)).collect();
        assert!(w.contains_cross(&b));
    }

    #[test]
    fn cross_needs_full_vertex_budget() {
        for r in 1..=4 {
            let w = GridGraph::new(r);
            assert!(w.contains_cross(&w.graph().vertex_set()));
            // any set smaller than 2r-1 cannot hold a cross
            let small: VertexSet = (0..2 * r - 2).collect();
            assert!(!w.contains_cross(&small));
        }
    }

    #[test]
    fn cross_test_matches_pairwise_scan() {
        // oracle: scan every (row, column) pair for containment of the union
        for r in [2, 3] {
            let w = GridGraph::new(r);
            for mask in 0u32..(1 << (r * r)) {
                let b: VertexSet = (0..r * r).filter(|&v| mask & (1 << v) != 0).collect();
                let direct = (1..=r).any(|i| {
                    (1..=r).any(|j| {
                        w.row(i).union(&w.column(j)).all(|v| b.contains(v))
                    })
                });
                assert_eq!(w.contains_cross(&b), direct, "r={r} mask={mask}");
            }
        }
    }

    #[test]
    fn cross_is_monotone() {
        let w = GridGraph::new(3);
        let b: VertexSet = w.row(2).union(&w.column(3)).copied().collect();
        assert!(w.contains_cross(&b));
        let mut bigger = b.clone();
        bigger.insert(w.vertex_id(1, 1));
        assert!(w.contains_cross(&bigger));
    }
}
