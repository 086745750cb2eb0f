//! Simple undirected graphs on vertex ids `0..n`, connected components,
//! and compacted subgraphs with host-id translation.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Canonical vertex-set representation; all set-valued outputs use it so
/// results are deterministic.
pub type VertexSet = BTreeSet<usize>;

/// Simple undirected graph. No loops, no parallel edges. Immutable after
/// construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Duplicate edges
    /// are deduplicated; loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut adj = vec![BTreeSet::new(); n];
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
            edge_set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, adj, edges: edge_set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        (0..self.n).collect()
    }

    /// Edges as (min, max) pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v < self.n
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Partition of `V \ removed` into maximal connected sets, ordered by
    /// ascending minimum vertex id.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        for &v in removed {
            if v < self.n {
                seen[v] = true;
            }
        }
        let mut parts = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut part = VertexSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                part.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.components(&VertexSet::new()).len() <= 1
    }
}

/// A compacted copy of a subgraph of some host graph, keeping the
/// translation between local ids `0..k` and host ids.
///
/// Vortex parts of a near-embedding are edge subgraphs (their edge set is
/// prescribed, not induced), so both constructors exist.
#[derive(Debug, Clone)]
pub struct Subgraph {
    graph: Graph,
    to_host: Vec<usize>,
    from_host: BTreeMap<usize, usize>,
}

impl Subgraph {
    /// Induced subgraph on `keep`: all host edges with both ends in `keep`.
    pub fn induced(host: &Graph, keep: &VertexSet) -> Result<Subgraph> {
        let edges = host
            .edges()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .collect();
        Subgraph::from_parts(keep, &edges, host.vertex_count())
    }

    /// Subgraph with an explicit edge set (host ids). Every edge endpoint
    /// must lie in `vertices`.
    pub fn from_parts(
        vertices: &VertexSet,
        edges: &BTreeSet<(usize, usize)>,
        host_count: usize,
    ) -> Result<Subgraph> {
        let to_host: Vec<usize> = vertices.iter().copied().collect();
        if let Some(&v) = to_host.iter().find(|&&v| v >= host_count) {
            return Err(Error::VertexOutOfRange { vertex: v, count: host_count });
        }
        let from_host: BTreeMap<usize, usize> =
            to_host.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut local_edges = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            match (from_host.get(&u), from_host.get(&v)) {
                (Some(&lu), Some(&lv)) => local_edges.push((lu, lv)),
                _ => {
                    let bad = if from_host.contains_key(&u) { v } else { u };
                    return Err(Error::VertexOutOfRange { vertex: bad, count: to_host.len() });
                }
            }
        }
        let graph = Graph::build(to_host.len(), local_edges)?;
        Ok(Subgraph { graph, to_host, from_host })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn to_host(&self, local: usize) -> usize {
        self.to_host[local]
    }

    pub fn to_local(&self, host: usize) -> Option<usize> {
        self.from_host.get(&host).copied()
    }

    pub fn host_vertices(&self) -> &[usize] {
        &self.to_host
    }

    pub fn host_set(&self, locals: &VertexSet) -> VertexSet {
        locals.iter().map(|&l| self.to_host[l]).collect()
    }

    /// Translates a host-id set into local ids; None if any vertex is not
    /// part of this subgraph.
    pub fn local_set(&self, hosts: &VertexSet) -> Option<VertexSet> {
        hosts.iter().map(|h| self.to_local(*h)).collect()
    }

    pub fn local_path(&self, hosts: &[usize]) -> Option<Vec<usize>> {
        hosts.iter().map(|h| self.to_local(*h)).collect()
    }
}

/// A path given by its vertex sequence. A single vertex is a valid
/// (trivial) path. Distinctness is checked on construction; adjacency is
/// checked against a host graph via [`Path::valid_in`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty vertex sequence".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidPath(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Path(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Consecutive vertices adjacent in `g`, all ids in range.
    pub fn valid_in(&self, g: &Graph) -> bool {
        self.0.iter().all(|&v| v < g.vertex_count())
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}
