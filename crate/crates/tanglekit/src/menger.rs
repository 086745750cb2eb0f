//! Maximum systems of vertex-disjoint paths. Computed by unit flow on a
//! split-vertex digraph, so the returned cardinality equals the minimum
//! vertex cut (Menger). `brute_min_separator` is the independent oracle:
//! exhaustive subset search, no flow machinery shared.

use crate::error::{Error, Result};
use crate::exec::for_each_subset_of_size;
use crate::graph::{Graph, Path, VertexSet};

struct FlowNet {
    // arcs stored as (to, paired reverse-arc index); capacity is implicit 1,
    // flow tracked as residual capacity
    to: Vec<usize>,
    residual: Vec<u8>,
    head: Vec<Vec<usize>>, // per node, arc indices in insertion order
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { to: Vec::new(), residual: Vec::new(), head: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize) {
        let idx = self.to.len();
        self.to.push(to);
        self.residual.push(1);
        self.head[from].push(idx);
        self.to.push(from);
        self.residual.push(0);
        self.head[to].push(idx + 1);
    }

    /// One BFS augmentation; true if an augmenting path was found.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred: Vec<Option<usize>> = vec![None; self.head.len()];
        let mut queue = std::collections::VecDeque::from([source]);
        let mut reached = vec![false; self.head.len()];
        reached[source] = true;
        while let Some(v) = queue.pop_front() {
            if v == sink {
                break;
            }
            for &a in &self.head[v] {
                let w = self.to[a];
                if self.residual[a] > 0 && !reached[w] {
                    reached[w] = true;
                    pred[w] = Some(a);
                    queue.push_back(w);
                }
            }
        }
        if !reached[sink] {
            return false;
        }
        let mut v = sink;
        while v != source {
            let a = pred[v].unwrap();
            self.residual[a] -= 1;
            self.residual[a ^ 1] += 1;
            v = self.to[a ^ 1];
        }
        true
    }

    fn used(&self, arc: usize) -> bool {
        // forward arcs sit at even indices; used when residual is exhausted
        self.residual[arc] == 0
    }
}

/// A maximum-cardinality set of fully vertex-disjoint `sources`-`sinks`
/// paths avoiding `forbidden`. Trivial single-vertex paths arise wherever
/// sources and sinks intersect. Returns an empty list when no path exists.
pub fn max_disjoint_paths(
    g: &Graph,
    sources: &VertexSet,
    sinks: &VertexSet,
    forbidden: &VertexSet,
) -> Vec<Path> {
    let n = g.vertex_count();
    let v_in = |v: usize| 2 * v;
    let v_out = |v: usize| 2 * v + 1;
    let super_source = 2 * n;
    let super_sink = 2 * n + 1;
    let alive = |v: usize| v < n && !forbidden.contains(&v);

    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n {
        if alive(v) {
            net.add_arc(v_in(v), v_out(v));
        }
    }
    for (u, v) in g.edges() {
        if alive(u) && alive(v) {
            net.add_arc(v_out(u), v_in(v));
            net.add_arc(v_out(v), v_in(u));
        }
    }
    for &s in sources {
        if alive(s) {
            net.add_arc(super_source, v_in(s));
        }
    }
    for &t in sinks {
        if alive(t) {
            net.add_arc(v_out(t), super_sink);
        }
    }

    while net.augment(super_source, super_sink) {}

    // Walk saturated arcs from each source. Unit vertex capacities make the
    // walk unique and terminating.
    let mut paths = Vec::new();
    let mut visited = vec![false; n];
    for &s in sources {
        if !alive(s) {
            continue;
        }
        let started = net.head[super_source]
            .iter()
            .any(|&a| net.to[a] == v_in(s) && net.used(a));
        if !started {
            continue;
        }
        let mut vertices = vec![s];
        visited[s] = true;
        let mut cur = s;
        loop {
            let mut next = None;
            for &a in &net.head[v_out(cur)] {
                if a % 2 == 1 || !net.used(a) {
                    continue;
                }
                if net.to[a] == super_sink {
                    next = Some(None);
                    break;
                }
                let w = net.to[a] / 2;
                if !visited[w] {
                    next = Some(Some(w));
                    break;
                }
            }
            match next {
                Some(None) | None => break,
                Some(Some(w)) => {
                    vertices.push(w);
                    visited[w] = true;
                    cur = w;
                }
            }
        }
        paths.push(Path::new(vertices).expect("flow walk repeats a vertex"));
    }
    paths
}

/// Minimum size of a vertex set X (which may meet sources and sinks) whose
/// removal leaves no sources-sinks path. Exhaustive subset search in
/// increasing size, independent of the flow implementation.
pub fn brute_min_separator(
    g: &Graph,
    sources: &VertexSet,
    sinks: &VertexSet,
    cap: usize,
) -> Result<usize> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::InstanceTooLarge { size: n, cap });
    }
    let source_mask = mask_of(sources);
    let sink_mask = mask_of(sinks);
    let adj: Vec<u64> = (0..n).map(|v| mask_of(g.neighbors(v))).collect();

    let separates = |x: u64| -> bool {
        let mut reach = source_mask & !x;
        loop {
            if reach & sink_mask & !x != 0 {
                return false;
            }
            let mut grown = reach;
            let mut rest = reach;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= adj[v] & !x;
            }
            if grown == reach {
                return true;
            }
            reach = grown;
        }
    };

    for k in 0..=n {
        let mut found = false;
        for_each_subset_of_size(n, k, |x| {
            if !found && separates(x) {
                found = true;
            }
        });
        if found {
            return Ok(k);
        }
    }
    Ok(n)
}

fn mask_of(set: &VertexSet) -> u64 {
    set.iter().fold(0u64, |m, &v| m | (1u64 << v))
}
