//! Minor models (branch sets), the separations they induce in the pattern,
//! extension of a pattern tangle to the host, and a brute-force minor
//! search used only as an oracle and fixture generator.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separation::{is_separation, Separation};
use crate::tangle::Tangle;
use crate::{DEFAULT_MINOR_HOST_CAP, DEFAULT_MINOR_PATTERN_CAP};

/// A minor model of `pattern` in `host`: one nonempty, connected branch
/// set per pattern vertex, pairwise disjoint, with every pattern edge
/// realized by some host edge between the two branch sets. Branch sets
/// need not cover the host.
#[derive(Debug, Clone)]
pub struct MinorModel {
    host: Graph,
    pattern: Graph,
    branch_sets: BTreeMap<usize, VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelViolation {
    MissingBranchSet { pattern_vertex: usize },
    EmptyBranchSet { pattern_vertex: usize },
    BranchVertexOutOfRange { pattern_vertex: usize, vertex: usize },
    OverlappingBranchSets { first: usize, second: usize, vertex: usize },
    DisconnectedBranchSet { pattern_vertex: usize },
    MissingPatternEdge { from: usize, to: usize },
}

impl std::fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelViolation::MissingBranchSet { pattern_vertex } => {
                write!(f, "MissingBranchSet pattern-vertex={pattern_vertex}")
            }
            ModelViolation::EmptyBranchSet { pattern_vertex } => {
                write!(f, "EmptyBranchSet pattern-vertex={pattern_vertex}")
            }
            ModelViolation::BranchVertexOutOfRange { pattern_vertex, vertex } => {
                write!(f, "BranchVertexOutOfRange pattern-vertex={pattern_vertex} vertex={vertex}")
            }
            ModelViolation::OverlappingBranchSets { first, second, vertex } => {
                write!(f, "OverlappingBranchSets {first} and {second} share vertex {vertex}")
            }
            ModelViolation::DisconnectedBranchSet { pattern_vertex } => {
                write!(f, "DisconnectedBranchSet pattern-vertex={pattern_vertex}")
            }
            ModelViolation::MissingPatternEdge { from, to } => {
                write!(f, "MissingPatternEdge {from}-{to}")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ModelReport {
    pub violations: Vec<ModelViolation>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&ModelViolation> {
        self.violations.first()
    }
}

impl MinorModel {
    pub fn new(host: Graph, pattern: Graph, branch_sets: BTreeMap<usize, VertexSet>) -> MinorModel {
        MinorModel { host, pattern, branch_sets }
    }

    /// The identity model of g in g: singleton branch sets.
    pub fn identity(g: &Graph) -> MinorModel {
        let branch_sets = g.vertices().map(|v| (v, VertexSet::from([v]))).collect();
        MinorModel { host: g.clone(), pattern: g.clone(), branch_sets }
    }

    /// Singleton model of `pattern` inside a larger `host` whose first
    /// |V(pattern)| vertices carry the pattern's edges.
    pub fn singleton_embedding(host: Graph, pattern: Graph) -> MinorModel {
        let branch_sets = pattern.vertices().map(|v| (v, VertexSet::from([v]))).collect();
        MinorModel { host, pattern, branch_sets }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn branch_sets(&self) -> &BTreeMap<usize, VertexSet> {
        &self.branch_sets
    }

    pub fn branch_set(&self, pattern_vertex: usize) -> Option<&VertexSet> {
        self.branch_sets.get(&pattern_vertex)
    }

    /// Number of branch sets meeting the given host vertex set.
    pub fn branch_sets_intersecting(&self, side: &VertexSet) -> usize {
        self.branch_sets.values().filter(|bs| bs.iter().any(|v| side.contains(v))).count()
    }
}

pub fn validate_model(m: &MinorModel) -> ModelReport {
    let mut violations = Vec::new();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();

    for h in m.pattern.vertices() {
        match m.branch_sets.get(&h) {
            None => violations.push(ModelViolation::MissingBranchSet { pattern_vertex: h }),
            Some(bs) if bs.is_empty() => {
                violations.push(ModelViolation::EmptyBranchSet { pattern_vertex: h })
            }
            Some(bs) => {
                for &v in bs {
                    if !m.host.contains_vertex(v) {
                        violations.push(ModelViolation::BranchVertexOutOfRange {
                            pattern_vertex: h,
                            vertex: v,
                        });
                    } else if let Some(&other) = owner.get(&v) {
                        violations.push(ModelViolation::OverlappingBranchSets {
                            first: other,
                            second: h,
                            vertex: v,
                        });
                    } else {
                        owner.insert(v, h);
                    }
                }
                let in_range: VertexSet =
                    bs.iter().copied().filter(|&v| m.host.contains_vertex(v)).collect();
                if !in_range.is_empty() && !is_connected_within(&m.host, &in_range) {
                    violations.push(ModelViolation::DisconnectedBranchSet { pattern_vertex: h });
                }
            }
        }
    }

    for (h1, h2) in m.pattern.edges() {
        let (Some(b1), Some(b2)) = (m.branch_sets.get(&h1), m.branch_sets.get(&h2)) else {
            continue; // already reported as missing
        };
        let realized =
            b1.iter().any(|&u| m.host.contains_vertex(u) && m.host.neighbors(u).iter().any(|v| b2.contains(v)));
        if !realized {
            violations.push(ModelViolation::MissingPatternEdge { from: h1, to: h2 });
        }
    }

    violations.sort();
    violations.dedup();
    ModelReport { violations }
}

fn is_connected_within(g: &Graph, set: &VertexSet) -> bool {
    let Some(&start) = set.iter().next() else {
        return true;
    };
    let mut seen = VertexSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if set.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// The separation of the pattern induced by a host separation:
/// A' = {h : V_h ∩ A ≠ ∅}, B' = {h : V_h ∩ B ≠ ∅}. Always a valid
/// separation of the pattern, of order at most ord(A, B).
pub fn induced_separation(m: &MinorModel, s: &Separation) -> Result<Separation> {
    let report = validate_model(m);
    if let Some(first) = report.first_violation() {
        return Err(Error::InvalidModel(first.to_string()));
    }
    if !is_separation(&m.host, s.side_a(), s.side_b()) {
        return Err(Error::NotASeparation);
    }
    Ok(induced_separation_unchecked(m, s))
}

pub(crate) fn induced_separation_unchecked(m: &MinorModel, s: &Separation) -> Separation {
    let touch = |side: &VertexSet| -> VertexSet {
        m.branch_sets
            .iter()
            .filter(|(_, bs)| bs.iter().any(|v| side.contains(v)))
            .map(|(&h, _)| h)
            .collect()
    };
    Separation::from_sides(touch(s.side_a()), touch(s.side_b()))
}

/// Membership of a host separation in the extension of a pattern tangle:
/// order below the pattern tangle's threshold and induced separation a
/// member.
pub fn extended_membership(m: &MinorModel, pattern_tangle: &Tangle, s: &Separation) -> Result<bool> {
    if s.order() >= pattern_tangle.order_threshold() {
        return Ok(false);
    }
    let induced = induced_separation(m, s)?;
    Ok(pattern_tangle.contains(&induced))
}

/// The extension of a pattern tangle to the host, with the same order
/// threshold. Validates the model once; the returned tangle's predicate
/// then evaluates inducement directly.
pub fn extension_tangle(m: &MinorModel, pattern_tangle: &Tangle) -> Result<Tangle> {
    let report = validate_model(m);
    if let Some(first) = report.first_violation() {
        return Err(Error::InvalidModel(first.to_string()));
    }
    let model = m.clone();
    let inner = pattern_tangle.clone();
    let predicate = Arc::new(move |s: &Separation| {
        inner.contains(&induced_separation_unchecked(&model, s))
    });
    Ok(Tangle::from_predicate(m.host.clone(), pattern_tangle.order_threshold(), predicate))
}

#[derive(Debug, Clone, Copy)]
pub struct MinorSearchCaps {
    pub host_cap: usize,
    pub pattern_cap: usize,
}

impl Default for MinorSearchCaps {
    fn default() -> Self {
        MinorSearchCaps { host_cap: DEFAULT_MINOR_HOST_CAP, pattern_cap: DEFAULT_MINOR_PATTERN_CAP }
    }
}

/// Exhaustive search for a minor model of `pattern` in `host`. Returns a
/// model passing [`validate_model`], or None when no model exists. Callers
/// must not assume a canonical model, only validity.
pub fn find_minor_model(
    host: &Graph,
    pattern: &Graph,
    caps: MinorSearchCaps,
) -> Result<Option<MinorModel>> {
    let n = host.vertex_count();
    let k = pattern.vertex_count();
    if n > caps.host_cap {
        return Err(Error::InstanceTooLarge { size: n, cap: caps.host_cap });
    }
    if k > caps.pattern_cap {
        return Err(Error::InstanceTooLarge { size: k, cap: caps.pattern_cap });
    }
    if k == 0 {
        return Ok(Some(MinorModel::new(host.clone(), pattern.clone(), BTreeMap::new())));
    }
    if k > n {
        return Ok(None);
    }

    let adj: Vec<u64> = (0..n)
        .map(|v| host.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let mut search = Search {
        adj: &adj,
        pattern_edges: &pattern_edges,
        n,
        branch: vec![0u64; k],
    };
    if search.assign(0) {
        let branch_sets = search
            .branch
            .iter()
            .enumerate()
            .map(|(h, &mask)| (h, (0..n).filter(|&v| mask & (1 << v) != 0).collect()))
            .collect();
        let model = MinorModel::new(host.clone(), pattern.clone(), branch_sets);
        debug_assert!(validate_model(&model).passed());
        return Ok(Some(model));
    }
    Ok(None)
}

struct Search<'a> {
    adj: &'a [u64],
    pattern_edges: &'a [(usize, usize)],
    n: usize,
    branch: Vec<u64>,
}

impl Search<'_> {
    fn neighborhood(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out
    }

    fn connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask & mask.wrapping_neg();
        let mut reach = start;
        loop {
            let grown = (reach | self.neighborhood(reach)) & mask;
            if grown == reach {
                return reach == mask;
            }
            reach = grown;
        }
    }

    fn edge_realized(&self, h1: usize, h2: usize) -> bool {
        self.neighborhood(self.branch[h1]) & self.branch[h2] != 0
    }

    fn viable(&self, next: usize) -> bool {
        let future: u64 = if next >= self.n { 0 } else { !((1u64 << next) - 1) & ((1u64 << self.n) - 1) };
        let empty = self.branch.iter().filter(|&&m| m == 0).count();
        if empty > self.n - next {
            return false;
        }
        for &mask in &self.branch {
            if mask == 0 {
                continue;
            }
            let frozen = self.neighborhood(mask) & future == 0;
            if frozen && !self.connected(mask) {
                return false;
            }
        }
        for &(h1, h2) in self.pattern_edges {
            let (b1, b2) = (self.branch[h1], self.branch[h2]);
            if b1 == 0 || b2 == 0 {
                continue;
            }
            if !self.edge_realized(h1, h2)
                && self.neighborhood(b1) & future == 0
                && self.neighborhood(b2) & future == 0
            {
                return false;
            }
        }
        true
    }

    fn complete(&self) -> bool {
        self.branch.iter().all(|&m| m != 0 && self.connected(m))
            && self.pattern_edges.iter().all(|&(h1, h2)| self.edge_realized(h1, h2))
    }

    fn assign(&mut self, v: usize) -> bool {
        if !self.viable(v) {
            return false;
        }
        if v == self.n {
            return self.complete();
        }
        for h in 0..self.branch.len() {
            self.branch[h] |= 1 << v;
            if self.assign(v + 1) {
                return true;
            }
            self.branch[h] &= !(1 << v);
        }
        self.assign(v + 1) // leave v unused
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridGraph;
    use crate::separation::enumerate_separations;
    use crate::tangle::{check_axioms, Tangle};
    use crate::DEFAULT_VERTEX_CAP as CAP;

    fn set(vs: impl IntoIterator<Item = usize>) -> VertexSet {
        vs.into_iter().collect()
    }

    #[test]
    fn identity_model_is_valid() {
        let w = GridGraph::new(3);
        assert!(validate_model(&MinorModel::identity(w.graph())).passed());
    }

    #[test]
    fn disconnected_branch_set_reported() {
        let host = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        let pattern = Graph::build(1, []).unwrap();
        let m = MinorModel::new(host, pattern, BTreeMap::from([(0, set([0, 2]))]));
        let report = validate_model(&m);
        assert_eq!(
            report.first_violation(),
            Some(&ModelViolation::DisconnectedBranchSet { pattern_vertex: 0 })
        );
    }

    #[test]
    fn missing_pattern_edge_reported() {
        let host = Graph::build(2, []).unwrap();
        let pattern = Graph::build(2, [(0, 1)]).unwrap();
        let m = MinorModel::new(
            host,
            pattern,
            BTreeMap::from([(0, set([0])), (1, set([1]))]),
        );
        let report = validate_model(&m);
        assert_eq!(
            report.first_violation(),
            Some(&ModelViolation::MissingPatternEdge { from: 0, to: 1 })
        );
    }

    fn path_host_model() -> MinorModel {
        // host path 0-1-2, pattern edge a-b with V_a = {0,1}, V_b = {2}
        let host = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        let pattern = Graph::build(2, [(0, 1)]).unwrap();
        MinorModel::new(host, pattern, BTreeMap::from([(0, set([0, 1])), (1, set([2]))]))
    }

    #[test]
    fn induced_separation_examples() {
        let m = path_host_model();
        let s = Separation::from_sides(set([0, 1]), set([1, 2]));
        let induced = induced_separation(&m, &s).unwrap();
        assert_eq!(induced.side_a(), &set([0]));
        assert_eq!(induced.side_b(), &set([0, 1]));
        assert_eq!(induced.order(), 1);

        let whole = Separation::from_sides(set([]), set([0, 1, 2]));
        let induced = induced_separation(&m, &whole).unwrap();
        assert_eq!(induced.side_a(), &set([]));
        assert_eq!(induced.side_b(), &set([0, 1]));

        let both = Separation::from_sides(set([0, 1, 2]), set([0, 1, 2]));
        let induced = induced_separation(&m, &both).unwrap();
        assert_eq!(induced.side_a(), &set([0, 1]));
        assert_eq!(induced.side_b(), &set([0, 1]));
    }

    #[test]
    fn induced_order_never_grows() {
        let m = path_host_model();
        for s in enumerate_separations(m.host(), 3, CAP).unwrap() {
            let induced = induced_separation(&m, &s).unwrap();
            assert!(induced.order() <= s.order());
            assert!(is_separation(m.pattern(), induced.side_a(), induced.side_b()));
        }
    }

    #[test]
    fn extended_membership_degenerate_cases() {
        let w = GridGraph::new(2);
        let host = {
            let mut edges: Vec<(usize, usize)> = w.graph().edges().collect();
            edges.push((0, 4));
            Graph::build(5, edges).unwrap()
        };
        let m = MinorModel::singleton_embedding(host.clone(), w.graph().clone());
        let t = Tangle::natural(&w);
        let v = host.vertex_set();
        assert!(extended_membership(&m, &t, &Separation::from_sides(set([]), v.clone())).unwrap());
        assert!(!extended_membership(&m, &t, &Separation::from_sides(v, set([]))).unwrap());
    }

    #[test]
    fn extended_membership_of_pendant_separation() {
        // pendant p = 9 at corner 0 of the 3-grid; cutting it off leaves
        // a cross on the big side
        let w = GridGraph::new(3);
        let host = crate::fixtures::pendant_w3();
        let m = MinorModel::singleton_embedding(host.clone(), w.graph().clone());
        let t = Tangle::natural(&w);
        let big: VertexSet = host.vertices().filter(|&v| v != 9).collect();
        let s = Separation::from_sides(set([9, 0]), big);
        assert_eq!(s.order(), 1);
        assert!(extended_membership(&m, &t, &s).unwrap());
        assert!(!extended_membership(&m, &t, &s.reversed()).unwrap());
    }

    #[test]
    fn extension_tangle_of_pendant_grid_passes_axioms() {
        let w = GridGraph::new(2);
        let host = {
            let mut edges: Vec<(usize, usize)> = w.graph().edges().collect();
            edges.push((0, 4));
            Graph::build(5, edges).unwrap()
        };
        let m = MinorModel::singleton_embedding(host.clone(), w.graph().clone());
        let extended = extension_tangle(&m, &Tangle::natural(&w)).unwrap();
        let report = check_axioms(&host, &extended, CAP, 1).unwrap();
        assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn finds_w2_in_w3() {
        let found = find_minor_model(
            GridGraph::new(3).graph(),
            GridGraph::new(2).graph(),
            MinorSearchCaps::default(),
        )
        .unwrap();
        let model = found.expect("W_2 is a minor of W_3");
        assert!(validate_model(&model).passed());
    }

    #[test]
    fn no_k5_in_planar_w3() {
        let k5 = crate::fixtures::complete(5);
        let found =
            find_minor_model(GridGraph::new(3).graph(), &k5, MinorSearchCaps::default()).unwrap();
        assert!(found.is_none());
    }

    #[test]
    fn k1_in_k1_identity() {
        let k1 = Graph::build(1, []).unwrap();
        let model = find_minor_model(&k1, &k1, MinorSearchCaps::default()).unwrap().unwrap();
        assert_eq!(model.branch_set(0), Some(&set([0])));
    }

    /// Prune-free oracle: every assignment of host vertices to pattern
    /// vertices or "unused", validated at the leaves.
    fn naive_has_minor(host: &Graph, pattern: &Graph) -> bool {
        let n = host.vertex_count();
        let k = pattern.vertex_count();
        let mut assignment = vec![0usize; n]; // 0 = unused, 1..=k = pattern vertex
        loop {
            let branch_sets: BTreeMap<usize, VertexSet> = (0..k)
                .map(|h| {
                    (h, (0..n).filter(|&v| assignment[v] == h + 1).collect::<VertexSet>())
                })
                .collect();
            let model = MinorModel::new(host.clone(), pattern.clone(), branch_sets);
            if validate_model(&model).passed() {
                return true;
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    return false;
                }
                assignment[pos] += 1;
                if assignment[pos] <= k {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn search_agrees_with_naive_oracle_on_tiny_hosts() {
        let patterns = [
            crate::fixtures::path_graph(2),
            crate::fixtures::path_graph(3),
            crate::fixtures::complete(3),
        ];
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for edge_mask in 0u32..(1 << 6) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| edge_mask & (1 << i) != 0);
            let host = Graph::build(4, edges.map(|(_, &e)| e)).unwrap();
            for pattern in &patterns {
                let found = find_minor_model(&host, pattern, MinorSearchCaps::default())
                    .unwrap()
                    .is_some();
                assert_eq!(
                    found,
                    naive_has_minor(&host, pattern),
                    "edge_mask={edge_mask} pattern |V|={}",
                    pattern.vertex_count()
                );
            }
        }
    }

    #[test]
    fn search_respects_caps() {
        let big = Graph::build(15, []).unwrap();
        let k1 = Graph::build(1, []).unwrap();
        assert!(find_minor_model(&big, &k1, MinorSearchCaps::default()).is_err());
    }
}
