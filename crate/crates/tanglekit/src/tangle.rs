//! Tangles: an order threshold plus an oriented-separation membership.
//! Membership is predicate-backed with optional materialization, since the
//! natural and extended tangles are defined by predicates and only
//! desk-scale graphs are ever materialized.
//!
//! The axioms checked here, for a tangle of order θ:
//!   (T1) for every separation of order < θ, at least one orientation is a
//!        member;
//!   (T2) no three members (A1,B1), (A2,B2), (A3,B3) have
//!        G[A1] ∪ G[A2] ∪ G[A3] = G;
//!   (T3) no member has side_a = V(G).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::grid::GridGraph;
use crate::separation::{enumerate_separations_threaded, is_separation, Separation};

type MembershipFn = dyn Fn(&Separation) -> bool + Send + Sync;

#[derive(Clone)]
enum Membership {
    Explicit(BTreeSet<Separation>),
    Predicate(Arc<MembershipFn>),
}

/// A tangle of order `order_threshold` on `ground`. `contains` answers
/// membership for separations of order below the threshold; nothing of
/// higher order is ever a member.
#[derive(Clone)]
pub struct Tangle {
    ground: Graph,
    order_threshold: usize,
    membership: Membership,
}

impl std::fmt::Debug for Tangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match &self.membership {
            Membership::Explicit(m) => format!("explicit({} members)", m.len()),
            Membership::Predicate(_) => "predicate".to_string(),
        };
        write!(f, "Tangle(order={}, {kind})", self.order_threshold)
    }
}

impl Tangle {
    pub fn from_predicate(
        ground: Graph,
        order_threshold: usize,
        predicate: Arc<MembershipFn>,
    ) -> Tangle {
        Tangle { ground, order_threshold, membership: Membership::Predicate(predicate) }
    }

    pub fn from_separations(
        ground: Graph,
        order_threshold: usize,
        members: BTreeSet<Separation>,
    ) -> Tangle {
        Tangle { ground, order_threshold, membership: Membership::Explicit(members) }
    }

    /// The natural tangle of a grid: all separations of order < r whose
    /// second side contains a cross.
    pub fn natural(w: &GridGraph) -> Tangle {
        let grid = w.clone();
        Tangle {
            ground: w.graph().clone(),
            order_threshold: w.r(),
            membership: Membership::Predicate(Arc::new(move |s: &Separation| {
                grid.contains_cross(s.side_b())
            })),
        }
    }

    pub fn ground(&self) -> &Graph {
        &self.ground
    }

    pub fn order_threshold(&self) -> usize {
        self.order_threshold
    }

    pub fn contains(&self, s: &Separation) -> bool {
        if s.order() >= self.order_threshold {
            return false;
        }
        match &self.membership {
            Membership::Explicit(members) => members.contains(s),
            Membership::Predicate(p) => p(s),
        }
    }

    pub fn explicit_members(&self) -> Option<&BTreeSet<Separation>> {
        match &self.membership {
            Membership::Explicit(m) => Some(m),
            Membership::Predicate(_) => None,
        }
    }

    /// Explicit-set copy of this tangle, restricted to members of order
    /// <= max_order (defaults to every order below the threshold).
    pub fn materialize(&self, max_order: Option<usize>, cap: usize) -> Result<Tangle> {
        let bound = max_order
            .unwrap_or(self.order_threshold.saturating_sub(1))
            .min(self.order_threshold.saturating_sub(1));
        let members: BTreeSet<Separation> = enumerate_separations_threaded(
            &self.ground,
            bound,
            cap,
            1,
        )?
        .into_iter()
        .filter(|s| self.contains(s))
        .collect();
        Ok(Tangle::from_separations(self.ground.clone(), self.order_threshold, members))
    }
}

/// Membership in the natural tangle of a grid, validating the input.
/// True iff order(s) < r and side_b contains a cross.
pub fn natural_membership(w: &GridGraph, s: &Separation) -> Result<bool> {
    if !is_separation(w.graph(), s.side_a(), s.side_b()) {
        return Err(Error::NotASeparation);
    }
    Ok(s.order() < w.r() && w.contains_cross(s.side_b()))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomViolation {
    /// An explicit member is not a valid separation of the ground graph,
    /// or its order reaches the threshold.
    MemberInvalid(Separation),
    /// Neither orientation of this separation is a member.
    T1(Separation),
    /// Three members whose small sides cover the whole graph.
    T2(Separation, Separation, Separation),
    /// A member whose first side is the full vertex set.
    T3(Separation),
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn ids(s: &VertexSet) -> String {
            s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            AxiomViolation::MemberInvalid(s) => {
                write!(f, "member-invalid A={} B={}", ids(s.side_a()), ids(s.side_b()))
            }
            AxiomViolation::T1(s) => {
                write!(f, "T1 unoriented A={} B={}", ids(s.side_a()), ids(s.side_b()))
            }
            AxiomViolation::T2(s1, s2, s3) => write!(
                f,
                "T2 small sides cover G: A1={} A2={} A3={}",
                ids(s1.side_a()),
                ids(s2.side_a()),
                ids(s3.side_a())
            ),
            AxiomViolation::T3(s) => write!(f, "T3 member with A=V: A={}", ids(s.side_a())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub order_threshold: usize,
    /// Number of separations of order below the threshold that were examined.
    pub checked: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&AxiomViolation> {
        self.violations.first()
    }
}

/// Exhaustive axiom check over all separations of order below the tangle's
/// threshold. Violations come back sorted by canonical key, so the first
/// one is deterministic for any thread count.
pub fn check_axioms(g: &Graph, t: &Tangle, cap: usize, threads: usize) -> Result<AxiomReport> {
    let theta = t.order_threshold;
    let all = if theta == 0 {
        Vec::new()
    } else {
        enumerate_separations_threaded(g, theta - 1, cap, threads)?
    };
    let mut violations: BTreeSet<AxiomViolation> = BTreeSet::new();

    if let Some(members) = t.explicit_members() {
        for m in members {
            if m.order() >= theta || !is_separation(g, m.side_a(), m.side_b()) {
                violations.insert(AxiomViolation::MemberInvalid(m.clone()));
            }
        }
    }

    let membership: Vec<bool> = exec::map_chunked(&all, threads, |s| t.contains(s));
    for (s, &member) in all.iter().zip(&membership) {
        if !member && !t.contains(&s.reversed()) {
            let canonical = (*s).clone().min(s.reversed());
            violations.insert(AxiomViolation::T1(canonical));
        }
        if member && s.side_a().len() == g.vertex_count() {
            violations.insert(AxiomViolation::T3(s.clone()));
        }
    }

    let members: Vec<&Separation> =
        all.iter().zip(&membership).filter(|(_, &m)| m).map(|(s, _)| s).collect();
    violations.extend(t2_violations(g, &members, threads)?);

    Ok(AxiomReport {
        order_threshold: theta,
        checked: all.len(),
        violations: violations.into_iter().collect(),
    })
}

/// Scans member triples (with repetition) for three small sides covering
/// the graph. Vertex and edge coverage are tracked as bitmasks, which
/// bounds the instances this can serve.
fn t2_violations(
    g: &Graph,
    members: &[&Separation],
    threads: usize,
) -> Result<Vec<AxiomViolation>> {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if n > 64 || edges.len() > 128 {
        return Err(Error::InstanceTooLarge { size: n.max(edges.len()), cap: 128 });
    }
    let full_vertices: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let full_edges: u128 = if edges.len() == 128 { u128::MAX } else { (1u128 << edges.len()) - 1 };

    let masks: Vec<(u64, u128)> = members
        .iter()
        .map(|s| {
            let vmask = s.side_a().iter().fold(0u64, |m, &v| m | (1 << v));
            let emask = edges
                .iter()
                .enumerate()
                .filter(|(_, (u, v))| s.side_a().contains(u) && s.side_a().contains(v))
                .fold(0u128, |m, (i, _)| m | (1 << i));
            (vmask, emask)
        })
        .collect();

    let indices: Vec<usize> = (0..members.len()).collect();
    let found = exec::map_chunked(&indices, threads, |&i| {
        let mut out = Vec::new();
        let (vi, ei) = masks[i];
        for j in i..members.len() {
            let (vj, ej) = masks[j];
            let vij = vi | vj;
            let eij = ei | ej;
            for k in j..members.len() {
                let (vk, ek) = masks[k];
                if vij | vk == full_vertices && eij | ek == full_edges {
                    out.push(AxiomViolation::T2(
                        members[i].clone(),
                        members[j].clone(),
                        members[k].clone(),
                    ));
                }
            }
        }
        out
    });
    Ok(found.into_iter().flatten().collect())
}

/// Lists separations of order below the threshold with no orientation in
/// the tangle, and those with both orientations in it. Both lists empty
/// means the tangle orients every such separation exactly once.
pub fn orientation_partition(
    g: &Graph,
    t: &Tangle,
    cap: usize,
    threads: usize,
) -> Result<(Vec<Separation>, Vec<Separation>)> {
    let theta = t.order_threshold();
    let all = if theta == 0 {
        Vec::new()
    } else {
        enumerate_separations_threaded(g, theta - 1, cap, threads)?
    };
    let mut missing = Vec::new();
    let mut doubled = Vec::new();
    for s in &all {
        let rev = s.reversed();
        if *s > rev {
            continue; // handle each unordered pair once (self-reverse pairs pass once)
        }
        match (t.contains(s), t.contains(&rev)) {
            (false, false) => missing.push(s.clone()),
            (true, true) if *s != rev => doubled.push(s.clone()),
            _ => {}
        }
    }
    Ok((missing, doubled))
}

/// The truncation T \ apex of a tangle, living on the compacted graph
/// g - apex. Members are exactly the separations (C, D) of g - apex of
/// order < θ - |apex| whose both-sides augmentation (C ∪ apex, D ∪ apex)
/// is a member of the original tangle.
pub struct TruncatedTangle {
    pub subgraph: Subgraph,
    pub tangle: Tangle,
}

pub fn truncate(g: &Graph, t: &Tangle, apex: &VertexSet) -> Result<TruncatedTangle> {
    if apex.len() >= t.order_threshold() {
        return Err(Error::ApexTooLarge { apex: apex.len(), order: t.order_threshold() });
    }
    let keep: VertexSet = g.vertices().filter(|v| !apex.contains(v)).collect();
    let subgraph = Subgraph::induced(g, &keep)?;
    let to_host: Vec<usize> = subgraph.host_vertices().to_vec();
    let parent = t.clone();
    let apex = apex.clone();
    let threshold = t.order_threshold() - apex.len();
    let predicate = Arc::new(move |s: &Separation| {
        let lift = |side: &VertexSet| -> VertexSet {
            side.iter().map(|&l| to_host[l]).chain(apex.iter().copied()).collect()
        };
        parent.contains(&Separation::from_sides(lift(s.side_a()), lift(s.side_b())))
    });
    let tangle = Tangle::from_predicate(subgraph.graph().clone(), threshold, predicate);
    Ok(TruncatedTangle { subgraph, tangle })
}
