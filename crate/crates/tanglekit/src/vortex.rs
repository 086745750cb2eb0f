//! Vortices (a graph with a linearly ordered society), their
//! path-decompositions, linkedness, linkage extraction and combs.
//!
//! For a decomposition (X_1..X_n) the adhesion sets are
//! Z_i = (X_i ∩ X_{i+1}) \ Ω. Linkedness requires all Z_i of one size q,
//! q disjoint Z_{i-1}-Z_i paths inside G[X_i] - Ω for 1 < i < n, and
//! X_i ∩ Ω = {w_{i-1}, w_i} with w_0 := w_1. The per-bag path systems
//! must compose into q disjoint X_1-X_n paths: the linkage.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Subgraph, VertexSet};
use crate::menger::max_disjoint_paths;

#[derive(Debug, Clone)]
pub struct Vortex {
    graph: Graph,
    society: Vec<usize>,
}

impl Vortex {
    /// Society entries must be distinct vertices of the graph; list order
    /// is the society's linear order.
    pub fn new(graph: Graph, society: Vec<usize>) -> Result<Vortex> {
        let mut seen = VertexSet::new();
        for &w in &society {
            if !graph.contains_vertex(w) {
                return Err(Error::VertexOutOfRange { vertex: w, count: graph.vertex_count() });
            }
            if !seen.insert(w) {
                return Err(Error::InvalidPath(format!("repeated society vertex {w}")));
            }
        }
        Ok(Vortex { graph, society })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn society(&self) -> &[usize] {
        &self.society
    }

    pub fn society_set(&self) -> VertexSet {
        self.society.iter().copied().collect()
    }

    /// Society size.
    pub fn length(&self) -> usize {
        self.society.len()
    }

    pub fn inner_vertices(&self) -> VertexSet {
        let society = self.society_set();
        self.graph.vertices().filter(|v| !society.contains(v)).collect()
    }

    /// A vortex without inner vertices is trivial.
    pub fn is_trivial(&self) -> bool {
        self.inner_vertices().is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct VortexDecomposition {
    pub bags: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum VortexViolation {
    BagCountMismatch { bags: usize, society: usize },
    BagVertexOutOfRange { bag: usize, vertex: usize },
    SocietyVertexNotInBag { bag: usize, vertex: usize },
    IntervalViolation { vertex: usize },
    EdgeNotCovered { u: usize, v: usize },
    VertexNotCovered { vertex: usize },
    ZSizeMismatch { sizes: Vec<usize> },
    SocietyIntersectionViolation { bag: usize },
    AdhesionCompositionViolation { position: usize },
    NoDisjointPathSystem { bag: usize },
    LinkageCompositionFailure,
}

impl std::fmt::Display for VortexViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VortexViolation::BagCountMismatch { bags, society } => {
                write!(f, "BagCountMismatch bags={bags} society={society}")
            }
            VortexViolation::BagVertexOutOfRange { bag, vertex } => {
                write!(f, "BagVertexOutOfRange bag={bag} vertex={vertex}")
            }
            VortexViolation::SocietyVertexNotInBag { bag, vertex } => {
                write!(f, "SocietyVertexNotInBag bag={bag} vertex={vertex}")
            }
            VortexViolation::IntervalViolation { vertex } => {
                write!(f, "IntervalViolation vertex={vertex}")
            }
            VortexViolation::EdgeNotCovered { u, v } => write!(f, "EdgeNotCovered {u}-{v}"),
            VortexViolation::VertexNotCovered { vertex } => {
                write!(f, "VertexNotCovered vertex={vertex}")
            }
            VortexViolation::ZSizeMismatch { sizes } => {
                let sizes: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
                write!(f, "ZSizeMismatch sizes={}", sizes.join(","))
            }
            VortexViolation::SocietyIntersectionViolation { bag } => {
                write!(f, "SocietyIntersectionViolation bag={bag}")
            }
            VortexViolation::AdhesionCompositionViolation { position } => {
                write!(f, "AdhesionCompositionViolation position={position}")
            }
            VortexViolation::NoDisjointPathSystem { bag } => {
                write!(f, "NoDisjointPathSystem bag={bag}")
            }
            VortexViolation::LinkageCompositionFailure => write!(f, "LinkageCompositionFailure"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub violations: Vec<VortexViolation>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&VortexViolation> {
        self.violations.first()
    }
}

/// Path-decomposition laws plus the vortex-decomposition conditions:
/// one bag per society vertex with w_i ∈ X_i, bag indices of every vertex
/// contiguous, every edge inside some bag, bags covering V. Bags are
/// 1-indexed in all reports.
pub fn check_vortex_decomposition(v: &Vortex, d: &VortexDecomposition) -> DecompositionReport {
    let mut violations = Vec::new();
    let g = v.graph();
    if d.bags.len() != v.length() {
        violations.push(VortexViolation::BagCountMismatch {
            bags: d.bags.len(),
            society: v.length(),
        });
    }
    for (idx, bag) in d.bags.iter().enumerate() {
        for &x in bag {
            if !g.contains_vertex(x) {
                violations.push(VortexViolation::BagVertexOutOfRange { bag: idx + 1, vertex: x });
            }
        }
    }
    for (idx, &w) in v.society().iter().enumerate() {
        if let Some(bag) = d.bags.get(idx) {
            if !bag.contains(&w) {
                violations.push(VortexViolation::SocietyVertexNotInBag { bag: idx + 1, vertex: w });
            }
        }
    }
    for x in g.vertices() {
        let positions: Vec<usize> =
            d.bags.iter().enumerate().filter(|(_, bag)| bag.contains(&x)).map(|(i, _)| i).collect();
        match (positions.first(), positions.last()) {
            (None, _) => violations.push(VortexViolation::VertexNotCovered { vertex: x }),
            (Some(&first), Some(&last)) => {
                if positions.len() != last - first + 1 {
                    violations.push(VortexViolation::IntervalViolation { vertex: x });
                }
            }
            _ => unreachable!(),
        }
    }
    for (u, w) in g.edges() {
        if !d.bags.iter().any(|bag| bag.contains(&u) && bag.contains(&w)) {
            violations.push(VortexViolation::EdgeNotCovered { u, v: w });
        }
    }
    violations.sort();
    violations.dedup();
    DecompositionReport { violations }
}

/// The q vertex-disjoint X_1-X_n paths composed from the per-bag path
/// systems of a linked decomposition.
#[derive(Debug, Clone)]
pub struct Linkage {
    pub paths: Vec<Path>,
    pub adhesion: usize,
}

#[derive(Debug, Clone)]
pub struct LinkednessReport {
    pub violations: Vec<VortexViolation>,
    pub adhesion: Option<usize>,
    pub linkage: Option<Linkage>,
}

impl LinkednessReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn failed(violations: Vec<VortexViolation>) -> LinkednessReport {
        LinkednessReport { violations, adhesion: None, linkage: None }
    }
}

/// The adhesion sets Z_i = (X_i ∩ X_{i+1}) \ Ω for 1 <= i < n.
pub fn adhesion_sets(v: &Vortex, d: &VortexDecomposition) -> Vec<VertexSet> {
    let society = v.society_set();
    d.bags
        .windows(2)
        .map(|w| w[0].intersection(&w[1]).copied().filter(|x| !society.contains(x)).collect())
        .collect()
}

pub fn check_linked(v: &Vortex, d: &VortexDecomposition) -> LinkednessReport {
    let base = check_vortex_decomposition(v, d);
    let indexable = d.bags.len() == v.length()
        && !base
            .violations
            .iter()
            .any(|x| matches!(x, VortexViolation::BagVertexOutOfRange { .. }));
    if !indexable {
        return LinkednessReport::failed(base.violations);
    }
    let decomposition_ok = base.passed();
    let n = v.length();
    let society = v.society_set();
    let mut violations = base.violations;

    // X_i ∩ Ω = {w_{i-1}, w_i}, where w_0 := w_1
    for i in 1..=n {
        let expected: VertexSet = [v.society()[i.saturating_sub(2)], v.society()[i - 1]]
            .into_iter()
            .collect();
        let actual: VertexSet = d.bags[i - 1].intersection(&society).copied().collect();
        if actual != expected {
            violations.push(VortexViolation::SocietyIntersectionViolation { bag: i });
        }
    }

    let zs = adhesion_sets(v, d);
    let sizes: Vec<usize> = zs.iter().map(|z| z.len()).collect();
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        violations.push(VortexViolation::ZSizeMismatch { sizes });
        return LinkednessReport::failed(violations);
    }
    let q = sizes.first().copied().unwrap_or(0);

    // X_i ∩ X_{i+1} = Z_i ∪ {w_i}
    for i in 1..n {
        let mut expected = zs[i - 1].clone();
        expected.insert(v.society()[i - 1]);
        let actual: VertexSet = d.bags[i - 1].intersection(&d.bags[i]).copied().collect();
        if actual != expected {
            violations.push(VortexViolation::AdhesionCompositionViolation { position: i });
        }
    }

    // q disjoint Z_{i-1}-Z_i paths in G[X_i] - Ω, for 1 < i < n
    let mut systems: BTreeMap<usize, Vec<Path>> = BTreeMap::new();
    if q > 0 {
        for i in 2..n {
            let interior: VertexSet =
                d.bags[i - 1].iter().copied().filter(|x| !society.contains(x)).collect();
            let sub = match Subgraph::induced(v.graph(), &interior) {
                Ok(sub) => sub,
                Err(_) => {
                    violations.push(VortexViolation::NoDisjointPathSystem { bag: i });
                    continue;
                }
            };
            let (Some(sources), Some(sinks)) =
                (sub.local_set(&zs[i - 2]), sub.local_set(&zs[i - 1]))
            else {
                violations.push(VortexViolation::NoDisjointPathSystem { bag: i });
                continue;
            };
            let local_paths =
                max_disjoint_paths(sub.graph(), &sources, &sinks, &VertexSet::new());
            if local_paths.len() < q {
                violations.push(VortexViolation::NoDisjointPathSystem { bag: i });
                continue;
            }
            let paths = local_paths
                .into_iter()
                .map(|p| {
                    Path::new(p.vertices().iter().map(|&l| sub.to_host(l)).collect()).unwrap()
                })
                .collect();
            systems.insert(i, paths);
        }
    }

    if !violations.is_empty() || !decomposition_ok {
        violations.sort();
        violations.dedup();
        return LinkednessReport::failed(violations);
    }

    let linkage = match compose_linkage(v, d, &zs, q, &systems) {
        Some(paths) => Linkage { paths, adhesion: q },
        None => return LinkednessReport::failed(vec![VortexViolation::LinkageCompositionFailure]),
    };
    LinkednessReport { violations: Vec::new(), adhesion: Some(q), linkage: Some(linkage) }
}

/// Glues the per-bag systems into q disjoint X_1-X_n paths and verifies
/// the linkage laws: society avoided, pairwise disjoint, every Z_i met
/// exactly once, endpoints in X_1 and X_n.
fn compose_linkage(
    v: &Vortex,
    d: &VortexDecomposition,
    zs: &[VertexSet],
    q: usize,
    systems: &BTreeMap<usize, Vec<Path>>,
) -> Option<Vec<Path>> {
    let n = v.length();
    if n <= 1 || q == 0 {
        return Some(Vec::new());
    }
    let mut paths: Vec<Vec<usize>> = zs[0].iter().map(|&z| vec![z]).collect();
    for i in 2..n {
        let system = systems.get(&i)?;
        let by_start: BTreeMap<usize, &Path> = system.iter().map(|p| (p.first(), p)).collect();
        if by_start.len() != q {
            return None;
        }
        for path in paths.iter_mut() {
            let segment = by_start.get(path.last().unwrap())?;
            path.extend_from_slice(&segment.vertices()[1..]);
        }
    }

    let society = v.society_set();
    let mut seen = VertexSet::new();
    let mut out = Vec::with_capacity(q);
    for vertices in paths {
        let path = Path::new(vertices).ok()?;
        if !path.valid_in(v.graph()) {
            return None;
        }
        for &x in path.vertices() {
            if society.contains(&x) || !seen.insert(x) {
                return None;
            }
        }
        for z in zs {
            if path.vertices().iter().filter(|x| z.contains(x)).count() != 1 {
                return None;
            }
        }
        if !d.bags[0].contains(&path.first()) || !d.bags[n - 1].contains(&path.last()) {
            return None;
        }
        out.push(path);
    }
    Some(out)
}

/// A comb: a spine path together with mutually disjoint paths having
/// precisely their first vertex on the spine; the teeth are the last
/// vertices of those paths, ordered by attachment position.
#[derive(Debug, Clone)]
pub struct Comb {
    pub spine: Path,
    pub teeth_paths: Vec<Path>,
}

impl Comb {
    /// Teeth in stored tooth-path order.
    pub fn teeth(&self) -> Vec<usize> {
        self.teeth_paths.iter().map(|p| p.last()).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        let mut out = self.spine.vertex_set();
        for p in &self.teeth_paths {
            out.extend(p.vertices().iter().copied());
        }
        out
    }

    /// Edges used by the comb, as (min, max) pairs.
    pub fn edge_set(&self) -> std::collections::BTreeSet<(usize, usize)> {
        let mut out = std::collections::BTreeSet::new();
        for path in std::iter::once(&self.spine).chain(self.teeth_paths.iter()) {
            for w in path.vertices().windows(2) {
                out.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CombViolation {
    SpineNotAPath,
    ToothPathNotAPath { index: usize },
    ToothNotAttached { index: usize },
    ToothMeetsSpineBeyondFirst { index: usize, vertex: usize },
    TeethPathsIntersect { first: usize, second: usize, vertex: usize },
    AttachmentOrderViolation { index: usize },
    TeethOrderMismatch,
    TeethCountMismatch { expected: usize, got: usize },
}

impl std::fmt::Display for CombViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CombViolation::SpineNotAPath => write!(f, "SpineNotAPath"),
            CombViolation::ToothPathNotAPath { index } => {
                write!(f, "ToothPathNotAPath index={index}")
            }
            CombViolation::ToothNotAttached { index } => write!(f, "ToothNotAttached index={index}"),
            CombViolation::ToothMeetsSpineBeyondFirst { index, vertex } => {
                write!(f, "ToothMeetsSpineBeyondFirst index={index} vertex={vertex}")
            }
            CombViolation::TeethPathsIntersect { first, second, vertex } => {
                write!(f, "TeethPathsIntersect {first} and {second} at {vertex}")
            }
            CombViolation::AttachmentOrderViolation { index } => {
                write!(f, "AttachmentOrderViolation index={index}")
            }
            CombViolation::TeethOrderMismatch => write!(f, "TeethOrderMismatch"),
            CombViolation::TeethCountMismatch { expected, got } => {
                write!(f, "TeethCountMismatch expected={expected} got={got}")
            }
        }
    }
}

/// Comb validity in g plus tooth order: the teeth, read in spine-attachment
/// order, must equal `required_teeth` exactly. `allow_reversed` also
/// accepts the exact reversal.
pub fn check_comb_report(
    g: &Graph,
    c: &Comb,
    required_teeth: &[usize],
    allow_reversed: bool,
) -> Vec<CombViolation> {
    let mut violations = Vec::new();
    if !c.spine.valid_in(g) {
        violations.push(CombViolation::SpineNotAPath);
    }
    let spine_pos: BTreeMap<usize, usize> =
        c.spine.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut attachments: Vec<Option<usize>> = Vec::new();
    for (idx, tooth) in c.teeth_paths.iter().enumerate() {
        if !tooth.valid_in(g) {
            violations.push(CombViolation::ToothPathNotAPath { index: idx });
        }
        match spine_pos.get(&tooth.first()) {
            None => {
                violations.push(CombViolation::ToothNotAttached { index: idx });
                attachments.push(None);
            }
            Some(&pos) => attachments.push(Some(pos)),
        }
        for &x in &tooth.vertices()[1..] {
            if spine_pos.contains_key(&x) {
                violations.push(CombViolation::ToothMeetsSpineBeyondFirst { index: idx, vertex: x });
            }
        }
    }
    for i in 0..c.teeth_paths.len() {
        for j in i + 1..c.teeth_paths.len() {
            let a = c.teeth_paths[i].vertex_set();
            if let Some(&x) = c.teeth_paths[j].vertices().iter().find(|x| a.contains(x)) {
                violations.push(CombViolation::TeethPathsIntersect { first: i, second: j, vertex: x });
            }
        }
    }
    for (idx, w) in attachments.windows(2).enumerate() {
        if let (Some(a), Some(b)) = (w[0], w[1]) {
            if a > b {
                violations.push(CombViolation::AttachmentOrderViolation { index: idx + 1 });
            }
        }
    }

    if c.teeth_paths.len() != required_teeth.len() {
        violations.push(CombViolation::TeethCountMismatch {
            expected: required_teeth.len(),
            got: c.teeth_paths.len(),
        });
    } else if attachments.iter().all(|a| a.is_some()) {
        let mut order: Vec<usize> = (0..c.teeth_paths.len()).collect();
        order.sort_by_key(|&i| attachments[i].unwrap());
        let teeth: Vec<usize> = order.iter().map(|&i| c.teeth_paths[i].last()).collect();
        let reversed: Vec<usize> = required_teeth.iter().rev().copied().collect();
        let matches = teeth == required_teeth || (allow_reversed && teeth == reversed);
        if !matches {
            violations.push(CombViolation::TeethOrderMismatch);
        }
    }
    violations.sort();
    violations.dedup();
    violations
}

pub fn check_comb(g: &Graph, c: &Comb, required_teeth: &[usize]) -> bool {
    check_comb_report(g, c, required_teeth, false).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn caterpillar_decomposition_is_valid() {
        let fx = fixtures::caterpillar();
        assert!(check_vortex_decomposition(&fx.vortex, &fx.decomposition).passed());
    }

    #[test]
    fn missing_society_vertex_in_bag() {
        let fx = fixtures::caterpillar();
        let mut d = fx.decomposition.clone();
        let w2 = fx.vortex.society()[1];
        d.bags[1].remove(&w2);
        let report = check_vortex_decomposition(&fx.vortex, &d);
        assert!(report
            .violations
            .contains(&VortexViolation::SocietyVertexNotInBag { bag: 2, vertex: w2 }));
    }

    #[test]
    fn permuted_bags_break_intervals() {
        let fx = fixtures::caterpillar();
        let mut d = fx.decomposition.clone();
        d.bags.rotate_left(1);
        let report = check_vortex_decomposition(&fx.vortex, &d);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, VortexViolation::IntervalViolation { .. })));
    }

    #[test]
    fn caterpillar_is_linked_with_q1() {
        let fx = fixtures::caterpillar();
        let report = check_linked(&fx.vortex, &fx.decomposition);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert_eq!(report.adhesion, Some(1));
        let linkage = report.linkage.unwrap();
        assert_eq!(linkage.paths.len(), 1);
        // the inner chain u_1..u_3: u_4 sits beyond the last adhesion set
        assert_eq!(linkage.paths[0].vertices(), fx.expected_linkage[0].vertices());
    }

    #[test]
    fn deleted_inner_edge_kills_bag3_system() {
        let fx = fixtures::caterpillar_with_deleted_inner_edge();
        let report = check_linked(&fx.vortex, &fx.decomposition);
        assert!(report
            .violations
            .contains(&VortexViolation::NoDisjointPathSystem { bag: 3 }));
    }

    #[test]
    fn society_leakage_into_first_bag() {
        let fx = fixtures::caterpillar();
        let mut d = fx.decomposition.clone();
        let w3 = fx.vortex.society()[2];
        d.bags[0].insert(w3);
        let report = check_linked(&fx.vortex, &d);
        assert!(report
            .violations
            .contains(&VortexViolation::SocietyIntersectionViolation { bag: 1 }));
    }

    #[test]
    fn linkage_paths_meet_every_adhesion_once() {
        let fx = fixtures::caterpillar();
        let report = check_linked(&fx.vortex, &fx.decomposition);
        let linkage = report.linkage.unwrap();
        let zs = adhesion_sets(&fx.vortex, &fx.decomposition);
        for p in &linkage.paths {
            for z in &zs {
                assert_eq!(p.vertices().iter().filter(|x| z.contains(x)).count(), 1);
            }
        }
    }

    /// Two parallel inner chains: society w_1..w_3 = 0..2, chains
    /// a = 3,4,5 and b = 6,7,8.
    fn double_chain() -> (Vortex, VortexDecomposition) {
        let edges =
            vec![(3, 4), (4, 5), (6, 7), (7, 8), (0, 3), (1, 4), (2, 5)];
        let g = Graph::build(9, edges).unwrap();
        let v = Vortex::new(g, vec![0, 1, 2]).unwrap();
        let d = VortexDecomposition {
            bags: vec![
                VertexSet::from([0, 3, 6]),
                VertexSet::from([0, 1, 3, 4, 6, 7]),
                VertexSet::from([1, 2, 4, 5, 7, 8]),
            ],
        };
        (v, d)
    }

    #[test]
    fn double_chain_is_linked_with_q2() {
        let (v, d) = double_chain();
        let report = check_linked(&v, &d);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert_eq!(report.adhesion, Some(2));
        let linkage = report.linkage.unwrap();
        let paths: Vec<&[usize]> = linkage.paths.iter().map(|p| p.vertices()).collect();
        assert_eq!(paths, vec![&[3, 4][..], &[6, 7][..]]);
    }

    #[test]
    fn shrunken_bag_breaks_adhesion_sizes() {
        let (v, mut d) = double_chain();
        d.bags[1].remove(&7);
        let report = check_linked(&v, &d);
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, VortexViolation::ZSizeMismatch { .. })));
    }

    #[test]
    fn single_bag_vortex_is_trivially_linked() {
        let g = Graph::build(2, [(0, 1)]).unwrap();
        let v = Vortex::new(g, vec![0]).unwrap();
        let d = VortexDecomposition { bags: vec![VertexSet::from([0, 1])] };
        let report = check_linked(&v, &d);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert_eq!(report.adhesion, Some(0));
        assert!(report.linkage.unwrap().paths.is_empty());
    }

    #[test]
    fn caterpillar_comb_accepted() {
        let fx = fixtures::caterpillar();
        let society = fx.vortex.society().to_vec();
        assert!(check_comb(fx.vortex.graph(), &fx.comb, &society));
    }

    #[test]
    fn permuted_teeth_rejected() {
        let fx = fixtures::caterpillar();
        let mut required = fx.vortex.society().to_vec();
        required.swap(0, 1);
        assert!(!check_comb(fx.vortex.graph(), &fx.comb, &required));
        let report = check_comb_report(fx.vortex.graph(), &fx.comb, &required, false);
        assert!(report.contains(&CombViolation::TeethOrderMismatch));
    }

    #[test]
    fn reversed_teeth_need_the_flag() {
        let fx = fixtures::caterpillar();
        let reversed: Vec<usize> = fx.vortex.society().iter().rev().copied().collect();
        assert!(!check_comb(fx.vortex.graph(), &fx.comb, &reversed));
        assert!(check_comb_report(fx.vortex.graph(), &fx.comb, &reversed, true).is_empty());
    }

    #[test]
    fn zero_tooth_comb() {
        let g = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        let comb = Comb { spine: Path::new(vec![0, 1, 2]).unwrap(), teeth_paths: vec![] };
        assert!(check_comb(&g, &comb, &[]));
    }

    #[test]
    fn trivial_teeth_on_spine() {
        let g = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        let comb = Comb {
            spine: Path::new(vec![0, 1, 2]).unwrap(),
            teeth_paths: vec![Path::new(vec![0]).unwrap(), Path::new(vec![2]).unwrap()],
        };
        assert!(check_comb(&g, &comb, &[0, 2]));
        assert!(!check_comb(&g, &comb, &[2, 0]));
    }
}
