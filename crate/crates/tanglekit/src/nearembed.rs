//! Near-embedding certificates: an apex set, an embedded part G_0 with a
//! rotation system and disc assignments, large vortices carrying linked
//! decompositions with linkages and combs, and small vortices.
//!
//! Discs are modeled combinatorially: each vortex is assigned a face of
//! the G_0 rotation system, and its society must appear as an ordered
//! subsequence of that face's boundary walk, read from the given start
//! dart in the given direction. Societies sharing a face must occupy
//! non-interleaved arcs.

use std::collections::{BTreeMap, BTreeSet};

use crate::constants::ConstantsProfile;
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Subgraph, VertexSet};
use crate::minor::MinorModel;
use crate::separation::{is_separation, Separation};
use crate::surface::{trace_faces, Dart, RotationSystem};
use crate::tangle::{truncate, Tangle};
use crate::vortex::{
    adhesion_sets, check_comb_report, check_linked, Comb, Vortex, VortexDecomposition,
    VortexViolation,
};
use crate::DEFAULT_VERTEX_CAP;

/// The embedded part G_0, as a subgraph of the host in host vertex ids,
/// with its rotation system.
#[derive(Debug, Clone)]
pub struct EmbeddedPart {
    pub vertices: VertexSet,
    pub edges: BTreeSet<(usize, usize)>,
    pub rotation: BTreeMap<usize, Vec<usize>>,
}

impl EmbeddedPart {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree counting only G_0's own edges.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn subgraph(&self, host_count: usize) -> Result<Subgraph> {
        Subgraph::from_parts(&self.vertices, &self.edges, host_count)
    }

    /// Compacted rotation system plus the id translation.
    pub fn rotation_system(&self, host_count: usize) -> Result<(RotationSystem, Subgraph)> {
        let sub = self.subgraph(host_count)?;
        let mut rotation = vec![Vec::new(); sub.graph().vertex_count()];
        for (&host, order) in &self.rotation {
            let Some(local) = sub.to_local(host) else {
                return Err(Error::InvalidRotation(format!(
                    "rotation lists vertex {host} outside g0"
                )));
            };
            match order.iter().map(|&w| sub.to_local(w)).collect::<Option<Vec<usize>>>() {
                Some(mapped) => rotation[local] = mapped,
                None => {
                    return Err(Error::InvalidRotation(format!(
                        "rotation at {host} lists a vertex outside g0"
                    )))
                }
            }
        }
        let rs = RotationSystem::new(sub.graph().clone(), rotation)?;
        Ok((rs, sub))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscDirection {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscAssignment {
    pub face: usize,
    pub start: Dart,
    pub direction: DiscDirection,
}

/// A large vortex: explicit subgraph, ordered society, the fixed linked
/// decomposition, the fixed linkage and the comb required by the
/// near-embedding.
#[derive(Debug, Clone)]
pub struct LargeVortexCert {
    pub vertices: VertexSet,
    pub edges: BTreeSet<(usize, usize)>,
    pub society: Vec<usize>,
    pub bags: Vec<VertexSet>,
    pub linkage: Vec<Vec<usize>>,
    pub comb_spine: Vec<usize>,
    pub comb_teeth: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct SmallVortexCert {
    pub vertices: VertexSet,
    pub edges: BTreeSet<(usize, usize)>,
    pub society: Vec<usize>,
}

/// Vortex indices are positional: large vortices first (0..L-1), then
/// small vortices (L..n-1). Disc assignments are keyed by that index.
#[derive(Debug, Clone)]
pub struct NearEmbeddingCertificate {
    pub apex: VertexSet,
    pub g0: EmbeddedPart,
    pub large_vortices: Vec<LargeVortexCert>,
    pub small_vortices: Vec<SmallVortexCert>,
    pub discs: BTreeMap<usize, DiscAssignment>,
}

impl NearEmbeddingCertificate {
    pub fn vortex_count(&self) -> usize {
        self.large_vortices.len() + self.small_vortices.len()
    }

    pub fn vortex_vertices(&self, index: usize) -> &VertexSet {
        let l = self.large_vortices.len();
        if index < l {
            &self.large_vortices[index].vertices
        } else {
            &self.small_vortices[index - l].vertices
        }
    }

    pub fn vortex_edges(&self, index: usize) -> &BTreeSet<(usize, usize)> {
        let l = self.large_vortices.len();
        if index < l {
            &self.large_vortices[index].edges
        } else {
            &self.small_vortices[index - l].edges
        }
    }

    pub fn vortex_society(&self, index: usize) -> &[usize] {
        let l = self.large_vortices.len();
        if index < l {
            &self.large_vortices[index].society
        } else {
            &self.small_vortices[index - l].society
        }
    }

    /// Society vertices of every vortex.
    pub fn all_society_vertices(&self) -> VertexSet {
        (0..self.vortex_count()).flat_map(|i| self.vortex_society(i).iter().copied()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertViolation {
    // resolution
    IdOutOfRange { what: &'static str, vertex: usize },
    SocietyNotInVortex { vortex: usize, vertex: usize },
    PartEdgeOutsideVertices { part: String, u: usize, v: usize },
    ApexInPart { part: String, vertex: usize },
    // edge-disjoint cover of G - A
    PartEdgeNotInHost { part: String, u: usize, v: usize },
    EdgeMultiplyCovered { u: usize, v: usize },
    EdgeNotCovered { u: usize, v: usize },
    VertexNotCovered { vertex: usize },
    // overlap laws
    SocietyMismatch { vortex: usize },
    VortexOverlapOutsideG0 { first: usize, second: usize, vertex: usize },
    // large vortices
    LargeVorticesIntersect { first: usize, second: usize, vertex: usize },
    TrivialVortex { vortex: usize },
    TooManyLargeVortices { count: usize, alpha: usize },
    ApexExceedsAlpha { apex: usize, alpha: usize },
    VortexCheck { vortex: usize, inner: VortexViolation },
    AdhesionExceedsAlpha { vortex: usize, adhesion: usize, alpha: usize },
    GivenLinkageInvalid { vortex: usize, reason: String },
    // small vortices
    SmallVortexTooLong { vortex: usize, length: usize },
    // combs
    CombOutsideAllowedRegion { vortex: usize, vertex: usize },
    CombIntersectsLinkage { vortex: usize, vertex: usize },
    CombInvalid { vortex: usize, reason: String },
    // discs
    G0RotationInvalid { reason: String },
    G0Disconnected,
    MissingDisc { vortex: usize },
    DiscUnknownVortex { index: usize },
    DiscFaceMissing { vortex: usize, face: usize },
    DiscStartDartNotOnFace { vortex: usize },
    SocietyNotOnFaceBoundary { vortex: usize },
    SocietiesInterleaved { first: usize, second: usize },
}

impl std::fmt::Display for CertViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertViolation::IdOutOfRange { what, vertex } => {
                write!(f, "IdOutOfRange {what} vertex={vertex}")
            }
            CertViolation::SocietyNotInVortex { vortex, vertex } => {
                write!(f, "SocietyNotInVortex vortex={vortex} vertex={vertex}")
            }
            CertViolation::PartEdgeOutsideVertices { part, u, v } => {
                write!(f, "PartEdgeOutsideVertices part={part} edge={u}-{v}")
            }
            CertViolation::ApexInPart { part, vertex } => {
                write!(f, "ApexInPart part={part} vertex={vertex}")
            }
            CertViolation::PartEdgeNotInHost { part, u, v } => {
                write!(f, "PartEdgeNotInHost part={part} edge={u}-{v}")
            }
            CertViolation::EdgeMultiplyCovered { u, v } => {
                write!(f, "EdgeMultiplyCovered edge={u}-{v}")
            }
            CertViolation::EdgeNotCovered { u, v } => write!(f, "EdgeNotCovered edge={u}-{v}"),
            CertViolation::VertexNotCovered { vertex } => {
                write!(f, "VertexNotCovered vertex={vertex}")
            }
            CertViolation::SocietyMismatch { vortex } => {
                write!(f, "SocietyMismatch vortex={vortex}")
            }
            CertViolation::VortexOverlapOutsideG0 { first, second, vertex } => {
                write!(f, "VortexOverlapOutsideG0 vortices={first},{second} vertex={vertex}")
            }
            CertViolation::LargeVorticesIntersect { first, second, vertex } => {
                write!(f, "LargeVorticesIntersect vortices={first},{second} vertex={vertex}")
            }
            CertViolation::TrivialVortex { vortex } => write!(f, "TrivialVortex vortex={vortex}"),
            CertViolation::TooManyLargeVortices { count, alpha } => {
                write!(f, "TooManyLargeVortices count={count} alpha={alpha}")
            }
            CertViolation::ApexExceedsAlpha { apex, alpha } => {
                write!(f, "ApexExceedsAlpha apex={apex} alpha={alpha}")
            }
            CertViolation::VortexCheck { vortex, inner } => {
                write!(f, "VortexCheck vortex={vortex} {inner}")
            }
            CertViolation::AdhesionExceedsAlpha { vortex, adhesion, alpha } => {
                write!(f, "AdhesionExceedsAlpha vortex={vortex} q={adhesion} alpha={alpha}")
            }
            CertViolation::GivenLinkageInvalid { vortex, reason } => {
                write!(f, "GivenLinkageInvalid vortex={vortex} {reason}")
            }
            CertViolation::SmallVortexTooLong { vortex, length } => {
                write!(f, "SmallVortexTooLong vortex={vortex} length={length}")
            }
            CertViolation::CombOutsideAllowedRegion { vortex, vertex } => {
                write!(f, "CombOutsideAllowedRegion vortex={vortex} vertex={vertex}")
            }
            CertViolation::CombIntersectsLinkage { vortex, vertex } => {
                write!(f, "CombIntersectsLinkage vortex={vortex} vertex={vertex}")
            }
            CertViolation::CombInvalid { vortex, reason } => {
                write!(f, "CombInvalid vortex={vortex} {reason}")
            }
            CertViolation::G0RotationInvalid { reason } => write!(f, "G0RotationInvalid {reason}"),
            CertViolation::G0Disconnected => write!(f, "G0Disconnected"),
            CertViolation::MissingDisc { vortex } => write!(f, "MissingDisc vortex={vortex}"),
            CertViolation::DiscUnknownVortex { index } => {
                write!(f, "DiscUnknownVortex index={index}")
            }
            CertViolation::DiscFaceMissing { vortex, face } => {
                write!(f, "DiscFaceMissing vortex={vortex} face={face}")
            }
            CertViolation::DiscStartDartNotOnFace { vortex } => {
                write!(f, "DiscStartDartNotOnFace vortex={vortex}")
            }
            CertViolation::SocietyNotOnFaceBoundary { vortex } => {
                write!(f, "SocietyNotOnFaceBoundary vortex={vortex}")
            }
            CertViolation::SocietiesInterleaved { first, second } => {
                write!(f, "SocietiesInterleaved vortices={first},{second}")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct CertReport {
    pub violations: Vec<CertViolation>,
}

impl CertReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&CertViolation> {
        self.violations.first()
    }
}

/// Validates the near-embedding laws: edge-disjoint cover of G - A,
/// overlap laws, large vortices disjoint and linked with adhesion at most
/// α, small vortices of length at most 3, combs disjoint from their
/// linkage with teeth = society in order, and disc assignments placing
/// every society on its face boundary in order.
pub fn validate_certificate(
    g: &Graph,
    cert: &NearEmbeddingCertificate,
    profile: &ConstantsProfile,
) -> CertReport {
    let mut violations = resolution_violations(g, cert);
    if !violations.is_empty() {
        violations.sort();
        violations.dedup();
        return CertReport { violations };
    }

    cover_violations(g, cert, &mut violations);
    overlap_violations(cert, &mut violations);
    large_vortex_violations(g, cert, profile, &mut violations);
    small_vortex_violations(cert, &mut violations);
    comb_region_violations(g, cert, &mut violations);
    disc_violations(g, cert, &mut violations);

    violations.sort();
    violations.dedup();
    CertReport { violations }
}

fn part_name(part: usize) -> String {
    if part == 0 {
        "g0".to_string()
    } else {
        format!("vortex{}", part - 1)
    }
}

fn part_vertices(cert: &NearEmbeddingCertificate, part: usize) -> &VertexSet {
    if part == 0 {
        &cert.g0.vertices
    } else {
        cert.vortex_vertices(part - 1)
    }
}

fn part_edges(cert: &NearEmbeddingCertificate, part: usize) -> &BTreeSet<(usize, usize)> {
    if part == 0 {
        &cert.g0.edges
    } else {
        cert.vortex_edges(part - 1)
    }
}

fn resolution_violations(g: &Graph, cert: &NearEmbeddingCertificate) -> Vec<CertViolation> {
    let mut out = Vec::new();
    for &v in &cert.apex {
        if !g.contains_vertex(v) {
            out.push(CertViolation::IdOutOfRange { what: "apex", vertex: v });
        }
    }
    for part in 0..=cert.vortex_count() {
        let vertices = part_vertices(cert, part);
        for &v in vertices {
            if !g.contains_vertex(v) {
                out.push(CertViolation::IdOutOfRange { what: "part", vertex: v });
            }
            if cert.apex.contains(&v) {
                out.push(CertViolation::ApexInPart { part: part_name(part), vertex: v });
            }
        }
        for &(u, v) in part_edges(cert, part) {
            if !vertices.contains(&u) || !vertices.contains(&v) {
                out.push(CertViolation::PartEdgeOutsideVertices {
                    part: part_name(part),
                    u,
                    v,
                });
            }
        }
    }
    for i in 0..cert.vortex_count() {
        let vertices = cert.vortex_vertices(i);
        let mut seen = VertexSet::new();
        for &w in cert.vortex_society(i) {
            if !vertices.contains(&w) || !seen.insert(w) {
                out.push(CertViolation::SocietyNotInVortex { vortex: i, vertex: w });
            }
        }
    }
    out
}

fn cover_violations(g: &Graph, cert: &NearEmbeddingCertificate, out: &mut Vec<CertViolation>) {
    let mut coverage: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for part in 0..=cert.vortex_count() {
        for &(u, v) in part_edges(cert, part) {
            if !g.has_edge(u, v) {
                out.push(CertViolation::PartEdgeNotInHost { part: part_name(part), u, v });
            }
            *coverage.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
    }
    for (&(u, v), &count) in &coverage {
        if count > 1 {
            out.push(CertViolation::EdgeMultiplyCovered { u, v });
        }
    }
    for (u, v) in g.edges() {
        if cert.apex.contains(&u) || cert.apex.contains(&v) {
            continue;
        }
        if !coverage.contains_key(&(u, v)) {
            out.push(CertViolation::EdgeNotCovered { u, v });
        }
    }
    let mut covered = cert.g0.vertices.clone();
    for i in 0..cert.vortex_count() {
        covered.extend(cert.vortex_vertices(i).iter().copied());
    }
    for v in g.vertices() {
        if !cert.apex.contains(&v) && !covered.contains(&v) {
            out.push(CertViolation::VertexNotCovered { vertex: v });
        }
    }
}

fn overlap_violations(cert: &NearEmbeddingCertificate, out: &mut Vec<CertViolation>) {
    for i in 0..cert.vortex_count() {
        let society: VertexSet = cert.vortex_society(i).iter().copied().collect();
        let shared: VertexSet =
            cert.vortex_vertices(i).intersection(&cert.g0.vertices).copied().collect();
        if society != shared {
            out.push(CertViolation::SocietyMismatch { vortex: i });
        }
    }
    for i in 0..cert.vortex_count() {
        for j in i + 1..cert.vortex_count() {
            for v in cert.vortex_vertices(i).intersection(cert.vortex_vertices(j)) {
                if !cert.g0.vertices.contains(v) {
                    out.push(CertViolation::VortexOverlapOutsideG0 {
                        first: i,
                        second: j,
                        vertex: *v,
                    });
                }
            }
        }
    }
}

/// Compacted vortex machinery for one large vortex.
struct LargeVortexView {
    sub: Subgraph,
    vortex: Vortex,
    decomposition: VortexDecomposition,
}

fn large_vortex_view(host_count: usize, lv: &LargeVortexCert) -> Result<LargeVortexView> {
    let sub = Subgraph::from_parts(&lv.vertices, &lv.edges, host_count)?;
    let society = sub
        .local_path(&lv.society)
        .ok_or_else(|| Error::InvalidPath("society outside vortex".into()))?;
    let vortex = Vortex::new(sub.graph().clone(), society)?;
    let bags = lv
        .bags
        .iter()
        .map(|b| sub.local_set(b))
        .collect::<Option<Vec<VertexSet>>>()
        .ok_or_else(|| Error::InvalidPath("bag outside vortex".into()))?;
    Ok(LargeVortexView { sub, vortex, decomposition: VortexDecomposition { bags } })
}

fn large_vortex_violations(
    g: &Graph,
    cert: &NearEmbeddingCertificate,
    profile: &ConstantsProfile,
    out: &mut Vec<CertViolation>,
) {
    if cert.large_vortices.len() > profile.alpha {
        out.push(CertViolation::TooManyLargeVortices {
            count: cert.large_vortices.len(),
            alpha: profile.alpha,
        });
    }
    if cert.apex.len() > profile.alpha {
        out.push(CertViolation::ApexExceedsAlpha { apex: cert.apex.len(), alpha: profile.alpha });
    }
    for i in 0..cert.large_vortices.len() {
        for j in i + 1..cert.large_vortices.len() {
            for v in cert.large_vortices[i].vertices.intersection(&cert.large_vortices[j].vertices)
            {
                out.push(CertViolation::LargeVorticesIntersect { first: i, second: j, vertex: *v });
            }
        }
    }
    for i in 0..cert.vortex_count() {
        let society: VertexSet = cert.vortex_society(i).iter().copied().collect();
        if cert.vortex_vertices(i).difference(&society).next().is_none() {
            out.push(CertViolation::TrivialVortex { vortex: i });
        }
    }

    for (index, lv) in cert.large_vortices.iter().enumerate() {
        let view = match large_vortex_view(g.vertex_count(), lv) {
            Ok(view) => view,
            Err(e) => {
                out.push(CertViolation::GivenLinkageInvalid {
                    vortex: index,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let report = check_linked(&view.vortex, &view.decomposition);
        for inner in &report.violations {
            out.push(CertViolation::VortexCheck { vortex: index, inner: inner.clone() });
        }
        let Some(q) = report.adhesion else {
            continue;
        };
        if q > profile.alpha {
            out.push(CertViolation::AdhesionExceedsAlpha {
                vortex: index,
                adhesion: q,
                alpha: profile.alpha,
            });
        }
        if let Err(reason) = given_linkage_ok(&view, &lv.linkage, q) {
            out.push(CertViolation::GivenLinkageInvalid { vortex: index, reason });
        }
    }
}

/// The fixed linkage supplied by the certificate must itself satisfy the
/// linkage laws: q disjoint society-avoiding X_1-X_n paths meeting every
/// adhesion set exactly once.
fn given_linkage_ok(
    view: &LargeVortexView,
    linkage: &[Vec<usize>],
    q: usize,
) -> std::result::Result<(), String> {
    if linkage.len() != q {
        return Err(format!("expected {q} linkage paths, got {}", linkage.len()));
    }
    let n = view.vortex.length();
    let zs = adhesion_sets(&view.vortex, &view.decomposition);
    let society = view.vortex.society_set();
    let mut seen = VertexSet::new();
    for hosts in linkage {
        let locals =
            view.sub.local_path(hosts).ok_or_else(|| "linkage path leaves the vortex".to_string())?;
        let path = Path::new(locals).map_err(|e| e.to_string())?;
        if !path.valid_in(view.vortex.graph()) {
            return Err("linkage path is not a path of the vortex".into());
        }
        for &x in path.vertices() {
            if society.contains(&x) {
                return Err("linkage path meets the society".into());
            }
            if !seen.insert(x) {
                return Err("linkage paths are not disjoint".into());
            }
        }
        for z in &zs {
            if path.vertices().iter().filter(|x| z.contains(x)).count() != 1 {
                return Err("linkage path must meet every adhesion set exactly once".into());
            }
        }
        if n > 0
            && (!view.decomposition.bags[0].contains(&path.first())
                || !view.decomposition.bags[n - 1].contains(&path.last()))
        {
            return Err("linkage path must run from X_1 to X_n".into());
        }
    }
    Ok(())
}

fn small_vortex_violations(cert: &NearEmbeddingCertificate, out: &mut Vec<CertViolation>) {
    let l = cert.large_vortices.len();
    for (i, sv) in cert.small_vortices.iter().enumerate() {
        if sv.society.len() > 3 {
            out.push(CertViolation::SmallVortexTooLong { vortex: l + i, length: sv.society.len() });
        }
    }
}

/// The comb of a large vortex must live in G_j plus the small vortices,
/// avoid the fixed linkage, and have teeth = society in the right order.
fn comb_region_violations(
    g: &Graph,
    cert: &NearEmbeddingCertificate,
    out: &mut Vec<CertViolation>,
) {
    for (index, lv) in cert.large_vortices.iter().enumerate() {
        let mut region_vertices = lv.vertices.clone();
        let mut region_edges = lv.edges.clone();
        for sv in &cert.small_vortices {
            region_vertices.extend(sv.vertices.iter().copied());
            region_edges.extend(sv.edges.iter().copied());
        }
        let comb_hosts: Vec<usize> =
            lv.comb_spine.iter().chain(lv.comb_teeth.iter().flatten()).copied().collect();
        let mut outside = false;
        for &v in &comb_hosts {
            if !region_vertices.contains(&v) {
                out.push(CertViolation::CombOutsideAllowedRegion { vortex: index, vertex: v });
                outside = true;
            }
        }
        if outside {
            continue;
        }
        let linkage_vertices: VertexSet = lv.linkage.iter().flatten().copied().collect();
        for &v in &comb_hosts {
            if linkage_vertices.contains(&v) {
                out.push(CertViolation::CombIntersectsLinkage { vortex: index, vertex: v });
            }
        }
        let sub = match Subgraph::from_parts(&region_vertices, &region_edges, g.vertex_count()) {
            Ok(sub) => sub,
            Err(e) => {
                out.push(CertViolation::CombInvalid { vortex: index, reason: e.to_string() });
                continue;
            }
        };
        let comb = match build_local_comb(&sub, &lv.comb_spine, &lv.comb_teeth) {
            Ok(comb) => comb,
            Err(reason) => {
                out.push(CertViolation::CombInvalid { vortex: index, reason });
                continue;
            }
        };
        let Some(required) = sub.local_path(&lv.society) else {
            out.push(CertViolation::CombInvalid {
                vortex: index,
                reason: "society outside comb region".into(),
            });
            continue;
        };
        for inner in check_comb_report(sub.graph(), &comb, &required, false) {
            out.push(CertViolation::CombInvalid { vortex: index, reason: inner.to_string() });
        }
    }
}

fn build_local_comb(
    sub: &Subgraph,
    spine: &[usize],
    teeth: &[Vec<usize>],
) -> std::result::Result<Comb, String> {
    let spine_local = sub.local_path(spine).ok_or_else(|| "spine leaves the region".to_string())?;
    let spine_path = Path::new(spine_local).map_err(|e| e.to_string())?;
    let mut teeth_paths = Vec::new();
    for tooth in teeth {
        let local = sub.local_path(tooth).ok_or_else(|| "tooth leaves the region".to_string())?;
        teeth_paths.push(Path::new(local).map_err(|e| e.to_string())?);
    }
    Ok(Comb { spine: spine_path, teeth_paths })
}

/// Host-id boundary walks of the g0 faces, in traced face order.
pub fn g0_face_walks(g: &Graph, cert: &NearEmbeddingCertificate) -> Result<Vec<Vec<Dart>>> {
    let (rs, sub) = cert.g0.rotation_system(g.vertex_count())?;
    let faces = trace_faces(&rs)?;
    Ok(faces
        .faces
        .iter()
        .map(|walk| walk.iter().map(|&(u, v)| (sub.to_host(u), sub.to_host(v))).collect())
        .collect())
}

fn disc_violations(g: &Graph, cert: &NearEmbeddingCertificate, out: &mut Vec<CertViolation>) {
    let walks = match g0_face_walks(g, cert) {
        Ok(walks) => walks,
        Err(Error::DisconnectedGraph) => {
            out.push(CertViolation::G0Disconnected);
            return;
        }
        Err(e) => {
            out.push(CertViolation::G0RotationInvalid { reason: e.to_string() });
            return;
        }
    };
    for index in cert.discs.keys() {
        if *index >= cert.vortex_count() {
            out.push(CertViolation::DiscUnknownVortex { index: *index });
        }
    }
    let mut on_face: BTreeMap<usize, Vec<(usize, BTreeSet<usize>)>> = BTreeMap::new();
    for i in 0..cert.vortex_count() {
        let Some(disc) = cert.discs.get(&i) else {
            out.push(CertViolation::MissingDisc { vortex: i });
            continue;
        };
        let Some(walk) = walks.get(disc.face) else {
            out.push(CertViolation::DiscFaceMissing { vortex: i, face: disc.face });
            continue;
        };
        let Some(start_pos) = walk.iter().position(|&d| d == disc.start) else {
            out.push(CertViolation::DiscStartDartNotOnFace { vortex: i });
            continue;
        };
        let n = walk.len();
        let reading: Vec<(usize, usize)> = (0..n)
            .map(|step| {
                let pos = match disc.direction {
                    DiscDirection::Forward => (start_pos + step) % n,
                    DiscDirection::Backward => (start_pos + n - step) % n,
                };
                (pos, walk[pos].0)
            })
            .collect();
        match match_subsequence(&reading, cert.vortex_society(i)) {
            Some(positions) => {
                on_face.entry(disc.face).or_default().push((i, positions));
            }
            None => out.push(CertViolation::SocietyNotOnFaceBoundary { vortex: i }),
        }
    }
    for (face, entries) in &on_face {
        let len = walks[*face].len();
        for a in 0..entries.len() {
            for b in a + 1..entries.len() {
                if interleaved(&entries[a].1, &entries[b].1, len) {
                    out.push(CertViolation::SocietiesInterleaved {
                        first: entries[a].0,
                        second: entries[b].0,
                    });
                }
            }
        }
    }
}

/// Greedy subsequence match of the society in the (position, vertex)
/// reading of a face walk; returns the matched walk positions.
fn match_subsequence(reading: &[(usize, usize)], society: &[usize]) -> Option<BTreeSet<usize>> {
    let mut positions = BTreeSet::new();
    let mut want = society.iter();
    let mut next = want.next();
    for &(pos, vertex) in reading {
        match next {
            None => break,
            Some(&w) if w == vertex => {
                positions.insert(pos);
                next = want.next();
            }
            Some(_) => {}
        }
    }
    if next.is_none() {
        Some(positions)
    } else {
        None
    }
}

/// Two position sets on a cycle interleave when their exclusive positions
/// alternate more than twice around the circle.
fn interleaved(p: &BTreeSet<usize>, q: &BTreeSet<usize>, n: usize) -> bool {
    let labels: Vec<u8> = (0..n)
        .filter_map(|pos| {
            let in_p = p.contains(&pos) && !q.contains(&pos);
            let in_q = q.contains(&pos) && !p.contains(&pos);
            match (in_p, in_q) {
                (true, false) => Some(0),
                (false, true) => Some(1),
                _ => None,
            }
        })
        .collect();
    if labels.is_empty() {
        return false;
    }
    let alternations =
        (0..labels.len()).filter(|&i| labels[i] != labels[(i + 1) % labels.len()]).count();
    alternations > 2
}

#[derive(Debug, Clone, Copy)]
pub struct RespectsCaps {
    pub vertex_cap: usize,
    /// Optional cap on the enumerated separation orders; orders above it
    /// are skipped and the report is marked incomplete.
    pub max_order: Option<usize>,
    pub threads: usize,
}

impl Default for RespectsCaps {
    fn default() -> Self {
        RespectsCaps { vertex_cap: DEFAULT_VERTEX_CAP, max_order: None, threads: 1 }
    }
}

/// Where a large side was found hiding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ContainerRef {
    SmallVortex { vortex: usize },
    Bag { vortex: usize, bag: usize },
}

impl std::fmt::Display for ContainerRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ContainerRef::SmallVortex { vortex } => write!(f, "small-vortex {vortex}"),
            ContainerRef::Bag { vortex, bag } => write!(f, "bag {bag} of vortex {vortex}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RespectsViolation {
    /// The offending member of the truncated tangle, in host ids.
    pub separation: Separation,
    pub container: ContainerRef,
}

#[derive(Debug, Clone)]
pub struct RespectsReport {
    /// Separations of the apexed graph that were enumerated.
    pub checked: usize,
    /// Orders enumerated are 0..order_bound (exclusive).
    pub order_bound: usize,
    /// False when max_order cut the enumeration short of ord(T) - |A|.
    pub complete: bool,
    pub violations: Vec<RespectsViolation>,
}

impl RespectsReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The respects check: no large side of any member of T \ A may be
/// contained in a small vortex or in a single bag of a large vortex
/// decomposition.
pub fn respects_check(
    g: &Graph,
    cert: &NearEmbeddingCertificate,
    t: &Tangle,
    caps: RespectsCaps,
) -> Result<RespectsReport> {
    let trunc = truncate(g, t, &cert.apex)?;
    let full_bound = t.order_threshold() - cert.apex.len();
    let max_order = match caps.max_order {
        Some(cap) => cap.min(full_bound.saturating_sub(1)),
        None => full_bound.saturating_sub(1),
    };
    let complete = max_order + 1 >= full_bound;
    let separations = crate::separation::enumerate_separations_threaded(
        trunc.subgraph.graph(),
        max_order,
        caps.vertex_cap,
        caps.threads,
    )?;

    let mut containers: Vec<(ContainerRef, VertexSet)> = Vec::new();
    for (i, lv) in cert.large_vortices.iter().enumerate() {
        for (b, bag) in lv.bags.iter().enumerate() {
            containers.push((ContainerRef::Bag { vortex: i, bag: b + 1 }, bag.clone()));
        }
    }
    let l = cert.large_vortices.len();
    for (i, sv) in cert.small_vortices.iter().enumerate() {
        containers.push((ContainerRef::SmallVortex { vortex: l + i }, sv.vertices.clone()));
    }

    let mut violations = Vec::new();
    for s in &separations {
        if !trunc.tangle.contains(s) {
            continue;
        }
        let large_side: VertexSet = s.side_b().iter().map(|&v| trunc.subgraph.to_host(v)).collect();
        for (container, vertices) in &containers {
            if large_side.is_subset(vertices) {
                let host_sep = Separation::from_sides(
                    s.side_a().iter().map(|&v| trunc.subgraph.to_host(v)).collect(),
                    large_side.clone(),
                );
                violations.push(RespectsViolation {
                    separation: host_sep,
                    container: container.clone(),
                });
            }
        }
    }
    violations.sort();
    violations.dedup();
    Ok(RespectsReport {
        checked: separations.len(),
        order_bound: max_order + 1,
        complete,
        violations,
    })
}

/// How "neighbors in G_0" are counted for essential vertices: by G_0's
/// own edge set, or by every host edge between G_0 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborConvention {
    #[default]
    EmbeddedEdgesOnly,
    AllHostEdges,
}

/// Society vertices (of any vortex) with fewer than 7 neighbors in G_0.
pub fn essential_vertices(cert: &NearEmbeddingCertificate) -> VertexSet {
    essential_vertices_with(cert, None, NeighborConvention::EmbeddedEdgesOnly)
}

pub fn essential_vertices_with(
    cert: &NearEmbeddingCertificate,
    host: Option<&Graph>,
    convention: NeighborConvention,
) -> VertexSet {
    let degree = |v: usize| -> usize {
        match (convention, host) {
            (NeighborConvention::AllHostEdges, Some(g)) => {
                g.neighbors(v).iter().filter(|w| cert.g0.vertices.contains(w)).count()
            }
            _ => cert.g0.degree(v),
        }
    };
    cert.all_society_vertices().into_iter().filter(|&v| degree(v) < 7).collect()
}

/// m-wideness of a large vortex: its society holds at least m essential
/// vertices. The index addresses the large-vortex list.
pub fn is_m_wide(cert: &NearEmbeddingCertificate, vortex_index: usize, m: usize) -> Result<bool> {
    let Some(lv) = cert.large_vortices.get(vortex_index) else {
        return Err(Error::IndexOutOfRange { index: vortex_index, count: cert.large_vortices.len() });
    };
    let essential = essential_vertices(cert);
    Ok(lv.society.iter().filter(|w| essential.contains(w)).count() >= m)
}

/// Exact rational for report lines; denominators stay tiny (3 and 7).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn int(n: i64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn new(num: i64, den: i64) -> Ratio {
        debug_assert!(den > 0);
        Ratio { num, den }
    }

    fn compare(&self, other: &Ratio) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }

    pub fn gt(&self, other: &Ratio) -> bool {
        self.compare(other) == std::cmp::Ordering::Greater
    }

    pub fn ge(&self, other: &Ratio) -> bool {
        self.compare(other) != std::cmp::Ordering::Less
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g = gcd(self.num.unsigned_abs(), self.den.unsigned_abs()).max(1) as i64;
        let (num, den) = (self.num / g, self.den / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone)]
pub struct IneqLine {
    pub label: &'static str,
    pub lhs: Ratio,
    pub relation: &'static str,
    pub rhs: Ratio,
    pub holds: bool,
}

impl std::fmt::Display for IneqLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} {} {} -> {}",
            self.label,
            self.lhs,
            self.relation,
            self.rhs,
            if self.holds { "true" } else { "false" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct EulerReport {
    pub g0_vertices: usize,
    pub g0_edges: usize,
    pub faces: usize,
    pub genus: usize,
    /// x: essential society vertices of G_0.
    pub essential: usize,
    /// y: non-essential society vertices of G_0.
    pub non_essential: usize,
    /// z: non-society vertices of G_0.
    pub non_society: usize,
    pub lines: Vec<IneqLine>,
}

impl EulerReport {
    pub fn line(&self, label: &str) -> Option<&IneqLine> {
        self.lines.iter().find(|l| l.label == label)
    }
}

/// Face count, genus, the x/y/z partition of V(G_0), and the displayed
/// inequalities of the wide-vortex argument, each with both sides
/// evaluated numerically. The two g-bounded counts (vertices with at
/// least a neighbors in the apex set; number of small vortices) are
/// measured, not derived.
pub fn euler_report(
    g: &Graph,
    cert: &NearEmbeddingCertificate,
    profile: &ConstantsProfile,
) -> Result<EulerReport> {
    let (rs, _) = cert.g0.rotation_system(g.vertex_count())?;
    let faces = trace_faces(&rs)?;
    let l = faces.face_count();
    let v0 = cert.g0.vertex_count();
    let e0 = cert.g0.edge_count();
    let genus = crate::surface::genus_from_face_count(rs.graph(), l)?;

    let society_in_g0: VertexSet =
        cert.all_society_vertices().intersection(&cert.g0.vertices).copied().collect();
    let essential_all = essential_vertices(cert);
    let x = society_in_g0.iter().filter(|v| essential_all.contains(v)).count();
    let y = society_in_g0.len() - x;
    let z = v0 - society_in_g0.len();

    let a = profile.a as i64;
    let g_const = profile.g as i64;
    let ask = profile.ask() as i64;
    let (v0i, e0i, li) = (v0 as i64, e0 as i64, l as i64);

    let apex_heavy = g
        .vertices()
        .filter(|&v| g.neighbors(v).iter().filter(|w| cert.apex.contains(w)).count() >= profile.a)
        .count();

    let lhs1 = Ratio::int(v0i + ask);
    let rhs1 = Ratio::new(e0i, 3);
    let lhs2 = Ratio::new(2 * e0i, 7);
    let rhs2 = Ratio::int(y as i64 + 2 * (a + 1) * (z as i64 - g_const));
    let lhs3 = Ratio::int(x as i64);
    let rhs3 = Ratio::new(v0i - 14 * (a + 1) * g_const - 7 * ask, 7);
    let lines = vec![
        IneqLine {
            label: "apex-neighbors",
            lhs: Ratio::int(apex_heavy as i64),
            relation: "<=",
            rhs: Ratio::int(g_const),
            holds: apex_heavy as i64 <= g_const,
        },
        IneqLine {
            label: "small-vortex-count",
            lhs: Ratio::int(cert.small_vortices.len() as i64),
            relation: "<=",
            rhs: Ratio::int(g_const),
            holds: cert.small_vortices.len() as i64 <= g_const,
        },
        IneqLine {
            label: "euler-formula",
            lhs: Ratio::int(v0i - e0i + li),
            relation: "=",
            rhs: Ratio::int(2 - genus as i64),
            holds: v0i - e0i + li == 2 - genus as i64,
        },
        IneqLine {
            label: "faces-bound",
            lhs: Ratio::int(3 * li),
            relation: "<=",
            rhs: Ratio::int(2 * e0i),
            holds: 3 * li <= 2 * e0i,
        },
        IneqLine {
            label: "genus-bound",
            lhs: Ratio::int(genus as i64),
            relation: "<",
            rhs: Ratio::int(ask),
            holds: (genus as i64) < ask,
        },
        IneqLine { label: "(1)", lhs: lhs1, relation: ">", rhs: rhs1, holds: lhs1.gt(&rhs1) },
        IneqLine { label: "(2)", lhs: lhs2, relation: ">=", rhs: rhs2, holds: lhs2.ge(&rhs2) },
        IneqLine {
            label: "conclusion",
            lhs: lhs3,
            relation: ">",
            rhs: rhs3,
            holds: lhs3.gt(&rhs3),
        },
    ];

    Ok(EulerReport {
        g0_vertices: v0,
        g0_edges: e0,
        faces: l,
        genus,
        essential: x,
        non_essential: y,
        non_society: z,
        lines,
    })
}

#[derive(Debug, Clone)]
pub struct BranchCountLine {
    pub target: ContainerRef,
    pub separation_valid: bool,
    pub order: usize,
    pub intersecting: usize,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct BranchCountReport {
    pub lines: Vec<BranchCountLine>,
    /// (n1 + g)(3α)² + n1 on the left, r² on the right.
    pub aggregate_lhs: u64,
    pub aggregate_rhs: u64,
    pub aggregate_holds: bool,
    /// The formed separations in host ids, parallel to `lines`.
    pub separations: Vec<Separation>,
}

impl BranchCountReport {
    pub fn passed(&self) -> bool {
        self.aggregate_holds && self.lines.iter().all(|l| l.separation_valid && l.holds)
    }
}

/// Branch-set counting: each small vortex and each bag of each large
/// vortex is cut off from the rest of G by its society or adhesion sets
/// plus the apex set; the branch sets of the grid model meeting the small
/// side are counted against order². Also evaluates the aggregate bound
/// (n1+g)(3α)² + n1 < r² from the profile.
pub fn branch_count_check(
    g: &Graph,
    cert: &NearEmbeddingCertificate,
    model: &MinorModel,
    profile: &ConstantsProfile,
) -> Result<BranchCountReport> {
    let report = crate::minor::validate_model(model);
    if let Some(first) = report.first_violation() {
        return Err(Error::InvalidModel(first.to_string()));
    }
    let mut lines = Vec::new();
    let mut separations = Vec::new();
    let all: VertexSet = g.vertex_set();

    let mut push_line = |target: ContainerRef, part: &VertexSet, separator: &VertexSet| {
        let small: VertexSet =
            part.iter().chain(separator.iter()).chain(cert.apex.iter()).copied().collect();
        let big: VertexSet =
            all.difference(part).chain(separator.iter()).chain(cert.apex.iter()).copied().collect();
        let valid = is_separation(g, &small, &big);
        let sep = Separation::from_sides(small.clone(), big);
        let order = sep.order();
        let intersecting = model.branch_sets_intersecting(&small);
        lines.push(BranchCountLine {
            target,
            separation_valid: valid,
            order,
            intersecting,
            bound: order * order,
            holds: intersecting <= order * order,
        });
        separations.push(sep);
    };

    for (i, lv) in cert.large_vortices.iter().enumerate() {
        let society: VertexSet = lv.society.iter().copied().collect();
        for (b, bag) in lv.bags.iter().enumerate() {
            let mut separator: VertexSet = bag.intersection(&society).copied().collect();
            if b > 0 {
                separator.extend(bag.intersection(&lv.bags[b - 1]).copied());
            }
            if b + 1 < lv.bags.len() {
                separator.extend(bag.intersection(&lv.bags[b + 1]).copied());
            }
            push_line(ContainerRef::Bag { vortex: i, bag: b + 1 }, bag, &separator);
        }
    }
    let l = cert.large_vortices.len();
    for (i, sv) in cert.small_vortices.iter().enumerate() {
        let separator: VertexSet = sv.society.iter().copied().collect();
        push_line(ContainerRef::SmallVortex { vortex: l + i }, &sv.vertices, &separator);
    }

    let alpha = profile.alpha as u64;
    let aggregate_lhs = (profile.n1 + profile.g) * 9 * alpha * alpha + profile.n1;
    let aggregate_rhs = profile.r * profile.r;
    Ok(BranchCountReport {
        lines,
        aggregate_lhs,
        aggregate_rhs,
        aggregate_holds: aggregate_lhs < aggregate_rhs,
        separations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::compute_constants;
    use crate::fixtures;
    use crate::minor::extension_tangle;
    use crate::tangle::Tangle;

    fn profile() -> ConstantsProfile {
        compute_constants(1, 1, 1, 2, 5, 1).unwrap()
    }

    #[test]
    fn trivial_grid_certificate_validates() {
        let (g, cert) = fixtures::trivial_grid_certificate(3);
        let report = validate_certificate(&g, &cert, &profile());
        assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn composite_certificate_validates() {
        let fx = fixtures::composite(3);
        let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
        assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn composite_certificates_validate_for_larger_grids() {
        for r in [4, 5] {
            let fx = fixtures::composite(r);
            let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
            assert!(report.passed(), "r={r} violations: {:?}", report.violations);
        }
    }

    #[test]
    fn small_vortex_with_four_society_vertices_rejected() {
        let mut fx = fixtures::composite(3);
        // enlarge the small vortex society with a fourth boundary vertex
        let extra = 3; // (2,1) lies on the outer face next to the small society
        fx.cert.small_vortices[0].society.push(extra);
        fx.cert.small_vortices[0].vertices.insert(extra);
        let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CertViolation::SmallVortexTooLong { vortex: 1, length: 4 })));
    }

    #[test]
    fn comb_touching_linkage_rejected() {
        let mut fx = fixtures::composite(3);
        let u2 = fx.grid.graph().vertex_count() + 1;
        fx.cert.large_vortices[0].comb_teeth[1] = vec![u2, 1];
        let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CertViolation::CombIntersectsLinkage { vortex: 0, vertex } if *vertex == u2)));
    }

    #[test]
    fn respects_passes_on_composite() {
        let fx = fixtures::composite(3);
        let t = extension_tangle(&fx.model, &Tangle::natural(&fx.grid)).unwrap();
        let caps = RespectsCaps { vertex_cap: 20, max_order: None, threads: 1 };
        let report = respects_check(&fx.graph, &fx.cert, &t, caps).unwrap();
        assert!(report.complete);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert!(report.checked > 0);
    }

    #[test]
    fn disc_on_wrong_face_is_reported() {
        let mut fx = fixtures::composite(3);
        // the large society (0,1,2,5) cannot sit on an inner quad
        let inner_face = (0..5)
            .find(|&f| f != fx.cert.discs[&0].face)
            .unwrap();
        let walk = g0_face_walks(&fx.graph, &fx.cert).unwrap()[inner_face].clone();
        fx.cert.discs.insert(
            0,
            DiscAssignment { face: inner_face, start: walk[0], direction: DiscDirection::Forward },
        );
        let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CertViolation::SocietyNotOnFaceBoundary { vortex: 0 })));
    }

    #[test]
    fn start_dart_must_lie_on_the_face() {
        let mut fx = fixtures::composite(3);
        let disc = fx.cert.discs.get_mut(&0).unwrap();
        disc.start = (4, 7); // an inner dart, not on the outer walk
        let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CertViolation::DiscStartDartNotOnFace { vortex: 0 })));
    }

    #[test]
    fn interleaved_societies_are_reported() {
        // two small vortices alternating around the outer face of the grid
        let w = crate::grid::GridGraph::new(3);
        let mut edges: Vec<(usize, usize)> = w.graph().edges().collect();
        edges.extend([(9, 0), (9, 2), (10, 1), (10, 5)]);
        let g = Graph::build(11, edges).unwrap();
        let rs = RotationSystem::grid_planar(&w);
        let rotation: BTreeMap<usize, Vec<usize>> =
            w.graph().vertices().map(|v| (v, rs.rotation(v).to_vec())).collect();
        let mut cert = NearEmbeddingCertificate {
            apex: VertexSet::new(),
            g0: EmbeddedPart {
                vertices: w.graph().vertex_set(),
                edges: w.graph().edge_set().clone(),
                rotation,
            },
            large_vortices: Vec::new(),
            small_vortices: vec![
                SmallVortexCert {
                    vertices: VertexSet::from([0, 2, 9]),
                    edges: fixtures::edge_set([(9, 0), (9, 2)]),
                    society: vec![0, 2],
                },
                SmallVortexCert {
                    vertices: VertexSet::from([1, 5, 10]),
                    edges: fixtures::edge_set([(10, 1), (10, 5)]),
                    society: vec![1, 5],
                },
            ],
            discs: BTreeMap::new(),
        };
        let walks = g0_face_walks(&g, &cert).unwrap();
        let outer = (0..walks.len()).max_by_key(|&i| walks[i].len()).unwrap();
        let start0 = *walks[outer].iter().find(|&&(u, _)| u == 0).unwrap();
        let start1 = *walks[outer].iter().find(|&&(u, _)| u == 1).unwrap();
        cert.discs.insert(
            0,
            DiscAssignment { face: outer, start: start0, direction: DiscDirection::Forward },
        );
        cert.discs.insert(
            1,
            DiscAssignment { face: outer, start: start1, direction: DiscDirection::Forward },
        );
        let profile = profile();
        let report = validate_certificate(&g, &cert, &profile);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CertViolation::SocietiesInterleaved { first: 0, second: 1 })));
    }

    #[test]
    fn respects_is_vacuous_without_vortices() {
        let (g, cert) = fixtures::trivial_grid_certificate(3);
        let w = crate::grid::GridGraph::new(3);
        let t = Tangle::natural(&w);
        let report = respects_check(&g, &cert, &t, RespectsCaps::default()).unwrap();
        assert!(report.passed());
        assert!(report.complete);
    }

    #[test]
    fn swollen_small_vortex_reported() {
        let fx = fixtures::composite_with_swollen_small_vortex(3);
        let t = extension_tangle(&fx.model, &Tangle::natural(&fx.grid)).unwrap();
        let caps = RespectsCaps { vertex_cap: 20, max_order: None, threads: 1 };
        let report = respects_check(&fx.graph, &fx.cert, &t, caps).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .all(|v| v.container == ContainerRef::SmallVortex { vortex: 1 }));
    }

    #[test]
    fn respects_rejects_oversized_apex() {
        let mut fx = fixtures::composite(3);
        fx.cert.apex = (0..3).collect(); // as large as ord(T)
        let t = extension_tangle(&fx.model, &Tangle::natural(&fx.grid)).unwrap();
        let caps = RespectsCaps { vertex_cap: 20, max_order: None, threads: 1 };
        assert!(matches!(
            respects_check(&fx.graph, &fx.cert, &t, caps),
            Err(Error::ApexTooLarge { apex: 3, order: 3 })
        ));
    }

    /// Star-shaped g0: center 0 of degree 7, leaves 1..7, small vortex
    /// with society (0, 1, 2) and inner vertex 8.
    fn star_fixture() -> (Graph, NearEmbeddingCertificate) {
        let star_edges: Vec<(usize, usize)> = (1..8).map(|v| (0, v)).collect();
        let mut host_edges = star_edges.clone();
        host_edges.extend([(8, 0), (8, 1), (8, 2)]);
        let g = Graph::build(9, host_edges).unwrap();
        let mut rotation: BTreeMap<usize, Vec<usize>> =
            (1..8).map(|v| (v, vec![0])).collect();
        rotation.insert(0, (1..8).collect());
        let cert = NearEmbeddingCertificate {
            apex: VertexSet::new(),
            g0: EmbeddedPart {
                vertices: (0..8).collect(),
                edges: fixtures::edge_set(star_edges),
                rotation,
            },
            large_vortices: Vec::new(),
            small_vortices: vec![SmallVortexCert {
                vertices: VertexSet::from([0, 1, 2, 8]),
                edges: fixtures::edge_set([(8, 0), (8, 1), (8, 2)]),
                society: vec![0, 1, 2],
            }],
            discs: BTreeMap::new(),
        };
        (g, cert)
    }

    #[test]
    fn essential_vertices_threshold_at_seven() {
        let (_, cert) = star_fixture();
        let essential = essential_vertices(&cert);
        // center has exactly 7 neighbors in g0: not essential
        assert!(!essential.contains(&0));
        assert_eq!(essential, VertexSet::from([1, 2]));
    }

    #[test]
    fn no_vortices_no_essential_vertices() {
        let (_, cert) = fixtures::trivial_grid_certificate(3);
        assert!(essential_vertices(&cert).is_empty());
    }

    #[test]
    fn wideness_of_composite_vortex() {
        let fx = fixtures::composite(3);
        assert!(is_m_wide(&fx.cert, 0, 0).unwrap());
        assert!(is_m_wide(&fx.cert, 0, 4).unwrap());
        assert!(!is_m_wide(&fx.cert, 0, 5).unwrap());
        assert!(matches!(is_m_wide(&fx.cert, 1, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn euler_report_on_planar_w3() {
        let (g, cert) = fixtures::trivial_grid_certificate(3);
        let report = euler_report(&g, &cert, &profile()).unwrap();
        assert_eq!((report.g0_vertices, report.g0_edges, report.faces, report.genus), (9, 12, 5, 0));
        let formula = report.line("euler-formula").unwrap();
        assert!(formula.holds);
        let one = report.line("(1)").unwrap();
        assert!(one.holds);
        assert_eq!(format!("{} > {}", one.lhs, one.rhs), "10 > 4");
        assert_eq!(
            report.essential + report.non_essential + report.non_society,
            report.g0_vertices
        );
    }

    #[test]
    fn euler_identity_on_four_cycle() {
        let g = fixtures::cycle(4);
        let rotation: BTreeMap<usize, Vec<usize>> = (0..4)
            .map(|v| (v, vec![(v + 1) % 4, (v + 3) % 4]))
            .collect();
        let cert = NearEmbeddingCertificate {
            apex: VertexSet::new(),
            g0: EmbeddedPart {
                vertices: g.vertex_set(),
                edges: g.edge_set().clone(),
                rotation,
            },
            large_vortices: Vec::new(),
            small_vortices: Vec::new(),
            discs: BTreeMap::new(),
        };
        let report = euler_report(&g, &cert, &profile()).unwrap();
        assert_eq!((report.g0_vertices, report.g0_edges, report.faces, report.genus), (4, 4, 2, 0));
        assert!(report.line("euler-formula").unwrap().holds);
    }

    #[test]
    fn euler_report_measures_the_g_bounded_counts() {
        let fx = fixtures::composite(3);
        let report = euler_report(&fx.graph, &fx.cert, &fx.profile).unwrap();
        // no apex: nothing has a neighbor in it
        let apex = report.line("apex-neighbors").unwrap();
        assert!(apex.holds);
        assert_eq!(format!("{}", apex.lhs), "0");
        // one small vortex against g = 0: measured honestly as failing
        let small = report.line("small-vortex-count").unwrap();
        assert!(!small.holds);
        assert_eq!(format!("{} <= {}", small.lhs, small.rhs), "1 <= 0");
    }

    #[test]
    fn euler_report_partition_with_dense_center() {
        let (g, cert) = star_fixture();
        let report = euler_report(&g, &cert, &profile()).unwrap();
        assert_eq!((report.essential, report.non_essential, report.non_society), (2, 1, 5));
        assert_eq!(
            report.essential + report.non_essential + report.non_society,
            report.g0_vertices
        );
        let two = report.line("(2)").unwrap();
        assert!(!two.holds);
        assert_eq!(format!("{}", two.lhs), "2");
        assert_eq!(format!("{}", two.rhs), "21");
    }

    #[test]
    fn euler_report_rejects_disconnected_g0() {
        let (g, mut cert) = fixtures::trivial_grid_certificate(3);
        cert.g0.edges.clear();
        cert.g0.rotation = (0..9).map(|v| (v, Vec::new())).collect();
        assert!(matches!(euler_report(&g, &cert, &profile()), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn branch_count_on_composite() {
        let fx = fixtures::composite(3);
        let report = branch_count_check(&fx.graph, &fx.cert, &fx.model, &fx.profile).unwrap();
        assert!(report.passed(), "lines: {:?}", report.lines);
        assert_eq!(report.lines.len(), 5); // 4 bags + 1 small vortex
        for line in &report.lines {
            assert!(line.separation_valid);
            assert!(line.intersecting <= line.bound);
        }
        assert_eq!(report.aggregate_lhs, 259);
        assert_eq!(report.aggregate_rhs, 289);
    }

    #[test]
    fn branch_count_small_vortex_line() {
        let fx = fixtures::composite(3);
        let report = branch_count_check(&fx.graph, &fx.cert, &fx.model, &fx.profile).unwrap();
        let small = report
            .lines
            .iter()
            .find(|l| l.target == ContainerRef::SmallVortex { vortex: 1 })
            .unwrap();
        assert_eq!(small.order, 3);
        assert_eq!(small.intersecting, 3);
        assert_eq!(small.bound, 9);
    }

    #[test]
    fn branch_count_vacuous_on_trivial_certificate() {
        let (g, cert) = fixtures::trivial_grid_certificate(3);
        let model = MinorModel::identity(&g);
        let report = branch_count_check(&g, &cert, &model, &profile()).unwrap();
        assert!(report.lines.is_empty());
        assert!(report.aggregate_holds);
        assert!(report.passed());
    }

    #[test]
    fn branch_count_rejects_invalid_model() {
        let fx = fixtures::composite(3);
        let bad = MinorModel::new(
            fx.graph.clone(),
            fx.grid.graph().clone(),
            std::collections::BTreeMap::new(),
        );
        assert!(matches!(
            branch_count_check(&fx.graph, &fx.cert, &bad, &fx.profile),
            Err(Error::InvalidModel(_))
        ));
    }
}
