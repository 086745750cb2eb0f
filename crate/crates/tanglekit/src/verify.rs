//! The exhaustive verification harness: one check per acceptance
//! criterion, each returning a pass/fail outcome with machine-readable
//! detail lines. Randomized checks use a fixed-seed generator so every
//! run examines the same instances.

use std::collections::BTreeMap;

use crate::constants::{check_hypotheses, compute_constants, n1_condition, r_condition};
use crate::fixtures;
use crate::graph::{Graph, VertexSet};
use crate::grid::GridGraph;
use crate::menger::{brute_min_separator, max_disjoint_paths};
use crate::minor::{
    extension_tangle, find_minor_model, induced_separation, MinorModel, MinorSearchCaps,
};
use crate::nearembed::{
    branch_count_check, euler_report, respects_check, validate_certificate, RespectsCaps,
};
use crate::separation::{enumerate_separations_threaded, is_separation, Separation};
use crate::surface::{
    dart_partition_holds, euler_genus, min_euler_genus_exhaustive, trace_faces, RotationSystem,
};
use crate::tangle::{check_axioms, orientation_partition, AxiomViolation, Tangle};
use crate::vortex::{check_comb_report, check_linked, CombViolation, VortexViolation};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Number of instances examined (separations, trials, fixtures).
    pub checked: usize,
    /// Violation or mismatch descriptions; empty iff passed.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> CheckOutcome {
        CheckOutcome { name, passed: true, checked: 0, failures: Vec::new() }
    }

    fn fail(&mut self, message: impl Into<String>) {
        self.passed = false;
        self.failures.push(message.into());
    }

    fn expect(&mut self, condition: bool, message: impl std::fmt::Display) {
        if !condition {
            self.fail(message.to_string());
        }
    }
}

/// xorshift64*; deterministic across runs and platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n.max(1) as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

/// Criterion 1: every member of the natural tangle of W_r satisfies
/// |A| <= ord². Exhaustive over all separations of order below the cap.
pub fn check_gridcut(r: usize, max_order: usize, cap: usize, threads: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("gridcut");
    let w = GridGraph::new(r);
    let seps = match enumerate_separations_threaded(w.graph(), max_order, cap, threads) {
        Ok(seps) => seps,
        Err(e) => {
            outcome.fail(format!("enumeration failed: {e}"));
            return outcome;
        }
    };
    for s in &seps {
        if s.order() >= w.r() || !w.contains_cross(s.side_b()) {
            continue;
        }
        outcome.checked += 1;
        let bound = s.order() * s.order();
        if s.side_a().len() > bound {
            outcome.fail(format!(
                "W_{r} member with |A|={} > {bound}: {}",
                s.side_a().len(),
                crate::format::write_separation(s)
            ));
        }
    }
    outcome
}

/// Criterion 2: the natural tangles of W_2 and W_3 satisfy the axioms and
/// orient every small-order separation exactly once; the dropped- and
/// doubled-orientation mutations are rejected with T1 and T2 verdicts.
pub fn check_tangle_axioms(cap: usize, threads: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("tangle-axioms");
    for r in [2, 3] {
        let w = GridGraph::new(r);
        let t = Tangle::natural(&w);
        match check_axioms(w.graph(), &t, cap, threads) {
            Ok(report) => {
                outcome.checked += report.checked;
                outcome.expect(report.passed(), format!("natural tangle of W_{r} broke an axiom"));
            }
            Err(e) => outcome.fail(format!("W_{r} axiom check failed: {e}")),
        }
        match orientation_partition(w.graph(), &t, cap, threads) {
            Ok((missing, doubled)) => {
                outcome.expect(missing.is_empty(), format!("W_{r}: unoriented separation"));
                outcome.expect(doubled.is_empty(), format!("W_{r}: doubly oriented separation"));
            }
            Err(e) => outcome.fail(format!("W_{r} orientation scan failed: {e}")),
        }
    }

    // mutation fixtures on W_2
    let w = GridGraph::new(2);
    let materialized = Tangle::natural(&w).materialize(None, cap).unwrap();
    let members = materialized.explicit_members().unwrap().clone();

    let mut dropped = members.clone();
    let victim = Separation::from_sides(VertexSet::from([0]), w.graph().vertex_set());
    dropped.remove(&victim);
    let broken = Tangle::from_separations(w.graph().clone(), 2, dropped);
    match check_axioms(w.graph(), &broken, cap, threads) {
        Ok(report) => outcome.expect(
            report.violations.iter().any(|v| matches!(v, AxiomViolation::T1(_))),
            "dropped orientation not reported as T1",
        ),
        Err(e) => outcome.fail(format!("mutation check failed: {e}")),
    }

    let mut doubled = members;
    doubled.insert(victim.reversed());
    let broken = Tangle::from_separations(w.graph().clone(), 2, doubled);
    match check_axioms(w.graph(), &broken, cap, threads) {
        Ok(report) => outcome.expect(
            report.violations.iter().any(|v| matches!(v, AxiomViolation::T2(..))),
            "doubled orientation not reported as T2",
        ),
        Err(e) => outcome.fail(format!("mutation check failed: {e}")),
    }
    outcome
}

fn random_separation(g: &Graph, rng: &mut Rng) -> Separation {
    let n = g.vertex_count();
    let size = rng.below(4.min(n) + 1);
    let mut separator = VertexSet::new();
    while separator.len() < size {
        separator.insert(rng.below(n));
    }
    let parts = g.components(&separator);
    let mut side_a = separator.clone();
    let mut side_b = separator;
    for part in parts {
        if rng.chance(1, 2) {
            side_a.extend(part);
        } else {
            side_b.extend(part);
        }
    }
    Separation::from_sides(side_a, side_b)
}

/// Criterion 3: random valid separations across several host/model
/// fixtures always induce valid separations of at most the same order.
pub fn check_induced_separations(samples: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("induced-separations");
    let mut models: Vec<MinorModel> = Vec::new();

    // pendant 3-grid with singleton branch sets
    let w3 = GridGraph::new(3);
    models.push(MinorModel::singleton_embedding(fixtures::pendant_w3(), w3.graph().clone()));
    // path host, single-edge pattern, one fat branch set
    let host = fixtures::path_graph(3);
    let pattern = fixtures::path_graph(2);
    models.push(MinorModel::new(
        host,
        pattern,
        BTreeMap::from([(0, VertexSet::from([0, 1])), (1, VertexSet::from([2]))]),
    ));
    // 2-grid inside the 3-grid, found by the exhaustive search
    match find_minor_model(w3.graph(), GridGraph::new(2).graph(), MinorSearchCaps::default()) {
        Ok(Some(model)) => models.push(model),
        _ => outcome.fail("no W_2 model found in W_3"),
    }
    // composite host with the full grid as pattern
    let fx = fixtures::composite(3);
    models.push(fx.model.clone());

    let mut rng = Rng::new(0x5eed_0003);
    for round in 0..samples {
        let model = &models[round % models.len()];
        let s = random_separation(model.host(), &mut rng);
        outcome.checked += 1;
        match induced_separation(model, &s) {
            Ok(induced) => {
                if !is_separation(model.pattern(), induced.side_a(), induced.side_b()) {
                    outcome.fail(format!("induced pair is not a separation (round {round})"));
                }
                if induced.order() > s.order() {
                    outcome.fail(format!(
                        "induced order {} exceeds {} (round {round})",
                        induced.order(),
                        s.order()
                    ));
                }
            }
            Err(e) => outcome.fail(format!("round {round}: {e}")),
        }
    }
    outcome
}

/// Criterion 4: the extended tangle on the pendant 3-grid passes the
/// axioms exhaustively, and every member meets at most ord² branch sets
/// with its small side.
pub fn check_extended_tangle(cap: usize, threads: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("extended-tangle");
    let w = GridGraph::new(3);
    let host = fixtures::pendant_w3();
    let model = MinorModel::singleton_embedding(host.clone(), w.graph().clone());
    let extended = match extension_tangle(&model, &Tangle::natural(&w)) {
        Ok(t) => t,
        Err(e) => {
            outcome.fail(format!("extension failed: {e}"));
            return outcome;
        }
    };
    match check_axioms(&host, &extended, cap, threads) {
        Ok(report) => {
            outcome.checked += report.checked;
            outcome.expect(report.passed(), "extended tangle broke an axiom");
        }
        Err(e) => outcome.fail(format!("axiom check failed: {e}")),
    }
    match enumerate_separations_threaded(&host, 2, cap, threads) {
        Ok(seps) => {
            for s in seps.iter().filter(|s| extended.contains(s)) {
                outcome.checked += 1;
                let count = model.branch_sets_intersecting(s.side_a());
                let bound = s.order() * s.order();
                if count > bound {
                    outcome.fail(format!(
                        "member meets {count} > {bound} branch sets: {}",
                        crate::format::write_separation(s)
                    ));
                }
            }
        }
        Err(e) => outcome.fail(format!("enumeration failed: {e}")),
    }
    outcome
}

fn random_graph(n: usize, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(2, 5) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, edges).unwrap()
}

/// Criterion 5: on random graphs, the flow-based disjoint-path count
/// equals the exhaustive minimum separator size.
pub fn check_menger_oracle(trials: usize, cap: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("menger-oracle");
    let mut rng = Rng::new(0x5eed_0005);
    for trial in 0..trials {
        let n = 4 + rng.below(9); // 4..=12 vertices
        let g = random_graph(n, &mut rng);
        let mut sources = VertexSet::new();
        let mut sinks = VertexSet::new();
        let source_count = (1 + rng.below(3)).min(n - 1);
        let sink_count = (1 + rng.below(3)).min(n - source_count);
        while sources.len() < source_count {
            sources.insert(rng.below(n));
        }
        while sinks.len() < sink_count {
            let v = rng.below(n);
            if !sources.contains(&v) {
                sinks.insert(v);
            }
        }
        let paths = max_disjoint_paths(&g, &sources, &sinks, &VertexSet::new());
        // the returned system must itself be a valid disjoint system
        let mut seen = VertexSet::new();
        for p in &paths {
            if !p.valid_in(&g) {
                outcome.fail(format!("trial {trial}: returned a non-path"));
            }
            for &v in p.vertices() {
                if !seen.insert(v) {
                    outcome.fail(format!("trial {trial}: paths share vertex {v}"));
                }
            }
        }
        match brute_min_separator(&g, &sources, &sinks, cap) {
            Ok(cut) => {
                outcome.checked += 1;
                if paths.len() != cut {
                    outcome.fail(format!(
                        "trial {trial}: {} paths vs separator {cut} on {n} vertices",
                        paths.len()
                    ));
                }
            }
            Err(e) => outcome.fail(format!("trial {trial}: {e}")),
        }
    }
    outcome
}

/// Criterion 6: the caterpillar fixture is linked with q = 1 and the
/// expected linkage and comb; the three documented mutations are rejected
/// with their named violations.
pub fn check_vortex_machinery() -> CheckOutcome {
    let mut outcome = CheckOutcome::new("vortex-machinery");
    let fx = fixtures::caterpillar();
    let report = check_linked(&fx.vortex, &fx.decomposition);
    outcome.checked += 1;
    outcome.expect(report.passed(), "caterpillar rejected");
    outcome.expect(report.adhesion == Some(1), "caterpillar adhesion is not 1");
    if let Some(linkage) = &report.linkage {
        outcome.expect(
            linkage.paths.len() == 1
                && linkage.paths[0].vertices() == fx.expected_linkage[0].vertices(),
            "caterpillar linkage mismatch",
        );
    }
    let society = fx.vortex.society().to_vec();
    outcome.expect(
        crate::vortex::check_comb(fx.vortex.graph(), &fx.comb, &society),
        "caterpillar comb rejected",
    );

    // mutation: deleted inner edge
    let broken = fixtures::caterpillar_with_deleted_inner_edge();
    let report = check_linked(&broken.vortex, &broken.decomposition);
    outcome.checked += 1;
    outcome.expect(
        report.violations.contains(&VortexViolation::NoDisjointPathSystem { bag: 3 }),
        "deleted inner edge: expected NoDisjointPathSystem at bag 3",
    );

    // mutation: society vertex missing from its bag
    let fx2 = fixtures::caterpillar();
    let mut d = fx2.decomposition.clone();
    let w2 = fx2.vortex.society()[1];
    d.bags[1].remove(&w2);
    let report = check_linked(&fx2.vortex, &d);
    outcome.checked += 1;
    outcome.expect(
        report.violations.contains(&VortexViolation::SocietyVertexNotInBag { bag: 2, vertex: w2 }),
        "missing society vertex: expected SocietyVertexNotInBag",
    );

    // mutation: permuted teeth
    let mut permuted = society.clone();
    permuted.swap(0, 1);
    let comb_report = check_comb_report(fx2.vortex.graph(), &fx2.comb, &permuted, false);
    outcome.checked += 1;
    outcome.expect(
        comb_report.contains(&CombViolation::TeethOrderMismatch),
        "permuted teeth: expected TeethOrderMismatch",
    );
    outcome
}

/// Criterion 7: planar grid rotations have genus 0, the documented K_5
/// rotation has genus 2 and no rotation system of K_5 does better, and
/// the dart bookkeeping holds on every fixture.
pub fn check_surface(budget: u64) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("surface");
    for r in [2, 3, 4] {
        let w = GridGraph::new(r);
        let rs = RotationSystem::grid_planar(&w);
        outcome.checked += 1;
        match euler_genus(&rs) {
            Ok(genus) => outcome.expect(genus == 0, format!("planar W_{r} has genus {genus}")),
            Err(e) => outcome.fail(format!("W_{r}: {e}")),
        }
        match trace_faces(&rs) {
            Ok(faces) => {
                outcome.expect(
                    dart_partition_holds(w.graph(), &faces),
                    format!("W_{r}: dart partition broken"),
                );
                outcome.expect(
                    faces.lengths().iter().sum::<usize>() == 2 * w.graph().edge_count(),
                    format!("W_{r}: face lengths do not sum to 2|E|"),
                );
            }
            Err(e) => outcome.fail(format!("W_{r}: {e}")),
        }
    }
    let k5 = fixtures::k5_rotation();
    outcome.checked += 1;
    match euler_genus(&k5) {
        Ok(genus) => outcome.expect(genus == 2, format!("K_5 fixture rotation has genus {genus}")),
        Err(e) => outcome.fail(format!("K_5 fixture: {e}")),
    }
    match trace_faces(&k5) {
        Ok(faces) => outcome.expect(
            dart_partition_holds(k5.graph(), &faces),
            "K_5 fixture: dart partition broken",
        ),
        Err(e) => outcome.fail(format!("K_5 fixture: {e}")),
    }
    match min_euler_genus_exhaustive(k5.graph(), budget) {
        Ok(min) => {
            outcome.checked += 1;
            outcome.expect(min == 2, format!("exhaustive K_5 minimum is {min}, expected 2"));
        }
        Err(e) => outcome.fail(format!("exhaustive K_5 search: {e}")),
    }
    outcome
}

/// Criterion 8: the face-count identity and inequality (1) on the planar
/// 3-grid with a = s = k = 1, and the x + y + z partition on the fixture
/// certificates.
pub fn check_euler_machinery() -> CheckOutcome {
    let mut outcome = CheckOutcome::new("euler-machinery");
    let profile = compute_constants(1, 1, 1, 2, 5, 1).unwrap();
    let (g, cert) = fixtures::trivial_grid_certificate(3);
    match euler_report(&g, &cert, &profile) {
        Ok(report) => {
            outcome.checked += 1;
            outcome.expect(
                (report.g0_vertices, report.g0_edges, report.faces, report.genus) == (9, 12, 5, 0),
                "planar W_3 counts are off",
            );
            let formula = report.line("euler-formula").unwrap();
            outcome.expect(formula.holds, "Euler formula identity failed");
            let one = report.line("(1)").unwrap();
            outcome.expect(
                one.holds && format!("{} > {}", one.lhs, one.rhs) == "10 > 4",
                format!("inequality (1) reads {} > {}", one.lhs, one.rhs),
            );
            outcome.expect(
                report.essential + report.non_essential + report.non_society == report.g0_vertices,
                "x + y + z misses |G_0|",
            );
        }
        Err(e) => outcome.fail(format!("euler report failed: {e}")),
    }
    for fx in [fixtures::composite(3), fixtures::composite(4)] {
        match euler_report(&fx.graph, &fx.cert, &fx.profile) {
            Ok(report) => {
                outcome.checked += 1;
                outcome.expect(
                    report.essential + report.non_essential + report.non_society
                        == report.g0_vertices,
                    "x + y + z misses |G_0| on a composite fixture",
                );
                outcome.expect(
                    report.line("euler-formula").unwrap().holds,
                    "Euler formula identity failed on a composite fixture",
                );
            }
            Err(e) => outcome.fail(format!("euler report failed: {e}")),
        }
    }
    outcome
}

/// Criterion 9: the two documented constant profiles, with minimality of
/// n1 and r.
pub fn check_constants() -> CheckOutcome {
    let mut outcome = CheckOutcome::new("constants");
    let expectations = [((1, 1, 1, 2, 5, 1), (0, 7, 17)), ((1, 2, 1, 2, 5, 1), (2, 112, 65))];
    for ((a, s, k, alpha, theta, n2), (g, n1, r)) in expectations {
        outcome.checked += 1;
        match compute_constants(a, s, k, alpha, theta, n2) {
            Ok(p) => {
                outcome.expect(
                    (p.g, p.n1, p.r) == (g, n1, r),
                    format!("profile for ({a},{s},{k},{alpha},{theta},{n2}) is ({}, {}, {})", p.g, p.n1, p.r),
                );
                outcome.expect(
                    !r_condition(p.r - 1, theta, alpha, p.n1, p.g),
                    format!("r - 1 = {} also satisfies the conditions", p.r - 1),
                );
                outcome.expect(
                    !n1_condition(p.n1 - 1, a, p.g, p.ask(), alpha, n2),
                    format!("n1 - 1 = {} also satisfies the inequality", p.n1 - 1),
                );
            }
            Err(e) => outcome.fail(format!("compute_constants failed: {e}")),
        }
    }
    outcome
}

/// Criterion 10: the composite fixture validates, respects the extended
/// natural tangle, and the swollen-small-vortex mutation is reported; the
/// wide fixture additionally feeds the branch-set counting, whose formed
/// separations are members of the extended tangle.
pub fn check_near_embedding(threads: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("near-embedding");
    let fx = fixtures::composite(3);
    let report = validate_certificate(&fx.graph, &fx.cert, &fx.profile);
    outcome.checked += 1;
    for v in &report.violations {
        outcome.fail(format!("composite certificate: {v}"));
    }

    let tangle = extension_tangle(&fx.model, &Tangle::natural(&fx.grid))
        .and_then(|t| t.materialize(None, 20))
        .unwrap();
    outcome.expect(
        tangle.explicit_members().is_some_and(|m| !m.is_empty()),
        "extension failed to materialize",
    );
    let caps = RespectsCaps { vertex_cap: 20, max_order: None, threads };
    match respects_check(&fx.graph, &fx.cert, &tangle, caps) {
        Ok(report) => {
            outcome.checked += report.checked;
            outcome.expect(report.complete, "respects enumeration was cut short");
            outcome.expect(report.passed(), "composite fixture failed the respects check");
        }
        Err(e) => outcome.fail(format!("respects check failed: {e}")),
    }

    let swollen = fixtures::composite_with_swollen_small_vortex(3);
    match respects_check(&swollen.graph, &swollen.cert, &tangle, caps) {
        Ok(report) => {
            outcome.checked += 1;
            outcome.expect(!report.passed(), "swollen small vortex went unreported");
        }
        Err(e) => outcome.fail(format!("respects check failed: {e}")),
    }

    // wide fixture: orders stay below the tangle threshold, so the formed
    // separations must be members of the extended tangle
    let wide = fixtures::composite(5);
    let report = validate_certificate(&wide.graph, &wide.cert, &wide.profile);
    outcome.checked += 1;
    for v in &report.violations {
        outcome.fail(format!("wide certificate: {v}"));
    }
    let wide_tangle = extension_tangle(&wide.model, &Tangle::natural(&wide.grid)).unwrap();
    match branch_count_check(&wide.graph, &wide.cert, &wide.model, &wide.profile) {
        Ok(report) => {
            for (line, sep) in report.lines.iter().zip(&report.separations) {
                outcome.checked += 1;
                outcome.expect(
                    line.separation_valid,
                    format!("{}: formed pair is not a separation", line.target),
                );
                outcome.expect(
                    line.holds,
                    format!("{}: {} branch sets exceed {}", line.target, line.intersecting, line.bound),
                );
                outcome.expect(
                    wide_tangle.contains(sep),
                    format!("{}: formed separation is not a tangle member", line.target),
                );
            }
            outcome.expect(report.aggregate_holds, "aggregate branch bound failed");
        }
        Err(e) => outcome.fail(format!("branch counting failed: {e}")),
    }
    outcome
}

/// Criterion 11: hypothesis arithmetic on K_6 and K_29 with a = 1.
pub fn check_hypotheses_fixtures() -> CheckOutcome {
    let mut outcome = CheckOutcome::new("hypotheses");
    match check_hypotheses(&fixtures::complete(6), 1) {
        Ok(report) => {
            outcome.checked += 1;
            outcome.expect(
                report.connectivity.value == 5 && report.connectivity.holds,
                "K_6 connectivity should pass at 5 >= 5",
            );
            outcome.expect(
                report.min_degree.value == 5 && !report.min_degree.holds,
                "K_6 degree should fail at 5 < 28",
            );
        }
        Err(e) => outcome.fail(format!("K_6: {e}")),
    }
    match check_hypotheses(&fixtures::complete(29), 1) {
        Ok(report) => {
            outcome.checked += 1;
            outcome.expect(report.passed(), "K_29 should pass both hypotheses");
            outcome.expect(
                report.connectivity.value == 28 && report.min_degree.value == 28,
                "K_29 values should both be 28",
            );
        }
        Err(e) => outcome.fail(format!("K_29: {e}")),
    }
    outcome
}

/// Every acceptance check, in criterion order.
pub fn run_all(threads: usize) -> Vec<CheckOutcome> {
    let cap = 20;
    let mut gridcut = CheckOutcome::new("gridcut");
    for (r, max_order) in [(2, 1), (3, 2), (4, 3)] {
        let sub = check_gridcut(r, max_order, cap, threads);
        gridcut.checked += sub.checked;
        if !sub.passed {
            gridcut.passed = false;
            gridcut.failures.extend(sub.failures);
        }
    }
    vec![
        gridcut,
        check_tangle_axioms(cap, threads),
        check_induced_separations(1000),
        check_extended_tangle(cap, threads),
        check_menger_oracle(200, 16),
        check_vortex_machinery(),
        check_surface(10_000_000),
        check_euler_machinery(),
        check_constants(),
        check_near_embedding(threads),
        check_hypotheses_fixtures(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::validate_model;

    #[test]
    fn rng_is_deterministic() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn random_separations_are_valid() {
        let g = fixtures::pendant_w3();
        let mut rng = Rng::new(7);
        for _ in 0..200 {
            let s = random_separation(&g, &mut rng);
            assert!(is_separation(&g, s.side_a(), s.side_b()));
        }
    }

    #[test]
    fn quick_checks_pass() {
        assert!(check_constants().passed);
        assert!(check_hypotheses_fixtures().passed);
        assert!(check_vortex_machinery().passed);
    }

    #[test]
    fn menger_smoke() {
        let outcome = check_menger_oracle(25, 16);
        assert!(outcome.passed, "{:?}", outcome.failures);
    }

    #[test]
    fn model_search_fixture_exists() {
        let model = find_minor_model(
            GridGraph::new(3).graph(),
            GridGraph::new(2).graph(),
            MinorSearchCaps::default(),
        )
        .unwrap()
        .unwrap();
        assert!(validate_model(&model).passed());
    }
}
