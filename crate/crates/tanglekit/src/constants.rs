//! The constant profile g, n1, r derived from (a, s, k, α, θ, n2), and
//! the connectivity/degree hypothesis checks. All threshold comparisons
//! are exact integer arithmetic; the degree threshold 31(a+1)/2 - 3 is
//! compared without rounding.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::menger::max_disjoint_paths;

/// Derived constants:
///   g  = (sk - 1) * C(α, a)
///   n1 = minimal with n1/7 - 2(a+1)g - ask >= 3g + (n2-1)α
///   r  = minimal with r >= θ, r > 3α, r² > (n1+g)(3α)² + n1
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstantsProfile {
    pub a: usize,
    pub s: usize,
    pub k: usize,
    pub alpha: usize,
    pub theta: usize,
    pub n2: usize,
    pub g: u64,
    pub n1: u64,
    pub r: u64,
}

impl ConstantsProfile {
    pub fn ask(&self) -> u64 {
        (self.a * self.s * self.k) as u64
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u64 = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// n1 satisfies its defining inequality.
pub fn n1_condition(n1: u64, a: usize, g: u64, ask: u64, alpha: usize, n2: usize) -> bool {
    // n1/7 - 2(a+1)g - ask >= 3g + (n2-1)α, cleared of the division by 7
    let rhs = 7 * (3 * g + (n2 as u64 - 1) * alpha as u64 + 2 * (a as u64 + 1) * g + ask);
    n1 >= rhs
}

/// r satisfies all three of its defining conditions.
pub fn r_condition(r: u64, theta: usize, alpha: usize, n1: u64, g: u64) -> bool {
    r >= theta as u64 && r > 3 * alpha as u64 && r * r > (n1 + g) * 9 * (alpha as u64).pow(2) + n1
}

/// Minimal g, n1, r for the given parameters. All inputs must be at
/// least 1 and α at least 2.
pub fn compute_constants(
    a: usize,
    s: usize,
    k: usize,
    alpha: usize,
    theta: usize,
    n2: usize,
) -> Result<ConstantsProfile> {
    for (name, value) in [("a", a), ("s", s), ("k", k), ("theta", theta), ("n2", n2)] {
        if value < 1 {
            return Err(Error::ParameterOutOfRange { name });
        }
    }
    if alpha < 2 {
        return Err(Error::AlphaTooSmall(alpha));
    }
    let g = (s as u64 * k as u64 - 1) * binomial(alpha as u64, a as u64);
    let ask = (a * s * k) as u64;
    let n1 = 7 * (3 * g + (n2 as u64 - 1) * alpha as u64 + 2 * (a as u64 + 1) * g + ask);
    debug_assert!(n1_condition(n1, a, g, ask, alpha, n2));
    debug_assert!(n1 == 0 || !n1_condition(n1 - 1, a, g, ask, alpha, n2));

    let mut r = (theta as u64).max(3 * alpha as u64 + 1);
    while !r_condition(r, theta, alpha, n1, g) {
        r += 1;
    }
    Ok(ConstantsProfile { a, s, k, alpha, theta, n2, g, n1, r })
}

/// Sides and verdict of one numeric comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisLine {
    pub name: &'static str,
    pub value: usize,
    /// Threshold as an exact rational (numerator, denominator).
    pub threshold: (i64, i64),
    pub holds: bool,
}

impl HypothesisLine {
    pub fn threshold_display(&self) -> String {
        let (num, den) = self.threshold;
        if num % den == 0 {
            format!("{}", num / den)
        } else {
            format!("{num}/{den}")
        }
    }
}

#[derive(Debug, Clone)]
pub struct HypothesesReport {
    pub connectivity: HypothesisLine,
    pub min_degree: HypothesisLine,
}

impl HypothesesReport {
    pub fn passed(&self) -> bool {
        self.connectivity.holds && self.min_degree.holds
    }
}

/// Vertex connectivity by disjoint-path computation: the minimum over
/// non-adjacent pairs u, v of the maximum number of internally disjoint
/// u-v paths; n - 1 for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1; // complete-graph value; pairs can only lower it
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let forbidden = VertexSet::from([u, v]);
            let paths =
                max_disjoint_paths(g, g.neighbors(u), g.neighbors(v), &forbidden);
            best = best.min(paths.len());
        }
    }
    best
}

/// Connectivity and minimum-degree hypotheses for a parameter a:
/// κ(G) >= 3a + 2 and δ(G) >= 31(a+1)/2 - 3. The tree-width hypothesis is
/// not evaluated here; its bound is an external input.
pub fn check_hypotheses(g: &Graph, a: usize) -> Result<HypothesesReport> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall { need: 2, got: g.vertex_count() });
    }
    let kappa = vertex_connectivity(g);
    let delta = g.min_degree();
    let kappa_threshold = (3 * a + 2) as i64;
    // δ >= 31(a+1)/2 - 3  <=>  2δ >= 31(a+1) - 6
    let delta_num = 31 * (a as i64 + 1) - 6;
    Ok(HypothesesReport {
        connectivity: HypothesisLine {
            name: "kappa",
            value: kappa,
            threshold: (kappa_threshold, 1),
            holds: kappa as i64 >= kappa_threshold,
        },
        min_degree: HypothesisLine {
            name: "delta",
            value: delta,
            threshold: (delta_num, 2),
            holds: 2 * delta as i64 >= delta_num,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn first_documented_profile() {
        let p = compute_constants(1, 1, 1, 2, 5, 1).unwrap();
        assert_eq!((p.g, p.n1, p.r), (0, 7, 17));
    }

    #[test]
    fn second_documented_profile() {
        let p = compute_constants(1, 2, 1, 2, 5, 1).unwrap();
        assert_eq!((p.g, p.n1, p.r), (2, 112, 65));
    }

    #[test]
    fn sk_equal_one_kills_g() {
        for alpha in 2..6 {
            let p = compute_constants(1, 1, 1, alpha, 4, 2).unwrap();
            assert_eq!(p.g, 0);
        }
    }

    #[test]
    fn minimality_of_r_and_n1() {
        for (a, s, k, alpha, theta, n2) in [(1, 1, 1, 2, 5, 1), (1, 2, 1, 2, 5, 1), (2, 2, 3, 4, 9, 2)] {
            let p = compute_constants(a, s, k, alpha, theta, n2).unwrap();
            assert!(r_condition(p.r, theta, alpha, p.n1, p.g));
            assert!(!r_condition(p.r - 1, theta, alpha, p.n1, p.g));
            assert!(n1_condition(p.n1, a, p.g, p.ask(), alpha, n2));
            assert!(!n1_condition(p.n1 - 1, a, p.g, p.ask(), alpha, n2));
        }
    }

    #[test]
    fn alpha_one_rejected() {
        assert_eq!(compute_constants(1, 1, 1, 1, 5, 1), Err(Error::AlphaTooSmall(1)));
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(compute_constants(0, 1, 1, 2, 5, 1).is_err());
    }

    #[test]
    fn k6_fails_degree_passes_connectivity() {
        let report = check_hypotheses(&fixtures::complete(6), 1).unwrap();
        assert_eq!(report.connectivity.value, 5);
        assert!(report.connectivity.holds);
        assert_eq!(report.min_degree.value, 5);
        assert!(!report.min_degree.holds);
        assert_eq!(report.min_degree.threshold_display(), "28");
    }

    #[test]
    fn k29_passes_both() {
        let report = check_hypotheses(&fixtures::complete(29), 1).unwrap();
        assert_eq!(report.connectivity.value, 28);
        assert_eq!(report.min_degree.value, 28);
        assert!(report.passed());
    }

    #[test]
    fn single_vertex_too_small() {
        let g = Graph::build(1, []).unwrap();
        assert!(matches!(check_hypotheses(&g, 1), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn connectivity_of_grid_is_two() {
        let w = crate::grid::GridGraph::new(3);
        assert_eq!(vertex_connectivity(w.graph()), 2);
    }

    #[test]
    fn connectivity_of_classic_graphs() {
        assert_eq!(vertex_connectivity(&fixtures::petersen()), 3);
        assert_eq!(vertex_connectivity(&fixtures::complete_bipartite(3, 3)), 3);
        assert_eq!(vertex_connectivity(&fixtures::complete_bipartite(2, 4)), 2);
    }

    #[test]
    fn connectivity_of_cycle_and_path() {
        assert_eq!(vertex_connectivity(&fixtures::cycle(5)), 2);
        assert_eq!(vertex_connectivity(&fixtures::path_graph(4)), 1);
        let disconnected = Graph::build(3, [(0, 1)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected), 0);
    }

    #[test]
    fn odd_delta_threshold_displays_as_rational() {
        let report = check_hypotheses(&fixtures::complete(4), 2).unwrap();
        assert_eq!(report.min_degree.threshold, (87, 2));
        assert_eq!(report.min_degree.threshold_display(), "87/2");
        // δ = 3 < 43.5
        assert!(!report.min_degree.holds);
    }
}
