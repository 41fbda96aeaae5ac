//! Necessary conditions for a graph to be the weight graph of a nilpotent
//! Lie algebra, and the edge-bound calculus around the gap function `f`.
//!
//! A `(p,q)` weight graph must be connected, contain a universal vertex (the
//! complement contains an isolated one), have diameter at most 2, have stable
//! powers (`G^2 = G^3` as labeled graphs; with diameter <= 2 every power
//! `G^n`, `n >= 2`, collapses to the same graph), and satisfy the sharp edge
//! bound `q >= C(p,2) - max_weight_sums(p)`.

use std::fmt;

use thiserror::Error;

use crate::graph::{Distance, SimpleGraph};
use crate::weights::max_weight_sums;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("f(p) is defined for p >= 3, got {0}")]
    DomainTooSmall(usize),
}

/// `C(p,2) = p(p-1)/2`.
pub fn binomial2(p: usize) -> usize {
    p * (p - 1) / 2
}

/// Coarse lower bound on the weight-graph edge count: `p - 1`.
pub fn naive_min_edges(p: usize) -> usize {
    p.saturating_sub(1)
}

/// Sharp lower bound: `C(p,2) - max_weight_sums(p)`.
pub fn min_edges(p: usize) -> usize {
    binomial2(p) - max_weight_sums(p)
}

/// Gap between the sharp and the coarse bound:
/// `f(p) = C(p,2) - (p-1) - max_weight_sums(p)`, defined for `p >= 3`.
pub fn f(p: usize) -> Result<i64, CriteriaError> {
    if p < 3 {
        return Err(CriteriaError::DomainTooSmall(p));
    }
    Ok(binomial2(p) as i64 - (p as i64 - 1) - max_weight_sums(p) as i64)
}

/// Closed form for `f(p+k) - f(p)`:
/// `k(p-1) + k(k-1)/2 - sum_{j=0}^{k-1} floor((p+j)/2)`.
pub fn f_difference(p: usize, k: usize) -> Result<i64, CriteriaError> {
    if p < 3 {
        return Err(CriteriaError::DomainTooSmall(p));
    }
    assert!(k >= 1, "f_difference requires k >= 1");
    let (p, k) = (p as i64, k as i64);
    let floor_sum: i64 = (0..k).map(|j| (p + j) / 2).sum();
    Ok(k * (p - 1) + k * (k - 1) / 2 - floor_sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckName {
    Connected,
    UniversalVertex,
    DiameterLeTwo,
    PowerIdempotent,
    EdgeLowerBound,
}

impl CheckName {
    pub const ALL: [CheckName; 5] = [
        CheckName::Connected,
        CheckName::UniversalVertex,
        CheckName::DiameterLeTwo,
        CheckName::PowerIdempotent,
        CheckName::EdgeLowerBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Connected => "connected",
            CheckName::UniversalVertex => "universal_vertex",
            CheckName::DiameterLeTwo => "diameter_le_2",
            CheckName::PowerIdempotent => "power_idempotent",
            CheckName::EdgeLowerBound => "edge_lower_bound",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: CheckName,
    pub pass: bool,
    /// Present exactly when the check failed.
    pub witness: Option<String>,
}

/// Per-condition record of the necessary-condition battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriteriaReport {
    pub p: usize,
    pub q: usize,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl CriteriaReport {
    pub fn check(&self, name: CheckName) -> &CheckResult {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .expect("report carries all five checks")
    }

    /// Human-readable table.
    pub fn render_text(&self) -> String {
        let mut out = format!("criteria for p={} q={}\n", self.p, self.q);
        for check in &self.checks {
            let verdict = if check.pass { "pass" } else { "FAIL" };
            match &check.witness {
                Some(witness) => {
                    out.push_str(&format!("  {:<16} {}  ({})\n", check.name, verdict, witness))
                }
                None => out.push_str(&format!("  {:<16} {}\n", check.name, verdict)),
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.overall { "pass" } else { "FAIL" }
        ));
        out
    }

    /// Machine-readable `key=value` lines carrying every datum of the table.
    pub fn render_keyvalue(&self) -> String {
        let mut out = format!("p={}\nq={}\n", self.p, self.q);
        for check in &self.checks {
            out.push_str(&format!(
                "check.{}={}\n",
                check.name,
                if check.pass { "pass" } else { "fail" }
            ));
            if let Some(witness) = &check.witness {
                out.push_str(&format!("check.{}.witness={}\n", check.name, witness));
            }
        }
        out.push_str(&format!(
            "overall={}\n",
            if self.overall { "pass" } else { "fail" }
        ));
        out
    }
}

/// Runs the full battery of necessary conditions against `graph`.
pub fn check_weight_graph(graph: &SimpleGraph) -> CriteriaReport {
    let p = graph.vertex_count();
    let q = graph.edge_count();

    let mut checks = Vec::with_capacity(CheckName::ALL.len());

    let connected = graph.is_connected();
    checks.push(CheckResult {
        name: CheckName::Connected,
        pass: connected,
        witness: if connected {
            None
        } else {
            disconnected_witness(graph)
        },
    });

    let universal = graph.universal_vertices();
    checks.push(CheckResult {
        name: CheckName::UniversalVertex,
        pass: !universal.is_empty(),
        witness: if universal.is_empty() {
            Some(format!("no vertex of degree {}", p - 1))
        } else {
            None
        },
    });

    let mut diameter_witness = None;
    'outer: for u in 1..=p {
        for v in u + 1..=p {
            match graph.distance(u, v).expect("vertices in range") {
                Distance::Finite(d) if d <= 2 => {}
                d => {
                    diameter_witness = Some(format!("d({u},{v})={d}"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(CheckResult {
        name: CheckName::DiameterLeTwo,
        pass: diameter_witness.is_none(),
        witness: diameter_witness,
    });

    // Power stability: with diameter <= 2 all powers G^n, n >= 2, coincide,
    // so G^2 = G^3 is checked as literal equality of labeled graphs.
    let square = graph.power(2);
    let cube = graph.power(3);
    let stable = square == cube;
    checks.push(CheckResult {
        name: CheckName::PowerIdempotent,
        pass: stable,
        witness: if stable {
            None
        } else {
            Some(power_witness(&square, &cube))
        },
    });

    let bound = min_edges(p);
    checks.push(CheckResult {
        name: CheckName::EdgeLowerBound,
        pass: q >= bound,
        witness: if q >= bound {
            None
        } else {
            Some(format!("q={q} < min_edges({p})={bound}"))
        },
    });

    let overall = checks.iter().all(|c| c.pass);
    CriteriaReport {
        p,
        q,
        checks,
        overall,
    }
}

fn disconnected_witness(graph: &SimpleGraph) -> Option<String> {
    let p = graph.vertex_count();
    for v in 2..=p {
        if graph.distance(1, v).expect("in range") == Distance::Infinite {
            return Some(format!("d(1,{v})=inf"));
        }
    }
    None
}

fn power_witness(square: &SimpleGraph, cube: &SimpleGraph) -> String {
    for (u, v) in cube.edges() {
        if !square.has_edge(u, v) {
            return format!("power 3 gains edge {{{u},{v}}} over power 2");
        }
    }
    "powers differ".to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values_from_the_worked_example() {
        assert_eq!(naive_min_edges(6), 5);
        assert_eq!(naive_min_edges(1), 0);
        assert_eq!(naive_min_edges(3), 2);
        assert_eq!(min_edges(6), 9);
        assert_eq!(min_edges(3), 2);
        assert_eq!(min_edges(4), 4);
    }

    #[test]
    fn f_small_values() {
        assert_eq!(f(3).unwrap(), 0);
        assert_eq!(f(4).unwrap(), 1);
        assert_eq!(f(6).unwrap(), 4);
        assert_eq!(f(8).unwrap(), 9);
        assert_eq!(f(2), Err(CriteriaError::DomainTooSmall(2)));
    }

    #[test]
    fn f_difference_closed_form() {
        assert_eq!(f_difference(3, 1).unwrap(), 1);
        assert_eq!(f_difference(8, 1).unwrap(), 3);
        assert!(f_difference(2, 1).is_err());
        for p in 3..=40usize {
            for k in 1..=20usize {
                assert_eq!(
                    f_difference(p, k).unwrap(),
                    f(p + k).unwrap() - f(p).unwrap(),
                    "p={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn min_edges_decomposes_into_naive_plus_f() {
        for p in 3..=64 {
            assert_eq!(
                min_edges(p) as i64,
                naive_min_edges(p) as i64 + f(p).unwrap()
            );
        }
    }

    #[test]
    fn complete_graphs_pass_everything() {
        for p in 1..=8 {
            let report = check_weight_graph(&SimpleGraph::complete(p).unwrap());
            assert!(report.overall, "K_{p} must pass");
            assert!(report.checks.iter().all(|c| c.witness.is_none()));
        }
    }

    #[test]
    fn path_on_four_fails_diameter_and_universal() {
        let report = check_weight_graph(&SimpleGraph::path(4).unwrap());
        assert!(!report.overall);
        assert!(!report.check(CheckName::UniversalVertex).pass);
        let diameter = report.check(CheckName::DiameterLeTwo);
        assert!(!diameter.pass);
        assert_eq!(diameter.witness.as_deref(), Some("d(1,4)=3"));
        assert!(!report.check(CheckName::PowerIdempotent).pass);
    }

    #[test]
    fn star_on_six_fails_only_the_edge_bound() {
        let report = check_weight_graph(&SimpleGraph::star(6).unwrap());
        assert!(report.check(CheckName::Connected).pass);
        assert!(report.check(CheckName::UniversalVertex).pass);
        assert!(report.check(CheckName::DiameterLeTwo).pass);
        assert!(report.check(CheckName::PowerIdempotent).pass);
        let bound = report.check(CheckName::EdgeLowerBound);
        assert!(!bound.pass);
        assert_eq!(bound.witness.as_deref(), Some("q=5 < min_edges(6)=9"));
        assert!(!report.overall);
    }

    #[test]
    fn disconnected_graph_fails_with_witness() {
        let g = SimpleGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let report = check_weight_graph(&g);
        let connected = report.check(CheckName::Connected);
        assert!(!connected.pass);
        assert_eq!(connected.witness.as_deref(), Some("d(1,3)=inf"));
    }

    #[test]
    fn single_vertex_and_single_edge_pass() {
        assert!(check_weight_graph(&SimpleGraph::new(1).unwrap()).overall);
        assert!(check_weight_graph(&SimpleGraph::complete(2).unwrap()).overall);
        // p=2 without the edge fails
        assert!(!check_weight_graph(&SimpleGraph::new(2).unwrap()).overall);
    }

    #[test]
    fn keyvalue_rendering_carries_all_table_data() {
        let report = check_weight_graph(&SimpleGraph::path(4).unwrap());
        let kv = report.render_keyvalue();
        assert!(kv.contains("p=4\n"));
        assert!(kv.contains("q=3\n"));
        for check in &report.checks {
            assert!(kv.contains(&format!(
                "check.{}={}\n",
                check.name,
                if check.pass { "pass" } else { "fail" }
            )));
            if let Some(witness) = &check.witness {
                assert!(kv.contains(&format!("check.{}.witness={}\n", check.name, witness)));
            }
        }
        assert!(kv.contains("overall=fail\n"));
    }
}
