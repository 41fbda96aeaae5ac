//! Isomorph-free generation of small graphs and the candidate filter
//! pipeline reproducing the worked `p = 6` reduction.
//!
//! Two generators back [`enumerate_graphs`]:
//! - `p <= 6`: exhaustive labeled enumeration (all `2^C(p,2)` bit masks) with
//!   canonical-form deduplication;
//! - `p = 7, 8`: orderly generation — extend each canonically labeled graph
//!   on `n-1` vertices by a new last vertex with every possible neighborhood
//!   and keep exactly the extensions that are already canonically labeled.
//!   Deleting the last vertex of a canonical code gives a canonical code (the
//!   code prefix), so every class is produced exactly once and no
//!   deduplication is needed.
//!
//! All outputs are sorted by (edge count, canonical code), so repeated runs
//! are byte-identical.

use thiserror::Error;

use crate::criteria::{self, check_weight_graph, CheckName};
use crate::graph::{code_to_rows, identity_code, min_code, SimpleGraph};

/// Enumeration ceiling: 12,346 classes at `p = 8` is the intended maximum.
pub const ENUMERATION_MAX: usize = 8;

/// Elimination count quoted in the published worked example for `p = 6`.
///
/// Audited, not assumed: reports print the computed count under the
/// documented convention (connected classes with `p-1 <= q < min_edges(p)`)
/// next to this figure and flag agreement or disagreement.
pub const PUBLISHED_P6_ELIMINATION: usize = 66;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("{op} requires {min} <= p <= {max}, got {p}")]
    OutOfRange {
        op: &'static str,
        p: usize,
        min: usize,
        max: usize,
    },
}

/// One canonically labeled representative per isomorphism class on `p`
/// vertices, sorted by (edge count, canonical code).
pub fn enumerate_graphs(p: usize) -> Result<Vec<SimpleGraph>, EnumerationError> {
    if p == 0 || p > ENUMERATION_MAX {
        return Err(EnumerationError::OutOfRange {
            op: "enumerate_graphs",
            p,
            min: 1,
            max: ENUMERATION_MAX,
        });
    }
    let codes = if p <= 6 {
        exhaustive_codes(p)
    } else {
        orderly_codes(p)
    };
    let mut codes = codes;
    codes.sort_by_key(|&code| (code.count_ones(), code));
    Ok(codes
        .into_iter()
        .map(|code| SimpleGraph::from_rows(code_to_rows(p, code)))
        .collect())
}

/// As [`enumerate_graphs`], keeping only representatives satisfying `filter`.
pub fn enumerate_graphs_where(
    p: usize,
    mut filter: impl FnMut(&SimpleGraph) -> bool,
) -> Result<Vec<SimpleGraph>, EnumerationError> {
    Ok(enumerate_graphs(p)?.into_iter().filter(|g| filter(g)).collect())
}

/// Exhaustive labeled enumeration + canonical dedup (`p <= 6`).
fn exhaustive_codes(p: usize) -> Vec<u64> {
    let total_bits = p * (p - 1) / 2;
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..1u64 << total_bits {
        seen.insert(min_code(&code_to_rows(p, mask)));
    }
    seen.into_iter().collect()
}

/// Orderly generation by vertex extension with a canonicity test.
fn orderly_codes(p: usize) -> Vec<u64> {
    let mut level: Vec<u64> = vec![0]; // the single graph on one vertex
    for n in 2..=p {
        let mut next = Vec::new();
        for &parent in &level {
            for mask in 0u64..1 << (n - 1) {
                // append the new vertex's column: bits (0,n-1)..(n-2,n-1)
                let mut column = 0u64;
                for s in 0..n - 1 {
                    column |= (mask >> s & 1) << (n - 2 - s);
                }
                let candidate = parent << (n - 1) | column;
                let mut rows = code_to_rows(n - 1, parent);
                rows.push(mask);
                for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                debug_assert_eq!(identity_code(&rows), candidate);
                if min_code(&rows) == candidate {
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    level
}

/// Candidate bookkeeping for one vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub p: usize,
    pub total_graphs: usize,
    pub connected_graphs: usize,
    /// Count of isomorphism classes per edge count `q = 0..=C(p,2)`.
    pub edge_histogram: Vec<usize>,
    pub naive_min_edges: usize,
    pub min_edges: usize,
    /// Connected classes with `q >= p - 1` (the coarse bound).
    pub candidates_naive: usize,
    /// Classes passing the full necessary-condition battery.
    pub candidates_strict: usize,
    /// Connected classes with `p - 1 <= q < min_edges(p)`: ruled out by the
    /// sharp bound but not the coarse one.
    pub eliminated_by_bound: usize,
}

impl EnumerationReport {
    /// Computed elimination versus the published figure (worked example is
    /// for `p = 6` only).
    pub fn published_comparison(&self) -> Option<(usize, bool)> {
        (self.p == 6).then_some((
            PUBLISHED_P6_ELIMINATION,
            self.eliminated_by_bound == PUBLISHED_P6_ELIMINATION,
        ))
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("enumeration report for p={}\n", self.p);
        out.push_str(&format!("  isomorphism classes: {}\n", self.total_graphs));
        out.push_str(&format!("  connected classes:   {}\n", self.connected_graphs));
        let histogram: Vec<String> = self.edge_histogram.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  classes by edge count q=0..{}: {}\n",
            self.edge_histogram.len() - 1,
            histogram.join(" ")
        ));
        out.push_str(&format!(
            "  edge bounds: naive q >= {}, sharp q >= {}\n",
            self.naive_min_edges, self.min_edges
        ));
        out.push_str(&format!(
            "  candidates by the naive bound (connected, q >= {}): {}\n",
            self.naive_min_edges, self.candidates_naive
        ));
        out.push_str(&format!(
            "  eliminated by the sharp bound ({} <= q < {}): {}\n",
            self.naive_min_edges, self.min_edges, self.eliminated_by_bound
        ));
        out.push_str(&format!(
            "  candidates passing every check: {}\n",
            self.candidates_strict
        ));
        if let Some((published, agrees)) = self.published_comparison() {
            out.push_str(&format!(
                "  worked-example audit: computed elimination {} vs published {} -> {}\n",
                self.eliminated_by_bound,
                published,
                if agrees { "agreement" } else { "DISAGREEMENT" }
            ));
            out.push_str(
                "  (convention: connected isomorphism classes with p-1 <= q < min_edges(p))\n",
            );
        }
        out
    }

    pub fn render_keyvalue(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("enum.p={}\n", self.p));
        out.push_str(&format!("enum.total={}\n", self.total_graphs));
        out.push_str(&format!("enum.connected={}\n", self.connected_graphs));
        for (q, count) in self.edge_histogram.iter().enumerate() {
            out.push_str(&format!("enum.histogram.{q}={count}\n"));
        }
        out.push_str(&format!("enum.naive_min_edges={}\n", self.naive_min_edges));
        out.push_str(&format!("enum.min_edges={}\n", self.min_edges));
        out.push_str(&format!("enum.candidates_naive={}\n", self.candidates_naive));
        out.push_str(&format!("enum.candidates_strict={}\n", self.candidates_strict));
        out.push_str(&format!("enum.eliminated_by_bound={}\n", self.eliminated_by_bound));
        if let Some((published, agrees)) = self.published_comparison() {
            out.push_str(&format!("enum.published_elimination={published}\n"));
            out.push_str(&format!("enum.published_agreement={agrees}\n"));
        }
        out
    }
}

fn check_range(op: &'static str, p: usize) -> Result<(), EnumerationError> {
    if !(3..=ENUMERATION_MAX).contains(&p) {
        return Err(EnumerationError::OutOfRange {
            op,
            p,
            min: 3,
            max: ENUMERATION_MAX,
        });
    }
    Ok(())
}

/// Full candidate report for `3 <= p <= 8`.
pub fn candidate_report(p: usize) -> Result<EnumerationReport, EnumerationError> {
    check_range("candidate_report", p)?;
    let graphs = enumerate_graphs(p)?;
    Ok(candidate_report_over(p, &graphs))
}

pub(crate) fn candidate_report_over(p: usize, graphs: &[SimpleGraph]) -> EnumerationReport {
    let naive = criteria::naive_min_edges(p);
    let sharp = criteria::min_edges(p);
    let mut edge_histogram = vec![0usize; p * (p - 1) / 2 + 1];
    let mut connected_graphs = 0;
    let mut candidates_naive = 0;
    let mut candidates_strict = 0;
    let mut eliminated_by_bound = 0;
    for graph in graphs {
        let q = graph.edge_count();
        edge_histogram[q] += 1;
        let connected = graph.is_connected();
        if connected {
            connected_graphs += 1;
            if q >= naive {
                candidates_naive += 1;
            }
            if q >= naive && q < sharp {
                eliminated_by_bound += 1;
            }
        }
        if check_weight_graph(graph).overall {
            candidates_strict += 1;
        }
    }
    EnumerationReport {
        p,
        total_graphs: graphs.len(),
        connected_graphs,
        edge_histogram,
        naive_min_edges: naive,
        min_edges: sharp,
        candidates_naive,
        candidates_strict,
        eliminated_by_bound,
    }
}

/// Cumulative survivor counts through the necessary-condition stages:
/// all -> connected -> universal vertex -> diameter <= 2 -> power stability
/// -> edge bound.
pub fn filter_pipeline(p: usize) -> Result<Vec<(String, usize)>, EnumerationError> {
    check_range("filter_pipeline", p)?;
    let graphs = enumerate_graphs(p)?;
    Ok(filter_pipeline_over(&graphs))
}

pub(crate) fn filter_pipeline_over(graphs: &[SimpleGraph]) -> Vec<(String, usize)> {
    let mut counts = vec![("all".to_string(), graphs.len())];
    let mut survivors: Vec<usize> = vec![graphs.len(); CheckName::ALL.len()];
    for graph in graphs {
        let report = check_weight_graph(graph);
        for (idx, check) in report.checks.iter().enumerate() {
            if !check.pass {
                for count in survivors.iter_mut().skip(idx) {
                    *count -= 1;
                }
                break;
            }
        }
    }
    for (name, count) in CheckName::ALL.iter().zip(survivors) {
        counts.push((name.as_str().to_string(), count));
    }
    counts
}
