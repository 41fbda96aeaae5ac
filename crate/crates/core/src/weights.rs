//! Multiplicity-one weight systems over the rationals and the graphs they
//! induce.
//!
//! A weight system is an ordered list of pairwise distinct rational vectors
//! `a_1..a_p` (the weights of a torus action, expressed in a basis of the
//! torus). Vertices `p_i` and `p_j` of the *raw graph* `G(R)` are joined when
//! `a_i + a_j` is again a weight; the *weight graph* is its complement.

use std::collections::HashMap;

use num_rational::BigRational;
use thiserror::Error;

use crate::graph::{SimpleGraph, CANONICAL_MAX};
use crate::rational::{format_rational, format_vector, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight system must contain at least one weight")]
    Empty,
    #[error("weight {index} has {got} coordinates, expected rank {rank}")]
    LengthMismatch { index: usize, got: usize, rank: usize },
    #[error("weights {first} and {second} coincide (multiplicity-one systems only)")]
    RepeatedWeights { first: usize, second: usize },
    #[error("{op} supports at most {max} weights, got {p}")]
    CapacityExceeded { op: &'static str, p: usize, max: usize },
    #[error("graph construction failed: {0}")]
    Graph(#[from] crate::graph::GraphError),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A single weight: a rational coordinate vector of length = torus rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<BigRational>,
}

impl Weight {
    pub fn new(coords: Vec<BigRational>) -> Weight {
        Weight { coords }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        format_vector(&self.coords)
    }
}

/// Ordered list of distinct weights `a_1..a_p`, all of the declared rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    rank: usize,
    weights: Vec<Weight>,
}

impl WeightSystem {
    pub fn new(rank: usize, weights: Vec<Weight>) -> Result<WeightSystem, WeightError> {
        if weights.is_empty() {
            return Err(WeightError::Empty);
        }
        for (idx, w) in weights.iter().enumerate() {
            if w.coords.len() != rank {
                return Err(WeightError::LengthMismatch {
                    index: idx + 1,
                    got: w.coords.len(),
                    rank,
                });
            }
        }
        for i in 0..weights.len() {
            for j in i + 1..weights.len() {
                if weights[i] == weights[j] {
                    return Err(WeightError::RepeatedWeights {
                        first: i + 1,
                        second: j + 1,
                    });
                }
            }
        }
        Ok(WeightSystem { rank, weights })
    }

    /// Convenience constructor from integer coordinate rows.
    pub fn from_integers(rows: &[&[i64]]) -> Result<WeightSystem, WeightError> {
        let rank = rows.first().map_or(0, |r| r.len());
        let weights = rows
            .iter()
            .map(|row| {
                Weight::new(
                    row.iter()
                        .map(|&v| BigRational::from_integer(v.into()))
                        .collect(),
                )
            })
            .collect();
        WeightSystem::new(rank, weights)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i - 1]
    }

    fn index_of(&self) -> HashMap<&Weight, usize> {
        self.weights
            .iter()
            .enumerate()
            .map(|(idx, w)| (w, idx + 1))
            .collect()
    }

    /// All `(i, j, k)` with `i < j` and `a_i + a_j = a_k`, sorted
    /// lexicographically. `k` is unique when it exists (weights distinct).
    pub fn sum_triples(&self) -> Vec<(usize, usize, usize)> {
        let index = self.index_of();
        let p = self.weights.len();
        let mut triples = Vec::new();
        for i in 1..=p {
            for j in i + 1..=p {
                let sum = self.weight(i).add(self.weight(j));
                if let Some(&k) = index.get(&sum) {
                    triples.push((i, j, k));
                }
            }
        }
        triples
    }

    /// Diagnostic: pairs `(i, k)` with `2 a_i = a_k`. Self-sums never create
    /// edges (graphs are loopless) but are surfaced for inspection.
    pub fn self_sums(&self) -> Vec<(usize, usize)> {
        let index = self.index_of();
        (1..=self.weights.len())
            .filter_map(|i| {
                let doubled = self.weight(i).add(self.weight(i));
                index.get(&doubled).map(|&k| (i, k))
            })
            .collect()
    }

    /// The graph `G(R)`: `{i,j}` is an edge iff `a_i + a_j` is a weight.
    pub fn raw_graph(&self) -> Result<SimpleGraph, WeightError> {
        let mut graph = SimpleGraph::new(self.weights.len())?;
        for (i, j, _) in self.sum_triples() {
            graph.add_edge(i, j)?;
        }
        Ok(graph)
    }

    /// The weight graph: complement of [`Self::raw_graph`].
    pub fn weight_graph(&self) -> Result<SimpleGraph, WeightError> {
        Ok(self.raw_graph()?.complement())
    }

    /// Searches for a permutation `s` of `1..=p` such that every sum triple
    /// `(i,j,k)` maps to an index relation `s(i) + s(j) = s(k)`.
    ///
    /// Exhaustive backtracking, capped at 10 weights. `None` means the search
    /// exhausted all permutations, not a proof of nonexistence beyond that.
    /// The lexicographically first compatible permutation is returned, so a
    /// vacuously compatible system yields the identity.
    pub fn index_compatible_order(&self) -> Result<Option<Vec<usize>>, WeightError> {
        let p = self.weights.len();
        if p > CANONICAL_MAX {
            return Err(WeightError::CapacityExceeded {
                op: "index_compatible_order",
                p,
                max: CANONICAL_MAX,
            });
        }
        let triples = self.sum_triples();
        let mut assignment = vec![0usize; p];
        let mut used = vec![false; p + 1];
        if search_order(&triples, &mut assignment, &mut used, 0, p) {
            Ok(Some(assignment))
        } else {
            Ok(None)
        }
    }
}

fn search_order(
    triples: &[(usize, usize, usize)],
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
    p: usize,
) -> bool {
    if depth == p {
        return true;
    }
    'values: for value in 1..=p {
        if used[value] {
            continue;
        }
        assignment[depth] = value;
        // check every triple that just became fully assigned
        for &(i, j, k) in triples {
            let (i, j, k) = (i - 1, j - 1, k - 1);
            if i.max(j).max(k) == depth {
                let (si, sj, sk) = (assignment[i], assignment[j], assignment[k]);
                if si + sj != sk {
                    continue 'values;
                }
            }
        }
        used[value] = true;
        if search_order(triples, assignment, used, depth + 1, p) {
            return true;
        }
        used[value] = false;
    }
    assignment[depth] = 0;
    false
}

/// Maximal number of weight sums on `p` weights:
/// `sum_{j=1}^{floor(p/2)} (p - 2j)`, equivalently the number of pairs
/// `i < j` with `i + j <= p`.
pub fn max_weight_sums(p: usize) -> usize {
    (1..=p / 2).map(|j| p - 2 * j).sum()
}

/// Parses the weight-system text format: first line `p r`, then `p` lines of
/// `r` rationals each (`num/den` or integer); `#` comments allowed.
pub fn parse_weight_system(text: &str) -> Result<WeightSystem, WeightError> {
    let mut lines = crate::graph::io_data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `p r` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(header_line, "header must be `p r`"));
    }
    let p: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(header_line, format!("invalid weight count `{}`", fields[0])))?;
    let rank: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(header_line, format!("invalid rank `{}`", fields[1])))?;
    let mut weights = Vec::with_capacity(p);
    for (line, body) in lines {
        if weights.len() == p {
            return Err(parse_err(line, format!("expected {p} weight lines, found more")));
        }
        let coords: Result<Vec<BigRational>, WeightError> = body
            .split_whitespace()
            .map(|tok| parse_rational(tok).map_err(|e| parse_err(line, e.to_string())))
            .collect();
        let coords = coords?;
        if coords.len() != rank {
            return Err(parse_err(
                line,
                format!("expected {rank} coordinates, got {}", coords.len()),
            ));
        }
        weights.push(Weight::new(coords));
    }
    if weights.len() != p {
        return Err(parse_err(
            header_line,
            format!("declared {p} weights, found {}", weights.len()),
        ));
    }
    WeightSystem::new(rank, weights)
}

pub fn write_weight_system(system: &WeightSystem) -> String {
    let mut out = format!("{} {}\n", system.len(), system.rank());
    for weight in system.weights() {
        let line: Vec<String> = weight.coords().iter().map(format_rational).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> WeightError {
    WeightError::Parse {
        line,
        message: message.into(),
    }
}
