//! The `algebra` subcommand pipeline: validation, series, center, torus,
//! weight system, both graphs, condition check and the criteria battery,
//! collected into one renderable outcome.

use wg_core::criteria::{check_weight_graph, CriteriaReport};
use wg_core::graph::{to_dot, SimpleGraph};
use wg_core::lie::{Condition1Report, LieError, StructureConstants};
use wg_core::rational::format_vector;

pub struct PipelineOutcome {
    dim: usize,
    bracket_entries: usize,
    jacobi_violations: Vec<(usize, usize, usize)>,
    series: Vec<usize>,
    nilpotent: bool,
    center_dim: Option<usize>,
    torus_rank: Option<usize>,
    weights: Option<Vec<String>>,
    repeated_weights: Option<(usize, usize)>,
    sum_triples: Option<Vec<(usize, usize, usize)>>,
    self_sums: Option<Vec<(usize, usize)>>,
    raw_graph: Option<SimpleGraph>,
    weight_graph: Option<SimpleGraph>,
    condition1: Option<Condition1Report>,
    criteria: Option<CriteriaReport>,
}

pub fn run(algebra: &StructureConstants) -> PipelineOutcome {
    let validation = algebra.validate();
    let mut outcome = PipelineOutcome {
        dim: algebra.dim(),
        bracket_entries: algebra.entries().count(),
        jacobi_violations: validation.jacobi_violations.clone(),
        series: validation.lower_central_dims.clone(),
        nilpotent: validation.nilpotent,
        center_dim: None,
        torus_rank: None,
        weights: None,
        repeated_weights: None,
        sum_triples: None,
        self_sums: None,
        raw_graph: None,
        weight_graph: None,
        condition1: None,
        criteria: None,
    };
    if !validation.is_nilpotent_lie_algebra() {
        return outcome;
    }
    outcome.center_dim = Some(algebra.center().dim());
    let torus = algebra.diagonal_torus();
    outcome.torus_rank = Some(torus.rank());
    let system = match algebra.weight_system_of(&torus) {
        Ok(system) => system,
        Err(LieError::RepeatedWeights { first, second }) => {
            outcome.repeated_weights = Some((first, second));
            return outcome;
        }
        Err(other) => unreachable!("torus weights are structurally valid: {other}"),
    };
    outcome.weights = Some(
        system
            .weights()
            .iter()
            .map(|w| format_vector(w.coords()))
            .collect(),
    );
    outcome.sum_triples = Some(system.sum_triples());
    outcome.self_sums = Some(system.self_sums());
    let raw = system.raw_graph().expect("system is valid");
    let weight_graph = raw.complement();
    outcome.condition1 = Some(
        algebra
            .check_condition1(&system)
            .expect("system came from this algebra"),
    );
    outcome.criteria = Some(check_weight_graph(&weight_graph));
    outcome.raw_graph = Some(raw);
    outcome.weight_graph = Some(weight_graph);
    outcome
}

impl PipelineOutcome {
    /// Every condition of the construction holds.
    pub fn clean(&self) -> bool {
        self.jacobi_violations.is_empty()
            && self.nilpotent
            && self.repeated_weights.is_none()
            && self.condition1.as_ref().is_some_and(|c| c.holds)
            && self.criteria.as_ref().is_some_and(|c| c.overall)
    }

    /// DOT of the weight graph, vertices labeled by their weights and
    /// universal vertices highlighted.
    pub fn weight_graph_dot(&self) -> Option<String> {
        let graph = self.weight_graph.as_ref()?;
        let labels = self.weights.as_ref()?;
        Some(to_dot(graph, Some(labels), &graph.universal_vertices()))
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "algebra: dim {}, {} nonzero bracket entries\n",
            self.dim, self.bracket_entries
        );
        if self.jacobi_violations.is_empty() {
            out.push_str("jacobi: ok\n");
        } else {
            out.push_str(&format!(
                "jacobi: VIOLATED at {}\n",
                render_triples(&self.jacobi_violations)
            ));
        }
        out.push_str(&format!("lower central series: {}\n", render_dims(&self.series)));
        out.push_str(&format!(
            "nilpotent: {}\n",
            if self.nilpotent { "yes" } else { "NO" }
        ));
        if !self.jacobi_violations.is_empty() || !self.nilpotent {
            out.push_str("pipeline stopped: not a nilpotent Lie algebra\n");
            return out;
        }
        out.push_str(&format!("center dim: {}\n", self.center_dim.unwrap()));
        out.push_str(&format!("torus rank: {}\n", self.torus_rank.unwrap()));
        if let Some((first, second)) = self.repeated_weights {
            out.push_str(&format!(
                "weights: REPEATED (weights {first} and {second} coincide) — outside the multiplicity-one setting\n"
            ));
            return out;
        }
        out.push_str("weights:\n");
        for (idx, weight) in self.weights.as_ref().unwrap().iter().enumerate() {
            out.push_str(&format!("  a{} = {}\n", idx + 1, weight));
        }
        out.push_str(&format!(
            "sum triples: {}\n",
            render_triples(self.sum_triples.as_ref().unwrap())
        ));
        out.push_str(&format!(
            "self sums (2a_i = a_k): {}\n",
            render_pairs(self.self_sums.as_ref().unwrap())
        ));
        let raw = self.raw_graph.as_ref().unwrap();
        out.push_str(&format!(
            "raw graph G(R): p={} q={} edges: {}\n",
            raw.vertex_count(),
            raw.edge_count(),
            raw.edge_list_string()
        ));
        out.push_str(&format!(
            "isolated points of G(R): {} (count {}, center dim {})\n",
            render_vertices(&raw.isolated_vertices()),
            raw.isolated_vertices().len(),
            self.center_dim.unwrap()
        ));
        let weight_graph = self.weight_graph.as_ref().unwrap();
        out.push_str(&format!(
            "weight graph: p={} q={} edges: {}\n",
            weight_graph.vertex_count(),
            weight_graph.edge_count(),
            weight_graph.edge_list_string()
        ));
        let condition1 = self.condition1.as_ref().unwrap();
        if condition1.holds {
            out.push_str("condition 1 (brackets realize all weight sums): holds\n");
        } else {
            out.push_str(&format!(
                "condition 1 (brackets realize all weight sums): VIOLATED at {}\n",
                render_triples(&condition1.violations)
            ));
        }
        out.push_str(&self.criteria.as_ref().unwrap().render_text());
        out.push_str(&format!(
            "pipeline: {}\n",
            if self.clean() { "clean" } else { "FAILED" }
        ));
        out
    }

    pub fn render_keyvalue(&self) -> String {
        let mut out = format!("algebra.dim={}\n", self.dim);
        out.push_str(&format!("algebra.brackets={}\n", self.bracket_entries));
        out.push_str(&format!(
            "algebra.jacobi={}\n",
            if self.jacobi_violations.is_empty() { "ok" } else { "violated" }
        ));
        if !self.jacobi_violations.is_empty() {
            out.push_str(&format!(
                "algebra.jacobi.violations={}\n",
                render_triples(&self.jacobi_violations)
            ));
        }
        out.push_str(&format!("algebra.series={}\n", render_dims(&self.series)));
        out.push_str(&format!("algebra.nilpotent={}\n", self.nilpotent));
        if !self.jacobi_violations.is_empty() || !self.nilpotent {
            out.push_str("algebra.clean=false\n");
            return out;
        }
        out.push_str(&format!("algebra.center_dim={}\n", self.center_dim.unwrap()));
        out.push_str(&format!("algebra.torus_rank={}\n", self.torus_rank.unwrap()));
        if let Some((first, second)) = self.repeated_weights {
            out.push_str(&format!("algebra.repeated_weights={first},{second}\n"));
            out.push_str("algebra.clean=false\n");
            return out;
        }
        for (idx, weight) in self.weights.as_ref().unwrap().iter().enumerate() {
            out.push_str(&format!("algebra.weight.{}={}\n", idx + 1, weight));
        }
        out.push_str(&format!(
            "algebra.sum_triples={}\n",
            render_triples(self.sum_triples.as_ref().unwrap())
        ));
        out.push_str(&format!(
            "algebra.self_sums={}\n",
            render_pairs(self.self_sums.as_ref().unwrap())
        ));
        let raw = self.raw_graph.as_ref().unwrap();
        out.push_str(&format!("raw.p={}\n", raw.vertex_count()));
        out.push_str(&format!("raw.q={}\n", raw.edge_count()));
        out.push_str(&format!("raw.edges={}\n", raw.edge_list_string()));
        out.push_str(&format!(
            "raw.isolated={}\n",
            render_vertices(&raw.isolated_vertices())
        ));
        out.push_str(&format!("raw.isolated_count={}\n", raw.isolated_vertices().len()));
        let weight_graph = self.weight_graph.as_ref().unwrap();
        out.push_str(&format!("weight_graph.p={}\n", weight_graph.vertex_count()));
        out.push_str(&format!("weight_graph.q={}\n", weight_graph.edge_count()));
        out.push_str(&format!("weight_graph.edges={}\n", weight_graph.edge_list_string()));
        let condition1 = self.condition1.as_ref().unwrap();
        out.push_str(&format!(
            "algebra.condition1={}\n",
            if condition1.holds { "holds" } else { "violated" }
        ));
        if !condition1.holds {
            out.push_str(&format!(
                "algebra.condition1.violations={}\n",
                render_triples(&condition1.violations)
            ));
        }
        out.push_str(&self.criteria.as_ref().unwrap().render_keyvalue());
        out.push_str(&format!("algebra.clean={}\n", self.clean()));
        out
    }
}

fn render_dims(dims: &[usize]) -> String {
    dims.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn render_triples(triples: &[(usize, usize, usize)]) -> String {
    if triples.is_empty() {
        return "-".to_string();
    }
    triples
        .iter()
        .map(|(i, j, k)| format!("({i},{j},{k})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_pairs(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "-".to_string();
    }
    pairs
        .iter()
        .map(|(i, k)| format!("({i},{k})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_vertices(vertices: &[usize]) -> String {
    if vertices.is_empty() {
        return "-".to_string();
    }
    vertices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
