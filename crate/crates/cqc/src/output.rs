//! Pattern lines, run statistics and the comparison report.

use std::time::Duration;

use cqc_core::{to_f64, LayerPair, Pattern, Rational, Stats};
use serde::{Deserialize, Serialize};

/// Rounds to six significant digits.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

fn dec(r: Rational) -> f64 {
    sig6(to_f64(r))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub vertices: Vec<String>,
    pub e1: usize,
    pub e2: usize,
    pub gamma1: f64,
    pub gamma2: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub contrast: f64,
    pub interestingness: f64,
    /// 1 or 2: the layer with the larger γ.
    pub dense_layer: u8,
}

impl PatternRecord {
    pub fn new(graph: &LayerPair, p: &Pattern) -> Self {
        let mut vertices: Vec<String> = p
            .vertices
            .iter()
            .map(|&v| graph.label(v).to_owned())
            .collect();
        vertices.sort();
        PatternRecord {
            vertices,
            e1: p.edges[0],
            e2: p.edges[1],
            gamma1: dec(p.gamma[0]),
            gamma2: dec(p.gamma[1]),
            alpha1: dec(p.alpha[0]),
            alpha2: dec(p.alpha[1]),
            contrast: dec(p.contrast),
            interestingness: dec(p.interestingness),
            dense_layer: p.dense_layer().number(),
        }
    }
}

/// JSON lines, one pattern per line, in the given order.
pub fn pattern_lines(graph: &LayerPair, patterns: &[Pattern]) -> String {
    let mut out = String::new();
    for p in patterns {
        out.push_str(&serde_json::to_string(&PatternRecord::new(graph, p)).expect("plain data"));
        out.push('\n');
    }
    out
}

/// Everything a report needs from one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub nodes_visited: u64,
    pub patterns_emitted: u64,
    pub patterns_accepted: u64,
    pub subtrees_pruned_by_bound: u64,
    pub candidates_pruned: u64,
    pub wall_time_ms: f64,
    pub result_size: usize,
    pub sum_interestingness: f64,
    pub avg_interestingness: Option<f64>,
    /// Mean of the larger per-layer γ.
    pub avg_gamma: Option<f64>,
    pub avg_size: Option<f64>,
}

impl RunSummary {
    pub fn new(stats: &Stats, patterns: &[Pattern], wall: Duration) -> Self {
        let n = patterns.len();
        let sum_i: Rational = patterns.iter().map(|p| p.interestingness).sum();
        let sum_g: Rational = patterns.iter().map(|p| p.max_gamma()).sum();
        let sum_k: usize = patterns.iter().map(|p| p.len()).sum();
        let avg = |total: Rational| (n > 0).then(|| dec(total / Rational::from_integer(n as i64)));
        RunSummary {
            nodes_visited: stats.nodes_visited,
            patterns_emitted: stats.patterns_emitted,
            patterns_accepted: stats.patterns_accepted,
            subtrees_pruned_by_bound: stats.subtrees_pruned_by_bound,
            candidates_pruned: stats.candidates_pruned,
            wall_time_ms: sig6(wall.as_secs_f64() * 1000.0),
            result_size: n,
            sum_interestingness: dec(sum_i),
            avg_interestingness: avg(sum_i),
            avg_gamma: avg(sum_g),
            avg_size: avg(Rational::from_integer(sum_k as i64)),
        }
    }
}

fn cell(x: Option<f64>) -> String {
    x.map_or_else(|| "null".to_owned(), |v| v.to_string())
}

/// CSV with one column per run and one row per metric.
pub fn report_csv(runs: &[(String, RunSummary)]) -> String {
    let mut out = String::from("metric");
    for (name, _) in runs {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    type Metric = fn(&RunSummary) -> Option<f64>;
    let rows: [(&str, Metric); 6] = [
        ("runtime_ms", |s| Some(s.wall_time_ms)),
        ("nodes_visited", |s| Some(s.nodes_visited as f64)),
        ("avg_interestingness", |s| s.avg_interestingness),
        ("sum_interestingness", |s| Some(s.sum_interestingness)),
        ("avg_gamma", |s| s.avg_gamma),
        ("avg_size", |s| s.avg_size),
    ];
    for (metric, get) in rows {
        out.push_str(metric);
        for (_, s) in runs {
            out.push(',');
            out.push_str(&cell(get(s)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cqc_core::{fixtures, MiningParams};

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(10.0 / 3.0), 3.33333);
        assert_eq!(sig6(5.0 / 6.0), 0.833333);
        assert_eq!(sig6(1234567.0), 1234570.0);
        assert_eq!(sig6(0.0), 0.0);
    }

    #[test]
    fn five_vertex_pattern_line() {
        let g = fixtures::five_vertex_pair();
        let params = MiningParams {
            delta: Rational::from_integer(1),
            ..MiningParams::default()
        };
        let run = cqc_core::mine(&g, &params);
        let text = pattern_lines(&g, run.result.patterns());
        assert_eq!(
            text,
            "{\"vertices\":[\"A\",\"B\",\"C\",\"D\"],\"e1\":1,\"e2\":6,\"gamma1\":0.0,\"gamma2\":1.0,\
             \"alpha1\":0.166667,\"alpha2\":1.0,\"contrast\":0.833333,\"interestingness\":3.33333,\
             \"dense_layer\":2}\n"
        );
    }

    #[test]
    fn empty_run_reports_null_averages() {
        let s = RunSummary::new(&Stats::default(), &[], Duration::from_millis(3));
        let csv = report_csv(&[("only".into(), s)]);
        assert_eq!(
            csv,
            "metric,only\nruntime_ms,3\nnodes_visited,0\navg_interestingness,null\n\
             sum_interestingness,0\navg_gamma,null\navg_size,null\n"
        );
    }
}
