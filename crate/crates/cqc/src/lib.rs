//! File formats, timing and the command-line front end for `cqc-core`.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use cqc_core::baseline::{mine_complement, BaselineRun};
use cqc_core::{LayerPair, Miner, MiningParams, Pruning, Rational, Run};

pub mod edgelist;
pub mod output;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{}: malformed stats: {source}", path.display())]
    Stats {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] cqc_core::Error),
}

/// Parses `0.83`, `5/6` or `1` exactly.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let bad = || format!("not a number: {text:?}");
    if let Some((n, d)) = text.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if frac.len() > 15 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let negative = int.starts_with('-');
    let int_part: i64 = match int.trim_start_matches(['-', '+']) {
        "" => 0,
        digits => digits.parse().map_err(|_| bad())?,
    };
    let scale = 10i64.pow(frac.len() as u32);
    let frac_part: i64 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let magnitude = Rational::new(int_part * scale + frac_part, scale);
    Ok(if negative { -magnitude } else { magnitude })
}

pub struct Timed<T> {
    pub value: T,
    pub wall: Duration,
}

fn timed<T>(f: impl FnOnce() -> T) -> Timed<T> {
    let start = Instant::now();
    let value = f();
    Timed {
        value,
        wall: start.elapsed(),
    }
}

pub fn run_mine(graph: &LayerPair, params: &MiningParams, pruning: Pruning) -> Timed<Run> {
    timed(|| Miner::new(graph, params).pruning(pruning).run())
}

pub fn run_baseline(
    graph: &LayerPair,
    params: &MiningParams,
    pruning: Pruning,
) -> Timed<BaselineRun> {
    timed(|| mine_complement(graph, params, pruning))
}
