//! Ratio benchmarks over seeded random suites, written as CSV.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use ssg_core::exact::{brute_force, DEFAULT_BRUTE_CAP};
use ssg_core::gadgets::{random_instance, BudgetRule, RandomSpec};
use ssg_core::graph::GraphClass;
use ssg_core::ProblemKind;

use crate::commands::{solve, Algorithm};
use crate::CliError;

pub struct Suite {
    pub classes: Vec<GraphClass>,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub kinds: Vec<ProblemKind>,
    pub algorithms: Vec<Algorithm>,
    /// Seed sizes for the approximation scheme; `None` stands for `k = n`.
    pub ks: Vec<Option<usize>>,
    pub weight_max: u64,
    pub budget_fraction: f64,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub instance_id: String,
    pub class: String,
    pub n: Option<usize>,
    pub kind: ProblemKind,
    pub algorithm: Algorithm,
    pub k: Option<usize>,
    pub achieved: Option<u64>,
    pub optimal: Option<u64>,
    pub ratio: Option<f64>,
    pub elapsed_ms: Option<f64>,
}

pub struct Report {
    pub rows: Vec<Row>,
    pub skipped: usize,
}

fn ratio(achieved: u64, optimal: u64) -> f64 {
    if optimal == 0 {
        if achieved == 0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        achieved as f64 / optimal as f64
    }
}

struct Job {
    class: GraphClass,
    n: usize,
    seed: u64,
    kind: ProblemKind,
}

pub fn run(suite: &Suite) -> Result<Report, CliError> {
    let mut jobs = Vec::new();
    for &class in &suite.classes {
        for &n in &suite.sizes {
            for &seed in &suite.seeds {
                for &kind in &suite.kinds {
                    jobs.push(Job {
                        class,
                        n,
                        seed,
                        kind,
                    });
                }
            }
        }
    }
    let results: Vec<Result<(Vec<Row>, usize), CliError>> =
        jobs.par_iter().map(|job| run_job(suite, job)).collect();
    let mut rows = Vec::new();
    let mut skipped = 0;
    for r in results {
        let (mut rs, s) = r?;
        rows.append(&mut rs);
        skipped += s;
    }
    rows.sort_by(|a, b| {
        (&a.instance_id, a.kind, a.algorithm, a.k).cmp(&(&b.instance_id, b.kind, b.algorithm, b.k))
    });
    rows.extend(summaries(&rows));
    Ok(Report { rows, skipped })
}

fn run_job(suite: &Suite, job: &Job) -> Result<(Vec<Row>, usize), CliError> {
    let mut spec = RandomSpec::new(job.class, job.n, job.seed);
    spec.kind = job.kind;
    spec.weight_max = suite.weight_max;
    spec.budget = BudgetRule::Fraction(suite.budget_fraction);
    let inst = random_instance(&spec)?;
    let optimal = if job.n <= DEFAULT_BRUTE_CAP {
        brute_force(&inst)?.map(|s| s.weight)
    } else {
        None
    };
    let id = format!("{}-n{:03}-s{:06}", job.class, job.n, job.seed);
    let mut rows = Vec::new();
    let mut skipped = 0;
    for &algorithm in &suite.algorithms {
        let ks: Vec<Option<usize>> = if algorithm == Algorithm::Ptas {
            suite.ks.iter().map(|k| Some(k.unwrap_or(job.n))).collect()
        } else {
            vec![None]
        };
        for k in ks {
            let start = Instant::now();
            let solved = match solve(&inst, algorithm, k.unwrap_or(2)) {
                Ok(s) => s,
                Err(ssg_core::Error::Structure(_)) | Err(ssg_core::Error::Refused(_)) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            let achieved = inst.weight_of(&solved.selected);
            rows.push(Row {
                instance_id: id.clone(),
                class: job.class.to_string(),
                n: Some(job.n),
                kind: job.kind,
                algorithm,
                k,
                achieved: Some(achieved),
                optimal,
                ratio: optimal.map(|o| ratio(achieved, o)),
                elapsed_ms: suite.timing.then_some(elapsed),
            });
        }
    }
    Ok((rows, skipped))
}

/// One row per (kind, algorithm, k) with the worst ratio: the smallest for
/// maximization kinds and the largest for the maximal kinds.
fn summaries(rows: &[Row]) -> Vec<Row> {
    let mut worst: BTreeMap<(ProblemKind, Algorithm, Option<usize>), Option<f64>> = BTreeMap::new();
    for r in rows {
        let entry = worst.entry((r.kind, r.algorithm, r.k)).or_insert(None);
        if let Some(x) = r.ratio {
            *entry = Some(match *entry {
                None => x,
                Some(w) if r.kind.is_maximal() => w.max(x),
                Some(w) => w.min(x),
            });
        }
    }
    worst
        .into_iter()
        .map(|((kind, algorithm, k), ratio)| Row {
            instance_id: "summary".into(),
            class: "*".into(),
            n: None,
            kind,
            algorithm,
            k,
            achieved: None,
            optimal: None,
            ratio,
            elapsed_ms: None,
        })
        .collect()
}

pub const HEADER: [&str; 10] = [
    "instance-id",
    "class",
    "n",
    "kind",
    "algorithm",
    "k",
    "achieved-weight",
    "optimal-weight",
    "ratio",
    "elapsed-ms",
];

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn to_csv(report: &Report) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(HEADER).map_err(io)?;
    for r in &report.rows {
        let optimal = if r.instance_id == "summary" {
            String::new()
        } else {
            r.optimal
                .map_or_else(|| "optimal-unknown".to_string(), |o| o.to_string())
        };
        w.write_record([
            r.instance_id.clone(),
            r.class.clone(),
            opt(r.n),
            r.kind.to_string(),
            r.algorithm.to_string(),
            opt(r.k),
            opt(r.achieved),
            optimal,
            r.ratio.map(|x| format!("{x:.6}")).unwrap_or_default(),
            r.elapsed_ms.map(|x| format!("{x:.3}")).unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}
