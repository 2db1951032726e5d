use std::fmt::{self, Write};
use std::str::FromStr;

use ssg_core::approx::{ptas_maximal_ssg, ptas_ssg};
use ssg_core::constraints::{check, FeasibilityReport, Witness};
use ssg_core::exact::{
    brute_force, solve_balanced_degree_two, solve_maximal_ssg_tree, solve_ssg_tree,
    solve_ssgw_rooted_tree, solve_tournament, DEFAULT_BRUTE_CAP,
};
use ssg_core::gadgets::{
    cardinality_to_maximal, clique_to_ssg, graph_to_ssgw, random_instance, subset_sum_labels,
    subset_sum_to_tree, BudgetRule, CliqueGadgetSpec, ISGadgetSpec, MaximalGadgetSpec, RandomSpec,
};
use ssg_core::graph::{
    classify, condense, is_acyclic, is_balanced_degree_two, is_forest, is_tournament,
    is_weakly_connected, GraphClass,
};
use ssg_core::{Error, NodeSet, ProblemKind, WeightedInstance};

use crate::format::{emit_instance, emit_solution, LabeledGraph, LabeledInstance};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Auto,
    Brute,
    TreeDp,
    Tournament,
    Eulerian,
    Ptas,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Auto,
        Algorithm::Brute,
        Algorithm::TreeDp,
        Algorithm::Tournament,
        Algorithm::Eulerian,
        Algorithm::Ptas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Brute => "brute",
            Algorithm::TreeDp => "tree-dp",
            Algorithm::Tournament => "tournament",
            Algorithm::Eulerian => "eulerian",
            Algorithm::Ptas => "ptas",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}"))
    }
}

/// Outcome of one solver run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub selected: NodeSet,
    /// Concrete algorithm that produced the set (never `Auto`).
    pub algorithm: Algorithm,
    /// Seed size, for the approximation scheme.
    pub k: Option<usize>,
}

fn exact(selected: NodeSet, algorithm: Algorithm) -> Solved {
    Solved {
        selected,
        algorithm,
        k: None,
    }
}

fn run_ptas(inst: &WeightedInstance, k: usize) -> Result<Solved, Error> {
    let r = if inst.kind().is_maximal() {
        ptas_maximal_ssg(inst, k)?
    } else {
        ptas_ssg(inst, k)?
    };
    Ok(Solved {
        selected: r.solution.selected,
        algorithm: Algorithm::Ptas,
        k: Some(k),
    })
}

fn run_brute(inst: &WeightedInstance) -> Result<Solved, Error> {
    let s =
        brute_force(inst)?.ok_or_else(|| Error::Structure("no feasible solution exists".into()))?;
    Ok(exact(s.selected, Algorithm::Brute))
}

fn run_tree_dp(inst: &WeightedInstance) -> Result<Solved, Error> {
    let s = match inst.kind() {
        ProblemKind::Ssg => solve_ssg_tree(inst)?,
        ProblemKind::MaximalSsg => solve_maximal_ssg_tree(inst)?,
        ProblemKind::Ssgw => solve_ssgw_rooted_tree(inst)?,
        ProblemKind::MaximalSsgw => {
            return Err(Error::Structure(
                "no tree dynamic program for maximal-ssgw".into(),
            ))
        }
    };
    Ok(exact(s.selected, Algorithm::TreeDp))
}

/// Runs `algorithm` on `inst`. `Auto` picks, for the closure kinds: the tree
/// program on forests, the tournament and Eulerian solvers on their classes,
/// the approximation scheme on other DAGs, brute force on small cyclic
/// inputs and the approximation scheme (on the condensation) otherwise. For
/// the weak kinds it picks the tree program on rooted forests and brute
/// force up to the node cap.
pub fn solve(inst: &WeightedInstance, algorithm: Algorithm, k: usize) -> Result<Solved, Error> {
    let g = inst.graph();
    match algorithm {
        Algorithm::Brute => run_brute(inst),
        Algorithm::TreeDp => run_tree_dp(inst),
        Algorithm::Tournament => Ok(exact(
            solve_tournament(inst)?.selected,
            Algorithm::Tournament,
        )),
        Algorithm::Eulerian => Ok(exact(
            solve_balanced_degree_two(inst)?.selected,
            Algorithm::Eulerian,
        )),
        Algorithm::Ptas => run_ptas(inst, k),
        Algorithm::Auto if inst.kind().is_weak() => {
            if inst.kind() == ProblemKind::Ssgw && is_forest(g) {
                match run_tree_dp(inst) {
                    Err(Error::Structure(_)) | Err(Error::Refused(_)) => {}
                    other => return other,
                }
            }
            if inst.node_count() <= DEFAULT_BRUTE_CAP {
                return run_brute(inst);
            }
            Err(Error::Structure(format!(
                "no applicable solver for {} on {} nodes of class {}",
                inst.kind(),
                inst.node_count(),
                classify(g)
            )))
        }
        Algorithm::Auto => {
            if is_forest(g) {
                match run_tree_dp(inst) {
                    Err(Error::Refused(_)) => {}
                    other => return other,
                }
            }
            if inst.node_count() >= 2 && is_tournament(g) {
                return solve(inst, Algorithm::Tournament, k);
            }
            if is_balanced_degree_two(g) && is_weakly_connected(g) {
                return solve(inst, Algorithm::Eulerian, k);
            }
            if !is_acyclic(g) && inst.node_count() <= DEFAULT_BRUTE_CAP {
                return run_brute(inst);
            }
            run_ptas(inst, k)
        }
    }
}

fn witness_text(inst: &LabeledInstance, w: &Witness) -> String {
    let l = |v: usize| inst.labels[v].as_str();
    match *w {
        Witness::Arc(x, y) => format!("arc {} {}", l(x), l(y)),
        Witness::Forced(x) => format!("forced {}", l(x)),
        Witness::OverBudget { weight, budget } => format!("over-budget {weight} {budget}"),
        Witness::Addable(x) => format!("addable {}", l(x)),
    }
}

/// Solution text for `solve`.
pub fn cmd_solve(
    inst: &LabeledInstance,
    algorithm: Algorithm,
    k: usize,
) -> Result<String, CliError> {
    let solved = solve(&inst.instance, algorithm, k)?;
    let report = check(&inst.instance, &solved.selected);
    let mut comment = format!("algorithm {}", solved.algorithm);
    if let Some(k) = solved.k {
        write!(comment, " k={k}").unwrap();
    }
    Ok(emit_solution(inst, &solved.selected, &report, &[comment]))
}

/// Report text for `check` and whether the selection is feasible.
pub fn cmd_check(inst: &LabeledInstance, selected: &NodeSet) -> (String, bool) {
    let report: FeasibilityReport = check(&inst.instance, selected);
    let mut out = String::new();
    let i = &inst.instance;
    writeln!(out, "problem {}", i.kind()).unwrap();
    writeln!(out, "weight {}", report.total_weight).unwrap();
    writeln!(out, "closure {}", report.satisfies_closure).unwrap();
    writeln!(out, "budget {}", report.satisfies_budget).unwrap();
    let m = match report.satisfies_maximality {
        Some(b) => b.to_string(),
        None => "n/a".to_string(),
    };
    writeln!(out, "maximality {m}").unwrap();
    let w = report
        .witness
        .as_ref()
        .map_or_else(|| "none".to_string(), |w| witness_text(inst, w));
    writeln!(out, "witness {w}").unwrap();
    writeln!(out, "feasible {}", report.is_feasible()).unwrap();
    (out, report.is_feasible())
}

pub fn cmd_classify(inst: &LabeledInstance) -> String {
    let g = inst.instance.graph();
    let c = condense(g, inst.instance.weights());
    let mut out = String::new();
    writeln!(out, "class {}", classify(g)).unwrap();
    writeln!(out, "nodes {}", g.node_count()).unwrap();
    writeln!(out, "arcs {}", g.arc_count()).unwrap();
    writeln!(out, "strong-components {}", c.component_count()).unwrap();
    writeln!(out, "weakly-connected {}", is_weakly_connected(g)).unwrap();
    out
}

pub fn generate_clique(src: &LabeledGraph, k: usize) -> Result<String, CliError> {
    let spec = CliqueGadgetSpec::new(src.graph.clone(), k)?;
    let instance = clique_to_ssg(&spec)?;
    let labels = spec.labels(&src.labels);
    let comments = vec![
        format!("clique reduction, k = {k}"),
        format!("target {}", spec.budget()),
    ];
    Ok(emit_instance(
        &LabeledInstance { instance, labels },
        &comments,
    ))
}

/// `src` supplies the DAG, weights and target `B` (its budget line).
pub fn generate_maximal(src: &LabeledInstance, p: u64) -> Result<String, CliError> {
    let i = &src.instance;
    let spec = MaximalGadgetSpec::new(i.graph().clone(), i.weights().to_vec(), p, i.budget())?;
    let (instance, q) = cardinality_to_maximal(&spec)?;
    let labels = spec.labels(&src.labels);
    let comments = vec![
        format!("cardinality reduction, p = {p}"),
        format!("threshold {q}"),
    ];
    Ok(emit_instance(
        &LabeledInstance { instance, labels },
        &comments,
    ))
}

pub fn generate_ssgw(src: &LabeledGraph, kind: ProblemKind) -> Result<String, CliError> {
    let spec = ISGadgetSpec::new(src.graph.clone())?;
    let instance = graph_to_ssgw(&spec, kind)?;
    let labels = spec.labels(&src.labels);
    Ok(emit_instance(
        &LabeledInstance { instance, labels },
        &["independent set reduction".into()],
    ))
}

pub fn generate_subset_sum(
    values: &[u64],
    budget: u64,
    kind: ProblemKind,
) -> Result<String, CliError> {
    let instance = subset_sum_to_tree(values, budget, kind)?;
    let labels = subset_sum_labels(values.len());
    Ok(emit_instance(
        &LabeledInstance { instance, labels },
        &["subset sum star".into()],
    ))
}

pub struct RandomOptions {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
    pub weight_max: u64,
    pub budget: BudgetRule,
    pub arc_probability: f64,
    pub kind: ProblemKind,
}

pub fn generate_random(o: &RandomOptions) -> Result<String, CliError> {
    let spec = RandomSpec {
        class: o.class,
        n: o.n,
        weight_max: o.weight_max,
        budget: o.budget,
        seed: o.seed,
        arc_probability: o.arc_probability,
        kind: o.kind,
    };
    let instance = random_instance(&spec)?;
    let comment = format!("random {} n={} seed={}", o.class, o.n, o.seed);
    Ok(emit_instance(
        &LabeledInstance::numbered(instance),
        &[comment],
    ))
}
