//! Line-oriented text formats: instances, solutions and undirected edge
//! lists. `#` starts a comment anywhere on a line; blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Write;

use ssg_core::constraints::FeasibilityReport;
use ssg_core::gadgets::UndirectedGraph;
use ssg_core::{Digraph, NodeSet, ProblemKind, WeightedInstance};

use crate::CliError;

/// An instance together with its node labels (`labels[id]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledInstance {
    pub instance: WeightedInstance,
    pub labels: Vec<String>,
}

impl LabeledInstance {
    /// Labels `v0`, `v1`, ... in id order.
    pub fn numbered(instance: WeightedInstance) -> Self {
        let labels = (0..instance.node_count())
            .map(|v| format!("v{v}"))
            .collect();
        LabeledInstance { instance, labels }
    }

    pub fn index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }
}

fn parse_error(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("line {line}: {msg}"))
}

/// Non-empty, comment-stripped lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_u64(line: usize, what: &str, tok: &str) -> Result<u64, CliError> {
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(
            line,
            format!("{what} must be a nonnegative decimal integer, got {tok:?}"),
        ));
    }
    tok.parse::<u64>()
        .ok()
        .filter(|&v| v <= ssg_core::WEIGHT_LIMIT)
        .ok_or_else(|| parse_error(line, format!("{what} {tok} exceeds 2^63 - 1")))
}

fn expect_args(line: usize, tokens: &[&str], n: usize) -> Result<(), CliError> {
    if tokens.len() != n + 1 {
        return Err(parse_error(
            line,
            format!(
                "`{}` takes {n} argument(s), got {}",
                tokens[0],
                tokens.len() - 1
            ),
        ));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<LabeledInstance, CliError> {
    let mut kind: Option<ProblemKind> = None;
    let mut budget: Option<u64> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut weights: Vec<u64> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen_arcs: HashMap<(usize, usize), usize> = HashMap::new();
    for (line, t) in content_lines(text) {
        match t[0] {
            "problem" => {
                expect_args(line, &t, 1)?;
                if kind.is_some() {
                    return Err(parse_error(line, "duplicate `problem` line"));
                }
                kind = Some(t[1].parse().map_err(|e| parse_error(line, e))?);
            }
            "budget" => {
                expect_args(line, &t, 1)?;
                if budget.is_some() {
                    return Err(parse_error(line, "duplicate `budget` line"));
                }
                budget = Some(parse_u64(line, "budget", t[1])?);
            }
            "node" => {
                expect_args(line, &t, 2)?;
                let w = parse_u64(line, "weight", t[2])?;
                if ids.insert(t[1].to_string(), labels.len()).is_some() {
                    return Err(parse_error(
                        line,
                        format!("duplicate node label {:?}", t[1]),
                    ));
                }
                labels.push(t[1].to_string());
                weights.push(w);
            }
            "arc" => {
                expect_args(line, &t, 2)?;
                let lookup = |l: &str| {
                    ids.get(l)
                        .copied()
                        .ok_or_else(|| parse_error(line, format!("unknown node label {l:?}")))
                };
                let (u, v) = (lookup(t[1])?, lookup(t[2])?);
                if u == v {
                    return Err(parse_error(line, format!("loop on {:?}", t[1])));
                }
                if let Some(first) = seen_arcs.insert((u, v), line) {
                    return Err(parse_error(
                        line,
                        format!("duplicate arc (first on line {first})"),
                    ));
                }
                arcs.push((u, v));
            }
            other => return Err(parse_error(line, format!("unknown directive {other:?}"))),
        }
    }
    let kind = kind.ok_or_else(|| CliError::Parse("missing `problem` line".into()))?;
    let budget = budget.ok_or_else(|| CliError::Parse("missing `budget` line".into()))?;
    let graph =
        Digraph::from_arcs(labels.len(), arcs).map_err(|e| CliError::Parse(e.to_string()))?;
    let instance = WeightedInstance::new(graph, weights, budget, kind)
        .map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(LabeledInstance { instance, labels })
}

/// Nodes in id order, arcs in lexicographic id order, preceded by the given
/// comment lines.
pub fn emit_instance(inst: &LabeledInstance, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    let i = &inst.instance;
    writeln!(out, "problem {}", i.kind()).unwrap();
    writeln!(out, "budget {}", i.budget()).unwrap();
    for (v, label) in inst.labels.iter().enumerate() {
        writeln!(out, "node {label} {}", i.weight(v)).unwrap();
    }
    for (u, v) in i.graph().arcs() {
        writeln!(out, "arc {} {}", inst.labels[u], inst.labels[v]).unwrap();
    }
    out
}

/// Parsed solution file. The header fields are optional so that
/// hand-written selections can be checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFile {
    pub weight: Option<u64>,
    pub size: Option<usize>,
    pub selected: Vec<String>,
    pub feasible: Option<bool>,
}

impl SolutionFile {
    /// Resolves labels against an instance and checks the declared header.
    pub fn resolve(&self, inst: &LabeledInstance) -> Result<NodeSet, CliError> {
        let index = inst.index();
        let mut set = NodeSet::empty(inst.labels.len());
        for l in &self.selected {
            let v = index.get(l.as_str()).ok_or_else(|| {
                CliError::Parse(format!(
                    "selected label {l:?} is not a node of the instance"
                ))
            })?;
            set.insert(*v);
        }
        let w = inst.instance.weight_of(&set);
        if let Some(declared) = self.weight.filter(|&d| d != w) {
            return Err(CliError::Parse(format!(
                "declared weight {declared} but the selected nodes weigh {w}"
            )));
        }
        if let Some(declared) = self.size.filter(|&d| d != set.len()) {
            return Err(CliError::Parse(format!(
                "declared size {declared} but {} nodes are selected",
                set.len()
            )));
        }
        Ok(set)
    }
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, CliError> {
    let mut sol = SolutionFile {
        weight: None,
        size: None,
        selected: Vec::new(),
        feasible: None,
    };
    let mut seen = HashMap::new();
    for (line, t) in content_lines(text) {
        match t[0] {
            "weight" => {
                expect_args(line, &t, 1)?;
                sol.weight = Some(parse_u64(line, "weight", t[1])?);
            }
            "size" => {
                expect_args(line, &t, 1)?;
                sol.size = Some(parse_u64(line, "size", t[1])? as usize);
            }
            "select" => {
                expect_args(line, &t, 1)?;
                if let Some(first) = seen.insert(t[1].to_string(), line) {
                    return Err(parse_error(
                        line,
                        format!("{:?} already selected on line {first}", t[1]),
                    ));
                }
                sol.selected.push(t[1].to_string());
            }
            "feasible" => {
                sol.feasible = Some(match t.get(1) {
                    Some(&"true") => true,
                    Some(&"false") => false,
                    _ => return Err(parse_error(line, "`feasible` takes true or false")),
                });
            }
            other => return Err(parse_error(line, format!("unknown directive {other:?}"))),
        }
    }
    Ok(sol)
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

/// Solution text with labels in sorted order and a feasibility trailer.
pub fn emit_solution(
    inst: &LabeledInstance,
    selected: &NodeSet,
    report: &FeasibilityReport,
    comments: &[String],
) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "weight {}", inst.instance.weight_of(selected)).unwrap();
    writeln!(out, "size {}", selected.len()).unwrap();
    let mut names: Vec<&str> = selected.iter().map(|v| inst.labels[v].as_str()).collect();
    names.sort_unstable();
    for l in names {
        writeln!(out, "select {l}").unwrap();
    }
    writeln!(
        out,
        "feasible {} closure={} budget={} maximality={}",
        report.is_feasible(),
        report.satisfies_closure,
        report.satisfies_budget,
        flag(report.satisfies_maximality)
    )
    .unwrap();
    out
}

/// Undirected source graph with its node labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: UndirectedGraph,
    pub labels: Vec<String>,
}

/// `edge <u> <v>` lines, plus optional `node <label>` lines for isolated
/// nodes. Labels that are all integers are numbered in numeric order,
/// otherwise in string order.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, CliError> {
    let mut names: Vec<String> = Vec::new();
    let mut raw_edges: Vec<(usize, String, String)> = Vec::new();
    for (line, t) in content_lines(text) {
        match t[0] {
            "edge" => {
                expect_args(line, &t, 2)?;
                raw_edges.push((line, t[1].to_string(), t[2].to_string()));
                names.push(t[1].to_string());
                names.push(t[2].to_string());
            }
            "node" => {
                expect_args(line, &t, 1)?;
                names.push(t[1].to_string());
            }
            other => return Err(parse_error(line, format!("unknown directive {other:?}"))),
        }
    }
    names.sort_by(|a, b| match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    });
    names.dedup();
    let ids: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    for (line, a, b) in &raw_edges {
        let (u, v) = (ids[a.as_str()], ids[b.as_str()]);
        if u == v {
            return Err(parse_error(*line, format!("loop on {a:?}")));
        }
        if let Some(first) = seen.insert((u.min(v), u.max(v)), *line) {
            return Err(parse_error(
                *line,
                format!("duplicate edge (first on line {first})"),
            ));
        }
        edges.push((u, v));
    }
    let graph =
        UndirectedGraph::new(names.len(), edges).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(LabeledGraph {
        graph,
        labels: names,
    })
}

pub fn emit_edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for v in 0..g.graph.node_count() {
        if g.graph.degree(v) == 0 {
            writeln!(out, "node {}", g.labels[v]).unwrap();
        }
    }
    for &(u, v) in g.graph.edges() {
        writeln!(out, "edge {} {}", g.labels[u], g.labels[v]).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const STAR: &str = "# subset sum star\nproblem ssg\nbudget 8\nnode x1 3\nnode x2 5\nnode x3 7\nnode r 0\narc x1 r\narc x2 r # inline\narc x3 r\n";

    #[test]
    fn parses_star() {
        let i = parse_instance(STAR).unwrap();
        assert_eq!(i.labels, vec!["x1", "x2", "x3", "r"]);
        assert_eq!(i.instance.budget(), 8);
        assert_eq!(i.instance.graph().arc_count(), 3);
        assert_eq!(parse_instance(&emit_instance(&i, &[])).unwrap(), i);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("problem ssg\nbudget 1\nnode a 1\nnode a 2\n", "line 4"),
            ("problem ssg\nbudget 1\nnode a 1\narc a b\n", "line 4"),
            ("problem ssg\nbudget 1\nnode a 1\narc a a\n", "line 4"),
            (
                "problem ssg\nbudget 1\nnode a 1\nnode b 1\narc a b\n\narc a b\n",
                "line 7",
            ),
            ("problem ssg\nbudget -1\n", "line 2"),
            ("problem lazy\n", "line 1"),
            ("problem ssg\nbudget 1\nnode a 1.5\n", "line 3"),
            ("problem ssg\nbudget 99999999999999999999\n", "line 2"),
        ];
        for (text, needle) in cases {
            match parse_instance(text) {
                Err(CliError::Parse(msg)) => assert!(msg.contains(needle), "{msg}"),
                other => panic!("expected parse error, got {other:?}"),
            }
        }
        assert!(matches!(
            parse_instance("budget 1\n"),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn solution_round_trip() {
        let text = "weight 8\nsize 2\nselect a\nselect b\nfeasible true closure=true budget=true maximality=n/a\n";
        let s = parse_solution(text).unwrap();
        assert_eq!(s.weight, Some(8));
        assert_eq!(s.selected, vec!["a", "b"]);
        assert_eq!(s.feasible, Some(true));
        assert!(parse_solution("select a\nselect a\n").is_err());
    }

    #[test]
    fn edge_list_numeric_order() {
        let g = parse_edge_list("edge 10 2\nedge 2 3\nnode 1\n").unwrap();
        assert_eq!(g.labels, vec!["1", "2", "3", "10"]);
        assert!(g.graph.has_edge(1, 3));
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("edge a a\n").is_err());
        assert!(parse_edge_list("edge a b\nedge b a\n").is_err());
    }
}
