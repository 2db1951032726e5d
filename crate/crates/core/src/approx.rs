//! Seed-and-greedy approximation schemes on DAGs.
//!
//! Both algorithms enumerate every seed set `S` with `|S| <= k` (sizes
//! ascending, each size in lexicographic order), start from `desc(S)` and
//! complete greedily. Cyclic inputs are solved on their condensation and
//! expanded back.

use std::fmt;

use itertools::Itertools;

use crate::constraints::min_weight_sink;
use crate::graph::{ascendants, condense, descendants, is_acyclic, kernel, Digraph, NodeId};
use crate::{Error, NodeSet, Result, Solution, WeightedInstance};

/// Nonnegative rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        Ratio { num, den }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Guaranteed lower bound on `achieved / optimum` for [`ptas_ssg`]:
/// `k/(k+1)`, and `1/2` for the pure greedy (`k = 0`).
pub fn ssg_guarantee(k: usize) -> Ratio {
    if k == 0 {
        Ratio::new(1, 2)
    } else {
        Ratio::new(k as u64, k as u64 + 1)
    }
}

/// Guaranteed upper bound on `achieved / optimum` for [`ptas_maximal_ssg`]:
/// `(k+1)/k`, and `2` for the pure greedy (`k = 0`).
pub fn maximal_guarantee(k: usize) -> Ratio {
    if k == 0 {
        Ratio::new(2, 1)
    } else {
        Ratio::new(k as u64 + 1, k as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub solution: Solution,
    pub k: usize,
    pub guarantee: Ratio,
}

/// Approximate maximum-weight closed set within budget.
pub fn ptas_ssg(inst: &WeightedInstance, k: usize) -> Result<ApproxResult> {
    let selected = on_dag(inst, k, seed_and_fill)?;
    Ok(ApproxResult {
        solution: inst.solution(selected),
        k,
        guarantee: ssg_guarantee(k),
    })
}

/// Approximate minimum-weight maximal closed set within budget.
pub fn ptas_maximal_ssg(inst: &WeightedInstance, k: usize) -> Result<ApproxResult> {
    let selected = on_dag(inst, k, seed_and_sinks)?;
    Ok(ApproxResult {
        solution: inst.solution(selected),
        k,
        guarantee: maximal_guarantee(k),
    })
}

type DagSolver = fn(&Digraph, &[u64], u64, usize) -> NodeSet;

fn on_dag(inst: &WeightedInstance, k: usize, solve: DagSolver) -> Result<NodeSet> {
    if inst.kind().is_weak() {
        return Err(Error::structure(format!(
            "{} is not supported by the approximation schemes",
            inst.kind()
        )));
    }
    let g = inst.graph();
    if is_acyclic(g) {
        return Ok(solve(g, inst.weights(), inst.budget(), k));
    }
    let c = condense(g, inst.weights());
    let comps = solve(&c.dag, &c.component_weight, inst.budget(), k);
    Ok(c.expand(&comps))
}

fn weight(w: &[u64], s: &NodeSet) -> u64 {
    s.iter().map(|v| w[v]).sum()
}

/// Seeds of size `0..=k` in enumeration order.
fn seeds(n: usize, k: usize) -> impl Iterator<Item = NodeSet> {
    (0..=k.min(n)).flat_map(move |size| {
        (0..n)
            .combinations(size)
            .map(move |c| NodeSet::from_nodes(n, c))
    })
}

/// Descendants of `z` inside the subgraph induced by `alive`.
fn descendants_within(g: &Digraph, alive: &NodeSet, z: NodeId) -> NodeSet {
    let mut seen = NodeSet::empty(g.node_count());
    seen.insert(z);
    let mut stack = vec![z];
    while let Some(v) = stack.pop() {
        for &u in g.out_neighbors(v) {
            if alive.contains(u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen
}

fn seed_and_fill(g: &Digraph, w: &[u64], budget: u64, k: usize) -> NodeSet {
    let n = g.node_count();
    let mut best: Option<(u64, NodeSet)> = None;
    for s in seeds(n, k) {
        let mut sol = descendants(g, &s).expect("seed in range");
        let mut total = weight(w, &sol);
        if total > budget {
            continue;
        }
        let top = kernel(g, &s).expect("acyclic");
        let blocked = ascendants(g, &top).expect("in range").union(&sol);
        let mut alive = blocked.complement();
        while !alive.is_empty() {
            let pick = alive
                .iter()
                .filter(|&z| g.in_neighbors(z).iter().all(|&u| !alive.contains(u)))
                .map(|z| {
                    let d = descendants_within(g, &alive, z);
                    (weight(w, &d), z, d)
                })
                .min_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let (dw, z, d) = pick.expect("a DAG has a source");
            if total + dw <= budget {
                total += dw;
                sol.union_with(&d);
                alive.difference_with(&d);
            } else {
                alive.remove(z);
            }
        }
        if best.as_ref().is_none_or(|(bw, _)| total > *bw) {
            best = Some((total, sol));
        }
    }
    best.expect("the empty seed always fits").1
}

fn seed_and_sinks(g: &Digraph, w: &[u64], budget: u64, k: usize) -> NodeSet {
    let n = g.node_count();
    let mut best_weight: u64 = w.iter().sum();
    let mut best = NodeSet::full(n);
    for s in seeds(n, k) {
        let mut sol = descendants(g, &s).expect("seed in range");
        let mut total = weight(w, &sol);
        if total > budget {
            continue;
        }
        while let Some(z) = min_weight_sink(g, w, &sol) {
            if total + w[z] > budget {
                break;
            }
            total += w[z];
            sol.insert(z);
        }
        if total < best_weight {
            best_weight = total;
            best = sol;
        }
    }
    best
}
