//! Exact pseudo-polynomial solvers on oriented forests.

use super::treedp::{Init, Rules, TreeDp};
use super::weightset::WeightSet;
use crate::graph::{is_forest, rooted_forest, rooted_forest_preferring, Digraph, NodeId, NodeSet};
use crate::{Error, ProblemKind, Result, Solution, WeightedInstance};

/// Largest budget the tree solvers accept by default.
pub const DEFAULT_B_CAP: u64 = 1_000_000;

const PLUS: usize = 0;
const MINUS: usize = 1;

fn ssg_rules() -> Rules {
    Rules {
        init: vec![Init::Own, Init::Zero],
        selected: vec![true, false],
        node_states: 2,
        out_child: vec![
            (PLUS, PLUS, PLUS),
            (MINUS, PLUS, MINUS),
            (MINUS, MINUS, MINUS),
        ],
        in_child: vec![
            (PLUS, PLUS, PLUS),
            (PLUS, MINUS, PLUS),
            (MINUS, MINUS, MINUS),
        ],
        roots: vec![PLUS, MINUS],
    }
}

fn require_forest(g: &Digraph) -> Result<()> {
    if is_forest(g) {
        Ok(())
    } else {
        Err(Error::structure(
            "underlying undirected graph is not a forest",
        ))
    }
}

/// Table width: weights above `min(B, w(V))` are never needed.
fn table_cap(inst: &WeightedInstance, b_cap: u64) -> Result<usize> {
    let cap = inst.budget().min(inst.total_weight());
    if cap > b_cap {
        return Err(Error::Refused(format!(
            "budget {cap} exceeds the table cap {b_cap}"
        )));
    }
    Ok(cap as usize)
}

/// Per-subtree feasibility vectors of the closure problem.
///
/// `r_plus[v]` holds the weights of closed selections inside the subtree of
/// `v` that contain `v`; `r_minus[v]` those that do not.
#[derive(Clone, Debug)]
pub struct DpTable {
    pub roots: Vec<NodeId>,
    pub r_plus: Vec<WeightSet>,
    pub r_minus: Vec<WeightSet>,
}

impl DpTable {
    pub fn r(&self, v: NodeId) -> WeightSet {
        self.r_plus[v].union(&self.r_minus[v])
    }
}

fn ssg_dp(inst: &WeightedInstance, b_cap: u64) -> Result<TreeDp> {
    require_forest(inst.graph())?;
    let cap = table_cap(inst, b_cap)?;
    let view = rooted_forest(inst.graph())?;
    TreeDp::run(view, inst.weights(), cap, ssg_rules(), |_, a| Some(a))
}

/// Closure-problem tables for every subtree of the forest rooted at the
/// smallest id of each component.
pub fn ssg_tree_table(inst: &WeightedInstance) -> Result<DpTable> {
    let dp = ssg_dp(inst, DEFAULT_B_CAP)?;
    let view = rooted_forest(inst.graph())?;
    let n = inst.node_count();
    Ok(DpTable {
        roots: view.roots,
        r_plus: (0..n).map(|v| dp.node_row(v, PLUS).clone()).collect(),
        r_minus: (0..n).map(|v| dp.node_row(v, MINUS).clone()).collect(),
    })
}

/// Maximum-weight closed set within budget on an oriented forest.
pub fn solve_ssg_tree(inst: &WeightedInstance) -> Result<Solution> {
    solve_ssg_tree_with_cap(inst, DEFAULT_B_CAP)
}

pub fn solve_ssg_tree_with_cap(inst: &WeightedInstance, b_cap: u64) -> Result<Solution> {
    let dp = ssg_dp(inst, b_cap)?;
    let best = dp
        .achievable()
        .max_at_most(usize::MAX)
        .expect("0 is achievable");
    Ok(inst.solution(dp.reconstruct(best)))
}

/// Nodes ordered by repeatedly removing a minimum-weight sink (ties to the
/// smallest id), with the running prefix weights and residual budgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkOrder {
    pub order: Vec<NodeId>,
    /// `prefix_weights[k]` is the weight of the first `k` nodes; length `n + 1`.
    pub prefix_weights: Vec<u64>,
    /// `budgets[k] = B - prefix_weights[k]`.
    pub budgets: Vec<i64>,
}

impl SinkOrder {
    /// Requires an acyclic graph (a cyclic one runs out of sinks).
    pub fn new(inst: &WeightedInstance) -> Result<Self> {
        let g = inst.graph();
        let n = g.node_count();
        let mut remaining_out: Vec<usize> = g.nodes().map(|v| g.out_degree(v)).collect();
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<(u64, NodeId)>> = g
            .nodes()
            .filter(|&v| remaining_out[v] == 0)
            .map(|v| std::cmp::Reverse((inst.weight(v), v)))
            .collect();
        let mut order = Vec::with_capacity(n);
        while let Some(std::cmp::Reverse((_, v))) = heap.pop() {
            order.push(v);
            for &u in g.in_neighbors(v) {
                remaining_out[u] -= 1;
                if remaining_out[u] == 0 {
                    heap.push(std::cmp::Reverse((inst.weight(u), u)));
                }
            }
        }
        if order.len() != n {
            return Err(Error::structure("graph has a circuit"));
        }
        let mut prefix_weights = vec![0];
        for &v in &order {
            prefix_weights.push(prefix_weights.last().unwrap() + inst.weight(v));
        }
        let budgets = prefix_weights
            .iter()
            .map(|&p| inst.budget() as i64 - p as i64)
            .collect();
        Ok(SinkOrder {
            order,
            prefix_weights,
            budgets,
        })
    }
}

const IN: usize = 0;
const OUT_ALLIN: usize = 1;
const OUT_SOMEOUT: usize = 2;
const BLOCKED: usize = 1;
const NEEDS_FATHER: usize = 2;

/// Selections that are closed and in which every unselected node lighter
/// than the threshold has an unselected out-neighbor.
fn blocked_rules() -> Rules {
    Rules {
        init: vec![Init::Own, Init::Zero, Init::Empty],
        selected: vec![true, false, false],
        node_states: 3,
        out_child: vec![
            (IN, IN, IN),
            (OUT_ALLIN, IN, OUT_ALLIN),
            (OUT_ALLIN, BLOCKED, OUT_SOMEOUT),
            (OUT_SOMEOUT, IN, OUT_SOMEOUT),
            (OUT_SOMEOUT, BLOCKED, OUT_SOMEOUT),
        ],
        in_child: vec![
            (IN, IN, IN),
            (IN, BLOCKED, IN),
            (OUT_ALLIN, BLOCKED, OUT_ALLIN),
            (OUT_ALLIN, NEEDS_FATHER, OUT_ALLIN),
            (OUT_SOMEOUT, BLOCKED, OUT_SOMEOUT),
            (OUT_SOMEOUT, NEEDS_FATHER, OUT_SOMEOUT),
        ],
        roots: vec![IN, BLOCKED],
    }
}

fn blocked_dp(inst: &WeightedInstance, cap: usize, threshold: u64) -> Result<TreeDp> {
    let view = rooted_forest(inst.graph())?;
    TreeDp::run(view, inst.weights(), cap, blocked_rules(), |v, a| match a {
        IN => Some(IN),
        OUT_SOMEOUT => Some(BLOCKED),
        _ if inst.weight(v) >= threshold => Some(BLOCKED),
        _ => Some(NEEDS_FATHER),
    })
}

/// Minimum-weight maximal closed set within budget on an oriented forest.
///
/// For a closed set `S ≠ V`, let `m` be the lightest node of `G − S` with no
/// out-neighbor outside `S`. `S` is maximal iff `w(S) > B − m`. The solver
/// runs one table per distinct weight `t`, restricted to closed sets in
/// which every unselected node lighter than `t` has an unselected
/// out-neighbor, and keeps the lightest such set with weight in `(B − t, B]`.
pub fn solve_maximal_ssg_tree(inst: &WeightedInstance) -> Result<Solution> {
    solve_maximal_ssg_tree_with_cap(inst, DEFAULT_B_CAP)
}

pub fn solve_maximal_ssg_tree_with_cap(inst: &WeightedInstance, b_cap: u64) -> Result<Solution> {
    require_forest(inst.graph())?;
    let n = inst.node_count();
    if inst.total_weight() <= inst.budget() {
        return Ok(inst.solution(NodeSet::full(n)));
    }
    let cap = table_cap(inst, b_cap)?;
    let mut thresholds: Vec<u64> = inst.weights().to_vec();
    thresholds.sort_unstable();
    thresholds.dedup();
    let mut best: Option<(usize, u64)> = None;
    for &t in &thresholds {
        let lower = if t > inst.budget() {
            0
        } else {
            (inst.budget() - t + 1) as usize
        };
        if lower > cap {
            continue;
        }
        let dp = blocked_dp(inst, cap, t)?;
        if let Some(b) = dp.achievable().min_at_least(lower) {
            if best.is_none_or(|(bb, _)| b < bb) {
                best = Some((b, t));
            }
        }
    }
    let (b, t) = best.expect("a maximal set always exists");
    let dp = blocked_dp(inst, cap, t)?;
    Ok(inst.solution(dp.reconstruct(b)))
}

const W_IN: usize = 0;
const W_OUT: usize = 1;

fn weak_out_rooted_rules() -> Rules {
    Rules {
        init: vec![Init::Own, Init::Zero, Init::Empty],
        selected: vec![true, false, false],
        node_states: 2,
        out_child: Vec::new(),
        in_child: vec![
            (IN, W_IN, IN),
            (IN, W_OUT, IN),
            (OUT_ALLIN, W_IN, OUT_ALLIN),
            (OUT_ALLIN, W_OUT, OUT_SOMEOUT),
            (OUT_SOMEOUT, W_IN, OUT_SOMEOUT),
            (OUT_SOMEOUT, W_OUT, OUT_SOMEOUT),
        ],
        roots: vec![W_IN, W_OUT],
    }
}

/// Every node has at most one out-neighbor (each tree points to one sink).
fn is_out_rooted_forest(g: &Digraph) -> bool {
    is_forest(g) && g.nodes().all(|v| g.out_degree(v) <= 1)
}

/// Every node has at most one in-neighbor (each tree hangs from one source).
fn is_in_rooted_forest(g: &Digraph) -> bool {
    is_forest(g) && g.nodes().all(|v| g.in_degree(v) <= 1)
}

/// Maximum-weight weakly closed set within budget on a forest of in-rooted
/// or out-rooted trees.
pub fn solve_ssgw_rooted_tree(inst: &WeightedInstance) -> Result<Solution> {
    solve_ssgw_rooted_tree_with_cap(inst, DEFAULT_B_CAP)
}

pub fn solve_ssgw_rooted_tree_with_cap(inst: &WeightedInstance, b_cap: u64) -> Result<Solution> {
    let g = inst.graph();
    if is_in_rooted_forest(g) {
        // a single in-neighbor forces exactly like an arc does under closure
        return solve_ssg_tree_with_cap(&inst.with_kind(ProblemKind::Ssg), b_cap);
    }
    if !is_out_rooted_forest(g) {
        return Err(Error::structure(
            "graph is neither an in-rooted nor an out-rooted forest",
        ));
    }
    let cap = table_cap(inst, b_cap)?;
    let sinks: Vec<NodeId> = g.sinks().collect();
    let view = rooted_forest_preferring(g, &sinks)?;
    let leaf: Vec<bool> = view.children.iter().map(|c| c.is_empty()).collect();
    let dp = TreeDp::run(
        view,
        inst.weights(),
        cap,
        weak_out_rooted_rules(),
        |v, a| match a {
            IN => Some(W_IN),
            OUT_SOMEOUT => Some(W_OUT),
            _ if leaf[v] => Some(W_OUT),
            _ => None,
        },
    )?;
    let best = dp
        .achievable()
        .max_at_most(usize::MAX)
        .expect("0 is achievable");
    Ok(inst.solution(dp.reconstruct(best)))
}
