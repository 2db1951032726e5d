//! Polynomial special cases: tournaments and connected balanced digraphs of
//! in/out-degree two.

use crate::graph::{condense, is_balanced_degree_two, is_tournament, is_weakly_connected, NodeSet};
use crate::{Error, Result, Solution, WeightedInstance};

fn require_strong_kind(inst: &WeightedInstance) -> Result<()> {
    if inst.kind().is_weak() {
        return Err(Error::structure(format!(
            "{} is not supported by this solver",
            inst.kind()
        )));
    }
    Ok(())
}

/// Tournaments: after condensation the components form a single path
/// `c1 -> ... -> cm`, and the closed sets are exactly the empty set and the
/// suffixes of that path. Both objectives pick the longest suffix that fits:
/// it is the heaviest feasible set and the only maximal one.
pub fn solve_tournament(inst: &WeightedInstance) -> Result<Solution> {
    require_strong_kind(inst)?;
    let g = inst.graph();
    if !is_tournament(g) {
        return Err(Error::structure("graph is not a tournament"));
    }
    let c = condense(g, inst.weights());
    // components are numbered in topological order, so the path is 0..m
    let mut taken = NodeSet::empty(c.component_count());
    let mut weight = 0u64;
    for k in (0..c.component_count()).rev() {
        if weight + c.component_weight[k] > inst.budget() {
            break;
        }
        weight += c.component_weight[k];
        taken.insert(k);
    }
    Ok(inst.solution(c.expand(&taken)))
}

/// Connected digraphs where every node has in-degree and out-degree two.
/// Such a graph is strongly connected, so only the empty set and `V` are
/// closed.
pub fn solve_balanced_degree_two(inst: &WeightedInstance) -> Result<Solution> {
    require_strong_kind(inst)?;
    let g = inst.graph();
    if !is_balanced_degree_two(g) || !is_weakly_connected(g) {
        return Err(Error::structure(
            "graph is not a connected digraph with all in/out-degrees equal to two",
        ));
    }
    let n = g.node_count();
    let s = if inst.total_weight() <= inst.budget() {
        NodeSet::full(n)
    } else {
        NodeSet::empty(n)
    };
    Ok(inst.solution(s))
}
