#![allow(dead_code)]

use ssg_core::gadgets::{random_instance, BudgetRule, RandomSpec};
use ssg_core::graph::GraphClass;
use ssg_core::{Digraph, NodeSet, ProblemKind, WeightedInstance};

pub fn mask_set(n: usize, mask: u64) -> NodeSet {
    NodeSet::from_nodes(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

pub fn all_sets(n: usize) -> impl Iterator<Item = NodeSet> {
    (0..1u64 << n).map(move |m| mask_set(n, m))
}

/// Closure straight from the definition: every arc leaving a selected node
/// ends in a selected node.
pub fn literally_closed(g: &Digraph, s: &NodeSet) -> bool {
    g.arcs().all(|(x, y)| !s.contains(x) || s.contains(y))
}

/// Weak closure straight from the definition.
pub fn literally_weakly_closed(g: &Digraph, s: &NodeSet) -> bool {
    g.nodes().all(|x| {
        s.contains(x)
            || g.in_neighbors(x).is_empty()
            || g.in_neighbors(x).iter().any(|&u| !s.contains(u))
    })
}

pub fn literally_feasible(inst: &WeightedInstance, s: &NodeSet) -> bool {
    let closed = if inst.kind().is_weak() {
        literally_weakly_closed(inst.graph(), s)
    } else {
        literally_closed(inst.graph(), s)
    };
    closed && inst.weight_of(s) <= inst.budget()
}

/// Maximality by enumerating every strict superset.
pub fn literally_maximal(inst: &WeightedInstance, s: &NodeSet) -> bool {
    let n = inst.node_count();
    let free: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    (1..1u64 << free.len()).all(|m| {
        let mut t = s.clone();
        for (i, &v) in free.iter().enumerate() {
            if m >> i & 1 == 1 {
                t.insert(v);
            }
        }
        !literally_feasible(inst, &t)
    })
}

/// Optimum by plain enumeration, independent of the library's oracle.
pub fn literal_optimum(inst: &WeightedInstance) -> Option<u64> {
    let maximal = inst.kind().is_maximal();
    let weights = all_sets(inst.node_count())
        .filter(|s| literally_feasible(inst, s) && (!maximal || literally_maximal(inst, s)))
        .map(|s| inst.weight_of(&s));
    if maximal {
        weights.min()
    } else {
        weights.max()
    }
}

pub fn random(class: GraphClass, n: usize, seed: u64, kind: ProblemKind) -> WeightedInstance {
    let mut spec = RandomSpec::new(class, n, seed);
    spec.kind = kind;
    random_instance(&spec).unwrap()
}

/// Random instance with a budget drawn from `0..=max_budget`.
pub fn random_with_budget(
    class: GraphClass,
    n: usize,
    seed: u64,
    kind: ProblemKind,
    max_budget: u64,
) -> WeightedInstance {
    let mut spec = RandomSpec::new(class, n, seed);
    spec.kind = kind;
    spec.budget = BudgetRule::Fixed(seed.wrapping_mul(2_654_435_761) % (max_budget + 1));
    random_instance(&spec).unwrap()
}
