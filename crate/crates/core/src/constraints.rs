//! Feasibility verdicts: closure, weak closure, budget and maximality.
//!
//! Every check reports the smallest violating item by node id so that reports
//! are reproducible.

use std::fmt;

use crate::graph::{condense, is_acyclic, Digraph, NodeId, NodeSet};
use crate::WeightedInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Arc `(x, y)` with `x` selected and `y` not.
    Arc(NodeId, NodeId),
    /// Unselected node whose in-neighbors are all selected.
    Forced(NodeId),
    /// Selected weight exceeds the budget.
    OverBudget { weight: u64, budget: u64 },
    /// Unselected node that can be added without breaking any constraint.
    Addable(NodeId),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Arc(x, y) => write!(f, "arc {x} -> {y} leaves the selection"),
            Witness::Forced(x) => write!(f, "node {x} has all in-neighbors selected"),
            Witness::OverBudget { weight, budget } => {
                write!(f, "weight {weight} exceeds budget {budget}")
            }
            Witness::Addable(x) => write!(f, "node {x} can still be added"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    /// Closure (or weak closure for the weak kinds).
    pub satisfies_closure: bool,
    pub satisfies_budget: bool,
    /// `None` when maximality does not apply or was not evaluated because an
    /// earlier constraint already failed.
    pub satisfies_maximality: Option<bool>,
    pub witness: Option<Witness>,
    pub total_weight: u64,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.satisfies_closure && self.satisfies_budget && self.satisfies_maximality != Some(false)
    }
}

/// Smallest arc `(x, y)` with `x ∈ s`, `y ∉ s`.
pub fn check_digraph_closure(g: &Digraph, s: &NodeSet) -> Option<(NodeId, NodeId)> {
    s.iter().find_map(|x| {
        g.out_neighbors(x)
            .iter()
            .find(|&&y| !s.contains(y))
            .map(|&y| (x, y))
    })
}

/// Smallest `x ∉ s` with a nonempty in-neighborhood contained in `s`.
pub fn check_weak_closure(g: &Digraph, s: &NodeSet) -> Option<NodeId> {
    g.nodes().find(|&x| {
        !s.contains(x)
            && !g.in_neighbors(x).is_empty()
            && g.in_neighbors(x).iter().all(|&u| s.contains(u))
    })
}

/// Whether `w(s) <= B`, together with `w(s)`.
pub fn check_budget(inst: &WeightedInstance, s: &NodeSet) -> (bool, u64) {
    let weight = inst.weight_of(s);
    (weight <= inst.budget(), weight)
}

/// Smallest superset of `s` closed under weak forcing: repeatedly adds any
/// node whose (nonempty) in-neighborhood is fully selected.
pub fn weak_closure_completion(g: &Digraph, s: &NodeSet) -> NodeSet {
    let mut out = NodeSet::empty(g.node_count());
    let mut missing: Vec<usize> = g.nodes().map(|v| g.in_degree(v)).collect();
    let mut queue: Vec<NodeId> = Vec::new();
    let add = |v: NodeId, out: &mut NodeSet, queue: &mut Vec<NodeId>| {
        if out.insert(v) {
            queue.push(v);
        }
    };
    for v in s.iter() {
        add(v, &mut out, &mut queue);
    }
    while let Some(v) = queue.pop() {
        for &u in g.out_neighbors(v) {
            missing[u] -= 1;
            if missing[u] == 0 {
                add(u, &mut out, &mut queue);
            }
        }
    }
    out
}

/// Single-node maximality test for closed sets on a DAG: the smallest
/// `x ∉ s` whose out-neighbors all lie in `s` and with `w(s) + w(x) <= B`.
pub fn local_addable_node(
    g: &Digraph,
    weights: &[u64],
    budget: u64,
    s: &NodeSet,
) -> Option<NodeId> {
    let base: u64 = s.iter().map(|v| weights[v]).sum();
    g.nodes().find(|&x| {
        !s.contains(x)
            && g.out_neighbors(x).iter().all(|&y| s.contains(y))
            && base + weights[x] <= budget
    })
}

/// Minimum-weight sink of `G − s`, ties to the smallest id.
pub fn min_weight_sink(g: &Digraph, weights: &[u64], s: &NodeSet) -> Option<NodeId> {
    g.nodes()
        .filter(|&x| !s.contains(x) && g.out_neighbors(x).iter().all(|&y| s.contains(y)))
        .min_by_key(|&x| (weights[x], x))
}

/// Maximality of a closed set on a DAG by looking only at a minimum-weight
/// sink of `G − s`: maximal iff that sink does not fit (or there is none).
pub fn min_sink_blocked(g: &Digraph, weights: &[u64], budget: u64, s: &NodeSet) -> bool {
    let base: u64 = s.iter().map(|v| weights[v]).sum();
    match min_weight_sink(g, weights, s) {
        Some(x) => base + weights[x] > budget,
        None => true,
    }
}

/// Smallest `x ∉ s` for which the weak completion of `s ∪ {x}` fits the
/// budget.
fn weak_addable_node(inst: &WeightedInstance, s: &NodeSet) -> Option<NodeId> {
    let g = inst.graph();
    g.nodes().filter(|&x| !s.contains(x)).find(|&x| {
        let mut grown = s.clone();
        grown.insert(x);
        inst.weight_of(&weak_closure_completion(g, &grown)) <= inst.budget()
    })
}

/// Addable node for a closed set under the (strong) closure. DAGs use the
/// single-node test directly; other digraphs run it on the condensation.
fn strong_addable_node(inst: &WeightedInstance, s: &NodeSet) -> Option<NodeId> {
    let g = inst.graph();
    if is_acyclic(g) {
        return local_addable_node(g, inst.weights(), inst.budget(), s);
    }
    let c = condense(g, inst.weights());
    debug_assert!(c.is_union_of_components(s));
    let comps = c.contract(s);
    let base = inst.weight_of(s);
    (0..c.component_count())
        .filter(|&k| {
            !comps.contains(k)
                && c.dag.out_neighbors(k).iter().all(|&j| comps.contains(j))
                && base + c.component_weight[k] <= inst.budget()
        })
        .map(|k| c.members[k][0])
        .min()
}

fn evaluate(inst: &WeightedInstance, s: &NodeSet, with_maximality: bool) -> FeasibilityReport {
    let g = inst.graph();
    let (satisfies_budget, total_weight) = check_budget(inst, s);
    let closure_witness = if inst.kind().is_weak() {
        check_weak_closure(g, s).map(Witness::Forced)
    } else {
        check_digraph_closure(g, s).map(|(x, y)| Witness::Arc(x, y))
    };
    let mut report = FeasibilityReport {
        satisfies_closure: closure_witness.is_none(),
        satisfies_budget,
        satisfies_maximality: None,
        witness: closure_witness,
        total_weight,
    };
    if !report.satisfies_closure {
        return report;
    }
    if !satisfies_budget {
        report.witness = Some(Witness::OverBudget {
            weight: total_weight,
            budget: inst.budget(),
        });
        return report;
    }
    if with_maximality {
        let addable = if inst.kind().is_weak() {
            weak_addable_node(inst, s)
        } else {
            strong_addable_node(inst, s)
        };
        report.satisfies_maximality = Some(addable.is_none());
        report.witness = addable.map(Witness::Addable);
    }
    report
}

/// Full verdict for the instance's problem kind. Maximality is evaluated
/// only for the maximal kinds.
pub fn check(inst: &WeightedInstance, s: &NodeSet) -> FeasibilityReport {
    evaluate(inst, s, inst.kind().is_maximal())
}

/// Like [`check`], but always evaluates maximality (under weak or strong
/// closure according to the kind) once closure and budget hold.
pub fn check_maximal(inst: &WeightedInstance, s: &NodeSet) -> FeasibilityReport {
    evaluate(inst, s, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::descendants;
    use crate::testutil::{branching_instance, c5_gadget, sample_tree};
    use crate::{Digraph, ProblemKind};

    fn set(n: usize, v: &[usize]) -> NodeSet {
        NodeSet::from_nodes(n, v.iter().copied())
    }

    fn inst(g: Digraph, w: Vec<u64>, b: u64, kind: ProblemKind) -> WeightedInstance {
        WeightedInstance::new(g, w, b, kind).unwrap()
    }

    #[test]
    fn closure_examples() {
        let path = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(check_digraph_closure(&path, &set(2, &[0])), Some((0, 1)));
        assert_eq!(check_digraph_closure(&path, &set(2, &[])), None);
        assert_eq!(check_digraph_closure(&path, &set(2, &[0, 1])), None);
        let g = sample_tree();
        let s = set(8, &[2, 0, 5, 1, 3]);
        assert_eq!(check_digraph_closure(&g, &s), None);
        assert_eq!(descendants(&g, &s).unwrap(), s);
    }

    #[test]
    fn weak_closure_examples() {
        let star = Digraph::from_arcs(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(check_weak_closure(&star, &set(4, &[0, 1, 2])), Some(3));
        assert_eq!(check_weak_closure(&star, &NodeSet::full(4)), None);
        let gadget = c5_gadget(ProblemKind::Ssgw);
        assert_eq!(check_weak_closure(gadget.graph(), &set(10, &[0, 2])), None);
    }

    #[test]
    fn budget_examples() {
        let i = inst(Digraph::empty(2), vec![3, 5], 7, ProblemKind::Ssg);
        assert_eq!(check_budget(&i, &set(2, &[])), (true, 0));
        assert_eq!(check_budget(&i, &set(2, &[0, 1])), (false, 8));
        let star = Digraph::from_arcs(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        let i = inst(star, vec![3, 5, 7, 0], 8, ProblemKind::Ssg);
        assert_eq!(check_budget(&i, &set(4, &[0, 1, 3])), (true, 8));
    }

    #[test]
    fn completion_examples() {
        let chain = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            weak_closure_completion(&chain, &set(3, &[0])).to_vec(),
            vec![0, 1, 2]
        );
        let closed = set(3, &[1, 2]);
        assert_eq!(weak_closure_completion(&chain, &closed), closed);
        let gadget = c5_gadget(ProblemKind::Ssgw);
        // edge node for {v1, v2} is node 5
        assert_eq!(
            weak_closure_completion(gadget.graph(), &set(10, &[0, 1])).to_vec(),
            vec![0, 1, 5]
        );
    }

    #[test]
    fn maximality_examples() {
        let i = inst(
            Digraph::empty(3),
            vec![1, 2, 3],
            10,
            ProblemKind::MaximalSsg,
        );
        let r = check(&i, &NodeSet::full(3));
        assert!(r.is_feasible());
        assert_eq!(r.satisfies_maximality, Some(true));

        let i = inst(Digraph::empty(1), vec![5], 4, ProblemKind::MaximalSsg);
        assert!(check(&i, &set(1, &[])).is_feasible());

        let i = branching_instance(4, ProblemKind::MaximalSsg);
        let s = set(8, &[0, 1, 2]);
        let r = check(&i, &s);
        assert_eq!(r.total_weight, 4);
        assert!(r.is_feasible());
        assert_eq!(min_weight_sink(i.graph(), i.weights(), &s), Some(3));
    }

    #[test]
    fn reports_prerequisites_first() {
        let path = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let i = inst(path, vec![1, 1], 5, ProblemKind::MaximalSsg);
        let r = check(&i, &set(2, &[0]));
        assert!(!r.satisfies_closure);
        assert_eq!(r.satisfies_maximality, None);
        assert_eq!(r.witness, Some(Witness::Arc(0, 1)));

        let i = inst(Digraph::empty(2), vec![3, 5], 7, ProblemKind::MaximalSsg);
        let r = check(&i, &NodeSet::full(2));
        assert_eq!(
            r.witness,
            Some(Witness::OverBudget {
                weight: 8,
                budget: 7
            })
        );
        assert!(!r.is_feasible());
    }

    #[test]
    fn addable_witness_is_smallest() {
        let i = inst(Digraph::empty(3), vec![1, 1, 1], 2, ProblemKind::MaximalSsg);
        let r = check(&i, &set(3, &[2]));
        assert_eq!(r.witness, Some(Witness::Addable(0)));
        // the witness really can be added
        let grown = set(3, &[0, 2]);
        assert!(check_digraph_closure(i.graph(), &grown).is_none());
        assert!(check_budget(&i, &grown).0);
    }

    #[test]
    fn cyclic_maximality_goes_through_condensation() {
        // {0,1} cycle -> 2 ; 3 isolated
        let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (1, 2)]).unwrap();
        let i = inst(g, vec![2, 2, 1, 5], 5, ProblemKind::MaximalSsg);
        // {2}: the cycle component weighs 4, 1 + 4 = 5 fits
        assert_eq!(check(&i, &set(4, &[2])).witness, Some(Witness::Addable(0)));
        assert!(check(&i, &set(4, &[0, 1, 2])).is_feasible());
    }

    #[test]
    fn ssg_kind_skips_maximality_but_check_maximal_does_not() {
        let i = inst(Digraph::empty(1), vec![1], 4, ProblemKind::Ssg);
        let empty = set(1, &[]);
        assert_eq!(check(&i, &empty).satisfies_maximality, None);
        assert_eq!(check_maximal(&i, &empty).satisfies_maximality, Some(false));
    }

    #[test]
    fn weak_maximality_uses_completion() {
        let g = c5_gadget(ProblemKind::MaximalSsgw);
        // maximal independent set of C5
        assert!(check(&g, &set(10, &[0, 2])).is_feasible());
        // {0}: adding 2 keeps it independent
        assert_eq!(check(&g, &set(10, &[0])).witness, Some(Witness::Addable(2)));
    }

    #[test]
    fn zero_weight_sink_breaks_maximality() {
        let g = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let i = inst(g, vec![5, 9, 0], 5, ProblemKind::MaximalSsg);
        let r = check(&i, &set(3, &[]));
        assert_eq!(r.satisfies_maximality, Some(false));
        assert_eq!(r.witness, Some(Witness::Addable(2)));
    }
}
