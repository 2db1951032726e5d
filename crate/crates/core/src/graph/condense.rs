use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Digraph, NodeId, NodeSet};

/// The DAG obtained by contracting every strongly connected component.
///
/// Components are numbered in topological order of the contracted DAG; among
/// the components available at each step the one with the smallest member id
/// comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    pub dag: Digraph,
    pub component_of: Vec<usize>,
    pub component_weight: Vec<u64>,
    /// Members of each component, ascending.
    pub members: Vec<Vec<NodeId>>,
}

impl Condensation {
    pub fn component_count(&self) -> usize {
        self.members.len()
    }

    /// Original nodes covered by a set of components.
    pub fn expand(&self, components: &NodeSet) -> NodeSet {
        let n = self.component_of.len();
        NodeSet::from_nodes(
            n,
            components
                .iter()
                .flat_map(|c| self.members[c].iter().copied()),
        )
    }

    /// Components touched by `nodes`.
    pub fn contract(&self, nodes: &NodeSet) -> NodeSet {
        NodeSet::from_nodes(
            self.component_count(),
            nodes.iter().map(|v| self.component_of[v]),
        )
    }

    /// True iff `nodes` is a union of whole components.
    pub fn is_union_of_components(&self, nodes: &NodeSet) -> bool {
        self.contract(nodes)
            .iter()
            .all(|c| self.members[c].iter().all(|&v| nodes.contains(v)))
    }
}

/// Iterative Tarjan. Returns a raw component label per node.
fn strong_components(g: &Digraph) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let n = g.node_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<NodeId> = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut comp_count = 0;
    // (node, position in its out-list)
    let mut call: Vec<(NodeId, usize)> = Vec::new();

    for root in g.nodes() {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, pos)) = call.last() {
            if let Some(&u) = g.out_neighbors(v).get(pos) {
                if let Some(top) = call.last_mut() {
                    top.1 += 1;
                }
                if index[u] == UNSEEN {
                    index[u] = next_index;
                    low[u] = next_index;
                    next_index += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    call.push((u, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    if w == v {
                        break;
                    }
                }
                comp_count += 1;
            }
        }
    }
    (comp, comp_count)
}

/// Contracts each strongly connected component into one node whose weight is
/// the sum of its members' weights.
///
/// # Panics
/// If `weights.len()` differs from the node count.
pub fn condense(g: &Digraph, weights: &[u64]) -> Condensation {
    assert_eq!(weights.len(), g.node_count(), "one weight per node");
    let (raw, count) = strong_components(g);

    let mut raw_members: Vec<Vec<NodeId>> = vec![Vec::new(); count];
    for v in g.nodes() {
        raw_members[raw[v]].push(v);
    }
    let mut raw_arcs: Vec<(usize, usize)> = g
        .arcs()
        .map(|(u, v)| (raw[u], raw[v]))
        .filter(|(a, b)| a != b)
        .collect();
    raw_arcs.sort_unstable();
    raw_arcs.dedup();

    // deterministic renumbering: topological, smallest member first
    let mut indeg = vec![0usize; count];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); count];
    for &(a, b) in &raw_arcs {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut ready: BinaryHeap<Reverse<(NodeId, usize)>> = (0..count)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((raw_members[c][0], c)))
        .collect();
    let mut renumber = vec![0; count];
    let mut next = 0;
    while let Some(Reverse((_, c))) = ready.pop() {
        renumber[c] = next;
        next += 1;
        for &d in &succ[c] {
            indeg[d] -= 1;
            if indeg[d] == 0 {
                ready.push(Reverse((raw_members[d][0], d)));
            }
        }
    }
    debug_assert_eq!(next, count);

    let component_of: Vec<usize> = raw.iter().map(|&c| renumber[c]).collect();
    let mut members = vec![Vec::new(); count];
    let mut component_weight = vec![0u64; count];
    for v in g.nodes() {
        members[component_of[v]].push(v);
        component_weight[component_of[v]] += weights[v];
    }
    let dag = Digraph::from_arcs(
        count,
        raw_arcs.iter().map(|&(a, b)| (renumber[a], renumber[b])),
    )
    .expect("contracted arcs are simple");

    Condensation {
        dag,
        component_of,
        component_weight,
        members,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_acyclic;

    #[test]
    fn dag_is_its_own_condensation() {
        let g = Digraph::from_arcs(3, [(0, 1), (0, 2)]).unwrap();
        let c = condense(&g, &[1, 2, 3]);
        assert_eq!(c.component_count(), 3);
        assert_eq!(c.dag, g);
        assert_eq!(c.component_weight, vec![1, 2, 3]);
    }

    #[test]
    fn triangle_collapses() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = condense(&g, &[1, 2, 3]);
        assert_eq!(c.component_count(), 1);
        assert_eq!(c.component_weight, vec![6]);
        assert_eq!(c.dag.arc_count(), 0);
    }

    #[test]
    fn two_cycles_joined() {
        // {0,1} and {2,3}, joined by 1 -> 2
        let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]).unwrap();
        let c = condense(&g, &[1, 1, 1, 1]);
        assert_eq!(c.component_count(), 2);
        assert_eq!(c.members, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(c.dag.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        // pairwise-reachability oracle for the SCC partition
        let reach = |a: usize, b: usize| {
            crate::graph::descendants(&g, &NodeSet::from_nodes(4, [a]))
                .unwrap()
                .contains(b)
        };
        for a in 0..4 {
            for b in 0..4 {
                let same = reach(a, b) && reach(b, a);
                assert_eq!(same, c.component_of[a] == c.component_of[b]);
            }
        }
        assert!(is_acyclic(&c.dag));
    }

    #[test]
    fn numbering_is_topological_then_smallest_member() {
        // 3 -> 0, components {1,2} cyclic, isolated
        let g = Digraph::from_arcs(4, [(3, 0), (1, 2), (2, 1)]).unwrap();
        let c = condense(&g, &[0; 4]);
        assert_eq!(c.members, vec![vec![1, 2], vec![3], vec![0]]);
    }

    #[test]
    fn expand_and_contract() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        let c = condense(&g, &[1, 2, 3, 4]);
        let comps = c.contract(&NodeSet::from_nodes(4, [1, 3]));
        let nodes = c.expand(&comps);
        assert_eq!(nodes.to_vec(), vec![0, 1, 3]);
        assert!(c.is_union_of_components(&nodes));
        assert!(!c.is_union_of_components(&NodeSet::from_nodes(4, [1])));
    }
}
