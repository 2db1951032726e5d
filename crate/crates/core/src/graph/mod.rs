//! Digraph representation and structural primitives.

mod classify;
mod condense;
mod nodeset;
mod reach;
mod tree;

pub use classify::{
    classify, is_balanced_degree_two, is_dag, is_forest, is_in_rooted_tree, is_oriented_tree,
    is_out_rooted_tree, is_tournament, is_weakly_connected, GraphClass,
};
pub use condense::{condense, Condensation};
pub use nodeset::NodeSet;
pub use reach::{ascendants, descendants, is_acyclic, kernel, topological_order};
pub(crate) use tree::rooted_forest_preferring;
pub use tree::{rooted_forest, rooted_view, ChildLink, RootedTreeView};

use crate::{Error, Result};

/// Dense node identifier in `0..node_count`.
pub type NodeId = usize;

/// A simple digraph: no loops, no parallel arcs.
///
/// Adjacency lists are kept sorted so that every traversal visits nodes in
/// ascending id order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<Vec<NodeId>>,
    in_adj: Vec<Vec<NodeId>>,
    arc_count: usize,
}

impl Digraph {
    /// Graph with `n` nodes and no arcs.
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arc_count: 0,
        }
    }

    /// Builds a graph from an arc list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (u, v) in arcs {
            for node in [u, v] {
                if node >= n {
                    return Err(Error::NodeOutOfRange {
                        node,
                        node_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
            arc_count += 1;
        }
        for (u, list) in out_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
                return Err(Error::DuplicateArc(u, pair[0]));
            }
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Ok(Digraph {
            out_adj,
            in_adj,
            arc_count,
        })
    }

    pub fn node_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count()
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    pub fn out_neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: NodeId, v: NodeId) -> bool {
        u < self.node_count() && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn sources(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&v| self.in_adj[v].is_empty())
    }

    pub fn sinks(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&v| self.out_adj[v].is_empty())
    }

    /// Subgraph induced by `keep`. Returns the subgraph together with the map
    /// from new node ids to original ids (ascending).
    pub fn induced(&self, keep: &NodeSet) -> (Digraph, Vec<NodeId>) {
        let old_ids: Vec<NodeId> = keep.iter().filter(|&v| v < self.node_count()).collect();
        let mut new_id = vec![usize::MAX; self.node_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut sub = Digraph::empty(old_ids.len());
        for (i, &v) in old_ids.iter().enumerate() {
            for &u in &self.out_adj[v] {
                let j = new_id[u];
                if j != usize::MAX {
                    sub.out_adj[i].push(j);
                    sub.in_adj[j].push(i);
                    sub.arc_count += 1;
                }
            }
        }
        // ids are assigned in ascending order, so the lists come out sorted
        (sub, old_ids)
    }

    /// The same graph with every arc reversed.
    pub fn reversed(&self) -> Digraph {
        Digraph {
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            arc_count: self.arc_count,
        }
    }

    /// Relabels node `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[NodeId]) -> Result<Digraph> {
        if perm.len() != self.node_count() {
            return Err(Error::input("permutation length differs from node count"));
        }
        Digraph::from_arcs(
            self.node_count(),
            self.arcs().map(|(u, v)| (perm[u], perm[v])),
        )
    }

    pub(crate) fn check_members(&self, s: &NodeSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.node_count()) {
            Some(node) => Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count(),
            }),
            None => Ok(()),
        }
    }
}
