use std::collections::VecDeque;

use super::{classify::is_weakly_connected, is_forest, Digraph, NodeId};
use crate::{Error, Result};

/// Orientation of the arc between a node and one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChildLink {
    /// Arc from the parent to the child (`ch⁺`).
    Out,
    /// Arc from the child to the parent (`ch⁻`).
    In,
}

/// Rooted view of an oriented forest: each underlying tree gets a root, and
/// every other node a father and children split by arc direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTreeView {
    pub roots: Vec<NodeId>,
    pub father: Vec<Option<NodeId>>,
    /// Children in ascending id order, tagged with the arc direction.
    pub children: Vec<Vec<(NodeId, ChildLink)>>,
    /// Every node exactly once, fathers before children.
    pub preorder: Vec<NodeId>,
}

impl RootedTreeView {
    /// First root; the only one for a tree view.
    pub fn root(&self) -> Option<NodeId> {
        self.roots.first().copied()
    }

    pub fn ch_plus(&self, v: NodeId) -> Vec<NodeId> {
        self.children_with(v, ChildLink::Out)
    }

    pub fn ch_minus(&self, v: NodeId) -> Vec<NodeId> {
        self.children_with(v, ChildLink::In)
    }

    fn children_with(&self, v: NodeId, link: ChildLink) -> Vec<NodeId> {
        self.children[v]
            .iter()
            .filter(|(_, l)| *l == link)
            .map(|&(u, _)| u)
            .collect()
    }

    /// Children before fathers.
    pub fn postorder(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.preorder.iter().rev().copied()
    }

    fn build(g: &Digraph, root_candidates: impl IntoIterator<Item = NodeId>) -> Self {
        let n = g.node_count();
        let mut father = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut roots = Vec::new();
        let mut preorder = Vec::with_capacity(n);
        for r in root_candidates {
            if seen[r] {
                continue;
            }
            roots.push(r);
            seen[r] = true;
            let mut queue = VecDeque::from([r]);
            while let Some(v) = queue.pop_front() {
                preorder.push(v);
                let mut kids: Vec<(NodeId, ChildLink)> = g
                    .out_neighbors(v)
                    .iter()
                    .map(|&u| (u, ChildLink::Out))
                    .chain(g.in_neighbors(v).iter().map(|&u| (u, ChildLink::In)))
                    .filter(|&(u, _)| Some(u) != father[v])
                    .collect();
                kids.sort_unstable_by_key(|&(u, _)| u);
                for &(u, _) in &kids {
                    debug_assert!(!seen[u], "forest check precedes rooting");
                    seen[u] = true;
                    father[u] = Some(v);
                    queue.push_back(u);
                }
                children[v] = kids;
            }
        }
        RootedTreeView {
            roots,
            father,
            children,
            preorder,
        }
    }
}

/// Roots an oriented tree at `root`.
pub fn rooted_view(g: &Digraph, root: NodeId) -> Result<RootedTreeView> {
    if root >= g.node_count() {
        return Err(Error::NodeOutOfRange {
            node: root,
            node_count: g.node_count(),
        });
    }
    if !is_forest(g) || !is_weakly_connected(g) {
        return Err(Error::structure(
            "underlying undirected graph is not a tree",
        ));
    }
    Ok(RootedTreeView::build(g, [root]))
}

/// Roots every tree of an oriented forest at its smallest node id.
pub fn rooted_forest(g: &Digraph) -> Result<RootedTreeView> {
    if !is_forest(g) {
        return Err(Error::structure(
            "underlying undirected graph is not a forest",
        ));
    }
    Ok(RootedTreeView::build(g, g.nodes()))
}

/// Like [`rooted_forest`], but components containing one of `preferred` are
/// rooted there (first match wins).
pub(crate) fn rooted_forest_preferring(
    g: &Digraph,
    preferred: &[NodeId],
) -> Result<RootedTreeView> {
    if !is_forest(g) {
        return Err(Error::structure(
            "underlying undirected graph is not a forest",
        ));
    }
    let candidates: Vec<NodeId> = preferred.iter().copied().chain(g.nodes()).collect();
    Ok(RootedTreeView::build(g, candidates))
}
