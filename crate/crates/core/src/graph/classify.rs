use std::fmt;

use super::{is_acyclic, Digraph, NodeId};

/// Structural label of a digraph.
///
/// The tree/DAG ladder is `OutRootedTree | InRootedTree ⊂ OrientedTree ⊂
/// Forest ⊂ Dag ⊂ General`. `Tournament` and `BalancedDegreeTwo` are checked
/// first and win when they apply. The label is advisory: solvers test the
/// predicates below directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    General,
    Dag,
    Forest,
    OrientedTree,
    OutRootedTree,
    InRootedTree,
    Tournament,
    BalancedDegreeTwo,
}

impl GraphClass {
    pub const ALL: [GraphClass; 8] = [
        GraphClass::General,
        GraphClass::Dag,
        GraphClass::Forest,
        GraphClass::OrientedTree,
        GraphClass::OutRootedTree,
        GraphClass::InRootedTree,
        GraphClass::Tournament,
        GraphClass::BalancedDegreeTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::General => "general",
            GraphClass::Dag => "dag",
            GraphClass::Forest => "forest",
            GraphClass::OrientedTree => "oriented-tree",
            GraphClass::OutRootedTree => "out-rooted-tree",
            GraphClass::InRootedTree => "in-rooted-tree",
            GraphClass::Tournament => "tournament",
            GraphClass::BalancedDegreeTwo => "balanced-degree-two",
        }
    }

    /// Whether a graph labelled `self` also satisfies the predicate of
    /// `other` along the tree/DAG ladder.
    pub fn refines(self, other: GraphClass) -> bool {
        use GraphClass::*;
        let rank = |c: GraphClass| match c {
            General => Some(0),
            Dag => Some(1),
            Forest => Some(2),
            OrientedTree => Some(3),
            OutRootedTree | InRootedTree => Some(4),
            Tournament | BalancedDegreeTwo => None,
        };
        if self == other {
            return true;
        }
        match (rank(self), rank(other)) {
            (Some(a), Some(b)) => a > b && !(a == 4 && b == 4),
            _ => false,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tree" => Ok(GraphClass::OrientedTree),
            _ => GraphClass::ALL
                .into_iter()
                .find(|c| c.name() == s)
                .ok_or_else(|| format!("unknown graph class `{s}`")),
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

pub(crate) fn weak_components(g: &Digraph) -> Vec<Vec<NodeId>> {
    let mut uf = UnionFind::new(g.node_count());
    for (u, v) in g.arcs() {
        uf.union(u, v);
    }
    let mut by_root: Vec<Vec<NodeId>> = vec![Vec::new(); g.node_count()];
    for v in g.nodes() {
        let r = uf.find(v);
        by_root[r].push(v);
    }
    by_root.into_iter().filter(|c| !c.is_empty()).collect()
}

pub fn is_weakly_connected(g: &Digraph) -> bool {
    weak_components(g).len() <= 1
}

pub fn is_dag(g: &Digraph) -> bool {
    is_acyclic(g)
}

/// Underlying undirected graph has no cycle (antiparallel arcs count as one).
pub fn is_forest(g: &Digraph) -> bool {
    let mut uf = UnionFind::new(g.node_count());
    g.arcs().all(|(u, v)| uf.union(u, v))
}

pub fn is_oriented_tree(g: &Digraph) -> bool {
    g.node_count() >= 1 && is_forest(g) && g.arc_count() + 1 == g.node_count()
}

/// Oriented tree where every node but one (the anti-root) has out-degree 1.
pub fn is_out_rooted_tree(g: &Digraph) -> bool {
    is_oriented_tree(g) && g.nodes().all(|v| g.out_degree(v) <= 1)
}

/// Oriented tree where every node but one (the root) has in-degree 1.
pub fn is_in_rooted_tree(g: &Digraph) -> bool {
    is_oriented_tree(g) && g.nodes().all(|v| g.in_degree(v) <= 1)
}

/// Exactly one arc between every pair of distinct nodes.
pub fn is_tournament(g: &Digraph) -> bool {
    let n = g.node_count();
    g.arc_count() == n * n.saturating_sub(1) / 2
        && (0..n).all(|u| (u + 1..n).all(|v| g.has_arc(u, v) != g.has_arc(v, u)))
}

/// Every node has in-degree 2 and out-degree 2.
pub fn is_balanced_degree_two(g: &Digraph) -> bool {
    g.node_count() > 0
        && g.nodes()
            .all(|v| g.in_degree(v) == 2 && g.out_degree(v) == 2)
}

/// Most specific label, with priority `Tournament > BalancedDegreeTwo >
/// ladder`. Tournaments need at least two nodes to be labelled as such.
pub fn classify(g: &Digraph) -> GraphClass {
    if g.node_count() >= 2 && is_tournament(g) {
        return GraphClass::Tournament;
    }
    if is_balanced_degree_two(g) {
        return GraphClass::BalancedDegreeTwo;
    }
    if is_out_rooted_tree(g) {
        GraphClass::OutRootedTree
    } else if is_in_rooted_tree(g) {
        GraphClass::InRootedTree
    } else if is_oriented_tree(g) {
        GraphClass::OrientedTree
    } else if is_forest(g) {
        GraphClass::Forest
    } else if is_dag(g) {
        GraphClass::Dag
    } else {
        GraphClass::General
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::sample_tree;
    use proptest::prelude::*;

    #[test]
    fn named_examples() {
        assert_eq!(classify(&sample_tree()), GraphClass::OrientedTree);
        let star = Digraph::from_arcs(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(classify(&star), GraphClass::OutRootedTree);
        assert_eq!(classify(&star.reversed()), GraphClass::InRootedTree);
    }

    #[test]
    fn tournament_and_balanced() {
        let arcs = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)));
        let t = Digraph::from_arcs(4, arcs).unwrap();
        assert_eq!(classify(&t), GraphClass::Tournament);
        // circulant v -> v+1, v -> v+2 (mod 5) is both; tournament wins
        let c5 = Digraph::from_arcs(5, (0..5).flat_map(|v| [(v, (v + 1) % 5), (v, (v + 2) % 5)]))
            .unwrap();
        assert_eq!(classify(&c5), GraphClass::Tournament);
        assert!(is_balanced_degree_two(&c5));
        let b = Digraph::from_arcs(6, (0..6).flat_map(|v| [(v, (v + 1) % 6), (v, (v + 2) % 6)]))
            .unwrap();
        assert_eq!(classify(&b), GraphClass::BalancedDegreeTwo);
        assert!(is_weakly_connected(&b));
    }

    #[test]
    fn ladder() {
        let diamond = Digraph::from_arcs(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(classify(&diamond), GraphClass::Dag);
        let forest = Digraph::from_arcs(4, [(0, 1), (3, 2)]).unwrap();
        assert_eq!(classify(&forest), GraphClass::Forest);
        let cyc = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        // a directed triangle is a (cyclic) tournament
        assert_eq!(classify(&cyc), GraphClass::Tournament);
        let two_cycle = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(classify(&two_cycle), GraphClass::General);
        assert!(!is_forest(&two_cycle));
        assert_eq!(classify(&Digraph::empty(1)), GraphClass::OutRootedTree);
    }

    #[test]
    fn refinement_order() {
        use GraphClass::*;
        assert!(OutRootedTree.refines(OrientedTree));
        assert!(OrientedTree.refines(Dag));
        assert!(!InRootedTree.refines(OutRootedTree));
        assert!(!Dag.refines(Forest));
        assert!(!Tournament.refines(Dag));
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let arcs = (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| u != v && bits[u * n + v]);
                Digraph::from_arcs(n, arcs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn classify_is_invariant_under_relabeling(
            (g, perm) in arb_digraph(8).prop_flat_map(|g| {
                let n = g.node_count();
                (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            })
        ) {
            let h = g.permuted(&perm).unwrap();
            prop_assert_eq!(classify(&g), classify(&h));
        }
    }
}
