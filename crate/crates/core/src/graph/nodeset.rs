use std::fmt;

use fixedbitset::FixedBitSet;

use super::NodeId;

/// A set of node ids drawn from a fixed universe `0..universe`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(FixedBitSet);

impl NodeSet {
    pub fn empty(universe: usize) -> Self {
        NodeSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        NodeSet(bits)
    }

    /// # Panics
    /// If any node is outside the universe.
    pub fn from_nodes<I: IntoIterator<Item = NodeId>>(universe: usize, nodes: I) -> Self {
        let mut set = Self::empty(universe);
        for v in nodes {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.0.contains(v)
    }

    /// # Panics
    /// If `v` is outside the universe.
    pub fn insert(&mut self, v: NodeId) -> bool {
        assert!(
            v < self.universe(),
            "node {v} outside universe of size {}",
            self.universe()
        );
        !self.0.put(v)
    }

    pub fn remove(&mut self, v: NodeId) -> bool {
        if v < self.universe() && self.0.contains(v) {
            self.0.set(v, false);
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.0.union_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &NodeSet) {
        self.0.difference_with(&other.0);
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Every node of the universe not in `self`.
    pub fn complement(&self) -> NodeSet {
        let mut bits = self.0.clone();
        bits.toggle_range(..);
        NodeSet(bits)
    }

    /// Lexicographic comparison of the ascending member sequences.
    pub fn lex_cmp(&self, other: &NodeSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
