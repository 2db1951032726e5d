//! Bottom-up weight-set dynamic program over a rooted oriented forest.
//!
//! Each node carries a small number of *accumulator* states while its
//! children are folded in one by one (ascending id), then the accumulator is
//! mapped to a *node* state seen by the father. A problem is described by the
//! transition lists; the engine takes care of tables and reconstruction.

use super::weightset::WeightSet;
use crate::graph::{ChildLink, NodeId, NodeSet, RootedTreeView};
use crate::{Error, Result};

/// Upper bound on the total number of table bits held by one run.
pub(crate) const TABLE_BIT_LIMIT: u128 = 1 << 33;

#[derive(Clone, Copy, Debug)]
pub(crate) enum Init {
    Empty,
    Zero,
    Own,
}

/// `(accumulator before, child node state, accumulator after)`.
pub(crate) type Transition = (usize, usize, usize);

pub(crate) struct Rules {
    pub init: Vec<Init>,
    /// Whether the node itself is selected in each accumulator state.
    pub selected: Vec<bool>,
    pub node_states: usize,
    pub out_child: Vec<Transition>,
    pub in_child: Vec<Transition>,
    /// Node states allowed at a root.
    pub roots: Vec<usize>,
}

pub(crate) struct TreeDp {
    view: RootedTreeView,
    rules: Rules,
    finalize: Vec<Vec<Option<usize>>>,
    stages: Vec<Vec<Vec<WeightSet>>>,
    node: Vec<Vec<WeightSet>>,
    forest: Vec<WeightSet>,
}

impl TreeDp {
    /// Fills every table. `finalize(v, acc)` maps the final accumulator of
    /// `v` to its node state, or `None` when that accumulator is not allowed.
    pub fn run(
        view: RootedTreeView,
        weights: &[u64],
        cap: usize,
        rules: Rules,
        finalize: impl Fn(NodeId, usize) -> Option<usize>,
    ) -> Result<Self> {
        let n = view.father.len();
        let acc_states = rules.init.len();
        let rows = (2 * n + 1) as u128 * (acc_states.max(rules.node_states)) as u128;
        if rows * (cap as u128 + 1) > TABLE_BIT_LIMIT {
            return Err(Error::Refused(format!(
                "dynamic program tables for {n} nodes and budget {cap} are too large"
            )));
        }
        let finalize: Vec<Vec<Option<usize>>> = (0..n)
            .map(|v| (0..acc_states).map(|a| finalize(v, a)).collect())
            .collect();
        let empty = WeightSet::empty(cap);
        let mut stages: Vec<Vec<Vec<WeightSet>>> = vec![Vec::new(); n];
        let mut node: Vec<Vec<WeightSet>> = vec![Vec::new(); n];
        for v in view.postorder() {
            let mut acc: Vec<WeightSet> = rules
                .init
                .iter()
                .map(|i| match i {
                    Init::Empty => empty.clone(),
                    Init::Zero => WeightSet::singleton(cap, 0),
                    Init::Own => WeightSet::singleton(cap, weights[v]),
                })
                .collect();
            let mut history = Vec::with_capacity(view.children[v].len() + 1);
            for &(c, link) in &view.children[v] {
                let mut next = vec![empty.clone(); acc_states];
                for &(from, cs, to) in rules.transitions(link) {
                    if acc[from].is_empty() || node[c][cs].is_empty() {
                        continue;
                    }
                    next[to].union_with(&acc[from].sumset(&node[c][cs]));
                }
                history.push(std::mem::replace(&mut acc, next));
            }
            let mut rows = vec![empty.clone(); rules.node_states];
            for (a, set) in acc.iter().enumerate() {
                if let Some(s) = finalize[v][a] {
                    rows[s].union_with(set);
                }
            }
            history.push(acc);
            stages[v] = history;
            node[v] = rows;
        }
        let mut forest = vec![WeightSet::singleton(cap, 0)];
        for &r in &view.roots {
            let mut allowed = empty.clone();
            for &s in &rules.roots {
                allowed.union_with(&node[r][s]);
            }
            let next = forest.last().expect("nonempty").sumset(&allowed);
            forest.push(next);
        }
        Ok(TreeDp {
            view,
            rules,
            finalize,
            stages,
            node,
            forest,
        })
    }

    /// Weights achievable by a valid selection on the whole forest.
    pub fn achievable(&self) -> &WeightSet {
        self.forest.last().expect("nonempty")
    }

    /// Node-state table of the subtree rooted at `v`.
    pub fn node_row(&self, v: NodeId, state: usize) -> &WeightSet {
        &self.node[v][state]
    }

    /// A valid selection of weight `b`; `b` must be achievable.
    pub fn reconstruct(&self, b: usize) -> NodeSet {
        assert!(
            self.achievable().contains(b),
            "weight {b} is not achievable"
        );
        let n = self.view.father.len();
        let mut out = NodeSet::empty(n);
        let mut todo: Vec<(NodeId, usize, usize)> = Vec::new();
        let mut rest = b;
        for j in (1..self.forest.len()).rev() {
            let r = self.view.roots[j - 1];
            let (b1, state) = (0..=rest)
                .filter(|&b1| self.forest[j - 1].contains(b1))
                .find_map(|b1| {
                    self.rules
                        .roots
                        .iter()
                        .find(|&&s| self.node[r][s].contains(rest - b1))
                        .map(|&s| (b1, s))
                })
                .expect("forest split exists");
            todo.push((r, state, rest - b1));
            rest = b1;
        }
        while let Some((v, state, b)) = todo.pop() {
            self.reconstruct_node(v, state, b, &mut out, &mut todo);
        }
        out
    }

    fn reconstruct_node(
        &self,
        v: NodeId,
        state: usize,
        b: usize,
        out: &mut NodeSet,
        todo: &mut Vec<(NodeId, usize, usize)>,
    ) {
        let stages = &self.stages[v];
        let deg = stages.len() - 1;
        let mut acc = (0..self.rules.init.len())
            .find(|&a| self.finalize[v][a] == Some(state) && stages[deg][a].contains(b))
            .expect("final accumulator exists");
        if self.rules.selected[acc] {
            out.insert(v);
        }
        let mut rest = b;
        for j in (1..=deg).rev() {
            let (c, link) = self.view.children[v][j - 1];
            let (b1, from, cs) = (0..=rest)
                .find_map(|b1| {
                    self.rules
                        .transitions(link)
                        .iter()
                        .find(|&&(from, cs, to)| {
                            to == acc
                                && stages[j - 1][from].contains(b1)
                                && self.node[c][cs].contains(rest - b1)
                        })
                        .map(|&(from, cs, _)| (b1, from, cs))
                })
                .expect("child split exists");
            todo.push((c, cs, rest - b1));
            acc = from;
            rest = b1;
        }
    }
}

impl Rules {
    fn transitions(&self, link: ChildLink) -> &[Transition] {
        match link {
            ChildLink::Out => &self.out_child,
            ChildLink::In => &self.in_child,
        }
    }
}
