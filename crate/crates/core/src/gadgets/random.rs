use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::GraphClass;
use crate::{Digraph, Error, NodeId, ProblemKind, Result, WeightedInstance};

pub const DEFAULT_ARC_PROBABILITY: f64 = 0.3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BudgetRule {
    /// `floor(f · w(V))`.
    Fraction(f64),
    Fixed(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomSpec {
    pub class: GraphClass,
    pub n: usize,
    /// Weights are drawn uniformly from `0..=weight_max`.
    pub weight_max: u64,
    pub budget: BudgetRule,
    pub seed: u64,
    /// Arc probability for `Dag` and `General`; edge-drop probability for
    /// `Forest`.
    pub arc_probability: f64,
    pub kind: ProblemKind,
}

impl RandomSpec {
    pub fn new(class: GraphClass, n: usize, seed: u64) -> Self {
        RandomSpec {
            class,
            n,
            weight_max: 10,
            budget: BudgetRule::Fraction(0.5),
            seed,
            arc_probability: DEFAULT_ARC_PROBABILITY,
            kind: ProblemKind::Ssg,
        }
    }
}

/// Uniform random labelled tree from a Prüfer sequence.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(NodeId, NodeId)> {
    if n < 2 {
        return Vec::new();
    }
    let seq: Vec<NodeId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<NodeId> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Orients every tree edge towards (`towards = true`) or away from `root`.
fn orient_from_root(
    n: usize,
    edges: &[(NodeId, NodeId)],
    root: NodeId,
    towards: bool,
) -> Vec<(NodeId, NodeId)> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut stack = vec![root];
    let mut arcs = Vec::with_capacity(edges.len());
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                arcs.push(if towards { (u, v) } else { (v, u) });
                stack.push(u);
            }
        }
    }
    arcs
}

fn random_arcs(
    rng: &mut ChaCha8Rng,
    class: GraphClass,
    n: usize,
    p: f64,
) -> Result<Vec<(NodeId, NodeId)>> {
    let arcs = match class {
        GraphClass::General => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(p) {
                        arcs.push((u, v));
                    }
                }
            }
            arcs
        }
        GraphClass::Dag | GraphClass::Tournament => {
            let mut order: Vec<NodeId> = (0..n).collect();
            order.shuffle(rng);
            let mut arcs = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if class == GraphClass::Tournament || rng.gen_bool(p) {
                        arcs.push((order[i], order[j]));
                    }
                }
            }
            arcs
        }
        GraphClass::OrientedTree | GraphClass::Forest => {
            let mut arcs = Vec::new();
            for (u, v) in random_tree(rng, n) {
                if class == GraphClass::Forest && rng.gen_bool(p) {
                    continue;
                }
                arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
            arcs
        }
        GraphClass::OutRootedTree | GraphClass::InRootedTree => {
            let edges = random_tree(rng, n);
            let root = rng.gen_range(0..n);
            orient_from_root(n, &edges, root, class == GraphClass::OutRootedTree)
        }
        GraphClass::BalancedDegreeTwo => {
            if n < 3 {
                return Err(Error::input(
                    "balanced degree-two digraphs need at least 3 nodes",
                ));
            }
            // union of two Hamiltonian circuits, redrawn until simple
            let circuit = |order: &[NodeId]| -> Vec<(NodeId, NodeId)> {
                (0..n).map(|i| (order[i], order[(i + 1) % n])).collect()
            };
            let mut first: Vec<NodeId> = (0..n).collect();
            first.shuffle(rng);
            let base = circuit(&first);
            loop {
                let mut second: Vec<NodeId> = (0..n).collect();
                second.shuffle(rng);
                let extra = circuit(&second);
                if extra.iter().all(|a| !base.contains(a)) {
                    break base.into_iter().chain(extra).collect();
                }
            }
        }
    };
    Ok(arcs)
}

/// Seeded random instance of the requested structural class.
///
/// Dags come from a random topological order with independent arcs;
/// trees from a uniform Prüfer sequence with random orientations (rooted
/// classes orient towards or away from a random root); tournaments from a
/// random node order (acyclic); balanced degree-two digraphs from two
/// arc-disjoint Hamiltonian circuits.
pub fn random_instance(spec: &RandomSpec) -> Result<WeightedInstance> {
    if spec.n == 0 {
        return Err(Error::input("at least one node is required"));
    }
    if !(0.0..=1.0).contains(&spec.arc_probability) {
        return Err(Error::input("arc probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let arcs = random_arcs(&mut rng, spec.class, spec.n, spec.arc_probability)?;
    let graph = Digraph::from_arcs(spec.n, arcs)?;
    let weights: Vec<u64> = (0..spec.n)
        .map(|_| rng.gen_range(0..=spec.weight_max))
        .collect();
    let total: u64 = weights.iter().sum();
    let budget = match spec.budget {
        BudgetRule::Fraction(f) if (0.0..=1.0).contains(&f) => (f * total as f64).floor() as u64,
        BudgetRule::Fraction(_) => return Err(Error::input("budget fraction must lie in [0, 1]")),
        BudgetRule::Fixed(b) => b,
    };
    WeightedInstance::new(graph, weights, budget, spec.kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        is_balanced_degree_two, is_dag, is_forest, is_in_rooted_tree, is_oriented_tree,
        is_out_rooted_tree, is_tournament, is_weakly_connected,
    };

    #[test]
    fn deterministic() {
        let spec = RandomSpec::new(GraphClass::OrientedTree, 8, 1);
        assert_eq!(
            random_instance(&spec).unwrap(),
            random_instance(&spec).unwrap()
        );
    }

    #[test]
    fn classes_hold() {
        for seed in 0..30 {
            for n in [1, 2, 5, 9] {
                let g = |class| random_instance(&RandomSpec::new(class, n, seed)).unwrap();
                assert!(is_dag(g(GraphClass::Dag).graph()));
                assert!(is_forest(g(GraphClass::Forest).graph()));
                assert!(is_oriented_tree(g(GraphClass::OrientedTree).graph()));
                assert!(is_out_rooted_tree(g(GraphClass::OutRootedTree).graph()));
                assert!(is_in_rooted_tree(g(GraphClass::InRootedTree).graph()));
                let t = g(GraphClass::Tournament);
                assert!(is_tournament(t.graph()));
                assert_eq!(t.graph().arc_count(), n * (n - 1) / 2);
                if n >= 3 {
                    let b = g(GraphClass::BalancedDegreeTwo);
                    assert!(is_balanced_degree_two(b.graph()) && is_weakly_connected(b.graph()));
                }
            }
        }
    }

    #[test]
    fn budget_rules() {
        let mut spec = RandomSpec::new(GraphClass::Dag, 6, 3);
        spec.budget = BudgetRule::Fixed(7);
        assert_eq!(random_instance(&spec).unwrap().budget(), 7);
        spec.budget = BudgetRule::Fraction(1.0);
        let i = random_instance(&spec).unwrap();
        assert_eq!(i.budget(), i.total_weight());
        spec.budget = BudgetRule::Fraction(1.5);
        assert!(random_instance(&spec).is_err());
    }
}
