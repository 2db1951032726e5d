//! Instance generators: reductions from clique, cardinality-constrained
//! closure and independent set, the subset-sum star, and seeded random
//! instances of every structural class.

mod random;
mod reductions;
mod undirected;

pub use random::{random_instance, BudgetRule, RandomSpec, DEFAULT_ARC_PROBABILITY};
pub use reductions::{
    cardinality_to_maximal, clique_to_ssg, graph_to_ssgw, subset_sum_labels, subset_sum_to_tree,
    CliqueGadgetSpec, ISGadgetSpec, MaximalGadgetSpec,
};
pub use undirected::UndirectedGraph;
