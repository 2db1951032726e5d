//! Exact solvers: the brute-force oracle, dynamic programs on oriented
//! forests, and polynomial special cases.

mod brute;
mod special;
mod tree;
mod treedp;
mod weightset;

pub use brute::{brute_force, brute_force_with_cap, DEFAULT_BRUTE_CAP};
pub use special::{solve_balanced_degree_two, solve_tournament};
pub use tree::{
    solve_maximal_ssg_tree, solve_maximal_ssg_tree_with_cap, solve_ssg_tree,
    solve_ssg_tree_with_cap, solve_ssgw_rooted_tree, solve_ssgw_rooted_tree_with_cap,
    ssg_tree_table, DpTable, SinkOrder, DEFAULT_B_CAP,
};
pub use weightset::WeightSet;
