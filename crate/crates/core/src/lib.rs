//! Subset sum problems over node-weighted digraphs.
//!
//! Four problem variants share one instance type ([`WeightedInstance`]):
//!
//! * **SSG**: maximize `w(S)` subject to `w(S) <= B` and closure under
//!   out-arcs (if `x` is selected, every out-neighbor of `x` is selected).
//! * **SSGW**: same objective, but a node is forced in only once *all* of its
//!   in-neighbors are selected (weak closure).
//! * **Maximal SSG / Maximal SSGW**: minimize `w(S)` over feasible sets that
//!   cannot be extended without breaking the budget or the (weak) closure.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: digraphs, node sets, reachability, kernels, condensation,
//!   structural classification and rooted-tree views.
//! * [`constraints`]: feasibility verdicts with deterministic witnesses.
//! * [`exact`]: the brute-force oracle, tree dynamic programs, and the
//!   polynomial tournament / Eulerian special cases.
//! * [`approx`]: the seed-and-greedy approximation schemes for DAGs.
//! * [`gadgets`]: instance generators built from hardness reductions, plus
//!   seeded random instances.

pub mod approx;
pub mod constraints;
mod error;
pub mod exact;
pub mod gadgets;
pub mod graph;
mod instance;

pub use error::{Error, Result};
pub use graph::{Digraph, NodeId, NodeSet};
pub use instance::{ProblemKind, Solution, WeightedInstance};

pub use instance::WEIGHT_LIMIT;
