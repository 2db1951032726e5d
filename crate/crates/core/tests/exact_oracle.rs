mod common;

use common::*;
use proptest::prelude::*;
use ssg_core::constraints::check;
use ssg_core::exact::{
    brute_force, solve_balanced_degree_two, solve_maximal_ssg_tree, solve_ssg_tree,
    solve_ssgw_rooted_tree, solve_tournament, ssg_tree_table, SinkOrder,
};
use ssg_core::graph::{condense, topological_order, GraphClass};
use ssg_core::{Digraph, NodeSet, ProblemKind, WeightedInstance};

fn optimum(inst: &WeightedInstance) -> u64 {
    brute_force(inst).unwrap().unwrap().weight
}

#[test]
fn brute_force_agrees_with_literal_enumeration() {
    for seed in 0..60 {
        let class = [
            GraphClass::General,
            GraphClass::Dag,
            GraphClass::OrientedTree,
        ][seed as usize % 3];
        for kind in ProblemKind::ALL {
            let inst = random_with_budget(class, 6, seed, kind, 30);
            assert_eq!(
                brute_force(&inst).unwrap().map(|s| s.weight),
                literal_optimum(&inst),
                "seed {seed} kind {kind}"
            );
        }
    }
}

#[test]
fn tree_solvers_match_oracle() {
    for seed in 0..150 {
        let n = 1 + seed as usize % 11;
        let class = if seed % 2 == 0 {
            GraphClass::OrientedTree
        } else {
            GraphClass::Forest
        };
        let inst = random_with_budget(class, n, seed, ProblemKind::Ssg, 40);
        let s = solve_ssg_tree(&inst).unwrap();
        assert_eq!(s.weight, optimum(&inst), "ssg seed {seed}");
        assert!(check(&inst, &s.selected).is_feasible());

        let m = inst.with_kind(ProblemKind::MaximalSsg);
        let s = solve_maximal_ssg_tree(&m).unwrap();
        assert_eq!(s.weight, optimum(&m), "maximal seed {seed}");
        assert!(check(&m, &s.selected).is_feasible());

        for class in [GraphClass::OutRootedTree, GraphClass::InRootedTree] {
            let w = random_with_budget(class, n, seed, ProblemKind::Ssgw, 40);
            let s = solve_ssgw_rooted_tree(&w).unwrap();
            assert_eq!(s.weight, optimum(&w), "{class} seed {seed}");
            assert!(check(&w, &s.selected).is_feasible());
        }
    }
}

#[test]
fn dp_table_invariants() {
    for seed in 0..40 {
        let inst = random(GraphClass::OrientedTree, 9, seed, ProblemKind::Ssg);
        let t = ssg_tree_table(&inst).unwrap();
        let g = inst.graph();
        for v in g.nodes() {
            assert!(t.r_minus[v].contains(0));
            if g.out_degree(v) + g.in_degree(v) == 1 && !t.roots.contains(&v) {
                let plus: Vec<usize> = t.r_plus[v].iter().collect();
                let expected: Vec<usize> =
                    if inst.weight(v) <= inst.budget().min(inst.total_weight()) {
                        vec![inst.weight(v) as usize]
                    } else {
                        vec![]
                    };
                assert_eq!(plus, expected);
                assert_eq!(t.r_minus[v].iter().collect::<Vec<_>>(), vec![0]);
            }
        }
    }
}

#[test]
fn sink_order_steps_are_sinks() {
    for seed in 0..50 {
        let inst = random(GraphClass::Dag, 10, seed, ProblemKind::MaximalSsg);
        let g = inst.graph();
        let order = SinkOrder::new(&inst).unwrap();
        let mut removed = NodeSet::empty(10);
        for (i, &v) in order.order.iter().enumerate() {
            let sinks: Vec<usize> = g
                .nodes()
                .filter(|&x| {
                    !removed.contains(x) && g.out_neighbors(x).iter().all(|&y| removed.contains(y))
                })
                .collect();
            assert!(sinks.contains(&v));
            let lightest = sinks.iter().map(|&x| (inst.weight(x), x)).min().unwrap();
            assert_eq!(lightest.1, v);
            assert_eq!(order.prefix_weights[i], inst.weight_of(&removed));
            assert_eq!(
                order.budgets[i],
                inst.budget() as i64 - order.prefix_weights[i] as i64
            );
            removed.insert(v);
        }
    }
}

#[test]
fn tournament_feasible_sets_are_suffixes() {
    for n in 1..=8usize {
        for seed in 0..5 {
            let inst = random(GraphClass::Tournament, n, seed, ProblemKind::Ssg);
            let path = topological_order(inst.graph()).unwrap();
            let mut suffixes: Vec<NodeSet> = (0..=n)
                .map(|k| NodeSet::from_nodes(n, path[k..].iter().copied()))
                .collect();
            suffixes.sort_by(|a, b| a.lex_cmp(b));
            let mut closed: Vec<NodeSet> = all_sets(n)
                .filter(|s| literally_closed(inst.graph(), s))
                .collect();
            closed.sort_by(|a, b| a.lex_cmp(b));
            assert_eq!(closed, suffixes);
        }
    }
}

/// Tournament with every pair oriented by a coin flip (circuits allowed).
fn coin_tournament(
    n: usize,
    seed: u64,
    w: Vec<u64>,
    b: u64,
    kind: ProblemKind,
) -> WeightedInstance {
    let mut state = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            arcs.push(if state & 1 == 0 { (u, v) } else { (v, u) });
        }
    }
    WeightedInstance::new(Digraph::from_arcs(n, arcs).unwrap(), w, b, kind).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tournament_solver_matches_oracle(
        n in 1usize..=8,
        seed in any::<u64>(),
        w in proptest::collection::vec(0u64..=10, 8),
        b in 0u64..=40,
        maximal in any::<bool>(),
    ) {
        let kind = if maximal { ProblemKind::MaximalSsg } else { ProblemKind::Ssg };
        let inst = coin_tournament(n, seed, w[..n].to_vec(), b, kind);
        let s = solve_tournament(&inst).unwrap();
        prop_assert_eq!(s.weight, optimum(&inst));
        prop_assert!(check(&inst, &s.selected).is_feasible());
    }

    #[test]
    fn condensation_preserves_optimum(seed in 0u64..10_000, maximal in any::<bool>()) {
        let kind = if maximal { ProblemKind::MaximalSsg } else { ProblemKind::Ssg };
        let inst = random_with_budget(GraphClass::General, 8, seed, kind, 40);
        let c = condense(inst.graph(), inst.weights());
        let small = WeightedInstance::new(c.dag.clone(), c.component_weight.clone(), inst.budget(), kind).unwrap();
        let s = brute_force(&small).unwrap().unwrap();
        let expanded = c.expand(&s.selected);
        prop_assert_eq!(inst.weight_of(&expanded), optimum(&inst));
        prop_assert!(check(&inst, &expanded).is_feasible());
    }
}

#[test]
fn balanced_solver_matches_oracle() {
    for seed in 0..60 {
        let n = 3 + seed as usize % 7;
        let inst = random_with_budget(GraphClass::BalancedDegreeTwo, n, seed, ProblemKind::Ssg, 60);
        let s = solve_balanced_degree_two(&inst).unwrap();
        assert_eq!(s.weight, optimum(&inst), "seed {seed}");
    }
}

#[test]
fn zero_weight_sinks_are_always_taken() {
    for seed in 0..40 {
        let mut inst = random(GraphClass::OrientedTree, 8, seed, ProblemKind::MaximalSsg);
        let mut w = inst.weights().to_vec();
        for v in inst.graph().sinks().collect::<Vec<_>>() {
            w[v] = 0;
        }
        inst = WeightedInstance::new(inst.graph().clone(), w, inst.budget(), inst.kind()).unwrap();
        let s = solve_maximal_ssg_tree(&inst).unwrap();
        for v in inst.graph().sinks() {
            assert!(
                s.selected.contains(v),
                "seed {seed}: zero-weight sink {v} left out"
            );
        }
    }
}
