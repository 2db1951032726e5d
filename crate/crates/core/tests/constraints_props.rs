mod common;

use common::*;
use proptest::prelude::*;
use ssg_core::constraints::{
    check, check_digraph_closure, check_maximal, check_weak_closure, local_addable_node,
    min_sink_blocked, weak_closure_completion, Witness,
};
use ssg_core::graph::descendants;
use ssg_core::{Digraph, NodeSet, ProblemKind, WeightedInstance};

/// DAG on `0..n` with arcs only from lower to higher ids, weights `0..=6`.
fn dag_instance(max_n: usize) -> impl Strategy<Value = WeightedInstance> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            proptest::collection::vec(0u64..=6, n),
            0u64..=20,
        )
            .prop_map(move |(bits, w, b)| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let arcs = pairs.zip(bits).filter(|(_, keep)| *keep).map(|(a, _)| a);
                let g = Digraph::from_arcs(n, arcs).unwrap();
                WeightedInstance::new(g, w, b, ProblemKind::MaximalSsg).unwrap()
            })
    })
}

/// Arbitrary digraph (circuits allowed) on up to `max_n` nodes.
fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i] && i / n != i % n)
                .map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_test_matches_superset_enumeration(inst in dag_instance(7)) {
        let n = inst.node_count();
        for s in all_sets(n) {
            if !literally_feasible(&inst, &s) {
                continue;
            }
            let local = local_addable_node(inst.graph(), inst.weights(), inst.budget(), &s).is_none();
            prop_assert_eq!(local, literally_maximal(&inst, &s), "set {:?}", s);
            prop_assert_eq!(check(&inst, &s).is_feasible(), local);
        }
    }

    #[test]
    fn min_sink_shortcut_matches_every_sink(inst in dag_instance(8)) {
        let g = inst.graph();
        for s in all_sets(inst.node_count()) {
            if !literally_closed(g, &s) {
                continue;
            }
            let base = inst.weight_of(&s);
            let every = g
                .nodes()
                .filter(|&x| !s.contains(x) && g.out_neighbors(x).iter().all(|&y| s.contains(y)))
                .all(|x| base + inst.weight(x) > inst.budget());
            prop_assert_eq!(min_sink_blocked(g, inst.weights(), inst.budget(), &s), every);
        }
    }

    #[test]
    fn completion_is_idempotent_and_monotone(g in digraph(9), a in any::<u64>(), b in any::<u64>()) {
        let n = g.node_count();
        let s = mask_set(n, a & ((1 << n) - 1));
        let t = s.union(&mask_set(n, b & ((1 << n) - 1)));
        let cs = weak_closure_completion(&g, &s);
        prop_assert!(s.is_subset(&cs));
        prop_assert_eq!(weak_closure_completion(&g, &cs), cs.clone());
        prop_assert!(literally_weakly_closed(&g, &cs));
        prop_assert!(cs.is_subset(&weak_closure_completion(&g, &t)));
    }

    #[test]
    fn closure_iff_fixed_point_of_descendants(inst in dag_instance(8), m in any::<u64>()) {
        let n = inst.node_count();
        let s = mask_set(n, m & ((1 << n) - 1));
        let passes = check_digraph_closure(inst.graph(), &s).is_none();
        prop_assert_eq!(passes, descendants(inst.graph(), &s).unwrap() == s);
        prop_assert_eq!(passes, literally_closed(inst.graph(), &s));
    }

    #[test]
    fn zero_weight_free_sink_breaks_maximality(inst in dag_instance(8), m in any::<u64>()) {
        let g = inst.graph();
        let n = inst.node_count();
        let s = descendants(g, &mask_set(n, m & ((1 << n) - 1))).unwrap();
        if inst.weight_of(&s) > inst.budget() {
            return Ok(());
        }
        let zero_sink = g.nodes().any(|x| {
            !s.contains(x) && inst.weight(x) == 0 && g.out_neighbors(x).iter().all(|&y| s.contains(y))
        });
        if zero_sink {
            prop_assert_eq!(check_maximal(&inst, &s).satisfies_maximality, Some(false));
        }
    }

    #[test]
    fn witnesses_are_genuine(g in digraph(7), w in proptest::collection::vec(0u64..5, 7), b in 0u64..15, m in any::<u64>(), kind_ix in 0usize..4) {
        let n = g.node_count();
        let kind = ProblemKind::ALL[kind_ix];
        let inst = WeightedInstance::new(g, w[..n].to_vec(), b, kind).unwrap();
        let s = mask_set(n, m & ((1 << n) - 1));
        let r = check(&inst, &s);
        prop_assert_eq!(r.witness.is_some(), !r.is_feasible());
        prop_assert_eq!(r.total_weight, inst.weight_of(&s));
        match r.witness {
            Some(Witness::Arc(x, y)) => prop_assert!(s.contains(x) && !s.contains(y) && inst.graph().has_arc(x, y)),
            Some(Witness::Forced(x)) => prop_assert_eq!(check_weak_closure(inst.graph(), &s), Some(x)),
            Some(Witness::OverBudget { weight, .. }) => prop_assert!(weight > inst.budget()),
            Some(Witness::Addable(x)) => {
                prop_assert!(!s.contains(x));
                prop_assert!(!literally_maximal(&inst, &s));
            }
            None => {
                prop_assert!(literally_feasible(&inst, &s));
                if kind.is_maximal() {
                    prop_assert!(literally_maximal(&inst, &s));
                }
            }
        }
    }
}

#[test]
fn c5_gadget_completion() {
    let arcs = (0..5).flat_map(|i| [(i, 5 + i), ((i + 1) % 5, 5 + i)]);
    let g = Digraph::from_arcs(10, arcs).unwrap();
    let s = NodeSet::from_nodes(10, [0, 1]);
    assert_eq!(weak_closure_completion(&g, &s).to_vec(), vec![0, 1, 5]);
    assert_eq!(
        check_weak_closure(&g, &NodeSet::from_nodes(10, [0, 2])),
        None
    );
}
