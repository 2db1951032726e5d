mod common;

use common::*;
use ssg_core::approx::{maximal_guarantee, ptas_maximal_ssg, ptas_ssg, ssg_guarantee};
use ssg_core::constraints::check;
use ssg_core::exact::brute_force;
use ssg_core::graph::GraphClass;
use ssg_core::ProblemKind;

#[test]
fn outputs_are_feasible_and_within_guarantee() {
    for seed in 0..60 {
        let n = 4 + seed as usize % 8;
        let inst = random_with_budget(GraphClass::Dag, n, seed, ProblemKind::Ssg, 40);
        let max = inst.with_kind(ProblemKind::MaximalSsg);
        let opt = brute_force(&inst).unwrap().unwrap().weight;
        let opt_max = brute_force(&max).unwrap().unwrap().weight;
        for k in 0..=3 {
            let r = ptas_ssg(&inst, k).unwrap();
            assert!(check(&inst, &r.solution.selected).is_feasible());
            let g = ssg_guarantee(k);
            assert!(
                r.solution.weight * g.den >= opt * g.num,
                "seed {seed} k {k}"
            );
            assert_eq!(r.guarantee, g);

            let r = ptas_maximal_ssg(&max, k).unwrap();
            assert!(check(&max, &r.solution.selected).is_feasible());
            let g = maximal_guarantee(k);
            assert!(
                r.solution.weight * g.den <= opt_max * g.num,
                "seed {seed} k {k}"
            );
        }
    }
}

#[test]
fn full_seed_size_is_exact() {
    for seed in 0..20 {
        let n = 2 + seed as usize % 7;
        let inst = random_with_budget(GraphClass::Dag, n, seed, ProblemKind::Ssg, 40);
        let max = inst.with_kind(ProblemKind::MaximalSsg);
        assert_eq!(
            ptas_ssg(&inst, n).unwrap().solution.weight,
            brute_force(&inst).unwrap().unwrap().weight
        );
        assert_eq!(
            ptas_maximal_ssg(&max, n).unwrap().solution.weight,
            brute_force(&max).unwrap().unwrap().weight
        );
    }
}

#[test]
fn deterministic() {
    for seed in 0..10 {
        let inst = random(GraphClass::General, 9, seed, ProblemKind::Ssg);
        assert_eq!(ptas_ssg(&inst, 2).unwrap(), ptas_ssg(&inst, 2).unwrap());
        let max = inst.with_kind(ProblemKind::MaximalSsg);
        assert_eq!(
            ptas_maximal_ssg(&max, 2).unwrap(),
            ptas_maximal_ssg(&max, 2).unwrap()
        );
    }
}

#[test]
fn everything_fits() {
    for seed in 0..10 {
        let mut inst = random(GraphClass::Dag, 8, seed, ProblemKind::Ssg);
        inst = inst.with_budget(inst.total_weight()).unwrap();
        for k in 0..3 {
            assert_eq!(
                ptas_ssg(&inst, k).unwrap().solution.weight,
                inst.total_weight()
            );
            assert_eq!(
                ptas_maximal_ssg(&inst, k).unwrap().solution.weight,
                inst.total_weight()
            );
        }
    }
}
