//! Block schedule invariants observed through the solver hooks.

use std::collections::HashMap;

use mrmp_core::fixtures;
use mrmp_core::generate::{self, CycleSpec};
use mrmp_core::instance::Instance;
use mrmp_core::plan::verify_plan;
use mrmp_core::solver::{solve_observed, BlockingCycle, PathGraph, SolveObserver};
use mrmp_core::{Move, SolveOutcome};
use proptest::prelude::*;

#[derive(Default)]
struct Watch {
    worst_boundary: usize,
    boundaries: usize,
    worst_episodes: usize,
    graphs: usize,
    scout_cycles: usize,
}

impl SolveObserver for Watch {
    fn path_graph(&mut self, _g: &PathGraph) {
        self.graphs += 1;
    }

    fn block_boundary(&mut self, occupied_non_start: usize) {
        self.boundaries += 1;
        self.worst_boundary = self.worst_boundary.max(occupied_non_start);
    }

    fn cycle_solved(&mut self, _c: &BlockingCycle, moves: &[Move], via_scout: bool) {
        self.scout_cycles += usize::from(via_scout);
        let mut episodes: HashMap<_, usize> = HashMap::new();
        let mut last = None;
        for m in moves {
            if last != Some(m.robot) {
                *episodes.entry(m.robot).or_default() += 1;
            }
            last = Some(m.robot);
        }
        let worst = episodes.values().copied().max().unwrap_or(0);
        self.worst_episodes = self.worst_episodes.max(worst);
    }
}

fn watch(inst: &Instance) -> (Watch, SolveOutcome) {
    let mut w = Watch::default();
    let out = solve_observed(inst, &mut w).unwrap();
    (w, out)
}

#[test]
fn three_episode_fixture() {
    let inst = fixtures::three_episodes();
    let (w, out) = watch(&inst);
    let SolveOutcome::Plan(p) = out else { panic!() };
    assert!(verify_plan(&inst, &p).is_complete());
    assert_eq!(w.worst_episodes, 3);
    assert!(w.boundaries > 0 && w.worst_boundary <= 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn invariant_and_episodes(seed: u64, robots in 2usize..=9, max_path in 3usize..=8) {
        let inst = generate::random_cycle_instance(
            &mut generate::rng(seed),
            CycleSpec { robots, max_path, scout: false },
        );
        let (w, out) = watch(&inst);
        prop_assert!(w.worst_boundary <= 1);
        prop_assert!(w.worst_episodes <= 3);
        if let SolveOutcome::Plan(p) = out {
            prop_assert!(verify_plan(&inst, &p).is_complete());
        }
    }

    #[test]
    fn scout_cycles_avoid_path_graphs(seed: u64, robots in 2usize..=7, max_path in 4usize..=7) {
        let inst = generate::random_cycle_instance(
            &mut generate::rng(seed),
            CycleSpec { robots, max_path, scout: true },
        );
        let (w, out) = watch(&inst);
        prop_assert_eq!(w.graphs, 0);
        prop_assert_eq!(w.scout_cycles, 1);
        let SolveOutcome::Plan(p) = out else { panic!("scout cycles are solvable") };
        prop_assert!(verify_plan(&inst, &p).is_complete());
    }
}
