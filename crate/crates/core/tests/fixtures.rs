//! Named instances: solver decisions, certificates and classification.

use mrmp_core::fixtures;
use mrmp_core::instance::{classify, validate, Instance};
use mrmp_core::oracle::{oracle_solve, SearchLimits};
use mrmp_core::plan::verify_plan;
use mrmp_core::solver::{solve, SolveOutcome};

fn oracle(inst: &Instance) -> Option<bool> {
    oracle_solve(inst, SearchLimits::default()).outcome.is_feasible()
}

/// Certificate vertices are distinct robot sources.
fn all_start(inst: &Instance, cert: &[mrmp_core::VertexId]) -> bool {
    let mut seen = std::collections::HashSet::new();
    !cert.is_empty()
        && cert
            .iter()
            .all(|v| seen.insert(*v) && inst.robots().iter().any(|r| r.source() == *v))
}

#[test]
fn every_fixture_is_valid() {
    for inst in fixtures::all() {
        assert!(validate(&inst).is_empty(), "{:?}", inst.name);
    }
}

#[test]
fn hex3_exits_is_feasible() {
    let inst = fixtures::hex3_exits();
    let SolveOutcome::Plan(p) = solve(&inst).unwrap() else { panic!() };
    assert!(verify_plan(&inst, &p).is_complete());
    assert_eq!(oracle(&inst), Some(true));
}

#[test]
fn infeasible_fixtures_carry_all_start_certificates() {
    // TRI3 itself has blocking targets; the solver sees it as a cycle inside
    // the exits variant.
    for inst in [fixtures::spiral3_exits(), fixtures::pass2_exits(), fixtures::tri3_exits()] {
        let SolveOutcome::Infeasible { deadlock_cycle } = solve(&inst).unwrap() else {
            panic!("{:?}", inst.name)
        };
        assert!(all_start(&inst, &deadlock_cycle), "{:?}", inst.name);
        assert_eq!(oracle(&inst), Some(false), "{:?}", inst.name);
    }
}

#[test]
fn fig1_classification() {
    let rep = classify(&fixtures::fig1());
    assert!(rep.nbt);
    assert!(!rep.uni);
    assert_eq!(rep.vm, 2);
}

#[test]
fn solver_agrees_with_oracle_on_supported_fixtures() {
    for inst in fixtures::all() {
        let out = solve(&inst).unwrap();
        if let Some(f) = out.is_feasible() {
            assert_eq!(Some(f), oracle(&inst), "{:?}", inst.name);
        }
    }
}
