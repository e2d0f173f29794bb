//! 3SAT, pivot scheduling and constrained planning agree on small formulas.

use mrmp_core::generate;
use mrmp_core::hardness::{
    pivot_brute_force, pivot_to_pc, sat_brute_force, sat_to_pivot, validate_pc, verify_partition,
    GadgetKind, Partition,
};
use mrmp_core::oracle::{check_pc_plan, gadget_entries, oracle_solve_pc, OracleOutcome, SearchLimits};
use mrmp_core::plan::verify_plan;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn chain_agrees(seed: u64) {
        let phi = generate::random_cnf(&mut generate::rng(seed), 4, 5);
        let sat = sat_brute_force(&phi).unwrap();
        let pivot = sat_to_pivot(&phi);
        let part = pivot_brute_force(&pivot).unwrap();
        prop_assert_eq!(sat.is_some(), part.is_some());
        if let Some(a) = &sat {
            prop_assert!(verify_partition(&pivot, &Partition::from_assignment(a)));
        }

        let pc = pivot_to_pc(&pivot);
        prop_assert!(validate_pc(&pc).is_empty());
        let r = oracle_solve_pc(&pc, SearchLimits::default());
        match r.outcome {
            OracleOutcome::Feasible(plan) => {
                prop_assert!(sat.is_some());
                prop_assert!(verify_plan(&pc.base, &plan).is_complete());
                prop_assert_eq!(check_pc_plan(&pc, &plan), Ok(()));
                // Every after gadget sees some checker after beta.
                let entries = gadget_entries(&pc, &plan);
                for (g, gadget) in pc.gadgets.iter().enumerate() {
                    if let GadgetKind::After { checkers, beta } = gadget.kind {
                        let seq: Vec<_> = entries.iter().filter(|e| e.0 == g).map(|e| e.1).collect();
                        let b = seq.iter().position(|&r| r == beta).unwrap();
                        prop_assert!(seq[b + 1..].iter().any(|r| checkers.contains(r)));
                    }
                }
            }
            OracleOutcome::Infeasible => prop_assert!(sat.is_none()),
            OracleOutcome::Exhausted { states } => prop_assert!(false, "exhausted at {}", states),
        }
    }
}
