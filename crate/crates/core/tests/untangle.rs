//! Untangling keeps feasibility, and every intermediate graph stays
//! composed of paths.

use std::collections::{HashMap, HashSet};

use mrmp_core::generate::{self, GraphSpec};
use mrmp_core::instance::Instance;
use mrmp_core::oracle::{oracle_solve, SearchLimits};
use mrmp_core::solver::{reduce_to_irreducible_with, PathGraph};
use mrmp_core::VertexId;
use proptest::prelude::*;

/// Independent check over the public view: simple label paths, consecutive
/// labels chained start to end, every vertex on exactly two labels.
fn composed_of_paths(g: &PathGraph) -> Result<(), String> {
    let h = g.label_count();
    let paths: Vec<Vec<VertexId>> = (0..h).map(|l| g.label_path(l)).collect();
    for (l, p) in paths.iter().enumerate() {
        let uniq: HashSet<_> = p.iter().collect();
        if uniq.len() != p.len() {
            return Err(format!("label {l} repeats a vertex"));
        }
        if p.last() != paths[(l + 1) % h].first() {
            return Err(format!("label {l} does not end where {} starts", (l + 1) % h));
        }
    }
    let mut count: HashMap<VertexId, usize> = HashMap::new();
    for p in &paths {
        for v in p {
            *count.entry(*v).or_default() += 1;
        }
    }
    if count.len() != g.vertex_count() {
        return Err("vertex count mismatch".into());
    }
    match count.iter().find(|(_, &c)| c != 2) {
        Some((v, c)) => Err(format!("{v} on {c} labels")),
        None => Ok(()),
    }
}

fn feasible(inst: &Instance) -> bool {
    oracle_solve(inst, SearchLimits::default())
        .outcome
        .is_feasible()
        .expect("small graphs never exhaust")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn one_untangle_preserves_feasibility(seed: u64, robots in 2usize..=5, max_interior in 1usize..=3) {
        let (inst, v0) = generate::random_knot_graph(
            &mut generate::rng(seed),
            GraphSpec { robots, max_interior },
        );
        let g = PathGraph::from_instance(&inst).unwrap();
        let after = g.untangled(v0).unwrap();
        prop_assert_eq!(composed_of_paths(&after), Ok(()));
        after.check_composed_of_paths().unwrap();
        prop_assert_eq!(feasible(&g.to_instance(&inst)), feasible(&after.to_instance(&inst)));
    }

    #[test]
    fn reduction_intermediates_are_composed_of_paths(seed: u64, robots in 2usize..=7, max_interior in 0usize..=4) {
        let inst = generate::random_path_graph(
            &mut generate::rng(seed),
            GraphSpec { robots, max_interior },
        );
        let g = PathGraph::from_instance(&inst).unwrap();
        prop_assert_eq!(composed_of_paths(&g), Ok(()));
        let mut seen = Vec::new();
        let red = reduce_to_irreducible_with(g.clone(), |g| seen.push(composed_of_paths(g))).unwrap();
        prop_assert!(seen.iter().all(Result::is_ok), "{:?}", seen);
        prop_assert_eq!(composed_of_paths(&red.graph), Ok(()));
        prop_assert_eq!(seen.len(), red.untangled.len());
        // Reduction never changes the decision.
        prop_assert_eq!(feasible(&g.to_instance(&inst)), feasible(&red.graph.to_instance(&inst)));
    }
}
