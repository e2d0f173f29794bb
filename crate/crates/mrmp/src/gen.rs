//! Seeded generators behind `mrmp gen`, returning canonical file text.

use mrmp_core::fixtures;
use mrmp_core::generate::{self, CycleSpec, GraphSpec, GridSpec};
use mrmp_core::hardness::{pivot_to_pc, sat_to_pivot, CnfFormula};
use thiserror::Error;

use crate::format::{compact_json, instance_json, pc_json};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("{0}")]
    Range(String),
    #[error("unknown preset {0:?}; known: {1}")]
    Preset(String, String),
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<(), GenError> {
    if ok {
        Ok(())
    } else {
        Err(GenError::Range(msg()))
    }
}

/// Single blocking cycle with private exits, optionally with a scout vertex.
pub fn cycle(seed: u64, robots: usize, max_path: usize, scout: bool) -> Result<String, GenError> {
    need(robots >= 2, || "--robots must be at least 2".into())?;
    let min = 3 + usize::from(scout);
    need(max_path >= min, || format!("--max-path must be at least {min}"))?;
    let spec = CycleSpec {
        robots,
        max_path,
        scout,
    };
    Ok(instance_json(&generate::random_cycle_instance(
        &mut generate::rng(seed),
        spec,
    )))
}

pub fn grid(
    seed: u64,
    width: u32,
    height: u32,
    robots: usize,
    max_path: usize,
) -> Result<String, GenError> {
    need(width >= 1 && height >= 1, || "grid must be non-empty".into())?;
    need(max_path >= 1, || "--max-path must be positive".into())?;
    let spec = GridSpec {
        width,
        height,
        robots,
        max_path,
    };
    Ok(compact_json(&generate::random_grid(
        &mut generate::rng(seed),
        spec,
    )))
}

/// Named fixture, or a random graph composed of paths (with a knot if asked).
pub fn pathgraph(
    preset: Option<&str>,
    seed: u64,
    robots: usize,
    max_interior: usize,
    knot: bool,
) -> Result<String, GenError> {
    if let Some(name) = preset {
        return fixtures::preset(name)
            .map(|i| instance_json(&i))
            .ok_or_else(|| {
                let known: Vec<String> = fixtures::all().into_iter().filter_map(|i| i.name).collect();
                GenError::Preset(name.into(), known.join(", "))
            });
    }
    need(robots >= 2, || "--robots must be at least 2".into())?;
    let spec = GraphSpec {
        robots,
        max_interior,
    };
    let mut rng = generate::rng(seed);
    let inst = if knot {
        need(max_interior >= 1, || "--knot needs --max-interior of at least 1".into())?;
        generate::random_knot_graph(&mut rng, spec).0
    } else {
        generate::random_path_graph(&mut rng, spec)
    };
    Ok(instance_json(&inst))
}

pub fn random_formula(seed: u64, vars: u32, clauses: usize) -> Result<CnfFormula, GenError> {
    need(vars >= 1 && clauses >= 1, || "--vars and --clauses must be positive".into())?;
    Ok(generate::random_cnf(&mut generate::rng(seed), vars, clauses))
}

/// Constrained planning instance for `phi` via pivot scheduling.
pub fn sat(phi: &CnfFormula) -> String {
    pc_json(&pivot_to_pc(&sat_to_pivot(phi)))
}
