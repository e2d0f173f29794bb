//! Linear-time decision procedure and plan builder for instances with
//! non-blocking targets and vertex multiplicity at most two.
//!
//! Pipeline: drain robots with clear paths, split the rest into blocking
//! cycles, solve each cycle (scout shortcut or path graph + untangling +
//! block schedule), then drain the cycle robots.

mod blocks;
mod cycles;
mod graph;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

pub use blocks::{
    block_partition, classify_irreducible, expand_moves, reduce_to_irreducible,
    reduce_to_irreducible_with, solve_blocks, solve_blocks_observed, BlockObserver,
    BlockPartition, GraphMove, Irreducible, Reduction,
};
pub use cycles::{
    detect_cycles, drain_cycle, find_scout, phase1, solve_scout_cycle, BlockingCycle,
};
pub use graph::{Merge, PathGraph, Untangled};

use crate::ids::VertexId;
use crate::instance::Instance;
use crate::plan::{initial_configuration, MotionPlan, Move};
use crate::NONE;
use cycles::Board;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("internal consistency violated: {0}")]
    InternalConsistency(&'static str),
    #[error("untangle precondition failed: not a knot")]
    NotAKnot,
    #[error("composed-of-paths property violated: {0}")]
    PropertyViolation(String),
    #[error("block schedule invariant violated: {0}")]
    LoopInvariant(&'static str),
    #[error("graph still contains a knot block")]
    NotIrreducible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unsupported {
    NotNbt,
    VertexMultiplicity(usize),
}

impl fmt::Display for Unsupported {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unsupported::NotNbt => f.write_str("not NBT"),
            Unsupported::VertexMultiplicity(vm) => {
                write!(f, "vertex multiplicity {vm} exceeds 2")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Plan(MotionPlan),
    /// A cycle of occupied start vertices in some reduced path graph.
    Infeasible { deadlock_cycle: Vec<VertexId> },
    Unsupported(Unsupported),
}

impl SolveOutcome {
    pub fn is_feasible(&self) -> Option<bool> {
        match self {
            SolveOutcome::Plan(_) => Some(true),
            SolveOutcome::Infeasible { .. } => Some(false),
            SolveOutcome::Unsupported(_) => None,
        }
    }
}

/// Hooks for tests and diagnostics. All methods default to no-ops.
pub trait SolveObserver {
    /// Every path graph built, including each intermediate untangling result.
    fn path_graph(&mut self, _g: &PathGraph) {}
    /// Block boundary of the block schedule.
    fn block_boundary(&mut self, _occupied_non_start: usize) {}
    /// Moves that took a cycle's robots to their cycle targets.
    fn cycle_solved(&mut self, _cycle: &BlockingCycle, _moves: &[Move], _via_scout: bool) {}
}

impl SolveObserver for () {}

struct Forward<'a, O>(&'a mut O);

impl<O: SolveObserver> BlockObserver for Forward<'_, O> {
    fn boundary(&mut self, occupied_non_start: usize) {
        self.0.block_boundary(occupied_non_start);
    }
}

/// Dense per-vertex scratch values, unset entries hold `NONE`. Users reset
/// the entries they touched, so one allocation serves a whole solve.
pub(crate) struct Marks(Vec<u32>);

impl Marks {
    pub(crate) fn new(vertices: usize) -> Self {
        Self(vec![NONE; vertices])
    }

    pub(crate) fn get(&self, v: VertexId) -> u32 {
        self.0[v.index()]
    }

    pub(crate) fn set(&mut self, v: VertexId, x: u32) {
        self.0[v.index()] = x;
    }

    pub(crate) fn reset(&mut self, vs: impl IntoIterator<Item = VertexId>) {
        for v in vs {
            self.0[v.index()] = NONE;
        }
    }
}

/// Vertex multiplicity and NBT in one pass over the paths.
fn gate(instance: &Instance) -> Option<Unsupported> {
    let mut count = vec![0u32; instance.workspace.vertex_count()];
    for r in instance.robots() {
        for v in &r.path {
            count[v.index()] += 1;
        }
    }
    let vm = count.iter().copied().max().unwrap_or(0) as usize;
    if instance.robots().iter().any(|r| count[r.target().index()] > 1) {
        return Some(Unsupported::NotNbt);
    }
    (vm > 2).then_some(Unsupported::VertexMultiplicity(vm))
}

pub fn solve(instance: &Instance) -> Result<SolveOutcome, SolverError> {
    solve_observed(instance, &mut ())
}

pub fn solve_observed(
    instance: &Instance,
    obs: &mut impl SolveObserver,
) -> Result<SolveOutcome, SolverError> {
    if let Some(reason) = gate(instance) {
        return Ok(SolveOutcome::Unsupported(reason));
    }
    let mut board = Board::new(instance, &initial_configuration(instance))?;
    let mut moves = cycles::drain_clear_paths(instance, &mut board);
    let found = cycles::detect_on_board(instance, &board)?;
    let mut marks = Marks::new(instance.workspace.vertex_count());
    for cycle in &found {
        let (cycle_moves, via_scout) = match cycles::find_scout_with(instance, cycle, &mut marks) {
            Some((j, p)) => (solve_scout_cycle(instance, cycle, j, p), true),
            None => match solve_without_scout(instance, cycle, &mut marks, obs)? {
                Ok(m) => (m, false),
                Err(cert) => {
                    return Ok(SolveOutcome::Infeasible {
                        deadlock_cycle: cert,
                    })
                }
            },
        };
        for m in &cycle_moves {
            board.advance(instance, m.robot, m.steps)?;
        }
        obs.cycle_solved(cycle, &cycle_moves, via_scout);
        moves.extend(cycle_moves);
        moves.extend(cycles::drain_on_board(instance, &mut board, cycle)?);
    }
    if instance.robot_ids().any(|r| !board.at_target(instance, r)) {
        return Err(SolverError::InternalConsistency("robot left unfinished"));
    }
    Ok(SolveOutcome::Plan(MotionPlan::new(moves)))
}

/// Inner `Err` carries the deadlock certificate.
fn solve_without_scout(
    instance: &Instance,
    cycle: &BlockingCycle,
    marks: &mut Marks,
    obs: &mut impl SolveObserver,
) -> Result<Result<Vec<Move>, Vec<VertexId>>, SolverError> {
    let g = PathGraph::from_cycle_with(instance, cycle, marks)?;
    obs.path_graph(&g);
    let red = reduce_to_irreducible_with(g, |g| obs.path_graph(g))?;
    match classify_irreducible(&red.graph)? {
        Irreducible::Unsolvable(cert) => Ok(Err(cert)),
        Irreducible::Solvable => {
            let gm = solve_blocks_observed(&red.graph, &mut Forward(obs))?;
            Ok(Ok(expand_moves(&red.graph, &gm)))
        }
    }
}
