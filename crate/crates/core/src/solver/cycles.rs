//! Phase 1 draining, blocking-cycle detection, scouts and draining.

use alloc::vec;
use alloc::vec::Vec;

use super::SolverError;
use crate::ids::{RobotId, VertexId};
use crate::instance::Instance;
use crate::plan::{Configuration, Move};
use super::Marks;
use crate::NONE;

/// Robot positions plus vertex occupancy.
#[derive(Clone, Debug)]
pub(crate) struct Board {
    pub pos: Vec<u32>,
    pub occ: Vec<u32>,
}

impl Board {
    pub fn new(instance: &Instance, config: &Configuration) -> Result<Self, SolverError> {
        let mut occ = vec![NONE; instance.workspace.vertex_count()];
        for r in instance.robot_ids() {
            let v = config.vertex(instance, r).index();
            if occ[v] != NONE {
                return Err(SolverError::InternalConsistency("two robots share a vertex"));
            }
            occ[v] = r.0;
        }
        Ok(Self {
            pos: config.positions.clone(),
            occ,
        })
    }

    pub fn at_target(&self, instance: &Instance, r: RobotId) -> bool {
        self.pos[r.index()] as usize == instance.robot(r).end()
    }

    /// Advances `r` by `steps`, checking every entered vertex.
    pub fn advance(&mut self, instance: &Instance, r: RobotId, steps: u32) -> Result<(), SolverError> {
        let path = &instance.robot(r).path;
        let from = self.pos[r.index()] as usize;
        let to = from + steps as usize;
        if to >= path.len() {
            return Err(SolverError::InternalConsistency("move overruns a path"));
        }
        if path[from + 1..=to].iter().any(|v| self.occ[v.index()] != NONE) {
            return Err(SolverError::InternalConsistency("move enters an occupied vertex"));
        }
        self.occ[path[from].index()] = NONE;
        self.occ[path[to].index()] = r.0;
        self.pos[r.index()] = to as u32;
        Ok(())
    }

    pub fn config(&self) -> Configuration {
        Configuration {
            positions: self.pos.clone(),
        }
    }
}

/// Moves every robot with a clear path to its target, cascading until no such
/// robot remains. Each path vertex is scanned once.
pub(crate) fn drain_clear_paths(instance: &Instance, board: &mut Board) -> Vec<Move> {
    let n = instance.robot_count();
    let mut scan = vec![0u32; n];
    let mut first_waiter = vec![NONE; n];
    let mut next_waiter = vec![NONE; n];
    let mut moves = Vec::new();
    let mut stack: Vec<u32> = (0..n as u32).rev().collect();

    while let Some(r) = stack.pop() {
        let rid = RobotId(r);
        let path = &instance.robot(rid).path;
        let at = board.pos[r as usize] as usize;
        if at == path.len() - 1 {
            continue;
        }
        let mut k = (scan[r as usize] as usize).max(at + 1);
        while k < path.len() && board.occ[path[k].index()] == NONE {
            k += 1;
        }
        scan[r as usize] = k as u32;
        if k < path.len() {
            let blocker = board.occ[path[k].index()] as usize;
            next_waiter[r as usize] = first_waiter[blocker];
            first_waiter[blocker] = r;
            continue;
        }
        let steps = (path.len() - 1 - at) as u32;
        board.occ[path[at].index()] = NONE;
        board.occ[path[path.len() - 1].index()] = r;
        board.pos[r as usize] = (path.len() - 1) as u32;
        moves.push(Move::new(rid, steps));
        let mut w = core::mem::replace(&mut first_waiter[r as usize], NONE);
        while w != NONE {
            stack.push(w);
            w = next_waiter[w as usize];
        }
    }
    moves
}

/// Runs Phase 1 from `config`; returns the moves and the resulting configuration.
pub fn phase1(
    instance: &Instance,
    config: &Configuration,
) -> Result<(Vec<Move>, Configuration), SolverError> {
    let mut board = Board::new(instance, config)?;
    let moves = drain_clear_paths(instance, &mut board);
    Ok((moves, board.config()))
}

/// Circular chain of robots, each blocked by the next one's source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingCycle {
    pub robots: Vec<RobotId>,
    /// Path index of each robot's cycle target.
    pub ends: Vec<u32>,
}

impl BlockingCycle {
    pub fn len(&self) -> usize {
        self.robots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.robots.is_empty()
    }

    pub fn cycle_path<'a>(&self, instance: &'a Instance, i: usize) -> &'a [VertexId] {
        &instance.robot(self.robots[i]).path[..=self.ends[i] as usize]
    }

    pub fn cycle_target(&self, instance: &Instance, i: usize) -> VertexId {
        instance.robot(self.robots[i]).path[self.ends[i] as usize]
    }
}

/// Partitions the unfinished robots into blocking cycles. Each robot's
/// successor is the owner of the nearest occupied vertex on its path.
pub fn detect_cycles(
    instance: &Instance,
    config: &Configuration,
) -> Result<Vec<BlockingCycle>, SolverError> {
    let board = Board::new(instance, config)?;
    detect_on_board(instance, &board)
}

pub(crate) fn detect_on_board(
    instance: &Instance,
    board: &Board,
) -> Result<Vec<BlockingCycle>, SolverError> {
    let n = instance.robot_count();
    let mut succ = vec![NONE; n];
    let mut end = vec![0u32; n];
    let mut indeg = vec![0u8; n];
    for r in instance.robot_ids() {
        if board.at_target(instance, r) {
            continue;
        }
        if board.pos[r.index()] != 0 {
            return Err(SolverError::InternalConsistency("unfinished robot is not at its source"));
        }
        let path = &instance.robot(r).path;
        let k = (1..path.len())
            .find(|&k| board.occ[path[k].index()] != NONE)
            .ok_or(SolverError::InternalConsistency("robot with a clear path after phase 1"))?;
        let s = board.occ[path[k].index()];
        succ[r.index()] = s;
        end[r.index()] = k as u32;
        indeg[s as usize] += 1;
        if indeg[s as usize] > 1 {
            return Err(SolverError::InternalConsistency("robot blocks two others"));
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for r in 0..n {
        if succ[r] == NONE || seen[r] {
            continue;
        }
        let mut robots = Vec::new();
        let mut ends = Vec::new();
        let mut x = r;
        while !seen[x] {
            seen[x] = true;
            if succ[x] == NONE {
                return Err(SolverError::InternalConsistency("blocker is finished"));
            }
            robots.push(RobotId(x as u32));
            ends.push(end[x]);
            x = succ[x] as usize;
        }
        if x != r {
            return Err(SolverError::InternalConsistency("blocking chain does not close"));
        }
        cycles.push(BlockingCycle { robots, ends });
    }
    Ok(cycles)
}

/// Position in the cycle of the first robot owning a cycle-path vertex that
/// lies on no other cycle path, with that vertex.
pub fn find_scout(instance: &Instance, cycle: &BlockingCycle) -> Option<(usize, VertexId)> {
    find_scout_with(instance, cycle, &mut Marks::new(instance.workspace.vertex_count()))
}

/// `marks` must be all unset; it is left that way.
pub(crate) fn find_scout_with(
    instance: &Instance,
    cycle: &BlockingCycle,
    marks: &mut Marks,
) -> Option<(usize, VertexId)> {
    let paths = || (0..cycle.len()).map(|i| cycle.cycle_path(instance, i));
    for p in paths() {
        for &v in p {
            let c = marks.get(v);
            marks.set(v, if c == NONE { 1 } else { c + 1 });
        }
    }
    let found = paths().enumerate().find_map(|(i, p)| {
        p[1..p.len() - 1]
            .iter()
            .find(|&&v| marks.get(v) == 1)
            .map(|&v| (i, v))
    });
    for p in paths() {
        marks.reset(p.iter().copied());
    }
    found
}

/// Scout `cycle.robots[j]` parks on `p`, then the others move to their cycle
/// targets in reverse cycle order, ending with the scout.
pub fn solve_scout_cycle(
    instance: &Instance,
    cycle: &BlockingCycle,
    j: usize,
    p: VertexId,
) -> Vec<Move> {
    let h = cycle.len();
    let scout = cycle.robots[j];
    let park = instance
        .robot(scout)
        .path
        .iter()
        .position(|&v| v == p)
        .expect("p lies on the scout path") as u32;
    let mut moves = vec![Move::new(scout, park)];
    for k in 1..h {
        let i = (j + h - k) % h;
        moves.push(Move::new(cycle.robots[i], cycle.ends[i]));
    }
    if cycle.ends[j] > park {
        moves.push(Move::new(scout, cycle.ends[j] - park));
    }
    moves
}

/// Moves every cycle robot from its cycle target to its true target.
pub(crate) fn drain_on_board(
    instance: &Instance,
    board: &mut Board,
    cycle: &BlockingCycle,
) -> Result<Vec<Move>, SolverError> {
    let mut moves = Vec::with_capacity(cycle.len());
    for (i, &r) in cycle.robots.iter().enumerate() {
        if board.pos[r.index()] != cycle.ends[i] {
            return Err(SolverError::InternalConsistency("cycle robot not at its cycle target"));
        }
        let steps = instance.robot(r).end() as u32 - cycle.ends[i];
        if steps > 0 {
            board
                .advance(instance, r, steps)
                .map_err(|_| SolverError::InternalConsistency("solved cycle robot has no clear path"))?;
            moves.push(Move::new(r, steps));
        }
    }
    Ok(moves)
}

/// Drains a solved cycle from `config`.
pub fn drain_cycle(
    instance: &Instance,
    config: &Configuration,
    cycle: &BlockingCycle,
) -> Result<(Vec<Move>, Configuration), SolverError> {
    let mut board = Board::new(instance, config)?;
    let moves = drain_on_board(instance, &mut board, cycle)?;
    Ok((moves, board.config()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::plan::{initial_configuration, verify_plan, MotionPlan, Simulator};

    fn rid(i: u32) -> RobotId {
        RobotId(i)
    }

    #[test]
    fn phase1_disjoint_and_cascade() {
        let inst = Instance::from_paths(&[("r0", &["a", "b"]), ("r1", &["c", "d"])]);
        let (moves, c) = phase1(&inst, &initial_configuration(&inst)).unwrap();
        assert_eq!(moves.len(), 2);
        assert!(c.is_goal(&inst));

        let inst = Instance::from_paths(&[("r0", &["a", "b"]), ("r1", &["c", "a", "d"])]);
        let (moves, c) = phase1(&inst, &initial_configuration(&inst)).unwrap();
        assert_eq!(moves, [Move::new(rid(0), 1), Move::new(rid(1), 2)]);
        assert!(c.is_goal(&inst));

        // r1 waits on r0 which waits on r2.
        let inst = Instance::from_paths(&[
            ("r0", &["a", "x", "b", "y"]),
            ("r1", &["c", "a", "z"]),
            ("r2", &["b", "w"]),
        ]);
        let (moves, c) = phase1(&inst, &initial_configuration(&inst)).unwrap();
        assert_eq!(moves, [Move::new(rid(2), 1), Move::new(rid(0), 3), Move::new(rid(1), 2)]);
        assert!(verify_plan(&inst, &MotionPlan::new(moves)).is_complete());
        assert!(c.is_goal(&inst));
    }

    #[test]
    fn phase1_hex3_is_stuck() {
        let inst = fixtures::hex3_exits();
        let (moves, c) = phase1(&inst, &initial_configuration(&inst)).unwrap();
        assert!(moves.is_empty());
        assert_eq!(c, initial_configuration(&inst));
    }

    #[test]
    fn cycles_of_examples() {
        let tri = fixtures::tri3();
        let cycles = detect_cycles(&tri, &initial_configuration(&tri)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].robots, [rid(0), rid(1), rid(2)]);
        assert_eq!(cycles[0].ends, [1, 1, 1]);

        let fig2 = fixtures::fig2();
        let cycles = detect_cycles(&fig2, &initial_configuration(&fig2)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].robots, (0..6).map(rid).collect::<Vec<_>>());

        let two = crate::generate::disjoint_copies(&fixtures::hex3_exits(), 2);
        let cycles = detect_cycles(&two, &initial_configuration(&two)).unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn scouts() {
        let fig2 = fixtures::fig2();
        let c = &detect_cycles(&fig2, &initial_configuration(&fig2)).unwrap()[0];
        let (j, p) = find_scout(&fig2, c).unwrap();
        assert_eq!((j, fig2.vertex_name(p)), (0, "p"));

        let hex = fixtures::hex3();
        let c = &detect_cycles(&hex, &initial_configuration(&hex)).unwrap()[0];
        assert_eq!(find_scout(&hex, c), None);
    }

    fn run_scout(inst: &Instance) -> Vec<Move> {
        let c = &detect_cycles(inst, &initial_configuration(inst)).unwrap()[0];
        let (j, p) = find_scout(inst, c).unwrap();
        let moves = solve_scout_cycle(inst, c, j, p);
        let mut sim = Simulator::new(inst);
        for &m in &moves {
            sim.apply(m).unwrap();
        }
        for (i, &r) in c.robots.iter().enumerate() {
            assert_eq!(sim.index(r), c.ends[i] as usize);
        }
        moves
    }

    #[test]
    fn scout_three_cycle() {
        let inst = Instance::from_paths(&[("r0", &["a", "x", "b"]), ("r1", &["b", "c"]), ("r2", &["c", "a"])]);
        let moves = run_scout(&inst);
        assert_eq!(
            moves,
            [Move::new(rid(0), 1), Move::new(rid(2), 1), Move::new(rid(1), 1), Move::new(rid(0), 1)]
        );
    }

    #[test]
    fn scout_two_cycle() {
        let inst = Instance::from_paths(&[("r0", &["a", "x", "b"]), ("r1", &["b", "a"])]);
        let moves = run_scout(&inst);
        assert_eq!(moves, [Move::new(rid(0), 1), Move::new(rid(1), 1), Move::new(rid(0), 1)]);
        run_scout(&fixtures::fig2());
    }

    #[test]
    fn drain_moves_only_cycle_robots() {
        let inst = fixtures::hex3_exits();
        let c = &detect_cycles(&inst, &initial_configuration(&inst)).unwrap()[0];
        // Robots placed on their cycle targets by hand.
        let config = Configuration { positions: vec![3, 3, 3] };
        let (moves, after) = drain_cycle(&inst, &config, c).unwrap();
        assert_eq!(moves, [Move::new(rid(0), 1), Move::new(rid(1), 1), Move::new(rid(2), 1)]);
        assert!(after.is_goal(&inst));
    }
}
