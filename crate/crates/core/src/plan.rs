//! Configurations, moves and plan verification.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::ids::{RobotId, VertexId};
use crate::instance::Instance;
use crate::NONE;

/// Per-robot index into its path (0 = source).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub positions: Vec<u32>,
}

impl Configuration {
    pub fn index(&self, r: RobotId) -> usize {
        self.positions[r.index()] as usize
    }

    pub fn vertex(&self, instance: &Instance, r: RobotId) -> VertexId {
        instance.robot(r).path[self.index(r)]
    }

    pub fn is_goal(&self, instance: &Instance) -> bool {
        instance
            .robots()
            .iter()
            .zip(&self.positions)
            .all(|(r, &i)| i as usize == r.end())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub robot: RobotId,
    pub steps: u32,
}

impl Move {
    pub fn new(robot: RobotId, steps: u32) -> Self {
        Self { robot, steps }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MotionPlan {
    pub moves: Vec<Move>,
}

impl MotionPlan {
    pub fn new(moves: Vec<Move>) -> Self {
        Self { moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Same plan with every move split into unit moves.
    pub fn to_unit_moves(&self) -> MotionPlan {
        let moves = self
            .moves
            .iter()
            .flat_map(|m| core::iter::repeat(Move::new(m.robot, 1)).take(m.steps as usize))
            .collect();
        MotionPlan { moves }
    }

    /// Total number of edges traversed.
    pub fn total_steps(&self) -> u64 {
        self.moves.iter().map(|m| m.steps as u64).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveError {
    Occupied { vertex: VertexId, by: RobotId },
    Overrun { robot: RobotId },
    UnknownRobot { robot: RobotId },
    ZeroSteps { robot: RobotId },
}

impl MoveError {
    pub fn describe(&self, instance: &Instance) -> String {
        let robot_name = |r: RobotId| {
            instance
                .robots()
                .get(r.index())
                .map(|p| p.name.clone())
                .unwrap_or_else(|| r.to_string())
        };
        match self {
            MoveError::Occupied { vertex, by } => alloc::format!(
                "OCCUPIED({}) held by {}",
                instance.vertex_name(*vertex),
                robot_name(*by)
            ),
            MoveError::Overrun { robot } => {
                alloc::format!("OVERRUN: {} would pass its target", robot_name(*robot))
            }
            MoveError::UnknownRobot { robot } => alloc::format!("unknown robot {robot}"),
            MoveError::ZeroSteps { robot } => {
                alloc::format!("move of {} has zero steps", robot_name(*robot))
            }
        }
    }
}

pub fn initial_configuration(instance: &Instance) -> Configuration {
    Configuration {
        positions: vec![0; instance.robot_count()],
    }
}

/// Applies `mv` edge by edge. The input configuration is untouched on error.
pub fn apply_move(
    instance: &Instance,
    config: &Configuration,
    mv: Move,
) -> Result<Configuration, MoveError> {
    let mut sim = Simulator::with_configuration(instance, config.clone());
    sim.apply(mv)?;
    Ok(sim.into_configuration())
}

pub fn occupied_set(instance: &Instance, config: &Configuration) -> BTreeSet<VertexId> {
    instance
        .robot_ids()
        .map(|r| config.vertex(instance, r))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    Incomplete,
    Invalid,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Complete => "complete",
            Status::Incomplete => "incomplete",
            Status::Invalid => "invalid",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub failing_step: Option<usize>,
    pub reason: Option<String>,
}

impl Verdict {
    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }
}

pub fn verify_plan(instance: &Instance, plan: &MotionPlan) -> Verdict {
    let mut sim = Simulator::new(instance);
    for (i, &mv) in plan.moves.iter().enumerate() {
        if let Err(e) = sim.apply(mv) {
            return Verdict {
                status: Status::Invalid,
                failing_step: Some(i),
                reason: Some(e.describe(instance)),
            };
        }
    }
    if sim.is_goal() {
        Verdict {
            status: Status::Complete,
            failing_step: None,
            reason: None,
        }
    } else {
        let waiting = instance
            .robot_ids()
            .filter(|&r| sim.index(r) != instance.robot(r).end())
            .count();
        Verdict {
            status: Status::Incomplete,
            failing_step: None,
            reason: Some(alloc::format!("{waiting} robot(s) not at target")),
        }
    }
}

/// Mutable plan executor with an occupancy table.
pub struct Simulator<'a> {
    instance: &'a Instance,
    config: Configuration,
    occupant: Vec<u32>,
    remaining: usize,
}

impl<'a> Simulator<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        Self::with_configuration(instance, initial_configuration(instance))
    }

    /// `config` must be collision-free.
    pub fn with_configuration(instance: &'a Instance, config: Configuration) -> Self {
        let mut occupant = vec![NONE; instance.workspace.vertex_count()];
        let mut remaining = 0;
        for r in instance.robot_ids() {
            occupant[config.vertex(instance, r).index()] = r.0;
            if config.index(r) != instance.robot(r).end() {
                remaining += 1;
            }
        }
        Self {
            instance,
            config,
            occupant,
            remaining,
        }
    }

    pub fn index(&self, r: RobotId) -> usize {
        self.config.index(r)
    }

    pub fn occupant(&self, v: VertexId) -> Option<RobotId> {
        let o = self.occupant[v.index()];
        (o != NONE).then_some(RobotId(o))
    }

    pub fn is_goal(&self) -> bool {
        self.remaining == 0
    }

    pub fn configuration(&self) -> &Configuration {
        &self.config
    }

    pub fn into_configuration(self) -> Configuration {
        self.config
    }

    /// Atomic: on error nothing changes.
    pub fn apply(&mut self, mv: Move) -> Result<(), MoveError> {
        let r = mv.robot;
        if r.index() >= self.instance.robot_count() {
            return Err(MoveError::UnknownRobot { robot: r });
        }
        if mv.steps == 0 {
            return Err(MoveError::ZeroSteps { robot: r });
        }
        let path = &self.instance.robot(r).path;
        let from = self.config.index(r);
        let to = from + mv.steps as usize;
        if to >= path.len() {
            return Err(MoveError::Overrun { robot: r });
        }
        for &v in &path[from + 1..=to] {
            let o = self.occupant[v.index()];
            if o != NONE {
                return Err(MoveError::Occupied {
                    vertex: v,
                    by: RobotId(o),
                });
            }
        }
        self.occupant[path[from].index()] = NONE;
        self.occupant[path[to].index()] = r.0;
        self.config.positions[r.index()] = to as u32;
        if to == path.len() - 1 {
            self.remaining -= 1;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::instance::Workspace;

    fn line() -> Instance {
        Instance::from_paths(&[("r0", &["a", "b", "c"])])
    }

    fn names(inst: &Instance, set: BTreeSet<VertexId>) -> Vec<&str> {
        set.into_iter().map(|v| inst.vertex_name(v)).collect()
    }

    #[test]
    fn initial_configurations() {
        assert_eq!(initial_configuration(&fixtures::tri3()).positions, [0, 0, 0]);
        assert!(initial_configuration(&Instance::new(Workspace::new()))
            .positions
            .is_empty());
        let single = Instance::from_paths(&[("r0", &["a"])]);
        let c = initial_configuration(&single);
        assert_eq!(c.positions, [0]);
        assert!(c.is_goal(&single));
    }

    #[test]
    fn apply_move_examples() {
        let inst = line();
        let c = apply_move(&inst, &initial_configuration(&inst), Move::new(RobotId(0), 2)).unwrap();
        assert_eq!(c.positions, [2]);
        assert_eq!(
            apply_move(&inst, &c, Move::new(RobotId(0), 1)),
            Err(MoveError::Overrun { robot: RobotId(0) })
        );

        let tri = fixtures::tri3();
        let err = apply_move(&tri, &initial_configuration(&tri), Move::new(RobotId(0), 1)).unwrap_err();
        let b = tri.workspace.vertex("b").unwrap();
        assert_eq!(err, MoveError::Occupied { vertex: b, by: RobotId(1) });
        assert!(err.describe(&tri).contains("OCCUPIED(b)"));
    }

    #[test]
    fn verify_examples() {
        let inst = line();
        assert!(verify_plan(&inst, &MotionPlan::new(vec![Move::new(RobotId(0), 2)])).is_complete());
        let v = verify_plan(&inst, &MotionPlan::new(vec![Move::new(RobotId(0), 1)]));
        assert_eq!(v.status, Status::Incomplete);
        assert_eq!(v.failing_step, None);

        let tri = fixtures::tri3();
        let v = verify_plan(&tri, &MotionPlan::new(vec![Move::new(RobotId(0), 1)]));
        assert_eq!(v.status, Status::Invalid);
        assert_eq!(v.failing_step, Some(0));
        assert!(v.reason.unwrap().contains("OCCUPIED(b)"));

        let z = verify_plan(&inst, &MotionPlan::new(vec![Move::new(RobotId(0), 0)]));
        assert_eq!(z.failing_step, Some(0));
        let u = verify_plan(&inst, &MotionPlan::new(vec![Move::new(RobotId(5), 1)]));
        assert_eq!(u.status, Status::Invalid);
    }

    #[test]
    fn occupied_set_examples() {
        let tri = fixtures::tri3();
        assert_eq!(names(&tri, occupied_set(&tri, &initial_configuration(&tri))), ["a", "b", "c"]);
        let inst = line();
        let c = apply_move(&inst, &initial_configuration(&inst), Move::new(RobotId(0), 1)).unwrap();
        assert_eq!(names(&inst, occupied_set(&inst, &c)), ["b"]);
        let empty = Instance::new(Workspace::new());
        assert!(occupied_set(&empty, &initial_configuration(&empty)).is_empty());
    }

    #[test]
    fn failed_move_is_atomic() {
        // r0 would pass b then hit r1 at c.
        let inst = Instance::from_paths(&[("r0", &["a", "b", "c"]), ("r1", &["c", "d"])]);
        let mut sim = Simulator::new(&inst);
        assert!(sim.apply(Move::new(RobotId(0), 2)).is_err());
        assert_eq!(sim.index(RobotId(0)), 0);
        assert_eq!(sim.occupant(inst.workspace.vertex("a").unwrap()), Some(RobotId(0)));
        assert_eq!(sim.occupant(inst.workspace.vertex("b").unwrap()), None);
    }
}
