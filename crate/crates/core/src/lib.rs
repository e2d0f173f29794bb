//! Coordination of robots that must follow fixed, given paths.
//!
//! A robot moves one vertex at a time along its own simple path, forward
//! only, and never onto an occupied vertex. This crate decides whether all
//! robots can reach their targets and builds a plan when they can:
//!
//! * [`instance`] holds the workspace graph, robot paths, validation and the
//!   variant parameters (vertex multiplicity, blocking targets, head-on edges,
//!   turn number).
//! * [`plan`] applies and verifies motion plans.
//! * [`solver`] is the linear-time procedure for instances without blocking
//!   targets and vertex multiplicity at most two.
//! * [`oracle`] is exhaustive breadth-first search, used as ground truth.
//! * [`hardness`] turns 3SAT formulas into pivot-scheduling and
//!   precedence-constrained planning instances.
//! * [`generate`] and [`fixtures`] produce seeded random and named instances.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod fixtures;
pub mod generate;
pub mod hardness;
pub mod ids;
pub mod instance;
pub mod oracle;
pub mod plan;
pub mod solver;

pub use ids::{RobotId, VertexId};
pub use instance::{Instance, Workspace};
pub use plan::{Configuration, MotionPlan, Move, Verdict};
pub use solver::{solve, SolveOutcome};

pub(crate) type HashMap<K, V> = hashbrown::HashMap<K, V>;
pub(crate) type HashSet<K> = hashbrown::HashSet<K>;

/// Sentinel for "no index" in the dense `u32` arrays used throughout.
pub(crate) const NONE: u32 = u32::MAX;
