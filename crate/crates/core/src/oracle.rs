//! Exhaustive breadth-first search over configurations.
//!
//! The plain search uses unit moves and returns a shortest plan. The
//! constrained search adds per-gadget progress flags to the state and
//! collapses moves that can never hurt (steps onto private vertices and
//! order-respecting gadget crossings) into the preceding transition.

use alloc::vec;
use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use crate::hardness::{GadgetKind, PcInstance};
use crate::ids::RobotId;
use crate::instance::{Instance, PathMembership};
use crate::plan::{MotionPlan, Move};
use crate::NONE;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_states: usize,
    pub max_depth: Option<usize>,
}

pub const DEFAULT_MAX_STATES: usize = 2_000_000;

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_states: DEFAULT_MAX_STATES,
            max_depth: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Feasible(MotionPlan),
    Infeasible,
    Exhausted { states: usize },
}

impl OracleOutcome {
    pub fn is_feasible(&self) -> Option<bool> {
        match self {
            OracleOutcome::Feasible(_) => Some(true),
            OracleOutcome::Infeasible => Some(false),
            OracleOutcome::Exhausted { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub outcome: OracleOutcome,
    /// Distinct states stored.
    pub states: usize,
}

/// Visited set and parent links over fixed-width byte states.
struct Store {
    width: usize,
    arena: Vec<u8>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
    parent: Vec<u32>,
    depth: Vec<u32>,
    /// Moves leading into each state: `trail_moves[trail[i].0 .. trail[i].1]`.
    trail: Vec<(u32, u32)>,
    trail_moves: Vec<Move>,
}

impl Store {
    fn new(width: usize) -> Self {
        Self {
            width,
            arena: Vec::new(),
            table: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            parent: Vec::new(),
            depth: Vec::new(),
            trail: Vec::new(),
            trail_moves: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn state(&self, i: u32) -> &[u8] {
        let s = i as usize * self.width;
        &self.arena[s..s + self.width]
    }

    /// Inserts `key` unless present; returns the new index.
    fn insert(&mut self, key: &[u8], parent: u32, moves: &[Move]) -> Option<u32> {
        let hash = self.hasher.hash_one(key);
        let (arena, width) = (&self.arena, self.width);
        let eq = |&i: &u32| &arena[i as usize * width..(i as usize + 1) * width] == key;
        if self.table.find(hash, eq).is_some() {
            return None;
        }
        let idx = self.parent.len() as u32;
        self.arena.extend_from_slice(key);
        let (arena, hasher) = (&self.arena, &self.hasher);
        self.table.insert_unique(hash, idx, |&i| {
            hasher.hash_one(&arena[i as usize * width..(i as usize + 1) * width])
        });
        self.parent.push(parent);
        self.depth
            .push(if parent == NONE { 0 } else { self.depth[parent as usize] + 1 });
        let start = self.trail_moves.len() as u32;
        self.trail_moves.extend_from_slice(moves);
        self.trail.push((start, self.trail_moves.len() as u32));
        Some(idx)
    }

    fn plan_to(&self, mut i: u32) -> MotionPlan {
        let mut segments = Vec::new();
        while i != NONE {
            let (a, b) = self.trail[i as usize];
            segments.push(&self.trail_moves[a as usize..b as usize]);
            i = self.parent[i as usize];
        }
        let mut moves: Vec<Move> = Vec::new();
        for seg in segments.into_iter().rev() {
            for &m in seg {
                match moves.last_mut() {
                    Some(last) if last.robot == m.robot => last.steps += m.steps,
                    _ => moves.push(m),
                }
            }
        }
        MotionPlan::new(moves)
    }
}

/// Byte width used for one path index.
fn index_width(instance: &Instance) -> usize {
    let longest = instance.robots().iter().map(|r| r.path.len()).max().unwrap_or(1);
    if longest <= 1 << 8 {
        1
    } else if longest <= 1 << 16 {
        2
    } else {
        4
    }
}

fn encode(pos: &[u32], flags: &[u8], iw: usize, out: &mut Vec<u8>) {
    out.clear();
    for &p in pos {
        out.extend_from_slice(&p.to_le_bytes()[..iw]);
    }
    out.extend_from_slice(flags);
}

fn decode(bytes: &[u8], n: usize, iw: usize, pos: &mut [u32], flags: &mut [u8]) {
    for (r, p) in pos.iter_mut().enumerate().take(n) {
        let mut b = [0u8; 4];
        b[..iw].copy_from_slice(&bytes[r * iw..(r + 1) * iw]);
        *p = u32::from_le_bytes(b);
    }
    flags.copy_from_slice(&bytes[n * iw..]);
}

/// Breadth-first search over unit moves; `Feasible` plans are shortest in
/// unit moves (compressed in the returned plan).
pub fn oracle_solve(instance: &Instance, limits: SearchLimits) -> OracleResult {
    search(&Domain::plain(instance), limits)
}

/// Search honoring gadget traversal orders. Plans respect every gadget
/// constraint; they are not necessarily shortest.
pub fn oracle_solve_pc(pc: &PcInstance, limits: SearchLimits) -> OracleResult {
    search(&Domain::constrained(pc), limits)
}

struct Domain<'a> {
    instance: &'a Instance,
    gadgets: &'a [crate::hardness::Gadget],
    /// Gadget index per vertex.
    gadget_at: Vec<u32>,
    /// Vertex lies on exactly one path and carries no gadget.
    private: Vec<bool>,
    eager: bool,
}

const PREC_FIRST: u8 = 1;
const BEFORE_PIVOT: u8 = 1;
const BEFORE_MEMBER: u8 = 2;
const AFTER_BETA: u8 = 1;
const AFTER_COUNT_SHIFT: u8 = 1;
const AFTER_COUNT_MASK: u8 = 0b110;
const AFTER_LATE: u8 = 8;

impl<'a> Domain<'a> {
    fn plain(instance: &'a Instance) -> Self {
        Self {
            instance,
            gadgets: &[],
            gadget_at: Vec::new(),
            private: Vec::new(),
            eager: false,
        }
    }

    fn constrained(pc: &'a PcInstance) -> Self {
        let inst = &pc.base;
        let nv = inst.workspace.vertex_count();
        let mut gadget_at = vec![NONE; nv];
        for (i, g) in pc.gadgets.iter().enumerate() {
            gadget_at[g.vertex.index()] = i as u32;
        }
        let members = PathMembership::new(inst);
        let private = (0..nv)
            .map(|v| gadget_at[v] == NONE && members.on(crate::ids::VertexId(v as u32)).len() == 1)
            .collect();
        Self {
            instance: inst,
            gadgets: &pc.gadgets,
            gadget_at,
            private,
            eager: true,
        }
    }

    /// Flag update when `r` enters gadget `g`; `None` if the entry breaks or
    /// dooms the traversal order.
    fn enter(&self, g: usize, r: RobotId, flag: u8) -> Option<u8> {
        match self.gadgets[g].kind {
            GadgetKind::Precedence { first, second } => {
                if r == first {
                    Some(flag | PREC_FIRST)
                } else if r == second && flag & PREC_FIRST == 0 {
                    None
                } else {
                    Some(flag)
                }
            }
            GadgetKind::Before { x, y, pivot } => {
                if r == pivot {
                    (flag & BEFORE_MEMBER != 0).then_some(flag | BEFORE_PIVOT)
                } else if (r == x || r == y) && flag & BEFORE_PIVOT == 0 {
                    Some(flag | BEFORE_MEMBER)
                } else {
                    Some(flag)
                }
            }
            GadgetKind::After { checkers, beta } => {
                let early = (flag & AFTER_COUNT_MASK) >> AFTER_COUNT_SHIFT;
                if r == beta {
                    (early < 3).then_some(flag | AFTER_BETA)
                } else if checkers.contains(&r) {
                    if flag & AFTER_BETA != 0 {
                        Some(flag | AFTER_LATE)
                    } else if early >= 2 {
                        None
                    } else {
                        Some((flag & !AFTER_COUNT_MASK) | ((early + 1) << AFTER_COUNT_SHIFT))
                    }
                } else {
                    Some(flag)
                }
            }
        }
    }

    /// Entering `g` now can only help: it sets or ignores flags but never
    /// spends an option a later plan could need.
    fn entry_is_dominant(&self, g: usize, r: RobotId, flag: u8) -> bool {
        match self.gadgets[g].kind {
            GadgetKind::After { checkers, .. } if checkers.contains(&r) => flag & AFTER_BETA != 0,
            _ => true,
        }
    }

    fn flags_done(&self, flags: &[u8]) -> bool {
        self.gadgets.iter().zip(flags).all(|(g, &f)| match g.kind {
            GadgetKind::Precedence { .. } => true,
            GadgetKind::Before { .. } => f & BEFORE_MEMBER != 0,
            GadgetKind::After { .. } => f & AFTER_LATE != 0,
        })
    }
}

/// Scratch occupancy keyed by a generation stamp.
struct Occupancy {
    stamp: Vec<u32>,
    gen: u32,
}

impl Occupancy {
    fn new(nv: usize) -> Self {
        Self {
            stamp: vec![0; nv],
            gen: 0,
        }
    }

    fn reset(&mut self) {
        self.gen += 1;
        if self.gen == u32::MAX {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.gen = 1;
        }
    }

    fn set(&mut self, v: usize) {
        self.stamp[v] = self.gen;
    }

    fn clear(&mut self, v: usize) {
        self.stamp[v] = 0;
    }

    fn has(&self, v: usize) -> bool {
        self.stamp[v] == self.gen
    }
}

struct Searcher<'d, 'a> {
    d: &'d Domain<'a>,
    occ: Occupancy,
}

impl Searcher<'_, '_> {
    fn fill(&mut self, pos: &[u32]) {
        self.occ.reset();
        for (r, p) in self.d.instance.robots().iter().zip(pos) {
            self.occ.set(r.path[*p as usize].index());
        }
    }

    /// Unit move of `r`; updates `pos`, `flags` and occupancy.
    fn try_step(&mut self, r: usize, pos: &mut [u32], flags: &mut [u8]) -> bool {
        let path = &self.d.instance.robots()[r].path;
        let at = pos[r] as usize;
        if at + 1 >= path.len() {
            return false;
        }
        let v = path[at + 1].index();
        if self.occ.has(v) {
            return false;
        }
        if let Some(&g) = self.d.gadget_at.get(v) {
            if g != NONE {
                match self.d.enter(g as usize, RobotId(r as u32), flags[g as usize]) {
                    Some(f) => flags[g as usize] = f,
                    None => return false,
                }
            }
        }
        self.occ.clear(path[at].index());
        self.occ.set(v);
        pos[r] += 1;
        true
    }

    /// Applies dominant moves until none is left, recording them.
    fn close(&mut self, pos: &mut [u32], flags: &mut [u8], trail: &mut Vec<Move>) {
        if !self.d.eager {
            return;
        }
        let n = pos.len();
        loop {
            let mut changed = false;
            for r in 0..n {
                loop {
                    let path = &self.d.instance.robots()[r].path;
                    let at = pos[r] as usize;
                    if at + 1 >= path.len() {
                        break;
                    }
                    let v = path[at + 1].index();
                    let steps = if self.d.private[v] {
                        1
                    } else {
                        let g = self.d.gadget_at[v];
                        let crossing = g != NONE
                            && at + 2 < path.len()
                            && self.d.private[path[at + 2].index()]
                            && self
                                .d
                                .entry_is_dominant(g as usize, RobotId(r as u32), flags[g as usize]);
                        if !crossing {
                            break;
                        }
                        2
                    };
                    let mut done = 0;
                    while done < steps && self.try_step(r, pos, flags) {
                        done += 1;
                    }
                    if done == 0 {
                        break;
                    }
                    trail.push(Move::new(RobotId(r as u32), done));
                    changed = true;
                    if done < steps {
                        break;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }
}

fn search(d: &Domain<'_>, limits: SearchLimits) -> OracleResult {
    let inst = d.instance;
    let n = inst.robot_count();
    let iw = index_width(inst);
    let nf = d.gadgets.len();
    let mut store = Store::new(n * iw + nf);
    let mut s = Searcher {
        d,
        occ: Occupancy::new(inst.workspace.vertex_count()),
    };
    let ends: Vec<u32> = inst.robots().iter().map(|r| r.end() as u32).collect();
    let is_goal = |pos: &[u32], flags: &[u8]| pos == ends.as_slice() && d.flags_done(flags);

    let mut pos = vec![0u32; n];
    let mut flags = vec![0u8; nf];
    let mut key = Vec::with_capacity(store.width);
    let mut trail = Vec::new();
    s.fill(&pos);
    s.close(&mut pos, &mut flags, &mut trail);
    encode(&pos, &flags, iw, &mut key);
    store.insert(&key, NONE, &trail);
    if is_goal(&pos, &flags) {
        return OracleResult {
            outcome: OracleOutcome::Feasible(store.plan_to(0)),
            states: 1,
        };
    }

    let mut cut = false;
    let mut child_pos = vec![0u32; n];
    let mut child_flags = vec![0u8; nf];
    let mut head = 0u32;
    while (head as usize) < store.len() {
        let cur = head;
        head += 1;
        if limits
            .max_depth
            .is_some_and(|m| store.depth[cur as usize] as usize >= m)
        {
            cut = true;
            continue;
        }
        decode(store.state(cur), n, iw, &mut pos, &mut flags);
        for r in 0..n {
            if pos[r] == ends[r] {
                continue;
            }
            child_pos.copy_from_slice(&pos);
            child_flags.copy_from_slice(&flags);
            s.fill(&child_pos);
            if !s.try_step(r, &mut child_pos, &mut child_flags) {
                continue;
            }
            trail.clear();
            trail.push(Move::new(RobotId(r as u32), 1));
            s.close(&mut child_pos, &mut child_flags, &mut trail);
            encode(&child_pos, &child_flags, iw, &mut key);
            if let Some(idx) = store.insert(&key, cur, &trail) {
                if is_goal(&child_pos, &child_flags) {
                    return OracleResult {
                        outcome: OracleOutcome::Feasible(store.plan_to(idx)),
                        states: store.len(),
                    };
                }
                if store.len() >= limits.max_states {
                    return OracleResult {
                        outcome: OracleOutcome::Exhausted {
                            states: store.len(),
                        },
                        states: store.len(),
                    };
                }
            }
        }
    }
    let states = store.len();
    OracleResult {
        outcome: if cut {
            OracleOutcome::Exhausted { states }
        } else {
            OracleOutcome::Infeasible
        },
        states,
    }
}

/// Replays `plan` on a constrained instance and checks every gadget order.
/// Returns the index of the first offending move, or `plan.len()` when the
/// final flags are unsatisfied.
pub fn check_pc_plan(pc: &PcInstance, plan: &MotionPlan) -> Result<(), usize> {
    let d = Domain::constrained(pc);
    let inst = &pc.base;
    let mut s = Searcher {
        d: &d,
        occ: Occupancy::new(inst.workspace.vertex_count()),
    };
    let mut pos = vec![0u32; inst.robot_count()];
    let mut flags = vec![0u8; pc.gadgets.len()];
    s.fill(&pos);
    for (i, m) in plan.moves.iter().enumerate() {
        if m.robot.index() >= pos.len() || m.steps == 0 {
            return Err(i);
        }
        for _ in 0..m.steps {
            if !s.try_step(m.robot.index(), &mut pos, &mut flags) {
                return Err(i);
            }
        }
    }
    let done = inst
        .robots()
        .iter()
        .zip(&pos)
        .all(|(r, &p)| p as usize == r.end());
    if done && d.flags_done(&flags) {
        Ok(())
    } else {
        Err(plan.len())
    }
}

/// Order in which robots enter gadget vertices under `plan`, as
/// `(gadget index, robot)`.
pub fn gadget_entries(pc: &PcInstance, plan: &MotionPlan) -> Vec<(usize, RobotId)> {
    let mut gadget_at = vec![NONE; pc.base.workspace.vertex_count()];
    for (i, g) in pc.gadgets.iter().enumerate() {
        gadget_at[g.vertex.index()] = i as u32;
    }
    let mut pos = vec![0usize; pc.base.robot_count()];
    let mut out = Vec::new();
    for m in &plan.moves {
        let path = &pc.base.robot(m.robot).path;
        for _ in 0..m.steps {
            pos[m.robot.index()] += 1;
            let g = gadget_at[path[pos[m.robot.index()]].index()];
            if g != NONE {
                out.push((g as usize, m.robot));
            }
        }
    }
    out
}
