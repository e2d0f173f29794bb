//! 3SAT -> Pivot Scheduling -> precedence-constrained path planning.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::ids::{RobotId, VertexId};
use crate::instance::{Instance, PathMembership, Workspace};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("literal refers to variable {var} but the formula has {vars}")]
    LiteralOutOfRange { var: u32, vars: u32 },
    #[error("constraint refers to job {job} but there are {jobs}")]
    JobOutOfRange { job: usize, jobs: usize },
    #[error("SIZE: {what} is {got}, limit {limit}")]
    Size {
        what: &'static str,
        got: usize,
        limit: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 0-based variable index.
    pub var: u32,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Self {
        Self {
            var,
            positive: true,
        }
    }

    pub fn neg(var: u32) -> Self {
        Self {
            var,
            positive: false,
        }
    }

    /// Job index of this literal: `x_i` is `2i`, its negation `y_i` is `2i+1`.
    pub fn job(self) -> usize {
        2 * self.var as usize + usize::from(!self.positive)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("-")?;
        }
        write!(f, "x{}", self.var + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    vars: u32,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(vars: u32, clauses: Vec<[Literal; 3]>) -> Result<Self, HardnessError> {
        for l in clauses.iter().flatten() {
            if l.var >= vars {
                return Err(HardnessError::LiteralOutOfRange { var: l.var, vars });
            }
        }
        Ok(Self { vars, clauses })
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| assignment[l.var as usize] == l.positive))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotInstance {
    n: usize,
    constraints: Vec<[usize; 3]>,
}

impl PivotInstance {
    /// `n` pairs; jobs `x_i = 2i`, `y_i = 2i+1`.
    pub fn new(n: usize, constraints: Vec<[usize; 3]>) -> Result<Self, HardnessError> {
        for &j in constraints.iter().flatten() {
            if j >= 2 * n {
                return Err(HardnessError::JobOutOfRange { job: j, jobs: 2 * n });
            }
        }
        Ok(Self { n, constraints })
    }

    pub fn pairs(&self) -> usize {
        self.n
    }

    pub fn jobs(&self) -> usize {
        2 * self.n
    }

    pub fn constraints(&self) -> &[[usize; 3]] {
        &self.constraints
    }

    pub fn job_name(&self, job: usize) -> String {
        job_name(job)
    }

    pub fn job_index(&self, name: &str) -> Option<usize> {
        let (kind, num) = name.split_at(1.min(name.len()));
        let i: usize = num.parse().ok()?;
        if i == 0 || i > self.n {
            return None;
        }
        match kind {
            "x" => Some(2 * (i - 1)),
            "y" => Some(2 * (i - 1) + 1),
            _ => None,
        }
    }
}

fn job_name(job: usize) -> String {
    let kind = if job % 2 == 0 { 'x' } else { 'y' };
    format!("{kind}{}", job / 2 + 1)
}

/// Before/after split of the jobs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// `after[j]` is true when job `j` is in the after-set.
    pub after: Vec<bool>,
}

impl Partition {
    pub fn before_jobs(&self) -> Vec<usize> {
        (0..self.after.len()).filter(|&j| !self.after[j]).collect()
    }

    pub fn after_jobs(&self) -> Vec<usize> {
        (0..self.after.len()).filter(|&j| self.after[j]).collect()
    }

    /// Partition of a truth assignment: true literals go after.
    pub fn from_assignment(assignment: &[bool]) -> Self {
        Self {
            after: assignment.iter().flat_map(|&v| [v, !v]).collect(),
        }
    }
}

pub fn sat_to_pivot(phi: &CnfFormula) -> PivotInstance {
    PivotInstance {
        n: phi.vars as usize,
        constraints: phi
            .clauses
            .iter()
            .map(|c| [c[0].job(), c[1].job(), c[2].job()])
            .collect(),
    }
}

pub fn verify_partition(p: &PivotInstance, part: &Partition) -> bool {
    part.after.len() == p.jobs()
        && (0..p.n).all(|i| !part.after[2 * i] || !part.after[2 * i + 1])
        && p.constraints.iter().all(|c| c.iter().any(|&j| part.after[j]))
}

pub const PIVOT_JOB_LIMIT: usize = 24;
pub const SAT_VAR_LIMIT: usize = 20;

/// First valid partition in increasing order of the after-set bitmask.
pub fn pivot_brute_force(p: &PivotInstance) -> Result<Option<Partition>, HardnessError> {
    let jobs = p.jobs();
    if jobs > PIVOT_JOB_LIMIT {
        return Err(HardnessError::Size {
            what: "job count",
            got: jobs,
            limit: PIVOT_JOB_LIMIT,
        });
    }
    let masks: Vec<u32> = p
        .constraints
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &j| m | 1 << j))
        .collect();
    let pair_ok = |mask: u32| (0..p.n).all(|i| (mask >> (2 * i)) & 3 != 3);
    Ok((0..1u32 << jobs)
        .find(|&mask| pair_ok(mask) && masks.iter().all(|&c| mask & c != 0))
        .map(|mask| Partition {
            after: (0..jobs).map(|j| mask >> j & 1 == 1).collect(),
        }))
}

pub fn sat_brute_force(phi: &CnfFormula) -> Result<Option<Vec<bool>>, HardnessError> {
    let n = phi.vars as usize;
    if n > SAT_VAR_LIMIT {
        return Err(HardnessError::Size {
            what: "variable count",
            got: n,
            limit: SAT_VAR_LIMIT,
        });
    }
    let mut assignment = vec![false; n];
    for mask in 0..1u32 << n {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        if phi.evaluate(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    /// `first` must enter before `second`.
    Precedence { first: RobotId, second: RobotId },
    /// `x` or `y` must enter before `pivot`.
    Before {
        x: RobotId,
        y: RobotId,
        pivot: RobotId,
    },
    /// Some checker must enter after `beta`.
    After {
        checkers: [RobotId; 3],
        beta: RobotId,
    },
}

impl GadgetKind {
    pub fn name(&self) -> &'static str {
        match self {
            GadgetKind::Precedence { .. } => "precedence",
            GadgetKind::Before { .. } => "before",
            GadgetKind::After { .. } => "after",
        }
    }

    /// Robots in descriptor order: `[first, second]`, `[x, y, pivot]` or
    /// `[c1, c2, c3, beta]`.
    pub fn robots(&self) -> Vec<RobotId> {
        match *self {
            GadgetKind::Precedence { first, second } => vec![first, second],
            GadgetKind::Before { x, y, pivot } => vec![x, y, pivot],
            GadgetKind::After { checkers, beta } => {
                vec![checkers[0], checkers[1], checkers[2], beta]
            }
        }
    }

    pub fn from_parts(kind: &str, robots: &[RobotId]) -> Option<Self> {
        match (kind, robots) {
            ("precedence", &[first, second]) => Some(GadgetKind::Precedence { first, second }),
            ("before", &[x, y, pivot]) => Some(GadgetKind::Before { x, y, pivot }),
            ("after", &[a, b, c, beta]) => Some(GadgetKind::After {
                checkers: [a, b, c],
                beta,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub vertex: VertexId,
    pub kind: GadgetKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcInstance {
    pub base: Instance,
    pub gadgets: Vec<Gadget>,
}

pub const PIVOT_ROBOT: &str = "r*";
pub const BETA_ROBOT: &str = "beta";

fn checker_name(l: usize, j: usize) -> String {
    format!("c{}_{}", l + 1, j + 1)
}

/// Synthesizes the constrained instance: every robot walks a private chain
/// that leaves it only at gadget vertices.
pub fn pivot_to_pc(p: &PivotInstance) -> PcInstance {
    let jobs = p.jobs();
    let m = p.constraints.len();
    let pivot = RobotId(jobs as u32);
    let beta = RobotId(jobs as u32 + 1);
    let checker = |j: usize, l: usize| RobotId((jobs + 2 + 3 * j + l) as u32);

    let mut gadget_names: Vec<(String, GadgetKind)> = Vec::new();
    for i in 0..p.n {
        gadget_names.push((
            format!("B{}", i + 1),
            GadgetKind::Before {
                x: RobotId(2 * i as u32),
                y: RobotId(2 * i as u32 + 1),
                pivot,
            },
        ));
    }
    for j in 0..m {
        gadget_names.push((
            format!("A{}", j + 1),
            GadgetKind::After {
                checkers: [checker(j, 0), checker(j, 1), checker(j, 2)],
                beta,
            },
        ));
    }
    let g_name = format!("P({PIVOT_ROBOT},{BETA_ROBOT})");
    gadget_names.push((
        g_name.clone(),
        GadgetKind::Precedence {
            first: pivot,
            second: beta,
        },
    ));
    let p_name = |j: usize, l: usize| {
        format!("P({},{})", checker_name(l, j), job_name(p.constraints[j][l]))
    };
    for j in 0..m {
        for l in 0..3 {
            gadget_names.push((
                p_name(j, l),
                GadgetKind::Precedence {
                    first: checker(j, l),
                    second: RobotId(p.constraints[j][l] as u32),
                },
            ));
        }
    }

    // Gadget sequences per robot.
    let mut robots: Vec<(String, Vec<String>)> = Vec::new();
    for z in 0..jobs {
        let mut seq = Vec::new();
        for j in 0..m {
            for l in 0..3 {
                if p.constraints[j][l] == z {
                    seq.push(p_name(j, l));
                }
            }
        }
        seq.push(format!("B{}", z / 2 + 1));
        robots.push((job_name(z), seq));
    }
    let mut seq: Vec<String> = (0..p.n).map(|i| format!("B{}", i + 1)).collect();
    seq.push(g_name.clone());
    robots.push((String::from(PIVOT_ROBOT), seq));
    let mut seq = vec![g_name];
    seq.extend((0..m).map(|j| format!("A{}", j + 1)));
    robots.push((String::from(BETA_ROBOT), seq));
    for j in 0..m {
        for l in 0..3 {
            robots.push((checker_name(l, j), vec![format!("A{}", j + 1), p_name(j, l)]));
        }
    }

    let mut ws = Workspace::new();
    let gadget_ids: Vec<VertexId> = gadget_names
        .iter()
        .map(|(n, _)| ws.add_vertex(n).expect("gadget names are distinct"))
        .collect();
    let mut paths = Vec::with_capacity(robots.len());
    for (name, seq) in &robots {
        let mut path = vec![ws.add_vertex(&format!("{name}@0")).expect("fresh")];
        for (k, g) in seq.iter().enumerate() {
            path.push(ws.vertex(g).expect("gadget exists"));
            path.push(ws.add_vertex(&format!("{name}@{}", k + 1)).expect("fresh"));
        }
        for w in path.windows(2) {
            ws.add_edge(w[0], w[1]);
        }
        paths.push((name.clone(), path));
    }
    let mut base = Instance::new(ws);
    for (name, path) in paths {
        base.add_robot(&name, path);
    }
    PcInstance {
        base,
        gadgets: gadget_names
            .into_iter()
            .zip(gadget_ids)
            .map(|((_, kind), vertex)| Gadget { vertex, kind })
            .collect(),
    }
}

/// Structural problems of a constrained instance, as messages.
pub fn validate_pc(pc: &PcInstance) -> Vec<String> {
    let inst = &pc.base;
    let mut out: Vec<String> = crate::instance::validate(inst)
        .into_iter()
        .map(|v| format!("{v}"))
        .collect();
    let members = PathMembership::new(inst);
    let mut is_gadget = vec![false; inst.workspace.vertex_count()];
    for g in &pc.gadgets {
        if g.vertex.index() >= is_gadget.len() {
            out.push(format!("gadget vertex {} does not exist", g.vertex));
            continue;
        }
        if is_gadget[g.vertex.index()] {
            out.push(format!("vertex {} carries two gadgets", inst.vertex_name(g.vertex)));
        }
        is_gadget[g.vertex.index()] = true;
        let mut named = g.kind.robots();
        if named.iter().any(|r| r.index() >= inst.robot_count()) {
            out.push(format!("gadget {} names an unknown robot", inst.vertex_name(g.vertex)));
            continue;
        }
        named.sort();
        named.dedup();
        let mut on: Vec<RobotId> = members.on(g.vertex).to_vec();
        on.sort();
        if on != named {
            out.push(format!(
                "gadget {} lies on paths other than its descriptor names",
                inst.vertex_name(g.vertex)
            ));
        }
    }
    for r in inst.robots() {
        for (k, &v) in r.path.iter().enumerate() {
            if v.index() >= is_gadget.len() || !is_gadget[v.index()] {
                continue;
            }
            let private = |i: usize| members.on(r.path[i]).len() == 1;
            if k == 0 || k + 1 == r.path.len() || !private(k - 1) || !private(k + 1) {
                out.push(format!(
                    "robot {}: gadget {} lacks private flanking vertices",
                    r.name,
                    inst.vertex_name(v)
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::instance::vertex_multiplicity;

    fn x(i: u32) -> Literal {
        Literal::pos(i)
    }

    #[test]
    fn sat_to_pivot_examples() {
        let phi = CnfFormula::new(1, vec![[x(0), x(0), x(0)]]).unwrap();
        let p = sat_to_pivot(&phi);
        assert_eq!((p.pairs(), p.constraints()), (1, &[[0, 0, 0]][..]));
        let part = pivot_brute_force(&p).unwrap().unwrap();
        assert_eq!(part.after_jobs(), [0]);
        assert_eq!(sat_brute_force(&phi).unwrap(), Some(vec![true]));

        let bad = fixtures::contradiction_cnf();
        assert_eq!(sat_brute_force(&bad).unwrap(), None);
        assert_eq!(pivot_brute_force(&sat_to_pivot(&bad)).unwrap(), None);
    }

    #[test]
    fn fig8_partition() {
        let p = fixtures::fig8_pivot();
        let names = |c: &[usize; 3]| c.iter().map(|&j| p.job_name(j)).collect::<Vec<_>>();
        assert_eq!(names(&p.constraints()[0]), ["y1", "y2", "x3"]);
        let witness = Partition {
            after: vec![false, true, false, true, false, true],
        };
        assert!(verify_partition(&p, &witness));
        assert!(!verify_partition(&p, &Partition { after: vec![false; 6] }));
        assert!(pivot_brute_force(&p).unwrap().is_some());
        assert_eq!(p.job_index("y2"), Some(3));
        assert_eq!(p.job_index("z1"), None);
    }

    #[test]
    fn partition_edge_cases() {
        let one = PivotInstance::new(1, vec![]).unwrap();
        assert!(!verify_partition(&one, &Partition { after: vec![true, true] }));
        assert!(verify_partition(&one, &pivot_brute_force(&one).unwrap().unwrap()));
        assert!(PivotInstance::new(1, vec![[0, 1, 2]]).is_err());
        let big = PivotInstance::new(13, vec![]).unwrap();
        assert!(matches!(pivot_brute_force(&big), Err(HardnessError::Size { .. })));
        let many = CnfFormula::new(21, vec![]).unwrap();
        assert!(matches!(sat_brute_force(&many), Err(HardnessError::Size { .. })));
        assert!(CnfFormula::new(1, vec![[x(1), x(0), x(0)]]).is_err());
    }

    #[test]
    fn assignment_partition_correspondence() {
        let phi = CnfFormula::new(2, vec![[x(0), Literal::neg(1), x(1)], [Literal::neg(0), x(1), x(1)]]).unwrap();
        let p = sat_to_pivot(&phi);
        for mask in 0..4u32 {
            let a = [mask & 1 == 1, mask & 2 == 2];
            assert_eq!(phi.evaluate(&a), verify_partition(&p, &Partition::from_assignment(&a)));
        }
    }

    #[test]
    fn fig8_pc_counts() {
        let pc = pivot_to_pc(&fixtures::fig8_pivot());
        assert!(validate_pc(&pc).is_empty(), "{:?}", validate_pc(&pc));
        assert_eq!(pc.base.robot_count(), 6 + 2 + 9);
        let count = |k: &str| pc.gadgets.iter().filter(|g| g.kind.name() == k).count();
        assert_eq!((count("before"), count("after"), count("precedence")), (3, 3, 10));
        assert_eq!(vertex_multiplicity(&pc.base), 4);
        let members = PathMembership::new(&pc.base);
        for g in &pc.gadgets {
            let want = match g.kind {
                GadgetKind::Precedence { .. } => 2,
                GadgetKind::Before { .. } => 3,
                GadgetKind::After { .. } => 4,
            };
            assert_eq!(members.on(g.vertex).len(), want);
        }
        let private = pc
            .base
            .workspace
            .vertices()
            .filter(|&v| !pc.gadgets.iter().any(|g| g.vertex == v))
            .all(|v| members.on(v).len() == 1);
        assert!(private);
    }

    #[test]
    fn single_pair_pc() {
        let pc = pivot_to_pc(&PivotInstance::new(1, vec![]).unwrap());
        let names: Vec<_> = pc.base.robots().iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["x1", "y1", "r*", "beta"]);
        let gnames: Vec<_> = pc.gadgets.iter().map(|g| pc.base.vertex_name(g.vertex)).collect();
        assert_eq!(gnames, ["B1", "P(r*,beta)"]);
        assert!(validate_pc(&pc).is_empty());
    }

    #[test]
    fn job_path_order() {
        let pc = pivot_to_pc(&fixtures::fig8_pivot());
        let x1 = pc.base.robot_by_name("x1").unwrap();
        let gadgets: Vec<_> = pc
            .base
            .robot(x1)
            .path
            .iter()
            .map(|&v| pc.base.vertex_name(v))
            .filter(|n| !n.contains('@'))
            .collect();
        assert_eq!(gadgets, ["P(c1_2,x1)", "P(c1_3,x1)", "B1"]);
    }
}
