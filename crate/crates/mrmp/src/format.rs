//! JSON file formats. Output is canonical: keys sorted, two-space indent,
//! trailing newline, so equal values always produce identical bytes.

use mrmp_core::hardness::{Gadget, GadgetKind, PcInstance, PivotInstance};
use mrmp_core::instance::{
    BuildError, CompactError, CompactGrid, CompactRobot, GridSize, Instance, VariantReport,
    Violation, Workspace,
};
use mrmp_core::oracle::{OracleOutcome, OracleResult};
use mrmp_core::plan::{MotionPlan, Move, Verdict};
use mrmp_core::{RobotId, VertexId};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Compact(#[from] CompactError),
    #[error("unknown robot {0}")]
    UnknownRobot(String),
    #[error("gadget at {vertex}: bad descriptor {kind} with {robots} robots")]
    Gadget {
        vertex: String,
        kind: String,
        robots: usize,
    },
    #[error("unknown job {0}")]
    UnknownJob(String),
    #[error("pair {0} must be [\"x{1}\", \"y{1}\"]")]
    Pair(usize, usize),
    #[error("{0}")]
    Pivot(#[from] mrmp_core::hardness::HardnessError),
    #[error("invalid instance: {}", join(.0))]
    Invalid(Vec<Violation>),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Sorted-key pretty JSON with a trailing newline.
pub fn canonical<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GridDoc {
    pub width: u32,
    pub height: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coord: Option<[i64; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RobotDoc {
    pub id: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GadgetDoc {
    pub vertex: String,
    pub kind: String,
    pub robots: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridDoc>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[String; 2]>,
    pub robots: Vec<RobotDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gadgets: Option<Vec<GadgetDoc>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CompactRobotDoc {
    pub id: String,
    pub from: [i64; 2],
    pub to: [i64; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CompactDoc {
    pub grid: GridDoc,
    pub robots: Vec<CompactRobotDoc>,
}

impl From<&CompactGrid> for CompactDoc {
    fn from(g: &CompactGrid) -> Self {
        Self {
            grid: GridDoc {
                width: g.grid.width,
                height: g.grid.height,
            },
            robots: g
                .robots
                .iter()
                .map(|r| CompactRobotDoc {
                    id: r.name.clone(),
                    from: [r.from.0, r.from.1],
                    to: [r.to.0, r.to.1],
                })
                .collect(),
        }
    }
}

impl From<&CompactDoc> for CompactGrid {
    fn from(d: &CompactDoc) -> Self {
        Self {
            grid: GridSize {
                width: d.grid.width,
                height: d.grid.height,
            },
            robots: d
                .robots
                .iter()
                .map(|r| CompactRobot {
                    name: r.id.clone(),
                    from: (r.from[0], r.from[1]),
                    to: (r.to[0], r.to[1]),
                })
                .collect(),
        }
    }
}

impl From<&Instance> for InstanceDoc {
    fn from(inst: &Instance) -> Self {
        let ws = &inst.workspace;
        Self {
            name: inst.name.clone(),
            grid: ws.grid().map(|g| GridDoc {
                width: g.width,
                height: g.height,
            }),
            vertices: ws
                .vertices()
                .map(|v| VertexDoc {
                    id: ws.name(v).to_owned(),
                    coord: ws.coord(v).map(|(x, y)| [x, y]),
                })
                .collect(),
            edges: ws
                .edges()
                .iter()
                .map(|&(a, b)| [ws.name(a).to_owned(), ws.name(b).to_owned()])
                .collect(),
            robots: inst
                .robots()
                .iter()
                .map(|r| RobotDoc {
                    id: r.name.clone(),
                    path: r.path.iter().map(|&v| ws.name(v).to_owned()).collect(),
                })
                .collect(),
            gadgets: None,
        }
    }
}

impl InstanceDoc {
    pub fn to_instance(&self) -> Result<Instance, FormatError> {
        let mut ws = Workspace::new();
        for v in &self.vertices {
            match v.coord {
                Some([x, y]) => ws.add_vertex_at(&v.id, (x, y))?,
                None => ws.add_vertex(&v.id)?,
            };
        }
        for [a, b] in &self.edges {
            ws.add_edge_by_name(a, b)?;
        }
        if let Some(g) = self.grid {
            ws.set_grid(GridSize {
                width: g.width,
                height: g.height,
            });
        }
        let mut inst = Instance::new(ws);
        inst.name = self.name.clone();
        for r in &self.robots {
            let path: Vec<&str> = r.path.iter().map(String::as_str).collect();
            inst.add_robot_by_names(&r.id, &path)?;
        }
        Ok(inst)
    }
}

/// Parses either the full instance format or the compact grid format.
/// Gadget descriptors, if present, are ignored.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("vertices").is_none() && value.get("robots").is_some() {
        let doc: CompactDoc = serde_json::from_value(value)?;
        return Ok(mrmp_core::instance::expand_grid_compact(&(&doc).into())?);
    }
    let doc: InstanceDoc = serde_json::from_value(value)?;
    doc.to_instance()
}

/// Parses and validates.
pub fn load_instance(text: &str) -> Result<Instance, FormatError> {
    let inst = parse_instance(text)?;
    let violations = mrmp_core::instance::validate(&inst);
    if violations.is_empty() {
        Ok(inst)
    } else {
        Err(FormatError::Invalid(violations))
    }
}

pub fn instance_json(inst: &Instance) -> String {
    canonical(&InstanceDoc::from(inst))
}

pub fn compact_json(g: &CompactGrid) -> String {
    canonical(&CompactDoc::from(g))
}

fn robot_names(inst: &Instance, robots: &[RobotId]) -> Vec<String> {
    robots.iter().map(|&r| inst.robot(r).name.clone()).collect()
}

pub fn pc_json(pc: &PcInstance) -> String {
    let mut doc = InstanceDoc::from(&pc.base);
    doc.gadgets = Some(
        pc.gadgets
            .iter()
            .map(|g| GadgetDoc {
                vertex: pc.base.vertex_name(g.vertex).to_owned(),
                kind: g.kind.name().to_owned(),
                robots: robot_names(&pc.base, &g.kind.robots()),
            })
            .collect(),
    );
    canonical(&doc)
}

pub fn parse_pc(text: &str) -> Result<PcInstance, FormatError> {
    let doc: InstanceDoc = serde_json::from_str(text)?;
    let base = doc.to_instance()?;
    let violations = mrmp_core::instance::validate(&base);
    if !violations.is_empty() {
        return Err(FormatError::Invalid(violations));
    }
    let mut gadgets = Vec::new();
    for g in doc.gadgets.iter().flatten() {
        let vertex = base.workspace.require(&g.vertex)?;
        let robots = g
            .robots
            .iter()
            .map(|n| {
                base.robot_by_name(n)
                    .ok_or_else(|| FormatError::UnknownRobot(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let kind = GadgetKind::from_parts(&g.kind, &robots).ok_or_else(|| FormatError::Gadget {
            vertex: g.vertex.clone(),
            kind: g.kind.clone(),
            robots: robots.len(),
        })?;
        gadgets.push(Gadget { vertex, kind });
    }
    Ok(PcInstance { base, gadgets })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MoveDoc {
    pub robot: String,
    pub steps: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PlanDoc {
    pub moves: Vec<MoveDoc>,
}

impl PlanDoc {
    pub fn new(inst: &Instance, plan: &MotionPlan) -> Self {
        Self {
            moves: plan
                .moves
                .iter()
                .map(|m| MoveDoc {
                    robot: inst.robot(m.robot).name.clone(),
                    steps: m.steps,
                })
                .collect(),
        }
    }
}

pub fn plan_json(inst: &Instance, plan: &MotionPlan) -> String {
    canonical(&PlanDoc::new(inst, plan))
}

pub fn parse_plan(text: &str, inst: &Instance) -> Result<MotionPlan, FormatError> {
    let doc: PlanDoc = serde_json::from_str(text)?;
    let moves = doc
        .moves
        .iter()
        .map(|m| {
            inst.robot_by_name(&m.robot)
                .map(|r| Move::new(r, m.steps))
                .ok_or_else(|| FormatError::UnknownRobot(m.robot.clone()))
        })
        .collect::<Result<_, _>>()?;
    Ok(MotionPlan::new(moves))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictDoc {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub fn verdict_json(v: &Verdict) -> String {
    canonical(&VerdictDoc {
        status: v.status.as_str(),
        failing_step: v.failing_step,
        reason: v.reason.clone(),
    })
}

#[derive(Serialize)]
struct InfeasibleDoc<'a> {
    status: &'static str,
    deadlock_cycle: Vec<&'a str>,
}

pub fn infeasible_json(inst: &Instance, cycle: &[VertexId]) -> String {
    canonical(&InfeasibleDoc {
        status: "infeasible",
        deadlock_cycle: cycle.iter().map(|&v| inst.vertex_name(v)).collect(),
    })
}

#[derive(Serialize)]
struct OracleDoc {
    status: &'static str,
    states: usize,
    plan: Option<PlanDoc>,
}

pub fn oracle_json(inst: &Instance, r: &OracleResult) -> String {
    let (status, plan) = match &r.outcome {
        OracleOutcome::Feasible(p) => ("feasible", Some(PlanDoc::new(inst, p))),
        OracleOutcome::Infeasible => ("infeasible", None),
        OracleOutcome::Exhausted { .. } => ("exhausted", None),
    };
    canonical(&OracleDoc {
        status,
        states: r.states,
        plan,
    })
}

#[derive(Serialize)]
struct BlockingDoc<'a> {
    blocked: &'a str,
    blocking: &'a str,
    vertex: &'a str,
}

#[derive(Serialize)]
struct HeadOnDoc<'a> {
    edge: [&'a str; 2],
    forward: &'a str,
    backward: &'a str,
}

#[derive(Serialize)]
struct ClassifyDoc<'a> {
    valid: bool,
    violations: Vec<String>,
    vm: usize,
    nbt: bool,
    uni: bool,
    turn_number: Option<usize>,
    blocking_targets: Vec<BlockingDoc<'a>>,
    bidirectional_edges: Vec<HeadOnDoc<'a>>,
}

pub fn classify_json(inst: &Instance, rep: &VariantReport, violations: &[Violation]) -> String {
    let rn = |r: RobotId| inst.robot(r).name.as_str();
    canonical(&ClassifyDoc {
        valid: violations.is_empty(),
        violations: violations.iter().map(ToString::to_string).collect(),
        vm: rep.vm,
        nbt: rep.nbt,
        uni: rep.uni,
        turn_number: rep.turn_number,
        blocking_targets: rep
            .blocking_targets
            .iter()
            .map(|b| BlockingDoc {
                blocked: rn(b.blocked),
                blocking: rn(b.blocking),
                vertex: inst.vertex_name(b.vertex),
            })
            .collect(),
        bidirectional_edges: rep
            .bidirectional_edges
            .iter()
            .map(|e| HeadOnDoc {
                edge: [inst.vertex_name(e.edge.0), inst.vertex_name(e.edge.1)],
                forward: rn(e.forward),
                backward: rn(e.backward),
            })
            .collect(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PivotDoc {
    pub pairs: Vec<[String; 2]>,
    pub constraints: Vec<[String; 3]>,
}

pub fn pivot_json(p: &PivotInstance) -> String {
    canonical(&PivotDoc {
        pairs: (0..p.pairs())
            .map(|i| [p.job_name(2 * i), p.job_name(2 * i + 1)])
            .collect(),
        constraints: p
            .constraints()
            .iter()
            .map(|c| c.map(|j| p.job_name(j)))
            .collect(),
    })
}

pub fn parse_pivot(text: &str) -> Result<PivotInstance, FormatError> {
    let doc: PivotDoc = serde_json::from_str(text)?;
    let n = doc.pairs.len();
    for (i, [x, y]) in doc.pairs.iter().enumerate() {
        if *x != format!("x{}", i + 1) || *y != format!("y{}", i + 1) {
            return Err(FormatError::Pair(i, i + 1));
        }
    }
    let probe = PivotInstance::new(n, Vec::new())?;
    let mut constraints = Vec::with_capacity(doc.constraints.len());
    for c in &doc.constraints {
        let mut jobs = [0; 3];
        for (slot, name) in jobs.iter_mut().zip(c) {
            *slot = probe
                .job_index(name)
                .ok_or_else(|| FormatError::UnknownJob(name.clone()))?;
        }
        constraints.push(jobs);
    }
    Ok(PivotInstance::new(n, constraints)?)
}
