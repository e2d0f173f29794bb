//! Workspaces, robot paths and instance-level parameters.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::ids::{RobotId, VertexId};
use crate::{HashMap, HashSet};

/// Grid cell `(col, row)`.
pub type Coord = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSize {
    pub width: u32,
    pub height: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

/// Undirected workspace graph with optional grid embedding.
///
/// Edges are stored as given so that self-loops and duplicates survive until
/// [`validate`] reports them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Workspace {
    names: Vec<String>,
    coords: Vec<Option<Coord>>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: HashSet<(u32, u32)>,
    index: HashMap<String, VertexId>,
    grid: Option<GridSize>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, BuildError> {
        self.push_vertex(name, None)
    }

    pub fn add_vertex_at(&mut self, name: &str, coord: Coord) -> Result<VertexId, BuildError> {
        self.push_vertex(name, Some(coord))
    }

    fn push_vertex(&mut self, name: &str, coord: Option<Coord>) -> Result<VertexId, BuildError> {
        if self.index.contains_key(name) {
            return Err(BuildError::DuplicateVertex(name.to_string()));
        }
        let id = VertexId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.coords.push(coord);
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) {
        self.edges.push((a, b));
        self.adjacency.insert(norm(a, b));
    }

    pub fn add_edge_by_name(&mut self, a: &str, b: &str) -> Result<(), BuildError> {
        let a = self.require(a)?;
        let b = self.require(b)?;
        self.add_edge(a, b);
        Ok(())
    }

    pub fn set_grid(&mut self, grid: GridSize) {
        self.grid = Some(grid);
    }

    pub fn grid(&self) -> Option<GridSize> {
        self.grid
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<VertexId, BuildError> {
        self.vertex(name)
            .ok_or_else(|| BuildError::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn coord(&self, v: VertexId) -> Option<Coord> {
        self.coords[v.index()]
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.adjacency.contains(&norm(a, b))
    }

    /// True when every vertex carries a coordinate (and there is at least one).
    pub fn is_embedded(&self) -> bool {
        !self.coords.is_empty() && self.coords.iter().all(Option::is_some)
    }
}

fn norm(a: VertexId, b: VertexId) -> (u32, u32) {
    if a.0 <= b.0 {
        (a.0, b.0)
    } else {
        (b.0, a.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobotPath {
    pub name: String,
    pub path: Vec<VertexId>,
}

impl RobotPath {
    pub fn source(&self) -> VertexId {
        self.path[0]
    }

    pub fn target(&self) -> VertexId {
        self.path[self.path.len() - 1]
    }

    /// Index of the last vertex.
    pub fn end(&self) -> usize {
        self.path.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: Option<String>,
    pub workspace: Workspace,
    robots: Vec<RobotPath>,
}

impl Instance {
    pub fn new(workspace: Workspace) -> Self {
        Self {
            name: None,
            workspace,
            robots: Vec::new(),
        }
    }

    pub fn add_robot(&mut self, name: &str, path: Vec<VertexId>) -> RobotId {
        let id = RobotId(self.robots.len() as u32);
        self.robots.push(RobotPath {
            name: name.to_string(),
            path,
        });
        id
    }

    pub fn add_robot_by_names(&mut self, name: &str, path: &[&str]) -> Result<RobotId, BuildError> {
        let path = path
            .iter()
            .map(|v| self.workspace.require(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.add_robot(name, path))
    }

    /// Builds an instance whose workspace is exactly the vertices and edges
    /// the paths use, vertices numbered by first appearance.
    pub fn from_paths(paths: &[(&str, &[&str])]) -> Self {
        let mut ws = Workspace::new();
        for (_, path) in paths {
            for v in path.iter() {
                if ws.vertex(v).is_none() {
                    ws.add_vertex(v).expect("checked above");
                }
            }
        }
        for (_, path) in paths {
            for pair in path.windows(2) {
                let a = ws.vertex(pair[0]).expect("added");
                let b = ws.vertex(pair[1]).expect("added");
                if a != b && !ws.has_edge(a, b) {
                    ws.add_edge(a, b);
                }
            }
        }
        let mut inst = Instance::new(ws);
        for (name, path) in paths {
            inst.add_robot_by_names(name, path).expect("vertices exist");
        }
        inst
    }

    pub fn robots(&self) -> &[RobotPath] {
        &self.robots
    }

    pub fn robot(&self, r: RobotId) -> &RobotPath {
        &self.robots[r.index()]
    }

    pub fn robot_ids(&self) -> impl Iterator<Item = RobotId> {
        (0..self.robots.len() as u32).map(RobotId)
    }

    pub fn robot_count(&self) -> usize {
        self.robots.len()
    }

    pub fn robot_by_name(&self, name: &str) -> Option<RobotId> {
        self.robots
            .iter()
            .position(|r| r.name == name)
            .map(|i| RobotId(i as u32))
    }

    /// Sum of path lengths in vertices.
    pub fn total_path_length(&self) -> usize {
        self.robots.iter().map(|r| r.path.len()).sum()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.workspace.name(v)
    }
}

/// For every vertex, the robots whose path contains it (CSR layout).
pub(crate) struct PathMembership {
    offsets: Vec<u32>,
    robots: Vec<RobotId>,
}

impl PathMembership {
    pub(crate) fn new(instance: &Instance) -> Self {
        let nv = instance.workspace.vertex_count();
        let mut offsets = vec![0u32; nv + 1];
        for r in instance.robots() {
            for v in &r.path {
                offsets[v.index() + 1] += 1;
            }
        }
        for i in 0..nv {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut robots = vec![RobotId(0); offsets[nv] as usize];
        for r in instance.robot_ids() {
            for v in &instance.robot(r).path {
                robots[fill[v.index()] as usize] = r;
                fill[v.index()] += 1;
            }
        }
        Self { offsets, robots }
    }

    pub(crate) fn on(&self, v: VertexId) -> &[RobotId] {
        &self.robots[self.offsets[v.index()] as usize..self.offsets[v.index() + 1] as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("robot {robot}: empty path")]
    EmptyPath { robot: String },
    #[error("robot {robot}: repeated vertex {vertex}")]
    RepeatedVertex { robot: String, vertex: String },
    #[error("robot {robot}: missing edge {from}-{to}")]
    MissingEdge {
        robot: String,
        from: String,
        to: String,
    },
    #[error("duplicate robot id {robot}")]
    DuplicateRobot { robot: String },
    #[error("shared source {vertex} (robots {first} and {second})")]
    SharedSource {
        vertex: String,
        first: String,
        second: String,
    },
    #[error("self-loop at {vertex}")]
    SelfLoop { vertex: String },
    #[error("duplicate edge {a}-{b}")]
    DuplicateEdge { a: String, b: String },
    #[error("vertex {vertex} has no coordinate although others do")]
    PartialEmbedding { vertex: String },
    #[error("vertices {a} and {b} share a coordinate")]
    CoordinateClash { a: String, b: String },
    #[error("edge {a}-{b} does not join adjacent grid cells")]
    NonUnitEdge { a: String, b: String },
    #[error("vertex {vertex} lies outside the grid")]
    OutsideGrid { vertex: String },
}

/// Checks every well-formedness rule and returns all violations found.
pub fn validate(instance: &Instance) -> Vec<Violation> {
    let ws = &instance.workspace;
    let name = |v: VertexId| ws.name(v).to_string();
    let mut out = Vec::new();

    let mut seen_edges = HashSet::new();
    for &(a, b) in ws.edges() {
        if a == b {
            out.push(Violation::SelfLoop { vertex: name(a) });
        } else if !seen_edges.insert(norm(a, b)) {
            out.push(Violation::DuplicateEdge {
                a: name(a),
                b: name(b),
            });
        }
    }

    let any_coord = ws.coords.iter().any(Option::is_some);
    if any_coord {
        let mut cells: HashMap<Coord, VertexId> = HashMap::new();
        for v in ws.vertices() {
            match ws.coord(v) {
                None => out.push(Violation::PartialEmbedding { vertex: name(v) }),
                Some(c) => {
                    if let Some(&other) = cells.get(&c) {
                        out.push(Violation::CoordinateClash {
                            a: name(other),
                            b: name(v),
                        });
                    } else {
                        cells.insert(c, v);
                    }
                    if let Some(g) = ws.grid() {
                        if c.0 < 0 || c.1 < 0 || c.0 >= g.width as i64 || c.1 >= g.height as i64 {
                            out.push(Violation::OutsideGrid { vertex: name(v) });
                        }
                    }
                }
            }
        }
        for &(a, b) in ws.edges() {
            if let (Some(ca), Some(cb)) = (ws.coord(a), ws.coord(b)) {
                if (ca.0 - cb.0).abs() + (ca.1 - cb.1).abs() != 1 {
                    out.push(Violation::NonUnitEdge {
                        a: name(a),
                        b: name(b),
                    });
                }
            }
        }
    }

    let mut robot_names: HashSet<&str> = HashSet::new();
    let mut sources: HashMap<VertexId, &str> = HashMap::new();
    let mut stamp = vec![u32::MAX; ws.vertex_count()];
    for (i, r) in instance.robots().iter().enumerate() {
        if !robot_names.insert(r.name.as_str()) {
            out.push(Violation::DuplicateRobot {
                robot: r.name.clone(),
            });
        }
        if r.path.is_empty() {
            out.push(Violation::EmptyPath {
                robot: r.name.clone(),
            });
            continue;
        }
        for &v in &r.path {
            if stamp[v.index()] == i as u32 {
                out.push(Violation::RepeatedVertex {
                    robot: r.name.clone(),
                    vertex: name(v),
                });
            }
            stamp[v.index()] = i as u32;
        }
        for pair in r.path.windows(2) {
            if !ws.has_edge(pair[0], pair[1]) {
                out.push(Violation::MissingEdge {
                    robot: r.name.clone(),
                    from: name(pair[0]),
                    to: name(pair[1]),
                });
            }
        }
        if let Some(first) = sources.insert(r.source(), r.name.as_str()) {
            out.push(Violation::SharedSource {
                vertex: name(r.source()),
                first: first.to_string(),
                second: r.name.clone(),
            });
            sources.insert(r.source(), first);
        }
    }
    out
}

/// Maximum number of robot paths through a single vertex (0 without robots).
pub fn vertex_multiplicity(instance: &Instance) -> usize {
    let mut count = vec![0usize; instance.workspace.vertex_count()];
    for r in instance.robots() {
        for v in &r.path {
            count[v.index()] += 1;
        }
    }
    count.into_iter().max().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingTarget {
    pub blocked: RobotId,
    pub blocking: RobotId,
    pub vertex: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidirectionalEdge {
    /// Direction in which `forward` traverses the edge.
    pub edge: (VertexId, VertexId),
    pub forward: RobotId,
    pub backward: RobotId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantReport {
    pub vm: usize,
    pub nbt: bool,
    pub uni: bool,
    pub turn_number: Option<usize>,
    pub blocking_targets: Vec<BlockingTarget>,
    pub bidirectional_edges: Vec<BidirectionalEdge>,
}

pub fn classify(instance: &Instance) -> VariantReport {
    let members = PathMembership::new(instance);

    let mut blocking_targets = Vec::new();
    for r in instance.robot_ids() {
        let t = instance.robot(r).target();
        for &other in members.on(t) {
            if other != r {
                blocking_targets.push(BlockingTarget {
                    blocked: other,
                    blocking: r,
                    vertex: t,
                });
            }
        }
    }

    // Directed edge -> robots traversing it in that direction.
    let mut directed: BTreeMap<(u32, u32), Vec<RobotId>> = BTreeMap::new();
    for r in instance.robot_ids() {
        for pair in instance.robot(r).path.windows(2) {
            directed.entry((pair[0].0, pair[1].0)).or_default().push(r);
        }
    }
    let mut bidirectional_edges = Vec::new();
    for (&(a, b), fwd) in &directed {
        if a > b {
            continue;
        }
        if let Some(bwd) = directed.get(&(b, a)) {
            for &f in fwd {
                for &g in bwd {
                    if f != g {
                        bidirectional_edges.push(BidirectionalEdge {
                            edge: (VertexId(a), VertexId(b)),
                            forward: f,
                            backward: g,
                        });
                    }
                }
            }
        }
    }

    let turn_number = instance.workspace.is_embedded().then(|| {
        instance
            .robots()
            .iter()
            .map(|r| path_turns(&instance.workspace, &r.path))
            .max()
            .unwrap_or(0)
    });

    VariantReport {
        vm: vertex_multiplicity(instance),
        nbt: blocking_targets.is_empty(),
        uni: bidirectional_edges.is_empty(),
        turn_number,
        blocking_targets,
        bidirectional_edges,
    }
}

fn path_turns(ws: &Workspace, path: &[VertexId]) -> usize {
    let dir = |a: VertexId, b: VertexId| {
        let (ca, cb) = (ws.coord(a).unwrap_or_default(), ws.coord(b).unwrap_or_default());
        (cb.0 - ca.0, cb.1 - ca.1)
    };
    path.windows(3)
        .filter(|w| dir(w[0], w[1]) != dir(w[1], w[2]))
        .count()
}

/// Straight-path grid instance given by endpoints only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactGrid {
    pub grid: GridSize,
    pub robots: Vec<CompactRobot>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactRobot {
    pub name: String,
    pub from: Coord,
    pub to: Coord,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CompactError {
    #[error("robot {0}: endpoints are not axis-aligned")]
    NotAxisAligned(String),
    #[error("robot {0}: endpoint outside the grid")]
    OutsideGrid(String),
}

/// Vertex id used for grid cell `(x, y)` in expanded grids.
pub fn grid_vertex_name(x: i64, y: i64) -> String {
    alloc::format!("{x}_{y}")
}

/// Expands a compact grid description into the full grid graph with explicit
/// row/column paths.
pub fn expand_grid_compact(compact: &CompactGrid) -> Result<Instance, CompactError> {
    let (w, h) = (compact.grid.width as i64, compact.grid.height as i64);
    let inside = |c: Coord| c.0 >= 0 && c.1 >= 0 && c.0 < w && c.1 < h;
    for r in &compact.robots {
        if !inside(r.from) || !inside(r.to) {
            return Err(CompactError::OutsideGrid(r.name.clone()));
        }
        if r.from.0 != r.to.0 && r.from.1 != r.to.1 {
            return Err(CompactError::NotAxisAligned(r.name.clone()));
        }
    }

    let mut ws = Workspace::new();
    ws.set_grid(compact.grid);
    for y in 0..h {
        for x in 0..w {
            ws.add_vertex_at(&grid_vertex_name(x, y), (x, y))
                .expect("grid cells are distinct");
        }
    }
    let cell = |x: i64, y: i64| VertexId((y * w + x) as u32);
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                ws.add_edge(cell(x, y), cell(x + 1, y));
            }
            if y + 1 < h {
                ws.add_edge(cell(x, y), cell(x, y + 1));
            }
        }
    }

    let mut inst = Instance::new(ws);
    for r in &compact.robots {
        let (dx, dy) = ((r.to.0 - r.from.0).signum(), (r.to.1 - r.from.1).signum());
        let mut path = vec![cell(r.from.0, r.from.1)];
        let mut c = r.from;
        while c != r.to {
            c = (c.0 + dx, c.1 + dy);
            path.push(cell(c.0, c.1));
        }
        inst.add_robot(&r.name, path);
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn messages(inst: &Instance) -> Vec<String> {
        validate(inst).iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn repeated_vertex_is_reported() {
        let mut ws = Workspace::new();
        let a = ws.add_vertex("a").unwrap();
        let b = ws.add_vertex("b").unwrap();
        ws.add_edge(a, b);
        let mut inst = Instance::new(ws);
        inst.add_robot("r0", vec![a, b, a]);
        let msgs = messages(&inst);
        assert_eq!(msgs.len(), 1);
        assert!(msgs[0].contains("repeated vertex a"), "{msgs:?}");
    }

    #[test]
    fn shared_source_is_reported() {
        let mut inst = Instance::from_paths(&[("r0", &["a", "b"]), ("r1", &["c", "a"])]);
        let a = inst.workspace.vertex("a").unwrap();
        let c = inst.workspace.vertex("c").unwrap();
        inst.add_robot("r2", vec![a, c]);
        let msgs = messages(&inst);
        assert!(msgs.iter().any(|m| m.contains("shared source a")), "{msgs:?}");
    }

    #[test]
    fn missing_edge_is_reported() {
        let mut ws = Workspace::new();
        let a = ws.add_vertex("a").unwrap();
        let c = ws.add_vertex("c").unwrap();
        let mut inst = Instance::new(ws);
        inst.add_robot("r0", vec![a, c]);
        let msgs = messages(&inst);
        assert_eq!(msgs, ["robot r0: missing edge a-c"]);
    }

    #[test]
    fn self_loops_duplicates_and_names() {
        let mut ws = Workspace::new();
        let a = ws.add_vertex("a").unwrap();
        let b = ws.add_vertex("b").unwrap();
        ws.add_edge(a, a);
        ws.add_edge(a, b);
        ws.add_edge(b, a);
        assert_eq!(ws.add_vertex("a"), Err(BuildError::DuplicateVertex("a".into())));
        let mut inst = Instance::new(ws);
        inst.add_robot("r", vec![a]);
        inst.add_robot("r", vec![b]);
        let v = validate(&inst);
        assert!(v.contains(&Violation::SelfLoop { vertex: "a".into() }));
        assert!(v.iter().any(|x| matches!(x, Violation::DuplicateEdge { .. })));
        assert!(v.contains(&Violation::DuplicateRobot { robot: "r".into() }));
    }

    #[test]
    fn embedding_rules() {
        let mut ws = Workspace::new();
        let a = ws.add_vertex_at("a", (0, 0)).unwrap();
        let b = ws.add_vertex_at("b", (2, 0)).unwrap();
        let c = ws.add_vertex("c").unwrap();
        ws.add_edge(a, b);
        ws.add_edge(b, c);
        let inst = Instance::new(ws);
        let v = validate(&inst);
        assert!(v.contains(&Violation::NonUnitEdge { a: "a".into(), b: "b".into() }));
        assert!(v.contains(&Violation::PartialEmbedding { vertex: "c".into() }));
    }

    #[test]
    fn fixtures_are_valid() {
        for inst in fixtures::all() {
            assert!(validate(&inst).is_empty(), "{:?}: {:?}", inst.name, validate(&inst));
        }
    }

    #[test]
    fn vertex_multiplicity_examples() {
        assert_eq!(vertex_multiplicity(&Instance::from_paths(&[("r0", &["a", "b"])])), 1);
        assert_eq!(vertex_multiplicity(&fixtures::tri3()), 2);
        let three = Instance::from_paths(&[
            ("r0", &["a", "v"]),
            ("r1", &["b", "v", "c"]),
            ("r2", &["v", "d"]),
        ]);
        assert_eq!(vertex_multiplicity(&three), 3);
        assert_eq!(vertex_multiplicity(&Instance::new(Workspace::new())), 0);
    }

    #[test]
    fn classify_fig1() {
        let rep = classify(&fixtures::fig1());
        assert!(rep.nbt);
        assert!(!rep.uni);
        assert_eq!(rep.vm, 2);
        assert_eq!(rep.turn_number, None);
    }

    #[test]
    fn classify_tri3() {
        let inst = fixtures::tri3();
        let rep = classify(&inst);
        assert!(!rep.nbt);
        assert!(rep.uni);
        let b = inst.workspace.vertex("b").unwrap();
        assert!(rep.blocking_targets.contains(&BlockingTarget {
            blocked: RobotId(1),
            blocking: RobotId(0),
            vertex: b,
        }));
    }

    #[test]
    fn four_flag_combinations() {
        let disjoint = Instance::from_paths(&[("r0", &["a", "b"]), ("r1", &["c", "d"])]);
        let combos = [
            (classify(&fixtures::tri3()), false, true),
            (classify(&fixtures::fig1()), true, false),
            (classify(&disjoint), true, true),
            (classify(&fixtures::pass2_exits()), true, false),
        ];
        for (rep, nbt, uni) in combos {
            assert_eq!((rep.nbt, rep.uni), (nbt, uni));
        }
    }

    #[test]
    fn turn_number_counts_direction_changes() {
        let compact = CompactGrid {
            grid: GridSize { width: 4, height: 1 },
            robots: vec![CompactRobot { name: "r0".into(), from: (0, 0), to: (3, 0) }],
        };
        let inst = expand_grid_compact(&compact).unwrap();
        assert_eq!(classify(&inst).turn_number, Some(0));

        let mut ws = Workspace::new();
        let cells = [(0, 0), (1, 0), (1, 1), (2, 1), (3, 1)];
        let ids: Vec<_> = cells
            .iter()
            .enumerate()
            .map(|(i, &c)| ws.add_vertex_at(&alloc::format!("p{i}"), c).unwrap())
            .collect();
        for w in ids.windows(2) {
            ws.add_edge(w[0], w[1]);
        }
        let mut inst = Instance::new(ws);
        inst.add_robot("r0", ids.clone());
        inst.add_robot("r1", vec![ids[4]]);
        assert!(validate(&inst).is_empty());
        assert_eq!(classify(&inst).turn_number, Some(2));
    }

    #[test]
    fn expand_compact_examples() {
        let grid = GridSize { width: 4, height: 6 };
        let one = |from, to| CompactGrid {
            grid,
            robots: vec![CompactRobot { name: "r0".into(), from, to }],
        };
        let inst = expand_grid_compact(&one((0, 0), (3, 0))).unwrap();
        let names: Vec<_> = inst.robots()[0].path.iter().map(|&v| inst.vertex_name(v)).collect();
        assert_eq!(names, ["0_0", "1_0", "2_0", "3_0"]);

        let inst = expand_grid_compact(&one((2, 5), (2, 5))).unwrap();
        assert_eq!(inst.robots()[0].path.len(), 1);
        assert!(validate(&inst).is_empty());

        assert_eq!(
            expand_grid_compact(&one((0, 0), (1, 1))).unwrap_err(),
            CompactError::NotAxisAligned("r0".into())
        );
        assert_eq!(
            expand_grid_compact(&one((0, 0), (0, 6))).unwrap_err(),
            CompactError::OutsideGrid("r0".into())
        );

        let inst = expand_grid_compact(&one((3, 4), (3, 1))).unwrap();
        let names: Vec<_> = inst.robots()[0].path.iter().map(|&v| inst.vertex_name(v)).collect();
        assert_eq!(names, ["3_4", "3_3", "3_2", "3_1"]);
    }
}
