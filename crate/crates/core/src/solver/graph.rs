//! Edge-labeled directed multigraph composed of paths, with untangling.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::cycles::BlockingCycle;
use super::SolverError;
use crate::ids::{RobotId, VertexId};
use crate::instance::{Instance, Workspace};
use crate::{HashMap, NONE};
use super::Marks;
use core::cell::OnceCell;

#[derive(Clone, Debug)]
pub(crate) struct GVertex {
    pub id: VertexId,
    /// Label whose path starts here, or `NONE`.
    pub start_of: u32,
    pub inn: [u32; 2],
    pub out: [u32; 2],
    pub alive: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct GEdge {
    pub from: u32,
    pub to: u32,
    pub label: u32,
    /// Previous / next edge along the same label.
    pub prev: u32,
    pub next: u32,
    pub parts: Option<(u32, u32)>,
    /// Number of original edges this edge stands for.
    pub span: u32,
    pub alive: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct Label {
    pub robot: RobotId,
    pub first: u32,
    pub last: u32,
}

/// One untangling step: `merged` replaced the edges in `parts`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Merge {
    pub merged: u32,
    pub parts: (u32, u32),
}

/// Result of removing one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Untangled {
    pub removed: VertexId,
    /// Merged edge of the robot entering the knot from outside.
    pub outer: u32,
    /// Merged edge of the robot leaving the knot.
    pub inner: u32,
}

#[derive(Clone, Debug)]
pub struct PathGraph {
    pub(crate) vertices: Vec<GVertex>,
    pub(crate) edges: Vec<GEdge>,
    pub(crate) labels: Vec<Label>,
    history: Vec<Merge>,
    /// Workspace vertex to local index, built on first lookup.
    index: OnceCell<HashMap<VertexId, u32>>,
    live_vertices: usize,
    live_edges: usize,
}

fn violation(msg: &str) -> SolverError {
    SolverError::PropertyViolation(String::from(msg))
}

fn slot_insert(slots: &mut [u32; 2], e: u32) -> bool {
    for s in slots.iter_mut() {
        if *s == NONE {
            *s = e;
            return true;
        }
    }
    false
}

fn slot_replace(slots: &mut [u32; 2], old: u32, new: u32) {
    for s in slots.iter_mut() {
        if *s == old {
            *s = new;
            return;
        }
    }
    debug_assert!(false, "edge slot not found");
}

impl PathGraph {
    /// Builds the graph of a blocking cycle from the cycle paths.
    pub fn from_cycle(instance: &Instance, cycle: &BlockingCycle) -> Result<Self, SolverError> {
        let mut marks = Marks::new(instance.workspace.vertex_count());
        Self::from_cycle_with(instance, cycle, &mut marks)
    }

    pub(crate) fn from_cycle_with(
        instance: &Instance,
        cycle: &BlockingCycle,
        marks: &mut Marks,
    ) -> Result<Self, SolverError> {
        let paths: Vec<(RobotId, &[VertexId])> = cycle
            .robots
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, cycle.cycle_path(instance, i)))
            .collect();
        Self::from_label_paths(&paths, marks)
    }

    /// Treats every robot of `instance` as a label; robots are chained by
    /// matching each target with the next source, starting from robot 0.
    pub fn from_instance(instance: &Instance) -> Result<Self, SolverError> {
        let n = instance.robot_count();
        if n == 0 {
            return Err(violation("no labels"));
        }
        let by_source: HashMap<VertexId, RobotId> = instance
            .robot_ids()
            .map(|r| (instance.robot(r).source(), r))
            .collect();
        let mut order = Vec::with_capacity(n);
        let mut r = RobotId(0);
        for _ in 0..n {
            order.push(r);
            r = *by_source
                .get(&instance.robot(r).target())
                .ok_or_else(|| violation("label end is not a start vertex"))?;
        }
        if r != RobotId(0) {
            return Err(violation("label successors do not form one cycle"));
        }
        let paths: Vec<(RobotId, &[VertexId])> = order
            .iter()
            .map(|&r| (r, instance.robot(r).path.as_slice()))
            .collect();
        let mut marks = Marks::new(instance.workspace.vertex_count());
        Self::from_label_paths(&paths, &mut marks)
    }

    /// `marks` must be all unset; it is left that way.
    fn from_label_paths(
        paths: &[(RobotId, &[VertexId])],
        marks: &mut Marks,
    ) -> Result<Self, SolverError> {
        let built = Self::build(paths, marks);
        for (_, path) in paths {
            marks.reset(path.iter().copied());
        }
        built
    }

    fn build(paths: &[(RobotId, &[VertexId])], marks: &mut Marks) -> Result<Self, SolverError> {
        let total: usize = paths.iter().map(|p| p.1.len()).sum();
        let mut g = PathGraph {
            vertices: Vec::with_capacity(total),
            edges: Vec::with_capacity(total),
            labels: Vec::with_capacity(paths.len()),
            history: Vec::new(),
            index: OnceCell::new(),
            live_vertices: 0,
            live_edges: 0,
        };
        for (li, &(robot, path)) in paths.iter().enumerate() {
            if path.len() < 2 {
                return Err(violation("label path has no edge"));
            }
            let mut prev_edge = NONE;
            let mut first = NONE;
            let mut a = g.local(path[0], marks);
            if g.vertices[a as usize].start_of != NONE {
                return Err(violation("two labels start at one vertex"));
            }
            g.vertices[a as usize].start_of = li as u32;
            for &v in &path[1..] {
                let b = g.local(v, marks);
                let e = g.edges.len() as u32;
                g.edges.push(GEdge {
                    from: a,
                    to: b,
                    label: li as u32,
                    prev: prev_edge,
                    next: NONE,
                    parts: None,
                    span: 1,
                    alive: true,
                });
                if prev_edge != NONE {
                    g.edges[prev_edge as usize].next = e;
                } else {
                    first = e;
                }
                if !slot_insert(&mut g.vertices[a as usize].out, e)
                    || !slot_insert(&mut g.vertices[b as usize].inn, e)
                {
                    return Err(violation("degree law: more than two edges at a vertex"));
                }
                prev_edge = e;
                a = b;
            }
            g.labels.push(Label {
                robot,
                first,
                last: prev_edge,
            });
        }
        g.live_edges = g.edges.len();
        g.live_vertices = g.vertices.len();
        Ok(g)
    }

    fn local(&mut self, v: VertexId, marks: &mut Marks) -> u32 {
        let id = marks.get(v);
        if id != NONE {
            return id;
        }
        let id = self.vertices.len() as u32;
        marks.set(v, id);
        self.vertices.push(GVertex {
            id: v,
            start_of: NONE,
            inn: [NONE; 2],
            out: [NONE; 2],
            alive: true,
        });
        id
    }

    fn index(&self) -> &HashMap<VertexId, u32> {
        self.index.get_or_init(|| {
            self.vertices
                .iter()
                .enumerate()
                .map(|(i, v)| (v.id, i as u32))
                .collect()
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.live_vertices
    }

    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn history(&self) -> &[Merge] {
        &self.history
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().filter(|v| v.alive).map(|v| v.id)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index()
            .get(&v)
            .is_some_and(|&l| self.vertices[l as usize].alive)
    }

    pub fn is_start(&self, v: VertexId) -> bool {
        self.index()
            .get(&v)
            .is_some_and(|&l| self.vertices[l as usize].alive && self.vertices[l as usize].start_of != NONE)
    }

    pub fn start_vertices(&self) -> Vec<VertexId> {
        self.labels
            .iter()
            .map(|l| self.vertices[self.edges[l.first as usize].from as usize].id)
            .collect()
    }

    /// (in-degree, out-degree) of a live vertex.
    pub fn degree(&self, v: VertexId) -> Option<(usize, usize)> {
        let l = *self.index().get(&v)?;
        let gv = &self.vertices[l as usize];
        gv.alive.then(|| {
            let c = |s: &[u32; 2]| s.iter().filter(|&&e| e != NONE).count();
            (c(&gv.inn), c(&gv.out))
        })
    }

    /// Live edges as `(from, to, robot)`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, RobotId)> {
        self.edges
            .iter()
            .filter(|e| e.alive)
            .map(|e| {
                (
                    self.vertices[e.from as usize].id,
                    self.vertices[e.to as usize].id,
                    self.labels[e.label as usize].robot,
                )
            })
            .collect()
    }

    /// Robots in label (cycle) order.
    pub fn robots(&self) -> Vec<RobotId> {
        self.labels.iter().map(|l| l.robot).collect()
    }

    /// Current vertex sequence of label `label`.
    pub fn label_path(&self, label: usize) -> Vec<VertexId> {
        let l = &self.labels[label];
        let mut out = vec![self.vertices[self.edges[l.first as usize].from as usize].id];
        let mut e = l.first;
        while e != NONE {
            let edge = &self.edges[e as usize];
            out.push(self.vertices[edge.to as usize].id);
            e = edge.next;
        }
        out
    }

    /// Live edge ids of a label, in path order.
    pub fn label_edges(&self, label: usize) -> Vec<u32> {
        let mut out = Vec::new();
        let mut e = self.labels[label].first;
        while e != NONE {
            out.push(e);
            e = self.edges[e as usize].next;
        }
        out
    }

    pub fn edge_span(&self, e: u32) -> u32 {
        self.edges[e as usize].span
    }

    pub fn edge_endpoints(&self, e: u32) -> (VertexId, VertexId) {
        let edge = &self.edges[e as usize];
        (
            self.vertices[edge.from as usize].id,
            self.vertices[edge.to as usize].id,
        )
    }

    /// Original vertex sequence (both endpoints included) that edge `e`
    /// stands for, expanded through the merge history.
    pub fn expand_edge(&self, e: u32) -> Vec<VertexId> {
        let mut out = vec![self.vertices[self.edges[e as usize].from as usize].id];
        let mut stack = vec![e];
        while let Some(x) = stack.pop() {
            match self.edges[x as usize].parts {
                Some((a, b)) => {
                    stack.push(b);
                    stack.push(a);
                }
                None => out.push(self.vertices[self.edges[x as usize].to as usize].id),
            }
        }
        out
    }

    /// Checks the five composed-of-paths properties and the degree law.
    pub fn check_composed_of_paths(&self) -> Result<(), SolverError> {
        let nv = self.vertices.len();
        let mut on_labels = vec![0u32; nv];
        let mut stamp = vec![NONE; nv];
        let mut edges_seen = 0usize;
        let mut end_of = vec![NONE; nv];

        for (li, l) in self.labels.iter().enumerate() {
            let li = li as u32;
            if l.first == NONE || self.edges[l.first as usize].prev != NONE {
                return Err(violation("label path has a broken start"));
            }
            let start = self.edges[l.first as usize].from;
            if self.vertices[start as usize].start_of != li {
                return Err(violation("label start vertex is not marked as its start"));
            }
            stamp[start as usize] = li;
            on_labels[start as usize] += 1;
            let mut e = l.first;
            let mut last = NONE;
            while e != NONE {
                let edge = &self.edges[e as usize];
                if !edge.alive || edge.label != li {
                    return Err(violation("label path uses a dead or foreign edge"));
                }
                if last != NONE && self.edges[last as usize].to != edge.from {
                    return Err(violation("label path is not contiguous"));
                }
                if stamp[edge.to as usize] == li {
                    return Err(violation("label path is not simple"));
                }
                stamp[edge.to as usize] = li;
                on_labels[edge.to as usize] += 1;
                edges_seen += 1;
                last = e;
                e = edge.next;
            }
            if last != l.last {
                return Err(violation("label end pointer is stale"));
            }
            let end = self.edges[last as usize].to;
            if end_of[end as usize] != NONE {
                return Err(violation("two labels end at one vertex"));
            }
            end_of[end as usize] = li;
        }
        if edges_seen != self.live_edges {
            return Err(violation("edge not covered by any label"));
        }

        let mut live = 0;
        for (i, v) in self.vertices.iter().enumerate() {
            if !v.alive {
                continue;
            }
            live += 1;
            if on_labels[i] != 2 {
                return Err(violation("vertex does not lie on exactly two labels"));
            }
            let is_start = v.start_of != NONE;
            if is_start != (end_of[i] != NONE) {
                return Err(violation("label ends and starts do not chain"));
            }
            if is_start && end_of[i] == v.start_of {
                return Err(violation("label ends at its own start"));
            }
            let want = if is_start { (1, 1) } else { (2, 2) };
            let c = |s: &[u32; 2]| s.iter().filter(|&&e| e != NONE).count();
            if (c(&v.inn), c(&v.out)) != want {
                return Err(violation("degree law"));
            }
            for &e in v.inn.iter().filter(|&&e| e != NONE) {
                let edge = &self.edges[e as usize];
                if !edge.alive || edge.to as usize != i {
                    return Err(violation("in-edge slot inconsistent"));
                }
            }
            for &e in v.out.iter().filter(|&&e| e != NONE) {
                let edge = &self.edges[e as usize];
                if !edge.alive || edge.from as usize != i {
                    return Err(violation("out-edge slot inconsistent"));
                }
            }
        }
        if live != self.live_vertices {
            return Err(violation("live vertex count is stale"));
        }

        // The label successor (end vertex -> label starting there) must be a
        // single cycle; with contiguous labels this is the Eulerian cycle.
        let n = self.labels.len();
        let mut cur = 0usize;
        for step in 0..n {
            let end = self.edges[self.labels[cur].last as usize].to;
            cur = self.vertices[end as usize].start_of as usize;
            if cur == 0 && step + 1 != n {
                return Err(violation("label successors form more than one cycle"));
            }
        }
        if cur != 0 {
            return Err(violation("label successors do not close"));
        }
        Ok(())
    }

    /// Graph instance: vertices and undirected edges of the graph, one robot
    /// per label following its current path.
    pub fn to_instance(&self, source: &Instance) -> Instance {
        let mut ws = Workspace::new();
        let mut map = vec![VertexId(NONE); self.vertices.len()];
        for (i, v) in self.vertices.iter().enumerate() {
            if v.alive {
                map[i] = ws
                    .add_vertex(source.vertex_name(v.id))
                    .expect("graph vertices are distinct");
            }
        }
        for e in self.edges.iter().filter(|e| e.alive) {
            let (a, b) = (map[e.from as usize], map[e.to as usize]);
            if !ws.has_edge(a, b) {
                ws.add_edge(a, b);
            }
        }
        let mut inst = Instance::new(ws);
        for (li, l) in self.labels.iter().enumerate() {
            let path = self
                .label_path(li)
                .into_iter()
                .map(|v| map[self.index()[&v] as usize])
                .collect();
            inst.add_robot(&source.robot(l.robot).name, path);
        }
        inst
    }

    /// Removes `v0`, which must be the single non-start vertex of a simple
    /// cycle whose other vertices are start vertices.
    pub fn untangle(&mut self, v0: VertexId) -> Result<Untangled, SolverError> {
        let l0 = *self.index().get(&v0).ok_or(SolverError::NotAKnot)?;
        let gv = &self.vertices[l0 as usize];
        if !gv.alive || gv.start_of != NONE {
            return Err(SolverError::NotAKnot);
        }
        for &first in gv.out.iter() {
            if first == NONE {
                continue;
            }
            let mut x = self.edges[first as usize].to;
            let mut hops = 0usize;
            while self.vertices[x as usize].start_of != NONE && hops <= self.vertices.len() {
                let label = self.vertices[x as usize].start_of;
                let e = self.labels[label as usize].first;
                let to = self.edges[e as usize].to;
                if to == l0 {
                    return self.untangle_edges(first, e);
                }
                x = to;
                hops += 1;
            }
        }
        Err(SolverError::NotAKnot)
    }

    /// Returns a copy with `v0` untangled.
    pub fn untangled(&self, v0: VertexId) -> Result<PathGraph, SolverError> {
        let mut g = self.clone();
        g.untangle(v0)?;
        Ok(g)
    }

    /// Core O(1) operation. `into_cycle` is the edge `(v0, v1)` and
    /// `closing` the edge `(v_{k-1}, v0)`.
    pub(crate) fn untangle_edges(
        &mut self,
        into_cycle: u32,
        closing: u32,
    ) -> Result<Untangled, SolverError> {
        let e1 = into_cycle;
        let e2 = closing;
        let v0 = self.edges[e1 as usize].from;
        if self.edges[e2 as usize].to != v0 {
            return Err(SolverError::NotAKnot);
        }
        let a = self.edges[e1 as usize].prev;
        let b = self.edges[e2 as usize].next;
        if a == NONE || b == NONE {
            return Err(SolverError::NotAKnot);
        }
        let (r, r2) = (self.edges[e1 as usize].label, self.edges[e2 as usize].label);
        if r == r2 || self.edges[a as usize].to != v0 || self.edges[b as usize].from != v0 {
            return Err(SolverError::NotAKnot);
        }

        let outer = self.merge(a, e1);
        let inner = self.merge(e2, b);
        self.vertices[v0 as usize].alive = false;
        self.vertices[v0 as usize].inn = [NONE; 2];
        self.vertices[v0 as usize].out = [NONE; 2];
        self.live_vertices -= 1;
        Ok(Untangled {
            removed: self.vertices[v0 as usize].id,
            outer,
            inner,
        })
    }

    /// Replaces consecutive label edges `a`, `b` by one edge.
    fn merge(&mut self, a: u32, b: u32) -> u32 {
        let (ea, eb) = (&self.edges[a as usize], &self.edges[b as usize]);
        let m = self.edges.len() as u32;
        let merged = GEdge {
            from: ea.from,
            to: eb.to,
            label: ea.label,
            prev: ea.prev,
            next: eb.next,
            parts: Some((a, b)),
            span: ea.span + eb.span,
            alive: true,
        };
        let (from, to, label, prev, next) = (merged.from, merged.to, merged.label, merged.prev, merged.next);
        self.edges.push(merged);
        self.edges[a as usize].alive = false;
        self.edges[b as usize].alive = false;
        if prev != NONE {
            self.edges[prev as usize].next = m;
        } else {
            self.labels[label as usize].first = m;
        }
        if next != NONE {
            self.edges[next as usize].prev = m;
        } else {
            self.labels[label as usize].last = m;
        }
        slot_replace(&mut self.vertices[from as usize].out, a, m);
        slot_replace(&mut self.vertices[to as usize].inn, b, m);
        self.history.push(Merge {
            merged: m,
            parts: (a, b),
        });
        self.live_edges -= 1;
        m
    }

    // Local-index helpers for the block machinery.

    pub(crate) fn start_local(&self, label: u32) -> u32 {
        self.edges[self.labels[label as usize].first as usize].from
    }

    /// The single in-edge of a start vertex.
    pub(crate) fn in_edge_of_start(&self, local: u32) -> u32 {
        let v = &self.vertices[local as usize];
        if v.inn[0] != NONE {
            v.inn[0]
        } else {
            v.inn[1]
        }
    }

    pub(crate) fn is_start_local(&self, local: u32) -> bool {
        self.vertices[local as usize].start_of != NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn graph(inst: &Instance) -> PathGraph {
        let g = PathGraph::from_instance(inst).unwrap();
        g.check_composed_of_paths().unwrap();
        g
    }

    fn v(inst: &Instance, name: &str) -> VertexId {
        inst.workspace.vertex(name).unwrap()
    }

    fn names(inst: &Instance, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&x| String::from(inst.vertex_name(x))).collect()
    }

    #[test]
    fn tri3_graph() {
        let inst = fixtures::tri3();
        let g = graph(&inst);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(names(&inst, &g.start_vertices()), ["a", "b", "c"]);
        let e: Vec<_> = g
            .edges()
            .iter()
            .map(|&(a, b, r)| (String::from(inst.vertex_name(a)), String::from(inst.vertex_name(b)), r.0))
            .collect();
        assert!(e.contains(&("a".into(), "b".into(), 0)));
        assert!(e.contains(&("b".into(), "c".into(), 1)));
        assert!(e.contains(&("c".into(), "a".into(), 2)));
    }

    #[test]
    fn hex3_degrees() {
        let inst = fixtures::hex3();
        let g = graph(&inst);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        for name in ["s0", "s1", "s2"] {
            assert_eq!(g.degree(v(&inst, name)), Some((1, 1)));
        }
        for name in ["m0", "m1", "m2"] {
            assert_eq!(g.degree(v(&inst, name)), Some((2, 2)));
        }
    }

    #[test]
    fn pass2_untangle() {
        let inst = fixtures::pass2();
        let mut g = graph(&inst);
        assert_eq!(g.degree(v(&inst, "c")), Some((2, 2)));
        assert_eq!(names(&inst, &g.start_vertices()), ["a", "b"]);
        let u = g.untangle(v(&inst, "c")).unwrap();
        g.check_composed_of_paths().unwrap();
        assert_eq!(inst.vertex_name(u.removed), "c");
        assert_eq!(names(&inst, &g.label_path(0)), ["a", "b"]);
        assert_eq!(names(&inst, &g.label_path(1)), ["b", "a"]);
        assert_eq!(g.history().len(), 2);
        // r1's merged edge (b,a) expands back through c.
        let e = g.label_edges(1)[0];
        assert_eq!(names(&inst, &g.expand_edge(e)), ["b", "c", "a"]);
        assert_eq!(g.edge_span(e), 2);
    }

    #[test]
    fn spiral3_untangle_m1() {
        let inst = fixtures::spiral3();
        let mut g = graph(&inst);
        g.untangle(v(&inst, "m1")).unwrap();
        g.check_composed_of_paths().unwrap();
        assert!(!g.contains(v(&inst, "m1")));
        assert_eq!(names(&inst, &g.label_path(0)), ["s0", "m0", "s1"]);
        assert_eq!(names(&inst, &g.label_path(1)), ["s1", "m2", "s2"]);
    }

    #[test]
    fn three_label_untangle() {
        let inst = Instance::from_paths(&[
            ("r1", &["x", "v0", "a"]),
            ("r2", &["a", "v0", "y"]),
            ("r3", &["y", "x"]),
        ]);
        let mut g = graph(&inst);
        g.untangle(v(&inst, "v0")).unwrap();
        g.check_composed_of_paths().unwrap();
        assert_eq!(names(&inst, &g.label_path(0)), ["x", "a"]);
        assert_eq!(names(&inst, &g.label_path(1)), ["a", "y"]);
        assert_eq!(names(&inst, &g.label_path(2)), ["y", "x"]);
        assert!(g.vertices().all(|x| g.is_start(x)));
    }

    #[test]
    fn untangle_rejects_non_knots() {
        let inst = fixtures::hex3();
        let mut g = graph(&inst);
        for name in ["m0", "m1", "m2", "s0"] {
            assert_eq!(g.untangle(v(&inst, name)), Err(SolverError::NotAKnot));
        }
        g.check_composed_of_paths().unwrap();
    }

    #[test]
    fn property_violations_are_named() {
        // r0 owns x alone: x lies on one label only.
        let inst = Instance::from_paths(&[("r0", &["a", "x", "b"]), ("r1", &["b", "a"])]);
        let g = PathGraph::from_instance(&inst).unwrap();
        match g.check_composed_of_paths() {
            Err(SolverError::PropertyViolation(m)) => assert!(m.contains("two labels"), "{m}"),
            other => panic!("{other:?}"),
        }
        // Two disjoint 2-cycles.
        let inst = Instance::from_paths(&[
            ("r0", &["a", "b"]),
            ("r1", &["b", "a"]),
            ("r2", &["c", "d"]),
            ("r3", &["d", "c"]),
        ]);
        assert!(PathGraph::from_instance(&inst).is_err());
    }

    #[test]
    fn to_instance_round_trip() {
        let inst = fixtures::hex3();
        let g = graph(&inst);
        let gi = g.to_instance(&inst);
        assert!(crate::instance::validate(&gi).is_empty());
        assert_eq!(gi.robot_count(), 3);
        assert_eq!(gi.workspace.vertex_count(), 6);
        assert_eq!(gi.total_path_length(), inst.total_path_length());
    }
}
