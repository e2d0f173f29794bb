//! Blocks of consecutive start vertices, knot reduction and block scheduling.

use alloc::vec;
use alloc::vec::Vec;

use super::graph::PathGraph;
use super::SolverError;
use crate::ids::{RobotId, VertexId};
use crate::plan::Move;
use crate::NONE;

/// Linked block used during reduction. Labels run tail -> head.
#[derive(Clone, Copy, Debug)]
struct Node {
    tail: u32,
    head: u32,
    next: u32,
    prev: u32,
    checked: bool,
}

/// Maximal runs of start vertices in a graph, in cyclic order.
/// `closed` is set when the whole graph is one all-start cycle.
struct Runs {
    nodes: Vec<Node>,
    closed: bool,
}

fn out_target(g: &PathGraph, label: u32) -> u32 {
    g.edges[g.labels[label as usize].first as usize].to
}

fn in_source(g: &PathGraph, label: u32) -> u32 {
    let s = g.start_local(label);
    g.edges[g.in_edge_of_start(s) as usize].from
}

/// Blocks in label order of their tails, linked circularly. Labels 0..n are
/// in cycle order, so a block's successor is the one whose tail follows its head.
fn runs(g: &PathGraph) -> Runs {
    let n = g.labels.len() as u32;
    let mut nodes: Vec<Node> = Vec::new();
    let mut tails = Vec::new();
    for l in 0..n {
        if !g.is_start_local(in_source(g, l)) {
            tails.push(l);
        }
    }
    if tails.is_empty() {
        nodes.push(Node {
            tail: 0,
            head: n - 1,
            next: 0,
            prev: 0,
            checked: false,
        });
        return Runs { nodes, closed: true };
    }
    for &t in &tails {
        let mut h = t;
        while g.is_start_local(out_target(g, h)) {
            h = g.vertices[out_target(g, h) as usize].start_of;
        }
        nodes.push(Node {
            tail: t,
            head: h,
            next: NONE,
            prev: NONE,
            checked: false,
        });
    }
    let k = nodes.len() as u32;
    for i in 0..k {
        let j = (i + 1) % k;
        nodes[i as usize].next = j;
        nodes[j as usize].prev = i;
    }
    Runs { nodes, closed: false }
}

fn block_of(nodes: &[Node], n_labels: u32, label: u32) -> u32 {
    // Blocks are contiguous label ranges in cyclic order.
    for (i, b) in nodes.iter().enumerate() {
        let len = (b.head + n_labels - b.tail) % n_labels;
        let off = (label + n_labels - b.tail) % n_labels;
        if off <= len {
            return i as u32;
        }
    }
    0
}

fn is_knot(g: &PathGraph, b: &Node) -> bool {
    in_source(g, b.tail) == out_target(g, b.head)
}

fn is_closed(g: &PathGraph, b: &Node) -> bool {
    g.is_start_local(out_target(g, b.head))
}

/// Output of the knot reduction.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: PathGraph,
    /// Removed vertices in order.
    pub untangled: Vec<VertexId>,
}

/// Untangles knot blocks until none is left. Scanning starts at the block of
/// label 0 and follows successor links; `on_step` sees every intermediate graph.
pub fn reduce_to_irreducible_with(
    mut g: PathGraph,
    mut on_step: impl FnMut(&PathGraph),
) -> Result<Reduction, SolverError> {
    let n = g.labels.len() as u32;
    let Runs { mut nodes, closed } = runs(&g);
    let mut untangled = Vec::new();
    if closed {
        return Ok(Reduction { graph: g, untangled });
    }
    let mut cur = block_of(&nodes, n, 0);
    loop {
        while is_knot(&g, &nodes[cur as usize]) {
            let b = nodes[cur as usize];
            let s_tail = g.start_local(b.tail);
            let e_in = g.in_edge_of_start(s_tail);
            let e_out = g.labels[b.head as usize].first;
            let step = g.untangle_edges(e_in, e_out)?;
            untangled.push(step.removed);
            on_step(&g);

            // The new in-edge of the tail starts at u; if u is a start vertex
            // the previous block now runs straight into this one.
            let u = g.edges[step.outer as usize].from;
            if g.is_start_local(u) {
                let p = nodes[cur as usize].prev;
                let pp = nodes[p as usize].prev;
                nodes[cur as usize].tail = nodes[p as usize].tail;
                if pp == cur {
                    nodes[cur as usize].prev = cur;
                    nodes[cur as usize].next = cur;
                } else {
                    nodes[cur as usize].prev = pp;
                    nodes[pp as usize].next = cur;
                }
            }
            let w = g.edges[step.inner as usize].to;
            let nx = nodes[cur as usize].next;
            if g.is_start_local(w) && nx != cur {
                let nn = nodes[nx as usize].next;
                nodes[cur as usize].head = nodes[nx as usize].head;
                if nn == cur {
                    nodes[cur as usize].prev = cur;
                    nodes[cur as usize].next = cur;
                } else {
                    nodes[cur as usize].next = nn;
                    nodes[nn as usize].prev = cur;
                }
            }
            if is_closed(&g, &nodes[cur as usize]) {
                return Ok(Reduction { graph: g, untangled });
            }
        }
        nodes[cur as usize].checked = true;
        cur = nodes[cur as usize].next;
        if nodes[cur as usize].checked {
            return Ok(Reduction { graph: g, untangled });
        }
    }
}

pub fn reduce_to_irreducible(g: PathGraph) -> Result<Reduction, SolverError> {
    reduce_to_irreducible_with(g, |_| {})
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducible {
    Solvable,
    /// Start vertices of the all-start cycle, in cycle order.
    Unsolvable(Vec<VertexId>),
}

pub fn classify_irreducible(g: &PathGraph) -> Result<Irreducible, SolverError> {
    let Runs { nodes, closed } = runs(g);
    if closed {
        let cert = (0..g.labels.len())
            .map(|l| g.vertices[g.start_local(l as u32) as usize].id)
            .collect();
        return Ok(Irreducible::Unsolvable(cert));
    }
    if nodes.iter().any(|b| is_knot(g, b)) {
        return Err(SolverError::NotIrreducible);
    }
    Ok(Irreducible::Solvable)
}

/// Blocks as robot runs (tail first), starting with the block of label 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub blocks: Vec<Vec<RobotId>>,
    pub next: Vec<usize>,
    pub prev: Vec<usize>,
}

impl BlockPartition {
    pub fn head(&self, b: usize) -> RobotId {
        *self.blocks[b].last().expect("blocks are nonempty")
    }

    pub fn tail(&self, b: usize) -> RobotId {
        self.blocks[b][0]
    }
}

/// Label ranges (tail, head) of the blocks, starting at the block of label 0.
fn ordered_ranges(g: &PathGraph) -> Vec<(u32, u32)> {
    let n = g.labels.len() as u32;
    let Runs { nodes, .. } = runs(g);
    let start = block_of(&nodes, n, 0) as usize;
    (0..nodes.len())
        .map(|i| {
            let b = nodes[(start + i) % nodes.len()];
            (b.tail, b.head)
        })
        .collect()
}

fn range_labels(n: u32, (tail, head): (u32, u32)) -> impl Iterator<Item = u32> {
    let len = (head + n - tail) % n;
    (0..=len).map(move |k| (tail + k) % n)
}

pub fn block_partition(g: &PathGraph) -> BlockPartition {
    let n = g.labels.len() as u32;
    let ranges = ordered_ranges(g);
    let k = ranges.len();
    BlockPartition {
        blocks: ranges
            .iter()
            .map(|&r| range_labels(n, r).map(|l| g.labels[l as usize].robot).collect())
            .collect(),
        next: (0..k).map(|i| (i + 1) % k).collect(),
        prev: (0..k).map(|i| (i + k - 1) % k).collect(),
    }
}

/// A robot advancing along `edges` consecutive graph edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphMove {
    pub robot: RobotId,
    pub label: u32,
    pub edges: u32,
}

/// Hooks into the block schedule.
pub trait BlockObserver {
    /// Called at every block-iteration boundary with the number of occupied
    /// non-start vertices.
    fn boundary(&mut self, _occupied_non_start: usize) {}
}

impl BlockObserver for () {}

struct Runner<'g> {
    g: &'g PathGraph,
    /// Next edge to traverse per label, `NONE` once at the end.
    next_edge: Vec<u32>,
    occ: Vec<u32>,
    non_start_occupied: usize,
    moves: Vec<GraphMove>,
}

impl Runner<'_> {
    fn step(&mut self, label: u32, max: bool) -> Result<(), SolverError> {
        let mut count = 0;
        loop {
            let e = self.next_edge[label as usize];
            if e == NONE {
                break;
            }
            let edge = &self.g.edges[e as usize];
            if self.occ[edge.to as usize] != NONE {
                break;
            }
            self.occ[edge.from as usize] = NONE;
            self.occ[edge.to as usize] = label;
            if !self.g.is_start_local(edge.from) {
                self.non_start_occupied -= 1;
            }
            if !self.g.is_start_local(edge.to) {
                self.non_start_occupied += 1;
            }
            self.next_edge[label as usize] = edge.next;
            count += 1;
            if !max {
                break;
            }
        }
        if !max && count == 0 {
            return Err(SolverError::LoopInvariant("single-edge advance is blocked"));
        }
        if count > 0 {
            self.moves.push(GraphMove {
                robot: self.g.labels[label as usize].robot,
                label,
                edges: count,
            });
        }
        Ok(())
    }
}

/// Block schedule for a solvable irreducible graph, asserting the loop
/// invariant at every block boundary.
pub fn solve_blocks_observed(
    g: &PathGraph,
    obs: &mut impl BlockObserver,
) -> Result<Vec<GraphMove>, SolverError> {
    let n = g.labels.len() as u32;
    let ranges = ordered_ranges(g);
    let k = ranges.len();
    let mut occ = vec![NONE; g.vertices.len()];
    for l in 0..n {
        occ[g.start_local(l) as usize] = l;
    }
    let mut run = Runner {
        g,
        next_edge: g.labels.iter().map(|l| l.first).collect(),
        occ,
        non_start_occupied: 0,
        moves: Vec::new(),
    };

    for i in 0..k {
        let (tail, head) = ranges[i];
        obs.boundary(run.non_start_occupied);
        if run.non_start_occupied > 1 {
            return Err(SolverError::LoopInvariant("two non-start vertices occupied"));
        }
        if run.non_start_occupied == 1 && run.occ[in_source(g, tail) as usize] == NONE {
            return Err(SolverError::LoopInvariant("occupied non-start vertex is not w(B)"));
        }
        let labels: Vec<u32> = range_labels(n, (tail, head)).collect();
        for &l in labels.iter().rev() {
            run.step(l, false)?;
        }
        if i > 0 {
            run.step(ranges[i - 1].1, false)?;
        }
        run.step(head, true)?;
    }
    if run.next_edge.iter().any(|&e| e != NONE) {
        return Err(SolverError::LoopInvariant("a robot missed its cycle target"));
    }
    Ok(run.moves)
}

pub fn solve_blocks(g: &PathGraph) -> Result<Vec<GraphMove>, SolverError> {
    solve_blocks_observed(g, &mut ())
}

/// Rewrites graph moves as instance moves; consecutive moves of one robot
/// are merged.
pub fn expand_moves(g: &PathGraph, moves: &[GraphMove]) -> Vec<Move> {
    let mut next_edge: Vec<u32> = g.labels.iter().map(|l| l.first).collect();
    let mut out: Vec<Move> = Vec::with_capacity(moves.len());
    for m in moves {
        let mut steps = 0;
        for _ in 0..m.edges {
            let e = next_edge[m.label as usize];
            steps += g.edge_span(e);
            next_edge[m.label as usize] = g.edges[e as usize].next;
        }
        match out.last_mut() {
            Some(last) if last.robot == m.robot => last.steps += steps,
            _ => out.push(Move::new(m.robot, steps)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::instance::Instance;
    use alloc::string::String;

    fn graph(inst: &Instance) -> PathGraph {
        PathGraph::from_instance(inst).unwrap()
    }

    fn names(inst: &Instance, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&x| String::from(inst.vertex_name(x))).collect()
    }

    fn robots(ids: &[u32]) -> Vec<RobotId> {
        ids.iter().map(|&i| RobotId(i)).collect()
    }

    #[test]
    fn tri3_is_closed() {
        let inst = fixtures::tri3();
        let g = graph(&inst);
        match classify_irreducible(&g).unwrap() {
            Irreducible::Unsolvable(c) => assert_eq!(names(&inst, &c), ["a", "b", "c"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hex3_needs_no_untangling() {
        let inst = fixtures::hex3();
        let red = reduce_to_irreducible(graph(&inst)).unwrap();
        assert!(red.untangled.is_empty());
        assert_eq!(classify_irreducible(&red.graph).unwrap(), Irreducible::Solvable);
    }

    #[test]
    fn spiral3_reduces_to_triangle() {
        let inst = fixtures::spiral3();
        let mut seen = 0;
        let red = reduce_to_irreducible_with(graph(&inst), |g| {
            g.check_composed_of_paths().unwrap();
            seen += 1;
        })
        .unwrap();
        assert_eq!(seen, 3);
        assert_eq!(names(&inst, &red.untangled), ["m0", "m1", "m2"]);
        match classify_irreducible(&red.graph).unwrap() {
            Irreducible::Unsolvable(c) => assert_eq!(names(&inst, &c), ["s0", "s1", "s2"]),
            other => panic!("{other:?}"),
        }
        // The last merged edge stands for a whole cycle path.
        let e = red.graph.label_edges(2)[0];
        assert_eq!(names(&inst, &red.graph.expand_edge(e)), ["s2", "m2", "m0", "s0"]);
    }

    #[test]
    fn fig4b_deadlocks() {
        let inst = Instance::from_paths(&[
            ("r0", &["s0", "s1"]),
            ("r1", &["s1", "m", "s2"]),
            ("r2", &["s2", "s3"]),
            ("r3", &["s3", "m", "s0"]),
        ]);
        let red = reduce_to_irreducible(graph(&inst)).unwrap();
        assert_eq!(names(&inst, &red.untangled), ["m"]);
        assert!(matches!(
            classify_irreducible(&red.graph).unwrap(),
            Irreducible::Unsolvable(c) if c.len() == 4
        ));
    }

    #[test]
    fn hex3_trace() {
        let inst = fixtures::hex3();
        let g = graph(&inst);
        let moves = solve_blocks(&g).unwrap();
        let trace: Vec<(u32, u32)> = moves.iter().map(|m| (m.robot.0, m.edges)).collect();
        assert_eq!(trace, [(0, 1), (0, 1), (1, 1), (0, 1), (1, 1), (2, 1), (1, 1), (2, 2)]);
        let plan = crate::plan::MotionPlan::new(expand_moves(&g, &moves));
        assert!(crate::plan::verify_plan(&inst, &plan).is_complete());
    }

    #[test]
    fn fig6_blocks() {
        let inst = fixtures::fig6();
        let g = graph(&inst);
        g.check_composed_of_paths().unwrap();
        let p = block_partition(&g);
        assert_eq!(
            p.blocks,
            [robots(&[0, 1]), robots(&[2]), robots(&[3, 4, 5]), robots(&[6]), robots(&[7]), robots(&[8])]
        );
        assert_eq!(p.next, [1, 2, 3, 4, 5, 0]);
        assert_eq!(p.prev, [5, 0, 1, 2, 3, 4]);
        assert_eq!(classify_irreducible(&g).unwrap(), Irreducible::Solvable);
        let moves = expand_moves(&g, &solve_blocks(&g).unwrap());
        assert!(crate::plan::verify_plan(&inst, &crate::plan::MotionPlan::new(moves)).is_complete());
    }

    #[test]
    fn knotted_graph_is_not_irreducible() {
        let g = graph(&fixtures::spiral3());
        assert_eq!(classify_irreducible(&g), Err(SolverError::NotIrreducible));
    }

    #[test]
    fn expansion_identity() {
        let inst = fixtures::hex3();
        let g = graph(&inst);
        let gm = [GraphMove { robot: RobotId(0), label: 0, edges: 2 }];
        assert_eq!(expand_moves(&g, &gm), [Move::new(RobotId(0), 2)]);
    }
}
