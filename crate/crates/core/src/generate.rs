//! Seeded instance generators.
//!
//! Every generator takes an explicit [`ChaCha8Rng`]; build one from a 64-bit
//! seed with [`rng`]. Output depends only on the seed and the parameters.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

use crate::hardness::{CnfFormula, Literal};
use crate::ids::VertexId;
use crate::instance::{grid_vertex_name, CompactGrid, CompactRobot, GridSize, Instance, Workspace};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` vertex-disjoint copies; vertex and robot names get a `#i` suffix.
pub fn disjoint_copies(instance: &Instance, k: usize) -> Instance {
    let mut ws = Workspace::new();
    let n = instance.workspace.vertex_count() as u32;
    for i in 0..k {
        for v in instance.workspace.vertices() {
            ws.add_vertex(&format!("{}#{i}", instance.vertex_name(v)))
                .expect("suffixed names are distinct");
        }
        for &(a, b) in instance.workspace.edges() {
            ws.add_edge(VertexId(a.0 + i as u32 * n), VertexId(b.0 + i as u32 * n));
        }
    }
    let mut out = Instance::new(ws);
    out.name = instance.name.as_ref().map(|s| format!("{s}x{k}"));
    for i in 0..k {
        for r in instance.robots() {
            let path = r.path.iter().map(|v| VertexId(v.0 + i as u32 * n)).collect();
            out.add_robot(&format!("{}#{i}", r.name), path);
        }
    }
    out
}

/// Shape of a random graph composed of paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    /// Number of labels (robots), at least 2.
    pub robots: usize,
    /// Upper bound on interior vertices per label.
    pub max_interior: usize,
}

/// Interior vertex lists per label; every interior vertex appears on exactly
/// two distinct labels. `fixed` labels get no random vertices.
fn random_interiors(
    rng: &mut ChaCha8Rng,
    spec: GraphSpec,
    reserved: &[usize],
    fixed: &[bool],
    first_id: usize,
) -> Vec<Vec<usize>> {
    let h = spec.robots;
    let mut cap: Vec<usize> = (0..h)
        .map(|i| {
            if fixed[i] {
                0
            } else {
                spec.max_interior.saturating_sub(reserved[i])
            }
        })
        .collect();
    let mut interiors = vec![Vec::new(); h];
    let slots: usize = cap.iter().sum();
    let shared = if slots < 2 { 0 } else { rng.random_range(0..=slots / 2) };
    for next in (first_id..).take(shared) {
        let open: Vec<usize> = (0..h).filter(|&i| cap[i] > 0).collect();
        if open.len() < 2 {
            break;
        }
        let i = rng.random_range(0..open.len());
        let j = (i + 1 + rng.random_range(0..open.len() - 1)) % open.len();
        for l in [open[i], open[j]] {
            cap[l] -= 1;
            interiors[l].push(next);
        }
    }
    for int in &mut interiors {
        int.shuffle(rng);
    }
    interiors
}

/// Builds robots `r{i}`: `s{i}, interior.., s{i+1}` plus optional exit `e{i}`.
fn assemble(interiors: &[Vec<usize>], exits: bool, name: String) -> Instance {
    let h = interiors.len();
    let names: Vec<Vec<String>> = (0..h)
        .map(|i| {
            let mut p = vec![format!("s{i}")];
            p.extend(interiors[i].iter().map(|m| format!("m{m}")));
            p.push(format!("s{}", (i + 1) % h));
            if exits {
                p.push(format!("e{i}"));
            }
            p
        })
        .collect();
    build_named(&names, name)
}

fn build_named(paths: &[Vec<String>], name: String) -> Instance {
    let robot_names: Vec<String> = (0..paths.len()).map(|i| format!("r{i}")).collect();
    let refs: Vec<Vec<&str>> = paths
        .iter()
        .map(|p| p.iter().map(String::as_str).collect())
        .collect();
    let pairs: Vec<(&str, &[&str])> = robot_names
        .iter()
        .zip(&refs)
        .map(|(n, p)| (n.as_str(), p.as_slice()))
        .collect();
    let mut inst = Instance::from_paths(&pairs);
    inst.name = Some(name);
    inst
}

/// Bare instance of a random graph composed of paths: robot `i` travels
/// label `i` from `s{i}` to `s{i+1}`.
pub fn random_path_graph(rng: &mut ChaCha8Rng, spec: GraphSpec) -> Instance {
    assert!(spec.robots >= 2, "a path graph needs at least two labels");
    let h = spec.robots;
    let interiors = random_interiors(rng, spec, &vec![0; h], &vec![false; h], 0);
    assemble(&interiors, false, format!("pathgraph-{h}"))
}

/// Random path graph with a knot: vertex `m0` is the last interior vertex of
/// one label and the first interior vertex of a later label, and every label
/// between them has an empty interior. Returns the instance and `m0`.
pub fn random_knot_graph(rng: &mut ChaCha8Rng, spec: GraphSpec) -> (Instance, VertexId) {
    assert!(spec.robots >= 2 && spec.max_interior >= 1);
    let h = spec.robots;
    let a = rng.random_range(0..h);
    let gap = rng.random_range(0..h.min(3) - 1);
    let b = (a + gap + 1) % h;
    let mut fixed = vec![false; h];
    for k in 1..=gap {
        fixed[(a + k) % h] = true;
    }
    let mut reserved = vec![0; h];
    reserved[a] += 1;
    reserved[b] += 1;
    let mut interiors = random_interiors(rng, spec, &reserved, &fixed, 1);
    interiors[a].push(0);
    interiors[b].insert(0, 0);
    let inst = assemble(&interiors, false, format!("knot-{h}"));
    let v0 = inst.workspace.vertex("m0").expect("knot vertex");
    (inst, v0)
}

/// Parameters of a random single-cycle NBT(2) instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleSpec {
    pub robots: usize,
    /// Upper bound on vertices per robot path, at least 4 (3 without exits).
    pub max_path: usize,
    /// Insert one private vertex into a random robot's cycle path.
    pub scout: bool,
}

/// Random path graph with a private exit after every cycle target, so all
/// targets are non-blocking and multiplicity is at most two.
pub fn random_cycle_instance(rng: &mut ChaCha8Rng, spec: CycleSpec) -> Instance {
    let extra = 3 + usize::from(spec.scout);
    assert!(spec.robots >= 2 && spec.max_path >= extra);
    let h = spec.robots;
    let gspec = GraphSpec {
        robots: h,
        max_interior: spec.max_path - extra,
    };
    let interiors = random_interiors(rng, gspec, &vec![0; h], &vec![false; h], 0);
    let mut paths: Vec<Vec<String>> = (0..h)
        .map(|i| {
            let mut p = vec![format!("s{i}")];
            p.extend(interiors[i].iter().map(|m| format!("m{m}")));
            p.push(format!("s{}", (i + 1) % h));
            p.push(format!("e{i}"));
            p
        })
        .collect();
    if spec.scout {
        let j = rng.random_range(0..h);
        let at = rng.random_range(1..paths[j].len() - 1);
        paths[j].insert(at, String::from("p"));
    }
    let kind = if spec.scout { "scout" } else { "cycle" };
    build_named(&paths, format!("{kind}-{h}"))
}

/// Parameters of a random straight-path grid instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub width: u32,
    pub height: u32,
    pub robots: usize,
    /// Upper bound on vertices per path.
    pub max_path: usize,
}

/// Random axis-aligned robots with distinct sources, non-blocking targets
/// and at most two paths per cell. May return fewer robots than asked when
/// placement keeps failing.
pub fn random_grid(rng: &mut ChaCha8Rng, spec: GridSpec) -> CompactGrid {
    let (w, h) = (spec.width as i64, spec.height as i64);
    let mut count = vec![0u8; (w * h) as usize];
    let mut sources = vec![false; (w * h) as usize];
    let mut targets = vec![false; (w * h) as usize];
    let cell = |x: i64, y: i64| (y * w + x) as usize;
    let mut robots: Vec<CompactRobot> = Vec::new();
    let mut attempts = 0;
    while robots.len() < spec.robots && attempts < 200 * spec.robots.max(1) {
        attempts += 1;
        let (x, y) = (rng.random_range(0..w), rng.random_range(0..h));
        let len = rng.random_range(1..=spec.max_path.max(1)) as i64 - 1;
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.random_range(0..4)];
        let (tx, ty) = (x + dx * len, y + dy * len);
        if !(0..w).contains(&tx) || !(0..h).contains(&ty) {
            continue;
        }
        let cells: Vec<usize> = (0..=len).map(|k| cell(x + dx * k, y + dy * k)).collect();
        let (src, tgt) = (cells[0], *cells.last().unwrap());
        let ok = !sources[src]
            && count[tgt] == 0
            && cells.iter().all(|&c| count[c] < 2 && !targets[c]);
        if !ok {
            continue;
        }
        for &c in &cells {
            count[c] += 1;
        }
        sources[src] = true;
        targets[tgt] = true;
        robots.push(CompactRobot {
            name: format!("r{}", robots.len()),
            from: (x, y),
            to: (tx, ty),
        });
    }
    CompactGrid {
        grid: GridSize {
            width: spec.width,
            height: spec.height,
        },
        robots,
    }
}

/// Random 3-CNF with 1..=`max_vars` variables and 1..=`max_clauses` clauses.
pub fn random_cnf(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> CnfFormula {
    let vars = rng.random_range(1..=max_vars.max(1));
    let m = rng.random_range(1..=max_clauses.max(1));
    let clauses = (0..m)
        .map(|_| {
            core::array::from_fn(|_| Literal {
                var: rng.random_range(0..vars),
                positive: rng.random_bool(0.5),
            })
        })
        .collect();
    CnfFormula::new(vars, clauses).expect("literals in range")
}

/// Benchmark families, each sized by total path length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Chain,
    Cycle,
    Grid,
}

impl Family {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "chain" => Some(Family::Chain),
            "cycle" => Some(Family::Cycle),
            "grid" => Some(Family::Grid),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::Cycle => "cycle",
            Family::Grid => "grid",
        }
    }

    /// Instance with total path length close to `total` (within one robot).
    pub fn build(self, total: usize, seed: u64) -> Instance {
        match self {
            Family::Chain => chain_family(total),
            Family::Cycle => cycle_family(total, seed),
            Family::Grid => grid_family(total),
        }
    }
}

const CHAIN_SEGMENT: usize = 8;

/// Robots queued along one line; each must wait for the robot ahead to
/// turn off onto its private exit branch.
pub fn chain_family(total: usize) -> Instance {
    let k = CHAIN_SEGMENT;
    let per = 2 * k + 1;
    let n = (total / per).max(1);
    let mut ws = Workspace::new();
    let line: Vec<VertexId> = (0..=n * k)
        .map(|i| ws.add_vertex(&format!("l{i}")).unwrap())
        .collect();
    for w in line.windows(2) {
        ws.add_edge(w[0], w[1]);
    }
    let mut paths = Vec::with_capacity(n);
    for i in 0..n {
        let mut path: Vec<VertexId> = line[i * k..=(i + 1) * k].to_vec();
        for j in 0..k {
            let v = ws.add_vertex(&format!("x{i}_{j}")).unwrap();
            ws.add_edge(*path.last().unwrap(), v);
            path.push(v);
        }
        paths.push(path);
    }
    let mut inst = Instance::new(ws);
    inst.name = Some(format!("chain-{total}"));
    for (i, p) in paths.into_iter().enumerate() {
        inst.add_robot(&format!("r{i}"), p);
    }
    inst
}

const CYCLE_INTERIOR: usize = 6;

/// One large blocking cycle over a random graph composed of paths, with a
/// private exit per robot.
pub fn cycle_family(total: usize, seed: u64) -> Instance {
    let mut rng = rng(seed);
    // Each shared vertex adds one step to two labels.
    let h = (total / (CYCLE_INTERIOR + 3)).max(2);
    let shared = h * CYCLE_INTERIOR / 2;
    let mut interiors: Vec<Vec<usize>> = vec![Vec::new(); h];
    for m in 0..shared {
        let a = rng.random_range(0..h);
        let b = (a + 1 + rng.random_range(0..h - 1)) % h;
        interiors[a].push(m);
        interiors[b].push(m);
    }
    for int in &mut interiors {
        int.shuffle(&mut rng);
    }
    let mut ws = Workspace::new();
    let s: Vec<VertexId> = (0..h)
        .map(|i| ws.add_vertex(&format!("s{i}")).unwrap())
        .collect();
    let mv: Vec<VertexId> = (0..shared)
        .map(|m| ws.add_vertex(&format!("m{m}")).unwrap())
        .collect();
    let mut paths = Vec::with_capacity(h);
    for i in 0..h {
        let mut p = vec![s[i]];
        p.extend(interiors[i].iter().map(|&m| mv[m]));
        p.push(s[(i + 1) % h]);
        p.push(ws.add_vertex(&format!("e{i}")).unwrap());
        for w in p.windows(2) {
            if !ws.has_edge(w[0], w[1]) {
                ws.add_edge(w[0], w[1]);
            }
        }
        paths.push(p);
    }
    let mut inst = Instance::new(ws);
    inst.name = Some(format!("cycle-{total}"));
    for (i, p) in paths.into_iter().enumerate() {
        inst.add_robot(&format!("r{i}"), p);
    }
    inst
}

const GRID_SEGMENT: i64 = 8;

/// Horizontal robots on even rows, each crossed at its midpoint by a short
/// vertical robot that starts on the horizontal path.
pub fn grid_family(total: usize) -> Instance {
    let k = GRID_SEGMENT;
    let per = (k + 2) as usize;
    let pairs = (total / per).max(1) as i64;
    let per_row = 64i64;
    let rows = (pairs + per_row - 1) / per_row;
    let width = per_row * (k + 1);
    let mut robots = Vec::new();
    for p in 0..pairs {
        let (row, b) = (p / per_row, p % per_row);
        let (x0, y) = (b * (k + 1), 2 * row);
        robots.push(CompactRobot {
            name: format!("h{p}"),
            from: (x0, y),
            to: (x0 + k - 1, y),
        });
        robots.push(CompactRobot {
            name: format!("v{p}"),
            from: (x0 + k / 2, y),
            to: (x0 + k / 2, y + 1),
        });
    }
    let compact = CompactGrid {
        grid: GridSize {
            width: width as u32,
            height: (2 * rows) as u32,
        },
        robots,
    };
    let mut inst = expand_sparse(&compact);
    inst.name = Some(format!("grid-{total}"));
    inst
}

/// Like [`crate::instance::expand_grid_compact`] but only creates cells that
/// some path uses, which keeps large benchmark grids small.
fn expand_sparse(compact: &CompactGrid) -> Instance {
    let mut ws = Workspace::new();
    let mut paths = Vec::new();
    for r in &compact.robots {
        let (dx, dy) = ((r.to.0 - r.from.0).signum(), (r.to.1 - r.from.1).signum());
        let len = (r.to.0 - r.from.0).abs().max((r.to.1 - r.from.1).abs());
        let mut path = Vec::new();
        for s in 0..=len {
            let (x, y) = (r.from.0 + dx * s, r.from.1 + dy * s);
            let name = grid_vertex_name(x, y);
            let v = match ws.vertex(&name) {
                Some(v) => v,
                None => ws.add_vertex_at(&name, (x, y)).unwrap(),
            };
            if let Some(&u) = path.last() {
                if !ws.has_edge(u, v) {
                    ws.add_edge(u, v);
                }
            }
            path.push(v);
        }
        paths.push((r.name.as_str(), path));
    }
    ws.set_grid(compact.grid);
    let mut inst = Instance::new(ws);
    for (name, p) in paths {
        inst.add_robot(name, p);
    }
    inst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{classify, expand_grid_compact, validate};
    use crate::solver::PathGraph;

    #[test]
    fn deterministic() {
        let spec = CycleSpec {
            robots: 4,
            max_path: 6,
            scout: false,
        };
        let a = random_cycle_instance(&mut rng(7), spec);
        let b = random_cycle_instance(&mut rng(7), spec);
        assert_eq!(a, b);
    }

    #[test]
    fn cycle_instances_are_nbt2() {
        for seed in 0..200 {
            let mut r = rng(seed);
            let spec = CycleSpec {
                robots: 2 + (seed as usize % 6),
                max_path: 4 + (seed as usize % 3),
                scout: seed % 2 == 0,
            };
            let inst = random_cycle_instance(&mut r, spec);
            assert!(validate(&inst).is_empty(), "{seed}");
            let rep = classify(&inst);
            assert!(rep.nbt && rep.vm <= 2, "{seed}");
            assert!(inst.robots().iter().all(|p| p.path.len() <= spec.max_path));
        }
    }

    #[test]
    fn path_graphs_are_composed_of_paths() {
        for seed in 0..200 {
            let spec = GraphSpec {
                robots: 2 + (seed as usize % 5),
                max_interior: 3,
            };
            let inst = random_path_graph(&mut rng(seed), spec);
            let g = PathGraph::from_instance(&inst).unwrap();
            g.check_composed_of_paths().unwrap();
            let (knot, v0) = random_knot_graph(&mut rng(seed), spec);
            let g = PathGraph::from_instance(&knot).unwrap();
            g.check_composed_of_paths().unwrap();
            let after = g.untangled(v0).unwrap();
            after.check_composed_of_paths().unwrap();
        }
    }

    #[test]
    fn grids_respect_limits() {
        for seed in 0..100 {
            let spec = GridSpec {
                width: 5,
                height: 5,
                robots: 6,
                max_path: 5,
            };
            let g = random_grid(&mut rng(seed), spec);
            let inst = expand_grid_compact(&g).unwrap();
            assert!(validate(&inst).is_empty());
            let rep = classify(&inst);
            assert!(rep.nbt && rep.vm <= 2);
        }
    }

    #[test]
    fn families_hit_their_size() {
        for f in [Family::Chain, Family::Cycle, Family::Grid] {
            let inst = f.build(10_000, 1);
            let l = inst.total_path_length();
            assert!((9_000..=11_000).contains(&l), "{} {l}", f.name());
            assert!(validate(&inst).is_empty(), "{}", f.name());
            let rep = classify(&inst);
            assert!(rep.nbt && rep.vm <= 2, "{}", f.name());
        }
        assert_eq!(Family::parse("grid"), Some(Family::Grid));
    }

    #[test]
    fn copies_are_disjoint() {
        let two = disjoint_copies(&crate::fixtures::hex3_exits(), 2);
        assert_eq!(two.robot_count(), 6);
        assert_eq!(two.workspace.vertex_count(), 18);
        assert!(validate(&two).is_empty());
    }
}
