//! Small named instances used by tests, the CLI and examples.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::hardness::{Literal, PivotInstance};
use crate::instance::Instance;

fn named(name: &str, paths: &[(&str, &[&str])]) -> Instance {
    let mut inst = Instance::from_paths(paths);
    inst.name = Some(name.into());
    inst
}

/// Appends a private exit `e{i}` to every robot path.
fn with_exits(name: &str, paths: &[(&str, &[&str])]) -> Instance {
    let exits: Vec<String> = (0..paths.len()).map(|i| format!("e{i}")).collect();
    let owned: Vec<Vec<&str>> = paths
        .iter()
        .zip(&exits)
        .map(|((_, p), e)| {
            let mut v = p.to_vec();
            v.push(e.as_str());
            v
        })
        .collect();
    let refs: Vec<(&str, &[&str])> = paths
        .iter()
        .zip(&owned)
        .map(|((n, _), p)| (*n, p.as_slice()))
        .collect();
    named(name, &refs)
}

const TRI3: [(&str, &[&str]); 3] = [("r0", &["a", "b"]), ("r1", &["b", "c"]), ("r2", &["c", "a"])];

const HEX3: [(&str, &[&str]); 3] = [
    ("r0", &["s0", "m0", "m1", "s1"]),
    ("r1", &["s1", "m2", "m0", "s2"]),
    ("r2", &["s2", "m1", "m2", "s0"]),
];

const SPIRAL3: [(&str, &[&str]); 3] = [
    ("r0", &["s0", "m0", "m1", "s1"]),
    ("r1", &["s1", "m1", "m2", "s2"]),
    ("r2", &["s2", "m2", "m0", "s0"]),
];

const PASS2: [(&str, &[&str]); 2] = [("r0", &["a", "c", "b"]), ("r1", &["b", "c", "a"])];

const FIG4B: [(&str, &[&str]); 4] = [
    ("r0", &["s0", "s1"]),
    ("r1", &["s1", "m", "s2"]),
    ("r2", &["s2", "s3"]),
    ("r3", &["s3", "m", "s0"]),
];

const FIG6: [(&str, &[&str]); 9] = [
    ("r0", &["s0", "s1"]),
    ("r1", &["s1", "a0", "a5", "s2"]),
    ("r2", &["s2", "a1", "a0", "s3"]),
    ("r3", &["s3", "s4"]),
    ("r4", &["s4", "s5"]),
    ("r5", &["s5", "a2", "a1", "s6"]),
    ("r6", &["s6", "a3", "a2", "s7"]),
    ("r7", &["s7", "a4", "a3", "s8"]),
    ("r8", &["s8", "a5", "a4", "s0"]),
];

/// Triangle where every robot's target is the next robot's source.
pub fn tri3() -> Instance {
    named("tri3", &TRI3)
}

pub fn tri3_exits() -> Instance {
    with_exits("tri3+exits", &TRI3)
}

/// Cycle-path graph of a three-robot cycle with no scout and no knot.
pub fn hex3() -> Instance {
    named("hex3", &HEX3)
}

pub fn hex3_exits() -> Instance {
    with_exits("hex3+exits", &HEX3)
}

/// Like HEX3 but every middle vertex closes a one-free-vertex cycle.
pub fn spiral3() -> Instance {
    named("spiral3", &SPIRAL3)
}

pub fn spiral3_exits() -> Instance {
    with_exits("spiral3+exits", &SPIRAL3)
}

/// Two robots passing head-on through `c`.
pub fn pass2() -> Instance {
    named("pass2", &PASS2)
}

pub fn pass2_exits() -> Instance {
    with_exits("pass2+exits", &PASS2)
}

/// Three robots; `r0` and `r1` use edge `b-c` in opposite directions.
pub fn fig1() -> Instance {
    named(
        "fig1",
        &[
            ("r0", &["e", "c", "b", "f"]),
            ("r1", &["a", "b", "c", "d"]),
            ("r2", &["g", "e", "h"]),
        ],
    )
}

/// Six-robot cycle where `r0` owns the private vertex `p`.
pub fn fig2() -> Instance {
    named(
        "fig2",
        &[
            ("r0", &["s0", "p", "s1", "e0"]),
            ("r1", &["s1", "s2", "e1"]),
            ("r2", &["s2", "s3", "e2"]),
            ("r3", &["s3", "s4", "e3"]),
            ("r4", &["s4", "s5", "e4"]),
            ("r5", &["s5", "s0", "e5"]),
        ],
    )
}

/// Four robots around a shared middle vertex; deadlocks whoever goes first.
pub fn fig4b() -> Instance {
    with_exits("fig4b", &FIG4B)
}

/// Nine-robot irreducible cycle with six blocks.
pub fn fig6() -> Instance {
    named("fig6", &FIG6)
}

pub fn fig6_exits() -> Instance {
    with_exits("fig6+exits", &FIG6)
}

/// Instance in which a block head moves in three separate episodes.
pub fn three_episodes() -> Instance {
    hex3_exits()
}

/// Pivot instance with three pairs and three constraints.
pub fn fig8_pivot() -> PivotInstance {
    // Jobs: x_i at 2i, y_i at 2i+1.
    PivotInstance::new(3, alloc::vec![[1, 3, 4], [0, 3, 4], [0, 2, 5]])
        .expect("well-formed")
}

/// `(x1) ∧ (¬x1)` with each literal tripled.
pub fn contradiction_cnf() -> crate::hardness::CnfFormula {
    let p = Literal::pos(0);
    let n = Literal::neg(0);
    crate::hardness::CnfFormula::new(1, alloc::vec![[p, p, p], [n, n, n]]).expect("well-formed")
}

/// Every named instance fixture.
pub fn all() -> Vec<Instance> {
    alloc::vec![
        tri3(),
        tri3_exits(),
        hex3(),
        hex3_exits(),
        spiral3(),
        spiral3_exits(),
        pass2(),
        pass2_exits(),
        fig1(),
        fig2(),
        fig4b(),
        fig6(),
        fig6_exits(),
    ]
}

/// Looks up a fixture by its preset name (`hex3`, `spiral3+exits`, ...).
pub fn preset(name: &str) -> Option<Instance> {
    all().into_iter().find(|i| i.name.as_deref() == Some(name))
}
