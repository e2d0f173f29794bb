//! Wall-clock scaling of the solver on generated families.

use std::time::Instant;

use mrmp_core::generate::Family;
use mrmp_core::solver::{solve, SolveOutcome, SolverError};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct SizeReport {
    pub requested: usize,
    pub total_length: usize,
    pub robots: usize,
    pub outcome: &'static str,
    pub samples_ms: Vec<f64>,
    pub median_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub family: &'static str,
    pub repetitions: usize,
    pub sizes: Vec<SizeReport>,
    /// `median[i + 1] / median[i]` for consecutive sizes.
    pub ratios: Vec<f64>,
}

pub fn median(samples: &[f64]) -> f64 {
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let n = s.len();
    if n == 0 {
        0.0
    } else if n % 2 == 1 {
        s[n / 2]
    } else {
        (s[n / 2 - 1] + s[n / 2]) / 2.0
    }
}

fn outcome_name(o: &SolveOutcome) -> &'static str {
    match o {
        SolveOutcome::Plan(_) => "plan",
        SolveOutcome::Infeasible { .. } => "infeasible",
        SolveOutcome::Unsupported(_) => "unsupported",
    }
}

/// Times `solve` `repetitions` times per size after one untimed warm-up run.
/// Instance construction is not timed.
pub fn run(
    family: Family,
    sizes: &[usize],
    repetitions: usize,
    seed: u64,
) -> Result<BenchReport, SolverError> {
    let reps = repetitions.max(1);
    let mut out = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let inst = family.build(size, seed);
        let outcome = solve(&inst)?;
        let mut samples = Vec::with_capacity(reps);
        for _ in 0..reps {
            let t = Instant::now();
            let o = solve(&inst)?;
            samples.push(t.elapsed().as_secs_f64() * 1e3);
            drop(o);
        }
        log::info!(
            "{} L={} median {:.3} ms",
            family.name(),
            inst.total_path_length(),
            median(&samples)
        );
        out.push(SizeReport {
            requested: size,
            total_length: inst.total_path_length(),
            robots: inst.robot_count(),
            outcome: outcome_name(&outcome),
            median_ms: median(&samples),
            samples_ms: samples,
        });
    }
    let ratios = out
        .windows(2)
        .map(|w| w[1].median_ms / w[0].median_ms.max(1e-9))
        .collect();
    Ok(BenchReport {
        family: family.name(),
        repetitions: reps,
        sizes: out,
        ratios,
    })
}
