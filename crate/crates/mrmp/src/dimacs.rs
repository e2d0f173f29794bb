//! DIMACS CNF reader and writer for 3-CNF formulas.
//!
//! Clauses with one or two literals are padded by repeating their last
//! literal. Longer clauses and empty clauses are rejected.

use mrmp_core::hardness::{CnfFormula, Literal};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {0}: missing or malformed problem line")]
    Header(usize),
    #[error("line {line}: bad literal {token:?}")]
    Literal { line: usize, token: String },
    #[error("line {line}: variable {var} exceeds declared {vars}")]
    Range { line: usize, var: u64, vars: u32 },
    #[error("clause {0} has {1} literals, expected 1 to 3")]
    Width(usize, usize),
    #[error("declared {declared} clauses, found {found}")]
    Count { declared: usize, found: usize },
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            let f: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || f.len() != 4 || f[1] != "cnf" {
                return Err(DimacsError::Header(n));
            }
            let vars = f[2].parse().map_err(|_| DimacsError::Header(n))?;
            let count = f[3].parse().map_err(|_| DimacsError::Header(n))?;
            header = Some((vars, count));
            continue;
        }
        let (vars, _) = header.ok_or(DimacsError::Header(n))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| DimacsError::Literal {
                line: n,
                token: tok.to_owned(),
            })?;
            if lit == 0 {
                clauses.push(pad(&current, clauses.len())?);
                current.clear();
                continue;
            }
            let var = lit.unsigned_abs();
            if var > u64::from(vars) {
                return Err(DimacsError::Range { line: n, var, vars });
            }
            current.push(Literal {
                var: var as u32 - 1,
                positive: lit > 0,
            });
        }
    }
    let (vars, declared) = header.ok_or(DimacsError::Header(text.lines().count()))?;
    if !current.is_empty() {
        clauses.push(pad(&current, clauses.len())?);
    }
    if clauses.len() != declared {
        return Err(DimacsError::Count {
            declared,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula::new(vars, clauses).expect("variables checked while reading"))
}

fn pad(lits: &[Literal], index: usize) -> Result<[Literal; 3], DimacsError> {
    match *lits {
        [a] => Ok([a, a, a]),
        [a, b] => Ok([a, b, b]),
        [a, b, c] => Ok([a, b, c]),
        _ => Err(DimacsError::Width(index, lits.len())),
    }
}

pub fn to_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.vars(), phi.clauses().len());
    for c in phi.clauses() {
        for l in c {
            let v = i64::from(l.var) + 1;
            out.push_str(&format!("{} ", if l.positive { v } else { -v }));
        }
        out.push_str("0\n");
    }
    out
}
