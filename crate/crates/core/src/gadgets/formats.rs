//! Text inputs for the reductions.
//!
//! Formulas are DIMACS-like: `c` comment lines, an optional `p cnf <vars>
//! <clauses>` header, then one clause per line as three positive 1-based
//! variables with an optional trailing `0`.
//!
//! Graphs are edge lists of 0-based vertices, one `u v` per line, with
//! optional `vertices <n>` and `part <v> <class>` lines; `#` starts a comment.

use crate::error::{Error, Result};

use super::graphs::PartitionedGraph;
use super::sat::Formula1in3;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: &str, line: usize) -> Result<i64> {
    tok.parse().map_err(|_| parse_err(line, format!("expected an integer, found {tok:?}")))
}

pub fn parse_formula(text: &str) -> Result<Formula1in3> {
    let mut declared: Option<usize> = None;
    let mut clauses = Vec::new();
    let mut max_var = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first() {
            None => continue,
            Some(&"c") | Some(&"%") => continue,
            Some(&"p") => {
                if toks.len() != 4 || toks[1] != "cnf" {
                    return Err(parse_err(line, "header must read `p cnf <vars> <clauses>`"));
                }
                declared = Some(number(toks[2], line)?.max(0) as usize);
                continue;
            }
            _ => {}
        }
        let mut lits: Vec<i64> = toks.iter().map(|t| number(t, line)).collect::<Result<_>>()?;
        if lits.last() == Some(&0) {
            lits.pop();
        }
        if lits.len() != 3 {
            return Err(parse_err(line, format!("a clause has exactly 3 literals, found {}", lits.len())));
        }
        let mut clause = [0usize; 3];
        for (slot, &l) in clause.iter_mut().zip(&lits) {
            if l <= 0 {
                return Err(parse_err(line, format!("literal {l} is not a positive variable")));
            }
            *slot = l as usize - 1;
            max_var = max_var.max(l as usize);
        }
        clauses.push(clause);
    }
    let n_vars = match declared {
        Some(n) if n < max_var => {
            return Err(Error::InvalidFormula(format!("header declares {n} variables, clause uses {max_var}")))
        }
        Some(n) => n,
        None => max_var,
    };
    Formula1in3::new(n_vars, clauses)
}

pub fn parse_graph(text: &str) -> Result<PartitionedGraph> {
    let mut n = 0usize;
    let mut edges = Vec::new();
    let mut parts: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let idx = |t: &str| -> Result<usize> {
            let x = number(t, line)?;
            usize::try_from(x).map_err(|_| parse_err(line, format!("negative index {x}")))
        };
        match toks.as_slice() {
            [] => {}
            ["vertices", k] => n = n.max(idx(k)?),
            ["part", v, c] => {
                let v = idx(v)?;
                n = n.max(v + 1);
                parts.push((v, idx(c)?));
            }
            [u, v] => {
                let (u, v) = (idx(u)?, idx(v)?);
                n = n.max(u.max(v) + 1);
                edges.push((u, v));
            }
            _ => return Err(parse_err(line, format!("unrecognized line {:?}", raw.trim()))),
        }
    }
    let classes = if parts.is_empty() {
        None
    } else {
        let mut c = vec![None; n];
        for (v, class) in parts {
            if c[v].replace(class).is_some_and(|old| old != class) {
                return Err(Error::NotPartite(format!("vertex {v} has two classes")));
            }
        }
        Some(
            c.into_iter()
                .enumerate()
                .map(|(v, x)| x.ok_or_else(|| Error::NotPartite(format!("vertex {v} has no class"))))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    PartitionedGraph::new(n, edges, classes)
}
