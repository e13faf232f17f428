//! Exactly-three-literal CNF formulas.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 3-CNF over variables `1..=num_vars`; literals are signed DIMACS ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCnf {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl ThreeCnf {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        let phi = ThreeCnf { num_vars, clauses };
        phi.validate()?;
        Ok(phi)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, c) in self.clauses.iter().enumerate() {
            for (q, &lit) in c.iter().enumerate() {
                if lit == 0 || lit.unsigned_abs() as usize > self.num_vars {
                    return Err(Error::Validation(format!(
                        "clause {} {:?}: literal {lit} outside variables 1..={}",
                        i + 1,
                        c,
                        self.num_vars
                    )));
                }
                if c[..q].iter().any(|&o| o.abs() == lit.abs()) {
                    return Err(Error::Validation(format!(
                        "clause {} {:?}: variable {} occurs twice",
                        i + 1,
                        c,
                        lit.abs()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// `values[v - 1]` is the value of variable `v`.
    pub fn evaluate(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                values
                    .get(l.unsigned_abs() as usize - 1)
                    .copied()
                    .unwrap_or(false)
                    == (l > 0)
            })
        })
    }

    /// How often each variable occurs; index 0 unused.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_vars + 1];
        for c in &self.clauses {
            for &l in c {
                counts[l.unsigned_abs() as usize] += 1;
            }
        }
        counts
    }

    /// Parses DIMACS CNF. Every clause must have exactly three literals over
    /// distinct variables.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(Error::Parse(format!(
                        "line {}: bad header {line:?}",
                        lineno + 1
                    )));
                }
                let nv = parts[2].parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad variable count", lineno + 1))
                })?;
                let nc = parts[3]
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {}: bad clause count", lineno + 1)))?;
                header = Some((nv, nc));
                continue;
            }
            if header.is_none() {
                return Err(Error::Parse(format!(
                    "line {}: clause before header",
                    lineno + 1
                )));
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad literal {tok:?}", lineno + 1))
                })?;
                if lit == 0 {
                    let clause = std::mem::take(&mut current);
                    let arr: [i32; 3] = clause.as_slice().try_into().map_err(|_| {
                        Error::Validation(format!(
                            "clause {} {:?} has {} literals, expected 3",
                            clauses.len() + 1,
                            clause,
                            clause.len()
                        ))
                    })?;
                    clauses.push(arr);
                } else {
                    current.push(lit);
                }
            }
        }
        let (nv, nc) = header.ok_or_else(|| Error::Parse("missing `p cnf` header".into()))?;
        if !current.is_empty() {
            return Err(Error::Parse("last clause is not terminated by 0".into()));
        }
        if clauses.len() != nc {
            return Err(Error::Parse(format!(
                "header declares {nc} clauses, found {}",
                clauses.len()
            )));
        }
        ThreeCnf::new(nv, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }

    /// All eight sign patterns over variables 1, 2, 3.
    pub fn all_patterns() -> Self {
        let clauses = (0..8)
            .map(|bits| {
                let s = |b: i32, v: i32| if bits >> b & 1 == 1 { -v } else { v };
                [s(2, 1), s(1, 2), s(0, 3)]
            })
            .collect();
        ThreeCnf {
            num_vars: 3,
            clauses,
        }
    }
}
