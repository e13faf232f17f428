//! CNF encoding of assignability and DIMACS text I/O.
//!
//! Variable `y[i][j][k]` states that strategy `j` of player `i` is labelled
//! with outcome `k`. Variables exist only for outcomes occurring in the
//! corresponding hyperplane: a label that appears nowhere in its hyperplane
//! covers nothing, so dropping it from a model keeps the model feasible.

use std::fmt::Write as _;

use crate::assign::for_each_profile;
use crate::error::{Error, Result};
use crate::form::{Assignment, GameForm, Outcome, UNDEFINED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub player: usize,
    pub strategy: usize,
    pub outcome: Outcome,
}

/// Clauses in flat storage. Literals are non-zero signed variable ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    lits: Vec<i32>,
    starts: Vec<usize>,
    varmap: Vec<Var>,
    /// `(player, strategy)` → sorted `(outcome, var)` pairs
    lookup: Vec<Vec<Vec<(Outcome, u32)>>>,
}

impl CnfFormula {
    /// A formula without a variable map.
    pub fn from_clauses(num_vars: usize, clauses: &[Vec<i32>]) -> Result<Self> {
        let mut f = CnfFormula {
            num_vars,
            starts: vec![0],
            ..Default::default()
        };
        for c in clauses {
            f.push_clause(c)?;
        }
        Ok(f)
    }

    pub(crate) fn push_clause(&mut self, clause: &[i32]) -> Result<()> {
        if clause.is_empty() {
            return Err(Error::argument("empty clause"));
        }
        if let Some(&bad) = clause
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > self.num_vars)
        {
            return Err(Error::argument(format!(
                "literal {bad} out of range for {} variables",
                self.num_vars
            )));
        }
        self.lits.extend_from_slice(clause);
        self.starts.push(self.lits.len());
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.starts.len() - 1
    }

    pub fn clause(&self, i: usize) -> &[i32] {
        &self.lits[self.starts[i]..self.starts[i + 1]]
    }

    pub fn clauses(&self) -> impl Iterator<Item = &[i32]> + '_ {
        (0..self.num_clauses()).map(|i| self.clause(i))
    }

    /// Variable `id` (1-based) as a `(player, strategy, outcome)` triple.
    pub fn var(&self, id: u32) -> Option<Var> {
        self.varmap.get((id as usize).checked_sub(1)?).copied()
    }

    pub fn varmap(&self) -> &[Var] {
        &self.varmap
    }

    pub fn var_id(&self, player: usize, strategy: usize, outcome: Outcome) -> Option<u32> {
        let list = self.lookup.get(player)?.get(strategy)?;
        list.binary_search_by_key(&outcome, |&(o, _)| o)
            .ok()
            .map(|i| list[i].1)
    }

    /// Reads a model (indexed by variable id, index 0 unused) back into an
    /// assignment shaped after `dims`.
    pub fn decode(&self, dims: &[usize], model: &[bool]) -> Assignment {
        let mut a = Assignment::unassigned(dims);
        for (idx, v) in self.varmap.iter().enumerate() {
            if model.get(idx + 1).copied().unwrap_or(false) && a.get(v.player, v.strategy).is_none()
            {
                a.set(v.player, v.strategy, Some(v.outcome));
            }
        }
        a
    }

    /// The model corresponding to an assignment.
    pub fn model_of(&self, a: &Assignment) -> Vec<bool> {
        let mut model = vec![false; self.num_vars + 1];
        for (idx, v) in self.varmap.iter().enumerate() {
            model[idx + 1] = a.get(v.player, v.strategy) == Some(v.outcome);
        }
        model
    }

    pub fn is_satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses().all(|c| {
            c.iter().any(|&l| {
                let v = model
                    .get(l.unsigned_abs() as usize)
                    .copied()
                    .unwrap_or(false);
                v == (l > 0)
            })
        })
    }
}

/// Cover clauses (one per defined cell, row-major) followed by pairwise
/// at-most-one clauses per strategy.
pub fn encode(form: &GameForm) -> CnfFormula {
    let n = form.n();
    let q = form.alphabet().len();
    let mut occurs: Vec<Vec<Vec<bool>>> = form
        .dims()
        .iter()
        .map(|&d| vec![vec![false; q]; d])
        .collect();
    for_each_profile(form.dims(), |idx, x| {
        let v = form.raw(idx);
        if v != UNDEFINED {
            for i in 0..n {
                occurs[i][x[i]][v as usize] = true;
            }
        }
    });

    let mut varmap = Vec::new();
    let mut lookup: Vec<Vec<Vec<(Outcome, u32)>>> = Vec::with_capacity(n);
    for (player, per_strategy) in occurs.iter().enumerate() {
        let mut row = Vec::with_capacity(per_strategy.len());
        for (strategy, seen) in per_strategy.iter().enumerate() {
            let mut list = Vec::new();
            for k in (0..q).filter(|&k| seen[k]) {
                let outcome = Outcome(k as u32);
                varmap.push(Var {
                    player,
                    strategy,
                    outcome,
                });
                list.push((outcome, varmap.len() as u32));
            }
            row.push(list);
        }
        lookup.push(row);
    }
    let mut f = CnfFormula {
        num_vars: varmap.len(),
        lits: Vec::new(),
        starts: vec![0],
        varmap,
        lookup,
    };

    let mut clause = Vec::with_capacity(n);
    for_each_profile(form.dims(), |idx, x| {
        let v = form.raw(idx);
        if v == UNDEFINED {
            return;
        }
        clause.clear();
        for (i, &xi) in x.iter().enumerate() {
            let id = f
                .var_id(i, xi, Outcome(v))
                .expect("occurring outcome has a variable");
            clause.push(id as i32);
        }
        f.lits.extend_from_slice(&clause);
        f.starts.push(f.lits.len());
    });

    for player in 0..n {
        for strategy in 0..form.dims()[player] {
            let ids: Vec<u32> = f.lookup[player][strategy]
                .iter()
                .map(|&(_, id)| id)
                .collect();
            for (a, &k) in ids.iter().enumerate() {
                for &l in &ids[a + 1..] {
                    f.lits.push(-(k as i32));
                    f.lits.push(-(l as i32));
                    f.starts.push(f.lits.len());
                }
            }
        }
    }
    f
}

pub fn emit_dimacs(f: &CnfFormula) -> String {
    let mut out = String::new();
    for (idx, v) in f.varmap.iter().enumerate() {
        let _ = writeln!(
            out,
            "c var {} = y[{}][{}][{}]",
            idx + 1,
            v.player,
            v.strategy,
            v.outcome.0
        );
    }
    let _ = writeln!(out, "p cnf {} {}", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        for l in c {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF text. `c var` comment lines, when present for every
/// variable, restore the variable map.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut varmap: Vec<(u32, Var)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('c') {
            if let Some(v) = parse_var_comment(rest.trim()) {
                varmap.push(v);
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if header.is_some() {
                return Err(at("duplicate header".into()));
            }
            match parts.as_slice() {
                ["cnf", v, c] => {
                    let v = v
                        .parse()
                        .map_err(|_| at(format!("bad variable count {v:?}")))?;
                    let c = c
                        .parse()
                        .map_err(|_| at(format!("bad clause count {c:?}")))?;
                    header = Some((v, c));
                }
                _ => return Err(at(format!("bad header {line:?}"))),
            }
            continue;
        }
        if header.is_none() {
            return Err(at("clause before header".into()));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| at(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(at("empty clause".into()));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| Error::Parse("missing header".into()))?;
    if !current.is_empty() {
        return Err(Error::Parse("last clause is not terminated by 0".into()));
    }
    if clauses.len() != num_clauses {
        return Err(Error::Parse(format!(
            "header declares {num_clauses} clauses, found {}",
            clauses.len()
        )));
    }
    let mut f =
        CnfFormula::from_clauses(num_vars, &clauses).map_err(|e| Error::Parse(e.to_string()))?;
    varmap.sort_by_key(|&(id, _)| id);
    let complete = varmap.len() == num_vars
        && varmap
            .iter()
            .enumerate()
            .all(|(i, &(id, _))| id as usize == i + 1);
    if complete {
        f.varmap = varmap.into_iter().map(|(_, v)| v).collect();
        let players = f.varmap.iter().map(|v| v.player + 1).max().unwrap_or(0);
        let mut lookup: Vec<Vec<Vec<(Outcome, u32)>>> = vec![Vec::new(); players];
        for (idx, v) in f.varmap.iter().enumerate() {
            let row = &mut lookup[v.player];
            if row.len() <= v.strategy {
                row.resize(v.strategy + 1, Vec::new());
            }
            row[v.strategy].push((v.outcome, idx as u32 + 1));
        }
        for list in lookup.iter_mut().flatten() {
            list.sort();
        }
        f.lookup = lookup;
    }
    Ok(f)
}

fn parse_var_comment(s: &str) -> Option<(u32, Var)> {
    let rest = s.strip_prefix("var ")?;
    let (id, rest) = rest.split_once(" = y[")?;
    let rest = rest.strip_suffix(']')?;
    let mut parts = rest.split("][");
    let player = parts.next()?.parse().ok()?;
    let strategy = parts.next()?.parse().ok()?;
    let outcome = Outcome(parts.next()?.parse().ok()?);
    if parts.next().is_some() {
        return None;
    }
    Some((
        id.trim().parse().ok()?,
        Var {
            player,
            strategy,
            outcome,
        },
    ))
}
