//! Direct backtracking over assignments, independent of the CNF encoding.
//!
//! The search repeatedly takes the first uncovered defined cell in row-major
//! order and tries each player whose strategy at that cell is still free.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::form::{Assignment, GameForm, Outcome, UNDEFINED};

/// Default size limit for the brute-force search, in bits of assignment space.
pub const DEFAULT_BRUTE_BUDGET_BITS: f64 = 64.0;

/// `Σ s_i · log2(|A| + 1)`: the number of bits needed to write down an
/// arbitrary assignment, unassigned entries included.
pub fn brute_cost_bits(form: &GameForm) -> f64 {
    form.strategy_count() as f64 * ((form.alphabet().len() + 1) as f64).log2()
}

fn check_budget(form: &GameForm, budget_bits: f64) -> Result<()> {
    let cost = brute_cost_bits(form);
    if cost > budget_bits {
        return Err(Error::Capacity(format!(
            "brute-force search space of {cost:.1} bits exceeds the budget of {budget_bits:.1} bits"
        )));
    }
    Ok(())
}

struct Search<'a> {
    form: &'a GameForm,
    n: usize,
    coords: Vec<usize>,
    entries: Vec<Vec<u32>>,
}

impl<'a> Search<'a> {
    fn new(form: &'a GameForm) -> Self {
        let n = form.n();
        let mut coords = Vec::with_capacity(form.len() * n);
        for idx in 0..form.len() {
            coords.extend(form.coords(idx));
        }
        Search {
            form,
            n,
            coords,
            entries: form.dims().iter().map(|&d| vec![UNDEFINED; d]).collect(),
        }
    }

    fn covered(&self, idx: usize, v: u32) -> bool {
        let x = &self.coords[idx * self.n..(idx + 1) * self.n];
        (0..self.n).any(|i| self.entries[i][x[i]] == v)
    }

    fn assignment(&self) -> Assignment {
        Assignment::new(
            self.entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&e| (e != UNDEFINED).then_some(Outcome(e)))
                        .collect()
                })
                .collect(),
        )
    }

    fn run(
        &mut self,
        from: usize,
        leaf: &mut dyn FnMut(&Self) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let mut idx = from;
        while idx < self.form.len() {
            let v = self.form.raw(idx);
            if v != UNDEFINED && !self.covered(idx, v) {
                break;
            }
            idx += 1;
        }
        if idx == self.form.len() {
            return leaf(self);
        }
        let v = self.form.raw(idx);
        for i in 0..self.n {
            let xi = self.coords[idx * self.n + i];
            if self.entries[i][xi] == UNDEFINED {
                self.entries[i][xi] = v;
                let flow = self.run(idx + 1, leaf);
                self.entries[i][xi] = UNDEFINED;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    /// No assigned entry can be dropped without uncovering a cell.
    fn is_minimal(&self) -> bool {
        let mut needed: Vec<Vec<bool>> = self
            .entries
            .iter()
            .map(|row| vec![false; row.len()])
            .collect();
        for idx in 0..self.form.len() {
            let v = self.form.raw(idx);
            if v == UNDEFINED {
                continue;
            }
            let x = &self.coords[idx * self.n..(idx + 1) * self.n];
            let mut only = None;
            let mut count = 0;
            for (i, &xi) in x.iter().enumerate() {
                if self.entries[i][xi] == v {
                    count += 1;
                    only = Some(i);
                }
            }
            if count == 1 {
                let i = only.expect("one coverer");
                needed[i][x[i]] = true;
            }
        }
        self.entries
            .iter()
            .zip(&needed)
            .all(|(row, need)| row.iter().zip(need).all(|(&e, &nd)| e == UNDEFINED || nd))
    }
}

/// The first feasible assignment in search order, if any.
pub fn solve_brute(form: &GameForm, budget_bits: f64) -> Result<Option<Assignment>> {
    check_budget(form, budget_bits)?;
    let mut search = Search::new(form);
    let mut found = None;
    let _ = search.run(0, &mut |s| {
        found = Some(s.assignment());
        ControlFlow::Break(())
    });
    Ok(found)
}

/// Distinct minimal feasible assignments, in discovery order, at most
/// `limit` of them. Every feasible assignment extends one of these, so a
/// label shared by all of them is forced in every feasible assignment.
pub fn enumerate_minimal(
    form: &GameForm,
    budget_bits: f64,
    limit: usize,
) -> Result<Vec<Assignment>> {
    check_budget(form, budget_bits)?;
    let mut search = Search::new(form);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let _ = search.run(0, &mut |s| {
        if s.is_minimal() {
            let a = s.assignment();
            if seen.insert(a.clone()) {
                out.push(a);
                if out.len() >= limit {
                    return ControlFlow::Break(());
                }
            }
        }
        ControlFlow::Continue(())
    });
    Ok(out)
}
