//! Removal of constant and duplicate hyperplanes, with a log that lets an
//! assignment of the reduced form be lifted back to the original.
//!
//! On partially defined forms a hyperplane counts as constant only when all
//! of its cells carry the same value, where "undefined" is one such value.
//! Hyperplanes mixing defined and undefined cells are never removed.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::form::{Assignment, GameForm, Hyperplane, Outcome, UNDEFINED};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalReason {
    /// Every cell carried this value (`None` for an all-undefined hyperplane).
    Constant(Option<Outcome>),
    /// Identical to the kept hyperplane with this original index.
    Duplicate { twin: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Removal {
    pub direction: usize,
    /// Index in the original form.
    pub index: usize,
    pub reason: RemovalReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationLog {
    pub original_dims: Vec<usize>,
    /// Removals in the order they were made.
    pub removals: Vec<Removal>,
    /// For each direction, the original indices surviving in the reduced form.
    pub kept: Vec<Vec<usize>>,
}

impl NormalizationLog {
    pub fn is_empty(&self) -> bool {
        self.removals.is_empty()
    }

    /// Lifts an assignment of the reduced form to the original form.
    pub fn expand(&self, reduced: &Assignment) -> Result<Assignment> {
        let kept_shape: Vec<usize> = self.kept.iter().map(Vec::len).collect();
        if reduced.shape() != kept_shape {
            return Err(Error::argument(format!(
                "assignment shape {:?} does not match reduced dims {:?}",
                reduced.shape(),
                kept_shape
            )));
        }
        let mut out = Assignment::unassigned(&self.original_dims);
        for (dir, list) in self.kept.iter().enumerate() {
            for (pos, &orig) in list.iter().enumerate() {
                out.set(dir, orig, reduced.get(dir, pos));
            }
        }
        for r in self.removals.iter().rev() {
            let value = match r.reason {
                RemovalReason::Constant(c) => c,
                RemovalReason::Duplicate { twin } => out.get(r.direction, twin),
            };
            out.set(r.direction, r.index, value);
        }
        Ok(out)
    }
}

fn constant_value(form: &GameForm, h: Hyperplane) -> Option<u32> {
    let mut it = form.hyperplane_indices(h);
    let first = form.raw(it.next()?);
    it.all(|i| form.raw(i) == first).then_some(first)
}

pub fn normalize(form: &GameForm) -> (GameForm, NormalizationLog) {
    let n = form.n();
    let mut current = form.clone();
    let mut kept: Vec<Vec<usize>> = form.dims().iter().map(|&d| (0..d).collect()).collect();
    let mut removals = Vec::new();

    loop {
        let mut changed = false;
        for dir in 0..n {
            if current.is_empty() {
                break;
            }
            let s = current.dims()[dir];
            let mut remove = vec![false; s];
            for j in 0..s {
                if let Some(v) = constant_value(&current, Hyperplane::new(dir, j)) {
                    remove[j] = true;
                    let c = (v != UNDEFINED).then_some(Outcome(v));
                    removals.push(Removal {
                        direction: dir,
                        index: kept[dir][j],
                        reason: RemovalReason::Constant(c),
                    });
                }
            }
            let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
            for j in 0..s {
                if remove[j] {
                    continue;
                }
                let values = current.hyperplane_values(Hyperplane::new(dir, j));
                match seen.get(&values) {
                    Some(&first) => {
                        remove[j] = true;
                        removals.push(Removal {
                            direction: dir,
                            index: kept[dir][j],
                            reason: RemovalReason::Duplicate {
                                twin: kept[dir][first],
                            },
                        });
                    }
                    None => {
                        seen.insert(values, j);
                    }
                }
            }
            if remove.iter().any(|&r| r) {
                changed = true;
                let keep: Vec<Vec<usize>> = (0..n)
                    .map(|axis| {
                        (0..current.dims()[axis])
                            .filter(|&j| axis != dir || !remove[j])
                            .collect()
                    })
                    .collect();
                current = current
                    .restrict(&keep)
                    .expect("indices come from the current form");
                kept[dir] = keep[dir].iter().map(|&j| kept[dir][j]).collect();
            }
        }
        if !changed {
            break;
        }
    }

    let log = NormalizationLog {
        original_dims: form.dims().to_vec(),
        removals,
        kept,
    };
    (current, log)
}
