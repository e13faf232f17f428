//! Text documents for forms, assignments and reduction layouts.
//!
//! A form document is a JSON object:
//!
//! ```json
//! {
//!   "players": 2,
//!   "dims": [2, 3],
//!   "outcomes": ["a", "b", "c"],
//!   "cells": {"dense": ["a", "b", "c", "b", "c", null]}
//! }
//! ```
//!
//! Dense cells are row-major with the last coordinate fastest; `null` is an
//! undefined cell. The sparse variant lists `[[coords...], "name"]` pairs and
//! leaves every other cell undefined. The name `*` is reserved for the filler
//! outcome and is only accepted in documents with no undefined cell.
//!
//! An assignment document is `{"assign": [["a", null], ["c", "b", "b"]]}`,
//! one list per player.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::{Alphabet, Assignment, GameForm, Outcome, STAR};
use crate::hardness::Layout;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cells {
    Dense(Vec<Option<String>>),
    Sparse(Vec<(Vec<usize>, String)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFormDocument {
    pub players: usize,
    pub dims: Vec<usize>,
    pub outcomes: Vec<String>,
    pub cells: Cells,
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "{what}: line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

impl GameFormDocument {
    pub fn from_form(g: &GameForm, sparse: bool) -> Self {
        let cells = if sparse {
            Cells::Sparse(
                (0..g.len())
                    .filter_map(|i| g.label(i).map(|l| (g.coords(i), l.to_string())))
                    .collect(),
            )
        } else {
            Cells::Dense(
                (0..g.len())
                    .map(|i| g.label(i).map(str::to_string))
                    .collect(),
            )
        };
        GameFormDocument {
            players: g.n(),
            dims: g.dims().to_vec(),
            outcomes: g.alphabet().names().to_vec(),
            cells,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text, "form document")
    }

    pub fn to_form(&self) -> Result<GameForm> {
        if self.players != self.dims.len() {
            return Err(Error::Validation(format!(
                "players is {} but dims has {} entries",
                self.players,
                self.dims.len()
            )));
        }
        let alphabet = Alphabet::new(self.outcomes.iter().cloned())
            .map_err(|e| Error::Validation(e.to_string()))?;
        let lookup = |name: &str| -> Result<Outcome> {
            alphabet
                .get(name)
                .ok_or_else(|| Error::Validation(format!("outcome {name:?} is not declared")))
        };
        let p: usize = self.dims.iter().product();
        let cells: Vec<Option<Outcome>> = match &self.cells {
            Cells::Dense(list) => {
                if list.len() != p {
                    return Err(Error::Validation(format!(
                        "{} dense cells for dims {:?} (expected {p})",
                        list.len(),
                        self.dims
                    )));
                }
                list.iter()
                    .map(|c| c.as_deref().map(lookup).transpose())
                    .collect::<Result<_>>()?
            }
            Cells::Sparse(list) => {
                let mut cells = vec![None; p];
                let mut seen = HashSet::new();
                for (coords, name) in list {
                    if coords.len() != self.dims.len()
                        || coords.iter().zip(&self.dims).any(|(&c, &d)| c >= d)
                    {
                        return Err(Error::Validation(format!(
                            "sparse coordinate {coords:?} outside dims {:?}",
                            self.dims
                        )));
                    }
                    if !seen.insert(coords.clone()) {
                        return Err(Error::Validation(format!(
                            "sparse coordinate {coords:?} repeated"
                        )));
                    }
                    let flat = coords
                        .iter()
                        .zip(&self.dims)
                        .fold(0usize, |acc, (&c, &d)| acc * d + c);
                    cells[flat] = Some(lookup(name)?);
                }
                cells
            }
        };
        if alphabet.get(STAR).is_some() && cells.iter().any(Option::is_none) {
            return Err(Error::Validation(format!(
                "outcome name {STAR:?} is reserved for fully defined documents"
            )));
        }
        GameForm::new(self.dims.clone(), alphabet, cells)
            .map_err(|e| Error::Validation(e.to_string()))
    }

    /// JSON with the dense cells broken into rows of the last extent.
    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string");
        let join = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"players\": {},\n", self.players));
        out.push_str(&format!("  \"dims\": [{}],\n", join(&self.dims)));
        out.push_str(&format!(
            "  \"outcomes\": [{}],\n",
            self.outcomes
                .iter()
                .map(|s| q(s))
                .collect::<Vec<_>>()
                .join(", ")
        ));
        let rows: Vec<String> = match &self.cells {
            Cells::Dense(list) => {
                let width = self.dims.last().copied().unwrap_or(1).max(1);
                list.chunks(width)
                    .map(|row| {
                        row.iter()
                            .map(|c| c.as_deref().map_or("null".to_string(), q))
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                    .collect()
            }
            Cells::Sparse(pairs) => pairs
                .iter()
                .map(|(c, name)| format!("[[{}], {}]", join(c), q(name)))
                .collect(),
        };
        let tag = if matches!(self.cells, Cells::Dense(_)) {
            "dense"
        } else {
            "sparse"
        };
        if rows.is_empty() {
            out.push_str(&format!("  \"cells\": {{\"{tag}\": []}}\n"));
        } else {
            out.push_str(&format!("  \"cells\": {{\"{tag}\": [\n    "));
            out.push_str(&rows.join(",\n    "));
            out.push_str("\n  ]}\n");
        }
        out.push_str("}\n");
        out
    }
}

pub fn read_form(text: &str) -> Result<GameForm> {
    GameFormDocument::parse(text)?.to_form()
}

pub fn write_form(g: &GameForm, sparse: bool) -> String {
    GameFormDocument::from_form(g, sparse).to_json()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentDocument {
    pub assign: Vec<Vec<Option<String>>>,
}

impl AssignmentDocument {
    pub fn from_assignment(a: &Assignment, alphabet: &Alphabet) -> Self {
        AssignmentDocument {
            assign: a
                .entries()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.map(|o| alphabet.name(o).to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text, "assignment document")
    }

    /// Resolves names against `form`, checking the shape.
    pub fn to_assignment(&self, form: &GameForm) -> Result<Assignment> {
        let shape: Vec<usize> = self.assign.iter().map(Vec::len).collect();
        if shape != form.dims() {
            return Err(Error::Validation(format!(
                "assignment shape {shape:?} does not match dims {:?}",
                form.dims()
            )));
        }
        let entries = self
            .assign
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        e.as_deref()
                            .map(|name| {
                                form.alphabet().get(name).ok_or_else(|| {
                                    Error::Validation(format!(
                                        "outcome {name:?} is not in the form"
                                    ))
                                })
                            })
                            .transpose()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Assignment::new(entries))
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .assign
            .iter()
            .map(|row| serde_json::to_string(row).expect("strings"))
            .collect();
        format!("{{\"assign\": [\n  {}\n]}}\n", rows.join(",\n  "))
    }
}

pub fn write_assignment(a: &Assignment, alphabet: &Alphabet) -> String {
    AssignmentDocument::from_assignment(a, alphabet).to_json()
}

pub fn read_assignment(text: &str, form: &GameForm) -> Result<Assignment> {
    AssignmentDocument::parse(text)?.to_assignment(form)
}

pub fn write_layout(layout: &Layout) -> String {
    let mut s = serde_json::to_string_pretty(layout).expect("layout serializes");
    s.push('\n');
    s
}

pub fn read_layout(text: &str) -> Result<Layout> {
    parse_json(text, "layout document")
}
