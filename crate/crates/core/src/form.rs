//! Game forms as dense n-dimensional arrays of optional outcomes.
//!
//! Cells are stored row-major with the last coordinate varying fastest. An
//! undefined cell holds a sentinel id outside the alphabet, so two undefined
//! cells compare equal to each other and unequal to every outcome. That is
//! exactly the "single extra outcome" view of a partial form, which lets the
//! tightness checks run on partial forms without materialising the filler.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Name of the reserved filler outcome introduced by [`GameForm::fill_undefined`].
pub const STAR: &str = "*";

pub(crate) const UNDEFINED: u32 = u32::MAX;

/// An outcome id, dense in `0..alphabet.len()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome(pub u32);

impl Outcome {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Interned outcome names.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::default();
        for name in names {
            let name = name.into();
            if name.is_empty() {
                return Err(Error::argument("outcome names must be non-empty"));
            }
            if alphabet.index.contains_key(&name) {
                return Err(Error::argument(format!("duplicate outcome name {name:?}")));
            }
            alphabet.push(name);
        }
        Ok(alphabet)
    }

    fn push(&mut self, name: String) -> Outcome {
        let id = self.names.len() as u32;
        self.index.insert(name.clone(), id);
        self.names.push(name);
        Outcome(id)
    }

    /// Returns the id of `name`, adding it when absent.
    pub fn intern(&mut self, name: &str) -> Outcome {
        match self.index.get(name) {
            Some(&id) => Outcome(id),
            None => self.push(name.to_string()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<Outcome> {
        self.index.get(name).map(|&id| Outcome(id))
    }

    pub fn name(&self, outcome: Outcome) -> &str {
        &self.names[outcome.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn outcomes(&self) -> impl Iterator<Item = Outcome> + '_ {
        (0..self.names.len() as u32).map(Outcome)
    }

    pub fn contains(&self, outcome: Outcome) -> bool {
        outcome.index() < self.names.len()
    }
}

/// The hyperplane obtained by fixing player `direction` to strategy `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub direction: usize,
    pub index: usize,
}

impl Hyperplane {
    pub fn new(direction: usize, index: usize) -> Self {
        Hyperplane { direction, index }
    }
}

/// A line in `direction`: every coordinate except `direction` is fixed.
/// `fixed` lists the remaining `n - 1` coordinates in player order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub direction: usize,
    pub fixed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameForm {
    dims: Vec<usize>,
    strides: Vec<usize>,
    alphabet: Alphabet,
    cells: Vec<u32>,
}

fn strides_for(dims: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    strides
}

impl GameForm {
    pub fn new(dims: Vec<usize>, alphabet: Alphabet, cells: Vec<Option<Outcome>>) -> Result<Self> {
        let raw = cells
            .into_iter()
            .map(|c| c.map_or(UNDEFINED, |o| o.0))
            .collect();
        Self::from_raw(dims, alphabet, raw)
    }

    pub(crate) fn from_raw(dims: Vec<usize>, alphabet: Alphabet, cells: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::argument("a game form needs at least one player"));
        }
        let p: usize = dims.iter().product();
        if cells.len() != p {
            return Err(Error::Shape(format!(
                "{} cells given for dims {:?} (expected {p})",
                cells.len(),
                dims
            )));
        }
        if let Some(&bad) = cells
            .iter()
            .find(|&&c| c != UNDEFINED && c as usize >= alphabet.len())
        {
            return Err(Error::argument(format!(
                "cell outcome id {bad} outside alphabet of size {}",
                alphabet.len()
            )));
        }
        let strides = strides_for(&dims);
        Ok(GameForm {
            dims,
            strides,
            alphabet,
            cells,
        })
    }

    /// Builds a form from whitespace separated labels in row-major order.
    /// `.` marks an undefined cell; the alphabet is interned in order of
    /// first appearance.
    pub fn from_labels(dims: &[usize], labels: &str) -> Result<Self> {
        let mut alphabet = Alphabet::default();
        let cells = labels
            .split_whitespace()
            .map(|l| {
                if l == "." {
                    UNDEFINED
                } else {
                    alphabet.intern(l).0
                }
            })
            .collect();
        Self::from_raw(dims.to_vec(), alphabet, cells)
    }

    /// Two-person form from rows such as `["a b c", "b c a"]`.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.split_whitespace().count());
        if rows.iter().any(|r| r.split_whitespace().count() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_labels(&[rows.len(), cols], &rows.join(" "))
    }

    /// Same as [`GameForm::from_labels`] but over a fixed alphabet.
    pub fn from_labels_with(dims: &[usize], alphabet: Alphabet, labels: &str) -> Result<Self> {
        let mut cells = Vec::new();
        for l in labels.split_whitespace() {
            if l == "." {
                cells.push(UNDEFINED);
            } else {
                let o = alphabet
                    .get(l)
                    .ok_or_else(|| Error::argument(format!("undeclared outcome {l:?}")))?;
                cells.push(o.0);
            }
        }
        Self::from_raw(dims.to_vec(), alphabet, cells)
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// Number of strategy profiles.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Total number of strategies over all players.
    pub fn strategy_count(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub(crate) fn raw(&self, idx: usize) -> u32 {
        self.cells[idx]
    }

    pub fn cell(&self, idx: usize) -> Option<Outcome> {
        match self.cells[idx] {
            UNDEFINED => None,
            id => Some(Outcome(id)),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Option<Outcome>> + '_ {
        (0..self.cells.len()).map(|i| self.cell(i))
    }

    pub fn label(&self, idx: usize) -> Option<&str> {
        self.cell(idx).map(|o| self.alphabet.name(o))
    }

    pub fn is_fully_defined(&self) -> bool {
        self.cells.iter().all(|&c| c != UNDEFINED)
    }

    pub fn defined_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c != UNDEFINED).count()
    }

    pub fn flat_index(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.n() {
            return Err(Error::Shape(format!(
                "expected {} coordinates, got {}",
                self.n(),
                coords.len()
            )));
        }
        let mut idx = 0;
        for (axis, (&c, &extent)) in coords.iter().zip(&self.dims).enumerate() {
            if c >= extent {
                return Err(Error::OutOfBounds {
                    axis,
                    coord: c,
                    extent,
                });
            }
            idx += c * self.strides[axis];
        }
        Ok(idx)
    }

    pub fn coords(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        for (axis, &stride) in self.strides.iter().enumerate() {
            out[axis] = idx / stride;
            idx %= stride;
        }
        out
    }

    /// Coordinate of flat index `idx` along `axis`.
    pub fn coord(&self, idx: usize, axis: usize) -> usize {
        (idx / self.strides[axis]) % self.dims[axis]
    }

    pub fn get(&self, coords: &[usize]) -> Result<Option<Outcome>> {
        Ok(self.cell(self.flat_index(coords)?))
    }

    fn check_hyperplane(&self, h: Hyperplane) -> Result<()> {
        if h.direction >= self.n() {
            return Err(Error::argument(format!(
                "direction {} out of range for {} players",
                h.direction,
                self.n()
            )));
        }
        if h.index >= self.dims[h.direction] {
            return Err(Error::OutOfBounds {
                axis: h.direction,
                coord: h.index,
                extent: self.dims[h.direction],
            });
        }
        Ok(())
    }

    /// Number of lines in `direction` (equivalently, cells per hyperplane).
    pub fn line_count(&self, direction: usize) -> usize {
        self.len().checked_div(self.dims[direction]).unwrap_or(0)
    }

    /// Flat index of the cell where line `line` in `direction` meets
    /// hyperplane `index`. Lines are numbered in row-major order of the
    /// free coordinates, so line `t` is also the `t`-th cell of every
    /// hyperplane perpendicular to `direction`.
    #[inline]
    pub fn line_cell(&self, direction: usize, line: usize, index: usize) -> usize {
        let stride = self.strides[direction];
        let block = stride * self.dims[direction];
        (line / stride) * block + (line % stride) + index * stride
    }

    /// Flat indices of the hyperplane, in row-major order of the free coordinates.
    pub fn hyperplane_indices(&self, h: Hyperplane) -> impl Iterator<Item = usize> + '_ {
        (0..self.line_count(h.direction)).map(move |t| self.line_cell(h.direction, t, h.index))
    }

    pub fn hyperplane_cells(&self, h: Hyperplane) -> Result<Vec<Vec<usize>>> {
        self.check_hyperplane(h)?;
        Ok(self.hyperplane_indices(h).map(|i| self.coords(i)).collect())
    }

    /// Raw values of hyperplane `h`, indexed by line number.
    pub(crate) fn hyperplane_values(&self, h: Hyperplane) -> Vec<u32> {
        self.hyperplane_indices(h).map(|i| self.cells[i]).collect()
    }

    pub fn lines(&self, direction: usize) -> impl Iterator<Item = Line> + '_ {
        (0..self.line_count(direction)).map(move |t| {
            let base = self.coords(self.line_cell(direction, t, 0));
            let fixed = base
                .into_iter()
                .enumerate()
                .filter(|&(axis, _)| axis != direction)
                .map(|(_, c)| c)
                .collect();
            Line { direction, fixed }
        })
    }

    pub fn line_cells(&self, line: &Line) -> Result<Vec<Vec<usize>>> {
        if line.direction >= self.n() || line.fixed.len() + 1 != self.n() {
            return Err(Error::Shape("line does not match form".into()));
        }
        let mut coords = line.fixed.clone();
        coords.insert(line.direction, 0);
        self.flat_index(&coords)?;
        Ok((0..self.dims[line.direction])
            .map(|j| {
                let mut c = coords.clone();
                c[line.direction] = j;
                c
            })
            .collect())
    }

    /// The two-person form `g^K`: rows enumerate strategy tuples of the
    /// coalition, columns those of the complement, both row-major in
    /// ascending player order.
    pub fn project(&self, coalition: &[usize]) -> Result<GameForm> {
        let n = self.n();
        let mut in_k = vec![false; n];
        for &i in coalition {
            if i >= n {
                return Err(Error::argument(format!("player {i} out of range")));
            }
            in_k[i] = true;
        }
        let k_count = in_k.iter().filter(|&&b| b).count();
        if k_count == 0 || k_count == n {
            return Err(Error::argument(
                "coalition must be a non-empty proper subset of the players",
            ));
        }
        let row_axes: Vec<usize> = (0..n).filter(|&i| in_k[i]).collect();
        let col_axes: Vec<usize> = (0..n).filter(|&i| !in_k[i]).collect();
        let rows: usize = row_axes.iter().map(|&i| self.dims[i]).product();
        let cols: usize = col_axes.iter().map(|&i| self.dims[i]).product();
        let mut cells = vec![UNDEFINED; rows * cols];
        for (idx, &value) in self.cells.iter().enumerate() {
            let mut r = 0;
            for &axis in &row_axes {
                r = r * self.dims[axis] + self.coord(idx, axis);
            }
            let mut c = 0;
            for &axis in &col_axes {
                c = c * self.dims[axis] + self.coord(idx, axis);
            }
            cells[r * cols + c] = value;
        }
        GameForm::from_raw(vec![rows, cols], self.alphabet.clone(), cells)
    }

    /// Replaces every undefined cell by the reserved outcome `*`, which is
    /// appended to the alphabet. Fully defined forms are returned unchanged.
    pub fn fill_undefined(&self) -> GameForm {
        if self.is_fully_defined() {
            return self.clone();
        }
        let mut alphabet = self.alphabet.clone();
        let star = alphabet.intern(STAR).0;
        let cells = self
            .cells
            .iter()
            .map(|&c| if c == UNDEFINED { star } else { c })
            .collect();
        GameForm {
            dims: self.dims.clone(),
            strides: self.strides.clone(),
            alphabet,
            cells,
        }
    }

    /// The subform induced by keeping, for each player, the listed strategies
    /// (in the given order).
    pub fn restrict(&self, keep: &[Vec<usize>]) -> Result<GameForm> {
        if keep.len() != self.n() {
            return Err(Error::Shape("one strategy list per player required".into()));
        }
        for (axis, list) in keep.iter().enumerate() {
            if let Some(&bad) = list.iter().find(|&&s| s >= self.dims[axis]) {
                return Err(Error::OutOfBounds {
                    axis,
                    coord: bad,
                    extent: self.dims[axis],
                });
            }
        }
        let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
        let p: usize = dims.iter().product();
        let new_strides = strides_for(&dims);
        let mut cells = Vec::with_capacity(p);
        for idx in 0..p {
            let mut src = 0;
            let mut rem = idx;
            for axis in 0..dims.len() {
                let c = rem / new_strides[axis];
                rem %= new_strides[axis];
                src += keep[axis][c] * self.strides[axis];
            }
            cells.push(self.cells[src]);
        }
        GameForm::from_raw(dims, self.alphabet.clone(), cells)
    }

    /// Removes one hyperplane.
    pub fn without_hyperplane(&self, h: Hyperplane) -> Result<GameForm> {
        self.check_hyperplane(h)?;
        let keep: Vec<Vec<usize>> = (0..self.n())
            .map(|axis| {
                (0..self.dims[axis])
                    .filter(|&j| axis != h.direction || j != h.index)
                    .collect()
            })
            .collect();
        self.restrict(&keep)
    }

    /// The `(n-1)`-person form living on hyperplane `h`, with player
    /// `h.direction` dropped.
    pub fn hyperplane_form(&self, h: Hyperplane) -> Result<GameForm> {
        self.check_hyperplane(h)?;
        if self.n() == 1 {
            return Err(Error::argument(
                "a one-person form has no proper hyperplane subform",
            ));
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .enumerate()
            .filter(|&(axis, _)| axis != h.direction)
            .map(|(_, &d)| d)
            .collect();
        let cells = self.hyperplane_values(h);
        GameForm::from_raw(dims, self.alphabet.clone(), cells)
    }

    /// Appends a new player with a single strategy.
    pub fn with_trivial_player(&self) -> GameForm {
        let mut dims = self.dims.clone();
        dims.push(1);
        GameForm {
            strides: strides_for(&dims),
            dims,
            alphabet: self.alphabet.clone(),
            cells: self.cells.clone(),
        }
    }

    /// Drops outcomes that occur in no cell, keeping the order of the rest.
    pub fn compact(&self) -> GameForm {
        let mut used = vec![false; self.alphabet.len()];
        for &c in &self.cells {
            if c != UNDEFINED {
                used[c as usize] = true;
            }
        }
        let kept = self
            .alphabet
            .names()
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(name, _)| name.clone());
        let alphabet = Alphabet::new(kept).expect("names stay distinct");
        self.with_alphabet(alphabet)
    }

    fn with_alphabet(&self, alphabet: Alphabet) -> GameForm {
        let map: Vec<u32> = self
            .alphabet
            .names()
            .iter()
            .map(|name| alphabet.get(name).map_or(UNDEFINED, |o| o.0))
            .collect();
        let cells = self
            .cells
            .iter()
            .map(|&c| if c == UNDEFINED { c } else { map[c as usize] })
            .collect();
        GameForm {
            dims: self.dims.clone(),
            strides: self.strides.clone(),
            alphabet,
            cells,
        }
    }

    /// Outcomes occurring in the defined cells of a hyperplane, ascending.
    pub fn hyperplane_outcomes(&self, h: Hyperplane) -> Vec<Outcome> {
        let mut seen = vec![false; self.alphabet.len()];
        for idx in self.hyperplane_indices(h) {
            let c = self.cells[idx];
            if c != UNDEFINED {
                seen[c as usize] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|&(_, &s)| s)
            .map(|(i, _)| Outcome(i as u32))
            .collect()
    }
}

impl fmt::Display for GameForm {
    /// Prints two-dimensional slices; higher players index the slices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |idx: usize| self.label(idx).unwrap_or(".");
        let width = (0..self.len()).map(|i| label(i).len()).max().unwrap_or(1);
        match self.n() {
            1 => {
                let row: Vec<String> = (0..self.len())
                    .map(|i| format!("{:>width$}", label(i)))
                    .collect();
                writeln!(f, "{}", row.join(" "))
            }
            _ => {
                // rows = player 0, columns = player 1, remaining players enumerate slices
                let rows = self.dims[0];
                let cols = self.dims[1];
                let slices: usize = self.dims[2..].iter().product();
                for s in 0..slices {
                    if slices > 1 {
                        let mut rest = vec![0; self.n() - 2];
                        let mut rem = s;
                        for axis in (2..self.n()).rev() {
                            rest[axis - 2] = rem % self.dims[axis];
                            rem /= self.dims[axis];
                        }
                        writeln!(f, "[.., .., {}]", join(&rest))?;
                    }
                    for r in 0..rows {
                        let mut line = Vec::with_capacity(cols);
                        for c in 0..cols {
                            let idx = r * self.strides[0] + c * self.strides[1] + s;
                            line.push(format!("{:>width$}", label(idx)));
                        }
                        writeln!(f, "{}", line.join(" "))?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Per-player, per-strategy optional outcomes: a separability certificate
/// when every defined cell is covered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    entries: Vec<Vec<Option<Outcome>>>,
}

impl Assignment {
    pub fn new(entries: Vec<Vec<Option<Outcome>>>) -> Self {
        Assignment { entries }
    }

    /// Every entry unassigned, shaped after `dims`.
    pub fn unassigned(dims: &[usize]) -> Self {
        Assignment {
            entries: dims.iter().map(|&d| vec![None; d]).collect(),
        }
    }

    pub fn players(&self) -> usize {
        self.entries.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.entries.iter().map(Vec::len).collect()
    }

    pub fn get(&self, player: usize, strategy: usize) -> Option<Outcome> {
        self.entries[player][strategy]
    }

    pub fn set(&mut self, player: usize, strategy: usize, value: Option<Outcome>) {
        self.entries[player][strategy] = value;
    }

    pub fn player(&self, player: usize) -> &[Option<Outcome>] {
        &self.entries[player]
    }

    pub fn entries(&self) -> &[Vec<Option<Outcome>>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Vec<Option<Outcome>>> {
        self.entries
    }

    pub fn assigned_count(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|e| e.is_some())
            .count()
    }

    /// Renders the assignment with outcome names, one player per line.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a Assignment, &'a Alphabet);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, row) in self.0.entries.iter().enumerate() {
                    let names: Vec<&str> = row
                        .iter()
                        .map(|e| e.map_or("-", |o| self.1.name(o)))
                        .collect();
                    writeln!(f, "player {i}: {}", names.join(" "))?;
                }
                Ok(())
            }
        }
        Show(self, alphabet)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first() -> GameForm {
        GameForm::from_rows(&["a b", "c d"]).unwrap()
    }

    #[test]
    fn get_reads_cells() {
        let g = first();
        assert_eq!(
            g.get(&[0, 0]).unwrap().map(|o| g.alphabet().name(o)),
            Some("a")
        );
        assert_eq!(
            g.get(&[1, 0]).unwrap().map(|o| g.alphabet().name(o)),
            Some("c")
        );
        let single = GameForm::from_labels(&[1], "a").unwrap();
        assert_eq!(single.label(0), Some("a"));
        assert_eq!(single.get(&[0]).unwrap(), Some(Outcome(0)));
    }

    #[test]
    fn get_rejects_out_of_range() {
        let g = first();
        assert!(matches!(
            g.get(&[2, 0]),
            Err(Error::OutOfBounds {
                axis: 0,
                coord: 2,
                extent: 2
            })
        ));
        assert!(matches!(
            g.get(&[0, 2]),
            Err(Error::OutOfBounds { axis: 1, .. })
        ));
        assert!(g.get(&[0]).is_err());
    }

    #[test]
    fn hyperplane_cells_row_major() {
        let g = GameForm::from_labels(&[3, 3], "a b c d e f g h i").unwrap();
        let cells = g.hyperplane_cells(Hyperplane::new(0, 1)).unwrap();
        assert_eq!(cells, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        let cells = g.hyperplane_cells(Hyperplane::new(1, 2)).unwrap();
        assert_eq!(cells, vec![vec![0, 2], vec![1, 2], vec![2, 2]]);

        let cube = GameForm::from_labels(&[2, 2, 2], "a b c d e f g h").unwrap();
        for dir in 0..3 {
            for idx in 0..2 {
                let cells = cube.hyperplane_cells(Hyperplane::new(dir, idx)).unwrap();
                assert_eq!(cells.len(), 4);
                assert!(cells.iter().all(|c| c[dir] == idx));
            }
        }
        assert!(cube.hyperplane_cells(Hyperplane::new(3, 0)).is_err());
        assert!(cube.hyperplane_cells(Hyperplane::new(0, 2)).is_err());
    }

    #[test]
    fn hyperplane_of_trailing_unit_axis_is_everything() {
        let m = 3;
        let labels = vec!["a"; m * m * m].join(" ");
        let g = GameForm::from_labels(&[m, m, m, 1], &labels).unwrap();
        let cells = g.hyperplane_cells(Hyperplane::new(3, 0)).unwrap();
        // enumerate directly and compare
        let mut expected = Vec::new();
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    expected.push(vec![x, y, z, 0]);
                }
            }
        }
        assert_eq!(cells, expected);
    }

    #[test]
    fn lines_enumerate_in_hyperplane_order() {
        let g = GameForm::from_labels(&[2, 3, 2], &["a"; 12].join(" ")).unwrap();
        for dir in 0..3 {
            let lines: Vec<Line> = g.lines(dir).collect();
            assert_eq!(lines.len(), 12 / g.dims()[dir]);
            for (t, line) in lines.iter().enumerate() {
                let cells = g.line_cells(line).unwrap();
                for (j, c) in cells.iter().enumerate() {
                    assert_eq!(g.flat_index(c).unwrap(), g.line_cell(dir, t, j));
                }
            }
        }
    }

    #[test]
    fn projection_of_two_person_form_is_identity() {
        let g = GameForm::from_rows(&["a b c", "b c a"]).unwrap();
        assert_eq!(g.project(&[0]).unwrap(), g);
    }

    #[test]
    fn projection_rejects_trivial_coalitions() {
        let g = GameForm::from_labels(&[2, 2, 2], "a b c d e f g h").unwrap();
        assert!(g.project(&[]).is_err());
        assert!(g.project(&[0, 1, 2]).is_err());
        assert!(g.project(&[3]).is_err());
    }

    #[test]
    fn fill_undefined_replaces_with_star() {
        let g = GameForm::from_labels(&[1], ".").unwrap();
        let filled = g.fill_undefined();
        assert_eq!(filled.label(0), Some(STAR));
        let full = first();
        assert_eq!(full.fill_undefined(), full);
    }

    #[test]
    fn restrict_and_hyperplane_form() {
        let g = GameForm::from_labels(&[2, 3], "a b c d e f").unwrap();
        let r = g.restrict(&[vec![1], vec![2, 0]]).unwrap();
        assert_eq!(r.dims(), &[1, 2]);
        assert_eq!(r.label(0), Some("f"));
        assert_eq!(r.label(1), Some("d"));
        let h = g.hyperplane_form(Hyperplane::new(1, 1)).unwrap();
        assert_eq!(h.dims(), &[2]);
        assert_eq!(h.label(0), Some("b"));
        assert_eq!(h.label(1), Some("e"));
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(GameForm::from_labels(&[2, 2], "a b c").is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new([""]).is_err());
        assert!(GameForm::from_raw(vec![1], Alphabet::new(["a"]).unwrap(), vec![3]).is_err());
    }
}
