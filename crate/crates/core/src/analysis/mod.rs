//! Tightness tests and the hyperplane dominance machinery.
//!
//! Partial forms are analysed as if every undefined cell held one extra
//! outcome; undefined compares equal only to undefined.

mod dominance;

pub use dominance::{
    build_dominance_graph, build_dominance_graphs, classify_pair, find_k_box, find_sink,
    DominanceGraph, DominanceKind, DominanceRelation, KBox,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::form::{GameForm, Hyperplane, Outcome, STAR, UNDEFINED};

/// Default cap on the number of players for [`is_tt`].
pub const DEFAULT_TT_PLAYER_BOUND: usize = 6;
/// Default cap on the alphabet size for [`is_tight_two_person`].
pub const DEFAULT_TIGHT_OUTCOME_BOUND: usize = 20;

/// A 2×2 restriction with no constant line. Row `r` of `values` lies in
/// hyperplane `hyperplanes[r]`, column `c` on line `lines[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WttWitness {
    pub direction: usize,
    pub hyperplanes: [usize; 2],
    pub lines: [usize; 2],
    pub profiles: [[Vec<usize>; 2]; 2],
    pub values: [[Option<Outcome>; 2]; 2],
    pub labels: [[String; 2]; 2],
}

impl fmt::Display for WttWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.labels;
        write!(
            f,
            "direction {}, hyperplanes {} and {}, lines through {:?} and {:?}: [{a} {b}; {c} {d}]",
            self.direction,
            self.hyperplanes[0],
            self.hyperplanes[1],
            self.profiles[0][0],
            self.profiles[0][1],
        )
    }
}

fn witness(form: &GameForm, dir: usize, j: usize, k: usize, t1: usize, t2: usize) -> WttWitness {
    let idx = |h: usize, t: usize| form.line_cell(dir, t, h);
    let cells = [[idx(j, t1), idx(j, t2)], [idx(k, t1), idx(k, t2)]];
    let profile = |i: usize| form.coords(i);
    let value = |i: usize| form.cell(i);
    let label = |i: usize| form.label(i).unwrap_or(STAR).to_string();
    WttWitness {
        direction: dir,
        hyperplanes: [j, k],
        lines: [t1, t2],
        profiles: cells.map(|row| row.map(profile)),
        values: cells.map(|row| row.map(value)),
        labels: cells.map(|row| row.map(label)),
    }
}

/// First violating pair of lines for the hyperplanes `j`, `k` with values `hj`, `hk`.
pub(crate) fn witness_for_pair(
    form: &GameForm,
    dir: usize,
    j: usize,
    k: usize,
    hj: &[u32],
    hk: &[u32],
) -> Option<WttWitness> {
    for t1 in 0..hj.len() {
        let (a, c) = (hj[t1], hk[t1]);
        if a == c {
            continue;
        }
        for t2 in t1 + 1..hj.len() {
            let (b, d) = (hj[t2], hk[t2]);
            if a != b && c != d && b != d {
                return Some(witness(form, dir, j, k, t1, t2));
            }
        }
    }
    None
}

/// First violating 2×2 restriction in direction `dir`.
fn scan_direction(form: &GameForm, dir: usize) -> Option<WttWitness> {
    let s = form.dims()[dir];
    let planes: Vec<Vec<u32>> = (0..s)
        .map(|j| form.hyperplane_values(Hyperplane::new(dir, j)))
        .collect();
    for j in 0..s {
        for k in j + 1..s {
            if let Some(w) = witness_for_pair(form, dir, j, k, &planes[j], &planes[k]) {
                return Some(w);
            }
        }
    }
    None
}

/// The first 2×2 restriction without a constant line, scanning directions,
/// then hyperplane pairs, then line pairs, all ascending.
pub fn wtt_witness(form: &GameForm) -> Option<WttWitness> {
    (0..form.n()).find_map(|dir| scan_direction(form, dir))
}

/// Weak total tightness by direct inspection of every 2×2 restriction.
pub fn is_wtt(form: &GameForm) -> bool {
    wtt_witness(form).is_none()
}

/// Weak total tightness through the dominance characterization: every pair
/// of distinct parallel hyperplanes has a constant region where they differ
/// on one side or the other.
pub fn is_wtt_by_dominance(form: &GameForm) -> bool {
    for dir in 0..form.n() {
        let s = form.dims()[dir];
        let planes: Vec<Vec<u32>> = (0..s)
            .map(|j| form.hyperplane_values(Hyperplane::new(dir, j)))
            .collect();
        for j in 0..s {
            for k in j + 1..s {
                // identical hyperplanes impose nothing
                if let Some((None, None)) = dominance::differing_constants(&planes[j], &planes[k]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Total tightness: every coalition projection passes the two-person 2×2 test.
pub fn is_tt(form: &GameForm, player_bound: usize) -> Result<bool> {
    let n = form.n();
    if n > player_bound {
        return Err(Error::Capacity(format!(
            "{n} players exceeds the bound of {player_bound} for the coalition scan"
        )));
    }
    if n == 1 {
        return Ok(true);
    }
    // fixing player n-1 outside K enumerates each split once
    for mask in 1u32..(1 << (n - 1)) {
        let coalition: Vec<usize> = (0..n - 1).filter(|&i| mask & (1 << i) != 0).collect();
        let projected = form.project(&coalition)?;
        if scan_direction(&projected, 0).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Tightness of a fully defined two-person form, by brute force over all
/// outcome subsets.
pub fn is_tight_two_person(form: &GameForm, outcome_bound: usize) -> Result<bool> {
    if form.n() != 2 {
        return Err(Error::argument("tightness test needs a two-person form"));
    }
    if !form.is_fully_defined() {
        return Err(Error::precondition(
            "tightness test needs a fully defined form",
        ));
    }
    let q = form.alphabet().len();
    if q > outcome_bound || q > 63 {
        return Err(Error::Capacity(format!(
            "{q} outcomes exceeds the bound of {outcome_bound} for the subset scan"
        )));
    }
    let (rows, cols) = (form.dims()[0], form.dims()[1]);
    let mut row_masks = vec![0u64; rows];
    let mut col_masks = vec![0u64; cols];
    for (r, row) in row_masks.iter_mut().enumerate() {
        for (c, col) in col_masks.iter_mut().enumerate() {
            let v = form.raw(r * cols + c);
            debug_assert_ne!(v, UNDEFINED);
            *row |= 1 << v;
            *col |= 1 << v;
        }
    }
    let full: u64 = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
    for b in 0..=full {
        let complement = full & !b;
        let first = row_masks.iter().any(|&m| m & !b == 0);
        let second = col_masks.iter().any(|&m| m & !complement == 0);
        if !first && !second {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form3() -> GameForm {
        GameForm::from_rows(&["a a c", "a b b", "c b c"]).unwrap()
    }

    #[test]
    fn form3_is_wtt() {
        assert!(is_wtt(&form3()));
        assert!(is_wtt_by_dominance(&form3()));
    }

    #[test]
    fn degenerate_forms_are_wtt() {
        assert!(is_wtt(&GameForm::from_labels(&[1, 1, 1], "a").unwrap()));
        assert!(is_wtt(&GameForm::from_labels(&[4], "a b c d").unwrap()));
        assert!(is_wtt(&GameForm::from_labels(&[1, 3], "a b c").unwrap()));
    }

    #[test]
    fn witness_has_no_constant_line() {
        let g = GameForm::from_rows(&["a b", "b a"]).unwrap();
        let w = wtt_witness(&g).unwrap();
        let [[a, b], [c, d]] = w.values;
        assert!(a != b && c != d && a != c && b != d);
        assert_eq!(w.direction, 0);
        assert!(w.to_string().contains("[a b; b a]"));
    }

    #[test]
    fn undefined_is_its_own_value() {
        // [a .; . a] behaves like [a *; * a]
        let g = GameForm::from_labels(&[2, 2], "a . . a").unwrap();
        assert!(!is_wtt(&g));
        assert_eq!(is_wtt(&g), is_wtt(&g.fill_undefined()));
        let w = wtt_witness(&g).unwrap();
        assert_eq!(w.labels[0][1], "*");
    }

    #[test]
    fn tight_small_cases() {
        let one = GameForm::from_rows(&["a"]).unwrap();
        assert!(is_tight_two_person(&one, DEFAULT_TIGHT_OUTCOME_BOUND).unwrap());
        let swap = GameForm::from_rows(&["a b", "b a"]).unwrap();
        assert!(!is_tight_two_person(&swap, DEFAULT_TIGHT_OUTCOME_BOUND).unwrap());
        let g = GameForm::from_rows(&["a a", "b c"]).unwrap();
        assert!(is_tight_two_person(&g, DEFAULT_TIGHT_OUTCOME_BOUND).unwrap());
        assert!(matches!(
            is_tight_two_person(&g, 2),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn tt_bound_and_small_n() {
        let g = form3();
        assert_eq!(is_tt(&g, DEFAULT_TT_PLAYER_BOUND).unwrap(), is_wtt(&g));
        let big = GameForm::from_labels(&[1; 7], "a").unwrap();
        assert!(matches!(
            is_tt(&big, DEFAULT_TT_PLAYER_BOUND),
            Err(Error::Capacity(_))
        ));
        assert!(is_tt(&big, 7).unwrap());
    }
}
