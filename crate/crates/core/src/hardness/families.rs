//! Small non-assignable families.

use crate::assign::for_each_profile;
use crate::error::{Error, Result};
use crate::form::{Alphabet, GameForm, UNDEFINED};

/// Shift of diagonal `k` (0-based) along coordinates `1..n`. Write
/// `k = q·m + r`; every coordinate is shifted by `r`, and coordinates
/// `2..n` additionally by the base-`m` digits of `q`.
fn shifts(k: usize, n: usize, m: usize) -> Vec<usize> {
    let (mut q, r) = (k / m, k % m);
    let mut s = vec![r; n - 1];
    for t in (1..n - 1).rev() {
        s[t] = (r + q % m) % m;
        q /= m;
    }
    s
}

/// An `n`-person `m × … × m` partial form with outcomes `1..=n+1` that no
/// assignment covers: outcome `k ≤ n` sits on `m` pairwise
/// coordinate-disjoint cells, and outcome `n+1` on the first free profile.
pub fn gen_min_outcome_nonassignable(n: usize, m: usize) -> Result<GameForm> {
    if n == 0 || m == 0 {
        return Err(Error::argument("need at least one player and one strategy"));
    }
    let cells_total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if (n * m) as u128 >= cells_total {
        return Err(Error::argument(format!(
            "need n·m < m^n, got n={n}, m={m} ({} ≥ {cells_total})",
            n * m
        )));
    }
    if cells_total > 1 << 26 {
        return Err(Error::Capacity(format!("{m}^{n} profiles is too many")));
    }
    let dims = vec![m; n];
    let alphabet = Alphabet::new((1..=n + 1).map(|k| k.to_string()))?;
    let mut cells = vec![UNDEFINED; cells_total as usize];
    let strides: Vec<usize> = (0..n).map(|i| m.pow((n - 1 - i) as u32)).collect();
    for k in 0..n {
        let s = shifts(k, n, m);
        for j in 0..m {
            let mut idx = j * strides[0];
            for t in 1..n {
                idx += ((j + s[t - 1]) % m) * strides[t];
            }
            if cells[idx] != UNDEFINED {
                return Err(Error::Invariant(format!(
                    "diagonals {k} and {} overlap",
                    cells[idx]
                )));
            }
            cells[idx] = k as u32;
        }
    }
    let mut vacant = None;
    for_each_profile(&dims, |idx, _| {
        if vacant.is_none() && cells[idx] == UNDEFINED {
            vacant = Some(idx);
        }
    });
    let v = vacant.ok_or_else(|| Error::Invariant("no vacant profile".into()))?;
    cells[v] = n as u32;
    GameForm::from_raw(dims, alphabet, cells)
}

/// The printed minimal non-assignable `t × t` matrices, `t ∈ {3, 4, 5}`.
pub fn sequence_fixture(t: usize) -> Result<GameForm> {
    let rows: &[&str] = match t {
        3 => &["a b a", "c a b", "b b a"],
        4 => &["a b a a", "c a b a", "c b a b", "b b b a"],
        5 => &[
            "a b a a a",
            "c a b a a",
            "c b a b a",
            "c b b a b",
            "b b b b a",
        ],
        _ => {
            return Err(Error::argument(format!(
                "no printed matrix for t={t} (have 3, 4, 5)"
            )))
        }
    };
    GameForm::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_three() {
        let g = gen_min_outcome_nonassignable(2, 3).unwrap();
        let text: Vec<Option<&str>> = (0..9).map(|i| g.label(i)).collect();
        assert_eq!(
            text,
            vec![
                Some("1"),
                Some("2"),
                Some("3"),
                None,
                Some("1"),
                Some("2"),
                Some("2"),
                None,
                Some("1"),
            ]
        );
    }

    #[test]
    fn more_players_than_strategies() {
        let g = gen_min_outcome_nonassignable(3, 2).unwrap();
        assert_eq!(g.defined_count(), 7);
        for k in 0..3 {
            let cells: Vec<Vec<usize>> = (0..8)
                .filter(|&i| g.cell(i).map(|o| o.index()) == Some(k))
                .map(|i| g.coords(i))
                .collect();
            assert_eq!(cells.len(), 2);
            assert!((0..3).all(|t| cells[0][t] != cells[1][t]));
        }
        let g = gen_min_outcome_nonassignable(6, 2).unwrap();
        assert_eq!(g.defined_count(), 13);
    }

    #[test]
    fn rejects_small_boxes() {
        assert!(gen_min_outcome_nonassignable(2, 1).is_err());
        assert!(gen_min_outcome_nonassignable(2, 2).is_err());
        assert!(sequence_fixture(6).is_err());
    }
}
