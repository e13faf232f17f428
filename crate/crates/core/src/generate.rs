//! Seeded random instances.
//!
//! Every generator takes an explicit seed and uses ChaCha8, so outputs are
//! reproducible across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::is_wtt;
use crate::error::{Error, Result};
use crate::form::{Alphabet, GameForm, UNDEFINED};
use crate::hardness::ThreeCnf;

/// Default number of draws [`random_wtt`] makes before giving up.
pub const DEFAULT_WTT_TRIES: usize = 100_000;

fn alphabet(outcomes: usize) -> Result<Alphabet> {
    if outcomes == 0 {
        return Err(Error::argument("need at least one outcome"));
    }
    Alphabet::new((0..outcomes).map(outcome_name))
}

/// `a`, `b`, …, `z`, then `o26`, `o27`, ….
pub fn outcome_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("o{i}")
    }
}

fn cell_count(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() {
        return Err(Error::argument("need at least one player"));
    }
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .filter(|&p| p <= 1 << 28)
        .ok_or_else(|| Error::Capacity(format!("dims {dims:?} are too large")))
}

fn draw(rng: &mut ChaCha8Rng, outcomes: usize, undefined: f64) -> u32 {
    if undefined > 0.0 && rng.gen_bool(undefined) {
        UNDEFINED
    } else {
        rng.gen_range(0..outcomes as u32)
    }
}

/// Cells drawn uniformly from `outcomes` outcomes.
pub fn random_form(seed: u64, dims: &[usize], outcomes: usize) -> Result<GameForm> {
    random_partial_form(seed, dims, outcomes, 0.0)
}

/// Each cell is undefined with probability `undefined`, otherwise uniform.
pub fn random_partial_form(
    seed: u64,
    dims: &[usize],
    outcomes: usize,
    undefined: f64,
) -> Result<GameForm> {
    if !(0.0..=1.0).contains(&undefined) {
        return Err(Error::argument(format!(
            "undefined probability {undefined} outside [0, 1]"
        )));
    }
    let p = cell_count(dims)?;
    let alphabet = alphabet(outcomes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells = (0..p)
        .map(|_| draw(&mut rng, outcomes, undefined))
        .collect();
    GameForm::from_raw(dims.to_vec(), alphabet, cells)
}

/// Uniform form conditioned on being WTT, by rejection.
///
/// Expect about `1 / P(WTT)` draws; that probability falls off quickly with
/// the number of cells, so this is meant for `p` up to a dozen or so cells.
pub fn random_wtt(
    seed: u64,
    dims: &[usize],
    outcomes: usize,
    max_tries: usize,
) -> Result<GameForm> {
    let p = cell_count(dims)?;
    let alphabet = alphabet(outcomes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let cells: Vec<u32> = (0..p).map(|_| draw(&mut rng, outcomes, 0.0)).collect();
        let g = GameForm::from_raw(dims.to_vec(), alphabet.clone(), cells)?;
        if is_wtt(&g) {
            return Ok(g);
        }
    }
    Err(Error::Capacity(format!(
        "no WTT form among {max_tries} draws for dims {dims:?} with {outcomes} outcomes"
    )))
}

/// Outcome depends on one player's strategy only; always WTT.
pub fn random_single_player_form(
    seed: u64,
    dims: &[usize],
    outcomes: usize,
    player: usize,
) -> Result<GameForm> {
    let p = cell_count(dims)?;
    if player >= dims.len() {
        return Err(Error::argument(format!("no player {player}")));
    }
    let alphabet = alphabet(outcomes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<u32> = (0..dims[player])
        .map(|_| draw(&mut rng, outcomes, 0.0))
        .collect();
    let stride: usize = dims[player + 1..].iter().product();
    let cells = (0..p)
        .map(|idx| labels[idx / stride % dims[player]])
        .collect();
    GameForm::from_raw(dims.to_vec(), alphabet, cells)
}

/// WTT forms by a random walk: start from a single-player form and make
/// `steps` single-cell changes, undoing each one that breaks WTT. A change
/// makes the cell undefined with probability `undefined`.
pub fn random_wtt_walk(
    seed: u64,
    dims: &[usize],
    outcomes: usize,
    steps: usize,
    undefined: f64,
) -> Result<GameForm> {
    if !(0.0..=1.0).contains(&undefined) {
        return Err(Error::argument(format!(
            "undefined probability {undefined} outside [0, 1]"
        )));
    }
    let p = cell_count(dims)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let player = rng.gen_range(0..dims.len());
    let start = random_single_player_form(rng.gen(), dims, outcomes, player)?;
    let alphabet = start.alphabet().clone();
    let mut cells: Vec<u32> = (0..p).map(|i| start.raw(i)).collect();
    for _ in 0..steps {
        let idx = rng.gen_range(0..p);
        let new = draw(&mut rng, outcomes, undefined);
        let old = cells[idx];
        if new == old {
            continue;
        }
        cells[idx] = new;
        let g = GameForm::from_raw(dims.to_vec(), alphabet.clone(), cells.clone())?;
        if !is_wtt(&g) {
            cells[idx] = old;
        }
    }
    GameForm::from_raw(dims.to_vec(), alphabet, cells)
}

/// A 3-CNF with `clauses` clauses over `vars ≥ 3` variables; each clause
/// picks three distinct variables and independent signs.
pub fn random_three_cnf(seed: u64, vars: usize, clauses: usize) -> Result<ThreeCnf> {
    if vars < 3 {
        return Err(Error::argument("a 3-CNF needs at least three variables"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let list = (0..clauses)
        .map(|_| {
            let picked = rand::seq::index::sample(&mut rng, vars, 3);
            let mut c = [0i32; 3];
            for (slot, v) in c.iter_mut().zip(picked.iter()) {
                let v = v as i32 + 1;
                *slot = if rng.gen_bool(0.5) { v } else { -v };
            }
            c
        })
        .collect();
    ThreeCnf::new(vars, list)
}
