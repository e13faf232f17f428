//! Assignability as satisfiability.

mod brute;
mod cnf;
mod dpll;
mod twosat;

pub use brute::{brute_cost_bits, enumerate_minimal, solve_brute, DEFAULT_BRUTE_BUDGET_BITS};
pub use cnf::{emit_dimacs, encode, parse_dimacs, CnfFormula, Var};
pub use dpll::{solve_dpll, solve_dpll_assuming, solve_with_stats, SearchStats};
pub use twosat::solve_2sat;

use std::fmt;
use std::str::FromStr;

use crate::assign::first_uncovered;
use crate::error::{Error, Result};
use crate::form::{Assignment, GameForm, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    TwoSat,
    Dpll,
    Brute,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::TwoSat, Method::Dpll, Method::Brute];

    pub fn name(self) -> &'static str {
        match self {
            Method::TwoSat => "two_sat",
            Method::Dpll => "dpll",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two_sat" | "2sat" => Ok(Method::TwoSat),
            "dpll" => Ok(Method::Dpll),
            "brute" => Ok(Method::Brute),
            other => Err(Error::argument(format!(
                "unknown method {other:?} (expected two_sat, dpll or brute)"
            ))),
        }
    }
}

fn checked(form: &GameForm, a: Assignment) -> Result<Assignment> {
    if let Some(x) = first_uncovered(form, &a)? {
        return Err(Error::Invariant(format!(
            "solver returned an assignment leaving {x:?} uncovered"
        )));
    }
    Ok(a)
}

/// Polynomial decision for two players through the 2-SAT encoding.
pub fn solve_two_person(form: &GameForm) -> Result<Option<Assignment>> {
    if form.n() != 2 {
        return Err(Error::argument(format!(
            "two_sat needs exactly two players, got {}",
            form.n()
        )));
    }
    let f = encode(form);
    match solve_2sat(&f)? {
        Some(model) => Ok(Some(checked(form, f.decode(form.dims(), &model))?)),
        None => Ok(None),
    }
}

pub fn solve(form: &GameForm, method: Method) -> Result<Option<Assignment>> {
    solve_with_budget(form, method, DEFAULT_BRUTE_BUDGET_BITS)
}

/// Like [`solve`], with an explicit size limit for the brute method.
pub fn solve_with_budget(
    form: &GameForm,
    method: Method,
    budget_bits: f64,
) -> Result<Option<Assignment>> {
    match method {
        Method::TwoSat => solve_two_person(form),
        Method::Dpll => {
            let f = encode(form);
            match solve_dpll(&f) {
                Some(model) => Ok(Some(checked(form, f.decode(form.dims(), &model))?)),
                None => Ok(None),
            }
        }
        Method::Brute => match solve_brute(form, budget_bits)? {
            Some(a) => Ok(Some(checked(form, a)?)),
            None => Ok(None),
        },
    }
}

/// Minimal feasible assignments (no assigned label can be dropped), at
/// most `limit`, in the brute search order.
pub fn enumerate_models(form: &GameForm, limit: usize) -> Result<Vec<Assignment>> {
    enumerate_minimal(form, DEFAULT_BRUTE_BUDGET_BITS, limit)
}

/// Whether every feasible assignment gives `outcome` to `strategy` of
/// `player`. Vacuously true when the form is not assignable.
pub fn is_forced(
    form: &GameForm,
    player: usize,
    strategy: usize,
    outcome: Outcome,
) -> Result<bool> {
    if player >= form.n() || strategy >= form.dims()[player] {
        return Err(Error::argument(format!(
            "no strategy {strategy} for player {player}"
        )));
    }
    let f = encode(form);
    let assumption = match f.var_id(player, strategy, outcome) {
        Some(id) => vec![-(id as i32)],
        None => Vec::new(),
    };
    Ok(solve_dpll_assuming(&f, &assumption).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assign::verify;

    #[test]
    fn two_sat_on_display_examples() {
        let sat = GameForm::from_rows(&["a a c", "a b b", "c b c"]).unwrap();
        let a = solve_two_person(&sat).unwrap().unwrap();
        assert!(verify(&sat, &a).unwrap());
        let unsat = GameForm::from_rows(&["a b c", "b c a"]).unwrap();
        assert_eq!(solve_two_person(&unsat).unwrap(), None);
        let three = GameForm::from_labels(&[1, 1, 1], "a").unwrap();
        assert!(solve_two_person(&three).is_err());
    }

    #[test]
    fn methods_agree_on_small_examples() {
        for rows in [
            &["a b", "c d"][..],
            &["a a c", "a b b", "c b c"],
            &["a b c", "b c a"],
            &["a a b b", "c d c d"],
            &["a a b", "a a c", "b c b"],
        ] {
            let g = GameForm::from_rows(rows).unwrap();
            let verdicts: Vec<bool> = Method::ALL
                .iter()
                .map(|&m| solve(&g, m).unwrap().is_some())
                .collect();
            assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{rows:?}");
        }
    }

    #[test]
    fn forced_labels() {
        // the lone strategy must carry the lone outcome
        let g = GameForm::from_labels(&[1], "a").unwrap();
        assert!(is_forced(&g, 0, 0, Outcome(0)).unwrap());
        let h = GameForm::from_rows(&["a b"]).unwrap();
        assert!(!is_forced(&h, 0, 0, Outcome(0)).unwrap());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("walksat".parse::<Method>().is_err());
    }
}
