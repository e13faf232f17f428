//! Constructive assignment of WTT game forms and the coverage verifier.

use std::fmt;

use crate::analysis::{build_dominance_graph, build_dominance_graphs, find_sink, wtt_witness};
use crate::error::{Error, Result};
use crate::form::{Assignment, GameForm, Hyperplane, Outcome, UNDEFINED};
use crate::normalize::normalize;

/// Visits the coordinates of every cell in row-major order.
pub(crate) fn for_each_profile(dims: &[usize], mut f: impl FnMut(usize, &[usize])) {
    let p: usize = dims.iter().product();
    let mut x = vec![0; dims.len()];
    for idx in 0..p {
        f(idx, &x);
        for axis in (0..dims.len()).rev() {
            x[axis] += 1;
            if x[axis] < dims[axis] {
                break;
            }
            x[axis] = 0;
        }
    }
}

fn check_shape(form: &GameForm, a: &Assignment) -> Result<()> {
    if a.shape() != form.dims() {
        return Err(Error::argument(format!(
            "assignment shape {:?} does not match form dims {:?}",
            a.shape(),
            form.dims()
        )));
    }
    Ok(())
}

/// The first defined profile not covered by `a`, if any.
pub fn first_uncovered(form: &GameForm, a: &Assignment) -> Result<Option<Vec<usize>>> {
    check_shape(form, a)?;
    let mut found = None;
    for_each_profile(form.dims(), |idx, x| {
        if found.is_some() {
            return;
        }
        let v = form.raw(idx);
        if v == UNDEFINED {
            return;
        }
        let covered = x
            .iter()
            .enumerate()
            .any(|(i, &xi)| a.get(i, xi) == Some(Outcome(v)));
        if !covered {
            found = Some(x.to_vec());
        }
    });
    Ok(found)
}

/// True iff every defined profile carries the outcome assigned to one of its strategies.
pub fn verify(form: &GameForm, a: &Assignment) -> Result<bool> {
    Ok(first_uncovered(form, a)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// Constant or duplicate hyperplanes were removed at this depth.
    Normalized { depth: usize, removed: usize },
    /// Nothing left to cover after normalization.
    Empty { depth: usize },
    /// A single player remains and takes each cell's outcome.
    BaseCase { depth: usize, player: usize },
    /// A sink was found; `player` and `strategy` use the original numbering.
    Sink {
        depth: usize,
        player: usize,
        strategy: usize,
    },
    /// No sink exists; `player` is the last remaining direction.
    NoSink { depth: usize, player: usize },
    /// A hyperplane of the last direction had no uncovered profile.
    FreeHyperplane {
        depth: usize,
        player: usize,
        strategy: usize,
    },
    /// Removed hyperplanes were given values from the normalization log.
    Expanded { depth: usize, restored: usize },
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TraceStep::Normalized { depth, removed } => {
                write!(f, "[{depth}] normalize: removed {removed} hyperplane(s)")
            }
            TraceStep::Empty { depth } => write!(f, "[{depth}] empty form"),
            TraceStep::BaseCase { depth, player } => {
                write!(
                    f,
                    "[{depth}] single player {player}: each strategy takes its cell"
                )
            }
            TraceStep::Sink {
                depth,
                player,
                strategy,
            } => write!(f, "[{depth}] sink: player {player} strategy {strategy}"),
            TraceStep::NoSink { depth, player } => {
                write!(
                    f,
                    "[{depth}] no sink: proper outcomes, player {player} covers the rest"
                )
            }
            TraceStep::FreeHyperplane {
                depth,
                player,
                strategy,
            } => write!(
                f,
                "[{depth}] free hyperplane: player {player} strategy {strategy}"
            ),
            TraceStep::Expanded { depth, restored } => {
                write!(f, "[{depth}] re-expand: restored {restored} hyperplane(s)")
            }
        }
    }
}

/// Counters collected while running the no-sink branch.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssignStats {
    pub sink_levels: usize,
    pub no_sink_levels: usize,
    /// Hyperplanes of the last direction handled by a no-sink branch.
    pub last_direction_hyperplanes: usize,
    /// Of those, how many have a proper outcome.
    pub last_direction_with_proper: usize,
    /// Of those, how many were assigned exactly their proper outcome.
    pub last_direction_proper_matches: usize,
    pub free_hyperplanes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssignmentCertificate {
    pub assignment: Assignment,
    pub trace: Vec<TraceStep>,
    pub stats: AssignStats,
}

struct Run {
    trace: Vec<TraceStep>,
    stats: AssignStats,
}

/// Builds a verified assignment for a WTT form.
pub fn assign_wtt(form: &GameForm) -> Result<AssignmentCertificate> {
    if let Some(w) = wtt_witness(form) {
        return Err(Error::NotWtt(Box::new(w)));
    }
    let filled = form.fill_undefined();
    let mut run = Run {
        trace: Vec::new(),
        stats: AssignStats::default(),
    };
    let players: Vec<usize> = (0..form.n()).collect();
    let strategies: Vec<Vec<usize>> = form.dims().iter().map(|&d| (0..d).collect()).collect();
    let raw = run.solve(&filled, &players, &strategies, 0)?;

    // the filler is never a useful label
    let star = (!form.is_fully_defined()).then(|| Outcome(form.alphabet().len() as u32));
    let entries = raw
        .into_entries()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| e.filter(|&o| Some(o) != star))
                .collect()
        })
        .collect();
    let assignment = Assignment::new(entries);
    if let Some(x) = first_uncovered(form, &assignment)? {
        return Err(Error::Invariant(format!(
            "constructed assignment leaves profile {x:?} uncovered"
        )));
    }
    Ok(AssignmentCertificate {
        assignment,
        trace: run.trace,
        stats: run.stats,
    })
}

impl Run {
    /// `players[i]` and `strategies[i][j]` give the original numbering of
    /// axis `i` and its strategy `j` in `g`.
    fn solve(
        &mut self,
        g: &GameForm,
        players: &[usize],
        strategies: &[Vec<usize>],
        depth: usize,
    ) -> Result<Assignment> {
        let (red, log) = normalize(g);
        if !log.is_empty() {
            self.trace.push(TraceStep::Normalized {
                depth,
                removed: log.removals.len(),
            });
        }
        let strategies: Vec<Vec<usize>> = log
            .kept
            .iter()
            .enumerate()
            .map(|(axis, kept)| kept.iter().map(|&j| strategies[axis][j]).collect())
            .collect();
        let n = red.n();

        let a = if red.is_empty() {
            self.trace.push(TraceStep::Empty { depth });
            Assignment::unassigned(red.dims())
        } else if n == 1 {
            self.trace.push(TraceStep::BaseCase {
                depth,
                player: players[0],
            });
            Assignment::new(vec![red.cells().collect()])
        } else if let Some(h) = find_sink(&red)? {
            self.sink(&red, h, players, &strategies, depth)?
        } else {
            self.no_sink(&red, players, &strategies, depth)?
        };

        if !log.is_empty() {
            self.trace.push(TraceStep::Expanded {
                depth,
                restored: log.removals.len(),
            });
        }
        log.expand(&a)
    }

    fn sink(
        &mut self,
        g: &GameForm,
        h: Hyperplane,
        players: &[usize],
        strategies: &[Vec<usize>],
        depth: usize,
    ) -> Result<Assignment> {
        self.stats.sink_levels += 1;
        self.trace.push(TraceStep::Sink {
            depth,
            player: players[h.direction],
            strategy: strategies[h.direction][h.index],
        });
        let dir = h.direction;
        let mut a = Assignment::unassigned(g.dims());
        if g.dims()[dir] > 1 {
            let graph = build_dominance_graph(g, dir)?;
            for k in (0..g.dims()[dir]).filter(|&k| k != h.index) {
                let c = graph.dominates(k, h.index).ok_or_else(|| {
                    Error::Invariant(format!("hyperplane {k} does not dominate the sink"))
                })?;
                a.set(dir, k, Some(c));
            }
        }
        let sub = g.hyperplane_form(h)?;
        let sub_players: Vec<usize> = (0..g.n())
            .filter(|&i| i != dir)
            .map(|i| players[i])
            .collect();
        let sub_strategies: Vec<Vec<usize>> = (0..g.n())
            .filter(|&i| i != dir)
            .map(|i| strategies[i].clone())
            .collect();
        let inner = self.solve(&sub, &sub_players, &sub_strategies, depth + 1)?;
        for (pos, i) in (0..g.n()).filter(|&i| i != dir).enumerate() {
            for j in 0..g.dims()[i] {
                a.set(i, j, inner.get(pos, j));
            }
        }
        Ok(a)
    }

    #[allow(clippy::needless_range_loop)]
    fn no_sink(
        &mut self,
        g: &GameForm,
        players: &[usize],
        strategies: &[Vec<usize>],
        depth: usize,
    ) -> Result<Assignment> {
        let n = g.n();
        let last = n - 1;
        self.stats.no_sink_levels += 1;
        self.trace.push(TraceStep::NoSink {
            depth,
            player: players[last],
        });
        let graphs = build_dominance_graphs(g)?;
        let mut a = Assignment::unassigned(g.dims());
        for (dir, graph) in graphs.iter().enumerate().take(last) {
            for j in 0..g.dims()[dir] {
                let p = graph.proper_outcome(j).ok_or_else(|| {
                    Error::Invariant(format!(
                        "hyperplane {j} in direction {dir} of a no-sink form has no proper outcome"
                    ))
                })?;
                a.set(dir, j, Some(p));
            }
        }
        for j in 0..g.dims()[last] {
            // first uncovered profile per outcome
            let mut uncovered: Vec<(u32, usize)> = Vec::new();
            for idx in g.hyperplane_indices(Hyperplane::new(last, j)) {
                let v = g.raw(idx);
                let covered = (0..last).any(|i| a.get(i, g.coord(idx, i)) == Some(Outcome(v)));
                if !covered && !uncovered.iter().any(|&(u, _)| u == v) {
                    uncovered.push((v, idx));
                }
            }
            let proper = graphs[last].proper_outcome(j);
            self.stats.last_direction_hyperplanes += 1;
            let value = match uncovered.as_slice() {
                [] => {
                    self.stats.free_hyperplanes += 1;
                    self.trace.push(TraceStep::FreeHyperplane {
                        depth,
                        player: players[last],
                        strategy: strategies[last][j],
                    });
                    let first = g.hyperplane_indices(Hyperplane::new(last, j)).next();
                    proper.or_else(|| first.and_then(|i| g.cell(i)))
                }
                [(v, _)] => Some(Outcome(*v)),
                [(_, x), (_, y), ..] => {
                    return Err(Error::Invariant(format!(
                        "hyperplane {j} of the last direction has uncovered profiles {:?} and {:?} \
                         with different outcomes (a box)",
                        g.coords(*x),
                        g.coords(*y)
                    )));
                }
            };
            if let Some(p) = proper {
                self.stats.last_direction_with_proper += 1;
                if value == Some(p) {
                    self.stats.last_direction_proper_matches += 1;
                }
            }
            a.set(last, j, value);
        }
        Ok(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_first_example() {
        let g = GameForm::from_rows(&["a b", "c d"]).unwrap();
        let o = |s: &str| g.alphabet().get(s);
        let a = Assignment::new(vec![vec![o("a"), o("d")], vec![o("c"), o("b")]]);
        assert!(verify(&g, &a).unwrap());
        // rows a,c with columns b,d leaves the b cell uncovered
        let bad = Assignment::new(vec![vec![o("a"), o("c")], vec![o("b"), o("d")]]);
        assert!(!verify(&g, &bad).unwrap());
        assert_eq!(first_uncovered(&g, &bad).unwrap(), Some(vec![0, 1]));
        assert!(verify(&g, &Assignment::unassigned(&[2])).is_err());
    }

    #[test]
    fn verify_vacuous_on_undefined_form() {
        let g = GameForm::from_labels(&[2, 2], ". . . .").unwrap();
        assert!(verify(&g, &Assignment::unassigned(&[2, 2])).unwrap());
    }

    #[test]
    fn single_cell_base_case() {
        let g = GameForm::from_labels(&[1], "a").unwrap();
        let cert = assign_wtt(&g).unwrap();
        assert_eq!(cert.assignment.get(0, 0), g.alphabet().get("a"));
    }

    #[test]
    fn form3_uses_no_sink_branch() {
        let g = GameForm::from_rows(&["a a c", "a b b", "c b c"]).unwrap();
        let cert = assign_wtt(&g).unwrap();
        assert!(verify(&g, &cert.assignment).unwrap());
        let names: Vec<&str> = cert
            .assignment
            .player(0)
            .iter()
            .map(|o| g.alphabet().name(o.unwrap()))
            .collect();
        assert_eq!(names, ["a", "b", "c"]);
        assert!(matches!(
            cert.trace[0],
            TraceStep::NoSink {
                depth: 0,
                player: 1
            }
        ));
        assert_eq!(cert.stats.no_sink_levels, 1);
    }

    #[test]
    fn rejects_non_wtt() {
        let g = GameForm::from_rows(&["a b", "b a"]).unwrap();
        assert!(matches!(assign_wtt(&g), Err(Error::NotWtt(_))));
    }

    #[test]
    fn partial_form_reports_free_entries() {
        let g = GameForm::from_labels(&[2, 2], "a . . .").unwrap();
        let cert = assign_wtt(&g).unwrap();
        assert!(verify(&g, &cert.assignment).unwrap());
        let star_free = cert
            .assignment
            .entries()
            .iter()
            .flatten()
            .flatten()
            .all(|o| g.alphabet().contains(*o));
        assert!(star_free);
    }

    #[test]
    fn deterministic() {
        let g = GameForm::from_rows(&["a a c", "a b b", "c b c", "a a a"]).unwrap();
        assert_eq!(assign_wtt(&g).unwrap(), assign_wtt(&g).unwrap());
    }
}
