//! Pairwise dominance between parallel hyperplanes, proper outcomes, sinks
//! and the exhaustive k-box search.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::form::{GameForm, Hyperplane, Outcome};

use super::witness_for_pair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominanceKind {
    JStrictlyDominatesK(Outcome),
    KStrictlyDominatesJ(Outcome),
    /// `H_j` dominates `H_k` by the first outcome and `H_k` dominates `H_j`
    /// by the second.
    Mutual(Outcome, Outcome),
    NotWtt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DominanceRelation {
    pub direction: usize,
    pub j: usize,
    pub k: usize,
    pub kind: DominanceKind,
}

impl DominanceRelation {
    /// The outcome `c` with `from →c to`, if any. `from` and `to` must be
    /// `j` and `k` in some order.
    pub fn domination(&self, from: usize, to: usize) -> Option<Outcome> {
        use DominanceKind::*;
        match (self.kind, from == self.j && to == self.k) {
            (JStrictlyDominatesK(c), true) => Some(c),
            (KStrictlyDominatesJ(d), false) => Some(d),
            (Mutual(c, _), true) => Some(c),
            (Mutual(_, d), false) => Some(d),
            _ => None,
        }
    }

    /// The outcome `c` with `from ⇒c to`, if any.
    pub fn strict(&self, from: usize, to: usize) -> Option<Outcome> {
        use DominanceKind::*;
        match (self.kind, from == self.j && to == self.k) {
            (JStrictlyDominatesK(c), true) => Some(c),
            (KStrictlyDominatesJ(d), false) => Some(d),
            _ => None,
        }
    }
}

/// Constant values of the two regions where `hj` and `hk` differ, or `None`
/// when the hyperplanes are identical.
pub(crate) fn differing_constants(hj: &[u32], hk: &[u32]) -> Option<(Option<u32>, Option<u32>)> {
    let mut cj: Option<Option<u32>> = None;
    let mut ck: Option<Option<u32>> = None;
    for (&a, &c) in hj.iter().zip(hk) {
        if a == c {
            continue;
        }
        cj = Some(match cj {
            None => Some(a),
            Some(Some(x)) if x == a => Some(a),
            Some(_) => None,
        });
        ck = Some(match ck {
            None => Some(c),
            Some(Some(x)) if x == c => Some(c),
            Some(_) => None,
        });
    }
    Some((cj?, ck?))
}

fn filled(form: &GameForm) -> Cow<'_, GameForm> {
    if form.is_fully_defined() {
        Cow::Borrowed(form)
    } else {
        Cow::Owned(form.fill_undefined())
    }
}

fn check_direction(form: &GameForm, direction: usize) -> Result<()> {
    if direction >= form.n() {
        return Err(Error::argument(format!(
            "direction {direction} out of range for {} players",
            form.n()
        )));
    }
    Ok(())
}

fn classify_values(
    direction: usize,
    j: usize,
    k: usize,
    hj: &[u32],
    hk: &[u32],
) -> Result<DominanceRelation> {
    let (cj, ck) = differing_constants(hj, hk).ok_or_else(|| {
        Error::precondition(format!(
            "hyperplanes {j} and {k} in direction {direction} are identical; normalize first"
        ))
    })?;
    let kind = match (cj, ck) {
        (Some(c), Some(d)) => DominanceKind::Mutual(Outcome(c), Outcome(d)),
        (Some(c), None) => DominanceKind::JStrictlyDominatesK(Outcome(c)),
        (None, Some(d)) => DominanceKind::KStrictlyDominatesJ(Outcome(d)),
        (None, None) => DominanceKind::NotWtt,
    };
    Ok(DominanceRelation {
        direction,
        j,
        k,
        kind,
    })
}

/// Classifies the pair `H_j`, `H_k` perpendicular to `direction`. Undefined
/// cells are read as the filler outcome `*`, whose id is one past the
/// form's own alphabet.
pub fn classify_pair(
    form: &GameForm,
    direction: usize,
    j: usize,
    k: usize,
) -> Result<DominanceRelation> {
    check_direction(form, direction)?;
    let s = form.dims()[direction];
    for idx in [j, k] {
        if idx >= s {
            return Err(Error::OutOfBounds {
                axis: direction,
                coord: idx,
                extent: s,
            });
        }
    }
    if j == k {
        return Err(Error::argument("a hyperplane is not paired with itself"));
    }
    let form = filled(form);
    let hj = form.hyperplane_values(Hyperplane::new(direction, j));
    let hk = form.hyperplane_values(Hyperplane::new(direction, k));
    classify_values(direction, j, k, &hj, &hk)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceGraph {
    pub direction: usize,
    size: usize,
    relations: Vec<DominanceRelation>,
    proper: Vec<Option<Outcome>>,
    sink: Vec<bool>,
}

impl DominanceGraph {
    fn pair_index(&self, j: usize, k: usize) -> usize {
        let (j, k) = if j < k { (j, k) } else { (k, j) };
        j * self.size - j * (j + 1) / 2 + (k - j - 1)
    }

    /// Number of hyperplanes in this direction.
    pub fn size(&self) -> usize {
        self.size
    }

    /// All relations, for pairs `j < k` in lexicographic order.
    pub fn relations(&self) -> &[DominanceRelation] {
        &self.relations
    }

    pub fn relation(&self, j: usize, k: usize) -> &DominanceRelation {
        &self.relations[self.pair_index(j, k)]
    }

    pub fn dominates(&self, from: usize, to: usize) -> Option<Outcome> {
        self.relation(from, to).domination(from, to)
    }

    pub fn strictly_dominates(&self, from: usize, to: usize) -> Option<Outcome> {
        self.relation(from, to).strict(from, to)
    }

    pub fn proper_outcome(&self, j: usize) -> Option<Outcome> {
        self.proper[j]
    }

    pub fn proper_outcomes(&self) -> &[Option<Outcome>] {
        &self.proper
    }

    pub fn is_sink(&self, j: usize) -> bool {
        self.sink[j]
    }

    pub fn sinks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(|&j| self.sink[j])
    }

    /// Distinct outcomes by which `j` strictly dominates some parallel hyperplane.
    pub fn strict_outcomes(&self, j: usize) -> Vec<Outcome> {
        let mut out: Vec<Outcome> = (0..self.size)
            .filter(|&k| k != j)
            .filter_map(|k| self.strictly_dominates(j, k))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Classifies every pair in `direction` and derives proper outcomes and sinks.
pub fn build_dominance_graph(form: &GameForm, direction: usize) -> Result<DominanceGraph> {
    check_direction(form, direction)?;
    let form = filled(form);
    let s = form.dims()[direction];
    let planes: Vec<Vec<u32>> = (0..s)
        .map(|j| form.hyperplane_values(Hyperplane::new(direction, j)))
        .collect();
    let mut relations = Vec::with_capacity(s * s.saturating_sub(1) / 2);
    for j in 0..s {
        for k in j + 1..s {
            let rel = classify_values(direction, j, k, &planes[j], &planes[k])?;
            if rel.kind == DominanceKind::NotWtt {
                let w = witness_for_pair(&form, direction, j, k, &planes[j], &planes[k])
                    .ok_or_else(|| Error::Invariant("non-WTT pair without a witness".into()))?;
                return Err(Error::NotWtt(Box::new(w)));
            }
            relations.push(rel);
        }
    }
    let mut graph = DominanceGraph {
        direction,
        size: s,
        relations,
        proper: vec![None; s],
        sink: vec![false; s],
    };
    for j in 0..s {
        let candidates = graph.strict_outcomes(j);
        if candidates.len() > 1 {
            return Err(Error::Invariant(format!(
                "hyperplane {j} in direction {direction} strictly dominates by several outcomes"
            )));
        }
        graph.proper[j] = candidates.first().copied();
        graph.sink[j] = (0..s).all(|k| k == j || graph.dominates(k, j).is_some());
    }
    Ok(graph)
}

pub fn build_dominance_graphs(form: &GameForm) -> Result<Vec<DominanceGraph>> {
    let form = filled(form);
    (0..form.n())
        .map(|d| build_dominance_graph(&form, d))
        .collect()
}

/// The first sink hyperplane, by ascending direction and then index.
pub fn find_sink(form: &GameForm) -> Result<Option<Hyperplane>> {
    let form = filled(form);
    for direction in 0..form.n() {
        if form.dims()[direction] == 1 {
            return Ok(Some(Hyperplane::new(direction, 0)));
        }
        let graph = build_dominance_graph(&form, direction)?;
        let first = graph.sinks().next();
        if let Some(j) = first {
            return Ok(Some(Hyperplane::new(direction, j)));
        }
    }
    Ok(None)
}

/// Two profiles spanning a `k`-box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBox {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub k: usize,
}

/// Exhaustive search over all profile pairs. Every hyperplane must have a
/// proper outcome in `graphs`.
pub fn find_k_box(form: &GameForm, graphs: &[DominanceGraph]) -> Result<Option<KBox>> {
    let form = filled(form);
    let n = form.n();
    if graphs.len() != n {
        return Err(Error::argument(
            "one dominance graph per direction required",
        ));
    }
    let mut proper: Vec<Vec<u32>> = Vec::with_capacity(n);
    for (dir, graph) in graphs.iter().enumerate() {
        if graph.direction != dir || graph.size() != form.dims()[dir] {
            return Err(Error::argument("dominance graphs do not match the form"));
        }
        let row = (0..graph.size())
            .map(|j| {
                graph.proper_outcome(j).map(|o| o.0).ok_or_else(|| {
                    Error::precondition(format!(
                        "hyperplane {j} in direction {dir} has no proper outcome"
                    ))
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        proper.push(row);
    }
    let coords: Vec<Vec<usize>> = (0..form.len()).map(|i| form.coords(i)).collect();
    for xi in 0..form.len() {
        let gx = form.raw(xi);
        let x = &coords[xi];
        for (yi, y) in coords.iter().enumerate().skip(xi + 1) {
            let gy = form.raw(yi);
            if gx == gy {
                continue;
            }
            let mut k = 0;
            let mut ok = true;
            for d in 0..n {
                if x[d] != y[d] {
                    k += 1;
                    if proper[d][x[d]] == gx || proper[d][y[d]] == gy {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Ok(Some(KBox {
                    x: x.clone(),
                    y: y.clone(),
                    k,
                }));
            }
        }
    }
    Ok(None)
}
