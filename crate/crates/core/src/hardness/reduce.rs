//! 3-SAT to assignability of partially defined 3-person forms, and the fully
//! defined 4-person variant.
//!
//! Clause `i` owns outcome `c{i}` and the box hyperplanes with index `i`.
//! Occurrence `(i, q)` is true when hyperplane `i` of direction `q` carries
//! `c{i}`. Every gadget forces a box hyperplane it touches to carry either
//! `c{i}` or the occurrence's false outcome `f{i}.{q}`, which is shared by all
//! gadgets touching that occurrence.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::assign::verify;
use crate::error::{Error, Result};
use crate::form::{Alphabet, Assignment, GameForm, Hyperplane, Outcome, UNDEFINED};

use super::cnf3::ThreeCnf;

/// Literal `position` (0, 1 or 2) of clause `clause`, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Occurrence {
    pub clause: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum GadgetType {
    /// Same position, same polarity.
    SameEqual,
    /// Different positions, same polarity.
    CrossEqual,
    /// Same position, opposite polarity.
    SameOpposite,
    /// Different positions, opposite polarity.
    CrossOpposite,
}

impl GadgetType {
    pub fn number(self) -> u8 {
        match self {
            GadgetType::SameEqual => 1,
            GadgetType::CrossEqual => 2,
            GadgetType::SameOpposite => 3,
            GadgetType::CrossOpposite => 4,
        }
    }

    /// Whether the two occurrences must take the same truth value.
    pub fn binds_equal(self) -> bool {
        matches!(self, GadgetType::SameEqual | GadgetType::CrossEqual)
    }
}

impl From<GadgetType> for u8 {
    fn from(t: GadgetType) -> u8 {
        t.number()
    }
}

impl TryFrom<u8> for GadgetType {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(GadgetType::SameEqual),
            2 => Ok(GadgetType::CrossEqual),
            3 => Ok(GadgetType::SameOpposite),
            4 => Ok(GadgetType::CrossOpposite),
            other => Err(format!("gadget type {other} is not in 1..=4")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    #[serde(rename = "type")]
    pub kind: GadgetType,
    pub first: Occurrence,
    pub second: Occurrence,
    /// Added hyperplane indices, one list per direction.
    pub added: Vec<Vec<usize>>,
    /// Outcomes used by this gadget only.
    pub outcomes: Vec<String>,
    /// Shared false outcomes of `first` and `second`.
    pub false_outcomes: [String; 2],
    /// `[direction, index]` of the forcing cube's front and back planes.
    pub front: [usize; 2],
    pub back: [usize; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Partial3,
    Full4,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Partial3 => "partial3",
            Mode::Full4 => "full4",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partial3" => Ok(Mode::Partial3),
            "full4" => Ok(Mode::Full4),
            other => Err(Error::argument(format!(
                "unknown mode {other:?} (expected partial3 or full4)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Layout {
    pub mode: Mode,
    pub formula: ThreeCnf,
    pub dims: Vec<usize>,
    pub clause_outcomes: Vec<String>,
    /// Box hyperplane index of each clause in directions 0, 1, 2.
    pub clause_planes: Vec<[usize; 3]>,
    pub gadgets: Vec<Gadget>,
}

#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub form: GameForm,
    pub layout: Layout,
}

const CUBE_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

struct Builder {
    alphabet: Alphabet,
    next: [usize; 3],
    cells: Vec<([usize; 3], u32)>,
    false_ids: HashMap<Occurrence, Outcome>,
}

impl Builder {
    fn alloc(&mut self, direction: usize, count: usize) -> Vec<usize> {
        let start = self.next[direction];
        self.next[direction] += count;
        (start..start + count).collect()
    }

    /// `at[r]` is the coordinate along direction `roles[r]`.
    fn put(&mut self, roles: [usize; 3], at: [usize; 3], o: Outcome) {
        let mut x = [0; 3];
        for r in 0..3 {
            x[roles[r]] = at[r];
        }
        self.cells.push((x, o.0));
    }

    fn false_outcome(&mut self, occ: Occurrence) -> Outcome {
        if let Some(&o) = self.false_ids.get(&occ) {
            return o;
        }
        let o = self
            .alphabet
            .intern(&format!("f{}.{}", occ.clause + 1, occ.position + 1));
        self.false_ids.insert(occ, o);
        o
    }

    fn fresh(&mut self, gadget: usize, names: &[&str]) -> Vec<Outcome> {
        names
            .iter()
            .map(|s| self.alphabet.intern(&format!("g{}.{s}", gadget + 1)))
            .collect()
    }

    /// Forcing cube on planes `l`, `p`, `k` (roles 0, 1, 2): front `k[0]`
    /// gets `o[0]`, back `k[1]` gets `o[1]`.
    fn cube(&mut self, roles: [usize; 3], l: &[usize], p: &[usize], k: &[usize], o: &[Outcome]) {
        let [a, b, c, d, e, f] = [o[0], o[1], o[2], o[3], o[4], o[5]];
        self.put(roles, [l[0], p[0], k[0]], a);
        self.put(roles, [l[0], p[1], k[0]], c);
        self.put(roles, [l[1], p[0], k[0]], d);
        self.put(roles, [l[1], p[1], k[0]], a);
        self.put(roles, [l[0], p[0], k[1]], b);
        self.put(roles, [l[0], p[1], k[1]], f);
        self.put(roles, [l[1], p[0], k[1]], e);
        self.put(roles, [l[1], p[1], k[1]], b);
    }
}

fn gadget_type(lit_i: i32, lit_j: i32, same_position: bool) -> GadgetType {
    match (lit_i == lit_j, same_position) {
        (true, true) => GadgetType::SameEqual,
        (true, false) => GadgetType::CrossEqual,
        (false, true) => GadgetType::SameOpposite,
        (false, false) => GadgetType::CrossOpposite,
    }
}

/// Pairs of occurrences of the same variable, in order of the first
/// occurrence and then of the second.
fn occurrence_pairs(phi: &ThreeCnf) -> Vec<(Occurrence, Occurrence)> {
    let mut occ: Vec<(Occurrence, i32)> = Vec::new();
    for (clause, c) in phi.clauses().iter().enumerate() {
        for (position, &lit) in c.iter().enumerate() {
            occ.push((Occurrence { clause, position }, lit));
        }
    }
    let mut pairs = Vec::new();
    for (s, &(oi, li)) in occ.iter().enumerate() {
        for &(oj, lj) in &occ[s + 1..] {
            if li.abs() == lj.abs() {
                pairs.push((oi, oj));
            }
        }
    }
    pairs
}

fn literal(phi: &ThreeCnf, o: Occurrence) -> i32 {
    phi.clauses()[o.clause][o.position]
}

/// Partially defined 3-person form assignable exactly when `phi` is
/// satisfiable.
pub fn reduce_partial3(phi: &ThreeCnf) -> Result<ReductionArtifact> {
    phi.validate()?;
    let m = phi.num_clauses();
    let mut b = Builder {
        alphabet: Alphabet::default(),
        next: [m; 3],
        cells: Vec::new(),
        false_ids: HashMap::new(),
    };
    let clause_ids: Vec<Outcome> = (0..m)
        .map(|i| b.alphabet.intern(&format!("c{}", i + 1)))
        .collect();
    for (i, &c) in clause_ids.iter().enumerate() {
        b.cells.push(([i, i, i], c.0));
    }

    let mut gadgets = Vec::new();
    for (t, (oi, oj)) in occurrence_pairs(phi).into_iter().enumerate() {
        let kind = gadget_type(
            literal(phi, oi),
            literal(phi, oj),
            oi.position == oj.position,
        );
        let (ci, cj) = (clause_ids[oi.clause], clause_ids[oj.clause]);
        let (fi, fj) = (b.false_outcome(oi), b.false_outcome(oj));
        let before = b.next;
        let (outcomes, front, back);
        match kind {
            GadgetType::SameEqual => {
                let q = oi.position;
                let roles = [q, (q + 1) % 3, (q + 2) % 3];
                let l = b.alloc(roles[1], 2);
                let k = b.alloc(roles[2], 2);
                let o = b.fresh(t, &CUBE_NAMES[..2]);
                let (x, y) = (oi.clause, oj.clause);
                b.put(roles, [x, l[1], k[0]], ci);
                b.put(roles, [x, l[0], k[0]], o[0]);
                b.put(roles, [y, l[1], k[0]], o[0]);
                b.put(roles, [y, l[0], k[0]], cj);
                b.put(roles, [x, l[1], k[1]], o[1]);
                b.put(roles, [x, l[0], k[1]], fi);
                b.put(roles, [y, l[1], k[1]], fj);
                b.put(roles, [y, l[0], k[1]], o[1]);
                front = [roles[2], k[0]];
                back = [roles[2], k[1]];
                outcomes = o;
            }
            GadgetType::SameOpposite => {
                let q = oi.position;
                let roles = [q, (q + 1) % 3, (q + 2) % 3];
                let l = b.alloc(roles[0], 2);
                let p = b.alloc(roles[1], 4);
                let k = b.alloc(roles[2], 2);
                let o = b.fresh(t, &CUBE_NAMES);
                b.cube(roles, &l, &p[..2], &k, &o);
                let (x, y) = (oi.clause, oj.clause);
                b.put(roles, [x, p[2], k[0]], fi);
                b.put(roles, [x, p[3], k[0]], ci);
                b.put(roles, [y, p[2], k[0]], fj);
                b.put(roles, [y, p[3], k[0]], cj);
                front = [roles[2], k[0]];
                back = [roles[2], k[1]];
                outcomes = o;
            }
            GadgetType::CrossEqual | GadgetType::CrossOpposite => {
                let roles = [oi.position, oj.position, 3 - oi.position - oj.position];
                let l = b.alloc(roles[0], 4);
                let p = b.alloc(roles[1], 5);
                let k = b.alloc(roles[2], 2);
                let o = b.fresh(t, &["a", "b", "c", "d", "e", "f", "g1", "g2"]);
                b.cube(roles, &l[..2], &p[..2], &k, &o[..6]);
                let (g1, g2) = (o[6], o[7]);
                let (x, a1, a2) = (oi.clause, l[2], l[3]);
                let (y, b1, b2, b3) = (oj.clause, p[2], p[3], p[4]);
                // a1 carries the link: fj or g1 for equal, cj or g1 for opposite
                let (link, y_far) = if kind == GadgetType::CrossEqual {
                    (fj, cj)
                } else {
                    (cj, fj)
                };
                b.put(roles, [x, b1, k[0]], ci);
                b.put(roles, [x, b2, k[0]], fi);
                b.put(roles, [a1, b1, k[0]], g1);
                b.put(roles, [a1, b2, k[0]], link);
                b.put(roles, [a1, y, k[1]], link);
                b.put(roles, [a1, b3, k[1]], g1);
                b.put(roles, [a2, b3, k[1]], g2);
                b.put(roles, [a2, y, k[1]], y_far);
                front = [roles[2], k[0]];
                back = [roles[2], k[1]];
                outcomes = o;
            }
        }
        let added = (0..3).map(|d| (before[d]..b.next[d]).collect()).collect();
        let name = |o: Outcome| b.alphabet.name(o).to_string();
        gadgets.push(Gadget {
            kind,
            first: oi,
            second: oj,
            added,
            outcomes: outcomes.iter().map(|&o| name(o)).collect(),
            false_outcomes: [name(fi), name(fj)],
            front,
            back,
        });
    }

    let dims = b.next.to_vec();
    let strides = [dims[1] * dims[2], dims[2], 1];
    let mut cells = vec![UNDEFINED; dims.iter().product()];
    for (x, o) in &b.cells {
        let idx = x[0] * strides[0] + x[1] * strides[1] + x[2];
        if cells[idx] != UNDEFINED {
            return Err(Error::Invariant(format!(
                "reduction placed two outcomes at {x:?}"
            )));
        }
        cells[idx] = *o;
    }
    let form = GameForm::from_raw(dims.clone(), b.alphabet, cells)?;
    let layout = Layout {
        mode: Mode::Partial3,
        formula: phi.clone(),
        dims,
        clause_outcomes: clause_ids
            .iter()
            .map(|&c| form.alphabet().name(c).to_string())
            .collect(),
        clause_planes: (0..m).map(|i| [i, i, i]).collect(),
        gadgets,
    };
    Ok(ReductionArtifact { form, layout })
}

/// Whether every formula left after deleting any two clauses still has, in
/// each of the three positions, a literal whose variable occurs elsewhere.
pub fn check_deletion_property(phi: &ThreeCnf) -> bool {
    let counts = phi.occurrence_counts();
    (0..3).all(|q| {
        let nontrivial = phi
            .clauses()
            .iter()
            .filter(|c| counts[c[q].unsigned_abs() as usize] > 1)
            .count();
        // two deletions can remove at most two of them
        nontrivial >= 3
    })
}

/// Fully defined 4-person form: undefined cells become `*` and a player with
/// a single strategy is appended.
pub fn reduce_full4(phi: &ThreeCnf) -> Result<ReductionArtifact> {
    phi.validate()?;
    if !check_deletion_property(phi) {
        return Err(Error::Validation(
            "formula fails the deletion property: some two clauses cannot be removed \
             while keeping non-trivial literals in all three positions"
                .into(),
        ));
    }
    let partial = reduce_partial3(phi)?;
    let form = partial.form.fill_undefined().with_trivial_player();
    let mut layout = partial.layout;
    layout.mode = Mode::Full4;
    layout.dims = form.dims().to_vec();
    Ok(ReductionArtifact { form, layout })
}

/// Rebuilds the artifact a layout was produced from.
pub fn rebuild(layout: &Layout) -> Result<ReductionArtifact> {
    let artifact = match layout.mode {
        Mode::Partial3 => reduce_partial3(&layout.formula)?,
        Mode::Full4 => reduce_full4(&layout.formula)?,
    };
    if artifact.layout != *layout {
        return Err(Error::Validation(
            "layout does not match the reduction of its own formula".into(),
        ));
    }
    Ok(artifact)
}

/// Reads a satisfying valuation (`values[v - 1]`) off a feasible assignment.
pub fn decode(artifact: &ReductionArtifact, a: &Assignment) -> Result<Vec<bool>> {
    if !verify(&artifact.form, a)? {
        return Err(Error::argument(
            "assignment is not feasible for the reduced form",
        ));
    }
    let phi = &artifact.layout.formula;
    let alphabet = artifact.form.alphabet();
    let mut values = vec![false; phi.num_vars()];
    let mut set: Vec<Option<bool>> = vec![None; phi.num_vars()];
    for (i, clause) in phi.clauses().iter().enumerate() {
        let ci = alphabet
            .get(&artifact.layout.clause_outcomes[i])
            .ok_or_else(|| Error::Invariant(format!("clause outcome {} missing", i + 1)))?;
        for (q, &lit) in clause.iter().enumerate() {
            if a.get(q, artifact.layout.clause_planes[i][q]) != Some(ci) {
                continue;
            }
            let v = lit.unsigned_abs() as usize - 1;
            let value = lit > 0;
            if set[v].is_some_and(|prev| prev != value) {
                return Err(Error::Invariant(format!(
                    "occurrences of variable {} decode to both values",
                    v + 1
                )));
            }
            set[v] = Some(value);
            values[v] = value;
        }
    }
    if !phi.evaluate(&values) {
        return Err(Error::Invariant(
            "decoded valuation does not satisfy the formula".into(),
        ));
    }
    Ok(values)
}

/// One gadget cut out of a reduction together with the hyperplanes and
/// outcomes its semantics talks about, in local coordinates.
#[derive(Clone, Debug)]
pub struct GadgetBlock {
    pub form: GameForm,
    pub kind: GadgetType,
    pub first: Hyperplane,
    pub second: Hyperplane,
    pub first_true: Outcome,
    pub second_true: Outcome,
    pub front: Hyperplane,
    pub back: Hyperplane,
    pub front_outcome: Outcome,
    pub back_outcome: Outcome,
}

impl GadgetBlock {
    /// Truth values of the two bound occurrences under `a`.
    pub fn truth(&self, a: &Assignment) -> (bool, bool) {
        (
            a.get(self.first.direction, self.first.index) == Some(self.first_true),
            a.get(self.second.direction, self.second.index) == Some(self.second_true),
        )
    }

    pub fn cube_forced(&self, a: &Assignment) -> bool {
        a.get(self.front.direction, self.front.index) == Some(self.front_outcome)
            && a.get(self.back.direction, self.back.index) == Some(self.back_outcome)
    }
}

/// The subform spanned by gadget `g`'s added hyperplanes and the two box
/// hyperplanes it binds.
pub fn gadget_block(artifact: &ReductionArtifact, g: usize) -> Result<GadgetBlock> {
    let layout = &artifact.layout;
    let gadget = layout
        .gadgets
        .get(g)
        .ok_or_else(|| Error::argument(format!("no gadget {g}")))?;
    let n = artifact.form.n();
    let mut keep: Vec<Vec<usize>> = (0..n)
        .map(|d| {
            if d < 3 {
                gadget.added[d].clone()
            } else {
                vec![0]
            }
        })
        .collect();
    let box_plane =
        |o: Occurrence| Hyperplane::new(o.position, layout.clause_planes[o.clause][o.position]);
    let (hf, hs) = (box_plane(gadget.first), box_plane(gadget.second));
    keep[hf.direction].push(hf.index);
    keep[hs.direction].push(hs.index);
    for list in &mut keep {
        list.sort_unstable();
    }
    let local = |h: Hyperplane| -> Hyperplane {
        let index = keep[h.direction]
            .binary_search(&h.index)
            .expect("kept plane");
        Hyperplane::new(h.direction, index)
    };
    let form = artifact.form.restrict(&keep)?.compact();
    let alphabet = form.alphabet();
    let lookup = |name: &str| {
        alphabet
            .get(name)
            .ok_or_else(|| Error::Invariant(format!("outcome {name:?} missing")))
    };
    let first = local(hf);
    let second = local(hs);
    let front = local(Hyperplane::new(gadget.front[0], gadget.front[1]));
    let back = local(Hyperplane::new(gadget.back[0], gadget.back[1]));
    Ok(GadgetBlock {
        kind: gadget.kind,
        first,
        second,
        first_true: lookup(&layout.clause_outcomes[gadget.first.clause])?,
        second_true: lookup(&layout.clause_outcomes[gadget.second.clause])?,
        front,
        back,
        front_outcome: lookup(&gadget.outcomes[0])?,
        back_outcome: lookup(&gadget.outcomes[1])?,
        form,
    })
}
