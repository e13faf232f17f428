//! Complete SAT search: DPLL with unit propagation over two watched literals,
//! extended with conflict-driven clause learning, non-chronological
//! backtracking, activity-based branching and Luby restarts. The search is
//! fully deterministic.

use super::cnf::CnfFormula;

const UNDEF: i8 = 0;
const TRUE: i8 = 1;
const FALSE: i8 = -1;
const NO_REASON: u32 = u32::MAX;

#[inline]
fn lit_code(lit: i32) -> u32 {
    (lit.unsigned_abs() - 1) * 2 + u32::from(lit < 0)
}

#[inline]
fn var_of(code: u32) -> usize {
    (code >> 1) as usize
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub restarts: u64,
}

/// Max-heap of variables keyed by activity.
struct Heap {
    heap: Vec<u32>,
    pos: Vec<u32>,
}

const NOT_IN_HEAP: u32 = u32::MAX;

impl Heap {
    fn new(n: usize) -> Self {
        Heap {
            heap: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
        }
    }

    fn contains(&self, v: usize) -> bool {
        self.pos[v] != NOT_IN_HEAP
    }

    fn up(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            let pv = self.heap[parent];
            if act[pv as usize] >= act[v as usize] {
                break;
            }
            self.heap[i] = pv;
            self.pos[pv as usize] = i as u32;
            i = parent;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i as u32;
    }

    fn down(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        let len = self.heap.len();
        loop {
            let left = 2 * i + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let child =
                if right < len && act[self.heap[right] as usize] > act[self.heap[left] as usize] {
                    right
                } else {
                    left
                };
            let cv = self.heap[child];
            if act[cv as usize] <= act[v as usize] {
                break;
            }
            self.heap[i] = cv;
            self.pos[cv as usize] = i as u32;
            i = child;
        }
        self.heap[i] = v;
        self.pos[v as usize] = i as u32;
    }

    fn insert(&mut self, v: usize, act: &[f64]) {
        if self.contains(v) {
            return;
        }
        self.heap.push(v as u32);
        let i = self.heap.len() - 1;
        self.pos[v] = i as u32;
        self.up(i, act);
    }

    fn pop(&mut self, act: &[f64]) -> Option<usize> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty");
        self.pos[top as usize] = NOT_IN_HEAP;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last as usize] = 0;
            self.down(0, act);
        }
        Some(top as usize)
    }
}

struct Solver {
    lits: Vec<u32>,
    clauses: Vec<(u32, u32)>,
    watches: Vec<Vec<(u32, u32)>>,
    assigns: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    phase: Vec<bool>,
    trail: Vec<u32>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    heap: Heap,
    seen: Vec<bool>,
    unsat: bool,
    stats: SearchStats,
}

impl Solver {
    fn new(num_vars: usize) -> Self {
        Solver {
            lits: Vec::new(),
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * num_vars],
            assigns: vec![UNDEF; num_vars],
            level: vec![0; num_vars],
            reason: vec![NO_REASON; num_vars],
            phase: vec![false; num_vars],
            trail: Vec::with_capacity(num_vars),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; num_vars],
            var_inc: 1.0,
            heap: Heap::new(num_vars),
            seen: vec![false; num_vars],
            unsat: false,
            stats: SearchStats::default(),
        }
    }

    #[inline]
    fn value(&self, code: u32) -> i8 {
        let v = self.assigns[var_of(code)];
        if code & 1 == 1 {
            -v
        } else {
            v
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, code: u32, reason: u32) {
        let v = var_of(code);
        self.assigns[v] = if code & 1 == 1 { FALSE } else { TRUE };
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(code);
    }

    fn attach(&mut self, lits: &[u32], learnt_reason: bool) -> u32 {
        let cr = self.clauses.len() as u32;
        self.clauses
            .push((self.lits.len() as u32, lits.len() as u32));
        self.lits.extend_from_slice(lits);
        self.watches[lits[0] as usize].push((cr, lits[1]));
        self.watches[lits[1] as usize].push((cr, lits[0]));
        if learnt_reason {
            self.enqueue(lits[0], cr);
        }
        cr
    }

    /// Adds an input clause at decision level 0.
    fn add_clause(&mut self, clause: &[i32], buf: &mut Vec<u32>) {
        if self.unsat {
            return;
        }
        buf.clear();
        buf.extend(clause.iter().map(|&l| lit_code(l)));
        buf.sort_unstable();
        buf.dedup();
        if buf.windows(2).any(|w| w[0] ^ 1 == w[1]) {
            return;
        }
        match buf.len() {
            0 => self.unsat = true,
            1 => match self.value(buf[0]) {
                TRUE => {}
                FALSE => self.unsat = true,
                _ => self.enqueue(buf[0], NO_REASON),
            },
            _ => {
                let lits = std::mem::take(buf);
                self.attach(&lits, false);
                *buf = lits;
            }
        }
    }

    fn propagate(&mut self) -> Option<u32> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_lit = p ^ 1;
            let mut ws = std::mem::take(&mut self.watches[false_lit as usize]);
            let (mut i, mut j) = (0, 0);
            let mut conflict = None;
            while i < ws.len() {
                let (cr, blocker) = ws[i];
                if self.value(blocker) == TRUE {
                    ws[j] = ws[i];
                    i += 1;
                    j += 1;
                    continue;
                }
                let (start, len) = self.clauses[cr as usize];
                let (start, len) = (start as usize, len as usize);
                if self.lits[start] == false_lit {
                    self.lits.swap(start, start + 1);
                }
                i += 1;
                let first = self.lits[start];
                if first != blocker && self.value(first) == TRUE {
                    ws[j] = (cr, first);
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..len {
                    let l = self.lits[start + k];
                    if self.value(l) != FALSE {
                        self.lits.swap(start + 1, start + k);
                        self.watches[l as usize].push((cr, first));
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = (cr, first);
                j += 1;
                if self.value(first) == FALSE {
                    conflict = Some(cr);
                    while i < ws.len() {
                        ws[j] = ws[i];
                        i += 1;
                        j += 1;
                    }
                } else {
                    self.enqueue(first, cr);
                }
            }
            ws.truncate(j);
            self.watches[false_lit as usize] = ws;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        if self.heap.contains(v) {
            let i = self.heap.pos[v] as usize;
            self.heap.up(i, &self.activity);
        }
    }

    /// First-UIP learning; returns the learnt clause (asserting literal
    /// first) and the level to jump back to.
    fn analyze(&mut self, mut cr: u32) -> (Vec<u32>, u32) {
        let mut learnt = vec![0u32];
        let mut path = 0;
        let mut p: Option<u32> = None;
        let mut idx = self.trail.len();
        let current = self.decision_level();
        loop {
            let (start, len) = self.clauses[cr as usize];
            let skip = usize::from(p.is_some());
            for k in skip..len as usize {
                let q = self.lits[start as usize + k];
                let v = var_of(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump(v);
                    if self.level[v] >= current {
                        path += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[var_of(self.trail[idx])] {
                    break;
                }
            }
            let lit = self.trail[idx];
            let v = var_of(lit);
            self.seen[v] = false;
            path -= 1;
            p = Some(lit);
            if path == 0 {
                break;
            }
            cr = self.reason[v];
        }
        learnt[0] = p.expect("conflict involves the current level") ^ 1;
        for &q in &learnt[1..] {
            self.seen[var_of(q)] = false;
        }
        let mut back = 0;
        if learnt.len() > 1 {
            let mut max_i = 1;
            for i in 2..learnt.len() {
                if self.level[var_of(learnt[i])] > self.level[var_of(learnt[max_i])] {
                    max_i = i;
                }
            }
            learnt.swap(1, max_i);
            back = self.level[var_of(learnt[1])];
        }
        (learnt, back)
    }

    fn backtrack(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let lim = self.trail_lim[level as usize];
        for i in (lim..self.trail.len()).rev() {
            let code = self.trail[i];
            let v = var_of(code);
            self.phase[v] = code & 1 == 0;
            self.assigns[v] = UNDEF;
            self.reason[v] = NO_REASON;
            self.heap.insert(v, &self.activity);
        }
        self.trail.truncate(lim);
        self.trail_lim.truncate(level as usize);
        self.qhead = lim;
    }

    fn pick_branch(&mut self) -> Option<u32> {
        while let Some(v) = self.heap.pop(&self.activity) {
            if self.assigns[v] == UNDEF {
                return Some(2 * v as u32 + u32::from(!self.phase[v]));
            }
        }
        None
    }

    fn solve(&mut self) -> bool {
        if self.unsat {
            return false;
        }
        let mut restart_round = 0u32;
        loop {
            let budget = 100 * luby(restart_round);
            restart_round += 1;
            match self.search(budget) {
                Some(result) => return result,
                None => {
                    self.stats.restarts += 1;
                    self.backtrack(0);
                }
            }
        }
    }

    /// `Some(verdict)` when decided, `None` when the conflict budget ran out.
    fn search(&mut self, budget: u64) -> Option<bool> {
        let mut conflicts = 0u64;
        loop {
            if let Some(cr) = self.propagate() {
                self.stats.conflicts += 1;
                conflicts += 1;
                if self.decision_level() == 0 {
                    self.unsat = true;
                    return Some(false);
                }
                let (learnt, back) = self.analyze(cr);
                self.backtrack(back);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    self.attach(&learnt, true);
                }
                self.var_inc /= 0.95;
            } else {
                if conflicts >= budget {
                    return None;
                }
                match self.pick_branch() {
                    None => return Some(true),
                    Some(lit) => {
                        self.stats.decisions += 1;
                        self.trail_lim.push(self.trail.len());
                        self.enqueue(lit, NO_REASON);
                    }
                }
            }
        }
    }
}

fn luby(i: u32) -> u64 {
    // 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
    let mut i = u64::from(i);
    let (mut size, mut seq) = (1u64, 0u32);
    while size < i + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != i {
        size = (size - 1) >> 1;
        seq -= 1;
        i %= size;
    }
    1u64 << seq
}

/// Decides `f` together with the given unit assumptions. Returns a model
/// indexed by variable id (index 0 unused) when satisfiable.
pub fn solve_with_stats(f: &CnfFormula, assumptions: &[i32]) -> (Option<Vec<bool>>, SearchStats) {
    let mut s = Solver::new(f.num_vars());
    let mut buf = Vec::new();
    for &a in assumptions {
        s.add_clause(&[a], &mut buf);
    }
    for c in f.clauses() {
        s.add_clause(c, &mut buf);
    }
    let sat = s.solve();
    let model = sat.then(|| {
        std::iter::once(false)
            .chain(s.assigns.iter().map(|&v| v == TRUE))
            .collect()
    });
    (model, s.stats)
}

pub fn solve_dpll(f: &CnfFormula) -> Option<Vec<bool>> {
    solve_with_stats(f, &[]).0
}

pub fn solve_dpll_assuming(f: &CnfFormula, assumptions: &[i32]) -> Option<Vec<bool>> {
    solve_with_stats(f, assumptions).0
}
