//! Linear-time 2-SAT via strongly connected components of the implication graph.

use crate::error::{Error, Result};

use super::cnf::CnfFormula;

fn node(lit: i32) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    2 * v + usize::from(lit < 0)
}

/// Returns a model indexed by variable id (index 0 unused), or `None` when
/// unsatisfiable. Clauses longer than two literals are rejected.
pub fn solve_2sat(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let nodes = 2 * f.num_vars();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(2 * f.num_clauses());
    for c in f.clauses() {
        match *c {
            [a] => edges.push((node(-a), node(a))),
            [a, b] => {
                edges.push((node(-a), node(b)));
                edges.push((node(-b), node(a)));
            }
            _ => {
                return Err(Error::argument(format!(
                    "clause of length {} in a 2-SAT instance",
                    c.len()
                )))
            }
        }
    }
    // adjacency in CSR form
    let mut offsets = vec![0usize; nodes + 1];
    for &(u, _) in &edges {
        offsets[u + 1] += 1;
    }
    for i in 0..nodes {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut targets = vec![0usize; edges.len()];
    for &(u, w) in &edges {
        targets[fill[u]] = w;
        fill[u] += 1;
    }

    let comp = tarjan(nodes, &offsets, &targets);
    let mut model = vec![false; f.num_vars() + 1];
    for v in 0..f.num_vars() {
        let (pos, neg) = (comp[2 * v], comp[2 * v + 1]);
        if pos == neg {
            return Ok(None);
        }
        // components are numbered in reverse topological order
        model[v + 1] = pos < neg;
    }
    Ok(Some(model))
}

/// Iterative Tarjan; returns the component id of every node.
fn tarjan(nodes: usize, offsets: &[usize], targets: &[usize]) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut index = vec![NONE; nodes];
    let mut low = vec![0; nodes];
    let mut on_stack = vec![false; nodes];
    let mut comp = vec![NONE; nodes];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut counter = 0;
    let mut comps = 0;
    for root in 0..nodes {
        if index[root] != NONE {
            continue;
        }
        call.push((root, offsets[root]));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(u, next)) = call.last() {
            if next < offsets[u + 1] {
                let w = targets[next];
                if let Some(top) = call.last_mut() {
                    top.1 += 1;
                }
                if index[w] == NONE {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, offsets[w]));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[u]);
                }
                if low[u] == index[u] {
                    loop {
                        let w = stack.pop().expect("component members are on the stack");
                        on_stack[w] = false;
                        comp[w] = comps;
                        if w == u {
                            break;
                        }
                    }
                    comps += 1;
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(vars: usize, clauses: &[&[i32]]) -> CnfFormula {
        let owned: Vec<Vec<i32>> = clauses.iter().map(|c| c.to_vec()).collect();
        CnfFormula::from_clauses(vars, &owned).unwrap()
    }

    #[test]
    fn satisfiable_chain() {
        let f = cnf(3, &[&[1, 2], &[-1, 3], &[-3], &[2, -2]]);
        let m = solve_2sat(&f).unwrap().unwrap();
        assert!(f.is_satisfied_by(&m));
        assert!(!m[1] && !m[3] && m[2]);
    }

    #[test]
    fn contradiction() {
        let f = cnf(2, &[&[1, 2], &[1, -2], &[-1, 2], &[-1, -2]]);
        assert_eq!(solve_2sat(&f).unwrap(), None);
    }

    #[test]
    fn rejects_long_clauses() {
        let f = cnf(3, &[&[1, 2, 3]]);
        assert!(solve_2sat(&f).is_err());
    }
}
