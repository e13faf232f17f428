use proptest::prelude::*;

use gameform::analysis::{
    build_dominance_graphs, classify_pair, find_k_box, find_sink, is_wtt, is_wtt_by_dominance,
    DominanceKind,
};
use gameform::generate::{outcome_name, random_three_cnf, random_wtt_walk};
use gameform::hardness::ThreeCnf;
use gameform::io::{read_assignment, read_form, write_assignment, write_form, GameFormDocument};
use gameform::satenc::{emit_dimacs, encode, parse_dimacs, solve, solve_two_person, Method};
use gameform::{
    assign_wtt, normalize, verify, Alphabet, Assignment, GameForm, Hyperplane, Outcome,
};

fn build(dims: Vec<usize>, k: usize, cells: Vec<Option<u32>>) -> GameForm {
    let alphabet = Alphabet::new((0..k).map(outcome_name)).unwrap();
    let cells = cells.into_iter().map(|c| c.map(Outcome)).collect();
    GameForm::new(dims, alphabet, cells).unwrap()
}

fn forms(max_cells: usize, undefined: bool) -> impl Strategy<Value = GameForm> {
    (prop::collection::vec(1usize..=3, 1..=3), 1usize..=4)
        .prop_filter("size", move |(d, _)| {
            d.iter().product::<usize>() <= max_cells
        })
        .prop_flat_map(move |(dims, k)| {
            let p = dims.iter().product::<usize>();
            let cell = if undefined {
                prop::option::weighted(0.8, 0..k as u32).boxed()
            } else {
                (0..k as u32).prop_map(Some).boxed()
            };
            (Just(dims), Just(k), prop::collection::vec(cell, p))
        })
        .prop_map(|(dims, k, cells)| build(dims, k, cells))
}

fn wtt_forms() -> impl Strategy<Value = GameForm> {
    (
        any::<u64>(),
        prop::collection::vec(1usize..=3, 2..=3),
        2usize..=4,
        0usize..200,
    )
        .prop_map(|(seed, dims, k, steps)| random_wtt_walk(seed, &dims, k, steps, 0.15).unwrap())
}

/// Every 2×2 restriction read off by coordinates: two profiles in `H_j`
/// and their translates in `H_k`.
fn wtt_by_definition(g: &GameForm) -> bool {
    let all: Vec<Vec<usize>> = (0..g.len()).map(|i| g.coords(i)).collect();
    for dir in 0..g.n() {
        for j in 0..g.dims()[dir] {
            for k in j + 1..g.dims()[dir] {
                let base: Vec<&Vec<usize>> = all.iter().filter(|x| x[dir] == j).collect();
                for (s, x) in base.iter().enumerate() {
                    for y in &base[s + 1..] {
                        let mut x2 = (*x).clone();
                        let mut y2 = (*y).clone();
                        x2[dir] = k;
                        y2[dir] = k;
                        let v = |c: &Vec<usize>| g.get(c).unwrap();
                        let (a, b, c, d) = (v(x), v(y), v(&x2), v(&y2));
                        if a != b && c != d && a != c && b != d {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Assignability by trying every useful value on every hyperplane.
fn assignable_by_search(g: &GameForm) -> bool {
    let mut slots: Vec<(usize, Vec<Option<Outcome>>)> = Vec::new();
    for dir in 0..g.n() {
        for j in 0..g.dims()[dir] {
            let mut values: Vec<Option<Outcome>> = g
                .hyperplane_indices(Hyperplane::new(dir, j))
                .filter_map(|i| g.cell(i))
                .map(Some)
                .collect();
            values.sort();
            values.dedup();
            if values.is_empty() {
                values.push(None);
            }
            slots.push((dir, values));
        }
    }
    let mut choice = vec![0usize; slots.len()];
    loop {
        let mut entries: Vec<Vec<Option<Outcome>>> =
            g.dims().iter().map(|&d| Vec::with_capacity(d)).collect();
        for (s, (dir, values)) in slots.iter().enumerate() {
            entries[*dir].push(values[choice[s]]);
        }
        let covered = (0..g.len()).all(|i| match g.cell(i) {
            None => true,
            Some(o) => g
                .coords(i)
                .iter()
                .enumerate()
                .any(|(d, &x)| entries[d][x] == Some(o)),
        });
        if covered {
            return true;
        }
        let mut s = 0;
        loop {
            if s == slots.len() {
                return false;
            }
            choice[s] += 1;
            if choice[s] < slots[s].1.len() {
                break;
            }
            choice[s] = 0;
            s += 1;
        }
    }
}

fn sorted_clauses(text: &str) -> Vec<Vec<i32>> {
    let f = parse_dimacs(text).unwrap();
    let mut out: Vec<Vec<i32>> = f.clauses().map(|c| c.to_vec()).collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn documents_round_trip(g in forms(27, true), sparse in any::<bool>()) {
        let text = write_form(&g, sparse);
        let doc = GameFormDocument::parse(&text).unwrap();
        prop_assert_eq!(&doc, &GameFormDocument::from_form(&g, sparse));
        prop_assert_eq!(read_form(&text).unwrap(), g.clone());
        let a = Assignment::new(
            g.dims().iter().enumerate().map(|(i, &d)| (0..d).map(|j| g.alphabet().outcomes().nth((i + j) % 2)).collect()).collect(),
        );
        prop_assert_eq!(read_assignment(&write_assignment(&a, g.alphabet()), &g).unwrap(), a);
    }

    #[test]
    fn wtt_routes_agree(g in forms(27, true)) {
        let direct = is_wtt(&g);
        prop_assert_eq!(direct, wtt_by_definition(&g));
        prop_assert_eq!(direct, is_wtt_by_dominance(&g));
    }

    #[test]
    fn solvers_agree_with_search(g in forms(12, true)) {
        let expected = assignable_by_search(&g);
        for m in [Method::Dpll, Method::Brute] {
            let a = solve(&g, m).unwrap();
            prop_assert_eq!(a.is_some(), expected, "{}", m);
            if let Some(a) = a {
                prop_assert!(verify(&g, &a).unwrap());
            }
        }
        if g.n() == 2 {
            let a = solve_two_person(&g).unwrap();
            prop_assert_eq!(a.is_some(), expected);
            if let Some(a) = a {
                prop_assert!(verify(&g, &a).unwrap());
            }
        }
    }

    #[test]
    fn wtt_forms_are_assigned(g in wtt_forms()) {
        prop_assert!(is_wtt(&g));
        let cert = assign_wtt(&g).unwrap();
        prop_assert!(verify(&g, &cert.assignment).unwrap());
        prop_assert!(solve(&g, Method::Dpll).unwrap().is_some());
    }

    #[test]
    fn few_outcomes_are_assignable(g in forms(27, true)) {
        prop_assume!(g.alphabet().len() <= g.n());
        prop_assert!(solve(&g, Method::Dpll).unwrap().is_some());
    }

    #[test]
    fn restriction_keeps_assignability(g in forms(18, true), dir in 0usize..3, j in 0usize..3) {
        prop_assume!(dir < g.n() && j < g.dims()[dir] && g.dims()[dir] > 1);
        if solve(&g, Method::Dpll).unwrap().is_some() {
            let h = g.without_hyperplane(Hyperplane::new(dir, j)).unwrap();
            prop_assert!(solve(&h, Method::Dpll).unwrap().is_some());
        }
    }

    #[test]
    fn normalization_lifts_assignments(g in forms(27, true)) {
        let (reduced, log) = normalize(&g);
        let a = solve(&reduced, Method::Dpll).unwrap();
        prop_assert_eq!(a.is_some(), solve(&g, Method::Dpll).unwrap().is_some());
        if let Some(a) = a {
            prop_assert!(verify(&g, &log.expand(&a).unwrap()).unwrap());
        }
    }

    #[test]
    fn dimacs_round_trip(g in forms(27, true)) {
        let f = encode(&g);
        let text = emit_dimacs(&f);
        let mut expected: Vec<Vec<i32>> = f.clauses().map(|c| c.to_vec()).collect();
        expected.sort();
        prop_assert_eq!(sorted_clauses(&text), expected);
        let header = format!("p cnf {} {}", f.num_vars(), f.num_clauses());
        prop_assert!(text.lines().any(|l| l == header));
    }

    #[test]
    fn dominance_structure_of_wtt_forms(raw in wtt_forms()) {
        for dir in 0..raw.n() {
            for j in 0..raw.dims()[dir] {
                for k in j + 1..raw.dims()[dir] {
                    // identical pairs are a precondition error
                    if let Ok(r) = classify_pair(&raw, dir, j, k) {
                        prop_assert!(!matches!(r.kind, DominanceKind::NotWtt));
                    }
                }
            }
        }
        let (g, _) = normalize(&raw);
        if g.is_empty() {
            return Ok(());
        }
        let graphs = build_dominance_graphs(&g).unwrap();
        for dg in &graphs {
            for j in 0..dg.size() {
                prop_assert!(dg.strict_outcomes(j).len() <= 1);
                for k in j + 1..dg.size() {
                    let r = classify_pair(&g, dg.direction, j, k).unwrap();
                    prop_assert!(!matches!(r.kind, DominanceKind::NotWtt));
                }
            }
        }
        if find_sink(&g).unwrap().is_none() {
            prop_assert!(find_k_box(&g, &graphs).unwrap().is_none());
        }
    }

    #[test]
    fn cnf_text_round_trip(seed in any::<u64>(), vars in 3usize..6, clauses in 0usize..6) {
        let phi = random_three_cnf(seed, vars, clauses).unwrap();
        prop_assert_eq!(ThreeCnf::parse_dimacs(&phi.to_dimacs()).unwrap(), phi);
    }
}
