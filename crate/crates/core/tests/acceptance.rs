//! End-to-end acceptance checks. Runs without the libtest harness so every
//! verdict line is printed; exits non-zero if any check fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gameform::analysis::{
    build_dominance_graph, build_dominance_graphs, classify_pair, find_k_box, find_sink, is_wtt,
    DominanceKind,
};
use gameform::cli::wtt_scaling;
use gameform::fixtures::{self, by_name, forcing_cube, gadget_figure, NAMES};
use gameform::generate::{random_partial_form, random_wtt_walk};
use gameform::hardness::{
    check_deletion_property, gadget_block, reduce_full4, reduce_partial3, sequence_fixture,
    GadgetBlock, ThreeCnf,
};
use gameform::satenc::{enumerate_models, is_forced, solve, solve_brute, solve_two_person, Method};
use gameform::{assign_wtt, normalize, verify, GameForm, Hyperplane};

type Check = Result<String, String>;
type Criterion = fn() -> Check;

const WTT_SAMPLES: usize = 500;
const WTT_MAX_PROFILES: usize = 36;
const CROSS_SAMPLES: usize = 500;
const CROSS_MAX_PROFILES: usize = 24;
const CNF_SAMPLES: usize = 100;
const CNF_MAX_VARS: usize = 4;
const CNF_MAX_CLAUSES: usize = 4;
const REDUCTION_BUDGET: Duration = Duration::from_secs(60);
const SLOPE_LIMIT: f64 = 2.3;
const FIG_3D_RANDOM_FILLS: usize = 5;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sat(g: &GameForm, m: Method) -> Result<bool, String> {
    let a = solve(g, m).map_err(fail)?;
    if let Some(a) = &a {
        ensure!(
            verify(g, a).map_err(fail)?,
            "{m} returned an infeasible assignment"
        );
    }
    Ok(a.is_some())
}

fn truth_table_sat(phi: &ThreeCnf) -> bool {
    let n = phi.num_vars();
    (0..1u32 << n).any(|bits| phi.evaluate(&(0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>()))
}

fn random_phi(rng: &mut ChaCha8Rng) -> ThreeCnf {
    let nv = rng.gen_range(3..=CNF_MAX_VARS);
    let m = rng.gen_range(1..=CNF_MAX_CLAUSES);
    let clauses = (0..m)
        .map(|_| {
            let mut vars: Vec<i32> = (1..=nv as i32).collect();
            let mut c = [0; 3];
            for slot in &mut c {
                let v = vars.swap_remove(rng.gen_range(0..vars.len()));
                *slot = if rng.gen_bool(0.5) { v } else { -v };
            }
            c
        })
        .collect();
    ThreeCnf::new(nv, clauses).unwrap()
}

fn random_dims(rng: &mut ChaCha8Rng, max_profiles: usize, min_side: usize) -> Vec<usize> {
    loop {
        let n = rng.gen_range(2..=4);
        let dims: Vec<usize> = (0..n).map(|_| rng.gen_range(min_side..=6)).collect();
        let p: usize = dims.iter().product();
        if p <= max_profiles && p >= 2 {
            return dims;
        }
    }
}

fn c1_two_person_examples() -> Check {
    for k in 1..=5 {
        let g = fixtures::examples(k).map_err(fail)?;
        let two = solve_two_person(&g).map_err(fail)?.is_some();
        let brute = solve_brute(&g, 64.0).map_err(fail)?.is_some();
        ensure!(two == brute, "examples-{k}: two_sat {two}, brute {brute}");
        ensure!(two == (k <= 2), "examples-{k}: assignable = {two}");
    }
    Ok("forms 1-2 assignable, 3-5 not; two_sat and brute agree".into())
}

fn c2_sequence_minimality() -> Check {
    let mut deletions = 0;
    for t in 3..=5 {
        let g = sequence_fixture(t).map_err(fail)?;
        ensure!(
            !sat(&g, Method::TwoSat)? && !sat(&g, Method::Brute)?,
            "t={t} is assignable"
        );
        for d in 0..2 {
            for j in 0..t {
                let h = g.without_hyperplane(Hyperplane::new(d, j)).map_err(fail)?;
                ensure!(
                    sat(&h, Method::TwoSat)? && sat(&h, Method::Brute)?,
                    "t={t} minus H{j} of {d} not assignable"
                );
                deletions += 1;
            }
        }
    }
    Ok(format!(
        "t=3,4,5 unassignable; all {deletions} single deletions assignable"
    ))
}

fn projections_sat(g: &GameForm) -> Result<Vec<bool>, String> {
    (0..g.n())
        .map(|i| {
            let p = g.project(&[i]).map_err(fail)?;
            let two = sat(&p, Method::TwoSat)?;
            ensure!(
                two == sat(&p, Method::Dpll)?,
                "projection {i}: solvers disagree"
            );
            Ok(two)
        })
        .collect()
}

fn c3_fig_no_3d() -> Check {
    let g = fixtures::fig_no_3d();
    ensure!(
        !sat(&g, Method::Dpll)? && !sat(&g, Method::Brute)?,
        "form is assignable"
    );
    let proj = projections_sat(&g)?;
    ensure!(proj == [true; 3], "projections {proj:?}");
    Ok("3-person form unassignable, projections [true, true, true]".into())
}

fn c4_fig_3d_no_2d() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut forms = vec![fixtures::fig_3d_no_2d("a").map_err(fail)?];
    for _ in 0..FIG_3D_RANDOM_FILLS {
        let fills: Vec<&'static str> = (0..fixtures::FIG_3D_NO_2D_FREE)
            .map(|_| ["a", "b", "c"][rng.gen_range(0..3)])
            .collect();
        forms.push(fixtures::fig_3d_no_2d_with(&fills).map_err(fail)?);
    }
    for (i, g) in forms.iter().enumerate() {
        ensure!(
            sat(g, Method::Dpll)? && sat(g, Method::Brute)?,
            "instance {i} unassignable"
        );
        let proj = projections_sat(g)?;
        ensure!(proj == [false; 3], "instance {i}: projections {proj:?}");
    }
    Ok(format!(
        "{} instances assignable, every projection unassignable",
        forms.len()
    ))
}

fn wtt_fixtures() -> Result<Vec<(&'static str, GameForm)>, String> {
    let mut out = Vec::new();
    for name in NAMES {
        let g = by_name(name).map_err(fail)?;
        if is_wtt(&g) {
            out.push((*name, g));
        }
    }
    Ok(out)
}

fn c5_wtt_assignable() -> Check {
    let fixtures = wtt_fixtures()?;
    for (name, g) in &fixtures {
        let cert = assign_wtt(g).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            verify(g, &cert.assignment).map_err(fail)?,
            "{name}: infeasible"
        );
        ensure!(sat(g, Method::Dpll)?, "{name}: solver says unassignable");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut nontrivial = 0;
    for i in 0..WTT_SAMPLES {
        let dims = random_dims(&mut rng, WTT_MAX_PROFILES, 2);
        let k = rng.gen_range(2..=5);
        let steps = rng.gen_range(0..400);
        let g = random_wtt_walk(rng.gen(), &dims, k, steps, 0.1).map_err(fail)?;
        ensure!(is_wtt(&g), "sample {i} is not WTT");
        let cert = assign_wtt(&g).map_err(|e| format!("sample {i}: {e}"))?;
        ensure!(
            verify(&g, &cert.assignment).map_err(fail)?,
            "sample {i}: infeasible"
        );
        ensure!(
            sat(&g, Method::Dpll)?,
            "sample {i}: solver says unassignable"
        );
        if !normalize(&g).0.is_empty() {
            nontrivial += 1;
        }
    }
    Ok(format!(
        "{} WTT fixtures and {WTT_SAMPLES} walk samples (p <= {WTT_MAX_PROFILES}, {nontrivial} not normalizing away) assigned and verified",
        fixtures.len()
    ))
}

/// Strict dominations `(from, outcome, to)` in one direction, 1-based.
fn strict_edges(g: &GameForm, dir: usize) -> Result<Vec<(usize, String, usize)>, String> {
    let dg = build_dominance_graph(g, dir).map_err(fail)?;
    let mut edges = Vec::new();
    for j in 0..dg.size() {
        for k in 0..dg.size() {
            if j != k {
                if let Some(c) = dg.strictly_dominates(j, k) {
                    edges.push((j + 1, g.alphabet().name(c).to_string(), k + 1));
                }
            }
        }
    }
    edges.sort();
    Ok(edges)
}

fn c6_dominance_facts() -> Check {
    let cycle = vec![
        (1, "a".to_string(), 3),
        (2, "b".to_string(), 1),
        (3, "c".to_string(), 2),
    ];
    for (name, g) in [
        ("form-3", fixtures::no_sink_2d()),
        ("nosink-3d-1", fixtures::nosink_3d_1()),
    ] {
        for dir in 0..g.n() {
            let dg = build_dominance_graph(&g, dir).map_err(fail)?;
            let proper: Vec<&str> = dg
                .proper_outcomes()
                .iter()
                .map(|o| o.map_or("-", |o| g.alphabet().name(o)))
                .collect();
            ensure!(
                proper == ["a", "b", "c"],
                "{name} direction {dir}: proper outcomes {proper:?}"
            );
            ensure!(
                dg.sinks().next().is_none(),
                "{name} direction {dir} has a sink"
            );
            let edges = strict_edges(&g, dir)?;
            ensure!(edges == cycle, "{name} direction {dir}: {edges:?}");
        }
        ensure!(
            find_sink(&g).map_err(fail)?.is_none(),
            "{name}: find_sink found one"
        );
    }
    Ok("proper outcomes (a, b, c), cycle H1 =>a H3 =>c H2 =>b H1, no sink".into())
}

fn c7_dominance_rules() -> Check {
    let mut no_sink = Vec::new();
    let mut pairs = 0;
    for (name, raw) in wtt_fixtures()? {
        let (g, _) = normalize(&raw);
        if g.is_empty() {
            continue;
        }
        let graphs = build_dominance_graphs(&g).map_err(fail)?;
        for dg in &graphs {
            for j in 0..dg.size() {
                let s = dg.strict_outcomes(j);
                ensure!(
                    s.len() <= 1,
                    "{name}: H{j} of {} strictly dominates by {s:?}",
                    dg.direction
                );
                for k in j + 1..dg.size() {
                    let r = classify_pair(&g, dg.direction, j, k).map_err(fail)?;
                    ensure!(
                        !matches!(r.kind, DominanceKind::NotWtt),
                        "{name}: pair {j},{k} unclassified"
                    );
                    pairs += 1;
                }
            }
        }
        if find_sink(&g).map_err(fail)?.is_none() {
            ensure!(
                find_k_box(&g, &graphs).map_err(fail)?.is_none(),
                "{name}: k-box found"
            );
            no_sink.push(name);
        }
    }
    for expected in ["form-3", "nosink-3d-1", "nosink-3d-2"] {
        ensure!(
            no_sink.contains(&expected),
            "{expected} missing from the no-sink WTT fixtures"
        );
    }
    Ok(format!("{pairs} pairs classified; no k-box in {no_sink:?}"))
}

fn c8_forcing_cubes() -> Check {
    let mut total = 0;
    for right in [false, true] {
        let c = forcing_cube(right);
        let a = c.form.alphabet().get("a").unwrap();
        let b = c.form.alphabet().get("b").unwrap();
        ensure!(
            sat(&c.form, Method::Dpll)?,
            "cube right={right} unassignable"
        );
        let models = enumerate_models(&c.form, 10_000).map_err(fail)?;
        ensure!(!models.is_empty(), "no models");
        for m in &models {
            ensure!(
                m.get(2, c.front.index) == Some(a) && m.get(2, c.back.index) == Some(b),
                "cube right={right}: model with front/back {:?}/{:?}",
                m.get(2, c.front.index),
                m.get(2, c.back.index)
            );
        }
        ensure!(
            is_forced(&c.form, 2, c.front.index, a).map_err(fail)?,
            "front not forced"
        );
        ensure!(
            is_forced(&c.form, 2, c.back.index, b).map_err(fail)?,
            "back not forced"
        );
        total += models.len();
    }
    Ok(format!("{total} models, front = a and back = b in all"))
}

fn gadget_behaviour(block: &GadgetBlock, label: &str) -> Result<(), String> {
    let models = enumerate_models(&block.form, 10_000).map_err(fail)?;
    ensure!(!models.is_empty(), "{label}: no models");
    let mut firsts = Vec::new();
    for a in &models {
        ensure!(block.cube_forced(a), "{label}: cube not forced");
        let (x, y) = block.truth(a);
        if block.kind.binds_equal() {
            ensure!(x == y, "{label}: model with {x} / {y}");
        } else {
            ensure!(x != y, "{label}: model with {x} / {y}");
        }
        firsts.push(x);
    }
    ensure!(
        firsts.contains(&true) && firsts.contains(&false),
        "{label}: one truth value unreachable"
    );
    Ok(())
}

fn c9_gadgets() -> Check {
    for k in 1..=4 {
        let block = gadget_figure(k).map_err(fail)?;
        ensure!(
            block.kind.number() as usize == k,
            "figure {k} has type {:?}",
            block.kind
        );
        gadget_behaviour(&block, &format!("figure {k}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut seen = [0usize; 4];
    for _ in 0..30 {
        let r = reduce_partial3(&random_phi(&mut rng)).map_err(fail)?;
        for g in 0..r.layout.gadgets.len() {
            let block = gadget_block(&r, g).map_err(fail)?;
            gadget_behaviour(&block, &format!("generated {:?}", block.kind))?;
            seen[block.kind.number() as usize - 1] += 1;
        }
    }
    ensure!(seen.iter().all(|&c| c > 0), "gadget types seen {seen:?}");
    Ok(format!(
        "figures 1-4 plus generated blocks {seen:?}: types 1-2 both-or-neither, 3-4 exactly one"
    ))
}

fn c10_reductions() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut formulas: Vec<ThreeCnf> = (0..CNF_SAMPLES).map(|_| random_phi(&mut rng)).collect();
    formulas.push(ThreeCnf::all_patterns());
    let mut sat_count = 0;
    for (i, phi) in formulas.iter().enumerate() {
        let expected = truth_table_sat(phi);
        let r = reduce_partial3(phi).map_err(fail)?;
        ensure!(
            sat(&r.form, Method::Dpll)? == expected,
            "partial3 formula {i}: expected {expected}"
        );
        sat_count += usize::from(expected);
    }
    let mut full = 0;
    let mut full_sat = 0;
    for (i, phi) in formulas.iter().enumerate() {
        if !check_deletion_property(phi) {
            ensure!(reduce_full4(phi).is_err(), "full4 accepted formula {i}");
            continue;
        }
        let expected = truth_table_sat(phi);
        let r = reduce_full4(phi).map_err(fail)?;
        ensure!(r.form.is_fully_defined() && r.form.n() == 4, "full4 shape");
        ensure!(
            sat(&r.form, Method::Dpll)? == expected,
            "full4 formula {i}: expected {expected}"
        );
        let star = r
            .form
            .alphabet()
            .get(gameform::STAR)
            .ok_or("no filler outcome")?;
        ensure!(
            is_forced(&r.form, 3, 0, star).map_err(fail)?,
            "full4 formula {i}: * not forced"
        );
        full += 1;
        full_sat += usize::from(expected);
    }
    let elapsed = start.elapsed();
    ensure!(
        full >= 2,
        "only {full} formulas passed the deletion property"
    );
    ensure!(elapsed <= REDUCTION_BUDGET, "took {elapsed:?}");
    Ok(format!(
        "partial3 on {} formulas incl. all-patterns ({sat_count} satisfiable), full4 on {full} ({full_sat} satisfiable, incl. all-patterns), {:.1} s",
        formulas.len(),
        elapsed.as_secs_f64()
    ))
}

fn c11_scaling() -> Check {
    let s = wtt_scaling(&[100, 1000, 10_000], 2, 11).map_err(fail)?;
    let points: Vec<String> = s
        .points
        .iter()
        .map(|(p, t)| format!("{p}:{t:.2e}s"))
        .collect();
    let within = s.slope <= SLOPE_LIMIT;
    ensure!(
        within,
        "slope {:.2} > {SLOPE_LIMIT} ({})",
        s.slope,
        points.join(" ")
    );
    Ok(format!(
        "log-log slope {:.2} <= {SLOPE_LIMIT} ({})",
        s.slope,
        points.join(" ")
    ))
}

fn cross_check(g: &GameForm, label: &str) -> Result<bool, String> {
    let brute = sat(g, Method::Brute)?;
    let dpll = sat(g, Method::Dpll)?;
    ensure!(brute == dpll, "{label}: brute {brute}, dpll {dpll}");
    if g.n() == 2 {
        let two = sat(g, Method::TwoSat)?;
        ensure!(two == brute, "{label}: two_sat {two}, brute {brute}");
    }
    Ok(brute)
}

fn c12_cross_validation() -> Check {
    for name in NAMES {
        cross_check(&by_name(name).map_err(fail)?, name)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut yes = 0;
    for i in 0..CROSS_SAMPLES {
        let dims = random_dims(&mut rng, CROSS_MAX_PROFILES, 1);
        let k = rng.gen_range(2..=6);
        let undefined = if rng.gen_bool(0.5) { 0.0 } else { 0.3 };
        let g = random_partial_form(rng.gen(), &dims, k, undefined).map_err(fail)?;
        yes += usize::from(cross_check(&g, &format!("random {i} {dims:?}"))?);
    }
    Ok(format!(
        "{} fixtures and {CROSS_SAMPLES} random forms (p <= {CROSS_MAX_PROFILES}, {yes} assignable) agree",
        NAMES.len()
    ))
}

fn main() -> ExitCode {
    let checks: [(&str, Criterion); 12] = [
        ("two-person example verdicts", c1_two_person_examples),
        ("minimality of the sequence family", c2_sequence_minimality),
        (
            "unassignable 3-person form with assignable projections",
            c3_fig_no_3d,
        ),
        (
            "assignable 3-person form with unassignable projections",
            c4_fig_3d_no_2d,
        ),
        ("WTT implies assignable", c5_wtt_assignable),
        ("dominance cycles and missing sinks", c6_dominance_facts),
        ("dominance rules on WTT fixtures", c7_dominance_rules),
        ("forcing cubes", c8_forcing_cubes),
        ("gadget semantics", c9_gadgets),
        ("reduction equisatisfiability", c10_reductions),
        ("WTT test scaling", c11_scaling),
        ("solver cross-validation", c12_cross_validation),
    ];
    let mut failed = 0;
    for (i, (title, check)) in checks.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {title}: {detail} [{secs:.2} s]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title}: {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        checks.len() - failed,
        checks.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
