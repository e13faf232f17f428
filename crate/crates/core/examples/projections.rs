//! Two-person projections of 3-person forms: assignability does not pass
//! in either direction.

use gameform::fixtures;
use gameform::satenc::{solve, Method};
use gameform::GameForm;

fn report(name: &str, g: &GameForm) -> gameform::Result<()> {
    print!("{name}: {}", solve(g, Method::Dpll)?.is_some());
    for i in 0..g.n() {
        let p = g.project(&[i])?;
        print!(
            "  project({i}) {:?} {}",
            p.dims(),
            solve(&p, Method::TwoSat)?.is_some()
        );
    }
    println!();
    Ok(())
}

fn main() -> gameform::Result<()> {
    report("fig-no-3d", &fixtures::fig_no_3d())?;
    report("fig-3d-no-2d", &fixtures::fig_3d_no_2d("a")?)
}
