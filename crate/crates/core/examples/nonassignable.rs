//! Partial forms with n·m + 1 outcomes and no assignment.

use gameform::hardness::gen_min_outcome_nonassignable;
use gameform::satenc::{solve, Method};

fn main() -> gameform::Result<()> {
    for (n, m) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
        let g = gen_min_outcome_nonassignable(n, m)?;
        println!(
            "n={n} m={m}: {} outcomes, {} of {} cells defined, assignable: {}",
            g.alphabet().len(),
            g.defined_count(),
            g.len(),
            solve(&g, Method::Dpll)?.is_some()
        );
    }
    Ok(())
}
