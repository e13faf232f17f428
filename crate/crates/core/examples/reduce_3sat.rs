//! 3-SAT to assignability and back.

use gameform::hardness::{decode, reduce_full4, reduce_partial3, ThreeCnf};
use gameform::satenc::{solve, Method};

fn main() -> gameform::Result<()> {
    let phi = ThreeCnf::parse_dimacs("p cnf 4 3\n1 2 -3 0\n-1 3 4 0\n-2 -4 1 0\n")?;
    let r = reduce_partial3(&phi)?;
    println!(
        "partial3: dims {:?}, {} outcomes, {} gadgets",
        r.form.dims(),
        r.form.alphabet().len(),
        r.layout.gadgets.len()
    );
    let a = solve(&r.form, Method::Dpll)?.expect("phi is satisfiable");
    let values = decode(&r, &a)?;
    println!(
        "valuation {values:?}, satisfies phi: {}",
        phi.evaluate(&values)
    );

    let all = ThreeCnf::all_patterns();
    let r = reduce_full4(&all)?;
    println!(
        "full4 on the 8-clause formula: dims {:?}, assignable: {}",
        r.form.dims(),
        solve(&r.form, Method::Dpll)?.is_some()
    );
    Ok(())
}
