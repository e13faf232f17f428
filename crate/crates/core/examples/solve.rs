//! Assignability as SAT: the three solvers on small forms, and the DIMACS
//! text of one encoding.

use gameform::fixtures;
use gameform::satenc::{emit_dimacs, encode, solve, Method};

fn main() -> gameform::Result<()> {
    for k in 1..=5 {
        let g = fixtures::examples(k)?;
        let verdicts: Vec<String> = Method::ALL
            .iter()
            .map(|&m| Ok(format!("{m}={}", solve(&g, m)?.is_some())))
            .collect::<gameform::Result<_>>()?;
        println!("examples-{k}: {}", verdicts.join(" "));
    }
    print!("{}", emit_dimacs(&encode(&fixtures::examples(1)?)));
    Ok(())
}
