//! Builds an assignment for a WTT form and prints the construction trace.

use gameform::{assign_wtt, fixtures, verify};

fn main() -> gameform::Result<()> {
    let g = fixtures::nosink_3d_1();
    let cert = assign_wtt(&g)?;
    for step in &cert.trace {
        println!("{step}");
    }
    println!("{}", cert.assignment.display(g.alphabet()));
    println!("{:?}", cert.stats);
    assert!(verify(&g, &cert.assignment)?);
    Ok(())
}
