//! Removes constant and duplicate hyperplanes, then lifts an assignment of
//! the reduced form back to the original.

use gameform::{assign_wtt, normalize, verify, GameForm};

fn main() -> gameform::Result<()> {
    let g = GameForm::from_rows(&["a b a", "a b a", "c c c", "a b d"])?;
    let (reduced, log) = normalize(&g);
    println!("dims {:?} -> {:?}", g.dims(), reduced.dims());
    for r in &log.removals {
        println!("  {r:?}");
    }
    let small = assign_wtt(&reduced)?.assignment;
    let lifted = log.expand(&small)?;
    println!("{}", lifted.display(g.alphabet()));
    assert!(verify(&g, &lifted)?);
    Ok(())
}
