//! Enumerates the models of the forcing cubes and of the four gadget
//! blocks.

use gameform::fixtures::{forcing_cube, gadget_figure};
use gameform::satenc::enumerate_models;

fn main() -> gameform::Result<()> {
    for right in [false, true] {
        let c = forcing_cube(right);
        let models = enumerate_models(&c.form, 1000)?;
        println!("cube right={right}: {} model(s)", models.len());
        for m in &models {
            println!("  {}", m.display(c.form.alphabet()));
        }
    }
    for k in 1..=4 {
        let b = gadget_figure(k)?;
        let mut seen: Vec<(bool, bool)> = enumerate_models(&b.form, 1000)?
            .iter()
            .map(|a| b.truth(a))
            .collect();
        seen.sort();
        seen.dedup();
        println!("gadget {k} ({:?}): occurrence truth pairs {seen:?}", b.kind);
    }
    Ok(())
}
