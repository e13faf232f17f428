//! Dominance graphs: proper outcomes, strict dominations and sinks.

use gameform::analysis::{build_dominance_graphs, find_k_box, find_sink};
use gameform::{fixtures, GameForm};

fn show(name: &str, g: &GameForm) -> gameform::Result<()> {
    println!("{name}");
    let graphs = build_dominance_graphs(g)?;
    let label = |o: Option<gameform::Outcome>| o.map_or("-", |o| g.alphabet().name(o)).to_string();
    for dg in &graphs {
        let proper: Vec<String> = dg.proper_outcomes().iter().map(|&o| label(o)).collect();
        println!("  direction {}: proper outcomes {:?}", dg.direction, proper);
        for j in 0..dg.size() {
            for k in 0..dg.size() {
                if let Some(c) = (j != k).then(|| dg.strictly_dominates(j, k)).flatten() {
                    println!("    H{} =>{} H{}", j + 1, g.alphabet().name(c), k + 1);
                }
            }
        }
    }
    println!("  sink: {:?}", find_sink(g)?);
    println!("  k-box: {:?}", find_k_box(g, &graphs)?);
    Ok(())
}

fn main() -> gameform::Result<()> {
    show("form-3", &fixtures::no_sink_2d())?;
    show("nosink-3d-1", &fixtures::nosink_3d_1())
}
