//! Seeded generators: uniform forms, WTT forms and 3-CNFs.

use gameform::analysis::is_wtt;
use gameform::generate::{
    random_form, random_three_cnf, random_wtt, random_wtt_walk, DEFAULT_WTT_TRIES,
};
use gameform::io::write_form;

fn main() -> gameform::Result<()> {
    let g = random_form(7, &[2, 3], 3)?;
    print!("{}", write_form(&g, false));
    let w = random_wtt(7, &[3, 3], 3, DEFAULT_WTT_TRIES)?;
    println!("rejection sample is WTT: {}", is_wtt(&w));
    let walk = random_wtt_walk(7, &[3, 3, 4], 4, 500, 0.1)?;
    print!("{}", write_form(&walk, true));
    print!("{}", random_three_cnf(7, 4, 3)?.to_dimacs());
    Ok(())
}
