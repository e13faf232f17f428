//! Running time of the WTT test against the number of profiles.

use gameform::cli::wtt_scaling;

fn main() -> gameform::Result<()> {
    let s = wtt_scaling(&[100, 1000, 10_000], 2, 0)?;
    for (p, t) in &s.points {
        println!("{p:>8} {t:.3e} s");
    }
    println!("slope {:.2}", s.slope);
    Ok(())
}
