//! Weak total tightness on a few bundled forms, with the violating 2×2
//! restriction when there is one.

use gameform::analysis::{is_wtt_by_dominance, wtt_witness};
use gameform::fixtures;

fn main() -> gameform::Result<()> {
    for name in ["form-3", "nosink-3d-1", "examples-3", "forcing-cube-left"] {
        let g = fixtures::by_name(name)?;
        match wtt_witness(&g) {
            None => println!("{name:18} WTT"),
            Some(w) => println!("{name:18} not WTT: {w}"),
        }
        assert_eq!(wtt_witness(&g).is_none(), is_wtt_by_dominance(&g));
    }
    Ok(())
}
