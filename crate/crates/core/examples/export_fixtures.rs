//! Writes every bundled form to `fixtures/<name>.json`.

use std::path::Path;

use gameform::fixtures::{by_name, NAMES};
use gameform::io::write_form;

fn main() -> gameform::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir)?;
    for name in NAMES {
        let g = by_name(name)?;
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, write_form(&g, !g.is_fully_defined()))?;
        println!("{}", path.display());
    }
    Ok(())
}
