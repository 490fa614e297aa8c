//! Saving fields to the binary archive format and to CSV.
//!
//!     cargo run --release --example archive_roundtrip

use dirac_wigner::archive::{load_field, save_field, write_csv, Field};
use dirac_wigner::states::first_landau;
use dirac_wigner::wigner::w0_transform;
use dirac_wigner::{build_grid, PhysicalConstants};

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    let grid = build_grid(-8.0, 8.0, 128)?;
    let psi = first_landau(&grid, k, 1.0)?;
    let w = w0_transform(&psi)?;

    let dir = std::env::temp_dir().join("dirac-wigner-example");
    std::fs::create_dir_all(&dir)?;
    for (name, field) in [("spinor", Field::from(psi)), ("wigner", Field::from(w))] {
        let path = dir.join(format!("{name}.dpsf"));
        save_field(&field, &path)?;
        let back = load_field(&path)?;
        println!("{} ({} bytes): identical after reload = {}", path.display(), std::fs::metadata(&path)?.len(), back == field);
        write_csv(&field, dir.join(format!("{name}.csv")))?;
    }
    Ok(())
}
