//! Two superpositions of separated packets: orthogonal spinor parts give no
//! cross term and a positive sum; a shared spinor direction gives strong
//! interference fringes.
//!
//!     cargo run --release --example interference

use std::f64::consts::SQRT_2;

use dirac_wigner::states::{pair_interference, pair_no_interference, Scaling};
use dirac_wigner::wigner::{cross_wigner, min_over_max, negativity_volume, superpose_wigner, w0_transform};
use dirac_wigner::{build_grid, PhysicalConstants, SpinorField, C64};

fn report(label: &str, (a, b): (SpinorField, SpinorField)) -> dirac_wigner::Result<()> {
    let one = C64::new(1.0, 0.0);
    let (wa, wb) = (w0_transform(&a)?, w0_transform(&b)?);
    let cross = cross_wigner(&a, &b)?;
    let sum = superpose_wigner(&wa, &wb, &cross, one, one)?;
    println!(
        "{label}: max|cross| / max W = {:.2e}, min/max of sum = {:.3e}, negativity = {:.3e}",
        cross.max_abs() / wa.max_abs().max(wb.max_abs()),
        min_over_max(&sum),
        negativity_volume(&sum)
    );
    Ok(())
}

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    let grid = build_grid(-16.0, 16.0, 512)?;
    report("orthogonal spinors", pair_no_interference(&grid, k, SQRT_2, 3.0, Scaling::AsPrinted)?)?;
    report("shared direction  ", pair_interference(&grid, k, Scaling::AsPrinted)?)?;
    Ok(())
}
