//! Two-level superposition of the ground and first excited Landau spinors,
//! swept over the relative phase for several excited-state weights.
//!
//!     cargo run --release --example landau_sweep

use dirac_wigner::dynamics::LandauModel;
use dirac_wigner::experiments::landau_sweep_minimum;
use dirac_wigner::{build_grid, PhysicalConstants, C64};

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    let grid = build_grid(-16.0, 16.0, 512)?;
    println!("{:>8} {:>14}", "|b|^2", "min min/max");
    for wb in [0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5] {
        let model = LandauModel::new(C64::new((1.0f64 - wb).sqrt(), 0.0), C64::new(wb.sqrt(), 0.0), 1.0, 1.0)?;
        println!("{wb:>8.2} {:>14.4e}", landau_sweep_minimum(model, &grid, k, 64)?);
    }
    Ok(())
}
