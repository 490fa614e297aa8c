//! Removing antiparticles directly in phase space, compared with projecting
//! the spinor first. The filtered general double-Gaussian state keeps a
//! non-negative Wigner function up to round-off.
//!
//!     cargo run --release --example phase_space_filter

use dirac_wigner::dirac::EnergySign;
use dirac_wigner::projection::{build_b, filter_wigner, project_spinor};
use dirac_wigner::states::general_double;
use dirac_wigner::wigner::{min_over_max, w0_transform};
use dirac_wigner::{build_grid, PhysicalConstants};

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    // projected states have exponential tails; give them room
    let grid = build_grid(-32.0, 32.0, 512)?;
    let psi = general_double(&grid, k, 0.1, 5.0, 3.0, 0.1)?;

    let b = build_b(&psi);
    for s in [EnergySign::Particle, EnergySign::Antiparticle] {
        let filtered = filter_wigner(&b, s)?;
        let reference = w0_transform(&project_spinor(&psi, s))?;
        println!(
            "{s:?}: weight {:.6}, min/max {:.3e}, phase-space vs spinor route {:.2e}",
            filtered.integral(),
            min_over_max(&filtered),
            filtered.rel_linf(&reference)
        );
    }
    Ok(())
}
