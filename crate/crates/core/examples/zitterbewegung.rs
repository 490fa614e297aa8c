//! Free Dirac evolution of the ground Landau spinor. The packet splits into
//! particle and antiparticle branches moving apart, and negativity appears
//! although the initial Wigner function is positive.
//!
//!     cargo run --release --example zitterbewegung

use dirac_wigner::dirac::EnergySign;
use dirac_wigner::dynamics::{conditional_centroid, free_dirac_propagate};
use dirac_wigner::projection::{project_spinor, projection_weights};
use dirac_wigner::states::ground_landau;
use dirac_wigner::wigner::{negativity_volume, w0_transform};
use dirac_wigner::{build_grid, PhysicalConstants};

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    let grid = build_grid(-16.0, 16.0, 512)?;
    let psi = ground_landau(&grid, k, 1.0)?;
    let particle = project_spinor(&psi, EnergySign::Particle);
    let anti = project_spinor(&psi, EnergySign::Antiparticle);
    let (wp, wa) = projection_weights(&psi);
    println!("particle weight {wp:.6}, antiparticle weight {wa:.6}");

    println!("{:>6} {:>12} {:>14} {:>14}", "t", "negativity", "<x>_p>0 part.", "<x>_p>0 anti.");
    for step in 0..=11 {
        let t = 0.7 * step as f64;
        let w = w0_transform(&free_dirac_propagate(&psi, t))?;
        let cp = conditional_centroid(&w0_transform(&free_dirac_propagate(&particle, t))?, EnergySign::Particle)?;
        let ca = conditional_centroid(&w0_transform(&free_dirac_propagate(&anti, t))?, EnergySign::Particle)?;
        println!("{t:>6.2} {:>12.4e} {cp:>14.5} {ca:>14.5}", negativity_volume(&w));
    }
    Ok(())
}
