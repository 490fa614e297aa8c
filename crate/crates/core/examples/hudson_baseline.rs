//! Scalar Wigner functions obey Hudson's theorem: only the Gaussian is
//! non-negative. The non-Gaussian Dirac spinors below are not bound by it.
//!
//!     cargo run --release --example hudson_baseline

use std::f64::consts::SQRT_2;

use dirac_wigner::states::{double_gaussian, first_landau};
use dirac_wigner::wigner::{min_over_max, negativity_volume, scalar_wigner, w0_transform};
use dirac_wigner::{build_grid, PhysicalConstants, ScalarField, C64};

type Profile = fn(f64) -> f64;

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    let grid = build_grid(-16.0, 16.0, 512)?;
    let scalars: [(&str, Profile); 3] = [
        ("gaussian", |x| (-x * x / 2.0).exp()),
        ("(1+x) gaussian", |x| (1.0 + x) * (-x * x / 2.0).exp()),
        ("x gaussian", |x| x * (-x * x / 2.0).exp()),
    ];
    for (name, f) in scalars {
        let w = scalar_wigner(&ScalarField::from_fn(grid.spatial, k, |x| C64::new(f(x), 0.0))?)?;
        println!("scalar {name:<16} negativity {:.3e}  min/max {:.3e}", negativity_volume(&w), min_over_max(&w));
    }
    for (name, psi) in [("first excited", first_landau(&grid, k, 1.0)?), ("double gaussian", double_gaussian(&grid, k, SQRT_2, 3.0)?)] {
        let w = w0_transform(&psi)?;
        println!("spinor {name:<16} negativity {:.3e}  min/max {:.3e}", negativity_volume(&w), min_over_max(&w));
    }
    Ok(())
}
