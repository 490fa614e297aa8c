//! W⁰ of the ground Landau spinor against its closed form, with marginals
//! and a few moments.
//!
//!     cargo run --release --example ground_state_wigner

use dirac_wigner::states::{ground_landau, oracle_field, Family};
use dirac_wigner::wigner::{expectation, marginal_x, min_over_max, w0_transform, ObservableSymbol};
use dirac_wigner::{build_grid, PhysicalConstants};

fn main() -> dirac_wigner::Result<()> {
    let k = PhysicalConstants::NATURAL;
    let grid = build_grid(-16.0, 16.0, 512)?;
    let sigma = 1.0;

    let psi = ground_landau(&grid, k, sigma)?;
    let w = w0_transform(&psi)?;
    let oracle = oracle_field(&Family::Ground { sigma }, &grid, k)?;

    println!("lattice integral      {:.15}", w.integral());
    println!("error vs closed form  {:.3e}", w.normalized()?.rel_linf(&oracle));
    println!("min / max             {:.3e}", min_over_max(&w));

    let density = marginal_x(&w);
    let i0 = grid.n() / 2;
    println!("position marginal at 0  {:.12} (|ψ(0)|² = {:.12})", density[i0], psi.at(i0).iter().map(|z| z.norm_sqr()).sum::<f64>());

    for (i, j) in [(2, 0), (0, 2), (4, 0)] {
        println!("<x^{i} p^{j}> = {:.10}", expectation(&w, &ObservableSymbol::monomial(i, j)));
    }
    Ok(())
}
