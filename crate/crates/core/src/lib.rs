//! Relativistic Wigner functions of Dirac spinors on a 1+1D phase-space
//! lattice.
//!
//! The crate builds spinor states on a periodic spatial lattice, maps them to
//! the γ⁰-trace Wigner function W⁰(x, p), propagates them with the free Dirac
//! Hamiltonian, filters particle and antiparticle content either in spinor
//! space or directly in phase space, and measures Wigner negativity.
//!
//! Module map:
//!
//! - [`grid`], [`field`], [`archive`]: lattices, field containers, persistence.
//! - [`dirac`]: Dirac matrices, the per-mode free Hamiltonian and its energy
//!   projectors.
//! - [`states`]: analytic spinor constructors and closed-form Wigner oracles.
//! - [`wigner`]: the Wigner transform and its diagnostics.
//! - [`dynamics`]: free Dirac propagation, the two-level Landau model and the
//!   non-relativistic shear.
//! - [`projection`]: spinor-space projection and the phase-space filter.
//! - [`experiments`]: figure reproduction runs and the diagnostics suite used
//!   by the `dps` binary.

pub mod archive;
pub mod dirac;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod field;
pub mod grid;
pub mod projection;
pub mod states;
pub mod wigner;

mod fourier;

pub use error::{Error, Result};
pub use field::{CrossWignerField, ScalarField, SpinorField, SpinorMatrixField, WignerField};
pub use grid::{build_grid, PhaseSpaceGrid, PhysicalConstants, SpatialGrid};

/// Complex double used for every amplitude in the crate.
pub type C64 = num_complex::Complex64;
