//! Time evolution.
//!
//! The free Dirac Hamiltonian is diagonal in momentum space, so propagation
//! is exact: transform, apply the closed-form 4×4 mode propagator, transform
//! back. The magnetic-field claim is studied with a two-level phase model of
//! the ground and first excited Landau spinors, and the non-relativistic
//! contrast is the free-particle shear `W(x, p) → W(x - pt/m, p)`.

use std::f64::consts::FRAC_1_SQRT_2;

use ndarray::{Array2, Axis};
use rayon::prelude::*;

use crate::dirac::{mode_propagator, EnergySign, Mat4};
use crate::error::{Error, Result};
use crate::field::{CrossWignerField, SpinorField, WignerField};
use crate::fourier::{along_cols, along_rows, Direction, Fft1};
use crate::grid::{PhaseSpaceGrid, PhysicalConstants};
use crate::states::{first_landau, ground_landau};
use crate::wigner::{cross_wigner, superpose_wigner, w0_transform};
use crate::C64;

/// Applies `op(p)` to every momentum mode of `psi`, `p = ħk` on the DFT
/// lattice of the periodic box.
pub(crate) fn apply_mode_operator(psi: &SpinorField, op: impl Fn(f64) -> Mat4 + Sync) -> SpinorField {
    let mut spec = psi.data.clone();
    along_cols(&mut spec, Direction::Forward);
    let grid = psi.grid;
    let hbar = psi.constants.hbar;
    spec.axis_iter_mut(Axis(0)).into_par_iter().enumerate().for_each(|(m, mut row)| {
        let u = op(hbar * grid.wavenumber(m));
        let v = nalgebra::Vector4::new(row[0], row[1], row[2], row[3]);
        let w = u * v;
        for c in 0..4 {
            row[c] = w[c];
        }
    });
    along_cols(&mut spec, Direction::Inverse);
    SpinorField { data: spec, ..psi.clone() }
}

/// `exp(-iHt/ħ)ψ` for the free Dirac Hamiltonian `H = cp̂α¹ + βmc²`.
pub fn free_dirac_propagate(psi: &SpinorField, t: f64) -> SpinorField {
    let k = psi.constants;
    apply_mode_operator(psi, |p| mode_propagator(p, t, &k))
}

/// `⟨x⟩` over the half plane `p > 0` (`Particle`) or `p < 0`
/// (`Antiparticle`), weighting by W itself.
pub fn conditional_centroid(w: &WignerField, momentum_sign: EnergySign) -> Result<f64> {
    let pg = w.phase_grid();
    let j0 = pg.p_zero_index();
    let cols: Vec<usize> = match momentum_sign {
        EnergySign::Particle => (j0 + 1..pg.n()).collect(),
        EnergySign::Antiparticle => (0..j0).collect(),
    };
    let (mut mass, mut moment) = (0.0, 0.0);
    for i in 0..pg.n() {
        let x = pg.x(i);
        let row: f64 = cols.iter().map(|&j| w.data[[i, j]]).sum();
        mass += row;
        moment += x * row;
    }
    let cell_mass = mass * pg.cell();
    if cell_mass.abs() <= 1e-6 {
        return Err(Error::VanishingMass(cell_mass));
    }
    Ok(moment / mass)
}

/// Two-level superposition `a·ψ_ground + b·ψ_excited` of the ground and first
/// excited Landau spinors, evolving with relative phase `e^{-iΔE·t/ħ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandauModel {
    pub a_coef: C64,
    pub b_coef: C64,
    /// `E₁ - E₀`; only the relative phase matters, so `E₀ = 0`.
    pub delta_e: f64,
    /// Width parameter of the excited spinor, `e^{-a²x²}`.
    pub a: f64,
    /// Width of the ground spinor, `e^{-x²/2σ²}`.
    pub sigma: f64,
}

impl LandauModel {
    /// Pairs the widths as levels of one oscillator, `σ = 1/(a√2)`.
    pub fn new(a_coef: C64, b_coef: C64, delta_e: f64, a: f64) -> Result<Self> {
        let weight = a_coef.norm_sqr() + b_coef.norm_sqr();
        if (weight - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("|a|² + |b|² = {weight}, expected 1")));
        }
        if !(delta_e.is_finite() && a.is_finite() && a != 0.0) {
            return Err(Error::InvalidParameter("delta_e and a must be finite, a non-zero".into()));
        }
        Ok(Self { a_coef, b_coef, delta_e, a, sigma: FRAC_1_SQRT_2 / a })
    }

    /// `a = b = 1/√2`, `ΔE = 1`, unit width parameter.
    pub fn equal_weights() -> Self {
        let c = C64::new(FRAC_1_SQRT_2, 0.0);
        Self::new(c, c, 1.0, 1.0).expect("valid defaults")
    }

    pub fn with_sigma(mut self, sigma: f64) -> Self {
        self.sigma = sigma;
        self
    }

    /// Period of the relative phase, `2πħ/ΔE`.
    pub fn period(&self, k: &PhysicalConstants) -> f64 {
        2.0 * std::f64::consts::PI * k.hbar / self.delta_e
    }
}

/// A [`LandauModel`] with its stationary Wigner parts precomputed, so that
/// sweeping time costs one linear combination per step.
pub struct LandauEvolution {
    pub model: LandauModel,
    constants: PhysicalConstants,
    ground: WignerField,
    excited: WignerField,
    cross: CrossWignerField,
}

impl LandauEvolution {
    pub fn new(model: LandauModel, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<Self> {
        let psi0 = ground_landau(grid, k, model.sigma)?;
        let psi1 = first_landau(grid, k, model.a)?;
        Ok(Self {
            model,
            constants: k,
            ground: w0_transform(&psi0)?,
            excited: w0_transform(&psi1)?,
            cross: cross_wigner(&psi0, &psi1)?,
        })
    }

    pub fn w0_at(&self, t: f64) -> Result<WignerField> {
        let phase = C64::from_polar(1.0, -self.model.delta_e * t / self.constants.hbar);
        superpose_wigner(&self.ground, &self.excited, &self.cross, self.model.a_coef, self.model.b_coef * phase)
    }
}

/// W⁰ of the two-level Landau superposition at time `t`.
pub fn landau_w0_at_time(model: &LandauModel, grid: &PhaseSpaceGrid, k: PhysicalConstants, t: f64) -> Result<WignerField> {
    LandauEvolution::new(*model, grid, k)?.w0_at(t)
}

/// Free non-relativistic evolution of a Wigner function,
/// `W(x, p) → W(x - pt/m, p)`, by spectral translation of each momentum row
/// on the periodic x lattice.
pub fn shear_wigner(w: &WignerField, t: f64, mass: f64) -> WignerField {
    let pg = w.phase_grid();
    let n = pg.n();
    // rows indexed by p
    let mut rows: Array2<C64> = w.data.t().mapv(|v| C64::new(v, 0.0)).as_standard_layout().into_owned();
    along_rows(&mut rows, Direction::Forward);
    let fft = Fft1::new(n);
    rows.axis_iter_mut(Axis(0)).into_par_iter().enumerate().for_each(|(j, mut row)| {
        let shift = pg.p(j) * t / mass;
        for (m, z) in row.iter_mut().enumerate() {
            *z *= C64::from_polar(1.0, -pg.spatial.wavenumber(m) * shift);
        }
        let slice = row.as_slice_mut().expect("contiguous row");
        fft.inverse(slice);
    });
    let data = rows.t().mapv(|z| z.re).as_standard_layout().into_owned();
    WignerField { data, ..w.clone() }
}
