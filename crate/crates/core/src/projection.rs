//! Particle/antiparticle filtering.
//!
//! Two independent routes:
//!
//! 1. Spinor space: project every momentum mode with `½(1 ± H(p)/E(p))`,
//!    then take the Wigner transform.
//! 2. Phase space: build the matrix field `B(x, θ) = ψ(x - ħθ/2)ψ†(x + ħθ/2)γ⁰`,
//!    transform `θ → p` and `x → λ`, sandwich each `(λ, p)` point between
//!    projectors evaluated at `p + ħλ/2` (left) and `p - ħλ/2` (right), and
//!    transform back. This route also accepts mixed states.
//!
//! `B` carries γ⁰ on the right, so the right projector is applied as
//! `γ⁰ P γ⁰ ` to act on `ψψ†` rather than on `ψψ†γ⁰`.

use std::f64::consts::PI;

use ndarray::{Array2, Axis};
use rayon::prelude::*;

use crate::dirac::{beta, energy_projector, EnergySign, Mat4};
use crate::dynamics::apply_mode_operator;
use crate::error::{Error, Result};
use crate::field::{CrossWignerField, MatrixDomain, SpinorField, SpinorMatrixField, WignerField};
use crate::fourier::{along_cols, Direction, Fft1};
use crate::C64;

pub use crate::dirac::energy_projector as projector;

/// Largest tolerated imaginary part of a filtered W⁰ relative to its maximum.
pub const FILTER_RESIDUE_LIMIT: f64 = 1e-10;

/// Spinor-space projection. The result is not renormalized: its norm is the
/// retained particle (or antiparticle) weight.
pub fn project_spinor(psi: &SpinorField, s: EnergySign) -> SpinorField {
    let k = psi.constants;
    apply_mode_operator(psi, |p| energy_projector(p, s, &k))
}

/// `(‖P₊ψ‖², ‖P₋ψ‖²)`
pub fn projection_weights(psi: &SpinorField) -> (f64, f64) {
    (project_spinor(psi, EnergySign::Particle).norm(), project_spinor(psi, EnergySign::Antiparticle).norm())
}

fn gamma0_sign(b: usize) -> f64 {
    if b < 2 {
        1.0
    } else {
        -1.0
    }
}

/// `B(x_i, θ_k) = ψ(x_i - ħθ_k/2) ψ†(x_i + ħθ_k/2) γ⁰`, zero where either
/// point leaves the box.
pub fn build_b(psi: &SpinorField) -> SpinorMatrixField {
    build_b_mixed(&[1.0], std::slice::from_ref(psi)).expect("single unit weight")
}

/// `Σ wᵢ B[ψᵢ]` for convex weights.
pub fn build_b_mixed(weights: &[f64], spinors: &[SpinorField]) -> Result<SpinorMatrixField> {
    if weights.len() != spinors.len() || spinors.is_empty() {
        return Err(Error::InvalidParameter("need one weight per spinor".into()));
    }
    if weights.iter().any(|&w| w.is_nan() || w < 0.0) || (weights.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(format!("weights {weights:?} are not convex")));
    }
    for s in &spinors[1..] {
        spinors[0].same_grid(s)?;
    }
    let (grid, constants) = (spinors[0].grid, spinors[0].constants);
    let n = grid.n;
    let half = (n / 2) as isize;
    let planes: Vec<Array2<C64>> = (0..16)
        .into_par_iter()
        .map(|ab| {
            let (a, b) = (ab / 4, ab % 4);
            let g0 = gamma0_sign(b);
            Array2::from_shape_fn((n, n), |(i, c)| {
                let k = c as isize - half;
                let (lo, hi) = (i as isize - k, i as isize + k);
                if lo < 0 || hi < 0 || lo as usize >= n || hi as usize >= n {
                    return C64::new(0.0, 0.0);
                }
                let (lo, hi) = (lo as usize, hi as usize);
                weights
                    .iter()
                    .zip(spinors)
                    .map(|(w, s)| s.data[[lo, a]] * s.data[[hi, b]].conj() * (w * g0))
                    .sum()
            })
        })
        .collect();
    Ok(SpinorMatrixField { grid, constants, domain: MatrixDomain::PositionTheta, planes })
}

/// `θ → p` on every row of a centred `(x, θ)` plane, producing `(x, p)`.
fn theta_to_p(plane: &mut Array2<C64>, scale: f64) {
    let n = plane.ncols();
    let fft = Fft1::new(n);
    plane.axis_iter_mut(Axis(0)).into_par_iter().for_each(|mut row| {
        // centred column c = k + n/2  →  FFT slot q = k mod n, with (-1)^k
        let mut buf: Vec<C64> = (0..n)
            .map(|q| {
                let c = (q + n / 2) % n;
                if q % 2 == 0 {
                    row[c]
                } else {
                    -row[c]
                }
            })
            .collect();
        fft.inverse_unscaled(&mut buf);
        for (dst, v) in row.iter_mut().zip(buf) {
            *dst = v * scale;
        }
    });
}

/// Inverse of [`theta_to_p`].
fn p_to_theta(plane: &mut Array2<C64>, scale: f64) {
    let n = plane.ncols();
    let fft = Fft1::new(n);
    plane.axis_iter_mut(Axis(0)).into_par_iter().for_each(|mut row| {
        let mut buf: Vec<C64> = row.iter().map(|z| z / (scale * n as f64)).collect();
        fft.forward(&mut buf);
        for (q, v) in buf.into_iter().enumerate() {
            let c = (q + n / 2) % n;
            row[c] = if q % 2 == 0 { v } else { -v };
        }
    });
}

fn theta_scale(f: &SpinorMatrixField) -> f64 {
    f.phase_grid().d_theta() / (2.0 * PI)
}

/// `(x, θ) → (λ, p)`.
pub fn to_lambda_momentum(mut b: SpinorMatrixField) -> Result<SpinorMatrixField> {
    if b.domain != MatrixDomain::PositionTheta {
        return Err(Error::InvalidParameter("expected an (x, θ) matrix field".into()));
    }
    let scale = theta_scale(&b);
    for plane in &mut b.planes {
        theta_to_p(plane, scale);
        along_cols(plane, Direction::Forward);
    }
    b.domain = MatrixDomain::LambdaMomentum;
    Ok(b)
}

/// `(λ, p) → (x, θ)`.
pub fn to_position_theta(mut c: SpinorMatrixField) -> Result<SpinorMatrixField> {
    if c.domain != MatrixDomain::LambdaMomentum {
        return Err(Error::InvalidParameter("expected a (λ, p) matrix field".into()));
    }
    let scale = theta_scale(&c);
    for plane in &mut c.planes {
        along_cols(plane, Direction::Inverse);
        p_to_theta(plane, scale);
    }
    c.domain = MatrixDomain::PositionTheta;
    Ok(c)
}

/// Sandwiches every `(λ, p)` point: `P_left(p + ħλ/2) · C · γ⁰ P_right(p - ħλ/2) γ⁰`.
pub fn sandwich(c: &mut SpinorMatrixField, left: EnergySign, right: EnergySign) -> Result<()> {
    if c.domain != MatrixDomain::LambdaMomentum {
        return Err(Error::InvalidParameter("projectors act on the (λ, p) domain".into()));
    }
    let pg = c.phase_grid();
    let k = c.constants;
    let n = pg.n();
    let g0 = beta();
    // gather blocks of λ rows, transform in parallel, scatter
    const BLOCK: usize = 64;
    for start in (0..n).step_by(BLOCK) {
        let rows: Vec<Vec<Mat4>> = (start..(start + BLOCK).min(n))
            .into_par_iter()
            .map(|m| {
                let half_shift = 0.5 * k.hbar * pg.spatial.wavenumber(m);
                (0..n)
                    .map(|j| {
                        let p = pg.p(j);
                        let pl = energy_projector(p + half_shift, left, &k);
                        let pr = energy_projector(p - half_shift, right, &k);
                        pl * c.at(m, j) * (g0 * pr * g0)
                    })
                    .collect()
            })
            .collect();
        for (dm, row) in rows.iter().enumerate() {
            for (j, mat) in row.iter().enumerate() {
                c.set(start + dm, j, mat);
            }
        }
    }
    Ok(())
}

/// Projected matrix field `P_s B P_s`, returned in the `(x, θ)` domain.
pub fn filter_matrix(b: &SpinorMatrixField, s: EnergySign) -> Result<SpinorMatrixField> {
    let mut c = to_lambda_momentum(b.clone())?;
    sandwich(&mut c, s, s)?;
    to_position_theta(c)
}

/// `tr(· γ⁰)` of a `(λ, p)` matrix field, inverse-transformed over λ.
fn trace_to_wigner(c: &SpinorMatrixField) -> CrossWignerField {
    let n = c.grid.n;
    let mut tr = Array2::<C64>::zeros((n, n));
    for a in 0..4 {
        tr += &c.planes[5 * a].mapv(|z| z * gamma0_sign(a));
    }
    along_cols(&mut tr, Direction::Inverse);
    CrossWignerField { grid: c.grid, constants: c.constants, data: tr }
}

/// Block `tr(P_left B P_right γ⁰)` of the decomposition of W⁰, in `(x, p)`.
/// The four sign combinations sum to the unfiltered W⁰.
pub fn filter_wigner_block(b: &SpinorMatrixField, left: EnergySign, right: EnergySign) -> Result<CrossWignerField> {
    let mut c = to_lambda_momentum(b.clone())?;
    sandwich(&mut c, left, right)?;
    Ok(trace_to_wigner(&c))
}

/// W⁰ with particles (`Particle`) or antiparticles (`Antiparticle`) kept,
/// computed entirely in phase space. The lattice integral is the retained
/// weight.
pub fn filter_wigner(b: &SpinorMatrixField, s: EnergySign) -> Result<WignerField> {
    let cross = filter_wigner_block(b, s, s)?;
    let residue = cross.imaginary_residue();
    if residue > FILTER_RESIDUE_LIMIT {
        return Err(Error::ImaginaryResidue { residue, limit: FILTER_RESIDUE_LIMIT });
    }
    Ok(cross.real_part())
}

/// W⁰ of an `(x, θ)` matrix field without filtering: `tr(Bγ⁰)` transformed
/// over θ.
pub fn matrix_w0(b: &SpinorMatrixField) -> Result<WignerField> {
    if b.domain != MatrixDomain::PositionTheta {
        return Err(Error::InvalidParameter("expected an (x, θ) matrix field".into()));
    }
    let mut tr = trace_gamma0(b);
    theta_to_p(&mut tr, theta_scale(b));
    let cross = CrossWignerField { grid: b.grid, constants: b.constants, data: tr };
    let residue = cross.imaginary_residue();
    if residue > FILTER_RESIDUE_LIMIT {
        return Err(Error::ImaginaryResidue { residue, limit: FILTER_RESIDUE_LIMIT });
    }
    Ok(cross.real_part())
}

/// Plane of `tr(B(x, θ)γ⁰)` in the centred `(x, θ)` layout.
pub fn trace_gamma0(b: &SpinorMatrixField) -> Array2<C64> {
    let n = b.grid.n;
    let mut tr = Array2::<C64>::zeros((n, n));
    for a in 0..4 {
        tr += &b.planes[5 * a].mapv(|z| z * gamma0_sign(a));
    }
    tr
}

/// Charge-parity image `ψ → βγ⁵ ψ*(-x)`. Maps solutions of the free equation
/// to solutions and exchanges particles with antiparticles.
pub fn charge_parity(psi: &SpinorField) -> SpinorField {
    let m = beta() * crate::dirac::gamma5();
    let r = psi.reflect();
    let mut data = Array2::zeros((psi.grid.n, 4));
    for i in 0..psi.grid.n {
        let v = nalgebra::Vector4::from_iterator(r.at(i).iter().map(|z| z.conj()));
        let w = m * v;
        for c in 0..4 {
            data[[i, c]] = w[c];
        }
    }
    SpinorField { data, ..psi.clone() }
}
