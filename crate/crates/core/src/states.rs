//! Analytic spinor constructors and the closed-form Wigner functions of the
//! four non-negative families.
//!
//! Every constructor returns a unit-norm field unless stated otherwise. The
//! closed forms are returned as plain functions of `(x, p)`; sample them with
//! [`oracle_field`], which also rescales them to unit lattice integral.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::field::{SpinorField, WignerField};
use crate::grid::{PhaseSpaceGrid, PhysicalConstants};
use crate::C64;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

fn re(v: f64) -> C64 {
    C64::new(v, 0.0)
}

fn nonzero(name: &str, v: f64) -> Result<()> {
    if v == 0.0 || !v.is_finite() {
        Err(Error::InvalidParameter(format!("{name} must be finite and non-zero, got {v}")))
    } else {
        Ok(())
    }
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")))
    }
}

/// Shape parameters shared by the state families. Each family reads only the
/// fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StateParams {
    /// Gaussian width of the ground Landau spinor.
    pub sigma: f64,
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub q: f64,
    /// Reference momentum of the ground spinor prefactor. It scales both
    /// non-zero components equally and therefore drops out after
    /// normalization.
    pub p0: f64,
}

impl Default for StateParams {
    fn default() -> Self {
        Self { sigma: 1.0, a: 1.0, b: 3.0, d: 0.1, q: 0.1, p0: 0.0 }
    }
}

/// Ground Landau spinor `∝ e^{-x²/2σ²}·(1, 0, i, 0)`.
pub fn ground_landau(grid: &PhaseSpaceGrid, k: PhysicalConstants, sigma: f64) -> Result<SpinorField> {
    nonzero("sigma", sigma)?;
    SpinorField::from_fn(grid.spatial, k, |x| {
        let g = (-x * x / (2.0 * sigma * sigma)).exp();
        [re(g), ZERO, C64::new(0.0, g), ZERO]
    })?
    .normalize()
}

/// First excited Landau spinor `∝ e^{-a²x²}·(1, 0, 2ax, 0)`.
///
/// The factor 2 on the lower component makes the oscillator ground and first
/// excited functions enter with equal weight, which is the state whose Wigner
/// function is `∝ e^{-p²/2a² - 2a²x²}(p² + 4a⁴x²)` and vanishes at the origin.
pub fn first_landau(grid: &PhaseSpaceGrid, k: PhysicalConstants, a: f64) -> Result<SpinorField> {
    nonzero("a", a)?;
    SpinorField::from_fn(grid.spatial, k, |x| {
        let g = (-a * a * x * x).exp();
        [re(g), ZERO, re(2.0 * a * x * g), ZERO]
    })?
    .normalize()
}

fn gauss(x: f64, centre: f64, a: f64) -> f64 {
    (-(x - centre).powi(2) / (a * a)).exp()
}

/// Two Gaussians at `±b`: upper component their sum, lower their difference.
pub fn double_gaussian(grid: &PhaseSpaceGrid, k: PhysicalConstants, a: f64, b: f64) -> Result<SpinorField> {
    nonzero("a", a)?;
    finite("b", b)?;
    SpinorField::from_fn(grid.spatial, k, |x| {
        let (gp, gm) = (gauss(x, b, a), gauss(x, -b, a));
        [re(gp + gm), ZERO, re(gp - gm), ZERO]
    })?
    .normalize()
}

/// Weighted pair `q·g(x-d)` and `(1-q)·g(x+b)`: upper component their sum,
/// lower their difference.
pub fn general_double(grid: &PhaseSpaceGrid, k: PhysicalConstants, q: f64, a: f64, b: f64, d: f64) -> Result<SpinorField> {
    nonzero("a", a)?;
    finite("q", q)?;
    finite("b", b)?;
    finite("d", d)?;
    SpinorField::from_fn(grid.spatial, k, |x| {
        let (gd, gb) = (q * gauss(x, d, a), (1.0 - q) * gauss(x, -b, a));
        [re(gd + gb), ZERO, re(gd - gb), ZERO]
    })?
    .normalize()
}

/// Whether a spinor pair constructor rescales its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scaling {
    Normalized,
    /// Amplitudes exactly as written, with unit Gaussian peaks.
    AsPrinted,
}

fn finish(psi: SpinorField, scaling: Scaling) -> Result<SpinorField> {
    match scaling {
        Scaling::Normalized => psi.normalize(),
        Scaling::AsPrinted => Ok(psi),
    }
}

/// `g(x-b)·(1,0,1,0)` and `g(x+b)·(1,0,-1,0)`. Their sum is the
/// [`double_gaussian`] state and their spinor parts are orthogonal, so the
/// cross Wigner term vanishes identically.
pub fn pair_no_interference(
    grid: &PhaseSpaceGrid,
    k: PhysicalConstants,
    a: f64,
    b: f64,
    scaling: Scaling,
) -> Result<(SpinorField, SpinorField)> {
    nonzero("a", a)?;
    finite("b", b)?;
    let first = SpinorField::from_fn(grid.spatial, k, |x| {
        let g = gauss(x, b, a);
        [re(g), ZERO, re(g), ZERO]
    })?;
    let second = SpinorField::from_fn(grid.spatial, k, |x| {
        let g = gauss(x, -b, a);
        [re(g), ZERO, re(-g), ZERO]
    })?;
    Ok((finish(first, scaling)?, finish(second, scaling)?))
}

/// `e^{-(x∓6)²/2}·(1,0,i,0)`: two well separated packets sharing one spinor
/// direction, whose superposition interferes.
pub fn pair_interference(grid: &PhaseSpaceGrid, k: PhysicalConstants, scaling: Scaling) -> Result<(SpinorField, SpinorField)> {
    let make = |centre: f64| {
        SpinorField::from_fn(grid.spatial, k, move |x| {
            let g = (-(x - centre).powi(2) / 2.0).exp();
            [re(g), ZERO, C64::new(0.0, g), ZERO]
        })
    };
    Ok((finish(make(6.0)?, scaling)?, finish(make(-6.0)?, scaling)?))
}

/// The four families with closed-form, non-negative Wigner functions.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// [`ground_landau`]
    Ground { sigma: f64 },
    /// [`first_landau`]
    FirstExcited { a: f64 },
    /// [`double_gaussian`]
    DoubleGaussian { a: f64, b: f64 },
    /// [`general_double`]
    GeneralDouble { q: f64, a: f64, b: f64, d: f64 },
}

impl Family {
    /// Looks a family up by its short name, reading its parameters from `p`.
    pub fn by_name(name: &str, p: &StateParams) -> Result<Self> {
        match name {
            "eq7" | "ground" => Ok(Family::Ground { sigma: p.sigma }),
            "eq9" | "first_excited" => Ok(Family::FirstExcited { a: p.a }),
            "eq11" | "double_gaussian" => Ok(Family::DoubleGaussian { a: p.a, b: p.b }),
            "eq13" | "general_double" => Ok(Family::GeneralDouble { q: p.q, a: p.a, b: p.b, d: p.d }),
            other => Err(Error::InvalidParameter(format!("unknown state family '{other}'"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Ground { .. } => "ground",
            Family::FirstExcited { .. } => "first_excited",
            Family::DoubleGaussian { .. } => "double_gaussian",
            Family::GeneralDouble { .. } => "general_double",
        }
    }

    /// Unit-norm spinor of this family.
    pub fn spinor(&self, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<SpinorField> {
        match *self {
            Family::Ground { sigma } => ground_landau(grid, k, sigma),
            Family::FirstExcited { a } => first_landau(grid, k, a),
            Family::DoubleGaussian { a, b } => double_gaussian(grid, k, a, b),
            Family::GeneralDouble { q, a, b, d } => general_double(grid, k, q, a, b, d),
        }
    }

    /// Unnormalized closed-form Wigner function in natural units
    /// (`ħ = 1`; overall constants dropped).
    pub fn closed_form(&self) -> Result<Box<dyn Fn(f64, f64) -> f64 + Send + Sync>> {
        Ok(match *self {
            Family::Ground { sigma } => {
                nonzero("sigma", sigma)?;
                let s2 = sigma * sigma;
                Box::new(move |x, p| (-(x * x + s2 * s2 * p * p) / s2).exp())
            }
            Family::FirstExcited { a } => {
                nonzero("a", a)?;
                let a2 = a * a;
                Box::new(move |x, p| (-p * p / (2.0 * a2) - 2.0 * a2 * x * x).exp() * (p * p + 4.0 * a2 * a2 * x * x) / (2.0 * a2 * PI))
            }
            Family::DoubleGaussian { a, b } => {
                nonzero("a", a)?;
                let a2 = a * a;
                // e^{-2(b²+x²)/a²}·cosh(4bx/a²), written as a sum of the two
                // lobes so that it cannot overflow for large |x|
                Box::new(move |x, p| {
                    let lobes = (-2.0 * (x - b).powi(2) / a2).exp() + (-2.0 * (x + b).powi(2) / a2).exp();
                    0.5 * (-a2 * p * p / 2.0).exp() * lobes
                })
            }
            Family::GeneralDouble { q, a, b, d } => {
                nonzero("a", a)?;
                let a2 = a * a;
                let a4p = move |p: f64| a2 * a2 * p * p;
                Box::new(move |x, p| {
                    (-(a4p(p) + 4.0 * (b + x).powi(2)) / (2.0 * a2)).exp() * (q - 1.0).powi(2)
                        + q * q * (-(a4p(p) + 4.0 * (d - x).powi(2)) / (2.0 * a2)).exp()
                })
            }
        })
    }
}

/// The closed form of `family` sampled on `grid` and rescaled to unit lattice
/// integral.
pub fn oracle_field(family: &Family, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<WignerField> {
    let f = family.closed_form()?;
    WignerField::from_fn(grid, k, f)?.normalized()
}
