//! Shared fixtures: grids, seeded random spinors with analytic momentum
//! amplitudes, and a brute-force Wigner quadrature that never touches the
//! lattice index arithmetic or an FFT.

#![allow(dead_code)]

use std::f64::consts::PI;

use dirac_wigner::{build_grid, PhaseSpaceGrid, PhysicalConstants, SpinorField, WignerField, C64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub const K: PhysicalConstants = PhysicalConstants::NATURAL;

/// `[-16, 16)`, 512 points.
pub fn default_grid() -> PhaseSpaceGrid {
    build_grid(-16.0, 16.0, 512).unwrap()
}

/// `[-32, 32)`, 512 points: room for the Compton-scale tails of projected
/// states.
pub fn wide_grid() -> PhaseSpaceGrid {
    build_grid(-32.0, 32.0, 512).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `A·e^{-(x-x0)²/2w²}·e^{ip0·x/ħ}`
#[derive(Debug, Clone, Copy)]
pub struct Wavelet {
    pub amp: C64,
    pub width: f64,
    pub centre: f64,
    pub kick: f64,
}

impl Wavelet {
    pub fn at(&self, x: f64, hbar: f64) -> C64 {
        self.amp * (-(x - self.centre).powi(2) / (2.0 * self.width * self.width)).exp() * C64::from_polar(1.0, self.kick * x / hbar)
    }

    /// `(2πħ)^{-1/2} ∫ e^{-ipx/ħ} (·) dx`, in closed form.
    pub fn momentum(&self, p: f64, hbar: f64) -> C64 {
        let w = self.width;
        let q = p - self.kick;
        self.amp * (w / hbar.sqrt()) * (-(w * w * q * q) / (2.0 * hbar * hbar)).exp() * C64::from_polar(1.0, -q * self.centre / hbar)
    }
}

/// A spinor whose components are finite sums of wavelets, known analytically
/// in both position and momentum.
#[derive(Debug, Clone)]
pub struct AnalyticSpinor {
    pub parts: [Vec<Wavelet>; 4],
    pub scale: f64,
}

impl AnalyticSpinor {
    pub fn random(rng: &mut impl Rng) -> Self {
        let mut parts: [Vec<Wavelet>; 4] = Default::default();
        for comp in parts.iter_mut() {
            for _ in 0..rng.random_range(1..=2) {
                comp.push(Wavelet {
                    amp: C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                    width: rng.random_range(0.5..2.0),
                    centre: rng.random_range(-3.0..3.0),
                    kick: rng.random_range(-1.5..1.5),
                });
            }
        }
        Self { parts, scale: 1.0 }
    }

    pub fn at(&self, x: f64, hbar: f64) -> [C64; 4] {
        let mut out = [C64::new(0.0, 0.0); 4];
        for (o, comp) in out.iter_mut().zip(&self.parts) {
            *o = comp.iter().map(|w| w.at(x, hbar)).sum::<C64>() * self.scale;
        }
        out
    }

    pub fn momentum_density(&self, p: f64, hbar: f64) -> f64 {
        self.parts
            .iter()
            .map(|comp| (comp.iter().map(|w| w.momentum(p, hbar)).sum::<C64>() * self.scale).norm_sqr())
            .sum()
    }

    /// Samples on `grid`, rescaling `self` so the sampled field has unit norm.
    pub fn sample_normalized(&mut self, grid: &PhaseSpaceGrid) -> SpinorField {
        let hbar = grid.hbar;
        let raw = SpinorField::from_fn(grid.spatial, K, |x| self.at(x, hbar)).unwrap();
        self.scale /= raw.norm().sqrt();
        SpinorField::from_fn(grid.spatial, K, |x| self.at(x, hbar)).unwrap()
    }
}

pub fn random_spinor(grid: &PhaseSpaceGrid, rng: &mut impl Rng) -> SpinorField {
    AnalyticSpinor::random(rng).sample_normalized(grid)
}

/// `W(x, p) = (1/2π) Σ_θ Σ_n ψ_n(x - ħθ/2) conj(ψ_n(x + ħθ/2)) e^{ipθ} Δθ`
/// with the spinor given as a closure, summed directly over
/// `θ = m·Δθ, |m| ≤ m_max`.
pub fn quadrature_wigner(psi: &dyn Fn(f64) -> [C64; 4], x: f64, p: f64, hbar: f64, d_theta: f64, m_max: i64) -> f64 {
    let mut acc = C64::new(0.0, 0.0);
    for m in -m_max..=m_max {
        let theta = m as f64 * d_theta;
        let l = psi(x - hbar * theta / 2.0);
        let r = psi(x + hbar * theta / 2.0);
        let pair: C64 = (0..4).map(|c| l[c] * r[c].conj()).sum();
        acc += pair * C64::from_polar(1.0, p * theta);
    }
    (acc * d_theta / (2.0 * PI)).re
}

/// The quadrature sampled on every lattice point of `grid`.
pub fn quadrature_field(psi: &dyn Fn(f64) -> [C64; 4], grid: &PhaseSpaceGrid, m_max: i64) -> WignerField {
    WignerField::from_fn(grid, K, |x, p| quadrature_wigner(psi, x, p, grid.hbar, grid.d_theta(), m_max)).unwrap()
}

/// `max |a - b| / max |b|`
pub fn rel_linf(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let scale = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs())) / scale
}
