//! Spatial and phase-space lattices.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ħ, c, m and e. The charge is carried along but unused by free dynamics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub c: f64,
    pub mass: f64,
    pub charge: f64,
}

impl PhysicalConstants {
    /// ħ = c = m = 1.
    pub const NATURAL: PhysicalConstants = PhysicalConstants { hbar: 1.0, c: 1.0, mass: 1.0, charge: 1.0 };

    pub fn new(hbar: f64, c: f64, mass: f64, charge: f64) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("c", c), ("mass", mass), ("charge", charge)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!("{name} must be finite and positive, got {v}")));
            }
        }
        Ok(Self { hbar, c, mass, charge })
    }

    /// Rest energy mc².
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c * self.c
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::NATURAL
    }
}

/// Uniform periodic lattice `x_i = x_min + i·dx`, `i = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpatialGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl SpatialGrid {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite bounds [{x_min}, {x_max})")));
        }
        if x_max <= x_min {
            return Err(Error::InvalidGrid(format!("x_max ({x_max}) must exceed x_min ({x_min})")));
        }
        if n < 8 {
            return Err(Error::InvalidGrid(format!("n = {n} is below the minimum of 8")));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("n = {n} must be even")));
        }
        Ok(Self { x_min, x_max, n })
    }

    pub fn len(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.len() / self.n as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Index of the mirror point `-x_i`, wrapping periodically.
    /// Exact only for boxes symmetric about the origin.
    pub fn mirror_index(&self, i: usize) -> usize {
        (self.n - i) % self.n
    }

    /// Wave number of DFT mode `m` (FFT ordering, negative frequencies in the
    /// upper half).
    pub fn wavenumber(&self, m: usize) -> f64 {
        let signed = if m < self.n / 2 { m as isize } else { m as isize - self.n as isize };
        2.0 * PI * signed as f64 / self.len()
    }
}

/// Spatial lattice together with the θ lattice `θ_k = k·dθ`,
/// `k = -n/2..n/2`, and its Fourier-dual momentum lattice
/// `p_j = (j - n/2)·dp`, `j = 0..n`.
///
/// `dθ = 2dx/ħ`, so that `x ± ħθ/2` always lands on spatial lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseSpaceGrid {
    pub spatial: SpatialGrid,
    pub hbar: f64,
}

/// Natural-unit phase-space grid over `[x_min, x_max)` with `n` points.
pub fn build_grid(x_min: f64, x_max: f64, n: usize) -> Result<PhaseSpaceGrid> {
    Ok(PhaseSpaceGrid::new(SpatialGrid::new(x_min, x_max, n)?, 1.0))
}

impl PhaseSpaceGrid {
    pub fn new(spatial: SpatialGrid, hbar: f64) -> Self {
        Self { spatial, hbar }
    }

    pub fn n(&self) -> usize {
        self.spatial.n
    }

    pub fn dx(&self) -> f64 {
        self.spatial.dx()
    }

    pub fn x(&self, i: usize) -> f64 {
        self.spatial.x(i)
    }

    pub fn d_theta(&self) -> f64 {
        2.0 * self.dx() / self.hbar
    }

    pub fn dp(&self) -> f64 {
        2.0 * PI / (self.n() as f64 * self.d_theta())
    }

    pub fn p(&self, j: usize) -> f64 {
        (j as f64 - (self.n() / 2) as f64) * self.dp()
    }

    pub fn ps(&self) -> Vec<f64> {
        (0..self.n()).map(|j| self.p(j)).collect()
    }

    /// Index of `p = 0` on the momentum lattice.
    pub fn p_zero_index(&self) -> usize {
        self.n() / 2
    }

    /// `θ` for a signed offset `k`.
    pub fn theta(&self, k: isize) -> f64 {
        k as f64 * self.d_theta()
    }

    /// Phase-space cell area `dx·dp`.
    pub fn cell(&self) -> f64 {
        self.dx() * self.dp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_box_steps() {
        let g = build_grid(-16.0, 16.0, 512).unwrap();
        assert_eq!(g.dx(), 0.0625);
        assert_eq!(g.d_theta(), 0.125);
        // 2π / (512 · 0.125)
        assert!((g.dp() - 0.098_174_770_424_681_04).abs() < 1e-15);
    }

    #[test]
    fn momentum_lattice_is_zero_centred() {
        let g = build_grid(-1.0, 1.0, 8).unwrap();
        let ps = g.ps();
        assert_eq!(ps.len(), 8);
        assert_eq!(ps[g.p_zero_index()], 0.0);
        // every interior point has its negative on the lattice; the first
        // point is the Nyquist momentum ±p_max
        for j in 1..8 {
            let neg = 8 - j;
            assert!((ps[j] + ps[neg]).abs() < 1e-14, "{} vs {}", ps[j], ps[neg]);
        }
        assert!((ps[0] + 4.0 * g.dp()).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(build_grid(0.0, 1.0, 7).is_err());
        assert!(build_grid(0.0, 1.0, 6).is_err());
        assert!(build_grid(1.0, 0.0, 8).is_err());
        assert!(build_grid(f64::NAN, 1.0, 8).is_err());
        assert!(build_grid(0.0, f64::INFINITY, 8).is_err());
    }

    #[test]
    fn shifts_land_on_lattice_for_any_hbar() {
        let g = PhaseSpaceGrid::new(SpatialGrid::new(-4.0, 4.0, 64).unwrap(), 0.37);
        let shift = g.hbar * g.theta(3) / 2.0;
        assert!((shift - 3.0 * g.dx()).abs() < 1e-14);
        // dθ · dp · n = 2π
        assert!((g.d_theta() * g.dp() * 64.0 - 2.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn constants_must_be_positive() {
        assert!(PhysicalConstants::new(1.0, 1.0, 0.0, 1.0).is_err());
        assert!(PhysicalConstants::new(-1.0, 1.0, 1.0, 1.0).is_err());
        assert_eq!(PhysicalConstants::default(), PhysicalConstants::new(1.0, 1.0, 1.0, 1.0).unwrap());
    }
}
