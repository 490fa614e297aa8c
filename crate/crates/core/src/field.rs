//! Field containers. All of them are plain values: operations take them by
//! reference and return new fields.

use nalgebra::Matrix4;
use ndarray::{Array2, Axis};

use crate::error::{Error, Result};
use crate::grid::{PhaseSpaceGrid, PhysicalConstants, SpatialGrid};
use crate::C64;

fn check_finite<'a>(mut it: impl Iterator<Item = &'a f64>) -> Result<()> {
    if it.all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidParameter("field contains non-finite entries".into()))
    }
}

/// One complex amplitude per spatial lattice point.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub grid: SpatialGrid,
    pub constants: PhysicalConstants,
    pub data: Vec<C64>,
}

impl ScalarField {
    pub fn new(grid: SpatialGrid, constants: PhysicalConstants, data: Vec<C64>) -> Result<Self> {
        if data.len() != grid.n {
            return Err(Error::InvalidParameter(format!("expected {} samples, got {}", grid.n, data.len())));
        }
        check_finite(data.iter().flat_map(|z| [&z.re, &z.im]))?;
        Ok(Self { grid, constants, data })
    }

    pub fn from_fn(grid: SpatialGrid, constants: PhysicalConstants, f: impl Fn(f64) -> C64) -> Result<Self> {
        let data = (0..grid.n).map(|i| f(grid.x(i))).collect();
        Self::new(grid, constants, data)
    }

    pub fn zeros(grid: SpatialGrid, constants: PhysicalConstants) -> Self {
        Self { grid, constants, data: vec![C64::new(0.0, 0.0); grid.n] }
    }

    pub fn phase_grid(&self) -> PhaseSpaceGrid {
        PhaseSpaceGrid::new(self.grid, self.constants.hbar)
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.dx()
    }

    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroField);
        }
        let s = 1.0 / n.sqrt();
        Ok(Self { data: self.data.iter().map(|z| z * s).collect(), ..self.clone() })
    }
}

/// Four complex amplitudes per spatial lattice point, stored as an `n × 4`
/// array.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    pub grid: SpatialGrid,
    pub constants: PhysicalConstants,
    pub data: Array2<C64>,
}

impl SpinorField {
    pub fn new(grid: SpatialGrid, constants: PhysicalConstants, data: Array2<C64>) -> Result<Self> {
        if data.dim() != (grid.n, 4) {
            return Err(Error::InvalidParameter(format!(
                "spinor data must be {}×4, got {:?}",
                grid.n,
                data.dim()
            )));
        }
        check_finite(data.iter().flat_map(|z| [&z.re, &z.im]))?;
        Ok(Self { grid, constants, data: data.as_standard_layout().into_owned() })
    }

    pub fn from_fn(grid: SpatialGrid, constants: PhysicalConstants, f: impl Fn(f64) -> [C64; 4]) -> Result<Self> {
        let mut data = Array2::zeros((grid.n, 4));
        for (i, mut row) in data.axis_iter_mut(Axis(0)).enumerate() {
            let v = f(grid.x(i));
            for c in 0..4 {
                row[c] = v[c];
            }
        }
        Self::new(grid, constants, data)
    }

    pub fn zeros(grid: SpatialGrid, constants: PhysicalConstants) -> Self {
        Self { grid, constants, data: Array2::zeros((grid.n, 4)) }
    }

    pub fn phase_grid(&self) -> PhaseSpaceGrid {
        PhaseSpaceGrid::new(self.grid, self.constants.hbar)
    }

    pub fn component(&self, c: usize) -> ScalarField {
        ScalarField { grid: self.grid, constants: self.constants, data: self.data.column(c).to_vec() }
    }

    pub fn at(&self, i: usize) -> [C64; 4] {
        [self.data[[i, 0]], self.data[[i, 1]], self.data[[i, 2]], self.data[[i, 3]]]
    }

    /// `Σ_n Σ_i |ψ_n(x_i)|² dx`
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.dx()
    }

    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroField);
        }
        Ok(self.scale(C64::new(1.0 / n.sqrt(), 0.0)))
    }

    pub fn scale(&self, c: C64) -> Self {
        Self { data: self.data.mapv(|z| z * c), ..self.clone() }
    }

    /// `a·self + b·other`
    pub fn combine(&self, a: C64, other: &SpinorField, b: C64) -> Result<Self> {
        self.same_grid(other)?;
        let data = &self.data.mapv(|z| z * a) + &other.data.mapv(|z| z * b);
        Ok(Self { data, ..self.clone() })
    }

    /// `⟨self|other⟩ = Σ ψ†φ dx`
    pub fn overlap(&self, other: &SpinorField) -> Result<C64> {
        self.same_grid(other)?;
        let s: C64 = self.data.iter().zip(other.data.iter()).map(|(a, b)| a.conj() * b).sum();
        Ok(s * self.grid.dx())
    }

    /// `ψ(x) → ψ(-x)` on a box symmetric about the origin.
    pub fn reflect(&self) -> Self {
        let n = self.grid.n;
        let mut data = Array2::zeros((n, 4));
        for i in 0..n {
            data.row_mut(i).assign(&self.data.row(self.grid.mirror_index(i)));
        }
        Self { data, ..self.clone() }
    }

    /// L∞ distance to another spinor field.
    pub fn max_abs_diff(&self, other: &SpinorField) -> f64 {
        self.data.iter().zip(other.data.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub(crate) fn same_grid(&self, other: &SpinorField) -> Result<()> {
        if self.grid == other.grid && self.constants == other.constants {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}

/// Real W⁰(x_i, p_j) stored as an `n × n` array indexed `[x, p]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerField {
    pub grid: SpatialGrid,
    pub constants: PhysicalConstants,
    pub data: Array2<f64>,
}

impl WignerField {
    pub fn new(grid: SpatialGrid, constants: PhysicalConstants, data: Array2<f64>) -> Result<Self> {
        if data.dim() != (grid.n, grid.n) {
            return Err(Error::InvalidParameter(format!(
                "Wigner data must be {n}×{n}, got {:?}",
                data.dim(),
                n = grid.n
            )));
        }
        check_finite(data.iter())?;
        Ok(Self { grid, constants, data: data.as_standard_layout().into_owned() })
    }

    /// Samples a closed form `f(x, p)` on the lattice.
    pub fn from_fn(grid: &PhaseSpaceGrid, constants: PhysicalConstants, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let n = grid.n();
        let data = Array2::from_shape_fn((n, n), |(i, j)| f(grid.x(i), grid.p(j)));
        Self::new(grid.spatial, constants, data)
    }

    pub fn phase_grid(&self) -> PhaseSpaceGrid {
        PhaseSpaceGrid::new(self.grid, self.constants.hbar)
    }

    /// Lattice integral `Σ W dx dp`.
    pub fn integral(&self) -> f64 {
        self.data.sum() * self.phase_grid().cell()
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self { data: self.data.mapv(|v| v * s), ..self.clone() }
    }

    /// Rescaled to unit lattice integral.
    pub fn normalized(&self) -> Result<Self> {
        let total = self.integral();
        if total == 0.0 || !total.is_finite() {
            return Err(Error::ZeroField);
        }
        Ok(self.scaled(1.0 / total))
    }

    /// `W(x, p) → W(-x, p)`.
    pub fn reflect_x(&self) -> Self {
        let n = self.grid.n;
        let data = Array2::from_shape_fn((n, n), |(i, j)| self.data[[self.grid.mirror_index(i), j]]);
        Self { data, ..self.clone() }
    }

    /// `max |self - other| / max |other|`
    pub fn rel_linf(&self, reference: &WignerField) -> f64 {
        let scale = reference.max_abs();
        let diff = self.data.iter().zip(reference.data.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        diff / scale
    }

    pub(crate) fn same_grid(&self, other: &WignerField) -> Result<()> {
        if self.grid == other.grid && self.constants == other.constants {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}

/// Complex cross term W⁰_{ψ₁ψ₂}(x_i, p_j), indexed `[x, p]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossWignerField {
    pub grid: SpatialGrid,
    pub constants: PhysicalConstants,
    pub data: Array2<C64>,
}

impl CrossWignerField {
    pub fn new(grid: SpatialGrid, constants: PhysicalConstants, data: Array2<C64>) -> Result<Self> {
        if data.dim() != (grid.n, grid.n) {
            return Err(Error::InvalidParameter(format!("cross data must be {n}×{n}", n = grid.n)));
        }
        check_finite(data.iter().flat_map(|z| [&z.re, &z.im]))?;
        Ok(Self { grid, constants, data: data.as_standard_layout().into_owned() })
    }

    pub fn phase_grid(&self) -> PhaseSpaceGrid {
        PhaseSpaceGrid::new(self.grid, self.constants.hbar)
    }

    pub fn conj(&self) -> Self {
        Self { data: self.data.mapv(|z| z.conj()), ..self.clone() }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    /// Largest imaginary part relative to the largest modulus.
    pub fn imaginary_residue(&self) -> f64 {
        let scale = self.max_abs();
        if scale == 0.0 {
            return 0.0;
        }
        self.data.iter().fold(0.0_f64, |m, z| m.max(z.im.abs())) / scale
    }

    pub fn real_part(&self) -> WignerField {
        WignerField { grid: self.grid, constants: self.constants, data: self.data.mapv(|z| z.re) }
    }
}

/// Which pair of lattice axes a [`SpinorMatrixField`] is sampled on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixDomain {
    /// `(x_i, θ_k)`, θ index centred: column `c` holds `k = c - n/2`.
    PositionTheta,
    /// `(λ_m, p_j)`, λ in FFT order (row `m` holds the m-th DFT wave number of
    /// x), p on the centred momentum lattice.
    LambdaMomentum,
}

/// A 4×4 complex matrix at every point of an `n × n` lattice. Entry `(a, b)`
/// is stored as its own `n × n` plane, `planes[4a + b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorMatrixField {
    pub grid: SpatialGrid,
    pub constants: PhysicalConstants,
    pub domain: MatrixDomain,
    pub planes: Vec<Array2<C64>>,
}

impl SpinorMatrixField {
    pub fn zeros(grid: SpatialGrid, constants: PhysicalConstants, domain: MatrixDomain) -> Self {
        let n = grid.n;
        Self { grid, constants, domain, planes: (0..16).map(|_| Array2::zeros((n, n))).collect() }
    }

    pub fn phase_grid(&self) -> PhaseSpaceGrid {
        PhaseSpaceGrid::new(self.grid, self.constants.hbar)
    }

    pub fn at(&self, i: usize, j: usize) -> Matrix4<C64> {
        Matrix4::from_fn(|a, b| self.planes[4 * a + b][[i, j]])
    }

    pub fn set(&mut self, i: usize, j: usize, m: &Matrix4<C64>) {
        for a in 0..4 {
            for b in 0..4 {
                self.planes[4 * a + b][[i, j]] = m[(a, b)];
            }
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.planes.iter().flat_map(|p| p.iter()).fold(0.0_f64, |m, z| m.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &SpinorMatrixField) -> f64 {
        self.planes
            .iter()
            .zip(&other.planes)
            .flat_map(|(a, b)| a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()))
            .fold(0.0, f64::max)
    }
}
