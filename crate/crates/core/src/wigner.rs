//! The relativistic Wigner transform W⁰ and its diagnostics.
//!
//! For scalar fields `f`, `g` the lattice transform is
//!
//! ```text
//! W_fg(x_i, p_j) = (dθ/2π) Σ_k f(x_i - ħθ_k/2) · conj(g(x_i + ħθ_k/2)) · e^{i p_j θ_k}
//! ```
//!
//! with `ħθ_k/2 = k·dx`, `k = -n/2..n/2`. Samples outside the box are zero.
//! The sum over `k` is one FFT per `x_i`. W⁰ of a spinor is the sum of its
//! four diagonal component terms (the γ⁰ trace), carrying the physical
//! normalization `Σ W⁰ dx dp = ‖ψ‖²`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use ndarray::{Array2, Axis};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{CrossWignerField, ScalarField, SpinorField, WignerField};
use crate::fourier::Fft1;
use crate::C64;

/// Largest tolerated imaginary part of a diagonal transform, relative to its
/// largest modulus.
pub const REAL_RESIDUE_LIMIT: f64 = 1e-12;

/// Fills `buf` (FFT order over k) with the θ-kernel of row `i` and applies the
/// `(-1)^k` shift that centres the momentum axis. Shared with the matrix
/// pipeline in `projection`.
pub(crate) fn kernel_row(n: usize, i: usize, buf: &mut [C64], pair: impl Fn(usize, usize) -> C64) {
    for (q, slot) in buf.iter_mut().enumerate() {
        let k = if q < n / 2 { q as isize } else { q as isize - n as isize };
        let lo = i as isize - k;
        let hi = i as isize + k;
        *slot = if lo >= 0 && hi >= 0 && (lo as usize) < n && (hi as usize) < n {
            let v = pair(lo as usize, hi as usize);
            if q % 2 == 0 {
                v
            } else {
                -v
            }
        } else {
            C64::new(0.0, 0.0)
        };
    }
}

fn transform_rows(n: usize, scale: f64, pairs: impl Fn(usize, usize) -> C64 + Sync) -> Array2<C64> {
    let fft = Fft1::new(n);
    let mut out = Array2::<C64>::zeros((n, n));
    out.axis_iter_mut(Axis(0)).into_par_iter().enumerate().for_each(|(i, mut row)| {
        let mut buf = vec![C64::new(0.0, 0.0); n];
        kernel_row(n, i, &mut buf, &pairs);
        fft.inverse_unscaled(&mut buf);
        for (dst, v) in row.iter_mut().zip(buf) {
            *dst = v * scale;
        }
    });
    out
}

/// Cross Wigner term of two scalar fields,
/// `(1/2π) ∫ f(x - ħθ/2)·conj(g(x + ħθ/2))·e^{ipθ} dθ`.
pub fn component_wigner(f: &ScalarField, g: &ScalarField) -> Result<CrossWignerField> {
    if f.grid != g.grid || f.constants != g.constants {
        return Err(Error::GridMismatch);
    }
    let pg = f.phase_grid();
    let n = pg.n();
    let data = transform_rows(n, pg.d_theta() / (2.0 * PI), |lo, hi| f.data[lo] * g.data[hi].conj());
    CrossWignerField::new(f.grid, f.constants, data)
}

/// `Σ_n W_{ψ₁ₙψ₂ₙ}`: the spinor cross term with ψ₁ on the left shift.
pub fn cross_wigner(psi1: &SpinorField, psi2: &SpinorField) -> Result<CrossWignerField> {
    psi1.same_grid(psi2)?;
    let pg = psi1.phase_grid();
    let n = pg.n();
    let (a, b) = (&psi1.data, &psi2.data);
    let data = transform_rows(n, pg.d_theta() / (2.0 * PI), |lo, hi| {
        (0..4).map(|c| a[[lo, c]] * b[[hi, c]].conj()).sum()
    });
    CrossWignerField::new(psi1.grid, psi1.constants, data)
}

fn real_checked(cross: CrossWignerField) -> Result<WignerField> {
    let residue = cross.imaginary_residue();
    if residue > REAL_RESIDUE_LIMIT {
        return Err(Error::ImaginaryResidue { residue, limit: REAL_RESIDUE_LIMIT });
    }
    Ok(cross.real_part())
}

/// W⁰ of a spinor. The lattice integral equals `‖ψ‖²`.
pub fn w0_transform(psi: &SpinorField) -> Result<WignerField> {
    real_checked(cross_wigner(psi, psi)?)
}

/// Non-relativistic Wigner function of a scalar field, rescaled to unit
/// lattice integral.
pub fn scalar_wigner(phi: &ScalarField) -> Result<WignerField> {
    real_checked(component_wigner(phi, phi)?)?.normalized()
}

/// Wigner function of the mixed state `Σ wᵢ |φᵢ⟩⟨φᵢ|`, summed term by term.
pub fn mixture_wigner(terms: &[(f64, ScalarField)]) -> Result<WignerField> {
    let (first, rest) = terms.split_first().ok_or_else(|| Error::InvalidParameter("empty mixture".into()))?;
    let mut acc = component_wigner(&first.1, &first.1)?.data.mapv(|z| z * first.0);
    for (w, phi) in rest {
        acc += &component_wigner(phi, phi)?.data.mapv(|z| z * *w);
    }
    real_checked(CrossWignerField::new(first.1.grid, first.1.constants, acc)?)
}

/// `∫ W dp` on each x lattice point.
pub fn marginal_x(w: &WignerField) -> Vec<f64> {
    let dp = w.phase_grid().dp();
    w.data.sum_axis(Axis(1)).iter().map(|v| v * dp).collect()
}

/// `∫ W dx` on each momentum lattice point.
pub fn marginal_p(w: &WignerField) -> Vec<f64> {
    let dx = w.grid.dx();
    w.data.sum_axis(Axis(0)).iter().map(|v| v * dx).collect()
}

/// `Σ_n |φ_n(p_j)|²` on the momentum lattice of `psi`'s phase-space grid,
/// with `φ_n(p) = (2πħ)^{-1/2} Σ_i ψ_n(x_i) e^{-ipx_i/ħ} dx` by direct sum.
pub fn momentum_density(psi: &SpinorField) -> Vec<f64> {
    let pg = psi.phase_grid();
    let xs = pg.spatial.xs();
    let hbar = pg.hbar;
    let pref = pg.dx() / (2.0 * PI * hbar).sqrt();
    (0..pg.n())
        .into_par_iter()
        .map(|j| {
            let p = pg.p(j);
            let mut amp = [C64::new(0.0, 0.0); 4];
            for (i, &x) in xs.iter().enumerate() {
                let e = C64::from_polar(1.0, -p * x / hbar);
                for (c, a) in amp.iter_mut().enumerate() {
                    *a += psi.data[[i, c]] * e;
                }
            }
            amp.iter().map(|a| (a * pref).norm_sqr()).sum()
        })
        .collect()
}

/// Polynomial phase-space symbol `G(x, p) = Σ c_ij xⁱ pʲ` of total degree ≤ 4.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ObservableSymbol {
    coeffs: BTreeMap<(u32, u32), f64>,
}

impl ObservableSymbol {
    pub const MAX_DEGREE: u32 = 4;

    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), f64)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for ((i, j), c) in terms {
            if i + j > Self::MAX_DEGREE {
                return Err(Error::InvalidParameter(format!("term x^{i} p^{j} exceeds degree {}", Self::MAX_DEGREE)));
            }
            if !c.is_finite() {
                return Err(Error::InvalidParameter(format!("coefficient of x^{i} p^{j} is not finite")));
            }
            *coeffs.entry((i, j)).or_insert(0.0) += c;
        }
        Ok(Self { coeffs })
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `xⁱ pʲ`; panics above degree 4.
    pub fn monomial(i: u32, j: u32) -> Self {
        Self::new([((i, j), 1.0)]).expect("monomial degree")
    }

    pub fn eval(&self, x: f64, p: f64) -> f64 {
        self.coeffs.iter().map(|(&(i, j), c)| c * x.powi(i as i32) * p.powi(j as i32)).sum()
    }
}

/// `⟨G⟩ = Σ W(x, p) G(x, p) dx dp`
pub fn expectation(w: &WignerField, g: &ObservableSymbol) -> f64 {
    let pg = w.phase_grid();
    let xs = pg.spatial.xs();
    let ps = pg.ps();
    let sum: f64 = w.data.indexed_iter().map(|((i, j), v)| v * g.eval(xs[i], ps[j])).sum();
    sum * pg.cell()
}

/// Wigner function of `aψ₁ + bψ₂` from its parts, rescaled to unit integral.
///
/// `w1`, `w2` and `cross` must come from the same (unrescaled) spinors:
/// `w1 = w0_transform(ψ₁)`, `w2 = w0_transform(ψ₂)`,
/// `cross = cross_wigner(ψ₁, ψ₂)`. The interference term is
/// `a·conj(b)·cross + c.c.`
pub fn superpose_wigner(w1: &WignerField, w2: &WignerField, cross: &CrossWignerField, a: C64, b: C64) -> Result<WignerField> {
    w1.same_grid(w2)?;
    if cross.grid != w1.grid || cross.constants != w1.constants {
        return Err(Error::GridMismatch);
    }
    let ab = a * b.conj();
    let mut data = w1.data.mapv(|v| v * a.norm_sqr()) + w2.data.mapv(|v| v * b.norm_sqr());
    data.zip_mut_with(&cross.data, |d, z| *d += 2.0 * (ab * z).re);
    WignerField::new(w1.grid, w1.constants, data)?.normalized()
}

/// `Σ max(0, -W) dx dp`
pub fn negativity_volume(w: &WignerField) -> f64 {
    w.data.iter().map(|&v| (-v).max(0.0)).sum::<f64>() * w.phase_grid().cell()
}

pub fn min_value(w: &WignerField) -> f64 {
    w.data.iter().copied().fold(f64::INFINITY, f64::min)
}

/// `min W / max W`, the scale-free positivity measure used throughout.
pub fn min_over_max(w: &WignerField) -> f64 {
    min_value(w) / w.max_value()
}
