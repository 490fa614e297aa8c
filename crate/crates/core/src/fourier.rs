//! Thin wrappers over `rustfft` for the lattice transforms used across the
//! crate. Every multi-lane transform parallelises over lanes only; each lane
//! is transformed serially, so results do not depend on the thread count.

use std::sync::Arc;

use ndarray::Array2;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::C64;

#[derive(Clone)]
pub(crate) struct Fft1 {
    n: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl Fft1 {
    pub fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self { n, fwd: planner.plan_fft_forward(n), inv: planner.plan_fft_inverse(n) }
    }

    /// `X_m = Σ_i x_i e^{-2πi·im/n}`
    pub fn forward(&self, buf: &mut [C64]) {
        self.fwd.process(buf);
    }

    /// `x_i = (1/n) Σ_m X_m e^{+2πi·im/n}`
    pub fn inverse(&self, buf: &mut [C64]) {
        self.inv.process(buf);
        let s = 1.0 / self.n as f64;
        buf.iter_mut().for_each(|z| *z *= s);
    }

    /// `Σ_m X_m e^{+2πi·im/n}` without the 1/n.
    pub fn inverse_unscaled(&self, buf: &mut [C64]) {
        self.inv.process(buf);
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    Forward,
    Inverse,
}

fn apply(fft: &Fft1, dir: Direction, lane: &mut [C64]) {
    match dir {
        Direction::Forward => fft.forward(lane),
        Direction::Inverse => fft.inverse(lane),
    }
}

/// Transform every row (`a[[i, ..]]`) of a standard-layout array.
pub(crate) fn along_rows(a: &mut Array2<C64>, dir: Direction) {
    let n = a.ncols();
    let fft = Fft1::new(n);
    a.as_slice_mut()
        .expect("standard layout")
        .par_chunks_mut(n)
        .for_each(|lane| apply(&fft, dir, lane));
}

/// Transform every column (`a[[.., j]]`).
pub(crate) fn along_cols(a: &mut Array2<C64>, dir: Direction) {
    let mut t = a.t().as_standard_layout().into_owned();
    along_rows(&mut t, dir);
    a.assign(&t.t());
}
