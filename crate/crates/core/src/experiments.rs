//! Named reproduction runs and the diagnostic suite behind the `dps` binary.
//!
//! Each run takes a [`RunConfig`], writes field archives (and optionally CSV)
//! into the output directory, and returns a [`Report`] of named checks. A
//! report passes when every gating check passes.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::archive::{save_field, write_csv, Field};
use crate::dirac::{energy_projector, EnergySign};
use crate::dynamics::{conditional_centroid, free_dirac_propagate, shear_wigner, LandauEvolution, LandauModel};
use crate::error::{Error, Result};
use crate::field::{ScalarField, SpinorField, WignerField};
use crate::grid::{PhaseSpaceGrid, PhysicalConstants, SpatialGrid};
use crate::projection::{build_b, filter_wigner, filter_wigner_block, project_spinor, projection_weights};
use crate::states::{
    double_gaussian, first_landau, general_double, ground_landau, oracle_field, pair_interference, pair_no_interference, Family,
    Scaling,
};
use crate::wigner::{
    cross_wigner, marginal_p, marginal_x, min_over_max, momentum_density, negativity_volume, scalar_wigner, superpose_wigner,
    w0_transform,
};
use crate::C64;

/// Registered experiment names.
pub const EXPERIMENTS: [&str; 6] = ["fig1", "fig2", "fig3", "fig4", "fig5", "diagnostics"];

/// Flat run configuration. Every key defaults to the figure parameters, so an
/// empty file is a valid configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
    pub hbar: f64,
    pub c: f64,
    pub mass: f64,
    pub charge: f64,
    /// Width of the ground Landau spinor.
    pub sigma: f64,
    /// Width parameter of the first excited Landau spinor.
    pub a_excited: f64,
    pub a_double: f64,
    pub b_double: f64,
    pub q_general: f64,
    pub a_general: f64,
    pub b_general: f64,
    pub d_general: f64,
    /// Evolution times for fig1-fig3. The first and last entries are checked.
    pub times: Vec<f64>,
    /// Box widening factor for phase-space filtering runs, at fixed `n`.
    /// Projected states carry exponential tails over the Compton length that
    /// must decay inside the box.
    pub filter_box_scale: f64,
    pub landau_delta_e: f64,
    pub landau_steps: usize,
    pub cat_offset: f64,
    pub shear_times: Vec<f64>,
    pub out_dir: PathBuf,
    pub archive: bool,
    pub csv: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            x_min: -16.0,
            x_max: 16.0,
            n: 1024,
            hbar: 1.0,
            c: 1.0,
            mass: 1.0,
            charge: 1.0,
            sigma: 1.0,
            a_excited: 1.0,
            a_double: SQRT_2,
            b_double: 3.0,
            q_general: 0.1,
            a_general: 5.0,
            b_general: 3.0,
            d_general: 0.1,
            times: vec![0.0, 7.7],
            filter_box_scale: 2.0,
            landau_delta_e: 1.0,
            landau_steps: 64,
            cat_offset: 8.0,
            shear_times: vec![1.0, 5.0, 10.0],
            out_dir: PathBuf::from("out"),
            archive: true,
            csv: false,
        }
    }
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// Checks every precondition a run relies on, reporting the first failure
    /// as [`Error::Config`].
    pub fn validate(&self) -> Result<()> {
        let cfg = |e: Error| Error::Config(e.to_string());
        SpatialGrid::new(self.x_min, self.x_max, self.n).map_err(cfg)?;
        PhysicalConstants::new(self.hbar, self.c, self.mass, self.charge).map_err(cfg)?;
        for (name, v) in [
            ("sigma", self.sigma),
            ("a_excited", self.a_excited),
            ("a_double", self.a_double),
            ("a_general", self.a_general),
            ("landau_delta_e", self.landau_delta_e),
        ] {
            if !v.is_finite() || v == 0.0 {
                return Err(Error::Config(format!("{name} must be finite and non-zero, got {v}")));
            }
        }
        for (name, v) in [
            ("b_double", self.b_double),
            ("q_general", self.q_general),
            ("b_general", self.b_general),
            ("d_general", self.d_general),
            ("cat_offset", self.cat_offset),
        ] {
            if !v.is_finite() {
                return Err(Error::Config(format!("{name} must be finite, got {v}")));
            }
        }
        if self.times.is_empty() || self.times.iter().any(|t| !t.is_finite()) {
            return Err(Error::Config("times must be a non-empty list of finite values".into()));
        }
        if self.shear_times.iter().any(|t| !t.is_finite()) {
            return Err(Error::Config("shear_times must be finite".into()));
        }
        if !(self.filter_box_scale.is_finite() && self.filter_box_scale >= 1.0) {
            return Err(Error::Config(format!("filter_box_scale must be ≥ 1, got {}", self.filter_box_scale)));
        }
        if self.landau_steps == 0 {
            return Err(Error::Config("landau_steps must be positive".into()));
        }
        Ok(())
    }

    pub fn constants(&self) -> PhysicalConstants {
        PhysicalConstants { hbar: self.hbar, c: self.c, mass: self.mass, charge: self.charge }
    }

    pub fn grid(&self) -> Result<PhaseSpaceGrid> {
        Ok(PhaseSpaceGrid::new(SpatialGrid::new(self.x_min, self.x_max, self.n)?, self.hbar))
    }

    /// The main box widened by `filter_box_scale` about its centre.
    pub fn filter_grid(&self) -> Result<PhaseSpaceGrid> {
        let mid = 0.5 * (self.x_min + self.x_max);
        let half = 0.5 * (self.x_max - self.x_min) * self.filter_box_scale;
        Ok(PhaseSpaceGrid::new(SpatialGrid::new(mid - half, mid + half, self.n)?, self.hbar))
    }
}

/// Comparison a check's measured value must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    AtMost(f64),
    AtLeast(f64),
    Above(f64),
    Below(f64),
}

impl Bound {
    pub fn holds(self, v: f64) -> bool {
        match self {
            Bound::AtMost(l) => v <= l,
            Bound::AtLeast(l) => v >= l,
            Bound::Above(l) => v > l,
            Bound::Below(l) => v < l,
        }
    }

    fn describe(self) -> String {
        match self {
            Bound::AtMost(l) => format!("<= {l:e}"),
            Bound::AtLeast(l) => format!(">= {l:e}"),
            Bound::Above(l) => format!("> {l:e}"),
            Bound::Below(l) => format!("< {l:e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// `None` when the measurement itself failed; see `detail`.
    pub value: Option<f64>,
    pub bound: Bound,
    pub passed: bool,
    pub gating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, measured: Result<f64>, bound: Bound) -> Self {
        match measured {
            Ok(v) => Self { name: name.into(), value: Some(v), bound, passed: bound.holds(v), gating: true, detail: None },
            Err(e) => Self { name: name.into(), value: None, bound, passed: false, gating: true, detail: Some(e.to_string()) },
        }
    }

    pub fn advisory(mut self) -> Self {
        self.gating = false;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub experiment: String,
    pub checks: Vec<Check>,
    pub metrics: BTreeMap<String, f64>,
    pub artifacts: Vec<PathBuf>,
}

impl Report {
    fn new(experiment: &str) -> Self {
        Self { experiment: experiment.into(), checks: Vec::new(), metrics: BTreeMap::new(), artifacts: Vec::new() }
    }

    fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    fn metric(&mut self, name: impl Into<String>, v: f64) {
        self.metrics.insert(name.into(), v);
    }

    /// True iff every gating check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.gating)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("experiment {}\n", self.experiment);
        for c in &self.checks {
            let status = match (c.passed, c.gating) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "NOTE",
            };
            let value = c.value.map_or_else(|| "error".to_string(), |v| format!("{v:e}"));
            let _ = write!(s, "{status} {:<40} {value} {}", c.name, c.bound.describe());
            if let Some(d) = &c.detail {
                let _ = write!(s, " ({d})");
            }
            s.push('\n');
        }
        for (k, v) in &self.metrics {
            let _ = writeln!(s, "metric {k} = {v:e}");
        }
        let _ = writeln!(s, "{}", if self.passed() { "result PASS" } else { "result FAIL" });
        s
    }

    /// Writes `<experiment>_report.json` and `<experiment>_report.txt`.
    pub fn write(&mut self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let json = dir.join(format!("{}_report.json", self.experiment));
        let txt = dir.join(format!("{}_report.txt", self.experiment));
        self.artifacts.push(json.clone());
        self.artifacts.push(txt.clone());
        fs::write(&json, serde_json::to_string_pretty(self)?)?;
        fs::write(&txt, self.to_text())?;
        Ok(())
    }
}

/// Runs one registered experiment and writes its report.
pub fn run(name: &str, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.out_dir)?;
    let mut report = match name {
        "fig1" => run_fig1(cfg)?,
        "fig2" => run_fig2(cfg)?,
        "fig3" => run_fig3(cfg)?,
        "fig4" => run_fig4(cfg)?,
        "fig5" => run_fig5(cfg)?,
        "diagnostics" => run_diagnostics(cfg)?,
        other => return Err(Error::Config(format!("unknown experiment {other:?}; expected one of {EXPERIMENTS:?}"))),
    };
    report.write(&cfg.out_dir)?;
    Ok(report)
}

fn emit(cfg: &RunConfig, report: &mut Report, stem: &str, field: Field) -> Result<()> {
    if cfg.archive {
        let path = cfg.out_dir.join(format!("{stem}.dpsf"));
        save_field(&field, &path)?;
        report.artifacts.push(path);
    }
    if cfg.csv {
        let path = cfg.out_dir.join(format!("{stem}.csv"));
        write_csv(&field, &path)?;
        report.artifacts.push(path);
    }
    Ok(())
}

fn time_tag(t: f64) -> String {
    format!("t{t:.3}")
}

struct Evolved {
    t: f64,
    w: WignerField,
}

/// W⁰ of the ground Landau spinor, optionally projected, at each configured
/// time.
fn evolve_ground(cfg: &RunConfig, keep: Option<EnergySign>) -> Result<Vec<Evolved>> {
    let grid = cfg.grid()?;
    let mut psi = ground_landau(&grid, cfg.constants(), cfg.sigma)?;
    if let Some(s) = keep {
        psi = project_spinor(&psi, s);
    }
    cfg.times
        .iter()
        .map(|&t| Ok(Evolved { t, w: w0_transform(&free_dirac_propagate(&psi, t))? }))
        .collect()
}

pub fn run_fig1(cfg: &RunConfig) -> Result<Report> {
    let mut r = Report::new("fig1");
    let runs = evolve_ground(cfg, None)?;
    for e in &runs {
        r.metric(format!("negativity_volume_{}", time_tag(e.t)), negativity_volume(&e.w));
        r.metric(format!("min_over_max_{}", time_tag(e.t)), min_over_max(&e.w));
        emit(cfg, &mut r, &format!("fig1_{}", time_tag(e.t)), e.w.clone().into())?;
    }
    let (first, last) = (&runs[0], &runs[runs.len() - 1]);
    r.check(Check::new("negativity_initial", Ok(negativity_volume(&first.w)), Bound::AtMost(1e-10)));
    if runs.len() > 1 {
        r.check(Check::new("negativity_final", Ok(negativity_volume(&last.w)), Bound::Above(0.01)));
    }
    Ok(r)
}

fn filtered_figure(cfg: &RunConfig, name: &str, keep: EnergySign) -> Result<(Report, Vec<f64>)> {
    let mut r = Report::new(name);
    let runs = evolve_ground(cfg, Some(keep))?;
    r.metric("retained_weight", runs[0].w.integral());
    let mut centroids = Vec::new();
    for e in &runs {
        let c = conditional_centroid(&e.w, EnergySign::Particle)?;
        centroids.push(c);
        r.metric(format!("centroid_p_positive_{}", time_tag(e.t)), c);
        r.metric(format!("negativity_volume_{}", time_tag(e.t)), negativity_volume(&e.w));
        emit(cfg, &mut r, &format!("{name}_{}", time_tag(e.t)), e.w.clone().into())?;
    }
    Ok((r, centroids))
}

/// Signed drift of the `p > 0` centroid between the first and last time.
fn drift(c: &[f64]) -> f64 {
    c[c.len() - 1] - c[0]
}

pub fn run_fig2(cfg: &RunConfig) -> Result<Report> {
    let (mut r, c) = filtered_figure(cfg, "fig2", EnergySign::Particle)?;
    r.check(Check::new("centroid_drift_positive", Ok(drift(&c)), Bound::Above(0.0)));
    Ok(r)
}

pub fn run_fig3(cfg: &RunConfig) -> Result<Report> {
    let (mut r, c) = filtered_figure(cfg, "fig3", EnergySign::Antiparticle)?;
    r.check(Check::new("centroid_drift_negative", Ok(drift(&c)), Bound::Below(0.0)));
    // the particle twin is cheap to recompute and makes the mirror explicit
    let particle = evolve_ground(cfg, Some(EnergySign::Particle))?;
    let last = cfg.times.len() - 1;
    let cp = conditional_centroid(&particle[last].w, EnergySign::Particle)?;
    r.metric("particle_twin_centroid_final", cp);
    r.check(Check::new("mirror_centroid_product", Ok(cp * c[last]), Bound::Below(0.0)));
    Ok(r)
}

pub fn run_fig4(cfg: &RunConfig) -> Result<Report> {
    let mut r = Report::new("fig4");
    let k = cfg.constants();
    let grid = cfg.grid()?;
    let w_a = w0_transform(&double_gaussian(&grid, k, cfg.a_double, cfg.b_double)?)?.normalized()?;
    let oracle = oracle_field(&Family::DoubleGaussian { a: cfg.a_double, b: cfg.b_double }, &grid, k)?;
    r.check(Check::new("panel_a_min_over_max", Ok(min_over_max(&w_a)), Bound::AtLeast(-1e-10)));
    r.check(Check::new("panel_a_oracle_error", Ok(w_a.rel_linf(&oracle)), Bound::AtMost(1e-8)));
    emit(cfg, &mut r, "fig4_panel_a", w_a.into())?;

    let wide = cfg.filter_grid()?;
    let psi = general_double(&wide, k, cfg.q_general, cfg.a_general, cfg.b_general, cfg.d_general)?;
    let w_b = filter_wigner(&build_b(&psi), EnergySign::Particle)?;
    r.metric("panel_b_retained_weight", w_b.integral());
    r.check(Check::new("panel_b_min_over_max", Ok(min_over_max(&w_b)), Bound::AtLeast(-1e-10)));
    emit(cfg, &mut r, "fig4_panel_b", w_b.into())?;
    Ok(r)
}

pub fn run_fig5(cfg: &RunConfig) -> Result<Report> {
    let mut r = Report::new("fig5");
    let k = cfg.constants();
    let grid = cfg.grid()?;
    let w = w0_transform(&first_landau(&grid, k, cfg.a_excited)?)?.normalized()?;
    let oracle = oracle_field(&Family::FirstExcited { a: cfg.a_excited }, &grid, k)?;
    r.check(Check::new("oracle_error", Ok(w.rel_linf(&oracle)), Bound::AtMost(1e-8)));
    r.check(Check::new("min_over_max", Ok(min_over_max(&w)), Bound::AtLeast(-1e-12)));
    let origin = grid.p_zero_index();
    let i0 = (0..grid.n()).min_by(|&a, &b| grid.x(a).abs().total_cmp(&grid.x(b).abs())).unwrap_or(0);
    r.check(Check::new("origin_over_max", Ok(w.data[[i0, origin]].abs() / w.max_value()), Bound::AtMost(1e-10)));
    emit(cfg, &mut r, "fig5", w.into())?;
    Ok(r)
}

/// Fixed parameter draws for the diagnostic oracle checks, spanning
/// `[0.5, 3]` for widths and offsets and `[0, 1]` for the mixing weight.
fn oracle_families(cfg: &RunConfig) -> Vec<Family> {
    vec![
        Family::Ground { sigma: cfg.sigma },
        Family::Ground { sigma: 0.6 },
        Family::Ground { sigma: 2.7 },
        Family::FirstExcited { a: cfg.a_excited },
        Family::FirstExcited { a: 0.55 },
        Family::FirstExcited { a: 2.9 },
        Family::DoubleGaussian { a: cfg.a_double, b: cfg.b_double },
        Family::DoubleGaussian { a: 0.7, b: 2.2 },
        Family::DoubleGaussian { a: 2.4, b: 0.9 },
        Family::GeneralDouble { q: cfg.q_general, a: SQRT_2, b: cfg.b_general, d: cfg.d_general },
        Family::GeneralDouble { q: 0.35, a: 0.8, b: 2.5, d: 1.3 },
        Family::GeneralDouble { q: 0.9, a: 2.1, b: 0.6, d: 2.8 },
    ]
}

fn oracle_error(family: &Family, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<f64> {
    let w = w0_transform(&family.spinor(grid, k)?)?.normalized()?;
    Ok(w.rel_linf(&oracle_field(family, grid, k)?))
}

/// (re, im, width, centre, kick) of one Gaussian component.
type Packet = (f64, f64, f64, f64, f64);

/// Smooth test spinors with distinct widths, centres and momentum kicks per
/// component.
fn probe_spinors(grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<Vec<SpinorField>> {
    let specs: [[Packet; 4]; 2] = [
        [(1.0, 0.2, 1.1, -0.8, 0.4), (0.3, -0.5, 0.7, 1.2, -1.0), (-0.6, 0.1, 1.6, 0.3, 0.0), (0.2, 0.9, 0.9, -1.5, 0.8)],
        [(0.5, 0.0, 2.2, 1.0, -0.3), (0.0, 0.4, 0.6, -0.4, 1.5), (0.8, -0.2, 1.3, 2.0, 0.2), (-0.1, -0.7, 1.9, -2.2, -0.6)],
    ];
    specs
        .iter()
        .map(|spec| {
            SpinorField::from_fn(grid.spatial, k, |x| {
                let mut out = [C64::new(0.0, 0.0); 4];
                for (c, &(re, im, w, x0, p0)) in spec.iter().enumerate() {
                    let env = (-(x - x0).powi(2) / (2.0 * w * w)).exp();
                    out[c] = C64::new(re, im) * env * C64::from_polar(1.0, p0 * x / k.hbar);
                }
                out
            })?
            .normalize()
        })
        .collect()
}

fn rel_linf_vec(a: &[f64], reference: &[f64]) -> f64 {
    let scale = reference.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let diff = a.iter().zip(reference).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    diff / scale
}

fn marginal_errors(psi: &SpinorField) -> Result<(f64, f64)> {
    let w = w0_transform(psi)?;
    let density: Vec<f64> = (0..psi.grid.n).map(|i| psi.at(i).iter().map(|z| z.norm_sqr()).sum()).collect();
    Ok((rel_linf_vec(&marginal_x(&w), &density), rel_linf_vec(&marginal_p(&w), &momentum_density(psi))))
}

fn projector_algebra_error(grid: &PhaseSpaceGrid, k: PhysicalConstants) -> f64 {
    let eye = crate::dirac::Mat4::identity();
    let mut worst = 0.0f64;
    for j in 0..grid.n() {
        for shift in [-0.5, 0.0, 0.5] {
            let p = grid.p(j) + shift * grid.dp();
            let pp = energy_projector(p, EnergySign::Particle, &k);
            let pm = energy_projector(p, EnergySign::Antiparticle, &k);
            for m in [&pp, &pm] {
                worst = worst.max((m - m.adjoint()).camax()).max((m * m - m).camax());
            }
            worst = worst.max((pp + pm - eye).camax());
        }
    }
    worst
}

fn pipeline_error(psi: &SpinorField) -> Result<f64> {
    let b = build_b(psi);
    let mut worst = 0.0f64;
    for s in [EnergySign::Particle, EnergySign::Antiparticle] {
        let direct = w0_transform(&project_spinor(psi, s))?;
        worst = worst.max(filter_wigner(&b, s)?.rel_linf(&direct));
    }
    Ok(worst)
}

fn completeness_error(psi: &SpinorField) -> Result<f64> {
    let b = build_b(psi);
    let full = w0_transform(psi)?;
    let mut sum = ndarray::Array2::<C64>::zeros(full.data.raw_dim());
    for l in [EnergySign::Particle, EnergySign::Antiparticle] {
        for r in [EnergySign::Particle, EnergySign::Antiparticle] {
            sum += &filter_wigner_block(&b, l, r)?.data;
        }
    }
    let diff = sum.iter().zip(full.data.iter()).fold(0.0f64, |m, (z, v)| m.max((z - v).norm()));
    Ok(diff / full.max_abs())
}

fn idempotence_error(psi: &SpinorField) -> Result<f64> {
    let once = project_spinor(psi, EnergySign::Particle);
    let first = filter_wigner(&build_b(psi), EnergySign::Particle)?;
    let second = filter_wigner(&build_b(&once), EnergySign::Particle)?;
    Ok(second.rel_linf(&first))
}

fn cat_wigner(grid: &PhaseSpaceGrid, k: PhysicalConstants, offset: f64) -> Result<WignerField> {
    let phi = ScalarField::from_fn(grid.spatial, k, |x| {
        C64::new((-(x - offset).powi(2) / 2.0).exp() + (-(x + offset).powi(2) / 2.0).exp(), 0.0)
    })?;
    scalar_wigner(&phi)
}

fn shear_error(cfg: &RunConfig, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<f64> {
    let w = cat_wigner(grid, k, cfg.cat_offset)?;
    let v0 = negativity_volume(&w);
    if v0 <= 0.0 {
        return Err(Error::InvalidParameter("cat state has no negativity on this grid".into()));
    }
    Ok(cfg
        .shear_times
        .iter()
        .map(|&t| (negativity_volume(&shear_wigner(&w, t, k.mass)) - v0).abs() / v0)
        .fold(0.0, f64::max))
}

/// Smallest `min W / max W` over `steps` phases of the relative Landau phase.
pub fn landau_sweep_minimum(model: LandauModel, grid: &PhaseSpaceGrid, k: PhysicalConstants, steps: usize) -> Result<f64> {
    let evo = LandauEvolution::new(model, grid, k)?;
    let period = model.period(&k);
    let mut worst = f64::INFINITY;
    for step in 0..steps {
        let w = evo.w0_at(period * step as f64 / steps as f64)?;
        worst = worst.min(min_over_max(&w));
    }
    Ok(worst)
}

/// Equal-weight superposition with a third oscillator-like level
/// `e^{-a²x²}(2ax, 0, 4a²x² - 2, 0)` added, swept over a grid of relative
/// phases. Returns the smallest `min W / max W`.
fn third_level_probe(cfg: &RunConfig, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<f64> {
    let a = cfg.a_excited;
    let psi0 = ground_landau(grid, k, FRAC_1_SQRT_2 / a)?;
    let psi1 = first_landau(grid, k, a)?;
    let psi2 = SpinorField::from_fn(grid.spatial, k, |x| {
        let g = (-a * a * x * x).exp();
        [C64::new(2.0 * a * x * g, 0.0), C64::new(0.0, 0.0), C64::new((4.0 * a * a * x * x - 2.0) * g, 0.0), C64::new(0.0, 0.0)]
    })?
    .normalize()?;
    let steps = 8;
    let mut worst = f64::INFINITY;
    for i in 0..steps {
        for j in 0..steps {
            let phase1 = C64::from_polar(1.0, 2.0 * std::f64::consts::PI * i as f64 / steps as f64);
            let phase2 = C64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / steps as f64);
            let chi = psi0.combine(C64::new(1.0, 0.0), &psi1, phase1)?.combine(C64::new(1.0, 0.0), &psi2, phase2)?;
            worst = worst.min(min_over_max(&w0_transform(&chi)?));
        }
    }
    Ok(worst)
}

fn centroid_product(cfg: &RunConfig, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<f64> {
    let psi = ground_landau(grid, k, cfg.sigma)?;
    let t = cfg.times[cfg.times.len() - 1];
    let mut product = 1.0;
    for s in [EnergySign::Particle, EnergySign::Antiparticle] {
        let w = w0_transform(&free_dirac_propagate(&project_spinor(&psi, s), t))?;
        product *= conditional_centroid(&w, EnergySign::Particle)?;
    }
    Ok(product)
}

fn mirror_error(cfg: &RunConfig, grid: &PhaseSpaceGrid, k: PhysicalConstants) -> Result<f64> {
    let psi = ground_landau(grid, k, cfg.sigma)?;
    let t = cfg.times[cfg.times.len() - 1];
    let anti = w0_transform(&free_dirac_propagate(&project_spinor(&psi, EnergySign::Antiparticle), t))?;
    let twin = w0_transform(&free_dirac_propagate(&project_spinor(&psi.reflect(), EnergySign::Particle), t))?.reflect_x();
    Ok(anti.rel_linf(&twin))
}

fn interference_checks(r: &mut Report, grid: &PhaseSpaceGrid, k: PhysicalConstants, a: f64, b: f64) {
    let one = C64::new(1.0, 0.0);
    let none = (|| -> Result<(f64, f64, f64)> {
        let (p1, p2) = pair_no_interference(grid, k, a, b, Scaling::AsPrinted)?;
        let (w1, w2) = (w0_transform(&p1)?, w0_transform(&p2)?);
        let cross = cross_wigner(&p1, &p2)?;
        let ratio = cross.max_abs() / w1.max_abs().max(w2.max_abs());
        let sum = superpose_wigner(&w1, &w2, &cross, one, one)?;
        let reference = w0_transform(&double_gaussian(grid, k, a, b)?)?.normalized()?;
        Ok((ratio, min_over_max(&sum), sum.rel_linf(&reference)))
    })();
    let (ratio, min, err) = match none {
        Ok((x, y, z)) => (Ok(x), Ok(y), Ok(z)),
        Err(e) => (Err(Error::Config(e.to_string())), Err(Error::Config(e.to_string())), Err(e)),
    };
    r.check(Check::new("interference_none_cross_ratio", ratio, Bound::AtMost(1e-12)));
    r.check(Check::new("interference_none_min_over_max", min, Bound::AtLeast(-1e-10)));
    r.check(Check::new("interference_none_matches_double", err, Bound::AtMost(1e-8)));

    let strong = (|| -> Result<f64> {
        let (p1, p2) = pair_interference(grid, k, Scaling::AsPrinted)?;
        let sum = superpose_wigner(&w0_transform(&p1)?, &w0_transform(&p2)?, &cross_wigner(&p1, &p2)?, one, one)?;
        Ok(min_over_max(&sum))
    })();
    r.check(Check::new("interference_significant_min_over_max", strong, Bound::Below(-0.1)));
}

/// The full invariant suite on the configured grid. Checks that need
/// projected states run on the widened filter box.
pub fn run_diagnostics(cfg: &RunConfig) -> Result<Report> {
    let mut r = Report::new("diagnostics");
    let k = cfg.constants();
    let grid = cfg.grid()?;
    let wide = cfg.filter_grid()?;

    for (i, family) in oracle_families(cfg).iter().enumerate() {
        let name = format!("oracle_{}_{}", family.name(), i % 3);
        r.check(Check::new(&name, oracle_error(family, &grid, k), Bound::AtMost(1e-6)));
    }

    match probe_spinors(&grid, k) {
        Ok(probes) => {
            let errs: Result<Vec<(f64, f64)>> = probes.iter().map(marginal_errors).collect();
            let (ex, ep) = match errs {
                Ok(v) => (
                    Ok(v.iter().map(|e| e.0).fold(0.0, f64::max)),
                    Ok(v.iter().map(|e| e.1).fold(0.0, f64::max)),
                ),
                Err(e) => (Err(Error::Config(e.to_string())), Err(e)),
            };
            r.check(Check::new("marginal_x", ex, Bound::AtMost(1e-6)));
            r.check(Check::new("marginal_p", ep, Bound::AtMost(1e-6)));
        }
        Err(e) => {
            r.check(Check::new("marginal_x", Err(Error::Config(e.to_string())), Bound::AtMost(1e-6)));
            r.check(Check::new("marginal_p", Err(e), Bound::AtMost(1e-6)));
        }
    }

    r.check(Check::new("projector_algebra", Ok(projector_algebra_error(&grid, k)), Bound::AtMost(1e-12)));

    let weights = ground_landau(&grid, k, cfg.sigma).map(|psi| projection_weights(&psi));
    let (wp, wm) = match weights {
        Ok((p, m)) => (Ok(p.min(m)), Ok((p + m - 1.0).abs())),
        Err(e) => (Err(Error::Config(e.to_string())), Err(e)),
    };
    r.check(Check::new("projection_weight_min", wp, Bound::Above(1e-3)));
    r.check(Check::new("projection_weight_sum_error", wm, Bound::AtMost(1e-10)));

    let wide_probes = probe_spinors(&wide, k);
    let pipeline = wide_probes.as_ref().map_err(|e| Error::Config(e.to_string())).and_then(|ps| {
        ps.iter().map(pipeline_error).try_fold(0.0f64, |m, e| e.map(|e| m.max(e)))
    });
    r.check(Check::new("pipeline_equivalence", pipeline, Bound::AtMost(1e-8)));
    let first = wide_probes.as_ref().map_err(|e| Error::Config(e.to_string())).map(|ps| ps[0].clone());
    r.check(Check::new("filter_completeness", first.as_ref().map_err(|e| Error::Config(e.to_string())).and_then(completeness_error), Bound::AtMost(1e-10)));
    r.check(Check::new("filter_idempotence", first.and_then(|p| idempotence_error(&p)), Bound::AtMost(1e-10)));

    let fig4b = general_double(&wide, k, cfg.q_general, cfg.a_general, cfg.b_general, cfg.d_general)
        .and_then(|psi| filter_wigner(&build_b(&psi), EnergySign::Particle))
        .map(|w| min_over_max(&w));
    r.check(Check::new("fig4b_min_over_max", fig4b, Bound::AtLeast(-1e-10)));

    let t = cfg.times[cfg.times.len() - 1];
    let evolved = ground_landau(&grid, k, cfg.sigma).and_then(|psi| {
        Ok((negativity_volume(&w0_transform(&psi)?), negativity_volume(&w0_transform(&free_dirac_propagate(&psi, t))?)))
    });
    let (n0, nt) = match evolved {
        Ok((a, b)) => (Ok(a), Ok(b)),
        Err(e) => (Err(Error::Config(e.to_string())), Err(e)),
    };
    r.check(Check::new("negativity_initial", n0, Bound::AtMost(1e-10)));
    r.check(Check::new("negativity_evolved", nt, Bound::Above(0.01)));
    r.check(Check::new("mirror_centroid_product", centroid_product(cfg, &grid, k), Bound::Below(0.0)));
    r.check(Check::new("cpt_mirror", mirror_error(cfg, &grid, k), Bound::AtMost(1e-6)));
    r.check(Check::new("shear_negativity_conservation", shear_error(cfg, &grid, k), Bound::AtMost(1e-8)));

    let model = LandauModel::new(C64::new(FRAC_1_SQRT_2, 0.0), C64::new(FRAC_1_SQRT_2, 0.0), cfg.landau_delta_e, cfg.a_excited);
    let sweep = model.and_then(|m| landau_sweep_minimum(m, &grid, k, cfg.landau_steps));
    r.check(Check::new("landau_phase_sweep", sweep, Bound::AtLeast(-1e-9)));
    r.check(Check::new("landau_third_level_probe", third_level_probe(cfg, &grid, k), Bound::Below(0.0)).advisory());

    interference_checks(&mut r, &grid, k, cfg.a_double, cfg.b_double);

    let hudson = |f: &dyn Fn(f64) -> f64| -> Result<f64> {
        let phi = ScalarField::from_fn(grid.spatial, k, |x| C64::new(f(x), 0.0))?;
        Ok(negativity_volume(&scalar_wigner(&phi)?))
    };
    r.check(Check::new("hudson_gaussian_negativity", hudson(&|x| (-x * x / 2.0).exp()), Bound::AtMost(1e-10)));
    r.check(Check::new("hudson_non_gaussian_negativity", hudson(&|x| (1.0 + x) * (-x * x / 2.0).exp()), Bound::Above(1e-3)));
    r.check(Check::new("scalar_cat_negativity", cat_wigner(&grid, k, 6.0).map(|w| negativity_volume(&w)), Bound::Above(0.1)));

    Ok(r)
}
