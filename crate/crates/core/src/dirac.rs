//! Dirac matrices in the Dirac representation and the free one-dimensional
//! Hamiltonian `H(p) = c·p·α¹ + β·mc²` of a single momentum mode.

use nalgebra::Matrix4;

use crate::grid::PhysicalConstants;
use crate::C64;

pub type Mat4 = Matrix4<C64>;

fn real(entries: [[f64; 4]; 4]) -> Mat4 {
    Mat4::from_fn(|a, b| C64::new(entries[a][b], 0.0))
}

/// `β = γ⁰ = diag(1, 1, -1, -1)`
pub fn beta() -> Mat4 {
    real([[1., 0., 0., 0.], [0., 1., 0., 0.], [0., 0., -1., 0.], [0., 0., 0., -1.]])
}

/// `α¹`, off-diagonal blocks σ_x.
pub fn alpha1() -> Mat4 {
    real([[0., 0., 0., 1.], [0., 0., 1., 0.], [0., 1., 0., 0.], [1., 0., 0., 0.]])
}

/// `γ⁵`, off-diagonal identity blocks. Anticommutes with β, commutes with α¹.
pub fn gamma5() -> Mat4 {
    real([[0., 0., 1., 0.], [0., 0., 0., 1.], [1., 0., 0., 0.], [0., 1., 0., 0.]])
}

/// Which energy sign a projector keeps.
///
/// `Particle` is the `s = +1` projector (antiparticles filtered out),
/// `Antiparticle` is `s = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum EnergySign {
    Particle,
    Antiparticle,
}

impl EnergySign {
    pub fn value(self) -> f64 {
        match self {
            EnergySign::Particle => 1.0,
            EnergySign::Antiparticle => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            EnergySign::Particle => EnergySign::Antiparticle,
            EnergySign::Antiparticle => EnergySign::Particle,
        }
    }

    pub fn from_value(s: i32) -> Option<Self> {
        match s {
            1 => Some(EnergySign::Particle),
            -1 => Some(EnergySign::Antiparticle),
            _ => None,
        }
    }
}

/// `E(p) = √(p²c² + m²c⁴)`
pub fn energy(p: f64, k: &PhysicalConstants) -> f64 {
    (p * p * k.c * k.c + k.rest_energy() * k.rest_energy()).sqrt()
}

/// `H(p) = c·p·α¹ + β·mc²`. Real symmetric, block diagonal in the component
/// pairs (1,4) and (2,3).
pub fn hamiltonian(p: f64, k: &PhysicalConstants) -> Mat4 {
    let cp = k.c * p;
    let mc2 = k.rest_energy();
    real([[mc2, 0., 0., cp], [0., mc2, cp, 0.], [0., cp, -mc2, 0.], [cp, 0., 0., -mc2]])
}

/// Spectral projector `½(1 + s·H(p)/E(p))` onto the energy sign `s`.
pub fn energy_projector(p: f64, s: EnergySign, k: &PhysicalConstants) -> Mat4 {
    let scale = 0.5 * s.value() / energy(p, k);
    Mat4::identity().scale(0.5) + hamiltonian(p, k).map(|z| z * scale)
}

/// Exact mode propagator `exp(-iH(p)t/ħ) = cos(Et/ħ)·1 - i·sin(Et/ħ)·H/E`,
/// valid because `H(p)² = E(p)²·1`.
pub fn mode_propagator(p: f64, t: f64, k: &PhysicalConstants) -> Mat4 {
    let e = energy(p, k);
    let phase = e * t / k.hbar;
    let (s, c) = phase.sin_cos();
    Mat4::identity().scale(c) + hamiltonian(p, k).map(|z| z * C64::new(0.0, -s / e))
}
