mod common;

use common::*;
use dirac_wigner::archive::{decode, encode, Field};
use dirac_wigner::dirac::{energy, energy_projector, hamiltonian, EnergySign, Mat4};
use dirac_wigner::dynamics::{free_dirac_propagate, shear_wigner};
use dirac_wigner::projection::{build_b, to_lambda_momentum, to_position_theta};
use dirac_wigner::wigner::{cross_wigner, marginal_p, mixture_wigner, superpose_wigner, w0_transform};
use dirac_wigner::{build_grid, PhaseSpaceGrid, PhysicalConstants, SpinorField, WignerField, C64};
use proptest::prelude::*;
use std::path::Path;

fn small_grid() -> PhaseSpaceGrid {
    build_grid(-12.0, 12.0, 128).unwrap()
}

fn spinor(seed: u64) -> SpinorField {
    random_spinor(&small_grid(), &mut rng(seed))
}

/// A raw field with arbitrary magnitudes, not normalized.
fn raw_spinor(seed: u64, scale: f64) -> SpinorField {
    let mut s = AnalyticSpinor::random(&mut rng(seed));
    s.scale = scale;
    SpinorField::from_fn(small_grid().spatial, K, |x| s.at(x, 1.0)).unwrap()
}

fn complex() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| C64::new(re, im))
}

fn max_diff(a: &WignerField, b: &WignerField) -> f64 {
    a.data.iter().zip(b.data.iter()).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

fn mat_err(m: &Mat4) -> f64 {
    m.iter().fold(0.0f64, |a, z| a.max(z.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalize_gives_unit_norm(seed in any::<u64>(), scale in 1e-3..1e3f64) {
        let psi = raw_spinor(seed, scale);
        prop_assert!((psi.normalize().unwrap().norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn archive_round_trip_is_bit_exact(seed in any::<u64>()) {
        let psi = spinor(seed);
        let w = w0_transform(&psi).unwrap();
        let c = cross_wigner(&psi, &spinor(seed ^ 1)).unwrap();
        for f in [Field::from(psi), Field::from(w), Field::from(c)] {
            let bytes = encode(&f);
            let back = decode(&bytes, Path::new("mem")).unwrap();
            prop_assert_eq!(encode(&back), bytes);
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn w0_is_invariant_under_scaling(seed in any::<u64>(), c in complex()) {
        prop_assume!(c.norm() > 1e-3);
        let psi = spinor(seed);
        let a = w0_transform(&psi).unwrap().normalized().unwrap();
        let b = w0_transform(&psi.scale(c)).unwrap().normalized().unwrap();
        prop_assert!(max_diff(&a, &b) <= 1e-12 * a.max_abs());
    }

    #[test]
    fn superposition_is_bilinear(s1 in any::<u64>(), s2 in any::<u64>(), a in complex(), b in complex()) {
        let (p1, p2) = (spinor(s1), spinor(s2));
        let chi = p1.combine(a, &p2, b).unwrap();
        prop_assume!(chi.norm() > 1e-6);
        let direct = w0_transform(&chi).unwrap().normalized().unwrap();
        let parts = superpose_wigner(
            &w0_transform(&p1).unwrap(),
            &w0_transform(&p2).unwrap(),
            &cross_wigner(&p1, &p2).unwrap(),
            a,
            b,
        ).unwrap();
        prop_assert!(max_diff(&direct, &parts) <= 1e-10 * direct.max_abs());
    }

    #[test]
    fn w0_is_the_component_mixture(seed in any::<u64>()) {
        let psi = spinor(seed);
        let terms: Vec<(f64, _)> = (0..4).map(|c| (1.0, psi.component(c))).collect();
        let w = w0_transform(&psi).unwrap();
        prop_assert!(max_diff(&w, &mixture_wigner(&terms).unwrap()) <= 1e-12 * w.max_abs());
    }

    #[test]
    fn cross_term_conjugates_under_swap(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (p1, p2) = (spinor(s1), spinor(s2));
        let ab = cross_wigner(&p1, &p2).unwrap();
        let ba = cross_wigner(&p2, &p1).unwrap().conj();
        let d = ab.data.iter().zip(ba.data.iter()).fold(0.0f64, |m, (x, y)| m.max((x - y).norm()));
        prop_assert!(d <= 1e-12 * ab.max_abs());
    }

    #[test]
    fn projector_algebra(p in -50.0..50.0f64, hbar in 0.5..2.0f64, c in 0.5..2.0f64, m in 0.5..2.0f64) {
        let k = PhysicalConstants::new(hbar, c, m, 1.0).unwrap();
        let pp = energy_projector(p, EnergySign::Particle, &k);
        let pm = energy_projector(p, EnergySign::Antiparticle, &k);
        for q in [&pp, &pm] {
            prop_assert!(mat_err(&(q - q.adjoint())) <= 1e-12);
            prop_assert!(mat_err(&(q * q - q)) <= 1e-12);
        }
        prop_assert!(mat_err(&(pp + pm - Mat4::identity())) <= 1e-12);
        prop_assert!(mat_err(&(pp * pm)) <= 1e-12);
        let h = hamiltonian(p, &k);
        let e = energy(p, &k);
        prop_assert!(mat_err(&(h * h - Mat4::identity() * C64::new(e * e, 0.0))) <= 1e-12 * e * e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn propagation_is_unitary(seed in any::<u64>(), t in -20.0..20.0f64) {
        let psi = spinor(seed);
        prop_assert!((free_dirac_propagate(&psi, t).norm() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn propagation_composes(seed in any::<u64>(), t1 in -5.0..5.0f64, t2 in -5.0..5.0f64) {
        let psi = spinor(seed);
        let two = free_dirac_propagate(&free_dirac_propagate(&psi, t1), t2);
        let one = free_dirac_propagate(&psi, t1 + t2);
        prop_assert!(two.max_abs_diff(&one) <= 1e-10);
    }

    #[test]
    fn theta_and_x_transforms_invert(seed in any::<u64>()) {
        let b = build_b(&spinor(seed));
        let back = to_position_theta(to_lambda_momentum(b.clone()).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(&b) <= 1e-12 * b.max_abs());
    }

    #[test]
    fn shear_leaves_momentum_marginal(seed in any::<u64>(), t in -10.0..10.0f64) {
        let w = w0_transform(&spinor(seed)).unwrap();
        let s = shear_wigner(&w, t, 1.0);
        let (a, b) = (marginal_p(&w), marginal_p(&s));
        prop_assert!(rel_linf(&b, &a) <= 1e-10);
    }
}
