mod common;

use std::f64::consts::PI;

use common::*;
use dirac_wigner::states::ground_landau;
use dirac_wigner::wigner::{expectation, marginal_p, marginal_x, momentum_density, w0_transform, ObservableSymbol};

#[test]
fn marginals_of_random_spinors() {
    let g = default_grid();
    let mut r = rng(21);
    for _ in 0..20 {
        let mut s = AnalyticSpinor::random(&mut r);
        let psi = s.sample_normalized(&g);
        let w = w0_transform(&psi).unwrap();
        assert!((w.integral() - 1.0).abs() < 1e-10);

        let density: Vec<f64> = (0..g.n()).map(|i| psi.at(i).iter().map(|z| z.norm_sqr()).sum()).collect();
        let ex = rel_linf(&marginal_x(&w), &density);
        assert!(ex <= 1e-6, "x marginal {ex:e}");

        let momentum: Vec<f64> = g.ps().iter().map(|&p| s.momentum_density(p, 1.0)).collect();
        let ep = rel_linf(&marginal_p(&w), &momentum);
        assert!(ep <= 1e-6, "p marginal {ep:e}");
        assert!(rel_linf(&momentum_density(&psi), &momentum) <= 1e-6);
    }
}

#[test]
fn ground_momentum_marginal_is_gaussian_of_inverse_width() {
    let g = default_grid();
    let sigma = 1.7;
    let w = w0_transform(&ground_landau(&g, K, sigma).unwrap()).unwrap();
    let expected: Vec<f64> = g.ps().iter().map(|&p| sigma / PI.sqrt() * (-sigma * sigma * p * p).exp()).collect();
    assert!(rel_linf(&marginal_p(&w), &expected) <= 1e-10);
}

#[test]
fn ground_state_moments() {
    let g = default_grid();
    let w = w0_transform(&ground_landau(&g, K, 1.0).unwrap()).unwrap();
    assert!((expectation(&w, &ObservableSymbol::one()) - 1.0).abs() <= 1e-10);
    assert!(expectation(&w, &ObservableSymbol::monomial(1, 0)).abs() <= 1e-10);
    assert!((expectation(&w, &ObservableSymbol::monomial(2, 0)) - 0.5).abs() <= 1e-6);
    assert!((expectation(&w, &ObservableSymbol::monomial(0, 2)) - 0.5).abs() <= 1e-6);
    // ⟨x⁴⟩ of e^{-x²}/√π is 3/4
    assert!((expectation(&w, &ObservableSymbol::monomial(4, 0)) - 0.75).abs() <= 1e-6);
}

#[test]
fn position_moments_agree_with_density() {
    let g = default_grid();
    let mut r = rng(22);
    let psi = random_spinor(&g, &mut r);
    let w = w0_transform(&psi).unwrap();
    let xs = g.spatial.xs();
    for k in 1..=4u32 {
        let direct: f64 = (0..g.n()).map(|i| xs[i].powi(k as i32) * psi.at(i).iter().map(|z| z.norm_sqr()).sum::<f64>()).sum::<f64>() * g.dx();
        let from_w = expectation(&w, &ObservableSymbol::monomial(k, 0));
        assert!((direct - from_w).abs() <= 1e-10 * direct.abs().max(1.0));
    }
}
