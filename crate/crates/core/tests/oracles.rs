//! Cross-checks against routes that share no code with the engines under test.

use std::f64::consts::PI;

use duffing_core::oscillator::{exact_period, integrate_trajectory, numeric_period, DuffingParams};
use duffing_core::perturbation::{lp_period, lp_series, vlp_series};
use duffing_core::trig::{integer, BiPoly, Rational};
use num_traits::{One, Zero};

fn params(lam: f64) -> DuffingParams {
    DuffingParams::new(lam).unwrap()
}

/// Adaptive Simpson quadrature.
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn step(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `T = 2/√(1+λ) ∫₀^π dθ / √(1 − λ sin²θ / (2(1+λ)))` by direct quadrature.
fn quadrature_period(lam: f64) -> f64 {
    let m = lam / (2.0 * (1.0 + lam));
    let integrand = move |th: f64| 1.0 / (1.0 - m * th.sin().powi(2)).sqrt();
    2.0 / (1.0 + lam).sqrt() * simpson(&integrand, 0.0, PI, 1e-14)
}

#[test]
fn agm_period_matches_direct_quadrature() {
    for lam in [-0.9, -0.5, 0.0, 0.3, 1.0, 7.0, 100.0, 1e4] {
        let q = quadrature_period(lam);
        let e = exact_period(&params(lam)).value;
        assert!((q - e).abs() < 1e-12 * e.max(1.0), "lambda {lam}: {q} vs {e}");
    }
    // Frozen from the quadrature route (agrees with a 30-digit evaluation).
    assert!((quadrature_period(1.0) - 4.768_022_029_102_461).abs() < 1e-12);
}

#[test]
fn strong_coupling_integral() {
    // 2√2 ∫₀^π dθ / √(1 + cos²θ)
    let val = 2.0 * 2f64.sqrt() * simpson(&|th: f64| 1.0 / (1.0 + th.cos().powi(2)).sqrt(), 0.0, PI, 1e-14);
    assert!((val - 7.416_298_7).abs() < 5e-8, "{val}");
    let t = exact_period(&params(1e8));
    assert!((t.scaled() - val).abs() < 1e-6);
}

#[test]
fn exact_period_decreases_with_coupling() {
    let mut prev = f64::INFINITY;
    for i in 0..400 {
        let lam = if i == 0 { 0.0 } else { 10f64.powf(-3.0 + 8.0 * i as f64 / 399.0) };
        let t = exact_period(&params(lam)).value;
        assert!(t < prev, "not decreasing at lambda {lam}");
        prev = t;
    }
}

#[test]
fn numeric_and_exact_periods_agree() {
    for i in 0..20 {
        let lam = 10f64.powf(-2.0 + 4.0 * i as f64 / 19.0);
        let n = numeric_period(&params(lam), 1e-10).unwrap().value;
        let e = exact_period(&params(lam)).value;
        assert!((n - e).abs() < 1e-6, "lambda {lam}: {n} vs {e}");
    }
}

#[test]
fn energy_is_conserved_over_ten_periods() {
    for lam in [0.5, 1.0, 5.0] {
        let p = params(lam);
        let tr = integrate_trajectory(&p, 10.0 * exact_period(&p).value, 1e-10).unwrap();
        assert!(tr.max_energy_drift() < 1e-8, "lambda {lam}: {}", tr.max_energy_drift());
    }
}

fn binomial(m: i64, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * integer(m - i as i64) / integer(i as i64 + 1))
}

/// `γ(δ) = c · Γ_LP(δλ / c)` with `c = 1 + α² − δα²`, since dividing the
/// variational equation by `c` gives the plain model at coupling `δλ/c`.
/// Expanding in δ: `P_n(p, q) = Σ_{j+k=n} g_j C(1−j, k) (−1)^k p^j q^k`.
#[test]
fn variational_coefficients_follow_from_rescaled_lp_series() {
    let g = lp_series(8).unwrap().coeffs;
    let vlp = vlp_series(8, 0.0, 0.0).unwrap().coeffs;
    for (n, poly) in vlp.iter().enumerate() {
        let mut expect = BiPoly::zero();
        for (j, gj) in g.iter().enumerate().take(n + 1) {
            let k = (n - j) as u32;
            let sign = if k.is_multiple_of(2) { integer(1) } else { integer(-1) };
            let c = gj.clone() * binomial(1 - j as i64, k) * sign;
            expect = expect + BiPoly::monomial(j as u32, k, c);
        }
        assert_eq!(*poly, expect, "order {n}");
    }
}

/// Reconstructs `x(t) ≈ Σ λ^n x_n(√γ t)` and compares with the integrator.
#[test]
fn lp_solution_tracks_reference_trajectory() {
    let lam = 0.05;
    let order = 4;
    let series = lp_series(order).unwrap();
    let omega = (2.0 * PI) / lp_period(lam, order).unwrap().value;
    let tr = integrate_trajectory(&params(lam), 20.0, 1e-12).unwrap();
    for s in tr.samples.iter().step_by(7) {
        let approx: f64 =
            series.solutions.iter().enumerate().map(|(n, x)| lam.powi(n as i32) * x.eval(omega * s.t)).sum();
        assert!((approx - s.x).abs() < 1e-6, "t = {}: {approx} vs {}", s.t, s.x);
    }
}
