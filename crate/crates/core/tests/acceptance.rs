//! Acceptance criteria. Runs as a plain binary and prints one line per criterion.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use duffing_core::nondim::{physical_period, to_dimensionless, PhysicalOscillator};
use duffing_core::oscillator::{exact_period, integrate_trajectory, numeric_period, DuffingParams};
use duffing_core::perturbation::{
    alp_coefficients, alp_frequency, alp_series, closed_form_period, lp_period, lp_series, naive_series,
    pms_root, vlp_gamma_sum, vlp_gammas, vlp_period, vlp_series,
};
use duffing_core::sweep::estimate_limit;
use duffing_core::trig::{ratio, TermKey};
use duffing_core::{MethodKind, PeriodSource};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(lam: f64) -> DuffingParams {
    DuffingParams::new(lam).unwrap()
}

fn exact(lam: f64) -> f64 {
    exact_period(&params(lam)).value
}

fn within_a_second(start: Instant) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || format!("runtime {t:?} exceeds 1 s"))?;
    Ok(t)
}

fn c1_lp_coefficients() -> Outcome {
    let start = Instant::now();
    let s = lp_series(3).map_err(|e| e.to_string())?;
    let t = within_a_second(start)?;
    let expect = vec![ratio(1, 1), ratio(3, 4), ratio(-3, 128), ratio(9, 512)];
    ensure(s.coeffs == expect, || format!("gamma = {:?}", s.coeffs))?;
    Ok(format!("gamma = [1, 3/4, -3/128, 9/512] exactly in {t:?}"))
}

fn c2_alp_coefficients() -> Outcome {
    for omega in [1.0_f64, 2.0] {
        let w = alp_coefficients(3, omega).map_err(|e| e.to_string())?;
        let expect = [0.75, -3.0 / (128.0 * omega * omega), 0.0];
        for (got, want) in w.iter().zip(expect) {
            ensure((got - want).abs() <= 1e-14, || format!("omega {omega}: {w:?}"))?;
        }
    }
    let exact = alp_series(3).map_err(|e| e.to_string())?.coeffs;
    ensure(exact == vec![ratio(3, 4), ratio(-3, 128), ratio(0, 1)], || format!("{exact:?}"))?;
    Ok("w = [3/4, -3/(128 w^2), 0] at omega = 1, 2".into())
}

fn c3_pms_point() -> Outcome {
    let mut worst: f64 = 0.0;
    for lam in [0.5_f64, 1.0, 2.0] {
        let hi = 4.0 * (1.0 + lam).sqrt();
        let a = pms_root(|a| vlp_gamma_sum(3, a, lam), (0.0, hi)).map_err(|e| e.to_string())?;
        let dev = (a - (3.0 * lam).sqrt() / 2.0).abs();
        ensure(dev < 1e-8, || format!("lambda {lam}: alpha {a}, off by {dev:e}"))?;
        worst = worst.max(dev);
    }
    Ok(format!("alpha* = sqrt(3 lambda)/2, max deviation {worst:.1e} (< 1e-8)"))
}

fn c4_closed_forms() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let lam = 100.0 * i as f64 / 49.0;
        for m in MethodKind::PERIODIC {
            let generic = match m {
                MethodKind::Lp => lp_period(lam, 3),
                MethodKind::Alp => alp_frequency(lam, 3),
                _ => vlp_period(lam, 3),
            }
            .map_err(|e| format!("{m} at {lam}: {e}"))?
            .value;
            let closed = closed_form_period(m, lam).map_err(|e| e.to_string())?.value;
            let rel = (generic - closed).abs() / closed;
            ensure(rel < 1e-10, || format!("{m} at lambda {lam}: {generic} vs {closed}"))?;
            worst = worst.max(rel);
        }
    }
    Ok(format!("LP/ALP/VLP vs closed forms on 50 lambda in [0, 100], max rel {worst:.1e}"))
}

fn c5_harmonic_limit() -> Outcome {
    let two_pi = 2.0 * PI;
    let mut checked = 0;
    let mut check = |what: String, v: f64| {
        checked += 1;
        ensure((v - two_pi).abs() < 1e-12, || format!("{what}: {v}"))
    };
    check("exact".into(), exact(0.0))?;
    for n in 1..=8 {
        check(format!("lp N={n}"), lp_period(0.0, n).map_err(|e| e.to_string())?.value)?;
        check(format!("alp N={n}"), alp_frequency(0.0, n).map_err(|e| e.to_string())?.value)?;
        check(format!("vlp N={n}"), vlp_period(0.0, n).map_err(|e| e.to_string())?.value)?;
    }
    for m in MethodKind::PERIODIC {
        check(format!("closed {m}"), closed_form_period(m, 0.0).map_err(|e| e.to_string())?.value)?;
    }
    Ok(format!("T(0) = 2 pi for {checked} method/order combinations"))
}

fn c6_limits() -> Outcome {
    let start = Instant::now();
    let cases = [
        (PeriodSource::Exact, 7.416_298_7),
        (PeriodSource::Method(MethodKind::Vlp), 7.411_241_0),
        (PeriodSource::Method(MethodKind::Alp), 7.418_590_5),
    ];
    let mut report = Vec::new();
    for (src, want) in cases {
        let got = estimate_limit(src, 3).map_err(|e| e.to_string())?;
        ensure((got - want).abs() < 1e-5, || format!("{src}: {got} vs {want}"))?;
        report.push(format!("{src} {got:.7}"));
    }
    let lp = lp_period(1e6, 3).map_err(|e| e.to_string())?.scaled();
    ensure(lp < 0.01, || format!("sqrt(lambda) T_LP = {lp}"))?;
    let t = within_a_second(start)?;
    Ok(format!("{}, lp {lp:.2e} at 1e6, in {t:?}", report.join(", ")))
}

fn c7_error_ordering() -> Outcome {
    for lam in [0.5, 1.0, 2.0, 5.0] {
        let e = exact(lam);
        let err = |t: f64| (t - e).abs();
        let lp = err(lp_period(lam, 3).map_err(|x| x.to_string())?.value);
        let alp = err(alp_frequency(lam, 3).map_err(|x| x.to_string())?.value);
        let vlp = err(vlp_period(lam, 3).map_err(|x| x.to_string())?.value);
        ensure(alp < vlp && vlp < lp, || format!("lambda {lam}: alp {alp:e} vlp {vlp:e} lp {lp:e}"))?;
    }
    // Recomputed at lambda = 1 with 30-digit arithmetic from K(m) and the closed forms.
    let frozen = [
        ("exact", exact(1.0), 4.768_022_029_102_461),
        ("lp", lp_period(1.0, 3).map_err(|e| e.to_string())?.value, 4.757_613_079_043_854),
        ("vlp", vlp_period(1.0, 3).map_err(|e| e.to_string())?.value, 4.767_921_284_615_35),
        ("alp", alp_frequency(1.0, 3).map_err(|e| e.to_string())?.value, 4.768_064_190_609_391),
    ];
    for (name, got, want) in frozen {
        ensure((got - want).abs() < 1e-9, || format!("{name} at lambda 1: {got} vs {want}"))?;
    }
    Ok("|ALP| < |VLP| < |LP| errors at lambda = 0.5, 1, 2, 5; lambda = 1 values match recomputed oracles"
        .into())
}

fn c8_secular_terms() -> Outcome {
    let x1 = &naive_series(1).map_err(|e| e.to_string())?.solutions[1];
    let c = x1.coeff(TermKey::sin(1, 1));
    ensure(c == ratio(-3, 8), || format!("t sin(t) coefficient {c}"))?;
    for n in 1..=5 {
        let lp = lp_series(n).map_err(|e| e.to_string())?;
        let alp = alp_series(n).map_err(|e| e.to_string())?;
        let vlp = vlp_series(n, 0.8, 1.3).map_err(|e| e.to_string())?;
        ensure(lp.is_secular_free() && alp.is_secular_free() && vlp.is_secular_free(), || {
            format!("secular term at order {n}")
        })?;
    }
    Ok("naive x1 has -3/8 t sin(t); LP/ALP/VLP secular-free through N = 5".into())
}

fn c9_oracle_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let lam = 10f64.powf(-2.0 + 4.0 * i as f64 / 19.0);
        let n = numeric_period(&params(lam), 1e-10).map_err(|e| e.to_string())?.value;
        let d = (n - exact(lam)).abs();
        ensure(d < 1e-6, || format!("lambda {lam}: |numeric - exact| = {d:e}"))?;
        worst = worst.max(d);
    }
    let mut drift: f64 = 0.0;
    for lam in [0.5, 1.0, 5.0] {
        let tr = integrate_trajectory(&params(lam), 10.0 * exact(lam), 1e-10).map_err(|e| e.to_string())?;
        let d = tr.max_energy_drift();
        ensure(d < 1e-8, || format!("lambda {lam}: energy drift {d:e}"))?;
        drift = drift.max(d);
    }
    Ok(format!("max |numeric - exact| {worst:.1e}, max energy drift {drift:.1e}"))
}

fn c10_vlp_structure() -> Outcome {
    let lp = lp_series(8).map_err(|e| e.to_string())?.coeffs;
    let vlp = vlp_series(8, 0.0, 1.0).map_err(|e| e.to_string())?.coeffs;
    for (n, poly) in vlp.iter().enumerate() {
        let mut expect = vec![ratio(0, 1); n + 1];
        expect[n] = lp[n].clone();
        ensure(poly.at_q_zero() == expect, || format!("order {n}: {poly}"))?;
    }
    for lam in [0.5_f64, 1.0, 2.0] {
        let g = vlp_gammas(3, (3.0 * lam).sqrt() / 2.0, lam).map_err(|e| e.to_string())?;
        ensure(g[1].abs() < 1e-12 && g[3].abs() < 1e-12, || format!("lambda {lam}: {g:?}"))?;
    }
    Ok("alpha = 0 reproduces LP exactly through N = 8; gamma1 = gamma3 = 0 at the PMS point".into())
}

fn c11_dimensionless() -> Outcome {
    let p = PhysicalOscillator::new(2.0, 8.0, 1.0, 2.0);
    let nd = to_dimensionless(&p).map_err(|e| e.to_string())?;
    ensure(nd.lambda == 0.5 && nd.omega0 == 2.0, || format!("{nd:?}"))?;
    let t = physical_period(&p, PeriodSource::Exact, 3).map_err(|e| e.to_string())?;
    let want = exact(0.5) / 2.0;
    ensure((t - want).abs() < 1e-12, || format!("T' = {t} vs {want}"))?;
    for c in [0.1, 3.0, 1e3] {
        let scaled = PhysicalOscillator::new(c * p.mass, c * p.v2, c * p.v4, p.amplitude);
        let ts = physical_period(&scaled, PeriodSource::Exact, 3).map_err(|e| e.to_string())?;
        ensure((ts - t).abs() < 1e-12, || format!("scale {c}: {ts} vs {t}"))?;
    }
    Ok(format!("lambda = 0.5, omega0 = 2, T' = {t:.12}, invariant under joint scaling"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("1 exact LP coefficients", c1_lp_coefficients),
        ("2 ALP coefficients", c2_alp_coefficients),
        ("3 PMS point", c3_pms_point),
        ("4 closed-form oracle match", c4_closed_forms),
        ("5 lambda = 0 exactness", c5_harmonic_limit),
        ("6 strong-coupling limits", c6_limits),
        ("7 error ordering", c7_error_ordering),
        ("8 secular terms", c8_secular_terms),
        ("9 oracle equivalence", c9_oracle_equivalence),
        ("10 VLP reduction and odd vanishing", c10_vlp_structure),
        ("11 dimensionless reduction", c11_dimensionless),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
