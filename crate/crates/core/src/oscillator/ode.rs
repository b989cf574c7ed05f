//! Dormand–Prince 5(4) integrator with fourth-order continuous extension.

use std::ops::ControlFlow;

use crate::error::{Error, Result};

pub(crate) type State = [f64; 2];

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// Fifth-order weights minus embedded fourth-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

// Dense output weights.
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

/// One accepted step together with its interpolant.
#[derive(Clone, Debug)]
pub(crate) struct Step {
    pub t0: f64,
    pub t1: f64,
    pub h: f64,
    pub y0: State,
    pub y1: State,
    cont: [State; 4],
}

impl Step {
    /// State at `t0 + θ·h`, `θ ∈ [0, 1]`.
    pub fn interpolate(&self, theta: f64) -> State {
        let theta1 = 1.0 - theta;
        let [r2, r3, r4, r5] = &self.cont;
        std::array::from_fn(|i| {
            self.y0[i] + theta * (r2[i] + theta1 * (r3[i] + theta * (r4[i] + theta1 * r5[i])))
        })
    }
}

fn axpy(y: &State, terms: &[(f64, &State)], h: f64) -> State {
    std::array::from_fn(|i| y[i] + h * terms.iter().map(|(a, k)| a * k[i]).sum::<f64>())
}

/// Integrates `y′ = rhs(y)` from `t = 0` up to `t_end`, handing every
/// accepted step to `on_step`, which may stop the integration early.
///
/// Error control is mixed absolute/relative with both tolerances equal to `tol`.
pub(crate) fn integrate<F, G>(rhs: F, y_init: State, t_end: f64, tol: f64, mut on_step: G) -> Result<()>
where
    F: Fn(&State) -> State,
    G: FnMut(&Step) -> ControlFlow<()>,
{
    let mut t = 0.0;
    let mut y = y_init;
    let mut k1 = rhs(&y);
    let mut h = (0.1 * tol.powf(0.2)).min(t_end);

    while t < t_end {
        let last = t + h >= t_end;
        if last {
            h = t_end - t;
        }
        let k2 = rhs(&axpy(&y, &[(A21, &k1)], h));
        let k3 = rhs(&axpy(&y, &[(A31, &k1), (A32, &k2)], h));
        let k4 = rhs(&axpy(&y, &[(A41, &k1), (A42, &k2), (A43, &k3)], h));
        let k5 = rhs(&axpy(&y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], h));
        let k6 = rhs(&axpy(&y, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)], h));
        let y_new = axpy(&y, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)], h);
        let k7 = rhs(&y_new);

        let mut err_sq = 0.0;
        for i in 0..2 {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let scale = tol + tol * y[i].abs().max(y_new[i].abs());
            err_sq += (e / scale).powi(2);
        }
        let err = (err_sq / 2.0).sqrt();

        if err <= 1.0 {
            let ydiff: State = std::array::from_fn(|i| y_new[i] - y[i]);
            let bspl: State = std::array::from_fn(|i| h * k1[i] - ydiff[i]);
            let t_next = if last { t_end } else { t + h };
            let step = Step {
                t0: t,
                t1: t_next,
                h,
                y0: y,
                y1: y_new,
                cont: [
                    ydiff,
                    bspl,
                    std::array::from_fn(|i| ydiff[i] - h * k7[i] - bspl[i]),
                    std::array::from_fn(|i| {
                        h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i])
                    }),
                ],
            };
            t = t_next;
            y = y_new;
            k1 = k7;
            if on_step(&step).is_break() {
                return Ok(());
            }
            let factor = if err == 0.0 { MAX_FACTOR } else { SAFETY * err.powf(-0.2) };
            h *= factor.clamp(MIN_FACTOR, MAX_FACTOR);
        } else {
            h *= (SAFETY * err.powf(-0.2)).max(MIN_FACTOR);
        }

        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::ToleranceNotMet { t, h });
        }
    }
    Ok(())
}
