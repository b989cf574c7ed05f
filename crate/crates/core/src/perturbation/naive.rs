use super::{check_order, CubicConvolution, SeriesSolution};
use crate::error::Result;
use crate::period::MethodKind;
use crate::trig::{solve_driven, Resonance, TrigSeries};

/// Straight expansion `x = Σ x_n λ^n` with `x_n″ + x_n = −[x³]_{n−1}`.
///
/// Resonant forcing is integrated as is, so `x_n` carries powers of `t` up to `t^n`.
pub fn naive_series(order: usize) -> Result<SeriesSolution> {
    check_order(order, 0)?;
    let mut xs = vec![TrigSeries::cos(1)];
    let mut conv = CubicConvolution::new();
    conv.extend(&xs);
    for n in 1..=order {
        let forcing = -conv.cubic(&xs, n);
        xs.push(solve_driven(&forcing, Resonance::Allow)?);
        conv.extend(&xs);
    }
    Ok(SeriesSolution {
        method: MethodKind::Naive,
        order,
        solutions: xs,
        coeffs: Vec::new(),
        values: Vec::new(),
        alpha: None,
        omega: None,
    })
}
