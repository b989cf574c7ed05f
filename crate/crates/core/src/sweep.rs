//! Coupling sweeps comparing the perturbative periods with the exact one,
//! and the strong-coupling limits `lim √λ·T`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::period::{MethodKind, PeriodSource};
use crate::perturbation::{check_order, period};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub order: usize,
    pub methods: Vec<MethodKind>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            lambda_min: 0.01,
            lambda_max: 100.0,
            points: 100,
            spacing: Spacing::Log,
            order: 3,
            methods: MethodKind::PERIODIC.to_vec(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        if !self.lambda_min.is_finite() || !self.lambda_max.is_finite() {
            return bad("lambda bounds must be finite".into());
        }
        if self.lambda_min <= -1.0 {
            return bad(format!("lambda_min must exceed -1, got {}", self.lambda_min));
        }
        if self.lambda_max < self.lambda_min {
            return bad(format!("lambda_max {} is below lambda_min {}", self.lambda_max, self.lambda_min));
        }
        if self.points < 2 {
            return bad(format!("points must be at least 2, got {}", self.points));
        }
        if self.spacing == Spacing::Log && self.lambda_min <= 0.0 {
            return bad(format!("log spacing needs lambda_min > 0, got {}", self.lambda_min));
        }
        if self.methods.contains(&MethodKind::Naive) {
            return Err(Error::NoPeriod(MethodKind::Naive));
        }
        check_order(self.order, 1)
    }

    /// Grid points in increasing order, endpoints included exactly.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.lambda_min;
                }
                if i == n - 1 {
                    return self.lambda_max;
                }
                let frac = i as f64 / (n - 1) as f64;
                match self.spacing {
                    Spacing::Linear => self.lambda_min + frac * (self.lambda_max - self.lambda_min),
                    Spacing::Log => {
                        let (a, b) = (self.lambda_min.ln(), self.lambda_max.ln());
                        (a + frac * (b - a)).exp()
                    }
                }
            })
            .collect()
    }

    /// Selected methods, deduplicated, in column order (LP, ALP, VLP).
    pub fn columns(&self) -> Vec<MethodKind> {
        let mut m = self.methods.clone();
        m.sort();
        m.dedup();
        m
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub lambda: f64,
    pub exact: Result<f64>,
    /// One entry per table column, in the table's method order.
    pub periods: Vec<Result<f64>>,
}

impl SweepRow {
    /// `|T_exact − T_method|` for column `i`, if both are available.
    pub fn abs_error(&self, i: usize) -> Option<f64> {
        match (&self.exact, &self.periods[i]) {
            (Ok(e), Ok(t)) => Some((e - t).abs()),
            _ => None,
        }
    }

    pub fn has_error(&self) -> bool {
        self.exact.is_err() || self.periods.iter().any(Result::is_err)
    }

    fn error_text(&self, methods: &[MethodKind]) -> String {
        let mut parts = Vec::new();
        if let Err(e) = &self.exact {
            parts.push(format!("exact: {e}"));
        }
        for (m, r) in methods.iter().zip(&self.periods) {
            if let Err(e) = r {
                parts.push(format!("{m}: {e}"));
            }
        }
        parts.join("; ")
    }
}

/// Evaluates one grid point. Engine failures are kept in the row.
pub fn sweep_row(lambda: f64, order: usize, methods: &[MethodKind]) -> SweepRow {
    SweepRow {
        lambda,
        exact: period(PeriodSource::Exact, lambda, order).map(|t| t.value),
        periods: methods
            .iter()
            .map(|m| period(PeriodSource::Method(*m), lambda, order).map(|t| t.value))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub order: usize,
    pub methods: Vec<MethodKind>,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Rows over arbitrary couplings, kept in the given order.
    pub fn from_lambdas(lambdas: &[f64], order: usize, methods: &[MethodKind]) -> Self {
        Self {
            order,
            methods: methods.to_vec(),
            rows: lambdas.iter().map(|&l| sweep_row(l, order, methods)).collect(),
        }
    }

    pub fn all_rows_errored(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(SweepRow::has_error)
    }

    pub fn header(&self) -> String {
        let mut h = String::from("lambda,T_exact");
        for m in &self.methods {
            let _ = write!(h, ",T_{m},err_{m}");
        }
        h.push_str(",error");
        h
    }

    /// CSV with header `lambda,T_exact,T_<m>,err_<m>,...,error`.
    ///
    /// Failed values are written as `NaN`; the trailing `error` column names
    /// the failing engines and is empty for clean rows.
    pub fn to_csv(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{},{}", row.lambda, fmt_value(&row.exact));
            for (i, p) in row.periods.iter().enumerate() {
                let err = row.abs_error(i).unwrap_or(f64::NAN);
                let _ = write!(out, ",{},{}", fmt_value(p), err);
            }
            let _ = writeln!(out, ",{}", csv_field(&row.error_text(&self.methods)));
        }
        out
    }

    /// Log–log chart of the `err_<m>` columns. Self-contained SVG; each
    /// plotted point carries a `<title>` with its CSV λ and error text.
    /// Non-positive and missing errors are not plotted.
    pub fn to_svg(&self) -> String {
        svg::render(self)
    }
}

fn fmt_value(r: &Result<f64>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(_) => f64::NAN.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs the configured sweep.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepTable> {
    cfg.validate()?;
    Ok(SweepTable::from_lambdas(&cfg.grid(), cfg.order, &cfg.columns()))
}

/// Couplings at which `√λ·T` is sampled for the strong-coupling limit.
pub const LIMIT_COUPLINGS: (f64, f64) = (1e6, 1e7);

/// `lim_{λ→∞} √λ·T`, from `√λ·T` at `λ = 10⁶, 10⁷` extrapolated linearly in `1/λ`.
pub fn estimate_limit(source: PeriodSource, order: usize) -> Result<f64> {
    let (l1, l2) = LIMIT_COUPLINGS;
    let f1 = period(source, l1, order)?.scaled();
    let f2 = period(source, l2, order)?.scaled();
    Ok((l2 * f2 - l1 * f1) / (l2 - l1))
}

mod svg {
    use std::fmt::Write;

    use super::SweepTable;

    const WIDTH: f64 = 800.0;
    const HEIGHT: f64 = 500.0;
    const LEFT: f64 = 80.0;
    const RIGHT: f64 = 150.0;
    const TOP: f64 = 30.0;
    const BOTTOM: f64 = 60.0;
    const COLORS: [&str; 4] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd"];

    struct Series {
        column: String,
        points: Vec<(f64, f64)>,
    }

    pub(super) fn render(table: &SweepTable) -> String {
        let series: Vec<Series> = table
            .methods
            .iter()
            .enumerate()
            .map(|(i, m)| Series {
                column: format!("err_{m}"),
                points: table
                    .rows
                    .iter()
                    .filter_map(|r| Some((r.lambda, r.abs_error(i)?)))
                    .filter(|(l, e)| *l > 0.0 && *e > 0.0 && e.is_finite())
                    .collect(),
            })
            .collect();

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(out, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

        let all = || series.iter().flat_map(|s| s.points.iter());
        if all().next().is_none() {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" text-anchor="middle">no positive errors to plot</text>"#,
                WIDTH / 2.0,
                HEIGHT / 2.0
            );
            out.push_str("</svg>\n");
            return out;
        }
        let decades = |vals: &mut dyn Iterator<Item = f64>| {
            let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
            let (lo, hi) = (lo.log10().floor(), hi.log10().ceil());
            if hi > lo {
                (lo, hi)
            } else {
                (lo, lo + 1.0)
            }
        };
        let (x0, x1) = decades(&mut all().map(|p| p.0));
        let (y0, y1) = decades(&mut all().map(|p| p.1));
        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let px = |l: f64| LEFT + (l.log10() - x0) / (x1 - x0) * plot_w;
        let py = |e: f64| TOP + (y1 - e.log10()) / (y1 - y0) * plot_h;

        let _ = writeln!(
            out,
            r##"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#444"/>"##
        );
        for d in x0 as i32..=x1 as i32 {
            let x = LEFT + (d as f64 - x0) / (x1 - x0) * plot_w;
            let _ = writeln!(
                out,
                r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}" stroke="#ddd"/>"##,
                TOP + plot_h
            );
            let _ = writeln!(
                out,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">1e{d}</text>"#,
                TOP + plot_h + 18.0
            );
        }
        for d in y0 as i32..=y1 as i32 {
            let y = TOP + (y1 - d as f64) / (y1 - y0) * plot_h;
            let _ = writeln!(
                out,
                r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#ddd"/>"##,
                LEFT + plot_w
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">1e{d}</text>"#,
                LEFT - 6.0,
                y + 4.0
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">lambda</text>"#,
            LEFT + plot_w / 2.0,
            HEIGHT - 15.0
        );
        let _ = writeln!(
            out,
            r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">|T_exact - T_approx| (order {})</text>"#,
            TOP + plot_h / 2.0,
            TOP + plot_h / 2.0,
            table.order
        );

        for (i, s) in series.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            let pts: Vec<String> =
                s.points.iter().map(|&(l, e)| format!("{:.2},{:.2}", px(l), py(e))).collect();
            let _ = writeln!(out, r#"<g data-column="{}" stroke="{color}" fill="{color}">"#, s.column);
            let _ = writeln!(out, r#"<polyline fill="none" stroke-width="1.5" points="{}"/>"#, pts.join(" "));
            for &(l, e) in &s.points {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="1.5"><title>lambda={l} {}={e}</title></circle>"#,
                    px(l),
                    py(e),
                    s.column
                );
            }
            let _ = writeln!(out, "</g>");
            let ly = TOP + 20.0 + 20.0 * i as f64;
            let lx = LEFT + plot_w + 15.0;
            let _ = writeln!(
                out,
                r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
                lx + 25.0
            );
            let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, lx + 32.0, ly + 4.0, s.column);
        }
        out.push_str("</svg>\n");
        out
    }
}
