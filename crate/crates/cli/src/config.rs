//! `key = value` sweep configuration files and their merge with command-line flags.

use std::path::{Path, PathBuf};

use duffing_core::sweep::{Spacing, SweepConfig};
use duffing_core::MethodKind;

/// Sweep settings as read from a file or the command line; unset fields fall through.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepSettings {
    pub lambda_min: Option<f64>,
    pub lambda_max: Option<f64>,
    pub points: Option<usize>,
    pub spacing: Option<Spacing>,
    pub order: Option<usize>,
    pub methods: Option<Vec<MethodKind>>,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl SweepSettings {
    /// Fields set in `over` win.
    pub fn overlay(self, over: SweepSettings) -> SweepSettings {
        SweepSettings {
            lambda_min: over.lambda_min.or(self.lambda_min),
            lambda_max: over.lambda_max.or(self.lambda_max),
            points: over.points.or(self.points),
            spacing: over.spacing.or(self.spacing),
            order: over.order.or(self.order),
            methods: over.methods.or(self.methods),
            out: over.out.or(self.out),
            svg: over.svg.or(self.svg),
        }
    }

    pub fn to_config(&self) -> SweepConfig {
        let d = SweepConfig::default();
        SweepConfig {
            lambda_min: self.lambda_min.unwrap_or(d.lambda_min),
            lambda_max: self.lambda_max.unwrap_or(d.lambda_max),
            points: self.points.unwrap_or(d.points),
            spacing: self.spacing.unwrap_or(d.spacing),
            order: self.order.unwrap_or(d.order),
            methods: self.methods.clone().unwrap_or(d.methods),
        }
    }
}

/// Parses `lp,alp,vlp,exact`. `exact` is always emitted, so it is accepted and dropped.
pub fn parse_methods(s: &str) -> Result<Vec<MethodKind>, String> {
    let mut out = Vec::new();
    for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        if name.eq_ignore_ascii_case("exact") {
            continue;
        }
        let m: MethodKind = name.parse().map_err(|e| format!("{e}"))?;
        if m == MethodKind::Naive {
            return Err("naive has no period; choose from lp, alp, vlp, exact".into());
        }
        out.push(m);
    }
    Ok(out)
}

fn parse_spacing(s: &str) -> Result<Spacing, String> {
    match s.to_ascii_lowercase().as_str() {
        "log" => Ok(Spacing::Log),
        "linear" | "lin" => Ok(Spacing::Linear),
        other => Err(format!("unknown spacing {other:?} (expected log or linear)")),
    }
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(format!("expected a boolean, got {other:?}")),
    }
}

/// Parses a config file body. Blank lines and `#` comments are ignored;
/// keys may use `-` or `_` (`lambda-min` and `lambda_min` are the same key).
pub fn parse(text: &str) -> Result<SweepSettings, String> {
    let mut s = SweepSettings::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| format!("line {}: {msg}", lineno + 1);
        let (key, value) =
            line.split_once('=').ok_or_else(|| at(format!("expected key = value, got {line:?}")))?;
        let key = key.trim().replace('-', "_").to_ascii_lowercase();
        let value = value.trim();
        let num = |v: &str| v.parse::<f64>().map_err(|e| at(format!("{key}: {e}")));
        let int = |v: &str| v.parse::<usize>().map_err(|e| at(format!("{key}: {e}")));
        match key.as_str() {
            "lambda_min" => s.lambda_min = Some(num(value)?),
            "lambda_max" => s.lambda_max = Some(num(value)?),
            "points" => s.points = Some(int(value)?),
            "order" | "n" => s.order = Some(int(value)?),
            "spacing" => s.spacing = Some(parse_spacing(value).map_err(at)?),
            "log" => {
                let log = parse_bool(value).map_err(at)?;
                s.spacing = Some(if log { Spacing::Log } else { Spacing::Linear });
            }
            "methods" => s.methods = Some(parse_methods(value).map_err(at)?),
            "out" => s.out = Some(PathBuf::from(value)),
            "svg" => s.svg = Some(PathBuf::from(value)),
            other => return Err(at(format!("unknown key {other:?}"))),
        }
    }
    Ok(s)
}

pub fn load(path: &Path) -> Result<SweepSettings, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}
