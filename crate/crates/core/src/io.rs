//! Run configuration, number formatting and file exports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arc::{TraceOpts, WaveArc};
use crate::error::{Error, Result};
use crate::flux::{coincidence_ellipse, ModelParams, StatePoint};
use crate::hugoniot::hugoniot_point;
use crate::manifold::{double_sonic, hysteresis_point, inflection_t, son_coeffs, state_w, state_wp, ManifoldPoint};
use crate::riemann::lift_state;
use crate::waves::{backward_wave_sequence, forward_wave_curve, saturate, Separatrices, WaveCurve, FIBER_SAMPLES};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub params: ModelParams,
    pub z_max: f64,
    pub ode_step: f64,
    pub tolerances: BTreeMap<String, f64>,
    pub seed: u64,
    pub output_dir: PathBuf,
    /// `c` as written in a config file; it must agree with `a3 - a2`.
    #[serde(skip)]
    stated_c: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            params: ModelParams::default(),
            z_max: crate::tol::Z_MAX,
            ode_step: crate::tol::ODE_STEP,
            tolerances: BTreeMap::new(),
            seed: 0,
            output_dir: PathBuf::from("."),
            stated_c: None,
        }
    }
}

impl RunConfig {
    /// Reads a JSON object or `key = value` lines (`#` starts a comment).
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let v: Value = serde_json::from_str(text)?;
            let mut cfg = RunConfig::default();
            let Value::Object(map) = v else { unreachable!() };
            for (k, v) in map {
                match (k.as_str(), &v) {
                    ("params", Value::Object(pm)) => {
                        for (pk, pv) in pm {
                            let x = pv.as_f64().ok_or_else(|| Error::Config(format!("params.{pk} must be a number")))?;
                            cfg.set(pk, &x.to_string())?;
                        }
                    }
                    ("tolerances", Value::Object(tm)) => {
                        for (tk, tv) in tm {
                            let x = tv.as_f64().ok_or_else(|| Error::Config(format!("tolerances.{tk} must be a number")))?;
                            cfg.tolerances.insert(tk.clone(), x);
                        }
                    }
                    (_, Value::String(s)) => cfg.set(&k, s)?,
                    (_, Value::Number(n)) => cfg.set(&k, &n.to_string())?,
                    _ => return Err(Error::Config(format!("unsupported value for {k}"))),
                }
            }
            cfg.validate()?;
            return Ok(cfg);
        }
        let mut cfg = RunConfig::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Config(format!("line {}: expected key = value", n + 1)))?;
            cfg.set(k.trim(), v.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one key. `c` is accepted only when it agrees with `a3 - a2`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = || f64::from_str(value).map_err(|_| Error::Config(format!("{key}: not a number: {value}")));
        match key {
            "a1" => self.params.a1 = num()?,
            "a2" => self.params.a2 = num()?,
            "a3" => self.params.a3 = num()?,
            "a4" => self.params.a4 = num()?,
            "b1" => self.params.b1 = num()?,
            "c" => self.stated_c = Some(num()?),
            "z_max" => self.z_max = num()?,
            "ode_step" => self.ode_step = num()?,
            "seed" => self.seed = value.parse().map_err(|_| Error::Config(format!("seed: not an integer: {value}")))?,
            "output_dir" => self.output_dir = PathBuf::from(value),
            k if k.starts_with("tol.") => {
                self.tolerances.insert(k[4..].to_string(), num()?);
            }
            _ => return Err(Error::Config(format!("unknown key {key}"))),
        }
        Ok(())
    }

    /// Applies `k=v` overrides.
    pub fn apply_overrides<S: AsRef<str>>(&mut self, kvs: &[S]) -> Result<()> {
        for kv in kvs {
            let kv = kv.as_ref();
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Config(format!("expected k=v, got {kv}")))?;
            self.set(k.trim(), v.trim())?;
        }
        self.validate()
    }

    pub fn validate(&mut self) -> Result<()> {
        if let Some(c) = self.stated_c.take() {
            if (c - self.params.c()).abs() > 1e-12 * (1.0 + c.abs()) {
                return Err(Error::Config(format!("c = {c} disagrees with a3 - a2 = {}", self.params.c())));
            }
        }
        self.params.validate()?;
        if !(self.z_max > 0.0) || !(self.ode_step > 0.0) {
            return Err(Error::Config("z_max and ode_step must be positive".into()));
        }
        if let Some((k, v)) = self.tolerances.iter().find(|(_, v)| !(**v > 0.0)) {
            return Err(Error::Config(format!("tolerance {k} = {v} must be positive")));
        }
        Ok(())
    }

    pub fn trace_opts(&self) -> TraceOpts {
        TraceOpts { z_max: self.z_max, step: self.ode_step }
    }
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}

pub fn fmt12(x: f64) -> String {
    format!("{}", round12(x))
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_f64() {
                if !n.is_i64() && !n.is_u64() {
                    if let Some(r) = serde_json::Number::from_f64(round12(x)) {
                        *n = r;
                    }
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(m) => m.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to 12 significant digits.
pub fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut v = serde_json::to_value(v)?;
    round_value(&mut v);
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportKind {
    Characteristic,
    Son,
    Sonp,
    Scc,
    Inflection,
    Hysteresis,
    Ellipse,
    Wavecurve,
    Saturated,
}

impl FromStr for ExportKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "characteristic" => ExportKind::Characteristic,
            "son" => ExportKind::Son,
            "sonp" => ExportKind::Sonp,
            "scc" => ExportKind::Scc,
            "inflection" => ExportKind::Inflection,
            "hysteresis" => ExportKind::Hysteresis,
            "ellipse" => ExportKind::Ellipse,
            "wavecurve" => ExportKind::Wavecurve,
            "saturated" => ExportKind::Saturated,
            _ => return Err(Error::InvalidInput(format!("unknown export {s}"))),
        })
    }
}

impl ExportKind {
    pub fn name(self) -> &'static str {
        match self {
            ExportKind::Characteristic => "characteristic",
            ExportKind::Son => "son",
            ExportKind::Sonp => "sonp",
            ExportKind::Scc => "scc",
            ExportKind::Inflection => "inflection",
            ExportKind::Hysteresis => "hysteresis",
            ExportKind::Ellipse => "ellipse",
            ExportKind::Wavecurve => "wavecurve",
            ExportKind::Saturated => "saturated",
        }
    }
}

/// A sampled surface: `points[i][j]` is `None` where the parametrisation leaves the window.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceGrid {
    pub name: String,
    pub points: Vec<Vec<Option<ManifoldPoint>>>,
}

impl SurfaceGrid {
    /// `i,j,z,t,Y` rows; cells outside the window are omitted.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,z,t,Y\n");
        for (i, row) in self.points.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                if let Some(q) = q {
                    let _ = writeln!(s, "{i},{j},{},{},{}", fmt12(q.z), fmt12(q.t), fmt12(q.y));
                }
            }
        }
        s
    }

    /// One triangle per line: nine numbers, `z t Y` of each corner.
    pub fn to_triangles(&self) -> String {
        let mut s = String::new();
        let mut tri = |a: &ManifoldPoint, b: &ManifoldPoint, c: &ManifoldPoint| {
            let v: Vec<String> = [a, b, c].iter().flat_map(|q| [q.z, q.t, q.y]).map(fmt12).collect();
            let _ = writeln!(s, "{}", v.join(" "));
        };
        for i in 0..self.points.len().saturating_sub(1) {
            for j in 0..self.points[i].len().saturating_sub(1) {
                let (a, b) = (self.points[i][j], self.points[i + 1][j]);
                let (c, d) = (self.points[i][j + 1], self.points[i + 1][j + 1]);
                if let (Some(a), Some(b), Some(d)) = (a, b, d) {
                    tri(&a, &b, &d);
                }
                if let (Some(a), Some(d), Some(c)) = (a, d, c) {
                    tri(&a, &d, &c);
                }
            }
        }
        s
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()
}

/// Box used for surface exports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub z: f64,
    pub t: f64,
    pub y: f64,
    pub n: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window { z: 3.0, t: 8.0, y: 8.0, n: 121 }
    }
}

fn inside(q: ManifoldPoint, w: &Window) -> Option<ManifoldPoint> {
    (q.is_finite() && q.t.abs() <= w.t && q.y.abs() <= w.y).then_some(q)
}

pub fn characteristic_grid(w: &Window) -> SurfaceGrid {
    let zs = linspace(-w.z, w.z, w.n);
    let ts = linspace(-w.t, w.t, w.n);
    let points = zs.iter().map(|&z| ts.iter().map(|&t| Some(ManifoldPoint::on_c(z, t))).collect()).collect();
    SurfaceGrid { name: "characteristic".into(), points }
}

/// Son (or Son' when `prime`) over a `(z, t)` grid: `Y = ∓(A t + C) / B`.
pub fn sonic_grid(prime: bool, w: &Window, p: &ModelParams) -> SurfaceGrid {
    let zs = linspace(-w.z, w.z, w.n);
    let ts = linspace(-w.t, w.t, w.n);
    let sign = if prime { 1.0 } else { -1.0 };
    let points = zs
        .iter()
        .map(|&z| {
            let (a, b, c) = son_coeffs(z, p);
            ts.iter().map(|&t| inside(ManifoldPoint::new(z, t, sign * (a * t + c) / b), w)).collect()
        })
        .collect();
    SurfaceGrid { name: if prime { "sonp" } else { "son" }.into(), points }
}

/// SCC as the union of Hugoniot curves through the coincidence line `t = Y = 0`.
pub fn scc_grid(w: &Window, p: &ModelParams) -> SurfaceGrid {
    let gens = linspace(-w.z, w.z, w.n);
    let zs = linspace(-w.z, w.z, w.n);
    let points = gens
        .iter()
        .map(|&z0| {
            let base = state_w(ManifoldPoint::on_c(z0, 0.0), p);
            zs.iter().map(|&z| inside(hugoniot_point(base, z, p), w)).collect()
        })
        .collect();
    SurfaceGrid { name: "scc".into(), points }
}

/// A named polyline in the manifold with its state-space image.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyline {
    pub name: String,
    pub points: Vec<ManifoldPoint>,
}

fn polylines_csv(lines: &[Polyline], p: &ModelParams) -> String {
    let mut s = String::from("branch,z,t,Y,u,v\n");
    for l in lines {
        for q in &l.points {
            let w = state_w(*q, p);
            let _ = writeln!(s, "{},{},{},{},{},{}", l.name, fmt12(q.z), fmt12(q.t), fmt12(q.y), fmt12(w.u), fmt12(w.v));
        }
    }
    s
}

/// Inflection branches on the characteristic plane and the double contact lines.
pub fn inflection_lines(w: &Window, p: &ModelParams) -> Vec<Polyline> {
    let branch = |name: &str, a: f64, b: f64| Polyline {
        name: name.into(),
        points: linspace(a, b, w.n * 4)
            .into_iter()
            .filter_map(|z| inflection_t(z, p).ok().map(|t| ManifoldPoint::on_c(z, t)))
            .filter(|q| q.t.abs() <= w.t)
            .collect(),
    };
    let mut out = vec![branch("inflection_s", 1e-3, w.z), branch("inflection_f", -w.z, -1e-3)];
    for (k, (zc, t)) in double_sonic(p).into_iter().enumerate() {
        out.push(Polyline {
            name: format!("double_contact_{}", if k == 0 { "s" } else { "f" }),
            points: linspace(-w.y, w.y, w.n).into_iter().map(|y| ManifoldPoint::new(zc, t, y)).collect(),
        });
    }
    out
}

pub fn hysteresis_line(w: &Window, p: &ModelParams) -> Polyline {
    Polyline { name: "hysteresis_prime".into(), points: linspace(-w.z, w.z, w.n * 4).into_iter().map(|z| hysteresis_point(z, p)).collect() }
}

fn thin(arc: &WaveArc, keep: usize) -> WaveArc {
    let n = arc.samples.len();
    if n <= keep {
        return arc.clone();
    }
    let mut a = arc.clone();
    a.samples = (0..keep).map(|k| arc.samples[k * (n - 1) / (keep - 1)]).collect();
    a
}

/// Wave curve export: arcs with type tags, endpoints and speed ranges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArcSummary {
    #[serde(rename = "type")]
    pub kind: crate::arc::ArcKind,
    pub nonlocal: bool,
    pub stop: crate::arc::StopEvent,
    pub start: ManifoldPoint,
    pub end: ManifoldPoint,
    pub start_state: [f64; 2],
    pub end_state: [f64; 2],
    pub speed_range: [f64; 2],
    pub samples: Vec<[f64; 5]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveExport {
    pub family: &'static str,
    pub region: Option<crate::waves::CsRegion>,
    pub incomplete: bool,
    pub junctions: Vec<ManifoldPoint>,
    pub arcs: Vec<ArcSummary>,
}

pub fn summarize(curve: &WaveCurve, family: &'static str, keep: usize, p: &ModelParams) -> CurveExport {
    let arcs = curve
        .arcs
        .iter()
        .map(|a| {
            let (lo, hi) = a.speed_range();
            let (s, e) = (state_wp(a.start().q, p), state_wp(a.end().q, p));
            ArcSummary {
                kind: a.kind,
                nonlocal: a.nonlocal,
                stop: a.stop,
                start: a.start().q,
                end: a.end().q,
                start_state: [s.u, s.v],
                end_state: [e.u, e.v],
                speed_range: [lo, hi],
                samples: thin(a, keep)
                    .samples
                    .iter()
                    .map(|x| {
                        let w = state_wp(x.q, p);
                        [x.q.z, x.q.t, x.q.y, w.u, w.v]
                    })
                    .collect(),
            }
        })
        .collect();
    CurveExport { family, region: curve.region, incomplete: curve.incomplete, junctions: curve.junctions.clone(), arcs }
}

/// Forward curve of the slow lift and backward sequence of the fast lift of `w`.
pub fn wave_curves(w: StatePoint, cfg: &RunConfig) -> Result<(WaveCurve, WaveCurve)> {
    let p = &cfg.params;
    let opts = cfg.trace_opts();
    let lift = lift_state(w, p)?;
    let fwd = forward_wave_curve(lift.us, &Separatrices::new(p, &opts), &opts, p)?;
    let bwd = backward_wave_sequence(lift.uf, &opts, p)?;
    Ok((fwd, bwd))
}

/// Files written by one export: `(file name, contents)`.
pub type Files = Vec<(String, String)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::InvalidInput(format!("unknown format {s}"))),
        }
    }
}

/// Builds the export files for `kind`. Wave curves and saturated surfaces need a state.
pub fn export(kind: ExportKind, state: Option<StatePoint>, format: Format, cfg: &RunConfig) -> Result<Files> {
    let p = &cfg.params;
    let win = Window::default();
    let name = kind.name();
    let grid_files = |g: SurfaceGrid| -> Result<Files> {
        Ok(match format {
            Format::Json => vec![(format!("{name}.json"), to_json(&g)?)],
            Format::Csv => vec![(format!("{name}.csv"), g.to_csv()), (format!("{name}.tri.txt"), g.to_triangles())],
            Format::Svg => return Err(Error::InvalidInput(format!("{name} is a surface; use json or csv"))),
        })
    };
    let line_files = |lines: Vec<Polyline>| -> Result<Files> {
        Ok(match format {
            Format::Json => vec![(format!("{name}.json"), to_json(&lines)?)],
            Format::Csv => vec![(format!("{name}.csv"), polylines_csv(&lines, p))],
            Format::Svg => {
                let mut plot = crate::svg::Plot::new();
                for l in &lines {
                    plot.line(l.points.iter().map(|q| state_w(*q, p)).collect(), "#1f5fa8", false);
                }
                vec![(format!("{name}.svg"), plot.render())]
            }
        })
    };
    let need = || state.ok_or_else(|| Error::InvalidInput(format!("{name} export needs --u and --v")));
    match kind {
        ExportKind::Characteristic => grid_files(characteristic_grid(&win)),
        ExportKind::Son => grid_files(sonic_grid(false, &win, p)),
        ExportKind::Sonp => grid_files(sonic_grid(true, &win, p)),
        ExportKind::Scc => grid_files(scc_grid(&win, p)),
        ExportKind::Inflection => line_files(inflection_lines(&win, p)),
        ExportKind::Hysteresis => line_files(vec![hysteresis_line(&win, p)]),
        ExportKind::Ellipse => {
            let pts = coincidence_ellipse(p, 256)?;
            Ok(match format {
                Format::Json => vec![(format!("{name}.json"), to_json(&pts.iter().map(|w| [w.u, w.v]).collect::<Vec<_>>())?)],
                Format::Csv => {
                    let mut s = String::from("u,v\n");
                    for w in &pts {
                        let _ = writeln!(s, "{},{}", fmt12(w.u), fmt12(w.v));
                    }
                    vec![(format!("{name}.csv"), s)]
                }
                Format::Svg => {
                    let mut plot = crate::svg::Plot::new();
                    plot.line(pts, "#b0207a", true);
                    vec![(format!("{name}.svg"), plot.render())]
                }
            })
        }
        ExportKind::Wavecurve => {
            let (fwd, bwd) = wave_curves(need()?, cfg)?;
            let both = [summarize(&fwd, "forward", 400, p), summarize(&bwd, "backward", 400, p)];
            Ok(match format {
                Format::Json => vec![(format!("{name}.json"), to_json(&both)?)],
                Format::Csv => {
                    let mut s = String::from("family,arc,type,z,t,Y,u,v\n");
                    for c in &both {
                        for (i, a) in c.arcs.iter().enumerate() {
                            let kind = serde_json::to_value(a.kind)?;
                            for x in &a.samples {
                                let v: Vec<String> = x.iter().map(|v| fmt12(*v)).collect();
                                let _ = writeln!(s, "{},{i},{},{}", c.family, kind.as_str().unwrap_or(""), v.join(","));
                            }
                        }
                    }
                    vec![(format!("{name}.csv"), s)]
                }
                Format::Svg => {
                    let mut plot = crate::svg::Plot::with_background(p);
                    for (curve, color) in [(&fwd, "#c0392b"), (&bwd, "#2471a3")] {
                        for a in &curve.arcs {
                            plot.line(a.samples.iter().map(|x| state_wp(x.q, p)).collect(), color, false);
                        }
                    }
                    vec![(format!("{name}.svg"), plot.render())]
                }
            })
        }
        ExportKind::Saturated => {
            let (mut fwd, _) = wave_curves(need()?, cfg)?;
            fwd.arcs = fwd.arcs.iter().map(|a| thin(a, 40)).collect();
            let sat = saturate(&fwd, FIBER_SAMPLES, cfg.z_max.min(50.0), p)?;
            match format {
                Format::Json => Ok(vec![(format!("{name}.json"), to_json(&sat)?)]),
                Format::Csv => {
                    let mut files = Vec::new();
                    for (k, sheet) in sat.sheets.iter().enumerate() {
                        let kind = serde_json::to_value(sheet.kind)?;
                        let g = SurfaceGrid {
                            name: format!("{name}_{k}_{}", kind.as_str().unwrap_or("")),
                            points: sheet.fibers.iter().map(|f| f.iter().map(|q| inside(*q, &Window { t: 1e6, y: 1e6, ..win })).collect()).collect(),
                        };
                        files.push((format!("{}.csv", g.name), g.to_csv()));
                        files.push((format!("{}.tri.txt", g.name), g.to_triangles()));
                    }
                    Ok(files)
                }
                Format::Svg => Err(Error::InvalidInput("saturated is a surface; use json or csv".into())),
            }
        }
    }
}

/// Writes files under `dir`, creating it if needed.
pub fn write_files(dir: &Path, files: &Files) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::new();
    for (name, body) in files {
        let path = dir.join(name);
        std::fs::write(&path, body)?;
        out.push(path);
    }
    Ok(out)
}
