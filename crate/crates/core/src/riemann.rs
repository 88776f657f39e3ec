//! Riemann solver: lift both states, build the forward wave curve of the left
//! state and the backward sequence of the right one, intersect their
//! right-state projections and assemble the wave fan.
//!
//! Points of a saturated sheet have the right state of their generator, so a
//! backward point lies on the saturated sheet of a forward arc exactly when
//! the two right-state projections meet in the `(u, v)` plane. The search is
//! carried out there and refined by Newton iteration on both arc parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::arc::{ArcKind, TraceOpts, WaveArc};
use crate::error::{Error, Result};
use crate::flux::{classify_state, eigen, rh_residual, ModelParams, RegionClass, StatePoint};
use crate::hugoniot::{c_crossings, lax_classify, LaxKind, LaxVerdict};
use crate::manifold::{state_w, state_wp, ManifoldPoint};
use crate::waves::{backward_wave_sequence, classify_cs_region, forward_wave_curve, CsRegion, Separatrices, WaveCurve};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LiftResult {
    pub us: ManifoldPoint,
    pub uf: ManifoldPoint,
}

pub fn lift_state(w: StatePoint, p: &ModelParams) -> Result<LiftResult> {
    match classify_state(w, p) {
        RegionClass::Elliptic => return Err(Error::EllipticState(w.u, w.v)),
        RegionClass::Boundary => return Err(Error::TangentState(w.u, w.v)),
        RegionClass::Hyperbolic => {}
    }
    let (us, uf) = c_crossings(w, p).map_err(|e| match e {
        Error::Tangency => Error::TangentState(w.u, w.v),
        e => e,
    })?;
    Ok(LiftResult { us, uf })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WaveType {
    S1,
    R1,
    #[serde(rename = "C1-shock")]
    C1Shock,
    S2,
    R2,
    #[serde(rename = "C2-shock")]
    C2Shock,
}

impl WaveType {
    pub fn is_shock(self) -> bool {
        !matches!(self, WaveType::R1 | WaveType::R2)
    }

    pub fn family(self) -> u8 {
        match self {
            WaveType::S1 | WaveType::R1 | WaveType::C1Shock => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WaveType::S1 => "S1",
            WaveType::R1 => "R1",
            WaveType::C1Shock => "C1-shock",
            WaveType::S2 => "S2",
            WaveType::R2 => "R2",
            WaveType::C2Shock => "C2-shock",
        }
    }
}

fn as_pair<S: Serializer>(w: &StatePoint, s: S) -> std::result::Result<S::Ok, S::Error> {
    [w.u, w.v].serialize(s)
}

fn as_pairs<S: Serializer>(ws: &[StatePoint], s: S) -> std::result::Result<S::Ok, S::Error> {
    ws.iter().map(|w| [w.u, w.v]).collect::<Vec<_>>().serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Wave {
    #[serde(rename = "type")]
    pub kind: WaveType,
    #[serde(serialize_with = "as_pair")]
    pub from: StatePoint,
    #[serde(serialize_with = "as_pair")]
    pub to: StatePoint,
    /// Shock speed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub speed: Option<f64>,
    /// Characteristic speeds at the two ends of a rarefaction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub speed_range: Option<[f64; 2]>,
    /// States along a rarefaction, left to right.
    #[serde(serialize_with = "as_pairs", skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<StatePoint>,
    #[serde(skip)]
    pub verdict: Option<LaxVerdict>,
}

impl Wave {
    /// Speeds at the left and right edges of the fan.
    pub fn edge_speeds(&self) -> (f64, f64) {
        match (self.speed, self.speed_range) {
            (Some(s), _) => (s, s),
            (None, Some([a, b])) => (a, b),
            _ => unreachable!("a wave carries a speed or a speed range"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RiemannSolution {
    pub params: ModelParams,
    #[serde(serialize_with = "as_pair")]
    pub left: StatePoint,
    #[serde(serialize_with = "as_pair")]
    pub right: StatePoint,
    pub waves: Vec<Wave>,
    #[serde(serialize_with = "as_pairs")]
    pub middle_states: Vec<StatePoint>,
    pub compatible: bool,
    pub alternates_count: usize,
}

impl RiemannSolution {
    pub fn wave_types(&self) -> Vec<WaveType> {
        self.waves.iter().map(|w| w.kind).collect()
    }

    /// Why the sequence fails to be an admissible fan, if it does.
    pub fn check(&self, p: &ModelParams) -> Vec<String> {
        check_waves(&self.waves, self.left, self.right, p)
    }
}

const SPEED_SLACK: f64 = 1e-8;

fn check_waves(waves: &[Wave], left: StatePoint, right: StatePoint, p: &ModelParams) -> Vec<String> {
    let mut bad = Vec::new();
    let mut at = left;
    let mut last = f64::NEG_INFINITY;
    for (i, w) in waves.iter().enumerate() {
        let scale = 1.0 + at.u.abs() + at.v.abs();
        if w.from.dist(&at) > 1e-8 * scale {
            bad.push(format!("wave {i} does not start where the previous one ends"));
        }
        let (a, b) = w.edge_speeds();
        if a < last - SPEED_SLACK * (1.0 + last.abs()) {
            bad.push(format!("wave {i} is slower than the wave on its left"));
        }
        if b < a - SPEED_SLACK * (1.0 + a.abs()) {
            bad.push(format!("rarefaction {i} has decreasing speed"));
        }
        if !w.kind.is_shock() {
            let lam = |s: StatePoint| {
                let e = eigen(s, p);
                if w.kind.family() == 1 { e.lambda_s() } else { e.lambda_f() }
            };
            let sp = w.samples.iter().map(|s| lam(*s).unwrap_or(f64::NAN)).collect::<Vec<_>>();
            if sp.iter().any(|x| x.is_nan()) || sp.windows(2).any(|x| x[1] < x[0] - SPEED_SLACK * (1.0 + x[0].abs())) {
                bad.push(format!("rarefaction {i} is not monotone along its states"));
            }
        } else {
            let s = w.speed.unwrap();
            let (r0, r1) = rh_residual(w.from, w.to, s, p);
            if r0.hypot(r1) >= 1e-8 {
                bad.push(format!("shock {i} violates Rankine-Hugoniot"));
            }
            let want = if w.kind.family() == 1 { LaxKind::Forward1 } else { LaxKind::Backward2 };
            if w.verdict.map(|v| v.kind) != Some(want) {
                bad.push(format!("shock {i} is not an admissible {}-shock", w.kind.family()));
            }
        }
        last = b;
        at = w.to;
    }
    if at.dist(&right) > 1e-8 * (1.0 + right.u.abs() + right.v.abs()) {
        bad.push("the fan does not reach the right state".into());
    }
    bad
}

/// A crossing of a forward arc with a backward arc, at fractional sample indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    pub forward_arc: usize,
    pub forward_param: f64,
    pub backward_arc: usize,
    pub backward_param: f64,
    #[serde(serialize_with = "as_pair")]
    pub middle: StatePoint,
}

fn polyline(arc: &WaveArc, p: &ModelParams) -> Vec<StatePoint> {
    arc.samples.iter().map(|s| state_wp(s.q, p)).collect()
}

fn seg_cross(a0: StatePoint, a1: StatePoint, b0: StatePoint, b1: StatePoint) -> Option<(f64, f64)> {
    let (dx, dy) = (a1.u - a0.u, a1.v - a0.v);
    let (ex, ey) = (b1.u - b0.u, b1.v - b0.v);
    let den = dx * ey - dy * ex;
    if den == 0.0 {
        return None;
    }
    let (fx, fy) = (b0.u - a0.u, b0.v - a0.v);
    let ta = (fx * ey - fy * ex) / den;
    let tb = (fx * dy - fy * dx) / den;
    ((0.0..=1.0).contains(&ta) && (0.0..=1.0).contains(&tb)).then_some((ta, tb))
}

fn bbox(pts: &[StatePoint]) -> [f64; 4] {
    pts.iter().fold([f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY], |b, w| {
        [b[0].min(w.u), b[1].max(w.u), b[2].min(w.v), b[3].max(w.v)]
    })
}

fn overlap(a: &[f64; 4], b: &[f64; 4]) -> bool {
    a[0] <= b[1] && b[0] <= a[1] && a[2] <= b[3] && b[2] <= a[3]
}

/// Newton iteration on both arc parameters for `W'(fa) = W'(fb)`.
fn refine(fa: &WaveArc, fb: &WaveArc, mut x: f64, mut y: f64, p: &ModelParams) -> (f64, f64) {
    let (na, nb) = ((fa.samples.len() - 1) as f64, (fb.samples.len() - 1) as f64);
    let f = |x: f64, y: f64| {
        let (a, b) = (fa.right_state(x, p), fb.right_state(y, p));
        (a.u - b.u, a.v - b.v)
    };
    for _ in 0..40 {
        let (r0, r1) = f(x, y);
        if r0.hypot(r1) < 1e-14 {
            break;
        }
        let h = 1e-7;
        let dx = |x: f64| {
            let (xp, xm) = ((x + h).min(na), (x - h).max(0.0));
            let (a, b) = (fa.right_state(xp, p), fa.right_state(xm, p));
            ((a.u - b.u) / (xp - xm), (a.v - b.v) / (xp - xm))
        };
        let dy = |y: f64| {
            let (yp, ym) = ((y + h).min(nb), (y - h).max(0.0));
            let (a, b) = (fb.right_state(yp, p), fb.right_state(ym, p));
            (-(a.u - b.u) / (yp - ym), -(a.v - b.v) / (yp - ym))
        };
        let (j00, j10) = dx(x);
        let (j01, j11) = dy(y);
        let det = j00 * j11 - j01 * j10;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let sx = (j11 * r0 - j01 * r1) / det;
        let sy = (-j10 * r0 + j00 * r1) / det;
        let (xn, yn) = ((x - sx).clamp(0.0, na), (y - sy).clamp(0.0, nb));
        if (xn - x).abs() < 1e-15 && (yn - y).abs() < 1e-15 {
            break;
        }
        x = xn;
        y = yn;
    }
    (x, y)
}

/// All crossings of the right-state projections, in the search order:
/// backward composite against the forward shock, then backward rarefactions
/// against every forward arc, then backward shocks, then the remaining pairs.
pub fn crossings(fwd: &WaveCurve, bwd: &WaveCurve, p: &ModelParams) -> Vec<Crossing> {
    let usable = |a: &WaveArc| a.kind != ArcKind::Link && !a.is_degenerate();
    let fl: Vec<Vec<StatePoint>> = fwd.arcs.iter().map(|a| polyline(a, p)).collect();
    let bl: Vec<Vec<StatePoint>> = bwd.arcs.iter().map(|a| polyline(a, p)).collect();
    let rank = |b: ArcKind, f: ArcKind| match (b, f) {
        (ArcKind::C2, ArcKind::H1) => 0,
        (ArcKind::R2, _) => 1,
        (ArcKind::H2, _) => 2,
        _ => 3,
    };
    let mut pairs = Vec::new();
    for (j, ba) in bwd.arcs.iter().enumerate().filter(|(_, a)| usable(a)) {
        for (i, fa) in fwd.arcs.iter().enumerate().filter(|(_, a)| usable(a)) {
            pairs.push((rank(ba.kind, fa.kind), i, j));
        }
    }
    pairs.sort();
    let mut out: Vec<Crossing> = Vec::new();
    for (_, i, j) in pairs {
        let (a, b) = (&fl[i], &bl[j]);
        if !overlap(&bbox(a), &bbox(b)) {
            continue;
        }
        let bboxes_b: Vec<[f64; 4]> = b.windows(2).map(bbox).collect();
        for (ia, sa) in a.windows(2).enumerate() {
            let ba = bbox(sa);
            for (ib, sb) in b.windows(2).enumerate() {
                if !overlap(&ba, &bboxes_b[ib]) {
                    continue;
                }
                if let Some((ta, tb)) = seg_cross(sa[0], sa[1], sb[0], sb[1]) {
                    let (x, y) = refine(&fwd.arcs[i], &bwd.arcs[j], ia as f64 + ta, ib as f64 + tb, p);
                    let m = fwd.arcs[i].right_state(x, p);
                    let scale = 1.0 + m.u.abs() + m.v.abs();
                    if out.iter().any(|c| c.middle.dist(&m) < 1e-8 * scale) {
                        continue;
                    }
                    out.push(Crossing { forward_arc: i, forward_param: x, backward_arc: j, backward_param: y, middle: m });
                }
            }
        }
    }
    out
}

/// Parameter on a characteristic arc where `z` equals `z`.
fn param_at_z(arc: &WaveArc, z: f64) -> f64 {
    let s = &arc.samples;
    for i in 0..s.len().saturating_sub(1) {
        let (a, b) = (s[i].q.z, s[i + 1].q.z);
        if (a - z) * (b - z) <= 0.0 && a != b {
            return i as f64 + (z - a) / (b - a);
        }
    }
    if (s[0].q.z - z).abs() < (s[s.len() - 1].q.z - z).abs() {
        0.0
    } else {
        (s.len() - 1) as f64
    }
}

/// States along a characteristic arc between two parameters, in that order.
fn raref_states(arc: &WaveArc, from: f64, to: f64, p: &ModelParams) -> Vec<StatePoint> {
    let mut ps = vec![from];
    let (lo, hi) = (from.min(to), from.max(to));
    let inner: Vec<f64> = (lo.floor() as usize + 1..=hi.ceil() as usize).map(|k| k as f64).filter(|&k| k > lo && k < hi).collect();
    if from <= to {
        ps.extend(inner);
    } else {
        ps.extend(inner.into_iter().rev());
    }
    ps.push(to);
    ps.into_iter().map(|x| state_w(arc.eval(x, p).q, p)).collect()
}

fn rarefaction(kind: WaveType, arc: &WaveArc, from: f64, to: f64, p: &ModelParams) -> Wave {
    let (a, b) = (arc.eval(from, p), arc.eval(to, p));
    Wave {
        kind,
        from: state_w(a.q, p),
        to: state_w(b.q, p),
        speed: None,
        speed_range: Some([a.s, b.s]),
        samples: raref_states(arc, from, to, p),
        verdict: None,
    }
}

fn shock(kind: WaveType, from: StatePoint, to: StatePoint, s: f64, verdict: Option<LaxVerdict>) -> Wave {
    Wave { kind, from, to, speed: Some(s), speed_range: None, samples: Vec::new(), verdict }
}

/// Waves from the left state to the forward point at `param` on arc `idx`.
fn forward_waves(curve: &WaveCurve, idx: usize, param: f64, left: StatePoint, p: &ModelParams) -> Vec<Wave> {
    let arc = &curve.arcs[idx];
    let pt = arc.eval(param, p);
    let m = state_wp(pt.q, p);
    let start = curve.junctions[0];
    match arc.kind {
        ArcKind::H1 => {
            let from = if arc.nonlocal { arc.start().q } else { start };
            vec![shock(WaveType::S1, left, m, pt.s, lax_classify(from, pt.q, p).ok())]
        }
        ArcKind::R1 if idx == 1 => vec![rarefaction(WaveType::R1, arc, 0.0, param, p)],
        ArcKind::C1 => composite_prefix(curve, idx, param, p),
        ArcKind::R1 => {
            // rarefaction after the Hugoniot' jump that follows a composite
            let c = idx - 2;
            let mut w = composite_prefix(curve, c, (curve.arcs[c].samples.len() - 1) as f64, p);
            w.push(rarefaction(WaveType::R1, arc, 0.0, param, p));
            w
        }
        _ => Vec::new(),
    }
}

fn composite_prefix(curve: &WaveCurve, idx: usize, param: f64, p: &ModelParams) -> Vec<Wave> {
    let (raref, comp) = (&curve.arcs[1], &curve.arcs[idx]);
    let pt = comp.eval(param, p);
    let link = pt.link.expect("composite samples carry their link");
    let r = rarefaction(WaveType::R1, raref, 0.0, param_at_z(raref, link.z), p);
    let verdict = lax_classify(pt.q, pt.q, p).ok();
    vec![r, shock(WaveType::C1Shock, state_w(pt.q, p), state_wp(pt.q, p), pt.s, verdict)]
}

/// Waves from the backward point at `param` on arc `idx` to the right state.
fn backward_waves(curve: &WaveCurve, idx: usize, param: f64, right: StatePoint, p: &ModelParams) -> Vec<Wave> {
    let arc = &curve.arcs[idx];
    let pt = arc.eval(param, p);
    let m = state_wp(pt.q, p);
    let start = curve.junctions[0];
    match arc.kind {
        ArcKind::H2 => {
            let from = if arc.nonlocal { arc.start().q } else { start };
            vec![shock(WaveType::S2, m, right, pt.s, lax_classify(from, pt.q, p).ok())]
        }
        ArcKind::R2 if idx == 1 => vec![rarefaction(WaveType::R2, arc, param, 0.0, p)],
        ArcKind::C2 => composite_suffix(curve, idx, param, p),
        ArcKind::R2 => {
            let c = idx - 2;
            let mut w = vec![rarefaction(WaveType::R2, arc, param, 0.0, p)];
            w.extend(composite_suffix(curve, c, (curve.arcs[c].samples.len() - 1) as f64, p));
            w
        }
        _ => Vec::new(),
    }
}

fn composite_suffix(curve: &WaveCurve, idx: usize, param: f64, p: &ModelParams) -> Vec<Wave> {
    let (raref, comp) = (&curve.arcs[1], &curve.arcs[idx]);
    let pt = comp.eval(param, p);
    let link = pt.link.expect("composite samples carry their link");
    let r = rarefaction(WaveType::R2, raref, param_at_z(raref, link.z), 0.0, p);
    let verdict = lax_classify(pt.q, pt.q, p).ok();
    vec![shock(WaveType::C2Shock, state_wp(pt.q, p), state_w(pt.q, p), pt.s, verdict), r]
}

fn assemble(fwd: &WaveCurve, bwd: &WaveCurve, c: &Crossing, left: StatePoint, right: StatePoint, p: &ModelParams) -> Vec<Wave> {
    let mut waves = forward_waves(fwd, c.forward_arc, c.forward_param, left, p);
    waves.extend(backward_waves(bwd, c.backward_arc, c.backward_param, right, p));
    // drop waves of zero strength
    waves.retain(|w| w.from.dist(&w.to) > 1e-12 * (1.0 + w.from.u.abs() + w.from.v.abs()));
    waves
}

/// Everything computed on the way to a solution, for inspection and plotting.
#[derive(Debug, Clone)]
pub struct RiemannWork {
    pub left_lift: LiftResult,
    pub right_lift: LiftResult,
    pub forward: WaveCurve,
    pub backward: WaveCurve,
    pub crossings: Vec<Crossing>,
    pub chosen: Option<usize>,
}

pub fn solve(wl: StatePoint, wr: StatePoint, p: &ModelParams) -> Result<RiemannSolution> {
    solve_with(wl, wr, &TraceOpts::default(), p).map(|(s, _)| s)
}

pub fn solve_with(wl: StatePoint, wr: StatePoint, opts: &TraceOpts, p: &ModelParams) -> Result<(RiemannSolution, Option<RiemannWork>)> {
    p.validate()?;
    if !wl.is_finite() || !wr.is_finite() {
        return Err(Error::InvalidInput("states must be finite".into()));
    }
    let ll = lift_state(wl, p)?;
    let rl = lift_state(wr, p)?;
    let empty = |compatible| RiemannSolution {
        params: *p,
        left: wl,
        right: wr,
        waves: Vec::new(),
        middle_states: Vec::new(),
        compatible,
        alternates_count: 0,
    };
    if wl == wr {
        return Ok((empty(true), None));
    }
    let seps = Separatrices::new(p, opts);
    let forward = forward_wave_curve(ll.us, &seps, opts, p)?;
    let backward = backward_wave_sequence(rl.uf, opts, p)?;
    let found = crossings(&forward, &backward, p);
    if found.is_empty() {
        return Err(Error::NoRiemannIntersection);
    }
    let mut chosen = None;
    for (k, c) in found.iter().enumerate() {
        let waves = assemble(&forward, &backward, c, wl, wr, p);
        if !waves.is_empty() && check_waves(&waves, wl, wr, p).is_empty() {
            chosen = Some((k, waves));
            break;
        }
    }
    let work = |chosen| RiemannWork { left_lift: ll, right_lift: rl, forward: forward.clone(), backward: backward.clone(), crossings: found.clone(), chosen };
    let Some((k, waves)) = chosen else {
        return Err(Error::IncompatibleSequence);
    };
    let middle_states = waves.iter().skip(1).map(|w| w.from).collect();
    let sol = RiemannSolution {
        params: *p,
        left: wl,
        right: wr,
        waves,
        middle_states,
        compatible: true,
        alternates_count: found.len() - 1,
    };
    Ok((sol, Some(work(Some(k)))))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub delta: f64,
    pub samples: usize,
    pub base_sequence: Vec<WaveType>,
    /// Largest middle-state displacement over probes with an unchanged sequence.
    pub max_displacement: f64,
    pub ratio: f64,
    pub sequence_changes: usize,
    pub region_changes: usize,
    pub failures: usize,
}

impl ProbeReport {
    pub fn sequence_changed(&self) -> bool {
        self.sequence_changes > 0
    }
}

/// Perturbs both states by `n` random displacements of size `delta` and
/// measures how far the middle states move.
pub fn continuity_probe(wl: StatePoint, wr: StatePoint, delta: f64, n: usize, seed: u64, p: &ModelParams) -> Result<ProbeReport> {
    let base = solve(wl, wr, p)?;
    let seps = Separatrices::new(p, &TraceOpts::default());
    let region = |w: StatePoint| -> Option<CsRegion> {
        let l = lift_state(w, p).ok()?;
        classify_cs_region(l.us.z, l.us.t, &seps, p).ok()
    };
    let base_region = region(wl);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bump = |w: StatePoint| {
        let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        StatePoint::new(w.u + delta * th.cos(), w.v + delta * th.sin())
    };
    let mut rep = ProbeReport {
        delta,
        samples: n,
        base_sequence: base.wave_types(),
        max_displacement: 0.0,
        ratio: 0.0,
        sequence_changes: 0,
        region_changes: 0,
        failures: 0,
    };
    for _ in 0..n {
        let (l, r) = (bump(wl), bump(wr));
        if region(l) != base_region {
            rep.region_changes += 1;
        }
        match solve(l, r, p) {
            Ok(s) if s.wave_types() == rep.base_sequence => {
                let d = s.middle_states.iter().zip(&base.middle_states).map(|(a, b)| a.dist(b)).fold(0.0, f64::max);
                rep.max_displacement = rep.max_displacement.max(d);
            }
            Ok(_) => rep.sequence_changes += 1,
            Err(_) => rep.failures += 1,
        }
    }
    rep.ratio = if delta > 0.0 { rep.max_displacement / delta } else { 0.0 };
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn lifts() {
        let p = d();
        let l = lift_state(StatePoint::new(-0.125, 3.5), &p).unwrap();
        assert!((l.us.z + 1.0).abs() < 1e-12 && (l.us.t + 4.0).abs() < 1e-12);
        assert!((l.uf.z - 7.0 / 9.0).abs() < 1e-12);
        let l = lift_state(StatePoint::new(0.85, 3.2), &p).unwrap();
        assert!((l.uf.z - 2.0).abs() < 1e-9 && (l.uf.t - 2.0).abs() < 1e-9);
        assert!(matches!(lift_state(StatePoint::new(0.0, -0.5), &p), Err(Error::EllipticState(..))));
        assert!(matches!(lift_state(StatePoint::new(0.0, 0.0), &p), Err(Error::TangentState(..))));
    }

    #[test]
    fn equal_states_give_no_waves() {
        let w = StatePoint::new(0.85, 3.2);
        let s = solve(w, w, &d()).unwrap();
        assert!(s.waves.is_empty() && s.compatible);
    }

    #[test]
    fn example_sequences() {
        use WaveType::*;
        let p = d();
        let cases = [
            ((-0.2430769231, -0.6365384615), (0.85, 3.2), vec![S1, C2Shock, R2]),
            ((-0.125, 3.5), (9.048076925, 14.03846154), vec![S1, R2]),
            ((0.125, -2.5), (3.0, 4.0), vec![R1, C1Shock, R2]),
            // second right state of example 1, and example 2 from its printed (u, v)
            ((-0.2430769231, -0.6365384615), (-0.6, -1.1), vec![S1, R2]),
            ((0.125, 0.5), (-0.75, -2.5), vec![S1, C2Shock, R2]),
        ];
        for (l, r, want) in cases {
            let s = solve(StatePoint::new(l.0, l.1), StatePoint::new(r.0, r.1), &p).unwrap();
            assert_eq!(s.wave_types(), want);
            assert!(s.check(&p).is_empty());
        }
    }
}
