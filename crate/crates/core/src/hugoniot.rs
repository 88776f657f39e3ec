//! Hugoniot and Hugoniot' curves, their crossings with the characteristic
//! plane and with Son', and Lax admissibility.
//!
//! Along the Hugoniot curve of a fixed state `W0 = (u0, v0)`, with
//! `K = b1 u0 + a1 - a4` and `P = v0 + a3`,
//!
//! ```text
//! t(z) = [b1 P z³ - K z² + (b1 (v0+a2) + 2c) z - K] / [c (z²+1)((b1-1)z²+1)]
//! Y(z) = [-2P z² + 2K z + 2(v0+a2)] / ((b1-1)z²+1)
//! ```

use serde::Serialize;

use crate::arc::{ArcKind, ArcSample, Generator, StopEvent, TraceOpts, WaveArc};
use crate::error::{Error, Result};
use crate::flux::{classify_state, ModelParams, RegionClass, StatePoint};
use crate::manifold::{
    son_prime_value, son_value, speed, state_w, state_wp, ManifoldPoint,
};
use crate::tol;

fn kp(w0: StatePoint, p: &ModelParams) -> (f64, f64) {
    (p.b1 * w0.u + p.a1 - p.a4, w0.v + p.a3)
}

pub fn hugoniot_t(w0: StatePoint, z: f64, p: &ModelParams) -> f64 {
    let (k, pp) = kp(w0, p);
    let (b1, c) = (p.b1, p.c());
    let z2 = z * z;
    let num = b1 * pp * z2 * z - k * z2 + (b1 * (w0.v + p.a2) + 2.0 * c) * z - k;
    num / (c * (z2 + 1.0) * ((b1 - 1.0) * z2 + 1.0))
}

pub fn hugoniot_y(w0: StatePoint, z: f64, p: &ModelParams) -> f64 {
    let (k, pp) = kp(w0, p);
    let z2 = z * z;
    2.0 * (-pp * z2 + k * z + (w0.v + p.a2)) / ((p.b1 - 1.0) * z2 + 1.0)
}

/// Point over `z` of the Hugoniot curve of `w0` (`W = w0` there).
pub fn hugoniot_point(w0: StatePoint, z: f64, p: &ModelParams) -> ManifoldPoint {
    ManifoldPoint::new(z, hugoniot_t(w0, z, p), hugoniot_y(w0, z, p))
}

/// Point over `z` of the Hugoniot' curve of `w0` (`W' = w0` there).
pub fn hugoniot_prime_point(w0: StatePoint, z: f64, p: &ModelParams) -> ManifoldPoint {
    hugoniot_point(w0, z, p).reflect()
}

/// Solves the linear system in `(t, Y)` that fixes `W = w0` at a given `z`.
pub fn hugoniot_oracle(w0: StatePoint, z: f64, p: &ModelParams) -> (f64, f64) {
    let (b1, c) = (p.b1, p.c());
    let z2 = z * z;
    // [c(z²-1)/b1] t + (z/2) Y = u0 - (2cz/(z²+1) - a1 + a4)/b1
    // [c z]        t + (1/2) Y = v0 + a3 - c/(z²+1)
    let (m11, m12) = (c * (z2 - 1.0) / b1, 0.5 * z);
    let (m21, m22) = (c * z, 0.5);
    let r1 = w0.u - (2.0 * c * z / (z2 + 1.0) - p.a1 + p.a4) / b1;
    let r2 = w0.v + p.a3 - c / (z2 + 1.0);
    let det = m11 * m22 - m12 * m21;
    ((r1 * m22 - m12 * r2) / det, (m11 * r2 - m21 * r1) / det)
}

/// Numerator coefficients `[n3, n2, n1, n0]` of the speed along the Hugoniot
/// curve of `w0`; the denominator is `(b1-1) z² + 1`.
pub fn speed_numerator(w0: StatePoint, p: &ModelParams) -> [f64; 4] {
    let (k, pp) = kp(w0, p);
    let (b1, c) = (p.b1, p.c());
    let ua = w0.u + p.a4;
    [pp * (b1 + 1.0), (b1 - 1.0) * ua - 2.0 * k, 2.0 * c - pp, ua]
}

pub fn hugoniot_speed(w0: StatePoint, z: f64, p: &ModelParams) -> f64 {
    let [n3, n2, n1, n0] = speed_numerator(w0, p);
    (((n3 * z + n2) * z + n1) * z + n0) / ((p.b1 - 1.0) * z * z + 1.0)
}

/// `ds/dz` along the Hugoniot curve of `w0`.
pub fn hugoniot_dsdz(w0: StatePoint, z: f64, p: &ModelParams) -> f64 {
    let [n3, n2, n1, n0] = speed_numerator(w0, p);
    let num = ((n3 * z + n2) * z + n1) * z + n0;
    let dnum = (3.0 * n3 * z + 2.0 * n2) * z + n1;
    let den = (p.b1 - 1.0) * z * z + 1.0;
    let dden = 2.0 * (p.b1 - 1.0) * z;
    (dnum * den - num * dden) / (den * den)
}

/// Closed-form coefficients of the Hugoniot curve through a point `Q0`.
///
/// `Y(z) = (A z² + B z + C) / ((z0²+1)((b1-1)z²+1))` and
/// `t(z) = (D z³ + E z² + F z + G) / (2c (z0²+1)(z²+1)((b1-1)z²+1))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThroughPointCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    z0: f64,
    b1: f64,
    cc: f64,
}

impl ThroughPointCoeffs {
    pub fn new(q0: ManifoldPoint, p: &ModelParams) -> Self {
        let (b1, c) = (p.b1, p.c());
        let ManifoldPoint { z: z0, t: t0, y: y0 } = q0;
        let w = z0 * z0 + 1.0;
        let z04 = z0.powi(4);
        ThroughPointCoeffs {
            a: -(2.0 * c + 2.0 * c * t0 * z0 * w + y0 * w),
            b: 4.0 * c * z0 + 2.0 * c * t0 * (z04 - 1.0) + b1 * y0 * z0 * w,
            c: -2.0 * c * z0 * z0 + 2.0 * c * t0 * z0 * w + y0 * w,
            d: 2.0 * c * b1 + 2.0 * c * b1 * t0 * z0 * w + b1 * y0 * w,
            e: 2.0 * c * t0 * (1.0 - z04) - b1 * z0 * y0 * w - 4.0 * c * z0,
            f: 4.0 * c * w + 2.0 * c * b1 * t0 * z0 * w + b1 * y0 * w - 2.0 * c * b1 * z0 * z0,
            g: -4.0 * c * z0 + 2.0 * c * t0 * (1.0 - z04) - b1 * z0 * y0 * w,
            z0,
            b1,
            cc: c,
        }
    }

    pub fn y(&self, z: f64) -> f64 {
        (self.a * z * z + self.b * z + self.c) / ((self.z0 * self.z0 + 1.0) * ((self.b1 - 1.0) * z * z + 1.0))
    }

    pub fn t(&self, z: f64) -> f64 {
        let num = ((self.d * z + self.e) * z + self.f) * z + self.g;
        let z2 = z * z;
        num / (2.0 * self.cc * (self.z0 * self.z0 + 1.0) * (z2 + 1.0) * ((self.b1 - 1.0) * z2 + 1.0))
    }

    /// `B² - 4AC`: the sign decides whether the curve meets the characteristic plane.
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum HugoniotBase {
    /// `W` fixed.
    State(StatePoint),
    /// `W'` fixed.
    PrimeState(StatePoint),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSample {
    pub z: f64,
    pub t: f64,
    #[serde(rename = "Y")]
    pub y: f64,
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HugoniotCurve {
    pub base: HugoniotBase,
    /// Sign of `ds/dz` at the point the curve was built through (0 if none).
    pub orientation: f64,
    pub samples: Vec<CurveSample>,
}

/// `n` values of `z` on `[-z_max, z_max]`, dense near the origin.
pub fn z_grid(n: usize, z_max: f64) -> Vec<f64> {
    let a = z_max.asinh();
    if n < 2 {
        return vec![0.0; n];
    }
    (0..n).map(|k| (-a + 2.0 * a * k as f64 / (n - 1) as f64).sinh()).collect()
}

impl HugoniotCurve {
    pub fn point_at(&self, z: f64, p: &ModelParams) -> ManifoldPoint {
        match self.base {
            HugoniotBase::State(w) => hugoniot_point(w, z, p),
            HugoniotBase::PrimeState(w) => hugoniot_prime_point(w, z, p),
        }
    }

    pub fn sampled(base: HugoniotBase, zs: &[f64], through_z: Option<f64>, p: &ModelParams) -> Self {
        let mut curve = HugoniotCurve { base, orientation: 0.0, samples: Vec::with_capacity(zs.len()) };
        for &z in zs {
            let q = curve.point_at(z, p);
            curve.samples.push(CurveSample { z, t: q.t, y: q.y, s: speed(q, p) });
        }
        if let Some(z) = through_z {
            let w = match base {
                HugoniotBase::State(w) | HugoniotBase::PrimeState(w) => w,
            };
            curve.orientation = hugoniot_dsdz(w, z, p).signum();
        }
        curve
    }

    pub fn fixed_state(&self) -> StatePoint {
        match self.base {
            HugoniotBase::State(w) | HugoniotBase::PrimeState(w) => w,
        }
    }
}

pub fn hugoniot_from_state(w0: StatePoint, p: &ModelParams) -> HugoniotCurve {
    HugoniotCurve::sampled(HugoniotBase::State(w0), &z_grid(801, tol::Z_MAX), None, p)
}

pub fn hugoniot_through_point(q0: ManifoldPoint, p: &ModelParams) -> HugoniotCurve {
    let w = state_w(q0, p);
    HugoniotCurve::sampled(HugoniotBase::State(w), &z_grid(801, tol::Z_MAX), Some(q0.z), p)
}

pub fn hugoniot_prime_through_point(q0: ManifoldPoint, p: &ModelParams) -> HugoniotCurve {
    let w = state_wp(q0, p);
    HugoniotCurve::sampled(HugoniotBase::PrimeState(w), &z_grid(801, tol::Z_MAX), Some(q0.z), p)
}

/// The two crossings `(slow, fast)` of the Hugoniot curve of `w0` with the
/// characteristic plane.
pub fn c_crossings(w0: StatePoint, p: &ModelParams) -> Result<(ManifoldPoint, ManifoldPoint)> {
    match classify_state(w0, p) {
        RegionClass::Elliptic => return Err(Error::NoIntersection),
        RegionClass::Boundary => return Err(Error::Tangency),
        RegionClass::Hyperbolic => {}
    }
    let (k, pp) = kp(w0, p);
    // P z² - K z - (v0 + a2) = 0
    let (qa, qb, qc) = (pp, -k, -(w0.v + p.a2));
    let disc = qb * qb - 4.0 * qa * qc;
    if disc <= 0.0 {
        return Err(Error::Tangency);
    }
    let q = -0.5 * (qb + qb.signum() * disc.sqrt());
    let q = if q == 0.0 { -0.5 * disc.sqrt() } else { q };
    if qa.abs() < tol::LIFT * (qb.abs() + qc.abs()) {
        // one crossing has gone to the plane at z = infinity
        return Err(Error::NoIntersection);
    }
    let (z1, z2) = (q / qa, qc / q);
    let a = ManifoldPoint::on_c(z1, hugoniot_t(w0, z1, p));
    let b = ManifoldPoint::on_c(z2, hugoniot_t(w0, z2, p));
    Ok(if a.t < b.t { (a, b) } else { (b, a) })
}

/// Second crossing of the Hugoniot curve through a characteristic point `(z0, t0)`.
pub fn partner_lift(z0: f64, t0: f64) -> (f64, f64) {
    let w = 1.0 + z0 * z0;
    let z1 = -(t0 * w - z0) / (t0 * z0 * w + 1.0);
    let k = t0 * z0.powi(3) + t0 * z0 + 1.0;
    let t1 = -t0 * k * k / (t0 * t0 * w * w + 1.0);
    (z1, t1)
}

/// Gap between the fast and slow characteristic speeds on a Hugoniot curve
/// through `(z0, t0)`.
pub fn lift_speed_gap(z0: f64, t0: f64, p: &ModelParams) -> f64 {
    p.c() * (z0 * z0 + 1.0) * t0.abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CProjections {
    pub us: ManifoldPoint,
    pub uf: ManifoldPoint,
    pub ups: ManifoldPoint,
    pub upf: ManifoldPoint,
}

pub fn projections(q: ManifoldPoint, p: &ModelParams) -> Result<CProjections> {
    let (us, uf) = c_crossings(state_w(q, p), p)?;
    let (ups, upf) = c_crossings(state_wp(q, p), p)?;
    Ok(CProjections { us, uf, ups, upf })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SonicSide {
    SlowSonic,
    FastSonic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SonPrimeCrossing {
    pub point: ManifoldPoint,
    pub side: Option<SonicSide>,
}

/// Crossings of the Hugoniot curve of `w0` with Son', found by sign changes
/// on a dense grid and bisection.
pub fn son_prime_intersections(w0: StatePoint, p: &ModelParams, z_max: f64) -> Vec<SonPrimeCrossing> {
    let g = |z: f64| son_prime_value(hugoniot_point(w0, z, p), p);
    let zs = z_grid(20001, z_max);
    let lifts = c_crossings(w0, p).ok();
    let mut out = Vec::new();
    let mut prev = (zs[0], g(zs[0]));
    for &z in &zs[1..] {
        let val = g(z);
        if prev.1 == 0.0 || prev.1.signum() != val.signum() {
            let root = if prev.1 == 0.0 { prev.0 } else { bisect(&g, prev.0, z, 1e-13) };
            let point = hugoniot_point(w0, root, p);
            let side = lifts.and_then(|(us, uf)| {
                let s = speed(point, p);
                let (ds, df) = ((s - speed(us, p)).abs(), (s - speed(uf, p)).abs());
                let scale = 1e-6 * (1.0 + s.abs());
                if ds < scale && ds <= df {
                    Some(SonicSide::SlowSonic)
                } else if df < scale {
                    Some(SonicSide::FastSonic)
                } else {
                    None
                }
            });
            if prev.1 != 0.0 || out.is_empty() {
                out.push(SonPrimeCrossing { point, side });
            }
        }
        prev = (z, val);
    }
    out
}

pub(crate) fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        if (b - a).abs() <= tol * (1.0 + a.abs()) {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// The characteristic point `T(Q)` on the Hugoniot curve of a Son' point with
/// the same speed.
pub fn sonic_projection(q: ManifoldPoint, p: &ModelParams) -> Result<ManifoldPoint> {
    let (b1, c) = (p.b1, p.c());
    if q.z == 0.0 {
        return Err(Error::PoleAtZero);
    }
    let den = (b1 + 1.0) * q.y * q.z * q.z + q.y + 2.0 * c;
    if den == 0.0 {
        return Err(Error::Singularity);
    }
    let zc = -2.0 * (q.y - c) * q.z / den;
    let w = state_w(q, p);
    Ok(ManifoldPoint::on_c(zc, hugoniot_t(w, zc, p)))
}

pub fn son_prime_side(q: ManifoldPoint, p: &ModelParams) -> Result<SonicSide> {
    if tol::scaled(son_prime_value(q, p), q.z).abs() > 1e-8 {
        return Err(Error::NotOnSurface("sonic'"));
    }
    if q.z.abs() < 1e-12 {
        return Err(Error::SonicBoundary);
    }
    let tq = sonic_projection(q, p)?;
    if tq.t.abs() < 1e-12 {
        return Err(Error::SonicBoundary);
    }
    Ok(if tq.t < 0.0 { SonicSide::SlowSonic } else { SonicSide::FastSonic })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LaxKind {
    Forward1,
    Backward2,
    Inadmissible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LaxConditions {
    #[serde(rename = "L1.1")]
    pub l1_1: bool,
    #[serde(rename = "L2.1")]
    pub l2_1: bool,
    #[serde(rename = "L2")]
    pub l2: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaxVerdict {
    pub kind: LaxKind,
    pub checked_at: ManifoldPoint,
    pub conditions: LaxConditions,
}

/// Lax verdict of the shock `qto`, a point on the Hugoniot curve of `qfrom`.
pub fn lax_classify(qfrom: ManifoldPoint, qto: ManifoldPoint, p: &ModelParams) -> Result<LaxVerdict> {
    let (wa, wb) = (state_w(qfrom, p), state_w(qto, p));
    if wa.dist(&wb) > 1e-7 * (1.0 + wa.u.abs() + wa.v.abs()) {
        return Err(Error::NotOnCurve);
    }
    let pr = projections(qto, p)?;
    let s = speed(qto, p);
    let eps = 1e-9 * (1.0 + s.abs());
    let conditions = LaxConditions {
        l1_1: s <= speed(pr.us, p) + eps,
        l2_1: s >= speed(pr.uf, p) - eps,
        l2: speed(pr.ups, p) - eps <= s && s <= speed(pr.upf, p) + eps,
    };
    let kind = if conditions.l1_1 && conditions.l2 {
        LaxKind::Forward1
    } else if conditions.l2_1 && conditions.l2 {
        LaxKind::Backward2
    } else {
        LaxKind::Inadmissible
    };
    Ok(LaxVerdict { kind, checked_at: qto, conditions })
}

/// Follows the Hugoniot curve of `base` from `z0` in the direction where the
/// speed increases (`increasing`) or decreases, until Son or the working bound.
pub fn trace_shock(
    base: StatePoint,
    z0: f64,
    increasing: bool,
    kind: ArcKind,
    opts: &TraceOpts,
    p: &ModelParams,
) -> WaveArc {
    let point = |z: f64| hugoniot_point(base, z, p);
    let son = |z: f64| son_value(point(z), p);
    let mut samples = vec![ArcSample::new(point(z0), p)];
    let want = if increasing { 1.0 } else { -1.0 };
    let slope = hugoniot_dsdz(base, z0, p);
    let son0 = son(z0);
    let make = |samples, stop| WaveArc {
        kind,
        nonlocal: false,
        generator: Generator::Hugoniot { base },
        samples,
        stop,
        verdict: None,
    };
    if tol::scaled(son0, z0).abs() <= tol::SURFACE || slope == 0.0 {
        return make(samples, StopEvent::AtStart);
    }
    let dir = slope.signum() * want;
    let mut z = z0;
    loop {
        let mut zn = z + dir * opts.step_at(z);
        let escape = zn.abs() >= opts.z_max;
        if escape {
            zn = opts.z_max.copysign(zn);
        }
        if son(zn).signum() != son0.signum() {
            let root = bisect(&son, z, zn, tol::EVENT);
            samples.push(ArcSample::new(point(root), p));
            return make(samples, StopEvent::Son);
        }
        samples.push(ArcSample::new(point(zn), p));
        if escape {
            return make(samples, StopEvent::Escape);
        }
        z = zn;
    }
}

/// Local or non-local forward shock curve: decreasing speed from a point of
/// the slow characteristic plane or of the slow sonic' surface.
pub fn forward_shock_arc(qstart: ManifoldPoint, opts: &TraceOpts, p: &ModelParams) -> Result<WaveArc> {
    shock_arc_from(qstart, false, opts, p)
}

/// Local or non-local backward shock curve: increasing speed from a point of
/// the fast characteristic plane or of the fast sonic' surface.
pub fn backward_shock_arc(qstart: ManifoldPoint, opts: &TraceOpts, p: &ModelParams) -> Result<WaveArc> {
    shock_arc_from(qstart, true, opts, p)
}

fn shock_arc_from(qstart: ManifoldPoint, increasing: bool, opts: &TraceOpts, p: &ModelParams) -> Result<WaveArc> {
    let on_c = qstart.y.abs() <= 1e-12 * (1.0 + qstart.t.abs());
    let want_side = if increasing { SonicSide::FastSonic } else { SonicSide::SlowSonic };
    let nonlocal = if on_c {
        let ok = if increasing { qstart.t > 0.0 } else { qstart.t < 0.0 };
        if !ok {
            return Err(Error::WrongSide(if increasing { "expected t > 0" } else { "expected t < 0" }));
        }
        false
    } else {
        if son_prime_side(qstart, p)? != want_side {
            return Err(Error::WrongSide("start lies on the other sonic' component"));
        }
        true
    };
    let kind = if increasing { ArcKind::H2 } else { ArcKind::H1 };
    let base = state_w(qstart, p);
    let mut arc = trace_shock(base, qstart.z, increasing, kind, opts, p);
    arc.nonlocal = nonlocal;
    let at = if arc.samples.len() > 2 { arc.samples[1].q } else { qstart };
    arc.verdict = Some(lax_classify(qstart, at, p)?);
    Ok(arc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::manifold_to_states;

    fn d() -> ModelParams {
        ModelParams::default()
    }

    const EX1: StatePoint = StatePoint::new(-0.2430769231, -0.6365384615);

    #[test]
    fn example_one_point() {
        let p = d();
        let w0 = manifold_to_states(ManifoldPoint::on_c(-5.0, -0.065), &p).w;
        assert!((hugoniot_t(w0, -5.0, &p) + 0.065).abs() < 1e-12);
        assert!(hugoniot_y(w0, -5.0, &p).abs() < 1e-12);
        let (t, y) = hugoniot_oracle(EX1, -5.0, &p);
        assert!((t + 0.065).abs() < 1e-9 && y.abs() < 1e-9);
    }

    #[test]
    fn example_three_oracle_and_lift() {
        let p = d();
        let w = StatePoint::new(-0.125, 3.5);
        let (t, y) = hugoniot_oracle(w, -1.0, &p);
        assert!((t + 4.0).abs() < 1e-12 && y.abs() < 1e-12);
        // Y numerator -9 z² - 2 z + 7 vanishes at -1 and 7/9
        for z in [-1.0, 7.0 / 9.0] {
            assert!(hugoniot_y(w, z, &p).abs() < 1e-12);
        }
        let (s, f) = c_crossings(w, &p).unwrap();
        assert!((s.z + 1.0).abs() < 1e-12 && (s.t + 4.0).abs() < 1e-12);
        assert!((f.z - 7.0 / 9.0).abs() < 1e-12 && f.t > 0.0);
    }

    #[test]
    fn speed_closed_form_matches_composition() {
        let p = ModelParams::new(0.2, -0.3, 0.5, 0.4, 2.5).unwrap();
        let w = StatePoint::new(0.7, 1.3);
        for z in [-4.0, -0.5, 0.0, 0.9, 6.0] {
            let q = hugoniot_point(w, z, &p);
            assert!((hugoniot_speed(w, z, &p) - speed(q, &p)).abs() < 1e-12);
            let h = 1e-6;
            let fd = (hugoniot_speed(w, z + h, &p) - hugoniot_speed(w, z - h, &p)) / (2.0 * h);
            assert!((fd - hugoniot_dsdz(w, z, &p)).abs() < 1e-6 * (1.0 + fd.abs()));
        }
    }

    #[test]
    fn partner_lift_on_example_one() {
        let p = d();
        let (z1, t1) = partner_lift(-5.0, -0.065);
        assert!((z1 + 0.35026).abs() < 1e-5);
        assert!(t1 > 0.0);
        let w = manifold_to_states(ManifoldPoint::on_c(-5.0, -0.065), &p).w;
        assert!(hugoniot_y(w, z1, &p).abs() < 1e-12);
        assert!((hugoniot_t(w, z1, &p) - t1).abs() < 1e-12);
        let gap = speed(ManifoldPoint::on_c(z1, t1), &p) - speed(ManifoldPoint::on_c(-5.0, -0.065), &p);
        assert!((gap - 1.69).abs() < 1e-12);
        assert!((lift_speed_gap(-5.0, -0.065, &p) - 1.69).abs() < 1e-12);
        assert_eq!(partner_lift(0.4, 0.0), (0.4, 0.0));
    }

    #[test]
    fn through_point_tangent_on_coincidence() {
        let p = d();
        let co = ThroughPointCoeffs::new(ManifoldPoint::on_c(0.6, 0.0), &p);
        assert!(co.discriminant().abs() < 1e-12);
        let co = ThroughPointCoeffs::new(ManifoldPoint::on_c(0.6, -0.3), &p);
        let expect = 4.0 * 0.09 * 1.36f64.powi(4);
        assert!((co.discriminant() - expect).abs() < 1e-12);
    }

    #[test]
    fn forward_arc_from_example_one() {
        let p = d();
        let arc = forward_shock_arc(ManifoldPoint::on_c(-5.0, -0.065), &TraceOpts::default(), &p).unwrap();
        assert_eq!(arc.kind, ArcKind::H1);
        assert!(arc.samples[1].q.z < -5.0);
        assert!(arc.samples.windows(2).all(|w| w[1].s < w[0].s));
        assert!(arc.samples[1..].iter().all(|s| s.s < -2.0603));
        assert_eq!(arc.verdict.unwrap().kind, LaxKind::Forward1);
        assert_eq!(arc.stop, StopEvent::Escape);
    }

    #[test]
    fn nonlocal_start_outside_double_contact_is_inadmissible() {
        let p = d();
        // slow sonic' points with z² > 1/(b1+1)
        let mut seen = 0;
        for z in [0.8, -0.8, 1.5, -2.0] {
            for y in [-3.0, -1.0, 1.0, 3.0] {
                let t = crate::manifold::son_prime_t(z, y, &p).unwrap();
                let q = ManifoldPoint::new(z, t, y);
                if !matches!(son_prime_side(q, &p), Ok(SonicSide::SlowSonic)) {
                    continue;
                }
                let Ok(v) = lax_classify(q, q, &p) else { continue };
                seen += 1;
                assert!(!v.conditions.l2);
                assert_eq!(v.kind, LaxKind::Inadmissible);
            }
        }
        assert!(seen > 0);
    }
}
