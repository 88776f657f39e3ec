//! Rarefaction curves on the characteristic plane and composite curves on Son'.
//!
//! Rarefactions solve
//!
//! ```text
//! dt/dz = [-t(b1-2)z⁵ - 2t(b1-2)z³ + 2(b1-1)z² - t(b1-2)z + 2] / [(z²+1)² (1+(b1-1)z²)]
//! ```
//!
//! and the speed along them changes with the sign of
//! `N = z(z²+1)[(b1+1)z²+3] t + (b1-1)z² + 1`, which vanishes on the
//! inflection locus. A composite curve is the preimage of a rarefaction under
//! the speed-preserving projection `T` from Son' to the characteristic plane.

use serde::Serialize;

use crate::arc::{ArcKind, ArcSample, Generator, StopEvent, TraceOpts, WaveArc};
use crate::error::{Error, Result};
use crate::flux::ModelParams;
use crate::hugoniot::{hugoniot_point, sonic_projection, speed_numerator};
use crate::manifold::{son_prime_t, speed, state_w, ManifoldPoint};
use crate::tol;

pub fn rarefaction_field(z: f64, t: f64, p: &ModelParams) -> f64 {
    let b1 = p.b1;
    let z2 = z * z;
    let num = -t * (b1 - 2.0) * z2 * z2 * z - 2.0 * t * (b1 - 2.0) * z2 * z + 2.0 * (b1 - 1.0) * z2
        - t * (b1 - 2.0) * z
        + 2.0;
    num / ((z2 + 1.0).powi(2) * (1.0 + (b1 - 1.0) * z2))
}

/// Numerator of `ds/dz` along a rarefaction.
pub fn ds_dz_numerator(z: f64, t: f64, p: &ModelParams) -> f64 {
    let b1 = p.b1;
    let z2 = z * z;
    z * (z2 + 1.0) * ((b1 + 1.0) * z2 + 3.0) * t + (b1 - 1.0) * z2 + 1.0
}

pub fn ds_dz_rarefaction(z: f64, t: f64, p: &ModelParams) -> f64 {
    let z2 = z * z;
    p.c() * ds_dz_numerator(z, t, p) / (((p.b1 - 1.0) * z2 + 1.0) * (z2 + 1.0))
}

pub fn rk4_step(z: f64, t: f64, h: f64, p: &ModelParams) -> f64 {
    let k1 = rarefaction_field(z, t, p);
    let k2 = rarefaction_field(z + 0.5 * h, t + 0.5 * h * k1, p);
    let k3 = rarefaction_field(z + 0.5 * h, t + 0.5 * h * k2, p);
    let k4 = rarefaction_field(z + h, t + h * k3, p);
    t + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Slow family: rarefactions with increasing speed, composites with decreasing speed.
    Forward,
    /// Fast family: rarefactions with decreasing speed, composites with increasing speed.
    Backward,
}

impl Mode {
    fn rarefaction_sign(self) -> f64 {
        match self {
            Mode::Forward => 1.0,
            Mode::Backward => -1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RarefactionArc {
    pub mode: Mode,
    pub samples: Vec<ArcSample>,
    pub stop: StopEvent,
}

impl RarefactionArc {
    pub fn into_wave_arc(self) -> WaveArc {
        WaveArc {
            kind: if self.mode == Mode::Forward { ArcKind::R1 } else { ArcKind::R2 },
            nonlocal: false,
            generator: Generator::Rarefaction,
            samples: self.samples,
            stop: self.stop,
            verdict: None,
        }
    }
}

fn sample_c(z: f64, t: f64, p: &ModelParams) -> ArcSample {
    ArcSample::new(ManifoldPoint::on_c(z, t), p)
}

/// Bisection on the fraction of a step at which `event` changes sign.
/// Returns the bracket `(lo, hi)`; `lo` keeps the sign at the step start.
fn bracket(event: &dyn Fn(f64) -> f64, h: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (0.0, 1.0);
    let f0 = event(0.0);
    while (hi - lo) * h.abs() > tol::EVENT {
        let m = 0.5 * (lo + hi);
        if event(m).signum() == f0.signum() {
            lo = m;
        } else {
            hi = m;
        }
    }
    (lo, hi)
}

fn locate(event: &dyn Fn(f64) -> f64, h: f64) -> f64 {
    bracket(event, h).1
}

/// Integrates a rarefaction from a characteristic point.
///
/// Forward mode requires `t < 0` and follows increasing speed; backward
/// mode requires `t > 0` and follows decreasing speed.
pub fn integrate_rarefaction(start: (f64, f64), mode: Mode, opts: &TraceOpts, p: &ModelParams) -> Result<RarefactionArc> {
    let (z0, t0) = start;
    match mode {
        Mode::Forward if t0 >= 0.0 => return Err(Error::WrongSide("forward rarefactions start at t < 0")),
        Mode::Backward if t0 <= 0.0 => return Err(Error::WrongSide("backward rarefactions start at t > 0")),
        _ => {}
    }
    let mut samples = vec![sample_c(z0, t0, p)];
    let n0 = ds_dz_numerator(z0, t0, p);
    if tol::scaled(n0, z0).abs() <= tol::SURFACE {
        return Ok(RarefactionArc { mode, samples, stop: StopEvent::AtStart });
    }
    let dir = n0.signum() * mode.rarefaction_sign();
    let zc = p.z_crit();
    let (mut z, mut t) = (z0, t0);
    let stop = loop {
        let mut h = dir * opts.step_at(z);
        let mut bound = false;
        if (z + h).abs() >= opts.z_max {
            h = opts.z_max.copysign(z + h) - z;
            bound = true;
        }
        let at = |f: f64| (z + f * h, rk4_step(z, t, f * h, p));
        let (zn, tn) = at(1.0);
        let coincide = tn.signum() != t0.signum();
        let inflect = ds_dz_numerator(zn, tn, p).signum() != n0.signum();
        if coincide || inflect {
            let fc = if coincide { locate(&|f| at(f).1, h) } else { 2.0 };
            let fi = if inflect { locate(&|f| { let (a, b) = at(f); ds_dz_numerator(a, b, p) }, h) } else { 2.0 };
            let f = fc.min(fi);
            let (ze, te) = at(f);
            if fc <= fi {
                samples.push(sample_c(ze, 0.0, p));
                break StopEvent::Coincidence;
            }
            samples.push(sample_c(ze, te, p));
            break StopEvent::Inflection;
        }
        // touching the inflection locus without crossing it happens only at
        // the double contact abscissae
        for zz in [zc, -zc] {
            if (z - zz) * (zn - zz) < 0.0 {
                let f = (zz - z) / h;
                let (ze, te) = at(f);
                let scale = ((p.b1 - 1.0) * ze * ze + 1.0).abs();
                if (ds_dz_numerator(ze, te, p) / scale).abs() < 1e-8 {
                    samples.push(sample_c(ze, te, p));
                    return Ok(RarefactionArc { mode, samples, stop: StopEvent::Tangency });
                }
            }
        }
        samples.push(sample_c(zn, tn, p));
        if bound {
            break StopEvent::Escape;
        }
        z = zn;
        t = tn;
    };
    Ok(RarefactionArc { mode, samples, stop })
}

/// The map `T`: from `(z1, Y1)` on Son' to the characteristic point with the
/// same speed on the same Hugoniot curve.
pub fn composite_projection_t(z1: f64, y1: f64, p: &ModelParams) -> Result<(f64, f64)> {
    if z1 == 0.0 {
        return Err(Error::PoleAtZero);
    }
    let t1 = son_prime_t(z1, y1, p)?;
    let q = sonic_projection(ManifoldPoint::new(z1, t1, y1), p)?;
    Ok((q.z, q.t))
}

/// Direction of the composite field at `(z1, Y1)`: the pullback of the
/// rarefaction direction `(1, dt/dz)` under `T`, by the chain rule with a
/// finite-difference Jacobian of `T`. Returned as a unit vector.
pub fn composite_field(z1: f64, y1: f64, p: &ModelParams) -> Result<(f64, f64)> {
    let zc = p.z_crit();
    for zz in [zc, -zc] {
        if (z1 - zz).hypot(y1) < tol::SINGULAR {
            return Err(Error::Singularity);
        }
    }
    if z1.abs() < tol::SINGULAR {
        return Err(Error::Singularity);
    }
    let hz = 1e-6 * (1.0 + z1.abs());
    let hy = 1e-6 * (1.0 + y1.abs());
    let (zp, tp) = composite_projection_t(z1 + hz, y1, p)?;
    let (zm, tm) = composite_projection_t(z1 - hz, y1, p)?;
    let (zq, tq) = composite_projection_t(z1, y1 + hy, p)?;
    let (zr, tr) = composite_projection_t(z1, y1 - hy, p)?;
    let j = [
        [(zp - zm) / (2.0 * hz), (zq - zr) / (2.0 * hy)],
        [(tp - tm) / (2.0 * hz), (tq - tr) / (2.0 * hy)],
    ];
    let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    let (z, t) = composite_projection_t(z1, y1, p)?;
    let r = (1.0, rarefaction_field(z, t, p));
    let scale = j.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    if det.abs() <= 1e-12 * scale * scale {
        return Err(Error::Singularity);
    }
    let dz = (j[1][1] * r.0 - j[0][1] * r.1) / det;
    let dy = (-j[1][0] * r.0 + j[0][0] * r.1) / det;
    let n = dz.hypot(dy);
    Ok((dz / n, dy / n))
}

/// Roots of the quadratic left after removing `z = pt.z` from the cubic that
/// fixes the speed `s(pt)` along the Hugoniot curve of `W(pt)`.
fn preimage_quadratic(pt: ManifoldPoint, p: &ModelParams) -> (f64, f64, f64) {
    let w = state_w(pt, p);
    let sigma = speed(pt, p);
    let [n3, n2, n1, n0] = speed_numerator(w, p);
    let c3 = n3;
    let c2 = n2 - sigma * (p.b1 - 1.0);
    let c1 = n1;
    let _c0 = n0 - sigma;
    let q2 = c3;
    let q1 = c2 + pt.z * q2;
    let q0 = c1 + pt.z * q1;
    (q2, q1, q0)
}

fn preimage_disc(pt: ManifoldPoint, p: &ModelParams) -> f64 {
    let (q2, q1, q0) = preimage_quadratic(pt, p);
    q1 * q1 - 4.0 * q2 * q0
}

/// The point of Son' whose `T`-image is the characteristic point `pt`,
/// choosing the root nearest `guess`.
pub fn composite_preimage(pt: ManifoldPoint, guess: f64, p: &ModelParams) -> Option<ManifoldPoint> {
    let (q2, q1, q0) = preimage_quadratic(pt, p);
    let roots: Vec<f64> = if q2.abs() < 1e-300 {
        if q1 == 0.0 {
            return None;
        }
        vec![-q0 / q1]
    } else {
        let disc = q1 * q1 - 4.0 * q2 * q0;
        if disc < 0.0 {
            return None;
        }
        let q = -0.5 * (q1 + q1.signum() * disc.sqrt());
        if q == 0.0 {
            vec![0.0, 0.0]
        } else {
            vec![q / q2, q0 / q]
        }
    };
    let z = roots.into_iter().min_by(|a, b| (a - guess).abs().total_cmp(&(b - guess).abs()))?;
    Some(hugoniot_point(state_w(pt, p), z, p))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompositeArc {
    pub mode: Mode,
    /// Son' points; each sample's `link` is its `T`-image.
    pub samples: Vec<ArcSample>,
    pub stop: StopEvent,
}

impl CompositeArc {
    pub fn into_wave_arc(self) -> WaveArc {
        WaveArc {
            kind: if self.mode == Mode::Forward { ArcKind::C1 } else { ArcKind::C2 },
            nonlocal: false,
            generator: Generator::Composite,
            samples: self.samples,
            stop: self.stop,
            verdict: None,
        }
    }
}

/// Integrates a composite curve from an inflection point.
///
/// The `T`-image retraces the rarefaction through `start` with `z` moving in
/// `retrace_dir`; forward composites have decreasing speed, backward ones
/// increasing. Stops at the double contact (where the preimage folds), when
/// the speed reaches `s_target`, or at the working bound.
pub fn integrate_composite(
    start: (f64, f64),
    retrace_dir: f64,
    mode: Mode,
    s_target: Option<f64>,
    opts: &TraceOpts,
    p: &ModelParams,
) -> Result<CompositeArc> {
    let (z0, t0) = start;
    let scale = ((p.b1 - 1.0) * z0 * z0 + 1.0).abs();
    if (ds_dz_numerator(z0, t0, p) / scale).abs() > 1e-6 {
        return Err(Error::NotOnInflection);
    }
    let p0 = ManifoldPoint::on_c(z0, t0);
    let mut samples = vec![ArcSample { q: p0, s: speed(p0, p), link: Some(p0) }];
    let dir = retrace_dir.signum();
    let (mut z, mut t) = (z0, t0);
    let mut qz = z0;
    let sigma0 = speed(p0, p);
    let stop = loop {
        let h = dir * opts.step_at(z);
        let at = |f: f64| ManifoldPoint::on_c(z + f * h, rk4_step(z, t, f * h, p));
        let pn = at(1.0);
        let sn = speed(pn, p);
        let wrong_way = match mode {
            Mode::Forward => sn > sigma0 + tol::SPEED,
            Mode::Backward => sn < sigma0 - tol::SPEED,
        };
        if samples.len() == 1 && wrong_way {
            return Err(Error::InvalidInput("retrace direction increases the wrong way".into()));
        }
        let f_match = match s_target {
            Some(st) if (sn - st).signum() != (samples.last().unwrap().s - st).signum() => {
                locate(&|f| speed(at(f), p) - st, h)
            }
            _ => 2.0,
        };
        let f_fold = if preimage_disc(pn, p) < 0.0 { bracket(&|f| preimage_disc(at(f), p), h).0 } else { 2.0 };
        if f_match <= 1.0 || f_fold <= 1.0 {
            let f = f_match.min(f_fold);
            let pe = at(f);
            let stop = if f_fold <= f_match { StopEvent::DoubleContact } else { StopEvent::SpeedMatch };
            let q = if stop == StopEvent::DoubleContact {
                // both remaining roots merge here
                let (q2, q1, _) = preimage_quadratic(pe, p);
                Some(hugoniot_point(state_w(pe, p), -q1 / (2.0 * q2), p))
            } else {
                composite_preimage(pe, qz, p)
            };
            if let Some(q) = q {
                samples.push(ArcSample { q, s: speed(pe, p), link: Some(pe) });
            }
            break stop;
        }
        if pn.t.signum() != t0.signum() {
            break StopEvent::Coincidence;
        }
        let q = match composite_preimage(pn, qz, p) {
            Some(q) => q,
            None => break StopEvent::Singularity,
        };
        if q.z.abs() >= opts.z_max || pn.z.abs() >= opts.z_max {
            break StopEvent::Escape;
        }
        samples.push(ArcSample { q, s: sn, link: Some(pn) });
        qz = q.z;
        z = pn.z;
        t = pn.t;
    };
    Ok(CompositeArc { mode, samples, stop })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::{inflection_t, son_prime_value};

    fn d() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn field_values() {
        let p = d();
        assert_eq!(rarefaction_field(0.0, 3.7, &p), 2.0);
        assert!((rarefaction_field(1.0, 0.0, &p) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn ds_dz_values() {
        let p = d();
        assert_eq!(ds_dz_numerator(0.0, -2.0, &p), 1.0);
        assert_eq!(ds_dz_numerator(1.0, -1.0, &p), -16.0);
        for z in [0.2, 0.5, 2.0, -0.7] {
            let t = inflection_t(z, &p).unwrap();
            assert!(ds_dz_rarefaction(z, t, &p).abs() < 1e-12);
        }
    }

    #[test]
    fn ds_dz_matches_speed_derivative() {
        let p = ModelParams::new(0.1, 0.2, 1.7, -0.3, 4.0).unwrap();
        let (z, t) = (0.4, -0.9);
        let h = 1e-5;
        let t1 = rk4_step(z, t, h, &p);
        let t0 = rk4_step(z, t, -h, &p);
        let fd = (speed(ManifoldPoint::on_c(z + h, t1), &p) - speed(ManifoldPoint::on_c(z - h, t0), &p)) / (2.0 * h);
        assert!((fd - ds_dz_rarefaction(z, t, &p)).abs() < 1e-7);
    }

    #[test]
    fn example_one_rarefaction_reaches_coincidence() {
        let arc = integrate_rarefaction((-5.0, -0.065), Mode::Forward, &TraceOpts::default(), &d()).unwrap();
        assert_eq!(arc.stop, StopEvent::Coincidence);
        assert!(arc.samples.windows(2).all(|w| w[1].s > w[0].s));
        assert_eq!(arc.samples.last().unwrap().q.t, 0.0);
    }

    #[test]
    fn example_three_rarefaction_reaches_inflection() {
        let p = d();
        let arc = integrate_rarefaction((-1.0, -4.0), Mode::Forward, &TraceOpts::default(), &p).unwrap();
        assert_eq!(arc.stop, StopEvent::Inflection);
        let end = arc.samples.last().unwrap().q;
        assert!(end.z < p.z_crit() && end.z > 0.0);
        assert!((end.t - inflection_t(end.z, &p).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn wrong_side_is_rejected() {
        let o = TraceOpts::default();
        assert!(integrate_rarefaction((1.0, 0.5), Mode::Forward, &o, &d()).is_err());
        assert!(integrate_rarefaction((1.0, -0.5), Mode::Backward, &o, &d()).is_err());
    }

    #[test]
    fn start_on_inflection_is_zero_length() {
        let p = d();
        let t = inflection_t(0.5, &p).unwrap();
        let arc = integrate_rarefaction((0.5, t), Mode::Forward, &TraceOpts::default(), &p).unwrap();
        assert_eq!(arc.stop, StopEvent::AtStart);
        assert_eq!(arc.samples.len(), 1);
    }

    #[test]
    fn composites_lie_on_son_prime_and_keep_speed() {
        let p = d();
        let o = TraceOpts::default();
        for start in [(-1.0, -4.0), (1.0, -2.0)] {
            let r = integrate_rarefaction(start, Mode::Forward, &o, &p).unwrap();
            let end = r.samples.last().unwrap().q;
            let back = -(end.z - start.0).signum();
            let c = integrate_composite((end.z, end.t), back, Mode::Forward, Some(r.samples[0].s), &o, &p).unwrap();
            assert_eq!(c.stop, StopEvent::DoubleContact);
            assert!((c.samples.last().unwrap().q.z.abs() - p.z_crit()).abs() < 1e-6);
            for s in &c.samples {
                assert!(tol::scaled(son_prime_value(s.q, &p), s.q.z).abs() < 1e-8);
                assert!((speed(s.q, &p) - speed(s.link.unwrap(), &p)).abs() < 1e-8);
            }
            assert!(c.samples.windows(2).all(|w| w[1].s <= w[0].s));
        }
    }
}
