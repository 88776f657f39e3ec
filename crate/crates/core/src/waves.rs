//! Forward wave curves from the slow characteristic plane, backward wave
//! sequences from the fast one, region classification and saturation.

use serde::Serialize;

use crate::arc::{ArcKind, ArcSample, Generator, StopEvent, TraceOpts, WaveArc};
use crate::error::{Error, Result};
use crate::flux::{classify_state, ModelParams, RegionClass};
use crate::hugoniot::{backward_shock_arc, c_crossings, forward_shock_arc, hugoniot_prime_point, z_grid};
use crate::integral::{integrate_composite, integrate_rarefaction, rarefaction_field, rk4_step, Mode};
use crate::manifold::{double_sonic, inflection_t, l2_holds, speed, state_wp, ManifoldPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CsRegion {
    Ia,
    Ib,
    II,
    III,
}

impl CsRegion {
    /// The coarse label, merging `Ia` and `Ib`.
    pub fn label(self) -> &'static str {
        match self {
            CsRegion::Ia | CsRegion::Ib => "I",
            CsRegion::II => "II",
            CsRegion::III => "III",
        }
    }
}

/// The rarefaction `R_s` through the double contact point `(zc, t1)`, traced
/// over the whole working window, and its mirror image `R_fs`.
#[derive(Debug, Clone)]
pub struct Separatrices {
    params: ModelParams,
    zs: Vec<f64>,
    ts: Vec<f64>,
    /// `z` where `R_fs` meets `t = 0`.
    pub z_hat: f64,
}

impl Separatrices {
    pub fn new(p: &ModelParams, opts: &TraceOpts) -> Self {
        let [(zc, t1), _] = double_sonic(p);
        let run = |dir: f64| {
            let mut out = vec![(zc, t1)];
            let (mut z, mut t) = (zc, t1);
            while z.abs() < opts.z_max {
                let h = dir * opts.step_at(z);
                t = rk4_step(z, t, h, p);
                z += h;
                out.push((z, t));
            }
            out
        };
        let mut left = run(-1.0);
        left.reverse();
        left.pop();
        left.extend(run(1.0));
        let (zs, ts): (Vec<f64>, Vec<f64>) = left.into_iter().unzip();
        let mut z_hat = -opts.z_max;
        for i in 0..zs.len() - 1 {
            if zs[i] >= zc && ts[i] < 0.0 && ts[i + 1] >= 0.0 {
                let (z0, t0) = (zs[i], ts[i]);
                let h = zs[i + 1] - z0;
                let f = crate::hugoniot::bisect(&|f: f64| rk4_step(z0, t0, f * h, p), 0.0, 1.0, 1e-14);
                z_hat = -(z0 + f * h);
                break;
            }
        }
        Separatrices { params: *p, zs, ts, z_hat }
    }

    /// `t` on `R_s` at `z`, by cubic Hermite interpolation with the exact slope.
    pub fn r_s(&self, z: f64) -> f64 {
        let n = self.zs.len();
        let i = match self.zs.binary_search_by(|a| a.total_cmp(&z)) {
            Ok(i) => return self.ts[i],
            Err(0) => 0,
            Err(i) if i >= n => n - 2,
            Err(i) => i - 1,
        };
        let (z0, z1) = (self.zs[i], self.zs[i + 1]);
        let (t0, t1) = (self.ts[i], self.ts[i + 1]);
        let h = z1 - z0;
        let (d0, d1) = (rarefaction_field(z0, t0, &self.params) * h, rarefaction_field(z1, t1, &self.params) * h);
        let x = (z - z0) / h;
        let (x2, x3) = (x * x, x * x * x);
        (2.0 * x3 - 3.0 * x2 + 1.0) * t0 + (x3 - 2.0 * x2 + x) * d0 + (-2.0 * x3 + 3.0 * x2) * t1 + (x3 - x2) * d1
    }

    /// The mirror separatrix, `R_fs(z) = -R_s(-z)`.
    pub fn r_fs(&self, z: f64) -> f64 {
        -self.r_s(-z)
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.zs.iter().copied().zip(self.ts.iter().copied())
    }
}

/// Region of a slow characteristic point, by comparison along its `z`-slice.
pub fn classify_cs_region(z: f64, t: f64, seps: &Separatrices, p: &ModelParams) -> Result<CsRegion> {
    if !(t < 0.0) {
        return Err(Error::WrongSide("slow characteristic points have t < 0"));
    }
    let zc = p.z_crit();
    let region = if z <= seps.z_hat {
        if t > seps.r_fs(z) {
            CsRegion::Ia
        } else if t > seps.r_s(z) {
            CsRegion::Ib
        } else {
            CsRegion::II
        }
    } else if z < zc {
        if t > seps.r_s(z) {
            CsRegion::Ib
        } else if z <= 0.0 || t > inflection_t(z, p)? {
            CsRegion::II
        } else {
            CsRegion::III
        }
    } else if t > inflection_t(z, p)? {
        CsRegion::Ib
    } else {
        CsRegion::III
    };
    Ok(region)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WaveCurve {
    pub arcs: Vec<WaveArc>,
    /// Start point followed by the end point of every arc.
    pub junctions: Vec<ManifoldPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<CsRegion>,
    /// Set when a branch stopped at Son, at a singularity, or could not be continued.
    pub incomplete: bool,
}

impl WaveCurve {
    pub fn kinds(&self) -> Vec<ArcKind> {
        self.arcs.iter().map(|a| a.kind).collect()
    }

    pub fn arc(&self, kind: ArcKind) -> Option<&WaveArc> {
        self.arcs.iter().find(|a| a.kind == kind)
    }
}

fn jump_arc(from: ManifoldPoint, to: ManifoldPoint, p: &ModelParams) -> WaveArc {
    WaveArc {
        kind: ArcKind::Link,
        nonlocal: false,
        generator: Generator::Jump,
        samples: vec![ArcSample::new(from, p), ArcSample::new(to, p)],
        stop: StopEvent::AtStart,
        verdict: None,
    }
}

fn build(q0: ManifoldPoint, mode: Mode, opts: &TraceOpts, p: &ModelParams) -> Result<WaveCurve> {
    let fwd = mode == Mode::Forward;
    let w0 = crate::manifold::state_w(q0, p);
    if classify_state(w0, p) != RegionClass::Hyperbolic {
        return Err(Error::EllipticState(w0.u, w0.v));
    }
    let mut incomplete = false;
    let shock = if fwd { forward_shock_arc(q0, opts, p)? } else { backward_shock_arc(q0, opts, p)? };
    incomplete |= shock.stop == StopEvent::Son;
    let mut arcs = vec![shock];
    let raref = integrate_rarefaction((q0.z, q0.t), mode, opts, p)?;
    let rstop = raref.stop;
    let rend = raref.samples.last().unwrap().q;
    arcs.push(raref.into_wave_arc());
    if rstop == StopEvent::Inflection {
        let retrace = -(rend.z - q0.z).signum();
        let comp = integrate_composite((rend.z, rend.t), retrace, mode, Some(speed(q0, p)), opts, p)?;
        let cstop = comp.stop;
        let q3 = comp.samples.last().unwrap().q;
        arcs.push(comp.into_wave_arc());
        match cstop {
            StopEvent::SpeedMatch => {
                let nl = if fwd { forward_shock_arc(q3, opts, p) } else { backward_shock_arc(q3, opts, p) };
                match nl {
                    Ok(a) if l2_holds(q3, p) => {
                        incomplete |= a.stop == StopEvent::Son;
                        arcs.push(a);
                    }
                    _ => incomplete = true,
                }
            }
            StopEvent::DoubleContact => {
                let (slow, fast) = c_crossings(state_wp(q3, p), p)?;
                let p4 = if fwd { slow } else { fast };
                arcs.push(jump_arc(q3, p4, p));
                let more = integrate_rarefaction((p4.z, p4.t), mode, opts, p)?;
                arcs.push(more.into_wave_arc());
            }
            _ => incomplete = true,
        }
    }
    let mut junctions = vec![q0];
    junctions.extend(arcs.iter().map(|a| a.end().q));
    Ok(WaveCurve { arcs, junctions, region: None, incomplete })
}

/// Local forward wave curve from a point of the slow characteristic plane:
/// the 1-shock arc, the 1-rarefaction and, past an inflection, the composite
/// with its continuation.
pub fn forward_wave_curve(q0: ManifoldPoint, seps: &Separatrices, opts: &TraceOpts, p: &ModelParams) -> Result<WaveCurve> {
    if !(q0.t < 0.0) || q0.y != 0.0 {
        return Err(Error::WrongSide("forward curves start on the slow characteristic plane"));
    }
    let mut curve = build(q0, Mode::Forward, opts, p)?;
    curve.region = Some(classify_cs_region(q0.z, q0.t, seps, p)?);
    Ok(curve)
}

/// Backward (2-reverse) wave sequence from a point of the fast characteristic
/// plane: shock speeds increase, the rarefaction runs toward the fast
/// inflection branch.
pub fn backward_wave_sequence(q0: ManifoldPoint, opts: &TraceOpts, p: &ModelParams) -> Result<WaveCurve> {
    if !(q0.t > 0.0) || q0.y != 0.0 {
        return Err(Error::WrongSide("backward sequences start on the fast characteristic plane"));
    }
    build(q0, Mode::Backward, opts, p)
}

/// Hugoniot' curves through every generator sample of one arc.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaturatedSheet {
    pub kind: ArcKind,
    pub zs: Vec<f64>,
    pub generators: Vec<ManifoldPoint>,
    /// `fibers[i][j]` is the point at `zs[j]` of the fiber through `generators[i]`.
    pub fibers: Vec<Vec<ManifoldPoint>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaturatedSurface {
    pub sheets: Vec<SaturatedSheet>,
}

pub const FIBER_SAMPLES: usize = 400;

pub fn saturate(curve: &WaveCurve, n: usize, z_max: f64, p: &ModelParams) -> Result<SaturatedSurface> {
    let zs = z_grid(n, z_max);
    let mut sheets = Vec::new();
    for arc in curve.arcs.iter().filter(|a| a.kind != ArcKind::Link) {
        let generators: Vec<ManifoldPoint> = arc.samples.iter().map(|s| s.q).collect();
        let mut fibers = Vec::with_capacity(generators.len());
        for g in &generators {
            let wp = state_wp(*g, p);
            if classify_state(wp, p) == RegionClass::Elliptic {
                return Err(Error::EllipticState(wp.u, wp.v));
            }
            fibers.push(zs.iter().map(|&z| hugoniot_prime_point(wp, z, p)).collect());
        }
        sheets.push(SaturatedSheet { kind: arc.kind, zs: zs.clone(), generators, fibers });
    }
    Ok(SaturatedSurface { sheets })
}

/// Default separatrices for the working window.
pub fn separatrices(p: &ModelParams) -> Separatrices {
    Separatrices::new(p, &TraceOpts::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::state_w;

    fn d() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn separatrix_passes_double_contact() {
        let p = d();
        let s = separatrices(&p);
        assert!((s.r_s(1.0 / 3.0) + 1.2).abs() < 1e-12);
        assert!((s.r_fs(-1.0 / 3.0) - 1.2).abs() < 1e-12);
        // reference value from an adaptive integrator at rtol 1e-12
        assert!((s.z_hat + 1.41086947).abs() < 1e-7, "{}", s.z_hat);
        // interpolation agrees with a direct integration
        let t = (0..1000).fold(-1.2, |t, k| rk4_step(1.0 / 3.0 - k as f64 * 1e-3, t, -1e-3, &p));
        assert!((s.r_s(1.0 / 3.0 - 1.0) - t).abs() < 1e-9);
    }

    #[test]
    fn example_regions() {
        let p = d();
        let s = separatrices(&p);
        let lab = |z, t| classify_cs_region(z, t, &s, &p).unwrap().label();
        assert_eq!(lab(-5.0, -0.065), "I");
        assert_eq!(lab(-1.0, -4.0), "II");
        assert_eq!(lab(1.0, -2.0), "III");
        assert!(classify_cs_region(0.0, 1.0, &s, &p).is_err());
    }

    #[test]
    fn example_one_forward_curve() {
        let p = d();
        let o = TraceOpts::default();
        let c = forward_wave_curve(ManifoldPoint::on_c(-5.0, -0.065), &separatrices(&p), &o, &p).unwrap();
        assert_eq!(c.kinds(), vec![ArcKind::H1, ArcKind::R1]);
        assert_eq!(c.arcs[1].stop, StopEvent::Coincidence);
        assert!(c.arcs[0].samples.windows(2).all(|w| w[1].s < w[0].s));
        assert!(c.arcs[1].samples.windows(2).all(|w| w[1].s > w[0].s));
    }

    #[test]
    fn example_three_forward_curve_has_composite() {
        let p = d();
        let o = TraceOpts::default();
        let c = forward_wave_curve(ManifoldPoint::on_c(-1.0, -4.0), &separatrices(&p), &o, &p).unwrap();
        assert_eq!(&c.kinds()[..3], &[ArcKind::H1, ArcKind::R1, ArcKind::C1]);
        let comp = c.arc(ArcKind::C1).unwrap();
        assert_eq!(comp.stop, StopEvent::DoubleContact);
        assert!((comp.end().q.z.abs() - p.z_crit()).abs() < 1e-8);
        // the Hugoniot' jump keeps the right state and lands on the slow plane
        let link = c.arc(ArcKind::Link).unwrap();
        assert!(state_wp(link.start().q, &p).dist(&state_wp(link.end().q, &p)) < 1e-9);
        assert!(link.end().q.t < 0.0 && link.end().q.y == 0.0);
        // at the double contact the composite speed is the fast speed of its right state
        let e = crate::flux::eigen(state_wp(comp.end().q, &p), &p);
        assert!((e.lambda_f().unwrap() - comp.end().s).abs() < 1e-7);
    }

    #[test]
    fn example_four_forward_curve() {
        let p = d();
        let o = TraceOpts::default();
        let c = forward_wave_curve(ManifoldPoint::on_c(1.0, -2.0), &separatrices(&p), &o, &p).unwrap();
        assert_eq!(&c.kinds()[..3], &[ArcKind::H1, ArcKind::R1, ArcKind::C1]);
        // H1 runs toward increasing z
        assert!(c.arcs[0].samples[1].q.z > 1.0);
    }

    #[test]
    fn backward_sequences() {
        let p = d();
        let o = TraceOpts::default();
        for (z, t) in [(2.0, 2.0), (5.0, 3.0)] {
            let b = backward_wave_sequence(ManifoldPoint::on_c(z, t), &o, &p).unwrap();
            assert_eq!(&b.kinds()[..3], &[ArcKind::H2, ArcKind::R2, ArcKind::C2]);
            let h2 = &b.arcs[0];
            assert!(h2.samples.windows(2).all(|w| w[1].s > w[0].s));
            assert_eq!(h2.verdict.unwrap().kind, crate::hugoniot::LaxKind::Backward2);
            assert!(b.arcs[1].samples.windows(2).all(|w| w[1].s < w[0].s));
            assert!(b.arcs[2].samples.windows(2).all(|w| w[1].s >= w[0].s));
        }
    }

    #[test]
    fn saturated_fibers_keep_right_state() {
        let p = d();
        let o = TraceOpts::default();
        let c = forward_wave_curve(ManifoldPoint::on_c(-5.0, -0.065), &separatrices(&p), &o, &p).unwrap();
        let sat = saturate(&c, 50, 20.0, &p).unwrap();
        assert_eq!(sat.sheets.len(), 2);
        for sheet in &sat.sheets {
            for (g, fiber) in sheet.generators.iter().zip(&sheet.fibers).step_by(97) {
                let wp = state_wp(*g, &p);
                for q in fiber {
                    assert!(state_wp(*q, &p).dist(&wp) < 1e-9);
                }
                let back = hugoniot_prime_point(wp, g.z, &p);
                assert!((back.t - g.t).abs() < 1e-9 && (back.y - g.y).abs() < 1e-9);
                let _ = state_w(*g, &p);
            }
        }
    }
}
