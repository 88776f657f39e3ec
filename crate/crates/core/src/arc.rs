//! Sampled, oriented wave arcs shared by the curve tracers.

use serde::Serialize;

use crate::flux::{ModelParams, StatePoint};
use crate::hugoniot::{hugoniot_point, LaxVerdict};
use crate::integral::{composite_preimage, rk4_step};
use crate::manifold::{speed, state_w, state_wp, ManifoldPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArcKind {
    H1,
    H2,
    R1,
    R2,
    C1,
    C2,
    /// Speed-preserving jump along a Hugoniot' curve back to the characteristic plane.
    #[serde(rename = "hug'-link")]
    Link,
}

impl ArcKind {
    pub fn is_forward(self) -> bool {
        matches!(self, ArcKind::H1 | ArcKind::R1 | ArcKind::C1)
    }

    pub fn is_backward(self) -> bool {
        matches!(self, ArcKind::H2 | ArcKind::R2 | ArcKind::C2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StopEvent {
    /// The arc has zero length: its start already satisfies a stop condition.
    AtStart,
    /// Shock arc reached the sonic surface.
    Son,
    /// `|z|` exceeded the working bound.
    Escape,
    Inflection,
    Coincidence,
    Tangency,
    DoubleContact,
    SpeedMatch,
    Singularity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArcSample {
    pub q: ManifoldPoint,
    pub s: f64,
    /// For composite samples: the rarefaction point with the same speed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link: Option<ManifoldPoint>,
}

impl ArcSample {
    pub fn new(q: ManifoldPoint, p: &ModelParams) -> Self {
        ArcSample { q, s: speed(q, p), link: None }
    }
}

/// How the samples were generated; used to evaluate between samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Generator {
    /// Points of the Hugoniot curve with `W` fixed at `base`.
    Hugoniot { base: StatePoint },
    /// Rarefaction on the characteristic plane, integrated in `z`.
    Rarefaction,
    /// Composite: preimage of a rarefaction, stored in each sample's link.
    Composite,
    /// Shock-preserving jump along a Hugoniot' curve; just its two endpoints.
    Jump,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WaveArc {
    pub kind: ArcKind,
    pub nonlocal: bool,
    pub generator: Generator,
    pub samples: Vec<ArcSample>,
    pub stop: StopEvent,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<LaxVerdict>,
}

impl WaveArc {
    pub fn start(&self) -> &ArcSample {
        &self.samples[0]
    }

    pub fn end(&self) -> &ArcSample {
        self.samples.last().expect("arcs carry at least one sample")
    }

    pub fn speed_range(&self) -> (f64, f64) {
        self.samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s.s), hi.max(s.s)))
    }

    pub fn is_degenerate(&self) -> bool {
        self.samples.len() < 2
    }

    /// Evaluate at a fractional sample index in `[0, len-1]`.
    ///
    /// Between samples the generating curve is followed exactly (Hugoniot
    /// parametrisation, or a partial RK4 step for rarefactions and composites).
    pub fn eval(&self, param: f64, p: &ModelParams) -> ArcSample {
        let n = self.samples.len();
        if n == 1 {
            return self.samples[0];
        }
        let param = param.clamp(0.0, (n - 1) as f64);
        let i = (param.floor() as usize).min(n - 2);
        let f = param - i as f64;
        let (a, b) = (&self.samples[i], &self.samples[i + 1]);
        if f == 0.0 {
            return *a;
        }
        match self.generator {
            Generator::Hugoniot { base } => {
                let z = a.q.z + f * (b.q.z - a.q.z);
                ArcSample::new(hugoniot_point(base, z, p), p)
            }
            Generator::Rarefaction => {
                let h = f * (b.q.z - a.q.z);
                let t = rk4_step(a.q.z, a.q.t, h, p);
                ArcSample::new(ManifoldPoint::on_c(a.q.z + h, t), p)
            }
            Generator::Composite => {
                let (la, lb) = (a.link.expect("composite link"), b.link.expect("composite link"));
                let h = f * (lb.z - la.z);
                let pt = ManifoldPoint::on_c(la.z + h, rk4_step(la.z, la.t, h, p));
                let guess = a.q.z + f * (b.q.z - a.q.z);
                match composite_preimage(pt, guess, p) {
                    Some(q) => ArcSample { q, s: speed(pt, p), link: Some(pt) },
                    None => if f < 0.5 { *a } else { *b },
                }
            }
            Generator::Jump => {
                if f < 0.5 {
                    *a
                } else {
                    *b
                }
            }
        }
    }

    /// `W'` of the sample at a fractional index: the state reached by the wave.
    pub fn right_state(&self, param: f64, p: &ModelParams) -> StatePoint {
        state_wp(self.eval(param, p).q, p)
    }

    /// `W` of the sample at a fractional index.
    pub fn left_state(&self, param: f64, p: &ModelParams) -> StatePoint {
        state_w(self.eval(param, p).q, p)
    }
}

/// Working window and step for curve tracing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct TraceOpts {
    pub z_max: f64,
    /// Base step; the actual step in `z` is `step * max(1, |z|)`.
    pub step: f64,
}

impl Default for TraceOpts {
    fn default() -> Self {
        TraceOpts { z_max: crate::tol::Z_MAX, step: crate::tol::ODE_STEP }
    }
}

impl TraceOpts {
    pub fn step_at(&self, z: f64) -> f64 {
        self.step * z.abs().max(1.0)
    }
}
