//! Quadratic flux, Jacobian spectrum and state-space classification.
//!
//! The flux is
//!
//! ```text
//! f(u,v) = v²/2 + (b1+1)u²/2 + a1 u + a2 v
//! g(u,v) = u v + a3 u + a4 v
//! ```
//!
//! with `b1 > 1` and `c = a3 - a2 > 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol;

/// The six flux coefficients. `c` is always derived as `a3 - a2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub b1: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams { a1: 0.0, a2: 0.0, a3: 1.0, a4: 0.0, b1: 8.0 }
    }
}

impl ModelParams {
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64, b1: f64) -> Result<Self> {
        let p = ModelParams { a1, a2, a3, a4, b1 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.a1, self.a2, self.a3, self.a4, self.b1];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams("coefficients must be finite".into()));
        }
        if self.b1 <= 1.0 {
            return Err(Error::InvalidParams(format!("b1 = {} must exceed 1", self.b1)));
        }
        if self.c() <= 0.0 {
            return Err(Error::InvalidParams(format!("c = a3 - a2 = {} must be positive", self.c())));
        }
        Ok(())
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.a3 - self.a2
    }

    /// Constant added to the shock speed when `a1`, `a4` are nonzero.
    #[inline]
    pub fn speed_offset(&self) -> f64 {
        (self.a4 * (self.b1 + 1.0) - self.a1) / self.b1
    }

    /// `z` of the double contact lines, `1/sqrt(b1+1)`.
    #[inline]
    pub fn z_crit(&self) -> f64 {
        1.0 / (self.b1 + 1.0).sqrt()
    }

    /// Center of the coincidence ellipse in state space.
    pub fn ellipse_center(&self) -> StatePoint {
        StatePoint::new(-(self.a1 - self.a4) / self.b1, -(self.a2 + self.a3) / 2.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StatePoint {
    pub u: f64,
    pub v: f64,
}

impl StatePoint {
    pub const fn new(u: f64, v: f64) -> Self {
        StatePoint { u, v }
    }

    pub fn dist(&self, o: &StatePoint) -> f64 {
        (self.u - o.u).hypot(self.v - o.v)
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }
}

pub fn flux(w: StatePoint, p: &ModelParams) -> (f64, f64) {
    let StatePoint { u, v } = w;
    let f = 0.5 * v * v + 0.5 * (p.b1 + 1.0) * u * u + p.a1 * u + p.a2 * v;
    let g = u * v + p.a3 * u + p.a4 * v;
    (f, g)
}

pub fn jacobian(w: StatePoint, p: &ModelParams) -> [[f64; 2]; 2] {
    let StatePoint { u, v } = w;
    [[(p.b1 + 1.0) * u + p.a1, v + p.a2], [v + p.a3, u + p.a4]]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenData {
    pub alpha1: f64,
    pub alpha2: f64,
    /// `(lambda_s, lambda_f)`; `None` in the elliptic region.
    pub lambda: Option<(f64, f64)>,
}

impl EigenData {
    pub fn lambda_s(&self) -> Option<f64> {
        self.lambda.map(|l| l.0)
    }
    pub fn lambda_f(&self) -> Option<f64> {
        self.lambda.map(|l| l.1)
    }
}

pub fn alpha2(w: StatePoint, p: &ModelParams) -> f64 {
    let a = 2.0 * w.v + p.a2 + p.a3;
    let b = p.b1 * w.u + p.a1 - p.a4;
    a * a + b * b - p.c() * p.c()
}

pub fn eigen(w: StatePoint, p: &ModelParams) -> EigenData {
    let alpha1 = w.u * (p.b1 + 2.0) + p.a1 + p.a4;
    let alpha2 = alpha2(w, p);
    let lambda = if alpha2 >= 0.0 {
        let r = alpha2.sqrt();
        Some(((alpha1 - r) / 2.0, (alpha1 + r) / 2.0))
    } else {
        None
    };
    EigenData { alpha1, alpha2, lambda }
}

/// Discriminant form `(b1 u + a1 - a4)^2 + 4 (v + a3)(v + a2)`.
pub fn e_ss(w: StatePoint, p: &ModelParams) -> f64 {
    let k = p.b1 * w.u + p.a1 - p.a4;
    k * k + 4.0 * (w.v + p.a3) * (w.v + p.a2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionClass {
    Hyperbolic,
    Elliptic,
    Boundary,
}

pub fn classify_state(w: StatePoint, p: &ModelParams) -> RegionClass {
    let a = alpha2(w, p) / (p.c() * p.c());
    if a.abs() <= tol::BOUNDARY_BAND {
        RegionClass::Boundary
    } else if a > 0.0 {
        RegionClass::Hyperbolic
    } else {
        RegionClass::Elliptic
    }
}

/// `F(W) - F(W') - s (W - W')`.
pub fn rh_residual(w: StatePoint, wp: StatePoint, s: f64, p: &ModelParams) -> (f64, f64) {
    let (f, g) = flux(w, p);
    let (fp, gp) = flux(wp, p);
    (f - fp - s * (w.u - wp.u), g - gp - s * (w.v - wp.v))
}

pub fn coincidence_ellipse(p: &ModelParams, n: usize) -> Result<Vec<StatePoint>> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("ellipse needs at least 3 points, got {n}")));
    }
    let ctr = p.ellipse_center();
    let (ru, rv) = (p.c() / p.b1, p.c() / 2.0);
    Ok((0..n)
        .map(|k| {
            let th = std::f64::consts::TAU * k as f64 / n as f64;
            StatePoint::new(ctr.u + ru * th.cos(), ctr.v + rv * th.sin())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn flux_values() {
        assert_eq!(flux(StatePoint::new(0.0, 0.0), &d()), (0.0, 0.0));
        assert_eq!(flux(StatePoint::new(1.0, 0.0), &d()), (4.5, 1.0));
        assert_eq!(flux(StatePoint::new(0.0, 2.0), &d()), (2.0, 0.0));
    }

    #[test]
    fn jacobian_values() {
        assert_eq!(jacobian(StatePoint::new(0.0, 0.0), &d()), [[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(jacobian(StatePoint::new(1.0, 0.0), &d()), [[9.0, 0.0], [1.0, 1.0]]);
    }

    #[test]
    fn jacobian_matches_central_differences() {
        let p = ModelParams::new(0.3, -0.2, 0.7, 0.1, 3.5).unwrap();
        let w = StatePoint::new(0.37, -1.2);
        let j = jacobian(w, &p);
        let h = 1e-6;
        for (col, dw) in [(0, StatePoint::new(h, 0.0)), (1, StatePoint::new(0.0, h))] {
            let plus = flux(StatePoint::new(w.u + dw.u, w.v + dw.v), &p);
            let minus = flux(StatePoint::new(w.u - dw.u, w.v - dw.v), &p);
            let fd = [(plus.0 - minus.0) / (2.0 * h), (plus.1 - minus.1) / (2.0 * h)];
            for row in 0..2 {
                let rel = (fd[row] - j[row][col]).abs() / j[row][col].abs().max(1.0);
                assert!(rel < 1e-6, "row {row} col {col}: {} vs {}", fd[row], j[row][col]);
            }
        }
    }

    #[test]
    fn eigen_values() {
        let e = eigen(StatePoint::new(0.0, 0.0), &d());
        assert_eq!(e.alpha2, 0.0);
        assert_eq!(e.lambda, Some((0.0, 0.0)));
        let e = eigen(StatePoint::new(1.0, 0.0), &d());
        assert_eq!((e.alpha1, e.alpha2), (10.0, 64.0));
        assert_eq!(e.lambda, Some((1.0, 9.0)));
        let e = eigen(StatePoint::new(0.0, -0.5), &d());
        assert_eq!(e.alpha2, -1.0);
        assert!(e.lambda.is_none());
    }

    #[test]
    fn classification() {
        assert_eq!(classify_state(StatePoint::new(0.0, 0.0), &d()), RegionClass::Boundary);
        assert_eq!(classify_state(StatePoint::new(1.0, 0.0), &d()), RegionClass::Hyperbolic);
        assert_eq!(classify_state(StatePoint::new(0.0, -0.5), &d()), RegionClass::Elliptic);
    }

    #[test]
    fn ellipse_geometry() {
        let p = d();
        let c = p.ellipse_center();
        assert_eq!((c.u, c.v), (0.0, -0.5));
        let pts = coincidence_ellipse(&p, 64).unwrap();
        for w in &pts {
            assert!(e_ss(*w, &p).abs() < 1e-10);
        }
        let umax = pts.iter().map(|w| w.u).fold(f64::MIN, f64::max);
        let vmax = pts.iter().map(|w| w.v).fold(f64::MIN, f64::max);
        assert!((umax - 0.125).abs() < 1e-12);
        assert!((vmax - 0.0).abs() < 1e-12);
        assert!(coincidence_ellipse(&p, 2).is_err());
    }

    #[test]
    fn params_reject_bad_values() {
        assert!(ModelParams::new(0.0, 0.0, 1.0, 0.0, 1.0).is_err());
        assert!(ModelParams::new(0.0, 1.0, 1.0, 0.0, 8.0).is_err());
        assert!(ModelParams::new(0.0, 0.0, 1.0, 0.0, f64::NAN).is_err());
    }
}
