//! The wave manifold in `(z, t, Y)` coordinates.
//!
//! A point `Q = (z, t, Y)` encodes a shock triple `(W, W', s)`: `Y = v - v'`,
//! `X = u - u' = z Y`, and `t` measures the position along the rules of the
//! characteristic plane `Y = 0`. The reconstruction goes through
//!
//! ```text
//! Ũ  = c [2z/(z²+1) + t(z²-1)]      V1 = c [1/(z²+1) + t z]
//! U  = (Ũ - a1 + a4)/b1             V  = V1 - a3
//! u  = U + zY/2   v  = V + Y/2      u' = U - zY/2   v' = V - Y/2
//! s  = U + a4 + z V1
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flux::{alpha2, ModelParams, StatePoint};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ManifoldPoint {
    pub z: f64,
    pub t: f64,
    #[serde(rename = "Y")]
    pub y: f64,
}

impl ManifoldPoint {
    pub const fn new(z: f64, t: f64, y: f64) -> Self {
        ManifoldPoint { z, t, y }
    }

    /// Point on the characteristic plane.
    pub const fn on_c(z: f64, t: f64) -> Self {
        ManifoldPoint { z, t, y: 0.0 }
    }

    /// `Y -> -Y`, exchanging the roles of `W` and `W'`.
    pub fn reflect(self) -> Self {
        ManifoldPoint { y: -self.y, ..self }
    }

    pub fn x(&self) -> f64 {
        self.z * self.y
    }

    pub fn is_finite(&self) -> bool {
        self.z.is_finite() && self.t.is_finite() && self.y.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StateTriple {
    pub w: StatePoint,
    pub wp: StatePoint,
    pub s: f64,
}

fn u_tilde(z: f64, t: f64, c: f64) -> f64 {
    c * (2.0 * z / (z * z + 1.0) + t * (z * z - 1.0))
}

fn v_one(z: f64, t: f64, c: f64) -> f64 {
    c * (1.0 / (z * z + 1.0) + t * z)
}

/// Midpoint `(U, V)` of the pair of states.
pub fn midpoint(q: ManifoldPoint, p: &ModelParams) -> StatePoint {
    let c = p.c();
    let uu = (u_tilde(q.z, q.t, c) - p.a1 + p.a4) / p.b1;
    let vv = v_one(q.z, q.t, c) - p.a3;
    StatePoint::new(uu, vv)
}

/// Left state `W(Q)`.
pub fn state_w(q: ManifoldPoint, p: &ModelParams) -> StatePoint {
    let m = midpoint(q, p);
    StatePoint::new(m.u + 0.5 * q.z * q.y, m.v + 0.5 * q.y)
}

/// Right state `W'(Q)`.
pub fn state_wp(q: ManifoldPoint, p: &ModelParams) -> StatePoint {
    state_w(q.reflect(), p)
}

pub fn speed(q: ManifoldPoint, p: &ModelParams) -> f64 {
    let m = midpoint(q, p);
    m.u + p.a4 + q.z * v_one(q.z, q.t, p.c())
}

pub fn manifold_to_states(q: ManifoldPoint, p: &ModelParams) -> StateTriple {
    StateTriple { w: state_w(q, p), wp: state_wp(q, p), s: speed(q, p) }
}

/// Inverse of [`manifold_to_states`] for a pair related by a shock.
///
/// `t` is recovered by least squares from the two defining relations, which
/// are consistent whenever the pair satisfies the jump condition.
pub fn states_to_manifold(w: StatePoint, wp: StatePoint, p: &ModelParams) -> Result<ManifoldPoint> {
    let y = w.v - wp.v;
    if y.abs() < 1e-12 {
        return Err(Error::DegenerateDirection);
    }
    let z = (w.u - wp.u) / y;
    let c = p.c();
    let uu = 0.5 * (w.u + wp.u);
    let vv = 0.5 * (w.v + wp.v);
    let r1 = p.b1 * uu + p.a1 - p.a4 - c * 2.0 * z / (z * z + 1.0);
    let r2 = vv + p.a3 - c / (z * z + 1.0);
    let k1 = z * z - 1.0;
    let t = (r1 * k1 + r2 * z) / (c * (k1 * k1 + z * z));
    Ok(ManifoldPoint::new(z, t, y))
}

/// Coefficients `(A, B, C)` with `son = A t + B Y + C` and `son' = A t - B Y + C`.
pub fn son_coeffs(z: f64, p: &ModelParams) -> (f64, f64, f64) {
    let (b1, c) = (p.b1, p.c());
    let z2 = z * z;
    let a = -2.0 * c * z * ((b1 + 1.0) * z2 * z2 + (b1 + 4.0) * z2 + 3.0);
    let b = -((b1 + 1.0) * z2 * z2 + b1 * z2 - 1.0);
    let cc = -2.0 * c * ((b1 - 1.0) * z2 + 1.0);
    (a, b, cc)
}

pub fn son_value(q: ManifoldPoint, p: &ModelParams) -> f64 {
    let (a, b, c) = son_coeffs(q.z, p);
    a * q.t + b * q.y + c
}

pub fn son_prime_value(q: ManifoldPoint, p: &ModelParams) -> f64 {
    son_value(q.reflect(), p)
}

/// `t` of the point of Son' over `(z, Y)`; undefined at `z = 0`.
pub fn son_prime_t(z: f64, y: f64, p: &ModelParams) -> Result<f64> {
    let (a, b, c) = son_coeffs(z, p);
    if a == 0.0 {
        return Err(Error::PoleAtZero);
    }
    Ok((b * y - c) / a)
}

/// `t` of the point of Son over `(z, Y)`; undefined at `z = 0`.
pub fn son_t(z: f64, y: f64, p: &ModelParams) -> Result<f64> {
    son_prime_t(z, -y, p)
}

/// Inflection locus: the `t` where Son and Son' meet the characteristic plane.
pub fn inflection_t(z: f64, p: &ModelParams) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::PoleAtZero);
    }
    let b1 = p.b1;
    let z2 = z * z;
    Ok(-((b1 - 1.0) * z2 + 1.0) / (z * ((b1 + 1.0) * z2 * z2 + (b1 + 4.0) * z2 + 3.0)))
}

/// The two double contact lines `(z_crit, t)`: slow one first.
pub fn double_sonic(p: &ModelParams) -> [(f64, f64); 2] {
    let r = (p.b1 + 1.0).sqrt();
    let t1 = -p.b1 * r / (2.0 * (p.b1 + 2.0));
    [(1.0 / r, t1), (-1.0 / r, -t1)]
}

/// Point of the hysteresis' curve over `z`.
pub fn hysteresis_point(z: f64, p: &ModelParams) -> ManifoldPoint {
    let (b1, c) = (p.b1, p.c());
    let z2 = z * z;
    let d = (b1 + 1.0).powi(2) * z2 * z2 + 2.0 * (b1 + 3.0) * z2 + 1.0;
    let q = (b1 - 1.0) * z2 + 1.0;
    let t = -(b1 + 2.0) * z * q / ((z2 + 1.0) * d);
    let y = -2.0 * c * q / d;
    ManifoldPoint::new(z, t, y)
}

/// Signed value whose zero set is the saturated coincidence surface.
pub fn scc_value(q: ManifoldPoint, p: &ModelParams) -> f64 {
    let (b1, c) = (p.b1, p.c());
    let ManifoldPoint { z, t, y } = q;
    let z2p = z * z + 1.0;
    let tf1 = z2p * (b1 * b1 * z * z + 4.0);
    let tf2 = 4.0 * c * z * z2p * (b1 * z * z - b1 + 4.0) * t + 8.0 * c * ((b1 - 1.0) * z * z + 1.0);
    let tf3 = 4.0 * c * c * t * t * z2p.powi(3);
    (tf1 * y * y + tf2 * y + tf3) / z2p
}

/// `alpha_2` of `W(Q)`; zero on the lift of the ellipse boundary.
pub fn coincidence_surface_value(q: ManifoldPoint, p: &ModelParams) -> f64 {
    alpha2(state_w(q, p), p)
}

/// `alpha_2` of `W'(Q)`.
pub fn coincidence_prime_value(q: ManifoldPoint, p: &ModelParams) -> f64 {
    coincidence_surface_value(q.reflect(), p)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceEval {
    pub son: f64,
    pub son_prime: f64,
    pub scc: f64,
    pub alpha_m: f64,
    pub alpha_m_prime: f64,
}

pub fn surfaces(q: ManifoldPoint, p: &ModelParams) -> SurfaceEval {
    SurfaceEval {
        son: son_value(q, p),
        son_prime: son_prime_value(q, p),
        scc: scc_value(q, p),
        alpha_m: coincidence_surface_value(q, p),
        alpha_m_prime: coincidence_prime_value(q, p),
    }
}

/// Closed-form condition under which a shock on Son' has its speed between
/// the characteristic speeds of its right state.
pub fn l2_holds(q: ManifoldPoint, p: &ModelParams) -> bool {
    q.z * q.z < 1.0 / (p.b1 + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    fn of(x: f64) -> Sign {
        if x >= 0.0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// The twelve regions cut out by the characteristic, sonic and sonic' surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionId {
    /// Between Son and Son' for `z² > 1/(b1+1)`, away from the characteristic plane.
    SSPrime { z: Sign, y: Sign },
    Lateral { z: Sign, y: Sign },
    OverBridge,
    UnderBridge,
    OverTunnel,
    UnderTunnel,
}

pub fn region_of(q: ManifoldPoint, p: &ModelParams) -> Result<RegionId> {
    let son = son_value(q, p);
    let sonp = son_prime_value(q, p);
    let near = |v: f64| tol::scaled(v, q.z).abs() <= tol::SURFACE;
    if near(q.y) {
        return Err(Error::AmbiguousOnSurface("characteristic"));
    }
    if near(son) {
        return Err(Error::AmbiguousOnSurface("sonic"));
    }
    if near(sonp) {
        return Err(Error::AmbiguousOnSurface("sonic'"));
    }
    let inner = q.z * q.z < 1.0 / (p.b1 + 1.0);
    let up = q.y > 0.0;
    let id = if son * sonp < 0.0 {
        match (inner, up) {
            (true, true) => RegionId::OverBridge,
            (true, false) => RegionId::UnderTunnel,
            (false, _) => RegionId::SSPrime { z: Sign::of(q.z), y: Sign::of(q.y) },
        }
    } else if son < 0.0 {
        if up {
            RegionId::UnderBridge
        } else {
            RegionId::OverTunnel
        }
    } else {
        RegionId::Lateral { z: Sign::of(q.z), y: Sign::of(q.y) }
    };
    Ok(id)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn anchors() {
        let p = d();
        let cases = [
            ((-5.0, -0.065), (-0.2430769231, -0.6365384615)),
            ((-1.0, -4.0), (-0.125, 3.5)),
            ((1.0, -2.0), (0.125, -2.5)),
            ((2.0, 2.0), (0.85, 3.2)),
        ];
        for ((z, t), (u, v)) in cases {
            let tr = manifold_to_states(ManifoldPoint::on_c(z, t), &p);
            assert!((tr.w.u - u).abs() < 1e-9 && (tr.w.v - v).abs() < 1e-9, "{z} {t}: {:?}", tr.w);
            assert_eq!(tr.w, tr.wp);
        }
        let tr = manifold_to_states(ManifoldPoint::on_c(0.0, 0.0), &p);
        assert_eq!((tr.w.u, tr.w.v, tr.s), (0.0, 0.0, 0.0));
    }

    #[test]
    fn speed_values() {
        let p = d();
        assert_eq!(speed(ManifoldPoint::new(0.0, 0.0, 3.0), &p), 0.0);
        assert!((speed(ManifoldPoint::on_c(1.0, 0.0), &p) - 0.625).abs() < 1e-15);
        // hand evaluation: (9*0.065*(-625) ... ) collected over 8*26
        let z: f64 = -5.0;
        let t = -0.065;
        let direct = ((9.0 * t * z.powi(4)) + 8.0 * z * z * t + 10.0 * z - t) / (8.0 * (z * z + 1.0));
        let s = speed(ManifoldPoint::on_c(z, t), &p);
        assert!((s - direct).abs() < 1e-14);
        assert!((s + 2.0603846153846).abs() < 1e-12);
    }

    #[test]
    fn round_trip() {
        let p = d();
        for q in [ManifoldPoint::new(1.0, -2.0, 0.5), ManifoldPoint::new(-5.0, -0.065, 0.3)] {
            let tr = manifold_to_states(q, &p);
            let back = states_to_manifold(tr.w, tr.wp, &p).unwrap();
            assert!((back.z - q.z).abs() < 1e-9);
            assert!((back.t - q.t).abs() < 1e-9);
            assert!((back.y - q.y).abs() < 1e-9);
        }
        let w = StatePoint::new(0.2, 0.3);
        assert!(matches!(states_to_manifold(w, w, &p), Err(Error::DegenerateDirection)));
    }

    #[test]
    fn son_on_z_zero() {
        let p = d();
        for t in [-3.0, 0.0, 2.5] {
            for y in [-1.0, 0.5, 4.0] {
                let q = ManifoldPoint::new(0.0, t, y);
                assert_eq!(son_value(q, &p), y - 2.0);
                assert_eq!(son_prime_value(q, &p), -y - 2.0);
            }
        }
    }

    #[test]
    fn inflection_values() {
        let p = d();
        assert!((inflection_t(1.0, &p).unwrap() + 1.0 / 3.0).abs() < 1e-15);
        assert!((inflection_t(1.0 / 3.0, &p).unwrap() + 1.2).abs() < 1e-14);
        assert!((inflection_t(-1.0, &p).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(matches!(inflection_t(0.0, &p), Err(Error::PoleAtZero)));
    }

    #[test]
    fn double_sonic_values() {
        let [(z1, t1), (z2, t2)] = double_sonic(&d());
        assert!((z1 - 1.0 / 3.0).abs() < 1e-15);
        assert!((t1 + 1.2).abs() < 1e-12);
        assert_eq!((z2, t2), (-z1, -t1));
        for y in [-3.0, 0.0, 1.7] {
            for (z, t) in [(z1, t1), (z2, t2)] {
                let q = ManifoldPoint::new(z, t, y);
                assert!(son_value(q, &d()).abs() < 1e-12);
                assert!(son_prime_value(q, &d()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hysteresis_values() {
        let p = d();
        let h0 = hysteresis_point(0.0, &p);
        assert_eq!((h0.t, h0.y), (0.0, -2.0));
        let h1 = hysteresis_point(1.0, &p);
        assert!((h1.t + 5.0 / 13.0).abs() < 1e-15 && (h1.y + 2.0 / 13.0).abs() < 1e-15);
        for z in [-2.0, -0.3, 0.4, 3.0] {
            let h = hysteresis_point(z, &p);
            assert!(son_prime_value(h, &p).abs() < 1e-10);
            assert!(scc_value(h, &p).abs() < 1e-10);
        }
    }

    #[test]
    fn scc_on_characteristic() {
        let p = d();
        assert_eq!(scc_value(ManifoldPoint::on_c(0.7, 0.0), &p), 0.0);
        let q = ManifoldPoint::on_c(0.7, -0.4);
        let expect = 4.0 * 0.16 * (0.49f64 + 1.0).powi(2);
        assert!((scc_value(q, &p) - expect).abs() < 1e-12);
    }

    #[test]
    fn l2_boundaries() {
        let p = d();
        assert!(l2_holds(ManifoldPoint::new(0.2, 0.0, 1.0), &p));
        assert!(!l2_holds(ManifoldPoint::new(1.0, 0.0, 1.0), &p));
        assert!(!l2_holds(ManifoldPoint::new(p.z_crit(), 0.0, 1.0), &p));
        assert!(!l2_holds(ManifoldPoint::new(-p.z_crit(), 0.0, 1.0), &p));
    }

    #[test]
    fn regions_at_z_zero() {
        let p = d();
        let r = |y| region_of(ManifoldPoint::new(0.0, 0.0, y), &p).unwrap();
        assert_eq!(r(3.0), RegionId::OverBridge);
        assert_eq!(r(1.0), RegionId::UnderBridge);
        assert_eq!(r(-1.0), RegionId::OverTunnel);
        assert_eq!(r(-3.0), RegionId::UnderTunnel);
        assert!(region_of(ManifoldPoint::new(0.0, 0.0, 2.0), &p).is_err());
        assert!(region_of(ManifoldPoint::new(0.3, 0.1, 0.0), &p).is_err());
    }

    #[test]
    fn regions_outside_double_contact() {
        let p = d();
        // z = 1: inflection at t = -1/3; Son is 48 t - 16 Y ... zero where Y = -3t - 1
        let q = ManifoldPoint::new(1.0, -1.0 / 3.0, 5.0);
        assert_eq!(region_of(q, &p).unwrap(), RegionId::SSPrime { z: Sign::Pos, y: Sign::Pos });
        let q = ManifoldPoint::new(-1.0, 1.0 / 3.0, -5.0);
        assert_eq!(region_of(q, &p).unwrap(), RegionId::SSPrime { z: Sign::Neg, y: Sign::Neg });
        let q = ManifoldPoint::new(1.0, -3.0, 0.1);
        assert_eq!(region_of(q, &p).unwrap(), RegionId::Lateral { z: Sign::Pos, y: Sign::Pos });
        let q = ManifoldPoint::new(1.0, 1.0, 0.1);
        assert_eq!(region_of(q, &p).unwrap(), RegionId::UnderBridge);
    }
}
