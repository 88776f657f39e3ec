//! Hugoniot curve of a state, its crossings with the characteristic plane,
//! and the speed gap between them.

use wavemanifold::hugoniot::{c_crossings, hugoniot_oracle, hugoniot_point, partner_lift, lift_speed_gap};
use wavemanifold::{hugoniot_from_state, rh_residual, speed, ManifoldPoint, ModelParams, StatePoint};
use wavemanifold::manifold::{state_w, state_wp};

fn main() {
    let p = ModelParams::default();
    let w0 = StatePoint::new(-0.2430769231, -0.6365384615);
    let q = hugoniot_point(w0, -5.0, &p);
    println!("closed form at z=-5: t = {:.10}, Y = {:.1e}", q.t, q.y);
    println!("linear-solve oracle:  {:?}", hugoniot_oracle(w0, -5.0, &p));

    let curve = hugoniot_from_state(w0, &p);
    let worst = curve
        .samples
        .iter()
        .map(|c| {
            let q = ManifoldPoint::new(c.z, c.t, c.y);
            let (a, b) = rh_residual(state_w(q, &p), state_wp(q, &p), c.s, &p);
            a.hypot(b)
        })
        .fold(0.0, f64::max);
    println!("{} samples, worst RH residual {worst:.1e}", curve.samples.len());

    let (slow, fast) = c_crossings(w0, &p).unwrap();
    println!("slow lift {slow:?}\nfast lift {fast:?}");
    let (z1, t1) = partner_lift(slow.z, slow.t);
    println!("partner ({z1:.6}, {t1:.6}); speed gap {:.6} = {:.6}",
        speed(fast, &p) - speed(slow, &p), lift_speed_gap(slow.z, slow.t, &p));
}
