//! Forward wave curve from the left state, backward sequence from the right
//! state, and the saturated sheets of the forward curve.

use wavemanifold::{backward_wave_sequence, forward_wave_curve, saturate, ManifoldPoint, ModelParams, Separatrices, TraceOpts};

fn main() {
    let p = ModelParams::default();
    let o = TraceOpts::default();
    let seps = Separatrices::new(&p, &o);
    for q in [ManifoldPoint::on_c(-5.0, -0.065), ManifoldPoint::on_c(-1.0, -4.0), ManifoldPoint::on_c(1.0, -2.0)] {
        let c = forward_wave_curve(q, &seps, &o, &p).unwrap();
        println!("forward from ({}, {}): {:?}, region {:?}", q.z, q.t, c.kinds(), c.region);
    }
    let b = backward_wave_sequence(ManifoldPoint::on_c(2.0, 2.0), &o, &p).unwrap();
    println!("backward from (2, 2): {:?}", b.kinds());
    let c = forward_wave_curve(ManifoldPoint::on_c(-5.0, -0.065), &seps, &o, &p).unwrap();
    let sat = saturate(&c, 100, 20.0, &p).unwrap();
    for s in &sat.sheets {
        println!("saturated {:?}: {} fibers x {} points", s.kind, s.fibers.len(), s.zs.len());
    }
}
