//! Lax verdicts along forward and backward shock arcs.

use wavemanifold::hugoniot::{backward_shock_arc, forward_shock_arc};
use wavemanifold::{ManifoldPoint, ModelParams, TraceOpts};

fn main() {
    let p = ModelParams::default();
    let o = TraceOpts::default();
    let h1 = forward_shock_arc(ManifoldPoint::on_c(-5.0, -0.065), &o, &p).unwrap();
    let h2 = backward_shock_arc(ManifoldPoint::on_c(2.0, 2.0), &o, &p).unwrap();
    for arc in [&h1, &h2] {
        let (lo, hi) = arc.speed_range();
        println!("{:?}: {} samples, stop {:?}, s in [{lo:.4}, {hi:.4}]", arc.kind, arc.samples.len(), arc.stop);
        println!("  verdict {:?}", arc.verdict.unwrap());
    }
}
