//! A 1-rarefaction that reaches the inflection locus and the composite curve
//! that continues it on sonic'.

use wavemanifold::integral::{integrate_composite, integrate_rarefaction, Mode};
use wavemanifold::{ModelParams, TraceOpts};

fn main() {
    let p = ModelParams::default();
    let o = TraceOpts::default();
    let r = integrate_rarefaction((-1.0, -4.0), Mode::Forward, &o, &p).unwrap();
    let end = r.samples.last().unwrap();
    println!("R1: {} steps, stop {:?} at z = {:.6}, t = {:.6}, s = {:.6}", r.samples.len(), r.stop, end.q.z, end.q.t, end.s);
    let back = -(end.q.z + 1.0).signum();
    let c = integrate_composite((end.q.z, end.q.t), back, Mode::Forward, Some(r.samples[0].s), &o, &p).unwrap();
    let last = c.samples.last().unwrap();
    println!("C1: {} steps, stop {:?} at {:?}, s = {:.6}", c.samples.len(), c.stop, last.q, last.s);
}
