//! How far the middle states move when the data are perturbed.

use wavemanifold::{continuity_probe, ModelParams, StatePoint};

fn main() {
    let p = ModelParams::default();
    let l = StatePoint::new(-0.2430769231, -0.6365384615);
    let r = StatePoint::new(0.85, 3.2);
    let rep = continuity_probe(l, r, 1e-4, 8, 42, &p).unwrap();
    println!("{:?}: max displacement {:.3e}, ratio {:.3}, sequence changes {}",
        rep.base_sequence, rep.max_displacement, rep.ratio, rep.sequence_changes);
}
