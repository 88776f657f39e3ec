//! Regions I, II and III of the slow characteristic plane.

use wavemanifold::{classify_cs_region, ModelParams, Separatrices, TraceOpts};

fn main() {
    let p = ModelParams::default();
    let seps = Separatrices::new(&p, &TraceOpts::default());
    println!("separatrix meets t = 0 at z_hat = {:.8}", seps.z_hat);
    for (z, t) in [(-5.0, -0.065), (1.0, -1.0), (-1.0, -4.0), (1.0, -2.0)] {
        let r = classify_cs_region(z, t, &seps, &p).unwrap();
        println!("(z={z:>4}, t={t:>6}) -> {} ({r:?})", r.label());
    }
}
