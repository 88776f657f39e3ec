//! Flux, Jacobian spectrum and the hyperbolic/elliptic split of the state plane.

use wavemanifold::flux::{coincidence_ellipse, e_ss, jacobian};
use wavemanifold::{classify_state, eigen, ModelParams, StatePoint};

fn main() {
    let p = ModelParams::default();
    for w in [StatePoint::new(-0.125, 3.5), StatePoint::new(0.0, -0.5), StatePoint::new(0.0, 0.0)] {
        let e = eigen(w, &p);
        println!("W = ({:>7}, {:>5})  {:?}  lambda = {:?}", w.u, w.v, classify_state(w, &p), e.lambda);
        println!("  DF = {:?}", jacobian(w, &p));
    }
    let ring = coincidence_ellipse(&p, 8).unwrap();
    let worst = ring.iter().map(|w| e_ss(*w, &p).abs()).fold(0.0, f64::max);
    println!("ellipse center {:?}, max |E_ss| on 8 boundary points: {worst:.1e}", p.ellipse_center());
}
