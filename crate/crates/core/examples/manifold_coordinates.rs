//! Shock triples from `(z, t, Y)` and back.

use wavemanifold::{manifold_to_states, states_to_manifold, ManifoldPoint, ModelParams};

fn main() {
    let p = ModelParams::default();
    for (z, t) in [(-5.0, -0.065), (-1.0, -4.0), (1.0, -2.0), (2.0, 2.0)] {
        let st = manifold_to_states(ManifoldPoint::on_c(z, t), &p);
        println!("(z={z:>4}, t={t:>6}, Y=0) -> W = ({:.10}, {:.10}), s = {:.6}", st.w.u, st.w.v, st.s);
    }
    let q = ManifoldPoint::new(0.7, -1.3, 0.4);
    let st = manifold_to_states(q, &p);
    let back = states_to_manifold(st.w, st.wp, &p).unwrap();
    println!("round trip {q:?} -> {back:?}");
}
