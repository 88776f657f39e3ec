//! Sonic, sonic', inflection, double contact, hysteresis' and SCC, and the
//! twelve regions they cut out.

use wavemanifold::manifold::{
    double_sonic, hysteresis_point, inflection_t, region_of, scc_value, son_prime_value, son_value,
};
use wavemanifold::{ManifoldPoint, ModelParams};

fn main() {
    let p = ModelParams::default();
    println!("Son at z = 0 is the line Y = 2c: son(0, 5, 2) = {}", son_value(ManifoldPoint::new(0.0, 5.0, 2.0), &p));
    for (z, t) in double_sonic(&p) {
        println!("double contact z = {z:.6}, t = {t:.6}; inflection there: {:.6}", inflection_t(z, &p).unwrap());
    }
    let h = hysteresis_point(0.8, &p);
    println!("hysteresis' at z = 0.8: {h:?}, son' = {:.1e}, scc = {:.1e}", son_prime_value(h, &p), scc_value(h, &p));
    for q in [ManifoldPoint::new(0.1, -1.0, 3.0), ManifoldPoint::new(2.0, 1.0, -4.0), ManifoldPoint::new(-0.1, 2.0, -3.0)] {
        println!("{q:?} in {:?}", region_of(q, &p).unwrap());
    }
}
