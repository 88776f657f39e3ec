//! The seeded invariant suite.

use wavemanifold::{validate, ModelParams};

fn main() {
    let rep = validate::run(7, 1000, &ModelParams::default());
    for c in &rep.checks {
        println!("{:<45} worst {:.2e} (< {:.0e}) {}", c.name, c.worst, c.threshold, if c.pass { "ok" } else { "FAIL" });
    }
}
