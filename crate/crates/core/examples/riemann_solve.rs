//! Riemann problems with shock, rarefaction and composite waves.

use wavemanifold::{solve, ModelParams, StatePoint};

fn main() {
    let p = ModelParams::default();
    let cases = [
        ("shock + right characteristic shock + rarefaction", (-0.2430769231, -0.6365384615), (0.85, 3.2)),
        ("shock + rarefaction", (-0.125, 3.5), (9.048076925, 14.03846154)),
        ("rarefaction + composite + rarefaction", (0.125, -2.5), (3.0, 4.0)),
    ];
    for (label, l, r) in cases {
        let sol = solve(StatePoint::new(l.0, l.1), StatePoint::new(r.0, r.1), &p).unwrap();
        println!("{label}");
        for w in &sol.waves {
            let sp = match (w.speed, w.speed_range) {
                (Some(s), _) => format!("s = {s:.6}"),
                (_, Some([a, b])) => format!("s from {a:.6} to {b:.6}"),
                _ => String::new(),
            };
            println!("  {:<9} ({:.6}, {:.6}) -> ({:.6}, {:.6})  {sp}", w.kind.name(), w.from.u, w.from.v, w.to.u, w.to.v);
        }
    }
}
