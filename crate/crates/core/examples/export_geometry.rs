//! Writes surface grids, polylines and a solution plot to a temporary directory.

use wavemanifold::io::{export, to_json, write_files, ExportKind, Format, RunConfig};
use wavemanifold::{solve, svg, ModelParams, StatePoint};

fn main() {
    let cfg = RunConfig::default();
    let dir = std::env::temp_dir().join("wavemanifold-export");
    for (kind, fmt) in [(ExportKind::Son, Format::Csv), (ExportKind::Inflection, Format::Csv), (ExportKind::Ellipse, Format::Svg)] {
        let files = export(kind, None, fmt, &cfg).unwrap();
        for path in write_files(&dir, &files).unwrap() {
            println!("wrote {}", path.display());
        }
    }
    let p = ModelParams::default();
    let sol = solve(StatePoint::new(0.125, -2.5), StatePoint::new(3.0, 4.0), &p).unwrap();
    let files = vec![
        ("solution.json".to_string(), to_json(&sol).unwrap()),
        ("solution.svg".to_string(), svg::solution_svg(&sol, &p)),
    ];
    for path in write_files(&dir, &files).unwrap() {
        println!("wrote {}", path.display());
    }
}
