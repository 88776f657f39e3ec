use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use wavemanifold::io::{export, to_json, write_files, ExportKind, Format, RunConfig};
use wavemanifold::{classify_cs_region, eigen, lift_state, riemann, svg, validate, RegionClass, Separatrices, StatePoint};

#[derive(Parser)]
#[command(name = "wavemanifold", version, about = "Wave-manifold Riemann solver")]
struct Cli {
    /// JSON or key=value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Parameter overrides, e.g. --params b1=4 a3=2.
    #[arg(long, global = true, num_args = 1..)]
    params: Vec<String>,
    /// Output directory; results go to stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Region class, eigenvalues and lifts of a state.
    #[command(allow_negative_numbers = true)]
    Classify { u: f64, v: f64 },
    /// Solve the Riemann problem between two states.
    #[command(allow_negative_numbers = true)]
    Solve { ul: f64, vl: f64, ur: f64, vr: f64 },
    /// Run the seeded invariant suite.
    Validate {
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Export geometry: characteristic, son, sonp, scc, inflection, hysteresis, ellipse, wavecurve, saturated.
    #[command(allow_negative_numbers = true)]
    Export {
        which: String,
        #[arg(long)]
        u: Option<f64>,
        #[arg(long)]
        v: Option<f64>,
    },
}

#[derive(Serialize)]
struct Classification {
    state: [f64; 2],
    class: RegionClass,
    alpha1: f64,
    alpha2: f64,
    lambda: Option<(f64, f64)>,
    lift: Option<wavemanifold::LiftResult>,
    region: Option<&'static str>,
}

fn emit(out: &Option<PathBuf>, name: &str, body: &str) -> wavemanifold::Result<()> {
    match out {
        Some(dir) => {
            for path in write_files(dir, &vec![(name.to_string(), body.to_string())])? {
                eprintln!("wrote {}", path.display());
            }
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn run(cli: Cli) -> wavemanifold::Result<()> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::from_path(path)?,
        None => RunConfig::default(),
    };
    cfg.apply_overrides(&cli.params)?;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    let format: Format = cli.format.parse()?;
    let p = cfg.params;
    match cli.cmd {
        Cmd::Classify { u, v } => {
            let w = StatePoint::new(u, v);
            let e = eigen(w, &p);
            let lift = lift_state(w, &p).ok();
            let region = lift.and_then(|l| {
                let seps = Separatrices::new(&p, &cfg.trace_opts());
                classify_cs_region(l.us.z, l.us.t, &seps, &p).ok().map(|r| r.label())
            });
            let rep = Classification {
                state: [u, v],
                class: wavemanifold::classify_state(w, &p),
                alpha1: e.alpha1,
                alpha2: e.alpha2,
                lambda: e.lambda,
                lift,
                region,
            };
            emit(&cli.out, "classify.json", &to_json(&rep)?)
        }
        Cmd::Solve { ul, vl, ur, vr } => {
            let (sol, _) = riemann::solve_with(StatePoint::new(ul, vl), StatePoint::new(ur, vr), &cfg.trace_opts(), &p)?;
            match format {
                Format::Svg => emit(&cli.out, "solution.svg", &svg::solution_svg(&sol, &p)),
                Format::Json => emit(&cli.out, "solution.json", &to_json(&sol)?),
                Format::Csv => {
                    let mut s = String::from("wave,type,u,v\n");
                    for (i, w) in sol.waves.iter().enumerate() {
                        let pts = if w.samples.is_empty() { vec![w.from, w.to] } else { w.samples.clone() };
                        for x in pts {
                            s.push_str(&format!("{i},{},{},{}\n", w.kind.name(), wavemanifold::io::fmt12(x.u), wavemanifold::io::fmt12(x.v)));
                        }
                    }
                    emit(&cli.out, "solution.csv", &s)
                }
            }
        }
        Cmd::Validate { n } => {
            let rep = validate::run(cfg.seed, n, &p);
            emit(&cli.out, "validate.json", &to_json(&rep)?)?;
            if rep.pass {
                Ok(())
            } else {
                Err(wavemanifold::Error::InvalidInput("invariant checks failed".into()))
            }
        }
        Cmd::Export { which, u, v } => {
            let kind: ExportKind = which.parse()?;
            let state = match (u, v) {
                (Some(u), Some(v)) => Some(StatePoint::new(u, v)),
                _ => None,
            };
            let files = export(kind, state, format, &cfg)?;
            let dir = cli.out.clone().unwrap_or_else(|| cfg.output_dir.clone());
            for path in write_files(&dir, &files)? {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
