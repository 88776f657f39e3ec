//! Riemann solutions for a 2x2 system of conservation laws with quadratic
//! flux, built on the wave manifold.
//!
//! A point `(z, t, Y)` of the wave manifold stands for a shock triple
//! `(W, W', s)`. Hugoniot curves, characteristic speeds, sonic surfaces,
//! rarefactions and composites are all traced in these coordinates and
//! projected back to the state plane at the end.
//!
//! ```
//! use wavemanifold::{solve, ModelParams, StatePoint, WaveType};
//!
//! let p = ModelParams::default();
//! let left = StatePoint::new(-0.125, 3.5);
//! let right = StatePoint::new(9.048076925, 14.03846154);
//! let sol = solve(left, right, &p).unwrap();
//! assert_eq!(sol.wave_types(), vec![WaveType::S1, WaveType::R2]);
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod arc;
pub mod error;
pub mod flux;
pub mod hugoniot;
pub mod integral;
pub mod io;
pub mod manifold;
pub mod riemann;
pub mod svg;
pub mod tol;
pub mod validate;
pub mod waves;

pub use arc::{ArcKind, StopEvent, TraceOpts, WaveArc};
pub use error::{Error, Result};
pub use flux::{classify_state, eigen, flux, rh_residual, ModelParams, RegionClass, StatePoint};
pub use hugoniot::{hugoniot_from_state, lax_classify, LaxKind, LaxVerdict};
pub use manifold::{manifold_to_states, speed, states_to_manifold, ManifoldPoint, StateTriple};
pub use riemann::{continuity_probe, lift_state, solve, LiftResult, RiemannSolution, Wave, WaveType};
pub use waves::{backward_wave_sequence, classify_cs_region, forward_wave_curve, saturate, CsRegion, Separatrices, WaveCurve};
