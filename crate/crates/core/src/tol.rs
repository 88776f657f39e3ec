//! Numerical tolerances and working bounds shared across modules.

/// Half-width of the band around the coincidence ellipse reported as `Boundary`.
pub const BOUNDARY_BAND: f64 = 1e-12;

/// Membership tolerance for signed surface values, after scaling by `(1+|z|)^5`.
pub const SURFACE: f64 = 1e-12;

/// Working bound on `|z|`; beyond it a curve is said to escape to the plane at infinity.
pub const Z_MAX: f64 = 1e3;

/// Base RK4 step in `z`.
pub const ODE_STEP: f64 = 1e-3;

/// Event localisation tolerance (bisection stops below this in the parameter).
pub const EVENT: f64 = 1e-10;

/// Tolerance for speed equalities (characteristic shocks, projections).
pub const SPEED: f64 = 1e-8;

/// Distance at which composite integration halts near a field singularity.
pub const SINGULAR: f64 = 1e-6;

/// Relative tolerance for the two lifts of a state to be considered distinct.
pub const LIFT: f64 = 1e-12;

/// Scaled surface value, comparable against [`SURFACE`].
pub fn scaled(value: f64, z: f64) -> f64 {
    value / (1.0 + z.abs()).powi(5)
}
