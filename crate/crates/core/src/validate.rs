//! Seeded invariant suite behind the `validate` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::flux::{classify_state, eigen, rh_residual, ModelParams, RegionClass, StatePoint};
use crate::hugoniot::{hugoniot_oracle, hugoniot_t, hugoniot_y, partner_lift, lift_speed_gap, sonic_projection};
use crate::integral::ds_dz_rarefaction;
use crate::manifold::{
    hysteresis_point, inflection_t, l2_holds, manifold_to_states, scc_value, son_prime_t, son_prime_value, speed,
    state_wp, states_to_manifold, ManifoldPoint,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub samples: usize,
    pub worst: f64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub seed: u64,
    pub n: usize,
    pub params: ModelParams,
    pub checks: Vec<Check>,
    pub pass: bool,
}

struct Acc {
    name: &'static str,
    samples: usize,
    worst: f64,
    threshold: f64,
}

impl Acc {
    fn new(name: &'static str, threshold: f64) -> Self {
        Acc { name, samples: 0, worst: 0.0, threshold }
    }
    fn push(&mut self, e: f64) {
        self.samples += 1;
        self.worst = if e.is_nan() { f64::INFINITY } else { self.worst.max(e) };
    }
    fn done(self) -> Check {
        Check { name: self.name, samples: self.samples, worst: self.worst, threshold: self.threshold, pass: self.worst < self.threshold }
    }
}

fn hyperbolic_state(rng: &mut ChaCha8Rng, p: &ModelParams) -> StatePoint {
    loop {
        let w = StatePoint::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        if classify_state(w, p) == RegionClass::Hyperbolic && eigen(w, p).alpha2 > 1e-3 * p.c() * p.c() {
            return w;
        }
    }
}

fn nonzero(rng: &mut ChaCha8Rng, r: f64) -> f64 {
    loop {
        let x: f64 = rng.gen_range(-r..r);
        if x.abs() > 1e-2 {
            return x;
        }
    }
}

/// Runs every check on `n` random samples; `n = 0` gives an empty passing report.
pub fn run(seed: u64, n: usize, p: &ModelParams) -> ValidationReport {
    if n == 0 {
        return ValidationReport { seed, n, params: *p, checks: Vec::new(), pass: true };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut oracle = Acc::new("hugoniot_closed_form_vs_oracle", 1e-10);
    let mut rh = Acc::new("rankine_hugoniot_residual", 1e-9);
    let mut round = Acc::new("coordinate_round_trip", 1e-9);
    let mut partner_sign = Acc::new("partner_lift_opposite_sign", 0.5);
    let mut partner_gap = Acc::new("partner_lift_speed_gap", 1e-9);
    let mut sonic = Acc::new("sonic_prime_speed_identity", 1e-9);
    let mut l2 = Acc::new("l2_closed_form_disagreements", 0.5);
    let mut scc = Acc::new("scc_on_characteristic_plane", 1e-10);
    let mut hyst = Acc::new("hysteresis_on_sonic_prime_and_scc", 1e-9);
    let mut infl = Acc::new("rarefaction_speed_stationary_on_inflection", 1e-10);
    for _ in 0..n {
        let w = hyperbolic_state(&mut rng, p);
        let z = nonzero(&mut rng, 5.0);
        let (t, y) = hugoniot_oracle(w, z, p);
        let (tc, yc) = (hugoniot_t(w, z, p), hugoniot_y(w, z, p));
        oracle.push(((tc - t).abs() / (1.0 + t.abs())).max((yc - y).abs() / (1.0 + y.abs())));

        let q = ManifoldPoint::new(nonzero(&mut rng, 5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let st = manifold_to_states(q, p);
        let (r0, r1) = rh_residual(st.w, st.wp, st.s, p);
        let scale = 1.0 + st.w.u.abs().max(st.w.v.abs()).max(st.wp.u.abs()).max(st.wp.v.abs()).powi(2);
        rh.push(r0.hypot(r1) / scale);
        if q.y.abs() > 1e-3 {
            if let Ok(back) = states_to_manifold(st.w, st.wp, p) {
                round.push((back.z - q.z).abs().max((back.t - q.t).abs()).max((back.y - q.y).abs()) / (1.0 + q.t.abs() + q.z.abs()));
            }
        }

        let (z0, t0) = (nonzero(&mut rng, 5.0), nonzero(&mut rng, 5.0));
        let (z1, t1) = partner_lift(z0, t0);
        partner_sign.push(if t0 * t1 < 0.0 { 0.0 } else { 1.0 });
        let (sa, sb) = (speed(ManifoldPoint::on_c(z0, t0), p), speed(ManifoldPoint::on_c(z1, t1), p));
        let gap = (sa - sb).abs();
        partner_gap.push((gap - lift_speed_gap(z0, t0, p)).abs() / (1.0 + gap));

        let (zs, ys) = (nonzero(&mut rng, 3.0), nonzero(&mut rng, 5.0));
        if let Ok(ts) = son_prime_t(zs, ys, p) {
            let qs = ManifoldPoint::new(zs, ts, ys);
            if let Ok(tq) = sonic_projection(qs, p) {
                let s = speed(qs, p);
                sonic.push((s - speed(tq, p)).abs() / (1.0 + s.abs()));
            }
            let zc2 = 1.0 / (p.b1 + 1.0);
            let wp = state_wp(qs, p);
            if (zs * zs - zc2).abs() > 1e-6 {
                if let Some((ls, lf)) = eigen(wp, p).lambda {
                    let s = speed(qs, p);
                    let eps = 1e-9 * (1.0 + s.abs());
                    let brute = ls - eps <= s && s <= lf + eps;
                    l2.push(if brute == l2_holds(qs, p) { 0.0 } else { 1.0 });
                }
            }
        }

        let (zz, tt) = (nonzero(&mut rng, 5.0), nonzero(&mut rng, 5.0));
        let want = 4.0 * p.c().powi(2) * tt * tt * (zz * zz + 1.0).powi(2);
        scc.push((scc_value(ManifoldPoint::on_c(zz, tt), p) - want).abs() / want);

        let h = hysteresis_point(zz, p);
        let hs = (1.0 + zz * zz).powi(5);
        hyst.push((son_prime_value(h, p) / hs).abs().max((scc_value(h, p) / hs).abs()));

        if let Ok(ti) = inflection_t(zz, p) {
            infl.push(ds_dz_rarefaction(zz, ti, p).abs());
        }
    }
    let checks: Vec<Check> = [oracle, rh, round, partner_sign, partner_gap, sonic, l2, scc, hyst, infl].into_iter().map(Acc::done).collect();
    let pass = checks.iter().all(|c| c.pass);
    ValidationReport { seed, n, params: *p, checks, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let r = run(1, 500, &ModelParams::default());
        for c in &r.checks {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn empty_run() {
        let r = run(1, 0, &ModelParams::default());
        assert!(r.pass && r.checks.is_empty());
    }
}
