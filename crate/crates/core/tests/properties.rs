use proptest::prelude::*;
use wavemanifold::hugoniot::{hugoniot_oracle, hugoniot_point, partner_lift, lift_speed_gap};
use wavemanifold::integral::{ds_dz_rarefaction, rarefaction_field};
use wavemanifold::manifold::{inflection_t, state_w};
use wavemanifold::{
    classify_cs_region, eigen, lift_state, manifold_to_states, rh_residual, solve, speed, states_to_manifold,
    ManifoldPoint, ModelParams, Separatrices, StatePoint, TraceOpts,
};

fn params() -> impl Strategy<Value = ModelParams> {
    (-0.5..0.5f64, -0.5..0.5f64, 0.6..2.0f64, -0.5..0.5f64, 1.5..12.0f64)
        .prop_map(|(a1, a2, a3, a4, b1)| ModelParams::new(a1, a2, a3, a4, b1).unwrap())
}

fn nonzero(r: f64) -> impl Strategy<Value = f64> {
    (-r..r).prop_filter("away from zero", |x: &f64| x.abs() > 1e-2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn every_manifold_point_is_a_shock(p in params(), z in -4.0..4.0f64, t in -4.0..4.0f64, y in -4.0..4.0f64) {
        let st = manifold_to_states(ManifoldPoint::new(z, t, y), &p);
        let (a, b) = rh_residual(st.w, st.wp, st.s, &p);
        let scale = 1.0 + st.w.u.abs().max(st.w.v.abs()).max(st.wp.u.abs()).max(st.wp.v.abs()).powi(2);
        prop_assert!(a.hypot(b) / scale < 1e-11);
    }

    #[test]
    fn states_round_trip(p in params(), z in -4.0..4.0f64, t in -4.0..4.0f64, y in nonzero(4.0)) {
        let q = ManifoldPoint::new(z, t, y);
        let st = manifold_to_states(q, &p);
        let back = states_to_manifold(st.w, st.wp, &p).unwrap();
        let tol = 1e-8 * (1.0 + z.abs() + t.abs()).powi(2);
        prop_assert!((back.z - z).abs() < tol && (back.t - t).abs() < tol && (back.y - y).abs() < tol, "{q:?} -> {back:?}");
    }

    #[test]
    fn hugoniot_points_keep_the_left_state(p in params(), u in -3.0..3.0f64, v in -3.0..3.0f64, z in nonzero(6.0)) {
        let w0 = StatePoint::new(u, v);
        let q = hugoniot_point(w0, z, &p);
        let (t, y) = hugoniot_oracle(w0, z, &p);
        prop_assert!((q.t - t).abs() < 1e-10 * (1.0 + t.abs()));
        prop_assert!((q.y - y).abs() < 1e-10 * (1.0 + y.abs()));
        prop_assert!(state_w(q, &p).dist(&w0) < 1e-10 * (1.0 + u.abs() + v.abs()));
    }

    #[test]
    fn lifts_have_opposite_signs(p in params(), z0 in nonzero(5.0), t0 in nonzero(5.0)) {
        let (z1, t1) = partner_lift(z0, t0);
        prop_assert!(t0 * t1 < 0.0);
        let (a, b) = (ManifoldPoint::on_c(z0, t0), ManifoldPoint::on_c(z1, t1));
        prop_assert!(state_w(a, &p).dist(&state_w(b, &p)) < 1e-9 * (1.0 + t0.abs() * (1.0 + z0 * z0)));
        let gap = (speed(a, &p) - speed(b, &p)).abs();
        prop_assert!((gap - lift_speed_gap(z0, t0, &p)).abs() < 1e-9 * (1.0 + gap));
    }

    #[test]
    fn characteristic_speed_is_an_eigenvalue(p in params(), z in -5.0..5.0f64, t in nonzero(5.0)) {
        let q = ManifoldPoint::on_c(z, t);
        let (ls, lf) = eigen(state_w(q, &p), &p).lambda.unwrap();
        let want = if t < 0.0 { ls } else { lf };
        prop_assert!((speed(q, &p) - want).abs() < 1e-9 * (1.0 + want.abs()));
    }

    #[test]
    fn rarefaction_speed_is_stationary_on_inflection(p in params(), z in nonzero(6.0)) {
        if let Ok(t) = inflection_t(z, &p) {
            prop_assert!(ds_dz_rarefaction(z, t, &p).abs() < 1e-9);
        }
    }

    #[test]
    fn rarefaction_speed_derivative_matches_differences(z in -3.0..3.0f64, t in nonzero(4.0)) {
        let p = ModelParams::default();
        let h = 1e-5;
        let dt = rarefaction_field(z, t, &p);
        let sp = speed(ManifoldPoint::on_c(z + h, t + h * dt), &p);
        let sm = speed(ManifoldPoint::on_c(z - h, t - h * dt), &p);
        let fd = (sp - sm) / (2.0 * h);
        let exact = ds_dz_rarefaction(z, t, &p);
        prop_assert!((fd - exact).abs() < 1e-5 * (1.0 + exact.abs()), "{fd} vs {exact}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn equal_states_give_constant_solution(u in -3.0..3.0f64, v in 2.0..4.0f64) {
        let p = ModelParams::default();
        let w = StatePoint::new(u, v);
        let sol = solve(w, w, &p).unwrap();
        prop_assert!(sol.waves.is_empty());
    }

    #[test]
    fn solutions_satisfy_their_own_checks(du in -0.3..0.3f64, dv in -0.3..0.3f64) {
        let p = ModelParams::default();
        let l = StatePoint::new(-0.2430769231, -0.6365384615);
        let r = StatePoint::new(0.85 + du, 3.2 + dv);
        if let Ok(sol) = solve(l, r, &p) {
            let problems = sol.check(&p);
            prop_assert!(problems.is_empty(), "{problems:?}");
            for w in &sol.waves {
                if let Some(s) = w.speed {
                    let (a, b) = rh_residual(w.from, w.to, s, &p);
                    prop_assert!(a.hypot(b) < 1e-8);
                }
            }
        }
    }

    #[test]
    fn region_is_stable_inside_regions(dz in -1e-6..1e-6f64, dt in -1e-6..1e-6f64) {
        let p = ModelParams::default();
        let seps = Separatrices::new(&p, &TraceOpts::default());
        for (w, want) in [
            (StatePoint::new(-0.2430769231, -0.6365384615), "I"),
            (StatePoint::new(-0.125, 3.5), "II"),
            (StatePoint::new(0.125, -2.5), "III"),
        ] {
            let l = lift_state(w, &p).unwrap();
            let r = classify_cs_region(l.us.z + dz, l.us.t + dt, &seps, &p).unwrap();
            prop_assert_eq!(r.label(), want);
        }
    }
}
