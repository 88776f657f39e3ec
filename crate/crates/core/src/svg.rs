//! Static `(u, v)`-plane plots.

use std::fmt::Write as _;

use crate::flux::{coincidence_ellipse, ModelParams, StatePoint};
use crate::io::fmt12;
use crate::manifold::{double_sonic, inflection_t, state_w, ManifoldPoint};
use crate::riemann::RiemannSolution;

struct Line {
    pts: Vec<StatePoint>,
    color: &'static str,
    closed: bool,
}

#[derive(Default)]
pub struct Plot {
    lines: Vec<Line>,
    dots: Vec<(StatePoint, &'static str)>,
    view: Option<[f64; 4]>,
}

const SIZE: f64 = 640.0;

impl Plot {
    pub fn new() -> Self {
        Plot::default()
    }

    /// Ellipse, inflection image and double contact lines.
    pub fn with_background(p: &ModelParams) -> Self {
        let mut plot = Plot::new();
        if let Ok(e) = coincidence_ellipse(p, 256) {
            plot.line(e, "#b0207a", true);
        }
        let [(zc, tc), (zf, tf)] = double_sonic(p);
        for (a, b) in [(1e-3, 6.0), (-6.0, -1e-3)] {
            let pts = (0..600)
                .map(|k| a + (b - a) * k as f64 / 599.0)
                .filter_map(|z| inflection_t(z, p).ok().map(|t| state_w(ManifoldPoint::on_c(z, t), p)))
                .collect();
            plot.line(pts, "#2e86c1", false);
        }
        for (z, t) in [(zc, tc), (zf, tf)] {
            let pts = (0..2).map(|k| state_w(ManifoldPoint::new(z, t, -20.0 + 40.0 * k as f64), p)).collect();
            plot.line(pts, "#d4ac0d", false);
        }
        plot
    }

    pub fn line(&mut self, pts: Vec<StatePoint>, color: &'static str, closed: bool) {
        self.lines.push(Line { pts: pts.into_iter().filter(|w| w.is_finite()).collect(), color, closed });
    }

    pub fn dot(&mut self, w: StatePoint, color: &'static str) {
        self.dots.push((w, color));
    }

    /// Fixes the visible window `[u0, u1, v0, v1]`; otherwise it fits the dots and finite lines.
    pub fn view(&mut self, b: [f64; 4]) {
        self.view = Some(b);
    }

    fn bounds(&self) -> [f64; 4] {
        if let Some(b) = self.view {
            return b;
        }
        let mut b = [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY];
        let mut eat = |w: &StatePoint| {
            b = [b[0].min(w.u), b[1].max(w.u), b[2].min(w.v), b[3].max(w.v)];
        };
        if self.dots.is_empty() {
            self.lines.iter().flat_map(|l| &l.pts).for_each(&mut eat);
        } else {
            self.dots.iter().for_each(|(w, _)| eat(w));
        }
        if !b[0].is_finite() {
            return [-1.0, 1.0, -1.0, 1.0];
        }
        let pad = 0.15 * (b[1] - b[0]).max(b[3] - b[2]).max(1e-3);
        [b[0] - pad, b[1] + pad, b[2] - pad, b[3] + pad]
    }

    pub fn render(&self) -> String {
        let b = self.bounds();
        let span = (b[1] - b[0]).max(b[3] - b[2]);
        let x = |u: f64| (u - b[0]) / span * SIZE;
        let y = |v: f64| SIZE - (v - b[2]) / span * SIZE;
        let mut s = String::new();
        let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(s, r#"<g fill="none" stroke-width="1.5">"#);
        for l in &self.lines {
            // clip far-away samples so escaping arcs do not swamp the path
            let pts: Vec<String> = l
                .pts
                .iter()
                .filter(|w| (w.u - b[0]).abs() < 10.0 * span && (w.v - b[2]).abs() < 10.0 * span)
                .map(|w| format!("{},{}", fmt12(x(w.u)), fmt12(y(w.v))))
                .collect();
            if pts.len() < 2 {
                continue;
            }
            let tag = if l.closed { "polygon" } else { "polyline" };
            let _ = writeln!(s, r#"<{tag} stroke="{}" points="{}"/>"#, l.color, pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
        for (w, c) in &self.dots {
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="{c}"/>"#, fmt12(x(w.u)), fmt12(y(w.v)));
        }
        s.push_str("</svg>\n");
        s
    }
}

fn color(kind: crate::riemann::WaveType) -> &'static str {
    use crate::riemann::WaveType::*;
    match kind {
        S1 | C1Shock => "#000000",
        R1 => "#c0392b",
        S2 | C2Shock => "#117a65",
        R2 => "#e754b3",
    }
}

/// The solution fan in the `(u, v)` plane over the ellipse and inflection image.
pub fn solution_svg(sol: &RiemannSolution, p: &ModelParams) -> String {
    let mut plot = Plot::with_background(p);
    for w in &sol.waves {
        let pts = if w.samples.is_empty() { vec![w.from, w.to] } else { w.samples.clone() };
        plot.line(pts, color(w.kind), false);
    }
    plot.dot(sol.left, "#1f618d");
    plot.dot(sol.right, "#b03a2e");
    for m in &sol.middle_states {
        plot.dot(*m, "#000000");
    }
    plot.render()
}
