//! Static SVG rendering of isometric circles, horodisks and axes.

use std::fmt::Write;

use hypsurf::fuchsian::{maximal_cusp, Ball, FuchsianGroup};
use hypsurf::hyperbolic::{isometric_circle, Classification, GeodesicShape};
use hypsurf::Config;

const WIDTH: f64 = 800.0;

struct View {
    x_min: f64,
    x_max: f64,
    y_max: f64,
    height: f64,
}

impl View {
    fn scale(&self) -> f64 {
        WIDTH / (self.x_max - self.x_min)
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x_min) * self.scale()
    }

    fn py(&self, y: f64) -> f64 {
        self.height - y * self.scale()
    }
}

fn half_circle(out: &mut String, v: &View, center: f64, radius: f64, class: &str) {
    let r = radius * v.scale();
    let _ = writeln!(
        out,
        r#"  <path class="{class}" d="M {:.3} {:.3} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3}"/>"#,
        v.px(center - radius),
        v.py(0.0),
        v.px(center + radius),
        v.py(0.0)
    );
}

/// Isometric circles `I(w)` of the nontrivial words of length `≤ depth`,
/// the maximal horodisk at `∞` with its images when the group is
/// cusp-normalized, and the axes of the hyperbolic words of length `≤ 2`.
pub fn render(group: &FuchsianGroup, depth: usize, cfg: &Config) -> hypsurf::Result<String> {
    let ball = Ball::new(group, depth.max(1), cfg)?;
    let cusp = match &group.cusp {
        Some(c) if c.is_normalized() => Some((
            c.omega.unwrap_or(2.0),
            maximal_cusp(group, depth.max(4), cfg)?.height,
        )),
        _ => None,
    };
    let mut circles: Vec<(f64, f64)> = ball
        .nontrivial()
        .iter()
        .filter_map(|e| isometric_circle(&e.map).ok())
        .map(|c| (c.center, c.radius))
        .collect();
    circles.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    circles.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);

    let span = match cusp {
        Some((omega, _)) => omega,
        None => circles
            .iter()
            .map(|&(c, r)| c.abs() + r)
            .fold(1.0, f64::max)
            .min(6.0),
    };
    let y_max = match cusp {
        Some((_, h)) => 1.5 * h.max(0.5),
        None => {
            circles
                .iter()
                .map(|&(_, r)| r)
                .fold(0.5, f64::max)
                .min(span)
                * 1.2
        }
    };
    let mut view = View {
        x_min: -span,
        x_max: span,
        y_max,
        height: 0.0,
    };
    view.height = (view.y_max * view.scale()).ceil();

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{h}" viewBox="0 0 {WIDTH} {h}">"#,
        h = view.height
    );
    let _ = writeln!(out, "  <title>{}</title>", group.label);
    let _ = writeln!(
        out,
        "  <style>path, circle, line {{ fill: none; stroke-width: 1 }} .iso {{ stroke: #3465a4 }} \
         .axis {{ stroke: #cc0000; stroke-width: 1.5 }} .horo {{ stroke: #4e9a06 }} .boundary {{ stroke: black }}</style>"
    );
    let _ = writeln!(
        out,
        r#"  <line class="boundary" x1="0" y1="{0:.3}" x2="{WIDTH}" y2="{0:.3}"/>"#,
        view.py(0.0)
    );
    for &(c, r) in &circles {
        half_circle(&mut out, &view, c, r, "iso");
    }
    if let Some((_, h)) = cusp {
        let _ = writeln!(
            out,
            r#"  <line class="horo" x1="0" y1="{0:.3}" x2="{WIDTH}" y2="{0:.3}"/>"#,
            view.py(h)
        );
        for e in ball.nontrivial() {
            let c = e.map.c;
            if c.abs() < 1e-12 {
                continue;
            }
            let r = 1.0 / (2.0 * c * c * h);
            let base = e.map.a / c;
            let _ = writeln!(
                out,
                r#"  <circle class="horo" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
                view.px(base),
                view.py(r),
                r * view.scale()
            );
        }
    }
    for e in ball.nontrivial().iter().filter(|e| e.word.len() <= 2) {
        if e.map.classify() != Classification::Hyperbolic {
            continue;
        }
        match e.map.axis()?.shape() {
            GeodesicShape::HalfCircle { center, radius } => {
                half_circle(&mut out, &view, center, radius, "axis")
            }
            GeodesicShape::Vertical { foot } => {
                let _ = writeln!(
                    out,
                    r#"  <line class="axis" x1="{0:.3}" y1="{1:.3}" x2="{0:.3}" y2="0"/>"#,
                    view.px(foot),
                    view.py(0.0)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
