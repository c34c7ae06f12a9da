//! SVG rendering of scenes.
//!
//! Geometry is exact up to this point; only the final drawing uses `f64`.
//! Smooth pencil members are traced through their rational parametrization
//! from the first base point, named conics by marching squares.

use std::fmt::Write as _;

use serde::Serialize;

use crate::conic::Conic;
use crate::pencil::{farey_sweep, Pencil};
use crate::projective::{join, Line, Point};

use super::scene::Scene;
use super::CliError;

/// Sampled members drawn for each pencil.
const PENCIL_MEMBERS: usize = 7;
const TRACE_STEPS: usize = 720;
const GRID: usize = 160;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RenderSummary {
    pub viewport: [f64; 4],
    pub width: u32,
    pub height: u32,
    pub points: usize,
    pub lines: usize,
    pub curves: usize,
    /// How each curve was traced: `rational_parametrization` or `marching_squares`.
    pub methods: Vec<(String, String)>,
    pub omitted: Vec<String>,
    pub notes: Vec<String>,
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn approx(p: &Point) -> Option<[f64; 3]> {
    let [x, y, z] = p.coords();
    Some([x.to_f64()?, y.to_f64()?, z.to_f64()?])
}

fn affine_f64(p: &Point) -> Option<(f64, f64)> {
    let [x, y, z] = approx(p)?;
    (z != 0.0).then(|| (x / z, y / z))
}

fn conic_f64(c: &Conic) -> Option<[f64; 6]> {
    let v: Vec<f64> = c.coeffs().iter().map(|s| s.to_f64()).collect::<Option<_>>()?;
    v.try_into().ok()
}

fn eval_f64(k: &[f64; 6], x: f64, y: f64) -> f64 {
    k[0] * x * x + k[1] * x * y + k[2] * y * y + k[3] * x + k[4] * y + k[5]
}

struct Canvas {
    vp: [f64; 4],
    scale: f64,
    width: u32,
    height: u32,
    body: String,
}

impl Canvas {
    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.vp[0]) * self.scale, (self.vp[3] - y) * self.scale)
    }

    fn inside(&self, x: f64, y: f64, margin: f64) -> bool {
        let (w, h) = (self.vp[2] - self.vp[0], self.vp[3] - self.vp[1]);
        x >= self.vp[0] - margin * w && x <= self.vp[2] + margin * w && y >= self.vp[1] - margin * h && y <= self.vp[3] + margin * h
    }

    fn polyline(&mut self, class: &str, pts: &[(f64, f64)]) {
        if pts.len() < 2 {
            return;
        }
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| {
                let (u, v) = self.px(x, y);
                format!("{u:.2},{v:.2}")
            })
            .collect();
        let _ = writeln!(self.body, r#"<polyline class="{class}" fill="none" points="{}"/>"#, coords.join(" "));
    }

    /// Clips `ax + by + c = 0` to the viewport.
    fn line(&mut self, class: &str, l: &Line, label: Option<&str>) -> bool {
        let Some([a, b, c]) = l.coords().iter().map(|s| s.to_f64()).collect::<Option<Vec<_>>>().map(|v| [v[0], v[1], v[2]]) else {
            return false;
        };
        let [x0, y0, x1, y1] = self.vp;
        let mut hits: Vec<(f64, f64)> = vec![];
        if b != 0.0 {
            for x in [x0, x1] {
                let y = -(a * x + c) / b;
                if (y0..=y1).contains(&y) {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [y0, y1] {
                let x = -(b * y + c) / a;
                if (x0..=x1).contains(&x) {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
        hits.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-12 && (p.1 - q.1).abs() < 1e-12);
        if hits.len() < 2 {
            return false;
        }
        let (p, q) = (hits[0], hits[hits.len() - 1]);
        let ((u0, v0), (u1, v1)) = (self.px(p.0, p.1), self.px(q.0, q.1));
        let _ = writeln!(self.body, r#"<line class="{class}" x1="{u0:.2}" y1="{v0:.2}" x2="{u1:.2}" y2="{v1:.2}"/>"#);
        if let Some(label) = label {
            let _ = writeln!(self.body, r#"<text class="label" x="{:.2}" y="{:.2}">{}</text>"#, u1 - 14.0, v1 + 12.0, escape(label));
        }
        true
    }

    fn point(&mut self, class: &str, x: f64, y: f64, label: Option<&str>) {
        let (u, v) = self.px(x, y);
        let _ = writeln!(self.body, r#"<circle class="{class}" cx="{u:.2}" cy="{v:.2}" r="3"/>"#);
        if let Some(label) = label {
            let _ = writeln!(self.body, r#"<text class="label" x="{:.2}" y="{:.2}">{}</text>"#, u + 5.0, v - 5.0, escape(label));
        }
    }

    /// Traces a smooth conic through `a` along the lines through `a`.
    fn trace_through(&mut self, class: &str, k: &[f64; 6], a: (f64, f64)) {
        let q = |dx: f64, dy: f64| k[0] * dx * dx + k[1] * dx * dy + k[2] * dy * dy;
        let grad = (2.0 * k[0] * a.0 + k[1] * a.1 + k[3], k[1] * a.0 + 2.0 * k[2] * a.1 + k[4]);
        let mut run: Vec<(f64, f64)> = vec![];
        for i in 0..=TRACE_STEPS {
            let th = std::f64::consts::PI * i as f64 / TRACE_STEPS as f64;
            let (dx, dy) = (th.cos(), th.sin());
            let qd = q(dx, dy);
            let s = if qd.abs() < 1e-12 { None } else { Some(-(grad.0 * dx + grad.1 * dy) / qd) };
            match s.map(|s| (a.0 + s * dx, a.1 + s * dy)) {
                Some(p) if self.inside(p.0, p.1, 1.0) => run.push(p),
                _ => {
                    self.polyline(class, &run);
                    run.clear();
                }
            }
        }
        self.polyline(class, &run);
    }

    /// Zero set of a conic by marching squares on a fixed grid.
    fn contour(&mut self, class: &str, k: &[f64; 6]) -> bool {
        let [x0, y0, x1, y1] = self.vp;
        let (dx, dy) = ((x1 - x0) / GRID as f64, (y1 - y0) / GRID as f64);
        let at = |i: usize, j: usize| (x0 + i as f64 * dx, y0 + j as f64 * dy);
        let f: Vec<Vec<f64>> = (0..=GRID)
            .map(|i| (0..=GRID).map(|j| {
                let (x, y) = at(i, j);
                eval_f64(k, x, y)
            }).collect())
            .collect();
        let mut d = String::new();
        for i in 0..GRID {
            for j in 0..GRID {
                let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
                let mut cross = vec![];
                for e in 0..4 {
                    let (p, q) = (corners[e], corners[(e + 1) % 4]);
                    let (fp, fq) = (f[p.0][p.1], f[q.0][q.1]);
                    if (fp < 0.0) != (fq < 0.0) {
                        let t = fp / (fp - fq);
                        let (ax, ay) = at(p.0, p.1);
                        let (bx, by) = at(q.0, q.1);
                        cross.push((ax + t * (bx - ax), ay + t * (by - ay)));
                    }
                }
                for pair in cross.chunks_exact(2) {
                    let ((u0, v0), (u1, v1)) = (self.px(pair[0].0, pair[0].1), self.px(pair[1].0, pair[1].1));
                    let _ = write!(d, "M{u0:.2},{v0:.2}L{u1:.2},{v1:.2}");
                }
            }
        }
        if d.is_empty() {
            return false;
        }
        let _ = writeln!(self.body, r#"<path class="{class}" fill="none" d="{d}"/>"#);
        true
    }
}

fn default_viewport(scene: &Scene) -> [f64; 4] {
    let pts: Vec<(f64, f64)> = scene.points.values().filter_map(affine_f64).collect();
    if pts.is_empty() {
        return [-5.0, -5.0, 5.0, 5.0];
    }
    let fold = |f: fn(f64, f64) -> f64, init: f64, sel: fn(&(f64, f64)) -> f64| pts.iter().map(sel).fold(init, f);
    let (xmin, xmax) = (fold(f64::min, f64::INFINITY, |p| p.0), fold(f64::max, f64::NEG_INFINITY, |p| p.0));
    let (ymin, ymax) = (fold(f64::min, f64::INFINITY, |p| p.1), fold(f64::max, f64::NEG_INFINITY, |p| p.1));
    let pad = ((xmax - xmin).max(ymax - ymin) * 0.5).max(1.0);
    [xmin - pad, ymin - pad, xmax + pad, ymax + pad]
}

fn draw_pencil(cv: &mut Canvas, name: &str, p: &Pencil, summary: &mut RenderSummary) {
    let base = p.base_points();
    for i in 0..4 {
        for j in i + 1..4 {
            if let Ok(l) = join(&base[i], &base[j]) {
                if cv.line("side", &l, None) {
                    summary.lines += 1;
                }
            }
        }
    }
    let Some(a) = affine_f64(&base[0]) else {
        summary.omitted.push(format!("pencil {name}: first base point is at infinity"));
        return;
    };
    for t in farey_sweep(PENCIL_MEMBERS) {
        let c = p.member(&t);
        if c.is_degenerate() {
            continue;
        }
        if let Some(k) = conic_f64(&c) {
            cv.trace_through("member", &k, a);
            summary.curves += 1;
            summary.methods.push((format!("{name} {t}"), "rational_parametrization".into()));
        }
    }
}

/// Renders the scene. `viewport` is `[xmin, ymin, xmax, ymax]`; when absent
/// it is fitted around the affine points.
pub fn render(scene: &Scene, viewport: Option<[f64; 4]>, width: u32) -> Result<(String, RenderSummary), CliError> {
    let vp = viewport.unwrap_or_else(|| default_viewport(scene));
    if width == 0 || vp.iter().any(|v| !v.is_finite()) || vp[2] <= vp[0] || vp[3] <= vp[1] {
        return Err(CliError::EmptyViewport);
    }
    let scale = width as f64 / (vp[2] - vp[0]);
    let height = ((vp[3] - vp[1]) * scale).round().max(1.0) as u32;
    let mut cv = Canvas {
        vp,
        scale,
        width,
        height,
        body: String::new(),
    };
    let mut summary = RenderSummary {
        viewport: vp,
        width,
        height,
        ..Default::default()
    };

    for (name, np) in &scene.pencils {
        draw_pencil(&mut cv, name, &np.pencil, &mut summary);
    }
    for (name, c) in &scene.conics {
        match conic_f64(c) {
            Some(k) if cv.contour("conic", &k) => {
                summary.curves += 1;
                summary.methods.push((name.clone(), "marching_squares".into()));
            }
            Some(_) => summary.omitted.push(format!("conic {name}: no real points in the viewport")),
            None => summary.omitted.push(format!("conic {name}: coefficients are not real")),
        }
    }
    for (name, l) in &scene.lines {
        if l.is_at_infinity() {
            summary.omitted.push(format!("line {name}: line at infinity"));
        } else if cv.line("line", l, Some(name)) {
            summary.lines += 1;
        } else {
            summary.omitted.push(format!("line {name}: outside the viewport"));
        }
        for (cname, c) in &scene.conics {
            let Ok(hit) = c.intersect_line(l) else { continue };
            if !hit.is_real() {
                let d = hit.radicand().map(|d| d.to_string()).unwrap_or_default();
                summary.notes.push(format!("{cname} ∩ {name}: imaginary pair omitted (d = {d})"));
                continue;
            }
            for x in hit.points.iter().filter_map(affine_f64) {
                cv.point("intersection", x.0, x.1, None);
            }
        }
        for (pname, np) in &scene.pencils {
            let Ok(d) = np.pencil.desargues_involution(l) else { continue };
            let Ok(roots) = d.involution.fixed_points() else { continue };
            if roots.radicand().is_some_and(|d| d.sign() == num_bigint::Sign::Minus) {
                summary
                    .notes
                    .push(format!("fixed points of {pname} on {name}: imaginary pair omitted (d = {})", roots.radicand().unwrap()));
                continue;
            }
            for x in d.fixed_points().unwrap_or_default().iter().filter_map(affine_f64) {
                cv.point("fixed", x.0, x.1, None);
            }
        }
    }
    for (name, p) in &scene.points {
        match affine_f64(p) {
            Some((x, y)) => {
                cv.point("point", x, y, Some(name));
                summary.points += 1;
            }
            None => summary.omitted.push(format!("point {name}: at infinity")),
        }
    }

    let meta = serde_json::json!({
        "generator": "desargues",
        "viewport": vp,
        "curves": summary.methods,
        "omitted": summary.omitted,
        "notes": summary.notes,
    });
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = cv.width,
        h = cv.height
    );
    let _ = writeln!(svg, "<metadata>{}</metadata>", escape(&meta.to_string()));
    let _ = writeln!(
        svg,
        "<style>.side{{stroke:#bbb}} .member{{stroke:#36c}} .conic{{stroke:#c63}} .line{{stroke:#000}} .point{{fill:#000}} .fixed{{fill:#d22}} .intersection{{fill:#2a2}} .label{{font:11px sans-serif}}</style>"
    );
    svg.push_str(&cv.body);
    svg.push_str("</svg>\n");
    Ok((svg, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::scene::SceneFile;

    fn scene(text: &str) -> Scene {
        SceneFile::parse(text).unwrap().resolve().unwrap()
    }

    #[test]
    fn renders_square() {
        let s = scene(
            r#"{"points": {"A": {"x":1,"y":1}, "B": {"x":-1,"y":1}, "C": {"x":-1,"y":-1}, "D": {"x":1,"y":-1}, "<P&>": {"x":0,"y":0}},
                "lines": {"L": [0, 1, 0]}, "pencils": {"P": ["A","B","C","D"]},
                "conics": {"O": {"circle_through": ["A","B","C"]}, "E": [1, 0, 1, 0, 0, 1]}}"#,
        );
        let (svg, summary) = render(&s, None, 400).unwrap();
        assert!(svg.contains("&lt;P&amp;&gt;"));
        assert!(svg.contains(r#"class="member""#));
        assert!(svg.contains(r#"class="fixed""#));
        assert_eq!(summary.points, 5);
        assert!(summary.omitted.iter().any(|o| o.starts_with("conic E")));
        assert!(summary.notes.iter().any(|n| n.contains("E ∩ L") && n.contains("d = -1")));
        assert_eq!(render(&s, None, 400).unwrap().0, svg);
    }

    #[test]
    fn empty_viewport() {
        let s = Scene::default();
        assert!(matches!(render(&s, None, 0), Err(CliError::EmptyViewport)));
        assert!(matches!(render(&s, Some([1.0, 0.0, 1.0, 2.0]), 100), Err(CliError::EmptyViewport)));
    }
}
