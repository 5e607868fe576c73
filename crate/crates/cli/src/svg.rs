//! Deterministic SVG rendering of arcs in the covering strip and in the
//! annulus. All curve data comes from the exact rational representatives;
//! coordinates are rounded to six decimals only when written out.

use std::fmt::Write as _;

use tubecat_core::geom::{rat_to_f64, ratio, PlArc};
use tubecat_core::intersect::{cover_scene, tent, CrossingPoint};
use tubecat_core::{AnnulusArc, Result};

pub enum ViewKind {
    Cover,
    Annulus,
}

const FIRST_COLOR: &str = "#1f77b4";
const SECOND_COLOR: &str = "#e07b39";
const TRANSLATE_COLOR: &str = "#c9c9c9";
const POS_COLOR: &str = "#2ca02c";
const NEG_COLOR: &str = "#d62728";

struct Scene {
    n: i64,
    /// Arcs to draw strongly, with their color.
    main: Vec<(PlArc, &'static str)>,
    /// Faint deck translates.
    translates: Vec<PlArc>,
    points: Vec<CrossingPoint>,
}

fn build_scene(arcs: &[AnnulusArc]) -> Result<Scene> {
    let n = arcs[0].n();
    let h = ratio(1, 2);
    match arcs {
        [arc] => {
            let main_arc = tent(arc.canonical_lift(), &h);
            let translates = [-1i64, 1]
                .iter()
                .map(|&m| main_arc.translated(m * n))
                .collect();
            Ok(Scene {
                n,
                main: vec![(main_arc, FIRST_COLOR)],
                translates,
                points: Vec::new(),
            })
        }
        [alpha, beta] => {
            let scene = cover_scene(*alpha, *beta)?;
            let (gamma_color, delta_color) = if scene.gamma_is_alpha {
                (FIRST_COLOR, SECOND_COLOR)
            } else {
                (SECOND_COLOR, FIRST_COLOR)
            };
            let translates = scene
                .shifts
                .iter()
                .filter(|&&m| m != 0)
                .map(|&m| scene.delta.translated(m * n))
                .collect();
            Ok(Scene {
                n,
                main: vec![
                    (scene.delta.clone(), delta_color),
                    (scene.gamma, gamma_color),
                ],
                translates,
                points: scene.report.points.unwrap_or_default(),
            })
        }
        _ => unreachable!("one or two arcs"),
    }
}

pub fn render(view: ViewKind, arcs: &[AnnulusArc]) -> Result<String> {
    let scene = build_scene(arcs)?;
    Ok(match view {
        ViewKind::Cover => cover_svg(&scene),
        ViewKind::Annulus => annulus_svg(&scene),
    })
}

fn fmt_pt(x: f64, y: f64) -> String {
    format!("{x:.6},{y:.6}")
}

fn cover_svg(scene: &Scene) -> String {
    let unit = 48.0;
    let strip_h = 220.0;
    let margin = 40.0;

    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    for arc in scene
        .main
        .iter()
        .map(|(a, _)| a)
        .chain(scene.translates.iter())
    {
        x_min = x_min.min(rat_to_f64(arc.min_x()));
        x_max = x_max.max(rat_to_f64(arc.max_x()));
    }
    x_min -= 0.75;
    x_max += 0.75;

    let width = margin * 2.0 + (x_max - x_min) * unit;
    let height = margin * 2.0 + strip_h + 24.0;
    let px = |x: f64| margin + (x - x_min) * unit;
    let py = |y: f64| margin + (1.0 - y) * strip_h;

    let polyline = |arc: &PlArc, stroke: &str, width: f64, dashed: bool| {
        let pts: Vec<String> = arc
            .vertices()
            .iter()
            .map(|p| fmt_pt(px(rat_to_f64(&p.x)), py(rat_to_f64(&p.y))))
            .collect();
        let dash = if dashed {
            " stroke-dasharray=\"6 4\""
        } else {
            ""
        };
        format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"{} />\n",
            pts.join(" "),
            stroke,
            width,
            dash
        )
    };

    let mut out = String::new();
    let _ = write!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" \
         viewBox=\"0 0 {width:.6} {height:.6}\" width=\"{width:.6}\" height=\"{height:.6}\">\n"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{width:.6}\" height=\"{height:.6}\" fill=\"#ffffff\" />"
    );
    // Strip boundaries.
    let _ = writeln!(
        out,
        "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"#444444\" stroke-width=\"1\" />",
        px(x_min), py(0.0), px(x_max), py(0.0)
    );
    let _ = writeln!(
        out,
        "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"#aaaaaa\" stroke-width=\"1\" />",
        px(x_min), py(1.0), px(x_max), py(1.0)
    );
    for arc in &scene.translates {
        out.push_str(&polyline(arc, TRANSLATE_COLOR, 1.5, true));
    }
    for (arc, color) in &scene.main {
        out.push_str(&polyline(arc, color, 2.5, false));
    }
    // Marked points with labels reduced mod n.
    let lo = x_min.ceil() as i64;
    let hi = x_max.floor() as i64;
    for x in lo..=hi {
        let cx = px(x as f64);
        let _ = writeln!(
            out,
            "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"3\" fill=\"#222222\" />",
            cx,
            py(0.0)
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.6}\" y=\"{:.6}\" font-size=\"12\" text-anchor=\"middle\" fill=\"#222222\">{}</text>",
            cx,
            py(0.0) + 16.0,
            x.rem_euclid(scene.n)
        );
    }
    for p in &scene.points {
        let (class, color) = if p.sign > 0 {
            ("crossing-pos", POS_COLOR)
        } else {
            ("crossing-neg", NEG_COLOR)
        };
        let _ = writeln!(
            out,
            "  <circle class=\"{}\" cx=\"{:.6}\" cy=\"{:.6}\" r=\"4\" fill=\"{}\" />",
            class,
            px(rat_to_f64(&p.x)),
            py(rat_to_f64(&p.y)),
            color
        );
    }
    out.push_str("</svg>\n");
    out
}

fn annulus_svg(scene: &Scene) -> String {
    let size = 560.0;
    let c = size / 2.0;
    let r_outer = 200.0;
    // The inner boundary carries no marked points and sits at 0.4 of the
    // outer radius.
    let r_inner = 0.4 * r_outer;
    let n = scene.n;

    let map = |x: f64, y: f64| -> (f64, f64) {
        let theta = x / n as f64 * std::f64::consts::TAU;
        let rho = r_outer - (r_outer - r_inner) * y;
        (c + rho * theta.cos(), c - rho * theta.sin())
    };

    let path_for = |arc: &PlArc| -> String {
        let mut d = String::new();
        let verts = arc.vertices();
        for seg in verts.windows(2) {
            let x0 = rat_to_f64(&seg[0].x);
            let y0 = rat_to_f64(&seg[0].y);
            let x1 = rat_to_f64(&seg[1].x);
            let y1 = rat_to_f64(&seg[1].y);
            let steps = ((x1 - x0).abs() * 24.0).ceil().max(12.0) as usize;
            for i in 0..=steps {
                if !d.is_empty() && i == 0 {
                    continue;
                }
                let t = i as f64 / steps as f64;
                let (px, py) = map(x0 + (x1 - x0) * t, y0 + (y1 - y0) * t);
                if d.is_empty() {
                    let _ = write!(d, "M {}", fmt_pt(px, py));
                } else {
                    let _ = write!(d, " L {}", fmt_pt(px, py));
                }
            }
        }
        d
    };

    let mut out = String::new();
    let _ = write!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" \
         viewBox=\"0 0 {size:.6} {size:.6}\" width=\"{size:.6}\" height=\"{size:.6}\">\n"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{size:.6}\" height=\"{size:.6}\" fill=\"#ffffff\" />"
    );
    let _ = writeln!(
        out,
        "  <circle cx=\"{c:.6}\" cy=\"{c:.6}\" r=\"{r_outer:.6}\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\" />"
    );
    let _ = writeln!(
        out,
        "  <circle cx=\"{c:.6}\" cy=\"{c:.6}\" r=\"{r_inner:.6}\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"1\" />"
    );
    // In the annulus every deck translate projects onto the arc itself,
    // so only the main representatives are drawn.
    for (arc, color) in &scene.main {
        let _ = writeln!(
            out,
            "  <path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2.5\" />",
            path_for(arc),
            color
        );
    }
    for i in 0..n {
        let (x, y) = map(i as f64, 0.0);
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"3.5\" fill=\"#222222\" />"
        );
        let theta = i as f64 / n as f64 * std::f64::consts::TAU;
        let lx = c + (r_outer + 18.0) * theta.cos();
        let ly = c - (r_outer + 18.0) * theta.sin();
        let _ = writeln!(
            out,
            "  <text x=\"{lx:.6}\" y=\"{ly:.6}\" font-size=\"13\" text-anchor=\"middle\" \
             dominant-baseline=\"middle\" fill=\"#222222\">{i}</text>"
        );
    }
    for p in &scene.points {
        let (class, color) = if p.sign > 0 {
            ("crossing-pos", POS_COLOR)
        } else {
            ("crossing-neg", NEG_COLOR)
        };
        let (x, y) = map(rat_to_f64(&p.x), rat_to_f64(&p.y));
        let _ = writeln!(
            out,
            "  <circle class=\"{class}\" cx=\"{x:.6}\" cy=\"{y:.6}\" r=\"4\" fill=\"{color}\" />"
        );
    }
    out.push_str("</svg>\n");
    out
}
