//! Standalone SVG rendering of profiles and their cross-sections.

use std::fmt::Write as _;
use std::path::Path;

use taxicab_core::ProfileFunction;

use crate::error::{CliError, CliResult};

/// Uniform samples per profile, before breakpoints are merged in.
pub const SAMPLES: usize = 1000;

const MARGIN: f64 = 0.05;

#[derive(Debug, Clone, Default)]
pub struct PlotOptions {
    /// Also draw `-f`, the lower half of a revolution cross-section.
    pub mirror: bool,
}

/// Samples `f` on its domain, with every breakpoint as an exact vertex.
pub fn sample(f: &ProfileFunction) -> Vec<(f64, f64)> {
    let d = f.domain();
    let mut xs: Vec<f64> = d.uniform_grid(SAMPLES).collect();
    xs.extend_from_slice(f.breakpoints());
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs.into_iter().map(|x| (x, f.eval(x))).collect()
}

struct Bounds {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Bounds {
    fn of<'a>(pts: impl Iterator<Item = &'a (f64, f64)>) -> Self {
        // the revolution axis y = 0 is always in frame
        let mut b = Bounds { x0: f64::INFINITY, x1: f64::NEG_INFINITY, y0: 0.0, y1: 0.0 };
        for &(x, y) in pts {
            b.x0 = b.x0.min(x);
            b.x1 = b.x1.max(x);
            b.y0 = b.y0.min(y);
            b.y1 = b.y1.max(y);
        }
        b
    }

    fn spans(&self) -> (f64, f64) {
        let w = self.x1 - self.x0;
        let h = self.y1 - self.y0;
        let fallback = w.max(h).max(1.0);
        (if w > 0.0 { w } else { fallback }, if h > 0.0 { h } else { fallback })
    }
}

fn num(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.6}")
}

fn polyline(out: &mut String, pts: &[(f64, f64)], stroke: &str, dash: bool, width: f64) {
    let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(-y))).collect();
    let dash = if dash { format!(" stroke-dasharray=\"{} {}\"", num(4.0 * width), num(2.0 * width)) } else { String::new() };
    let _ = writeln!(
        out,
        "  <polyline fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{}\"{dash} points=\"{}\"/>",
        num(width),
        coords.join(" ")
    );
}

/// Renders `primary` (and optionally `overlay`) as an SVG document.
///
/// Data coordinates are used directly with y negated, so the viewBox is the
/// data bounding box plus a 5% margin on each side.
pub fn render(primary: &ProfileFunction, overlay: Option<&ProfileFunction>, opts: &PlotOptions) -> String {
    let upper = sample(primary);
    let lower: Vec<(f64, f64)> = if opts.mirror { upper.iter().map(|&(x, y)| (x, -y)).collect() } else { Vec::new() };
    let other = overlay.map(sample).unwrap_or_default();

    let b = Bounds::of(upper.iter().chain(&lower).chain(&other));
    let (w, h) = b.spans();
    let (mx, my) = (MARGIN * w, MARGIN * h);
    let (vx, vy, vw, vh) = (b.x0 - mx, -b.y1 - my, w + 2.0 * mx, h + 2.0 * my);
    let stroke = 0.004 * vw.max(vh);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\" preserveAspectRatio=\"xMidYMid meet\">",
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        (800.0 * vh / vw).round().clamp(100.0, 4000.0)
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(primary.label()));
    let axis = 0.5 * stroke;
    let _ = writeln!(
        out,
        "  <line x1=\"{}\" y1=\"0.000000\" x2=\"{}\" y2=\"0.000000\" stroke=\"#888888\" stroke-width=\"{}\"/>",
        num(vx),
        num(vx + vw),
        num(axis)
    );
    if vx <= 0.0 && 0.0 <= vx + vw {
        let _ = writeln!(
            out,
            "  <line x1=\"0.000000\" y1=\"{}\" x2=\"0.000000\" y2=\"{}\" stroke=\"#888888\" stroke-width=\"{}\"/>",
            num(vy),
            num(vy + vh),
            num(axis)
        );
    }
    polyline(&mut out, &upper, "#1f4e9e", false, stroke);
    if opts.mirror {
        polyline(&mut out, &lower, "#1f4e9e", false, stroke);
    }
    if overlay.is_some() {
        polyline(&mut out, &other, "#c0392b", true, stroke);
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn write(path: &Path, svg: &str) -> CliResult<()> {
    std::fs::write(path, svg).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}
