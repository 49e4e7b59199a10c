//! Static SVG drawings of braid diagrams and loops.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::braid::Braid;
use crate::loops::Loop;
use crate::props::{self, PlotDir};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub direction: PlotDir,
    pub over_under: bool,
    pub width: u32,
    pub height: u32,
    pub stroke_width: f64,
    pub stroke: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        let p = props::current();
        RenderSpec {
            direction: p.braid_plot_dir,
            over_under: p.gen_plot_over_under,
            width: 400,
            height: 400,
            stroke_width: 3.0,
            stroke: "#1f4e79".to_string(),
        }
    }
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn header(out: &mut String, spec: &RenderSpec, vw: f64, vh: f64) {
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {vw} {vh}">"#,
        spec.width, spec.height
    );
}

/// Maps diagram coordinates (strand slot `s`, time `u`) to the page.
struct Frame {
    dir: PlotDir,
    slots: f64,
    span: f64,
}

impl Frame {
    const MARGIN: f64 = 1.0;

    fn page(&self) -> (f64, f64) {
        let (a, b) = (self.slots - 1.0 + 2.0 * Self::MARGIN, self.span + 2.0 * Self::MARGIN);
        match self.dir {
            PlotDir::BottomTop | PlotDir::TopBottom => (a, b),
            PlotDir::LeftRight | PlotDir::RightLeft => (b, a),
        }
    }

    fn at(&self, s: f64, u: f64) -> (f64, f64) {
        let (s, m) = (s + Self::MARGIN, Self::MARGIN);
        match self.dir {
            PlotDir::BottomTop => (s, m + self.span - u),
            PlotDir::TopBottom => (s, m + u),
            PlotDir::LeftRight => (m + u, s),
            PlotDir::RightLeft => (m + self.span - u, s),
        }
    }
}

fn segment(out: &mut String, frame: &Frame, (s0, u0): (f64, f64), (s1, u1): (f64, f64), color: &str, w: f64) {
    let (x0, y0) = frame.at(s0, u0);
    let (x1, y1) = frame.at(s1, u1);
    let _ = writeln!(
        out,
        r#"<line x1="{x0:.4}" y1="{y0:.4}" x2="{x1:.4}" y2="{y1:.4}" stroke="{color}" stroke-width="{w}" stroke-linecap="round"/>"#
    );
}

/// One crossing per time slot; strands keep their colour throughout. With
/// `over_under`, the under strand is interrupted at the crossing point.
pub fn render_braid(b: &Braid, spec: &RenderSpec) -> String {
    let n = b.n();
    let frame = Frame {
        dir: spec.direction,
        slots: n as f64,
        span: b.len().max(1) as f64,
    };
    let (vw, vh) = frame.page();
    let w = spec.stroke_width / 40.0;
    let mut out = String::new();
    header(&mut out, spec, vw, vh);
    let mut strand_at: Vec<usize> = (0..n).collect();
    let gap = 0.18;
    for (k, &g) in b.word().iter().enumerate() {
        let u = k as f64;
        let lo = g.unsigned_abs() as usize - 1;
        let _ = writeln!(out, r#"<g class="crossing" data-generator="{g}">"#);
        for s in (0..n).filter(|&s| s != lo && s != lo + 1) {
            let c = PALETTE[strand_at[s] % PALETTE.len()];
            segment(&mut out, &frame, (s as f64, u), (s as f64, u + 1.0), c, w);
        }
        let (l, r) = (lo as f64, lo as f64 + 1.0);
        let rising = (PALETTE[strand_at[lo] % PALETTE.len()], (l, u), (r, u + 1.0));
        let falling = (PALETTE[strand_at[lo + 1] % PALETTE.len()], (r, u), (l, u + 1.0));
        let (over, under) = if g > 0 { (rising, falling) } else { (falling, rising) };
        let (c, p0, p1) = under;
        if spec.over_under {
            let mid = |t: f64| (p0.0 + t * (p1.0 - p0.0), p0.1 + t * (p1.1 - p0.1));
            segment(&mut out, &frame, p0, mid(0.5 - gap), c, w);
            segment(&mut out, &frame, mid(0.5 + gap), p1, c, w);
        } else {
            segment(&mut out, &frame, p0, p1, c, w);
        }
        let (c, p0, p1) = over;
        segment(&mut out, &frame, p0, p1, c, w);
        out.push_str("</g>\n");
        strand_at.swap(lo, lo + 1);
    }
    if b.is_empty() {
        for (s, &strand) in strand_at.iter().enumerate() {
            let c = PALETTE[strand % PALETTE.len()];
            segment(&mut out, &frame, (s as f64, 0.0), (s as f64, 1.0), c, w);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Endpoints of one arc of a loop, as `(puncture line, slot)` pairs: slot
/// `i >= 0` is the `i`-th crossing above the puncture counting outward,
/// `-(i + 1)` the `i`-th below.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Arc {
    from: (usize, i64),
    to: (usize, i64),
    shape: Shape,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Shape {
    /// Joins neighbouring lines.
    Across,
    /// Returns to its line, bulging left (`-1.0`) or right (`1.0`).
    Turn(f64),
    /// Returns to its line around the first or last puncture.
    Cap(f64),
}

/// Splits a loop into arcs between vertical lines through the inner
/// punctures, assuming the loop is in minimal position.
fn loop_arcs(l: &Loop) -> Vec<Arc> {
    let n = l.n();
    let inter = l.intersec();
    let count = |x: &num_bigint::BigInt| x.to_i64().unwrap_or(0).max(0);
    let above: Vec<i64> = (0..n - 2).map(|k| count(&inter.mu[2 * k])).collect();
    let below: Vec<i64> = (0..n - 2).map(|k| count(&inter.mu[2 * k + 1])).collect();
    let nu: Vec<i64> = inter.nu.iter().map(count).collect();
    // points on line k listed from top to bottom
    let column = |k: usize| -> Vec<(usize, i64)> {
        (0..above[k])
            .rev()
            .map(|i| (k, i))
            .chain((0..below[k]).map(|i| (k, -(i + 1))))
            .collect()
    };
    let nest = |pts: &[(usize, i64)], arcs: &mut Vec<Arc>, shape: Shape| {
        let m = pts.len();
        for i in 0..m / 2 {
            arcs.push(Arc { from: pts[i], to: pts[m - 1 - i], shape });
        }
    };
    // points adjacent to the puncture on line k turn back around it; the
    // rest continue past the neighbouring vertical line with `through` crossings
    let split = |k: usize, through: i64| {
        let pts = column(k);
        let turn = ((pts.len() as i64 - through) / 2).max(0) as usize;
        let top = above[k] as usize;
        let (lo, hi) = (top.saturating_sub(turn), (top + turn).min(pts.len()));
        let outer: Vec<(usize, i64)> = pts[..lo].iter().chain(&pts[hi..]).copied().collect();
        (pts[lo..hi].to_vec(), outer)
    };
    let mut arcs = Vec::new();
    let (first_in, first_out) = split(0, nu[0]);
    nest(&first_in, &mut arcs, Shape::Turn(-1.0));
    nest(&first_out, &mut arcs, Shape::Cap(-1.0));
    let (last_in, last_out) = split(n - 3, nu[n - 2]);
    nest(&last_in, &mut arcs, Shape::Turn(1.0));
    nest(&last_out, &mut arcs, Shape::Cap(1.0));
    for k in 0..n - 3 {
        let (l_in, l_out) = split(k, nu[k + 1]);
        let (r_in, r_out) = split(k + 1, nu[k + 1]);
        nest(&l_in, &mut arcs, Shape::Turn(1.0));
        nest(&r_in, &mut arcs, Shape::Turn(-1.0));
        for (a, b) in l_out.iter().zip(&r_out) {
            arcs.push(Arc { from: *a, to: *b, shape: Shape::Across });
        }
    }
    arcs
}

/// Punctures on a horizontal line with the loop drawn as arcs between the
/// vertical lines through consecutive inner punctures.
pub fn render_loop(l: &Loop, spec: &RenderSpec) -> String {
    let n = l.n();
    let arcs = loop_arcs(l);
    let inter = l.intersec();
    let tallest = inter
        .mu
        .iter()
        .filter_map(|x| x.to_f64())
        .fold(1.0f64, f64::max);
    let dy = 0.4 / tallest;
    let (vw, vh) = (n as f64 + 1.0, 2.0);
    let px = |k: usize| k as f64 + 2.0;
    let y = |slot: i64| {
        if slot >= 0 {
            1.0 - (slot as f64 + 1.0) * dy
        } else {
            1.0 + (-slot) as f64 * dy
        }
    };
    let mut out = String::new();
    header(&mut out, spec, vw, vh);
    let w = spec.stroke_width / 100.0;
    for a in &arcs {
        let ((k0, s0), (k1, s1)) = (a.from, a.to);
        let (x0, y0, x1, y1) = (px(k0), y(s0), px(k1), y(s1));
        let cx = match a.shape {
            Shape::Cap(side) => x0 + side * (1.3 + 0.6 * (y1 - y0).abs()),
            Shape::Turn(side) => x0 + side * (0.1 + 0.35 * (y1 - y0).abs()),
            Shape::Across => (x0 + x1) / 2.0,
        };
        let d = format!("M {x0:.4} {y0:.4} C {cx:.4} {y0:.4} {cx:.4} {y1:.4} {x1:.4} {y1:.4}");
        let _ = writeln!(
            out,
            r#"<path class="arc" d="{d}" fill="none" stroke="{}" stroke-width="{w}"/>"#,
            spec.stroke
        );
    }
    for k in 0..n {
        let _ = writeln!(
            out,
            r#"<circle class="puncture" cx="{:.4}" cy="1" r="0.06" fill="black"/>"#,
            k as f64 + 1.0
        );
    }
    out.push_str("</svg>\n");
    out
}
