//! SVG and ASCII pictures of a grid with its boundary cycles.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use outerbound::{Cell, Circuit, Component, Corner, Cycle, Grid, GridEdge, Window};

const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

#[derive(Debug, Clone, Copy)]
pub struct SvgOptions {
    /// Pixels per unit square.
    pub scale: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { scale: 20.0 }
    }
}

/// Corner `(a, b)` sits at `(a - 1/2, -(b - 1/2))` before scaling.
fn point(c: Corner, scale: f64) -> (f64, f64) {
    ((c.a as f64 - 0.5) * scale, -(c.b as f64 - 0.5) * scale)
}

fn drawing_window(grid: &Grid, comp: &Component) -> Window {
    let w = grid.window();
    match Window::bounding(comp.cells()) {
        Some(b) => Window {
            x_min: w.x_min.min(b.x_min),
            x_max: w.x_max.max(b.x_max),
            y_min: w.y_min.min(b.y_min),
            y_max: w.y_max.max(b.y_max),
        },
        None => w,
    }
}

/// One `<path>` per cycle; the circuit, when given, is a `<polyline>` with
/// arrow markers.
pub fn svg(
    grid: &Grid,
    comp: &Component,
    cycles: &[Cycle],
    circuit: Option<&Circuit>,
    opts: SvgOptions,
) -> String {
    let s = opts.scale;
    let w = drawing_window(grid, comp);
    let (x0, y0) = point(Corner::new(w.x_min - 1, w.y_max + 2), s);
    let width = (w.width() + 2) as f64 * s;
    let height = (w.height() + 2) as f64 * s;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {width} {height}" width="{width}" height="{height}">"#
    );
    out.push_str(
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\"><polygon points=\"0,0 10,5 0,10\" fill=\"#000\"/></marker></defs>\n",
    );
    out.push_str("  <g class=\"cells\">\n");
    for c in w.cells() {
        let fill = if comp.contains(c) {
            "#555555"
        } else if grid.is_occupied(c) {
            "#bbbbbb"
        } else {
            continue;
        };
        let (x, y) = point(Corner::new(c.x, c.y + 1), s);
        let _ = writeln!(
            out,
            r#"    <rect x="{x}" y="{y}" width="{s}" height="{s}" fill="{fill}"/>"#
        );
    }
    out.push_str("  </g>\n  <g class=\"cycles\" fill=\"none\" stroke-width=\"3\">\n");
    for (i, cycle) in cycles.iter().enumerate() {
        let mut d = String::new();
        for (k, &corner) in cycle.corners().iter().enumerate() {
            let (x, y) = point(corner, s);
            let _ = write!(d, "{}{x},{y} ", if k == 0 { "M" } else { "L" });
        }
        d.push('Z');
        let _ = writeln!(
            out,
            r#"    <path class="cycle" data-index="{i}" stroke="{}" d="{d}"/>"#,
            PALETTE[i % PALETTE.len()]
        );
    }
    out.push_str("  </g>\n");
    if let Some(circuit) = circuit.filter(|c| !c.is_empty()) {
        let first = circuit.corners()[0];
        let points: Vec<String> = circuit
            .corners()
            .iter()
            .chain(std::iter::once(&first))
            .map(|&c| {
                let (x, y) = point(c, s);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            r##"  <polyline class="circuit" fill="none" stroke="#000" stroke-width="1" marker-mid="url(#arrow)" marker-end="url(#arrow)" points="{}"/>"##,
            points.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Text picture at double resolution: corner rows with `+` and `-`, cell
/// rows with `|` and the cell state (`#` component, `o` other occupied,
/// `.` vacant).
pub fn ascii(grid: &Grid, comp: &Component, cycles: &[Cycle]) -> String {
    let edges: BTreeSet<GridEdge> = cycles.iter().flat_map(|c| c.edges()).collect();
    let corners: BTreeSet<Corner> = edges.iter().flat_map(|e| [e.u(), e.v()]).collect();
    let w = drawing_window(grid, comp).expanded(1);
    let mut out = String::new();
    for b in (w.y_min..=w.y_max + 1).rev() {
        // Corner row at height b.
        for a in w.x_min..=w.x_max + 1 {
            out.push(if corners.contains(&Corner::new(a, b)) {
                '+'
            } else {
                ' '
            });
            if a <= w.x_max {
                out.push(if edges.contains(&GridEdge::horizontal(a, b)) {
                    '-'
                } else {
                    ' '
                });
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        if b == w.y_min {
            break;
        }
        // Cell row for y = b - 1.
        let y = b - 1;
        for a in w.x_min..=w.x_max + 1 {
            out.push(if edges.contains(&GridEdge::vertical(a, y)) {
                '|'
            } else {
                ' '
            });
            if a <= w.x_max {
                let c = Cell::new(a, y);
                out.push(if comp.contains(c) {
                    '#'
                } else if grid.is_occupied(c) {
                    'o'
                } else {
                    '.'
                });
            }
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    let trimmed = out.trim_matches('\n').to_string();
    trimmed + "\n"
}
