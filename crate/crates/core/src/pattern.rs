//! Frieze patterns: a diagonal map laid out on a horizontal strip.
//!
//! Row `r` (for `r = 1..n`) holds `f(i, i+r)` for `i = 0..n`. On the strip the
//! entry `(i, i+r)` sits at horizontal position `x = 2i + r`, so moving one
//! step right adds 1 to both coordinates and each row is shifted half a cell
//! from its neighbours. Row 1 (the bottom) and row `n-1` (the top) both hold
//! the edge values.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{FriezeError, Result};
use crate::frieze::DiagonalMap;
use crate::polygon::{Diagonal, Dissection, Polygon, Vertex};
use crate::semifield::Semifield;
use crate::tpath::TPath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGrid<K> {
    n: usize,
    /// `rows[r - 1][i] = f(i, i + r mod n)`
    rows: Vec<Vec<K>>,
}

impl<K: Semifield> PatternGrid<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row `r`, for `1 <= r <= n - 1`.
    pub fn row(&self, r: usize) -> &[K] {
        &self.rows[r - 1]
    }

    /// Rows in order `r = 1, 2, …, n - 1`.
    pub fn rows(&self) -> &[Vec<K>] {
        &self.rows
    }

    pub fn entry(&self, i: Vertex, r: usize) -> &K {
        &self.rows[r - 1][i % self.n]
    }

    /// Reads the map back off the grid.
    pub fn to_map(&self) -> DiagonalMap<K> {
        let polygon = Polygon::new(self.n).expect("grid comes from a polygon");
        DiagonalMap::from_fn(polygon, |d| self.rows[d.hi() - d.lo() - 1][d.lo()].clone())
    }

    /// Tokens of the strip between horizontal positions `x_lo..=x_hi`, one
    /// line per row from the top (`r = n - 1`) down to `r = 1`. Position
    /// `x` in row `r` is occupied when `x ≡ r (mod 2)`.
    pub fn strip_window(&self, x_lo: i64, x_hi: i64) -> Vec<Vec<String>> {
        let n = self.n as i64;
        (1..self.n)
            .rev()
            .map(|r| {
                let r = r as i64;
                (x_lo..=x_hi)
                    .filter(|x| (x - r).rem_euclid(2) == 0)
                    .map(|x| {
                        let i = ((x - r) / 2).rem_euclid(n) as usize;
                        self.entry(i, r as usize).to_string()
                    })
                    .collect()
            })
            .collect()
    }
}

pub fn render_pattern<K: Semifield>(f: &DiagonalMap<K>) -> PatternGrid<K> {
    let n = f.polygon().n();
    let rows = (1..n)
        .map(|r| (0..n).map(|i| f.at(i, (i + r) % n).clone()).collect())
        .collect();
    PatternGrid { n, rows }
}

/// Checks the diamond rule `f(i,j)·f(i+1,j+1) = 1_K + f(i,j+1)·f(i+1,j)` for all
/// non-neighbouring `i`, `j`. Every edge must carry `1_K`; otherwise
/// [`FriezeError::NonUnitEdge`] is returned.
pub fn check_unimodular<K: Semifield>(f: &DiagonalMap<K>) -> Result<bool> {
    Ok(unimodular_violation(f)?.is_none())
}

/// The first `(i, j)` at which the diamond rule fails.
pub fn unimodular_violation<K: Semifield>(f: &DiagonalMap<K>) -> Result<Option<(Vertex, Vertex)>> {
    let p = f.polygon();
    if let Some(e) = p.edges().find(|e| !f.get(*e).is_one()) {
        return Err(FriezeError::NonUnitEdge(e));
    }
    let n = p.n();
    for i in 0..n {
        for j in 0..n {
            if j == i || j == p.succ(i) || j == p.pred(i) {
                continue;
            }
            let (i1, j1) = (p.succ(i), p.succ(j));
            let lhs = f.at(i, j).mul(f.at(i1, j1));
            let rhs = K::one().add(&f.at(i, j1).mul(f.at(i1, j)));
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Staggered fixed-width rendering, top row `r = n - 1` first. Each row is
/// indented by `r` half-cells; `repeat` copies of the fundamental domain of
/// `n` columns are printed.
pub fn emit_text<K: Semifield>(grid: &PatternGrid<K>, repeat: usize) -> String {
    let repeat = repeat.max(1);
    let width = grid.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    let half = (width + 2) / 2;
    let mut out = String::new();
    for r in (1..grid.n).rev() {
        let mut line = " ".repeat(r * half);
        for k in 0..grid.n * repeat {
            let token = grid.entry(k % grid.n, r).to_string();
            let _ = write!(line, "{token:<w$}", w = 2 * half);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// `{"n": …, "semifield": …, "rows": [[…], …]}` with rows in order `r = 1..n`.
pub fn emit_json<K: Semifield>(grid: &PatternGrid<K>) -> Value {
    let rows: Vec<Value> = grid.rows.iter().map(|row| Value::Array(row.iter().map(K::to_json).collect())).collect();
    json!({ "n": grid.n, "semifield": K::NAME, "rows": rows })
}

/// What to draw on top of the bare polygon.
#[derive(Debug, Clone)]
pub struct SvgOverlay<'a, K> {
    /// Dashed cell diagonals and value labels.
    pub values: Option<&'a DiagonalMap<K>>,
    /// Dotted query diagonal.
    pub query: Option<Diagonal>,
    /// One panel per path.
    pub paths: &'a [TPath],
}

impl<K> Default for SvgOverlay<'_, K> {
    fn default() -> Self {
        SvgOverlay { values: None, query: None, paths: &[] }
    }
}

const PATH_COLORS: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// SVG 1.1 drawing of a regular polygon with vertices anticlockwise from the
/// top. Dissection diagonals are solid. With paths, the drawing is repeated
/// once per path, each with its own arrowed polyline.
pub fn emit_svg<K: Semifield>(polygon: &Polygon, dissection: &Dissection, overlay: &SvgOverlay<'_, K>) -> String {
    const PANEL: f64 = 320.0;
    const RADIUS: f64 = 120.0;
    let panels = overlay.paths.len().max(1);
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = PANEL * panels as f64,
        h = PANEL
    );
    let _ = writeln!(svg, "  <defs>");
    for (k, color) in PATH_COLORS.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"    <marker id="arrow{k}" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="7" markerHeight="7" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>"#
        );
    }
    let _ = writeln!(svg, "  </defs>");

    for panel in 0..panels {
        let cx = PANEL * panel as f64 + PANEL / 2.0;
        let cy = PANEL / 2.0;
        let at = |v: Vertex, radius: f64| {
            let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * v as f64 / polygon.n() as f64;
            // SVG y grows downwards
            (cx + radius * angle.cos(), cy - radius * angle.sin())
        };
        let _ = writeln!(svg, r#"  <g class="panel" id="panel{panel}">"#);

        let outline: Vec<String> = polygon.vertices().map(|v| {
            let (x, y) = at(v, RADIUS);
            format!("{x:.2},{y:.2}")
        }).collect();
        let _ = writeln!(
            svg,
            r#"    <polygon class="outline" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            outline.join(" ")
        );

        let line = |svg: &mut String, d: Diagonal, class: &str, dash: &str| {
            let (x1, y1) = at(d.lo(), RADIUS);
            let (x2, y2) = at(d.hi(), RADIUS);
            let _ = writeln!(
                svg,
                r#"    <line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1"{dash}/>"#
            );
        };
        let label = |svg: &mut String, d: Diagonal, text: &str| {
            let (x1, y1) = at(d.lo(), RADIUS);
            let (x2, y2) = at(d.hi(), RADIUS);
            let (mut x, mut y) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
            if polygon.is_edge(d) {
                // push edge labels outside the polygon
                x = cx + (x - cx) * 1.12;
                y = cy + (y - cy) * 1.12;
            }
            let _ = writeln!(
                svg,
                r#"    <text class="value" x="{x:.2}" y="{y:.2}" font-size="11" text-anchor="middle" dominant-baseline="middle">{text}</text>"#
            );
        };

        if overlay.values.is_some() {
            for d in polygon.internal_diagonals() {
                if !dissection.contains(d) && !dissection.crosses_any(d) && Some(d) != overlay.query {
                    line(&mut svg, d, "cell-diagonal", r#" stroke-dasharray="5,4""#);
                }
            }
        }
        for &d in dissection.diagonals() {
            line(&mut svg, d, "dissection", "");
        }
        if let Some(q) = overlay.query {
            line(&mut svg, q, "query", r#" stroke-dasharray="1,3""#);
        }
        if let Some(f) = overlay.values {
            for e in polygon.edges() {
                label(&mut svg, e, &f.get(e).to_string());
            }
            for &d in dissection.diagonals() {
                label(&mut svg, d, &f.get(d).to_string());
            }
            if let Some(q) = overlay.query {
                label(&mut svg, q, &f.get(q).to_string());
            }
        }

        if let Some(path) = overlay.paths.get(panel) {
            let k = panel % PATH_COLORS.len();
            let points: Vec<String> = path.vertices().iter().map(|&v| {
                let (x, y) = at(v, RADIUS);
                format!("{x:.2},{y:.2}")
            }).collect();
            let _ = writeln!(
                svg,
                r#"    <polyline class="tpath" points="{}" fill="none" stroke="{}" stroke-width="2.5" marker-mid="url(#arrow{k})" marker-end="url(#arrow{k})"/>"#,
                points.join(" "),
                PATH_COLORS[k]
            );
            let _ = writeln!(
                svg,
                r#"    <text class="caption" x="{cx:.2}" y="{:.2}" font-size="12" text-anchor="middle">{path}</text>"#,
                PANEL - 8.0
            );
        }

        for v in polygon.vertices() {
            let (x, y) = at(v, RADIUS);
            let _ = writeln!(svg, r#"    <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
            let (lx, ly) = at(v, RADIUS + 24.0);
            let _ = writeln!(
                svg,
                r#"    <text class="label" x="{lx:.2}" y="{ly:.2}" font-size="13" text-anchor="middle" dominant-baseline="middle">{v}</text>"#
            );
        }
        let _ = writeln!(svg, "  </g>");
    }
    svg.push_str("</svg>\n");
    svg
}
