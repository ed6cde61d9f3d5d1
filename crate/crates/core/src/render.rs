//! Arc-diagram rendering: vertices on a horizontal line, upper arcs above,
//! lower arcs below (the lower diagram is drawn in its orientation-reversed
//! coordinates).

use std::fmt::Write as _;

use thiserror::Error;

use crate::perm::{arc_diagram, Arc, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("permutation too large for {format} output (n = {n}, limit {limit})")]
    TooLarge {
        format: &'static str,
        n: usize,
        limit: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render(perm: &Permutation, format: RenderFormat) -> Result<String, RenderError> {
    match format {
        RenderFormat::Ascii => render_ascii(perm),
        RenderFormat::Svg => render_svg(perm),
    }
}

const COL_WIDTH: usize = 4;

fn col_of(v: usize) -> usize {
    (v - 1) * COL_WIDTH
}

/// Greedy height assignment: arcs sorted by span get the lowest height at
/// which they overlap no previously placed arc. Loops take height 1.
fn assign_heights(arcs: &[Arc]) -> Vec<(Arc, usize)> {
    let mut sorted: Vec<Arc> = arcs.to_vec();
    sorted.sort_by_key(|a| (a.right - a.left, a.left));
    let mut placed: Vec<(Arc, usize)> = Vec::with_capacity(sorted.len());
    for arc in sorted {
        let mut h = 1;
        loop {
            let clash = placed
                .iter()
                .any(|&(p, ph)| ph == h && p.left <= arc.right && arc.left <= p.right);
            if !clash {
                break;
            }
            h += 1;
        }
        placed.push((arc, h));
    }
    placed
}

fn render_ascii(perm: &Permutation) -> Result<String, RenderError> {
    let n = perm.n();
    if n > 60 {
        return Err(RenderError::TooLarge {
            format: "ascii",
            n,
            limit: 60,
        });
    }
    let d = arc_diagram(perm);
    let upper = assign_heights(d.upper());
    let lower = assign_heights(d.lower());
    let width = col_of(n) + COL_WIDTH;
    let up_rows = upper.iter().map(|&(_, h)| h).max().unwrap_or(0);
    let lo_rows = lower.iter().map(|&(_, h)| h).max().unwrap_or(0);

    let mut grid = vec![vec![' '; width]; up_rows + 1 + lo_rows];
    let base = up_rows;

    // vertex labels on the baseline
    for v in 1..=n {
        for (k, ch) in v.to_string().chars().enumerate() {
            grid[base][col_of(v) + k] = ch;
        }
    }

    let mut draw = |placed: &[(Arc, usize)], below: bool| {
        // tallest arcs first so inner arcs stay visible
        let mut order: Vec<&(Arc, usize)> = placed.iter().collect();
        order.sort_by_key(|p| std::cmp::Reverse(p.1));
        for &&(arc, h) in &order {
            let row_at = |k: usize| if below { base + k } else { base - k };
            let (cl, cr) = (col_of(arc.left), col_of(arc.right));
            if arc.left == arc.right {
                grid[row_at(1)][cl] = 'o';
                continue;
            }
            let top = row_at(h);
            grid[top][cl] = '.';
            grid[top][cr] = '.';
            for cell in &mut grid[top][cl + 1..cr] {
                *cell = '-';
            }
            for k in 1..h {
                grid[row_at(k)][cl] = '|';
                grid[row_at(k)][cr] = '|';
            }
        }
    };
    draw(&upper, false);
    draw(&lower, true);

    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn render_svg(perm: &Permutation) -> Result<String, RenderError> {
    let n = perm.n();
    if n > 200 {
        return Err(RenderError::TooLarge {
            format: "svg",
            n,
            limit: 200,
        });
    }
    let d = arc_diagram(perm);
    let spacing = 30.0;
    let margin = 25.0;
    let x = |v: usize| margin + spacing * (v as f64 - 1.0);
    let baseline = 150.0;
    let width = x(n) + margin;
    let height = 300.0;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <line x1="{}" y1="{baseline}" x2="{}" y2="{baseline}" stroke="gray"/>"#,
        x(1),
        x(n)
    );
    let mut arc_path = |arc: &Arc, class: &str, above: bool| {
        let (x1, x2) = (x(arc.left), x(arc.right));
        if arc.left == arc.right {
            // small loop above the vertex
            let _ = writeln!(
                svg,
                r#"  <path class="{class}" d="M {x1} {baseline} c -9 -24, 9 -24, 0 0" fill="none" stroke="black"/>"#
            );
            return;
        }
        let sweep = if above { 1 } else { 0 };
        let r = (x2 - x1) / 2.0;
        let ry = r.min(baseline - 20.0);
        let _ = writeln!(
            svg,
            r#"  <path class="{class}" d="M {x1} {baseline} A {r} {ry} 0 0 {sweep} {x2} {baseline}" fill="none" stroke="black"/>"#
        );
    };
    for arc in d.upper() {
        arc_path(arc, "upper", true);
    }
    for arc in d.lower() {
        arc_path(arc, "lower", false);
    }
    for v in 1..=n {
        let _ = writeln!(
            svg,
            r#"  <circle cx="{}" cy="{baseline}" r="2.5" fill="black"/>"#,
            x(v)
        );
        let _ = writeln!(
            svg,
            r#"  <text x="{}" y="{}" font-size="10" text-anchor="middle">{v}</text>"#,
            x(v),
            baseline + 16.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
