//! ASCII and SVG drawings of compatible pairs and nondecreasing paths.

use std::fmt::Write;

use crate::maxdyck::{CompatibleSelection, EdgeKind};
use crate::nondecdyck::{NonDecreasingPath, Step};

const CELL: usize = 40;
const MARGIN: usize = 20;

/// `((x0, y0), (x1, y1), kind, ordinal)`
type Segment = ((usize, usize), (usize, usize), EdgeKind, usize);

fn path_segments(sel: &CompatibleSelection) -> Vec<Segment> {
    let path = sel.path();
    let (mut x, mut y) = (0, 0);
    let mut out = Vec::with_capacity(path.len());
    for pos in 0..path.len() {
        let e = path.edge_at(pos);
        let start = (x, y);
        match e.kind {
            EdgeKind::Horizontal => x += 1,
            EdgeKind::Vertical => y += 1,
        }
        out.push((start, (x, y), e.kind, e.ordinal));
    }
    out
}

fn selected(sel: &CompatibleSelection, kind: EdgeKind, ordinal: usize) -> bool {
    match kind {
        EdgeKind::Horizontal => sel.s1().contains(&ordinal),
        EdgeKind::Vertical => sel.s2().contains(&ordinal),
    }
}

fn label_list(prefix: char, labels: &[usize]) -> String {
    let items: Vec<String> = labels.iter().map(|l| format!("{prefix}{l}")).collect();
    format!("{{{}}}", items.join(", "))
}

/// One character per edge: `_` and `|` for the path, `=` and `#` for
/// edges in `S1` and `S2`. Rows run from the top of the box down.
pub fn pair_ascii(sel: &CompatibleSelection) -> String {
    let path = sel.path();
    let rows = path.a2().max(1);
    let cols = 2 * path.a1() + 1;
    let mut grid = vec![vec![' '; cols]; rows];
    for ((x, y), _, kind, ordinal) in path_segments(sel) {
        let on = selected(sel, kind, ordinal);
        match kind {
            EdgeKind::Horizontal => grid[y][2 * x + 1] = if on { '=' } else { '_' },
            EdgeKind::Vertical => grid[y][2 * x] = if on { '#' } else { '|' },
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    let indexing = path.default_indexing();
    writeln!(
        out,
        "S1 = {}  S2 = {}",
        label_list('u', &sel.u_labels(indexing)),
        label_list('v', &sel.v_labels())
    )
    .unwrap();
    out
}

/// The box grid, the diagonal, the path, and the selected edges in colour.
pub fn pair_svg(sel: &CompatibleSelection) -> String {
    let path = sel.path();
    let (a1, a2) = (path.a1(), path.a2());
    let width = a1 * CELL + 2 * MARGIN;
    let height = a2 * CELL + 2 * MARGIN;
    // lattice (x, y) to screen coordinates, y pointing up
    let px = |x: usize| MARGIN + x * CELL;
    let py = |y: usize| MARGIN + (a2 - y) * CELL;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r##"<g stroke="#cccccc" stroke-width="1">"##).unwrap();
    for x in 0..=a1 {
        writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(0), py(a2)).unwrap();
    }
    for y in 0..=a2 {
        writeln!(out, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(0), px(a1)).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(
        out,
        r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#3366cc" stroke-width="1"/>"##,
        px(0),
        py(0),
        px(a1),
        py(a2)
    )
    .unwrap();
    for ((x0, y0), (x1, y1), kind, ordinal) in path_segments(sel) {
        let (colour, w) = match (kind, selected(sel, kind, ordinal)) {
            (EdgeKind::Horizontal, true) => ("#cc3333", 6),
            (EdgeKind::Vertical, true) => ("#33aa33", 6),
            _ => ("#000000", 2),
        };
        writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="{w}" stroke-linecap="round"/>"#,
            px(x0),
            py(y0),
            px(x1),
            py(y1)
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}

/// Classic mountain drawing, one character per step.
pub fn nondec_ascii(path: &NonDecreasingPath) -> String {
    let steps = path.to_steps();
    let peak = path.peak_altitudes().into_iter().max().unwrap_or(0);
    let mut grid = vec![vec![' '; steps.len()]; peak];
    let mut h = 0;
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => {
                grid[h][i] = '/';
                h += 1;
            }
            Step::Down => {
                h -= 1;
                grid[h][i] = '\\';
            }
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}

/// The path as a polyline over a light grid, valleys marked with dots.
pub fn nondec_svg(path: &NonDecreasingPath) -> String {
    let steps = path.to_steps();
    let peak = path.peak_altitudes().into_iter().max().unwrap_or(0);
    let cell = CELL / 2;
    let width = steps.len() * cell + 2 * MARGIN;
    let height = peak * cell + 2 * MARGIN;
    let px = |x: usize| MARGIN + x * cell;
    let py = |y: usize| MARGIN + (peak - y) * cell;

    let mut points = vec![(0, 0)];
    let mut valleys = Vec::new();
    let mut h = 0;
    for (i, s) in steps.iter().enumerate() {
        h = match s {
            Step::Up => h + 1,
            Step::Down => h - 1,
        };
        points.push((i + 1, h));
        if *s == Step::Down && steps.get(i + 1) == Some(&Step::Up) {
            valleys.push((i + 1, h));
        }
    }

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r##"<g stroke="#dddddd" stroke-width="1">"##).unwrap();
    for x in 0..=steps.len() {
        writeln!(out, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(0), py(peak)).unwrap();
    }
    for y in 0..=peak {
        writeln!(out, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(0), px(steps.len())).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="3" stroke-linejoin="round"/>"#,
        coords.join(" ")
    )
    .unwrap();
    for (x, y) in valleys {
        writeln!(out, r##"<circle cx="{}" cy="{}" r="4" fill="#cc3333"/>"##, px(x), py(y)).unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}
