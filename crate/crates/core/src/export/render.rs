use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::PlatDiagram;
use crate::error::{Error, Result};
use crate::geometry::{band_top, corridor_polyline, row_top};
use crate::paths::AllowablePath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderFormat {
    Svg,
    Ascii,
}

/// Draws the plat, optionally with the monotone arc of `path`.
pub fn render(d: &PlatDiagram, path: Option<&AllowablePath>, format: RenderFormat) -> Result<Vec<u8>> {
    if let Some(p) = path {
        if (p.n(), p.m()) != (d.n(), d.m()) {
            return Err(Error::ShapeMismatch);
        }
    }
    Ok(match format {
        RenderFormat::Svg => svg(d, path),
        RenderFormat::Ascii => ascii(d, path),
    }
    .into_bytes())
}

const UNIT: f64 = 40.0;

fn px(x: f64) -> f64 {
    UNIT * x
}

fn py(y: f64) -> f64 {
    UNIT * (y + 1.0)
}

fn svg(d: &PlatDiagram, path: Option<&AllowablePath>) -> String {
    let (n, m) = (d.n(), d.m());
    let strands = d.strands();
    let width = px(strands as f64 + 1.0);
    let height = py(band_top(m) + 2.0);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        r#"<style>.strand,.cap{{stroke:#000;stroke-width:2;fill:none}} .box{{fill:#fff;stroke:#000;stroke-width:1.5}} .label{{font:14px sans-serif;text-anchor:middle}} .path{{stroke:#c00;stroke-width:2;fill:none}}</style>"#
    );

    let r = UNIT / 2.0;
    for j in 1..=n {
        let (x1, x2) = (px((2 * j - 1) as f64), px((2 * j) as f64));
        let _ = writeln!(
            s,
            r#"<path class="cap" d="M {x1} {} A {r} {r} 0 0 1 {x2} {}"/>"#,
            py(0.0),
            py(0.0)
        );
        let yb = py(band_top(m) + 1.0);
        let _ = writeln!(s, r#"<path class="cap" d="M {x1} {yb} A {r} {r} 0 0 0 {x2} {yb}"/>"#);
    }
    let line = |s: &mut String, x: usize, y0: f64, y1: f64| {
        let x = px(x as f64);
        let _ = writeln!(
            s,
            r#"<line class="strand" x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
            py(y0),
            py(y1)
        );
    };
    for gap in 0..=m {
        for x in 1..=strands {
            line(&mut s, x, band_top(gap), band_top(gap) + 1.0);
        }
    }
    for i in 1..=m {
        let top = row_top(i);
        let mut boxed = vec![false; strands + 2];
        for (j, b) in d.row(i).iter().enumerate() {
            let x = d.box_strand(i, j + 1);
            boxed[x] = true;
            boxed[x + 1] = true;
            let (bx, by) = (px(x as f64 - 0.25), py(top));
            let _ = writeln!(
                s,
                r#"<rect class="box" x="{bx}" y="{by}" width="{}" height="{UNIT}"/>"#,
                1.5 * UNIT
            );
            let _ = writeln!(
                s,
                r#"<text class="label" x="{}" y="{}">{b}</text>"#,
                px(x as f64 + 0.5),
                py(top + 0.5) + 5.0
            );
        }
        for x in (1..=strands).filter(|&x| !boxed[x]) {
            line(&mut s, x, top, top + 1.0);
        }
    }
    if let Some(p) = path {
        let points: Vec<String> = corridor_polyline(d, p.entries())
            .iter()
            .map(|q| format!("{},{}", px(q.x), py(q.y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="path" stroke-dasharray="6 4" points="{}"/>"#,
            points.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}

fn column(x: usize) -> usize {
    6 * (x - 1) + 2
}

fn ascii(d: &PlatDiagram, path: Option<&AllowablePath>) -> String {
    let (n, m) = (d.n(), d.m());
    let strands = d.strands();
    let width = column(strands) + 3;
    let blank = || vec![' '; width];
    let positions = path.map(AllowablePath::positions);
    let corridor = |i: usize| positions.as_ref().map(|p| column(p[i - 1]) + 3);
    let mut lines: Vec<Vec<char>> = Vec::new();

    let cap_line = |left: char, right: char, crossing: Option<usize>| {
        let mut l = blank();
        for j in 1..=n {
            let (a, b) = (column(2 * j - 1), column(2 * j));
            l[a] = left;
            l[a + 1..b].fill('─');
            l[b] = right;
        }
        if let Some(c) = crossing {
            l[c] = '┼';
        }
        l
    };
    let band_line = |marker: Option<usize>, crossed: Option<usize>| {
        let mut l = blank();
        for x in 1..=strands {
            l[column(x)] = '│';
        }
        if let Some(c) = marker {
            l[c] = '┊';
        }
        if let Some(x) = crossed {
            l[column(x)] = '┼';
        }
        l
    };

    lines.push(cap_line('╭', '╮', corridor(1)));
    lines.push(band_line(corridor(1), None));
    for i in 1..=m {
        let mut l = blank();
        let mut boxed = vec![false; strands + 2];
        for (j, b) in d.row(i).iter().enumerate() {
            let x = d.box_strand(i, j + 1);
            boxed[x] = true;
            boxed[x + 1] = true;
            let (a, z) = (column(x) - 1, column(x + 1) + 1);
            let inner = z - a - 1;
            let text = b.to_string();
            let label: Vec<char> = format!("{text:^inner$}").chars().collect();
            l[a] = '[';
            l[z] = ']';
            for (k, ch) in label.into_iter().take(inner).enumerate() {
                l[a + 1 + k] = ch;
            }
        }
        for x in (1..=strands).filter(|&x| !boxed[x]) {
            l[column(x)] = '│';
        }
        if let Some(c) = corridor(i) {
            l[c] = '┊';
        }
        lines.push(l);
        if i < m {
            let crossed = path.map(|p| p.crossed_strand(i));
            lines.push(band_line(None, crossed));
        }
    }
    lines.push(band_line(corridor(m), None));
    lines.push(cap_line('╰', '╯', corridor(m)));

    let mut out = String::new();
    for l in lines {
        let text: String = l.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}
