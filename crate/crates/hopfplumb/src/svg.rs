//! Schematic brick-diagram figures.
//!
//! Strands are vertical lines, crossings horizontal bars read top to
//! bottom, and a highlighted curve is drawn as outlines of the rectangles
//! carrying its homology class, with its bands thickened.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use hopfplumb_core::{FatGraphSurface, NormalCurve};

const COLUMN: i64 = 60;
const ROW: i64 = 28;
const MARGIN: i64 = 40;
const PALETTE: [&str; 6] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn x_of(strand: usize) -> i64 {
    MARGIN + COLUMN * strand as i64
}

fn y_of(position: usize) -> i64 {
    MARGIN + ROW * (position as i64 + 1)
}

pub fn render(s: &FatGraphSurface, highlight: &[NormalCurve]) -> String {
    let c = s.edge_count();
    let width = 2 * MARGIN + COLUMN * (s.strands().max(1) as i64 - 1);
    let height = 2 * MARGIN + ROW * (c as i64 + 1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    for v in 0..s.strands() {
        let x = x_of(v);
        let _ = writeln!(
            out,
            r#"<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{}" stroke="black" stroke-width="2"/>"#,
            height - MARGIN
        );
    }
    for p in 0..c {
        let y = y_of(p);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="2"/>"#,
            x_of(s.lo(p)),
            x_of(s.hi(p))
        );
    }
    for (k, curve) in highlight.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        let inset = 4 + 3 * (k as i64 % 4);
        let _ = writeln!(out, r#"<g id="curve-{k}" fill="none" stroke="{colour}">"#);
        for (r, &coef) in s.rectangles().iter().zip(&curve.homology(s)) {
            if coef == 0 {
                continue;
            }
            let x = x_of(r.column - 1) + inset;
            let y = y_of(r.top) + inset;
            let w = COLUMN - 2 * inset;
            let h = y_of(r.bottom) - y_of(r.top) - 2 * inset;
            let _ = writeln!(
                out,
                r#"<rect x="{x}" y="{y}" width="{w}" height="{h}" stroke-width="2"/>"#
            );
            if coef.abs() > 1 {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" font-size="10" fill="{colour}" stroke="none">{coef}</text>"#,
                    x + 3,
                    y + 12
                );
            }
        }
        for p in curve.edge_support() {
            let y = y_of(p);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke-width="5" stroke-opacity="0.5"/>"#,
                x_of(s.lo(p)),
                x_of(s.hi(p))
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

pub fn write(s: &FatGraphSurface, highlight: &[NormalCurve], path: &Path) -> io::Result<()> {
    crate::write_atomic(path, render(s, highlight).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfplumb_core::BraidWord;

    #[test]
    fn bare_and_highlighted() {
        let w = BraidWord::parse("1 2 3 1 2 3 1 2 3", None).unwrap();
        let s = FatGraphSurface::new(&w).unwrap();
        let bare = render(&s, &[]);
        assert_eq!(bare.matches("<line").count(), 4 + 9);
        assert!(!bare.contains("<g id"));
        let r = s.rectangle_curve(0).unwrap();
        let lit = render(&s, std::slice::from_ref(&r));
        assert_eq!(lit.matches(r#"stroke-width="2"/>"#).count(), 4 + 9 + 1);
        assert_eq!(lit, render(&s, &[r]));
    }
}
