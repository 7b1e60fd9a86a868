//! SVG rendering of a development.

use std::fmt::Write;

use crate::development::{Development, FaceKind};
use crate::geometry::Point2;

const IDENT_COLORS: [&str; 3] = ["#d62728", "#2ca02c", "#1f77b4"];
const FACE_FILL: &str = "#f4f1e8";

fn num(v: f64) -> String {
    // Six decimals keep output byte-stable; normalise negative zero.
    let s = format!("{v:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Render `d` as a standalone SVG 1.1 document. The y axis is flipped so the
/// picture has the usual mathematical orientation, and one user unit equals
/// one unit of length.
pub fn emit_svg(d: &Development) -> String {
    let faces = d.faces();
    let (mut min, mut max) = (
        Point2::new(f64::INFINITY, f64::INFINITY),
        Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for p in faces.iter().flat_map(|f| f.corners.iter()) {
        min = Point2::new(min.x.min(p.x), min.y.min(p.y));
        max = Point2::new(max.x.max(p.x), max.y.max(p.y));
    }
    let extent = (max.x - min.x).max(max.y - min.y);
    let pad = 0.05 * extent;
    let stroke = extent / 250.0;
    let font = extent / 30.0;
    let flip = |p: Point2| Point2::new(p.x, -p.y);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        num(min.x - pad),
        num(-max.y - pad),
        num(max.x - min.x + 2.0 * pad),
        num(max.y - min.y + 2.0 * pad),
    );

    let _ = writeln!(
        out,
        r#"<g id="faces" stroke="black" stroke-width="{}">"#,
        num(stroke)
    );
    for f in &faces {
        let id = match f.kind {
            FaceKind::Triangle => "T".to_string(),
            FaceKind::Rectangle(i) => format!("R{}", i + 1),
        };
        let mut path = String::new();
        for (k, p) in f.corners.iter().map(|&p| flip(p)).enumerate() {
            let _ = write!(
                path,
                "{}{} {} ",
                if k == 0 { "M" } else { "L" },
                num(p.x),
                num(p.y)
            );
        }
        path.push('Z');
        let _ = writeln!(
            out,
            r#"<path class="face" id="{id}" fill="{FACE_FILL}" d="{path}"/>"#
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g id="identifications" stroke-width="{}">"#,
        num(2.5 * stroke)
    );
    for id in d.identifications() {
        let color = IDENT_COLORS[id.rectangle];
        let _ = write!(
            out,
            r#"<g class="identification" id="d{}" stroke="{color}">"#,
            id.rectangle + 1
        );
        for seg in [id.first, id.second] {
            let (a, b) = (flip(seg.start), flip(seg.end));
            let _ = write!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(a.x),
                num(a.y),
                num(b.x),
                num(b.y)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(
        out,
        r#"<g id="boundary" font-size="{}" text-anchor="middle">"#,
        num(font)
    );
    for i in 0..3 {
        let seg = d.boundary_trace(i);
        let r = d.rectangle(i);
        let mid = flip(seg.at(0.5) + r.normal * (1.2 * font));
        let (a, b) = (flip(seg.start), flip(seg.end));
        let _ = writeln!(
            out,
            r#"<line class="boundary" stroke="black" stroke-width="{}" x1="{}" y1="{}" x2="{}" y2="{}"/><text x="{}" y="{}">c{}</text>"#,
            num(2.0 * stroke),
            num(a.x),
            num(a.y),
            num(b.x),
            num(b.y),
            num(mid.x),
            num(mid.y),
            i + 1
        );
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g id="singularity" fill="black">"#);
    for p in d.triangle().iter().map(|&p| flip(p)) {
        let _ = writeln!(
            out,
            r#"<circle class="cone-point" cx="{}" cy="{}" r="{}"/>"#,
            num(p.x),
            num(p.y),
            num(3.0 * stroke)
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
