//! SVG and CSV emission of web plots.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use ktweb_core::{Point2, Region, WebPlot};

use crate::format::g17;

const CANVAS: f64 = 800.0;

fn coord(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

/// SVG 1.1 document: one `path` per polyline, styled by family, and a
/// `circle` per singular point. The plot's y axis points up.
pub fn emit_svg(plot: &WebPlot, region: &Region) -> String {
    let (w, h) = (region.x1 - region.x0, region.y1 - region.y0);
    let scale = CANVAS / w.max(h);
    let (width, height) = (w * scale, h * scale);
    let map = |p: &Point2| ((p.x1 - region.x0) * scale, (region.y1 - p.x2) * scale);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        coord(width),
        coord(height),
        coord(width),
        coord(height)
    );
    let _ = writeln!(svg, "<title>{} web</title>", plot.web);
    svg.push_str(concat!(
        "<style>\n",
        ".family-0 { fill: none; stroke: #1f77b4; stroke-width: 1.2; }\n",
        ".family-1 { fill: none; stroke: #d62728; stroke-width: 1.2; }\n",
        ".singular { fill: #000000; }\n",
        "</style>\n",
    ));
    for (family, curves) in plot.families.iter().enumerate() {
        for curve in curves {
            let mut d = String::new();
            for (i, p) in curve.iter().enumerate() {
                let (x, y) = map(p);
                let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, coord(x), coord(y));
            }
            let _ = writeln!(svg, r#"<path class="family-{family}" d="{d}"/>"#);
        }
    }
    for p in &plot.singular_points {
        let (x, y) = map(p);
        let _ = writeln!(svg, r#"<circle class="singular" cx="{}" cy="{}" r="4"/>"#, coord(x), coord(y));
    }
    svg.push_str("</svg>\n");
    svg
}

/// CSV with header `family,curve_index,x1,x2`; curve indices count within a
/// family.
pub fn emit_csv(plot: &WebPlot) -> String {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    writer.write_record(["family", "curve_index", "x1", "x2"]).expect("in-memory write");
    for (family, curves) in plot.families.iter().enumerate() {
        for (index, curve) in curves.iter().enumerate() {
            for p in curve {
                writer
                    .write_record([family.to_string(), index.to_string(), g17(p.x1), g17(p.x2)])
                    .expect("in-memory write");
            }
        }
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}

pub fn write_svg(plot: &WebPlot, region: &Region, path: &Path) -> io::Result<()> {
    std::fs::write(path, emit_svg(plot, region))
}

pub fn write_csv(plot: &WebPlot, path: &Path) -> io::Result<()> {
    std::fs::write(path, emit_csv(plot))
}
