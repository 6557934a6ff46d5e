use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::domains::Status;

use super::{AtlasError, GridScan};

/// Fixed-point with 9 decimals and no negative zero.
pub fn fmt9(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// `p,q,status,criteria` rows in q-major order.
pub fn render_csv(scan: &GridScan) -> String {
    let mut out = String::from("p,q,status,criteria\n");
    for (i, row) in scan.cells.iter().enumerate() {
        let q = fmt9(scan.q_center(i));
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{}", fmt9(scan.p_center(j)), q, v.status.label(), v.criteria_string());
        }
    }
    out
}

pub fn emit_csv(scan: &GridScan, path: &Path) -> Result<(), AtlasError> {
    fs::write(path, render_csv(scan))?;
    Ok(())
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 640.0;
const MARGIN: f64 = 60.0;
const LINE_COLORS: [&str; 8] = ["#d4a017", "#c0392b", "#1e8449", "#000000", "#8e44ad", "#1f618d", "#7f8c8d", "#e67e22"];

fn fill(status: Status) -> &'static str {
    match status {
        Status::LiouvilleProven(_) => "#b48ad8",
        Status::LiouvilleBoundedOnly(_) => "#5b8def",
        Status::RadialSolutionsExist => "#ffffff",
        Status::Unknown => "#c8c8c8",
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Coloured cells, curve overlays and integer ticks as SVG 1.1.
pub fn render_svg(scan: &GridScan) -> String {
    let (p0, p1) = scan.p_range;
    let (q0, q1) = scan.q_range;
    let x = |p: f64| MARGIN + (p - p0) / (p1 - p0) * WIDTH;
    let y = |q: f64| MARGIN + (q1 - q) / (q1 - q0) * HEIGHT;
    let (nx, ny) = scan.resolution;
    let cw = WIDTH / nx as f64;
    let ch = HEIGHT / ny as f64;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        WIDTH + 2.0 * MARGIN + 120.0,
        HEIGHT + 2.0 * MARGIN,
        WIDTH + 2.0 * MARGIN + 120.0,
        HEIGHT + 2.0 * MARGIN
    );
    let _ = writeln!(
        s,
        r#"<title>n = {}{}</title>"#,
        scan.n,
        if scan.bounded { ", bounded solutions" } else { "" }
    );
    let _ = writeln!(s, r#"<g id="cells" shape-rendering="crispEdges">"#);
    for (i, row) in scan.cells.iter().enumerate() {
        let top = MARGIN + HEIGHT - (i as f64 + 1.0) * ch;
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(
                s,
                r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="{}"/>"#,
                MARGIN + j as f64 * cw,
                top,
                cw,
                ch,
                fill(v.status)
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="overlays" fill="none" stroke-width="1.5">"#);
    for (k, o) in scan.overlays.iter().enumerate() {
        let color = LINE_COLORS[k % LINE_COLORS.len()];
        for seg in &o.segments {
            let pts: Vec<String> = seg.iter().map(|&(p, q)| format!("{:.3},{:.3}", x(p), y(q))).collect();
            let _ = writeln!(s, r#"<polyline points="{}" stroke="{color}"/>"#, pts.join(" "));
        }
        if let Some(&(p, q)) = o.segments.first().and_then(|seg| seg.last()) {
            let _ = writeln!(
                s,
                r#"<text x="{:.3}" y="{:.3}" font-size="11" fill="{color}" stroke="none">{}</text>"#,
                x(p) + 3.0,
                y(q) - 3.0,
                escape(&o.name)
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r##"<g id="axes" stroke="#000000" font-size="12">"##);
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN:.3}" y="{MARGIN:.3}" width="{WIDTH:.3}" height="{HEIGHT:.3}" fill="none"/>"#
    );
    for t in (p0.ceil() as i64)..=(p1.floor() as i64) {
        let tx = x(t as f64);
        let by = MARGIN + HEIGHT;
        let _ = writeln!(s, r#"<line x1="{tx:.3}" y1="{by:.3}" x2="{tx:.3}" y2="{:.3}"/>"#, by + 6.0);
        let _ = writeln!(s, r#"<text x="{tx:.3}" y="{:.3}" text-anchor="middle" stroke="none">{t}</text>"#, by + 20.0);
    }
    for t in (q0.ceil() as i64)..=(q1.floor() as i64) {
        let ty = y(t as f64);
        let _ = writeln!(s, r#"<line x1="{:.3}" y1="{ty:.3}" x2="{MARGIN:.3}" y2="{ty:.3}"/>"#, MARGIN - 6.0);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" text-anchor="end" stroke="none">{t}</text>"#, MARGIN - 10.0, ty + 4.0);
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle" stroke="none">p</text>"#,
        MARGIN + WIDTH / 2.0,
        MARGIN + HEIGHT + 45.0
    );
    let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" stroke="none">q</text>"#, MARGIN - 45.0, MARGIN + HEIGHT / 2.0);
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="legend" font-size="12">"#);
    let legend = [
        ("liouville", "#b48ad8"),
        ("bounded only", "#5b8def"),
        ("radial solutions", "#ffffff"),
        ("unknown", "#c8c8c8"),
    ];
    for (k, (name, color)) in legend.iter().enumerate() {
        let ly = MARGIN + k as f64 * 20.0;
        let lx = MARGIN + WIDTH + 15.0;
        let _ = writeln!(s, r##"<rect x="{lx:.3}" y="{ly:.3}" width="12" height="12" fill="{color}" stroke="#000000"/>"##);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}">{name}</text>"#, lx + 18.0, ly + 10.0);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(scan: &GridScan, path: &Path) -> Result<(), AtlasError> {
    fs::write(path, render_svg(scan))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::scan_grid;

    #[test]
    fn fmt9_examples() {
        assert_eq!(fmt9(1.0), "1.000000000");
        assert_eq!(fmt9(-0.0), "0.000000000");
        assert_eq!(fmt9(-1e-12), "0.000000000");
        assert_eq!(fmt9(-0.25), "-0.250000000");
    }

    #[test]
    fn csv_rows() {
        let s = scan_grid(6, (0.5, 1.5), (0.0, 0.2), (2, 2), false, None).unwrap();
        let csv = render_csv(&s);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "p,q,status,criteria");
        assert_eq!(lines[1], "0.750000000,0.050000000,liouville,cond3;cond4;cond5;adm_L");
        assert_eq!(render_csv(&s), csv);
        let r = scan_grid(6, (2.5, 3.5), (0.4, 0.6), (2, 2), false, None).unwrap();
        assert!(render_csv(&r).lines().nth(1).unwrap().ends_with(",radial_exists,"));
    }

    #[test]
    fn svg_small() {
        let s = scan_grid(6, (0.0, 1.0), (0.0, 1.0), (2, 2), false, None).unwrap();
        let svg = render_svg(&s);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        let cells = svg.split(r#"<g id="cells""#).nth(1).unwrap().split("</g>").next().unwrap();
        assert_eq!(cells.matches("<rect").count(), 4);
        assert_eq!(svg, render_svg(&s));
    }
}
