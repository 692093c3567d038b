//! CSV/SVG text builders and atomic file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::error::Result;

/// Writes `contents` to a temporary file beside `path` and renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut builder = tempfile::Builder::new();
    // Mode as for a plain create, so the umask decides; the default is 0600.
    #[cfg(unix)]
    builder.permissions(std::os::unix::fs::PermissionsExt::from_mode(0o666));
    let mut tmp = builder.tempfile_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn svg_header(out: &mut String, view_box: &str, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view_box}" width="600" height="600">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// A single closed polyline in the unit-scale window `[-1.2, 1.2]²`, y up.
pub fn svg_closed_path(points: &[(f64, f64)], title: &str) -> String {
    let mut out = String::new();
    svg_header(&mut out, "-1.2 -1.2 2.4 2.4", title);
    out.push_str(r#"<path fill="none" stroke="black" stroke-width="0.004" d=""#);
    for (i, &(x, y)) in points.iter().enumerate() {
        let _ = write!(out, "{}{x:.6} {:.6} ", if i == 0 { "M" } else { "L" }, -y);
    }
    out.push_str("Z\"/>\n</svg>\n");
    out
}

/// Axis-aligned plot: a step path plus horizontal rules, in data coordinates
/// `[x0, x1] × [y0, y1]` mapped onto a 1000 × 600 canvas.
pub struct SvgPlot {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    body: String,
}

impl SvgPlot {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        SvgPlot {
            x0,
            x1,
            y0,
            y1,
            body: String::new(),
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let px = 40.0 + 940.0 * (x - self.x0) / (self.x1 - self.x0);
        let py = 580.0 - 560.0 * (y - self.y0) / (self.y1 - self.y0);
        (px, py)
    }

    /// A step function through `(x_i, y_i)`: each value holds until the next x.
    pub fn steps(&mut self, points: &[(f64, f64)], colour: &str) {
        let mut d = String::new();
        for (i, &(x, y)) in points.iter().enumerate() {
            let (px, py) = self.map(x, y);
            if i == 0 {
                let _ = write!(d, "M{px:.2} {py:.2}");
            } else {
                let _ = write!(d, " H{px:.2} V{py:.2}");
            }
        }
        let _ = writeln!(
            self.body,
            r#"<path fill="none" stroke="{colour}" stroke-width="1" d="{d}"/>"#
        );
    }

    pub fn rule(&mut self, y: f64, colour: &str, label: &str) {
        let (a, py) = self.map(self.x0, y);
        let (b, _) = self.map(self.x1, y);
        let _ = writeln!(
            self.body,
            r#"<line x1="{a:.2}" y1="{py:.2}" x2="{b:.2}" y2="{py:.2}" stroke="{colour}" stroke-dasharray="6 4"/>"#
        );
        let _ = writeln!(
            self.body,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" fill="{colour}">{}</text>"#,
            a + 4.0,
            py - 4.0,
            escape(label)
        );
    }

    pub fn finish(self, title: &str) -> String {
        let mut out = String::new();
        svg_header(&mut out, "0 0 1000 600", title);
        out.push_str(r#"<rect x="40" y="20" width="940" height="560" fill="none" stroke="gray"/>"#);
        out.push('\n');
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}
