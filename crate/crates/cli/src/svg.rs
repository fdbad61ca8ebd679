//! Root-scatter SVG rendering: one panel per polynomial with the strip,
//! the narrowed strip and the central line drawn as guides. Purely a view
//! of the exact documents; nothing here feeds back into a verdict.

pub struct Panel {
    pub title: String,
    pub roots: Vec<(f64, f64)>,
    /// Dimension for the narrowed-strip guide.
    pub dim: u32,
    /// Abscissa of the highlighted vertical line (usually -1/2; shifted
    /// for embedded sections).
    pub line: f64,
}

const PANEL_W: f64 = 320.0;
const PANEL_H: f64 = 240.0;
const MARGIN: f64 = 16.0;

pub fn render(panels: &[Panel]) -> String {
    let cols = (panels.len() as f64).sqrt().ceil().max(1.0) as usize;
    let rows = panels.len().div_ceil(cols);
    let width = cols as f64 * (PANEL_W + MARGIN) + MARGIN;
    let height = rows as f64 * (PANEL_H + MARGIN) + MARGIN;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for (i, panel) in panels.iter().enumerate() {
        let px = MARGIN + (i % cols) as f64 * (PANEL_W + MARGIN);
        let py = MARGIN + (i / cols) as f64 * (PANEL_H + MARGIN);
        svg.push_str(&render_panel(panel, px, py));
    }
    svg.push_str("</svg>\n");
    svg
}

fn render_panel(panel: &Panel, px: f64, py: f64) -> String {
    // Horizontal range: always include the strip and the target line.
    let mut re_min: f64 = -1.3;
    let mut re_max: f64 = 0.3;
    let mut im_max: f64 = 1.0;
    for &(re, im) in &panel.roots {
        re_min = re_min.min(re - 0.3);
        re_max = re_max.max(re + 0.3);
        im_max = im_max.max(im.abs() + 0.3);
    }
    re_min = re_min.min(panel.line - 0.3);
    re_max = re_max.max(panel.line + 0.3);

    let x = |re: f64| px + (re - re_min) / (re_max - re_min) * PANEL_W;
    let y = |im: f64| py + PANEL_H / 2.0 - im / im_max * (PANEL_H / 2.0 - 12.0);

    let narrow = 1.0 / (f64::from(panel.dim) + 1.0);
    let mut out = "<g class=\"panel\">\n".to_string();
    out.push_str(&format!(
        "<rect class=\"frame\" x=\"{px}\" y=\"{py}\" width=\"{PANEL_W}\" height=\"{PANEL_H}\" fill=\"none\" stroke=\"#999\"/>\n"
    ));
    out.push_str(&format!(
        "<rect class=\"cs-strip\" x=\"{:.2}\" y=\"{py}\" width=\"{:.2}\" height=\"{PANEL_H}\" fill=\"#cfe8ff\" opacity=\"0.6\"/>\n",
        x(-1.0),
        x(0.0) - x(-1.0)
    ));
    out.push_str(&format!(
        "<rect class=\"ncs-strip\" x=\"{:.2}\" y=\"{py}\" width=\"{:.2}\" height=\"{PANEL_H}\" fill=\"#9fd0ff\" opacity=\"0.6\"/>\n",
        x(-1.0 + narrow),
        x(-narrow) - x(-1.0 + narrow)
    ));
    out.push_str(&format!(
        "<line class=\"canonical-line\" x1=\"{:.2}\" y1=\"{py}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#d33\" stroke-width=\"1.5\"/>\n",
        x(panel.line),
        x(panel.line),
        py + PANEL_H
    ));
    out.push_str(&format!(
        "<line class=\"axis\" x1=\"{px}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#bbb\" stroke-dasharray=\"3 3\"/>\n",
        y(0.0),
        px + PANEL_W,
        y(0.0)
    ));
    for &(re, im) in &panel.roots {
        out.push_str(&format!(
            "<circle class=\"root\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"#223\"/>\n",
            x(re),
            y(im)
        ));
    }
    out.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" font-family=\"monospace\">{}</text>\n",
        px + 6.0,
        py + 14.0,
        xml_escape(&panel.title)
    ));
    out.push_str("</g>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
