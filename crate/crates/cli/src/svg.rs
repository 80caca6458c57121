//! Minimal deterministic SVG emitter for the three figure kinds.
//!
//! Hand-rolled on purpose: byte-identical output for identical input makes
//! the figures diffable in tests, and nothing here needs a raster backend.

/// Stroke patterns distinguish the curves of the γ-bounds figure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineStyle {
    Solid,
    Dashed,
    Dotted,
}

impl LineStyle {
    fn dash_attr(self) -> &'static str {
        match self {
            LineStyle::Solid => "",
            LineStyle::Dashed => " stroke-dasharray=\"7,4\"",
            LineStyle::Dotted => " stroke-dasharray=\"1.5,3.5\"",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Curve {
    pub label: String,
    pub style: LineStyle,
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 25.0;
const MARGIN_T: f64 = 45.0;
const MARGIN_B: f64 = 55.0;

/// Standalone SVG with axes, tick labels and one polyline per curve.
/// `equal_aspect` forces a common x/y scale (conformal images).
pub fn emit_svg(
    title: &str,
    x_label: &str,
    y_label: &str,
    curves: &[Curve],
    equal_aspect: bool,
) -> Result<String, String> {
    if curves.is_empty() || curves.iter().any(|c| c.points.is_empty()) {
        return Err("emit_svg: empty curve data".into());
    }
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for c in curves {
        for &(x, y) in &c.points {
            if !x.is_finite() || !y.is_finite() {
                return Err("emit_svg: non-finite point".into());
            }
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    let pad = |lo: &mut f64, hi: &mut f64| {
        let span = (*hi - *lo).max(1e-12);
        *lo -= 0.05 * span;
        *hi += 0.05 * span;
    };
    pad(&mut xmin, &mut xmax);
    pad(&mut ymin, &mut ymax);

    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let (mut sx, mut sy) = (plot_w / (xmax - xmin), plot_h / (ymax - ymin));
    if equal_aspect {
        let s = sx.min(sy);
        // widen the shorter range so the data stays centred
        let extra_x = plot_w / s - (xmax - xmin);
        let extra_y = plot_h / s - (ymax - ymin);
        xmin -= extra_x / 2.0;
        xmax += extra_x / 2.0;
        ymin -= extra_y / 2.0;
        ymax += extra_y / 2.0;
        sx = s;
        sy = s;
    }
    let px = |x: f64| MARGIN_L + (x - xmin) * sx;
    let py = |y: f64| HEIGHT - MARGIN_B - (y - ymin) * sy;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"24\" font-family=\"sans-serif\" font-size=\"17\" \
         text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        title
    ));

    // frame
    out.push_str(&format!(
        "<rect x=\"{MARGIN_L}\" y=\"{MARGIN_T}\" width=\"{plot_w}\" height=\"{plot_h}\" \
         fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n"
    ));
    // ticks: five per axis
    for k in 0..=4 {
        let fx = xmin + (xmax - xmin) * k as f64 / 4.0;
        let fy = ymin + (ymax - ymin) * k as f64 / 4.0;
        let x = px(fx);
        let y = py(fy);
        out.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            HEIGHT - MARGIN_B,
            HEIGHT - MARGIN_B + 5.0
        ));
        out.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"middle\">{fx:.4}</text>\n",
            HEIGHT - MARGIN_B + 18.0
        ));
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{MARGIN_L}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            MARGIN_L - 5.0
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"end\">{fy:.4}</text>\n",
            MARGIN_L - 8.0,
            y + 4.0
        ));
    }
    // zero axes when zero is inside the range
    if ymin < 0.0 && ymax > 0.0 {
        let y0 = py(0.0);
        out.push_str(&format!(
            "<line x1=\"{MARGIN_L}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" \
             stroke=\"gray\" stroke-width=\"0.7\"/>\n",
            WIDTH - MARGIN_R
        ));
    }
    if xmin < 0.0 && xmax > 0.0 {
        let x0 = px(0.0);
        out.push_str(&format!(
            "<line x1=\"{x0:.2}\" y1=\"{MARGIN_T}\" x2=\"{x0:.2}\" y2=\"{:.2}\" \
             stroke=\"gray\" stroke-width=\"0.7\"/>\n",
            HEIGHT - MARGIN_B
        ));
    }
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\">{}</text>\n",
        MARGIN_L + plot_w / 2.0,
        HEIGHT - 12.0,
        x_label
    ));
    out.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1})\">{}</text>\n",
        MARGIN_T + plot_h / 2.0,
        MARGIN_T + plot_h / 2.0,
        y_label
    ));

    for (idx, c) in curves.iter().enumerate() {
        let mut pts = String::new();
        for &(x, y) in &c.points {
            pts.push_str(&format!("{:.2},{:.2} ", px(x), py(y)));
        }
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.4\"{} points=\"{}\"/>\n",
            c.style.dash_attr(),
            pts.trim_end()
        ));
        // legend swatch + label
        let ly = MARGIN_T + 16.0 + 18.0 * idx as f64;
        let lx = WIDTH - MARGIN_R - 150.0;
        out.push_str(&format!(
            "<line x1=\"{lx:.1}\" y1=\"{ly:.1}\" x2=\"{:.1}\" y2=\"{ly:.1}\" stroke=\"black\" \
             stroke-width=\"1.4\"{}/>\n",
            lx + 28.0,
            c.style.dash_attr()
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            lx + 34.0,
            ly + 4.0,
            c.label
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
