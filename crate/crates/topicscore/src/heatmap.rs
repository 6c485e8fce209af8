//! SVG heatmap of normalized topic scores.
//!
//! Rows are topics in model order, columns are documents in corpus order.
//! Each cell takes the colour of the band its value falls into; bands split
//! [0, 1] into equal, left-closed intervals, the last one closed.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use topicscore_core::scoring::TopicScoreMatrix;

use crate::error::{Error, Result};
use crate::report::write_file;

pub const DEFAULT_PALETTE: [&str; 5] = ["#f7fbff", "#c6dbef", "#6baed6", "#2171b5", "#08306b"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeatmapSpec {
    pub bands: usize,
    pub palette: Vec<String>,
    pub cell_width: u32,
    pub cell_height: u32,
    pub font_size: u32,
}

impl Default for HeatmapSpec {
    fn default() -> Self {
        HeatmapSpec {
            bands: DEFAULT_PALETTE.len(),
            palette: DEFAULT_PALETTE.iter().map(|c| c.to_string()).collect(),
            cell_width: 56,
            cell_height: 22,
            font_size: 12,
        }
    }
}

impl HeatmapSpec {
    /// Default geometry with `bands` colours, interpolated between the ends
    /// of the default palette unless `bands` equals its length.
    pub fn with_bands(bands: usize) -> Result<Self> {
        if bands < 2 {
            return Err(Error::Config(format!(
                "heatmap needs at least 2 bands, got {bands}"
            )));
        }
        let mut spec = HeatmapSpec::default();
        if bands != spec.bands {
            let from = parse_hex(DEFAULT_PALETTE[0]).expect("valid default colour");
            let to = parse_hex(DEFAULT_PALETTE[DEFAULT_PALETTE.len() - 1])
                .expect("valid default colour");
            spec.palette = (0..bands)
                .map(|i| {
                    let f = i as f64 / (bands - 1) as f64;
                    let mix = |a: u8, b: u8| (a as f64 + (b as f64 - a as f64) * f).round() as u8;
                    format!(
                        "#{:02x}{:02x}{:02x}",
                        mix(from[0], to[0]),
                        mix(from[1], to[1]),
                        mix(from[2], to[2])
                    )
                })
                .collect();
            spec.bands = bands;
        }
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.bands < 2 {
            return Err(Error::Config(format!(
                "heatmap needs at least 2 bands, got {}",
                self.bands
            )));
        }
        if self.palette.len() != self.bands {
            return Err(Error::Config(format!(
                "palette has {} colours for {} bands",
                self.palette.len(),
                self.bands
            )));
        }
        if let Some(bad) = self.palette.iter().find(|c| parse_hex(c).is_none()) {
            return Err(Error::Config(format!(
                "palette colour `{bad}` is not #rrggbb"
            )));
        }
        if self.cell_width == 0 || self.cell_height == 0 || self.font_size == 0 {
            return Err(Error::Config(
                "heatmap cell size and font size must be positive".into(),
            ));
        }
        Ok(())
    }
}

fn parse_hex(colour: &str) -> Option<[u8; 3]> {
    let hex = colour.strip_prefix('#')?;
    if hex.len() != 6 || !hex.chars().all(|c| c.is_ascii_hexdigit()) {
        return None;
    }
    let byte = |i: usize| u8::from_str_radix(&hex[i..i + 2], 16).ok();
    Some([byte(0)?, byte(2)?, byte(4)?])
}

/// Band of a value in [0, 1]: `floor(v * bands)`, with 1 (and anything
/// above) in the last band and anything not above 0 in the first.
pub fn band_index(value: f64, bands: usize) -> usize {
    if value.is_nan() || value <= 0.0 {
        return 0;
    }
    ((value * bands as f64).floor() as usize).min(bands - 1)
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

// Rough advance width of one character at the label font size.
fn text_width(text: &str, font_size: u32) -> u32 {
    (text.chars().count() as u32 * font_size * 3).div_ceil(5)
}

pub fn render_heatmap_svg(scores: &TopicScoreMatrix, spec: &HeatmapSpec) -> Result<String> {
    spec.validate()?;
    let fs = spec.font_size;
    let (cw, ch) = (spec.cell_width, spec.cell_height);
    let n_topics = scores.n_topics() as u32;
    let n_docs = scores.n_docs() as u32;

    let left = 12
        + scores
            .topic_ids
            .iter()
            .map(|t| text_width(t, fs))
            .max()
            .unwrap_or(0)
        + 8;
    // Column labels are rotated by 45 degrees.
    let top = 12
        + scores
            .doc_ids
            .iter()
            .map(|d| text_width(d, fs) * 71 / 100)
            .max()
            .unwrap_or(0)
        + fs
        + 8;
    let grid_right = left + n_docs * cw;
    let legend_x = grid_right + 24;
    let swatch = ch.min(fs + 6);
    let legend_height = fs + 8 + spec.bands as u32 * (swatch + 4);
    let width = legend_x + swatch + 8 + text_width("[0.00, 1.00]", fs) + 12;
    let height = top + (n_topics * ch).max(legend_height) + 12;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="{fs}">"#
    );
    let _ = writeln!(
        svg,
        r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##
    );

    let _ = writeln!(svg, r#"<g class="column-labels">"#);
    for (d, doc) in scores.doc_ids.iter().enumerate() {
        let x = left + d as u32 * cw + cw / 2;
        let y = top - 6;
        let _ = writeln!(
            svg,
            r#"<text transform="translate({x},{y}) rotate(-45)" text-anchor="start">{}</text>"#,
            escape(doc)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g class="row-labels">"#);
    for (t, topic) in scores.topic_ids.iter().enumerate() {
        let y = top + t as u32 * ch + ch / 2 + fs * 35 / 100;
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{y}" text-anchor="end">{}</text>"#,
            left - 8,
            escape(topic)
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r##"<g class="cells" stroke="#ffffff" stroke-width="1">"##
    );
    for (t, row) in scores.normalized_rows().iter().enumerate() {
        for (d, &value) in row.iter().enumerate() {
            let band = band_index(value, spec.bands);
            let _ = writeln!(
                svg,
                r#"<rect class="cell" x="{}" y="{}" width="{cw}" height="{ch}" fill="{}" data-band="{band}"><title>{} / {}: {value:.6}</title></rect>"#,
                left + d as u32 * cw,
                top + t as u32 * ch,
                spec.palette[band],
                escape(&scores.topic_ids[t]),
                escape(&scores.doc_ids[d]),
            );
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g class="legend">"#);
    let _ = writeln!(svg, r#"<text x="{legend_x}" y="{}">score</text>"#, top + fs);
    for (i, colour) in spec.palette.iter().enumerate() {
        let y = top + fs + 8 + i as u32 * (swatch + 4);
        let lo = i as f64 / spec.bands as f64;
        let hi = (i + 1) as f64 / spec.bands as f64;
        let close = if i + 1 == spec.bands { ']' } else { ')' };
        let _ = writeln!(
            svg,
            r##"<rect x="{legend_x}" y="{y}" width="{swatch}" height="{swatch}" fill="{colour}" stroke="#999999" stroke-width="0.5"/>"##
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}">[{lo:.2}, {hi:.2}{close}</text>"#,
            legend_x + swatch + 6,
            y + swatch / 2 + fs * 35 / 100
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

pub fn write_heatmap_svg(scores: &TopicScoreMatrix, spec: &HeatmapSpec, path: &Path) -> Result<()> {
    write_file(path, &render_heatmap_svg(scores, spec)?)
}
