use std::fmt::Write as _;

use crate::dataio::Gesture;
use crate::features::{Feature, FeatureRecord};
use crate::{Error, Result};

/// Linear interpolation between order statistics (the inclusive method).
/// `sorted` must be ascending and non-empty.
pub fn quantile_inclusive(sorted: &[f64], q: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Five-number summary and outliers of one gesture.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxPlotSummary {
    pub gesture: Gesture,
    pub n: usize,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    /// Most extreme values within 1.5 IQR of the box.
    pub whisker_low: f64,
    pub whisker_high: f64,
    /// Values beyond 1.5 IQR, ascending.
    pub outliers: Vec<f64>,
}

impl BoxPlotSummary {
    pub fn new(gesture: Gesture, values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyTable);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        let mut s = values.to_vec();
        s.sort_by(f64::total_cmp);
        let q1 = quantile_inclusive(&s, 0.25);
        let q3 = quantile_inclusive(&s, 0.75);
        let fence = 1.5 * (q3 - q1);
        let (lo_fence, hi_fence) = (q1 - fence, q3 + fence);
        let inside = || {
            s.iter()
                .copied()
                .filter(|v| *v >= lo_fence && *v <= hi_fence)
        };
        Ok(BoxPlotSummary {
            gesture,
            n: s.len(),
            min: s[0],
            q1,
            median: quantile_inclusive(&s, 0.5),
            q3,
            max: s[s.len() - 1],
            whisker_low: inside().next().unwrap_or(q1),
            whisker_high: inside().next_back().unwrap_or(q3),
            outliers: s
                .iter()
                .copied()
                .filter(|v| *v < lo_fence || *v > hi_fence)
                .collect(),
        })
    }

    pub fn is_degenerate(&self) -> bool {
        self.q1 == self.q3
    }
}

/// Summaries of every gesture present in `table`, in report order.
pub fn summarize(table: &[FeatureRecord], feature: Feature) -> Result<Vec<BoxPlotSummary>> {
    Gesture::ALL
        .into_iter()
        .filter_map(|g| {
            let values: Vec<f64> = table
                .iter()
                .filter(|r| r.gesture == g)
                .map(|r| r.get(feature))
                .collect();
            (!values.is_empty()).then(|| BoxPlotSummary::new(g, &values))
        })
        .collect()
}

/// p-values printed on the figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotAnnotations {
    pub overall_p: f64,
    /// `(a, b, p)` of the smallest and largest pairwise p.
    pub min_pair: Option<(Gesture, Gesture, f64)>,
    pub max_pair: Option<(Gesture, Gesture, f64)>,
}

const WIDTH: f64 = 820.0;
const HEIGHT: f64 = 460.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 80.0;
const BOTTOM: f64 = 50.0;

fn esc(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Standalone SVG with one box glyph group per summary.
pub fn render_svg(feature: Feature, boxes: &[BoxPlotSummary], notes: &PlotAnnotations) -> String {
    let lo = boxes.iter().map(|b| b.min).fold(f64::INFINITY, f64::min);
    let hi = boxes
        .iter()
        .map(|b| b.max)
        .fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if lo.is_finite() && hi > lo {
        let pad = 0.05 * (hi - lo);
        (lo - pad, hi + pad)
    } else if lo.is_finite() {
        (lo - 1.0, lo + 1.0)
    } else {
        (0.0, 1.0)
    };
    let plot_h = HEIGHT - TOP - BOTTOM;
    let y = |v: f64| TOP + (hi - v) / (hi - lo) * plot_h;
    let slot = (WIDTH - LEFT - RIGHT) / Gesture::ALL.len() as f64;
    let half = slot * 0.3;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">
<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>
<text class="title" x="{}" y="22" text-anchor="middle" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        esc(feature.name())
    );
    let _ = writeln!(
        s,
        r#"<text class="p-overall" x="{LEFT}" y="44" data-p="{:?}">overall p = {:.4e}</text>"#,
        notes.overall_p, notes.overall_p
    );
    for (class, pair, x) in [
        ("p-min", notes.min_pair, LEFT + 240.0),
        ("p-max", notes.max_pair, LEFT + 480.0),
    ] {
        if let Some((a, b, p)) = pair {
            let label = if class == "p-min" { "min" } else { "max" };
            let _ = writeln!(
                s,
                r#"<text class="{class}" x="{x}" y="44" data-pair="{a}-{b}" data-p="{p:?}">{label} pairwise p = {p:.4e} ({a}-{b})</text>"#
            );
        }
    }
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{}" stroke="black"/>"#,
        HEIGHT - BOTTOM
    );
    for i in 0..=4 {
        let v = lo + (hi - lo) * i as f64 / 4.0;
        let _ = writeln!(
            s,
            r#"<text class="tick" x="{}" y="{:.2}" text-anchor="end">{v:.3}</text>"#,
            LEFT - 6.0,
            y(v) + 4.0
        );
    }
    for b in boxes {
        let cx = LEFT + slot * (b.gesture.index() as f64 + 0.5);
        let _ = write!(
            s,
            r#"<g class="box" data-gesture="{}" data-n="{}" data-min="{:?}" data-q1="{:?}" data-median="{:?}" data-q3="{:?}" data-max="{:?}" data-whisker-low="{:?}" data-whisker-high="{:?}">"#,
            b.gesture, b.n, b.min, b.q1, b.median, b.q3, b.max, b.whisker_low, b.whisker_high
        );
        let _ = write!(
            s,
            r#"<line class="whisker" x1="{cx:.2}" y1="{:.2}" x2="{cx:.2}" y2="{:.2}" stroke="black"/>"#,
            y(b.whisker_low),
            y(b.whisker_high)
        );
        if b.is_degenerate() {
            let _ = write!(
                s,
                r#"<line class="degenerate" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"/>"#,
                cx - half,
                y(b.median),
                cx + half,
                y(b.median)
            );
        } else {
            let _ = write!(
                s,
                r##"<rect class="iqr" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="#cfe0f3" stroke="black"/><line class="median" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#c0392b" stroke-width="2"/>"##,
                cx - half,
                y(b.q3),
                2.0 * half,
                y(b.q1) - y(b.q3),
                cx - half,
                y(b.median),
                cx + half,
                y(b.median)
            );
        }
        for o in &b.outliers {
            let _ = write!(
                s,
                r#"<circle class="outlier" cx="{cx:.2}" cy="{:.2}" r="2.5" fill="none" stroke="black"/>"#,
                y(*o)
            );
        }
        let _ = writeln!(
            s,
            r#"<text class="label" x="{cx:.2}" y="{:.2}" text-anchor="middle">{}</text></g>"#,
            HEIGHT - BOTTOM + 20.0,
            b.gesture
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusive_quantiles() {
        let s = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile_inclusive(&s, 0.25), 1.75);
        assert_eq!(quantile_inclusive(&s, 0.5), 2.5);
        assert_eq!(quantile_inclusive(&s, 0.75), 3.25);
        assert_eq!(quantile_inclusive(&[7.0], 0.3), 7.0);
    }

    #[test]
    fn summary_with_outliers() {
        let b = BoxPlotSummary::new(Gesture::F, &[10.0, 1.0, 2.0, 3.0, 4.0, 5.0, -20.0]).unwrap();
        assert_eq!((b.min, b.max, b.median), (-20.0, 10.0, 3.0));
        assert_eq!((b.q1, b.q3), (1.5, 4.5));
        assert_eq!(b.outliers, vec![-20.0, 10.0]);
        assert_eq!((b.whisker_low, b.whisker_high), (1.0, 5.0));
        assert!(b.min <= b.q1 && b.q1 <= b.median && b.median <= b.q3 && b.q3 <= b.max);
        assert!(BoxPlotSummary::new(Gesture::F, &[]).is_err());
    }

    #[test]
    fn degenerate_box_is_a_line() {
        let b = BoxPlotSummary::new(Gesture::X, &[2.0; 5]).unwrap();
        assert!(b.is_degenerate());
        let notes = PlotAnnotations {
            overall_p: 0.5,
            min_pair: None,
            max_pair: None,
        };
        let svg = render_svg(Feature::Mean, &[b], &notes);
        assert!(svg.contains(r#"class="degenerate""#));
        assert!(!svg.contains(r#"class="iqr""#));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
