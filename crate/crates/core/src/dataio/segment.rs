use crate::signal::MultichannelSignal;
use crate::{Error, Result};

/// Steady-state trimming and sliding-window geometry, in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentationSpec {
    pub trim_head_s: f64,
    pub trim_tail_s: f64,
    pub window_s: f64,
    pub step_s: f64,
}

impl Default for SegmentationSpec {
    fn default() -> Self {
        SegmentationSpec {
            trim_head_s: 1.0,
            trim_tail_s: 1.0,
            window_s: 0.250,
            step_s: 0.050,
        }
    }
}

/// Sample counts derived from a spec at one sample rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SampleGeometry {
    pub head: usize,
    pub tail: usize,
    pub window: usize,
    pub step: usize,
}

impl SegmentationSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSegmentation(msg));
        if !(self.window_s > 0.0 && self.window_s.is_finite()) {
            return bad(format!("window must be positive, got {} s", self.window_s));
        }
        if !(self.step_s > 0.0 && self.step_s <= self.window_s) {
            return bad(format!(
                "step must lie in (0, window], got {} s for a {} s window",
                self.step_s, self.window_s
            ));
        }
        if !(self.trim_head_s >= 0.0 && self.trim_tail_s >= 0.0)
            || !(self.trim_head_s.is_finite() && self.trim_tail_s.is_finite())
        {
            return bad("trims must be non-negative".into());
        }
        Ok(())
    }

    pub(crate) fn samples(&self, sample_rate_hz: f64) -> Result<SampleGeometry> {
        self.validate()?;
        let n = |s: f64| (s * sample_rate_hz).round() as usize;
        let g = SampleGeometry {
            head: n(self.trim_head_s),
            tail: n(self.trim_tail_s),
            window: n(self.window_s),
            step: n(self.step_s),
        };
        if g.window == 0 || g.step == 0 {
            return Err(Error::InvalidSegmentation(format!(
                "window and step must span at least one sample at {sample_rate_hz} Hz"
            )));
        }
        Ok(g)
    }
}

/// Number of windows a trial of `len` samples yields, or an error when the
/// trimmed trial is shorter than one window.
pub fn window_count(len: usize, sample_rate_hz: f64, spec: &SegmentationSpec) -> Result<usize> {
    let g = spec.samples(sample_rate_hz)?;
    let trimmed = len.saturating_sub(g.head + g.tail);
    if trimmed < g.window {
        return Err(Error::InvalidSegmentation(format!(
            "trimmed trial has {trimmed} samples, window needs {}",
            g.window
        )));
    }
    Ok((trimmed - g.window) / g.step + 1)
}

/// Drops the head and tail transients and cuts the rest into overlapping
/// windows. Samples after the last full window are discarded.
pub fn trim_and_segment(
    signal: &MultichannelSignal,
    spec: &SegmentationSpec,
) -> Result<Vec<MultichannelSignal>> {
    let fs = signal.sample_rate_hz();
    let count = window_count(signal.len(), fs, spec)?;
    let g = spec.samples(fs)?;
    (0..count)
        .map(|k| signal.slice(g.head + k * g.step, g.window))
        .collect()
}
