//! Sampled multichannel signals, FFT and IIR filtering.

mod fft;
mod filter;

pub use fft::{fft_forward, fft_inverse, next_power_of_two, FftPair};
pub use filter::{
    apply_filter_zero_phase, design_filter, Biquad, FilterKind, IirFilterSpec, SosFilter,
};

use ndarray::{Array2, ArrayView1, Axis};

use crate::{Error, Result};

/// Uniformly sampled real-valued signal stored as `[channel][time]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultichannelSignal {
    samples: Array2<f64>,
    sample_rate_hz: f64,
}

impl MultichannelSignal {
    pub fn new(samples: Array2<f64>, sample_rate_hz: f64) -> Result<Self> {
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::InvalidSignal(format!(
                "sample rate must be positive, got {sample_rate_hz}"
            )));
        }
        let (channels, len) = samples.dim();
        if channels == 0 || len == 0 {
            return Err(Error::EmptySignal);
        }
        if let Some(idx) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSignal(format!(
                "non-finite sample at channel {}, index {}",
                idx / len,
                idx % len
            )));
        }
        Ok(Self {
            samples,
            sample_rate_hz,
        })
    }

    /// Builds a signal from per-channel sample vectors of equal length.
    pub fn from_channels(channels: &[Vec<f64>], sample_rate_hz: f64) -> Result<Self> {
        let len = channels.first().map_or(0, Vec::len);
        if let Some(bad) = channels.iter().position(|c| c.len() != len) {
            return Err(Error::InvalidSignal(format!(
                "channel {bad} has {} samples, expected {len}",
                channels[bad].len()
            )));
        }
        let flat: Vec<f64> = channels.iter().flatten().copied().collect();
        let samples = Array2::from_shape_vec((channels.len(), len), flat)
            .map_err(|e| Error::InvalidSignal(e.to_string()))?;
        Self::new(samples, sample_rate_hz)
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn channel_count(&self) -> usize {
        self.samples.nrows()
    }

    pub fn len(&self) -> usize {
        self.samples.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.len() as f64 / self.sample_rate_hz
    }

    pub fn samples(&self) -> &Array2<f64> {
        &self.samples
    }

    pub fn channel(&self, index: usize) -> ArrayView1<'_, f64> {
        self.samples.row(index)
    }

    pub fn channels(&self) -> impl Iterator<Item = ArrayView1<'_, f64>> {
        self.samples.axis_iter(Axis(0))
    }

    /// Copy of samples `[start, start + len)` on every channel.
    pub fn slice(&self, start: usize, len: usize) -> Result<Self> {
        if start + len > self.len() || len == 0 {
            return Err(Error::InvalidSignal(format!(
                "slice [{start}, {}) outside signal of {} samples",
                start + len,
                self.len()
            )));
        }
        let samples = self
            .samples
            .slice(ndarray::s![.., start..start + len])
            .to_owned();
        Ok(Self {
            samples,
            sample_rate_hz: self.sample_rate_hz,
        })
    }

    /// Multiplies every sample by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(&self.samples * factor, self.sample_rate_hz)
    }

    pub fn into_samples(self) -> Array2<f64> {
        self.samples
    }
}
