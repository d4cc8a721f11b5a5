use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64;

use super::MultichannelSignal;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FilterKind {
    ButterworthBandpass { low_cut_hz: f64, high_cut_hz: f64 },
    Notch { center_hz: f64, quality_factor: f64 },
}

/// IIR filter request. For a band-pass `order` is the order of the low-pass
/// prototype, so order 6 yields six second-order sections.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IirFilterSpec {
    pub kind: FilterKind,
    pub order: usize,
}

impl IirFilterSpec {
    pub fn butterworth_bandpass(order: usize, low_cut_hz: f64, high_cut_hz: f64) -> Self {
        Self {
            kind: FilterKind::ButterworthBandpass {
                low_cut_hz,
                high_cut_hz,
            },
            order,
        }
    }

    pub fn notch(center_hz: f64, quality_factor: f64) -> Self {
        Self {
            kind: FilterKind::Notch {
                center_hz,
                quality_factor,
            },
            order: 2,
        }
    }
}

/// Second-order section with `a[0] == 1`, run in transposed direct form II.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Biquad {
    pub b: [f64; 3],
    pub a: [f64; 3],
}

impl Biquad {
    fn normalized(b: [f64; 3], a: [f64; 3]) -> Self {
        let a0 = a[0];
        Self {
            b: [b[0] / a0, b[1] / a0, b[2] / a0],
            a: [1.0, a[1] / a0, a[2] / a0],
        }
    }

    /// `H(z)` at `z = exp(i w)`.
    pub fn response_at(&self, w: f64) -> Complex64 {
        let z1 = Complex64::from_polar(1.0, -w);
        let z2 = z1 * z1;
        (self.b[0] + z1 * self.b[1] + z2 * self.b[2]) / (1.0 + z1 * self.a[1] + z2 * self.a[2])
    }

    pub fn poles(&self) -> [Complex64; 2] {
        let (a1, a2) = (self.a[1], self.a[2]);
        let disc = Complex64::new(a1 * a1 - 4.0 * a2, 0.0).sqrt();
        [(-a1 + disc) / 2.0, (-a1 - disc) / 2.0]
    }

    /// State that makes the section output settled for a constant unit input.
    fn unit_step_state(&self) -> [f64; 2] {
        let gain = (self.b[0] + self.b[1] + self.b[2]) / (1.0 + self.a[1] + self.a[2]);
        let z2 = self.b[2] - self.a[2] * gain;
        let z1 = self.b[1] - self.a[1] * gain + z2;
        [z1, z2]
    }

    fn dc_gain(&self) -> f64 {
        (self.b[0] + self.b[1] + self.b[2]) / (1.0 + self.a[1] + self.a[2])
    }
}

/// Cascade of second-order sections designed for a fixed sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct SosFilter {
    sections: Vec<Biquad>,
    sample_rate_hz: f64,
    order: usize,
}

impl SosFilter {
    pub fn sections(&self) -> &[Biquad] {
        &self.sections
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn response(&self, freq_hz: f64) -> Complex64 {
        let w = 2.0 * PI * freq_hz / self.sample_rate_hz;
        self.sections
            .iter()
            .map(|s| s.response_at(w))
            .fold(Complex64::new(1.0, 0.0), |acc, h| acc * h)
    }

    pub fn magnitude(&self, freq_hz: f64) -> f64 {
        self.response(freq_hz).norm()
    }

    pub fn magnitude_db(&self, freq_hz: f64) -> f64 {
        20.0 * self.magnitude(freq_hz).log10()
    }

    pub fn poles(&self) -> Vec<Complex64> {
        self.sections.iter().flat_map(|s| s.poles()).collect()
    }

    /// Samples needed for the slowest pole to decay by 1e-4.
    fn settle_len(&self) -> usize {
        let r = self
            .poles()
            .iter()
            .map(|p| p.norm())
            .fold(0.0_f64, f64::max);
        let base = 3 * (2 * self.sections.len() + 1);
        if r <= 0.0 {
            return base;
        }
        let decay = ((1e-4_f64).ln() / r.ln()).ceil() as usize;
        base.max(decay)
    }

    /// Causal filtering with per-section initial state.
    fn run(&self, x: &mut [f64], mut states: Vec<[f64; 2]>) {
        for (section, state) in self.sections.iter().zip(states.iter_mut()) {
            let [b0, b1, b2] = section.b;
            let [_, a1, a2] = section.a;
            let [mut z1, mut z2] = *state;
            for v in x.iter_mut() {
                let input = *v;
                let y = b0 * input + z1;
                z1 = b1 * input - a1 * y + z2;
                z2 = b2 * input - a2 * y;
                *v = y;
            }
        }
    }

    /// Initial states for a cascade settled at input level `x0`.
    fn settled_states(&self, x0: f64) -> Vec<[f64; 2]> {
        let mut level = x0;
        self.sections
            .iter()
            .map(|s| {
                let [z1, z2] = s.unit_step_state();
                let state = [z1 * level, z2 * level];
                level *= s.dc_gain();
                state
            })
            .collect()
    }

    /// Forward-backward filtering of one channel with odd-extension padding.
    pub fn filtfilt(&self, x: &[f64]) -> Result<Vec<f64>> {
        let required = 3 * self.order;
        if x.len() < required.max(2) {
            return Err(Error::FilterWarmup {
                len: x.len(),
                required: required.max(2),
            });
        }
        let n = x.len();
        let pad = self.settle_len().min(n - 1);
        let mut ext = Vec::with_capacity(n + 2 * pad);
        ext.extend((1..=pad).rev().map(|k| 2.0 * x[0] - x[k]));
        ext.extend_from_slice(x);
        ext.extend((1..=pad).map(|k| 2.0 * x[n - 1] - x[n - 1 - k]));

        let states = self.settled_states(ext[0]);
        self.run(&mut ext, states);
        ext.reverse();
        let states = self.settled_states(ext[0]);
        self.run(&mut ext, states);
        ext.reverse();
        Ok(ext[pad..pad + n].to_vec())
    }
}

fn check_cutoff(name: &str, f: f64, nyquist: f64) -> Result<()> {
    if !(f.is_finite() && f > 0.0 && f < nyquist) {
        return Err(Error::InvalidCutoff(format!(
            "{name} = {f} Hz must lie in (0, {nyquist}) Hz"
        )));
    }
    Ok(())
}

/// Designs the digital filter as a cascade of biquads.
///
/// The band-pass is an analog Butterworth prototype moved to the band by the
/// low-pass to band-pass substitution and discretized with a prewarped
/// bilinear transform. The notch is the bilinear image of
/// `(s^2 + w0^2) / (s^2 + s w0 / Q + w0^2)`.
pub fn design_filter(spec: &IirFilterSpec, sample_rate_hz: f64) -> Result<SosFilter> {
    if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
        return Err(Error::InvalidFilter(format!(
            "sample rate must be positive, got {sample_rate_hz}"
        )));
    }
    let nyquist = sample_rate_hz / 2.0;
    let sections = match spec.kind {
        FilterKind::ButterworthBandpass {
            low_cut_hz,
            high_cut_hz,
        } => {
            check_cutoff("low cut", low_cut_hz, nyquist)?;
            check_cutoff("high cut", high_cut_hz, nyquist)?;
            if low_cut_hz >= high_cut_hz {
                return Err(Error::InvalidCutoff(format!(
                    "low cut {low_cut_hz} Hz must be below high cut {high_cut_hz} Hz"
                )));
            }
            if spec.order == 0 || !spec.order.is_multiple_of(2) {
                return Err(Error::InvalidFilter(format!(
                    "band-pass order must be even and positive, got {}",
                    spec.order
                )));
            }
            butterworth_bandpass(spec.order, low_cut_hz, high_cut_hz, sample_rate_hz)
        }
        FilterKind::Notch {
            center_hz,
            quality_factor,
        } => {
            check_cutoff("notch center", center_hz, nyquist)?;
            if spec.order != 2 {
                return Err(Error::InvalidFilter(format!(
                    "notch is realized as a single biquad (order 2), got order {}",
                    spec.order
                )));
            }
            if !(quality_factor.is_finite() && quality_factor > 0.0) {
                return Err(Error::InvalidFilter(format!(
                    "quality factor must be positive, got {quality_factor}"
                )));
            }
            vec![notch(center_hz, quality_factor, sample_rate_hz)]
        }
    };
    Ok(SosFilter {
        sections,
        sample_rate_hz,
        order: spec.order,
    })
}

fn bilinear(s: Complex64, fs: f64) -> Complex64 {
    let k = 2.0 * fs;
    (k + s) / (k - s)
}

fn butterworth_bandpass(prototype_order: usize, f1: f64, f2: f64, fs: f64) -> Vec<Biquad> {
    let warp = |f: f64| 2.0 * fs * (PI * f / fs).tan();
    let (w1, w2) = (warp(f1), warp(f2));
    let bw = w2 - w1;
    let w0_sq = w1 * w2;

    let n = prototype_order;
    let mut digital = Vec::with_capacity(2 * n);
    for k in 0..n {
        let theta = PI * (2 * k + n + 1) as f64 / (2 * n) as f64;
        let p = Complex64::from_polar(1.0, theta);
        let half = p * bw / 2.0;
        let root = (half * half - w0_sq).sqrt();
        digital.push(bilinear(half + root, fs));
        digital.push(bilinear(half - root, fs));
    }

    // Conjugate pairs become one section each; real poles are paired up.
    let tol = 1e-12;
    let mut upper: Vec<Complex64> = digital.iter().copied().filter(|p| p.im > tol).collect();
    let mut real: Vec<f64> = digital
        .iter()
        .filter(|p| p.im.abs() <= tol)
        .map(|p| p.re)
        .collect();
    upper.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    real.sort_by(f64::total_cmp);

    let mut sections: Vec<Biquad> = upper
        .iter()
        .map(|p| Biquad::normalized([1.0, 0.0, -1.0], [1.0, -2.0 * p.re, p.norm_sqr()]))
        .collect();
    for pair in real.chunks(2) {
        let (r1, r2) = (pair[0], pair.get(1).copied().unwrap_or(0.0));
        sections.push(Biquad::normalized(
            [1.0, 0.0, -1.0],
            [1.0, -(r1 + r2), r1 * r2],
        ));
    }

    // Unit gain at the digital image of the analog center frequency.
    let w_center = 2.0 * (w0_sq.sqrt() / (2.0 * fs)).atan();
    let gain: f64 = sections
        .iter()
        .map(|s| s.response_at(w_center).norm())
        .product();
    let first = &mut sections[0];
    for b in first.b.iter_mut() {
        *b /= gain;
    }
    sections
}

fn notch(center_hz: f64, q: f64, fs: f64) -> Biquad {
    let w0 = 2.0 * PI * center_hz / fs;
    let alpha = w0.sin() / (2.0 * q);
    let cos = w0.cos();
    Biquad::normalized(
        [1.0, -2.0 * cos, 1.0],
        [1.0 + alpha, -2.0 * cos, 1.0 - alpha],
    )
}

/// Zero-phase (forward-backward) application of `filter` to every channel.
pub fn apply_filter_zero_phase(
    signal: &MultichannelSignal,
    filter: &SosFilter,
) -> Result<MultichannelSignal> {
    if (signal.sample_rate_hz() - filter.sample_rate_hz()).abs() > 1e-9 * signal.sample_rate_hz() {
        return Err(Error::InvalidFilter(format!(
            "filter designed for {} Hz applied to a {} Hz signal",
            filter.sample_rate_hz(),
            signal.sample_rate_hz()
        )));
    }
    let mut out = Array2::zeros(signal.samples().dim());
    for (i, channel) in signal.channels().enumerate() {
        let x: Vec<f64> = channel.to_vec();
        let y = filter.filtfilt(&x)?;
        out.row_mut(i).assign(&ndarray::Array1::from(y));
    }
    MultichannelSignal::new(out, signal.sample_rate_hz())
}
