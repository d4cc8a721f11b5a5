use std::cell::RefCell;
use std::f64::consts::PI;
use std::rc::Rc;

use ndarray::Array2;
use num_complex::Complex64;

use super::ComplexTfm;
use crate::signal::{next_power_of_two, FftPair};
use crate::{Error, Result};

/// Shortest channel accepted by [`cwt`].
pub const MIN_CWT_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveletFamily {
    /// Analytic Morlet, `psi_hat(u) = 2 exp(-(u - w0)^2 / 2)` for `u > 0`.
    Morlet,
}

/// How the channel is extended past its ends before transforming.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Whole-sample symmetric reflection, `x[-k] = x[k]`.
    Reflect,
    /// Burg autoregressive prediction outward from each end; falls back to
    /// reflection when the fitted model does not stay bounded.
    Predictive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveletSpec {
    pub family: WaveletFamily,
    /// `w0 / 2 pi`; scale `a` (seconds) maps to `center_frequency_cycles / a` Hz.
    pub center_frequency_cycles: f64,
    pub voices_per_octave: u32,
    pub min_freq_hz: f64,
    pub max_freq_hz: f64,
    pub boundary: Boundary,
}

impl Default for WaveletSpec {
    fn default() -> Self {
        Self {
            family: WaveletFamily::Morlet,
            center_frequency_cycles: 6.0 / (2.0 * PI),
            voices_per_octave: 16,
            min_freq_hz: 5.0,
            max_freq_hz: 500.0,
            boundary: Boundary::Predictive,
        }
    }
}

impl WaveletSpec {
    pub fn omega0(&self) -> f64 {
        2.0 * PI * self.center_frequency_cycles
    }

    pub fn validate(&self, sample_rate_hz: f64) -> Result<()> {
        if !(self.center_frequency_cycles.is_finite() && self.center_frequency_cycles > 0.0) {
            return Err(Error::InvalidWavelet(format!(
                "center frequency must be positive, got {}",
                self.center_frequency_cycles
            )));
        }
        if self.voices_per_octave < 4 {
            return Err(Error::InvalidWavelet(format!(
                "need at least 4 voices per octave, got {}",
                self.voices_per_octave
            )));
        }
        if !(self.min_freq_hz > 0.0 && self.min_freq_hz < self.max_freq_hz) {
            return Err(Error::InvalidWavelet(format!(
                "frequency range [{}, {}] Hz is empty",
                self.min_freq_hz, self.max_freq_hz
            )));
        }
        if self.max_freq_hz > sample_rate_hz / 2.0 {
            return Err(Error::InvalidWavelet(format!(
                "max frequency {} Hz exceeds Nyquist {} Hz",
                self.max_freq_hz,
                sample_rate_hz / 2.0
            )));
        }
        Ok(())
    }

    /// Log-spaced analysis frequencies, `min * 2^(j / voices)`, ascending.
    pub fn frequencies(&self) -> Vec<f64> {
        let octaves = (self.max_freq_hz / self.min_freq_hz).log2();
        let voices = self.voices_per_octave as f64;
        let n = (octaves * voices + 1e-9).floor() as usize + 1;
        (0..n)
            .map(|j| self.min_freq_hz * (j as f64 / voices).exp2())
            .collect()
    }

    /// Scale in seconds for each entry of [`frequencies`](Self::frequencies).
    pub fn scales(&self) -> Vec<f64> {
        self.frequencies()
            .iter()
            .map(|f| self.center_frequency_cycles / f)
            .collect()
    }

    fn fourier(&self, u: f64) -> f64 {
        match self.family {
            WaveletFamily::Morlet => {
                if u <= 0.0 {
                    0.0
                } else {
                    let d = u - self.omega0();
                    2.0 * (-0.5 * d * d).exp()
                }
            }
        }
    }

    /// `int_0^inf psi_hat(u) / (2u) du`, the log-scale integral of the CWT
    /// of a unit-amplitude real tone.
    pub(crate) fn reconstruction_constant(&self) -> f64 {
        thread_local! {
            static LAST: std::cell::Cell<Option<(u64, f64)>> = const { std::cell::Cell::new(None) };
        }
        let key = self.omega0().to_bits();
        if let Some((k, c)) = LAST.with(|l| l.get()) {
            if k == key {
                return c;
            }
        }
        let c = self.integrate_reconstruction_constant();
        LAST.with(|l| l.set(Some((key, c))));
        c
    }

    fn integrate_reconstruction_constant(&self) -> f64 {
        let w0 = self.omega0();
        let lo = (w0 - 12.0).max(1e-3);
        let hi = w0 + 12.0;
        let n = 20_000;
        let h = (hi - lo) / n as f64;
        let f = |u: f64| self.fourier(u) / (2.0 * u);
        let mut acc = f(lo) + f(hi);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(lo + h * i as f64);
        }
        acc * h / 3.0
    }
}

/// CWT coefficients together with the wavelet that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalogram {
    pub matrix: ComplexTfm,
    pub wavelet: WaveletSpec,
}

/// Index into `0..n` under whole-sample symmetric reflection (`x[-k] = x[k]`).
fn reflect(i: isize, n: usize) -> usize {
    let period = 2 * (n as isize - 1);
    let m = i.rem_euclid(period);
    if m < n as isize {
        m as usize
    } else {
        (period - m) as usize
    }
}

/// Maximum autoregressive order used by [`Boundary::Predictive`].
const MAX_AR_ORDER: usize = 32;

/// Burg estimate of prediction coefficients `a[1..]` with
/// `x[n] ~ -sum_k a[k] x[n-k]`; `a[0] == 1`. Stops early once the residual
/// energy vanishes, which happens for pure tones.
fn burg(x: &[f64], max_order: usize) -> Vec<f64> {
    let n = x.len();
    let mut f = x.to_vec();
    let mut b = x.to_vec();
    let mut a = vec![1.0];
    let e0: f64 = x.iter().map(|v| v * v).sum::<f64>() / n as f64;
    if e0 == 0.0 {
        return a;
    }
    let mut err = e0;
    for m in 0..max_order.min(n.saturating_sub(1)) {
        let mut num = 0.0;
        let mut den = 0.0;
        for i in m + 1..n {
            num += f[i] * b[i - 1];
            den += f[i] * f[i] + b[i - 1] * b[i - 1];
        }
        if den <= 1e-300 {
            break;
        }
        let k = -2.0 * num / den;
        for i in (m + 1..n).rev() {
            let fi = f[i];
            f[i] = fi + k * b[i - 1];
            b[i] = b[i - 1] + k * fi;
        }
        a.push(0.0);
        let prev = a.clone();
        for j in 1..a.len() {
            a[j] = prev[j] + k * prev[a.len() - j - 1];
        }
        err *= 1.0 - k * k;
        if err <= 1e-14 * e0 {
            break;
        }
    }
    a
}

/// Continues `x` forward by `count` samples with the predictor `a`.
fn predict_forward(x: &[f64], a: &[f64], count: usize) -> Option<Vec<f64>> {
    let p = a.len() - 1;
    let limit = 10.0 * x.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(1e-300);
    let mut hist: Vec<f64> = x[x.len() - p..].to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let next = -(1..=p).map(|k| a[k] * hist[hist.len() - k]).sum::<f64>();
        if !next.is_finite() || next.abs() > limit {
            return None;
        }
        hist.push(next);
        out.push(next);
    }
    Some(out)
}

/// `x` padded with `left` and `right` samples according to `boundary`.
fn extend(x: &[f64], left: usize, right: usize, boundary: Boundary) -> Vec<f64> {
    let n = x.len();
    let reflected = || -> Vec<f64> {
        (0..n + left + right)
            .map(|i| x[reflect(i as isize - left as isize, n)])
            .collect()
    };
    if boundary == Boundary::Reflect {
        return reflected();
    }
    let mean = x.iter().sum::<f64>() / n as f64;
    let centered: Vec<f64> = x.iter().map(|v| v - mean).collect();
    // The model is fitted to the channel divided by its peak and rounded to
    // single precision, so a scaled channel yields the same coefficients and
    // a proportionally scaled extension.
    let peak = centered.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let canonical: Vec<f64> = centered.iter().map(|v| (v / peak) as f32 as f64).collect();
    let order = MAX_AR_ORDER.min(n / 4);
    let a = if peak > 0.0 {
        burg(&canonical, order)
    } else {
        vec![1.0]
    };
    if a.len() == 1 {
        return reflected();
    }
    let reversed: Vec<f64> = centered.iter().rev().copied().collect();
    let (Some(tail), Some(head)) = (
        predict_forward(&centered, &a, right),
        predict_forward(&reversed, &a, left),
    ) else {
        return reflected();
    };
    head.iter()
        .rev()
        .map(|v| v + mean)
        .chain(x.iter().copied())
        .chain(tail.iter().map(|v| v + mean))
        .collect()
}

/// FFT plans and nonzero wavelet samples for one (wavelet, rate, length).
struct FilterBank {
    key: (WaveletSpec, u64, usize),
    plan: FftPair,
    /// Per row, `(bin, psi_hat(scale * xi_bin))` for every positive sample.
    rows: Vec<Vec<(usize, f64)>>,
}

impl FilterBank {
    fn build(wavelet: &WaveletSpec, sample_rate_hz: f64, len: usize) -> Result<Self> {
        let dxi = 2.0 * PI * sample_rate_hz / len as f64;
        let rows = wavelet
            .frequencies()
            .iter()
            .map(|f| {
                let scale = wavelet.center_frequency_cycles / f;
                (1..=len / 2)
                    .map(|k| (k, wavelet.fourier(scale * dxi * k as f64)))
                    .filter(|&(_, w)| w > 0.0)
                    .collect()
            })
            .collect();
        Ok(FilterBank {
            key: (*wavelet, sample_rate_hz.to_bits(), len),
            plan: FftPair::new(len)?,
            rows,
        })
    }

    /// The bank for these parameters, reusing the calling thread's last one
    /// when it matches.
    fn get(wavelet: &WaveletSpec, sample_rate_hz: f64, len: usize) -> Result<Rc<Self>> {
        thread_local! {
            static LAST: RefCell<Option<Rc<FilterBank>>> = const { RefCell::new(None) };
        }
        let key = (*wavelet, sample_rate_hz.to_bits(), len);
        if let Some(bank) = LAST.with(|l| l.borrow().clone()).filter(|b| b.key == key) {
            return Ok(bank);
        }
        let bank = Rc::new(Self::build(wavelet, sample_rate_hz, len)?);
        LAST.with(|l| *l.borrow_mut() = Some(bank.clone()));
        Ok(bank)
    }
}

/// Morlet CWT on a log-frequency grid, evaluated in the Fourier domain.
///
/// Coefficients use the `1/a` normalization so a real tone `A cos(2 pi f t)`
/// has ridge magnitude `A` at the scale mapped to `f`. The channel is
/// extended past both ends per [`WaveletSpec::boundary`] before
/// transforming. Rows are ordered by increasing frequency.
pub fn cwt(channel: &[f64], sample_rate_hz: f64, wavelet: &WaveletSpec) -> Result<Scalogram> {
    let n = channel.len();
    if n < MIN_CWT_LEN {
        return Err(Error::SignalTooShort {
            len: n,
            min: MIN_CWT_LEN,
        });
    }
    if let Some(i) = channel.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    wavelet.validate(sample_rate_hz)?;

    let len = next_power_of_two(2 * n);
    let pad_left = (len - n) / 2;
    let bank = FilterBank::get(wavelet, sample_rate_hz, len)?;

    let mut spectrum: Vec<Complex64> =
        extend(channel, pad_left, len - n - pad_left, wavelet.boundary)
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();
    bank.plan.forward(&mut spectrum);

    let freqs = wavelet.frequencies();
    let mut coefficients = Array2::<Complex64>::zeros((freqs.len(), n));
    let mut buf = vec![Complex64::default(); len];
    for (row, weights) in bank.rows.iter().enumerate() {
        buf.iter_mut().for_each(|v| *v = Complex64::default());
        for &(k, w) in weights {
            buf[k] = spectrum[k] * w;
        }
        bank.plan.inverse(&mut buf);
        for (dst, src) in coefficients
            .row_mut(row)
            .iter_mut()
            .zip(&buf[pad_left..pad_left + n])
        {
            *dst = *src;
        }
    }

    let time_axis = (0..n).map(|i| i as f64 / sample_rate_hz).collect();
    let matrix = ComplexTfm::new(coefficients, freqs, time_axis, sample_rate_hz)?;
    Ok(Scalogram {
        matrix,
        wavelet: *wavelet,
    })
}
