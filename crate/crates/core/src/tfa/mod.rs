//! Continuous wavelet transform and single-channel synchrosqueezing.

mod cwt;
mod sst;

pub use cwt::{cwt, Boundary, Scalogram, WaveletFamily, WaveletSpec, MIN_CWT_LEN};
pub use sst::{phase_transform, reassignment_weights, sst, synchrosqueeze, PhaseTransform};

use ndarray::Array2;
use num_complex::Complex64;

use crate::{Error, Result};

/// Coefficient types that can live in a [`TimeFrequencyMatrix`].
pub trait Coefficient: Copy + Send + Sync {
    fn magnitude(&self) -> f64;
    fn energy(&self) -> f64;
    fn is_finite(&self) -> bool;
}

impl Coefficient for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn energy(&self) -> f64 {
        self * self
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Coefficient for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn energy(&self) -> f64 {
        self.norm_sqr()
    }
    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Coefficients over `[frequency_bin][time_index]` with their axes.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeFrequencyMatrix<T> {
    coefficients: Array2<T>,
    freq_axis_hz: Vec<f64>,
    time_axis_s: Vec<f64>,
    sample_rate_hz: f64,
    edge_columns: usize,
}

pub type ComplexTfm = TimeFrequencyMatrix<Complex64>;
pub type RealTfm = TimeFrequencyMatrix<f64>;

impl<T: Coefficient> TimeFrequencyMatrix<T> {
    pub fn new(
        coefficients: Array2<T>,
        freq_axis_hz: Vec<f64>,
        time_axis_s: Vec<f64>,
        sample_rate_hz: f64,
    ) -> Result<Self> {
        let (rows, cols) = coefficients.dim();
        if rows != freq_axis_hz.len() || cols != time_axis_s.len() {
            return Err(Error::ShapeMismatch(format!(
                "coefficients are {rows}x{cols} but axes have {} frequencies and {} times",
                freq_axis_hz.len(),
                time_axis_s.len()
            )));
        }
        if !(sample_rate_hz.is_finite() && sample_rate_hz > 0.0) {
            return Err(Error::InvalidSignal(format!(
                "sample rate must be positive, got {sample_rate_hz}"
            )));
        }
        check_freq_axis(&freq_axis_hz, sample_rate_hz)?;
        if let Some(i) = coefficients.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        let edge_columns = (cols as f64 * 0.05).ceil() as usize;
        Ok(Self {
            coefficients,
            freq_axis_hz,
            time_axis_s,
            sample_rate_hz,
            edge_columns,
        })
    }

    pub fn coefficients(&self) -> &Array2<T> {
        &self.coefficients
    }

    pub fn freq_axis_hz(&self) -> &[f64] {
        &self.freq_axis_hz
    }

    pub fn time_axis_s(&self) -> &[f64] {
        &self.time_axis_s
    }

    pub fn sample_rate_hz(&self) -> f64 {
        self.sample_rate_hz
    }

    pub fn n_freqs(&self) -> usize {
        self.freq_axis_hz.len()
    }

    pub fn n_times(&self) -> usize {
        self.time_axis_s.len()
    }

    /// Number of columns at each end that sit within 5% of the boundary.
    /// They are kept in the matrix; this is metadata only.
    pub fn edge_columns(&self) -> usize {
        self.edge_columns
    }

    /// Column range excluding the edge columns at both ends.
    pub fn interior_columns(&self) -> std::ops::Range<usize> {
        let n = self.n_times();
        self.edge_columns.min(n)..n.saturating_sub(self.edge_columns)
    }

    pub fn magnitudes(&self) -> Array2<f64> {
        self.coefficients.map(Coefficient::magnitude)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.magnitude() == 0.0)
    }

    pub fn into_coefficients(self) -> Array2<T> {
        self.coefficients
    }
}

fn check_freq_axis(axis: &[f64], sample_rate_hz: f64) -> Result<()> {
    if axis.is_empty() {
        return Err(Error::ShapeMismatch("empty frequency axis".into()));
    }
    let nyquist = sample_rate_hz / 2.0;
    if axis.iter().any(|&f| !(f > 0.0 && f <= nyquist)) {
        return Err(Error::ShapeMismatch(format!(
            "frequency axis must lie in (0, {nyquist}] Hz"
        )));
    }
    if axis.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::ShapeMismatch(
            "frequency axis must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// `n` evenly spaced frequencies from `lo` to `hi` inclusive.
pub fn linear_axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n).map(|i| lo + step * i as f64).collect()
        }
    }
}

/// Index of the axis entry closest to `f`, or `None` when `f` falls more
/// than half a bin outside the axis. Ties go to the lower bin.
pub fn nearest_bin(axis: &[f64], f: f64) -> Option<usize> {
    let n = axis.len();
    if n == 0 || !f.is_finite() {
        return None;
    }
    if n == 1 {
        return Some(0);
    }
    let lo_edge = axis[0] - (axis[1] - axis[0]) / 2.0;
    let hi_edge = axis[n - 1] + (axis[n - 1] - axis[n - 2]) / 2.0;
    if f < lo_edge || f > hi_edge {
        return None;
    }
    // First index with axis[i] >= f, found by walking from the position
    // f would have on an evenly spaced axis.
    let span = axis[n - 1] - axis[0];
    let guess = ((f - axis[0]) / span * (n - 1) as f64).clamp(0.0, (n - 1) as f64) as usize;
    let mut i = guess;
    while i > 0 && axis[i - 1] >= f {
        i -= 1;
    }
    while i < n && axis[i] < f {
        i += 1;
    }
    if i == 0 {
        return Some(0);
    }
    if i == n {
        return Some(n - 1);
    }
    if f - axis[i - 1] <= axis[i] - f {
        Some(i - 1)
    } else {
        Some(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_validation() {
        let ok = RealTfm::new(
            Array2::zeros((2, 3)),
            vec![1.0, 2.0],
            vec![0.0, 0.1, 0.2],
            10.0,
        );
        assert!(ok.is_ok());
        let bad_shape = RealTfm::new(
            Array2::zeros((3, 3)),
            vec![1.0, 2.0],
            vec![0.0, 0.1, 0.2],
            10.0,
        );
        assert!(matches!(bad_shape, Err(Error::ShapeMismatch(_))));
        let not_increasing = RealTfm::new(Array2::zeros((2, 1)), vec![2.0, 2.0], vec![0.0], 10.0);
        assert!(not_increasing.is_err());
        let above_nyquist = RealTfm::new(Array2::zeros((2, 1)), vec![1.0, 6.0], vec![0.0], 10.0);
        assert!(above_nyquist.is_err());
        let mut nan = Array2::zeros((2, 1));
        nan[[1, 0]] = f64::NAN;
        assert!(matches!(
            RealTfm::new(nan, vec![1.0, 2.0], vec![0.0], 10.0),
            Err(Error::NonFinite(1))
        ));
    }

    #[test]
    fn nearest_bin_rules() {
        let axis = linear_axis(10.0, 50.0, 5);
        assert_eq!(axis, vec![10.0, 20.0, 30.0, 40.0, 50.0]);
        assert_eq!(nearest_bin(&axis, 24.0), Some(1));
        assert_eq!(nearest_bin(&axis, 25.0), Some(1));
        assert_eq!(nearest_bin(&axis, 25.1), Some(2));
        assert_eq!(nearest_bin(&axis, 5.0), Some(0));
        assert_eq!(nearest_bin(&axis, 4.9), None);
        assert_eq!(nearest_bin(&axis, 55.0), Some(4));
        assert_eq!(nearest_bin(&axis, 55.1), None);
        assert_eq!(nearest_bin(&axis, f64::NAN), None);
    }

    #[test]
    fn edge_metadata() {
        let m = RealTfm::new(
            Array2::zeros((1, 500)),
            vec![100.0],
            (0..500).map(|i| i as f64 / 2000.0).collect(),
            2000.0,
        )
        .unwrap();
        assert_eq!(m.edge_columns(), 25);
        assert_eq!(m.interior_columns(), 25..475);
    }
}
