use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64;

use super::{cwt, nearest_bin, ComplexTfm, Scalogram, WaveletSpec};
use crate::{Error, Result};

/// Relative magnitude below which a CWT coefficient has no usable phase.
pub const PHASE_THRESHOLD: f64 = 1e-8;

/// Instantaneous-frequency estimates for every CWT coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTransform {
    /// Estimated frequency in Hz; 0 where `valid` is false.
    pub omega_hz: Array2<f64>,
    pub valid: Array2<bool>,
}

impl PhaseTransform {
    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|&&v| v).count()
    }
}

/// `(1/2 pi) d/db arg W(a, b)` per coefficient.
///
/// The derivative is the central difference of the unwrapped phase,
/// averaging `arg(W[b+1] W*[b])` and `arg(W[b] W*[b-1])`, with one-sided
/// differences in the first and last columns. Each increment is unwrapped
/// separately, so estimates up to the Nyquist frequency are representable,
/// and a pure tone yields its exact frequency. Coefficients with
/// `|W| < 1e-8 max|W|` (or exactly zero) are flagged invalid.
pub fn phase_transform(w: &ComplexTfm) -> PhaseTransform {
    let coef = w.coefficients();
    let (rows, cols) = coef.dim();
    let mut omega_hz = Array2::zeros((rows, cols));
    let mut valid = Array2::from_elem((rows, cols), false);
    let max_sq = coef.iter().map(|c| c.norm_sqr()).fold(0.0, f64::max);
    if max_sq == 0.0 || cols < 2 {
        return PhaseTransform { omega_hz, valid };
    }
    let threshold_sq = (PHASE_THRESHOLD * max_sq.sqrt()).powi(2);
    let scale = w.sample_rate_hz() / (2.0 * PI);
    // inc[b] is the phase step from column b to b + 1.
    let mut inc = vec![None; cols - 1];

    for r in 0..rows {
        let row = coef.row(r);
        for (b, slot) in inc.iter_mut().enumerate() {
            let prod = row[b + 1] * row[b].conj();
            *slot = (prod.re != 0.0 || prod.im != 0.0).then(|| prod.arg());
        }
        for b in 0..cols {
            let m = row[b].norm_sqr();
            if m < threshold_sq || m == 0.0 {
                continue;
            }
            let fwd = inc.get(b).copied().flatten();
            let bwd = if b > 0 { inc[b - 1] } else { None };
            let dphi = match (bwd, fwd) {
                (Some(p), Some(q)) => 0.5 * (p + q),
                (Some(p), None) | (None, Some(p)) => p,
                (None, None) => continue,
            };
            omega_hz[[r, b]] = dphi * scale;
            valid[[r, b]] = true;
        }
    }
    PhaseTransform { omega_hz, valid }
}

/// Per-row weight `|d ln a| / C` that turns a CWT row into its share of the
/// synchrosqueezed column.
///
/// For `1/a`-normalized coefficients, `|d ln a|` is the `a^(-3/2) da`
/// weighting applied to `1/sqrt(a)`-normalized ones. `C` is the wavelet's
/// reconstruction constant, so a real tone of amplitude `A` synchrosqueezes
/// to magnitude `A`.
pub fn reassignment_weights(scalogram: &Scalogram) -> Vec<f64> {
    let ln_f: Vec<f64> = scalogram
        .matrix
        .freq_axis_hz()
        .iter()
        .map(|f| f.ln())
        .collect();
    let c = scalogram.wavelet.reconstruction_constant();
    let n = ln_f.len();
    (0..n)
        .map(|j| {
            let width = match n {
                1 => 1.0,
                _ if j == 0 => ln_f[1] - ln_f[0],
                _ if j == n - 1 => ln_f[n - 1] - ln_f[n - 2],
                _ => 0.5 * (ln_f[j + 1] - ln_f[j - 1]),
            };
            width / c
        })
        .collect()
}

/// Moves every valid CWT coefficient (weighted per scale) to the output bin
/// nearest its instantaneous frequency, in the same column.
///
/// Coefficients whose estimate falls more than half a bin outside
/// `out_freq_axis` are dropped.
pub fn synchrosqueeze(
    scalogram: &Scalogram,
    phase: &PhaseTransform,
    out_freq_axis: &[f64],
) -> Result<ComplexTfm> {
    let w = &scalogram.matrix;
    let dim = w.coefficients().dim();
    if phase.omega_hz.dim() != dim || phase.valid.dim() != dim {
        return Err(Error::ShapeMismatch(format!(
            "phase transform is {:?}, coefficients are {:?}",
            phase.omega_hz.dim(),
            dim
        )));
    }
    if out_freq_axis.is_empty() || out_freq_axis.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::ShapeMismatch(
            "output frequency axis must be non-empty and strictly increasing".into(),
        ));
    }
    let weights = reassignment_weights(scalogram);
    let cols = dim.1;
    let mut out = Array2::<Complex64>::zeros((out_freq_axis.len(), cols));
    for (r, &weight) in weights.iter().enumerate() {
        for b in 0..cols {
            if !phase.valid[[r, b]] {
                continue;
            }
            if let Some(bin) = nearest_bin(out_freq_axis, phase.omega_hz[[r, b]]) {
                out[[bin, b]] += w.coefficients()[[r, b]] * weight;
            }
        }
    }
    ComplexTfm::new(
        out,
        out_freq_axis.to_vec(),
        w.time_axis_s().to_vec(),
        w.sample_rate_hz(),
    )
}

/// CWT, phase transform and synchrosqueezing of one channel.
pub fn sst(
    channel: &[f64],
    sample_rate_hz: f64,
    wavelet: &WaveletSpec,
    out_freq_axis: &[f64],
) -> Result<ComplexTfm> {
    let scalogram = cwt(channel, sample_rate_hz, wavelet)?;
    let phase = phase_transform(&scalogram.matrix);
    synchrosqueeze(&scalogram, &phase, out_freq_axis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tfa::linear_axis;

    const FS: f64 = 2000.0;

    fn tone(f: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| (2.0 * PI * f * i as f64 / FS).cos())
            .collect()
    }

    fn ridge_row(s: &Scalogram, col: usize) -> usize {
        let c = s.matrix.coefficients().column(col);
        (0..c.len())
            .max_by(|&a, &b| c[a].norm().total_cmp(&c[b].norm()))
            .unwrap()
    }

    #[test]
    fn tone_phase_transform() {
        let s = cwt(&tone(100.0, 500), FS, &WaveletSpec::default()).unwrap();
        let pt = phase_transform(&s.matrix);
        for col in 25..475 {
            let r = ridge_row(&s, col);
            assert!(pt.valid[[r, col]]);
            let f = pt.omega_hz[[r, col]];
            assert!((98.0..=102.0).contains(&f), "col {col}: {f}");
        }
    }

    #[test]
    fn chirp_phase_transform_tracks_truth() {
        // 50 -> 200 Hz over 1 s
        let n = 2000;
        let x: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 / FS;
                (2.0 * PI * (50.0 * t + 75.0 * t * t)).cos()
            })
            .collect();
        let s = cwt(&x, FS, &WaveletSpec::default()).unwrap();
        let pt = phase_transform(&s.matrix);
        for col in 200..=1800 {
            let t = col as f64 / FS;
            let r = ridge_row(&s, col);
            let f = pt.omega_hz[[r, col]];
            assert!((f - (50.0 + 150.0 * t)).abs() < 5.0, "t={t}: {f}");
        }
    }

    #[test]
    fn zero_matrix_is_all_invalid() {
        let s = cwt(&vec![0.0; 128], FS, &WaveletSpec::default()).unwrap();
        let pt = phase_transform(&s.matrix);
        assert_eq!(pt.valid_count(), 0);
        let t = synchrosqueeze(&s, &pt, &linear_axis(5.0, 500.0, 256)).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn tone_concentrates() {
        let axis = linear_axis(5.0, 500.0, 256);
        let center = nearest_bin(&axis, 100.0).unwrap();
        for phase in [0.0, 0.5, 1.0, 2.0, 3.0] {
            let x: Vec<f64> = (0..500)
                .map(|i| (2.0 * PI * 100.0 * i as f64 / FS + phase).cos())
                .collect();
            let t = sst(&x, FS, &WaveletSpec::default(), &axis).unwrap();
            for col in t.interior_columns() {
                let column = t.coefficients().column(col);
                let total: f64 = column.iter().map(|c| c.norm()).sum();
                let near: f64 = (center - 2..=center + 2).map(|b| column[b].norm()).sum();
                assert!(
                    near / total >= 0.85,
                    "phase {phase} col {col}: {}",
                    near / total
                );
            }
        }
    }

    #[test]
    fn tone_amplitude_is_preserved() {
        let axis = linear_axis(5.0, 500.0, 256);
        let x: Vec<f64> = tone(150.0, 1000).iter().map(|v| 2.5 * v).collect();
        let t = sst(&x, FS, &WaveletSpec::default(), &axis).unwrap();
        for col in 200..800 {
            let sum: Complex64 = t.coefficients().column(col).iter().sum();
            assert!((sum.norm() - 2.5).abs() < 0.01, "{}", sum.norm());
        }
    }

    #[test]
    fn reassignment_conserves_mass() {
        let axis = linear_axis(5.0, 500.0, 256);
        let x: Vec<f64> = (0..600)
            .map(|i| {
                let t = i as f64 / FS;
                (2.0 * PI * 80.0 * t).cos() + 0.3 * (2.0 * PI * 310.0 * t + 0.4).sin()
            })
            .collect();
        let s = cwt(&x, FS, &WaveletSpec::default()).unwrap();
        let pt = phase_transform(&s.matrix);
        let t = synchrosqueeze(&s, &pt, &axis).unwrap();
        let weights = reassignment_weights(&s);
        for b in 0..600 {
            let mut moved = Complex64::default();
            for (r, &weight) in weights.iter().enumerate() {
                if pt.valid[[r, b]] && nearest_bin(&axis, pt.omega_hz[[r, b]]).is_some() {
                    moved += s.matrix.coefficients()[[r, b]] * weight;
                }
            }
            let landed: Complex64 = t.coefficients().column(b).iter().sum();
            assert!((landed - moved).norm() <= 1e-9 * moved.norm().max(1e-300));
        }
    }

    #[test]
    fn shape_mismatch() {
        let s = cwt(&vec![1.0; 128], FS, &WaveletSpec::default()).unwrap();
        let mut pt = phase_transform(&s.matrix);
        pt.omega_hz = Array2::zeros((3, 3));
        assert!(matches!(
            synchrosqueeze(&s, &pt, &[10.0, 20.0]),
            Err(Error::ShapeMismatch(_))
        ));
    }
}
