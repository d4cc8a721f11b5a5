use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::{Error, Result};

pub fn next_power_of_two(n: usize) -> usize {
    n.max(1).next_power_of_two()
}

fn check_len(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(())
}

/// Unnormalized forward DFT, `X[k] = sum_j x[j] exp(-2 pi i jk / n)`.
///
/// Only power-of-two lengths are accepted; transforms that need other sizes
/// zero-pad internally.
pub fn fft_forward(x: &[Complex64]) -> Result<Vec<Complex64>> {
    check_len(x.len())?;
    let mut buf = x.to_vec();
    FftPlanner::new()
        .plan_fft_forward(x.len())
        .process(&mut buf);
    Ok(buf)
}

/// Inverse DFT including the `1/n` factor, so `fft_inverse(fft_forward(x)) == x`.
pub fn fft_inverse(x: &[Complex64]) -> Result<Vec<Complex64>> {
    check_len(x.len())?;
    let mut buf = x.to_vec();
    FftPlanner::new()
        .plan_fft_inverse(x.len())
        .process(&mut buf);
    let scale = 1.0 / x.len() as f64;
    buf.iter_mut().for_each(|v| *v *= scale);
    Ok(buf)
}

/// Forward and inverse plans of one length, reused across many transforms.
#[derive(Clone)]
pub struct FftPair {
    len: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl FftPair {
    pub fn new(len: usize) -> Result<Self> {
        check_len(len)?;
        let mut planner = FftPlanner::new();
        Ok(Self {
            len,
            forward: planner.plan_fft_forward(len),
            inverse: planner.plan_fft_inverse(len),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn forward(&self, buf: &mut [Complex64]) {
        self.forward.process(buf);
    }

    /// In-place inverse transform, normalized by `1/n`.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        self.inverse.process(buf);
        let scale = 1.0 / self.len as f64;
        buf.iter_mut().for_each(|v| *v *= scale);
    }
}
