use std::f64::consts::PI;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::Gesture;
use crate::signal::MultichannelSignal;
use crate::{Error, Result};

/// One additive term of a synthetic channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Component {
    /// `amplitude * cos(2 pi f t + phase_rad)`.
    Tone {
        freq_hz: f64,
        amplitude: f64,
        phase_rad: f64,
    },
    /// Linear sweep from `f0_hz` at t = 0 to `f1_hz` at the end of the signal,
    /// cosine convention.
    Chirp {
        f0_hz: f64,
        f1_hz: f64,
        amplitude: f64,
    },
    /// White Gaussian noise from a ChaCha8 stream.
    Noise { sigma: f64, seed: u64 },
}

impl Component {
    pub fn tone(freq_hz: f64, amplitude: f64) -> Self {
        Component::Tone {
            freq_hz,
            amplitude,
            phase_rad: 0.0,
        }
    }

    fn check(&self, nyquist: f64) -> Result<()> {
        let freq_ok = |f: f64| f >= 0.0 && f < nyquist;
        let ok = match *self {
            Component::Tone {
                freq_hz,
                amplitude,
                phase_rad,
            } => freq_ok(freq_hz) && amplitude.is_finite() && phase_rad.is_finite(),
            Component::Chirp {
                f0_hz,
                f1_hz,
                amplitude,
            } => freq_ok(f0_hz) && freq_ok(f1_hz) && amplitude.is_finite(),
            Component::Noise { sigma, .. } => sigma >= 0.0 && sigma.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSynthesis(format!(
                "{self:?} is invalid (frequencies must lie in [0, {nyquist}) Hz)"
            )))
        }
    }

    fn add_to(&self, out: &mut [f64], sample_rate_hz: f64, duration_s: f64) {
        match *self {
            Component::Tone {
                freq_hz,
                amplitude,
                phase_rad,
            } => {
                for (i, v) in out.iter_mut().enumerate() {
                    let t = i as f64 / sample_rate_hz;
                    *v += amplitude * (2.0 * PI * freq_hz * t + phase_rad).cos();
                }
            }
            Component::Chirp {
                f0_hz,
                f1_hz,
                amplitude,
            } => {
                let rate = (f1_hz - f0_hz) / duration_s;
                for (i, v) in out.iter_mut().enumerate() {
                    let t = i as f64 / sample_rate_hz;
                    *v += amplitude * (2.0 * PI * (f0_hz * t + 0.5 * rate * t * t)).cos();
                }
            }
            Component::Noise { sigma, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for v in out.iter_mut() {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    *v += sigma * z;
                }
            }
        }
    }
}

/// Sums the components of each channel over `duration_s` seconds.
pub fn synth_multichannel(
    channels: &[Vec<Component>],
    duration_s: f64,
    sample_rate_hz: f64,
) -> Result<MultichannelSignal> {
    if channels.is_empty() {
        return Err(Error::InvalidSynthesis("no channels".into()));
    }
    if !(sample_rate_hz > 0.0 && sample_rate_hz.is_finite()) {
        return Err(Error::InvalidSynthesis(format!(
            "bad sample rate {sample_rate_hz}"
        )));
    }
    let n = (duration_s * sample_rate_hz).round();
    if !(duration_s > 0.0 && n >= 1.0 && n.is_finite()) {
        return Err(Error::InvalidSynthesis(format!(
            "bad duration {duration_s} s"
        )));
    }
    let n = n as usize;
    let nyquist = sample_rate_hz / 2.0;
    let data = channels
        .iter()
        .map(|components| {
            let mut x = vec![0.0; n];
            for c in components {
                c.check(nyquist)?;
                c.add_to(&mut x, sample_rate_hz, duration_s);
            }
            Ok(x)
        })
        .collect::<Result<Vec<_>>>()?;
    MultichannelSignal::from_channels(&data, sample_rate_hz)
}

/// What distinguishes gestures in a synthetic cohort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntheticMode {
    /// Every trial is noise from the same distribution.
    Null,
    /// Noise plus a tone whose frequency depends on the gesture.
    Gestures,
}

/// Deterministic synthetic cohort.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntheticDataset {
    pub subjects: u32,
    pub repetitions: u32,
    pub trial_duration_s: f64,
    pub sample_rate_hz: f64,
    pub channel_count: usize,
    pub noise_sigma: f64,
    pub mode: SyntheticMode,
    pub seed: u64,
}

impl Default for SyntheticDataset {
    fn default() -> Self {
        SyntheticDataset {
            subjects: 5,
            repetitions: 5,
            trial_duration_s: 6.0,
            sample_rate_hz: 2000.0,
            channel_count: 4,
            noise_sigma: 1.0,
            mode: SyntheticMode::Null,
            seed: 0,
        }
    }
}

impl SyntheticDataset {
    /// Seed for one stream, derived from every coordinate of the trial.
    fn stream_seed(&self, subject: u32, gesture: Gesture, repetition: u32, stream: u32) -> u64 {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8..12].copy_from_slice(&subject.to_le_bytes());
        key[12..16].copy_from_slice(&(gesture.index() as u32).to_le_bytes());
        key[16..20].copy_from_slice(&repetition.to_le_bytes());
        key[20..24].copy_from_slice(&stream.to_le_bytes());
        ChaCha8Rng::from_seed(key).next_u64()
    }

    /// Gesture tone frequency in [`SyntheticMode::Gestures`].
    pub fn gesture_freq_hz(gesture: Gesture) -> f64 {
        60.0 + 35.0 * gesture.index() as f64
    }

    pub fn trial(
        &self,
        subject: u32,
        gesture: Gesture,
        repetition: u32,
    ) -> Result<MultichannelSignal> {
        let channels: Vec<Vec<Component>> = (0..self.channel_count as u32)
            .map(|ch| {
                let mut comps = vec![Component::Noise {
                    sigma: self.noise_sigma,
                    seed: self.stream_seed(subject, gesture, repetition, ch),
                }];
                if self.mode == SyntheticMode::Gestures {
                    let phase_seed = self.stream_seed(subject, gesture, repetition, 1000 + ch);
                    comps.push(Component::Tone {
                        freq_hz: Self::gesture_freq_hz(gesture),
                        amplitude: self.noise_sigma * (1.0 + 0.25 * ch as f64),
                        phase_rad: (phase_seed >> 11) as f64 / (1u64 << 53) as f64 * 2.0 * PI,
                    });
                }
                comps
            })
            .collect();
        synth_multichannel(&channels, self.trial_duration_s, self.sample_rate_hz)
    }
}
