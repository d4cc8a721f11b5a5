//! Deterministic inputs for the benchmarks.

use gesturetf::dataio::{Component, SyntheticDataset, SyntheticMode};
use gesturetf::{FeatureRecord, Gesture, MomentFeatures, MultichannelSignal, Result};

/// One 250 ms window at 2 kHz from the synthetic gesture cohort.
pub fn gesture_window(channel_count: usize, gesture: Gesture) -> Result<MultichannelSignal> {
    SyntheticDataset {
        trial_duration_s: 0.25,
        channel_count,
        mode: SyntheticMode::Gestures,
        ..Default::default()
    }
    .trial(1, gesture, 1)
}

/// A feature table of Gaussian values, `rows_per_cell` rows for every
/// (subject, gesture) pair.
pub fn gaussian_table(subjects: u32, rows_per_cell: u32, seed: u64) -> Result<Vec<FeatureRecord>> {
    let cells = subjects as usize * Gesture::ALL.len() * rows_per_cell as usize;
    let noise = gesturetf::dataio::synth_multichannel(
        &[vec![Component::Noise { sigma: 1.0, seed }]],
        (4 * cells) as f64,
        1.0,
    )?;
    let x = noise.channel(0);
    let mut table = Vec::with_capacity(cells);
    for subject in 1..=subjects {
        for gesture in Gesture::ALL {
            for window in 0..rows_per_cell {
                let i = 4 * table.len();
                table.push(FeatureRecord {
                    subject,
                    gesture,
                    repetition: 1,
                    window,
                    features: MomentFeatures {
                        mean: x[i],
                        variance: x[i + 1],
                        skewness: x[i + 2],
                        kurtosis: x[i + 3],
                        degenerate: false,
                    },
                });
            }
        }
    }
    Ok(table)
}
