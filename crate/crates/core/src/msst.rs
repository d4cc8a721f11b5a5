//! Multivariate synchrosqueezing.
//!
//! Each channel's SST is collapsed into per-band instantaneous frequency and
//! amplitude estimates, the channels are fused band by band, and the fused
//! amplitude is deposited at the fused frequency.

use std::io::{BufRead, Write};
use std::ops::Range;

use ndarray::Array2;
use rayon::prelude::*;

use crate::signal::MultichannelSignal;
use crate::tfa::{
    linear_axis, nearest_bin, sst, Coefficient, RealTfm, TimeFrequencyMatrix, WaveletSpec,
};
use crate::{Error, Result};

/// Contiguous partition of `n_bins` frequency bins into bands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandPartition {
    edges: Vec<usize>,
}

impl BandPartition {
    /// `edges` holds K+1 strictly increasing bin indices starting at 0.
    pub fn new(edges: Vec<usize>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::InvalidPartition("need at least one band".into()));
        }
        if edges[0] != 0 {
            return Err(Error::InvalidPartition("first edge must be bin 0".into()));
        }
        if edges.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidPartition(
                "edges must be strictly increasing".into(),
            ));
        }
        Ok(BandPartition { edges })
    }

    /// `k` bands of (near) equal width over `n_bins` bins.
    pub fn equal_width(n_bins: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n_bins {
            return Err(Error::InvalidPartition(format!(
                "cannot split {n_bins} bins into {k} bands"
            )));
        }
        Self::new((0..=k).map(|i| i * n_bins / k).collect())
    }

    pub fn band_count(&self) -> usize {
        self.edges.len() - 1
    }

    pub fn n_bins(&self) -> usize {
        *self.edges.last().unwrap()
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn band(&self, k: usize) -> Range<usize> {
        self.edges[k]..self.edges[k + 1]
    }

    fn check_covers(&self, n_freqs: usize) -> Result<()> {
        if self.n_bins() != n_freqs {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} bins, matrix has {n_freqs}",
                self.n_bins()
            )));
        }
        Ok(())
    }
}

/// Per-band instantaneous frequency and amplitude of one channel.
#[derive(Debug, Clone, PartialEq)]
pub struct BandEstimates {
    /// `[band][time]` energy centroid in Hz; 0 where invalid.
    pub band_if_hz: Array2<f64>,
    /// `[band][time]` root band energy.
    pub band_ia: Array2<f64>,
    /// False where the band holds no energy.
    pub valid: Array2<bool>,
    pub channel_index: usize,
}

/// Energy-weighted centroid frequency and root energy of every band.
pub fn band_if_ia<T: Coefficient>(
    t: &TimeFrequencyMatrix<T>,
    partition: &BandPartition,
) -> Result<BandEstimates> {
    partition.check_covers(t.n_freqs())?;
    let k = partition.band_count();
    let cols = t.n_times();
    let axis = t.freq_axis_hz();
    let coef = t.coefficients();
    let mut band_if_hz = Array2::zeros((k, cols));
    let mut band_ia = Array2::zeros((k, cols));
    let mut valid = Array2::from_elem((k, cols), false);
    for band in 0..k {
        for b in 0..cols {
            let mut energy = 0.0;
            let mut moment = 0.0;
            for bin in partition.band(band) {
                let e = coef[[bin, b]].energy();
                energy += e;
                moment += e * axis[bin];
            }
            if energy > 0.0 {
                band_if_hz[[band, b]] = moment / energy;
                band_ia[[band, b]] = energy.sqrt();
                valid[[band, b]] = true;
            }
        }
    }
    Ok(BandEstimates {
        band_if_hz,
        band_ia,
        valid,
        channel_index: 0,
    })
}

/// Fused per-band estimates across channels.
#[derive(Debug, Clone, PartialEq)]
pub struct FusedBands {
    pub multi_if_hz: Array2<f64>,
    pub multi_ia: Array2<f64>,
    pub valid: Array2<bool>,
}

fn tree_sum(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        n => tree_sum(&v[..n / 2]) + tree_sum(&v[n / 2..]),
    }
}

/// Amplitude-squared weighted IF and root-sum-square IA per band and time.
///
/// Terms are sorted before summation so the result does not depend on
/// channel order. The IF is accumulated as a deviation from the smallest
/// channel IF, which makes identical channels reproduce their IF exactly.
pub fn multivariate_fuse(estimates: &[BandEstimates]) -> Result<FusedBands> {
    let first = estimates
        .first()
        .ok_or_else(|| Error::ShapeMismatch("no channels to fuse".into()))?;
    let dim = first.band_ia.dim();
    for e in estimates {
        if e.band_ia.dim() != dim || e.band_if_hz.dim() != dim || e.valid.dim() != dim {
            return Err(Error::ShapeMismatch(format!(
                "channel {} estimates are {:?}, expected {dim:?}",
                e.channel_index,
                e.band_ia.dim()
            )));
        }
    }
    let mut multi_if_hz = Array2::zeros(dim);
    let mut multi_ia = Array2::zeros(dim);
    let mut valid = Array2::from_elem(dim, false);
    let mut terms: Vec<(f64, f64)> = Vec::with_capacity(estimates.len());
    let mut weights = Vec::with_capacity(estimates.len());
    let mut moments = Vec::with_capacity(estimates.len());
    for ((band, b), slot) in multi_ia.indexed_iter_mut() {
        terms.clear();
        for e in estimates.iter().filter(|e| e.valid[[band, b]]) {
            let a = e.band_ia[[band, b]];
            terms.push((a * a, e.band_if_hz[[band, b]]));
        }
        let Some(reference) = terms.iter().map(|t| t.1).min_by(f64::total_cmp) else {
            continue;
        };
        terms.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
        weights.clear();
        moments.clear();
        for &(w, f) in &terms {
            weights.push(w);
            moments.push(w * (f - reference));
        }
        let total = tree_sum(&weights);
        if total > 0.0 {
            multi_if_hz[[band, b]] = reference + tree_sum(&moments) / total;
            *slot = total.sqrt();
            valid[[band, b]] = true;
        }
    }
    Ok(FusedBands {
        multi_if_hz,
        multi_ia,
        valid,
    })
}

/// Deposits each valid band amplitude in the output bin nearest its IF.
/// Bands landing in one bin add up.
pub fn msst_assemble(
    fused: &FusedBands,
    out_freq_axis: &[f64],
    time_axis_s: &[f64],
    sample_rate_hz: f64,
) -> Result<RealTfm> {
    let (k, cols) = fused.multi_ia.dim();
    if time_axis_s.len() != cols {
        return Err(Error::ShapeMismatch(format!(
            "time axis has {} entries, estimates have {cols} columns",
            time_axis_s.len()
        )));
    }
    let mut out = Array2::<f64>::zeros((out_freq_axis.len(), cols));
    for b in 0..cols {
        for band in 0..k {
            let a = fused.multi_ia[[band, b]];
            if !fused.valid[[band, b]] || a == 0.0 {
                continue;
            }
            if let Some(bin) = nearest_bin(out_freq_axis, fused.multi_if_hz[[band, b]]) {
                out[[bin, b]] += a;
            }
        }
    }
    RealTfm::new(
        out,
        out_freq_axis.to_vec(),
        time_axis_s.to_vec(),
        sample_rate_hz,
    )
}

/// Settings for [`msst`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MsstConfig {
    pub wavelet: WaveletSpec,
    /// Bins on the linear SST axis spanning the wavelet frequency range.
    pub sst_bins: usize,
    pub band_count: usize,
}

impl Default for MsstConfig {
    fn default() -> Self {
        MsstConfig {
            wavelet: WaveletSpec::default(),
            sst_bins: 256,
            band_count: 32,
        }
    }
}

impl MsstConfig {
    pub fn out_axis(&self) -> Vec<f64> {
        linear_axis(
            self.wavelet.min_freq_hz,
            self.wavelet.max_freq_hz,
            self.sst_bins,
        )
    }

    pub fn partition(&self) -> Result<BandPartition> {
        BandPartition::equal_width(self.sst_bins, self.band_count)
    }
}

/// Per-channel SST, band estimates, fusion and assembly.
pub fn msst(signal: &MultichannelSignal, config: &MsstConfig) -> Result<RealTfm> {
    let axis = config.out_axis();
    let partition = config.partition()?;
    let fs = signal.sample_rate_hz();
    let per_channel: Vec<(BandEstimates, Vec<f64>)> = (0..signal.channel_count())
        .into_par_iter()
        .map(|n| {
            let channel = signal.channel(n).to_vec();
            let t = sst(&channel, fs, &config.wavelet, &axis)?;
            let mut est = band_if_ia(&t, &partition)?;
            est.channel_index = n;
            Ok((est, t.time_axis_s().to_vec()))
        })
        .collect::<Result<_>>()?;
    let time_axis = per_channel[0].1.clone();
    let estimates: Vec<BandEstimates> = per_channel.into_iter().map(|(e, _)| e).collect();
    let fused = multivariate_fuse(&estimates)?;
    msst_assemble(&fused, &axis, &time_axis, fs)
}

/// Writes a real matrix as CSV: a `# time_s` header row of time values, then
/// one row per bin led by a `# freq_hz=<v>` cell.
pub fn write_matrix_csv<W: Write>(m: &RealTfm, mut out: W) -> std::io::Result<()> {
    write!(out, "# time_s")?;
    for t in m.time_axis_s() {
        write!(out, ",{t}")?;
    }
    writeln!(out)?;
    for (row, f) in m.coefficients().rows().into_iter().zip(m.freq_axis_hz()) {
        write!(out, "# freq_hz={f}")?;
        for v in row {
            write!(out, ",{v}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Reads a matrix written by [`write_matrix_csv`].
pub fn read_matrix_csv<R: BufRead>(input: R, sample_rate_hz: f64) -> Result<RealTfm> {
    let bad = |line: usize, msg: String| Error::Parse {
        path: "<matrix>".into(),
        line,
        msg,
    };
    let mut lines = input.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| bad(1, "missing header".into()))?;
    let header = header.map_err(|e| bad(1, e.to_string()))?;
    let mut cells = header.split(',');
    if cells.next() != Some("# time_s") {
        return Err(bad(1, "header must start with '# time_s'".into()));
    }
    let parse = |line: usize, s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| bad(line, format!("not a number: '{s}'")))
    };
    let time: Vec<f64> = cells.map(|c| parse(1, c)).collect::<Result<_>>()?;
    let mut freqs = Vec::new();
    let mut values = Vec::new();
    for (i, line) in lines {
        let line = line.map_err(|e| bad(i + 1, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut cells = line.split(',');
        let lead = cells.next().unwrap_or_default();
        let f = lead
            .strip_prefix("# freq_hz=")
            .ok_or_else(|| bad(i + 1, "row must start with '# freq_hz='".into()))?;
        freqs.push(parse(i + 1, f)?);
        let row: Vec<f64> = cells.map(|c| parse(i + 1, c)).collect::<Result<_>>()?;
        if row.len() != time.len() {
            return Err(bad(
                i + 1,
                format!("expected {} values, found {}", time.len(), row.len()),
            ));
        }
        values.extend(row);
    }
    let coefficients = Array2::from_shape_vec((freqs.len(), time.len()), values)
        .map_err(|e| Error::ShapeMismatch(e.to_string()))?;
    RealTfm::new(coefficients, freqs, time, sample_rate_hz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    const FS: f64 = 2000.0;

    fn estimates(ifs: &[f64], ias: &[f64]) -> BandEstimates {
        let n = ifs.len();
        BandEstimates {
            band_if_hz: Array2::from_shape_vec((n, 1), ifs.to_vec()).unwrap(),
            band_ia: Array2::from_shape_vec((n, 1), ias.to_vec()).unwrap(),
            valid: Array2::from_shape_fn((n, 1), |(i, _)| ias[i] > 0.0),
            channel_index: 0,
        }
    }

    fn tone(f: f64, n: usize, amp: f64) -> Vec<f64> {
        (0..n)
            .map(|i| amp * (2.0 * PI * f * i as f64 / FS).cos())
            .collect()
    }

    #[test]
    fn partition_rules() {
        let p = BandPartition::equal_width(256, 32).unwrap();
        assert_eq!(p.band_count(), 32);
        assert_eq!(p.band(0), 0..8);
        assert_eq!(p.band(31), 248..256);
        let p = BandPartition::equal_width(10, 3).unwrap();
        assert_eq!(p.edges(), &[0, 3, 6, 10]);
        assert!(BandPartition::equal_width(4, 5).is_err());
        assert!(BandPartition::equal_width(4, 0).is_err());
        assert!(BandPartition::new(vec![0, 2, 2]).is_err());
        assert!(BandPartition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn single_coefficient_band() {
        let axis = vec![100.0, 120.0, 140.0, 160.0];
        let mut c = Array2::<Complex64>::zeros((4, 1));
        c[[1, 0]] = Complex64::new(0.0, 2.0);
        let t = TimeFrequencyMatrix::new(c, axis, vec![0.0], FS).unwrap();
        let p = BandPartition::new(vec![0, 3, 4]).unwrap();
        let e = band_if_ia(&t, &p).unwrap();
        assert_eq!(e.band_if_hz[[0, 0]], 120.0);
        assert_eq!(e.band_ia[[0, 0]], 2.0);
        assert!(e.valid[[0, 0]]);
        assert!(!e.valid[[1, 0]]);
        assert_eq!(e.band_ia[[1, 0]], 0.0);
    }

    #[test]
    fn two_coefficient_centroid() {
        let axis = vec![100.0, 120.0, 140.0];
        let c = Array2::from_shape_vec((3, 1), vec![1.5, 0.0, -1.5]).unwrap();
        let t = TimeFrequencyMatrix::new(c, axis, vec![0.0], FS).unwrap();
        let e = band_if_ia(&t, &BandPartition::new(vec![0, 3]).unwrap()).unwrap();
        assert!((e.band_if_hz[[0, 0]] - 120.0).abs() < 1e-12);
        assert!((e.band_ia[[0, 0]] - 2f64.sqrt() * 1.5).abs() < 1e-12);
    }

    #[test]
    fn partition_mismatch() {
        let t = TimeFrequencyMatrix::new(
            Array2::<f64>::zeros((3, 2)),
            vec![1.0, 2.0, 3.0],
            vec![0.0, 1.0],
            FS,
        )
        .unwrap();
        let p = BandPartition::equal_width(4, 2).unwrap();
        assert!(matches!(
            band_if_ia(&t, &p),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn fuse_hand_example() {
        let f = multivariate_fuse(&[
            estimates(&[100.0], &[1.0]),
            estimates(&[200.0], &[3f64.sqrt()]),
        ])
        .unwrap();
        assert!((f.multi_if_hz[[0, 0]] - 175.0).abs() < 1e-12);
        assert!((f.multi_ia[[0, 0]] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn fuse_identical_and_single() {
        let one = estimates(&[123.456, 0.0, 301.7], &[0.731, 0.0, 2.2]);
        let fused = multivariate_fuse(&vec![one.clone(); 4]).unwrap();
        assert_eq!(fused.multi_if_hz, one.band_if_hz);
        for (a, b) in fused.multi_ia.iter().zip(one.band_ia.iter()) {
            assert!((a - 2.0 * b).abs() <= 1e-12 * b);
        }
        assert!(!fused.valid[[1, 0]]);
        let single = multivariate_fuse(std::slice::from_ref(&one)).unwrap();
        assert_eq!(single.multi_if_hz, one.band_if_hz);
        for (a, b) in single.multi_ia.iter().zip(one.band_ia.iter()) {
            assert!((a - b).abs() <= 1e-15 * b);
        }
    }

    #[test]
    fn fuse_shape_mismatch() {
        let r = multivariate_fuse(&[
            estimates(&[1.0], &[1.0]),
            estimates(&[1.0, 2.0], &[1.0, 1.0]),
        ]);
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
        assert!(multivariate_fuse(&[]).is_err());
    }

    #[test]
    fn assemble_deposits() {
        let axis = linear_axis(5.0, 500.0, 256);
        let fused = FusedBands {
            multi_if_hz: Array2::from_shape_vec((2, 2), vec![120.0, 120.0, 300.0, 0.0]).unwrap(),
            multi_ia: Array2::from_shape_vec((2, 2), vec![2.0, 2.0, 1.0, 0.0]).unwrap(),
            valid: Array2::from_shape_vec((2, 2), vec![true, true, true, false]).unwrap(),
        };
        let m = msst_assemble(&fused, &axis, &[0.0, 0.0005], FS).unwrap();
        let bin = nearest_bin(&axis, 120.0).unwrap();
        assert_eq!(m.coefficients()[[bin, 1]], 2.0);
        assert_eq!(
            m.coefficients()
                .column(1)
                .iter()
                .filter(|v| **v != 0.0)
                .count(),
            1
        );
        assert_eq!(
            m.coefficients()
                .column(0)
                .iter()
                .filter(|v| **v != 0.0)
                .count(),
            2
        );
        let empty = FusedBands {
            multi_if_hz: Array2::zeros((2, 2)),
            multi_ia: Array2::zeros((2, 2)),
            valid: Array2::from_elem((2, 2), false),
        };
        assert!(msst_assemble(&empty, &axis, &[0.0, 0.0005], FS)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn assemble_collisions_add() {
        let axis = vec![100.0, 200.0];
        let fused = FusedBands {
            multi_if_hz: Array2::from_shape_vec((2, 1), vec![110.0, 120.0]).unwrap(),
            multi_ia: Array2::from_shape_vec((2, 1), vec![0.5, 0.25]).unwrap(),
            valid: Array2::from_elem((2, 1), true),
        };
        let m = msst_assemble(&fused, &axis, &[0.0], FS).unwrap();
        assert_eq!(m.coefficients()[[0, 0]], 0.75);
    }

    #[test]
    fn zero_signal_gives_zero_matrix() {
        let s = MultichannelSignal::from_channels(&vec![vec![0.0; 256]; 4], FS).unwrap();
        assert!(msst(&s, &MsstConfig::default()).unwrap().is_zero());
    }

    #[test]
    fn identical_channels_double_band_amplitude() {
        let x = tone(100.0, 500, 1.0);
        let cfg = MsstConfig::default();
        let single = MultichannelSignal::from_channels(std::slice::from_ref(&x), FS).unwrap();
        let four = MultichannelSignal::from_channels(&vec![x; 4], FS).unwrap();
        let m1 = msst(&single, &cfg).unwrap();
        let m4 = msst(&four, &cfg).unwrap();
        let bin = nearest_bin(&cfg.out_axis(), 100.0).unwrap();
        for col in m4.interior_columns() {
            let c4 = m4.coefficients().column(col);
            let c1 = m1.coefficients().column(col);
            let peak = (0..c4.len())
                .max_by(|&a, &b| c4[a].total_cmp(&c4[b]))
                .unwrap();
            assert!(peak.abs_diff(bin) <= 1, "col {col}: peak {peak}");
            for (a, b) in c4.iter().zip(c1.iter()) {
                assert!((a - 2.0 * b).abs() <= 1e-12 * b.abs().max(1e-300));
            }
        }
    }

    #[test]
    fn single_channel_matches_band_collapsed_sst() {
        let x: Vec<f64> = (0..400)
            .map(|i| {
                let t = i as f64 / FS;
                (2.0 * PI * 60.0 * t).cos() + 0.5 * (2.0 * PI * 230.0 * t).sin()
            })
            .collect();
        let cfg = MsstConfig::default();
        let s = MultichannelSignal::from_channels(std::slice::from_ref(&x), FS).unwrap();
        let m = msst(&s, &cfg).unwrap();
        let t = sst(&x, FS, &cfg.wavelet, &cfg.out_axis()).unwrap();
        let e = band_if_ia(&t, &cfg.partition().unwrap()).unwrap();
        for col in 0..m.n_times() {
            let expected: f64 = e.band_ia.column(col).sum();
            let got: f64 = m.coefficients().column(col).sum();
            assert!((got - expected).abs() <= 1e-12 * expected.max(1e-300));
            let nonzero = m
                .coefficients()
                .column(col)
                .iter()
                .filter(|v| **v != 0.0)
                .count();
            assert!(nonzero <= cfg.band_count);
        }
    }

    #[test]
    fn separate_tones_equal_mass() {
        let cfg = MsstConfig {
            band_count: 8,
            ..MsstConfig::default()
        };
        let s =
            MultichannelSignal::from_channels(&[tone(100.0, 500, 1.0), tone(300.0, 500, 1.0)], FS)
                .unwrap();
        let m = msst(&s, &cfg).unwrap();
        let axis = cfg.out_axis();
        let (b100, b300) = (
            nearest_bin(&axis, 100.0).unwrap(),
            nearest_bin(&axis, 300.0).unwrap(),
        );
        for col in m.interior_columns() {
            let c = m.coefficients().column(col);
            let near = |center: usize| -> f64 { (center - 3..=center + 3).map(|i| c[i]).sum() };
            let (lo, hi) = (near(b100), near(b300));
            assert!(
                (lo - hi).abs() <= 0.02 * lo.max(hi),
                "col {col}: {lo} vs {hi}"
            );
            assert!(lo + hi >= 0.95 * c.sum());
        }
    }

    #[test]
    fn matrix_csv_round_trip() {
        let s = MultichannelSignal::from_channels(&[tone(80.0, 128, 0.7)], FS).unwrap();
        let m = msst(&s, &MsstConfig::default()).unwrap();
        let mut buf = Vec::new();
        write_matrix_csv(&m, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# time_s,0,0.0005,"));
        assert!(text.lines().nth(1).unwrap().starts_with("# freq_hz=5,"));
        let back = read_matrix_csv(&buf[..], FS).unwrap();
        assert_eq!(back, m);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn channel_permutation_is_bit_identical(
            seed in 0u64..1000,
            rot in 1usize..4,
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let chans: Vec<Vec<f64>> = (0..4)
                .map(|_| (0..128).map(|_| rng.random_range(-1.0..1.0)).collect())
                .collect();
            let mut permuted = chans.clone();
            permuted.rotate_left(rot);
            permuted.swap(0, 3);
            let cfg = MsstConfig::default();
            let a = msst(&MultichannelSignal::from_channels(&chans, FS).unwrap(), &cfg).unwrap();
            let b = msst(&MultichannelSignal::from_channels(&permuted, FS).unwrap(), &cfg).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn fusion_sums_are_order_free(
            ias in proptest::collection::vec(0.0f64..10.0, 2..8),
            seed in any::<u64>(),
        ) {
            use rand::{seq::SliceRandom, SeedableRng};
            let chans: Vec<BandEstimates> = ias
                .iter()
                .enumerate()
                .map(|(i, &a)| estimates(&[50.0 + 37.0 * i as f64], &[a]))
                .collect();
            let mut shuffled = chans.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(multivariate_fuse(&chans).unwrap(), multivariate_fuse(&shuffled).unwrap());
        }
    }

    #[test]
    fn scaling_is_homogeneous() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let chans: Vec<Vec<f64>> = (0..4)
            .map(|_| (0..200).map(|_| rng.random_range(-1.0..1.0)).collect())
            .collect();
        let s = MultichannelSignal::from_channels(&chans, FS).unwrap();
        let cfg = MsstConfig::default();
        let base = msst(&s, &cfg).unwrap();
        let doubled = msst(&s.scaled(2.0).unwrap(), &cfg).unwrap();
        assert_eq!(
            doubled.coefficients(),
            &base.coefficients().mapv(|v| 2.0 * v)
        );
        let tripled = msst(&s.scaled(3.0).unwrap(), &cfg).unwrap();
        let max = base.coefficients().fold(0.0_f64, |m, v| m.max(*v));
        for (a, b) in tripled.coefficients().iter().zip(base.coefficients()) {
            assert!((a - 3.0 * b).abs() <= 1e-12 * 3.0 * max);
        }
    }
}
