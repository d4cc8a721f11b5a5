//! Analytic checks runnable from the command line.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataio::{trim_and_segment, Gesture, SegmentationSpec};
use crate::features::{moment_features, normalize_distribution, zscore_columns, DistributionKind};
use crate::features::{Feature, FeatureMode, FeatureRecord, MomentFeatures};
use crate::msst::{band_if_ia, msst, multivariate_fuse, MsstConfig};
use crate::reference::CHISQ_REFERENCE;
use crate::signal::{design_filter, fft_forward, IirFilterSpec, MultichannelSignal};
use crate::stats::{chisq_survival, kruskal_wallis_groups, pairwise_kw};
use crate::tfa::{cwt, linear_axis, nearest_bin, sst, RealTfm, WaveletSpec};

const FS: f64 = 2000.0;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:width$}  {}", c.name, c.detail)?;
        }
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - self.failures(),
            self.failures()
        )
    }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn tone(f: f64, n: usize, phase: f64) -> Vec<f64> {
    (0..n)
        .map(|i| (2.0 * PI * f * i as f64 / FS + phase).cos())
        .collect()
}

fn fft_impulse() -> Outcome {
    let x = [1.0, 0.0, 0.0, 0.0].map(|v| Complex64::new(v, 0.0));
    let y = fft_forward(&x).map_err(err)?;
    let worst = y
        .iter()
        .map(|v| (v - Complex64::new(1.0, 0.0)).norm())
        .fold(0.0, f64::max);
    ensure(worst < 1e-15, format!("max deviation {worst:.1e}"))
}

fn fft_parseval() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let x: Vec<Complex64> = (0..1024)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let y = fft_forward(&x).map_err(err)?;
    let ex: f64 = x.iter().map(|v| v.norm_sqr()).sum();
    let ey: f64 = y.iter().map(|v| v.norm_sqr()).sum::<f64>() / x.len() as f64;
    let rel = ((ex - ey) / ex).abs();
    ensure(rel < 1e-10, format!("relative energy error {rel:.1e}"))
}

fn bandpass_response() -> Outcome {
    let f = design_filter(&IirFilterSpec::butterworth_bandpass(6, 5.0, 500.0), FS).map_err(err)?;
    let pass = f.magnitude(250.0);
    let stop = f.magnitude_db(1.0);
    ensure(
        (0.99..=1.01).contains(&pass) && stop < -60.0,
        format!("|H(250 Hz)| = {pass:.6}, |H(1 Hz)| = {stop:.1} dB"),
    )
}

fn notch_response() -> Outcome {
    let f = design_filter(&IirFilterSpec::notch(50.0, 35.0), FS).map_err(err)?;
    let (at, near) = (f.magnitude_db(50.0), f.magnitude_db(60.0));
    ensure(
        at < -30.0 && near > -1.0,
        format!("|H(50 Hz)| = {at:.1} dB, |H(60 Hz)| = {near:.2} dB"),
    )
}

fn filter_stability() -> Outcome {
    let mut worst = 0.0f64;
    for spec in [
        IirFilterSpec::butterworth_bandpass(6, 5.0, 500.0),
        IirFilterSpec::butterworth_bandpass(8, 20.0, 450.0),
        IirFilterSpec::notch(50.0, 35.0),
    ] {
        let f = design_filter(&spec, FS).map_err(err)?;
        worst = f.poles().iter().map(|p| p.norm()).fold(worst, f64::max);
    }
    ensure(
        worst < 1.0 - 1e-9,
        format!("largest pole modulus {worst:.9}"),
    )
}

fn cwt_tone_ridge() -> Outcome {
    let s = cwt(&tone(100.0, 500, 0.0), FS, &WaveletSpec::default()).map_err(err)?;
    let m = &s.matrix;
    let col = m.n_times() / 2;
    let c = m.coefficients().column(col);
    let r = (0..c.len())
        .max_by(|&a, &b| c[a].norm().total_cmp(&c[b].norm()))
        .unwrap_or(0);
    let f = m.freq_axis_hz()[r];
    let amp = c[r].norm();
    ensure(
        (f / 100.0).log2().abs() <= 1.0 / 16.0 && (amp - 1.0).abs() < 0.05,
        format!("ridge at {f:.2} Hz, magnitude {amp:.4}"),
    )
}

fn sst_tone_concentration() -> Outcome {
    let axis = linear_axis(5.0, 500.0, 256);
    let center = nearest_bin(&axis, 100.0).unwrap_or(0);
    let t = sst(&tone(100.0, 500, 0.0), FS, &WaveletSpec::default(), &axis).map_err(err)?;
    let (mut near, mut total) = (0.0, 0.0);
    for col in t.interior_columns() {
        let c = t.coefficients().column(col);
        total += c.iter().map(|v| v.norm()).sum::<f64>();
        near += (center - 2..=center + 2).map(|b| c[b].norm()).sum::<f64>();
    }
    let share = near / total;
    ensure(
        share >= 0.85,
        format!("{:.1}% of interior mass within 2 bins", 100.0 * share),
    )
}

fn sst_chirp_tracking() -> Outcome {
    let n = 2000;
    let x: Vec<f64> = (0..n)
        .map(|i| {
            let t = i as f64 / FS;
            (2.0 * PI * (50.0 * t + 75.0 * t * t)).cos()
        })
        .collect();
    let axis = linear_axis(5.0, 500.0, 256);
    let t = sst(&x, FS, &WaveletSpec::default(), &axis).map_err(err)?;
    let mut worst = 0.0f64;
    for col in n / 10..=n - n / 10 {
        let c = t.coefficients().column(col);
        let r = (0..c.len())
            .max_by(|&a, &b| c[a].norm().total_cmp(&c[b].norm()))
            .unwrap_or(0);
        let truth = 50.0 + 150.0 * col as f64 / FS;
        worst = worst.max((axis[r] - truth).abs());
    }
    ensure(worst <= 5.0, format!("largest ridge error {worst:.2} Hz"))
}

fn msst_identical_channels() -> Outcome {
    let cfg = MsstConfig::default();
    let t = sst(&tone(100.0, 500, 0.3), FS, &cfg.wavelet, &cfg.out_axis()).map_err(err)?;
    let one = band_if_ia(&t, &cfg.partition().map_err(err)?).map_err(err)?;
    let four: Vec<_> = (0..4)
        .map(|i| {
            let mut e = one.clone();
            e.channel_index = i;
            e
        })
        .collect();
    let f1 = multivariate_fuse(std::slice::from_ref(&one)).map_err(err)?;
    let f4 = multivariate_fuse(&four).map_err(err)?;
    let if_equal = f1
        .multi_if_hz
        .iter()
        .zip(f4.multi_if_hz.iter())
        .all(|(a, b)| a.to_bits() == b.to_bits());
    let worst = f1
        .multi_ia
        .iter()
        .zip(f4.multi_ia.iter())
        .filter(|(a, _)| **a > 0.0)
        .map(|(a, b)| ((b - 2.0 * a) / (2.0 * a)).abs())
        .fold(0.0, f64::max);
    ensure(
        if_equal && worst <= 1e-12,
        format!("IF bitwise equal: {if_equal}, IA ratio error {worst:.1e}"),
    )
}

fn two_tone_signal(channels: &[(f64, f64)]) -> crate::Result<MultichannelSignal> {
    let data: Vec<Vec<f64>> = channels
        .iter()
        .map(|&(f, a)| {
            tone(f, 400, 0.1)
                .iter()
                .zip(tone(3.0 * f, 400, 1.0))
                .map(|(x, y)| a * (x + 0.3 * y))
                .collect()
        })
        .collect();
    MultichannelSignal::from_channels(&data, FS)
}

fn bits(m: &RealTfm) -> Vec<u64> {
    m.coefficients().iter().map(|v| v.to_bits()).collect()
}

fn msst_permutation() -> Outcome {
    let cfg = MsstConfig::default();
    let chans = [(60.0, 1.0), (90.0, 0.5), (75.0, 2.0), (120.0, 1.5)];
    let a = msst(&two_tone_signal(&chans).map_err(err)?, &cfg).map_err(err)?;
    let rev: Vec<_> = chans.iter().rev().copied().collect();
    let b = msst(&two_tone_signal(&rev).map_err(err)?, &cfg).map_err(err)?;
    ensure(
        bits(&a) == bits(&b),
        "reversed channel order gives identical bits".into(),
    )
}

fn msst_scaling() -> Outcome {
    let cfg = MsstConfig::default();
    let s = two_tone_signal(&[(60.0, 1.0), (90.0, 0.5), (140.0, 1.2)]).map_err(err)?;
    let a = msst(&s, &cfg).map_err(err)?;
    let b = msst(&s.scaled(3.0).map_err(err)?, &cfg).map_err(err)?;
    let max = a.coefficients().fold(0.0f64, |m, v| m.max(*v));
    let worst = a
        .coefficients()
        .iter()
        .zip(b.coefficients().iter())
        .map(|(x, y)| (y - 3.0 * x).abs() / (3.0 * max))
        .fold(0.0, f64::max);
    ensure(
        max > 0.0 && worst <= 1e-12,
        format!("largest deviation {worst:.1e} of the peak"),
    )
}

fn moment_matrix(values: Vec<f64>, freqs: Vec<f64>, times: Vec<f64>) -> crate::Result<RealTfm> {
    let shape = (freqs.len(), times.len());
    let coefs = ndarray::Array2::from_shape_vec(shape, values)
        .map_err(|e| crate::Error::ShapeMismatch(e.to_string()))?;
    RealTfm::new(coefs, freqs, times, 1000.0)
}

fn moment_delta() -> Outcome {
    let mut v = vec![0.0; 12];
    v[5] = 3.0;
    let m = moment_matrix(v, vec![50.0, 100.0, 150.0], vec![0.0, 0.1, 0.2, 0.3]).map_err(err)?;
    let d = normalize_distribution(&m, DistributionKind::Magnitude).map_err(err)?;
    let f = moment_features(&d, FeatureMode::Joint);
    ensure(
        (f.mean, f.variance, f.skewness, f.kurtosis) == (10.0, 0.0, 0.0, 0.0) && f.degenerate,
        format!(
            "({}, {}, {}, {})",
            f.mean, f.variance, f.skewness, f.kurtosis
        ),
    )
}

fn moment_symmetry() -> Outcome {
    let w = [1.0, 3.0, 7.0, 3.0, 1.0];
    let tw = [2.0, 5.0, 5.0, 2.0];
    let values: Vec<f64> = (0..5)
        .flat_map(|i| (0..4).map(move |j| w[i] * tw[j]))
        .collect();
    let m = moment_matrix(
        values,
        vec![10.0, 20.0, 30.0, 40.0, 50.0],
        vec![0.0, 0.001, 0.002, 0.003],
    )
    .map_err(err)?;
    let d = normalize_distribution(&m, DistributionKind::Magnitude).map_err(err)?;
    let skew = moment_features(&d, FeatureMode::Joint).skewness;
    ensure(skew.abs() < 1e-9, format!("joint skewness {skew:.1e}"))
}

fn segmentation_count() -> Outcome {
    let s = MultichannelSignal::new(ndarray::Array2::zeros((4, 12000)), FS).map_err(err)?;
    let w = trim_and_segment(&s, &SegmentationSpec::default()).map_err(err)?;
    let sizes = w.iter().all(|x| x.len() == 500 && x.channel_count() == 4);
    ensure(w.len() == 76 && sizes, format!("{} windows", w.len()))
}

fn kw_hand_example() -> Outcome {
    let r = kruskal_wallis_groups(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], &[7.0, 8.0, 9.0]])
        .map_err(err)?;
    let expected = (-3.6f64).exp();
    ensure(
        r.h == 7.2 && r.df == 2 && (r.p_value - expected).abs() < 1e-12,
        format!("H = {}, p = {:.10}", r.h, r.p_value),
    )
}

fn kw_identical_groups() -> Outcome {
    let r = kruskal_wallis_groups(&[&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]]).map_err(err)?;
    ensure(
        r.p_value > 0.9 && r.tie_correction < 1.0,
        format!("p = {:.6}", r.p_value),
    )
}

fn kw_all_equal() -> Outcome {
    let r = kruskal_wallis_groups(&[&[4.0; 5], &[4.0; 3], &[4.0; 4]]).map_err(err)?;
    ensure(
        r.h == 0.0 && r.p_value == 1.0,
        format!("H = {}, p = {}", r.h, r.p_value),
    )
}

fn kw_rank_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let groups: Vec<Vec<f64>> = (0..4)
        .map(|g| {
            (0..12)
                .map(|_| rng.random_range(0.0..1.0) + 0.1 * g as f64)
                .collect()
        })
        .collect();
    let mapped: Vec<Vec<f64>> = groups
        .iter()
        .map(|g| g.iter().map(|v| (3.0 * v).exp() - 7.0).collect())
        .collect();
    let refs = |g: &[Vec<f64>]| -> Vec<Vec<f64>> { g.to_vec() };
    let a_groups = refs(&groups);
    let b_groups = refs(&mapped);
    let a = kruskal_wallis_groups(&a_groups.iter().map(Vec::as_slice).collect::<Vec<_>>())
        .map_err(err)?;
    let b = kruskal_wallis_groups(&b_groups.iter().map(Vec::as_slice).collect::<Vec<_>>())
        .map_err(err)?;
    ensure(
        a.h.to_bits() == b.h.to_bits() && a.p_value.to_bits() == b.p_value.to_bits(),
        format!("H = {:.6} under both value scales", a.h),
    )
}

fn chisq_grid(table: &[(f64, u32, f64)]) -> Outcome {
    let mut worst = 0.0f64;
    for &(x, df, q) in table {
        let got = chisq_survival(x, df).map_err(err)?;
        worst = worst.max(((got - q) / q).abs());
    }
    ensure(
        worst <= 1e-9,
        format!(
            "{} reference points, worst relative error {worst:.1e}",
            table.len()
        ),
    )
}

/// Solves `Q(x; df) = target` by bisection on `ln Q`.
pub fn chisq_inverse(target: f64, df: u32) -> crate::Result<f64> {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while chisq_survival(hi, df)? > target {
        hi *= 2.0;
    }
    let goal = target.ln();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if chisq_survival(mid, df)?.ln() > goal {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn chisq_inversion() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for target in [5.9155e-16, 2.5985e-20, 1.2819e-16, 1.0664e-07] {
        let x = chisq_inverse(target, 9).map_err(err)?;
        let back = chisq_survival(x, 9).map_err(err)?;
        ok &= ((back - target) / target).abs() < 1e-3;
        parts.push(format!("{target:e} at x = {x:.4}"));
    }
    let x = chisq_inverse(5.9155e-16, 9).map_err(err)?;
    ok &= (85.0..=100.0).contains(&x);
    ensure(ok, parts.join(", "))
}

fn zscore_pairwise_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let table: Vec<FeatureRecord> = Gesture::ALL
        .into_iter()
        .flat_map(|g| (0..8u32).map(move |w| (g, w)))
        .map(|(g, w)| FeatureRecord {
            subject: 1,
            gesture: g,
            repetition: 1,
            window: w,
            features: MomentFeatures {
                mean: 200.0 + 40.0 * rng.random_range(0.0..1.0),
                variance: rng.random_range(0.0..5.0f64).exp(),
                skewness: rng.random_range(-1.0..1.0),
                kurtosis: rng.random_range(1.0..9.0),
                degenerate: false,
            },
        })
        .collect();
    let z = zscore_columns(&table).map_err(err)?;
    let mut tests = 0;
    for f in Feature::ALL {
        let a = pairwise_kw(&table, f).map_err(err)?;
        let b = pairwise_kw(&z, f).map_err(err)?;
        let same = a
            .p_values
            .iter()
            .zip(b.p_values.iter())
            .all(|(x, y)| x.to_bits() == y.to_bits());
        if !same {
            return Err(format!("{f} p-values differ after z-scoring"));
        }
        tests += a.tests.len();
    }
    ensure(tests == 180, format!("{tests} pairwise p-values unchanged"))
}

/// Runs every check with the built-in chi-square reference table.
pub fn run_selftest() -> SelftestReport {
    run_selftest_with_reference(CHISQ_REFERENCE)
}

type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

/// Runs every check, comparing the chi-square engine against `reference`
/// (`(x, df, Q)` triples).
pub fn run_selftest_with_reference(reference: &[(f64, u32, f64)]) -> SelftestReport {
    let checks: Vec<Check<'_>> = vec![
        ("fft_impulse", Box::new(fft_impulse)),
        ("fft_parseval", Box::new(fft_parseval)),
        ("bandpass_response", Box::new(bandpass_response)),
        ("notch_response", Box::new(notch_response)),
        ("filter_stability", Box::new(filter_stability)),
        ("cwt_tone_ridge", Box::new(cwt_tone_ridge)),
        ("sst_tone_concentration", Box::new(sst_tone_concentration)),
        ("sst_chirp_tracking", Box::new(sst_chirp_tracking)),
        ("msst_identical_channels", Box::new(msst_identical_channels)),
        ("msst_channel_permutation", Box::new(msst_permutation)),
        ("msst_scaling", Box::new(msst_scaling)),
        ("moment_delta_guard", Box::new(moment_delta)),
        ("moment_symmetry", Box::new(moment_symmetry)),
        ("segmentation_count", Box::new(segmentation_count)),
        ("kw_hand_example", Box::new(kw_hand_example)),
        ("kw_identical_groups", Box::new(kw_identical_groups)),
        ("kw_all_equal", Box::new(kw_all_equal)),
        ("kw_rank_invariance", Box::new(kw_rank_invariance)),
        (
            "chisq_reference_grid",
            Box::new(move || chisq_grid(reference)),
        ),
        ("chisq_inversion_df9", Box::new(chisq_inversion)),
        (
            "zscore_pairwise_identity",
            Box::new(zscore_pairwise_identity),
        ),
    ];
    SelftestReport {
        checks: checks
            .into_iter()
            .map(|(name, check)| {
                let (passed, detail) = match check() {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                CheckResult {
                    name,
                    passed,
                    detail,
                }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let report = run_selftest();
        assert!(report.checks.len() >= 12);
        assert!(report.passed(), "{report}");
        let mut names: Vec<_> = report.checks.iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), report.checks.len());
    }

    #[test]
    fn perturbed_reference_fails() {
        let mut table = CHISQ_REFERENCE.to_vec();
        table[100].2 *= 1.001;
        let report = run_selftest_with_reference(&table);
        assert!(!report.passed());
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        assert_eq!(failed, ["chisq_reference_grid"]);
        assert!(report.to_string().contains("FAIL  chisq_reference_grid"));
    }

    #[test]
    fn inverse_round_trips() {
        for df in [1, 4, 9] {
            for p in [0.5, 1e-3, 1e-12] {
                let x = chisq_inverse(p, df).unwrap();
                assert!(((chisq_survival(x, df).unwrap() - p) / p).abs() < 1e-9);
            }
        }
    }
}
