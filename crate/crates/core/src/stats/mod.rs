//! Mid-ranks, the Kruskal-Wallis test and the drivers built on it.

mod chisq;

pub use chisq::{chisq_survival, gamma_q, ln_gamma};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use ndarray::Array2;
use rayon::prelude::*;

use crate::dataio::Gesture;
use crate::features::{Feature, FeatureRecord};
use crate::{Error, Result};

/// Ascending mid-ranks (1-based); tied values share the mean of the ranks
/// they span.
pub fn rank_with_ties(values: &[f64]) -> Result<Vec<f64>> {
    Ok(rank_and_ties(values)?.0)
}

type TieGroups = Vec<(f64, usize)>;

/// Ranks plus `(value, multiplicity)` for every tie group of size > 1.
fn rank_and_ties(values: &[f64]) -> Result<(Vec<f64>, TieGroups)> {
    if values.is_empty() {
        return Err(Error::EmptyTable);
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut ties = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let v = values[order[start]];
        // -0.0 and 0.0 are equal values and must tie.
        let end = start
            + order[start..]
                .iter()
                .take_while(|&&i| values[i] == v)
                .count();
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        if end - start > 1 {
            ties.push((v, end - start));
        }
        start = end;
    }
    Ok((ranks, ties))
}

/// Values with their groups and mid-ranks.
#[derive(Debug, Clone, PartialEq)]
pub struct RankTable<G> {
    pub values: Vec<f64>,
    pub group_ids: Vec<G>,
    pub ranks: Vec<f64>,
    pub tie_groups: Vec<(f64, usize)>,
}

impl<G: Clone> RankTable<G> {
    pub fn new(values: &[f64], group_ids: &[G]) -> Result<Self> {
        if values.len() != group_ids.len() {
            return Err(Error::InvalidGroups(format!(
                "{} values but {} group labels",
                values.len(),
                group_ids.len()
            )));
        }
        let (ranks, tie_groups) = rank_and_ties(values)?;
        Ok(RankTable {
            values: values.to_vec(),
            group_ids: group_ids.to_vec(),
            ranks,
            tie_groups,
        })
    }
}

/// Outcome of one Kruskal-Wallis test. Group vectors follow ascending group
/// label order.
#[derive(Debug, Clone, PartialEq)]
pub struct KwResult {
    pub h: f64,
    pub df: u32,
    pub p_value: f64,
    pub tie_correction: f64,
    pub group_rank_sums: Vec<f64>,
    pub group_sizes: Vec<usize>,
}

fn tree_sum(v: &[f64]) -> f64 {
    match v.len() {
        0 => 0.0,
        1 => v[0],
        n => tree_sum(&v[..n / 2]) + tree_sum(&v[n / 2..]),
    }
}

/// Kruskal-Wallis test of `groups`, each a slice of observations.
///
/// H is computed as `(N - 1) * SS_between / SS_total` on the mid-ranks,
/// which equals the tie-corrected statistic. When every value is equal,
/// H = 0 and p = 1.
pub fn kruskal_wallis_groups(groups: &[&[f64]]) -> Result<KwResult> {
    if groups.len() < 2 {
        return Err(Error::InvalidGroups(format!(
            "need at least 2 groups, got {}",
            groups.len()
        )));
    }
    if let Some(i) = groups.iter().position(|g| g.is_empty()) {
        return Err(Error::InvalidGroups(format!(
            "group {i} has no observations"
        )));
    }
    let values: Vec<f64> = groups.iter().flat_map(|g| g.iter().copied()).collect();
    let (ranks, ties) = rank_and_ties(&values)?;
    let n = values.len() as f64;
    let mean_rank = (n + 1.0) / 2.0;

    let mut sums = Vec::with_capacity(groups.len());
    let mut between = Vec::with_capacity(groups.len());
    let mut offset = 0;
    for g in groups {
        let r = tree_sum(&ranks[offset..offset + g.len()]);
        let ni = g.len() as f64;
        let d = r / ni - mean_rank;
        sums.push(r);
        between.push(ni * d * d);
        offset += g.len();
    }
    // Sorting makes the sum independent of group labelling.
    between.sort_by(f64::total_cmp);
    let mut total: Vec<f64> = ranks
        .iter()
        .map(|r| (r - mean_rank) * (r - mean_rank))
        .collect();
    total.sort_by(f64::total_cmp);
    let ss_between = tree_sum(&between);
    let ss_total = tree_sum(&total);

    let tie_sum: f64 = ties
        .iter()
        .map(|&(_, t)| (t as f64).powi(3) - t as f64)
        .sum();
    let tie_correction = 1.0 - tie_sum / (n * n * n - n);
    let df = (groups.len() - 1) as u32;
    let (h, p_value) = if ss_total > 0.0 {
        let h = ((n - 1.0) * ss_between / ss_total).max(0.0);
        (h, chisq_survival(h, df)?)
    } else {
        (0.0, 1.0)
    };
    Ok(KwResult {
        h,
        df,
        p_value,
        tie_correction,
        group_rank_sums: sums,
        group_sizes: groups.iter().map(|g| g.len()).collect(),
    })
}

/// Kruskal-Wallis test over labelled observations.
pub fn kruskal_wallis<G: Ord + Clone>(values: &[f64], group_ids: &[G]) -> Result<KwResult> {
    if values.len() != group_ids.len() {
        return Err(Error::InvalidGroups(format!(
            "{} values but {} group labels",
            values.len(),
            group_ids.len()
        )));
    }
    let mut grouped: BTreeMap<G, Vec<f64>> = BTreeMap::new();
    for (v, g) in values.iter().zip(group_ids) {
        grouped.entry(g.clone()).or_default().push(*v);
    }
    let slices: Vec<&[f64]> = grouped.values().map(|v| v.as_slice()).collect();
    kruskal_wallis_groups(&slices)
}

fn by_gesture(table: &[FeatureRecord], feature: Feature) -> BTreeMap<Gesture, Vec<f64>> {
    let mut grouped: BTreeMap<Gesture, Vec<f64>> = BTreeMap::new();
    for r in table {
        grouped.entry(r.gesture).or_default().push(r.get(feature));
    }
    grouped
}

/// Two-gesture tests for every pair of gestures present in a table.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseMatrix {
    pub feature: Feature,
    /// Gestures with data, in report order.
    pub gestures: Vec<Gesture>,
    /// Symmetric p-value matrix over `gestures` with a unit diagonal.
    pub p_values: Array2<f64>,
    /// Upper-triangle tests in row-major order.
    pub tests: Vec<(Gesture, Gesture, KwResult)>,
    /// Gestures absent from the table.
    pub missing: Vec<Gesture>,
}

/// `(gesture, gesture, p)`.
pub type PairP = (Gesture, Gesture, f64);

impl PairwiseMatrix {
    /// Smallest and largest off-diagonal p-values with their pairs.
    pub fn extremes(&self) -> Option<(PairP, PairP)> {
        let min = self
            .tests
            .iter()
            .min_by(|a, b| a.2.p_value.total_cmp(&b.2.p_value))?;
        let max = self
            .tests
            .iter()
            .max_by(|a, b| a.2.p_value.total_cmp(&b.2.p_value))?;
        Some(((min.0, min.1, min.2.p_value), (max.0, max.1, max.2.p_value)))
    }
}

pub fn pairwise_kw(table: &[FeatureRecord], feature: Feature) -> Result<PairwiseMatrix> {
    let grouped = by_gesture(table, feature);
    if grouped.len() < 2 {
        return Err(Error::InvalidGroups(format!(
            "pairwise tests need at least 2 gestures, found {}",
            grouped.len()
        )));
    }
    let gestures: Vec<Gesture> = grouped.keys().copied().collect();
    let missing = Gesture::ALL
        .into_iter()
        .filter(|g| !grouped.contains_key(g))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..gestures.len())
        .flat_map(|a| (a + 1..gestures.len()).map(move |b| (a, b)))
        .collect();
    let tests = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (ga, gb) = (gestures[a], gestures[b]);
            kruskal_wallis_groups(&[&grouped[&ga], &grouped[&gb]]).map(|r| (ga, gb, r))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = gestures.len();
    let mut p_values = Array2::from_elem((g, g), 1.0);
    for (&(a, b), (_, _, r)) in pairs.iter().zip(&tests) {
        p_values[[a, b]] = r.p_value;
        p_values[[b, a]] = r.p_value;
    }
    Ok(PairwiseMatrix {
        feature,
        gestures,
        p_values,
        tests,
        missing,
    })
}

/// How subjects are pooled for the gesture tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// One test over every row.
    InterSubject,
    /// One test per block of `k` consecutive subject IDs.
    IntraSubject(u32),
}

impl FromStr for Scenario {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inter" {
            return Ok(Scenario::InterSubject);
        }
        if let Some(k) = s.strip_prefix("intra:") {
            if let Ok(k) = k.parse::<u32>() {
                if k > 0 {
                    return Ok(Scenario::IntraSubject(k));
                }
            }
        }
        Err(Error::InvalidScenario(format!(
            "expected 'inter' or 'intra:<k>' with k >= 1, got '{s}'"
        )))
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scenario::InterSubject => f.write_str("inter"),
            Scenario::IntraSubject(k) => write!(f, "intra:{k}"),
        }
    }
}

/// Per-feature results for one pool of subjects.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockResult {
    pub subjects: Vec<u32>,
    /// Indexed like [`Feature::ALL`].
    pub results: Vec<KwResult>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    pub scenario: Scenario,
    pub blocks: Vec<BlockResult>,
    /// Mean p-value across blocks, indexed like [`Feature::ALL`].
    pub mean_p: Vec<f64>,
    /// Subjects left out because they did not fill a whole block.
    pub dropped_subjects: Vec<u32>,
}

impl ScenarioReport {
    /// The overall result for `feature` when the scenario has one block.
    pub fn overall(&self, feature: Feature) -> Option<&KwResult> {
        match self.blocks.as_slice() {
            [only] => only.results.get(feature as usize),
            _ => None,
        }
    }
}

/// Gesture tests for every feature under `scenario`. Intra-subject blocks
/// take consecutive subject IDs in ascending order; subjects that do not
/// fill a final block are dropped and reported.
pub fn scenario_runner(table: &[FeatureRecord], scenario: Scenario) -> Result<ScenarioReport> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let mut subjects: Vec<u32> = table.iter().map(|r| r.subject).collect();
    subjects.sort_unstable();
    subjects.dedup();
    let k = match scenario {
        Scenario::InterSubject => subjects.len(),
        Scenario::IntraSubject(k) => {
            let k = k as usize;
            if k == 0 || k > subjects.len() {
                return Err(Error::InvalidScenario(format!(
                    "block size {k} exceeds the {} available subjects",
                    subjects.len()
                )));
            }
            k
        }
    };
    let chunks: Vec<&[u32]> = subjects.chunks_exact(k).collect();
    let dropped_subjects = subjects.chunks_exact(k).remainder().to_vec();
    let blocks = chunks
        .par_iter()
        .map(|block| {
            let rows: Vec<&FeatureRecord> = table
                .iter()
                .filter(|r| block.binary_search(&r.subject).is_ok())
                .collect();
            let results = Feature::ALL
                .iter()
                .map(|&f| {
                    let values: Vec<f64> = rows.iter().map(|r| r.get(f)).collect();
                    let labels: Vec<Gesture> = rows.iter().map(|r| r.gesture).collect();
                    kruskal_wallis(&values, &labels)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(BlockResult {
                subjects: block.to_vec(),
                results,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mean_p = (0..Feature::ALL.len())
        .map(|i| blocks.iter().map(|b| b.results[i].p_value).sum::<f64>() / blocks.len() as f64)
        .collect();
    Ok(ScenarioReport {
        scenario,
        blocks,
        mean_p,
        dropped_subjects,
    })
}
