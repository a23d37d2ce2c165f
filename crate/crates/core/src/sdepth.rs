//! Exact Stanley depth via interval partitions of the characteristic poset.
//!
//! For `g` the exponent vector of `lcm(G(I))`, the poset holds the exponent
//! vectors `a <= g` with `x^a` in the ideal (ideal mode) or outside it
//! (quotient mode). An interval `[b, c]` corresponds to the Stanley space
//! `x^b K[Z]` with `Z = {x_j : c_j = g_j}`, so a disjoint interval cover in
//! which every top hits `k` coordinates of `g` witnesses `sdepth >= k`.
//! The search is exact backtracking; when the node budget runs out the
//! answer is reported as indeterminate, never guessed.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetMode {
    Ideal,
    Quotient,
}

impl std::fmt::Display for PosetMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosetMode::Ideal => write!(f, "ideal"),
            PosetMode::Quotient => write!(f, "quotient"),
        }
    }
}

/// Search limits. The box cap bounds the poset that will be materialized;
/// the node budget bounds each partition search.
#[derive(Debug, Clone)]
pub struct SdepthConfig {
    pub box_cap: u64,
    pub node_budget: u64,
    /// Override for the box vector `g`; must dominate the lcm exponents.
    pub g_override: Option<Vec<u32>>,
}

impl Default for SdepthConfig {
    fn default() -> Self {
        SdepthConfig {
            box_cap: 200_000,
            node_budget: 10_000_000,
            g_override: None,
        }
    }
}

/// The finite poset of multidegrees driving the sdepth computation.
#[derive(Debug, Clone)]
pub struct CharacteristicPoset {
    n: usize,
    mode: PosetMode,
    g: Vec<u32>,
    points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl CharacteristicPoset {
    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> PosetMode {
        self.mode
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    /// Points in a fixed linear extension: ascending total degree, then
    /// ascending exponent order.
    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of coordinates where the point touches the box boundary; this
    /// is the dimension of the Stanley space an interval topped there spans.
    pub fn value(&self, idx: usize) -> u32 {
        self.points[idx]
            .iter()
            .zip(&self.g)
            .filter(|(p, g)| p == g)
            .count() as u32
    }
}

fn box_size(g: &[u32]) -> u128 {
    g.iter().map(|&e| e as u128 + 1).product()
}

/// Advance `current` one step through the box `[lo, hi]` in row-major order;
/// returns false once the walk is exhausted.
fn odometer_step(current: &mut [u32], lo: &[u32], hi: &[u32]) -> bool {
    let mut i = current.len();
    while i > 0 {
        i -= 1;
        if current[i] < hi[i] {
            current[i] += 1;
            return true;
        }
        current[i] = lo[i];
    }
    false
}

/// Build the characteristic poset of a proper nonzero ideal.
pub fn char_poset(ideal: &MonomialIdeal, mode: PosetMode) -> Result<CharacteristicPoset> {
    char_poset_with(ideal, mode, &SdepthConfig::default())
}

pub fn char_poset_with(
    ideal: &MonomialIdeal,
    mode: PosetMode,
    config: &SdepthConfig,
) -> Result<CharacteristicPoset> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    let lcm = ideal.lcm_exponents();
    let g = match &config.g_override {
        None => lcm,
        Some(over) => {
            if over.len() != n {
                return Err(Error::RingMismatch {
                    expected: n,
                    got: over.len(),
                });
            }
            for (i, (&o, &l)) in over.iter().zip(&lcm).enumerate() {
                if o < l {
                    return Err(Error::GOverrideTooSmall { index: i, min: l });
                }
            }
            over.clone()
        }
    };
    let size = box_size(&g);
    if size > config.box_cap as u128 {
        return Err(Error::BoxCapExceeded {
            size,
            cap: config.box_cap,
        });
    }
    let zeros = vec![0u32; n];
    let mut points = Vec::new();
    let mut current = vec![0u32; n];
    loop {
        let inside = ideal.contains(&Monomial::new(current.clone()))?;
        let keep = match mode {
            PosetMode::Ideal => inside,
            PosetMode::Quotient => !inside,
        };
        if keep {
            points.push(current.clone());
        }
        if !odometer_step(&mut current, &zeros, &g) {
            break;
        }
    }
    points.sort_by_key(|p| (p.iter().map(|&e| e as u64).sum::<u64>(), p.clone()));
    let index = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as u32))
        .collect();
    Ok(CharacteristicPoset {
        n,
        mode,
        g,
        points,
        index,
    })
}

/// An interval `[lo, hi]` of exponent vectors, both ends inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Vec<u32>,
    pub hi: Vec<u32>,
}

/// A disjoint interval cover of the characteristic poset witnessing
/// `sdepth >= k`. Serializable as a stand-alone certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    pub k: u32,
    pub mode: PosetMode,
    pub g: Vec<u32>,
    pub intervals: Vec<Interval>,
}

/// Outcome of a single bounded partition search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionSearch {
    Found(IntervalPartition),
    /// The exhaustive search ruled a partition out.
    Absent,
    /// The node budget ran out before the search space was exhausted.
    Indeterminate {
        nodes_spent: u64,
    },
}

struct Searcher<'a> {
    poset: &'a CharacteristicPoset,
    k: u32,
    covered: Vec<bool>,
    covered_bits: Vec<u64>,
    budget: u64,
    nodes: u64,
    /// candidate tops per point, ordered by descending value then index
    candidates: HashMap<u32, Vec<u32>>,
    failed: HashSet<Vec<u64>>,
    memo_enabled: bool,
    chosen: Vec<(u32, u32)>,
}

const MEMO_MAX_WORDS: usize = 4;
const MEMO_MAX_ENTRIES: usize = 1 << 20;

enum SearchOutcome {
    Found,
    Exhausted,
    OutOfBudget,
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl<'a> Searcher<'a> {
    fn new(poset: &'a CharacteristicPoset, k: u32, budget: u64) -> Self {
        let words = poset.len().div_ceil(64);
        Searcher {
            poset,
            k,
            covered: vec![false; poset.len()],
            covered_bits: vec![0; words],
            budget,
            nodes: 0,
            candidates: HashMap::new(),
            failed: HashSet::new(),
            memo_enabled: words <= MEMO_MAX_WORDS,
            chosen: Vec::new(),
        }
    }

    fn candidate_tops(&mut self, b: u32) -> &[u32] {
        let poset = self.poset;
        let k = self.k;
        self.candidates.entry(b).or_insert_with(|| {
            let lo = &poset.points[b as usize];
            let mut tops: Vec<u32> = (b..poset.len() as u32)
                .filter(|&c| poset.value(c as usize) >= k && le(lo, &poset.points[c as usize]))
                .collect();
            tops.sort_by_key(|&c| (std::cmp::Reverse(poset.value(c as usize)), c));
            tops
        })
    }

    /// Indices of the poset points in the box [lo, hi]. Both modes keep the
    /// box inside the poset, so every lookup must succeed.
    fn box_points(&self, lo: &[u32], hi: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        let mut current = lo.to_vec();
        loop {
            let idx = *self
                .poset
                .index
                .get(&current)
                .expect("interval between poset points stays in the poset");
            out.push(idx);
            if !odometer_step(&mut current, lo, hi) {
                break;
            }
        }
        out
    }

    fn mark(&mut self, pts: &[u32], covered: bool) {
        for &p in pts {
            self.covered[p as usize] = covered;
            self.covered_bits[p as usize / 64] ^= 1 << (p as usize % 64);
        }
    }

    fn search(&mut self, cursor: u32) -> SearchOutcome {
        let mut b = cursor;
        while (b as usize) < self.poset.len() && self.covered[b as usize] {
            b += 1;
        }
        if b as usize == self.poset.len() {
            return SearchOutcome::Found;
        }
        if self.memo_enabled && self.failed.contains(&self.covered_bits) {
            return SearchOutcome::Exhausted;
        }
        let tops = self.candidate_tops(b).to_vec();
        for c in tops {
            if self.nodes >= self.budget {
                return SearchOutcome::OutOfBudget;
            }
            self.nodes += 1;
            let lo = self.poset.points[b as usize].clone();
            let hi = self.poset.points[c as usize].clone();
            let pts = self.box_points(&lo, &hi);
            if pts.iter().any(|&p| self.covered[p as usize]) {
                continue;
            }
            self.mark(&pts, true);
            self.chosen.push((b, c));
            match self.search(b + 1) {
                SearchOutcome::Found => return SearchOutcome::Found,
                SearchOutcome::OutOfBudget => return SearchOutcome::OutOfBudget,
                SearchOutcome::Exhausted => {
                    self.chosen.pop();
                    self.mark(&pts, false);
                }
            }
        }
        if self.memo_enabled && self.failed.len() < MEMO_MAX_ENTRIES {
            self.failed.insert(self.covered_bits.clone());
        }
        SearchOutcome::Exhausted
    }
}

/// Exhaustive search for an interval partition in which every interval top
/// touches at least `k` coordinates of `g`. Budget exhaustion is reported as
/// indeterminate, never as absence.
pub fn admits_partition(poset: &CharacteristicPoset, k: u32, node_budget: u64) -> PartitionSearch {
    let build = |pairs: &[(u32, u32)]| IntervalPartition {
        k,
        mode: poset.mode,
        g: poset.g.clone(),
        intervals: pairs
            .iter()
            .map(|&(b, c)| Interval {
                lo: poset.points[b as usize].clone(),
                hi: poset.points[c as usize].clone(),
            })
            .collect(),
    };
    if k == 0 {
        // singleton intervals always work
        let pairs: Vec<(u32, u32)> = (0..poset.len() as u32).map(|i| (i, i)).collect();
        return PartitionSearch::Found(build(&pairs));
    }
    // a point that cannot reach any admissible top rules every partition out
    for b in 0..poset.len() as u32 {
        let lo = &poset.points[b as usize];
        let reachable = (b..poset.len() as u32)
            .any(|c| poset.value(c as usize) >= k && le(lo, &poset.points[c as usize]));
        if !reachable {
            return PartitionSearch::Absent;
        }
    }
    let mut searcher = Searcher::new(poset, k, node_budget);
    match searcher.search(0) {
        SearchOutcome::Found => PartitionSearch::Found(build(&searcher.chosen)),
        SearchOutcome::Exhausted => PartitionSearch::Absent,
        SearchOutcome::OutOfBudget => PartitionSearch::Indeterminate {
            nodes_spent: searcher.nodes,
        },
    }
}

/// Result of an sdepth computation. Exact values carry the witnessing
/// certificate; budget-capped runs report the best proven lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdepthResult {
    Exact {
        value: u32,
        certificate: IntervalPartition,
    },
    Indeterminate {
        lower_bound: u32,
        certificate: Option<IntervalPartition>,
        nodes_spent: u64,
    },
}

impl SdepthResult {
    pub fn exact_value(&self) -> Option<u32> {
        match self {
            SdepthResult::Exact { value, .. } => Some(*value),
            SdepthResult::Indeterminate { .. } => None,
        }
    }

    /// Largest k for which a verified partition exists.
    pub fn lower_bound(&self) -> u32 {
        match self {
            SdepthResult::Exact { value, .. } => *value,
            SdepthResult::Indeterminate { lower_bound, .. } => *lower_bound,
        }
    }

    pub fn certificate(&self) -> Option<&IntervalPartition> {
        match self {
            SdepthResult::Exact { certificate, .. } => Some(certificate),
            SdepthResult::Indeterminate { certificate, .. } => certificate.as_ref(),
        }
    }
}

fn sdepth_scan(
    ideal: &MonomialIdeal,
    mode: PosetMode,
    config: &SdepthConfig,
) -> Result<SdepthResult> {
    let poset = char_poset_with(ideal, mode, config)?;
    let n = poset.nvars() as u32;
    let mut best: Option<(u32, IntervalPartition)> = None;
    for k in 0..=n {
        match admits_partition(&poset, k, config.node_budget) {
            PartitionSearch::Found(partition) => {
                debug_assert!(matches!(
                    certify_partition(ideal, &partition),
                    Ok(CertifyOutcome::Valid)
                ));
                best = Some((k, partition));
            }
            PartitionSearch::Absent => break,
            PartitionSearch::Indeterminate { nodes_spent } => {
                let (lower_bound, certificate) = match best {
                    Some((v, c)) => (v, Some(c)),
                    None => (0, None),
                };
                return Ok(SdepthResult::Indeterminate {
                    lower_bound,
                    certificate,
                    nodes_spent,
                });
            }
        }
    }
    let (value, certificate) = best.expect("k = 0 always admits a partition");
    Ok(SdepthResult::Exact { value, certificate })
}

/// Stanley depth of the ideal `I`, exact when the budget suffices.
pub fn sdepth_ideal(ideal: &MonomialIdeal, config: &SdepthConfig) -> Result<SdepthResult> {
    sdepth_scan(ideal, PosetMode::Ideal, config)
}

/// Stanley depth of the quotient `S/I`.
pub fn sdepth_quotient(ideal: &MonomialIdeal, config: &SdepthConfig) -> Result<SdepthResult> {
    sdepth_scan(ideal, PosetMode::Quotient, config)
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("certificate g has {got} entries, ideal has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("certificate g entry {index} is below the lcm exponent {min}")]
    GBelowLcm { index: usize, min: u32 },

    #[error("interval {index} is malformed: lo must divide hi, hi must stay in the box")]
    MalformedInterval { index: usize },

    #[error("interval {index} has value {value}, below the claimed k = {k}")]
    ValueBelowK { index: usize, value: u32, k: u32 },

    #[error("point {point:?} lies outside the poset but inside interval {index}")]
    PointOutsidePoset { index: usize, point: Vec<u32> },

    #[error("poset point {point:?} is covered {count} times, expected exactly once")]
    CoverageViolation { point: Vec<u32>, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Valid,
    Invalid(CertificateError),
}

/// Stand-alone certificate checker: walks the whole box and verifies the
/// disjoint-cover and value conditions directly against ideal membership.
/// It shares no state with the partition search.
pub fn certify_partition(
    ideal: &MonomialIdeal,
    partition: &IntervalPartition,
) -> Result<CertifyOutcome> {
    certify_partition_with(ideal, partition, &SdepthConfig::default())
}

pub fn certify_partition_with(
    ideal: &MonomialIdeal,
    partition: &IntervalPartition,
    config: &SdepthConfig,
) -> Result<CertifyOutcome> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    let invalid = |e: CertificateError| Ok(CertifyOutcome::Invalid(e));
    if partition.g.len() != n {
        return invalid(CertificateError::DimensionMismatch {
            expected: n,
            got: partition.g.len(),
        });
    }
    let lcm = ideal.lcm_exponents();
    for (i, (&ge, &le_)) in partition.g.iter().zip(&lcm).enumerate() {
        if ge < le_ {
            return invalid(CertificateError::GBelowLcm { index: i, min: le_ });
        }
    }
    let size = box_size(&partition.g);
    if size > config.box_cap as u128 {
        return Err(Error::BoxCapExceeded {
            size,
            cap: config.box_cap,
        });
    }
    for (idx, interval) in partition.intervals.iter().enumerate() {
        if interval.lo.len() != n
            || interval.hi.len() != n
            || !le(&interval.lo, &interval.hi)
            || !le(&interval.hi, &partition.g)
        {
            return invalid(CertificateError::MalformedInterval { index: idx });
        }
        let value = interval
            .hi
            .iter()
            .zip(&partition.g)
            .filter(|(h, g)| h == g)
            .count() as u32;
        if value < partition.k {
            return invalid(CertificateError::ValueBelowK {
                index: idx,
                value,
                k: partition.k,
            });
        }
    }
    // walk the whole box once, checking exact coverage of the poset
    let zeros = vec![0u32; n];
    let mut current = vec![0u32; n];
    loop {
        let inside = match partition.mode {
            PosetMode::Ideal => ideal.contains(&Monomial::new(current.clone()))?,
            PosetMode::Quotient => !ideal.contains(&Monomial::new(current.clone()))?,
        };
        let mut count = 0usize;
        let mut first_interval = usize::MAX;
        for (idx, interval) in partition.intervals.iter().enumerate() {
            if le(&interval.lo, &current) && le(&current, &interval.hi) {
                count += 1;
                if first_interval == usize::MAX {
                    first_interval = idx;
                }
            }
        }
        if inside && count != 1 {
            return invalid(CertificateError::CoverageViolation {
                point: current,
                count,
            });
        }
        if !inside && count != 0 {
            return invalid(CertificateError::PointOutsidePoset {
                index: first_interval,
                point: current,
            });
        }
        if !odometer_step(&mut current, &zeros, &partition.g) {
            break;
        }
    }
    Ok(CertifyOutcome::Valid)
}
