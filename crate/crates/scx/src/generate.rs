//! Seeded random complexes with order-independent draws.
//!
//! Candidate d-simplices are the `C(n, d+1)` vertex subsets of `1..=n` in
//! lexicographic order. Every draw is keyed by `(seed, candidate rank)`
//! through a fixed 64-bit mixing function, so a configuration produces the
//! same complex on every platform, with any thread count, and regardless of
//! enumeration order. That makes sharding the rank space across threads
//! safe: the parallel and sequential paths emit identical complexes.

use crate::complex::WeightedComplex;
use crate::error::Error;
use crate::simplex::Simplex;

/// Parameters for sampling a random weighted complex.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    /// Vertex universe size; vertices are `1..=n`.
    pub n: u32,
    /// Dimension of the weighted simplices. Requires `1 <= d < n`.
    pub d: usize,
    /// Independent inclusion probability for each candidate, in `[0, 1]`.
    pub p: f64,
    /// Weights are uniform in `[weight_low, weight_high]`, `0 <= low <= high`.
    pub weight_low: f64,
    pub weight_high: f64,
    /// Round each weight to the nearest integer.
    pub integer_weights: bool,
    pub seed: u64,
}

/// Hard cap on the candidate space; beyond this the sweep is refused.
const MAX_CANDIDATES: u64 = 1 << 40;

/// Ranks per work unit when sampling in parallel.
const BLOCK: u64 = 1 << 16;

impl GeneratorConfig {
    /// Validates the parameters and returns the candidate count `C(n, d+1)`.
    pub fn candidate_count(&self) -> Result<u64, Error> {
        if self.d == 0 {
            return Err(Error::InvalidConfig("dimension must be at least 1".into()));
        }
        if self.d as u64 >= u64::from(self.n) {
            return Err(Error::InvalidConfig(format!(
                "need d < n, got d={} n={}",
                self.d, self.n
            )));
        }
        if !self.p.is_finite() || !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidConfig(format!("p={} outside [0, 1]", self.p)));
        }
        if !self.weight_low.is_finite() || !self.weight_high.is_finite() {
            return Err(Error::InvalidConfig("weight bounds must be finite".into()));
        }
        if self.weight_low < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "weight_low={} must be non-negative",
                self.weight_low
            )));
        }
        if self.weight_low > self.weight_high {
            return Err(Error::InvalidConfig(format!(
                "weight_low={} exceeds weight_high={}",
                self.weight_low, self.weight_high
            )));
        }
        binomial(u64::from(self.n), self.d as u64 + 1)
            .filter(|total| *total <= MAX_CANDIDATES)
            .ok_or_else(|| {
                Error::InvalidConfig(format!(
                    "too many candidate simplices for n={} d={}",
                    self.n, self.d
                ))
            })
    }
}

/// Samples a complex from `cfg`, sharding candidate ranks across threads
/// when the `parallel` feature is enabled. Identical configurations yield
/// identical complexes either way.
pub fn generate(cfg: &GeneratorConfig) -> Result<WeightedComplex, Error> {
    let total = cfg.candidate_count()?;
    WeightedComplex::new(cfg.d, cfg.n, collect_entries(cfg, total))
}

/// Sequential twin of [`generate`], available regardless of features.
pub fn generate_serial(cfg: &GeneratorConfig) -> Result<WeightedComplex, Error> {
    let total = cfg.candidate_count()?;
    let entries = if cfg.p <= 0.0 { Vec::new() } else { sample_block(cfg, 0, total) };
    WeightedComplex::new(cfg.d, cfg.n, entries)
}

fn collect_entries(cfg: &GeneratorConfig, total: u64) -> Vec<(Simplex, f64)> {
    if cfg.p <= 0.0 || total == 0 {
        return Vec::new();
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let blocks: Vec<(u64, u64)> = (0..total)
            .step_by(BLOCK as usize)
            .map(|lo| (lo, (lo + BLOCK).min(total)))
            .collect();
        let parts: Vec<Vec<(Simplex, f64)>> = blocks
            .into_par_iter()
            .map(|(lo, hi)| sample_block(cfg, lo, hi))
            .collect();
        parts.concat()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sample_block(cfg, 0, total)
    }
}

fn sample_block(cfg: &GeneratorConfig, lo: u64, hi: u64) -> Vec<(Simplex, f64)> {
    let k = cfg.d + 1;
    let mut combo = unrank_combination(cfg.n, k, lo);
    let mut out = Vec::new();
    for rank in lo..hi {
        if rank > lo {
            let stepped = next_combination(&mut combo, cfg.n);
            debug_assert!(stepped, "rank within candidate count");
        }
        if unit_draw(cfg.seed, 2 * rank) < cfg.p {
            out.push((Simplex::from_sorted(combo.clone()), draw_weight(cfg, rank)));
        }
    }
    out
}

fn draw_weight(cfg: &GeneratorConfig, rank: u64) -> f64 {
    let u = unit_draw(cfg.seed, 2 * rank + 1);
    let w = cfg.weight_low + u * (cfg.weight_high - cfg.weight_low);
    if cfg.integer_weights {
        w.round()
    } else {
        w
    }
}

/// Uniform draw in `[0, 1)` from the 53 high bits of [`mix`].
fn unit_draw(seed: u64, index: u64) -> f64 {
    const UNIT: f64 = 1.0 / 9_007_199_254_740_992.0; // 2^-53
    (mix(seed, index) >> 11) as f64 * UNIT
}

/// splitmix64 output number `index` of the stream seeded with `seed`.
fn mix(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `C(n, k)`, or `None` on u64 overflow.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(u128::from(n - i))?;
        acc /= u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// The combination of `{1..=n}` choose `k` at lexicographic `rank`.
fn unrank_combination(n: u32, k: usize, mut rank: u64) -> Vec<u32> {
    let mut combo = Vec::with_capacity(k);
    let mut remaining = k as u64;
    let mut v = 1u32;
    while remaining > 0 {
        let with_v = binomial(u64::from(n - v), remaining - 1)
            .expect("candidate count was validated");
        if rank < with_v {
            combo.push(v);
            remaining -= 1;
        } else {
            rank -= with_v;
        }
        v += 1;
    }
    combo
}

/// Steps to the next combination in lexicographic order.
fn next_combination(combo: &mut [u32], n: u32) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        let max_here = n - (k - 1 - i) as u32;
        if combo[i] < max_here {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
