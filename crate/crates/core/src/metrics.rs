//! Hamming, rank and sum-rank weights, exhaustive minimum distances and
//! Singleton-bound verification.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{encode, message_poly, GeneratorMatrix, LinearizedRsCode};
use crate::error::{Error, Result};
use crate::field::{Centralizer, Field};
use crate::geometry;
use crate::linalg::{self, Matrix};

/// Default cap on the number of nonzero messages an exhaustive search visits.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A length-n vector split into blocks, each tagged with its centralizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVector<E> {
    pub blocks: Vec<Vec<E>>,
    pub centralizers: Vec<Centralizer>,
}

impl<E: Clone> BlockVector<E> {
    pub fn from_flat(flat: Vec<E>, lengths: &[usize], centralizers: Vec<Centralizer>) -> Self {
        let mut it = flat.into_iter();
        let blocks = lengths
            .iter()
            .map(|&len| it.by_ref().take(len).collect())
            .collect();
        Self {
            blocks,
            centralizers,
        }
    }

    pub fn flat(&self) -> Vec<E> {
        self.blocks.concat()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

pub fn hamming_weight<F: Field>(field: &F, v: &[F::Elem]) -> usize {
    v.iter().filter(|x| !field.is_zero(x)).count()
}

/// Dimension over `K` of the right span of `tuple`.
pub fn rank_weight<F: Field>(field: &F, k: Centralizer, tuple: &[F::Elem]) -> usize {
    let coords: Matrix<F::Elem> = tuple
        .iter()
        .filter(|x| !field.is_zero(x))
        .map(|x| field.subfield_coordinates(k, x))
        .collect();
    linalg::rank(field, &coords)
}

pub fn sum_rank_weight<F: Field>(field: &F, v: &BlockVector<F::Elem>) -> usize {
    v.blocks
        .iter()
        .zip(&v.centralizers)
        .map(|(b, &k)| rank_weight(field, k, b))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Hamming,
    SumRank,
    Skew,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::SumRank => "sum_rank",
            Metric::Skew => "skew",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "sum_rank" | "sumrank" | "sum-rank" => Ok(Metric::SumRank),
            "skew" => Ok(Metric::Skew),
            other => Err(Error::Spec(format!("unknown metric {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Exhaustive,
    #[serde(rename = "sampled lower-bound evidence")]
    SampledLowerBound,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evidence::Exhaustive => "exhaustive",
            Evidence::SampledLowerBound => "sampled lower-bound evidence",
        })
    }
}

/// Outcome of a minimum-distance computation. Witnesses are rendered with
/// the field's element format so reports are field-agnostic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub metric: Metric,
    pub evidence: Evidence,
    pub n: usize,
    pub k: usize,
    /// `None` when no nonzero codeword exists (k = 0).
    pub minimum: Option<usize>,
    pub bound: usize,
    pub witness_message: Vec<String>,
    pub witness_codeword: Vec<Vec<String>>,
    pub examined: u64,
}

impl DistanceReport {
    /// Whether the minimum equals the Singleton bound (vacuously true for
    /// the zero code).
    pub fn meets_bound(&self) -> bool {
        self.minimum.map_or(true, |d| d == self.bound)
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let min = self.minimum.map_or("none".to_string(), |d| d.to_string());
        writeln!(f, "metric    {}", self.metric)?;
        writeln!(f, "evidence  {}", self.evidence)?;
        writeln!(f, "n k       {} {}", self.n, self.k)?;
        writeln!(f, "minimum   {min}")?;
        writeln!(f, "bound     {}", self.bound)?;
        writeln!(f, "examined  {}", self.examined)?;
        writeln!(f, "message   {}", self.witness_message.join(","))?;
        let blocks: Vec<String> = self.witness_codeword.iter().map(|b| b.join(",")).collect();
        write!(f, "codeword  {}", blocks.join(" | "))
    }
}

/// Limits for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Number of shards; `None` uses the available parallelism.
    pub workers: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }
}

#[cfg(feature = "parallel")]
fn default_workers() -> usize {
    rayon::current_num_threads()
}

#[cfg(not(feature = "parallel"))]
fn default_workers() -> usize {
    1
}

/// Lowest weight found, the lexicographically smallest message attaining
/// it, and the number of messages visited.
#[derive(Clone, Debug)]
pub struct Minimum<E> {
    pub weight: Option<usize>,
    pub message: Vec<E>,
    pub examined: u64,
}

/// Minimizes `weight` over all nonzero messages in `F^k`, visited in
/// lexicographic order of element indices (first coordinate most
/// significant). Shards are searched in parallel and reduced on
/// `(weight, index)`, so the result does not depend on the worker count.
pub fn minimum_weight<F, W>(field: &F, k: usize, opts: SearchOptions, weight: W) -> Result<Minimum<F::Elem>>
where
    F: Field,
    W: Fn(&[F::Elem]) -> usize + Sync,
{
    let elems = field.elements().ok_or(Error::InfiniteField)?;
    let q = elems.len() as u128;
    let total = q
        .checked_pow(k as u32)
        .map(|t| t - 1)
        .unwrap_or(u128::MAX);
    if total > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget: opts.budget,
        });
    }
    let total = total as u64;
    let q = q as u64;
    let decode = |mut idx: u64| -> Vec<F::Elem> {
        let mut m = vec![elems[0].clone(); k];
        for slot in m.iter_mut().rev() {
            *slot = elems[(idx % q) as usize].clone();
            idx /= q;
        }
        m
    };
    let scan = |lo: u64, hi: u64| -> (Option<(usize, u64)>, u64) {
        let mut best: Option<(usize, u64)> = None;
        let mut seen = 0;
        for idx in lo..hi {
            seen += 1;
            let w = weight(&decode(idx));
            if best.map_or(true, |(bw, _)| w < bw) {
                best = Some((w, idx));
                if w <= 1 {
                    break;
                }
            }
        }
        (best, seen)
    };
    let workers = opts.workers.unwrap_or_else(default_workers).max(1) as u64;
    let chunk = total.div_ceil(workers).max(1);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (1 + w * chunk, (1 + (w + 1) * chunk).min(total + 1)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        ranges.par_iter().map(|&(lo, hi)| scan(lo, hi)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = ranges.iter().map(|&(lo, hi)| scan(lo, hi)).collect();
    let examined = results.iter().map(|(_, s)| s).sum();
    let best = results.into_iter().filter_map(|(b, _)| b).min();
    Ok(Minimum {
        weight: best.map(|(w, _)| w),
        message: best.map_or_else(Vec::new, |(_, idx)| decode(idx)),
        examined,
    })
}

fn report<F: Field>(
    field: &F,
    gen: &GeneratorMatrix<F::Elem>,
    metric: Metric,
    evidence: Evidence,
    found: Minimum<F::Elem>,
) -> DistanceReport {
    let fmt_all = |v: &[F::Elem]| v.iter().map(|x| field.format_elem(x)).collect::<Vec<_>>();
    let codeword = if found.weight.is_some() {
        encode(field, gen, &found.message)
            .expect("witness has length k")
            .blocks
            .iter()
            .map(|b| fmt_all(b))
            .collect()
    } else {
        Vec::new()
    };
    DistanceReport {
        metric,
        evidence,
        n: gen.n(),
        k: gen.k(),
        minimum: found.weight,
        bound: gen.n() + 1 - gen.k(),
        witness_message: fmt_all(&found.message),
        witness_codeword: codeword,
        examined: found.examined,
    }
}

fn codeword_weight<F: Field>(field: &F, gen: &GeneratorMatrix<F::Elem>, metric: Metric, m: &[F::Elem]) -> usize {
    let c = encode(field, gen, m).expect("message has length k");
    match metric {
        Metric::Hamming => hamming_weight(field, &c.flat()),
        Metric::SumRank => sum_rank_weight(field, &c),
        Metric::Skew => unreachable!("skew weight needs the code's skew points"),
    }
}

/// Exhaustive Hamming or sum-rank distance of the code spanned by `gen`.
pub fn min_distance_generator<F: Field>(
    field: &F,
    gen: &GeneratorMatrix<F::Elem>,
    metric: Metric,
    opts: SearchOptions,
) -> Result<DistanceReport> {
    if metric == Metric::Skew {
        return Err(Error::Spec("skew distance needs a linearized code".into()));
    }
    let found = minimum_weight(field, gen.k(), opts, |m| codeword_weight(field, gen, metric, m))?;
    Ok(report(field, gen, metric, Evidence::Exhaustive, found))
}

/// Exhaustive distance of a linearized code. The skew metric reads each
/// message as `F = Σ m_l x^l` and counts `n − Rk(Z(F))` on the closure of
/// the skew points.
pub fn min_distance<F: Field>(code: &LinearizedRsCode<F>, metric: Metric, opts: SearchOptions) -> Result<DistanceReport> {
    let field = code.field();
    if metric != Metric::Skew {
        return min_distance_generator(field, &code.generator, metric, opts);
    }
    let closure = geometry::closure_enumerate(field, &code.skew_points)?;
    let n = code.n();
    let found = minimum_weight(field, code.k(), opts, |m| {
        geometry::skew_weight_on_closure(field, n, &closure, &message_poly(field, m))
            .expect("deg F < k <= n")
    })?;
    Ok(report(field, &code.generator, metric, Evidence::Exhaustive, found))
}

/// Minimum weight over `samples` random nonzero messages whose entries have
/// numerator and denominator degree at most `degree_bound`. This is
/// one-sided evidence, never a proof.
pub fn sample_weight_floor<F: Field>(
    field: &F,
    gen: &GeneratorMatrix<F::Elem>,
    metric: Metric,
    samples: usize,
    degree_bound: usize,
    seed: u64,
) -> Result<DistanceReport> {
    if metric == Metric::Skew {
        return Err(Error::InfiniteField);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<F::Elem>)> = None;
    if gen.k() > 0 {
        for _ in 0..samples {
            let m = loop {
                let m: Vec<F::Elem> = (0..gen.k()).map(|_| field.random_elem(&mut rng, degree_bound)).collect();
                if m.iter().any(|x| !field.is_zero(x)) {
                    break m;
                }
            };
            let w = codeword_weight(field, gen, metric, &m);
            if best.as_ref().map_or(true, |(bw, _)| w < *bw) {
                best = Some((w, m));
            }
        }
    }
    let (weight, message) = match best {
        Some((w, m)) => (Some(w), m),
        None => (None, Vec::new()),
    };
    let found = Minimum {
        weight,
        message,
        examined: if gen.k() > 0 { samples as u64 } else { 0 },
    };
    Ok(report(field, gen, metric, Evidence::SampledLowerBound, found))
}

/// Rank-metric check of the puncturing of a code to one block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockProjection {
    pub block: usize,
    pub length: usize,
    /// Dimension of the projected code, recomputed by elimination.
    pub dimension: usize,
    pub minimum: Option<usize>,
    pub bound: usize,
    /// `None` when the projection is the zero code.
    pub mrd: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityReport {
    pub sum_rank: DistanceReport,
    pub hamming: DistanceReport,
    pub skew: DistanceReport,
    pub msrd: bool,
    pub mds: bool,
    pub msd: bool,
    pub blocks: Vec<BlockProjection>,
}

impl OptimalityReport {
    pub fn all_blocks_mrd(&self) -> bool {
        self.blocks.iter().all(|b| b.mrd != Some(false))
    }

    pub fn passed(&self) -> bool {
        self.msrd && self.mds && self.msd && self.all_blocks_mrd()
    }
}

/// Rank-metric distance of each block projection of `gen`.
pub fn block_projections<F: Field>(
    field: &F,
    gen: &GeneratorMatrix<F::Elem>,
    opts: SearchOptions,
) -> Result<Vec<BlockProjection>> {
    (0..gen.lengths.len())
        .map(|i| {
            let proj = gen.project(i);
            let mut rows = proj.rows.clone();
            let dim = linalg::row_reduce(field, &mut rows).len();
            rows.truncate(dim);
            let basis = GeneratorMatrix { rows, ..proj };
            let length = basis.n();
            let bound = length + 1 - dim;
            if dim == 0 {
                return Ok(BlockProjection {
                    block: i,
                    length,
                    dimension: 0,
                    minimum: None,
                    bound,
                    mrd: None,
                });
            }
            let d = min_distance_generator(field, &basis, Metric::SumRank, opts)?.minimum;
            Ok(BlockProjection {
                block: i,
                length,
                dimension: dim,
                minimum: d,
                bound,
                mrd: Some(d == Some(bound)),
            })
        })
        .collect()
}

/// Exhaustive sum-rank, Hamming and skew distances against `n − k + 1`,
/// plus the rank distance of each block projection.
pub fn verify_optimal<F: Field>(code: &LinearizedRsCode<F>, opts: SearchOptions) -> Result<OptimalityReport> {
    let sum_rank = min_distance(code, Metric::SumRank, opts)?;
    let hamming = min_distance(code, Metric::Hamming, opts)?;
    let skew = min_distance(code, Metric::Skew, opts)?;
    let blocks = block_projections(code.field(), &code.generator, opts)?;
    Ok(OptimalityReport {
        msrd: sum_rank.meets_bound(),
        mds: hamming.meets_bound(),
        msd: skew.meets_bound(),
        sum_rank,
        hamming,
        skew,
        blocks,
    })
}
