//! Random sweep over small block codes: among codes that are MDS and whose
//! block projections are all MRD, count how many are MSRD and log the rest.
//!
//! The sweep reports what it finds and asserts nothing.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::GeneratorMatrix;
use crate::error::{Error, Result};
use crate::field::{Centralizer, Field};
use crate::linalg;
use crate::metrics::{block_projections, min_distance_generator, Metric, SearchOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violator {
    pub trial: usize,
    pub rows: Vec<Vec<String>>,
    pub sum_rank_distance: Option<usize>,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub lengths: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub mds: usize,
    /// MDS codes whose block projections are all MRD.
    pub candidates: usize,
    pub msrd: usize,
    pub violators: Vec<Violator>,
}

/// Draws `trials` random full-rank `k × n` generators with the given block
/// shape and classifies each.
pub fn search_mds_mrd_vs_msrd<F: Field>(
    field: &F,
    lengths: &[usize],
    centralizers: &[Centralizer],
    k: usize,
    trials: usize,
    seed: u64,
    opts: SearchOptions,
) -> Result<SearchReport> {
    if !field.is_finite() {
        return Err(Error::InfiniteField);
    }
    let n: usize = lengths.iter().sum();
    if k == 0 || k > n {
        return Err(Error::DimensionOutOfRange { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SearchReport {
        n,
        k,
        lengths: lengths.to_vec(),
        trials,
        seed,
        mds: 0,
        candidates: 0,
        msrd: 0,
        violators: Vec::new(),
    };
    for trial in 0..trials {
        let rows = loop {
            let rows: Vec<Vec<F::Elem>> = (0..k)
                .map(|_| (0..n).map(|_| field.random_elem(&mut rng, 0)).collect())
                .collect();
            if linalg::rank(field, &rows) == k {
                break rows;
            }
        };
        let gen = GeneratorMatrix {
            rows,
            lengths: lengths.to_vec(),
            centralizers: centralizers.to_vec(),
        };
        if !min_distance_generator(field, &gen, Metric::Hamming, opts)?.meets_bound() {
            continue;
        }
        out.mds += 1;
        if block_projections(field, &gen, opts)?.iter().any(|b| b.mrd == Some(false)) {
            continue;
        }
        out.candidates += 1;
        let sr = min_distance_generator(field, &gen, Metric::SumRank, opts)?;
        if sr.meets_bound() {
            out.msrd += 1;
        } else {
            out.violators.push(Violator {
                trial,
                rows: gen
                    .rows
                    .iter()
                    .map(|r| r.iter().map(|x| field.format_elem(x)).collect())
                    .collect(),
                sum_rank_distance: sr.minimum,
                bound: sr.bound,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    #[test]
    fn sweep_is_deterministic_and_consistent() {
        let f = GaloisField::new(3, 2, 1).unwrap();
        let kt = [Centralizer::Fixed, Centralizer::Fixed];
        let run = || search_mds_mrd_vs_msrd(&f, &[2, 2], &kt, 2, 30, 5, SearchOptions::default()).unwrap();
        let a = run();
        assert_eq!(a, run());
        assert!(a.msrd + a.violators.len() == a.candidates);
        assert!(a.candidates <= a.mds && a.mds <= a.trials);
    }
}
