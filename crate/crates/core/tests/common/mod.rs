//! Independent reference computations for integration tests.
//!
//! Each oracle takes a different route from the library code it is
//! compared against: norms come from Euclidean division instead of the
//! recursion, ranks from counting spans instead of elimination, and so on.

#![allow(dead_code)]

use std::collections::HashSet;

use sumrank::field::{Centralizer, Field, GaloisField};
use sumrank::linalg;
use sumrank::{SkewPoly, SkewRing};

pub fn gf(p: u32, s: usize, r: usize) -> GaloisField {
    GaloisField::new(p, s, r).unwrap()
}

pub fn els<F: Field>(f: &F, s: &[&str]) -> Vec<F::Elem> {
    s.iter().map(|x| f.parse_elem(x).unwrap()).collect()
}

/// `N_i(a)` as the remainder of `x^i` on right division by `x − a`.
pub fn norm_by_division<F: Field>(f: &F, a: &F::Elem, i: usize) -> F::Elem {
    let ring = SkewRing::new(f);
    ring.evaluate_by_division(&ring.monomial(f.one(), i), a)
}

/// Monic generator of the left ideal vanishing on `points`, from the left
/// nullspace of the skew Vandermonde matrix.
///
/// Its degree is the rank `d` of the rows `N_0 … N_{n−1}`; the coefficients
/// solve `Σ_{i<d} F_i N_i(p_j) = −N_d(p_j)` for every point.
pub fn vandermonde_minpoly<F: Field>(f: &F, points: &[F::Elem]) -> SkewPoly<F::Elem> {
    let n = points.len();
    let rows: Vec<Vec<F::Elem>> = (0..=n)
        .map(|i| points.iter().map(|p| norm_by_division(f, p, i)).collect())
        .collect();
    let d = linalg::rank(f, &rows[..n].to_vec());
    // unknowns F_0..F_{d-1}; one equation per point
    let mut aug: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| {
            let mut row: Vec<F::Elem> = (0..d).map(|i| rows[i][j].clone()).collect();
            row.push(f.neg(&rows[d][j]));
            row
        })
        .collect();
    let pivots = linalg::row_reduce(f, &mut aug);
    assert_eq!(pivots, (0..d).collect::<Vec<_>>(), "system must have a unique solution");
    let mut coeffs: Vec<F::Elem> = (0..d).map(|i| aug[i][d].clone()).collect();
    coeffs.push(f.one());
    SkewRing::new(f).poly(coeffs)
}

/// Dimension over `K` of the right span of `tuple`, by enumerating every
/// `K`-combination and counting distinct values (finite fields only).
pub fn rank_by_counting<F: Field>(f: &F, k: Centralizer, tuple: &[F::Elem]) -> usize {
    let scalars: Vec<F::Elem> = f
        .elements()
        .unwrap()
        .into_iter()
        .filter(|c| match k {
            Centralizer::Whole => true,
            Centralizer::Fixed => f.sigma(c) == *c && f.is_zero(&f.delta(c)),
        })
        .collect();
    let mut span: HashSet<F::Elem> = HashSet::from([f.zero()]);
    for t in tuple {
        let next: HashSet<F::Elem> = span
            .iter()
            .flat_map(|s| scalars.iter().map(move |c| (s.clone(), c.clone())))
            .map(|(s, c)| f.add(&s, &f.mul(t, &c)))
            .collect();
        span = next;
    }
    let q = scalars.len();
    let mut dim = 0;
    let mut size = 1;
    while size < span.len() {
        size *= q;
        dim += 1;
    }
    assert_eq!(size, span.len(), "span size must be a power of |K|");
    dim
}

/// Every P-basis of the closure of `points` (finite fields only): all
/// P-independent subsets of the closure with the right size.
pub fn all_p_bases<F: Field>(f: &F, closure: &[F::Elem], rank: usize) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec<F: Field>(
        f: &F,
        closure: &[F::Elem],
        rank: usize,
        start: usize,
        pick: &mut Vec<F::Elem>,
        out: &mut Vec<Vec<F::Elem>>,
    ) {
        if pick.len() == rank {
            out.push(pick.clone());
            return;
        }
        for i in start..closure.len() {
            pick.push(closure[i].clone());
            if sumrank::geometry::is_p_independent(f, pick) {
                rec(f, closure, rank, i + 1, pick, out);
            }
            pick.pop();
        }
    }
    rec(f, closure, rank, 0, &mut pick, &mut out);
    out
}
