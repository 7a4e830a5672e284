//! Zero sets of skew polynomials: minimal skew polynomials, P-closures,
//! P-independence and ranks, skew Vandermonde systems, interpolation,
//! conjugacy classes, centralizers and skew weights.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Centralizer, Field};
use crate::linalg::{self, Matrix};
use crate::skew::{SkewPoly, SkewRing};

/// A finitely generated P-closed set, held as a P-basis and its minimal
/// skew polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PClosedSet<E> {
    basis: Vec<E>,
    min_poly: SkewPoly<E>,
}

impl<E> PClosedSet<E> {
    pub fn basis(&self) -> &[E] {
        &self.basis
    }

    /// The monic generator F_Ω of the vanishing ideal.
    pub fn min_poly(&self) -> &SkewPoly<E> {
        &self.min_poly
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Entry `(i, j)` is `N_i(points[j])`.
pub fn skew_vandermonde<F: Field>(field: &F, points: &[F::Elem], rows: usize) -> Matrix<F::Elem> {
    let ring = SkewRing::new(field);
    let cols: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|a| ring.truncated_norms(a, rows))
        .collect();
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// The minimal skew polynomial of `points`, built incrementally: whenever
/// `c = F(a) ≠ 0`, `F ← (x − a^c) F` with `a^c = σ(c) a c⁻¹ + δ(c) c⁻¹`.
///
/// The basis is the in-order subsequence of points that raised the degree.
pub fn minimal_skew_poly<F: Field>(field: &F, points: &[F::Elem]) -> PClosedSet<F::Elem> {
    let ring = SkewRing::new(field);
    let mut min_poly = ring.one();
    let mut basis = Vec::new();
    for a in points {
        let c = ring.evaluate(&min_poly, a);
        if field.is_zero(&c) {
            continue;
        }
        let root = conjugate_of(field, a, &c).expect("c is nonzero");
        min_poly = ring.mul(&ring.x_minus(&root), &min_poly);
        basis.push(a.clone());
    }
    PClosedSet { basis, min_poly }
}

pub fn p_rank<F: Field>(field: &F, points: &[F::Elem]) -> usize {
    minimal_skew_poly(field, points).rank()
}

pub fn is_p_independent<F: Field>(field: &F, points: &[F::Elem]) -> bool {
    p_rank(field, points) == points.len()
}

/// Greedy in-order maximal P-independent subsequence.
pub fn extract_p_basis<F: Field>(field: &F, points: &[F::Elem]) -> Vec<F::Elem> {
    minimal_skew_poly(field, points).basis
}

/// Every field element that is a zero of F_Ω, in canonical element order.
pub fn closure_enumerate<F: Field>(field: &F, points: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let all = field.elements().ok_or(Error::InfiniteField)?;
    let closed = minimal_skew_poly(field, points);
    Ok(zeros_among(field, &closed.min_poly, &all))
}

/// The elements of `candidates` at which `poly` vanishes.
pub fn zeros_among<F: Field>(
    field: &F,
    poly: &SkewPoly<F::Elem>,
    candidates: &[F::Elem],
) -> Vec<F::Elem> {
    let ring = SkewRing::new(field);
    candidates
        .iter()
        .filter(|c| field.is_zero(&ring.evaluate(poly, c)))
        .cloned()
        .collect()
}

/// The unique `F` with `deg F < n` and `F(points[i]) = values[i]`.
pub fn lagrange_interpolate<F: Field>(
    field: &F,
    points: &[F::Elem],
    values: &[F::Elem],
) -> Result<SkewPoly<F::Elem>> {
    if values.len() != points.len() {
        return Err(Error::LengthMismatch {
            expected: points.len(),
            got: values.len(),
        });
    }
    if !is_p_independent(field, points) {
        return Err(Error::DependentPoints);
    }
    let n = points.len();
    // row vector F times V equals values, so solve V^T F^T = values^T
    let vt = linalg::transpose(&skew_vandermonde(field, points, n));
    let coeffs = linalg::solve(field, &vt, values).map_err(|_| Error::DependentPoints)?;
    Ok(SkewRing::new(field).poly(coeffs))
}

/// `D_a(b) b⁻¹ = σ(b) a b⁻¹ + δ(b) b⁻¹`.
pub fn conjugate_of<F: Field>(field: &F, a: &F::Elem, b: &F::Elem) -> Result<F::Elem> {
    let binv = field.inv(b)?;
    let ring = SkewRing::new(field);
    Ok(field.mul(&ring.operator(a, b), &binv))
}

/// Whether `σ(b) a + δ(b) = a b`, i.e. `b ∈ K_a`.
pub fn in_centralizer<F: Field>(field: &F, a: &F::Elem, b: &F::Elem) -> bool {
    SkewRing::new(field).operator(a, b) == field.mul(a, b)
}

/// One conjugacy class C(a) with its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass<E> {
    pub rep: E,
    /// All members in canonical element order (finite fields only).
    pub members: Option<Vec<E>>,
    pub centralizer: Centralizer,
}

impl<E> ConjugacyClass<E> {
    pub fn len(&self) -> Option<usize> {
        self.members.as_ref().map(Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }
}

/// The partition of a finite field into conjugacy classes, each
/// represented by its first member in element order.
pub fn conjugacy_classes<F: Field>(field: &F) -> Result<Vec<ConjugacyClass<F::Elem>>> {
    let all = field.elements().ok_or(Error::InfiniteField)?;
    let index: HashMap<&F::Elem, usize> = all.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let nonzero: Vec<&F::Elem> = all.iter().filter(|b| !field.is_zero(b)).collect();
    let mut assigned = vec![false; all.len()];
    let mut classes = Vec::new();
    for (i, a) in all.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut in_class = vec![false; all.len()];
        for b in &nonzero {
            let c = conjugate_of(field, a, b).expect("b is nonzero");
            in_class[index[&c]] = true;
        }
        let members: Vec<F::Elem> = all
            .iter()
            .zip(&in_class)
            .filter(|(_, &hit)| hit)
            .map(|(c, _)| c.clone())
            .collect();
        for (j, &hit) in in_class.iter().enumerate() {
            assigned[j] |= hit;
        }
        classes.push(ConjugacyClass {
            rep: a.clone(),
            members: Some(members),
            centralizer: field.centralizer_of(a),
        });
    }
    Ok(classes)
}

/// Whether `a ~ c`, by scanning `b ∈ F*` (finite fields only).
pub fn are_conjugate<F: Field>(field: &F, a: &F::Elem, c: &F::Elem) -> Result<bool> {
    let all = field.elements().ok_or(Error::InfiniteField)?;
    Ok(all
        .iter()
        .filter(|b| !field.is_zero(b))
        .any(|b| conjugate_of(field, a, b).expect("nonzero") == *c))
}

/// `Rk(Ω) − Rk(Z_Ω(F))` where Ω is the closure of `omega_basis`, computed
/// by enumerating the closure. Finite fields only; over F_p(z) the skew
/// weight is reached through the linearized route in [`crate::codes`].
pub fn skew_weight<F: Field>(
    field: &F,
    omega_basis: &[F::Elem],
    poly: &SkewPoly<F::Elem>,
) -> Result<usize> {
    if !is_p_independent(field, omega_basis) {
        return Err(Error::DependentPoints);
    }
    let closure = closure_enumerate(field, omega_basis)?;
    skew_weight_on_closure(field, omega_basis.len(), &closure, poly)
}

/// [`skew_weight`] with the closure already enumerated; `rank` is Rk(Ω).
pub fn skew_weight_on_closure<F: Field>(
    field: &F,
    rank: usize,
    closure: &[F::Elem],
    poly: &SkewPoly<F::Elem>,
) -> Result<usize> {
    if let Some(d) = poly.degree().filter(|&d| d >= rank) {
        return Err(Error::DegreeOverflow {
            degree: d,
            bound: rank,
        });
    }
    let zeros = zeros_among(field, poly, closure);
    Ok(rank - p_rank(field, &zeros))
}
