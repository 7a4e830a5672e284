//! Exact field arithmetic with a distinguished endomorphism σ and
//! σ-derivation δ.
//!
//! Two families are supported:
//!
//! - [`GaloisField`]: GF(p^s) in a polynomial basis, σ(a) = a^(p^r), and the
//!   inner derivation δ = γ(Id − σ) (δ = 0 when γ is absent).
//! - [`RationalFunctionField`]: F_p(z) with σ = Id and δ = d/dz.
//!
//! Everything above this module is generic over [`Field`].

mod fp_poly;
mod galois;
mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

pub use fp_poly::{is_prime, smallest_irreducible, FpPoly};
pub use galois::{GaloisField, GfElem};
pub use rational::{RatFn, RationalFunctionField};

use crate::error::{Error, Result};

/// Which division subring a centralizer K_a is.
///
/// For the fields in scope every centralizer is either the fixed field of
/// the (σ, δ) structure (F_q inside GF(q^m), or F_p(z^p) inside F_p(z)) or
/// the whole field (the single point a = γ of an inner derivation).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Centralizer {
    Fixed,
    Whole,
}

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Image of an integer under Z → F_p ⊂ F.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u32;

    /// The endomorphism σ.
    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    /// The σ-derivation δ.
    fn delta(&self, a: &Self::Elem) -> Self::Elem;

    /// γ when δ = γ(Id − σ) is inner (γ = 0 for δ = 0), `None` otherwise.
    fn inner_gamma(&self) -> Option<Self::Elem>;
    /// The same field with δ replaced by 0.
    fn with_zero_derivation(&self) -> Result<Self>;

    /// Tag of K_a = { b : σ(b)a + δ(b) = ab }.
    fn centralizer_of(&self, a: &Self::Elem) -> Centralizer;
    /// dim_K(F); finite in every supported case.
    fn centralizer_degree(&self, k: Centralizer) -> usize;
    /// The declared right K-basis of F: {1, y, …, y^(m−1)} or {1, z, …, z^(p−1)}.
    fn centralizer_basis(&self, k: Centralizer) -> Vec<Self::Elem>;
    /// Coordinates c_j ∈ K with `a = Σ basis_j · c_j`.
    fn subfield_coordinates(&self, k: Centralizer, a: &Self::Elem) -> Vec<Self::Elem>;

    /// All elements in canonical order, `None` for infinite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// Uniform element for finite fields; for F_p(z) numerator and
    /// denominator degrees are at most `degree_bound`.
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R, degree_bound: usize) -> Self::Elem;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sigma_pow(&self, a: &Self::Elem, i: usize) -> Self::Elem {
        (0..i).fold(a.clone(), |acc, _| self.sigma(&acc))
    }

    fn is_finite(&self) -> bool {
        self.elements().is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Finite,
    Rational,
}

/// A concrete field context chosen at run time.
#[derive(Clone, Debug)]
pub enum FieldDescriptor {
    Finite(GaloisField),
    Rational(RationalFunctionField),
}

/// Builds a field context.
///
/// For the rational kind `s`, `r` and `gamma` must be absent/ignored and
/// `derivation` must be set (δ = d/dz is the only configuration in scope).
pub fn make_field(
    kind: FieldKind,
    p: u32,
    s: usize,
    r: usize,
    gamma: Option<&str>,
    derivation: bool,
) -> Result<FieldDescriptor> {
    match kind {
        FieldKind::Finite => {
            let mut field = GaloisField::new(p, s, r)?;
            if let Some(g) = gamma {
                let g = field.parse_elem(g)?;
                field = field.with_gamma(g);
            }
            Ok(FieldDescriptor::Finite(field))
        }
        FieldKind::Rational => {
            if !derivation && gamma.is_some() {
                return Err(Error::InvalidField(
                    "rational kind supports only sigma = Id with delta = d/dz".into(),
                ));
            }
            Ok(FieldDescriptor::Rational(RationalFunctionField::new(p)?))
        }
    }
}

/// Runs a generic expression against whichever concrete field a
/// [`FieldDescriptor`] holds.
#[macro_export]
macro_rules! with_field {
    ($desc:expr, $f:ident => $body:expr) => {
        match $desc {
            $crate::field::FieldDescriptor::Finite($f) => $body,
            $crate::field::FieldDescriptor::Rational($f) => $body,
        }
    };
}
