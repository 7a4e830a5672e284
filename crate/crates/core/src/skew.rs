//! The skew polynomial ring F[x; σ, δ], where `x a = σ(a) x + δ(a)`.
//!
//! Evaluation follows the remainder convention: `F(a)` is the unique
//! constant with `F = G (x − a) + F(a)`. It is computed as `Σ F_i N_i(a)`
//! using the truncated norms `N_{i+1}(a) = σ(N_i(a)) a + δ(N_i(a))`, and
//! [`SkewRing::evaluate_by_division`] provides the division route for
//! cross-checking.

use crate::error::{Error, Result};
use crate::field::Field;

/// `Σ coeffs[i] x^i` with no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
}

impl<E> SkewPoly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial, which sorts below every degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Arithmetic context for skew polynomials over a field.
#[derive(Clone, Copy, Debug)]
pub struct SkewRing<'a, F: Field> {
    field: &'a F,
}

impl<'a, F: Field> SkewRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    /// Builds a polynomial from low-to-high coefficients, trimming zeros.
    pub fn poly(&self, mut coeffs: Vec<F::Elem>) -> SkewPoly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> SkewPoly<F::Elem> {
        self.poly(vec![c])
    }

    pub fn one(&self) -> SkewPoly<F::Elem> {
        self.constant(self.field.one())
    }

    /// `c x^i`
    pub fn monomial(&self, c: F::Elem, i: usize) -> SkewPoly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); i + 1];
        coeffs[i] = c;
        self.poly(coeffs)
    }

    pub fn x(&self) -> SkewPoly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    /// `x − a`
    pub fn x_minus(&self, a: &F::Elem) -> SkewPoly<F::Elem> {
        self.poly(vec![self.field.neg(a), self.field.one()])
    }

    pub fn add(&self, a: &SkewPoly<F::Elem>, b: &SkewPoly<F::Elem>) -> SkewPoly<F::Elem> {
        let f = self.field;
        let len = a.coeffs.len().max(b.coeffs.len());
        let zero = f.zero();
        self.poly(
            (0..len)
                .map(|i| {
                    f.add(
                        a.coeffs.get(i).unwrap_or(&zero),
                        b.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }

    pub fn neg(&self, a: &SkewPoly<F::Elem>) -> SkewPoly<F::Elem> {
        self.poly(a.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &SkewPoly<F::Elem>, b: &SkewPoly<F::Elem>) -> SkewPoly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    /// Left scalar multiple `c F`.
    pub fn scale_left(&self, c: &F::Elem, a: &SkewPoly<F::Elem>) -> SkewPoly<F::Elem> {
        self.poly(a.coeffs.iter().map(|x| self.field.mul(c, x)).collect())
    }

    /// `x · G = Σ (σ(g_j) x^(j+1) + δ(g_j) x^j)`.
    fn x_times(&self, g: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = vec![f.zero(); g.len() + 1];
        for (j, gj) in g.iter().enumerate() {
            out[j + 1] = f.add(&out[j + 1], &f.sigma(gj));
            out[j] = f.add(&out[j], &f.delta(gj));
        }
        out
    }

    /// The ring product `a · b`.
    pub fn mul(&self, a: &SkewPoly<F::Elem>, b: &SkewPoly<F::Elem>) -> SkewPoly<F::Elem> {
        let f = self.field;
        if a.is_zero() || b.is_zero() {
            return SkewPoly::zero();
        }
        let mut acc = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        // row holds x^i · b
        let mut row = b.coeffs.clone();
        for (i, ai) in a.coeffs.iter().enumerate() {
            if i > 0 {
                row = self.x_times(&row);
            }
            if f.is_zero(ai) {
                continue;
            }
            for (j, rj) in row.iter().enumerate() {
                acc[j] = f.add(&acc[j], &f.mul(ai, rj));
            }
        }
        self.poly(acc)
    }

    /// Right division: `a = q · b + r` with `deg r < deg b`.
    pub fn right_divmod(
        &self,
        a: &SkewPoly<F::Elem>,
        b: &SkewPoly<F::Elem>,
    ) -> Result<(SkewPoly<F::Elem>, SkewPoly<F::Elem>)> {
        let f = self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_b = b.leading().expect("nonzero divisor");
        let mut q = SkewPoly::zero();
        let mut r = a.clone();
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let shift = dr - db;
            // c x^shift · b has leading coefficient c σ^shift(lead_b)
            let denom = f.sigma_pow(lead_b, shift);
            let c = f.div(r.leading().expect("nonzero"), &denom)?;
            let term = self.monomial(c, shift);
            r = self.sub(&r, &self.mul(&term, b));
            q = self.add(&q, &term);
        }
        Ok((q, r))
    }

    /// `N_i(a)`, the evaluation of `x^i` at `a`.
    pub fn truncated_norm(&self, a: &F::Elem, i: usize) -> F::Elem {
        let f = self.field;
        (0..i).fold(f.one(), |n, _| f.add(&f.mul(&f.sigma(&n), a), &f.delta(&n)))
    }

    /// `N_0(a), …, N_{count−1}(a)`.
    pub fn truncated_norms(&self, a: &F::Elem, count: usize) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = Vec::with_capacity(count);
        let mut n = f.one();
        for _ in 0..count {
            let next = f.add(&f.mul(&f.sigma(&n), a), &f.delta(&n));
            out.push(std::mem::replace(&mut n, next));
        }
        out
    }

    /// `F(a)` by the truncated-norm recursion.
    pub fn evaluate(&self, poly: &SkewPoly<F::Elem>, a: &F::Elem) -> F::Elem {
        let f = self.field;
        let norms = self.truncated_norms(a, poly.coeffs.len());
        poly.coeffs
            .iter()
            .zip(&norms)
            .fold(f.zero(), |acc, (c, n)| f.add(&acc, &f.mul(c, n)))
    }

    /// `F(a)` as the remainder of right division by `x − a`.
    pub fn evaluate_by_division(&self, poly: &SkewPoly<F::Elem>, a: &F::Elem) -> F::Elem {
        let (_, r) = self
            .right_divmod(poly, &self.x_minus(a))
            .expect("x - a is nonzero");
        r.coeffs.first().cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `D_a(b) = σ(b) a + δ(b)`.
    pub fn operator(&self, a: &F::Elem, b: &F::Elem) -> F::Elem {
        let f = self.field;
        f.add(&f.mul(&f.sigma(b), a), &f.delta(b))
    }

    /// `D_a^i(b)`.
    pub fn op_power(&self, a: &F::Elem, b: &F::Elem, i: usize) -> F::Elem {
        (0..i).fold(b.clone(), |acc, _| self.operator(a, &acc))
    }

    /// `b, D_a(b), …, D_a^{count−1}(b)`.
    pub fn op_powers(&self, a: &F::Elem, b: &F::Elem, count: usize) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(count);
        let mut cur = b.clone();
        for _ in 0..count {
            let next = self.operator(a, &cur);
            out.push(std::mem::replace(&mut cur, next));
        }
        out
    }

    /// Operator evaluation `F^{D_a}(b) = Σ F_i D_a^i(b)`.
    pub fn operator_eval(&self, a: &F::Elem, poly: &SkewPoly<F::Elem>, b: &F::Elem) -> F::Elem {
        let f = self.field;
        let powers = self.op_powers(a, b, poly.coeffs.len());
        poly.coeffs
            .iter()
            .zip(&powers)
            .fold(f.zero(), |acc, (c, d)| f.add(&acc, &f.mul(c, d)))
    }
}

/// Image of `poly` under the ring isomorphism F[x; σ, γ(Id − σ)] → F[x; σ, 0]
/// sending `x ↦ x + γ`.
///
/// Returns the target field (same σ, δ = 0) together with the image.
/// Fails with [`Error::NotInner`] when δ is not inner.
pub fn to_zero_derivation<F: Field>(
    field: &F,
    poly: &SkewPoly<F::Elem>,
) -> Result<(F, SkewPoly<F::Elem>)> {
    let gamma = field.inner_gamma().ok_or(Error::NotInner)?;
    let target = field.with_zero_derivation()?;
    let image = substitute_x(&target, poly, &gamma);
    Ok((target, image))
}

/// Inverse of [`to_zero_derivation`]: F[x; σ, 0] → F[x; σ, γ(Id − σ)],
/// `x ↦ x − γ`. `field` carries the inner derivation of the target ring.
pub fn from_zero_derivation<F: Field>(
    field: &F,
    poly: &SkewPoly<F::Elem>,
) -> Result<SkewPoly<F::Elem>> {
    let gamma = field.inner_gamma().ok_or(Error::NotInner)?;
    Ok(substitute_x(field, poly, &field.neg(&gamma)))
}

/// `Σ F_i (x + shift)^i` computed in the ring over `target`.
fn substitute_x<F: Field>(target: &F, poly: &SkewPoly<F::Elem>, shift: &F::Elem) -> SkewPoly<F::Elem> {
    let ring = SkewRing::new(target);
    let base = ring.poly(vec![shift.clone(), target.one()]);
    let mut power = ring.one();
    let mut acc = SkewPoly::zero();
    for (i, c) in poly.coeffs().iter().enumerate() {
        if i > 0 {
            power = ring.mul(&power, &base);
        }
        acc = ring.add(&acc, &ring.scale_left(c, &power));
    }
    acc
}

/// Semicolon-joined coefficient serializations, low degree first; the zero
/// polynomial prints as "0".
pub fn format_poly<F: Field>(field: &F, poly: &SkewPoly<F::Elem>) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    poly.coeffs()
        .iter()
        .map(|c| field.format_elem(c))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_poly<F: Field>(field: &F, s: &str) -> Result<SkewPoly<F::Elem>> {
    let coeffs = s
        .split(';')
        .map(|part| field.parse_elem(part.trim()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::ParsePoly {
            input: s.to_string(),
            reason: e.to_string(),
        })?;
    Ok(SkewRing::new(field).poly(coeffs))
}
