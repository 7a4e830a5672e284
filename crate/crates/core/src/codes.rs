//! Skew Reed-Solomon and linearized Reed-Solomon codes.
//!
//! A linearized code is given by pairwise non-conjugate representatives
//! `a_i` and, per block, witnesses `β_ij` that are right linearly
//! independent over the centralizer `K_{a_i}`. Row `l` of the generator
//! holds `D_{a_i}^l(β_ij)`. The skew points `conj(a_i, β_ij)` give the
//! matching skew Reed-Solomon code.

use crate::error::{Error, Result};
use crate::field::{Centralizer, Field};
use crate::geometry::{self, are_conjugate};
use crate::linalg::{self, Matrix};
use crate::metrics::BlockVector;
use crate::skew::{SkewPoly, SkewRing};

/// Validated parameters of a linearized Reed-Solomon code.
#[derive(Clone, Debug)]
pub struct CodeSpec<F: Field> {
    field: F,
    reps: Vec<F::Elem>,
    betas: Vec<Vec<F::Elem>>,
    k: usize,
    conjugacy_asserted: bool,
}

impl<F: Field> PartialEq for CodeSpec<F>
where
    F: PartialEq,
{
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.reps == other.reps
            && self.betas == other.betas
            && self.k == other.k
            && self.conjugacy_asserted == other.conjugacy_asserted
    }
}

impl<F: Field> CodeSpec<F> {
    pub fn new(field: F, reps: Vec<F::Elem>, betas: Vec<Vec<F::Elem>>, k: usize) -> Result<Self> {
        if reps.len() != betas.len() {
            return Err(Error::LengthMismatch {
                expected: reps.len(),
                got: betas.len(),
            });
        }
        if reps.is_empty() || betas.iter().any(Vec::is_empty) {
            return Err(Error::EmptyCode);
        }
        let n: usize = betas.iter().map(Vec::len).sum();
        if k > n {
            return Err(Error::DimensionOutOfRange { k, n });
        }
        for (i, (a, block)) in reps.iter().zip(&betas).enumerate() {
            if block.iter().any(|b| field.is_zero(b)) {
                return Err(Error::ZeroBeta { block: i });
            }
            let kt = field.centralizer_of(a);
            let max = field.centralizer_degree(kt);
            if block.len() > max {
                return Err(Error::BlockTooLong {
                    block: i,
                    len: block.len(),
                    max,
                });
            }
            let coords: Matrix<F::Elem> = block
                .iter()
                .map(|b| field.subfield_coordinates(kt, b))
                .collect();
            if linalg::rank(&field, &coords) < block.len() {
                return Err(Error::DependentBetas { block: i });
            }
        }
        let conjugacy_asserted = !field.is_finite();
        if !conjugacy_asserted {
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    if are_conjugate(&field, &reps[i], &reps[j])? {
                        return Err(Error::ConjugateReps(i, j));
                    }
                }
            }
        }
        Ok(Self {
            field,
            reps,
            betas,
            k,
            conjugacy_asserted,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn reps(&self) -> &[F::Elem] {
        &self.reps
    }

    pub fn betas(&self) -> &[Vec<F::Elem>] {
        &self.betas
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// True when the representatives were not checked for pairwise
    /// non-conjugacy (rational kind).
    pub fn conjugacy_asserted(&self) -> bool {
        self.conjugacy_asserted
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.betas.iter().map(Vec::len).collect()
    }

    pub fn n(&self) -> usize {
        self.betas.iter().map(Vec::len).sum()
    }

    pub fn centralizers(&self) -> Vec<Centralizer> {
        self.reps.iter().map(|a| self.field.centralizer_of(a)).collect()
    }

    /// The same code with another dimension.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        if k > self.n() {
            return Err(Error::DimensionOutOfRange { k, n: self.n() });
        }
        Ok(Self { k, ..self.clone() })
    }

    /// `conj(a_i, β_ij)` in block order.
    pub fn skew_points(&self) -> Vec<F::Elem> {
        self.reps
            .iter()
            .zip(&self.betas)
            .flat_map(|(a, block)| {
                block
                    .iter()
                    .map(|b| geometry::conjugate_of(&self.field, a, b).expect("betas are nonzero"))
            })
            .collect()
    }

    /// Splits a flat length-n vector into blocks tagged with this spec's
    /// centralizers.
    pub fn to_blocks(&self, flat: Vec<F::Elem>) -> BlockVector<F::Elem> {
        BlockVector::from_flat(flat, &self.lengths(), self.centralizers())
    }
}

/// A `k × n` generator, block-partitioned by `lengths`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix<E> {
    pub rows: Matrix<E>,
    pub lengths: Vec<usize>,
    pub centralizers: Vec<Centralizer>,
}

impl<E: Clone> GeneratorMatrix<E> {
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// The columns of block `i` only.
    pub fn project(&self, block: usize) -> GeneratorMatrix<E> {
        let start: usize = self.lengths[..block].iter().sum();
        let end = start + self.lengths[block];
        GeneratorMatrix {
            rows: self.rows.iter().map(|r| r[start..end].to_vec()).collect(),
            lengths: vec![self.lengths[block]],
            centralizers: vec![self.centralizers[block]],
        }
    }
}

/// Evaluations of `1, x, …, x^(k−1)` on `points`; every block has length 1.
pub fn build_skew_rs<F: Field>(
    field: &F,
    points: &[F::Elem],
    k: usize,
) -> Result<GeneratorMatrix<F::Elem>> {
    if k > points.len() {
        return Err(Error::DimensionOutOfRange { k, n: points.len() });
    }
    if !geometry::is_p_independent(field, points) {
        return Err(Error::DependentPoints);
    }
    Ok(GeneratorMatrix {
        rows: geometry::skew_vandermonde(field, points, k),
        lengths: vec![1; points.len()],
        centralizers: points.iter().map(|a| field.centralizer_of(a)).collect(),
    })
}

pub fn build_linearized_rs<F: Field>(spec: &CodeSpec<F>) -> GeneratorMatrix<F::Elem> {
    let ring = &SkewRing::new(spec.field());
    let cols: Vec<Vec<F::Elem>> = spec
        .reps
        .iter()
        .zip(&spec.betas)
        .flat_map(|(a, block)| block.iter().map(move |b| ring.op_powers(a, b, spec.k)))
        .collect();
    GeneratorMatrix {
        rows: (0..spec.k)
            .map(|l| cols.iter().map(|c| c[l].clone()).collect())
            .collect(),
        lengths: spec.lengths(),
        centralizers: spec.centralizers(),
    }
}

/// `message · G`, split into blocks.
pub fn encode<F: Field>(
    field: &F,
    gen: &GeneratorMatrix<F::Elem>,
    message: &[F::Elem],
) -> Result<BlockVector<F::Elem>> {
    if message.len() != gen.k() {
        return Err(Error::LengthMismatch {
            expected: gen.k(),
            got: message.len(),
        });
    }
    let flat = if gen.k() == 0 {
        vec![field.zero(); gen.n()]
    } else {
        linalg::vec_mat(field, message, &gen.rows)
    };
    Ok(BlockVector::from_flat(flat, &gen.lengths, gen.centralizers.clone()))
}

/// `φ(F)`: block `i`, entry `j` is `F^{D_{a_i}}(β_ij)`.
pub fn phi_map<F: Field>(spec: &CodeSpec<F>, poly: &SkewPoly<F::Elem>) -> Result<BlockVector<F::Elem>> {
    let n = spec.n();
    if let Some(d) = poly.degree().filter(|&d| d >= n) {
        return Err(Error::DegreeOverflow { degree: d, bound: n });
    }
    let ring = SkewRing::new(spec.field());
    let flat = spec
        .reps
        .iter()
        .zip(&spec.betas)
        .flat_map(|(a, block)| block.iter().map(|b| ring.operator_eval(a, poly, b)).collect::<Vec<_>>())
        .collect();
    Ok(spec.to_blocks(flat))
}

/// `φ` read on evaluation vectors: `F(conj(a_i, β_ij))` becomes
/// `F(conj(a_i, β_ij)) β_ij`.
pub fn phi_of_evaluations<F: Field>(spec: &CodeSpec<F>, values: &[F::Elem]) -> Result<BlockVector<F::Elem>> {
    if values.len() != spec.n() {
        return Err(Error::LengthMismatch {
            expected: spec.n(),
            got: values.len(),
        });
    }
    let field = spec.field();
    let flat = values
        .iter()
        .zip(spec.betas.iter().flatten())
        .map(|(v, b)| field.mul(v, b))
        .collect();
    Ok(spec.to_blocks(flat))
}

/// Re-expresses evaluations on the P-basis `from` as evaluations on the
/// P-basis `to` of the same closure.
pub fn pi_change_basis<F: Field>(
    field: &F,
    from: &[F::Elem],
    to: &[F::Elem],
    values: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    let a = geometry::minimal_skew_poly(field, from);
    let b = geometry::minimal_skew_poly(field, to);
    if a.rank() != from.len() || b.rank() != to.len() {
        return Err(Error::DependentPoints);
    }
    if a.min_poly() != b.min_poly() {
        return Err(Error::ClosureMismatch);
    }
    let poly = geometry::lagrange_interpolate(field, from, values)?;
    let ring = SkewRing::new(field);
    Ok(to.iter().map(|t| ring.evaluate(&poly, t)).collect())
}

/// `F = Σ m_l x^l`.
pub fn message_poly<F: Field>(field: &F, message: &[F::Elem]) -> SkewPoly<F::Elem> {
    SkewRing::new(field).poly(message.to_vec())
}

/// A linearized Reed-Solomon code with its generator and skew points.
#[derive(Clone, Debug)]
pub struct LinearizedRsCode<F: Field> {
    pub spec: CodeSpec<F>,
    pub generator: GeneratorMatrix<F::Elem>,
    pub skew_points: Vec<F::Elem>,
}

impl<F: Field> LinearizedRsCode<F> {
    pub fn new(spec: CodeSpec<F>) -> Self {
        let generator = build_linearized_rs(&spec);
        let skew_points = spec.skew_points();
        Self {
            spec,
            generator,
            skew_points,
        }
    }

    pub fn field(&self) -> &F {
        self.spec.field()
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn k(&self) -> usize {
        self.spec.k()
    }

    pub fn encode(&self, message: &[F::Elem]) -> Result<BlockVector<F::Elem>> {
        encode(self.field(), &self.generator, message)
    }
}
