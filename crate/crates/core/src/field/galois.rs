use std::fmt;

use rand::Rng;

use super::fp_poly::{add_mod, inv_mod, is_prime, mul_mod, smallest_irreducible, sub_mod, FpPoly};
use super::{Centralizer, Field};
use crate::error::{Error, Result};

/// An element of GF(p^s): `s` coefficients over F_p in the basis
/// {1, y, …, y^(s−1)}, each reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(Vec<u32>);

impl GfElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", digits.join(":"))
    }
}

/// GF(p^s) = F_p[y]/(modulus) with σ(a) = a^(p^r) and δ = γ(Id − σ).
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u32,
    s: usize,
    r: usize,
    modulus: FpPoly,
    gamma: Option<GfElem>,
    /// F_p-basis of the fixed field F_q.
    fixed_basis: Vec<GfElem>,
    /// Inverse of the F_p-matrix whose column `j * d + t` is `fixed_basis[t] * y^j`.
    coord_solver: Vec<Vec<u32>>,
}

impl GaloisField {
    /// GF(p^s) with σ = (p^r)-Frobenius and δ = 0.
    pub fn new(p: u32, s: usize, r: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::InvalidField("extension degree s must be >= 1".into()));
        }
        if (p as f64).powi(s as i32) > u64::MAX as f64 / 4.0 {
            return Err(Error::InvalidField("field too large".into()));
        }
        let modulus = smallest_irreducible(s, p);
        let mut field = Self {
            p,
            s,
            r,
            modulus,
            gamma: None,
            fixed_basis: Vec::new(),
            coord_solver: Vec::new(),
        };
        field.fixed_basis = field.compute_fixed_basis();
        field.coord_solver = field.compute_coord_solver();
        Ok(field)
    }

    /// Sets the inner-derivation parameter, δ(b) = γ(b − σ(b)).
    pub fn with_gamma(mut self, gamma: GfElem) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn gamma(&self) -> Option<&GfElem> {
        self.gamma.as_ref()
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    /// Effective Frobenius exponent, `r mod s`.
    fn r_eff(&self) -> usize {
        self.r % self.s
    }

    /// Degree of F_q over F_p, `gcd(r, s)`.
    pub fn d(&self) -> usize {
        gcd(self.r, self.s)
    }

    /// Size of the fixed field F^σ = F_q.
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.d() as u32)
    }

    /// [GF(p^s) : F_q].
    pub fn m(&self) -> usize {
        self.s / self.d()
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.s as u32)
    }

    pub fn sigma_is_identity(&self) -> bool {
        self.r_eff() == 0
    }

    /// The generator y of the polynomial basis.
    pub fn y(&self) -> GfElem {
        self.from_poly(&FpPoly::monomial(1, 1, self.p))
    }

    pub fn from_poly(&self, poly: &FpPoly) -> GfElem {
        let reduced = poly.rem(&self.modulus, self.p);
        GfElem((0..self.s).map(|i| reduced.coeff(i)).collect())
    }

    pub fn to_poly(&self, a: &GfElem) -> FpPoly {
        FpPoly::from_coeffs(a.0.clone(), self.p)
    }

    /// Position of `a` in [`Field::elements`] order, Σ c_i p^i.
    pub fn index_of(&self, a: &GfElem) -> u64 {
        a.0.iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn from_index(&self, mut idx: u64) -> GfElem {
        let p = self.p as u64;
        GfElem(
            (0..self.s)
                .map(|_| {
                    let c = (idx % p) as u32;
                    idx /= p;
                    c
                })
                .collect(),
        )
    }

    fn frobenius_p(&self, a: &GfElem) -> GfElem {
        self.pow(a, self.p as u64)
    }

    fn compute_fixed_basis(&self) -> Vec<GfElem> {
        // kernel of σ − Id as an F_p-linear map on F_p^s
        let s = self.s;
        let mut rows = vec![vec![0u32; s]; s];
        for j in 0..s {
            let mut e = vec![0u32; s];
            e[j] = 1;
            let e = GfElem(e);
            let img = self.sub(&self.sigma(&e), &e);
            for i in 0..s {
                rows[i][j] = img.0[i];
            }
        }
        kernel_mod_p(rows, self.p)
            .into_iter()
            .map(GfElem)
            .collect()
    }

    fn compute_coord_solver(&self) -> Vec<Vec<u32>> {
        let s = self.s;
        let d = self.fixed_basis.len();
        let mut mat = vec![vec![0u32; s]; s];
        let mut y_pow = self.one();
        let y = self.y();
        for j in 0..self.m() {
            for (t, e) in self.fixed_basis.iter().enumerate() {
                let col = self.mul(e, &y_pow);
                for i in 0..s {
                    mat[i][j * d + t] = col.0[i];
                }
            }
            y_pow = self.mul(&y_pow, &y);
        }
        inverse_mod_p(mat, self.p).expect("fixed-field basis times powers of y spans GF(p^s)")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Row-reduces `rows` (a matrix over F_p) and returns a basis of its right kernel.
fn kernel_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..ncols {
                    let v = mul_mod(f, rows[rank][c], p);
                    rows[i][c] = sub_mod(rows[i][c], v, p);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; ncols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = sub_mod(0, rows[r][f], p);
            }
            v
        })
        .collect()
}

fn inverse_mod_p(mat: Vec<Vec<u32>>, p: u32) -> Option<Vec<Vec<u32>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<u32>> = mat
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| u32::from(i == j)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| aug[i][col] != 0)?;
        aug.swap(col, piv);
        let inv = inv_mod(aug[col][col], p);
        for x in aug[col].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..n {
            if i != col && aug[i][col] != 0 {
                let f = aug[i][col];
                for c in 0..2 * n {
                    let v = mul_mod(f, aug[col][c], p);
                    aug[i][c] = sub_mod(aug[i][c], v, p);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

impl Field for GaloisField {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(vec![0; self.s])
    }

    fn one(&self) -> GfElem {
        let mut c = vec![0; self.s];
        c[0] = 1;
        GfElem(c)
    }

    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| add_mod(x, y, self.p))
                .collect(),
        )
    }

    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| sub_mod(x, y, self.p))
                .collect(),
        )
    }

    fn neg(&self, a: &GfElem) -> GfElem {
        GfElem(a.0.iter().map(|&x| sub_mod(0, x, self.p)).collect())
    }

    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let prod = self.to_poly(a).mul(&self.to_poly(b), self.p);
        self.from_poly(&prod)
    }

    fn inv(&self, a: &GfElem) -> Result<GfElem> {
        let pa = self.to_poly(a);
        if pa.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = pa.ext_gcd(&self.modulus, self.p);
        debug_assert!(g.is_one());
        Ok(self.from_poly(&s))
    }

    fn from_int(&self, n: i64) -> GfElem {
        let c = n.rem_euclid(self.p as i64) as u32;
        self.from_poly(&FpPoly::constant(c, self.p))
    }

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn sigma(&self, a: &GfElem) -> GfElem {
        (0..self.r_eff()).fold(a.clone(), |acc, _| self.frobenius_p(&acc))
    }

    fn delta(&self, a: &GfElem) -> GfElem {
        match &self.gamma {
            Some(g) => self.mul(g, &self.sub(a, &self.sigma(a))),
            None => self.zero(),
        }
    }

    fn inner_gamma(&self) -> Option<GfElem> {
        Some(self.gamma.clone().unwrap_or_else(|| self.zero()))
    }

    fn with_zero_derivation(&self) -> Result<Self> {
        let mut twin = self.clone();
        twin.gamma = None;
        Ok(twin)
    }

    fn centralizer_of(&self, a: &GfElem) -> Centralizer {
        if !self.sigma_is_identity() && Some(a.clone()) == self.inner_gamma() {
            Centralizer::Whole
        } else {
            Centralizer::Fixed
        }
    }

    fn centralizer_degree(&self, k: Centralizer) -> usize {
        match k {
            Centralizer::Fixed => self.m(),
            Centralizer::Whole => 1,
        }
    }

    fn centralizer_basis(&self, k: Centralizer) -> Vec<GfElem> {
        let y = self.y();
        let mut out = vec![self.one()];
        for _ in 1..self.centralizer_degree(k) {
            let next = self.mul(out.last().unwrap(), &y);
            out.push(next);
        }
        out
    }

    fn subfield_coordinates(&self, k: Centralizer, a: &GfElem) -> Vec<GfElem> {
        if k == Centralizer::Whole || self.m() == 1 {
            return vec![a.clone()];
        }
        let d = self.fixed_basis.len();
        let lambda: Vec<u32> = self
            .coord_solver
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&a.0)
                    .fold(0, |acc, (&x, &c)| add_mod(acc, mul_mod(x, c, self.p), self.p))
            })
            .collect();
        (0..self.m())
            .map(|j| {
                self.fixed_basis
                    .iter()
                    .enumerate()
                    .fold(self.zero(), |acc, (t, e)| {
                        let c = self.from_int(lambda[j * d + t] as i64);
                        self.add(&acc, &self.mul(e, &c))
                    })
            })
            .collect()
    }

    fn elements(&self) -> Option<Vec<GfElem>> {
        Some((0..self.order()).map(|i| self.from_index(i)).collect())
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R, _degree_bound: usize) -> GfElem {
        GfElem((0..self.s).map(|_| rng.gen_range(0..self.p)).collect())
    }

    fn parse_elem(&self, s: &str) -> Result<GfElem> {
        let poly = FpPoly::parse_digits(s, self.p).map_err(|reason| Error::ParseElement {
            input: s.to_string(),
            reason,
        })?;
        if poly.degree().is_some_and(|d| d >= self.s) {
            return Err(Error::ParseElement {
                input: s.to_string(),
                reason: format!("more than s = {} digits", self.s),
            });
        }
        Ok(self.from_poly(&poly))
    }

    fn format_elem(&self, a: &GfElem) -> String {
        FpPoly::from_coeffs(a.0.clone(), self.p).to_digit_string()
    }

    fn pow(&self, a: &GfElem, mut exp: u64) -> GfElem {
        let mut base = self.to_poly(a);
        let mut acc = FpPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base, self.p).rem(&self.modulus, self.p);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base, self.p).rem(&self.modulus, self.p);
            }
        }
        self.from_poly(&acc)
    }
}
