use std::fmt;

use rand::Rng;

use super::fp_poly::{inv_mod, is_prime, FpPoly};
use super::{Centralizer, Field};
use crate::error::{Error, Result};

/// A rational function `num / den` over F_p in canonical form: coprime,
/// `den` monic, zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: FpPoly,
    den: FpPoly,
}

impl RatFn {
    pub fn num(&self) -> &FpPoly {
        &self.num
    }

    pub fn den(&self) -> &FpPoly {
        &self.den
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/({})",
            self.num.to_digit_string(),
            self.den.to_digit_string()
        )
    }
}

/// F_p(z) with σ = Id and δ = d/dz.
///
/// Every centralizer is F_p(z^p), and F_p(z) has dimension p over it with
/// basis {1, z, …, z^(p−1)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionField {
    p: u32,
}

impl RationalFunctionField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn z(&self) -> RatFn {
        self.from_poly(FpPoly::monomial(1, 1, self.p))
    }

    pub fn from_poly(&self, num: FpPoly) -> RatFn {
        RatFn {
            num,
            den: FpPoly::one(),
        }
    }

    /// Canonicalizes `num / den`.
    pub fn fraction(&self, num: FpPoly, den: FpPoly) -> Result<RatFn> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.reduce(num, den))
    }

    fn reduce(&self, num: FpPoly, den: FpPoly) -> RatFn {
        let p = self.p;
        if num.is_zero() {
            return self.zero();
        }
        let g = num.gcd(&den, p);
        let (num, _) = num.div_rem(&g, p);
        let (den, _) = den.div_rem(&g, p);
        let li = inv_mod(den.leading(), p);
        RatFn {
            num: num.scale(li, p),
            den: den.scale(li, p),
        }
    }

    /// True when `a` lies in F_p(z^p), i.e. both parts of the canonical
    /// form are polynomials in z^p.
    pub fn in_fixed_subfield(&self, a: &RatFn) -> bool {
        let p = self.p as usize;
        let only_p_powers = |f: &FpPoly| {
            f.coeffs()
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || i % p == 0)
        };
        only_p_powers(&a.num) && only_p_powers(&a.den)
    }
}

impl Field for RationalFunctionField {
    type Elem = RatFn;

    fn zero(&self) -> RatFn {
        RatFn {
            num: FpPoly::zero(),
            den: FpPoly::one(),
        }
    }

    fn one(&self) -> RatFn {
        self.from_poly(FpPoly::one())
    }

    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let p = self.p;
        if a.den == b.den {
            return self.reduce(a.num.add(&b.num, p), a.den.clone());
        }
        let num = a.num.mul(&b.den, p).add(&b.num.mul(&a.den, p), p);
        self.reduce(num, a.den.mul(&b.den, p))
    }

    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &RatFn) -> RatFn {
        RatFn {
            num: a.num.neg(self.p),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let p = self.p;
        self.reduce(a.num.mul(&b.num, p), a.den.mul(&b.den, p))
    }

    fn inv(&self, a: &RatFn) -> Result<RatFn> {
        if a.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.reduce(a.den.clone(), a.num.clone()))
    }

    fn from_int(&self, n: i64) -> RatFn {
        let c = n.rem_euclid(self.p as i64) as u32;
        self.from_poly(FpPoly::constant(c, self.p))
    }

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn sigma(&self, a: &RatFn) -> RatFn {
        a.clone()
    }

    fn delta(&self, a: &RatFn) -> RatFn {
        // (N'D - ND') / D^2
        let p = self.p;
        let num = a
            .num
            .derivative(p)
            .mul(&a.den, p)
            .sub(&a.num.mul(&a.den.derivative(p), p), p);
        self.reduce(num, a.den.mul(&a.den, p))
    }

    fn inner_gamma(&self) -> Option<RatFn> {
        None
    }

    fn with_zero_derivation(&self) -> Result<Self> {
        Err(Error::NotInner)
    }

    fn centralizer_of(&self, _a: &RatFn) -> Centralizer {
        Centralizer::Fixed
    }

    fn centralizer_degree(&self, k: Centralizer) -> usize {
        match k {
            Centralizer::Fixed => self.p as usize,
            Centralizer::Whole => 1,
        }
    }

    fn centralizer_basis(&self, k: Centralizer) -> Vec<RatFn> {
        (0..self.centralizer_degree(k))
            .map(|j| self.from_poly(FpPoly::monomial(1, j, self.p)))
            .collect()
    }

    fn subfield_coordinates(&self, k: Centralizer, a: &RatFn) -> Vec<RatFn> {
        if k == Centralizer::Whole {
            return vec![a.clone()];
        }
        let p = self.p;
        let pu = p as usize;
        // N/D = N D^(p-1) / D^p and D^p is a polynomial in z^p
        let dp1 = a.den.pow(p as u64 - 1, p);
        let num = a.num.mul(&dp1, p);
        let den = dp1.mul(&a.den, p);
        (0..pu)
            .map(|j| {
                let part: Vec<u32> = num
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| if i >= j && (i - j) % pu == 0 { c } else { 0 })
                    .skip(j)
                    .collect();
                self.reduce(FpPoly::from_coeffs(part, p), den.clone())
            })
            .collect()
    }

    fn elements(&self) -> Option<Vec<RatFn>> {
        None
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R, degree_bound: usize) -> RatFn {
        let p = self.p;
        let poly = |rng: &mut R| {
            let deg = rng.gen_range(0..=degree_bound);
            FpPoly::from_coeffs((0..=deg).map(|_| rng.gen_range(0..p)).collect(), p)
        };
        let num = poly(rng);
        let mut den = poly(rng);
        while den.is_zero() {
            den = poly(rng);
        }
        self.reduce(num, den)
    }

    fn parse_elem(&self, s: &str) -> Result<RatFn> {
        let err = |reason: String| Error::ParseElement {
            input: s.to_string(),
            reason,
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = FpPoly::parse_digits(n, self.p).map_err(err)?;
        let den = match d {
            Some(d) => FpPoly::parse_digits(d, self.p).map_err(err)?,
            None => FpPoly::one(),
        };
        self.fraction(num, den).map_err(|_| err("zero denominator".into()))
    }

    fn format_elem(&self, a: &RatFn) -> String {
        format!("{}/{}", a.num.to_digit_string(), a.den.to_digit_string())
    }
}
