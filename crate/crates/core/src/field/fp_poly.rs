//! Dense univariate polynomials over a prime field F_p.
//!
//! Coefficients are stored low-degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and structural equality is equality
//! of polynomials.

use std::fmt;

pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p as u64 - 2, p)
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FpPoly {
    coeffs: Vec<u32>,
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly({})", self.to_digit_string())
    }
}

impl FpPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn constant(c: u32, p: u32) -> Self {
        Self::from_coeffs(vec![c % p], p)
    }

    /// `c * z^deg`
    pub fn monomial(c: u32, deg: usize, p: u32) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c % p;
        Self::from_coeffs(coeffs, p)
    }

    pub fn from_coeffs(mut coeffs: Vec<u32>, p: u32) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Self, p: u32) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| add_mod(self.coeff(i), other.coeff(i), p))
            .collect();
        Self::from_coeffs(coeffs, p)
    }

    pub fn sub(&self, other: &Self, p: u32) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| sub_mod(self.coeff(i), other.coeff(i), p))
            .collect();
        Self::from_coeffs(coeffs, p)
    }

    pub fn neg(&self, p: u32) -> Self {
        Self::zero().sub(self, p)
    }

    pub fn scale(&self, c: u32, p: u32) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect(), p)
    }

    pub fn mul(&self, other: &Self, p: u32) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        let p64 = p as u64;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p64;
            }
        }
        Self::from_coeffs(out.into_iter().map(|c| c as u32).collect(), p)
    }

    pub fn pow(&self, mut exp: u64, p: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base, p);
            }
        }
        acc
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self, p: u32) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![0u32; nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = mul_mod(rem[shift + dd], lead_inv, p);
            if c == 0 {
                continue;
            }
            quot[shift] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = sub_mod(rem[shift + j], mul_mod(c, d, p), p);
            }
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot, p), Self::from_coeffs(rem, p))
    }

    pub fn rem(&self, divisor: &Self, p: u32) -> Self {
        self.div_rem(divisor, p).1
    }

    pub fn make_monic(&self, p: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(inv_mod(self.leading(), p), p)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self, p: u32) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.make_monic(p)
    }

    /// Returns `(g, s, t)` with `s * self + t * other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self, p: u32) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1, p), p);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1, p), p);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let li = inv_mod(r0.leading(), p);
        (r0.scale(li, p), s0.scale(li, p), t0.scale(li, p))
    }

    pub fn derivative(&self, p: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64 % p as u64) as u32, p))
            .collect();
        Self::from_coeffs(coeffs, p)
    }

    /// `self(z^e)`: spreads coefficient `i` to position `i * e`.
    pub fn inflate(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * e + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * e] = c;
        }
        Self { coeffs }
    }

    /// Trial factorization: no monic factor of degree `1..=deg/2`.
    pub fn is_irreducible(&self, p: u32) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        for fd in 1..=d / 2 {
            let mut found = false;
            for_each_monic(fd, p, |cand| {
                if !found && self.rem(cand, p).is_zero() {
                    found = true;
                }
            });
            if found {
                return false;
            }
        }
        true
    }

    /// Low-to-high coefficients joined by ':'; zero prints as "0".
    pub fn to_digit_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }

    pub fn parse_digits(s: &str, p: u32) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty coefficient list".into());
        }
        let mut coeffs = Vec::new();
        for part in s.split(':') {
            let c: u32 = part
                .trim()
                .parse()
                .map_err(|_| format!("bad digit {part:?}"))?;
            if c >= p {
                return Err(format!("digit {c} not below p = {p}"));
            }
            coeffs.push(c);
        }
        Ok(Self::from_coeffs(coeffs, p))
    }
}

/// Visits every monic polynomial of degree `deg` in lexicographic order of
/// `(c_0, c_1, ..., c_{deg-1})`, comparing `c_0` first.
pub(crate) fn for_each_monic(deg: usize, p: u32, mut f: impl FnMut(&FpPoly)) {
    let mut digits = vec![0u32; deg];
    loop {
        let mut coeffs = digits.clone();
        coeffs.push(1);
        f(&FpPoly { coeffs });
        // odometer with c_{deg-1} varying fastest so c_0 is most significant
        let mut i = deg;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// The lexicographically smallest monic irreducible polynomial of degree `deg`.
pub fn smallest_irreducible(deg: usize, p: u32) -> FpPoly {
    let mut result = None;
    for_each_monic(deg, p, |cand| {
        if result.is_none() && cand.is_irreducible(p) {
            result = Some(cand.clone());
        }
    });
    result.expect("irreducible polynomials exist in every degree")
}
