//! Dense polynomials over Z_{p^m}.
//!
//! Coefficients are stored in ascending degree order. Invariant: the vector
//! is either empty (the zero polynomial) or its last entry is nonzero, and
//! every entry is a canonical natural below `p^m`. The degree of the zero
//! polynomial is represented by `None`.

use crate::error::{Error, Result};
use crate::ring::RingParams;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingParams,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds a polynomial from raw coefficients (ascending degree),
    /// reducing each one and trimming leading zeros.
    pub fn new(ring: RingParams, mut coeffs: Vec<u64>) -> Poly {
        for c in &mut coeffs {
            *c = ring.reduce(*c);
        }
        let mut p = Poly { ring, coeffs };
        p.trim();
        p
    }

    pub fn zero(ring: RingParams) -> Poly {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: RingParams) -> Poly {
        Poly::constant(ring, 1)
    }

    pub fn constant(ring: RingParams, c: u64) -> Poly {
        Poly::new(ring, vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(ring: RingParams, c: u64, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(ring, coeffs)
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(0)
    }

    /// Coefficients padded with zeros to length `len` (ascending degree).
    pub fn coeff_vector(&self, len: usize) -> Vec<u64> {
        assert!(self.coeffs.len() <= len, "polynomial longer than {len}");
        let mut v = self.coeffs.clone();
        v.resize(len, 0);
        v
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn assert_same_ring(&self, other: &Poly) {
        assert_eq!(
            self.ring, other.ring,
            "polynomials belong to different coefficient rings"
        );
    }

    /// Ring-checked product; `Err(MixedRings)` when the operands disagree.
    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        Ok(self * other)
    }

    /// Ring-checked sum; `Err(MixedRings)` when the operands disagree.
    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        Ok(self + other)
    }

    pub fn mul_scalar(&self, c: u64) -> Poly {
        let c = self.ring.reduce(c);
        Poly::new(
            self.ring,
            self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect(),
        )
    }

    /// Repeated-multiplication power (exponents here are tiny).
    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.ring.add(self.ring.mul(acc, x), c);
        }
        acc
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    ///
    /// The divisor must have a unit leading coefficient, so the division is
    /// exact arithmetic in Z_{p^m} with no precision caveats.
    pub fn divmod(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if self.ring != d.ring {
            return Err(Error::MixedRings);
        }
        let lc = d.leading_coeff().ok_or(Error::NonUnitLeadingCoefficient)?;
        if !self.ring.is_unit(lc) {
            return Err(Error::NonUnitLeadingCoefficient);
        }
        let lc_inv = self.ring.inverse(lc)?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.ring), self.clone()));
        }
        let mut quo = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = self.ring.mul(rem[k], lc_inv);
            quo[k - dd] = c;
            if c != 0 {
                for i in 0..=dd {
                    let t = self.ring.mul(c, d.coeffs[i]);
                    rem[k - dd + i] = self.ring.sub(rem[k - dd + i], t);
                }
            }
        }
        Ok((Poly::new(self.ring, quo), Poly::new(self.ring, rem)))
    }

    /// Canonical representative modulo `x^n - 1`: folds each coefficient of
    /// `x^k` onto `x^(k mod n)`.
    pub fn quotient_reduce(&self, n: usize) -> Poly {
        assert!(n >= 1, "quotient ring needs n >= 1");
        let mut folded = vec![0u64; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            folded[k % n] = self.ring.add(folded[k % n], c);
        }
        Poly::new(self.ring, folded)
    }

    /// Monic reciprocal `a_0^{-1} x^deg f(1/x)`: the coefficient reversal
    /// scaled so the result is monic. Requires a unit constant term.
    pub fn reciprocal(&self) -> Result<Poly> {
        let a0 = self.constant_term();
        if !self.ring.is_unit(a0) {
            return Err(Error::NotAUnit {
                value: a0,
                modulus: self.ring.q(),
            });
        }
        let inv = self.ring.inverse(a0)?;
        let mut rev: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        for c in &mut rev {
            *c = self.ring.mul(*c, inv);
        }
        Ok(Poly::new(self.ring, rev))
    }

    /// Image under the coefficient-wise projection Z_{p^m} -> Z_p.
    pub fn reduce_mod_p(&self) -> Poly {
        let field = self.ring.residue_field();
        Poly::new(field, self.coeffs.clone())
    }
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same_ring(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; len];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.ring.add(self.coeff(k), rhs.coeff(k));
        }
        Poly::new(self.ring, out)
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same_ring(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u64; len];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.ring.sub(self.coeff(k), rhs.coeff(k));
        }
        Poly::new(self.ring, out)
    }
}

impl std::ops::Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.ring);
        }
        let q = self.ring.q() as u128;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let t = (out[i + j] as u128 + a as u128 * b as u128) % q;
                out[i + j] = t as u64;
            }
        }
        Poly::new(self.ring, out)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(
            self.ring,
            self.coeffs.iter().map(|&c| self.ring.neg(c)).collect(),
        )
    }
}

/// Text form: descending powers, zero terms omitted, `1*x^k` printed as
/// `x^k`, degree one printed as `x`, e.g. `2x^8+4x^6+4x^5+6x^4+4x^3+2`.
impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                (_, _) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}
