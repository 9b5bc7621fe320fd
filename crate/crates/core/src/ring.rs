//! Scalar arithmetic in Z_{p^m}.
//!
//! Elements are canonical naturals in `[0, p^m)` held in machine words;
//! every operation reduces modulo `q = p^m` through 128-bit intermediates,
//! so results are exact for any ring that fits in a `u64`.

use crate::error::{Error, Result};

/// The coefficient ring Z_{p^m}, described by its prime `p` and exponent `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingParams {
    p: u64,
    m: u32,
    q: u64,
}

impl RingParams {
    /// Builds the ring, verifying that `p` is prime (trial division — inputs
    /// are small), `m >= 1`, and that `p^m` fits in a word.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::RingTooLarge { p, m });
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.checked_mul(p).ok_or(Error::RingTooLarge { p, m })?;
        }
        Ok(RingParams { p, m, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The modulus `q = p^m`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The residue field Z_p of this ring.
    pub fn residue_field(&self) -> RingParams {
        RingParams {
            p: self.p,
            m: 1,
            q: self.p,
        }
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.q as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let (a, b) = (a % self.q, b % self.q);
        if a >= b {
            a - b
        } else {
            a + (self.q - b)
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    /// `p^k mod q` (zero once `k >= m`).
    pub fn pow_p(&self, k: u32) -> u64 {
        if k >= self.m {
            0
        } else {
            self.p.pow(k)
        }
    }

    /// True iff `a` is invertible, i.e. not divisible by `p`.
    pub fn is_unit(&self, a: u64) -> bool {
        a % self.p != 0
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(&self, a: u64) -> Result<u64> {
        let a = a % self.q;
        if !self.is_unit(a) {
            return Err(Error::NotAUnit {
                value: a,
                modulus: self.q,
            });
        }
        // Extended Euclid on (a, q); gcd is 1 because a is a unit.
        let (mut r0, mut r1) = (a as i128, self.q as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (s0, s1) = (s1, s0 - quot * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(s0.rem_euclid(self.q as i128) as u64)
    }

    /// Splits a nonzero scalar as `unit * p^v`; `None` for zero.
    pub fn valuation(&self, a: u64) -> Option<(u32, u64)> {
        let mut a = a % self.q;
        if a == 0 {
            return None;
        }
        let mut v = 0;
        while a % self.p == 0 {
            a /= self.p;
            v += 1;
        }
        Some((v, a))
    }
}

impl std::fmt::Display for RingParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z_{}", self.q)
    }
}

/// Deterministic trial-division primality test.
pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Greatest common divisor of two naturals.
pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_checks_primality() {
        assert_eq!(RingParams::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(RingParams::new(1, 1).unwrap_err(), Error::NotPrime(1));
        assert!(RingParams::new(2, 3).is_ok());
        assert!(RingParams::new(7919, 1).is_ok());
    }

    #[test]
    fn constructor_rejects_overflow() {
        assert!(matches!(
            RingParams::new(2, 64),
            Err(Error::RingTooLarge { .. })
        ));
        assert!(RingParams::new(2, 63).is_ok());
    }

    #[test]
    fn inverse_of_three_mod_eight_is_three() {
        let z8 = RingParams::new(2, 3).unwrap();
        assert_eq!(z8.inverse(3).unwrap(), 3);
    }

    #[test]
    fn inverse_of_five_mod_nine_is_two() {
        let z9 = RingParams::new(3, 2).unwrap();
        assert_eq!(z9.inverse(5).unwrap(), 2);
    }

    #[test]
    fn even_scalars_are_not_units_mod_eight() {
        let z8 = RingParams::new(2, 3).unwrap();
        assert_eq!(
            z8.inverse(2).unwrap_err(),
            Error::NotAUnit {
                value: 2,
                modulus: 8
            }
        );
        assert_eq!(
            z8.inverse(0).unwrap_err(),
            Error::NotAUnit {
                value: 0,
                modulus: 8
            }
        );
    }

    #[test]
    fn every_unit_has_a_working_inverse() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (2, 6)] {
            let ring = RingParams::new(p, m).unwrap();
            for a in 0..ring.q() {
                if ring.is_unit(a) {
                    let inv = ring.inverse(a).unwrap();
                    assert_eq!(ring.mul(a, inv), 1, "a = {a} in {ring}");
                } else {
                    assert!(ring.inverse(a).is_err());
                }
            }
        }
    }

    #[test]
    fn valuation_splits_scalars() {
        let z8 = RingParams::new(2, 3).unwrap();
        assert_eq!(z8.valuation(0), None);
        assert_eq!(z8.valuation(4), Some((2, 1)));
        assert_eq!(z8.valuation(6), Some((1, 3)));
        assert_eq!(z8.valuation(5), Some((0, 5)));
    }

    #[test]
    fn subtraction_wraps() {
        let z9 = RingParams::new(3, 2).unwrap();
        assert_eq!(z9.sub(2, 5), 6);
        assert_eq!(z9.neg(1), 8);
        assert_eq!(z9.pow_p(0), 1);
        assert_eq!(z9.pow_p(1), 3);
        assert_eq!(z9.pow_p(2), 0);
    }
}
