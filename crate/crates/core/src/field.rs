//! Internal arithmetic in extension fields F_{p^t}, together with the
//! irreducibility and gcd helpers over the prime field that support it.
//!
//! This module is deliberately crate-private: the public factorization API
//! only ever surfaces polynomials over Z_{p^m}, but finding them requires a
//! detour through a splitting field of x^n - 1 where the roots of unity live.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::poly::Poly;
use crate::ring::RingParams;

/// Prime divisors of `n` in ascending order (empty for n <= 1).
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `p` modulo `n` (requires gcd(p, n) = 1; the
/// order modulo 1 is 1).
pub(crate) fn multiplicative_order(p: u64, n: u64) -> usize {
    if n == 1 {
        return 1;
    }
    let mut j = p % n;
    let mut t = 1usize;
    while j != 1 {
        j = ((j as u128 * p as u128) % n as u128) as u64;
        t += 1;
        assert!(t as u64 <= n, "p is not invertible modulo n");
    }
    t
}

/// `base^exp mod modulus` over a prime field, by binary exponentiation.
pub(crate) fn poly_powmod(base: &Poly, exp: u64, modulus: &Poly) -> Poly {
    let mut result = Poly::one(base.ring())
        .divmod(modulus)
        .expect("monic modulus")
        .1;
    let mut sq = base.divmod(modulus).expect("monic modulus").1;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = (&result * &sq).divmod(modulus).unwrap().1;
        }
        sq = (&sq * &sq).divmod(modulus).unwrap().1;
        e >>= 1;
    }
    result
}

/// Monic gcd over a prime field (gcd(0, 0) = 0).
pub(crate) fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.divmod(&b).expect("field coefficients").1;
        a = b;
        b = r;
    }
    match a.leading_coeff() {
        Some(lc) if lc != 1 => {
            let inv = a.ring().inverse(lc).expect("field coefficients");
            a.mul_scalar(inv)
        }
        _ => a,
    }
}

/// Rabin's irreducibility test over the prime field F_p.
///
/// `f` of degree t is irreducible iff x^(p^t) = x (mod f) and, for every
/// prime divisor r of t, gcd(x^(p^(t/r)) - x, f) is constant. The first
/// condition also rules out repeated factors, since x^(p^t) - x is
/// squarefree.
pub(crate) fn irreducible_over_prime_field(f: &Poly) -> bool {
    let ring = f.ring();
    assert_eq!(ring.m(), 1, "irreducibility test needs prime-field input");
    let t = match f.deg() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(t) => t,
    };
    if !ring.is_unit(f.leading_coeff().unwrap()) {
        // Cannot happen over a field unless f is zero, handled above.
        return false;
    }
    let x = Poly::monomial(ring, 1, 1);
    let checkpoints: Vec<usize> = prime_divisors(t as u64)
        .into_iter()
        .map(|r| t / r as usize)
        .collect();
    let mut frob = x.clone();
    for k in 1..=t {
        frob = poly_powmod(&frob, ring.p(), f);
        if checkpoints.contains(&k) {
            let g = poly_gcd(&(&frob - &x), f);
            if g.deg() != Some(0) {
                return false;
            }
        }
    }
    frob == x
}

/// The field F_{p^t}, realized as F_p[y]/(f) for the first monic irreducible
/// f of degree t in counter order (coefficients below the leading term read
/// as base-p digits of an integer counter).
///
/// Elements are coefficient vectors of length exactly t.
pub(crate) struct ExtField {
    p: u64,
    t: usize,
    modulus: Vec<u64>,
}

pub(crate) type Elt = Vec<u64>;

impl ExtField {
    pub(crate) fn new(p: u64, t: usize) -> ExtField {
        assert!(t >= 1);
        let fp = RingParams::new(p, 1).expect("p validated upstream");
        let mut c = 0u64;
        let modulus = loop {
            let mut coeffs = digits(c, p, t);
            coeffs.push(1);
            let f = Poly::new(fp, coeffs.clone());
            if irreducible_over_prime_field(&f) {
                break coeffs;
            }
            c = c
                .checked_add(1)
                .expect("irreducible polynomial exists among small counters");
        };
        ExtField { p, t, modulus }
    }

    #[cfg(test)]
    pub(crate) fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub(crate) fn zero(&self) -> Elt {
        vec![0; self.t]
    }

    pub(crate) fn one(&self) -> Elt {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    pub(crate) fn is_one(&self, a: &Elt) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    /// Element whose coefficients are the base-p digits of `c`.
    pub(crate) fn from_counter(&self, c: u64) -> Elt {
        digits(c, self.p, self.t)
    }

    pub(crate) fn add(&self, a: &Elt, b: &Elt) -> Elt {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub(crate) fn sub(&self, a: &Elt, b: &Elt) -> Elt {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub(crate) fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let mut prod = vec![0u64; 2 * self.t - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let t = (prod[i + j] as u128 + x as u128 * y as u128) % self.p as u128;
                prod[i + j] = t as u64;
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut v: Vec<u64>) -> Elt {
        let p = self.p as u128;
        for k in (self.t..v.len()).rev() {
            let c = v[k];
            if c != 0 {
                v[k] = 0;
                for i in 0..self.t {
                    let sub = (c as u128 * self.modulus[i] as u128) % p;
                    let cur = v[k - self.t + i] as u128;
                    v[k - self.t + i] = ((cur + p - sub) % p) as u64;
                }
            }
        }
        v.truncate(self.t);
        v
    }

    pub(crate) fn pow(&self, a: &Elt, e: &BigUint) -> Elt {
        let mut result = self.one();
        for i in (0..e.bits()).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    /// |F_{p^t}^*| = p^t - 1.
    pub(crate) fn group_order(&self) -> BigUint {
        BigUint::from(self.p).pow(self.t as u32) - 1u32
    }

    /// An element of exact multiplicative order `n`. Requires n | p^t - 1,
    /// which holds whenever t is a multiple of the order of p modulo n.
    pub(crate) fn root_of_unity(&self, n: u64) -> Elt {
        let order = self.group_order();
        let n_big = BigUint::from(n);
        assert!(
            (&order % &n_big).is_zero(),
            "n must divide the group order"
        );
        let e = &order / &n_big;
        let primes = prime_divisors(n);
        let mut c = 1u64;
        loop {
            let g = self.from_counter(c);
            if g.iter().any(|&x| x != 0) {
                let eps = self.pow(&g, &e);
                let exact = primes
                    .iter()
                    .all(|&r| !self.is_one(&self.pow(&eps, &BigUint::from(n / r))));
                if exact {
                    return eps;
                }
            }
            c += 1;
        }
    }

    /// The minimal polynomial prod_{j in exponents} (x - eps^j), whose
    /// coefficients must (and are checked to) lie in the prime subfield.
    /// Returned over F_p.
    pub(crate) fn minimal_polynomial(&self, eps: &Elt, exponents: &[u64]) -> Poly {
        let mut coeffs: Vec<Elt> = vec![self.one()];
        for &j in exponents {
            let root = self.pow(eps, &BigUint::from(j));
            // multiply the accumulated polynomial by (x - root)
            let mut next: Vec<Elt> = vec![self.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], c);
                let scaled = self.mul(c, &root);
                next[i] = self.sub(&next[i], &scaled);
            }
            coeffs = next;
        }
        let fp = RingParams::new(self.p, 1).expect("p validated upstream");
        let flat: Vec<u64> = coeffs
            .iter()
            .map(|c| {
                assert!(
                    c[1..].iter().all(|&x| x == 0),
                    "minimal polynomial coefficients must be rational over F_p"
                );
                c[0]
            })
            .collect();
        Poly::new(fp, flat)
    }
}

fn digits(mut c: u64, p: u64, t: usize) -> Vec<u64> {
    let mut out = vec![0u64; t];
    for o in out.iter_mut() {
        *o = c % p;
        c /= p;
        if c == 0 {
            break;
        }
    }
    out
}
