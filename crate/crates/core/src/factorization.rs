//! Factoring x^n - 1 (and its unit-shifted twin) over Z_{p^m} into basic
//! irreducible factors, for odd n coprime to p.
//!
//! The pipeline: cyclotomic cosets give the factorization pattern, minimal
//! polynomials of a primitive n-th root of unity in F_{p^t} give the mod-p
//! seeds, and quadratic Hensel lifting raises the seeds to Z_{p^m}. Because
//! x^n - 1 is squarefree mod p, the lifted factorization is unique once the
//! mod-p seeds are fixed, so every downstream structure (pairings, exponent
//! profiles, counts) is canonical.

use crate::cosets::{check_length, cyclotomic_cosets, CosetPartition};
use crate::error::{Error, Result};
use crate::field::{irreducible_over_prime_field, multiplicative_order, ExtField};
use crate::poly::Poly;
use crate::ring::RingParams;

/// Which degree-n monic polynomial the quotient ring is taken by.
///
/// * `Standard`: x^n - 1, the usual ambient modulus for cyclic codes.
/// * `Shifted`: x^n + (p - 1). It agrees with x^n - 1 mod p, so it has the
///   same factorization pattern, but the product of all its lifted factors
///   is congruent to p (not 0) in Z_{p^m}[x]/(x^n - 1) — the normalization
///   under which generator polynomials take their tidiest form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModulusKind {
    Standard,
    Shifted,
}

impl std::fmt::Display for ModulusKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModulusKind::Standard => write!(f, "standard"),
            ModulusKind::Shifted => write!(f, "shifted"),
        }
    }
}

/// The degree-n modulus polynomial of the given kind over the ring.
pub fn modulus_poly(ring: RingParams, n: u64, kind: ModulusKind) -> Result<Poly> {
    check_length(ring.p(), n)?;
    let constant = match kind {
        ModulusKind::Standard => ring.q() - 1,
        ModulusKind::Shifted => ring.p() - 1,
    };
    let mut coeffs = vec![0u64; n as usize + 1];
    coeffs[0] = constant;
    coeffs[n as usize] = 1;
    Ok(Poly::new(ring, coeffs))
}

/// Whether `f` is irreducible after reduction mod p (a *basic irreducible*
/// when its leading coefficient is a unit).
pub fn is_irreducible_mod_p(f: &Poly) -> bool {
    irreducible_over_prime_field(&f.reduce_mod_p())
}

/// Bezout cofactors over F_p: returns (s, t) with s*g + t*h = 1,
/// deg s < deg h and deg t < deg g. Errors when g and h share a factor.
fn bezout_over_prime_field(g: &Poly, h: &Poly) -> Result<(Poly, Poly)> {
    let ring = g.ring();
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (Poly::one(ring), Poly::zero(ring));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1.clone(), &s0 - &(&q * &s1));
    }
    if r0.deg() != Some(0) {
        return Err(Error::LiftPrecondition(format!(
            "seeds share the common factor {} mod {}",
            r0,
            ring.p()
        )));
    }
    let scale = ring.inverse(r0.leading_coeff().unwrap())?;
    let s = s0.mul_scalar(scale);
    // Reduce s modulo h so deg s < deg h, then solve for t exactly.
    let s = s.divmod(h)?.1;
    let num = &Poly::one(ring) - &(&s * g);
    let (t, rem) = num.divmod(h)?;
    debug_assert!(rem.is_zero());
    Ok((s, t))
}

/// One quadratic lift step: given f = g*h and s*g + t*h = 1 mod p^k (all
/// operands already reduced in Z_{p^min(2k,m)}), returns (g', h', s', t')
/// with the same relations mod p^min(2k,m). Degrees and monicity of g and h
/// are preserved automatically because the working ring is truncated.
fn lift_step(
    f: &Poly,
    g: &Poly,
    h: &Poly,
    s: &Poly,
    t: &Poly,
) -> Result<(Poly, Poly, Poly, Poly)> {
    let e = &(f - &(g * h));
    let (q, r) = (s * e).divmod(h)?;
    let g1 = &(g + &(t * e)) + &(&q * g);
    let h1 = h + &r;
    let b = &(&(s * &g1) + &(t * &h1)) - &Poly::one(f.ring());
    let (c, d) = (s * &b).divmod(&h1)?;
    let s1 = s - &d;
    let t1 = &(t - &(t * &b)) - &(&c * &g1);
    Ok((g1, h1, s1, t1))
}

fn embed(ring: RingParams, f: &Poly) -> Poly {
    Poly::new(ring, f.coeffs().to_vec())
}

/// Hensel lifting of a two-factor splitting: given monic `f` over Z_{p^m}
/// and monic coprime `g0`, `h0` over F_p with f = g0*h0 mod p, returns the
/// unique monic (G, H) over Z_{p^m} with f = G*H, G = g0 and H = h0 mod p.
pub fn hensel_lift(f: &Poly, g0: &Poly, h0: &Poly) -> Result<(Poly, Poly)> {
    let target = f.ring();
    let fp = target.residue_field();
    if g0.ring() != fp || h0.ring() != fp {
        return Err(Error::MixedRings);
    }
    if !f.is_monic() || !g0.is_monic() || !h0.is_monic() {
        return Err(Error::LiftPrecondition(
            "factors and target must be monic".into(),
        ));
    }
    if f.reduce_mod_p() != g0 * h0 {
        return Err(Error::LiftPrecondition(format!(
            "target is not congruent to ({g0})*({h0}) mod {}",
            target.p()
        )));
    }
    let (s0, t0) = bezout_over_prime_field(g0, h0)?;
    let (mut g, mut h, mut s, mut t) = (g0.clone(), h0.clone(), s0, t0);
    let mut k = 1u32;
    while k < target.m() {
        let next = (2 * k).min(target.m());
        let ring_next = RingParams::new(target.p(), next)?;
        let fk = embed(ring_next, f);
        let (g1, h1, s1, t1) = lift_step(
            &fk,
            &embed(ring_next, &g),
            &embed(ring_next, &h),
            &embed(ring_next, &s),
            &embed(ring_next, &t),
        )?;
        (g, h, s, t) = (g1, h1, s1, t1);
        k = next;
    }
    Ok((embed(target, &g), embed(target, &h)))
}

/// Lifts a full list of pairwise-coprime monic seeds along a balanced tree.
/// `f` must be monic over the target ring with f = prod(seeds) mod p.
fn lift_factors(f: &Poly, seeds: &[Poly]) -> Result<Vec<Poly>> {
    match seeds.len() {
        0 => Err(Error::LiftPrecondition("no seeds".into())),
        1 => {
            if f.reduce_mod_p() != seeds[0] {
                return Err(Error::LiftPrecondition(format!(
                    "target is not congruent to {} mod {}",
                    seeds[0],
                    f.ring().p()
                )));
            }
            Ok(vec![f.clone()])
        }
        len => {
            let (left, right) = seeds.split_at(len / 2);
            let prod = |half: &[Poly]| half.iter().fold(Poly::one(half[0].ring()), |a, b| &a * b);
            let (gg, hh) = hensel_lift(f, &prod(left), &prod(right))?;
            let mut out = lift_factors(&gg, left)?;
            out.extend(lift_factors(&hh, right)?);
            Ok(out)
        }
    }
}

/// Sort key for canonical factor order: degree, then the ascending
/// coefficient vector of the mod-p seed, lexicographically.
fn seed_key(seed: &Poly) -> (usize, Vec<u64>) {
    (seed.coeffs().len(), seed.coeffs().to_vec())
}

/// The monic irreducible factors of x^n - 1 over F_p in canonical order:
/// factors of self-paired cosets first (sorted by degree, then coefficients),
/// then reciprocal pairs sorted by their lexicographically smaller member,
/// smaller member first within each pair.
pub fn factor_mod_p(p: u64, n: u64) -> Result<Vec<Poly>> {
    let ring = RingParams::new(p, 1)?;
    Ok(FactorBasis::new(ring, n, ModulusKind::Standard)?
        .factors()
        .iter()
        .map(Poly::reduce_mod_p)
        .collect())
}

/// The factorization of a degree-n modulus over Z_{p^m} into basic
/// irreducible (monic, irreducible mod p) factors, in canonical order,
/// together with the reciprocal pairing structure.
///
/// Factor k corresponds to a cyclotomic coset of p mod n; the pairing sends
/// k to the factor of the negated coset. For the standard modulus the paired
/// factor is literally the monic reciprocal polynomial.
#[derive(Debug, Clone)]
pub struct FactorBasis {
    ring: RingParams,
    n: u64,
    kind: ModulusKind,
    modulus: Poly,
    factors: Vec<Poly>,
    pairing: Vec<usize>,
    gamma: usize,
    delta: usize,
}

impl FactorBasis {
    pub fn new(ring: RingParams, n: u64, kind: ModulusKind) -> Result<FactorBasis> {
        check_length(ring.p(), n)?;
        let p = ring.p();
        let part = cyclotomic_cosets(p, n)?;
        let seeds = coset_seeds(&part);

        // Canonical order: self-paired cosets first, then pairs.
        let mut fixed: Vec<usize> = (0..part.len()).filter(|&k| part.is_self_paired(k)).collect();
        fixed.sort_by_key(|&k| seed_key(&seeds[k]));
        let mut pairs: Vec<(usize, usize)> = (0..part.len())
            .filter(|&k| k < part.paired_with(k))
            .map(|k| {
                let j = part.paired_with(k);
                if seed_key(&seeds[j]) < seed_key(&seeds[k]) {
                    (j, k)
                } else {
                    (k, j)
                }
            })
            .collect();
        pairs.sort_by_key(|&(a, _)| seed_key(&seeds[a]));

        let gamma = fixed.len();
        let delta = pairs.len();
        let mut order = fixed;
        for &(a, b) in &pairs {
            order.push(a);
            order.push(b);
        }
        let mut pairing: Vec<usize> = (0..order.len()).collect();
        for j in 0..delta {
            pairing[gamma + 2 * j] = gamma + 2 * j + 1;
            pairing[gamma + 2 * j + 1] = gamma + 2 * j;
        }

        let ordered_seeds: Vec<Poly> = order.iter().map(|&k| seeds[k].clone()).collect();
        let modulus = modulus_poly(ring, n, kind)?;
        let factors = lift_factors(&modulus, &ordered_seeds)?;
        Ok(FactorBasis {
            ring,
            n,
            kind,
            modulus,
            factors,
            pairing,
            gamma,
            delta,
        })
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kind(&self) -> ModulusKind {
        self.kind
    }

    /// The modulus polynomial the factors multiply to.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Number of basic irreducible factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false // x^n - 1 has at least the factor of the coset of 0
    }

    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn factor(&self, k: usize) -> &Poly {
        &self.factors[k]
    }

    /// Index of the factor whose roots are the inverses (equivalently,
    /// negated-coset powers) of factor k's roots.
    pub fn paired_with(&self, k: usize) -> usize {
        self.pairing[k]
    }

    pub fn is_self_paired(&self, k: usize) -> bool {
        self.pairing[k] == k
    }

    /// Number of self-paired factors (they occupy positions 0..gamma).
    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// Number of reciprocal pairs (positions gamma + 2j, gamma + 2j + 1).
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Rebuilds this basis over the other modulus kind.
    pub fn with_kind(&self, kind: ModulusKind) -> Result<FactorBasis> {
        if kind == self.kind {
            return Ok(self.clone());
        }
        FactorBasis::new(self.ring, self.n, kind)
    }
}

/// Minimal polynomials over F_p of a fixed primitive n-th root of unity,
/// one per coset, indexed like the partition.
fn coset_seeds(part: &CosetPartition) -> Vec<Poly> {
    let t = multiplicative_order(part.p(), part.n());
    let field = ExtField::new(part.p(), t);
    let eps = field.root_of_unity(part.n());
    part.cosets()
        .iter()
        .map(|coset| field.minimal_polynomial(&eps, coset))
        .collect()
}
