//! Cyclic codes of odd length n over Z_{p^m}, represented by exponent
//! profiles.
//!
//! Every cyclic code is an ideal of Z_{p^m}[x]/(x^n - 1) and, by the CRT
//! decomposition over a factor basis, is determined by one exponent
//! `a_k` in `[0, m]` per basic irreducible factor: the component of the
//! code at factor `f_k` is the ideal generated by `p^{a_k}`. The vector
//! `(a_0, ..., a_{r-1})` is the [`ExponentProfile`]. Duality, inclusion,
//! cardinality, self-orthogonality, and generator polynomials are all
//! closed-form functions of the profile, which is what makes exhaustive
//! classification feasible.

use crate::error::{Error, Result};
use crate::factorization::{FactorBasis, ModulusKind};
use crate::poly::Poly;
use crate::ring::RingParams;
use num_bigint::BigUint;
use num_traits::Zero;
use std::fmt;

/// Which generator polynomial to produce for a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorForm {
    /// `p^mu * prod_k f_k^{a_k - mu}` with `mu = min_k a_k`, left as a
    /// plain polynomial product (degree may reach or exceed n).
    Product,
    /// The product form reduced modulo `x^n - 1`.
    Reduced,
}

/// Trichotomy for a profile: not self-orthogonal, or self-orthogonal and
/// contained in the scalar ideal generated by `p^{ceil(m/2)}` (trivial),
/// or self-orthogonal and not so contained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triviality {
    NotSelfOrthogonal,
    Trivial,
    Nontrivial,
}

/// Classification of a self-dual code by its Euclidean weights: type II
/// when every codeword weight is divisible by `p^{m+1}`, type I otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeType {
    TypeI,
    TypeII,
}

/// Predicate used when enumerating profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileFilter {
    All,
    SelfOrthogonal,
    TrivialSelfOrthogonal,
    NontrivialSelfOrthogonal,
    SelfDual,
}

impl ProfileFilter {
    /// Whether `profile` passes this filter.
    pub fn admits(&self, profile: &ExponentProfile<'_>) -> bool {
        match self {
            ProfileFilter::All => true,
            ProfileFilter::SelfOrthogonal => profile.is_self_orthogonal(),
            ProfileFilter::TrivialSelfOrthogonal => {
                profile.classify_triviality() == Triviality::Trivial
            }
            ProfileFilter::NontrivialSelfOrthogonal => {
                profile.classify_triviality() == Triviality::Nontrivial
            }
            ProfileFilter::SelfDual => profile.is_self_dual(),
        }
    }
}

/// A cyclic code over Z_{p^m}, given as one exponent in `[0, m]` per
/// factor of a [`FactorBasis`].
#[derive(Debug, Clone)]
pub struct ExponentProfile<'a> {
    basis: &'a FactorBasis,
    exponents: Vec<u32>,
}

impl<'a> ExponentProfile<'a> {
    /// Wraps an exponent vector over `basis`, rejecting wrong lengths and
    /// exponents above m.
    pub fn new(basis: &'a FactorBasis, exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() != basis.len() {
            return Err(Error::InvalidProfile(format!(
                "basis has {} factors but {} exponents were given",
                basis.len(),
                exponents.len()
            )));
        }
        let m = basis.ring().m();
        if let Some(&bad) = exponents.iter().find(|&&a| a > m) {
            return Err(Error::InvalidProfile(format!(
                "exponent {bad} exceeds the ring exponent {m}"
            )));
        }
        Ok(ExponentProfile { basis, exponents })
    }

    pub fn basis(&self) -> &'a FactorBasis {
        self.basis
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The profile of the dual code: `b_k = m - a_{sigma(k)}` where
    /// `sigma` is the pairing of the basis.
    pub fn dual(&self) -> ExponentProfile<'a> {
        let m = self.basis.ring().m();
        let exponents = (0..self.exponents.len())
            .map(|k| m - self.exponents[self.basis.paired_with(k)])
            .collect();
        ExponentProfile {
            basis: self.basis,
            exponents,
        }
    }

    /// Whether the code is contained in its dual, i.e.
    /// `a_k + a_{sigma(k)} >= m` for every k.
    pub fn is_self_orthogonal(&self) -> bool {
        let m = self.basis.ring().m();
        (0..self.exponents.len())
            .all(|k| self.exponents[k] + self.exponents[self.basis.paired_with(k)] >= m)
    }

    /// Whether the code equals its dual, i.e. `a_k + a_{sigma(k)} = m`
    /// for every k.
    pub fn is_self_dual(&self) -> bool {
        let m = self.basis.ring().m();
        (0..self.exponents.len())
            .all(|k| self.exponents[k] + self.exponents[self.basis.paired_with(k)] == m)
    }

    /// Places the profile in the [`Triviality`] trichotomy. A
    /// self-orthogonal code is trivial exactly when it lies inside the
    /// ideal generated by the scalar `p^{ceil(m/2)}`, which in profile
    /// terms means every exponent is at least `ceil(m/2)`.
    pub fn classify_triviality(&self) -> Triviality {
        if !self.is_self_orthogonal() {
            return Triviality::NotSelfOrthogonal;
        }
        let half_up = self.basis.ring().m().div_ceil(2);
        if self.exponents.iter().all(|&a| a >= half_up) {
            Triviality::Trivial
        } else {
            Triviality::Nontrivial
        }
    }

    /// Number of codewords: `p^{sum_k (m - a_k) deg f_k}`.
    pub fn cardinality(&self) -> BigUint {
        let ring = self.basis.ring();
        let m = ring.m();
        let mut exp: u64 = 0;
        for (k, &a) in self.exponents.iter().enumerate() {
            let deg = self.basis.factor(k).deg().expect("basis factors are nonzero") as u64;
            exp += u64::from(m - a) * deg;
        }
        let exp = u32::try_from(exp).expect("cardinality exponent fits in u32");
        BigUint::from(self.basis.ring().p()).pow(exp)
    }

    /// The single generator polynomial `p^mu * prod_k f_k^{a_k - mu}`
    /// (with `mu = min_k a_k`), either as a plain product or reduced
    /// modulo `x^n - 1`. Only defined over a shifted-modulus basis,
    /// where `x^n - 1` differs from the factored modulus by the constant
    /// p, so the product generates the same ideal in the quotient.
    pub fn generator_polynomial(&self, form: GeneratorForm) -> Result<Poly> {
        if self.basis.kind() != ModulusKind::Shifted {
            return Err(Error::WrongModulusKind {
                expected: ModulusKind::Shifted,
                found: self.basis.kind(),
            });
        }
        let ring = self.basis.ring();
        let mu = *self.exponents.iter().min().expect("basis is nonempty");
        let mut product = Poly::constant(ring, ring.pow_p(mu));
        for (k, &a) in self.exponents.iter().enumerate() {
            if a > mu && !product.is_zero() {
                product = &product * &self.basis.factor(k).pow(a - mu);
            }
        }
        Ok(match form {
            GeneratorForm::Product => product,
            GeneratorForm::Reduced => product.quotient_reduce(self.basis.n() as usize),
        })
    }

    /// The generating set `(G_1, p G_2, ..., p^{m-1} G_m)` where
    /// `G_{j+1} = prod_{a_k != j} f_k`; the entry for j is omitted when
    /// no factor carries exponent j (its product would be the whole
    /// modulus, hence zero in the quotient). Only defined over a
    /// standard-modulus basis, whose factors multiply to `x^n - 1`
    /// exactly.
    pub fn standard_generators(&self) -> Result<Vec<Poly>> {
        if self.basis.kind() != ModulusKind::Standard {
            return Err(Error::WrongModulusKind {
                expected: ModulusKind::Standard,
                found: self.basis.kind(),
            });
        }
        let ring = self.basis.ring();
        let mut gens = Vec::new();
        for j in 0..ring.m() {
            if !self.exponents.iter().any(|&a| a == j) {
                continue;
            }
            let mut ghat = Poly::one(ring);
            for (k, &a) in self.exponents.iter().enumerate() {
                if a != j {
                    ghat = &ghat * self.basis.factor(k);
                }
            }
            gens.push(ghat.mul_scalar(ring.pow_p(j)));
        }
        Ok(gens)
    }
}

impl fmt::Display for ExponentProfile<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over exponent profiles in ascending lexicographic order,
/// yielding only those admitted by the filter.
pub struct ProfileIter<'a> {
    basis: &'a FactorBasis,
    filter: ProfileFilter,
    next: Option<Vec<u32>>,
}

impl<'a> Iterator for ProfileIter<'a> {
    type Item = ExponentProfile<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        let m = self.basis.ring().m();
        while let Some(current) = self.next.take() {
            self.next = successor(&current, m);
            let profile = ExponentProfile {
                basis: self.basis,
                exponents: current,
            };
            if self.filter.admits(&profile) {
                return Some(profile);
            }
        }
        None
    }
}

fn successor(exponents: &[u32], m: u32) -> Option<Vec<u32>> {
    let mut next = exponents.to_vec();
    for k in (0..next.len()).rev() {
        if next[k] < m {
            next[k] += 1;
            for later in &mut next[k + 1..] {
                *later = 0;
            }
            return Some(next);
        }
    }
    None
}

/// All profiles over `basis` passing `filter`, in ascending lexicographic
/// order of the exponent vector.
pub fn enumerate_profiles(basis: &FactorBasis, filter: ProfileFilter) -> ProfileIter<'_> {
    ProfileIter {
        basis,
        filter,
        next: Some(vec![0; basis.len()]),
    }
}

/// Total number of exponent profiles over `basis`: `(m+1)^r`.
pub fn profile_space_size(basis: &FactorBasis) -> BigUint {
    let r = u32::try_from(basis.len()).expect("factor count fits in u32");
    BigUint::from(u64::from(basis.ring().m()) + 1).pow(r)
}

/// Number of self-orthogonal cyclic codes:
/// `(floor(m/2)+1)^gamma * ((m+1)(m+2)/2)^delta`.
pub fn count_so(gamma: usize, delta: usize, m: u32) -> BigUint {
    let per_self_paired = BigUint::from(u64::from(m / 2 + 1));
    let per_pair = BigUint::from(u64::from(m + 1) * u64::from(m + 2) / 2);
    per_self_paired.pow(gamma as u32) * per_pair.pow(delta as u32)
}

/// Number of trivial self-orthogonal cyclic codes (those inside the
/// scalar ideal of `p^{ceil(m/2)}`): `(floor(m/2)+1)^{gamma+2delta}`.
pub fn count_trivial(gamma: usize, delta: usize, m: u32) -> BigUint {
    BigUint::from(u64::from(m / 2 + 1)).pow((gamma + 2 * delta) as u32)
}

/// Number of nontrivial self-orthogonal cyclic codes; the difference of
/// [`count_so`] and [`count_trivial`].
pub fn count_nontrivial(gamma: usize, delta: usize, m: u32) -> BigUint {
    count_so(gamma, delta, m) - count_trivial(gamma, delta, m)
}

/// Self-dual cyclic code counts as `(formula, actual)`: the closed form
/// `(m+1)^delta`, and the true count, which equals the formula for even m
/// and is zero for odd m (a self-paired factor would need `2a_k = m`).
pub fn count_self_dual(delta: usize, m: u32) -> (BigUint, BigUint) {
    let formula = BigUint::from(u64::from(m) + 1).pow(delta as u32);
    let actual = if m % 2 == 0 {
        formula.clone()
    } else {
        BigUint::zero()
    };
    (formula, actual)
}

/// The full set of counts for one (p, m, n), computed from (gamma, delta)
/// alone — no factorization or lifting is involved.
#[derive(Debug, Clone)]
pub struct CodeCounts {
    pub n: u64,
    pub gamma: usize,
    pub delta: usize,
    pub total_so: BigUint,
    pub trivial_so: BigUint,
    pub nontrivial_so: BigUint,
    pub self_dual_formula: BigUint,
    pub self_dual_actual: BigUint,
}

/// Computes [`CodeCounts`] for cyclic codes of length n over Z_{p^m}.
pub fn code_counts(p: u64, m: u32, n: u64) -> Result<CodeCounts> {
    RingParams::new(p, m)?;
    let (gamma, delta) = crate::cosets::gamma_delta(p, n)?;
    let (self_dual_formula, self_dual_actual) = count_self_dual(delta, m);
    Ok(CodeCounts {
        n,
        gamma,
        delta,
        total_so: count_so(gamma, delta, m),
        trivial_so: count_trivial(gamma, delta, m),
        nontrivial_so: count_nontrivial(gamma, delta, m),
        self_dual_formula,
        self_dual_actual,
    })
}

/// Euclidean weight of a word over Z_q: the sum of `min(e^2, (q-e)^2)`
/// over its entries (entries are reduced mod q first).
pub fn euclidean_weight(word: &[u64], ring: RingParams) -> BigUint {
    let q = u128::from(ring.q());
    let mut total = BigUint::zero();
    for &entry in word {
        let e = u128::from(ring.reduce(entry));
        total += BigUint::from((e * e).min((q - e) * (q - e)));
    }
    total
}

/// Searches the codewords of a self-dual code for one whose Euclidean
/// weight is not divisible by `p^{m+1}`, returning the first found (the
/// code is then type I) or `None` (type II). Errors with
/// [`Error::NotSelfDual`] if the profile is not self-dual and
/// [`Error::BudgetExceeded`] if the code has more than `budget`
/// codewords.
pub fn type_ii_violation(profile: &ExponentProfile<'_>, budget: u64) -> Result<Option<Vec<u64>>> {
    if !profile.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let basis = profile.basis();
    let ring = basis.ring();
    let generators = match basis.kind() {
        ModulusKind::Shifted => vec![profile.generator_polynomial(GeneratorForm::Reduced)?],
        ModulusKind::Standard => profile.standard_generators()?,
    };
    let span = crate::oracle::span_from_generators(&generators, ring, basis.n() as usize);
    let q = u128::from(ring.q());
    let threshold = q * u128::from(ring.p());
    for word in span.codewords(budget)? {
        let mut acc: u128 = 0;
        for &e in &word {
            let e = u128::from(e);
            let contribution = (e * e).min((q - e) * (q - e));
            acc = (acc + contribution % threshold) % threshold;
        }
        if acc != 0 {
            return Ok(Some(word));
        }
    }
    Ok(None)
}

/// Classifies a self-dual code as type I or type II by exhaustive
/// Euclidean-weight scan. Same errors as [`type_ii_violation`].
pub fn classify_type(profile: &ExponentProfile<'_>, budget: u64) -> Result<CodeType> {
    Ok(match type_ii_violation(profile, budget)? {
        Some(_) => CodeType::TypeI,
        None => CodeType::TypeII,
    })
}
