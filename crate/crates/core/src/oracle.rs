//! Brute-force ground truth for the closed-form code machinery.
//!
//! Everything here works on raw words in Z_q^n and knows nothing about
//! factor bases: codes are represented by an explicit spanning set (the
//! cyclic shifts of their generators) brought into a canonical triangular
//! form over Z_{p^m}. Because Z_{p^m} is not a field, a basis needs more
//! care than Gaussian elimination: a pivot entry `p^v` with `v > 0` does
//! not span everything its row can reach, so for every non-unit pivot the
//! multiple `p^{m-v} * row` is fed back in as a fresh row ([`SpanBasis`]
//! keeps the completed, reduced form). The [`crosscheck`] entry point
//! replays the closed-form claims (self-orthogonality, cardinality,
//! generator equivalence, census counts) against these oracles.

use crate::codes::{
    count_nontrivial, count_self_dual, count_so, count_trivial, enumerate_profiles,
    euclidean_weight, profile_space_size, ExponentProfile, GeneratorForm, ProfileFilter,
};
use crate::error::{Error, Result};
use crate::factorization::{FactorBasis, ModulusKind};
use crate::poly::Poly;
use crate::ring::RingParams;
use num_bigint::BigUint;
use num_traits::One;

/// Standard inner product of two words over Z_q (entries are reduced
/// first). Errors when the lengths differ.
pub fn inner_product(u: &[u64], v: &[u64], ring: RingParams) -> Result<u64> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let q = u128::from(ring.q());
    let mut acc = 0u128;
    for (&a, &b) in u.iter().zip(v) {
        acc = (acc + u128::from(ring.reduce(a)) * u128::from(ring.reduce(b))) % q;
    }
    Ok(acc as u64)
}

/// A Z_{p^m}-submodule of Z_q^n in canonical triangular form: pivot
/// columns strictly increase, each pivot entry is a power of p, entries
/// above a pivot are reduced below it, and non-unit pivots have been
/// completed so that membership and counting are exact.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    ring: RingParams,
    n: usize,
    rows: Vec<Vec<u64>>,
    /// (column, valuation) of each row's pivot, aligned with `rows`.
    pivots: Vec<(usize, u32)>,
}

impl SpanBasis {
    /// Canonicalizes an arbitrary list of spanning rows.
    ///
    /// Panics if a row's length differs from n.
    pub fn from_rows(ring: RingParams, n: usize, raw: Vec<Vec<u64>>) -> SpanBasis {
        let mut pending: Vec<Vec<u64>> = raw
            .into_iter()
            .map(|row| {
                assert_eq!(row.len(), n, "spanning row length must equal n");
                row.into_iter().map(|c| ring.reduce(c)).collect::<Vec<u64>>()
            })
            .filter(|row| row.iter().any(|&c| c != 0))
            .collect();
        let m = ring.m();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut pivots: Vec<(usize, u32)> = Vec::new();
        for col in 0..n {
            // Invariant: every pending row is zero in columns before `col`.
            let best = pending
                .iter()
                .enumerate()
                .filter_map(|(i, row)| ring.valuation(row[col]).map(|(v, _)| (v, i)))
                .min()
                .map(|(_, i)| i);
            let Some(best) = best else { continue };
            let mut pivot = pending.swap_remove(best);
            let (v, unit) = ring.valuation(pivot[col]).expect("pivot entry is nonzero");
            let unit_inv = ring.inverse(unit).expect("unit part is invertible");
            for c in &mut pivot {
                *c = ring.mul(*c, unit_inv);
            }
            // The pivot entry is now exactly p^v; clear the column in
            // every other row (all have valuation >= v there).
            for row in &mut pending {
                if let Some((rv, ru)) = ring.valuation(row[col]) {
                    let factor = ring.mul(ru, ring.pow_p(rv - v));
                    for (rc, &pc) in row.iter_mut().zip(&pivot) {
                        *rc = ring.sub(*rc, ring.mul(factor, pc));
                    }
                }
            }
            // A non-unit pivot annihilates part of the row: the multiple
            // p^{m-v} * pivot is a span element the triangular rows above
            // cannot reproduce, so it goes back into the working set.
            if v > 0 {
                let scale = ring.pow_p(m - v);
                let tail: Vec<u64> = pivot.iter().map(|&c| ring.mul(c, scale)).collect();
                if tail.iter().any(|&c| c != 0) {
                    pending.push(tail);
                }
            }
            rows.push(pivot);
            pivots.push((col, v));
        }
        // Reduce every entry above a pivot below that pivot's power of p,
        // making the form canonical.
        for i in 0..rows.len() {
            let (col, v) = pivots[i];
            let step = ring.pow_p(v);
            for j in 0..i {
                let factor = rows[j][col] / step;
                if factor == 0 {
                    continue;
                }
                let (upper, lower) = rows.split_at_mut(i);
                for (rc, &pc) in upper[j].iter_mut().zip(&lower[0]) {
                    *rc = ring.sub(*rc, ring.mul(factor, pc));
                }
            }
        }
        SpanBasis {
            ring,
            n,
            rows,
            pivots,
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical rows (no zero rows are kept).
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Exact number of span elements: the product of p^{m-v} over the
    /// pivot valuations v.
    pub fn cardinality(&self) -> BigUint {
        let mut card = BigUint::one();
        for &(_, v) in &self.pivots {
            card *= BigUint::from(self.ring.q() / self.ring.pow_p(v));
        }
        card
    }

    /// Membership by greedy elimination along the pivots.
    ///
    /// Panics if the word's length differs from n.
    pub fn contains(&self, word: &[u64]) -> bool {
        assert_eq!(word.len(), self.n, "word length must equal n");
        let ring = self.ring;
        let mut w: Vec<u64> = word.iter().map(|&c| ring.reduce(c)).collect();
        for (row, &(col, v)) in self.rows.iter().zip(&self.pivots) {
            if w[col] == 0 {
                continue;
            }
            let step = ring.pow_p(v);
            if w[col] % step != 0 {
                return false;
            }
            let factor = w[col] / step;
            for (wc, &rc) in w.iter_mut().zip(row) {
                *wc = ring.sub(*wc, ring.mul(factor, rc));
            }
        }
        w.iter().all(|&c| c == 0)
    }

    /// Whether the two bases span the same submodule.
    pub fn same_span(&self, other: &SpanBasis) -> bool {
        self.cardinality() == other.cardinality()
            && other.rows.iter().all(|row| self.contains(row))
    }

    /// Iterates over every span element exactly once (the zero word
    /// first), or errors with [`Error::BudgetExceeded`] when the span
    /// holds more than `budget` elements.
    pub fn codewords(&self, budget: u64) -> Result<Codewords<'_>> {
        let required = self.cardinality();
        if required > BigUint::from(budget) {
            return Err(Error::BudgetExceeded { required, budget });
        }
        let radii: Vec<u64> = self
            .pivots
            .iter()
            .map(|&(_, v)| self.ring.q() / self.ring.pow_p(v))
            .collect();
        Ok(Codewords {
            span: self,
            radii,
            counter: Some(vec![0; self.rows.len()]),
        })
    }
}

/// Iterator over the elements of a [`SpanBasis`]; each element arises
/// from a unique coefficient vector against the canonical rows.
#[derive(Debug)]
pub struct Codewords<'a> {
    span: &'a SpanBasis,
    radii: Vec<u64>,
    counter: Option<Vec<u64>>,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let mut digits = self.counter.take()?;
        let q = u128::from(self.span.ring.q());
        let mut word = vec![0u64; self.span.n];
        for (&digit, row) in digits.iter().zip(&self.span.rows) {
            if digit == 0 {
                continue;
            }
            let d = u128::from(digit);
            for (w, &c) in word.iter_mut().zip(row) {
                *w = ((u128::from(*w) + d * u128::from(c)) % q) as u64;
            }
        }
        let mut idx = digits.len();
        while idx > 0 {
            idx -= 1;
            digits[idx] += 1;
            if digits[idx] < self.radii[idx] {
                self.counter = Some(digits);
                return Some(word);
            }
            digits[idx] = 0;
        }
        self.counter = None;
        Some(word)
    }
}

fn shift_rows(gens: &[Poly], ring: RingParams, n: usize) -> Vec<Vec<u64>> {
    let mut rows = Vec::with_capacity(gens.len() * n);
    for gen in gens {
        assert_eq!(gen.ring(), ring, "generator ring must match");
        let base = gen.quotient_reduce(n).coeff_vector(n);
        for s in 0..n {
            let mut row = vec![0u64; n];
            for (i, &c) in base.iter().enumerate() {
                row[(i + s) % n] = c;
            }
            rows.push(row);
        }
    }
    rows
}

/// The cyclic code generated by `gens` in Z_q[x]/(x^n - 1): the span of
/// all n cyclic shifts of each generator (reduced into the quotient).
pub fn span_from_generators(gens: &[Poly], ring: RingParams, n: usize) -> SpanBasis {
    SpanBasis::from_rows(ring, n, shift_rows(gens, ring, n))
}

/// Self-orthogonality by definition: every pair of cyclic shifts of the
/// generators must have inner product zero.
pub fn bruteforce_self_orthogonal(gens: &[Poly], ring: RingParams, n: usize) -> bool {
    let shifts = shift_rows(gens, ring, n);
    for (i, u) in shifts.iter().enumerate() {
        for v in &shifts[i..] {
            if inner_product(u, v, ring).expect("shift rows have equal length") != 0 {
                return false;
            }
        }
    }
    true
}

/// Minimum Euclidean weight over all nonzero span elements, by full
/// enumeration. Errors with [`Error::ZeroCode`] when the span has no
/// nonzero element, and respects the codeword `budget`.
pub fn bruteforce_min_euclidean_weight(span: &SpanBasis, budget: u64) -> Result<BigUint> {
    if span.cardinality() < BigUint::from(2u32) {
        return Err(Error::ZeroCode);
    }
    let mut min: Option<BigUint> = None;
    for word in span.codewords(budget)? {
        if word.iter().all(|&c| c == 0) {
            continue;
        }
        let weight = euclidean_weight(&word, span.ring());
        min = Some(match min {
            Some(current) if current <= weight => current,
            _ => weight,
        });
    }
    Ok(min.expect("a span with at least two elements has a nonzero one"))
}

/// Enumeration budgets for the brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of codewords any single span may be asked to yield.
    pub codewords: u64,
    /// Maximum number of exponent profiles a census may walk.
    pub profiles: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            codewords: 10_000_000,
            profiles: 1_000_000,
        }
    }
}

/// Outcome of a single consistency check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of [`crosscheck`] for one parameter set.
#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub p: u64,
    pub m: u32,
    pub n: u64,
    pub checks: Vec<CheckResult>,
}

impl CrosscheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn finish_check(name: &'static str, failure: Option<String>, pass_detail: String) -> CheckResult {
    match failure {
        Some(detail) => CheckResult {
            name,
            pass: false,
            detail,
        },
        None => CheckResult {
            name,
            pass: true,
            detail: pass_detail,
        },
    }
}

/// Replays the closed-form claims for every profile of (p, m, n) against
/// the brute-force oracles:
///
/// 1. formula self-orthogonality == all shift pairs orthogonal,
/// 2. formula cardinality == span cardinality,
/// 3. the single product generator and the standard generating set span
///    the same code,
/// 4. enumerated filter counts == the census formulas.
///
/// Errors with [`Error::BudgetExceeded`] when the profile space is larger
/// than `budgets.profiles`.
pub fn crosscheck(p: u64, m: u32, n: u64, budgets: Budgets) -> Result<CrosscheckReport> {
    let ring = RingParams::new(p, m)?;
    let shifted = FactorBasis::new(ring, n, ModulusKind::Shifted)?;
    let standard = shifted.with_kind(ModulusKind::Standard)?;
    let space = profile_space_size(&shifted);
    if space > BigUint::from(budgets.profiles) {
        return Err(Error::BudgetExceeded {
            required: space,
            budget: budgets.profiles,
        });
    }
    let n_usize = n as usize;
    let mut checks = Vec::new();

    {
        let mut failure = None;
        let mut tested = 0u64;
        for profile in enumerate_profiles(&shifted, ProfileFilter::All) {
            let gen = profile
                .generator_polynomial(GeneratorForm::Reduced)
                .expect("basis is shifted");
            tested += 1;
            if bruteforce_self_orthogonal(&[gen], ring, n_usize) != profile.is_self_orthogonal() {
                failure = Some(format!("mismatch at profile {profile}"));
                break;
            }
        }
        checks.push(finish_check(
            "self_orthogonality_formula_vs_bruteforce",
            failure,
            format!("{tested} profiles checked"),
        ));
    }

    {
        let mut failure = None;
        let mut tested = 0u64;
        for profile in enumerate_profiles(&shifted, ProfileFilter::All) {
            let gen = profile
                .generator_polynomial(GeneratorForm::Reduced)
                .expect("basis is shifted");
            let span = span_from_generators(&[gen], ring, n_usize);
            tested += 1;
            if span.cardinality() != profile.cardinality() {
                failure = Some(format!(
                    "profile {profile}: formula {} vs span {}",
                    profile.cardinality(),
                    span.cardinality()
                ));
                break;
            }
        }
        checks.push(finish_check(
            "cardinality_formula_vs_span",
            failure,
            format!("{tested} profiles checked"),
        ));
    }

    {
        let mut failure = None;
        let mut tested = 0u64;
        for profile in enumerate_profiles(&shifted, ProfileFilter::All) {
            let gen = profile
                .generator_polynomial(GeneratorForm::Reduced)
                .expect("basis is shifted");
            let twin = ExponentProfile::new(&standard, profile.exponents().to_vec())
                .expect("same factor count");
            let gens = twin.standard_generators().expect("basis is standard");
            let product_span = span_from_generators(&[gen], ring, n_usize);
            let standard_span = span_from_generators(&gens, ring, n_usize);
            tested += 1;
            if !product_span.same_span(&standard_span) {
                failure = Some(format!("spans differ at profile {profile}"));
                break;
            }
        }
        checks.push(finish_check(
            "product_vs_standard_generators",
            failure,
            format!("{tested} profiles checked"),
        ));
    }

    {
        let gamma = shifted.gamma();
        let delta = shifted.delta();
        let cases: [(&str, ProfileFilter, BigUint); 4] = [
            ("so", ProfileFilter::SelfOrthogonal, count_so(gamma, delta, m)),
            (
                "trivial_so",
                ProfileFilter::TrivialSelfOrthogonal,
                count_trivial(gamma, delta, m),
            ),
            (
                "nontrivial_so",
                ProfileFilter::NontrivialSelfOrthogonal,
                count_nontrivial(gamma, delta, m),
            ),
            ("self_dual", ProfileFilter::SelfDual, count_self_dual(delta, m).1),
        ];
        let mut failure = None;
        for (label, filter, expected) in cases {
            let enumerated = BigUint::from(enumerate_profiles(&shifted, filter).count());
            if enumerated != expected {
                failure = Some(format!(
                    "{label}: enumerated {enumerated} vs formula {expected}"
                ));
                break;
            }
        }
        checks.push(finish_check(
            "filter_counts_vs_formulas",
            failure,
            "4 filters checked".to_string(),
        ));
    }

    Ok(CrosscheckReport { p, m, n, checks })
}
