//! Exact construction, classification, and counting of cyclic
//! self-orthogonal and self-dual codes of odd length n over Z_{p^m}
//! (p prime, gcd(n, p) = 1).
//!
//! The pipeline, bottom to top:
//!
//! * [`RingParams`] — arithmetic in Z_{p^m}, with p-adic valuations and
//!   unit inverses.
//! * [`Poly`] — dense polynomials over that ring: products, division by
//!   monic divisors, reduction modulo x^n - 1, reciprocals.
//! * [`cyclotomic_cosets`] — the orbit structure of multiplication by p
//!   on Z_n, whose self-paired/paired orbit counts (gamma, delta) drive
//!   every census formula.
//! * [`FactorBasis`] — the basic irreducible factors of x^n - (unit)
//!   over Z_{p^m}, obtained by Hensel-lifting the mod-p factorization,
//!   in a canonical order with the reciprocal pairing made explicit.
//! * [`ExponentProfile`] — a cyclic code, recorded as one exponent per
//!   factor; duality, cardinality, self-orthogonality, trivial/nontrivial
//!   classification, generator polynomials, and the counting formulas all
//!   read straight off the profile.
//! * [`oracle`] — definition-level brute force over raw codewords
//!   (spans, inner products, weight scans) plus [`oracle::crosscheck`],
//!   which replays every closed-form claim against it.
//!
//! ```
//! use zpmcyclic::{FactorBasis, ModulusKind, ProfileFilter, RingParams};
//!
//! let ring = RingParams::new(2, 3).unwrap(); // Z_8
//! let basis = FactorBasis::new(ring, 7, ModulusKind::Shifted).unwrap();
//! let self_orthogonal =
//!     zpmcyclic::enumerate_profiles(&basis, ProfileFilter::SelfOrthogonal);
//! assert_eq!(self_orthogonal.count(), 20);
//! ```

mod codes;
mod cosets;
mod error;
mod factorization;
mod field;
pub mod oracle;
mod poly;
mod ring;

pub use codes::{
    classify_type, code_counts, count_nontrivial, count_self_dual, count_so, count_trivial,
    enumerate_profiles, euclidean_weight, profile_space_size, type_ii_violation, CodeCounts,
    CodeType, ExponentProfile, GeneratorForm, ProfileFilter, ProfileIter, Triviality,
};
pub use cosets::{cyclotomic_cosets, gamma_delta, nontrivial_exists, CosetPartition};
pub use error::{Error, Result};
pub use factorization::{
    factor_mod_p, hensel_lift, is_irreducible_mod_p, modulus_poly, FactorBasis, ModulusKind,
};
pub use poly::Poly;
pub use ring::RingParams;
