//! The acceptance gate: one test per shipping criterion. Each test prints
//! a single `criterion N: PASS (...)` line once all of its assertions
//! hold, so `cargo test --test acceptance -- --nocapture` reads as a
//! checklist. Criteria 1 and 2 drive the compiled binary; the rest call
//! the library against independent in-test oracles.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};
use zpmcyclic::oracle::{bruteforce_self_orthogonal, inner_product, span_from_generators};
use zpmcyclic::{
    classify_type, count_nontrivial, count_self_dual, count_so, count_trivial,
    enumerate_profiles, euclidean_weight, gamma_delta, is_irreducible_mod_p, modulus_poly,
    nontrivial_exists, type_ii_violation, CodeType, ExponentProfile, FactorBasis, GeneratorForm,
    ModulusKind, Poly, ProfileFilter, RingParams,
};

/// The exhaustively checkable configurations: every (p, m, n) whose
/// profile space fits a full brute-force sweep.
const CONFIGS: [(u64, u32, u64); 7] = [
    (2, 2, 7),
    (2, 3, 7),
    (2, 2, 15),
    (2, 3, 15),
    (3, 2, 5),
    (3, 2, 13),
    (5, 2, 3),
];

fn run_binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zpmcyclic"))
        .args(args)
        .env_remove("ZPMCYCLIC_BUDGET")
        .output()
        .expect("binary should run")
}

// ---------------------------------------------------------------------
// Criterion 1: the worked example over Z_8 at length 7.
// ---------------------------------------------------------------------

/// The 20 printed self-orthogonal codes of the worked example, keyed by
/// item number: (item, exponent profile, generator as printed). Seven of
/// the printed generators are misprints (items 3, 4, 7, 13, 14, 17, 20);
/// for those the recomputation is ground truth and the printed strings
/// are kept here only to assert that they fail recomputation.
const PRINTED_EXAMPLE: [(u32, [u32; 3], &str); 20] = [
    (1, [3, 3, 3], "0"),
    (2, [3, 3, 2], "4x^4+4x^2+4x+4"),
    (3, [3, 3, 1], "2x^8+4x^6+4x^5+6x^4+4x^3+2"),
    (4, [3, 3, 0], "x^12+2x^11+x^10+5x^9+6x^8+2x^6+7x^5+7x^4+3x^3+x+1"),
    (5, [3, 2, 3], "4x^4+4x^3+4x^2+4"),
    (6, [3, 1, 3], "2x^8+4x^7+6x^6+4x^5+6x^4+4x^3+4x^2+2"),
    (7, [3, 0, 3], "x^12+x^11+3x^9+3x^8+5x^7+4x^6+4x^5+6x^4+5x^3+5x^2+2x+1"),
    (8, [3, 2, 2], "4x+4"),
    (9, [3, 2, 1], "2x^5+6x^4+2x^3+4x^2+2"),
    (10, [3, 1, 2], "2x^5+4x^3+2x^2+6x+2"),
    (11, [2, 3, 3], "4x^6+4x^5+4x^4+4x^3+4x^2+4x+4"),
    (12, [2, 3, 2], "4x^3+4x^2+4"),
    (13, [2, 3, 1], "2x^7+6x^6+6x^5+6x^4+2x+2"),
    (14, [2, 3, 0], "x^11+x^10+5x^8+x^7+7x^6+3x^5+4x^4+3x^3+1"),
    (15, [2, 2, 3], "4x^3+4x+4"),
    (16, [2, 1, 3], "2x^7+2x^6+4x^5+6x^3+6x^2+6x+2"),
    (17, [2, 0, 3], "x^11+3x^8+5x^6+7x^5+5x^4+x^3+4x^2+x+1"),
    (18, [2, 2, 2], "4"),
    (19, [2, 1, 2], "2x^4+6x^3+6x^2+4x+2"),
    (20, [2, 2, 1], "2x^4+6x^2+2"),
];

const MISPRINTED_ITEMS: [u32; 7] = [3, 4, 7, 13, 14, 17, 20];

fn parse_profile_triple(text: &str) -> [u32; 3] {
    let inner = text
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .expect("profile in parentheses");
    let parts: Vec<u32> = inner
        .split(',')
        .map(|part| part.parse().expect("exponent"))
        .collect();
    [parts[0], parts[1], parts[2]]
}

/// Parses the printed polynomial format (descending powers, `+`-joined,
/// unit coefficients elided) into an ascending coefficient vector.
fn parse_poly_ascending(text: &str) -> Vec<u64> {
    if text == "0" {
        return Vec::new();
    }
    let mut coeffs: Vec<u64> = Vec::new();
    for term in text.split('+') {
        let (coeff_text, power) = if let Some(pos) = term.find("x^") {
            (&term[..pos], term[pos + 2..].parse().expect("power"))
        } else if let Some(coeff_text) = term.strip_suffix('x') {
            (coeff_text, 1)
        } else {
            (term, 0)
        };
        let coeff: u64 = if coeff_text.is_empty() {
            1
        } else {
            coeff_text.parse().expect("coefficient")
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = coeff;
    }
    coeffs
}

fn eval_mod(coeffs: &[u64], x: u64, q: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % q)
}

fn reversed(coeffs: &[u64]) -> Vec<u64> {
    let mut rev: Vec<u64> = coeffs.iter().rev().copied().collect();
    while rev.last() == Some(&0) {
        rev.pop();
    }
    rev
}

/// The two evaluation identities a product generator over Z_8 at length 7
/// must satisfy. With factors (x+1), f, f* and exponents (a1, a2, a3),
/// minimum mu: g(1) = 2^a1 because f(1) = f*(1) = 1, and g(-1) = 0
/// exactly when a1 > mu (the (x+1)^(a1-mu) factor vanishes at -1), with
/// 2-adic valuation exactly mu otherwise since f(-1) and f*(-1) are units.
fn eval_sanity(profile: [u32; 3], coeffs: &[u64]) -> bool {
    let a1 = profile[0];
    let mu = *profile.iter().min().expect("nonempty profile");
    let expected_at_one = if a1 >= 3 { 0 } else { 1u64 << a1 };
    if eval_mod(coeffs, 1, 8) != expected_at_one {
        return false;
    }
    let at_minus_one = eval_mod(coeffs, 7, 8);
    if a1 > mu || coeffs.is_empty() {
        at_minus_one == 0
    } else {
        at_minus_one % (1 << mu) == 0 && (at_minus_one >> mu) % 2 == 1
    }
}

#[test]
fn criterion_1_example_reproduction() {
    let started = Instant::now();
    let output = run_binary(&[
        "enumerate", "--p", "2", "--m", "3", "--n", "7", "--filter", "so",
    ]);
    let elapsed = started.elapsed();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).expect("UTF-8 output");

    let mut emitted_text: BTreeMap<[u32; 3], String> = BTreeMap::new();
    let mut emitted: BTreeMap<[u32; 3], Vec<u64>> = BTreeMap::new();
    for line in stdout.lines() {
        let (profile_part, generator_part) = line.split_once(' ').expect("profile and generator");
        let profile = parse_profile_triple(profile_part);
        emitted.insert(profile, parse_poly_ascending(generator_part));
        emitted_text.insert(profile, generator_part.to_string());
    }
    assert_eq!(emitted.len(), 20, "exactly 20 self-orthogonal codes");

    for (item, profile, printed_generator) in PRINTED_EXAMPLE {
        let ours = emitted.get(&profile).expect("profile was emitted");
        let ours_text = &emitted_text[&profile];

        // Every recomputed generator satisfies both structural identities:
        // the evaluations at x = 1 and x = -1, and the mirror-reciprocal
        // relation against the partner profile with the paired exponents
        // swapped.
        assert!(
            eval_sanity(profile, ours),
            "item {item}: recomputed generator fails evaluation sanity"
        );
        let partner_profile = [profile[0], profile[2], profile[1]];
        assert_eq!(
            reversed(ours),
            emitted[&partner_profile],
            "item {item}: recomputed generator fails the mirror identity"
        );

        if MISPRINTED_ITEMS.contains(&item) {
            assert_ne!(
                ours_text, printed_generator,
                "item {item}: recomputation should correct the misprint"
            );
            let printed_coeffs = parse_poly_ascending(printed_generator);
            let printed_holds_up = eval_sanity(profile, &printed_coeffs)
                && reversed(&printed_coeffs) == emitted[&partner_profile];
            assert!(
                !printed_holds_up,
                "item {item}: the printed value unexpectedly passes recomputation"
            );
        } else {
            assert_eq!(
                ours_text, printed_generator,
                "item {item}: must match the printed value exactly"
            );
        }
    }

    assert!(
        elapsed < Duration::from_secs(1),
        "runtime {elapsed:?} exceeds 1 s"
    );
    println!(
        "criterion 1: PASS (20 codes; 13 exact matches; 7 misprints corrected and \
         cross-validated; {} ms)",
        elapsed.as_millis()
    );
}

// ---------------------------------------------------------------------
// Criterion 2: the published Z_8 census table up to length 99.
// ---------------------------------------------------------------------

/// The published table, duplicated here verbatim so the gate does not
/// share a fixture with the binary it is checking:
/// (n, gamma, delta, trivial, nontrivial, self-dual count).
const PUBLISHED_TABLE: [(u64, u64, u64, u64, u64, u64); 50] = [
    (1, 1, 0, 2, 0, 1),
    (3, 2, 0, 4, 0, 1),
    (5, 2, 0, 4, 0, 1),
    (7, 1, 1, 8, 12, 4),
    (9, 3, 0, 8, 0, 1),
    (11, 2, 0, 4, 0, 1),
    (13, 2, 0, 4, 0, 1),
    (15, 3, 1, 32, 48, 4),
    (17, 3, 0, 8, 0, 1),
    (19, 2, 0, 4, 0, 1),
    (21, 2, 2, 64, 336, 16),
    (23, 1, 1, 8, 12, 4),
    (25, 3, 0, 8, 0, 1),
    (27, 2, 0, 16, 0, 1),
    (29, 2, 0, 4, 0, 1),
    (31, 1, 3, 128, 1872, 64),
    (33, 5, 0, 32, 0, 1),
    (35, 2, 2, 64, 336, 16),
    (37, 2, 0, 4, 0, 1),
    (39, 3, 1, 32, 48, 4),
    (41, 3, 0, 8, 0, 1),
    (43, 4, 0, 16, 0, 1),
    (45, 4, 2, 256, 1344, 16),
    (47, 1, 1, 8, 12, 4),
    (49, 1, 2, 32, 168, 16),
    (51, 4, 2, 256, 1344, 16),
    (53, 2, 0, 4, 0, 1),
    (55, 3, 1, 32, 48, 4),
    (57, 5, 0, 32, 0, 1),
    (59, 2, 0, 4, 0, 1),
    (61, 2, 0, 4, 0, 1),
    (63, 3, 5, 8192, 791808, 1024),
    (65, 7, 0, 128, 0, 1),
    (67, 2, 0, 4, 0, 1),
    (69, 2, 2, 64, 336, 16),
    (71, 1, 1, 8, 12, 4),
    (73, 1, 4, 512, 19488, 256),
    (75, 4, 2, 256, 1344, 16),
    (77, 2, 2, 64, 336, 16),
    (79, 1, 1, 8, 12, 4),
    (81, 5, 0, 32, 0, 1),
    (83, 2, 0, 4, 0, 1),
    (85, 4, 4, 4096, 155904, 256),
    (87, 3, 1, 32, 48, 4),
    (89, 1, 4, 512, 19488, 256),
    (91, 2, 4, 1024, 38976, 256),
    (93, 2, 6, 16384, 170240, 729),
    (95, 3, 1, 32, 48, 4),
    (97, 3, 0, 8, 0, 1),
    (99, 8, 0, 256, 0, 1),
];

struct TableRow {
    n: u64,
    gamma: u64,
    delta: u64,
    trivial: u64,
    nontrivial: u64,
    sd_formula: u64,
    diff: Option<String>,
}

fn parse_table_row(line: &str) -> TableRow {
    let fields: Vec<&str> = line.split(',').collect();
    assert!(
        fields.len() == 7 || fields.len() == 8,
        "unexpected field count in row: {line}"
    );
    let number = |i: usize| -> u64 { fields[i].parse().expect("numeric field") };
    TableRow {
        n: number(0),
        gamma: number(1),
        delta: number(2),
        trivial: number(3),
        nontrivial: number(4),
        sd_formula: number(5),
        diff: fields.get(7).map(|cell| {
            cell.strip_prefix("diff:")
                .expect("trailing cell is a diff annotation")
                .to_string()
        }),
    }
}

#[test]
fn criterion_2_table_reproduction() {
    let started = Instant::now();
    let output = run_binary(&[
        "table", "--p", "2", "--m", "3", "--n-max", "99", "--diff-paper",
    ]);
    let elapsed = started.elapsed();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).expect("UTF-8 output");

    let rows: Vec<TableRow> = stdout.lines().map(parse_table_row).collect();
    assert_eq!(rows.len(), 50);

    for (row, published) in rows.iter().zip(PUBLISHED_TABLE) {
        let (n, gamma, delta, trivial, nontrivial, self_dual) = published;
        assert_eq!(row.n, n, "row order must match the published table");
        match n {
            27 => {
                // Only the gamma entry of this row is disputed.
                assert_eq!(row.diff.as_deref(), Some("gamma"), "row 27 must be flagged");
                assert_ne!(row.gamma, gamma);
                assert_eq!(
                    (row.delta, row.trivial, row.nontrivial, row.sd_formula),
                    (delta, trivial, nontrivial, self_dual)
                );
            }
            93 => {
                // The nontrivial and self-dual counts of this row are disputed.
                assert_eq!(
                    row.diff.as_deref(),
                    Some("N_n;N_sd"),
                    "row 93 must be flagged"
                );
                assert_eq!((row.gamma, row.delta, row.trivial), (gamma, delta, trivial));
                assert_ne!(row.nontrivial, nontrivial);
                assert_ne!(row.sd_formula, self_dual);
            }
            _ => {
                assert!(row.diff.is_none(), "row {n} must not be flagged");
                assert_eq!(
                    (row.gamma, row.delta, row.trivial, row.nontrivial, row.sd_formula),
                    (gamma, delta, trivial, nontrivial, self_dual),
                    "row {n} must match the published values"
                );
            }
        }
        // The recomputed values satisfy the internal identities on every
        // row, flagged ones included.
        assert_eq!(
            row.trivial + row.nontrivial,
            2u64.pow(row.gamma as u32) * 10u64.pow(row.delta as u32),
            "row {n} violates N_t + N_n = 2^gamma * 10^delta"
        );
        assert_eq!(
            row.sd_formula,
            4u64.pow(row.delta as u32),
            "row {n} violates N_sd = 4^delta"
        );
    }

    assert!(
        elapsed < Duration::from_secs(10),
        "runtime {elapsed:?} exceeds 10 s"
    );
    println!(
        "criterion 2: PASS (50 rows; 48 match the published table; rows 27 and 93 \
         flagged with recomputed values; {} ms)",
        elapsed.as_millis()
    );
}

// ---------------------------------------------------------------------
// Criterion 3: census formulas vs exhaustive brute-force classification.
// ---------------------------------------------------------------------

fn self_dual_cardinality(p: u64, m: u32, n: u64) -> Option<BigUint> {
    let exponent = u64::from(m) * n;
    (exponent % 2 == 0).then(|| BigUint::from(p).pow((exponent / 2) as u32))
}

#[test]
fn criterion_3_formula_vs_enumeration() {
    let started = Instant::now();
    for (p, m, n) in CONFIGS {
        let ring = RingParams::new(p, m).expect("valid ring");
        let basis = FactorBasis::new(ring, n, ModulusKind::Shifted).expect("valid basis");
        let width = n as usize;
        let pivot_scalar = Poly::constant(ring, ring.pow_p(m.div_ceil(2)));
        let pivot_span = span_from_generators(&[pivot_scalar], ring, width);
        let half_size = self_dual_cardinality(p, m, n);

        let (mut so, mut trivial, mut nontrivial, mut self_dual) = (0u64, 0u64, 0u64, 0u64);
        for profile in enumerate_profiles(&basis, ProfileFilter::All) {
            let generator = profile
                .generator_polynomial(GeneratorForm::Reduced)
                .expect("shifted basis");
            let generators = [generator];
            if !bruteforce_self_orthogonal(&generators, ring, width) {
                continue;
            }
            so += 1;
            let span = span_from_generators(&generators, ring, width);
            if span.rows().iter().all(|row| pivot_span.contains(row)) {
                trivial += 1;
            } else {
                nontrivial += 1;
            }
            if half_size.as_ref() == Some(&span.cardinality()) {
                self_dual += 1;
            }
        }

        let (gamma, delta) = gamma_delta(p, n).expect("valid length");
        assert_eq!(
            BigUint::from(so),
            count_so(gamma, delta, m),
            "total self-orthogonal count at ({p},{m},{n})"
        );
        assert_eq!(
            BigUint::from(trivial),
            count_trivial(gamma, delta, m),
            "trivial count at ({p},{m},{n})"
        );
        assert_eq!(
            BigUint::from(nontrivial),
            count_nontrivial(gamma, delta, m),
            "nontrivial count at ({p},{m},{n})"
        );
        let (formula, actual) = count_self_dual(delta, m);
        assert_eq!(
            BigUint::from(self_dual),
            actual,
            "self-dual count at ({p},{m},{n})"
        );
        if m % 2 == 0 {
            assert_eq!(formula, actual);
        } else {
            assert!(actual.is_zero(), "no self-dual codes when m is odd");
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "runtime {elapsed:?} exceeds 1 min"
    );
    println!(
        "criterion 3: PASS (7 configurations swept exhaustively, all four counts \
         exact; {} ms)",
        elapsed.as_millis()
    );
}

// ---------------------------------------------------------------------
// Criterion 4: duality on random profiles.
// ---------------------------------------------------------------------

fn cyclic_shifts(generator: &Poly, n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|k| {
            (&Poly::monomial(generator.ring(), 1, k) * generator)
                .quotient_reduce(n)
                .coeff_vector(n)
        })
        .collect()
}

#[test]
fn criterion_4_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ddc0de);
    for (p, m, n) in CONFIGS {
        let ring = RingParams::new(p, m).expect("valid ring");
        let basis = FactorBasis::new(ring, n, ModulusKind::Shifted).expect("valid basis");
        let width = n as usize;
        let ambient = BigUint::from(p).pow(m * n as u32);
        for _ in 0..200 {
            let exponents: Vec<u32> = (0..basis.len()).map(|_| rng.random_range(0..=m)).collect();
            let profile = ExponentProfile::new(&basis, exponents).expect("valid profile");
            let dual = profile.dual();

            assert_eq!(
                profile.cardinality() * dual.cardinality(),
                ambient,
                "|C| * |C_dual| != p^(mn) at ({p},{m},{n}) profile {profile}"
            );
            let double_dual = dual.dual();
            assert_eq!(
                double_dual.exponents(),
                profile.exponents(),
                "dual is not an involution at ({p},{m},{n})"
            );

            let shifts = cyclic_shifts(
                &profile
                    .generator_polynomial(GeneratorForm::Reduced)
                    .expect("shifted basis"),
                width,
            );
            let dual_shifts = cyclic_shifts(
                &dual
                    .generator_polynomial(GeneratorForm::Reduced)
                    .expect("shifted basis"),
                width,
            );
            for u in &shifts {
                for v in &dual_shifts {
                    assert_eq!(
                        inner_product(u, v, ring).expect("equal lengths"),
                        0,
                        "non-orthogonal shifts at ({p},{m},{n}) profile {profile}"
                    );
                }
            }
        }
    }
    println!("criterion 4: PASS (200 random profiles x 7 configurations, exact)");
}

// ---------------------------------------------------------------------
// Criterion 5: factorization soundness against an independent count.
// ---------------------------------------------------------------------

fn euler_phi(mut value: u64) -> u64 {
    let mut result = value;
    let mut d = 2;
    while d * d <= value {
        if value % d == 0 {
            while value % d == 0 {
                value /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if value > 1 {
        result -= result / value;
    }
    result
}

fn multiplicative_order(base: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 1;
    }
    let reduced = base % modulus;
    let mut value = reduced;
    let mut order = 1;
    while value != 1 {
        value = value * reduced % modulus;
        order += 1;
    }
    order
}

/// Number of irreducible factors of x^n - 1 over F_p, summed over the
/// divisors of n: each divisor d contributes phi(d) primitive d-th roots
/// of unity grouped into orbits of size ord_d(p).
fn expected_factor_count(p: u64, n: u64) -> usize {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| (euler_phi(d) / multiplicative_order(p, d)) as usize)
        .sum()
}

#[test]
fn criterion_5_factorization_soundness() {
    let mut configs = CONFIGS.to_vec();
    configs.push((2, 3, 31));
    for (p, m, n) in configs {
        let ring = RingParams::new(p, m).expect("valid ring");
        for kind in [ModulusKind::Standard, ModulusKind::Shifted] {
            let basis = FactorBasis::new(ring, n, kind).expect("valid basis");
            let modulus = modulus_poly(ring, n, kind).expect("valid modulus");

            let mut product = Poly::one(ring);
            for factor in basis.factors() {
                assert!(factor.is_monic(), "non-monic factor at ({p},{m},{n},{kind})");
                assert!(
                    is_irreducible_mod_p(factor),
                    "reducible reduction at ({p},{m},{n},{kind})"
                );
                product = &product * factor;
            }
            assert_eq!(
                product, modulus,
                "factor product mismatch at ({p},{m},{n},{kind})"
            );
            assert_eq!(
                basis.gamma() + 2 * basis.delta(),
                basis.factors().len(),
                "gamma + 2*delta mismatch at ({p},{m},{n},{kind})"
            );
            assert_eq!(
                basis.factors().len(),
                expected_factor_count(p, n),
                "factor count vs divisor-sum formula at ({p},{m},{n},{kind})"
            );
        }
    }
    println!("criterion 5: PASS (8 configurations x 2 moduli, exact)");
}

// ---------------------------------------------------------------------
// Criterion 6: the existence condition for nontrivial codes.
// ---------------------------------------------------------------------

#[test]
fn criterion_6_existence_condition() {
    let mut checked = 0;
    for p in [2u64, 3] {
        for n in (1..=99u64).step_by(2) {
            if n % p == 0 {
                continue;
            }
            let exists = nontrivial_exists(p, n).expect("valid length");
            let (gamma, delta) = gamma_delta(p, n).expect("valid length");
            assert_eq!(exists, delta > 0, "delta criterion at p={p}, n={n}");
            for m in [1u32, 2, 3] {
                assert_eq!(
                    exists,
                    !count_nontrivial(gamma, delta, m).is_zero(),
                    "count criterion at p={p}, n={n}, m={m}"
                );
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 50 + 33);
    println!("criterion 6: PASS (83 lengths across p in {{2, 3}}, m in {{1, 2, 3}})");
}

// ---------------------------------------------------------------------
// Criterion 7: every self-dual code here is Type I.
// ---------------------------------------------------------------------

#[test]
fn criterion_7_type_i_classification() {
    let started = Instant::now();
    let budget = 10_000_000;
    for (p, m, n, expected_count) in [(2u64, 2u32, 7u64, 3usize), (3, 2, 13, 9)] {
        let ring = RingParams::new(p, m).expect("valid ring");
        let basis = FactorBasis::new(ring, n, ModulusKind::Shifted).expect("valid basis");
        let type_modulus = BigUint::from(p).pow(m + 1);
        let mut seen = 0usize;
        for profile in enumerate_profiles(&basis, ProfileFilter::SelfDual) {
            seen += 1;
            assert_eq!(
                classify_type(&profile, budget).expect("within budget"),
                CodeType::TypeI,
                "({p},{m},{n}) profile {profile} should be Type I"
            );
            let witness = type_ii_violation(&profile, budget)
                .expect("within budget")
                .expect("a Type I code yields a witness codeword");
            let generator = profile
                .generator_polynomial(GeneratorForm::Reduced)
                .expect("shifted basis");
            let span = span_from_generators(&[generator], ring, n as usize);
            assert!(
                span.contains(&witness),
                "witness is not a codeword at ({p},{m},{n}) profile {profile}"
            );
            let weight = euclidean_weight(&witness, ring);
            assert!(
                !(weight % &type_modulus).is_zero(),
                "witness weight divisible by p^(m+1) at ({p},{m},{n}) profile {profile}"
            );
        }
        assert_eq!(seen, expected_count, "self-dual count at ({p},{m},{n})");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "runtime {elapsed:?} exceeds 2 min"
    );
    println!(
        "criterion 7: PASS (3 + 9 self-dual codes, all Type I with verified \
         witnesses; {} ms)",
        elapsed.as_millis()
    );
}

// ---------------------------------------------------------------------
// Criterion 8: closed-form cardinality vs the span oracle.
// ---------------------------------------------------------------------

#[test]
fn criterion_8_cardinality_spot_check() {
    let ring = RingParams::new(2, 3).expect("valid ring");
    let basis = FactorBasis::new(ring, 7, ModulusKind::Shifted).expect("valid basis");
    let mut checked = 0;
    for profile in enumerate_profiles(&basis, ProfileFilter::All) {
        let generator = profile
            .generator_polynomial(GeneratorForm::Reduced)
            .expect("shifted basis");
        let span = span_from_generators(&[generator], ring, 7);
        assert_eq!(
            profile.cardinality(),
            span.cardinality(),
            "cardinality mismatch at profile {profile}"
        );
        checked += 1;
    }
    assert_eq!(checked, 64);
    println!("criterion 8: PASS (all 64 profiles at length 7 over Z_8, exact)");
}
