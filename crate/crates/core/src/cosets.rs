//! Cyclotomic cosets of p modulo n and their behaviour under negation.
//!
//! For gcd(n, p) = 1 the map i -> p*i mod n partitions Z_n into cosets
//! C_i = {i, pi, p^2 i, ...}. Negation i -> -i permutes the cosets; a coset
//! with -C_i = C_i is called self-paired. The counts of self-paired cosets
//! (gamma) and of unordered non-self-paired pairs (delta) drive every
//! counting formula downstream.

use crate::error::{Error, Result};
use crate::ring::gcd;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    p: u64,
    n: u64,
    /// Each coset sorted ascending; cosets ordered by smallest element.
    cosets: Vec<Vec<u64>>,
    /// `pairing[k]` is the index of the coset equal to -cosets[k].
    pairing: Vec<usize>,
}

/// Validates the standing length assumptions: p prime, n odd, gcd(n,p)=1.
pub(crate) fn check_length(p: u64, n: u64) -> Result<()> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::EvenLength { n });
    }
    if gcd(n, p) != 1 {
        return Err(Error::NonCoprime { p, n });
    }
    Ok(())
}

/// Computes the cyclotomic cosets of `p` modulo `n` together with the
/// negation pairing. Requires `n` odd and coprime to `p`.
pub fn cyclotomic_cosets(p: u64, n: u64) -> Result<CosetPartition> {
    check_length(p, n)?;
    let mut seen = vec![false; n as usize];
    let mut cosets: Vec<Vec<u64>> = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = start;
        loop {
            seen[j as usize] = true;
            coset.push(j);
            j = ((j as u128 * p as u128) % n as u128) as u64;
            if j == start {
                break;
            }
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    // cosets are already ordered by smallest element because `start` scans
    // upward and each coset is claimed at its minimum-unseen representative.
    let index_of = |elem: u64| -> usize {
        cosets
            .iter()
            .position(|c| c.binary_search(&elem).is_ok())
            .expect("negation permutes Z_n")
    };
    let pairing = cosets
        .iter()
        .map(|c| index_of((n - c[0]) % n))
        .collect();
    Ok(CosetPartition {
        p,
        n,
        cosets,
        pairing,
    })
}

impl CosetPartition {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        false // Z_n is nonempty for every valid n
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn coset(&self, k: usize) -> &[u64] {
        &self.cosets[k]
    }

    /// Index of the coset `-C_k`.
    pub fn paired_with(&self, k: usize) -> usize {
        self.pairing[k]
    }

    pub fn is_self_paired(&self, k: usize) -> bool {
        self.pairing[k] == k
    }

    /// Number of self-paired cosets.
    pub fn gamma(&self) -> usize {
        (0..self.len()).filter(|&k| self.is_self_paired(k)).count()
    }

    /// Number of unordered pairs {C, -C} with C != -C.
    pub fn delta(&self) -> usize {
        (self.len() - self.gamma()) / 2
    }

    /// The multiplicative order of `p` modulo `n` — the largest coset size.
    pub fn max_coset_size(&self) -> usize {
        self.cosets.iter().map(Vec::len).max().unwrap()
    }
}

/// The pair (gamma, delta) for p and n: the number of self-paired
/// cyclotomic cosets and the number of negation pairs.
pub fn gamma_delta(p: u64, n: u64) -> Result<(usize, usize)> {
    let part = cyclotomic_cosets(p, n)?;
    Ok((part.gamma(), part.delta()))
}

/// Whether -1 lies in the cyclic group generated by `p` modulo `n`.
///
/// When it does, every cyclotomic coset is self-paired (delta = 0) and
/// consequently no nontrivial self-orthogonal cyclic code of length n exists
/// over any Z_{p^m}. For n = 1 the group is trivial yet delta = 0 too, so
/// this reports false.
pub fn nontrivial_exists(p: u64, n: u64) -> Result<bool> {
    check_length(p, n)?;
    if n == 1 {
        return Ok(false);
    }
    let mut j = p % n;
    loop {
        if j == n - 1 {
            return Ok(false);
        }
        if j == 1 {
            return Ok(true);
        }
        j = ((j as u128 * p as u128) % n as u128) as u64;
    }
}
