//! The numerical semigroup value type and per-semigroup arithmetic.
//!
//! A [`NumericalSemigroup`] is stored as its minimal system of generators
//! together with the Apéry table of its multiplicity. Everything else
//! (membership, Frobenius number, genus) is read off that table: with
//! `w(i) = k_i·m + i` the least element congruent to `i`, an integer `n ≥ 0`
//! lies in `S` iff `n ≥ w(n mod m)`, `F(S) = max w(i) − m` and
//! `g(S) = k_1 + … + k_{m−1}`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gcd;

/// Least elements of a semigroup per residue class modulo a nonzero element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AperyTable {
    modulus: u64,
    entries: Vec<u64>,
}

impl AperyTable {
    /// Builds a table from entries indexed by residue.
    ///
    /// Panics if the table does not have one entry per residue, if entry 0 is
    /// not 0, or if some entry lies in the wrong class.
    pub fn from_entries(modulus: u64, entries: Vec<u64>) -> Self {
        assert!(modulus >= 1 && entries.len() as u64 == modulus);
        assert_eq!(entries[0], 0);
        for (i, &w) in entries.iter().enumerate() {
            assert_eq!(w % modulus, i as u64, "entry {w} is not in class {i}");
        }
        AperyTable { modulus, entries }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `w(i)` for `i = 0..n`, indexed by residue.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `k_i` with `w(i) = k_i·n + i`.
    pub fn coefficients(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(move |&w| w / self.modulus)
    }

    /// The entries as a sorted set.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        n >= self.entries[(n % self.modulus) as usize]
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

/// A numerical semigroup, identified by its minimal system of generators.
///
/// Equality, ordering and hashing only look at the minimal generators, so
/// the canonical order is lexicographic on `min_gens`.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    min_gens: Vec<u64>,
    apery: AperyTable,
    frobenius: i64,
    genus: u64,
}

impl NumericalSemigroup {
    /// `⟨1⟩ = ℕ`.
    pub fn naturals() -> Self {
        Self::from_apery(AperyTable::from_entries(1, vec![0]))
    }

    /// Builds the semigroup whose Apéry table with respect to its
    /// multiplicity is `apery`. The modulus must be the least positive
    /// element, i.e. every nonzero entry must exceed it.
    pub(crate) fn from_apery(apery: AperyTable) -> Self {
        let m = apery.modulus;
        debug_assert!(apery.entries[1..].iter().all(|&w| w > m));

        // A nonzero Apéry element is a minimal generator iff it is not the sum
        // of two nonzero Apéry elements; both summands of such a sum are
        // necessarily in Ap(S, m) themselves.
        let mut nonzero: Vec<u64> = apery.entries[1..].to_vec();
        nonzero.sort_unstable();
        let mut min_gens = Vec::with_capacity(nonzero.len() + 1);
        min_gens.push(m);
        for (idx, &w) in nonzero.iter().enumerate() {
            let decomposable = nonzero[..idx]
                .iter()
                .take_while(|&&u| 2 * u <= w)
                .any(|&u| apery.contains((w - u) as i64));
            if !decomposable {
                min_gens.push(w);
            }
        }

        let frobenius = apery.max_entry() as i64 - m as i64;
        let genus = apery.coefficients().sum();
        NumericalSemigroup {
            min_gens,
            apery,
            frobenius,
            genus,
        }
    }

    /// `msg(S)`, strictly increasing.
    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    /// `m(S)`.
    pub fn multiplicity(&self) -> u64 {
        self.min_gens[0]
    }

    /// `e(S)`.
    pub fn embedding_dim(&self) -> u64 {
        self.min_gens.len() as u64
    }

    /// `M(S)`, the largest minimal generator.
    pub fn max_gen(&self) -> u64 {
        *self.min_gens.last().expect("min_gens is never empty")
    }

    /// Apéry table with respect to the multiplicity.
    pub fn apery(&self) -> &AperyTable {
        &self.apery
    }

    /// `F(S)`; −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `g(S)`.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.min_gens == [1]
    }

    pub fn contains(&self, n: i64) -> bool {
        self.apery.contains(n)
    }

    /// The gaps of `S` in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius.max(0) as u64)
            .filter(|&n| !self.contains(n as i64))
            .collect()
    }

    /// The elements of `S` below `bound`.
    pub fn small_elements(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&n| self.contains(n as i64)).collect()
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.min_gens == other.min_gens
    }
}

impl Eq for NumericalSemigroup {}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.min_gens.cmp(&other.min_gens)
    }
}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min_gens.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, g) in self.min_gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("⟩")
    }
}

/// Shortest representable element in each residue class mod `modulus`,
/// using the round-robin relaxation: each generator's residue walk is a union
/// of cycles, and one pass around each cycle starting at its current minimum
/// settles that generator. `None` marks unreachable classes.
fn residue_minima(generators: &[u64], modulus: u64) -> Vec<Option<u64>> {
    let n = modulus as usize;
    let mut best = vec![u64::MAX; n];
    best[0] = 0;
    for &a in generators {
        let step = (a % modulus) as usize;
        if step == 0 {
            continue;
        }
        let cycles = gcd(step as u64, modulus) as usize;
        let len = n / cycles;
        for start in 0..cycles {
            let mut r = start;
            let mut min_r = start;
            for _ in 0..len {
                if best[r] < best[min_r] {
                    min_r = r;
                }
                r = (r + step) % n;
            }
            if best[min_r] == u64::MAX {
                continue;
            }
            let mut r = min_r;
            for _ in 0..len {
                let next = (r + step) % n;
                let cand = best[r].saturating_add(a);
                if cand < best[next] {
                    best[next] = cand;
                }
                r = next;
            }
        }
    }
    best.into_iter()
        .map(|w| (w != u64::MAX).then_some(w))
        .collect()
}

fn normalize(generators: &[u64]) -> Result<Vec<u64>> {
    if generators.is_empty() {
        return Err(Error::EmptyInput);
    }
    if generators.contains(&0) {
        return Err(Error::InvalidGenerator);
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
    if g != 1 {
        return Err(Error::NotNumerical { gcd: g });
    }
    Ok(gens)
}

/// `⟨generators⟩`, reduced to its minimal system of generators.
pub fn make_semigroup(generators: &[u64]) -> Result<NumericalSemigroup> {
    let gens = normalize(generators)?;
    let m = gens[0];
    let entries = residue_minima(&gens[1..], m)
        .into_iter()
        .map(|w| w.expect("gcd 1 reaches every residue"))
        .collect();
    Ok(NumericalSemigroup::from_apery(AperyTable::from_entries(
        m, entries,
    )))
}

/// `Ap(S, n)` for a nonzero element `n` of `S`.
pub fn apery_set(s: &NumericalSemigroup, n: u64) -> Result<AperyTable> {
    if n == 0 || !s.contains(n as i64) {
        return Err(Error::NotMember { n });
    }
    if n == s.multiplicity() {
        return Ok(s.apery.clone());
    }
    let entries = residue_minima(s.min_gens(), n)
        .into_iter()
        .map(|w| w.expect("gcd 1 reaches every residue"))
        .collect();
    Ok(AperyTable::from_entries(n, entries))
}

/// Whether `n` is a non-negative integer combination of `generators`. The
/// generators need not be coprime.
pub fn monoid_contains(generators: &[u64], n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let gens: Vec<usize> = generators
        .iter()
        .filter(|&&g| g != 0 && g <= n)
        .map(|&g| g as usize)
        .collect();
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for x in 1..=n {
        reach[x] = gens.iter().any(|&g| g <= x && reach[x - g]);
    }
    reach[n]
}

/// Frobenius number of `⟨n1, n2⟩`: `n1·n2 − n1 − n2`.
pub fn sylvester_frobenius(n1: u64, n2: u64) -> Result<i64> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidGenerator);
    }
    if gcd(n1, n2) != 1 {
        return Err(Error::NotCoprime { a: n1, b: n2 });
    }
    Ok((n1 * n2) as i64 - n1 as i64 - n2 as i64)
}

fn check_dimension(m: u64, e: u64) -> Result<()> {
    if e < 2 || m < e {
        return Err(Error::BadDimension { m, e });
    }
    Ok(())
}

/// Apéry table of `⟨m, m+1, …, m+e−1⟩` with respect to `m`, from the block
/// description: writing `m − 1 = q(e−1) + r`, block `j = 1..=q` is
/// `j·m + (j−1)(e−1) + 1 ..= j·m + j(e−1)` and a final partial block holds
/// `r` elements starting at `(q+1)m + q(e−1) + 1`.
pub fn interval_apery(m: u64, e: u64) -> Result<AperyTable> {
    check_dimension(m, e)?;
    let q = (m - 1) / (e - 1);
    let r = (m - 1) % (e - 1);
    let mut entries = vec![0; m as usize];
    let blocks = (1..=q)
        .map(|j| (j * m + (j - 1) * (e - 1) + 1, e - 1))
        .chain(std::iter::once(((q + 1) * m + q * (e - 1) + 1, r)));
    for (first, len) in blocks {
        for w in first..first + len {
            entries[(w % m) as usize] = w;
        }
    }
    Ok(AperyTable::from_entries(m, entries))
}

/// Genus of `⟨m, …, m+e−1⟩` in closed form:
/// `(q+1)·(q(e−1)/2 + r)` with `q = ⌊(m−1)/(e−1)⌋`, `r = (m−1) mod (e−1)`.
pub fn interval_genus(m: u64, e: u64) -> Result<u64> {
    check_dimension(m, e)?;
    let q = (m - 1) / (e - 1);
    let r = (m - 1) % (e - 1);
    Ok((q + 1) * q * (e - 1) / 2 + (q + 1) * r)
}

/// Frobenius number of `⟨m, …, m+e−1⟩`: `⌈(m−1)/(e−1)⌉·m − 1`.
pub fn interval_frobenius(m: u64, e: u64) -> Result<i64> {
    check_dimension(m, e)?;
    let c = (m - 1).div_ceil(e - 1);
    Ok((c * m) as i64 - 1)
}
