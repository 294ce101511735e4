//! Brute-force ground truth. Nothing here touches Apéry tables or the
//! membership test of [`NumericalSemigroup`]; only additive closure over
//! explicit boolean tables is used. Slow by construction.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gcd;
use crate::semigroup::{make_semigroup, NumericalSemigroup};

/// Largest table the sieve will allocate.
pub const SIEVE_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveResult {
    pub generators: Vec<u64>,
    pub bound: u64,
    pub reachable: Vec<bool>,
    pub frobenius: i64,
    pub genus: u64,
    /// A run of `min(generators)` consecutive members was seen below `bound`.
    pub certified: bool,
}

/// Reachability by dynamic programming, doubling the table until a run of
/// `min(generators)` consecutive members proves every later integer is
/// reachable.
pub fn sieve(generators: &[u64], bound: Option<u64>) -> Result<SieveResult> {
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
    let smallest = gens[0];
    let second = gens.get(1).copied().unwrap_or(smallest);
    let mut bound = bound
        .unwrap_or(smallest * second + gens[gens.len() - 1])
        .max(1);
    loop {
        if bound > SIEVE_CAP {
            return Err(Error::Uncertified { bound });
        }
        let size = bound as usize;
        let mut reachable = vec![false; size];
        reachable[0] = true;
        for x in 1..size {
            reachable[x] = gens
                .iter()
                .any(|&a| a as usize <= x && reachable[x - a as usize]);
        }
        let mut run = 0u64;
        let mut run_start = None;
        for (x, &r) in reachable.iter().enumerate() {
            if r {
                run += 1;
                if run == smallest {
                    run_start = Some(x + 1 - smallest as usize);
                    break;
                }
            } else {
                run = 0;
            }
        }
        if let Some(start) = run_start {
            let below = &reachable[..start];
            let frobenius = below.iter().rposition(|&r| !r).map_or(-1, |x| x as i64);
            let genus = below.iter().filter(|&&r| !r).count() as u64;
            return Ok(SieveResult {
                generators: gens,
                bound,
                reachable,
                frobenius,
                genus,
                certified: true,
            });
        }
        bound *= 2;
    }
}

struct GapSearch {
    m: usize,
    top: usize,
    max_gaps: Option<usize>,
    in_s: Vec<bool>,
    found: BTreeSet<NumericalSemigroup>,
}

impl GapSearch {
    fn member(&self, x: usize) -> bool {
        x > self.top || self.in_s[x]
    }

    fn forced(&self, x: usize) -> bool {
        (self.m..=x / 2).any(|a| self.in_s[a] && self.in_s[x - a])
    }

    fn run(&mut self, x: usize, gaps: usize) {
        if x > self.top {
            self.emit();
            return;
        }
        if self.forced(x) {
            self.in_s[x] = true;
            self.run(x + 1, gaps);
            return;
        }
        if self.max_gaps.is_none_or(|g| gaps < g) {
            self.in_s[x] = false;
            self.run(x + 1, gaps + 1);
        }
        self.in_s[x] = true;
        self.run(x + 1, gaps);
    }

    fn emit(&mut self) {
        // Minimal generators lie below F + m ≤ top + m.
        let limit = self.top + self.m;
        let mut msg = Vec::new();
        for s in 1..=limit {
            if !self.member(s) {
                continue;
            }
            let decomposable = (1..=s / 2).any(|a| self.member(a) && self.member(s - a));
            if !decomposable {
                msg.push(s as u64);
            }
        }
        let sg = make_semigroup(&msg).expect("closed gap set with finite complement");
        self.found.insert(sg);
    }
}

fn enumerate(
    m: u64,
    max_genus: Option<u64>,
    max_frobenius: Option<u64>,
) -> BTreeSet<NumericalSemigroup> {
    assert!(m >= 1);
    if m == 1 {
        return BTreeSet::from([NumericalSemigroup::naturals()]);
    }
    let base_gaps = (m - 1) as usize;
    if max_genus.is_some_and(|g| (g as usize) < base_gaps)
        || max_frobenius.is_some_and(|f| f < m - 1)
    {
        return BTreeSet::new();
    }
    // With genus g every gap is at most 2g − 1.
    let top = match (max_genus, max_frobenius) {
        (Some(g), Some(f)) => (2 * g).saturating_sub(1).min(f),
        (Some(g), None) => (2 * g).saturating_sub(1),
        (None, Some(f)) => f,
        (None, None) => panic!("enumeration needs a bound"),
    }
    .max(m) as usize;
    let mut in_s = vec![false; top + 1];
    in_s[0] = true;
    in_s[m as usize] = true;
    let mut search = GapSearch {
        m: m as usize,
        top,
        max_gaps: max_genus.map(|g| g as usize),
        in_s,
        found: BTreeSet::new(),
    };
    search.run(m as usize + 1, base_gaps);
    search.found
}

/// Every numerical semigroup with multiplicity `m` and genus at most
/// `genus_bound`, by direct search over gap sets.
pub fn enumerate_by_genus(m: u64, genus_bound: u64) -> BTreeSet<NumericalSemigroup> {
    enumerate(m, Some(genus_bound), None)
}

/// Every numerical semigroup with multiplicity `m` and Frobenius number at
/// most `frobenius_bound`.
pub fn enumerate_by_frobenius(m: u64, frobenius_bound: u64) -> BTreeSet<NumericalSemigroup> {
    enumerate(m, None, Some(frobenius_bound))
}

/// `(g(m,e), minimisers)` by exhaustive enumeration up to the genus of
/// `⟨m, …, m+e−1⟩`.
pub fn exhaustive_min_genus(m: u64, e: u64) -> Result<(u64, Vec<NumericalSemigroup>)> {
    let bound = crate::semigroup::interval_genus(m, e)?;
    let family: Vec<_> = enumerate_by_genus(m, bound)
        .into_iter()
        .filter(|s| s.embedding_dim() == e)
        .collect();
    let best = family
        .iter()
        .map(|s| s.genus())
        .min()
        .expect("interval semigroup is in range");
    Ok((
        best,
        family.into_iter().filter(|s| s.genus() == best).collect(),
    ))
}

/// `(F(m,e), minimisers)` by exhaustive enumeration up to the Frobenius
/// number of `⟨m, …, m+e−1⟩`.
pub fn exhaustive_min_frobenius(m: u64, e: u64) -> Result<(i64, Vec<NumericalSemigroup>)> {
    let bound = crate::semigroup::interval_frobenius(m, e)?;
    let family: Vec<_> = enumerate_by_frobenius(m, bound as u64)
        .into_iter()
        .filter(|s| s.embedding_dim() == e)
        .collect();
    let best = family
        .iter()
        .map(|s| s.frobenius())
        .min()
        .expect("interval semigroup is in range");
    Ok((
        best,
        family
            .into_iter()
            .filter(|s| s.frobenius() == best)
            .collect(),
    ))
}
