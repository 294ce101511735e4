//! The tree of all numerical semigroups with multiplicity `m`.
//!
//! The root is `⟨m, m+1, …, 2m−1⟩` and the sons of `S` are the semigroups
//! `S \ {x}` for minimal generators `x > F(S)` with `x ≠ m`. Every semigroup
//! of multiplicity `m` appears exactly once, at level `g(S) − (m − 1)`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::semigroup::{AperyTable, NumericalSemigroup};

/// `N(k, G(L(m)))`: the semigroups at depth `k`, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierLevel {
    pub level_index: u64,
    pub members: BTreeSet<NumericalSemigroup>,
}

impl FrontierLevel {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.members.iter()
    }
}

/// `⟨m, …, 2m−1⟩`, or ℕ when `m = 1`.
pub fn root(m: u64) -> NumericalSemigroup {
    assert!(m >= 1, "multiplicity must be positive");
    let entries = std::iter::once(0).chain(m + 1..2 * m).collect();
    NumericalSemigroup::from_apery(AperyTable::from_entries(m, entries))
}

/// Removes a minimal generator `x > F(S)`, `x ≠ m(S)`. Since `x` is the
/// least element of its residue class and every integer above `x` stays in
/// the semigroup, only that Apéry entry moves, from `x` to `x + m`.
fn remove_generator(s: &NumericalSemigroup, x: u64) -> NumericalSemigroup {
    let m = s.multiplicity();
    let mut entries = s.apery().entries().to_vec();
    let slot = (x % m) as usize;
    debug_assert_eq!(entries[slot], x);
    entries[slot] = x + m;
    NumericalSemigroup::from_apery(AperyTable::from_entries(m, entries))
}

/// The sons of `S` in the multiplicity tree, in canonical order.
pub fn sons(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let m = s.multiplicity();
    let f = s.frobenius();
    let mut out: Vec<NumericalSemigroup> = s
        .min_gens()
        .iter()
        .filter(|&&x| x != m && x as i64 > f)
        .map(|&x| remove_generator(s, x))
        .collect();
    out.sort();
    out
}

/// Expands a whole level. Members whose `keep` test fails are dropped before
/// their sons are generated.
pub(crate) fn expand<F>(
    members: &BTreeSet<NumericalSemigroup>,
    keep: F,
) -> BTreeSet<NumericalSemigroup>
where
    F: Fn(&NumericalSemigroup) -> bool + Sync,
{
    members
        .par_iter()
        .flat_map_iter(|s| sons(s).into_iter().filter(|t| keep(t)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Lazily yields `N(0), N(1), …` for a fixed multiplicity.
#[derive(Debug, Clone)]
pub struct Levels {
    next: Option<FrontierLevel>,
}

impl Iterator for Levels {
    type Item = FrontierLevel;

    fn next(&mut self) -> Option<FrontierLevel> {
        let current = self.next.take()?;
        let members = expand(&current.members, |_| true);
        self.next = Some(FrontierLevel {
            level_index: current.level_index + 1,
            members,
        });
        Some(current)
    }
}

/// Breadth-first levels of the tree of multiplicity `m`. The stream never
/// ends; for `m = 1` every level after the first is empty.
pub fn bfs_levels(m: u64) -> Levels {
    Levels {
        next: Some(FrontierLevel {
            level_index: 0,
            members: BTreeSet::from([root(m)]),
        }),
    }
}

/// `N(k, G(L(m)))`.
pub fn level(m: u64, k: u64) -> FrontierLevel {
    bfs_levels(m)
        .nth(k as usize)
        .expect("level stream is infinite")
}
