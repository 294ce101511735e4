//! Minimal genus `g(m,e)` and minimal Frobenius number `F(m,e)` over
//! `L(m,e)`, the semigroups with multiplicity `m` and embedding dimension `e`.
//!
//! Two independent routes exist for each quantity:
//!
//! * the multiplicity tree: genus grows by one per level and the Frobenius
//!   number strictly increases along every edge, while the embedding
//!   dimension never grows going down, which bounds both searches;
//! * the packed family `C(m,e)`: the packing map never raises either
//!   invariant, so both minima are attained there, and the full set of
//!   Frobenius minimisers is recovered by walking each minimising class.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::packed::{class_min_frobenius, enumerate_packed};
use crate::semigroup::{interval_frobenius, NumericalSemigroup};
use crate::variety_tree::{expand, root};

/// Which of the three cases `L(m,e)` falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Existence {
    Empty,
    OnlyNaturals,
    NonEmpty,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::Empty => "the family is empty",
            Existence::OnlyNaturals => "the family is {ℕ}",
            Existence::NonEmpty => "the family is non-empty",
        })
    }
}

pub fn existence(m: u64, e: u64) -> Existence {
    if m < e || e == 0 {
        Existence::Empty
    } else if e == 1 {
        if m == 1 {
            Existence::OnlyNaturals
        } else {
            Existence::Empty
        }
    } else {
        Existence::NonEmpty
    }
}

fn check_searchable(m: u64, e: u64) -> Result<()> {
    if m == 0 || e == 0 {
        return Err(Error::BadDimension { m, e });
    }
    match existence(m, e) {
        Existence::NonEmpty => Ok(()),
        other => Err(Error::Family {
            m,
            e,
            existence: other,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchKind {
    Genus,
    Frobenius,
}

/// A minimum over `L(m,e)` and the semigroups attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub kind: SearchKind,
    pub m: u64,
    pub e: u64,
    pub value: i64,
    pub minimizers: Vec<NumericalSemigroup>,
    /// Tree level `P` of the minimisers (genus searches only).
    pub level: Option<u64>,
    /// Number of semigroups built during the search.
    pub explored: u64,
}

/// A semigroup paired with its Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incumbent {
    pub semigroup: NumericalSemigroup,
    pub frob: i64,
}

impl From<NumericalSemigroup> for Incumbent {
    fn from(semigroup: NumericalSemigroup) -> Self {
        let frob = semigroup.frobenius();
        Incumbent { semigroup, frob }
    }
}

/// Breadth-first search of the multiplicity tree; the first level meeting
/// `L(m,e)` gives `g(m,e) = m − 1 + P`.
///
/// Nodes with embedding dimension below `e` are not expanded: no descendant
/// can climb back to `e`.
pub fn min_genus(m: u64, e: u64) -> Result<SearchOutcome> {
    check_searchable(m, e)?;
    let mut frontier = BTreeSet::from([root(m)]);
    let mut explored = 1u64;
    let mut k = 0u64;
    loop {
        let hits: Vec<NumericalSemigroup> = frontier
            .iter()
            .filter(|s| s.embedding_dim() == e)
            .cloned()
            .collect();
        if !hits.is_empty() {
            return Ok(SearchOutcome {
                kind: SearchKind::Genus,
                m,
                e,
                value: (m - 1 + k) as i64,
                minimizers: hits,
                level: Some(k),
                explored,
            });
        }
        frontier = expand(&frontier, |t| t.embedding_dim() >= e);
        explored += frontier.len() as u64;
        k += 1;
        debug_assert!(!frontier.is_empty(), "⟨m,…,m+e−1⟩ is always reached");
    }
}

/// `g(m,e)` as the least genus in `C(m,e)`; the packed minimisers are all the
/// minimisers in `L(m,e)`.
pub fn min_genus_packed(m: u64, e: u64) -> Result<SearchOutcome> {
    check_searchable(m, e)?;
    let family = enumerate_packed(m, e)?;
    let explored = family.members.len() as u64;
    let value = family
        .members
        .iter()
        .map(NumericalSemigroup::genus)
        .min()
        .expect("C(m,e) is non-empty");
    let minimizers = family
        .members
        .into_iter()
        .filter(|s| s.genus() == value)
        .collect();
    Ok(SearchOutcome {
        kind: SearchKind::Genus,
        m,
        e,
        value: value as i64,
        minimizers,
        level: Some(value - (m - 1)),
        explored,
    })
}

/// Tree search for `F(m,e)` with a shrinking Frobenius ceiling `α`, starting
/// from `F(⟨m,…,m+e−1⟩)`.
///
/// Each round keeps the sons with `F ≤ α` and `e(S) ≥ e`; those with
/// `e(S) = e` lower `α` and join the incumbent set, which is then cut down to
/// `F = α`. The search stops when a round keeps nothing. The root is an
/// incumbent from the start when `e = m`.
pub fn min_frobenius(m: u64, e: u64) -> Result<SearchOutcome> {
    check_searchable(m, e)?;
    let start = root(m);
    let mut alpha = interval_frobenius(m, e)?;
    let mut incumbents: BTreeSet<Incumbent> = BTreeSet::new();
    if start.embedding_dim() == e {
        incumbents.insert(start.clone().into());
    }
    let mut active = BTreeSet::from([start]);
    let mut explored = 1u64;
    loop {
        let ceiling = alpha;
        let kept = expand(&active, |t| {
            t.frobenius() <= ceiling && t.embedding_dim() >= e
        });
        explored += kept.len() as u64;
        if kept.is_empty() {
            break;
        }
        let found: Vec<Incumbent> = kept
            .iter()
            .filter(|s| s.embedding_dim() == e)
            .cloned()
            .map(Incumbent::from)
            .collect();
        alpha = found
            .iter()
            .map(|c| c.frob)
            .min()
            .unwrap_or(alpha)
            .min(alpha);
        incumbents.extend(found);
        incumbents.retain(|c| c.frob == alpha);
        active = kept;
    }
    assert!(
        !incumbents.is_empty(),
        "⟨m,…,m+e−1⟩ attains the initial ceiling"
    );
    Ok(SearchOutcome {
        kind: SearchKind::Frobenius,
        m,
        e,
        value: alpha,
        minimizers: incumbents.into_iter().map(|c| c.semigroup).collect(),
        level: None,
        explored,
    })
}

/// `F(m,e)` as the least Frobenius number in `C(m,e)`, with the packed
/// semigroups attaining it. Non-packed minimisers are not included; see
/// [`min_frobenius_full_set`].
pub fn min_frobenius_packed(m: u64, e: u64) -> Result<SearchOutcome> {
    check_searchable(m, e)?;
    let family = enumerate_packed(m, e)?;
    let explored = family.members.len() as u64;
    let value = family
        .members
        .iter()
        .map(NumericalSemigroup::frobenius)
        .min()
        .expect("C(m,e) is non-empty");
    let minimizers = family
        .members
        .into_iter()
        .filter(|s| s.frobenius() == value)
        .collect();
    Ok(SearchOutcome {
        kind: SearchKind::Frobenius,
        m,
        e,
        value,
        minimizers,
        level: None,
        explored,
    })
}

pub fn min_frobenius_value_packed(m: u64, e: u64) -> Result<i64> {
    min_frobenius_packed(m, e).map(|o| o.value)
}

/// Every semigroup of `L(m,e)` with Frobenius number `F(m,e)`: the packed
/// minimisers together with the members of their classes that keep the
/// same Frobenius number.
pub fn min_frobenius_full_set(m: u64, e: u64) -> Result<SearchOutcome> {
    let packed = min_frobenius_packed(m, e)?;
    let mut explored = packed.explored;
    let mut all = BTreeSet::new();
    for s in &packed.minimizers {
        let class = class_min_frobenius(s)?;
        explored += class.len() as u64 - 1;
        all.extend(class);
    }
    Ok(SearchOutcome {
        minimizers: all.into_iter().collect(),
        explored,
        ..packed
    })
}

/// A semigroup with `e·g > (e−1)(F+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfViolation {
    pub semigroup: NumericalSemigroup,
    pub lhs: i128,
    pub rhs: i128,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WilfReport {
    pub checked: usize,
    /// ℕ is skipped: both sides vanish.
    pub skipped: usize,
    pub violations: Vec<WilfViolation>,
}

impl WilfReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `e(S)·g(S) ≤ (e(S)−1)(F(S)+1)` on every input.
pub fn wilf_audit<'a, I>(semigroups: I) -> WilfReport
where
    I: IntoIterator<Item = &'a NumericalSemigroup>,
{
    let mut report = WilfReport::default();
    for s in semigroups {
        if s.is_naturals() {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let e = s.embedding_dim() as i128;
        let lhs = e * s.genus() as i128;
        let rhs = (e - 1) * (s.frobenius() as i128 + 1);
        if lhs > rhs {
            report.violations.push(WilfViolation {
                semigroup: s.clone(),
                lhs,
                rhs,
            });
        }
    }
    report
}
