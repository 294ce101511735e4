//! Packed semigroups and the classes of the packing map.
//!
//! `S` is packed when `msg(S) ⊆ [m, 2m−1]`. The packing map
//! `θ(S) = ⟨{m} + {x mod m : x ∈ msg(S)}⟩` sends every semigroup of
//! `L(m,e)` to a packed one with the same multiplicity and embedding
//! dimension, never raising the genus or the Frobenius number. The fibres
//! `[S] = θ⁻¹(S)` partition `L(m,e)`; each fibre is a tree rooted at its
//! packed member, which is what [`class_min_frobenius`] walks.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gcd;
use crate::semigroup::{make_semigroup, monoid_contains, NumericalSemigroup};

/// `C(m,e)`, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedFamily {
    pub m: u64,
    pub e: u64,
    pub members: Vec<NumericalSemigroup>,
}

/// One run of the class search: the accepted set `A` and the frontier `B`.
#[derive(Debug, Clone)]
pub struct ClassSearchState {
    pub representative: NumericalSemigroup,
    pub accepted: BTreeSet<NumericalSemigroup>,
    pub frontier: BTreeSet<NumericalSemigroup>,
}

impl ClassSearchState {
    pub fn new(representative: NumericalSemigroup) -> Self {
        let start = BTreeSet::from([representative.clone()]);
        ClassSearchState {
            representative,
            accepted: start.clone(),
            frontier: start,
        }
    }

    /// Advances one round. Returns `false` once no son of the frontier keeps
    /// the representative's Frobenius number.
    pub fn step(&mut self) -> bool {
        let target = self.representative.frobenius();
        let next: BTreeSet<NumericalSemigroup> = self
            .frontier
            .par_iter()
            .flat_map_iter(|p| {
                class_sons(p)
                    .into_iter()
                    .filter(|h| h.frobenius() == target)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        if next.is_empty() {
            self.frontier.clear();
            return false;
        }
        self.accepted.extend(next.iter().cloned());
        self.frontier = next;
        true
    }
}

fn check_dimension(m: u64, e: u64) -> Result<()> {
    if e < 2 || m < e {
        return Err(Error::BadDimension { m, e });
    }
    Ok(())
}

fn push_subsets(
    m: u64,
    need: usize,
    next: u64,
    running_gcd: u64,
    chosen: &mut Vec<u64>,
    out: &mut Vec<NumericalSemigroup>,
) {
    if need == 0 {
        if running_gcd == 1 {
            let gens: Vec<u64> = std::iter::once(m)
                .chain(chosen.iter().map(|a| m + a))
                .collect();
            out.push(make_semigroup(&gens).expect("gcd checked"));
        }
        return;
    }
    // Leave room for the remaining picks.
    let last = m - need as u64;
    for a in next..=last {
        chosen.push(a);
        push_subsets(m, need - 1, a + 1, gcd(running_gcd, a), chosen, out);
        chosen.pop();
    }
}

/// All packed semigroups with multiplicity `m` and embedding dimension `e`:
/// `⟨{m} + (A ∪ {0})⟩` for `(e−1)`-subsets `A ⊆ {1, …, m−1}` with
/// `gcd(A ∪ {m}) = 1`, in lexicographic order of `A`.
pub fn enumerate_packed(m: u64, e: u64) -> Result<PackedFamily> {
    check_dimension(m, e)?;
    let mut members = Vec::new();
    push_subsets(m, (e - 1) as usize, 1, m, &mut Vec::new(), &mut members);
    Ok(PackedFamily { m, e, members })
}

pub fn is_packed(s: &NumericalSemigroup) -> bool {
    let m = s.multiplicity();
    s.min_gens().iter().all(|&x| x < 2 * m)
}

/// The packing map `θ`.
pub fn pack(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_naturals() {
        return Err(Error::Degenerate);
    }
    let m = s.multiplicity();
    let gens: Vec<u64> = s.min_gens().iter().map(|x| m + x % m).collect();
    let packed = make_semigroup(&gens)?;
    debug_assert_eq!(packed.embedding_dim(), s.embedding_dim());
    Ok(packed)
}

/// Sons of `P` in the tree of its class: with `msg(P) = {n_1 < … < n_e}`,
/// replace `n_k` (`k ≥ 2`) by `n_k + n_1` whenever `n_k + n_1 > n_e` and
/// `n_k + n_1` is not in the monoid generated by the other generators.
pub fn class_sons(p: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let gens = p.min_gens();
    if gens.len() < 2 {
        return Vec::new();
    }
    let n1 = gens[0];
    let ne = *gens.last().unwrap();
    let mut out = Vec::new();
    for k in 1..gens.len() {
        let replacement = gens[k] + n1;
        if replacement <= ne {
            continue;
        }
        let rest: Vec<u64> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &x)| x)
            .collect();
        if monoid_contains(&rest, replacement) {
            continue;
        }
        let mut candidate = rest;
        candidate.push(replacement);
        let son = make_semigroup(&candidate).expect("n_1 keeps the gcd at 1");
        candidate.sort_unstable();
        assert_eq!(
            son.min_gens(),
            candidate.as_slice(),
            "class son of {p} is not minimally generated"
        );
        out.push(son);
    }
    out.sort();
    out
}

/// `{T ∈ [S] : F(T) = F(S)}` for packed `S`, by breadth-first search of the
/// class tree keeping only sons whose Frobenius number equals `F(S)`.
pub fn class_min_frobenius(s: &NumericalSemigroup) -> Result<BTreeSet<NumericalSemigroup>> {
    if !is_packed(s) {
        return Err(Error::NotPacked(s.to_string()));
    }
    let mut state = ClassSearchState::new(s.clone());
    while state.step() {}
    Ok(state.accepted)
}
