//! `--verify`: recheck results with the brute-force oracle. The exhaustive
//! enumerations are exponential, so above the caps below only the sieve
//! check and the alternate algebraic route are used.

use std::collections::BTreeSet;

use semigroup_forge::oracle::{
    enumerate_by_genus, exhaustive_min_frobenius, exhaustive_min_genus, sieve,
};
use semigroup_forge::search;
use semigroup_forge::{
    interval_frobenius, interval_genus, is_packed, pack, FrontierLevel, NumericalSemigroup,
    SearchOutcome,
};

/// Largest genus bound handed to the gap-set enumeration.
const GENUS_ORACLE_CAP: u64 = 24;
/// Largest Frobenius bound handed to the gap-set enumeration.
const FROBENIUS_ORACLE_CAP: i64 = 30;

type Verdict = Result<String, String>;

fn gens_list(set: &[NumericalSemigroup]) -> String {
    set.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Frobenius number and genus of every semigroup against the sieve.
pub(crate) fn semigroups(set: &[NumericalSemigroup]) -> Result<(), String> {
    for s in set {
        let r = sieve(s.min_gens(), None).map_err(|e| format!("sieve on {s}: {e}"))?;
        if (r.frobenius, r.genus) != (s.frobenius(), s.genus()) {
            return Err(format!(
                "{s}: computed F={} g={}, sieve F={} g={}",
                s.frobenius(),
                s.genus(),
                r.frobenius,
                r.genus
            ));
        }
    }
    Ok(())
}

fn shape(o: &SearchOutcome, value_of: impl Fn(&NumericalSemigroup) -> i64) -> Result<(), String> {
    semigroups(&o.minimizers)?;
    for s in &o.minimizers {
        if s.multiplicity() != o.m || s.embedding_dim() != o.e || value_of(s) != o.value {
            return Err(format!(
                "{s} does not attain {} in L({},{})",
                o.value, o.m, o.e
            ));
        }
    }
    if o.minimizers.is_empty() {
        return Err("no minimizers".into());
    }
    Ok(())
}

pub(crate) fn min_genus(o: &SearchOutcome) -> Verdict {
    shape(o, |s| s.genus() as i64)?;
    if o.m == 1 {
        return Ok("sieve".into());
    }
    let bound = interval_genus(o.m, o.e).map_err(|e| e.to_string())?;
    if bound <= GENUS_ORACLE_CAP {
        let (g, set) = exhaustive_min_genus(o.m, o.e).map_err(|e| e.to_string())?;
        if (g as i64, &set) != (o.value, &o.minimizers) {
            return Err(format!("oracle gives g={g} with {}", gens_list(&set)));
        }
        return Ok("sieve + exhaustive oracle".into());
    }
    let tree = search::min_genus(o.m, o.e).map_err(|e| e.to_string())?;
    let packed = search::min_genus_packed(o.m, o.e).map_err(|e| e.to_string())?;
    for other in [tree, packed] {
        if (other.value, &other.minimizers) != (o.value, &o.minimizers) {
            return Err(format!(
                "routes disagree: g={} with {}",
                other.value,
                gens_list(&other.minimizers)
            ));
        }
    }
    Ok("sieve + tree and packed routes".into())
}

/// `complete` says whether `o` claims to hold every minimiser in `L(m,e)`.
pub(crate) fn min_frobenius(o: &SearchOutcome, complete: bool) -> Verdict {
    shape(o, NumericalSemigroup::frobenius)?;
    if o.m == 1 {
        return Ok("sieve".into());
    }
    let bound = interval_frobenius(o.m, o.e).map_err(|e| e.to_string())?;
    if bound <= FROBENIUS_ORACLE_CAP {
        let (f, set) = exhaustive_min_frobenius(o.m, o.e).map_err(|e| e.to_string())?;
        if f != o.value {
            return Err(format!("oracle gives F={f}"));
        }
        let ok = if complete {
            set == o.minimizers
        } else {
            o.minimizers.iter().all(|s| set.contains(s))
        };
        if !ok {
            return Err(format!("oracle minimizers {}", gens_list(&set)));
        }
        return Ok("sieve + exhaustive oracle".into());
    }
    let packed_value = search::min_frobenius_value_packed(o.m, o.e).map_err(|e| e.to_string())?;
    if packed_value != o.value {
        return Err(format!("packed route gives F={packed_value}"));
    }
    if complete {
        let tree = search::min_frobenius(o.m, o.e).map_err(|e| e.to_string())?;
        let classes = search::min_frobenius_full_set(o.m, o.e).map_err(|e| e.to_string())?;
        if tree.minimizers != o.minimizers || classes.minimizers != o.minimizers {
            return Err("tree and class routes disagree on the minimizer set".into());
        }
    }
    Ok("sieve + tree and packed routes".into())
}

pub(crate) fn packed(m: u64, e: u64, members: &[NumericalSemigroup]) -> Verdict {
    semigroups(members)?;
    for s in members {
        if !is_packed(s) || s.multiplicity() != m || s.embedding_dim() != e {
            return Err(format!("{s} is not in C({m},{e})"));
        }
    }
    let distinct: BTreeSet<_> = members.iter().collect();
    if distinct.len() != members.len() {
        return Err("duplicate members".into());
    }
    Ok("sieve".into())
}

pub(crate) fn tree(m: u64, levels: &[FrontierLevel]) -> Verdict {
    for lvl in levels {
        let members: Vec<_> = lvl.iter().cloned().collect();
        semigroups(&members)?;
    }
    let deepest = levels.last().map_or(0, |l| l.level_index);
    let bound = m - 1 + deepest;
    if bound > GENUS_ORACLE_CAP {
        return Ok("sieve".into());
    }
    let all = enumerate_by_genus(m, bound);
    for lvl in levels {
        let genus = m - 1 + lvl.level_index;
        let slice: BTreeSet<_> = all.iter().filter(|s| s.genus() == genus).cloned().collect();
        if slice != lvl.members {
            return Err(format!(
                "level {} differs from the gap-set enumeration",
                lvl.level_index
            ));
        }
    }
    Ok("sieve + gap-set enumeration".into())
}

pub(crate) fn class(rep: &NumericalSemigroup, members: &[NumericalSemigroup]) -> Verdict {
    semigroups(members)?;
    for t in members {
        let image = pack(t).map_err(|e| e.to_string())?;
        if &image != rep || t.frobenius() != rep.frobenius() {
            return Err(format!(
                "{t} is not in the class of {rep} with F={}",
                rep.frobenius()
            ));
        }
    }
    Ok("sieve + packing map".into())
}
