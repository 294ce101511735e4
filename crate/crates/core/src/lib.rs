//! Minimal genus and minimal Frobenius number over the numerical semigroups
//! with fixed multiplicity `m` and embedding dimension `e`.
//!
//! The crate is organised bottom-up:
//!
//! * [`semigroup`]: the canonical [`NumericalSemigroup`] value, Apéry tables,
//!   Frobenius number, genus, and closed forms for interval semigroups.
//! * [`variety_tree`]: the tree of all semigroups of multiplicity `m`, where
//!   the parent of `S` is `S ∪ {F(S)}`.
//! * [`packed`]: packed semigroups, the packing map and the class trees.
//! * [`search`]: the minimisation procedures built on the above.
//! * [`oracle`]: naive sieve-based ground truth used by tests and `--verify`.

pub mod error;
pub mod oracle;
pub mod packed;
pub mod search;
pub mod semigroup;
pub mod variety_tree;

pub use error::{Error, Result};
pub use packed::{
    class_min_frobenius, class_sons, enumerate_packed, is_packed, pack, ClassSearchState,
    PackedFamily,
};
pub use search::{
    existence, min_frobenius, min_frobenius_full_set, min_frobenius_packed,
    min_frobenius_value_packed, min_genus, min_genus_packed, wilf_audit, Existence, Incumbent,
    SearchKind, SearchOutcome, WilfReport, WilfViolation,
};
pub use semigroup::{
    apery_set, interval_apery, interval_frobenius, interval_genus, make_semigroup, monoid_contains,
    sylvester_frobenius, AperyTable, NumericalSemigroup,
};
pub use variety_tree::{bfs_levels, level, root, sons, FrontierLevel, Levels};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
