//! Workloads shared by the criterion benches.

/// `(m, e)` pairs small enough for every route, including Algorithm 1.
pub const SEARCH_CASES: &[(u64, u64)] = &[(6, 3), (7, 4), (8, 3), (9, 5), (10, 4)];

/// Generator sets of increasing size for the semigroup constructor.
pub fn generator_sets() -> Vec<Vec<u64>> {
    vec![
        vec![4, 5, 7],
        vec![6, 9, 20],
        vec![31, 37, 41, 43, 47],
        (200..260).step_by(7).collect(),
        vec![997, 1009, 1013, 1019],
    ]
}
