//! Exit criteria for the library and CLI. Each criterion prints one
//! PASS/FAIL line; the test fails if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use semigroup_forge::oracle::{enumerate_by_genus, sieve};
use semigroup_forge::{
    bfs_levels, class_min_frobenius, enumerate_packed, interval_frobenius, interval_genus,
    is_packed, level, make_semigroup, min_frobenius, min_frobenius_full_set,
    min_frobenius_value_packed, min_genus, min_genus_packed, pack, sons, sylvester_frobenius,
    wilf_audit, NumericalSemigroup,
};

fn sg(g: &[u64]) -> NumericalSemigroup {
    make_semigroup(g).unwrap()
}

fn set(gens: &[&[u64]]) -> BTreeSet<NumericalSemigroup> {
    gens.iter().map(|g| sg(g)).collect()
}

fn sorted(gens: &[&[u64]]) -> Vec<NumericalSemigroup> {
    set(gens).into_iter().collect()
}

fn golden_examples() {
    let o = min_genus(5, 3).unwrap();
    assert_eq!(
        (o.value, o.minimizers),
        (6, sorted(&[&[5, 6, 7], &[5, 6, 8]]))
    );
    let o = min_genus(6, 3).unwrap();
    assert_eq!(
        (o.value, o.minimizers),
        (9, sorted(&[&[6, 7, 8], &[6, 7, 9], &[6, 7, 10]]))
    );
    let o = min_frobenius(4, 3).unwrap();
    assert_eq!((o.value, o.minimizers), (6, sorted(&[&[4, 5, 7]])));
    assert_eq!(min_frobenius_value_packed(6, 5).unwrap(), 8);
    let o = min_frobenius(7, 4).unwrap();
    assert_eq!(o.value, 13);
    assert!(o.minimizers.contains(&sg(&[7, 9, 10, 15])));
    assert!(o.minimizers.contains(&sg(&[7, 8, 10, 19])));
    assert_eq!(
        class_min_frobenius(&sg(&[6, 7, 8, 9, 11])).unwrap(),
        set(&[&[6, 7, 8, 9, 11], &[6, 8, 9, 11, 13], &[6, 8, 11, 13, 15]])
    );
    assert_eq!(sg(&[8, 9, 10]).genus(), 16);
    assert_eq!(sg(&[8, 9, 11]).genus(), 14);
    let genera: Vec<u64> = enumerate_packed(6, 3)
        .unwrap()
        .members
        .iter()
        .map(|s| s.genus())
        .collect();
    assert_eq!(genera, vec![9, 9, 9, 10, 10, 11, 12, 13, 13]);
    let frobs: Vec<i64> = enumerate_packed(6, 5)
        .unwrap()
        .members
        .iter()
        .map(|s| s.frobenius())
        .collect();
    assert_eq!(frobs, vec![11, 10, 9, 8, 13]);
    let expected: [&[&[u64]]; 4] = [
        &[&[4, 5, 6, 7]],
        &[&[4, 6, 7, 9], &[4, 5, 7], &[4, 5, 6]],
        &[&[4, 7, 9, 10], &[4, 6, 9, 11], &[4, 6, 7], &[4, 5, 11]],
        &[
            &[4, 9, 10, 11],
            &[4, 7, 10, 13],
            &[4, 7, 9],
            &[4, 6, 11, 13],
            &[4, 6, 9],
            &[4, 5],
        ],
    ];
    for (k, gens) in expected.iter().enumerate() {
        assert_eq!(level(4, k as u64).members, set(gens), "N({k}, L(4))");
    }
}

fn formula_cross_checks() {
    for m in 2..=60u64 {
        for e in 2..=m {
            let s = sg(&(m..m + e).collect::<Vec<_>>());
            assert_eq!(interval_genus(m, e).unwrap(), s.genus(), "genus ({m},{e})");
            assert_eq!(
                interval_frobenius(m, e).unwrap(),
                s.frobenius(),
                "frobenius ({m},{e})"
            );
        }
        let f = sylvester_frobenius(m, m + 1).unwrap();
        assert_eq!(f, (m * m - m) as i64 - 1);
        assert_eq!(f, sg(&[m, m + 1]).frobenius());
    }
}

fn oracle_equivalence() {
    for m in 2..=7u64 {
        for e in 2..=m {
            let tree = min_frobenius(m, e).unwrap();
            let packed_value = min_frobenius_value_packed(m, e).unwrap();
            let classes = min_frobenius_full_set(m, e).unwrap();
            assert_eq!(tree.value, packed_value, "F({m},{e})");
            assert_eq!(tree.value, classes.value, "F({m},{e})");
            assert_eq!(tree.minimizers, classes.minimizers, "F({m},{e}) sets");

            let g_tree = min_genus(m, e).unwrap();
            let g_packed = min_genus_packed(m, e).unwrap();
            assert_eq!(g_tree.value, g_packed.value, "g({m},{e})");
            assert_eq!(g_tree.minimizers, g_packed.minimizers, "g({m},{e}) sets");
        }
    }
    for m in 1..=6u64 {
        let all = enumerate_by_genus(m, m - 1 + 5);
        for lvl in bfs_levels(m).take(6) {
            let genus = m - 1 + lvl.level_index;
            let slice: BTreeSet<_> = all.iter().filter(|s| s.genus() == genus).cloned().collect();
            assert_eq!(lvl.members, slice, "m={m} k={}", lvl.level_index);
        }
    }
}

fn edge_invariants() {
    for m in 2..=6u64 {
        for lvl in bfs_levels(m).take(6) {
            for parent in lvl.iter() {
                for son in sons(parent) {
                    assert_eq!(son.genus(), parent.genus() + 1, "{parent} -> {son}");
                    assert!(son.frobenius() > parent.frobenius(), "{parent} -> {son}");
                    assert!(
                        son.embedding_dim() <= parent.embedding_dim(),
                        "{parent} -> {son}"
                    );
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5e51_9a0b);
    let mut unpacked = 0;
    for _ in 0..500 {
        let count = rng.gen_range(2..=6);
        let mut gens: Vec<u64> = (0..count).map(|_| rng.gen_range(2..=120)).collect();
        let x = rng.gen_range(2..120);
        gens.extend([x, x + 1]);
        let s = sg(&gens);
        let t = pack(&s).unwrap();
        assert!(t.genus() <= s.genus(), "{s}");
        assert!(t.frobenius() <= s.frobenius(), "{s}");
        if !is_packed(&s) {
            unpacked += 1;
            assert!(t.genus() < s.genus(), "{s}");
        }
    }
    assert!(unpacked > 0);
}

fn wilf_audit_clean() {
    let mut corpus: Vec<NumericalSemigroup> = Vec::new();
    for m in 1..=7u64 {
        corpus.extend(bfs_levels(m).take(7).flat_map(|l| l.members));
    }
    for m in 2..=10u64 {
        for e in 2..=m {
            for p in enumerate_packed(m, e).unwrap().members {
                corpus.extend(class_min_frobenius(&p).unwrap());
            }
        }
    }
    for m in 2..=7u64 {
        for e in 2..=m {
            corpus.extend(min_genus(m, e).unwrap().minimizers);
            corpus.extend(min_frobenius(m, e).unwrap().minimizers);
        }
    }
    for s in corpus.iter().step_by(37) {
        let r = sieve(s.min_gens(), None).unwrap();
        assert_eq!((r.frobenius, r.genus), (s.frobenius(), s.genus()));
    }
    let report = wilf_audit(&corpus);
    assert!(report.checked > 1000);
    if !report.is_clean() {
        panic!("WILF VIOLATION: {:?}", report.violations);
    }
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_semigroup-forge"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() {
    let commands: &[&[&str]] = &[
        &["min-genus", "5", "3"],
        &["min-genus", "7", "3", "--via", "packed", "--format", "json"],
        &["min-frobenius", "4", "3"],
        &["min-frobenius", "7", "4", "--format", "json", "--verify"],
        &[
            "min-frobenius",
            "8",
            "4",
            "--via",
            "packed",
            "--full-set",
            "--format",
            "json",
        ],
        &["packed", "6", "3", "--show", "g"],
        &["packed", "9", "4", "--format", "json"],
        &["tree", "5", "--levels", "6", "--format", "json"],
        &["class-min-frob", "6,7,8,9,11"],
        &["info", "6,9,20", "--format", "json"],
        &["audit-wilf", "6", "3", "--levels", "6"],
        &["min-genus", "3", "5"],
    ];
    for args in commands {
        let first = run_cli(args);
        let second = run_cli(args);
        assert_eq!(first, second, "{args:?}");
        assert!(!first.1.is_empty() || first.0 != 0, "{args:?}");
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 6] = [
        ("1 golden examples", golden_examples),
        ("2 closed-form cross-checks", formula_cross_checks),
        ("3 route and oracle equivalence", oracle_equivalence),
        ("4 edge and packing invariants", edge_invariants),
        ("5 Wilf audit", wilf_audit_clean),
        ("6 CLI determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match catch_unwind(AssertUnwindSafe(check)) {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(_) => {
                println!("FAIL  criterion {name}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
