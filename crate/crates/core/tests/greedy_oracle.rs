//! Greedy, patch and exact-cover behavior checked against naive reference
//! implementations written with plain `HashSet`s.

use std::collections::HashSet;

use proptest::prelude::*;
use setcover_core::greedy::{complete_cover, run_greedy, verify_cover};
use setcover_core::oracle::{check_instance, exact_min_cover};
use setcover_core::{BitRow, Instance};

fn sets_of(inst: &Instance) -> Vec<HashSet<usize>> {
    inst.rows()
        .iter()
        .map(|r| r.ones_iter().collect())
        .collect()
}

/// Textbook greedy on sets: largest new coverage, lowest index on ties.
fn naive_greedy(n: usize, sets: &[HashSet<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut uncovered: HashSet<usize> = (0..n).collect();
    let mut picked = Vec::new();
    let mut counts = vec![n];
    while !uncovered.is_empty() {
        let mut best = None;
        let mut best_gain = 0;
        for (i, s) in sets.iter().enumerate() {
            let g = s.intersection(&uncovered).count();
            if g > best_gain {
                best = Some(i);
                best_gain = g;
            }
        }
        let i = best.expect("instance is coverable");
        for e in &sets[i] {
            uncovered.remove(e);
        }
        picked.push(i);
        counts.push(uncovered.len());
    }
    (picked, counts)
}

/// Smallest cover by scanning every row subset; ties resolved to the
/// lexicographically smallest sorted index list.
fn power_set_min_cover(n: usize, sets: &[HashSet<usize>]) -> (usize, Vec<usize>) {
    let m = sets.len();
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u32..(1 << m) {
        let rows: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let union: HashSet<usize> = rows.iter().flat_map(|&i| sets[i].iter().copied()).collect();
        if union.len() < n {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => rows.len() < b.len() || (rows.len() == b.len() && rows < *b),
        };
        if better {
            best = Some(rows);
        }
    }
    let rows = best.expect("all rows cover");
    (rows.len(), rows)
}

fn instance_strategy(max_m: usize, max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), m).prop_map(
            move |cells| {
                let mut rows: Vec<BitRow> = cells.into_iter().map(BitRow::from_bools).collect();
                // make each empty column coverable by the row its index maps to
                for j in 0..n {
                    if rows.iter().all(|r| !r.get(j)) {
                        rows[j % m].set(j, true);
                    }
                }
                Instance::new(rows).unwrap()
            },
        )
    })
}

#[test]
fn column_counts_match_brute_force() {
    let inst = Instance::from_sets(6, &[vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]]).unwrap();
    let sets = sets_of(&inst);
    let brute: Vec<usize> = (0..6)
        .map(|j| sets.iter().filter(|s| s.contains(&j)).count())
        .collect();
    assert_eq!(brute, vec![2, 2, 2, 2, 1, 1]);
    assert_eq!(inst.column_counts(), brute);
}

#[test]
fn greedy_suboptimal_instance() {
    let inst = Instance::from_sets(6, &[vec![0, 1, 2, 3], vec![0, 1, 4], vec![2, 3, 5]]).unwrap();
    let sets = sets_of(&inst);
    assert_eq!(power_set_min_cover(6, &sets), (2, vec![1, 2]));
    assert_eq!(exact_min_cover(&inst).unwrap(), (2, vec![1, 2]));
    let trace = complete_cover(&inst, &run_greedy(&inst, None)).unwrap();
    assert_eq!(trace.total_size(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn greedy_matches_naive(inst in instance_strategy(10, 24)) {
        let (rows, counts) = naive_greedy(inst.n(), &sets_of(&inst));
        let trace = run_greedy(&inst, None);
        prop_assert_eq!(&trace.greedy_rows, &rows);
        prop_assert_eq!(&trace.uncovered_counts, &counts);
        prop_assert_eq!(run_greedy(&inst, None), trace);
    }

    #[test]
    fn trace_invariants(inst in instance_strategy(10, 24)) {
        let trace = run_greedy(&inst, None);
        for w in trace.uncovered_counts.windows(2) {
            prop_assert!(w[1] < w[0]);
        }
        let distinct: HashSet<_> = trace.greedy_rows.iter().collect();
        prop_assert_eq!(distinct.len(), trace.greedy_rows.len());
        prop_assert_eq!(trace.final_uncovered(), 0);
        prop_assert!(verify_cover(&inst, &trace.greedy_rows));
    }

    #[test]
    fn patch_after_any_stop(inst in instance_strategy(10, 24), stop in 0usize..10) {
        let partial = run_greedy(&inst, Some(stop));
        let k = partial.steps();
        let u_k = partial.final_uncovered();
        let done = complete_cover(&inst, &partial).unwrap();
        prop_assert!(verify_cover(&inst, &done.cover_rows()));
        prop_assert!(done.patch_rows.len() <= u_k);
        prop_assert!(done.total_size() <= k + u_k);
        let all: HashSet<_> = done.cover_rows().into_iter().collect();
        prop_assert_eq!(all.len(), done.total_size());
    }

    #[test]
    fn exact_matches_power_set(inst in instance_strategy(8, 12)) {
        let expected = power_set_min_cover(inst.n(), &sets_of(&inst));
        let (size, rows) = exact_min_cover(&inst).unwrap();
        prop_assert_eq!((size, rows.clone()), expected);
        prop_assert!(verify_cover(&inst, &rows));
        let greedy = complete_cover(&inst, &run_greedy(&inst, None)).unwrap();
        prop_assert!(size <= greedy.total_size());
    }

    #[test]
    fn trajectory_dominance(inst in instance_strategy(12, 40)) {
        prop_assert!(check_instance(&inst).is_empty());
    }
}
