use num_bigint::BigInt;
use seriesforge::bell::{bell_partial, derangement_count, CoeffSeq};
use seriesforge::labeled::{
    chain_increasing_count, count_mobiles, count_ultrametrics, p_closed_form, p_series,
    p_series_by_color_recursion, DegreeSpec,
};
use seriesforge::oracle::{
    bell_partial_by_partitions, derangements_by_cycles, enum_chain_increasing,
    enum_labeled_trees, enum_mobiles, enum_multipartite_unlabeled_classes, enum_ultrametrics,
    enum_unlabeled_trees,
};
use seriesforge::unlabeled::{multipartite_unlabeled, refined_polys};

#[test]
fn three_routes_to_p_agree() {
    for m in 1..=3 {
        let spec = DegreeSpec::symbolic(m);
        let inverted = p_series(&spec, 6).unwrap();
        let recursive = p_series_by_color_recursion(&spec, 6);
        assert_eq!(inverted, recursive, "m={m}");
        for s in 1..=6 {
            assert_eq!(p_closed_form(&spec, s).unwrap(), *inverted.coeff(s), "m={m} s={s}");
        }
    }
}

#[test]
fn labeled_trees_match_series() {
    for m in 1..=3 {
        let p = p_series(&DegreeSpec::symbolic(m), 6).unwrap();
        for s in 1..=6 {
            let (count, weight) = enum_labeled_trees(s, m).unwrap();
            assert_eq!(weight, *p.coeff(s), "m={m} s={s}");
            assert_eq!(count, count_ultrametrics(s, m.into()));
        }
    }
}

#[test]
fn ultrametrics_match_formula() {
    for m in 1..=3u32 {
        for s in 1..=5 {
            assert_eq!(enum_ultrametrics(s, m).unwrap(), count_ultrametrics(s, m.into()), "s={s} m={m}");
        }
    }
}

#[test]
fn unlabeled_trees_match_refined_polys() {
    let polys = refined_polys(8).unwrap();
    for s in 1..=8 {
        let buckets = enum_unlabeled_trees(s).unwrap();
        let degree = polys[s - 1].poly.degree().unwrap();
        for k in 0..=degree.max(*buckets.keys().max().unwrap()) {
            let got = buckets.get(&k).cloned().unwrap_or_default();
            assert_eq!(got, polys[s - 1].count(k), "s={s} k={k}");
        }
    }
}

#[test]
fn colored_unlabeled_counts_color_each_shape() {
    // every shape with k inner vertices: m choices at the root, m - 1 below
    for m in 1..=6u64 {
        for s in 1..=8 {
            let shapes = enum_unlabeled_trees(s).unwrap();
            let mut expected = BigInt::from(0);
            for (&k, n) in &shapes {
                let colorings = if k == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(m) * BigInt::from(m - 1).pow(k as u32 - 1)
                };
                expected += n * colorings;
            }
            assert_eq!(multipartite_unlabeled(s, m).unwrap(), expected, "s={s} m={m}");
        }
    }
}

#[test]
fn colored_unlabeled_classes_agree_for_two_colors() {
    for s in 1..=6 {
        for m in 1..=2u32 {
            assert_eq!(
                enum_multipartite_unlabeled_classes(s, m).unwrap(),
                multipartite_unlabeled(s, m.into()).unwrap()
            );
        }
        let classes = enum_multipartite_unlabeled_classes(s, 3).unwrap();
        assert!(classes <= multipartite_unlabeled(s, 3).unwrap());
    }
}

#[test]
fn chain_trees_match_recurrence() {
    for m in 1..=3u32 {
        for s in 1..=7 {
            assert_eq!(enum_chain_increasing(s, m).unwrap(), chain_increasing_count(s, m.into()));
        }
    }
}

#[test]
fn mobiles_match_formula() {
    for m in 1..=3u32 {
        for s in 1..=6 {
            assert_eq!(enum_mobiles(s, m).unwrap(), count_mobiles(s, m.into()));
        }
    }
}

#[test]
fn partition_sum_matches_bell_table() {
    let x: Vec<BigInt> = [3i64, -1, 4, 1, -5, 9, 2, -6].iter().map(|&v| v.into()).collect();
    let seq = CoeffSeq::new(x.clone());
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(bell_partial_by_partitions(n, k, &x), bell_partial(n, k, &seq).unwrap());
        }
    }
}

#[test]
fn derangements_match_cycle_count() {
    for n in 0..=8 {
        let counted = derangements_by_cycles(n);
        for (k, c) in counted.iter().enumerate() {
            assert_eq!(*c, derangement_count(n, k), "n={n} k={k}");
        }
    }
}
