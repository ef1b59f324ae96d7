use overlap::family::lf_order;
use overlap::oracle::{self, DEFAULT_ORACLE_CAP};
use overlap::{Analysis, SetFamily};
use proptest::prelude::*;

/// Rows in LF order, read top to bottom, for the element at each `P_f`
/// position. Sorting these columns lexicographically (0 < 1) is what `P_f`
/// must agree with.
fn columns(f: &SetFamily, a: &Analysis) -> Vec<Vec<bool>> {
    a.pf.order()
        .iter()
        .map(|&v| a.lf.order().iter().map(|&x| f.set(x).contains(&v)).collect())
        .collect()
}

fn check(f: &SetFamily) -> Result<(), TestCaseError> {
    let a = Analysis::run(f);
    let full = oracle::overlap_graph_full(f, DEFAULT_ORACLE_CAP).unwrap();
    let max = oracle::max_oracle(f, &a.lf, DEFAULT_ORACLE_CAP).unwrap();

    prop_assert_eq!(&a.classes, &full.labeling, "classes of {:?}", f.to_text());
    prop_assert_eq!(&a.max, &max, "Max of {:?}", f.to_text());
    prop_assert!(a.dgraph.raw_edge_count() <= f.total_size());
    prop_assert!(a.am_pops <= f.m());

    let cols = columns(f, &a);
    prop_assert!(cols.windows(2).all(|w| w[0] <= w[1]), "P_f not lexicographic for {:?}", f.to_text());

    for &(x, y) in a.subgraph.edges() {
        prop_assert!(oracle::overlaps(f.set(x), f.set(y)), "X{} X{} in {:?}", x + 1, y + 1, f.to_text());
    }
    prop_assert_eq!(&a.subgraph.components(), &full.labeling);
    prop_assert!(a.subgraph.edges().len() <= f.m() + f.total_size());
    prop_assert!(a.subgraph.quintuple_count() <= f.total_size());

    prop_assert_eq!(a.forest.trees().len(), full.labeling.class_count());
    for tree in a.forest.trees() {
        let class = &full.labeling.classes()[full.labeling.class_of(tree.root)];
        prop_assert_eq!(tree.edges.len() + 1, class.len());
        for e in &tree.edges {
            prop_assert!(a.subgraph.edges().contains(e));
        }
    }
    Ok(())
}

/// Ordered tuples of distinct non-empty subsets of `0..n`.
fn all_families(n: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    let subsets: Vec<Vec<usize>> =
        (1u32..1 << n).map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect()).collect();
    let mut out = vec![vec![]];
    for _ in 0..m {
        let mut next = Vec::new();
        for fam in &out {
            for s in &subsets {
                if !fam.contains(s) {
                    let mut g = fam.clone();
                    g.push(s.clone());
                    next.push(g);
                }
            }
        }
        out = next;
    }
    out
}

#[test]
fn exhaustive_small_families() {
    let mut count = 0;
    for n in 1..=4 {
        for m in 1..=3 {
            for sets in all_families(n, m) {
                check(&SetFamily::new(n, sets).unwrap()).unwrap();
                count += 1;
            }
        }
    }
    // n=4 alone: 15 + 15*14 + 15*14*13
    assert!(count > 2730);
}

#[test]
fn duplicate_sets_and_singletons() {
    for text in ["a b\na b\nb c\n", "a\na\nb\n", "a b c\nc d\na b c\nd\n"] {
        check(&SetFamily::parse(text).unwrap()).unwrap();
    }
}

fn family() -> impl Strategy<Value = SetFamily> {
    (1usize..=40, 1usize..=60).prop_flat_map(|(n, m)| {
        let set = proptest::collection::vec(0..n, 1..=n.min(12));
        proptest::collection::vec(set, m).prop_map(move |sets| SetFamily::new(n, sets).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn fast_pipeline_matches_oracle(f in family()) {
        check(&f)?;
    }

    #[test]
    fn classes_ignore_input_order(f in family(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..f.m()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = SetFamily::new(f.n(), perm.iter().map(|&x| f.set(x).to_vec()).collect()).unwrap();
        let classes = |g: &SetFamily, relabel: &dyn Fn(usize) -> usize| {
            let mut cs: Vec<Vec<usize>> = overlap::overlap_classes(g)
                .classes()
                .iter()
                .map(|c| { let mut c: Vec<usize> = c.iter().map(|&x| relabel(x)).collect(); c.sort(); c })
                .collect();
            cs.sort();
            cs
        };
        prop_assert_eq!(classes(&f, &|x| x), classes(&shuffled, &|x| perm[x]));
        let oracle_shuffled = oracle::overlap_graph_full(&shuffled, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(oracle_shuffled.labeling.class_count(), overlap::overlap_classes(&f).class_count());
    }
}

#[test]
fn generated_instances_match_oracle() {
    use overlap::gen;
    for seed in 0..20 {
        check(&gen::random(30, 50, 0.1 + 0.04 * seed as f64, seed).unwrap()).unwrap();
        check(&gen::blocks(4, 6, seed).unwrap()).unwrap();
    }
    check(&gen::star(60).unwrap()).unwrap();
    check(&gen::nested(8).unwrap()).unwrap();
}

#[test]
fn lf_order_and_sl_lists_agree() {
    let f = overlap::gen::random(25, 40, 0.3, 3).unwrap();
    let lf = lf_order(&f);
    let sl = overlap::family::build_sl_lists(&f, &lf);
    assert_eq!(sl.total_len(), f.total_size());
    for v in 0..f.n() {
        let list: Vec<usize> = sl.get(v).iter().map(|&x| x as usize).collect();
        assert!(list.windows(2).all(|w| f.size(w[0]) <= f.size(w[1])));
        assert!(list.windows(2).all(|w| lf.rank(w[0]) > lf.rank(w[1])));
        for x in 0..f.m() {
            assert_eq!(f.set(x).contains(&v), list.contains(&x));
        }
    }
    assert_eq!(lf, lf_order(&f.clone()));
}
