mod common;

use lcd_core::bounds::{griesmer_g, griesmer_sum, k_bracket, lcd_upper_bound};
use lcd_core::search::{
    enumerate_lcd_multiset, highrate_column_search, Goal, MultisetSearch, ReductionPlan,
    SearchMode, SearchSpec,
};
use lcd_core::simplex::{build_multiset_code, weight_profile};
use lcd_core::{FieldOrder, FqMatrix, LinearCode, MultiplicityVector, DEFAULT_ENUMERATION_BUDGET};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldOrder> {
    prop_oneof![Just(FieldOrder::Binary), Just(FieldOrder::Ternary)]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = FqMatrix> {
    (field(), 1..=max_rows, 1..=max_cols).prop_flat_map(|(f, r, c)| {
        proptest::collection::vec(0..f.q(), r * c)
            .prop_map(move |data| FqMatrix::new(f, r, c, data).unwrap())
    })
}

fn rows_of(m: &FqMatrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// A random full-rank code with `k <= 6` and `n <= 12`.
fn code() -> impl Strategy<Value = LinearCode> {
    matrix(6, 12).prop_filter_map("rank deficient", |m| LinearCode::from_generator(m).ok())
}

fn same_row_space(a: &FqMatrix, b: &FqMatrix) -> bool {
    let mut stacked = rows_of(a);
    stacked.extend(rows_of(b));
    let q = a.field().q();
    common::rank(q, &stacked) == a.rank() && a.rank() == b.rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gram_is_symmetric(m in matrix(6, 10)) {
        let g = m.gram();
        prop_assert_eq!(g.transpose(), g);
    }

    #[test]
    fn rank_matches_reference(m in matrix(7, 9)) {
        prop_assert_eq!(m.rank(), common::rank(m.field().q(), &rows_of(&m)));
    }

    #[test]
    fn product_rank_is_bounded(a in matrix(5, 5), seed in proptest::collection::vec(0u8..3, 25)) {
        let data = seed.iter().take(a.cols() * 4).map(|&x| x % a.field().q()).collect::<Vec<_>>();
        let cols = data.len() / a.cols();
        prop_assume!(cols > 0);
        let b = FqMatrix::new(a.field(), a.cols(), cols, data[..a.cols() * cols].to_vec()).unwrap();
        let ab = a.mat_mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn nullspace_is_annihilated(m in matrix(6, 10)) {
        let ns = m.nullspace_basis();
        prop_assert_eq!(ns.rows() + m.rank(), m.cols());
        if ns.rows() > 0 {
            prop_assert!(m.mat_mul(&ns.transpose()).unwrap().is_zero());
            prop_assert_eq!(ns.rank(), ns.rows());
        }
    }

    #[test]
    fn echelon_is_deterministic_and_idempotent(m in matrix(6, 8)) {
        let e1 = m.echelon();
        let e2 = m.clone().echelon();
        prop_assert_eq!(&e1.reduced, &e2.reduced);
        prop_assert_eq!(&e1.reduced.echelon().reduced, &e1.reduced);
    }

    #[test]
    fn ternary_gram_ignores_column_negation(m in matrix(5, 8), col in 0usize..8) {
        prop_assume!(m.field() == FieldOrder::Ternary && col < m.cols());
        let mut neg = m.clone();
        neg.scale_column(col, 2);
        prop_assert_eq!(neg.gram(), m.gram());
    }

    #[test]
    fn lcd_matches_reference_and_dual(c in code()) {
        let q = c.field().q();
        prop_assert_eq!(c.is_lcd(), common::is_lcd(q, &rows_of(c.generator())));
        if c.k() < c.n() {
            prop_assert_eq!(c.dual().unwrap().is_lcd(), c.is_lcd());
        }
    }

    #[test]
    fn dual_is_an_involution(c in code()) {
        prop_assume!(c.k() < c.n());
        let back = c.dual().unwrap().dual().unwrap();
        prop_assert!(same_row_space(back.generator(), c.generator()));
    }

    #[test]
    fn min_weight_matches_reference_and_probes(c in code()) {
        let q = c.field().q();
        let d = c.min_weight(DEFAULT_ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(d, common::min_weight(q, &rows_of(c.generator())));
        for w in 1..=4 {
            prop_assert_eq!(c.min_weight_at_most(w).unwrap(), d <= w);
        }
        prop_assert_eq!(c.min_distance(DEFAULT_ENUMERATION_BUDGET).unwrap(), d);
    }

    #[test]
    fn dual_distance_matches_enumeration(c in code()) {
        prop_assume!(c.k() < c.n());
        let dual = c.dual().unwrap();
        prop_assert_eq!(
            c.dual_distance(DEFAULT_ENUMERATION_BUDGET).unwrap(),
            dual.min_weight(DEFAULT_ENUMERATION_BUDGET).unwrap()
        );
    }

    #[test]
    fn weight_profile_matches_enumeration(
        f in field(),
        k in 2usize..=4,
        seed in proptest::collection::vec(0u32..3, 40),
    ) {
        prop_assume!(k >= lcd_core::simplex::min_self_orthogonal_dim(f));
        let len = k_bracket(f, k as u32) as usize;
        let mut m = seed[..len.min(seed.len())].to_vec();
        m.resize(len, 1);
        m[0] += 1; // keep at least one column per unit vector class reachable
        let mv = MultiplicityVector::new(f, k, m).unwrap();
        let Ok(c) = build_multiset_code(&mv) else { return Ok(()) };
        let mut from_profile: Vec<usize> = weight_profile(&mv).weights.iter().map(|&w| w as usize).collect();
        from_profile.sort();
        from_profile.dedup();
        from_profile.retain(|&w| w > 0);
        let enumerated = c.weight_distribution_support(DEFAULT_ENUMERATION_BUDGET).unwrap();
        prop_assert_eq!(from_profile, enumerated);
    }

    #[test]
    fn griesmer_g_inverts_sum(f in field(), k in 1u32..=8, d in 1u64..=200) {
        prop_assert_eq!(griesmer_g(f, griesmer_sum(f, k, d), k), d);
    }

    #[test]
    fn lcd_upper_is_g_or_one_less(f in field(), k in 1u32..=6, extra in 0u64..120) {
        let n = k as u64 + extra;
        let v = lcd_upper_bound(f, n, k);
        prop_assert!(v.lcd_upper == v.griesmer || v.lcd_upper + 1 == v.griesmer);
        prop_assert!(v.lcd_upper >= 1 || v.griesmer <= 1);
    }

    #[test]
    fn reduction_r_is_s_independent(f in field(), k in 2u32..=5, t in 0u64..40, alpha in -3i64..30) {
        prop_assume!(t < k_bracket(f, k));
        if let Ok(plan) = ReductionPlan::new(f, k, t, alpha) {
            for s in 0..6 {
                prop_assert_eq!(plan.r_at(s), plan.r);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn prefix_split_matches_sequential(
        (f, k, n, d) in prop_oneof![
            (5u32..=9, 3u32..=5).prop_map(|(n, d)| (FieldOrder::Ternary, 3usize, n, d)),
            (8u32..=12, 3u32..=6).prop_map(|(n, d)| (FieldOrder::Binary, 3usize, n, d)),
        ],
        depth in 1usize..=4,
        paper in any::<bool>(),
    ) {
        let mode = if paper { SearchMode::PaperReplication } else { SearchMode::Unconstrained };
        let spec = SearchSpec::new(f, k, n, d, mode, Goal::EnumerateAll).unwrap();
        let mut full = enumerate_lcd_multiset(&spec, u64::MAX).witnesses;
        let mut split = Vec::new();
        for p in MultisetSearch::new(&spec).prefixes(depth) {
            split.extend(MultisetSearch::new(&spec).run_prefix(&p, u64::MAX).witnesses);
        }
        full.sort();
        split.sort();
        prop_assert_eq!(&split, &full);
        for mv in &full {
            let c = build_multiset_code(mv).unwrap();
            prop_assert!(c.is_lcd());
            prop_assert!(c.min_weight(DEFAULT_ENUMERATION_BUDGET).unwrap() >= d as usize);
            prop_assert!(c.dual_distance(DEFAULT_ENUMERATION_BUDGET).unwrap() >= 2);
        }
    }

    #[test]
    fn highrate_witnesses_reverify(f in field(), i in 2usize..=4, extra in 1usize..=8) {
        let n = i + extra;
        prop_assume!(n as u64 <= k_bracket(f, i as u32));
        let out = highrate_column_search(f, n, i, 3, Goal::FindOne, 1 << 20).unwrap();
        for w in &out.search.witnesses {
            prop_assert_eq!(w.code.n(), n);
            prop_assert_eq!(w.code.k(), n - i);
            prop_assert!(w.code.is_lcd());
            prop_assert!(w.code.min_distance(DEFAULT_ENUMERATION_BUDGET).unwrap() >= 3);
        }
    }
}

#[test]
fn paper_and_free_modes_agree_on_small_ternary_cases() {
    let find = |n: u32, d: u64, mode| {
        let spec =
            SearchSpec::new(FieldOrder::Ternary, 4, n, d as u32, mode, Goal::FindOne).unwrap();
        enumerate_lcd_multiset(&spec, u64::MAX).found()
    };
    for n in 8..=13u32 {
        let top = griesmer_g(FieldOrder::Ternary, n as u64, 4);
        for d in top.saturating_sub(1).max(1)..=top {
            // free mode accepts any d' >= d; paper mode fixes d' = d exactly
            let paper = (d..=top).any(|dd| find(n, dd, SearchMode::PaperReplication));
            assert_eq!(find(n, d, SearchMode::Unconstrained), paper, "n={n} d={d}");
        }
    }
}
