use std::time::Duration;

use lcd_core::search::{
    highrate_column_search, method1_search, Goal, MultisetSearch, SearchMode, SearchSpec,
    SearchStatus,
};
use lcd_core::{FieldOrder, MultiplicityVector};
use lcd_tools::certificate::{Certificate, CertificateKind};
use lcd_tools::parallel::{parallel_multiset, resume_parallel};

fn sorted(mut v: Vec<MultiplicityVector>) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = v.drain(..).map(|m| m.as_slice().to_vec()).collect();
    out.sort();
    out
}

#[test]
fn multiset_certificate_round_trips_and_reverifies() {
    let spec = SearchSpec::new(
        FieldOrder::Ternary,
        4,
        11,
        6,
        SearchMode::PaperReplication,
        Goal::FindOne,
    )
    .unwrap();
    let out = MultisetSearch::new(&spec).run(u64::MAX);
    let cert = Certificate::multiset(&spec, &out, Duration::from_millis(3), None);
    assert_eq!(cert.kind, CertificateKind::ExistenceWitness);
    let back = Certificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(back, cert);
    assert!(back.reverify(1 << 20).unwrap());
    let spec_back: SearchSpec = serde_json::from_value(back.spec).unwrap();
    assert_eq!(spec_back, spec);
}

#[test]
fn empty_searches_give_nonexistence_certificates() {
    let out = method1_search(
        FieldOrder::Binary,
        11,
        3,
        6,
        true,
        Goal::ProveEmpty,
        u64::MAX,
    )
    .unwrap();
    let cert = Certificate::method1(
        FieldOrder::Binary,
        11,
        3,
        6,
        true,
        Goal::ProveEmpty,
        &out,
        Duration::ZERO,
    );
    assert_eq!(cert.kind, CertificateKind::ExhaustiveNonexistence);
    assert!(cert.witness.is_none());
    assert!(cert.reverify(1 << 20).is_err());

    let out =
        highrate_column_search(FieldOrder::Ternary, 12, 3, 3, Goal::ProveEmpty, u64::MAX).unwrap();
    let cert = Certificate::highrate(
        FieldOrder::Ternary,
        12,
        3,
        Goal::ProveEmpty,
        &out,
        Duration::ZERO,
    );
    assert_eq!(cert.kind, CertificateKind::ExhaustiveNonexistence);
    assert!(cert.note.as_deref().unwrap().contains("LCD-only"));
}

#[test]
fn budget_exhaustion_is_inconclusive_with_cursor() {
    let spec = SearchSpec::new(
        FieldOrder::Ternary,
        4,
        20,
        12,
        SearchMode::Unconstrained,
        Goal::ProveEmpty,
    )
    .unwrap();
    let out = MultisetSearch::new(&spec).run(50);
    let cert = Certificate::multiset(&spec, &out, Duration::ZERO, None);
    assert_eq!(cert.kind, CertificateKind::Inconclusive);
    assert!(cert.resume_cursor.is_some());
}

#[test]
fn split_search_matches_sequential_enumeration() {
    for (field, k, n, d) in [
        (FieldOrder::Ternary, 3, 7, 4),
        (FieldOrder::Ternary, 3, 8, 4),
        (FieldOrder::Binary, 4, 10, 4),
    ] {
        let spec = SearchSpec::new(
            field,
            k,
            n,
            d,
            SearchMode::Unconstrained,
            Goal::EnumerateAll,
        )
        .unwrap();
        let seq = MultisetSearch::new(&spec).run(u64::MAX);
        assert_eq!(seq.status, SearchStatus::Exhausted);
        for depth in [1, 2, 3] {
            let (par, plan) = parallel_multiset(&spec, depth, u64::MAX);
            assert_eq!(par.status, SearchStatus::Exhausted);
            assert!(plan.pending.is_empty());
            assert_eq!(
                sorted(par.witnesses),
                sorted(seq.witnesses.clone()),
                "{field} [{n},{k},{d}] depth {depth}"
            );
        }
    }
}

#[test]
fn split_search_resumes_to_the_same_answer() {
    let spec = SearchSpec::new(
        FieldOrder::Ternary,
        3,
        9,
        5,
        SearchMode::Unconstrained,
        Goal::EnumerateAll,
    )
    .unwrap();
    let full = sorted(MultisetSearch::new(&spec).run(u64::MAX).witnesses);
    let (mut out, mut plan) = parallel_multiset(&spec, 2, 40);
    let mut found = out.witnesses.clone();
    let mut rounds = 0;
    while out.status == SearchStatus::Inconclusive {
        (out, plan) = resume_parallel(&spec, &plan, 40);
        found.extend(out.witnesses.clone());
        rounds += 1;
        assert!(rounds < 10_000);
    }
    assert!(rounds > 0, "budget too generous to exercise resuming");
    assert_eq!(sorted(found), full);
}
