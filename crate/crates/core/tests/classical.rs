use coideal_core::lie::{verify_presentation, RelationSet};
use coideal_core::manin::verify_triple;
use coideal_core::twist::{classify, verify_symmetric_space};
use coideal_core::{Classification, PairingId, Triple, TripleId, TwistId};

const W: i32 = 6;

#[test]
fn standard_triples_pass_every_axiom() {
    for id in [TripleId::D, TripleId::L, TripleId::A] {
        let rep = verify_triple(Triple::new(id), W);
        assert!(rep.passed(), "{id}: {}", rep.to_text());
        assert!(rep.checks.len() >= 5);
    }
}

#[test]
fn loop_form_on_l_is_not_a_manin_triple() {
    let rep = verify_triple(Triple::with_form(TripleId::L, PairingId::LoopForm), W);
    let failed: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
    assert!(failed.iter().any(|n| n.contains("isotrop")), "{failed:?}");
    assert!(rep.checks.iter().any(|c| c.name == "invariance" && c.passed()));
}

#[test]
fn twist_classes() {
    let cases = [
        (TwistId::Phi1, TripleId::D, Classification::AntiInvariant),
        (TwistId::Phi2, TripleId::D, Classification::AntiInvariant),
        (TwistId::SignOdd, TripleId::A, Classification::Invariant),
        (TwistId::SignOdd, TripleId::L, Classification::AntiInvariant),
        (TwistId::SignEven, TripleId::L, Classification::AntiInvariant),
    ];
    for (t, id, want) in cases {
        let (class, rep) = classify(t, Triple::new(id), W);
        assert_eq!(class, want, "{t} on {id}: {}", rep.to_text());
        let full = verify_symmetric_space(t, Triple::new(id), W).unwrap();
        assert!(full.passed(), "{t} on {id}: {}", full.to_text());
    }
}

#[test]
fn twist_off_its_domain_is_neither() {
    let (class, rep) = classify(TwistId::Phi1, Triple::new(TripleId::L), W);
    assert_eq!(class, Classification::Neither);
    assert!(!rep.passed());
    assert!(verify_symmetric_space(TwistId::Phi1, Triple::new(TripleId::L), W).is_err());
}

#[test]
fn eta_twists_do_not_preserve_the_triple() {
    for t in [TwistId::Eta1, TwistId::Eta2] {
        let (class, _) = classify(t, Triple::new(TripleId::D), W);
        assert_eq!(class, Classification::Neither, "{t}");
    }
}

#[test]
fn classical_presentations() {
    let cases = [
        (RelationSet::Onsager, 4),
        (RelationSet::AugOnsager, 3),
        (RelationSet::DolanGrady, 4),
        (RelationSet::T1, 4),
        (RelationSet::T2, 4),
        (RelationSet::Ter1, 4),
        (RelationSet::Ter2, 4),
    ];
    for (set, range) in cases {
        let rep = verify_presentation(set, range);
        assert!(rep.passed(), "{set}: {}", rep.to_text());
        assert!(!rep.checks.is_empty(), "{set}");
    }
}

#[test]
fn onsager_relation_count_grows_with_range() {
    let small = verify_presentation(RelationSet::Onsager, 2).checks.len();
    let large = verify_presentation(RelationSet::Onsager, 4).checks.len();
    assert!(large > small);
}
