use super::*;
use std::collections::HashSet;

#[test]
fn registry_is_well_formed() {
    let mut ids = HashSet::new();
    for e in REGISTRY {
        assert!(ids.insert(e.id), "duplicate id {}", e.id);
        assert!(BUILDERS.contains(&e.lhs), "{}: unknown builder {}", e.id, e.lhs);
        assert!(BUILDERS.contains(&e.rhs), "{}: unknown builder {}", e.id, e.rhs);
        assert!(!e.anchor.is_empty());
        assert!(!e.domain.points(&Limits::default()).is_empty(), "{} has an empty domain", e.id);
    }
    assert!(matches!(lookup("nope"), Err(Error::Unknown(_))));
    assert!(matches!(build("nope", &Params::default()), Err(Error::Unknown(_))));
}

#[test]
fn domains_and_clipping() {
    let e = lookup("angela").unwrap();
    let pts = e.domain.points(&Limits::default());
    assert!(pts.iter().all(|p| p.k.unwrap() + p.n.unwrap() <= 9));
    assert_eq!(pts.len(), 36);
    let clipped = e.domain.points(&Limits { max_k: Some(2), max_n: Some(3), ..Default::default() });
    assert_eq!(clipped.len(), 6);
    let c = lookup("commC").unwrap().domain.points(&Limits::default());
    assert!(c.iter().all(|p| p.r.unwrap() < p.k.unwrap()));
    assert_eq!(c.len(), 12);
}

#[test]
fn small_runs_are_sorted_and_equal() {
    let entries: Vec<_> = ["unlabeled", "eqFrob", "qangela"].iter().map(|id| lookup(id).unwrap()).collect();
    let lim = Limits { max_k: Some(3), max_n: Some(3), ..Default::default() };
    let recs = run(&entries, &lim, VerifyMode::Symbolic);
    assert_eq!(recs.len(), 27);
    assert!(recs.iter().all(|r| r.equal && r.error.is_none()), "{recs:?}");
    assert!(recs.windows(2).all(|w| (w[0].id, w[0].params) <= (w[1].id, w[1].params)));
    let again = run(&entries, &lim, VerifyMode::Evaluation);
    for (a, b) in recs.iter().zip(&again) {
        assert_eq!(a.lhs_digest, b.lhs_digest);
        assert!(b.equal && b.proof.is_some());
    }
    assert!(Summary::of(&recs).passes(true));
}

#[test]
fn mismatches_are_detected() {
    let p = Params { k: Some(2), n: Some(2), ..Default::default() };
    let a = build("bounce", &p).unwrap();
    let b = build("areaSeries", &p).unwrap();
    assert_ne!(a, b);
    assert!(!eval_compare(&a, &b).unwrap().equal);
    assert_ne!(a.digest().unwrap(), b.digest().unwrap());
    let bad = IdentityEntry {
        id: "bad",
        status: Status::Conjecture,
        anchor: "x",
        lhs: "bounce",
        rhs: "areaSeries",
        domain: lookup("angela").unwrap().domain,
    };
    let r = check_point(&bad, p, VerifyMode::Symbolic);
    assert!(!r.equal && r.error.is_none());
    let s = Summary::of(&[r]);
    assert!(s.passes(false) && !s.passes(true));
}

#[test]
fn digests_are_of_canonical_text() {
    let v = Value::Sym(nabla_e2_expected());
    assert_eq!(v.canonical_text().unwrap(), "(q + t)*s[1,1] + s[2]");
    assert_eq!(v.digest().unwrap().len(), 64);
}
