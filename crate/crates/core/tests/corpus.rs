mod common;

use std::fs;

use serde_json::Value;

use threefold::corpus::{
    corpus_to_string, corpus_to_value, load_corpus, parse_corpus, run_all, CorpusError, Verdict,
};
use threefold::forms::Signature;
use threefold::report::{CheckReport, Status};

use common::*;

const PER_RECORD: [&str; 5] = [
    "quintic.json",
    "x7_11122.json",
    "p3p1_42.json",
    "p11114_8.json",
    "enriques_quotient.json",
];

#[test]
fn bundled_records_load_and_validate() {
    for name in PER_RECORD {
        let c = load_corpus(corpus_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(c.records.len(), 1, "{name}");
        for r in &c.records {
            r.validate().unwrap_or_else(|e| panic!("{name}: {e:?}"));
            assert!(!r.provenance.is_empty(), "{name} lacks provenance");
        }
    }
}

#[test]
fn union_file_matches_individual_files() {
    let all = load_corpus(corpus_dir().join("all.json")).unwrap();
    let singles: Vec<_> = PER_RECORD
        .iter()
        .flat_map(|n| load_corpus(corpus_dir().join(n)).unwrap().records)
        .collect();
    assert_eq!(all.records, singles);
}

#[test]
fn round_trip_is_lossless() {
    for name in PER_RECORD.iter().chain(["all.json"].iter()) {
        let c = load_corpus(corpus_dir().join(name)).unwrap();
        let text = corpus_to_string(&c);
        let back = parse_corpus(&text).unwrap();
        assert_eq!(back, c, "{name}");
        assert_eq!(corpus_to_value(&back), corpus_to_value(&c));
    }
}

#[test]
fn bundled_records_have_no_violations() {
    let all = load_corpus(corpus_dir().join("all.json")).unwrap();
    for r in &all.records {
        let rep = run_all(r);
        assert!(!rep.has_violations(), "{}: {:?}", r.name, rep.verdict);
        for c in &rep.checks {
            assert_ne!(c.status(), Status::Fail, "{} {}", r.name, c.check_id());
        }
        // recorded expectations match computed signatures
        if r.mu.is_some() && !r.expected_factor_signatures.is_empty() {
            let got: Vec<Signature> = rep.factorizations.iter().map(|f| f.factorization.signature).collect();
            assert_eq!(got, r.expected_factor_signatures, "{}", r.name);
        }
    }
}

fn slack(rep: &threefold::corpus::RunReport, id: &str) -> String {
    match rep.find(id) {
        Some(CheckReport::Bound(b)) => b.slack.as_ref().map(|s| s.to_string()).unwrap_or_default(),
        other => panic!("{id}: {other:?}"),
    }
}

#[test]
fn quintic_equalities() {
    let c = load_corpus(corpus_dir().join("quintic.json")).unwrap();
    let rep = run_all(&c.records[0]);
    assert_eq!(slack(&rep, "c2_bound_noether[H]"), "0");
    assert_eq!(slack(&rep, "c2_bound_castelnuovo[H]"), "0");
    assert_eq!(rep.find("cy_riemann_roch").unwrap().status(), Status::Pass);
    assert_eq!(slack(&rep, "c3_window_lower[H]"), "160");
}

#[test]
fn fixtures_behave() {
    let rr = load_corpus(fixture("rr_violation.json")).unwrap();
    let rep = run_all(&rr.records[0]);
    assert_eq!(rep.verdict, Verdict::Violations(vec!["cy_riemann_roch".into()]));

    let cube = load_corpus(fixture("cube_rank3.json")).unwrap();
    let rep = run_all(&cube.records[0]);
    assert_eq!(rep.find("xi_kernel[a1]").unwrap().status(), Status::Fail);
    assert_eq!(rep.find("xi_signature[a1]").unwrap().status(), Status::NotApplicable);

    let g = load_corpus(fixture("group_demo.json")).unwrap();
    let rep = run_all(&g.records[0]);
    assert!(!rep.has_violations(), "{:?}", rep.verdict);
    let groups: Vec<_> = rep.checks.iter().filter(|c| c.check_id().starts_with("group_orthogonal")).collect();
    assert!(!groups.is_empty());
    assert!(groups.iter().all(|c| c.status() == Status::Pass));
}

#[test]
fn malformed_inputs_name_the_problem() {
    match load_corpus(fixture("malformed_rank.json")) {
        Err(CorpusError::Schema { path, .. }) => assert_eq!(path, "$.records[0].c2"),
        other => panic!("{other:?}"),
    }
    match load_corpus(fixture("malformed_syntax.json")) {
        Err(CorpusError::Parse { line, .. }) => assert!(line > 0),
        other => panic!("{other:?}"),
    }
    assert!(matches!(load_corpus(fixture("missing.json")), Err(CorpusError::Io { .. })));
}

#[test]
fn strict_parsing_rejects_unknown_and_mistyped_fields() {
    let base: Value = serde_json::from_str(&fs::read_to_string(corpus_dir().join("quintic.json")).unwrap()).unwrap();
    let mut extra = base.clone();
    extra["records"][0]["colour"] = Value::String("red".into());
    assert!(matches!(
        parse_corpus(&extra.to_string()),
        Err(CorpusError::Schema { path, .. }) if path.starts_with("$.records[0]")
    ));
    let mut bad = base.clone();
    bad["records"][0]["b2"] = Value::String("one".into());
    assert!(parse_corpus(&bad.to_string()).is_err());
    let mut version = base.clone();
    version["schema_version"] = Value::String("0.9".into());
    assert!(parse_corpus(&version.to_string()).is_err());
    let mut dup = base;
    let rec = dup["records"][0].clone();
    dup["records"].as_array_mut().unwrap().push(rec);
    assert!(parse_corpus(&dup.to_string()).is_err());
}

#[test]
fn big_integers_survive() {
    let text = r#"{"schema_version": "1.0", "records": [{
        "name": "big", "b2": 1, "is_calabi_yau": true,
        "mu": [[1, 1, 1, "123456789012345678901234567890"]],
        "c2": [-246913578024691357802469135780],
        "c3": "-99999999999999999999999999999999"
    }]}"#;
    let c = parse_corpus(text).unwrap();
    let back = parse_corpus(&corpus_to_string(&c)).unwrap();
    assert_eq!(back, c);
    assert_eq!(c.records[0].c3.as_ref().unwrap().to_string(), "-99999999999999999999999999999999");
    let rep = run_all(&c.records[0]);
    // 2 mu + c2 = 0 exactly here, so the congruence holds
    assert_eq!(rep.find("cy_riemann_roch").unwrap().status(), Status::Pass);
}
