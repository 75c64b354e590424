use super::*;

fn run(c: ScenarioConfig) -> Vec<ScenarioReport> {
    run_scenario(&c, Path::new(".")).unwrap()
}

#[test]
fn kind_names_roundtrip() {
    for k in ScenarioKind::ALL {
        let s = serde_json::to_value(k).unwrap();
        assert_eq!(s, Value::String(k.as_str().into()));
        assert_eq!(k.as_str().parse::<ScenarioKind>().unwrap(), k);
    }
    assert!("nope".parse::<ScenarioKind>().is_err());
}

#[test]
fn single_and_batch_configs_parse() {
    let one = parse_config(r#"{"kind": "lemma_q_cube", "builtin": ["five_groups"]}"#).unwrap();
    assert_eq!(one.scenarios.len(), 1);
    let many =
        parse_config(r#"{"scenarios": [{"kind": "order16_search"}, {"kind": "coprime_facts"}]}"#)
            .unwrap();
    assert_eq!(many.scenarios[1].kind, ScenarioKind::CoprimeFacts);
    assert!(parse_config(r#"{"kind": "coprime_facts", "bogus": 1}"#).is_err());
}

#[test]
fn wrong_sources_are_rejected() {
    let mut c = ScenarioConfig::new(ScenarioKind::Order16Search);
    c.builtin = vec!["x".into()];
    assert!(matches!(
        run_scenario(&c, Path::new(".")),
        Err(Error::InvalidSpec(_))
    ));
    let mut c = ScenarioConfig::new(ScenarioKind::GradingCriterion);
    c.files = vec!["g.txt".into()];
    assert!(matches!(
        run_scenario(&c, Path::new(".")),
        Err(Error::InvalidSpec(_))
    ));
}

#[test]
fn q_cube_on_five_groups() {
    let reps = run(ScenarioConfig::new(ScenarioKind::LemmaQCube));
    assert_eq!(reps.len(), 19);
    for r in &reps {
        assert_ne!(r.status(), Status::Fail, "{}", r.instance);
        assert_eq!(
            r.check("found_iff_non_metacyclic").unwrap().status,
            Status::Pass
        );
    }
}

#[test]
fn generation_violation_is_not_applicable() {
    let reps =
        run(ScenarioConfig::new(ScenarioKind::FrobeniusGeneration)
            .with_builtin(&["s3_sign_on_c7sq"]));
    let r = &reps[0];
    assert_eq!(
        r.check("kernel_fixed_point_free").unwrap().status,
        Status::NotApplicable
    );
    assert_eq!(r.check("generation").unwrap().status, Status::Skipped);
}

#[test]
fn grading_scenario_passes() {
    let reps = run(ScenarioConfig::new(ScenarioKind::GradingCriterion)
        .with_builtin(&["gf11_heisenberg_123", "gf11_non_nilpotent"]));
    assert_eq!(reps[0].status(), Status::Pass);
    assert_eq!(reps[1].status(), Status::Abstain);
}

#[test]
fn order16_search_finds_nothing() {
    let r = order16_search().unwrap();
    let c = r.check("order16_search").unwrap();
    assert_eq!(c.observed["candidates"], serde_json::json!([]));
    assert!(
        c.observed["non_metacyclic_without_c2_cube"]
            .as_u64()
            .unwrap()
            > 0
    );
}

#[test]
fn batch_preserves_order_and_echoes_config() {
    let batch = BatchConfig {
        scenarios: vec![
            ScenarioConfig::new(ScenarioKind::LemmaMetacyclic),
            ScenarioConfig::new(ScenarioKind::CoprimeFacts).with_builtin(&["c5_by_c2_inversion"]),
        ],
    };
    let out = run_batch(&batch, Path::new(".")).unwrap();
    assert_eq!(out.scenarios.last().unwrap().kind, "coprime_facts");
    assert_eq!(out.scenarios[0].kind, "lemma_metacyclic");
    assert_eq!(
        out.scenarios.last().unwrap().config["builtin"],
        serde_json::json!(["c5_by_c2_inversion"])
    );
}
