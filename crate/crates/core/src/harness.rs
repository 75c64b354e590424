//! Scenario configuration and execution.
//!
//! A [`BatchConfig`] lists scenarios; each scenario names a kind and its instance
//! sources and expands to one [`ScenarioReport`] per instance. Reports are a pure
//! function of the configuration and the input files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::{read_action, verify_coprime_facts, ActionSetup, DEFAULT_ACTION_CAP};
use crate::assoc::associated_lie_ring;
use crate::error::{Error, Result};
use crate::graded::{
    criterion_report, default_scan_cap, eigenspace_grading, fixed_point_span_t,
    frobenius_generation_check, measured_classes, metabelian_report, verify_cf_vanishing,
    verify_l0_decomposition, FrobeniusLieAction, Grading,
};
use crate::group::catalog::{self, CatalogSpec};
use crate::group::io::read_cayley;
use crate::group::{FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
use crate::instances::{self, build_named, GradingInstance};
use crate::lie::{extend_scalars, parse_lie, LieAutomorphism};
use crate::linalg::Matrix;
use crate::report::{BatchReport, CheckRecord, Phase, ScenarioReport, Status};
use crate::structure::{
    automorphism_group, check_regularity_identity, find_exponent_q_cube, find_normal_rank2,
    is_metacyclic, is_supersolvable, FrobeniusStructure,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    CoprimeFacts,
    LemmaMetacyclic,
    LemmaRegularity,
    LemmaQCube,
    LemmaSubmet,
    FrobeniusGeneration,
    GradingCriterion,
    #[serde(rename = "decomposition_L0")]
    DecompositionL0,
    TheoremMain1Hypotheses,
    TheoremMain2Pipeline,
    Order16Search,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 11] = [
        ScenarioKind::CoprimeFacts,
        ScenarioKind::LemmaMetacyclic,
        ScenarioKind::LemmaRegularity,
        ScenarioKind::LemmaQCube,
        ScenarioKind::LemmaSubmet,
        ScenarioKind::FrobeniusGeneration,
        ScenarioKind::GradingCriterion,
        ScenarioKind::DecompositionL0,
        ScenarioKind::TheoremMain1Hypotheses,
        ScenarioKind::TheoremMain2Pipeline,
        ScenarioKind::Order16Search,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ScenarioKind::CoprimeFacts => "coprime_facts",
            ScenarioKind::LemmaMetacyclic => "lemma_metacyclic",
            ScenarioKind::LemmaRegularity => "lemma_regularity",
            ScenarioKind::LemmaQCube => "lemma_q_cube",
            ScenarioKind::LemmaSubmet => "lemma_submet",
            ScenarioKind::FrobeniusGeneration => "frobenius_generation",
            ScenarioKind::GradingCriterion => "grading_criterion",
            ScenarioKind::DecompositionL0 => "decomposition_L0",
            ScenarioKind::TheoremMain1Hypotheses => "theorem_main1_hypotheses",
            ScenarioKind::TheoremMain2Pipeline => "theorem_main2_pipeline",
            ScenarioKind::Order16Search => "order16_search",
        }
    }
}

impl std::str::FromStr for ScenarioKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown scenario kind {s:?}")))
    }
}

/// One scenario. Empty source lists select the kind's built-in instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub kind: ScenarioKind,
    /// Names of built-in instances.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub builtin: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub catalog: Vec<CatalogSpec>,
    /// Cayley table files.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub files: Vec<String>,
    /// Action JSON files.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub action_files: Vec<String>,
    /// Grading JSON files `{lie, phi, p}`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub grading_files: Vec<String>,
    /// Complement order for actors in semidirect layout (`(f, h)` at `f |H| + h`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_order: Option<usize>,
    /// Prime for q-group lemmas or for `Z` in pipelines; inferred when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    /// Enumeration cap or scan cap, depending on the kind.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
}

impl ScenarioConfig {
    pub fn new(kind: ScenarioKind) -> Self {
        ScenarioConfig {
            kind,
            builtin: Vec::new(),
            catalog: Vec::new(),
            files: Vec::new(),
            action_files: Vec::new(),
            grading_files: Vec::new(),
            complement_order: None,
            prime: None,
            cap: None,
        }
    }

    pub fn with_builtin(mut self, names: &[&str]) -> Self {
        self.builtin = names.iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchConfig {
    pub scenarios: Vec<ScenarioConfig>,
}

/// A grading supplied on disk: a structure-constant file, `φ` as integer rows, and `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingFileSpec {
    pub lie: String,
    pub phi: Vec<Vec<i64>>,
    pub p: u64,
}

/// Reads either a batch `{"scenarios": [...]}` or a single scenario object.
pub fn parse_config(text: &str) -> Result<BatchConfig> {
    let v: Value = serde_json::from_str(text)?;
    if v.get("scenarios").is_some() {
        Ok(serde_json::from_value(v)?)
    } else {
        Ok(BatchConfig {
            scenarios: vec![serde_json::from_value(v)?],
        })
    }
}

pub fn load_config(path: &Path) -> Result<BatchConfig> {
    parse_config(&std::fs::read_to_string(path)?)
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

/// Runs every scenario, concurrently, and assembles reports in configuration order.
/// `base` resolves relative file paths.
pub fn run_batch(batch: &BatchConfig, base: &Path) -> Result<BatchReport> {
    let results: Vec<Result<Vec<ScenarioReport>>> = std::thread::scope(|s| {
        let handles: Vec<_> = batch
            .scenarios
            .iter()
            .map(|c| s.spawn(move || run_scenario(c, base)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    });
    let mut scenarios = Vec::new();
    for r in results {
        scenarios.extend(r?);
    }
    Ok(BatchReport { scenarios })
}

/// Runs one scenario; one report per instance.
pub fn run_scenario(config: &ScenarioConfig, base: &Path) -> Result<Vec<ScenarioReport>> {
    let start = Instant::now();
    let mut reports = match config.kind {
        ScenarioKind::CoprimeFacts => run_coprime(config, base)?,
        ScenarioKind::LemmaMetacyclic
        | ScenarioKind::LemmaRegularity
        | ScenarioKind::LemmaQCube => run_q_group_lemma(config, base)?,
        ScenarioKind::LemmaSubmet => run_submet(config)?,
        ScenarioKind::FrobeniusGeneration => run_generation(config)?,
        ScenarioKind::GradingCriterion => run_grading(config, base)?,
        ScenarioKind::DecompositionL0 => run_decomposition(config)?,
        ScenarioKind::TheoremMain1Hypotheses => run_main1(config, base)?,
        ScenarioKind::TheoremMain2Pipeline => run_main2(config, base)?,
        ScenarioKind::Order16Search => {
            reject_sources(config)?;
            vec![order16_search()?]
        }
    };
    let echo = serde_json::to_value(config)?;
    let elapsed = start.elapsed();
    for r in &mut reports {
        r.kind = config.kind.as_str().to_string();
        r.config = echo.clone();
        r.elapsed = Some(elapsed);
    }
    Ok(reports)
}

fn reject_sources(c: &ScenarioConfig) -> Result<()> {
    if !c.builtin.is_empty()
        || !c.catalog.is_empty()
        || !c.files.is_empty()
        || !c.action_files.is_empty()
        || !c.grading_files.is_empty()
    {
        return Err(Error::InvalidSpec(format!(
            "{} takes no instance sources",
            c.kind.as_str()
        )));
    }
    Ok(())
}

fn only(c: &ScenarioConfig, allowed: &[&str]) -> Result<()> {
    let used = [
        ("builtin", !c.builtin.is_empty()),
        ("catalog", !c.catalog.is_empty()),
        ("files", !c.files.is_empty()),
        ("action_files", !c.action_files.is_empty()),
        ("grading_files", !c.grading_files.is_empty()),
    ];
    for (name, present) in used {
        if present && !allowed.contains(&name) {
            return Err(Error::InvalidSpec(format!(
                "{} does not accept `{name}` sources",
                c.kind.as_str()
            )));
        }
    }
    Ok(())
}

fn has_sources(c: &ScenarioConfig) -> bool {
    !(c.builtin.is_empty()
        && c.catalog.is_empty()
        && c.files.is_empty()
        && c.action_files.is_empty()
        && c.grading_files.is_empty())
}

/// Built-in names, or every built-in when the scenario lists no sources at all.
fn selected<'a>(c: &'a ScenarioConfig, all: &[&'static str]) -> Vec<String> {
    if has_sources(c) {
        c.builtin.clone()
    } else {
        all.iter().map(|s| s.to_string()).collect()
    }
}

fn skip_conclusions(r: &mut ScenarioReport, names: &[&str]) {
    for n in names {
        r.push(CheckRecord::skipped(n, "a hypothesis does not hold").phase(Phase::Conclusion));
    }
}

fn hypotheses_hold(r: &ScenarioReport) -> bool {
    r.checks
        .iter()
        .filter(|c| c.phase == Phase::Hypothesis)
        .all(|c| c.status == Status::Pass)
}

// ---------------------------------------------------------------- coprime facts

fn run_coprime(c: &ScenarioConfig, base: &Path) -> Result<Vec<ScenarioReport>> {
    only(c, &["builtin", "action_files"])?;
    let cap = c.cap.unwrap_or(DEFAULT_ACTION_CAP);
    let mut setups: Vec<(String, ActionSetup)> = Vec::new();
    let family = instances::coprime_setups();
    for name in selected(c, &instances::names(&family)) {
        setups.push((name.clone(), build_named(&family, &name)?));
    }
    for f in &c.action_files {
        setups.push((f.clone(), read_action(&resolve(base, f))?));
    }
    let mut out = Vec::new();
    for (name, s) in setups {
        let mut r = match verify_coprime_facts(&s, cap) {
            Ok(r) => r,
            Err(Error::NotCoprime { actor, target }) => {
                let mut r = ScenarioReport::new("", "");
                r.push(
                    CheckRecord::not_applicable("coprime", format!("gcd({actor}, {target}) != 1"))
                        .phase(Phase::Hypothesis),
                );
                r
            }
            Err(e) => return Err(e),
        };
        r.instance = name;
        out.push(r);
    }
    Ok(out)
}

// ---------------------------------------------------------------- q-group lemmas

fn group_sources(c: &ScenarioConfig, base: &Path) -> Result<Vec<(String, FiniteGroup)>> {
    only(c, &["builtin", "catalog", "files"])?;
    let mut specs: Vec<CatalogSpec> = Vec::new();
    let builtin = if has_sources(c) {
        c.builtin.clone()
    } else {
        vec!["five_groups".to_string()]
    };
    for name in builtin {
        match name.as_str() {
            "five_groups" => specs.extend(catalog::five_groups()),
            "standard_catalog" => specs.extend(catalog::standard_catalog()),
            other => {
                return Err(Error::InvalidSpec(format!(
                    "unknown built-in group set {other:?}"
                )))
            }
        }
    }
    specs.extend(c.catalog.iter().cloned());
    let mut out = Vec::new();
    for s in specs {
        out.push((s.name(), s.build()?));
    }
    for f in &c.files {
        out.push((f.clone(), read_cayley(&resolve(base, f))?));
    }
    Ok(out)
}

fn run_q_group_lemma(c: &ScenarioConfig, base: &Path) -> Result<Vec<ScenarioReport>> {
    let mut out = Vec::new();
    for (name, g) in group_sources(c, base)? {
        let mut r = ScenarioReport::new("", &name);
        let q = match (c.prime, g.prime_power_order()) {
            (Some(q), Some((p, _))) if p == q => Some(q),
            (None, Some((p, _))) => Some(p),
            _ => None,
        };
        let Some(q) = q else {
            r.push(
                CheckRecord::not_applicable(
                    "q_group",
                    format!("order {} is not a power of the prime", g.order()),
                )
                .phase(Phase::Hypothesis),
            );
            out.push(r);
            continue;
        };
        r.push(
            CheckRecord::pass("q_group")
                .phase(Phase::Hypothesis)
                .with("q", q)
                .with("order", g.order()),
        );
        match c.kind {
            ScenarioKind::LemmaMetacyclic => metacyclic_checks(&g, q, &mut r),
            ScenarioKind::LemmaRegularity => regularity_checks(&g, q, &mut r)?,
            _ => q_cube_checks(&g, q, &mut r),
        }
        out.push(r);
    }
    Ok(out)
}

fn metacyclic_checks(g: &FiniteGroup, q: u64, r: &mut ScenarioReport) {
    let m = is_metacyclic(g);
    let index = g.order() / crate::structure::agemo(g, q).order();
    let mut rec = match m.index_test {
        Some(t) => CheckRecord::from_bool("index_test_agrees", t == m.metacyclic, || {
            format!("metacyclic = {} but [G:G^q] = {index}", m.metacyclic)
        }),
        None => {
            CheckRecord::not_applicable("index_test_agrees", "the index test needs an odd prime")
        }
    }
    .phase(Phase::Conclusion)
    .with("metacyclic", m.metacyclic)
    .with("agemo_index", index);
    if let Some(w) = &m.witness {
        rec = rec
            .with("normal_order", w.normal.order())
            .with("normal_generator", w.normal_generator)
            .with("quotient_generator", w.quotient_generator);
    }
    r.push(rec);
}

fn regularity_checks(g: &FiniteGroup, q: u64, r: &mut ScenarioReport) -> Result<()> {
    match check_regularity_identity(g, q) {
        Ok(rep) => {
            r.push(CheckRecord::pass("order_at_most_q_to_q").phase(Phase::Hypothesis));
            for c in rep.checks {
                r.push(c.phase(Phase::Conclusion));
            }
        }
        Err(Error::TooLarge { size, cap }) => {
            r.push(
                CheckRecord::not_applicable(
                    "order_at_most_q_to_q",
                    format!("|G| = {size} > q^q = {cap}"),
                )
                .phase(Phase::Hypothesis),
            );
            skip_conclusions(r, &["regularity_identity"]);
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn q_cube_checks(g: &FiniteGroup, q: u64, r: &mut ScenarioReport) {
    let metacyclic = is_metacyclic(g).metacyclic;
    let found = find_exponent_q_cube(g, q).ok();
    let verified = found.as_ref().map(|h| {
        h.order() as u64 == q * q * q && h.elements().iter().all(|&x| g.pow(x, q as i64) == 0)
    });
    let lemma_applies = !metacyclic && q > 3;
    r.push(if lemma_applies {
        CheckRecord::pass("non_metacyclic_q_above_3").phase(Phase::Hypothesis)
    } else {
        CheckRecord::not_applicable(
            "non_metacyclic_q_above_3",
            if metacyclic {
                "G is metacyclic".to_string()
            } else {
                format!("q = {q} <= 3")
            },
        )
        .phase(Phase::Hypothesis)
    });
    if lemma_applies {
        r.push(
            CheckRecord::from_bool("exponent_q_cube", verified == Some(true), || match &found {
                None => "no subgroup of order q^3 and exponent q".into(),
                Some(h) => format!("witness of order {} fails re-verification", h.order()),
            })
            .phase(Phase::Conclusion),
        );
    } else {
        skip_conclusions(r, &["exponent_q_cube"]);
    }
    let mut rec = CheckRecord::from_bool(
        "found_iff_non_metacyclic",
        found.is_some() == !metacyclic,
        || {
            format!(
                "metacyclic = {metacyclic}, subgroup found = {}",
                found.is_some()
            )
        },
    )
    .with("metacyclic", metacyclic)
    .with("found", found.is_some());
    if let Some(h) = &found {
        rec = rec.with("witness_generators", h.generators().to_vec());
    }
    r.push(rec);
}

// ---------------------------------------------------------------- Frobenius kernels

fn frobenius_sources(c: &ScenarioConfig) -> Result<Vec<(String, Result<FrobeniusStructure>)>> {
    only(c, &["builtin", "catalog"])?;
    let family = instances::frobenius_groups();
    let mut out = Vec::new();
    for name in selected(c, &instances::names(&family)) {
        let spec = build_named(&family, &name)?;
        out.push((name, spec.build()));
    }
    for spec in &c.catalog {
        let CatalogSpec::SemidirectProduct { acting, .. } = spec else {
            return Err(Error::InvalidSpec(
                "Frobenius groups must be given as semidirect products".into(),
            ));
        };
        let whole = spec.build()?;
        out.push((
            spec.name(),
            FrobeniusStructure::from_semidirect(&whole, acting.order()),
        ));
    }
    Ok(out)
}

fn frobenius_hypothesis(
    r: &mut ScenarioReport,
    fs: Result<FrobeniusStructure>,
) -> Option<FrobeniusStructure> {
    match fs {
        Ok(fs) => {
            r.push(
                CheckRecord::pass("frobenius")
                    .phase(Phase::Hypothesis)
                    .with("kernel_order", fs.kernel().order())
                    .with("complement_order", fs.complement().order()),
            );
            Some(fs)
        }
        Err(e) => {
            r.push(
                CheckRecord::not_applicable("frobenius", e.to_string()).phase(Phase::Hypothesis),
            );
            None
        }
    }
}

fn run_submet(c: &ScenarioConfig) -> Result<Vec<ScenarioReport>> {
    let mut out = Vec::new();
    for (name, fs) in frobenius_sources(c)? {
        let mut r = ScenarioReport::new("", &name);
        let fs = frobenius_hypothesis(&mut r, fs);
        if let Some(fs) = &fs {
            let m = is_metacyclic(fs.whole()).metacyclic;
            r.push(if m {
                CheckRecord::not_applicable("non_metacyclic", "FH is metacyclic")
                    .phase(Phase::Hypothesis)
            } else {
                CheckRecord::pass("non_metacyclic").phase(Phase::Hypothesis)
            });
        }
        match fs {
            Some(fs) if hypotheses_hold(&r) => {
                let kernel = fs.kernel_group();
                r.push(normal_rank2_check(&kernel).phase(Phase::Conclusion));
            }
            _ => skip_conclusions(&mut r, &["normal_rank2"]),
        }
        out.push(r);
    }
    Ok(out)
}

/// Elementary abelian subgroup of order `p^2`, normal in `F`, re-verified.
fn normal_rank2_check(f: &FiniteGroup) -> CheckRecord {
    match find_normal_rank2(f) {
        Ok(e) => {
            let (p, k) = crate::arith::prime_power(e.order() as u64).unwrap_or((0, 0));
            let elementary = k == 2
                && f.is_abelian_subgroup(&e)
                && e.elements().iter().all(|&x| f.pow(x, p as i64) == 0);
            let normal = f.is_normal(&e);
            CheckRecord::from_bool("normal_rank2", elementary && normal, || {
                format!(
                    "witness of order {} elementary={elementary} normal={normal}",
                    e.order()
                )
            })
            .with("prime", p)
            .with("witness_elements", e.elements().to_vec())
        }
        Err(e) => CheckRecord::fail("normal_rank2", e.to_string()),
    }
}

fn run_generation(c: &ScenarioConfig) -> Result<Vec<ScenarioReport>> {
    only(c, &["builtin"])?;
    let family = instances::frobenius_generation_instances();
    let mut out = Vec::new();
    for name in selected(c, &instances::names(&family)) {
        let inst = build_named(&family, &name)?;
        let mut r = match frobenius_generation_check(&inst.action, &inst.frobenius) {
            Ok(r) => r,
            Err(Error::HypothesisFail(w)) => {
                let mut r = ScenarioReport::new("", "");
                r.push(
                    CheckRecord::not_applicable("kernel_fixed_point_free", w)
                        .phase(Phase::Hypothesis),
                );
                skip_conclusions(&mut r, &["generation"]);
                r
            }
            Err(e) => return Err(e),
        };
        r.instance = name;
        out.push(r);
    }
    Ok(out)
}

// ---------------------------------------------------------------- gradings

fn grading_sources(c: &ScenarioConfig, base: &Path) -> Result<Vec<(String, GradingInstance)>> {
    only(c, &["builtin", "grading_files"])?;
    let family = instances::grading_instances();
    let mut out = Vec::new();
    for name in selected(c, &instances::names(&family)) {
        out.push((name.clone(), build_named(&family, &name)?));
    }
    for f in &c.grading_files {
        let path = resolve(base, f);
        let spec: GradingFileSpec = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
        let lie_path = path.parent().unwrap_or(Path::new(".")).join(&spec.lie);
        let ring = parse_lie(&std::fs::read_to_string(&lie_path)?)?;
        let phi = LieAutomorphism::new(&ring, Matrix::from_ints(ring.field(), &spec.phi))?;
        out.push((
            f.clone(),
            GradingInstance {
                ring,
                phi,
                p: spec.p,
            },
        ));
    }
    Ok(out)
}

/// Invariant checks shared by every grading.
pub fn grading_checks(g: &Grading) -> Vec<CheckRecord> {
    let f = g.ring().field();
    let w = g.omega();
    let sum = (0..g.p()).fold(0, |acc, i| f.add(acc, f.pow(w, i)));
    let root_ok = f.pow(w, g.p()) == 1 && sum == 0 && w != 1;
    vec![
        CheckRecord::from_bool("root_of_unity", root_ok, || {
            format!("omega = {w}, sum of powers = {sum}")
        })
        .with("omega", w)
        .with("p", g.p()),
        CheckRecord::from_bool("direct_sum", g.is_direct_sum(), || {
            "components do not form a direct sum".into()
        })
        .with("dims", g.dims()),
        CheckRecord::from_bool("eigenspace_condition", g.eigen_condition_holds(), || {
            "a component basis vector is not an eigenvector for its eigenvalue".into()
        }),
        match g.grading_violation() {
            None => CheckRecord::pass("bracket_grading"),
            Some((i, j)) => CheckRecord::fail(
                "bracket_grading",
                format!("[L_{i}, L_{j}] leaves its component"),
            ),
        },
    ]
}

fn run_grading(c: &ScenarioConfig, base: &Path) -> Result<Vec<ScenarioReport>> {
    let mut out = Vec::new();
    for (name, inst) in grading_sources(c, base)? {
        let g = eigenspace_grading(&inst.ring, &inst.phi, inst.p)?;
        let mut r = ScenarioReport::new("", &name);
        for rec in grading_checks(&g) {
            r.push(rec);
        }
        r.extend(criterion_report(
            &g,
            c.cap.unwrap_or_else(|| default_scan_cap(&g)),
        ));
        out.push(r);
    }
    Ok(out)
}

// ---------------------------------------------------------------- Lie-level Frobenius actions

/// Component permutation, orbit-sum spans, the `L_0` decomposition, `C_L(F)` vanishing
/// and the metabelian quantities for one action.
pub fn lie_action_checks(fa: &FrobeniusLieAction) -> Vec<CheckRecord> {
    let mut out = vec![fa.check_component_permutation()];
    let g = fa.grading();
    let mut t_dims = Vec::new();
    for a in 1..g.p() {
        if !g.component(a).is_zero() {
            let t = fixed_point_span_t(fa, a).expect("nonzero residue");
            t_dims.push(serde_json::json!([a, t.dim()]));
        }
    }
    out.push(CheckRecord::pass("orbit_sums_fixed_by_h").with("t_dims", t_dims));
    out.extend(verify_l0_decomposition(fa).checks);
    match measured_classes(fa) {
        Ok((cc, d)) => match verify_cf_vanishing(fa, d.max(1)) {
            Ok(rep) => out.extend(rep.checks.into_iter().map(|r| r.with("c", cc))),
            Err(Error::HypothesisFail(w)) => {
                out.push(CheckRecord::not_applicable("cf_vanishing", w))
            }
            Err(e) => out.push(CheckRecord::fail("cf_vanishing", e.to_string())),
        },
        Err(e) => out.push(CheckRecord::not_applicable(
            "cf_vanishing",
            format!("centralizer classes: {e}"),
        )),
    }
    out.extend(
        metabelian_report(fa)
            .checks
            .into_iter()
            .map(|r| r.phase(Phase::Check)),
    );
    out
}

fn lie_instance_action(name: &str) -> Result<FrobeniusLieAction> {
    let inst = build_named(&instances::lie_frobenius_instances(), name)?;
    let fs = inst.frobenius.build()?;
    FrobeniusLieAction::from_generators(&inst.ring, fs, &inst.generators, inst.p)
}

const PIPELINE_PREFIX: &str = "pipeline/";

fn run_decomposition(c: &ScenarioConfig) -> Result<Vec<ScenarioReport>> {
    only(c, &["builtin"])?;
    let mut all: Vec<String> = instances::names(&instances::lie_frobenius_instances())
        .into_iter()
        .map(String::from)
        .collect();
    all.extend(
        instances::names(&instances::group_pipeline_instances())
            .into_iter()
            .map(|n| format!("{PIPELINE_PREFIX}{n}")),
    );
    let names = if has_sources(c) {
        c.builtin.clone()
    } else {
        all
    };
    let mut out = Vec::new();
    for name in names {
        let fa = match name.strip_prefix(PIPELINE_PREFIX) {
            Some(p) => {
                let inst = build_named(&instances::group_pipeline_instances(), p)?;
                let (fs, action) = inst.build()?;
                pipeline_lie_action(&fs, &action, inst.p)?.action
            }
            None => lie_instance_action(&name)?,
        };
        let mut r = ScenarioReport::new("", &name);
        r.push(
            CheckRecord::pass("grading")
                .with("p", fa.grading().p())
                .with("dims", fa.grading().dims())
                .with("r", fa.r()),
        );
        for rec in lie_action_checks(&fa) {
            r.push(rec);
        }
        out.push(r);
    }
    Ok(out)
}

/// `L(G)` with the induced action of `FH`, after extending scalars by a `p`-th root of
/// unity when needed.
#[derive(Clone, Debug)]
pub struct PipelineLie {
    pub action: FrobeniusLieAction,
    pub lie_class: Option<usize>,
    pub dims: Vec<usize>,
    pub extension_degree: u32,
}

pub fn pipeline_lie_action(
    fs: &FrobeniusStructure,
    action: &ActionSetup,
    p: u64,
) -> Result<PipelineLie> {
    let assoc = associated_lie_ring(action.target())?;
    let mut mats = Vec::with_capacity(fs.whole().order());
    for x in 0..fs.whole().order() {
        mats.push(assoc.induced_automorphism(action.rep(x))?.matrix().clone());
    }
    let base = assoc.ring.clone();
    let (ring, d) = if base.field().root_of_unity(p).is_some() {
        (base, 1)
    } else {
        let (big, _) = extend_scalars(&base, p)?;
        let f = big.field().clone();
        mats = mats.iter().map(|m| m.embed(&f)).collect();
        let d = f.degree();
        (big, d)
    };
    let lie_class = ring.class().ok();
    let fa = FrobeniusLieAction::new(&ring, fs.clone(), mats, p)?;
    Ok(PipelineLie {
        action: fa,
        lie_class,
        dims: assoc.dims(),
        extension_degree: d,
    })
}

// ---------------------------------------------------------------- theorems

/// Classes of `C_G(S)` for each listed set, memoized on the subgroup.
fn centralizer_classes(
    action: &ActionSetup,
    sets: &[Vec<usize>],
) -> Vec<(Subgroup, Option<usize>)> {
    let mut memo: BTreeMap<Vec<usize>, Option<usize>> = BTreeMap::new();
    sets.iter()
        .map(|s| {
            let c = action.fixed_points(s);
            let class = *memo
                .entry(c.elements().to_vec())
                .or_insert_with(|| action.target().subgroup_as_group(&c).nilpotency_class());
            (c, class)
        })
        .collect()
}

fn centralizers_hypothesis(
    action: &ActionSetup,
    sets: &[Vec<usize>],
    labels: &[String],
) -> CheckRecord {
    let classes = centralizer_classes(action, sets);
    let bad = classes.iter().zip(labels).find(|((_, c), _)| c.is_none());
    let c = classes.iter().filter_map(|(_, c)| *c).max().unwrap_or(0);
    match bad {
        Some((_, label)) => CheckRecord::not_applicable(
            "centralizers_nilpotent",
            format!("C_G({label}) is not nilpotent"),
        ),
        None => CheckRecord::pass("centralizers_nilpotent").with("c", c),
    }
    .phase(Phase::Hypothesis)
}

fn coprime_hypothesis(action: &ActionSetup) -> CheckRecord {
    if action.is_coprime() {
        CheckRecord::pass("coprime")
    } else {
        CheckRecord::not_applicable(
            "coprime",
            format!(
                "gcd({}, {}) != 1",
                action.actor().order(),
                action.target().order()
            ),
        )
    }
    .phase(Phase::Hypothesis)
}

fn nilpotent_conclusion(g: &FiniteGroup) -> CheckRecord {
    match g.nilpotency_class() {
        Some(c) => CheckRecord::pass("g_nilpotent").with("class", c),
        None => CheckRecord::fail(
            "g_nilpotent",
            format!("gamma_infinity(G) has order {}", g.gamma_infinity().order()),
        ),
    }
    .phase(Phase::Conclusion)
}

fn main1_sources(
    c: &ScenarioConfig,
    base: &Path,
) -> Result<Vec<(String, ActionSetup, Option<usize>)>> {
    only(c, &["builtin", "action_files"])?;
    let family = instances::centralizer_action_instances();
    let mut out = Vec::new();
    for name in selected(c, &instances::names(&family)) {
        let inst = build_named(&family, &name)?;
        out.push((name, inst.setup()?, inst.complement_order));
    }
    for f in &c.action_files {
        out.push((
            f.clone(),
            read_action(&resolve(base, f))?,
            c.complement_order,
        ));
    }
    Ok(out)
}

fn run_main1(c: &ScenarioConfig, base: &Path) -> Result<Vec<ScenarioReport>> {
    let cap = c.cap.unwrap_or(DEFAULT_ORDER_CAP);
    let mut out = Vec::new();
    for (name, action, complement) in main1_sources(c, base)? {
        let mut r = ScenarioReport::new("", &name);
        match complement {
            None => main1_q_group(&action, cap, &mut r),
            Some(h) => main1_frobenius(&action, h, &mut r),
        }
        out.push(r);
    }
    Ok(out)
}

/// A non-metacyclic `q`-group `A`, `q > 3`, acting coprimely with nilpotent `C_G(a)`.
fn main1_q_group(action: &ActionSetup, cap: usize, r: &mut ScenarioReport) {
    let a = action.actor();
    let g = action.target();
    let q = a.prime_power_order().map(|(q, _)| q);
    r.push(
        match q {
            Some(q) if q > 3 => CheckRecord::pass("q_group_above_3").with("q", q),
            Some(q) => CheckRecord::not_applicable("q_group_above_3", format!("q = {q}")),
            None => CheckRecord::not_applicable("q_group_above_3", "A is not of prime power order"),
        }
        .phase(Phase::Hypothesis),
    );
    r.push(
        if is_metacyclic(a).metacyclic {
            CheckRecord::not_applicable("actor_non_metacyclic", "A is metacyclic")
        } else {
            CheckRecord::pass("actor_non_metacyclic")
        }
        .phase(Phase::Hypothesis),
    );
    r.push(coprime_hypothesis(action));
    let sets: Vec<Vec<usize>> = (1..a.order()).map(|x| vec![x]).collect();
    let labels: Vec<String> = (1..a.order()).map(|x| format!("a{x}")).collect();
    r.push(centralizers_hypothesis(action, &sets, &labels));
    if let Some(q) = q {
        let rec = match find_exponent_q_cube(a, q) {
            Ok(h) => CheckRecord::pass("actor_exponent_q_cube")
                .with("witness_generators", h.generators().to_vec()),
            Err(e) => CheckRecord::not_applicable("actor_exponent_q_cube", e.to_string()),
        };
        r.push(rec);
    }
    // observed quantities standing in for the unbounded constants
    let cents: Vec<Subgroup> = {
        let mut seen = BTreeMap::new();
        for x in 1..a.order() {
            let c = action.fixed_points(&[x]);
            seen.entry(c.elements().to_vec()).or_insert(c);
        }
        seen.into_values().collect()
    };
    let gamma_m = cents
        .iter()
        .map(|c| g.subgroup_as_group(c).gamma_infinity().order())
        .max()
        .unwrap_or(1);
    r.push(
        CheckRecord::pass("gamma_infinity_orders")
            .with("max_centralizer_gamma_infinity", gamma_m)
            .with("g_gamma_infinity", g.gamma_infinity().order()),
    );
    let fitting = (|| -> Result<(usize, usize)> {
        let mut m = 1;
        for c in &cents {
            let cg = g.subgroup_as_group(c);
            m = m.max(cg.order() / cg.fitting_subgroup(1, cap)?.order());
        }
        Ok((m, g.order() / g.fitting_subgroup(2, cap)?.order()))
    })();
    r.push(match fitting {
        Ok((m, idx)) => CheckRecord::pass("fitting_indices")
            .with("max_centralizer_fitting_index", m)
            .with("g_second_fitting_index", idx),
        Err(e) => CheckRecord::abstain("fitting_indices", format!("{e}")),
    });
    if hypotheses_hold(r) {
        r.push(nilpotent_conclusion(g));
    } else {
        skip_conclusions(r, &["g_nilpotent"]);
    }
}

fn frobenius_structure(action: &ActionSetup, h: usize) -> Result<FrobeniusStructure> {
    FrobeniusStructure::from_semidirect(action.actor(), h)
}

fn frobenius_centralizer_sets(fs: &FrobeniusStructure) -> (Vec<Vec<usize>>, Vec<String>) {
    let mut sets = vec![fs.complement().elements().to_vec()];
    let mut labels = vec!["H".to_string()];
    for x in fs.kernel().nonidentity() {
        sets.push(vec![x]);
        labels.push(format!("x{x}"));
    }
    (sets, labels)
}

/// `FH` with non-metacyclic kernel of odd order acting coprimely.
fn main1_frobenius(action: &ActionSetup, h: usize, r: &mut ScenarioReport) {
    let fs = frobenius_hypothesis(r, frobenius_structure(action, h));
    let Some(fs) = fs else {
        skip_conclusions(r, &["g_nilpotent"]);
        return;
    };
    let kernel = fs.kernel_group();
    r.push(
        if is_metacyclic(&kernel).metacyclic {
            CheckRecord::not_applicable("kernel_non_metacyclic", "F is metacyclic")
        } else {
            CheckRecord::pass("kernel_non_metacyclic")
        }
        .phase(Phase::Hypothesis),
    );
    r.push(
        if kernel.order() % 2 == 1 {
            CheckRecord::pass("kernel_odd_order")
        } else {
            CheckRecord::not_applicable("kernel_odd_order", format!("|F| = {}", kernel.order()))
        }
        .phase(Phase::Hypothesis),
    );
    r.push(coprime_hypothesis(action));
    let (sets, labels) = frobenius_centralizer_sets(&fs);
    r.push(centralizers_hypothesis(action, &sets, &labels));
    r.push(normal_rank2_check(&kernel));
    if hypotheses_hold(r) {
        r.push(nilpotent_conclusion(action.target()));
    } else {
        skip_conclusions(r, &["g_nilpotent"]);
    }
}

fn run_main2(c: &ScenarioConfig, base: &Path) -> Result<Vec<ScenarioReport>> {
    only(c, &["builtin", "action_files"])?;
    let cap = c.cap.unwrap_or(DEFAULT_ORDER_CAP);
    let family = instances::group_pipeline_instances();
    let mut sources: Vec<(String, ActionSetup, usize, Option<u64>)> = Vec::new();
    for name in selected(c, &instances::names(&family)) {
        let inst = build_named(&family, &name)?;
        let (fs, action) = inst.build()?;
        sources.push((name, action, fs.complement().order(), Some(inst.p)));
    }
    for f in &c.action_files {
        let h = c.complement_order.ok_or_else(|| {
            Error::InvalidSpec("action files for the pipeline need complement_order".into())
        })?;
        sources.push((f.clone(), read_action(&resolve(base, f))?, h, c.prime));
    }
    let mut out = Vec::new();
    for (name, action, h, p) in sources {
        if (0..action.actor().order()).all(|x| action.rep(x).is_identity()) {
            return Err(Error::InvalidSpec(format!(
                "{name}: FH acts trivially on G"
            )));
        }
        let mut r = ScenarioReport::new("", &name);
        main2_pipeline(&action, h, p, cap, &mut r)?;
        out.push(r);
    }
    Ok(out)
}

const MAIN2_CONCLUSIONS: [&str; 4] = [
    "g_nilpotent",
    "lie_class_matches",
    "lie_criterion",
    "lie_l0_decomposition",
];

fn main2_pipeline(
    action: &ActionSetup,
    h: usize,
    p: Option<u64>,
    cap: usize,
    r: &mut ScenarioReport,
) -> Result<()> {
    let Some(fs) = frobenius_hypothesis(r, frobenius_structure(action, h)) else {
        skip_conclusions(r, &MAIN2_CONCLUSIONS);
        return Ok(());
    };
    let whole = fs.whole();
    r.push(
        match is_supersolvable(whole, cap) {
            Ok(Some(series)) => CheckRecord::pass("supersolvable").with(
                "chief_series_orders",
                series.iter().map(|s| s.order()).collect::<Vec<_>>(),
            ),
            Ok(None) => CheckRecord::not_applicable(
                "supersolvable",
                "no chief series with prime-order factors",
            ),
            Err(e) => CheckRecord::abstain("supersolvable", e.to_string()),
        }
        .phase(Phase::Hypothesis),
    );
    r.push(
        if is_metacyclic(whole).metacyclic {
            CheckRecord::not_applicable("fh_non_metacyclic", "FH is metacyclic")
        } else {
            CheckRecord::pass("fh_non_metacyclic")
        }
        .phase(Phase::Hypothesis),
    );
    r.push(coprime_hypothesis(action));
    let (sets, labels) = frobenius_centralizer_sets(&fs);
    r.push(centralizers_hypothesis(action, &sets, &labels));
    if !hypotheses_hold(r) {
        skip_conclusions(r, &MAIN2_CONCLUSIONS);
        return Ok(());
    }
    let g = action.target();
    r.push(nilpotent_conclusion(g));
    let g_class = g.nilpotency_class();
    let p = match p {
        Some(p) => p,
        None => fs
            .kernel_group()
            .prime_power_order()
            .map(|(p, _)| p)
            .ok_or_else(|| {
                Error::InvalidSpec("give `prime` when the kernel is not a p-group".into())
            })?,
    };
    let lie = match pipeline_lie_action(&fs, action, p) {
        Ok(l) => l,
        Err(e @ (Error::MixedExponentLayer(_) | Error::NotNilpotent | Error::NotFound(_))) => {
            for n in &MAIN2_CONCLUSIONS[1..] {
                r.push(
                    CheckRecord::skipped(n, format!("associated Lie ring unavailable: {e}"))
                        .phase(Phase::Conclusion),
                );
            }
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    r.push(
        CheckRecord::from_bool("lie_class_matches", lie.lie_class == g_class, || {
            format!("class L(G) = {:?}, class G = {:?}", lie.lie_class, g_class)
        })
        .phase(Phase::Conclusion)
        .with("layer_dims", lie.dims.clone())
        .with("extension_degree", lie.extension_degree),
    );
    let fa = &lie.action;
    for rec in grading_checks(fa.grading()) {
        r.push(rec);
    }
    let crit = criterion_report(fa.grading(), default_scan_cap(fa.grading()));
    let nil = crit.check("nilpotent").cloned();
    for rec in crit.checks.into_iter().filter(|c| c.name != "nilpotent") {
        r.push(rec.phase(Phase::Check));
    }
    if let Some(n) = nil {
        let mut n = n.phase(Phase::Conclusion);
        n.name = "lie_criterion".into();
        r.push(n);
    }
    for rec in lie_action_checks(fa) {
        if rec.name == "l0_decomposition" {
            let mut rec = rec.phase(Phase::Conclusion);
            rec.name = "lie_l0_decomposition".into();
            r.push(rec);
        } else {
            r.push(rec);
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- order 16

fn has_elementary_c2_cube(g: &FiniteGroup) -> bool {
    let inv: Vec<usize> = (1..g.order())
        .filter(|&x| g.element_order(x) == 2)
        .collect();
    for (i, &a) in inv.iter().enumerate() {
        for (j, &b) in inv.iter().enumerate().skip(i + 1) {
            for &c in &inv[j + 1..] {
                let h = g.subgroup_generated(&[a, b, c]);
                if h.order() == 8 && h.elements().iter().all(|&x| g.pow(x, 2) == 0) {
                    return true;
                }
            }
        }
    }
    false
}

/// Semidirect products `N : C2` and `N : C4` of order 16, filtered for non-metacyclic
/// groups without an elementary abelian subgroup of order 8 that admit a fixed-point-free
/// automorphism of order 3 or 5 (so are Frobenius kernels).
pub fn order16_search() -> Result<ScenarioReport> {
    let c2 = catalog::cyclic(2)?;
    let c4 = catalog::cyclic(4)?;
    let bases: Vec<(FiniteGroup, &FiniteGroup)> = vec![
        (catalog::cyclic(8)?, &c2),
        (catalog::direct_product(&catalog::cyclic(4)?, &c2)?, &c2),
        (catalog::elementary_abelian(2, 3)?, &c2),
        (catalog::dihedral(4)?, &c2),
        (catalog::quaternion8()?, &c2),
        (catalog::cyclic(4)?, &c4),
        (catalog::elementary_abelian(2, 2)?, &c4),
    ];
    let mut examined = 0usize;
    let mut non_metacyclic = 0usize;
    let mut without_cube = Vec::new();
    let mut candidates = Vec::new();
    for (n, h) in &bases {
        for a in automorphism_group(n)? {
            if h.order() % a.order() != 0 {
                continue;
            }
            let action: Vec<Vec<usize>> = (0..h.order())
                .map(|k| {
                    (0..n.order())
                        .map(|x| (0..k).fold(x, |y, _| a.apply(y)))
                        .collect()
                })
                .collect();
            let g = catalog::semidirect_product(n, h, &action)?;
            examined += 1;
            if is_metacyclic(&g).metacyclic {
                continue;
            }
            non_metacyclic += 1;
            if has_elementary_c2_cube(&g) {
                continue;
            }
            let label = format!("{}:{} via {:?}", n.name(), h.name(), a.perm());
            let auts = automorphism_group(&g)?;
            let fpf = auts
                .iter()
                .any(|b| matches!(b.order(), 3 | 5) && (1..g.order()).all(|x| b.apply(x) != x));
            if fpf {
                candidates.push(label.clone());
            }
            without_cube.push(label);
        }
    }
    let mut r = ScenarioReport::new("", "order16");
    r.push(
        CheckRecord::pass("order16_search")
            .with("examined", examined)
            .with("non_metacyclic", non_metacyclic)
            .with("non_metacyclic_without_c2_cube", without_cube.len())
            .with("candidates", candidates.clone())
            .with_note(if candidates.is_empty() {
                "no Frobenius kernel of this shape among the semidirect constructions searched"
            } else {
                "candidates found"
            }),
    );
    Ok(r)
}

#[cfg(test)]
mod tests;
