use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use frobact_core::assoc::associated_lie_ring;
use frobact_core::group::catalog::CatalogSpec;
use frobact_core::group::io::read_cayley;
use frobact_core::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use frobact_core::harness::{self, ScenarioConfig, ScenarioKind};
use frobact_core::lie::{parse_lie, write_lie};
use frobact_core::report::{emit_report, BatchReport, CheckRecord, Format, ScenarioReport, Status};
use frobact_core::structure::{is_metacyclic, is_supersolvable, FrobeniusStructure};
use frobact_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "frobact",
    version,
    about = "Exact checks for coprime actions, Frobenius groups and graded Lie rings"
)]
struct Cli {
    /// Enumeration cap passed to capped computations.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a Cayley table, structure-constant file or config.
    Validate {
        path: PathBuf,
        /// One of cayley, lie, action, config; guessed from the extension otherwise.
        #[arg(long = "as")]
        as_kind: Option<String>,
    },
    /// Series, classes and metacyclicity of a group (Cayley file or catalog JSON).
    AnalyzeGroup { group: String },
    /// Frobenius test for a semidirect layout with the given complement order.
    CheckFrobenius {
        group: String,
        #[arg(long)]
        complement_order: usize,
    },
    /// Associated Lie ring of a nilpotent group with elementary abelian layers.
    AssocLie {
        group: String,
        /// Also write the structure constants to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Grading criterion on a grading file `{lie, phi, p}`.
    Grade { path: PathBuf },
    /// Run one scenario kind over its built-in instances.
    Verify {
        kind: ScenarioKind,
        /// Restrict to these built-in instance names.
        #[arg(long = "instance")]
        instances: Vec<String>,
    },
    /// Run a batch or single-scenario config file.
    Run { config: PathBuf },
}

fn load_group(spec: &str) -> Result<FiniteGroup> {
    if spec.trim_start().starts_with('{') {
        let c: CatalogSpec = serde_json::from_str(spec)?;
        c.build()
    } else {
        read_cayley(Path::new(spec))
    }
}

fn single(kind: &str, instance: &str, checks: Vec<CheckRecord>) -> BatchReport {
    let mut r = ScenarioReport::new(kind, instance);
    for c in checks {
        r.push(c);
    }
    BatchReport { scenarios: vec![r] }
}

fn validate(path: &Path, as_kind: Option<&str>) -> Result<BatchReport> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let kind = match as_kind {
        Some(k) => k.to_string(),
        None if ext == "json" => "config".to_string(),
        None if ext == "lie" => "lie".to_string(),
        None => "cayley".to_string(),
    };
    let name = path.display().to_string();
    let rec = match kind.as_str() {
        "cayley" => {
            let g = read_cayley(path)?;
            CheckRecord::pass("group_axioms").with("order", g.order())
        }
        "lie" => {
            let l = parse_lie(&std::fs::read_to_string(path)?)?;
            CheckRecord::pass("lie_axioms").with("dim", l.dim())
        }
        "action" => {
            let a = frobact_core::actions::read_action(path)?;
            CheckRecord::pass("action_homomorphism")
                .with("actor_order", a.actor().order())
                .with("target_order", a.target().order())
                .with("coprime", a.is_coprime())
        }
        "config" => {
            let b = harness::load_config(path)?;
            CheckRecord::pass("config").with("scenarios", b.scenarios.len())
        }
        other => return Err(Error::InvalidSpec(format!("unknown file kind {other:?}"))),
    };
    Ok(single("validate", &name, vec![rec]))
}

fn analyze(spec: &str, cap: usize) -> Result<BatchReport> {
    let g = load_group(spec)?;
    let lcs: Vec<usize> = g.lower_central_series().iter().map(|s| s.order()).collect();
    let derived: Vec<usize> = g.derived_series().iter().map(|s| s.order()).collect();
    let m = is_metacyclic(&g);
    let mut rec = CheckRecord::pass("structure")
        .with("order", g.order())
        .with("abelian", g.is_abelian())
        .with("exponent", g.exponent())
        .with("nilpotency_class", g.nilpotency_class())
        .with("lower_central_orders", lcs)
        .with("derived_orders", derived)
        .with("center_order", g.center().order())
        .with("metacyclic", m.metacyclic);
    match g.fitting_subgroup(1, cap) {
        Ok(f) => rec = rec.with("fitting_order", f.order()),
        Err(e) => rec = rec.with_note(e.to_string()),
    }
    Ok(single("analyze_group", g.name(), vec![rec]))
}

fn check_frobenius(spec: &str, h: usize, cap: usize) -> Result<BatchReport> {
    let g = load_group(spec)?;
    let mut checks = Vec::new();
    match FrobeniusStructure::from_semidirect(&g, h) {
        Ok(fs) => {
            checks.push(
                CheckRecord::pass("frobenius")
                    .with("kernel_order", fs.kernel().order())
                    .with("complement_order", fs.complement().order()),
            );
            checks.push(match is_supersolvable(&g, cap) {
                Ok(Some(_)) => CheckRecord::pass("supersolvable"),
                Ok(None) => {
                    CheckRecord::fail("supersolvable", "no chief series with prime-order factors")
                }
                Err(e) => CheckRecord::abstain("supersolvable", e.to_string()),
            });
        }
        Err(e @ (Error::HypothesisFail(_) | Error::FixedPointWitness { .. })) => {
            checks.push(CheckRecord::fail("frobenius", e.to_string()))
        }
        Err(e) => return Err(e),
    }
    Ok(single("check_frobenius", g.name(), checks))
}

fn assoc_lie(spec: &str, emit: Option<&Path>) -> Result<BatchReport> {
    let g = load_group(spec)?;
    let a = associated_lie_ring(&g)?;
    if let Some(p) = emit {
        std::fs::write(p, write_lie(&a.ring))?;
    }
    let lie_class = a.ring.class().ok();
    let g_class = g.nilpotency_class();
    let rec = CheckRecord::from_bool("class_matches", lie_class == g_class, || {
        format!("class L(G) = {lie_class:?}, class G = {g_class:?}")
    })
    .with("layer_dims", a.dims())
    .with("dim", a.ring.dim());
    Ok(single("assoc_lie", g.name(), vec![rec]))
}

fn execute(cli: &Cli) -> Result<BatchReport> {
    let cap = cli.cap.unwrap_or(DEFAULT_ORDER_CAP);
    match &cli.command {
        Command::Validate { path, as_kind } => validate(path, as_kind.as_deref()),
        Command::AnalyzeGroup { group } => analyze(group, cap),
        Command::CheckFrobenius {
            group,
            complement_order,
        } => check_frobenius(group, *complement_order, cap),
        Command::AssocLie { group, emit } => assoc_lie(group, emit.as_deref()),
        Command::Grade { path } => {
            let mut c = ScenarioConfig::new(ScenarioKind::GradingCriterion);
            c.grading_files = vec![path.display().to_string()];
            c.cap = cli.cap;
            Ok(BatchReport {
                scenarios: harness::run_scenario(&c, Path::new("."))?,
            })
        }
        Command::Verify { kind, instances } => {
            let mut c = ScenarioConfig::new(*kind);
            c.builtin = instances.clone();
            c.cap = cli.cap;
            Ok(BatchReport {
                scenarios: harness::run_scenario(&c, Path::new("."))?,
            })
        }
        Command::Run { config } => {
            let mut batch = harness::load_config(config)?;
            if let Some(cap) = cli.cap {
                for s in &mut batch.scenarios {
                    s.cap.get_or_insert(cap);
                }
            }
            let base = config.parent().unwrap_or(Path::new("."));
            harness::run_batch(&batch, base)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let bytes = emit_report(&report, cli.format);
    let written = match &cli.out {
        Some(p) => std::fs::write(p, &bytes),
        None => std::io::Write::write_all(&mut std::io::stdout(), &bytes),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(match report.status() {
        Status::Fail => 1,
        Status::Abstain => 2,
        _ => 0,
    })
}
