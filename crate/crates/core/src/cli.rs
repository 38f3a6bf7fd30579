//! The `lagdr` command line: parsing, run configuration, report emission
//! and the reproduction targets.
//!
//! Every run produces one JSON report embedding the configuration and the
//! crate version. The table format is rendered from that JSON. Exit codes:
//! 0 on success, 2 when a checked claim fails, 1 on errors and exhausted caps.

use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::derham::{rigidity_verdict, Caps, CohomologyOptions, DeRhamComplex};
use crate::error::{Error, Result};
use crate::homology::{
    alpha_torsion_comparison, cohen_macaulay_check, conormal_dual_depth, coordinate_ring,
    default_bound, depth_via_resolution_capped,
};
use crate::polyring::Polynomial;
use crate::symplectic::{check_involutive, SymplecticRing};
use crate::varieties::{
    check_parametrization, normalization_map, plane_curve_from_str, swallowtail, Family,
    LagrangianPresentation, ParametrizationMap, Route, VarietyFile,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CACHE_ENV: &str = "LAGDR_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "lagdr", version, about = "Exact cohomology of lagrangian de Rham complexes")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Report format; JSON is the source of truth, tables are rendered from it.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for per-degree computations.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Report every elapsed time as 0, making reports reproducible byte for byte.
    #[arg(long, global = true)]
    pub no_timings: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Cap on S-pairs in every Gröbner computation.
    #[arg(long, global = true)]
    pub max_pairs: Option<usize>,
    /// Cap on the dimension of a graded slice.
    #[arg(long, global = true)]
    pub max_slice_dim: Option<usize>,
    /// Cap on the seconds spent in one internal degree.
    #[arg(long, global = true)]
    pub timeout_per_degree: Option<u64>,
    /// Directory caching generated swallowtail varieties.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate and save varieties.
    #[command(subcommand)]
    Variety(VarietyCommand),
    /// Per-degree cohomology table of the de Rham complex.
    Cohomology {
        #[arg(long)]
        variety: PathBuf,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: Option<i64>,
        /// Also compute H².
        #[arg(long)]
        with_h2: bool,
    },
    /// Check a property of a variety file.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[arg(long)]
        variety: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: Option<i64>,
    },
    /// Depth of a module via its minimal free resolution.
    Depth {
        #[arg(long, value_enum, default_value_t = ModuleKind::ConormalDual)]
        module: ModuleKind,
        #[arg(long)]
        variety: PathBuf,
        /// Cap on S-pairs for this computation.
        #[arg(long)]
        cap: Option<usize>,
        /// Seconds before the computation gives up.
        #[arg(long, default_value_t = 600)]
        time_limit: u64,
    },
    /// Run one of the pinned reproduction targets.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        max_degree: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VarietyCommand {
    Gen {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value = "kernel")]
        route: Route,
        /// Curve polynomial in `q` and `p`.
        #[arg(long)]
        poly: Option<String>,
        /// Curve weights, e.g. `q=2,p=3`.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Swallowtail,
    Curve,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Involutivity,
    Parametrization,
    Cm,
    AlphaTorsion,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleKind {
    ConormalDual,
    CoordinateRing,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    LemmaH1,
    SwallowtailRigid,
    CmCheck,
    AlphaTorsion,
}

/// Validated configuration of one run; embedded verbatim in its report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandConfig,
    pub format: Format,
    pub workers: usize,
    pub timings: bool,
    pub caps: CapConfig,
    pub report: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapConfig {
    pub max_pairs: Option<usize>,
    pub max_slice_dim: Option<usize>,
    pub timeout_per_degree_s: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum CommandConfig {
    VarietyGen {
        family: FamilyKind,
        n: usize,
        k: usize,
        route: Route,
        poly: Option<String>,
        weights: Option<(u32, u32)>,
        out: Option<PathBuf>,
    },
    Cohomology {
        variety: PathBuf,
        p: usize,
        max_degree: Option<i64>,
        with_h2: bool,
    },
    Check {
        what: CheckKind,
        variety: PathBuf,
        max_degree: Option<i64>,
    },
    Depth {
        module: ModuleKind,
        variety: PathBuf,
        cap: Option<usize>,
        time_limit_s: u64,
    },
    Reproduce {
        target: Target,
        k: Option<usize>,
        n: Option<usize>,
        max_degree: Option<i64>,
    },
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let g = cli.global;
        let command = match cli.command {
            Command::Variety(VarietyCommand::Gen {
                family,
                n,
                k,
                route,
                poly,
                weights,
                out,
            }) => CommandConfig::VarietyGen {
                family,
                n,
                k,
                route,
                poly,
                weights: weights.as_deref().map(parse_weights).transpose()?,
                out,
            },
            Command::Cohomology {
                variety,
                p,
                max_degree,
                with_h2,
            } => CommandConfig::Cohomology {
                variety,
                p,
                max_degree,
                with_h2,
            },
            Command::Check {
                what,
                variety,
                max_degree,
            } => CommandConfig::Check {
                what,
                variety,
                max_degree,
            },
            Command::Depth {
                module,
                variety,
                cap,
                time_limit,
            } => CommandConfig::Depth {
                module,
                variety,
                cap,
                time_limit_s: time_limit,
            },
            Command::Reproduce {
                target,
                k,
                n,
                max_degree,
            } => CommandConfig::Reproduce {
                target,
                k,
                n,
                max_degree,
            },
        };
        let config = RunConfig {
            command,
            format: g.format,
            workers: g.workers,
            timings: !g.no_timings,
            caps: CapConfig {
                max_pairs: g.max_pairs,
                max_slice_dim: g.max_slice_dim,
                timeout_per_degree_s: g.timeout_per_degree,
            },
            report: g.report,
            cache_dir: g.cache_dir,
        };
        config.validate()?;
        Ok(config)
    }

    /// Caps positive, workers positive, degree bounds non-negative.
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: Option<u64>| match v {
            Some(0) => Err(Error::InvalidArgument(format!("{name} must be positive"))),
            _ => Ok(()),
        };
        positive("--max-pairs", self.caps.max_pairs.map(|v| v as u64))?;
        positive("--max-slice-dim", self.caps.max_slice_dim.map(|v| v as u64))?;
        positive("--timeout-per-degree", self.caps.timeout_per_degree_s)?;
        positive("--workers", Some(self.workers as u64))?;
        match &self.command {
            CommandConfig::Depth { cap, time_limit_s, .. } => {
                positive("--cap", cap.map(|v| v as u64))?;
                positive("--time-limit", Some(*time_limit_s))?;
            }
            CommandConfig::Reproduce { k: Some(0), .. } | CommandConfig::VarietyGen { k: 0, .. } => {
                return Err(Error::InvalidArgument("k must be at least 1".into()))
            }
            CommandConfig::VarietyGen { n: 0, .. } | CommandConfig::Reproduce { n: Some(0), .. } => {
                return Err(Error::InvalidArgument("n must be at least 1".into()))
            }
            _ => {}
        }
        if let Some(d) = self.max_degree() {
            if d < 0 {
                return Err(Error::InvalidArgument(format!("--max-degree {d} is negative")));
            }
        }
        Ok(())
    }

    fn max_degree(&self) -> Option<i64> {
        match &self.command {
            CommandConfig::Cohomology { max_degree, .. }
            | CommandConfig::Check { max_degree, .. }
            | CommandConfig::Reproduce { max_degree, .. } => *max_degree,
            _ => None,
        }
    }

    fn cohomology_options(&self, max_degree: Option<i64>) -> CohomologyOptions {
        CohomologyOptions {
            max_degree,
            min_degree: None,
            workers: self.workers,
            caps: Caps {
                max_slice_dim: self.caps.max_slice_dim,
                timeout_per_degree: self.caps.timeout_per_degree_s.map(Duration::from_secs),
            },
            timings: self.timings,
        }
    }
}

fn parse_weights(text: &str) -> Result<(u32, u32)> {
    let (mut q, mut p) = (None, None);
    for part in text.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("weight `{part}` is not of the form name=value")))?;
        let w: u32 = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("weight `{value}` is not a positive integer")))?;
        match name.trim() {
            "q" => q = Some(w),
            "p" => p = Some(w),
            other => return Err(Error::InvalidArgument(format!("unknown curve variable `{other}`"))),
        }
    }
    match (q, p) {
        (Some(q), Some(p)) => Ok((q, p)),
        _ => Err(Error::InvalidArgument("weights need both q and p".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The checked claim holds.
    Pass,
    /// The checked claim fails.
    Fail,
    /// Some part of the computation hit a resource cap.
    Capped,
    /// Nothing was claimed.
    Info,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Info => 0,
            Status::Fail => 2,
            Status::Capped => 1,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Capped => "capped",
            Status::Info => "info",
        };
        f.write_str(s)
    }
}

/// The result of [`run`]: a JSON report, its verdict and warnings for stderr.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub report: Value,
    pub warnings: Vec<String>,
}

fn outcome(config: &RunConfig, status: Status, message: String, result: Value, warnings: Vec<String>) -> Outcome {
    let report = json!({
        "tool": "lagdr",
        "version": VERSION,
        "verdict": { "status": status, "message": message },
        "config": config,
        "result": result,
    });
    Outcome {
        status,
        report,
        warnings,
    }
}

/// Runs one configured command.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    config.validate()?;
    let mut warnings = Vec::new();
    if config.max_degree() == Some(0) {
        warnings.push("degree bound 0 is degenerate: only internal degrees ≤ 0 are checked".to_string());
    }
    let max_pairs = config.caps.max_pairs;
    match &config.command {
        CommandConfig::VarietyGen {
            family,
            n,
            k,
            route,
            poly,
            weights,
            out,
        } => {
            let (l, cached) = match family {
                FamilyKind::Swallowtail => swallowtail_cached(*n, *k, *route, config.cache_dir.as_deref(), max_pairs, &mut warnings)?,
                FamilyKind::Curve => {
                    let poly = poly
                        .as_deref()
                        .ok_or_else(|| Error::InvalidArgument("--poly is required for curves".into()))?;
                    let (wq, wp) = weights
                        .ok_or_else(|| Error::InvalidArgument("--weights is required for curves".into()))?;
                    (plane_curve_from_str(poly, wq, wp)?, false)
                }
            };
            let mut result = json!({
                "family": l.family().to_string(),
                "generators": l.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "degrees": l.generator_degrees(),
                "W": l.pairing_weight(),
                "expected_dimension": l.expected_dimension(),
                "from_cache": cached,
            });
            match out {
                Some(path) => {
                    l.save(path)?;
                    result["out"] = json!(path);
                }
                None => result["variety"] = serde_json::to_value(l.to_file())?,
            }
            Ok(outcome(config, Status::Info, format!("generated {}", l.family()), result, warnings))
        }
        CommandConfig::Cohomology {
            variety,
            p,
            max_degree,
            with_h2,
        } => {
            let l = LagrangianPresentation::load(variety)?;
            let complex = DeRhamComplex::new(&l)?;
            let options = config.cohomology_options(*max_degree);
            let report = complex.cohomology_table(*p, &options)?;
            let mut capped = report.capped();
            let mut result = serde_json::to_value(&report)?;
            if *with_h2 && *p != 2 {
                let h2 = complex.cohomology_table(2, &options)?;
                capped.extend(h2.capped());
                result["h2"] = serde_json::to_value(&h2)?;
            }
            let (status, message) = if capped.is_empty() {
                (Status::Info, format!("H^{p} computed for degrees {}..={}", report.lower, report.bound))
            } else {
                (Status::Capped, format!("resource cap exceeded in {} degree(s)", capped.len()))
            };
            Ok(outcome(config, status, message, result, warnings))
        }
        CommandConfig::Check {
            what,
            variety,
            max_degree,
        } => run_check(config, *what, variety, *max_degree, warnings),
        CommandConfig::Depth {
            module,
            variety,
            cap,
            time_limit_s,
        } => {
            let l = LagrangianPresentation::load(variety)?;
            let pairs = cap.or(max_pairs);
            let limit = Some(Duration::from_secs(*time_limit_s));
            let cert = match module {
                ModuleKind::ConormalDual => conormal_dual_depth(&l, pairs, limit),
                ModuleKind::CoordinateRing => crate::groebner::with_time_limit(limit, || {
                    depth_via_resolution_capped("coordinate-ring", &coordinate_ring(&l), pairs)
                }),
            };
            match cert {
                Ok(c) => {
                    let message = format!("depth {} (pd {} over {} variables)", c.depth, c.projective_dimension, c.ambient_dimension);
                    let mut result = serde_json::to_value(&c)?;
                    result["family"] = json!(l.family().to_string());
                    Ok(outcome(config, Status::Info, message, result, warnings))
                }
                Err(Error::ResourceCap(msg)) => Ok(outcome(
                    config,
                    Status::Capped,
                    format!("resource cap exceeded: {msg}"),
                    json!({ "family": l.family().to_string() }),
                    warnings,
                )),
                Err(e) => Err(e),
            }
        }
        CommandConfig::Reproduce {
            target,
            k,
            n,
            max_degree,
        } => run_reproduce(config, *target, *k, *n, *max_degree, warnings),
    }
}

fn run_check(
    config: &RunConfig,
    what: CheckKind,
    variety: &Path,
    max_degree: Option<i64>,
    warnings: Vec<String>,
) -> Result<Outcome> {
    if what == CheckKind::Involutivity {
        // validated loading would reject a non-involutive file outright
        let file: VarietyFile = serde_json::from_str(&std::fs::read_to_string(variety)?)?;
        let s = SymplecticRing::from_descriptor(&file.ring)?;
        let gens = file
            .generators
            .iter()
            .map(|g| Polynomial::parse(s.ring(), g))
            .collect::<Result<Vec<_>>>()?;
        let r = check_involutive(&s, &gens)?;
        let witness = r.witness.as_ref().map(|(a, b, rem)| json!({"a": a, "b": b, "remainder": rem.to_string()}));
        let status = if r.involutive { Status::Pass } else { Status::Fail };
        let message = if r.involutive {
            "the ideal is closed under the Poisson bracket".to_string()
        } else {
            "the ideal is not closed under the Poisson bracket".to_string()
        };
        let result = json!({ "family": file.family.to_string(), "involutive": r.involutive, "witness": witness });
        return Ok(outcome(config, status, message, result, warnings));
    }
    let l = LagrangianPresentation::load(variety)?;
    match what {
        CheckKind::Involutivity => unreachable!("handled above"),
        CheckKind::Parametrization => {
            let file: VarietyFile = serde_json::from_str(&std::fs::read_to_string(variety)?)?;
            let map = match (&file.parametrization, l.family()) {
                (Some(json), _) => ParametrizationMap::from_json(json, l.ambient())?,
                (None, Family::Swallowtail { n, k, .. }) => normalization_map(*n, *k)?,
                _ => return Err(Error::InvalidArgument("the variety has no parametrization".into())),
            };
            let holds = check_parametrization(&l, &map)?;
            let status = if holds { Status::Pass } else { Status::Fail };
            let result = json!({
                "family": l.family().to_string(),
                "parametrization": map.to_json(),
                "generators_vanish_on_image": holds,
            });
            Ok(outcome(config, status, format!("parametrization check: {status}"), result, warnings))
        }
        CheckKind::Cm => {
            let r = cohen_macaulay_check(&l, config.caps.max_pairs)?;
            let status = if r.cohen_macaulay { Status::Pass } else { Status::Fail };
            let message = format!("depth {} against dimension {}", r.certificate.depth, r.dimension);
            Ok(outcome(config, status, message, serde_json::to_value(&r)?, warnings))
        }
        CheckKind::AlphaTorsion => {
            let bound = max_degree.unwrap_or_else(|| default_bound(&l));
            let r = alpha_torsion_comparison(&l, bound)?;
            let status = if r.matches { Status::Pass } else { Status::Fail };
            let message = format!("Coker(α) and Tors(Ω¹) dimensions agree up to degree {bound}: {}", r.matches);
            Ok(outcome(config, status, message, serde_json::to_value(&r)?, warnings))
        }
    }
}

fn run_reproduce(
    config: &RunConfig,
    target: Target,
    k: Option<usize>,
    n: Option<usize>,
    max_degree: Option<i64>,
    mut warnings: Vec<String>,
) -> Result<Outcome> {
    let max_pairs = config.caps.max_pairs;
    let cache = config.cache_dir.as_deref();
    match target {
        Target::LemmaH1 | Target::SwallowtailRigid => {
            let (n, k) = match target {
                Target::LemmaH1 => (2, k.unwrap_or(2)),
                _ => (n.unwrap_or(2), 1),
            };
            let (l, _) = swallowtail_cached(n, k, Route::Kernel, cache, max_pairs, &mut warnings)?;
            let (verdict, report) = rigidity_verdict(&l, max_degree, &config.cohomology_options(max_degree))?;
            let status = if !verdict.capped.is_empty() {
                Status::Capped
            } else if verdict.vanishes_up_to_bound {
                Status::Pass
            } else {
                Status::Fail
            };
            let result = json!({
                "claim": format!("H¹ of Σ_{{{n},{k}}} vanishes in every internal degree up to the bound"),
                "rigidity": verdict,
                "report": report,
            });
            Ok(outcome(config, status, verdict.label.clone(), result, warnings))
        }
        Target::CmCheck => {
            let k_max = k.unwrap_or(3);
            let mut reports = Vec::new();
            let mut all = true;
            for k in 1..=k_max {
                let (l, _) = swallowtail_cached(2, k, Route::Kernel, cache, max_pairs, &mut warnings)?;
                let r = cohen_macaulay_check(&l, max_pairs)?;
                all &= r.cohen_macaulay && r.certificate.depth == 2;
                reports.push(r);
            }
            let status = if all { Status::Pass } else { Status::Fail };
            let result = json!({
                "claim": format!("O of Σ_{{2,k}} has depth 2 for k = 1..={k_max}"),
                "certificates": reports,
            });
            Ok(outcome(config, status, format!("Cohen–Macaulay check: {status}"), result, warnings))
        }
        Target::AlphaTorsion => {
            let mut reports = Vec::new();
            for (poly, wq, wp) in [("p^2 - q^3", 2, 3), ("p^2 - q^5", 2, 5)] {
                let l = plane_curve_from_str(poly, wq, wp)?;
                let bound = max_degree.unwrap_or_else(|| default_bound(&l));
                reports.push(alpha_torsion_comparison(&l, bound)?);
            }
            let all = reports.iter().all(|r| r.matches);
            let status = if all { Status::Pass } else { Status::Fail };
            let result = json!({
                "claim": "dim Coker(α) = dim Tors(Ω¹) in every degree",
                "curves": reports,
            });
            Ok(outcome(config, status, format!("α-map / torsion identity: {status}"), result, warnings))
        }
    }
}

/// `Σ_{n,k}` from the cache directory when present there, otherwise computed
/// (and stored when a cache directory is configured).
pub fn swallowtail_cached(
    n: usize,
    k: usize,
    route: Route,
    cache_dir: Option<&Path>,
    max_pairs: Option<usize>,
    warnings: &mut Vec<String>,
) -> Result<(LagrangianPresentation, bool)> {
    let path = cache_dir.map(|d| d.join(format!("swallowtail-{n}-{k}-{route}.json")));
    if let Some(path) = &path {
        if path.exists() {
            match LagrangianPresentation::load(path) {
                Ok(l) if *l.family() == (Family::Swallowtail { n, k, route }) => return Ok((l, true)),
                Ok(_) => warnings.push(format!("{} holds a different family; recomputing", path.display())),
                Err(e) => warnings.push(format!("ignoring unreadable cache file {}: {e}", path.display())),
            }
        }
    }
    let l = swallowtail(n, k, route, max_pairs)?;
    if let Some(path) = &path {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        l.save(path)?;
    }
    Ok((l, false))
}

/// Human-readable rendering of a JSON report: scalars as `key: value`,
/// arrays of flat objects as aligned tables, nested objects indented.
pub fn render_table(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat_object(v: &Value) -> bool {
    v.as_object()
        .is_some_and(|o| o.values().all(|x| !x.is_object() && !x.is_array()))
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let Some(obj) = value.as_object() else {
        out.push_str(&format!("{pad}{}\n", scalar(value)));
        return;
    };
    for (key, v) in obj {
        match v {
            Value::Object(_) => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_into(v, indent + 2, out);
            }
            Value::Array(items) if !items.is_empty() && items.iter().all(is_flat_object) => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_rows(items, indent + 2, out);
            }
            Value::Array(items) if items.iter().any(Value::is_object) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&format!("{pad}  [{i}]\n"));
                    render_into(item, indent + 4, out);
                }
            }
            Value::Array(_) => out.push_str(&format!("{pad}{key}: {v}\n")),
            _ => out.push_str(&format!("{pad}{key}: {}\n", scalar(v))),
        }
    }
}

fn render_rows(items: &[Value], indent: usize, out: &mut String) {
    let mut headers: Vec<String> = Vec::new();
    for item in items {
        for key in item.as_object().expect("flat object").keys() {
            if !headers.contains(key) {
                headers.push(key.clone());
            }
        }
    }
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|item| headers.iter().map(|h| item.get(h).map_or("-".to_string(), scalar)).collect())
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| rows.iter().map(|r| r[i].chars().count()).chain([h.chars().count()]).max().unwrap_or(0))
        .collect();
    let pad = " ".repeat(indent);
    let line = |cells: &[String]| {
        let cells: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        format!("{pad}{}\n", cells.join("  ").trim_end())
    };
    out.push_str(&line(&headers));
    for r in &rows {
        out.push_str(&line(r));
    }
}

/// Serializes the report in the configured format.
pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&outcome.report).expect("serializable") + "\n",
        Format::Table => render_table(&outcome.report),
    }
}

/// Parses arguments, runs, emits the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match run(&config) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            let text = render(&outcome, config.format);
            let written = match &config.report {
                Some(path) => std::fs::write(path, text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write the report: {e}");
                return 1;
            }
            let message = outcome.report["verdict"]["message"].as_str().unwrap_or("");
            match outcome.status {
                Status::Capped => eprintln!("{message}"),
                Status::Fail => eprintln!("verification failed: {message}"),
                _ => {}
            }
            outcome.status.exit_code()
        }
        Err(Error::ResourceCap(msg)) => {
            eprintln!("resource cap exceeded: {msg}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
