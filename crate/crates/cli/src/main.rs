//! `orad`: command-line front end.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use orthoradial::layout::{draw, emit_polyline_svg, emit_svg, DrawError};
use orthoradial::oracle::{oracle_is_valid, random_instance, InstanceKind, DEFAULT_CAP};
use orthoradial::rectangulate::{rectangulate, Mode, RectError};
use orthoradial::{is_valid, parse_instance, write_instance, CycleLabeling, FormatError, OrthoRadialRep, ValidityError, Verdict};

#[derive(Parser)]
#[command(name = "orad", version, about = "Ortho-radial representations: validity, rectangulation and drawing")]
struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the angle and rotation conditions.
    Check { file: PathBuf },
    /// Decide validity.
    Validate {
        file: PathBuf,
        /// Print the monotone cycle with its labels.
        #[arg(long)]
        witness: bool,
    },
    /// Augment until every face is a rectangle.
    Rectangulate {
        file: PathBuf,
        #[arg(long, default_value = "two_phase")]
        mode: Mode,
        /// Where to write the rectangulated instance.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the map from the result back to the input.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Compute a grid drawing of the input graph.
    Draw {
        file: PathBuf,
        #[arg(long, default_value = "two_phase")]
        mode: Mode,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Coordinates of the input graph as JSON.
        #[arg(long)]
        coords: Option<PathBuf>,
        /// Also render the rectangulated graph.
        #[arg(long)]
        full_svg: Option<PathBuf>,
    },
    /// Generate a random instance.
    Gen {
        #[arg(value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        seed: u64,
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append a line with seed and verdicts to this manifest.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Valid,
    Mutated,
}

impl From<Kind> for InstanceKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Valid => InstanceKind::Valid,
            Kind::Mutated => InstanceKind::Mutated,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Ok,
    Valid,
    Violations,
    Decreasing,
    Increasing,
    NotValid,
    InputError,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Ok | Status::Valid => 0,
            Status::Violations | Status::Decreasing | Status::Increasing | Status::NotValid => 1,
            Status::InputError => 2,
        }
    }
}

/// Outcome of one command.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunReport {
    command: String,
    status: Status,
    message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    details: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<CycleLabeling>,
    /// Milliseconds per stage.
    #[serde(default)]
    timings: BTreeMap<String, f64>,
}

impl RunReport {
    fn new(command: &str, status: Status, message: impl Into<String>) -> Self {
        RunReport {
            command: command.to_string(),
            status,
            message: message.into(),
            details: Vec::new(),
            witness: None,
            timings: BTreeMap::new(),
        }
    }

    fn time(&mut self, stage: &str, since: Instant) {
        self.timings.insert(stage.to_string(), since.elapsed().as_secs_f64() * 1e3);
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {0}: {1}")]
    Read(PathBuf, std::io::Error),
    #[error("cannot write {0}: {1}")]
    Write(PathBuf, std::io::Error),
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Input(String),
}

fn load(path: &Path) -> Result<OrthoRadialRep, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Read(path.to_path_buf(), e))?;
    Ok(parse_instance(&text)?)
}

fn save(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Write(path.to_path_buf(), e))
}

fn check(file: &Path) -> Result<RunReport, CliError> {
    let rep = load(file)?;
    let v = rep.check_conditions();
    if v.is_empty() {
        return Ok(RunReport::new("check", Status::Ok, "conditions hold"));
    }
    let mut r = RunReport::new("check", Status::Violations, format!("{} violations", v.len()));
    r.details = v.iter().map(|x| x.to_string()).collect();
    Ok(r)
}

fn validate(file: &Path, witness: bool) -> Result<RunReport, CliError> {
    let rep = load(file)?;
    let t = Instant::now();
    let report = match is_valid(&rep) {
        Ok(r) => r,
        Err(ValidityError::ConditionsViolated(v)) => {
            let mut r = RunReport::new("validate", Status::InputError, "conditions violated");
            r.details = v.iter().map(|x| x.to_string()).collect();
            return Ok(r);
        }
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    let (status, message) = match report.verdict {
        Verdict::Valid => (Status::Valid, "valid"),
        Verdict::Decreasing => (Status::Decreasing, "invalid: decreasing cycle"),
        Verdict::Increasing => (Status::Increasing, "invalid: increasing cycle"),
    };
    let mut r = RunReport::new("validate", status, message);
    r.time("is_valid", t);
    if witness {
        if let Some(w) = &report.witness {
            r.details.push(format!("darts {:?}", w.cycle));
            r.details.push(format!("labels {:?}", w.labels));
        }
        r.witness = report.witness;
    }
    Ok(r)
}

fn rect_failure(command: &str, e: &RectError) -> RunReport {
    match e {
        RectError::NotValid(v) => RunReport::new(command, Status::NotValid, format!("instance is not valid ({v:?})")),
        RectError::Validity(ValidityError::ConditionsViolated(_)) => {
            RunReport::new(command, Status::InputError, "conditions violated")
        }
        other => RunReport::new(command, Status::InputError, other.to_string()),
    }
}

fn rectangulate_cmd(file: &Path, mode: Mode, out: Option<&Path>, map: Option<&Path>) -> Result<RunReport, CliError> {
    let rep = load(file)?;
    let t = Instant::now();
    let (res, lineage) = match rectangulate(&rep, mode) {
        Ok(x) => x,
        Err(e) => return Ok(rect_failure("rectangulate", &e)),
    };
    let added = res.graph().vertex_count() - rep.graph().vertex_count();
    let mut r = RunReport::new("rectangulate", Status::Ok, format!("added {added} vertices ({mode})"));
    r.time(&mode.to_string(), t);
    if let Some(p) = out {
        save(p, &write_instance(&res))?;
    }
    if let Some(p) = map {
        save(p, &serde_json::to_string_pretty(&lineage).expect("maps serialize"))?;
    }
    Ok(r)
}

fn draw_cmd(
    file: &Path,
    mode: Mode,
    svg: Option<&Path>,
    coords: Option<&Path>,
    full_svg: Option<&Path>,
) -> Result<RunReport, CliError> {
    let rep = load(file)?;
    let t = Instant::now();
    let p = match draw(&rep, mode) {
        Ok(p) => p,
        Err(DrawError::Rect(e)) => return Ok(rect_failure("draw", &e)),
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    let mut r = RunReport::new(
        "draw",
        Status::Ok,
        format!("width {} rows {}", p.grid.width, p.grid.row_count()),
    );
    r.time("pipeline", t);
    if let Some(path) = coords {
        save(path, &serde_json::to_string_pretty(&p.drawing).expect("drawings serialize"))?;
    }
    if let Some(path) = svg {
        save(path, &emit_polyline_svg(&p.drawing))?;
    }
    if let Some(path) = full_svg {
        save(path, &emit_svg(&p.rectangulated, &p.grid))?;
    }
    Ok(r)
}

#[derive(Serialize)]
struct ManifestEntry<'a> {
    file: Option<&'a Path>,
    n: u64,
    seed: u64,
    kind: InstanceKind,
    verdict: Verdict,
    /// `None` when the oracle gave up.
    oracle_valid: Option<bool>,
}

fn gen(n: u64, seed: u64, kind: Kind, out: Option<&Path>, manifest: Option<&Path>) -> Result<RunReport, CliError> {
    let rep = random_instance(n as usize, seed, kind.into()).map_err(|e| CliError::Input(e.to_string()))?;
    let text = write_instance(&rep);
    match out {
        Some(p) => save(p, &text)?,
        None => println!("{text}"),
    }
    let verdict = is_valid(&rep).map_err(|e| CliError::Input(e.to_string()))?.verdict;
    if let Some(m) = manifest {
        let entry = ManifestEntry {
            file: out,
            n,
            seed,
            kind: kind.into(),
            verdict,
            oracle_valid: oracle_is_valid(&rep, DEFAULT_CAP).ok().map(|o| o.valid),
        };
        let mut f = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(m)
            .map_err(|e| CliError::Write(m.to_path_buf(), e))?;
        writeln!(f, "{}", serde_json::to_string(&entry).expect("entries serialize"))
            .map_err(|e| CliError::Write(m.to_path_buf(), e))?;
    }
    Ok(RunReport::new("gen", Status::Ok, format!("{} vertices, {verdict:?}", rep.graph().vertex_count())))
}

fn run(cli: &Cli) -> Result<RunReport, CliError> {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Validate { file, witness } => validate(file, *witness),
        Command::Rectangulate { file, mode, out, map } => rectangulate_cmd(file, *mode, out.as_deref(), map.as_deref()),
        Command::Draw {
            file,
            mode,
            svg,
            coords,
            full_svg,
        } => draw_cmd(file, *mode, svg.as_deref(), coords.as_deref(), full_svg.as_deref()),
        Command::Gen {
            n,
            seed,
            kind,
            out,
            manifest,
        } => gen(*n, *seed, *kind, out.as_deref(), manifest.as_deref()),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Validate { .. } => "validate",
        Command::Rectangulate { .. } => "rectangulate",
        Command::Draw { .. } => "draw",
        Command::Gen { .. } => "gen",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli).unwrap_or_else(|e| RunReport::new(command_name(&cli.command), Status::InputError, e.to_string()));
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        let out = format!("{}: {}", report.command, report.message);
        if report.status == Status::InputError {
            eprintln!("{out}");
        } else {
            println!("{out}");
        }
        for d in &report.details {
            println!("  {d}");
        }
        for (stage, ms) in &report.timings {
            println!("  {stage}: {ms:.1} ms");
        }
    }
    ExitCode::from(report.status.exit_code())
}
