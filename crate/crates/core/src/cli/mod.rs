//! Command-line driver: loads inputs, runs one of the report commands and
//! writes the JSON and text forms of the report.

pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;

pub use report::{render_human, CheckResult, InputRecord, RunReport};

use crate::builtin;
use crate::degeneration::{FamilySpec, Partition, PartitionJson};
use crate::toric::{Fan, FanJson, Section, SectionJson};

#[derive(Debug, Parser)]
#[command(name = "toric-degen", version, about = "Toric degenerations of Calabi-Yau complete intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smoothness, completeness, ray hull, reflexivity, polar dual lattice points.
    FanCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Components, strata, Clemens complex, Betti numbers, Jordan block count.
    Degenerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Monodromy criterion report.
    Monodromy {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        sections: Option<PathBuf>,
    },
    /// Period coefficients of a hypersurface family.
    Period {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        sections: Option<PathBuf>,
        #[arg(long, value_name = "M", default_value_t = 10)]
        order: usize,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Fan JSON file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    pub fan: Option<PathBuf>,
    /// Builtin fan or family name.
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub quiet: bool,
}

/// Problems with the inputs themselves; exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

struct Loaded {
    fan: Fan,
    family: Option<FamilySpec>,
    inputs: Vec<InputRecord>,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<(T, Vec<u8>), InputError> {
    let bytes = fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8_lossy(&bytes);
    let value = serde_json::from_str(&text).map_err(|e| {
        InputError(format!("{}: line {} column {}: {e}", path.display(), e.line(), e.column()))
    })?;
    Ok((value, bytes))
}

fn load_fan(common: &Common) -> Result<Loaded, InputError> {
    if let Some(path) = &common.fan {
        let (j, bytes): (FanJson, _) = read_json(path)?;
        let fan = Fan::from_json(&j).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let inputs = vec![InputRecord::new("fan", path.display().to_string(), &bytes)];
        return Ok(Loaded { fan, family: None, inputs });
    }
    let name = common.builtin.as_deref().ok_or_else(|| InputError("one of --fan or --builtin is required".into()))?;
    let (fan, family) = if builtin::is_family(name) {
        let spec = builtin::family(name)?;
        (spec.fan().clone(), Some(spec))
    } else {
        (builtin::fan(name)?, None)
    };
    let canonical = serde_json::to_vec(&fan.to_json())?;
    let inputs = vec![InputRecord::new("fan", format!("builtin:{name}"), &canonical)];
    Ok(Loaded { fan, family, inputs })
}

/// A single section object, or an array with one section per block.
fn parse_sections(value: serde_json::Value, rank: usize) -> Result<Vec<Section>, InputError> {
    let items = match value {
        serde_json::Value::Array(a) => a,
        v => vec![v],
    };
    items
        .into_iter()
        .map(|v| {
            let j: SectionJson = serde_json::from_value(v)?;
            Ok(Section::from_json(&j, rank)?)
        })
        .collect()
}

fn load_family(
    common: &Common,
    partition: Option<&Path>,
    sections: Option<&Path>,
) -> Result<(FamilySpec, Vec<InputRecord>), InputError> {
    let Loaded { fan, family, mut inputs } = load_fan(common)?;
    let mut spec = match (partition, family) {
        (Some(path), _) => {
            let (j, bytes): (PartitionJson, _) = read_json(path)?;
            inputs.push(InputRecord::new("partition", path.display().to_string(), &bytes));
            let p = Partition::from_json(&j, fan.num_rays()).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            FamilySpec::generic(fan, p)?
        }
        (None, Some(spec)) => spec,
        (None, None) => builtin::hypersurface(fan)?,
    };
    if let Some(path) = sections {
        let (v, bytes): (serde_json::Value, _) = read_json(path)?;
        inputs.push(InputRecord::new("sections", path.display().to_string(), &bytes));
        let s = parse_sections(v, spec.rank()).map_err(|e| InputError(format!("{}: {}", path.display(), e.0)))?;
        spec = spec.with_sections(s).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    }
    Ok((spec, inputs))
}

fn execute(command: &Command) -> Result<(RunReport, &Common), InputError> {
    let start = Instant::now();
    let (mut report, inputs, common) = match command {
        Command::FanCheck { common } => {
            let loaded = load_fan(common)?;
            (commands::fan_check(&loaded.fan), loaded.inputs, common)
        }
        Command::Degenerate { common, partition } => {
            let (spec, inputs) = load_family(common, partition.as_deref(), None)?;
            (commands::degenerate(&spec), inputs, common)
        }
        Command::Monodromy { common, partition, sections } => {
            let (spec, inputs) = load_family(common, partition.as_deref(), sections.as_deref())?;
            (commands::monodromy(&spec), inputs, common)
        }
        Command::Period { common, sections, order } => {
            let (spec, inputs) = load_family(common, None, sections.as_deref())?;
            (commands::period(&spec, *order)?, inputs, common)
        }
    };
    report.inputs = inputs;
    report.set_duration(start.elapsed());
    Ok((report, common))
}

fn emit(report: &RunReport, common: &Common) -> Result<(), InputError> {
    let json = report.to_json_string();
    match common.json.as_deref() {
        Some(p) if p == Path::new("-") => println!("{json}"),
        Some(p) => fs::write(p, format!("{json}\n")).map_err(|e| InputError(format!("{}: {e}", p.display())))?,
        None => {}
    }
    if !common.quiet {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(render_human(&report.to_json()).as_bytes());
    }
    Ok(())
}

/// Runs the CLI and returns the process exit code: 0 when every
/// non-assumed verdict passed, 1 on a failed check, 2 on bad input.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command).and_then(|(report, common)| emit(&report, common).map(|()| report)) {
        Ok(report) => report.exit_code(),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
