use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use kbforge_core::emit::{emit_ascii_diagram, emit_unicode_table, emit_xkb, emit_xkb_block, RegisterPair};
use kbforge_core::sim::parse_events;
use kbforge_core::{
    builtin_layout_text, builtin_rules_text, diff_layouts, parse_layout, parse_rules, run_placement, serialize_layout,
    validate_profile, Layout, Mode, RuleList, SimState, Status, ValidationProfile, BUILTIN_NAMES,
};

/// Compile, check and export extended keyboard layouts.
///
/// Wherever a file is expected, `builtin:<name>` selects a shipped asset
/// (bds, phonetic, phonetic-bds, latin).
#[derive(Parser)]
#[command(name = "kbforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fill registers 3 and 4 of a base layout from a rule file.
    Compile {
        #[arg(long)]
        base: String,
        #[arg(long)]
        rules: String,
        /// Output file; the layout goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recompile the shipped layouts and compare them with the reference tables.
    CheckGoldens {
        /// Read `<name>.layout` and `<name>.rules` from this directory instead
        /// of the embedded copies.
        #[arg(long)]
        assets: Option<PathBuf>,
    },
    /// Export a layout.
    Emit {
        #[arg(long)]
        layout: String,
        #[arg(long, value_enum)]
        format: Format,
        /// Register pair drawn by the ascii format.
        #[arg(long, value_enum, default_value = "low")]
        registers: Registers,
        /// Layout of the other script, written as a second xkb block.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Check a layout against a symbol profile.
    Validate {
        #[arg(long)]
        layout: String,
        #[arg(long)]
        profile: String,
    },
    /// List the cells in which two layouts differ.
    Diff { a: String, b: String },
    /// Type a sequence of key events.
    Simulate {
        #[arg(long)]
        cyr: String,
        #[arg(long)]
        lat: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Whitespace-separated tokens such as `S+D03 L3+E08 CL+C01`.
        #[arg(long, allow_hyphen_values = true)]
        events: String,
        /// Start with CapsLock latched.
        #[arg(long)]
        capslock: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Xkb,
    Table,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Registers {
    Low,
    High,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Cyrillic,
    Latin,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Cyrillic => Mode::Cyrillic,
            ModeArg::Latin => Mode::Latin,
        }
    }
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Mismatch,
}

enum Asset {
    Layout,
    Rules,
}

fn read_source(source: &str, kind: Asset) -> Result<String> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let text = match kind {
            Asset::Layout => builtin_layout_text(name),
            Asset::Rules => builtin_rules_text(name),
        };
        return Ok(text?.to_string());
    }
    fs::read_to_string(source).with_context(|| format!("cannot read {source}"))
}

fn load_layout(source: &str) -> Result<Layout> {
    parse_layout(&read_source(source, Asset::Layout)?).with_context(|| format!("in {source}"))
}

fn load_rules(source: &str) -> Result<RuleList> {
    parse_rules(&read_source(source, Asset::Rules)?).with_context(|| format!("in {source}"))
}

fn compile(base: &str, rules: &str, output: Option<&Path>) -> Result<Outcome> {
    let base = load_layout(base)?.base_only();
    let (layout, report) = run_placement(&base, &load_rules(rules)?);
    for o in report
        .outcomes
        .iter()
        .filter(|o| !matches!(o.status, Status::PlacedAt(_)))
    {
        eprintln!("{o}");
    }
    let text = serialize_layout(&layout);
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
            println!("{}", report.summary());
        }
        None => {
            print!("{text}");
            eprintln!("{}", report.summary());
        }
    }
    Ok(Outcome::Ok)
}

fn check_goldens(assets: Option<&Path>) -> Result<Outcome> {
    let mut outcome = Outcome::Ok;
    for name in BUILTIN_NAMES {
        let (golden, rules) = match assets {
            Some(dir) => {
                let layout = dir.join(format!("{name}.layout"));
                let rules = dir.join(format!("{name}.rules"));
                (
                    load_layout(&layout.to_string_lossy())?,
                    load_rules(&rules.to_string_lossy())?,
                )
            }
            None => (
                load_layout(&format!("builtin:{name}"))?,
                load_rules(&format!("builtin:{name}"))?,
            ),
        };
        let (compiled, report) = run_placement(&golden.base_only(), &rules);
        let diff = diff_layouts(&compiled, &golden);
        let unused = report.skipped() + report.unplaceable();
        if diff.is_empty() && unused == 0 {
            println!("{name}: ok ({})", report.summary());
            continue;
        }
        outcome = Outcome::Mismatch;
        println!("{name}: MISMATCH ({})", report.summary());
        print!("{diff}");
        for o in report
            .outcomes
            .iter()
            .filter(|o| !matches!(o.status, Status::PlacedAt(_)))
        {
            println!("{o}");
        }
    }
    Ok(outcome)
}

fn emit(layout: &str, format: Format, registers: Registers, pair: Option<&str>) -> Result<Outcome> {
    let layout = load_layout(layout)?;
    let text = match format {
        Format::Table => emit_unicode_table(&layout),
        Format::Ascii => {
            let pair = match registers {
                Registers::Low => RegisterPair::Low12,
                Registers::High => RegisterPair::High34,
            };
            emit_ascii_diagram(&layout, pair)
        }
        Format::Xkb => match pair {
            None => emit_xkb_block(&layout, layout.name(), true),
            Some(other) => {
                let other = load_layout(other)?;
                let (cyr, lat) = match layout.mode() {
                    Mode::Cyrillic => (&layout, &other),
                    Mode::Latin => (&other, &layout),
                };
                emit_xkb(cyr, lat, (cyr.name(), lat.name()))?
            }
        },
    };
    print!("{text}");
    Ok(Outcome::Ok)
}

fn validate(layout: &str, profile: &str) -> Result<Outcome> {
    let profile = ValidationProfile::by_name(profile)?;
    let report = validate_profile(&load_layout(layout)?, &profile)?;
    print!("{report}");
    Ok(if report.passed() {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

fn diff(a: &str, b: &str) -> Result<Outcome> {
    let d = diff_layouts(&load_layout(a)?, &load_layout(b)?);
    print!("{d}");
    Ok(if d.is_empty() { Outcome::Ok } else { Outcome::Mismatch })
}

fn simulate(cyr: &str, lat: &str, mode: Mode, events: &str, capslock: bool) -> Result<Outcome> {
    let events = parse_events(events)?;
    let state = SimState::new(load_layout(cyr)?, load_layout(lat)?, mode)?.set_capslock(capslock);
    println!("{}", state.type_sequence(&events));
    println!("{}", state.indicator());
    Ok(Outcome::Ok)
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Compile { base, rules, output } => compile(&base, &rules, output.as_deref()),
        Command::CheckGoldens { assets } => check_goldens(assets.as_deref()),
        Command::Emit {
            layout,
            format,
            registers,
            pair,
        } => emit(&layout, format, registers, pair.as_deref()),
        Command::Validate { layout, profile } => validate(&layout, &profile),
        Command::Diff { a, b } => diff(&a, &b),
        Command::Simulate {
            cyr,
            lat,
            mode,
            events,
            capslock,
        } => simulate(&cyr, &lat, mode.into(), &events, capslock),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match run(cli) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Mismatch) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::io::stdout().flush().ok();
    ExitCode::from(status)
}
