//! `dashgen` command line: `validate`, `layout` and `render`, one per
//! pipeline stage.
//!
//! Exit codes: 0 success, 1 validation errors, 2 layout error, 3 I/O or
//! parse error, 4 bad usage. Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::definition::{
    build_forest, parse_definition, validate_definition, DeclarativeDefinition,
};
use crate::ir::{check_geometry, serialize_ir, LayoutStyle, VirtualDashboard};
use crate::layout::{build_layout, LayoutConfig};
use crate::render::{render_grafana, render_html_preview, GrafanaOptions, RenderedArtifact};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_LAYOUT: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

/// File name used by the `ir` backend.
pub const IR_FILE_NAME: &str = "dashboard.ir.json";

#[derive(Debug, Parser)]
#[command(
    name = "dashgen",
    version,
    about = "Compile declarative dashboard definitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a definition and list every problem found.
    Validate {
        /// Definition file, or `-` for stdin.
        input: PathBuf,
    },
    /// Print the virtual dashboard IR for a definition.
    Layout(LayoutArgs),
    /// Write dashboard artifacts for a definition.
    Render {
        #[command(flatten)]
        layout: LayoutArgs,
        #[arg(long, value_enum)]
        backend: Backend,
        /// Output directory, created if missing.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct LayoutArgs {
    /// Definition file, or `-` for stdin.
    input: PathBuf,
    /// Layout style; takes precedence over the config file's `style`.
    #[arg(long, value_parser = parse_style)]
    style: Option<LayoutStyle>,
    /// Layout configuration YAML.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn parse_style(s: &str) -> Result<LayoutStyle, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Grafana,
    Ir,
    Html,
}

/// Failure carrying its exit code; the message goes to stderr.
struct Failure {
    code: i32,
    lines: Vec<String>,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            lines: vec![message.into()],
        }
    }
}

/// Run one invocation. `argv[0]` is the program name.
pub fn run_cli<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };

    match execute(cli.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            for line in failure.lines {
                let _ = writeln!(stderr, "{line}");
            }
            failure.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Validate { input } => {
            load_definition(&input, stdin)?;
            Ok(())
        }
        Command::Layout(args) => {
            let (_, vd) = compile(&args, stdin)?;
            write_out(stdout, serialize_ir(&vd).as_bytes())
        }
        Command::Render {
            layout,
            backend,
            out,
        } => {
            let (defn, vd) = compile(&layout, stdin)?;
            let artifacts = match backend {
                Backend::Grafana => render_grafana(&vd, &defn, &GrafanaOptions::default())
                    .map_err(|e| Failure::new(EXIT_LAYOUT, e.to_string()))?,
                Backend::Ir => vec![RenderedArtifact::new(IR_FILE_NAME, serialize_ir(&vd))],
                Backend::Html => vec![render_html_preview(&vd)],
            };
            write_artifacts(&out, &artifacts)?;
            let listing: String = artifacts
                .iter()
                .map(|a| format!("{}\n", a.relative_path))
                .collect();
            write_out(stdout, listing.as_bytes())
        }
    }
}

fn write_out(stdout: &mut dyn Write, bytes: &[u8]) -> Result<(), Failure> {
    stdout
        .write_all(bytes)
        .and_then(|()| stdout.flush())
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot write output: {e}")))
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::new(EXIT_IO, format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot read {}: {e}", path.display())))
}

fn load_definition(path: &Path, stdin: &mut dyn Read) -> Result<DeclarativeDefinition, Failure> {
    let text = read_input(path, stdin)?;
    let defn = parse_definition(&text)
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    let errors = validate_definition(&defn);
    if !errors.is_empty() {
        return Err(Failure {
            code: EXIT_INVALID,
            lines: errors.iter().map(ToString::to_string).collect(),
        });
    }
    Ok(defn)
}

fn load_config(args: &LayoutArgs) -> Result<LayoutConfig, Failure> {
    match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_IO, format!("cannot read {}: {e}", path.display()))
            })?;
            LayoutConfig::from_yaml_with_style(&text, args.style)
                .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
        }
        None => args.style.map(LayoutConfig::new).ok_or_else(|| {
            Failure::new(
                EXIT_USAGE,
                "a layout style is required: pass --style or a --config file with `style`",
            )
        }),
    }
}

fn compile(
    args: &LayoutArgs,
    stdin: &mut dyn Read,
) -> Result<(DeclarativeDefinition, VirtualDashboard), Failure> {
    let cfg = load_config(args)?;
    let defn = load_definition(&args.input, stdin)?;
    let vd = build_layout(&build_forest(&defn), &cfg)
        .map_err(|e| Failure::new(EXIT_LAYOUT, e.to_string()))?;
    let violations = check_geometry(&vd);
    if !violations.is_empty() {
        return Err(Failure {
            code: EXIT_LAYOUT,
            lines: violations
                .iter()
                .map(|v| format!("geometry: {v}"))
                .collect(),
        });
    }
    Ok((defn, vd))
}

fn write_artifacts(dir: &Path, artifacts: &[RenderedArtifact]) -> Result<(), Failure> {
    let io = |e: std::io::Error| {
        Failure::new(EXIT_IO, format!("cannot write to {}: {e}", dir.display()))
    };
    fs::create_dir_all(dir).map_err(io)?;
    for artifact in artifacts {
        fs::write(dir.join(&artifact.relative_path), &artifact.content).map_err(io)?;
    }
    Ok(())
}
