//! The `sfpack` command line: parse an ideal, run one analysis, print JSON.
//!
//! Exit codes: 0 success, 2 input or argument error, 3 guard exceeded,
//! 4 internal invariant violation or theorem alarm.

pub mod commands;
pub mod input;
pub mod render;

use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use sfpack::Limits;

use commands::{CommandError, Report, Which};
use input::{parse_document, InputDocument};

/// Environment variable naming the default guard profile.
pub const PROFILE_ENV: &str = "SFPACK_GUARD_PROFILE";

#[derive(Debug, Parser)]
#[command(
    name = "sfpack",
    version,
    about = "Square-free monomial ideals and the packing property"
)]
pub struct Cli {
    /// Guard profile: small, default or large.
    #[arg(long, global = true)]
    pub profile: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Also write the text rendering to stderr.
    #[arg(long, global = true)]
    pub summary: bool,
    /// Add a non-canonical `timing` field.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyhedronKind {
    Np,
    Sp,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Input file (JSON or compact text); `-` reads stdin.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report.
    Analyze {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Alexander dual.
    Dual {
        #[command(flatten)]
        src: Source,
    },
    /// Associated primes.
    Decompose {
        #[command(flatten)]
        src: Source,
    },
    /// Set variables to 0 (delete) and 1 (contract).
    Minor {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<String>,
    },
    /// Packing property by a scan of all minors.
    Packing {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        all_failing: bool,
    },
    /// Waldschmidt constant, optionally with alpha(I^(m))/m for m up to the limit.
    Waldschmidt {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        limit_m: Option<u32>,
    },
    /// Initial degree.
    Alpha {
        #[command(flatten)]
        src: Source,
    },
    /// Newton or symbolic polyhedron.
    Polyhedron {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum)]
        which: PolyhedronKind,
        #[arg(long)]
        vertices: bool,
        /// Comma separated point such as `1/2,1,0`.
        #[arg(long, allow_hyphen_values = true)]
        contains: Option<String>,
    },
    /// Ordinary and symbolic powers.
    Sympower {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        max_m: Option<u32>,
    },
    /// Search for an (a:b) rainbow coloring.
    Coloring {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// tau, pi, tau_f, pi_f of the hypergraph and its blocker.
    Invariants {
        #[command(flatten)]
        src: Source,
    },
    /// Search the clutters on at most N vertices for counterexamples.
    Probe {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn failure(e: CommandError) -> Outcome {
    Outcome {
        code: e.code,
        stdout: to_json(&e.to_json()),
        stderr: format!("sfpack: {}: {}\n", e.kind, e.message),
    }
}

fn load(src: &Source, stdin: &mut dyn Read) -> Result<InputDocument, CommandError> {
    let text = if src.input == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| CommandError::input(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&src.input).map_err(|e| CommandError::input(format!("{}: {e}", src.input)))?
    };
    Ok(parse_document(&text)?)
}

fn dispatch(cli: &Cli, limits: &Limits, stdin: &mut dyn Read) -> Result<Report, CommandError> {
    use Command::*;
    match &cli.command {
        Analyze { src, max_m } => commands::analyze(&load(src, stdin)?, *max_m, limits),
        Dual { src } => commands::dual(&load(src, stdin)?, limits),
        Decompose { src } => commands::decompose(&load(src, stdin)?),
        Minor { src, delete, contract } => commands::minor(&load(src, stdin)?, delete, contract),
        Packing { src, all_failing } => commands::packing(&load(src, stdin)?, *all_failing, limits),
        Waldschmidt { src, limit_m } => commands::waldschmidt_cmd(&load(src, stdin)?, *limit_m, limits),
        Alpha { src } => commands::alpha_cmd(&load(src, stdin)?),
        Polyhedron {
            src,
            which,
            vertices,
            contains,
        } => {
            let which = match which {
                PolyhedronKind::Np => Which::Np,
                PolyhedronKind::Sp => Which::Sp,
            };
            commands::polyhedron(&load(src, stdin)?, which, *vertices, contains.as_deref(), limits)
        }
        Sympower { src, max_m } => commands::sympower(&load(src, stdin)?, *max_m, limits),
        Coloring { src, a, b } => commands::coloring(&load(src, stdin)?, *a, *b, limits),
        Invariants { src } => commands::invariants(&load(src, stdin)?),
        Probe { kind, max_n } => commands::probe(kind, *max_n, limits),
    }
}

/// Run one invocation. `args` includes the program name; `env_profile` is
/// the value of [`PROFILE_ENV`], if set.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, env_profile: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let mut out = failure(CommandError {
                code: 2,
                kind: "usage",
                message: e
                    .to_string()
                    .lines()
                    .next()
                    .unwrap_or_default()
                    .trim_start_matches("error: ")
                    .to_string(),
            });
            out.stderr = e.to_string();
            return out;
        }
    };
    let profile = cli.profile.as_deref().or(env_profile).unwrap_or("default");
    let limits = match Limits::profile(profile) {
        Ok(l) => l,
        Err(e) => return failure(e.into()),
    };
    let start = Instant::now();
    let report = match dispatch(&cli, &limits, stdin) {
        Ok(r) => r,
        Err(e) => return failure(e),
    };
    let mut value = report.value;
    if cli.timing {
        if let Value::Object(map) = &mut value {
            map.insert(
                "timing".into(),
                serde_json::json!({"elapsed_ms": start.elapsed().as_millis() as u64}),
            );
        }
    }
    let text = render::text(&value);
    let stdout = match cli.format {
        Format::Json => to_json(&value),
        Format::Text => text.clone(),
    };
    let mut stderr = if cli.summary { text } else { String::new() };
    for a in &report.alarms {
        stderr.push_str(&format!("sfpack: alarm: {a}\n"));
    }
    Outcome {
        code: if report.alarms.is_empty() { 0 } else { 4 },
        stdout,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q6: &str = "abc\naef\ncde\nbdf\n";

    fn call(args: &[&str], input: &str) -> Outcome {
        let mut argv = vec!["sfpack"];
        argv.extend_from_slice(args);
        run(argv, &mut input.as_bytes(), None)
    }

    #[test]
    fn dual_of_q6() {
        let out = call(&["dual"], Q6);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(
            v["words"],
            serde_json::json!(["ad", "be", "cf", "abc", "aef", "bdf", "cde"])
        );
        assert_eq!(v["packed"], Value::Bool(true));
        assert_eq!(v["equidimensional"], Value::Bool(true));
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["analyze"], Q6);
        let b = call(&["analyze"], Q6);
        assert_eq!(a, b);
        assert!(!a.stdout.contains("timing"));
        let t = call(&["analyze", "--timing"], Q6);
        assert!(t.stdout.contains("elapsed_ms"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["alpha"], "{\"variables\":[\"x\"],\"generators\":[[\"y\"]]}").code,
            2
        );
        assert_eq!(call(&["frobnicate"], "").code, 2);
        assert_eq!(call(&["--profile", "huge", "alpha"], Q6).code, 2);
        let out = call(&["probe", "--kind", "q58", "--max-n", "7"], "");
        assert_eq!(out.code, 3);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "guard");
        let out = call(&["--profile", "small", "probe", "--kind", "q58", "--max-n", "6"], "");
        assert_eq!(out.code, 3);
        let out = run(
            ["sfpack", "probe", "--kind", "q58", "--max-n", "6"],
            &mut "".as_bytes(),
            Some("small"),
        );
        assert_eq!(out.code, 3);
        assert_eq!(call(&["--help"], "").code, 0);
    }

    #[test]
    fn text_format_and_summary() {
        let out = call(&["--format", "text", "invariants"], "ab\nbc\ncd\nde\nae\n");
        assert!(out.stdout.contains("tau_f: 5/2\n"), "{}", out.stdout);
        let out = call(&["--summary", "alpha"], Q6);
        assert_eq!(out.stderr, "alpha: 3\n");
        assert!(out.stdout.starts_with('{'));
    }

    #[test]
    fn echo_round_trips() {
        let doc = r#"{"variables":["x","y"],"generators":[[["x",2]],["y","x"],["x","y"]]}"#;
        let out = call(&["analyze"], "abc\naef\n");
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let again = parse_document(&v["ideal"].to_string()).unwrap();
        assert_eq!(again, parse_document("abc\naef\n").unwrap());
        let parsed = parse_document(doc).unwrap();
        let echoed = commands::echo(&parsed).to_string();
        assert_eq!(parse_document(&echoed).unwrap(), parsed);
    }
}
