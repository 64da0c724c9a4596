//! Command-line front end. [`run`] takes the argument vector and the output
//! streams so it can be driven from tests; `main` wires it to the process.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage or domain error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow::{
    ars, census_with, enumerate_with, family, kirkman, normalize, schedule_from_rpm, t_matching,
    validate_schedule, EnumerateOptions, Matching, Schedule, Variant,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow matchings of circular-distance colored complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an RPM in closed form and print it as JSON.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Print the normalized representative of an RPM.
    Normalize {
        /// Matching JSON file, or `-` for stdin.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check that a matching is an RPM (exit 0) or report why not (exit 1).
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also require every edge to satisfy |i - j| <= n/2.
        #[arg(long)]
        cuttable: bool,
    },
    /// Generate the recursive family of inequivalent RPMs for odd n.
    Family {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// List every RPM of K•_n by exhaustive search.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print class counts and representatives instead of the matchings.
        #[arg(long)]
        census: bool,
        /// Stop after this many matchings.
        #[arg(long, conflicts_with = "census")]
        limit: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Same as `enumerate --census`.
    Census {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Build a round-robin schedule from an RPM of K•_{teams-1}.
    Schedule {
        #[arg(long, requires = "method", conflicts_with = "input")]
        teams: Option<usize>,
        #[arg(long, value_enum, requires = "teams")]
        method: Option<Method>,
        #[arg(long = "in", required_unless_present = "teams")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = VariantArg::Direct)]
        variant: VariantArg,
        /// Output file; `.csv` or `.json` picks the format.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Enumerate above the default size bound.
    #[arg(long)]
    force: bool,
    /// Worker threads for the search; output is identical for any value.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Kirkman,
    T,
    Ars,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Direct,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Anything that ends the command early, with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<rainbow::Error> for Failure {
    fn from(e: rainbow::Error) -> Self {
        Failure::usage(e)
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn json<T: Serialize + ?Sized>(&mut self, value: &T) -> Result<(), Failure> {
        let text = serde_json::to_string(value).map_err(Failure::usage)?;
        writeln!(self.out, "{text}").map_err(Failure::usage)
    }

    fn note(&mut self, message: impl std::fmt::Display) {
        let _ = writeln!(self.err, "{message}");
    }
}

pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also arrive here, on stdout with exit 0.
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let mut io = Io { out, err };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            io.note(format_args!("error: {}", f.message));
            f.code
        }
    }
}

fn construct(method: Method, n: usize) -> Result<Matching, Failure> {
    Ok(match method {
        Method::Kirkman => kirkman(n),
        Method::T => t_matching(n)?,
        Method::Ars => ars(n)?,
    })
}

fn read_matching(path: &Path) -> Result<Matching, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(Failure::usage)?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn search_options(
    search: &SearchArgs,
    limit: Option<usize>,
) -> Result<(EnumerateOptions, Option<rayon::ThreadPool>), Failure> {
    let pool = match search.jobs {
        Some(0) => return Err(Failure::usage("--jobs must be at least 1")),
        Some(jobs) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(Failure::usage)?,
        ),
        None => None,
    };
    let opts = EnumerateOptions {
        limit,
        force: search.force,
        parallel: pool.is_some(),
    };
    Ok((opts, pool))
}

fn in_pool<T: Send>(pool: Option<rayon::ThreadPool>, job: impl FnOnce() -> T + Send) -> T {
    match pool {
        Some(pool) => pool.install(job),
        None => job(),
    }
}

fn write_schedule(
    io: &mut Io,
    schedule: &Schedule,
    out: Option<&Path>,
    format: Option<Format>,
) -> Result<(), Failure> {
    let format = match (format, out) {
        (Some(f), _) => f,
        (None, None) => Format::Json,
        (None, Some(path)) => match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => Format::Csv,
            Some("json") => Format::Json,
            _ => {
                return Err(Failure::usage(format!(
                    "{}: cannot tell the format from the extension; use .csv, .json or --format",
                    path.display()
                )))
            }
        },
    };
    let text = match format {
        Format::Csv => schedule.to_csv(),
        Format::Json => serde_json::to_string(schedule).map_err(Failure::usage)? + "\n",
    };
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            io.note(format_args!(
                "wrote {} rounds for {} teams to {}",
                schedule.rounds.len(),
                schedule.teams,
                path.display()
            ));
        }
        None => io.out.write_all(text.as_bytes()).map_err(Failure::usage)?,
    }
    Ok(())
}

fn execute(command: Command, io: &mut Io) -> Result<i32, Failure> {
    match command {
        Command::Generate { n, method } => {
            let m = construct(method, n)?;
            if let Some(defect) = m.rpm_defect() {
                io.note(format_args!(
                    "warning: {method:?} matching on n = {n} is not rainbow: {defect}"
                ));
            }
            io.json(&m)?;
        }
        Command::Normalize { input } => {
            let m = read_matching(&input)?;
            io.json(&normalize(&m)?)?;
        }
        Command::Verify { input, cuttable } => {
            let m = read_matching(&input)?;
            if let Some(defect) = m.rpm_defect() {
                io.note(format_args!("fail: {defect}"));
                return Ok(EXIT_FAILED);
            }
            if cuttable {
                if let Some(e) = m.edges().iter().find(|e| 2 * e.span() > m.n()) {
                    io.note(format_args!(
                        "fail: rainbow but not cuttable, edge {e} spans more than n/2"
                    ));
                    return Ok(EXIT_FAILED);
                }
            }
            let kind = if m.n() % 2 == 0 {
                "perfect"
            } else {
                "near-perfect"
            };
            let extra = if cuttable { ", cuttable" } else { "" };
            io.note(format_args!(
                "ok: rainbow {kind} matching on n = {}{extra}",
                m.n()
            ));
        }
        Command::Family { n, count_only } => {
            let f = family(n)?;
            if count_only {
                #[derive(Serialize)]
                struct Count {
                    n: usize,
                    count: usize,
                }
                io.json(&Count { n, count: f.count })?;
            } else {
                io.json(&f)?;
            }
        }
        Command::Enumerate {
            n,
            census,
            limit,
            search,
        } => {
            let (opts, pool) = search_options(&search, limit)?;
            if census {
                let report = in_pool(pool, || census_with(n, &opts))?;
                io.json(&report)?;
            } else {
                let all = in_pool(pool, || enumerate_with(n, &opts))?;
                io.json(&all)?;
            }
        }
        Command::Census { n, search } => {
            let (opts, pool) = search_options(&search, None)?;
            let report = in_pool(pool, || census_with(n, &opts))?;
            io.json(&report)?;
        }
        Command::Schedule {
            teams,
            method,
            input,
            variant,
            out,
            format,
        } => {
            let seed = match (teams, method, input) {
                (Some(teams), Some(method), _) => {
                    if teams < 2 || teams % 2 == 1 {
                        return Err(Failure::usage(format!(
                            "--teams must be even and at least 2, got {teams}"
                        )));
                    }
                    construct(method, teams - 1)?
                }
                (_, _, Some(path)) => read_matching(&path)?,
                _ => return Err(Failure::usage("give either --teams with --method, or --in")),
            };
            let variant = match variant {
                VariantArg::Direct => Variant::Direct,
                VariantArg::Reversed => Variant::Reversed,
            };
            let schedule = schedule_from_rpm(&seed, variant)?;
            let violations = validate_schedule(&schedule);
            assert!(
                violations.is_empty(),
                "internal error: generated schedule is invalid: {}",
                violations[0]
            );
            write_schedule(io, &schedule, out.as_deref(), format)?;
        }
    }
    Ok(EXIT_OK)
}
