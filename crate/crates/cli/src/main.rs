use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qasl::Error;
use qasl_cli::{deliver, error_json, exit_code, run, Format, JobSpec};

#[derive(Parser)]
#[command(
    name = "qasl",
    version,
    about = "Quantum algebras with a straightening law"
)]
struct Cli {
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Group,
}

#[derive(Args, Default)]
struct Params {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Lower Plücker index, e.g. `1,3`.
    #[arg(long)]
    alpha: Option<String>,
    /// Upper Plücker index, e.g. `2,4`.
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    /// `symbolic` or a nonzero rational.
    #[arg(long)]
    q: Option<String>,
    /// JSON lattice or presentation file.
    #[arg(long)]
    input: Option<String>,
    /// Word of element labels.
    #[arg(long, num_args = 1..)]
    word: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Group {
    /// Lattice structure, Birkhoff data and weights.
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Quantum Grassmannian tables and checks.
    Grass {
        #[command(subcommand)]
        action: GrassAction,
    },
    /// Quantum Richardson quotients.
    Richardson {
        #[command(subcommand)]
        action: RichardsonAction,
    },
    /// Graded degeneration of a quantum Grassmannian.
    Degenerate(Params),
    /// Quantum toric algebras.
    Toric {
        #[command(subcommand)]
        action: ToricAction,
    },
    /// Run the acceptance criteria.
    Selftest,
    /// Run a JSON job file.
    Job { file: String },
}

#[derive(Subcommand)]
enum LatticeAction {
    Analyze(Params),
}

#[derive(Subcommand)]
enum GrassAction {
    Table(Params),
    Verify(Params),
}

#[derive(Subcommand)]
enum RichardsonAction {
    Hilbert(Params),
    Gk(Params),
    Gorenstein(Params),
}

#[derive(Subcommand)]
enum ToricAction {
    Nf(Params),
    Certify(Params),
    Torus(Params),
}

fn spec(command: &str, p: Params) -> JobSpec {
    JobSpec {
        command: command.into(),
        m: p.m,
        n: p.n,
        alpha: p.alpha,
        beta: p.beta,
        degree: p.degree,
        q: p.q,
        input: p.input,
        word: p.word,
        ..Default::default()
    }
}

fn job_spec(cli: Cli) -> Result<JobSpec, Error> {
    let mut js = match cli.command {
        Group::Lattice {
            action: LatticeAction::Analyze(p),
        } => spec("lattice analyze", p),
        Group::Grass { action } => match action {
            GrassAction::Table(p) => spec("grass table", p),
            GrassAction::Verify(p) => spec("grass verify", p),
        },
        Group::Richardson { action } => match action {
            RichardsonAction::Hilbert(p) => spec("richardson hilbert", p),
            RichardsonAction::Gk(p) => spec("richardson gk", p),
            RichardsonAction::Gorenstein(p) => spec("richardson gorenstein", p),
        },
        Group::Degenerate(p) => spec("degenerate", p),
        Group::Toric { action } => match action {
            ToricAction::Nf(p) => spec("toric nf", p),
            ToricAction::Certify(p) => spec("toric certify", p),
            ToricAction::Torus(p) => spec("toric torus", p),
        },
        Group::Selftest => spec("selftest", Params::default()),
        Group::Job { file } => {
            let text =
                fs::read_to_string(&file).map_err(|e| Error::Invalid(format!("{file}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("job spec: {e}")))?
        }
    };
    if cli.format.is_some() {
        js.format = cli.format;
    }
    if cli.out.is_some() {
        js.out = cli.out;
    }
    if cli.seed.is_some() {
        js.seed = cli.seed;
    }
    Ok(js)
}

fn execute(cli: Cli) -> Result<i32, Error> {
    let job = job_spec(cli)?.validate()?;
    let outcome = run(&job)?;
    if let Some(body) = deliver(&job, &outcome)? {
        print!("{body}");
        let _ = std::io::stdout().flush();
    }
    Ok(outcome.exit)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
