use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use qasl::grassmann::check_plucker;
use qasl::lattice::parse_tuple;
use qasl::{Error, Result, Specialization};
use serde::{Deserialize, Serialize};

/// Largest `n` accepted for Grassmannian jobs.
pub const MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    LatticeAnalyze,
    GrassTable,
    GrassVerify,
    RichardsonHilbert,
    RichardsonGk,
    RichardsonGorenstein,
    Degenerate,
    ToricNf,
    ToricCertify,
    ToricTorus,
    Selftest,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::LatticeAnalyze,
        Command::GrassTable,
        Command::GrassVerify,
        Command::RichardsonHilbert,
        Command::RichardsonGk,
        Command::RichardsonGorenstein,
        Command::Degenerate,
        Command::ToricNf,
        Command::ToricCertify,
        Command::ToricTorus,
        Command::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::LatticeAnalyze => "lattice analyze",
            Command::GrassTable => "grass table",
            Command::GrassVerify => "grass verify",
            Command::RichardsonHilbert => "richardson hilbert",
            Command::RichardsonGk => "richardson gk",
            Command::RichardsonGorenstein => "richardson gorenstein",
            Command::Degenerate => "degenerate",
            Command::ToricNf => "toric nf",
            Command::ToricCertify => "toric certify",
            Command::ToricTorus => "toric torus",
            Command::Selftest => "selftest",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let wanted = words.join(" ");
        Command::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::Invalid(format!("unknown command {s:?}")))
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A job as written in a JSON file or assembled from command-line flags.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

/// A validated job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub command: Command,
    pub m: usize,
    pub n: usize,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub degree: Option<usize>,
    pub q: Specialization,
    pub seed: u64,
    pub input: Option<PathBuf>,
    pub word: Vec<String>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

fn require<T: Clone>(v: &Option<T>, what: &str, command: Command) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::Invalid(format!("{command} needs --{what}")))
}

fn check_degree(d: Option<usize>, max: usize, command: Command) -> Result<()> {
    match d {
        Some(d) if d > max => Err(Error::Invalid(format!(
            "{command} accepts --degree up to {max}"
        ))),
        Some(0) => Err(Error::Invalid("--degree must be positive".into())),
        _ => Ok(()),
    }
}

impl JobSpec {
    pub fn validate(&self) -> Result<Job> {
        let command: Command = self.command.parse()?;
        let q = match &self.q {
            Some(s) => s.parse()?,
            None => Specialization::Symbolic,
        };
        let mut job = Job {
            command,
            m: 0,
            n: 0,
            alpha: Vec::new(),
            beta: Vec::new(),
            degree: self.degree,
            q,
            seed: self.seed.unwrap_or(0),
            input: self.input.as_ref().map(PathBuf::from),
            word: self.word.clone().unwrap_or_default(),
            format: self.format.unwrap_or_default(),
            out: self.out.as_ref().map(PathBuf::from),
        };
        match command {
            Command::GrassTable | Command::GrassVerify | Command::Degenerate => {
                job.m = require(&self.m, "m", command)?;
                job.n = require(&self.n, "n", command)?;
                if job.m == 0 || job.m > job.n || job.n > MAX_N {
                    return Err(Error::BadShape(format!(
                        "need 1 <= m <= n <= {MAX_N}, got m={}, n={}",
                        job.m, job.n
                    )));
                }
                let max = if command == Command::GrassVerify {
                    4
                } else {
                    3
                };
                check_degree(self.degree, max, command)?;
            }
            Command::RichardsonHilbert | Command::RichardsonGk | Command::RichardsonGorenstein => {
                job.alpha = parse_tuple(&require(&self.alpha, "alpha", command)?)?;
                job.beta = parse_tuple(&require(&self.beta, "beta", command)?)?;
                job.m = self.m.unwrap_or(job.alpha.len());
                let top = job
                    .alpha
                    .iter()
                    .chain(&job.beta)
                    .copied()
                    .max()
                    .unwrap_or(0) as usize;
                job.n = self.n.unwrap_or(top.max(job.m));
                if job.m == 0 || job.n > MAX_N {
                    return Err(Error::BadShape(format!("need 1 <= m <= n <= {MAX_N}")));
                }
                check_plucker(job.m, job.n, &job.alpha)?;
                check_plucker(job.m, job.n, &job.beta)?;
                check_degree(self.degree, 64, command)?;
            }
            Command::LatticeAnalyze | Command::ToricCertify | Command::ToricTorus => {
                require(&self.input, "input", command)?;
            }
            Command::ToricNf => {
                require(&self.input, "input", command)?;
                if job.word.is_empty() {
                    return Err(Error::Invalid("toric nf needs --word".into()));
                }
            }
            Command::Selftest => {}
        }
        Ok(job)
    }
}

/// Parses and validates a JSON job specification.
pub fn parse_jobspec(text: &str) -> Result<Job> {
    serde_json::from_str::<JobSpec>(text)
        .map_err(|e| Error::Invalid(format!("job spec: {e}")))?
        .validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert_eq!(
            "  grass   table ".parse::<Command>().unwrap(),
            Command::GrassTable
        );
        assert!("grass".parse::<Command>().is_err());
    }

    #[test]
    fn richardson_defaults() {
        let job =
            parse_jobspec(r#"{"command":"richardson gk","alpha":"1,3","beta":"2,4"}"#).unwrap();
        assert_eq!((job.m, job.n), (2, 4));
        assert_eq!(job.q, Specialization::Symbolic);
    }

    #[test]
    fn rejects_bad_specs() {
        for text in [
            r#"{"command":"grass table","m":2}"#,
            r#"{"command":"grass table","m":3,"n":2}"#,
            r#"{"command":"grass table","m":2,"n":40}"#,
            r#"{"command":"grass table","m":2,"n":4,"colour":1}"#,
            r#"{"command":"richardson gk","alpha":"1,3"}"#,
            r#"{"command":"richardson gk","alpha":"3,1","beta":"2,4"}"#,
            r#"{"command":"degenerate","m":2,"n":4,"degree":9}"#,
            r#"{"command":"toric nf","input":"p.json"}"#,
            r#"{"command":"selftest","q":"0"}"#,
            r#"{"command":"launch"}"#,
            r#"[]"#,
        ] {
            assert!(parse_jobspec(text).is_err(), "{text}");
        }
    }
}
