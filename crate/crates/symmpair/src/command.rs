//! Command-line grammar. Every parsed command serializes back to an argument
//! vector that parses to the same value.

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[command(name = "symmpair", version, about = "Invariant theory of classical symmetric pairs")]
pub struct Cli {
    /// Seed for every sampled computation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print JSON instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Command {
    /// Catalogue data of a pair.
    Pair {
        #[command(subcommand)]
        action: PairAction,
    },
    /// Strata, sheet counts and gluing pattern of the regular quotient.
    Regquot { spec: String },
    /// Invariants and spectral cover for GL_2n ⊃ GL_n × GL_n.
    Spectral {
        #[command(subcommand)]
        action: SpectralAction,
    },
    /// Exponents, base dimension and sheet degrees of the Hitchin base.
    Hitchin {
        #[command(subcommand)]
        action: HitchinAction,
    },
    /// Lie and group centralizers of an element of p.
    Centralizer {
        spec: String,
        /// Matrix JSON: {"field":"Q"|"Qi","rows":[["p/q",...],...]}.
        #[arg(long)]
        x: String,
    },
    /// Run the acceptance criteria (`all` or a criterion number).
    Verify {
        #[arg(default_value = "all")]
        which: String,
    },
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairAction {
    Info { spec: String },
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectralAction {
    /// Invariants of [[0, C], [D, 0]].
    Invariants {
        #[arg(long)]
        n: usize,
        #[arg(long = "C")]
        c: String,
        #[arg(long = "D")]
        d: String,
    },
    /// Sheets over the point with coefficients a_2, ..., a_2n.
    Sheets {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HitchinAction {
    Base {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        genus: i64,
        #[arg(long = "degD", allow_hyphen_values = true)]
        deg_d: Option<i64>,
        /// Take D = K (degree 2g - 2).
        #[arg(long)]
        canonical: bool,
    },
    Sheets {
        #[arg(long = "degD")]
        deg_d: u32,
    },
}

impl Cli {
    /// Arguments (without the program name) that parse back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut a: Vec<String> = Vec::new();
        let mut push = |s: &str| a.push(s.to_string());
        match &self.command {
            Command::Pair { action: PairAction::Info { spec } } => {
                push("pair");
                push("info");
                push(spec);
            }
            Command::Regquot { spec } => {
                push("regquot");
                push(spec);
            }
            Command::Spectral { action } => {
                push("spectral");
                match action {
                    SpectralAction::Invariants { n, c, d } => {
                        push("invariants");
                        push(&format!("--n={n}"));
                        push(&format!("--C={c}"));
                        push(&format!("--D={d}"));
                    }
                    SpectralAction::Sheets { a } => {
                        push("sheets");
                        push(&format!("--a={a}"));
                    }
                }
            }
            Command::Hitchin { action } => {
                push("hitchin");
                match action {
                    HitchinAction::Base { pair, genus, deg_d, canonical } => {
                        push("base");
                        push(&format!("--pair={pair}"));
                        push(&format!("--genus={genus}"));
                        if let Some(d) = deg_d {
                            push(&format!("--degD={d}"));
                        }
                        if *canonical {
                            push("--canonical");
                        }
                    }
                    HitchinAction::Sheets { deg_d } => {
                        push("sheets");
                        push(&format!("--degD={deg_d}"));
                    }
                }
            }
            Command::Centralizer { spec, x } => {
                push("centralizer");
                push(spec);
                push(&format!("--x={x}"));
            }
            Command::Verify { which } => {
                push("verify");
                push(which);
            }
        }
        a.push(format!("--seed={}", self.seed));
        if self.json {
            a.push("--json".to_string());
        }
        a
    }

    pub fn parse_args<I, S>(args: I) -> Result<Cli, clap::Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Cli::try_parse_from(std::iter::once("symmpair".to_string()).chain(args.into_iter().map(Into::into)))
    }
}
