//! Flag and payload schemas for a single invocation.

use clap::{Parser, ValueEnum};
use serde::Deserialize;

use socle::exactfield::{FactoredRatFun, GaussianRational, PartialFraction};
use socle::oracle::OracleWindow;
use socle::{Error, Result};

/// Exact computation with rank-one module families over shifted
/// Laurent rings.
#[derive(Parser, Debug)]
#[command(name = "socle", version, about)]
pub struct Cli {
    /// Which operator algebra the parameters describe.
    #[arg(long, value_enum)]
    pub algebra: Algebra,

    /// What to compute.
    #[arg(long, value_enum)]
    pub command: Command,

    /// Path of the JSON payload, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,

    /// Lattice radius for windowed computations.
    #[arg(long)]
    pub max_shift: Option<i64>,

    /// Highest monomial degree for windowed computations.
    #[arg(long)]
    pub max_degree: Option<usize>,

    /// Sweep budget for the closure oracle.
    #[arg(long)]
    pub rounds: Option<u32>,

    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    Sl2,
    Weyl,
    OspGraded,
    OspUngraded,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Sl2 => "sl2",
            Algebra::Weyl => "weyl",
            Algebra::OspGraded => "osp-graded",
            Algebra::OspUngraded => "osp-ungraded",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Normalize,
    Basis,
    Act,
    Iso,
    Verify,
    OracleCheck,
    Fg,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Normalize => "normalize",
            Command::Basis => "basis",
            Command::Act => "act",
            Command::Iso => "iso",
            Command::Verify => "verify",
            Command::OracleCheck => "oracle-check",
            Command::Fg => "fg",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
}

/// The JSON payload; which fields are required depends on the command.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct Payload {
    pub r1: Option<GaussianRational>,
    pub u: Option<FactoredRatFun>,
    pub lambda: Option<GaussianRational>,
    pub element: Option<PartialFraction>,
    pub even: Option<PartialFraction>,
    pub odd: Option<PartialFraction>,
    pub operator: Option<String>,
    pub left: Option<serde_json::Value>,
    pub right: Option<serde_json::Value>,
    pub samples: Option<usize>,
    pub window: Option<WindowPayload>,
}

#[derive(Deserialize, Debug, Default, Clone, Copy)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct WindowPayload {
    pub max_shift: Option<i64>,
    pub max_degree: Option<usize>,
    pub rounds: Option<u32>,
}

impl Cli {
    /// The effective window: flags override the payload, defaults fill
    /// the rest; all fields must come out positive.
    pub fn window(&self, payload: &Payload) -> Result<OracleWindow> {
        let from_payload = payload.window.unwrap_or_default();
        let max_shift = self.max_shift.or(from_payload.max_shift).unwrap_or(8);
        let max_degree = self.max_degree.or(from_payload.max_degree).unwrap_or(6);
        let rounds = self
            .rounds
            .or(from_payload.rounds)
            .unwrap_or((max_shift.max(0) as u32).saturating_add(12));
        if max_shift <= 0 || max_degree == 0 || rounds == 0 {
            return Err(Error::InvalidParameter(
                "window fields must be positive".to_string(),
            ));
        }
        Ok(OracleWindow { max_shift, max_degree, rounds })
    }
}

/// Reads the payload from the input path or standard input.
pub fn read_payload(input: &str) -> Result<String> {
    if input == "-" {
        let mut buffer = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buffer)
            .map_err(|e| Error::Parse(format!("reading standard input: {e}")))?;
        Ok(buffer)
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Error::Parse(format!("reading {input}: {e}")))
    }
}
