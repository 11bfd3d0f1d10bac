//! Command implementations behind the `hyperdual` binary.
//!
//! Each command returns an [`Outcome`]: a [`ReportEnvelope`] for JSON
//! output, a text rendering, and the process exit code. Exit codes are
//! `0` for success, `2` for usage or input errors and `3` for failed
//! verification.

mod census;
mod verify;

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::construct::{self, ConstructError, ConstructionCertificate};
use crate::hypermap::{DualityReport, HypermapError, OrientedRegularHypermap};
use crate::oracle::OracleError;
use crate::perm::{CycleExpr, PermError};

pub use census::{cmd_census, CensusGroup};
pub use verify::{cmd_verify, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::NonUniqueMinimum(..) => CliError::Verification(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<HypermapError> for CliError {
    fn from(e: HypermapError) -> Self {
        match e {
            HypermapError::Perm(p) => p.into(),
            other => CliError::Verification(other.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::OutOfRange { .. } | ConstructError::Impossible { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Verification(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Top-level JSON document emitted by every command.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: Value,
    pub report: Value,
    pub certificates: Vec<ConstructionCertificate>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub envelope: ReportEnvelope,
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope).expect("envelope serializes");
                s.push('\n');
                s
            }
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// Parses both generators and pads them to a common degree (at least
/// `degree` if given).
pub fn parse_pair(x: &str, y: &str, degree: Option<usize>) -> Result<OrientedRegularHypermap, CliError> {
    let ex = CycleExpr::parse(x)?;
    let ey = CycleExpr::parse(y)?;
    let implied = ex.implied_degree().max(ey.implied_degree());
    let d = match degree {
        Some(0) => return Err(PermError::ZeroDegree.into()),
        Some(d) if d < implied => {
            return Err(PermError::DegreeTooSmall {
                degree: d,
                point: implied,
            }
            .into())
        }
        Some(d) => d,
        None => implied,
    };
    let px = ex.with_degree(Some(d)).to_permutation()?;
    let py = ey.with_degree(Some(d)).to_permutation()?;
    Ok(OrientedRegularHypermap::new(px, py)?)
}

pub fn report_text(r: &DualityReport) -> String {
    let gens = if r.duality_group_generators.is_empty() {
        "()".to_string()
    } else {
        r.duality_group_generators
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!(
        "degree           {}\n\
         x                {} ({})\n\
         y                {} ({})\n\
         type (l,m,n)     {}\n\
         duality-type     {}\n\
         monodromy        {} of order {}\n\
         duality index    {}\n\
         self-dual        {}\n\
         extreme          {}\n\
         duality group    <{}>\n",
        r.degree,
        r.x,
        r.x_parity,
        r.y,
        r.y_parity,
        r.type_triple,
        r.duality_type,
        r.monodromy_class,
        r.monodromy_order,
        r.duality_index,
        r.self_dual,
        r.extreme,
        gens,
    )
}

pub fn cmd_analyze(x: &str, y: &str, degree: Option<usize>) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let h = parse_pair(x, y, degree)?;
    let report = h.analyze()?;
    let text = report_text(&report);
    Ok(Outcome {
        envelope: ReportEnvelope {
            command: "analyze".into(),
            inputs: json!({ "x": x, "y": y, "degree": h.degree() }),
            report: to_value(&report),
            certificates: Vec::new(),
            timing_ms: elapsed_ms(start),
        },
        text,
        exit_code: EXIT_OK,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructRequest {
    DualityType { l: usize, n: usize },
    Lemma1Sym { n: usize },
    Lemma1Alt { n: usize },
    Theorem2 { n: usize },
}

impl ConstructRequest {
    fn variant(&self) -> &'static str {
        match self {
            ConstructRequest::DualityType { .. } => "duality_type",
            ConstructRequest::Lemma1Sym { .. } => "lemma1_sym",
            ConstructRequest::Lemma1Alt { .. } => "lemma1_alt",
            ConstructRequest::Theorem2 { .. } => "theorem2",
        }
    }

    fn inputs(&self) -> Value {
        match *self {
            ConstructRequest::DualityType { l, n } => json!({ "variant": self.variant(), "l": l, "n": n }),
            ConstructRequest::Lemma1Sym { n }
            | ConstructRequest::Lemma1Alt { n }
            | ConstructRequest::Theorem2 { n } => json!({ "variant": self.variant(), "n": n }),
        }
    }
}

pub fn cmd_construct(req: ConstructRequest) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (h, cert) = match req {
        ConstructRequest::DualityType { l, n } => {
            let (h, c) = construct::duality_type_extreme(l, n)?;
            (h, Some(c))
        }
        ConstructRequest::Theorem2 { n } => {
            let (h, c) = construct::theorem2_alt_extreme(n)?;
            (h, Some(c))
        }
        ConstructRequest::Lemma1Sym { n } => (construct::lemma1_sym(n)?, None),
        ConstructRequest::Lemma1Alt { n } => (construct::lemma1_alt(n)?, None),
    };
    let report = h.analyze()?;
    if let Some(c) = &cert {
        if c.claimed_extreme != report.extreme || c.claimed_class != report.monodromy_class {
            return Err(CliError::Verification(format!(
                "{} certificate disagrees with the re-analysis",
                c.case_tag
            )));
        }
    }
    let mut text = format!("variant          {}\n", req.variant());
    if let Some(c) = &cert {
        text.push_str(&format!("case             {}\n", c.case_tag));
    }
    text.push_str(&report_text(&report));
    if let Some(c) = &cert {
        for w in &c.witnesses {
            text.push_str(&format!("witness          {} = {}\n", w.description, w.permutation));
        }
        for check in &c.checks {
            text.push_str(&format!("check            {check}\n"));
        }
    }
    Ok(Outcome {
        envelope: ReportEnvelope {
            command: "construct".into(),
            inputs: req.inputs(),
            report: to_value(&report),
            certificates: cert.into_iter().collect(),
            timing_ms: elapsed_ms(start),
        },
        text,
        exit_code: EXIT_OK,
    })
}
