use serde::Serialize;
use serde_json::{json, Value};

use cacti_core::FieldSpec;

use crate::{Command, Format};

/// Everything a report depends on besides the input bytes.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub input: String,
    pub field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ext: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub format: &'static str,
}

impl RunConfig {
    pub fn new(cmd: &Command, field: FieldSpec, format: Format) -> Self {
        let mut c = RunConfig {
            command: "",
            input: cmd.input().to_string(),
            field,
            max_ext: None,
            max_q: None,
            samples: None,
            seed: None,
            format: match format {
                Format::Text => "text",
                Format::Json => "json",
            },
        };
        match cmd {
            Command::Check { .. } => c.command = "check",
            Command::CobarCohomology { max_ext, .. } => {
                c.command = "cobar-cohomology";
                c.max_ext = Some(*max_ext);
            }
            Command::HochschildCohomology { max_q, .. } => {
                c.command = "hochschild-cohomology";
                c.max_q = Some(*max_q);
            }
            Command::Identities { sampling, .. } | Command::Induced { sampling, .. } | Command::Lift { sampling, .. } => {
                c.command = match cmd {
                    Command::Identities { .. } => "identities",
                    Command::Induced { .. } => "induced",
                    _ => "lift",
                };
                c.max_ext = Some(sampling.max_ext);
                c.samples = Some(sampling.samples);
                c.seed = Some(sampling.seed);
            }
            Command::Dual { .. } => c.command = "dual",
            Command::Extract { .. } => c.command = "extract",
            Command::SkewCocycle { .. } => c.command = "skew-cocycle",
        }
        c
    }
}

/// A command's result: text body, structured body and overall verdict.
pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

pub fn render(config: &RunConfig, outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = json!({
                "tool": "cacti",
                "version": env!("CARGO_PKG_VERSION"),
                "config": config,
                "passed": outcome.passed,
                "result": outcome.json,
            });
            serde_json::to_string_pretty(&doc).expect("serializable report") + "\n"
        }
        Format::Text => {
            let mut s = format!("# cacti {}\n", env!("CARGO_PKG_VERSION"));
            if let Value::Object(m) = serde_json::to_value(config).expect("serializable config") {
                for (k, v) in m {
                    let v = match v {
                        Value::String(s) => s,
                        Value::Object(_) => config.field.to_string(),
                        other => other.to_string(),
                    };
                    s.push_str(&format!("# {k}: {v}\n"));
                }
            }
            s.push_str(&outcome.text);
            if !outcome.text.ends_with('\n') {
                s.push('\n');
            }
            s.push_str(if outcome.passed { "result: PASS\n" } else { "result: FAIL\n" });
            s
        }
    }
}
