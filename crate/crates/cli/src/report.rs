//! Deterministic report documents.
//!
//! Top-level keys are fixed (`schema_version`, `command`, `input`, `result`,
//! `trace`, `timing_ms`); nested objects serialize with sorted keys. The
//! payload carries no timestamps, so two runs on the same input differ at
//! most in `timing_ms`. Big integers are rendered as decimal strings.

use serde::Serialize;
use serde_json::{json, Value};

use dopfactor_core::detfactor::Sign;
use dopfactor_core::reduce::{FactorSide, TraceStep};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: &'static str,
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub trace: Vec<Value>,
    pub timing_ms: u64,
}

impl ReportDocument {
    pub fn new(command: &str, input: Value, result: Value, trace: Vec<Value>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input,
            result,
            trace,
            timing_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

pub fn side_json(side: FactorSide) -> Value {
    match side {
        FactorSide::Right => json!("right"),
        FactorSide::Left => json!("left"),
        FactorSide::None => Value::Null,
    }
}

pub fn sign_json(sign: Sign) -> Value {
    json!(sign.value())
}

pub fn trace_json(step: &TraceStep) -> Value {
    match step {
        TraceStep::Divisibility { n, m, divides } => json!({
            "step": "divisibility",
            "n": n,
            "m": m,
            "divides": divides,
        }),
        TraceStep::ConstantSplit { sqrt_in_field } => json!({
            "step": "constant_split",
            "sqrt_in_field": sqrt_in_field,
        }),
        TraceStep::SIntegrality { s } => json!({
            "step": "s_integrality",
            "s": s,
        }),
        TraceStep::DegreeCandidate {
            side,
            epsilon,
            degree,
        } => json!({
            "step": "degree_candidate",
            "side": side_json(*side),
            "epsilon": sign_json(*epsilon),
            "degree": degree,
        }),
        TraceStep::KernelSearch {
            side,
            epsilon,
            degree,
            kernel_dim,
        } => json!({
            "step": "kernel_search",
            "side": side_json(*side),
            "epsilon": sign_json(*epsilon),
            "degree": degree,
            "kernel_dim": kernel_dim,
        }),
        TraceStep::DegreeCapFallback { cap } => json!({
            "step": "degree_cap_fallback",
            "cap": cap,
        }),
    }
}

/// Human-readable line for one trace step.
pub fn trace_text(step: &TraceStep) -> String {
    fn side_txt(side: FactorSide) -> &'static str {
        match side {
            FactorSide::Right => "right",
            FactorSide::Left => "left",
            FactorSide::None => "none",
        }
    }
    match step {
        TraceStep::Divisibility { n, m, divides } => format!(
            "divisibility: {} | {} -> {}",
            n,
            m,
            if *divides { "pass" } else { "fail" }
        ),
        TraceStep::ConstantSplit { sqrt_in_field } => format!(
            "constant split: sqrt in field -> {}",
            if *sqrt_in_field { "yes" } else { "no" }
        ),
        TraceStep::SIntegrality { s } => match s {
            Some(s) => format!("s-integrality: s = {}", s),
            None => "s-integrality: not integral".to_string(),
        },
        TraceStep::DegreeCandidate {
            side,
            epsilon,
            degree,
        } => match degree {
            Some(d) => format!(
                "degree candidate ({}, eps = {:+}): d = {}",
                side_txt(*side),
                epsilon.value(),
                d
            ),
            None => format!(
                "degree candidate ({}, eps = {:+}): none",
                side_txt(*side),
                epsilon.value()
            ),
        },
        TraceStep::KernelSearch {
            side,
            epsilon,
            degree,
            kernel_dim,
        } => format!(
            "kernel search ({}, eps = {:+}, d = {}): dimension {}",
            side_txt(*side),
            epsilon.value(),
            degree,
            kernel_dim
        ),
        TraceStep::DegreeCapFallback { cap } => {
            format!("indicial relation degenerate: searching all degrees <= {}", cap)
        }
    }
}
