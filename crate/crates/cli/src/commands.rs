//! Command implementations. Each handler returns either a finished
//! [`Outcome`] (report + text + exit code) or a [`CliFailure`] raised before
//! a report could be produced.
//!
//! Exit codes: 0 completed analysis (any verdict), 1 verification failure,
//! 2 usage/parse error, 3 unsupported field extension.

use serde_json::{json, Value};

use dopfactor_core::arith::{rational_sqrt, BigRational, Field, Polynomial, Ring};
use dopfactor_core::nabla;
use dopfactor_core::reduce::{self, AnalyzeOptions, FactorSide, Verdict};
use dopfactor_core::Error as CoreError;

use crate::parse::{parse_operator, parse_polynomial, promote_polynomial, RatOp};
use crate::render;
use crate::report::{trace_json, trace_text, ReportDocument};

pub struct Outcome {
    pub report: ReportDocument,
    pub text: String,
    pub exit_code: i32,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(report: ReportDocument, text: String) -> Self {
        Outcome {
            report,
            text,
            exit_code: 0,
            warnings: Vec::new(),
        }
    }
}

#[derive(Debug)]
pub struct CliFailure {
    pub message: String,
    pub exit_code: i32,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> Self {
        CliFailure {
            message: message.into(),
            exit_code: 2,
        }
    }
}

fn parse_rational_arg(src: &str, what: &str) -> Result<BigRational, CliFailure> {
    src.trim()
        .parse::<BigRational>()
        .map_err(|e| CliFailure::usage(format!("invalid {} '{}': {}", what, src, e)))
}

/// Extracts the potential `Q` from a parsed operator required to be exactly
/// `D^2 - Q`.
fn potential_of(op: &RatOp) -> Result<Polynomial<BigRational>, CliFailure> {
    let shape_err = || {
        CliFailure::usage(
            "operator must be monic of order 2 with no D coefficient (shape D^2 - Q)",
        )
    };
    if op.order() != Some(2) {
        return Err(shape_err());
    }
    if !op.coeff(2).is_one() || !op.coeff(1).is_zero() {
        return Err(shape_err());
    }
    Ok(op.coeff(0).neg())
}

pub fn cmd_analyze(
    operator: &str,
    field_sqrt: Option<&str>,
    max_degree: u64,
) -> Result<Outcome, CliFailure> {
    let op = parse_operator(operator).map_err(|e| CliFailure::usage(e.to_string()))?;
    let q = potential_of(&op)?;

    let mut warnings = Vec::new();
    let base = match field_sqrt {
        Some(src) => {
            let b = parse_rational_arg(src, "--field-sqrt value")?;
            if Ring::is_zero(&b) {
                return Err(CliFailure::usage("--field-sqrt must be nonzero"));
            }
            b
        }
        None => match q.leading() {
            Some(lead) if rational_sqrt(lead).is_none() => {
                warnings.push(format!(
                    "no --field-sqrt given; inferring the extension sqrt({}) from the leading coefficient of Q",
                    lead
                ));
                lead.clone()
            }
            _ => BigRational::from_integer(1.into()),
        },
    };

    let q_ext = promote_polynomial(&q, &base);
    let opts = AnalyzeOptions { max_degree };
    let report = reduce::analyze_order2(&q_ext, &opts).map_err(|e| match e {
        CoreError::FieldExtensionRequired => CliFailure {
            message: format!(
                "a square root outside {} is required; pass it via --field-sqrt",
                render::render_field(&base)
            ),
            exit_code: 3,
        },
        other => CliFailure {
            message: format!("analysis failed verification: {}", other),
            exit_code: 1,
        },
    })?;

    let field = render::render_field(&base);
    let trace_values: Vec<Value> = report.trace.iter().map(trace_json).collect();
    let mut text_lines: Vec<String> = report.trace.iter().map(trace_text).collect();

    let result = match report.verdict {
        Verdict::Irreducible => {
            text_lines.push(format!("IRREDUCIBLE over {}", field));
            json!({
                "verdict": "irreducible",
                "field": field,
                "side": Value::Null,
                "factor": Value::Null,
                "cofactor": Value::Null,
                "witness_poly": Value::Null,
                "branch_epsilon": Value::Null,
                "degree_used": Value::Null,
            })
        }
        Verdict::Reducible => {
            let factor = report.witness_factor.as_ref().expect("witness present");
            let factor_text = render::render_op_ratfunc(factor);
            // recover the order-1 cofactor of the verified division
            let target = {
                let l = reduce::operator_from_potential(&q_ext);
                match report.side {
                    FactorSide::Left => l.adjoint(),
                    _ => l,
                }
            };
            let (cofactor, rem) = target
                .to_rational_coeffs()
                .right_divide(factor)
                .expect("witness divisor is nonzero");
            assert!(rem.is_zero(), "reported witness must divide exactly");
            let cofactor_text = render::render_op_ratfunc(&cofactor);
            let side_name = match report.side {
                FactorSide::Right => "right",
                FactorSide::Left => "left",
                FactorSide::None => unreachable!("reducible verdicts carry a side"),
            };
            // for a left factor the witness right-divides the adjoint; the
            // left factor of the operator itself is its monic adjoint
            let display_factor = match report.side {
                FactorSide::Left => {
                    let adj = factor.adjoint();
                    let lead_inv = adj.leading().expect("order-1 factor").inv();
                    render::render_op_ratfunc(&adj.scale(&lead_inv))
                }
                _ => factor_text.clone(),
            };
            text_lines.push(format!(
                "REDUCIBLE ({} factor: {})",
                side_name, display_factor
            ));
            text_lines.push(format!(
                "factorization{}: ({}) . ({})",
                if report.side == FactorSide::Left {
                    " of the adjoint"
                } else {
                    ""
                },
                cofactor_text,
                factor_text
            ));
            json!({
                "verdict": "reducible",
                "field": field,
                "side": side_name,
                "factor": factor_text,
                "cofactor": cofactor_text,
                "witness_poly": report
                    .witness_poly
                    .as_ref()
                    .map(render::render_poly_quadext),
                "branch_epsilon": report.branch.as_ref().map(|b| b.epsilon.value()),
                "degree_used": report.degree_used,
            })
        }
    };

    let doc = ReportDocument::new(
        "analyze",
        json!({
            "operator": operator,
            "field_sqrt": field_sqrt,
            "max_degree": max_degree,
        }),
        result,
        trace_values,
    );
    Ok(Outcome {
        report: doc,
        text: text_lines.join("\n"),
        exit_code: 0,
        warnings,
    })
}

pub fn cmd_nabla_mu(d: u64) -> Result<Outcome, CliFailure> {
    let d = usize::try_from(d).map_err(|_| CliFailure::usage("d is too large"))?;
    let value = nabla::mu(d);
    let nonzero = !Ring::is_zero(&value);
    let doc = ReportDocument::new(
        "nabla mu",
        json!({ "d": d }),
        json!({
            "d": d,
            "mu": value.to_string(),
            "nonzero": nonzero,
        }),
        Vec::new(),
    );
    let mut outcome = Outcome::ok(doc, format!("mu({}) = {}", d, value));
    if !nonzero {
        outcome.exit_code = 1;
        outcome.text.push_str("\nFAIL: mu vanished");
    }
    Ok(outcome)
}

pub fn cmd_nabla_verify(d: u64) -> Result<Outcome, CliFailure> {
    if d < 2 {
        return Err(CliFailure::usage("verify requires --d >= 2"));
    }
    let d = usize::try_from(d).map_err(|_| CliFailure::usage("d is too large"))?;
    let recurrence = nabla::minors_recurrence(d);
    let direct = nabla::minors_direct(d);
    let oracle_ok = recurrence == direct;
    let ineq = nabla::verify_inequalities_of(&recurrence);
    let mu = recurrence.mu();
    let mu_nonzero = !Ring::is_zero(mu);
    let parity_ok = if d % 2 == 0 {
        Some(mu % dopfactor_core::BigInt::from(2) != dopfactor_core::BigInt::from(0))
    } else {
        None
    };

    let pass = oracle_ok && ineq.passed() && mu_nonzero && parity_ok.unwrap_or(true);
    let mut lines = vec![
        format!(
            "recurrence vs direct determinants: {}",
            if oracle_ok { "ok" } else { "MISMATCH" }
        ),
        format!(
            "inequality chain (p = 1..{}): {}",
            d.saturating_sub(1),
            match ineq.chain_violation {
                None => "ok".to_string(),
                Some(p) => format!("VIOLATED at p = {}", p),
            }
        ),
        format!(
            "terminal bound: {}",
            if ineq.terminal_ok { "ok" } else { "VIOLATED" }
        ),
        format!("mu({}) = {}", d, mu),
    ];
    if let Some(p) = parity_ok {
        lines.push(format!("parity (even d): {}", if p { "odd, ok" } else { "EVEN" }));
    }
    lines.push(if pass { "PASS".to_string() } else { "FAIL".to_string() });

    let doc = ReportDocument::new(
        "nabla verify",
        json!({ "d": d }),
        json!({
            "d": d,
            "pass": pass,
            "recurrence_matches_direct": oracle_ok,
            "chain_violation": ineq.chain_violation,
            "terminal_ok": ineq.terminal_ok,
            "mu": mu.to_string(),
            "parity_ok": parity_ok,
            "checks": ineq.checks,
        }),
        Vec::new(),
    );
    let mut outcome = Outcome::ok(doc, lines.join("\n"));
    if !pass {
        outcome.exit_code = 1;
    }
    Ok(outcome)
}

pub fn cmd_nabla_sweep(max_d: u64) -> Result<Outcome, CliFailure> {
    let max_d = usize::try_from(max_d).map_err(|_| CliFailure::usage("max-d is too large"))?;
    let report = nabla::sweep(max_d);
    let mut lines = Vec::with_capacity(report.rows.len() + 3);
    lines.push("   d  mu!=0  parity  chain".to_string());
    for row in &report.rows {
        lines.push(format!(
            "{:>4}  {:>5}  {:>6}  {:>5}",
            row.d,
            if row.mu_nonzero { "ok" } else { "FAIL" },
            match row.parity_ok {
                None => "-",
                Some(true) => "ok",
                Some(false) => "FAIL",
            },
            if row.chain_ok { "ok" } else { "FAIL" },
        ));
    }
    lines.push(format!(
        "checked d = 0..{}: {} failures, {} parity checks, {} inequality checks, largest minor has {} digits",
        report.d_max,
        report.failures.len(),
        report.parity_checked,
        report.inequality_checks,
        report.max_digits
    ));
    lines.push(if report.passed() { "PASS".to_string() } else { "FAIL".to_string() });

    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| match f {
            nabla::SweepFailure::MuZero { d } => json!({"kind": "mu_zero", "d": d}),
            nabla::SweepFailure::ParityViolation { d } => {
                json!({"kind": "parity", "d": d})
            }
            nabla::SweepFailure::ChainViolation { d, p } => {
                json!({"kind": "chain", "d": d, "p": p})
            }
            nabla::SweepFailure::TerminalViolation { d } => {
                json!({"kind": "terminal", "d": d})
            }
        })
        .collect();
    let doc = ReportDocument::new(
        "nabla sweep",
        json!({ "max_d": max_d }),
        json!({
            "max_d": max_d,
            "pass": report.passed(),
            "evaluated": report.rows.len(),
            "failures": failures,
            "parity_checked": report.parity_checked,
            "inequality_checks": report.inequality_checks,
            "max_digits": report.max_digits,
        }),
        Vec::new(),
    );
    let mut outcome = Outcome::ok(doc, lines.join("\n"));
    if !report.passed() {
        outcome.exit_code = 1;
    }
    Ok(outcome)
}

pub fn cmd_nabla_h(d: u64) -> Result<Outcome, CliFailure> {
    let d = usize::try_from(d).map_err(|_| CliFailure::usage("d is too large"))?;
    let values = nabla::h_closed_forms(d)
        .map_err(|_| CliFailure::usage("h requires an odd d"))?;
    let lines: Vec<String> = values
        .iter()
        .map(|(p, h)| format!("h({}) = {}", p, h))
        .collect();
    let doc = ReportDocument::new(
        "nabla h",
        json!({ "d": d }),
        json!({
            "d": d,
            "values": values
                .iter()
                .map(|(p, h)| json!({"p": p, "h": h.to_string()}))
                .collect::<Vec<_>>(),
        }),
        Vec::new(),
    );
    Ok(Outcome::ok(doc, lines.join("\n")))
}

pub enum Transform {
    Fourier,
    Adjoint,
    Translate(String),
    Twist(String),
}

pub fn cmd_transform(kind: Transform, operator: &str) -> Result<Outcome, CliFailure> {
    let op = parse_operator(operator).map_err(|e| CliFailure::usage(e.to_string()))?;
    let (name, input, transformed): (&str, Value, RatOp) = match &kind {
        Transform::Fourier => ("fourier", json!({ "operator": operator }), op.fourier()),
        Transform::Adjoint => ("adjoint", json!({ "operator": operator }), op.adjoint()),
        Transform::Translate(c_src) => {
            let c = parse_rational_arg(c_src, "--c value")?;
            (
                "translate",
                json!({ "operator": operator, "c": c_src }),
                op.translate(&c),
            )
        }
        Transform::Twist(r_src) => {
            let r = parse_polynomial(r_src).map_err(|e| CliFailure::usage(e.to_string()))?;
            (
                "twist",
                json!({ "operator": operator, "r": r_src }),
                op.twist(&r),
            )
        }
    };
    let rendered = render::render_op_rational(&transformed);
    let doc = ReportDocument::new(
        name,
        input,
        json!({ "operator": rendered }),
        Vec::new(),
    );
    Ok(Outcome::ok(doc, rendered))
}
