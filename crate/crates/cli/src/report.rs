//! Result and error emission with the exit-code contract.

use socle::Error;

/// A finished computation: the JSON result, an optional LaTeX rendering,
/// and whether the outcome counts as a domain-level failure (a verify or
/// oracle run that reported a mismatch).
pub struct Report {
    pub result: serde_json::Value,
    pub latex: String,
    pub failed: bool,
}

impl Report {
    pub fn new(result: serde_json::Value, latex: String) -> Self {
        Report { result, latex, failed: false }
    }

    pub fn failing(result: serde_json::Value, latex: String) -> Self {
        Report { result, latex, failed: true }
    }
}

/// Exit code class for a library error: 1 for domain errors, 2 for
/// malformed input.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::NonSplittingFactor { .. }
        | Error::NotInGSigma
        | Error::MismatchedShift
        | Error::WindowTooSmall { .. }
        | Error::NonScalarAction { .. } => 1,
        Error::ZeroDenominator | Error::InvalidParameter(_) | Error::Parse(_) => 2,
    }
}

fn kind(error: &Error) -> &'static str {
    match error {
        Error::NonSplittingFactor { .. } => "NonSplittingFactor",
        Error::NotInGSigma => "NotInGSigma",
        Error::MismatchedShift => "MismatchedShift",
        Error::WindowTooSmall { .. } => "WindowTooSmall",
        Error::NonScalarAction { .. } => "NonScalarAction",
        Error::ZeroDenominator => "ZeroDenominator",
        Error::InvalidParameter(_) => "InvalidParameter",
        Error::Parse(_) => "Parse",
    }
}

/// Prints the error payload, naming the operation that failed, and
/// returns the exit code.
pub fn emit_error(operation: &str, error: &Error) -> i32 {
    let payload = serde_json::json!({
        "error": {
            "operation": operation,
            "kind": kind(error),
            "detail": error.to_string(),
        }
    });
    eprintln!("{}", serde_json::to_string_pretty(&payload).expect("error payload serializes"));
    exit_code(error)
}

/// Prints the report in the requested format and returns the exit code.
pub fn emit_report(
    algebra: &str,
    command: &str,
    report: &Report,
    latex: bool,
) -> i32 {
    if latex {
        println!("{}", report.latex);
    } else {
        let wrapped = serde_json::json!({
            "algebra": algebra,
            "command": command,
            "result": report.result,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&wrapped).expect("report serializes")
        );
    }
    i32::from(report.failed)
}
