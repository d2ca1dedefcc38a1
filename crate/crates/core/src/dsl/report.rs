use serde_json::{json, Value};

use crate::error::Error;

pub const REPORT_TOOL: &str = "ultra-lpa";

/// Wraps `result` in the report envelope and pretty-prints it. Object
/// keys come out sorted.
pub fn emit_report(input: &str, result: Value) -> String {
    envelope(input, "result", result)
}

/// Report for a failed run: `error.code` is [`Error::code`].
pub fn emit_error(input: &str, err: &Error) -> String {
    let mut detail = json!({ "code": err.code(), "message": err.to_string() });
    match err {
        Error::Parse { line, column, .. } => {
            detail["line"] = json!(line);
            detail["column"] = json!(column);
        }
        Error::Validation(report) => {
            detail["findings"] = serde_json::to_value(&report.findings).expect("findings serialize");
        }
        _ => {}
    }
    envelope(input, "error", detail)
}

fn envelope(input: &str, key: &str, body: Value) -> String {
    let mut v = json!({
        "tool": REPORT_TOOL,
        "version": env!("CARGO_PKG_VERSION"),
        "input": input,
    });
    v[key] = body;
    serde_json::to_string_pretty(&v).expect("json values serialize")
}
