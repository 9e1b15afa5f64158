use serde::Serialize;
use serde_json::{json, Value};

use crate::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// The computation succeeded and the answer is "no such object".
    Infeasible,
}

/// What a command produced before anything is written.
#[derive(Debug, Clone)]
pub struct Output {
    pub command: &'static str,
    pub status: Status,
    pub result: Value,
    /// Human-readable lines for stdout.
    pub summary: String,
    /// Extra artifacts as `(file name, contents)`.
    pub files: Vec<(String, String)>,
}

impl Output {
    pub fn new(command: &'static str, status: Status, result: impl Serialize, summary: String) -> Self {
        Output {
            command,
            status,
            result: serde_json::to_value(result).expect("report values serialize"),
            summary,
            files: Vec::new(),
        }
    }

    pub fn with_file(mut self, name: impl Into<String>, body: String) -> Self {
        self.files.push((name.into(), body));
        self
    }
}

/// Floats become strings with 17 significant digits; integers and
/// rational strings pass through.
fn stringify_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            Value::String(format!("{:.16e}", n.as_f64().unwrap_or(f64::NAN)))
        }
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_floats).collect()),
        Value::Object(o) => {
            Value::Object(o.into_iter().map(|(k, v)| (k, stringify_floats(v))).collect())
        }
        other => other,
    }
}

pub fn render_json(out: &Output, cfg: &RunConfig) -> String {
    let doc = json!({
        "command": out.command,
        "status": out.status,
        "seed": cfg.seed,
        "tol": cfg.tol,
        "result": out.result,
    });
    let mut s = serde_json::to_string_pretty(&stringify_floats(doc)).expect("json renders");
    s.push('\n');
    s
}
