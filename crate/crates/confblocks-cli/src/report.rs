use confblocks::linalg::{fmt_q, Q};
use confblocks::ratfun::{FormView, RationalForm};
use confblocks::repspace::TensorMonomial;
use serde_json::{json, Value};

/// A command result: the JSON document and whether every verification passed.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub body: Value,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &'static str, body: Value, pass: bool) -> Self {
        Report { command, body, pass }
    }

    /// Keys come out sorted, so equal inputs give byte-identical output.
    pub fn to_json(&self, elapsed_ms: Option<u128>) -> String {
        let mut doc = json!({
            "command": self.command,
            "status": if self.pass { "PASS" } else { "FAIL" },
            "result": self.body,
        });
        if let Some(ms) = elapsed_ms {
            doc["elapsed_ms"] = json!(ms);
        }
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn rational(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn matrix(rows: &[Vec<Q>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(rational).collect())).collect())
}

/// `f1f2 ⊗ 1 ⊗ f1`, with 1-based letters.
pub fn monomial(m: &TensorMonomial) -> String {
    m.iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&i| format!("f{}", i + 1)).collect::<String>()
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

pub fn form(f: &RationalForm) -> Value {
    serde_json::to_value(FormView::from(f)).expect("form serializes")
}
