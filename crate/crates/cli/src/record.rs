//! The JSON envelope shared by every subcommand.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub diagnostics: BTreeMap<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            diagnostics: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), v.into());
        self
    }

    pub fn diagnostic(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.diagnostics.insert(key.to_string(), v.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records contain only JSON-safe values")
    }

    /// `key = value` lines, sections in a fixed order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (title, map) in [
            ("inputs", &self.inputs),
            ("results", &self.results),
            ("diagnostics", &self.diagnostics),
        ] {
            if map.is_empty() {
                continue;
            }
            out.push_str(&format!("[{title}]\n"));
            for (k, v) in map {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("  {k} = {shown}\n"));
            }
        }
        out
    }
}

/// Finite numbers as JSON numbers; infinities and NaN as strings, so every
/// numeric field of a record stays valid JSON.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        serde_json::Number::from_f64(x)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    } else if x.is_nan() {
        Value::String("nan".into())
    } else if x > 0.0 {
        Value::String("inf".into())
    } else {
        Value::String("-inf".into())
    }
}

pub fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}
