//! JSON run reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

/// One command invocation and its structured result. Field order is fixed by
/// the struct and map keys are sorted, so equal runs serialize identically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str) -> RunReport {
        RunReport {
            tool: "tfgraph".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            inputs: BTreeMap::new(),
            seed: None,
            result: Value::Null,
            elapsed_ms: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> RunReport {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
