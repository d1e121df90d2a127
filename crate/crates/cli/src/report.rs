use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Default, Serialize)]
pub struct Instance {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Bound {
    pub formula: String,
    pub value: usize,
}

/// Summary printed on standard output after every command. Numbers are
/// measured on the produced artifacts.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunReport {
    pub verb: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<Instance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assign: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_layered_width: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_td_width: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host_queue_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_queue_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<Bound>,
    /// Other measured values, by name.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, serde_json::Value>,
    pub verdicts: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub artifacts: Vec<String>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(verb: &str) -> Self {
        RunReport {
            verb: verb.to_string(),
            ..Default::default()
        }
    }

    pub fn verdict(&mut self, name: &str, ok: bool) {
        self.verdicts.insert(name.to_string(), ok);
    }

    pub fn value(&mut self, name: &str, v: impl Serialize) {
        self.values
            .insert(name.to_string(), serde_json::to_value(v).expect("plain data serializes"));
    }

    pub fn all_valid(&self) -> bool {
        self.verdicts.values().all(|&ok| ok)
    }
}
