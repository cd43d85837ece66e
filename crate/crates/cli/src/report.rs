//! Versioned JSON envelope shared by every subcommand.

use cdgraph_core::analysis::Timings;
use cdgraph_core::report::Verdict;
use serde::Serialize;

use crate::inputs::InputId;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub input: InputId,
    pub seed: u64,
    pub verdict: Verdict,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, input: InputId, seed: u64, verdict: Verdict, result: T) -> Envelope<T> {
        Envelope { schema_version: SCHEMA_VERSION, tool: "cdgraph", tool_version: TOOL_VERSION, command: command.into(), input, seed, verdict, result, timings: None }
    }

    pub fn with_timings(mut self, timings: Option<Timings>) -> Envelope<T> {
        self.timings = timings;
        self
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
