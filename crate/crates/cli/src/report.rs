//! Output envelope shared by every subcommand.

use serde_json::{json, Map, Value};
use std::time::{SystemTime, UNIX_EPOCH};

/// Bumped whenever a field of the envelope or of a verification report
/// changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

pub struct Envelope {
    pub command: String,
    pub timestamp: bool,
}

impl Envelope {
    /// `{schema_version, tool, command, [generated_at_unix], ...body}`.
    pub fn wrap(&self, body: Value) -> Value {
        let mut m = Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("tool".into(), json!(format!("mpg4 {}", env!("CARGO_PKG_VERSION"))));
        m.insert("command".into(), json!(self.command));
        if self.timestamp {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
            m.insert("generated_at_unix".into(), json!(secs));
        }
        match body {
            Value::Object(o) => m.extend(o),
            other => {
                m.insert("result".into(), other);
            }
        }
        Value::Object(m)
    }
}
