//! Rendering of command results as JSON or flat CSV.
//!
//! Every report embeds the resolved input configuration. In JSON it is a
//! `config` object next to the payload; in CSV it becomes leading `#`
//! comment lines, so the data rows stay plot-ready.

use serde_json::{Map, Value};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

pub struct Report {
    /// Resolved inputs, echoed for provenance.
    pub config: Map<String, Value>,
    /// Result fields; merged next to `config` in the JSON rendering.
    pub payload: Map<String, Value>,
    /// Payload keys that are prose rather than data; CSV renders them as
    /// comments instead of columns.
    pub csv_notes: Vec<(String, String)>,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.render_json(),
            OutputFormat::Csv => self.render_csv(),
        }
    }

    fn render_json(&self) -> String {
        let mut map = Map::new();
        map.insert("config".to_string(), Value::Object(self.config.clone()));
        for (k, v) in &self.payload {
            map.insert(k.clone(), v.clone());
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(map))
            .expect("report serialization cannot fail");
        out.push('\n');
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.config {
            out.push_str(&format!("# {k}={}\n", csv_cell(v)));
        }
        for (k, v) in &self.csv_notes {
            out.push_str(&format!("# {k}={v}\n"));
        }
        out.push_str(&self.csv_header.join(","));
        out.push('\n');
        for row in &self.csv_rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Flat rendering of a JSON value for one CSV cell; arrays are joined with
/// semicolons so rows keep a fixed column count.
pub fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(x) => x.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(csv_cell).collect();
            cells.join(";")
        }
        Value::Object(_) => panic!("nested objects must be flattened by the command"),
    }
}
