//! Rendering of command reports as JSON, CSV or plain tab-separated text.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    TsvPlain,
}

pub enum Body {
    Rows {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Value>>,
    },
    Summary(Vec<(&'static str, Value)>),
}

pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, Value)>,
    /// Seed of randomized commands, `None` for exact ones.
    pub seed: Option<u64>,
    pub workers: usize,
    pub body: Body,
}

fn object(pairs: &[(&'static str, Value)]) -> Value {
    Value::Object(pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), self.command.into());
        out.insert("params".into(), object(&self.params));
        out.insert("seed".into(), self.seed.map_or(Value::Null, Value::from));
        out.insert(
            "split_rule".into(),
            self.seed.map_or(Value::Null, |_| randword::streams::SPLIT_RULE.into()),
        );
        out.insert("workers".into(), self.workers.into());
        match &self.body {
            Body::Rows { columns, rows } => {
                let rows = rows
                    .iter()
                    .map(|r| {
                        let pairs: Vec<_> = columns.iter().copied().zip(r.iter().cloned()).collect();
                        object(&pairs)
                    })
                    .collect();
                out.insert("rows".into(), Value::Array(rows));
            }
            Body::Summary(pairs) => {
                out.insert("summary".into(), object(pairs));
            }
        }
        let mut versions = Map::new();
        versions.insert("randword".into(), randword::VERSION.into());
        versions.insert("randword-cli".into(), env!("CARGO_PKG_VERSION").into());
        out.insert("versions".into(), Value::Object(versions));
        Value::Object(out)
    }

    fn table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        match &self.body {
            Body::Rows { columns, rows } => (
                columns.clone(),
                rows.iter().map(|r| r.iter().map(cell).collect()).collect(),
            ),
            Body::Summary(pairs) => (
                pairs.iter().map(|(k, _)| *k).collect(),
                vec![pairs.iter().map(|(_, v)| cell(v)).collect()],
            ),
        }
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json())? + "\n"),
            Format::Csv => {
                let (header, rows) = self.table();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header)?;
                for r in rows {
                    w.write_record(&r)?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
            Format::TsvPlain => {
                let (header, rows) = self.table();
                let mut text = header.join("\t") + "\n";
                for r in rows {
                    text += &(r.join("\t") + "\n");
                }
                Ok(text)
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
