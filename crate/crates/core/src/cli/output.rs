use clap::ValueEnum;
use serde::Serialize;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// Canonical, pretty-printed JSON array.
    #[default]
    Json,
    Csv,
    Text,
}

/// Flat projection of a record for CSV and text output.
pub trait Table {
    fn headers() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

impl Table for serde_json::Value {
    fn headers() -> &'static [&'static str] {
        &["value"]
    }
    fn cells(&self) -> Vec<String> {
        vec![self.to_string()]
    }
}

pub fn render<T: Serialize + Table>(format: Format, rows: &[T]) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(T::headers()).expect("in-memory write");
            for r in rows {
                w.write_record(r.cells()).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Text => rows.iter().map(|r| r.cells().join("  ") + "\n").collect(),
    }
}
