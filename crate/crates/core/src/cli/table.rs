use std::fmt::Write as _;
use std::path::Path;

use serde_json::{Map, Value};

/// One table entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Num(v as f64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            // shortest round-trip digits, exponent form for tiny or huge values
            Cell::Num(v) => format!("{v:?}"),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

/// Column-named rows plus free-form metadata.
///
/// CSV output is a header row followed by data rows and `# key: value`
/// footer lines for the metadata; JSON output is `{meta, columns, rows}`.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Map<String, Value>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn set_meta(&mut self, key: &str, value: impl Into<Value>) {
        self.meta.insert(key.to_string(), value.into());
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        for (k, v) in &self.meta {
            let v = match v {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(s, "# {k}: {v}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        let doc = serde_json::json!({
            "meta": Value::Object(self.meta.clone()),
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path, format: super::Format) -> std::io::Result<()> {
        let text = match format {
            super::Format::Csv => self.to_csv(),
            super::Format::Json => self.to_json(),
        };
        std::fs::write(path, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new(["x", "v"]);
        t.push(vec![0.1.into(), (-2.0).into()]);
        t.push(vec![1e-20.into(), f64::NAN.into()]);
        t.set_meta("skipped", 3);
        assert_eq!(t.to_csv(), "x,v\n0.1,-2.0\n1e-20,NaN\n# skipped: 3\n");
    }

    #[test]
    fn json_round_trip() {
        let mut t = Table::new(["name", "value"]);
        t.push(vec!["a,b".into(), 0.30000000000000004.into()]);
        let v: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["rows"][0][1].as_f64().unwrap(), 0.30000000000000004);
        assert_eq!(v["columns"][0], "name");
        assert_eq!(Cell::from("a,b").csv(), "\"a,b\"");
    }
}
