//! CSV and JSON rendering.
//!
//! Numbers carry 12 significant digits in Rust's `e` notation, which never
//! depends on locale. Non-finite values are written as the tokens `inf`,
//! `-inf` and `nan`, also inside JSON where they become strings.

use std::fmt::Write as _;

use serde_json::{Map, Value as Json};

/// One output cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Value {
    Num(f64),
    Bool(bool),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Self::Num(x)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Self::Bool(b)
    }
}

pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.11e}")
    }
}

impl Value {
    pub fn to_csv(self) -> String {
        match self {
            Self::Num(x) => format_number(x),
            Self::Bool(b) => b.to_string(),
        }
    }

    /// Rounded to the same 12 digits as the CSV output.
    pub fn to_json(self) -> Json {
        match self {
            Self::Num(x) if x.is_finite() => {
                let rounded: f64 = format_number(x).parse().expect("formatted float parses");
                serde_json::Number::from_f64(rounded).map_or(Json::Null, Json::Number)
            }
            Self::Num(x) => Json::String(format_number(x)),
            Self::Bool(b) => Json::Bool(b),
        }
    }
}

/// A header plus ordered rows of cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub comment: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.comment);
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_csv()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn row_object(&self, row: &[Value]) -> Json {
        let map: Map<String, Json> = self
            .columns
            .iter()
            .zip(row)
            .map(|(k, v)| (k.to_string(), v.to_json()))
            .collect();
        Json::Object(map)
    }

    /// A single row as a flat object, several rows as an array of them.
    pub fn to_json(&self) -> String {
        let value = if self.rows.len() == 1 {
            self.row_object(&self.rows[0])
        } else {
            Json::Array(self.rows.iter().map(|r| self.row_object(r)).collect())
        };
        let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
        s.push('\n');
        s
    }
}
