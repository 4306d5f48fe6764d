//! Small helpers for walking untyped JSON with field-path error messages.

use serde_json::{Map, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{field}`: {message}")]
    Schema { field: String, message: String },
}

impl ParseError {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError::Schema {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub(crate) fn parse_value(text: &str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub(crate) fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

pub(crate) fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, ParseError> {
    v.as_object()
        .ok_or_else(|| ParseError::schema(if path.is_empty() { "$" } else { path }, "expected an object"))
}

pub(crate) fn reject_unknown(map: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<(), ParseError> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(ParseError::schema(join(path, k), "unknown field")),
        None => Ok(()),
    }
}

pub(crate) fn required<'a>(map: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, ParseError> {
    map.get(key)
        .ok_or_else(|| ParseError::schema(join(path, key), "missing required field"))
}

pub(crate) fn int(v: &Value, path: &str) -> Result<i64, ParseError> {
    v.as_i64()
        .ok_or_else(|| ParseError::schema(path, "expected an integer"))
}

pub(crate) fn required_int(map: &Map<String, Value>, key: &str, path: &str) -> Result<i64, ParseError> {
    int(required(map, key, path)?, &join(path, key))
}

pub(crate) fn optional_int(map: &Map<String, Value>, key: &str, path: &str) -> Result<Option<i64>, ParseError> {
    map.get(key).map(|v| int(v, &join(path, key))).transpose()
}

pub(crate) fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, ParseError> {
    v.as_array()
        .ok_or_else(|| ParseError::schema(path, "expected an array"))
}

pub(crate) fn int_list(items: &[i64]) -> String {
    let parts: Vec<String> = items.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Lays out `"key": [` ... `]` with one pre-rendered item per line.
pub(crate) fn block(key: &str, items: &[String], last: bool) -> String {
    let tail = if last { "" } else { "," };
    if items.is_empty() {
        return format!("  \"{key}\": []{tail}\n");
    }
    let mut out = format!("  \"{key}\": [\n");
    for (i, item) in items.iter().enumerate() {
        let sep = if i + 1 == items.len() { "" } else { "," };
        out.push_str(&format!("    {item}{sep}\n"));
    }
    out.push_str(&format!("  ]{tail}\n"));
    out
}
