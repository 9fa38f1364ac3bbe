//! Integer matrices from JSON (`{"<key>": [[...]]}`) or headerless CSV.

use std::io::Read;
use std::path::Path;

use linkform::BigInt;
use serde_json::Value;

use crate::CliError;

pub fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Parses a matrix, choosing JSON when the text starts with `{`.
pub fn parse_matrix(text: &str, key: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text, key)
    } else {
        parse_csv(text)
    }
}

pub fn read_matrix(path: &Path, key: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    parse_matrix(&read_source(path)?, key).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn parse_json(text: &str, key: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let rows = v
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input(format!("expected an object with an array field \"{key}\"")))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CliError::Input("matrix rows must be arrays".into()))?
                .iter()
                .map(json_integer)
                .collect()
        })
        .collect()
}

/// Integers may be JSON numbers or decimal strings (for values beyond 64 bits).
fn json_integer(v: &Value) -> Result<BigInt, CliError> {
    let bad = || CliError::Input(format!("not an integer: {v}"));
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(bad())
            }
        }
        Value::String(s) => s.trim().parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn parse_csv(text: &str) -> Result<Vec<Vec<BigInt>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Input(format!("invalid CSV: {e}")))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .map(|f| f.parse::<BigInt>().map_err(|_| CliError::Input(format!("not an integer: {f:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}
