#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use regex::Regex;
use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn hurwitz(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

/// True when the text contains something that reads as a decimal number.
pub fn has_float_token(text: &str) -> bool {
    Regex::new(r"\d\.\d|\d[eE][+-]?\d").unwrap().is_match(text)
}

pub fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema shipped in docs")).expect("schema parses")
}

/// Validates `value` against `#/$defs/<def>` using the JSON Schema keywords
/// the shipped schema uses: type, properties, required, additionalProperties,
/// items, minItems, minimum, enum, pattern and local $ref.
pub fn validate(schema: &Value, def: &str, value: &Value) -> Result<(), String> {
    let node = &schema["$defs"][def];
    assert!(!node.is_null(), "unknown definition {def}");
    check(schema, node, value, def)
}

fn check(root: &Value, node: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(reference) = node.get("$ref").and_then(Value::as_str) {
        let name = reference.strip_prefix("#/$defs/").expect("local refs only");
        return check(root, &root["$defs"][name], value, path);
    }
    if let Some(ty) = node.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => panic!("bad type keyword"),
        };
        let actual = match value {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) if n.is_i64() || n.is_u64() => "integer",
            Value::Number(_) => "number",
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        if !allowed.contains(&actual) {
            return Err(format!("{path}: expected {allowed:?}, got {actual}"));
        }
    }
    if let (Some(min), Some(n)) = (node.get("minimum").and_then(Value::as_i64), value.as_i64()) {
        if n < min {
            return Err(format!("{path}: {n} < minimum {min}"));
        }
    }
    if let Some(options) = node.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    if let (Some(pattern), Some(s)) = (node.get("pattern").and_then(Value::as_str), value.as_str()) {
        if !Regex::new(pattern).unwrap().is_match(s) {
            return Err(format!("{path}: {s:?} does not match {pattern}"));
        }
    }
    if let Some(items) = value.as_array() {
        if let Some(min) = node.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(item_schema) = node.get("items") {
            for (i, item) in items.iter().enumerate() {
                check(root, item_schema, item, &format!("{path}[{i}]"))?;
            }
        }
    }
    if let Some(obj) = value.as_object() {
        let props = node.get("properties").and_then(Value::as_object);
        if let Some(required) = node.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing {key}"));
                }
            }
        }
        for (key, v) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(sub) => check(root, sub, v, &format!("{path}.{key}"))?,
                None if node.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{path}: unexpected property {key}"))
                }
                None => {}
            }
        }
    }
    Ok(())
}
