use std::fs;

use hdepth_core::{parse_spec, HilbertFunction, SpecError};

use crate::Failure;

/// Expands `@path` to the file's contents.
pub fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::input(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

/// A function given as DSL text or, when it starts with `{`, as JSON in the
/// exchange form. JSON printed by `qdepth --json` is accepted too; its
/// `function` field is used.
pub fn read_function(arg: &str) -> Result<(String, HilbertFunction), Failure> {
    let text = read_arg(arg)?;
    if text.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Failure::input(format!("invalid JSON: {e}")))?;
        let body = value.get("function").unwrap_or(&value);
        let h = HilbertFunction::from_json(body).map_err(|e| Failure::input(e.to_string()))?;
        let label = value
            .get("input")
            .and_then(|v| v.as_str())
            .map(str::to_string)
            .unwrap_or_else(|| h.to_string());
        return Ok((label, h));
    }
    let spec = parse_spec(&text).map_err(|e| Failure::input(diagnose(&text, &e)))?;
    let h = spec
        .elaborate()
        .map_err(|e| Failure::input(format!("cannot build {spec}: {e}")))?;
    Ok((spec.to_string(), h))
}

/// Error message with the input and a caret under the offending offset.
fn diagnose(text: &str, err: &SpecError) -> String {
    let position = match err {
        SpecError::Parse { position, .. } | SpecError::Elaboration { position, .. } => *position,
    };
    let column = text[..position.min(text.len())].chars().count();
    format!("{err}\n  {text}\n  {}^", " ".repeat(column))
}
