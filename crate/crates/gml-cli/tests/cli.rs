//! End-to-end behavior of the gml binary: values on stdout, exit codes,
//! measure-file loading, output determinism, and schema validity of the
//! JSON reports.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn gml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gml"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = gml(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Pull one column value out of a CSV report row.
fn csv_cell(csv: &str, row: usize, col_name: &str) -> String {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().expect("header").split(',').collect();
    let col = header.iter().position(|&c| c == col_name).expect("column exists");
    lines.nth(row).expect("row exists").split(',').nth(col).expect("cell").to_string()
}

#[test]
fn means_constant_is_one() {
    let csv = stdout_of(&["means", "--coeffs", "1,0", "--p", "2", "--alpha", "1", "--radii", "1", "--format", "csv"]);
    let v: f64 = csv_cell(&csv, 0, "value_series").parse().unwrap();
    assert!((v - 1.0).abs() < 1e-10, "got {v}");
}

#[test]
fn means_monomial_value() {
    let csv = stdout_of(&["means", "--coeffs", "0,1", "--p", "2", "--alpha", "1", "--radii", "1", "--format", "csv"]);
    let v: f64 = csv_cell(&csv, 0, "value_quadrature").parse().unwrap();
    let expect = (1.0 - 2.0 * (-1.0f64).exp()) / (1.0 - (-1.0f64).exp());
    assert!((v - expect).abs() < 1e-6, "got {v}, expected {expect}");
}

#[test]
fn means_sum_value() {
    let csv = stdout_of(&["means", "--coeffs", "1,1", "--p", "2", "--alpha", "1", "--radii", "1", "--format", "csv"]);
    let v: f64 = csv_cell(&csv, 0, "value_series").parse().unwrap();
    let expect = 1.0 + (1.0 - 2.0 * (-1.0f64).exp()) / (1.0 - (-1.0f64).exp());
    assert!((v - expect).abs() < 1e-6, "got {v}, expected {expect}");
}

#[test]
fn convexity_limit_root_on_stdout() {
    let text = stdout_of(&["convexity", "--remark-g0"]);
    assert!(text.contains("1.86047094"), "missing root in:\n{text}");
}

#[test]
fn convexity_classifications() {
    let concave = stdout_of(&["convexity", "--k", "2", "--p", "2", "--alpha", "1"]);
    assert!(concave.contains("classification: concave"), "{concave}");
    let split = stdout_of(&["convexity", "--k", "1", "--p", "2", "--alpha=-1"]);
    assert!(split.contains("convex-then-concave"), "{split}");
    assert!(split.contains("1.77978"), "transition radius missing:\n{split}");
}

#[test]
fn trace_verdicts() {
    let bounded = stdout_of(&["trace", "--measure", "lebesgue", "--p", "2", "--q", "2", "--m", "0", "--r", "1"]);
    assert!(bounded.contains("verdict: bounded"), "{bounded}");
    assert!(bounded.contains("3.14159265359e0"), "sup value missing:\n{bounded}");

    let unbounded = stdout_of(&["trace", "--measure", "growing", "--p", "2", "--q", "2", "--m", "1", "--r", "1"]);
    assert!(unbounded.contains("verdict: unbounded"), "{unbounded}");

    let atom = stdout_of(&["trace", "--measure", "atom0", "--p", "2", "--q", "1", "--m", "0", "--r", "1.5", "--s", "1"]);
    assert!(atom.contains("verdict: bounded"), "{atom}");
    assert!(atom.contains("9.00000000000e0"), "lattice sum missing:\n{atom}");
}

#[test]
fn measure_file_loading() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("measure.json");
    std::fs::write(&path, r#"{"atoms": [[0.0, 0.0, 1.0], [2.0, 0.0, 0.5]]}"#).unwrap();
    let text = stdout_of(&["trace", "--measure", path.to_str().unwrap(), "--p", "2", "--q", "2", "--m", "0", "--r", "1"]);
    assert!(text.contains("verdict: bounded"), "{text}");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = gml(&["trace", "--measure", bad.to_str().unwrap(), "--p", "2", "--q", "2", "--m", "0", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2), "malformed measure JSON must exit 2");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(gml(&["means", "--coeffs", "zebra", "--radii", "1"]).status.code(), Some(2));
    assert_eq!(gml(&["means", "--coeffs", "1", "--radii", "1", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(gml(&["means", "--unknown-flag", "1"]).status.code(), Some(2));
    assert_eq!(gml(&["convexity"]).status.code(), Some(2));
    assert_eq!(gml(&["verify-paper", "--only", "no-such-criterion"]).status.code(), Some(2));
}

#[test]
fn verify_single_criterion_and_exit_zero() {
    let out = gml(&["verify-paper", "--only", "g0-root"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] #1"), "{text}");
    assert!(!text.contains("#2"), "filter leaked other criteria:\n{text}");
}

#[test]
fn verify_json_is_byte_identical_across_runs() {
    let first = stdout_of(&["verify-paper", "--seed", "42", "--only", "g0-root", "--format", "json"]);
    let second = stdout_of(&["verify-paper", "--seed", "42", "--only", "g0-root", "--format", "json"]);
    assert_eq!(first, second);
}

#[test]
fn command_output_is_byte_identical_across_runs() {
    let args = ["means", "--coeffs", "1,0.5+2i", "--p", "2", "--alpha", "1", "--radii", "0.5,1", "--format", "json", "--seed", "7"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = gml(&["means", "--coeffs", "1,1", "--radii", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("r,value_closed_form,value_series,value_quadrature,derivative"));
}

// --- JSON schema validation -------------------------------------------------

/// Minimal JSON-Schema checker covering exactly the constructs used by
/// schemas/report.schema.json: $ref into definitions, oneOf, type (single or
/// list), enum, required, properties, additionalProperties, items.
fn validate(schema: &Value, root: &Value, instance: &Value, path: &str) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        let target = reference
            .strip_prefix("#/definitions/")
            .and_then(|name| root.pointer(&format!("/definitions/{name}")))
            .ok_or_else(|| format!("{path}: unresolvable $ref {reference}"))?;
        return validate(target, root, instance, path);
    }
    if let Some(variants) = schema.get("oneOf").and_then(Value::as_array) {
        let hits: Vec<usize> = variants
            .iter()
            .enumerate()
            .filter(|(_, v)| validate(v, root, instance, path).is_ok())
            .map(|(i, _)| i)
            .collect();
        if hits.len() != 1 {
            return Err(format!("{path}: oneOf matched {} variants", hits.len()));
        }
        return Ok(());
    }
    if let Some(types) = schema.get("type") {
        let allowed: Vec<&str> = match types {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let actual = match instance {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) => {
                if n.is_i64() || n.is_u64() {
                    "integer"
                } else {
                    "number"
                }
            }
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        let ok = allowed.iter().any(|&t| t == actual || (t == "number" && actual == "integer"));
        if !ok {
            return Err(format!("{path}: type {actual} not in {allowed:?}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(instance) {
            return Err(format!("{path}: value not in enum"));
        }
    }
    if let Some(object) = instance.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !object.contains_key(key) {
                    return Err(format!("{path}: missing required key {key}"));
                }
            }
        }
        let properties = schema.get("properties").and_then(Value::as_object);
        for (key, value) in object {
            let child_path = format!("{path}.{key}");
            if let Some(prop_schema) = properties.and_then(|p| p.get(key)) {
                validate(prop_schema, root, value, &child_path)?;
            } else {
                match schema.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{path}: unexpected key {key}"))
                    }
                    Some(extra) if extra.is_object() => {
                        validate(extra, root, value, &child_path)?
                    }
                    _ => {}
                }
            }
        }
    }
    if let (Some(items), Some(array)) = (schema.get("items"), instance.as_array()) {
        for (i, element) in array.iter().enumerate() {
            validate(items, root, element, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

#[test]
fn json_reports_validate_against_shipped_schema() {
    let schema_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schemas/report.schema.json"
    ))
    .expect("schema file ships with the crate");
    let schema: Value = serde_json::from_str(&schema_text).expect("schema parses");

    let reports = [
        stdout_of(&["means", "--coeffs", "1,1", "--radii", "0.5,1", "--format", "json"]),
        stdout_of(&["convexity", "--k", "1", "--alpha=-1", "--format", "json"]),
        stdout_of(&["convexity", "--remark-c", "1", "--format", "json"]),
        stdout_of(&["trace", "--measure", "atom0", "--p", "2", "--q", "1", "--r", "1.5", "--s", "1", "--format", "json"]),
        stdout_of(&["verify-paper", "--only", "g0-root", "--format", "json"]),
    ];
    for (i, text) in reports.iter().enumerate() {
        let instance: Value = serde_json::from_str(text).expect("report is valid JSON");
        validate(&schema, &schema, &instance, "$")
            .unwrap_or_else(|e| panic!("report {i} failed schema validation: {e}\n{text}"));
    }
}

#[test]
fn schema_validator_rejects_malformed_reports() {
    let schema_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schemas/report.schema.json"
    ))
    .unwrap();
    let schema: Value = serde_json::from_str(&schema_text).unwrap();
    let bad = serde_json::json!({
        "command": "means",
        "seed": 1,
        "params": {},
        "columns": ["r"],
        "rows": [[{"nested": true}]],
        "notes": []
    });
    assert!(validate(&schema, &schema, &bad, "$").is_err());
    let missing = serde_json::json!({ "command": "verify-paper", "seed": 1 });
    assert!(validate(&schema, &schema, &missing, "$").is_err());
}

/// GML_THREADS caps the worker pool; output must not depend on it.
#[test]
fn thread_cap_does_not_change_output() {
    let run_with = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_gml"))
            .env("GML_THREADS", threads)
            .args(["trace", "--measure", "lebesgue", "--p", "2", "--q", "2", "--r", "1", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(run_with("1"), run_with("4"));
}

#[test]
fn stdin_is_not_consumed() {
    // regression guard: commands must not block on stdin
    let mut child = Command::new(env!("CARGO_BIN_EXE_gml"))
        .args(["means", "--coeffs", "1", "--radii", "1"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"ignored").ok();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
}
