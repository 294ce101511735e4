use semigroup_forge::NumericalSemigroup;
use serde_json::{json, Value};

use crate::commands::Report;
use crate::Format;

pub(crate) fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({
        "generators": s.min_gens(),
        "frobenius": s.frobenius(),
        "genus": s.genus(),
    })
}

pub(crate) fn semigroup_line(s: &NumericalSemigroup) -> String {
    format!("  {s}  F={} g={}", s.frobenius(), s.genus())
}

fn verify_text(v: &Option<Result<String, String>>) -> String {
    match v {
        None => "skipped".into(),
        Some(Ok(how)) => format!("passed ({how})"),
        Some(Err(why)) => format!("failed: {why}"),
    }
}

fn input_text(inputs: &Value) -> String {
    let Value::Object(map) = inputs else {
        return inputs.to_string();
    };
    map.iter()
        .filter(|(_, v)| !v.is_null())
        .map(|(k, v)| match v {
            Value::Array(items) => format!(
                "{k}={}",
                items
                    .iter()
                    .map(Value::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Value::String(text) => format!("{k}={text}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut meta = json!({ "verify": verify_text(&report.verify) });
            if let Some(n) = report.explored {
                meta["explored"] = json!(n);
            }
            if let Some(ms) = report.elapsed_ms {
                meta["elapsed_ms"] = json!(ms as u64);
            }
            let doc = json!({
                "command": report.command,
                "inputs": report.inputs,
                "result": report.result,
                "meta": meta,
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("values serialize");
            out.push('\n');
            out
        }
        Format::Table => {
            let mut out = format!("# {} {}\n", report.command, input_text(&report.inputs));
            for line in &report.lines {
                out.push_str(line);
                out.push('\n');
            }
            let mut meta = Vec::new();
            if let Some(n) = report.explored {
                meta.push(format!("explored: {n}"));
            }
            meta.push(format!("verify: {}", verify_text(&report.verify)));
            if let Some(ms) = report.elapsed_ms {
                meta.push(format!("elapsed: {ms} ms"));
            }
            out.push_str(&format!("-- {}\n", meta.join(", ")));
            out
        }
    }
}
