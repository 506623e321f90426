//! CSV and table renderings of a JSON document.
//!
//! The first array of objects inside `result` becomes the rows; every other
//! leaf becomes a `key, value` pair with a dotted path.

use serde_json::{Map, Value};

use crate::args::Format;

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(doc),
        Format::Table => render_table(doc),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten_into(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), parts.join(" ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten_into(&format!("{prefix}.{i}"), x, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

/// A flattened object: `(dotted key, rendered value)` pairs.
type Flat = Vec<(String, String)>;

fn flatten(v: &Value) -> Flat {
    let mut out = Vec::new();
    flatten_into("", v, &mut out);
    out
}

/// Rows (as flattened objects) and the remaining scalar fields.
fn split(doc: &Value) -> (Option<Vec<Flat>>, Flat) {
    let Some(result) = doc.get("result").and_then(Value::as_object) else {
        return (None, flatten(doc));
    };
    let rows_key = result.iter().find_map(|(k, v)| {
        v.as_array()
            .filter(|a| !a.is_empty() && a.iter().all(Value::is_object))
            .map(|_| k.clone())
    });
    let mut rest = Map::new();
    for (k, v) in result {
        if Some(k) != rows_key.as_ref() {
            rest.insert(k.clone(), v.clone());
        }
    }
    let rows = rows_key.map(|k| result[&k].as_array().expect("checked").iter().map(flatten).collect());
    (rows, flatten(&Value::Object(rest)))
}

fn header(rows: &[Flat]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for row in rows {
        for (k, _) in row {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

fn cells(row: &[(String, String)], cols: &[String]) -> Vec<String> {
    cols.iter()
        .map(|c| row.iter().find(|(k, _)| k == c).map(|(_, v)| v.clone()).unwrap_or_default())
        .collect()
}

fn render_csv(doc: &Value) -> String {
    let (rows, rest) = split(doc);
    let mut w = csv::Writer::from_writer(Vec::new());
    match rows {
        Some(rows) => {
            let cols = header(&rows);
            w.write_record(&cols).expect("in-memory write");
            for row in &rows {
                w.write_record(cells(row, &cols)).expect("in-memory write");
            }
        }
        None => {
            w.write_record(["key", "value"]).expect("in-memory write");
            for (k, v) in rest {
                w.write_record([k, v]).expect("in-memory write");
            }
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV of UTF-8 input")
}

fn render_table(doc: &Value) -> String {
    let (rows, rest) = split(doc);
    let mut out = String::new();
    let width = rest.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in &rest {
        if k.starts_with("config.") || k == "schema_version" {
            continue;
        }
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    if let Some(rows) = rows {
        let cols = header(&rows);
        let body: Vec<Vec<String>> = rows.iter().map(|r| cells(r, &cols)).collect();
        let widths: Vec<usize> = cols
            .iter()
            .enumerate()
            .map(|(i, c)| body.iter().map(|r| r[i].chars().count()).max().unwrap_or(0).max(c.len()))
            .collect();
        let line = |items: &[String]| {
            let padded: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&line(&cols));
        for r in &body {
            out.push_str(&line(r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rows_become_csv() {
        let doc = json!({
            "schema_version": 1,
            "result": {"n": 2, "rows": [{"a": 1, "w": {"x": 2}}, {"a": 3, "b": "s"}]}
        });
        assert_eq!(render(&doc, Format::Csv), "a,w.x,b\n1,2,\n3,,s\n");
    }

    #[test]
    fn scalars_become_pairs() {
        let doc = json!({"result": {"dim": 2, "num": [1, 2]}});
        assert_eq!(render(&doc, Format::Csv), "key,value\ndim,2\nnum,1 2\n");
        assert_eq!(render(&doc, Format::Table), "dim  2\nnum  1 2\n");
    }
}
