//! The single JSON envelope every invocation emits, plus the CSV rendering
//! of the same payload.
//!
//! Exact values are serialized as rational strings (`p/q` or an integer),
//! never as floats; approximate fields carry an explicit `approx` marker.
//! The CSV form is a flat per-command table carrying the same numeric
//! content as the JSON results.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Value,
    pub timing_ms: u64,
}

impl Envelope {
    pub fn new(command: &str, inputs: BTreeMap<String, String>, results: Value) -> Envelope {
        Envelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
            timing_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self.command.as_str() {
            "construct" => construct_csv(&mut w, &self.results),
            "roots" => roots_csv(&mut w, &self.results),
            "verify" => verify_csv(&mut w, &self.results),
            "laguerre" => laguerre_csv(&mut w, &self.results),
            _ => generic_csv(&mut w, &self.results),
        }
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("utf8 csv")
    }
}

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        other => other.to_string(),
    }
}

fn construct_csv(w: &mut csv::Writer<Vec<u8>>, results: &Value) {
    w.write_record(["record", "route", "index", "value"]).unwrap();
    for route in results["routes"].as_array().unwrap_or(&Vec::new()) {
        let name = route["route"].as_str().unwrap_or("?");
        for (j, c) in route["coefficients"]
            .as_array()
            .unwrap_or(&Vec::new())
            .iter()
            .enumerate()
        {
            w.write_record(["coefficient", name, &j.to_string(), &s(c)]).unwrap();
        }
    }
    if let Some(agree) = results.get("agree") {
        w.write_record(["agreement", "all", "", &s(agree)]).unwrap();
    }
}

fn roots_csv(w: &mut csv::Writer<Vec<u8>>, results: &Value) {
    w.write_record(["record", "name", "index", "lo", "hi", "value"]).unwrap();
    for (i, root) in results["roots"].as_array().unwrap_or(&Vec::new()).iter().enumerate() {
        let mult = s(&root["multiplicity"]);
        if root.get("point").is_some_and(|p| p.as_bool() == Some(true)) {
            let v = s(&root["value"]);
            w.write_record(["root", "point", &i.to_string(), &v, &v, &mult]).unwrap();
        } else {
            w.write_record([
                "root",
                "interval",
                &i.to_string(),
                &s(&root["interval"][0]),
                &s(&root["interval"][1]),
                &mult,
            ])
            .unwrap();
        }
    }
    if let Some(counts) = results["counts"].as_object() {
        for (k, v) in counts {
            w.write_record(["count", k, "", "", "", &s(v)]).unwrap();
        }
    }
    if let Some(simple) = results.get("simple") {
        w.write_record(["flag", "simple", "", "", "", &s(simple)]).unwrap();
    }
    if let Some(bounds) = results.get("bounds").and_then(|b| b.as_object()) {
        for (k, v) in bounds {
            if k == "classical_leftmost" {
                let (lo, hi) = if v.get("point").is_some() {
                    (s(&v["value"]), s(&v["value"]))
                } else {
                    (s(&v["interval"][0]), s(&v["interval"][1]))
                };
                w.write_record(["bound", k, "", &lo, &hi, &s(&v["multiplicity"])]).unwrap();
            } else {
                w.write_record(["bound", k, "", "", "", &s(v)]).unwrap();
            }
        }
    }
}

fn verify_csv(w: &mut csv::Writer<Vec<u8>>, results: &Value) {
    w.write_record(["record", "index", "outcome", "expected", "observed", "inputs"]).unwrap();
    let report = &results["report"];
    w.write_record(["meta", "", "", "suite", report["suite"].as_str().unwrap_or("?"), ""]).unwrap();
    w.write_record(["meta", "", "", "seed", &s(&report["seed"]), ""]).unwrap();
    for (i, case) in report["cases"].as_array().unwrap_or(&Vec::new()).iter().enumerate() {
        let inputs = case["inputs"]
            .as_object()
            .map(|m| {
                m.iter()
                    .map(|(k, v)| format!("{k}={}", s(v)))
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        w.write_record([
            "case",
            &i.to_string(),
            case["outcome"].as_str().unwrap_or("?"),
            case["expected"].as_str().unwrap_or(""),
            case["observed"].as_str().unwrap_or(""),
            &inputs,
        ])
        .unwrap();
    }
    if let Some(summary) = report["summary"].as_object() {
        for (k, v) in summary {
            w.write_record(["summary", "", "", k, &s(v), ""]).unwrap();
        }
    }
}

fn laguerre_csv(w: &mut csv::Writer<Vec<u8>>, results: &Value) {
    w.write_record(["record", "name", "index", "value"]).unwrap();
    for (i, v) in results["phi_prefix"].as_array().unwrap_or(&Vec::new()).iter().enumerate() {
        w.write_record(["phi", "prefix", &i.to_string(), &s(v)]).unwrap();
    }
    for (i, v) in results["coefficients"].as_array().unwrap_or(&Vec::new()).iter().enumerate() {
        w.write_record(["coefficient", "", &i.to_string(), &s(v)]).unwrap();
    }
    if let Some(warn) = results.get("integer_difference_warning") {
        w.write_record(["flag", "integer_difference_warning", "", &s(warn)]).unwrap();
    }
    if let Some(orth) = results.get("orthogonality").and_then(|o| o.as_array()) {
        for cond in orth {
            let name = format!("j={},k={}", s(&cond["j"]), s(&cond["k"]));
            w.write_record(["orthogonality", &name, "", &s(&cond["holds"])]).unwrap();
        }
    }
    if let Some(all) = results.get("orthogonal") {
        w.write_record(["flag", "orthogonal", "", &s(all)]).unwrap();
    }
}

fn generic_csv(w: &mut csv::Writer<Vec<u8>>, results: &Value) {
    w.write_record(["key", "value"]).unwrap();
    if let Some(map) = results.as_object() {
        for (k, v) in map {
            w.write_record([k.as_str(), &s(v)]).unwrap();
        }
    }
}
