//! Reading and writing the corpus JSON format.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};
use thiserror::Error;

use crate::forms::{IntMatrix, LinearFunctional, Signature, TrilinearForm, Vector};
use crate::group_action::GroupRep;
use crate::record::{Provenance, ProvenanceSource, SampleClass, SampleFlag, ThreefoldRecord};

pub const SCHEMA_VERSION: &str = "1.0";

/// JSON Schema for corpus files, printed by `threefold schema`.
pub const SCHEMA_JSON: &str = include_str!("schema.json");

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
}

fn schema_err<T>(path: &str, message: impl Into<String>) -> Result<T, CorpusError> {
    Err(CorpusError::Schema {
        path: path.to_string(),
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusFile {
    pub schema_version: String,
    pub records: Vec<ThreefoldRecord>,
}

pub fn load_corpus(path: impl AsRef<Path>) -> Result<CorpusFile, CorpusError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| CorpusError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_corpus(&text)
}

pub fn parse_corpus(text: &str) -> Result<CorpusFile, CorpusError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CorpusError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    corpus_from_value(&value)
}

pub fn corpus_from_value(value: &Value) -> Result<CorpusFile, CorpusError> {
    let top = object(value, "$")?;
    allow_keys(top, "$", &["schema_version", "records"])?;
    let version = string(required(top, "$", "schema_version")?, "$.schema_version")?;
    if version != SCHEMA_VERSION {
        return schema_err(
            "$.schema_version",
            format!("unsupported version `{version}`, expected `{SCHEMA_VERSION}`"),
        );
    }
    let list = array(required(top, "$", "records")?, "$.records")?;
    let mut records = Vec::with_capacity(list.len());
    let mut names = std::collections::BTreeSet::new();
    for (i, r) in list.iter().enumerate() {
        let path = format!("$.records[{i}]");
        let rec = record_from_value(r, &path)?;
        if !names.insert(rec.name.clone()) {
            return schema_err(&format!("{path}.name"), format!("duplicate record name `{}`", rec.name));
        }
        records.push(rec);
    }
    Ok(CorpusFile {
        schema_version: version,
        records,
    })
}

const RECORD_KEYS: &[&str] = &[
    "name",
    "b2",
    "mu",
    "c2",
    "c3",
    "c1",
    "p1",
    "is_calabi_yau",
    "torsion_free",
    "irregularity_zero",
    "samples",
    "group",
    "expected_factor_signatures",
    "provenance",
    "notes",
];

pub fn record_from_value(v: &Value, path: &str) -> Result<ThreefoldRecord, CorpusError> {
    let o = object(v, path)?;
    allow_keys(o, path, RECORD_KEYS)?;
    let field = |k: &str| format!("{path}.{k}");
    let name = string(required(o, path, "name")?, &field("name"))?;
    let b2 = positive_usize(required(o, path, "b2")?, &field("b2"))?;
    let is_calabi_yau = boolean(required(o, path, "is_calabi_yau")?, &field("is_calabi_yau"))?;

    let mu = match optional(o, "mu") {
        None => None,
        Some(m) => Some(trilinear(m, b2, &field("mu"))?),
    };
    let c2 = optional(o, "c2")
        .map(|c| functional(c, b2, &field("c2")))
        .transpose()?;
    let p1 = optional(o, "p1")
        .map(|c| functional(c, b2, &field("p1")))
        .transpose()?;
    let c3 = optional(o, "c3").map(|c| integer(c, &field("c3"))).transpose()?;
    let c1 = match optional(o, "c1") {
        None => Vector::zero(b2),
        Some(c) => Vector::from_bigints(&int_vector(c, b2, &field("c1"))?),
    };
    let torsion_free = optional(o, "torsion_free")
        .map(|b| boolean(b, &field("torsion_free")))
        .transpose()?
        .unwrap_or(false);
    let irregularity_zero = optional(o, "irregularity_zero")
        .map(|b| boolean(b, &field("irregularity_zero")))
        .transpose()?
        .unwrap_or(is_calabi_yau);

    let mut samples = Vec::new();
    if let Some(s) = optional(o, "samples") {
        for (i, item) in array(s, &field("samples"))?.iter().enumerate() {
            samples.push(sample(item, b2, &format!("{path}.samples[{i}]"))?);
        }
    }
    let group = optional(o, "group")
        .map(|g| group_rep(g, b2, &field("group")))
        .transpose()?;
    let mut expected_factor_signatures = Vec::new();
    if let Some(s) = optional(o, "expected_factor_signatures") {
        for (i, item) in array(s, &field("expected_factor_signatures"))?.iter().enumerate() {
            let p = format!("{path}.expected_factor_signatures[{i}]");
            let t = array(item, &p)?;
            if t.len() != 3 {
                return schema_err(&p, "signature must be [plus, zero, minus]");
            }
            let n: Vec<usize> = t
                .iter()
                .enumerate()
                .map(|(k, x)| nonneg_usize(x, &format!("{p}[{k}]")))
                .collect::<Result<_, _>>()?;
            expected_factor_signatures.push(Signature::new(n[0], n[1], n[2]));
        }
    }
    let mut provenance = Vec::new();
    if let Some(s) = optional(o, "provenance") {
        for (i, item) in array(s, &field("provenance"))?.iter().enumerate() {
            provenance.push(provenance_entry(item, &format!("{path}.provenance[{i}]"))?);
        }
    }
    let mut notes = Vec::new();
    if let Some(s) = optional(o, "notes") {
        for (i, item) in array(s, &field("notes"))?.iter().enumerate() {
            notes.push(string(item, &format!("{path}.notes[{i}]"))?);
        }
    }

    let rec = ThreefoldRecord {
        name,
        b2,
        mu,
        c2,
        c3,
        c1,
        p1,
        is_calabi_yau,
        torsion_free,
        irregularity_zero,
        samples,
        group,
        expected_factor_signatures,
        provenance,
        notes,
    };
    if let Err(issue) = rec.validate() {
        return schema_err(&format!("{path}.{}", issue.field), issue.message);
    }
    Ok(rec)
}

fn sample(v: &Value, b2: usize, path: &str) -> Result<SampleClass, CorpusError> {
    let o = object(v, path)?;
    allow_keys(o, path, &["name", "vector", "flags"])?;
    let name = string(required(o, path, "name")?, &format!("{path}.name"))?;
    let vector = int_vector(required(o, path, "vector")?, b2, &format!("{path}.vector"))?;
    let mut flags = Vec::new();
    if let Some(f) = optional(o, "flags") {
        for (i, item) in array(f, &format!("{path}.flags"))?.iter().enumerate() {
            let p = format!("{path}.flags[{i}]");
            let s = string(item, &p)?;
            match SampleFlag::from_str(&s) {
                Ok(flag) => flags.push(flag),
                Err(msg) => return schema_err(&p, msg),
            }
        }
    }
    Ok(SampleClass::new(name, vector, flags))
}

fn group_rep(v: &Value, b2: usize, path: &str) -> Result<GroupRep, CorpusError> {
    let o = object(v, path)?;
    allow_keys(o, path, &["generators", "order_hint"])?;
    let gens_path = format!("{path}.generators");
    let mut generators = Vec::new();
    for (g, item) in array(required(o, path, "generators")?, &gens_path)?.iter().enumerate() {
        let p = format!("{gens_path}[{g}]");
        let rows = array(item, &p)?;
        if rows.len() != b2 {
            return schema_err(&p, format!("expected {b2} rows, found {}", rows.len()));
        }
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| int_vector(row, b2, &format!("{p}[{r}]")))
            .collect::<Result<_, _>>()?;
        let m = IntMatrix::new(rows).map_err(|e| CorpusError::Schema {
            path: p.clone(),
            message: e.to_string(),
        })?;
        // validate each generator on its own so the error names it
        if let Err(e) = GroupRep::new(b2, vec![m.clone()], None) {
            return schema_err(&p, e.to_string());
        }
        generators.push(m);
    }
    let order_hint = optional(o, "order_hint")
        .map(|h| positive_usize(h, &format!("{path}.order_hint")).map(|n| n as u64))
        .transpose()?;
    GroupRep::new(b2, generators, order_hint).map_err(|e| CorpusError::Schema {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn provenance_entry(v: &Value, path: &str) -> Result<Provenance, CorpusError> {
    let o = object(v, path)?;
    allow_keys(o, path, &["field", "source", "note"])?;
    let field = string(required(o, path, "field")?, &format!("{path}.field"))?;
    let src_path = format!("{path}.source");
    let source = match string(required(o, path, "source")?, &src_path)?.as_str() {
        "literature" => ProvenanceSource::Literature,
        "derived" => ProvenanceSource::Derived,
        other => {
            return schema_err(
                &src_path,
                format!("unknown source `{other}`, expected `literature` or `derived`"),
            )
        }
    };
    let note = string(required(o, path, "note")?, &format!("{path}.note"))?;
    Ok(Provenance { field, source, note })
}

fn trilinear(v: &Value, b2: usize, path: &str) -> Result<TrilinearForm, CorpusError> {
    let mut entries = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (n, item) in array(v, path)?.iter().enumerate() {
        let p = format!("{path}[{n}]");
        let t = array(item, &p)?;
        if t.len() != 4 {
            return schema_err(&p, "entry must be [i, j, k, value]");
        }
        let mut idx = [0usize; 3];
        for (slot, x) in idx.iter_mut().zip(t) {
            let i = positive_usize(x, &p)?;
            if i > b2 {
                return schema_err(&p, format!("index {i} exceeds b2 = {b2}"));
            }
            *slot = i - 1;
        }
        if !(idx[0] <= idx[1] && idx[1] <= idx[2]) {
            return schema_err(&p, "indices must satisfy i <= j <= k");
        }
        if !seen.insert(idx) {
            return schema_err(&p, "duplicate index triple");
        }
        let value = integer(&t[3], &format!("{p}[3]"))?;
        entries.push((idx[0], idx[1], idx[2], value));
    }
    TrilinearForm::from_entries(b2, entries).map_err(|e| CorpusError::Schema {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn functional(v: &Value, b2: usize, path: &str) -> Result<LinearFunctional, CorpusError> {
    let ints = int_vector(v, b2, path)?;
    LinearFunctional::from_bigints(&ints).map_err(|e| CorpusError::Schema {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn int_vector(v: &Value, len: usize, path: &str) -> Result<Vec<BigInt>, CorpusError> {
    let a = array(v, path)?;
    if a.len() != len {
        return schema_err(path, format!("expected length {len} (b2), found {}", a.len()));
    }
    a.iter()
        .enumerate()
        .map(|(i, x)| integer(x, &format!("{path}[{i}]")))
        .collect()
}

/// A JSON integer, or a string holding a decimal integer (for values beyond
/// the range other tools handle).
fn integer(v: &Value, path: &str) -> Result<BigInt, CorpusError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return schema_err(path, "expected an integer"),
    };
    text.parse::<BigInt>()
        .or_else(|_| schema_err(path, format!("expected an integer, found `{text}`")))
}

fn positive_usize(v: &Value, path: &str) -> Result<usize, CorpusError> {
    let n = nonneg_usize(v, path)?;
    if n == 0 {
        return schema_err(path, "must be positive");
    }
    Ok(n)
}

fn nonneg_usize(v: &Value, path: &str) -> Result<usize, CorpusError> {
    let n = integer(v, path)?;
    usize::try_from(&n).or_else(|_| schema_err(path, format!("expected a non-negative size, found {n}")))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, CorpusError> {
    v.as_object()
        .map_or_else(|| schema_err(path, "expected an object"), Ok)
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CorpusError> {
    v.as_array()
        .map_or_else(|| schema_err(path, "expected an array"), Ok)
}

fn string(v: &Value, path: &str) -> Result<String, CorpusError> {
    v.as_str()
        .map(str::to_string)
        .map_or_else(|| schema_err(path, "expected a string"), Ok)
}

fn boolean(v: &Value, path: &str) -> Result<bool, CorpusError> {
    v.as_bool()
        .map_or_else(|| schema_err(path, "expected true or false"), Ok)
}

fn required<'a>(o: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value, CorpusError> {
    match o.get(key) {
        Some(v) if !v.is_null() => Ok(v),
        _ => schema_err(&format!("{path}.{key}"), "required field missing"),
    }
}

/// Absent and `null` are treated alike.
fn optional<'a>(o: &'a Map<String, Value>, key: &str) -> Option<&'a Value> {
    o.get(key).filter(|v| !v.is_null())
}

fn allow_keys(o: &Map<String, Value>, path: &str, keys: &[&str]) -> Result<(), CorpusError> {
    match o.keys().find(|k| !keys.contains(&k.as_str())) {
        Some(k) => schema_err(&format!("{path}.{k}"), "unknown field"),
        None => Ok(()),
    }
}

fn num(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn num_usize(n: usize) -> Value {
    Value::Number(Number::from(n))
}

fn int_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn functional_json(l: &LinearFunctional) -> Value {
    int_list(&l.integer_coeffs().expect("validated integral"))
}

pub fn record_to_value(rec: &ThreefoldRecord) -> Value {
    let mut o = Map::new();
    o.insert("name".into(), Value::String(rec.name.clone()));
    o.insert("b2".into(), num_usize(rec.b2));
    if let Some(mu) = &rec.mu {
        let entries = mu
            .entries()
            .map(|((i, j, k), v)| {
                Value::Array(vec![num_usize(i + 1), num_usize(j + 1), num_usize(k + 1), num(v)])
            })
            .collect();
        o.insert("mu".into(), Value::Array(entries));
    }
    if let Some(c2) = &rec.c2 {
        o.insert("c2".into(), functional_json(c2));
    }
    if let Some(c3) = &rec.c3 {
        o.insert("c3".into(), num(c3));
    }
    o.insert(
        "c1".into(),
        int_list(&rec.c1.to_integers().expect("validated integral")),
    );
    if let Some(p1) = &rec.p1 {
        o.insert("p1".into(), functional_json(p1));
    }
    o.insert("is_calabi_yau".into(), Value::Bool(rec.is_calabi_yau));
    o.insert("torsion_free".into(), Value::Bool(rec.torsion_free));
    o.insert("irregularity_zero".into(), Value::Bool(rec.irregularity_zero));
    let samples = rec
        .samples
        .iter()
        .map(|s| {
            let mut so = Map::new();
            so.insert("name".into(), Value::String(s.name.clone()));
            so.insert("vector".into(), int_list(s.integer_vector()));
            so.insert(
                "flags".into(),
                Value::Array(s.flags().iter().map(|f| Value::String(f.as_str().into())).collect()),
            );
            Value::Object(so)
        })
        .collect();
    o.insert("samples".into(), Value::Array(samples));
    if let Some(g) = &rec.group {
        let mut go = Map::new();
        let gens = g
            .generators()
            .iter()
            .map(|m| Value::Array(m.to_rows().iter().map(|r| int_list(r)).collect()))
            .collect();
        go.insert("generators".into(), Value::Array(gens));
        if let Some(h) = g.order_hint {
            go.insert("order_hint".into(), Value::Number(h.into()));
        }
        o.insert("group".into(), Value::Object(go));
    }
    o.insert(
        "expected_factor_signatures".into(),
        Value::Array(
            rec.expected_factor_signatures
                .iter()
                .map(|s| Value::Array(vec![num_usize(s.plus), num_usize(s.zero), num_usize(s.minus)]))
                .collect(),
        ),
    );
    o.insert(
        "provenance".into(),
        Value::Array(
            rec.provenance
                .iter()
                .map(|p| {
                    let mut po = Map::new();
                    po.insert("field".into(), Value::String(p.field.clone()));
                    po.insert("source".into(), Value::String(p.source.as_str().into()));
                    po.insert("note".into(), Value::String(p.note.clone()));
                    Value::Object(po)
                })
                .collect(),
        ),
    );
    o.insert(
        "notes".into(),
        Value::Array(rec.notes.iter().map(|n| Value::String(n.clone())).collect()),
    );
    Value::Object(o)
}

pub fn corpus_to_value(c: &CorpusFile) -> Value {
    let mut o = Map::new();
    o.insert("schema_version".into(), Value::String(c.schema_version.clone()));
    o.insert(
        "records".into(),
        Value::Array(c.records.iter().map(record_to_value).collect()),
    );
    Value::Object(o)
}

pub fn corpus_to_string(c: &CorpusFile) -> String {
    let mut s = serde_json::to_string_pretty(&corpus_to_value(c)).expect("serializable");
    s.push('\n');
    s
}
