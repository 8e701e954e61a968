use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::catalog::{CatalogEntry, EntryKind};
use crate::galois::{Field, FieldDescriptor};
use crate::lincode::{CodeRecord, Exactness};
use crate::quantum::{AqcParams, BoundKind, CharpinFamilies, FamilyOutcome, VerificationReport};

#[derive(Debug, Clone, Serialize)]
pub struct FieldInfo {
    pub field: FieldDescriptor,
    pub order: u32,
    pub subfield_order: u32,
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_dual_basis: Option<Option<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundValue {
    #[serde(flatten)]
    pub kind: BoundKind,
    pub value: i64,
}

/// Everything a subcommand can print.
pub enum Output {
    Field(FieldInfo),
    Code(CodeRecord),
    Quantum(AqcParams),
    QuantumList(Vec<AqcParams>),
    Charpin(Box<CharpinFamilies>),
    Bound(BoundValue),
    Reports(Vec<VerificationReport>),
    Entry(CatalogEntry),
    Entries(Vec<CatalogEntry>),
}

impl Output {
    pub fn to_json(&self) -> Value {
        let v = match self {
            Output::Field(x) => serde_json::to_value(x),
            Output::Code(x) => serde_json::to_value(x),
            Output::Quantum(x) => serde_json::to_value(x),
            Output::QuantumList(x) => serde_json::to_value(x),
            Output::Charpin(x) => serde_json::to_value(x),
            Output::Bound(x) => serde_json::to_value(x),
            Output::Reports(x) if x.len() == 1 => serde_json::to_value(&x[0]),
            Output::Reports(x) => serde_json::to_value(x),
            Output::Entry(x) => serde_json::to_value(x),
            Output::Entries(x) => serde_json::to_value(x),
        };
        v.expect("output types serialize")
    }

    /// What the catalog should store for this output, if anything.
    pub fn catalog_payloads(&self) -> Vec<(EntryKind, Value)> {
        match self {
            Output::Code(c) => vec![(EntryKind::Classical, val(c))],
            Output::Quantum(p) => vec![(EntryKind::Quantum, val(p))],
            Output::QuantumList(ps) => ps.iter().map(|p| (EntryKind::Quantum, val(p))).collect(),
            Output::Charpin(c) => [&c.first, &c.second]
                .into_iter()
                .filter_map(|f| f.params.as_ref())
                .map(|p| (EntryKind::Quantum, val(p)))
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn human(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Field(info) => field_text(&mut s, info),
            Output::Code(rec) => code_text(&mut s, rec),
            Output::Quantum(p) => quantum_text(&mut s, p),
            Output::QuantumList(ps) => {
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        s.push('\n');
                    }
                    quantum_text(&mut s, p);
                }
            }
            Output::Charpin(c) => {
                family_text(&mut s, &c.first);
                s.push('\n');
                family_text(&mut s, &c.second);
            }
            Output::Bound(b) => {
                let _ = writeln!(s, "{:?} = {}", b.kind, b.value);
            }
            Output::Reports(rs) => {
                for (i, r) in rs.iter().enumerate() {
                    if i > 0 {
                        s.push('\n');
                    }
                    let _ = writeln!(s, "{r}");
                }
            }
            Output::Entry(e) => entry_text(&mut s, e, true),
            Output::Entries(es) => {
                for e in es {
                    entry_text(&mut s, e, false);
                }
                let _ = writeln!(s, "{} entries", es.len());
            }
        }
        s
    }
}

fn val<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("record types serialize")
}

fn field_text(s: &mut String, info: &FieldInfo) {
    let _ = writeln!(
        s,
        "GF({}) over GF({}), degree {}, modulus coefficients (low to high) {:?}",
        info.order, info.subfield_order, info.degree, info.field.modulus
    );
    let set = |v: &[String]| format!("{{{}}}", v.join(", "));
    if let Some(b) = &info.basis {
        let _ = writeln!(s, "basis:      {}", set(b));
    }
    if let Some(d) = &info.dual_basis {
        let _ = writeln!(s, "dual basis: {}", set(d));
    }
    match &info.self_dual_basis {
        Some(Some(b)) => {
            let _ = writeln!(s, "self-dual basis: {}", set(b));
        }
        Some(None) => {
            let _ = writeln!(s, "no self-dual basis exists");
        }
        None => {}
    }
}

fn code_text(s: &mut String, rec: &CodeRecord) {
    let q = rec.field.p.pow(rec.field.e);
    let d = match &rec.distance {
        Some(d) if d.exactness == Exactness::Exact => d.value.to_string(),
        Some(d) if d.exactness == Exactness::UpperBound => format!("<={}", d.value),
        Some(d) => format!(">={}", d.value),
        None => "?".into(),
    };
    let _ = writeln!(s, "[{},{},{d}]_{q}  {}", rec.n, rec.k, rec.provenance);
    if let Some(d) = &rec.distance {
        let _ = writeln!(s, "distance: {} ({}, {})", d.value, d.exactness, d.method);
    }
    if let Some(t) = &rec.defining_set {
        let _ = writeln!(s, "defining set: {:?}", t.exponents);
    }
    let field = Field::from_descriptor(&rec.field).ok();
    let _ = writeln!(s, "generator:");
    for row in &rec.generator {
        let cells: Vec<String> = row
            .iter()
            .map(|&x| field.as_ref().map_or(x.to_string(), |f| f.format(x)))
            .collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
}

fn quantum_text(s: &mut String, p: &AqcParams) {
    let purity = serde_json::to_value(p.purity).expect("purity serializes");
    let _ = writeln!(
        s,
        "{p}  ({}, {})",
        p.provenance.construction,
        purity.as_str().unwrap_or("?")
    );
    if let Some(u) = p.upper.dz {
        let _ = writeln!(s, "  dz <= {u}");
    }
    if let Some(u) = p.upper.dx {
        let _ = writeln!(s, "  dx <= {u}");
    }
    for i in &p.provenance.inputs {
        let _ = writeln!(s, "  input: {i}");
    }
    for c in &p.provenance.checks {
        let mark = if c.passed { "ok" } else { "FAILED" };
        if c.detail.is_empty() {
            let _ = writeln!(s, "  check {}: {mark}", c.name);
        } else {
            let _ = writeln!(s, "  check {}: {mark} ({})", c.name, c.detail);
        }
    }
    for n in &p.provenance.notes {
        let _ = writeln!(s, "  note: {n}");
    }
}

fn family_text(s: &mut String, f: &FamilyOutcome) {
    let _ = writeln!(s, "{} (formula k = {})", f.label, f.formula_k);
    for c in &f.checks {
        let mark = if c.passed { "ok" } else { "FAILED" };
        let _ = writeln!(s, "  check {}: {mark} {}", c.name, c.detail);
    }
    if let Some(e) = &f.error {
        let _ = writeln!(s, "  error: {e}");
    }
    if let Some(p) = &f.params {
        quantum_text(s, p);
    }
}

fn entry_text(s: &mut String, e: &CatalogEntry, full: bool) {
    let summary = match e.kind {
        EntryKind::Quantum => serde_json::from_value::<AqcParams>(e.payload.clone())
            .map(|p| p.to_string())
            .unwrap_or_default(),
        EntryKind::Classical => serde_json::from_value::<CodeRecord>(e.payload.clone())
            .map(|r| format!("[{},{}] {}", r.n, r.k, r.provenance))
            .unwrap_or_default(),
        EntryKind::Report => e
            .payload
            .get("target")
            .and_then(Value::as_str)
            .map(|t| format!("audit {t}"))
            .unwrap_or_default(),
    };
    let _ = writeln!(
        s,
        "{}  {:<9} {summary}",
        &e.id[..16.min(e.id.len())],
        e.kind
    );
    if full {
        let _ = writeln!(s, "id: {}", e.id);
        let _ = writeln!(s, "created: {}", e.created);
        for i in &e.inputs {
            let _ = writeln!(s, "input: {i}");
        }
        let _ = writeln!(
            s,
            "{}",
            serde_json::to_string_pretty(&e.payload).expect("Value serializes")
        );
    }
}
