//! On-disk forms: canonical JSON for semigroups, orders and relations, CSV
//! Cayley tables, and DOT chains.
//!
//! JSON is written compactly with a fixed key order (`elements`, `table`,
//! then `arity` and `bounds` when present) and a trailing newline, so equal
//! values always serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iterated::IndexedSemigroup;
use crate::order::TotalOrder;
use crate::semigroup::{CarrierLimit, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupDoc {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    /// Inclusive `[lo, hi]` per axis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<[i64; 2]>>,
}

/// A validated total order: labels least to greatest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderDoc {
    pub elements: Vec<String>,
}

/// An arbitrary relation for the axiom checkers; `[a, b]` means `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub elements: Vec<String>,
    pub pairs: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Semigroup(SemigroupDoc),
    Relation(RelationDoc),
    Order(OrderDoc),
}

fn format_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

/// Sniffs the document kind from its keys: `table` means a semigroup,
/// `pairs` a relation, `elements` alone an order.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(format_err)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Format("expected a JSON object".into()))?;
    if obj.contains_key("table") {
        serde_json::from_value(value).map(Document::Semigroup)
    } else if obj.contains_key("pairs") {
        serde_json::from_value(value).map(Document::Relation)
    } else {
        serde_json::from_value(value).map(Document::Order)
    }
    .map_err(format_err)
}

fn to_line<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("plain data serializes");
    s.push('\n');
    s
}

impl SemigroupDoc {
    pub fn from_semigroup(s: &FiniteSemigroup) -> Self {
        SemigroupDoc {
            elements: s.labels().to_vec(),
            table: s.rows(),
            arity: None,
            bounds: None,
        }
    }

    pub fn from_indexed(s: &IndexedSemigroup) -> Self {
        SemigroupDoc {
            arity: Some(s.arity()),
            bounds: Some(s.bounds().iter().map(|&(lo, hi)| [lo, hi]).collect()),
            ..Self::from_semigroup(s.underlying())
        }
    }

    pub fn is_indexed(&self) -> bool {
        self.arity.is_some() || self.bounds.is_some()
    }

    pub fn to_semigroup(&self, limit: CarrierLimit) -> Result<FiniteSemigroup> {
        FiniteSemigroup::from_table_with_limit(self.elements.clone(), self.table.clone(), limit)
    }

    pub fn to_indexed(&self, limit: CarrierLimit) -> Result<IndexedSemigroup> {
        let (arity, bounds) = match (&self.arity, &self.bounds) {
            (Some(a), Some(b)) => (*a, b),
            _ => {
                return Err(Error::IndexMetadata(
                    "input lacks `arity` and `bounds` fields".into(),
                ))
            }
        };
        if arity != bounds.len() {
            return Err(Error::IndexMetadata(format!(
                "arity {arity} but {} bounds",
                bounds.len()
            )));
        }
        IndexedSemigroup::new(
            self.to_semigroup(limit)?,
            bounds.iter().map(|&[lo, hi]| (lo, hi)).collect(),
        )
    }

    pub fn to_json(&self) -> String {
        to_line(self)
    }
}

pub fn semigroup_to_json(s: &FiniteSemigroup) -> String {
    SemigroupDoc::from_semigroup(s).to_json()
}

pub fn indexed_to_json(s: &IndexedSemigroup) -> String {
    SemigroupDoc::from_indexed(s).to_json()
}

pub fn semigroup_from_json(text: &str, limit: CarrierLimit) -> Result<FiniteSemigroup> {
    let doc: SemigroupDoc = serde_json::from_str(text).map_err(format_err)?;
    doc.to_semigroup(limit)
}

pub fn indexed_from_json(text: &str, limit: CarrierLimit) -> Result<IndexedSemigroup> {
    let doc: SemigroupDoc = serde_json::from_str(text).map_err(format_err)?;
    doc.to_indexed(limit)
}

impl OrderDoc {
    pub fn from_order(o: &TotalOrder) -> Self {
        OrderDoc {
            elements: o.chain_labels().into_iter().map(str::to_owned).collect(),
        }
    }

    pub fn to_order(&self) -> Result<TotalOrder> {
        TotalOrder::from_ranked_labels(self.elements.clone())
    }
}

pub fn order_to_json(o: &TotalOrder) -> String {
    to_line(&OrderDoc::from_order(o))
}

pub fn order_from_json(text: &str) -> Result<TotalOrder> {
    let doc: OrderDoc = serde_json::from_str(text).map_err(format_err)?;
    doc.to_order()
}

impl RelationDoc {
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .map(|[a, b]| (a.clone(), b.clone()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        to_line(self)
    }
}

/// Header row `*,<labels...>`, then one row per element: its label followed
/// by the labels of its products.
pub fn semigroup_to_csv(s: &FiniteSemigroup) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header = std::iter::once("*").chain(s.labels().iter().map(String::as_str));
    w.write_record(header).expect("in-memory write");
    for a in 0..s.len() {
        let row = std::iter::once(s.label(a))
            .chain(s.row(a).iter().map(|&p| s.label(p as usize)));
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("labels are UTF-8")
}

pub fn semigroup_from_csv(text: &str, limit: CarrierLimit) -> Result<FiniteSemigroup> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    let mut records = r.records();
    let header = records
        .next()
        .ok_or_else(|| Error::Format("empty CSV".into()))?
        .map_err(format_err)?;
    let labels: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let lookup = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::UnknownLabel(l.to_owned()))
    };
    let mut rows = Vec::with_capacity(labels.len());
    for (i, rec) in records.enumerate() {
        let rec = rec.map_err(format_err)?;
        let row_label = rec.get(0).unwrap_or_default();
        if labels.get(i).map(String::as_str) != Some(row_label) {
            return Err(Error::Format(format!(
                "row {} is labelled `{row_label}`, expected the header order",
                i + 1
            )));
        }
        rows.push(rec.iter().skip(1).map(lookup).collect::<Result<Vec<_>>>()?);
    }
    FiniteSemigroup::from_table_with_limit(labels, rows, limit)
}

/// The chain as a DOT digraph, one edge per covering pair.
pub fn order_to_dot(o: &TotalOrder) -> String {
    let chain = o.chain_labels();
    let mut out = String::from("digraph order {\n    rankdir=LR;\n");
    for l in &chain {
        out.push_str(&format!("    \"{}\";\n", escape_dot(l)));
    }
    for w in chain.windows(2) {
        out.push_str(&format!(
            "    \"{}\" -> \"{}\";\n",
            escape_dot(w[0]),
            escape_dot(w[1])
        ));
    }
    out.push_str("}\n");
    out
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
