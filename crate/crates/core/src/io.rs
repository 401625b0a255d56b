//! JSON formats: instances, publication profiles, and witnesses.
//!
//! Instance schema:
//!
//! ```text
//! {"n": 6, "own": [0, 1], "citations": [[0, 1]], "compat_edges": [[0, 1]], "h": 2, "k": 1}
//! ```
//!
//! `"compat": "clique"` may replace `compat_edges` (complete on the own
//! articles); `k` is optional. [`write_instance`] emits the canonical form:
//! compact, keys in the order above, arcs and edges sorted, `"compat":
//! "clique"` whenever the compatibility graph is exactly that clique.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::compat::{build_compat_graph, Threshold, TitleTokens};
use crate::error::{Error, Result};
use crate::model::{ArticleId, CitationGraph, CompatibilityGraph, Instance, Partition};

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::schema(format!("$.{key}"), "missing field"))
}

fn uint(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| Error::schema(path, format!("expected a non-negative integer, found {v}")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))
}

fn pairs(v: &Value, path: &str) -> Result<Vec<(usize, usize)>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let at = format!("{path}[{i}]");
            match p.as_array().map(Vec::as_slice) {
                Some([a, b]) => Ok((uint(a, &format!("{at}[0]"))?, uint(b, &format!("{at}[1]"))?)),
                _ => Err(Error::schema(at, "expected a pair [u, v]")),
            }
        })
        .collect()
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::schema("$", e.to_string()))?;
    let obj = doc.as_object().ok_or_else(|| Error::schema("$", "expected an object"))?;
    for key in obj.keys() {
        if !["n", "own", "citations", "compat_edges", "compat", "h", "k"].contains(&key.as_str()) {
            return Err(Error::schema(format!("$.{key}"), "unknown field"));
        }
    }
    let n = uint(field(obj, "n")?, "$.n")?;
    let own: Vec<ArticleId> = array(field(obj, "own")?, "$.own")?
        .iter()
        .enumerate()
        .map(|(i, v)| uint(v, &format!("$.own[{i}]")).map(ArticleId::from))
        .collect::<Result<_>>()?;
    let arcs = pairs(field(obj, "citations")?, "$.citations")?;
    let h = uint(field(obj, "h")?, "$.h")?;
    let k = obj.get("k").map(|v| uint(v, "$.k")).transpose()?;
    let d = CitationGraph::from_pairs(n, &arcs)?;
    let g = match (obj.get("compat"), obj.get("compat_edges")) {
        (Some(_), Some(_)) => return Err(Error::schema("$.compat", "give either compat or compat_edges, not both")),
        (Some(Value::String(s)), None) if s == "clique" => {
            if let Some(&bad) = own.iter().find(|v| v.index() >= n) {
                return Err(Error::OutOfRangeId {
                    id: bad.index(),
                    n,
                    context: "own set",
                });
            }
            CompatibilityGraph::clique_on(n, &own)
        }
        (Some(_), None) => return Err(Error::schema("$.compat", "the only accepted value is \"clique\"")),
        (None, Some(v)) => CompatibilityGraph::from_pairs(n, &pairs(v, "$.compat_edges")?)?,
        (None, None) => return Err(Error::schema("$.compat_edges", "missing field (or give \"compat\": \"clique\")")),
    };
    Instance::new(d, g, own, h, k)
}

fn is_exact_own_clique(inst: &Instance) -> bool {
    let w = inst.own().len();
    w >= 2 && inst.compat().edge_count() == w * (w - 1) / 2 && inst.own_is_clique()
}

/// Canonical compact JSON, newline-terminated.
pub fn write_instance(inst: &Instance) -> String {
    let arcs: Vec<[ArticleId; 2]> = inst.citations().arcs().iter().map(|&(u, v)| [u, v]).collect();
    let mut fields: Vec<(&str, Value)> = vec![("n", json!(inst.n())), ("own", json!(inst.own())), ("citations", json!(arcs))];
    if is_exact_own_clique(inst) {
        fields.push(("compat", json!("clique")));
    } else {
        let mut edges: Vec<[ArticleId; 2]> = inst.compat().edges().map(|(a, b)| [a.min(b), a.max(b)]).collect();
        edges.sort();
        fields.push(("compat_edges", json!(edges)));
    }
    fields.push(("h", json!(inst.target)));
    if let Some(k) = inst.budget {
        fields.push(("k", json!(k)));
    }
    // Written by hand: serde_json maps only keep insertion order with `preserve_order`.
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("{}:{v}", json!(k))).collect();
    format!("{{{}}}\n", body.join(","))
}

/// A partition as a JSON array of id arrays.
pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

/// One article of a publication profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileArticle {
    pub key: String,
    #[serde(default)]
    pub title: String,
    pub own: bool,
}

/// Articles keyed by external identifiers plus `(citing, cited)` key pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileRecord {
    pub articles: Vec<ProfileArticle>,
    #[serde(default)]
    pub citations: Vec<(String, String)>,
}

pub fn parse_profile(text: &str) -> Result<ProfileRecord> {
    serde_json::from_str(text).map_err(|e| Error::schema("$", e.to_string()))
}

pub fn write_profile(p: &ProfileRecord) -> String {
    serde_json::to_string_pretty(p).expect("profile serializes") + "\n"
}

/// A profile mapped to dense ids (ascending key order) with its titles.
#[derive(Debug, Clone)]
pub struct IngestedProfile {
    pub keys: Vec<String>,
    pub own: Vec<ArticleId>,
    pub citations: CitationGraph,
    pub titles: Vec<TitleTokens>,
}

impl IngestedProfile {
    pub fn new(record: &ProfileRecord) -> Result<Self> {
        let mut by_key: BTreeMap<&str, &ProfileArticle> = BTreeMap::new();
        for a in &record.articles {
            if by_key.insert(a.key.as_str(), a).is_some() {
                return Err(Error::DuplicateKey(a.key.clone()));
            }
        }
        let index: BTreeMap<&str, ArticleId> =
            by_key.keys().enumerate().map(|(i, k)| (*k, ArticleId::from(i))).collect();
        let lookup = |k: &str| index.get(k).copied().ok_or_else(|| Error::DanglingCitation(k.to_string()));
        let arcs: BTreeSet<(ArticleId, ArticleId)> = record
            .citations
            .iter()
            .map(|(u, v)| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<_>>()?;
        let n = by_key.len();
        let citations = CitationGraph::new(n, arcs)?;
        let mut own = Vec::new();
        let mut titles = Vec::new();
        for (i, a) in by_key.values().enumerate() {
            if a.own {
                own.push(ArticleId::from(i));
                titles.push(TitleTokens::new(ArticleId::from(i), &a.title));
            }
        }
        Ok(IngestedProfile {
            keys: by_key.keys().map(|k| k.to_string()).collect(),
            own,
            citations,
            titles,
        })
    }

    /// The instance at threshold `t`; target 0 and no budget.
    pub fn instance(&self, t: Threshold) -> Result<Instance> {
        let g = build_compat_graph(self.keys.len(), &self.own, &self.titles, t)?;
        Instance::new(self.citations.clone(), g, self.own.clone(), 0, None)
    }
}

/// Dense ids by sorted key, citations as given (repeats collapse),
/// compatibility from titles at threshold `t`.
pub fn ingest_profile(record: &ProfileRecord, t: Threshold) -> Result<Instance> {
    IngestedProfile::new(record)?.instance(t)
}
