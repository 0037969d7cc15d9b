//! JSON wire formats for posets and connections, used by the command
//! line for inputs that are not powerset-shaped.

use crate::galois::GaloisConnection;
use crate::poset::{OrderMap, Poset, PosetError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Shape(#[from] PosetError),
    #[error("leq table must be {size}x{size}, row {row} has {got} entries")]
    RowWidth { size: usize, row: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcJson {
    #[serde(rename = "P")]
    pub p: PosetJson,
    #[serde(rename = "Q")]
    pub q: PosetJson,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

pub fn poset_to_json(p: &Poset) -> PosetJson {
    PosetJson {
        size: p.size(),
        leq: (0..p.size())
            .map(|x| (0..p.size()).map(|y| p.leq(x, y)).collect())
            .collect(),
        labels: p.labels().map(|ls| ls.to_vec()),
    }
}

pub fn poset_from_json(json: &PosetJson) -> Result<Poset, JsonError> {
    let mut flat = Vec::with_capacity(json.size * json.size);
    if json.leq.len() != json.size {
        return Err(JsonError::RowWidth {
            size: json.size,
            row: json.leq.len().min(json.size),
            got: json.leq.len(),
        });
    }
    for (row, entries) in json.leq.iter().enumerate() {
        if entries.len() != json.size {
            return Err(JsonError::RowWidth {
                size: json.size,
                row,
                got: entries.len(),
            });
        }
        flat.extend(entries.iter().copied());
    }
    Ok(Poset::new(json.size, flat, json.labels.clone())?)
}

pub fn gc_to_json(gc: &GaloisConnection) -> GcJson {
    GcJson {
        p: poset_to_json(gc.p()),
        q: poset_to_json(gc.q()),
        f: gc.f().table().to_vec(),
        g: gc.g().table().to_vec(),
    }
}

/// Rebuilds the connection quadruple, checking shapes but not validity:
/// callers decide whether to validate.
pub fn gc_from_json(json: &GcJson) -> Result<GaloisConnection, JsonError> {
    let p = poset_from_json(&json.p)?;
    let q = poset_from_json(&json.q)?;
    let f = OrderMap::new(json.f.clone(), q.size())?;
    let g = OrderMap::new(json.g.clone(), p.size())?;
    Ok(GaloisConnection::new(p, q, f, g)?)
}

pub fn parse_gc(text: &str) -> Result<GaloisConnection, JsonError> {
    gc_from_json(&serde_json::from_str(text)?)
}

pub fn render_gc(gc: &GaloisConnection) -> String {
    serde_json::to_string_pretty(&gc_to_json(gc)).expect("plain data serializes")
}
