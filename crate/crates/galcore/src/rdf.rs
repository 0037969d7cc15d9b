//! Triple-store ingestion: from subject/predicate/object data to formal
//! contexts, schema classes, and drift reports between snapshots.
//!
//! Only a line-based subset of the N-Triples shape is read: `<s> <p>
//! <o> .` or `<s> <p> "literal" .`, with `#` comments. The context
//! projection keeps just (subject, predicate) incidence; schema classes
//! are the concept extents of that context, ordered by inclusion.

use crate::concepts::{enumerate_concepts, ConceptLattice};
use crate::context::{materialize_polarity, ContextError, FormalContext};
use crate::ordering::{le_relation, preceq_pq, OrderVerdict};
use crate::poset::materialization_cap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RdfError {
    #[error("line {line}: expected {what}")]
    Expected { line: usize, what: &'static str },
    #[error("line {line}: unterminated {what}")]
    Unterminated { line: usize, what: &'static str },
    #[error("line {line}: empty IRI")]
    EmptyIri { line: usize },
    #[error("line {line}: content after the terminating '.'")]
    TrailingContent { line: usize },
    #[error(transparent)]
    Context(#[from] ContextError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectTerm {
    Iri(String),
    Literal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub subject: String,
    pub predicate: String,
    pub object: ObjectTerm,
}

/// Parsed triples plus where they came from. Duplicates are retained;
/// the projection to a context collapses them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSet {
    pub triples: Vec<Triple>,
    pub source: String,
}

fn take_iri(rest: &str, line: usize) -> Result<(String, &str), RdfError> {
    let rest = rest.trim_start();
    let Some(body) = rest.strip_prefix('<') else {
        return Err(RdfError::Expected { line, what: "'<' opening an IRI" });
    };
    let Some(end) = body.find('>') else {
        return Err(RdfError::Unterminated { line, what: "IRI" });
    };
    if end == 0 {
        return Err(RdfError::EmptyIri { line });
    }
    Ok((body[..end].to_string(), &body[end + 1..]))
}

fn take_literal(rest: &str, line: usize) -> Result<(String, &str), RdfError> {
    let body = rest.strip_prefix('"').expect("caller saw the opening quote");
    let mut out = String::new();
    let mut chars = body.char_indices();
    while let Some((i, c)) = chars.next() {
        match c {
            '"' => return Ok((out, &body[i + 1..])),
            '\\' => match chars.next() {
                Some((_, esc @ ('"' | '\\'))) => out.push(esc),
                Some((_, other)) => {
                    out.push('\\');
                    out.push(other);
                }
                None => break,
            },
            _ => out.push(c),
        }
    }
    Err(RdfError::Unterminated { line, what: "literal" })
}

/// Parse the supported triple lines, skipping blank lines and `#`
/// comments. Errors carry 1-based line numbers.
pub fn parse_ntriples(text: &str, source: impl Into<String>) -> Result<TripleSet, RdfError> {
    let mut triples = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (subject, rest) = take_iri(trimmed, line)?;
        let (predicate, rest) = take_iri(rest, line)?;
        let rest = rest.trim_start();
        let (object, rest) = if rest.starts_with('"') {
            let (lit, rest) = take_literal(rest, line)?;
            (ObjectTerm::Literal(lit), rest)
        } else {
            let (iri, rest) = take_iri(rest, line)?;
            (ObjectTerm::Iri(iri), rest)
        };
        let rest = rest.trim_start();
        let Some(after) = rest.strip_prefix('.') else {
            return Err(RdfError::Expected { line, what: "terminating '.'" });
        };
        if !after.trim().is_empty() {
            return Err(RdfError::TrailingContent { line });
        }
        triples.push(Triple { subject, predicate, object });
    }
    Ok(TripleSet { triples, source: source.into() })
}

/// Project triples onto (subject, predicate) incidence. Carriers are
/// the distinct subjects and predicates in sorted order; objects are
/// dropped.
pub fn context_from_triples(set: &TripleSet) -> Result<FormalContext, RdfError> {
    let mut subjects: Vec<String> = set.triples.iter().map(|t| t.subject.clone()).collect();
    subjects.sort();
    subjects.dedup();
    let mut predicates: Vec<String> = set.triples.iter().map(|t| t.predicate.clone()).collect();
    predicates.sort();
    predicates.dedup();
    let mut rows = vec![0u64; subjects.len()];
    for t in &set.triples {
        let g = subjects.binary_search(&t.subject).expect("collected above");
        let m = predicates.binary_search(&t.predicate).expect("collected above");
        rows[g] |= 1 << m;
    }
    let m_count = predicates.len();
    Ok(FormalContext::new(rows, m_count, Some(subjects), Some(predicates))?)
}

/// Schema classes of a context: the concept extents with their intents
/// and the inclusion (subsumption) order between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaClasses {
    lattice: ConceptLattice,
}

impl SchemaClasses {
    pub fn lattice(&self) -> &ConceptLattice {
        &self.lattice
    }

    pub fn extents(&self) -> Vec<u64> {
        self.lattice.concepts().iter().map(|c| c.extent).collect()
    }

    /// Proper subsumption pairs (smaller class index, larger class
    /// index) under extent inclusion.
    pub fn subsumptions(&self) -> Vec<(usize, usize)> {
        let n = self.lattice.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.lattice.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn schema_classes(ctx: &FormalContext) -> SchemaClasses {
    SchemaClasses { lattice: enumerate_concepts(ctx) }
}

/// Rebuild two contexts over the union of their carriers so they can be
/// compared: labels are merged sorted, missing incidences stay empty.
pub fn normalize_carriers(
    a: &FormalContext,
    b: &FormalContext,
) -> Result<(FormalContext, FormalContext), RdfError> {
    let mut subjects: Vec<String> = a
        .object_labels()
        .iter()
        .chain(b.object_labels())
        .cloned()
        .collect();
    subjects.sort();
    subjects.dedup();
    let mut predicates: Vec<String> = a
        .attribute_labels()
        .iter()
        .chain(b.attribute_labels())
        .cloned()
        .collect();
    predicates.sort();
    predicates.dedup();
    let widen = |ctx: &FormalContext| -> Result<FormalContext, RdfError> {
        let mut rows = vec![0u64; subjects.len()];
        for (g, label) in subjects.iter().enumerate() {
            let Some(old_g) = ctx.object_index(label) else { continue };
            for (m, plabel) in predicates.iter().enumerate() {
                if let Some(old_m) = ctx.attribute_index(plabel) {
                    if ctx.incident(old_g, old_m) {
                        rows[g] |= 1 << m;
                    }
                }
            }
        }
        Ok(FormalContext::new(
            rows,
            predicates.len(),
            Some(subjects.clone()),
            Some(predicates.clone()),
        )?)
    };
    Ok((widen(a)?, widen(b)?))
}

/// Drift between two snapshots: class turnover plus order verdicts,
/// computed over union-normalized carriers.
#[derive(Debug, Clone)]
pub struct SchemaDiff {
    pub subjects: Vec<String>,
    pub predicates: Vec<String>,
    /// Extents present only in the new snapshot.
    pub added: Vec<u64>,
    /// Extents present only in the old snapshot.
    pub removed: Vec<u64>,
    /// Extents present in both.
    pub preserved: Vec<u64>,
    pub old_le_new: OrderVerdict,
    pub new_le_old: OrderVerdict,
    /// Closure comparison of the two polarities, both directions, when
    /// the carriers are small enough to materialize.
    pub preceq_old_new: Option<OrderVerdict>,
    pub preceq_new_old: Option<OrderVerdict>,
    pub class_counts: (usize, usize),
}

impl SchemaDiff {
    pub fn is_unchanged(&self) -> bool {
        self.added.is_empty() && self.removed.is_empty()
    }
}

pub fn schema_diff(old: &FormalContext, new: &FormalContext) -> Result<SchemaDiff, RdfError> {
    let (old, new) = normalize_carriers(old, new)?;
    let old_classes = schema_classes(&old);
    let new_classes = schema_classes(&new);
    let old_extents = old_classes.extents();
    let new_extents = new_classes.extents();
    let mut added: Vec<u64> = new_extents
        .iter()
        .copied()
        .filter(|e| !old_extents.contains(e))
        .collect();
    let mut removed: Vec<u64> = old_extents
        .iter()
        .copied()
        .filter(|e| !new_extents.contains(e))
        .collect();
    let mut preserved: Vec<u64> = old_extents
        .iter()
        .copied()
        .filter(|e| new_extents.contains(e))
        .collect();
    added.sort_unstable();
    removed.sort_unstable();
    preserved.sort_unstable();
    let old_le_new = le_relation(&old, &new).expect("normalized to shared carriers");
    let new_le_old = le_relation(&new, &old).expect("normalized to shared carriers");
    let cap = materialization_cap();
    let (preceq_old_new, preceq_new_old) =
        if old.object_count() <= cap && old.attribute_count() <= cap {
            let pa = materialize_polarity(&old)?;
            let pb = materialize_polarity(&new)?;
            (
                Some(preceq_pq(&pa, &pb).expect("shared powerset carriers")),
                Some(preceq_pq(&pb, &pa).expect("shared powerset carriers")),
            )
        } else {
            (None, None)
        };
    Ok(SchemaDiff {
        subjects: old.object_labels().to_vec(),
        predicates: old.attribute_labels().to_vec(),
        added,
        removed,
        preserved,
        old_le_new,
        new_le_old,
        preceq_old_new,
        preceq_new_old,
        class_counts: (old_extents.len(), new_extents.len()),
    })
}
