//! Formal contexts: a set of objects, a set of attributes, and an
//! incidence relation, stored as one attribute mask per object.
//!
//! The two derivation operators move between the powersets:
//! `common_attributes` sends a set of objects to the attributes shared by
//! all of them, `common_objects` goes the other way. On empty input they
//! return the full opposite carrier (an empty conjunction holds
//! vacuously), an edge real datasets hit constantly. The pair is a Galois
//! connection between the powerset lattices; [`polarity_of`] hands it
//! back as explicit subset-to-subset functions, materializing the full
//! table form when the carriers are small enough.

use crate::bits;
use crate::galois::GaloisConnection;
use crate::poset::{self, Poset, PosetError};
use crate::report::Side;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContextError {
    #[error("{which} carrier has {got} elements, limit is 64")]
    CarrierTooLarge { which: &'static str, got: usize },
    #[error("{which} has {got} labels for {expected} elements")]
    LabelCount {
        which: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("duplicate {which} label {label:?}")]
    DuplicateLabel { which: &'static str, label: String },
    #[error("incidence pair ({g}, {m}) out of range")]
    PairOutOfRange { g: usize, m: usize },
    #[error("row {row} uses attribute bits beyond the carrier")]
    RowWidth { row: usize },
    #[error("line {line}: expected header 'B'")]
    BadMagic { line: usize },
    #[error("line {line}: expected a blank separator line")]
    ExpectedBlank { line: usize },
    #[error("line {line}: expected a count, found {text:?}")]
    BadCount { line: usize, text: String },
    #[error("line {line}: file ends early")]
    UnexpectedEnd { line: usize },
    #[error("line {line}: row has {got} cells, expected {expected}")]
    BadRow {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: illegal cell {ch:?} (rows use only 'X' and '.')")]
    IllegalChar { line: usize, ch: char },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
    #[error("side {side} poset of size {size} is not a powerset lattice")]
    NotPowersetShaped { side: Side, size: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    rows: Vec<u64>,
    m_count: usize,
    g_labels: Vec<String>,
    m_labels: Vec<String>,
}

fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn check_unique(which: &'static str, labels: &[String]) -> Result<(), ContextError> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(ContextError::DuplicateLabel {
                which,
                label: l.clone(),
            });
        }
    }
    Ok(())
}

impl FormalContext {
    /// Builds a context from per-object attribute masks. Carriers are
    /// capped at 64 so subsets fit in one word.
    pub fn new(
        rows: Vec<u64>,
        m_count: usize,
        g_labels: Option<Vec<String>>,
        m_labels: Option<Vec<String>>,
    ) -> Result<Self, ContextError> {
        let g_count = rows.len();
        if g_count > 64 {
            return Err(ContextError::CarrierTooLarge {
                which: "object",
                got: g_count,
            });
        }
        if m_count > 64 {
            return Err(ContextError::CarrierTooLarge {
                which: "attribute",
                got: m_count,
            });
        }
        let full = bits::full(m_count);
        for (row, &mask) in rows.iter().enumerate() {
            if mask & !full != 0 {
                return Err(ContextError::RowWidth { row });
            }
        }
        let g_labels = g_labels.unwrap_or_else(|| default_labels("g", g_count));
        let m_labels = m_labels.unwrap_or_else(|| default_labels("m", m_count));
        if g_labels.len() != g_count {
            return Err(ContextError::LabelCount {
                which: "object",
                expected: g_count,
                got: g_labels.len(),
            });
        }
        if m_labels.len() != m_count {
            return Err(ContextError::LabelCount {
                which: "attribute",
                expected: m_count,
                got: m_labels.len(),
            });
        }
        check_unique("object", &g_labels)?;
        check_unique("attribute", &m_labels)?;
        Ok(FormalContext {
            rows,
            m_count,
            g_labels,
            m_labels,
        })
    }

    /// Context with the given carrier sizes and incidence pairs, default
    /// labels g1..gN and m1..mN.
    pub fn from_pairs(
        g_count: usize,
        m_count: usize,
        pairs: &[(usize, usize)],
    ) -> Result<Self, ContextError> {
        let mut rows = vec![0u64; g_count];
        for &(g, m) in pairs {
            if g >= g_count || m >= m_count {
                return Err(ContextError::PairOutOfRange { g, m });
            }
            rows[g] |= 1 << m;
        }
        FormalContext::new(rows, m_count, None, None)
    }

    pub fn object_count(&self) -> usize {
        self.rows.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.m_count
    }

    pub fn incident(&self, g: usize, m: usize) -> bool {
        bits::contains(self.rows[g], m)
    }

    /// Attribute mask of one object.
    pub fn row(&self, g: usize) -> u64 {
        self.rows[g]
    }

    pub fn object_labels(&self) -> &[String] {
        &self.g_labels
    }

    pub fn attribute_labels(&self) -> &[String] {
        &self.m_labels
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.g_labels.iter().position(|l| l == label)
    }

    pub fn attribute_index(&self, label: &str) -> Option<usize> {
        self.m_labels.iter().position(|l| l == label)
    }

    /// Attributes shared by every object in the mask; the full attribute
    /// carrier when the mask is empty.
    pub fn common_attributes(&self, objects: u64) -> u64 {
        let mut acc = bits::full(self.m_count);
        for g in bits::iter(objects) {
            acc &= self.rows[g];
        }
        acc
    }

    /// Objects carrying every attribute in the mask; the full object
    /// carrier when the mask is empty.
    pub fn common_objects(&self, attrs: u64) -> u64 {
        let mut acc = 0u64;
        for (g, &row) in self.rows.iter().enumerate() {
            if attrs & !row == 0 {
                acc |= 1 << g;
            }
        }
        acc
    }

    /// Closure on object sets: objects sharing all common attributes.
    pub fn object_closure(&self, objects: u64) -> u64 {
        self.common_objects(self.common_attributes(objects))
    }

    /// Closure on attribute sets.
    pub fn attribute_closure(&self, attrs: u64) -> u64 {
        self.common_attributes(self.common_objects(attrs))
    }

    /// Equal carriers and incidence, labels ignored.
    pub fn same_incidence(&self, other: &FormalContext) -> bool {
        self.m_count == other.m_count && self.rows == other.rows
    }
}

/// The derivation pair of a context, exposed as subset functions. When
/// both carriers fit under the materialization cap, the handle also
/// carries the connection in explicit table form over the powerset
/// lattices.
#[derive(Clone, Debug)]
pub struct PolarityHandle {
    ctx: FormalContext,
    materialized: Option<GaloisConnection>,
}

impl PolarityHandle {
    pub fn context(&self) -> &FormalContext {
        &self.ctx
    }

    pub fn h(&self, objects: u64) -> u64 {
        self.ctx.common_attributes(objects)
    }

    pub fn k(&self, attrs: u64) -> u64 {
        self.ctx.common_objects(attrs)
    }

    pub fn materialized(&self) -> Option<&GaloisConnection> {
        self.materialized.as_ref()
    }
}

pub fn polarity_of(ctx: &FormalContext) -> PolarityHandle {
    polarity_of_with_cap(ctx, poset::materialization_cap())
}

pub fn polarity_of_with_cap(ctx: &FormalContext, cap: usize) -> PolarityHandle {
    let materialized = if ctx.object_count() <= cap && ctx.attribute_count() <= cap {
        Some(materialize_polarity_with_cap(ctx, cap).expect("within cap"))
    } else {
        None
    };
    PolarityHandle {
        ctx: ctx.clone(),
        materialized,
    }
}

/// The derivation pair as an explicit connection between the powerset
/// lattices of the two carriers. Table size is exponential, hence capped.
pub fn materialize_polarity(ctx: &FormalContext) -> Result<GaloisConnection, ContextError> {
    materialize_polarity_with_cap(ctx, poset::materialization_cap())
}

pub fn materialize_polarity_with_cap(
    ctx: &FormalContext,
    cap: usize,
) -> Result<GaloisConnection, ContextError> {
    let pg = poset::powerset_poset_with_cap(ctx.object_count(), cap)?;
    let pm = poset::powerset_poset_with_cap(ctx.attribute_count(), cap)?;
    let f: Vec<usize> = (0..pg.size())
        .map(|a| ctx.common_attributes(a as u64) as usize)
        .collect();
    let g: Vec<usize> = (0..pm.size())
        .map(|b| ctx.common_objects(b as u64) as usize)
        .collect();
    Ok(GaloisConnection::from_tables(pg, pm, f, g).map_err(ContextError::Poset)?)
}

fn powerset_base(p: &Poset, side: Side) -> Result<usize, ContextError> {
    let size = p.size();
    if size == 0 || size & (size - 1) != 0 {
        return Err(ContextError::NotPowersetShaped { side, size });
    }
    let k = size.trailing_zeros() as usize;
    for a in 0..size {
        for b in 0..size {
            if p.leq(a, b) != (a & !b == 0) {
                return Err(ContextError::NotPowersetShaped { side, size });
            }
        }
    }
    Ok(k)
}

/// Recovers the incidence relation behind a connection whose carriers are
/// powerset lattices: object g gets the attribute row f({g}). The shape
/// is verified structurally (exact subset order on 2^k elements), not
/// trusted from any flag. Inverse to [`materialize_polarity`].
pub fn relation_of(gc: &GaloisConnection) -> Result<FormalContext, ContextError> {
    let g_count = powerset_base(gc.p(), Side::P)?;
    let m_count = powerset_base(gc.q(), Side::Q)?;
    let rows: Vec<u64> = (0..g_count).map(|g| gc.f_at(1usize << g) as u64).collect();
    FormalContext::new(rows, m_count, None, None)
}

/// Serializes to the plain-text exchange format: header `B`, a name line,
/// a blank, the two carrier sizes, a blank, object names, attribute
/// names, then one `X`/`.` row per object.
pub fn write_cxt(ctx: &FormalContext) -> String {
    let mut out = String::new();
    out.push_str("B\n");
    out.push('\n');
    out.push('\n');
    out.push_str(&format!("{}\n", ctx.object_count()));
    out.push_str(&format!("{}\n", ctx.attribute_count()));
    out.push('\n');
    for l in &ctx.g_labels {
        out.push_str(l);
        out.push('\n');
    }
    for l in &ctx.m_labels {
        out.push_str(l);
        out.push('\n');
    }
    for &row in &ctx.rows {
        for m in 0..ctx.m_count {
            out.push(if bits::contains(row, m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Parses the exchange format produced by [`write_cxt`]. Errors carry
/// 1-based line numbers. The name line is accepted and discarded.
pub fn parse_cxt(text: &str) -> Result<FormalContext, ContextError> {
    fn take<'a>(lines: &[&'a str], pos: &mut usize) -> Result<&'a str, ContextError> {
        if *pos < lines.len() {
            let l = lines[*pos];
            *pos += 1;
            Ok(l)
        } else {
            Err(ContextError::UnexpectedEnd { line: *pos + 1 })
        }
    }

    let lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    let mut pos = 0usize;

    if take(&lines, &mut pos)?.trim() != "B" {
        return Err(ContextError::BadMagic { line: 1 });
    }
    let _name = take(&lines, &mut pos)?;
    if !take(&lines, &mut pos)?.trim().is_empty() {
        return Err(ContextError::ExpectedBlank { line: 3 });
    }
    let g_line = take(&lines, &mut pos)?;
    let g_count: usize = g_line.trim().parse().map_err(|_| ContextError::BadCount {
        line: 4,
        text: g_line.to_string(),
    })?;
    let m_line = take(&lines, &mut pos)?;
    let m_count: usize = m_line.trim().parse().map_err(|_| ContextError::BadCount {
        line: 5,
        text: m_line.to_string(),
    })?;
    if !take(&lines, &mut pos)?.trim().is_empty() {
        return Err(ContextError::ExpectedBlank { line: 6 });
    }
    if g_count > 64 {
        return Err(ContextError::CarrierTooLarge {
            which: "object",
            got: g_count,
        });
    }
    if m_count > 64 {
        return Err(ContextError::CarrierTooLarge {
            which: "attribute",
            got: m_count,
        });
    }
    let mut g_labels = Vec::with_capacity(g_count);
    for _ in 0..g_count {
        g_labels.push(take(&lines, &mut pos)?.to_string());
    }
    let mut m_labels = Vec::with_capacity(m_count);
    for _ in 0..m_count {
        m_labels.push(take(&lines, &mut pos)?.to_string());
    }
    let mut rows = Vec::with_capacity(g_count);
    for _ in 0..g_count {
        let line_no = pos + 1;
        let cells: Vec<char> = take(&lines, &mut pos)?.trim_end().chars().collect();
        if cells.len() != m_count {
            return Err(ContextError::BadRow {
                line: line_no,
                expected: m_count,
                got: cells.len(),
            });
        }
        let mut mask = 0u64;
        for (m, &ch) in cells.iter().enumerate() {
            match ch {
                'X' => mask |= 1 << m,
                '.' => {}
                other => {
                    return Err(ContextError::IllegalChar {
                        line: line_no,
                        ch: other,
                    })
                }
            }
        }
        rows.push(mask);
    }
    while pos < lines.len() {
        if !lines[pos].trim().is_empty() {
            return Err(ContextError::TrailingContent { line: pos + 1 });
        }
        pos += 1;
    }
    FormalContext::new(rows, m_count, Some(g_labels), Some(m_labels))
}
