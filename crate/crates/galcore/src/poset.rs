//! Finite partial orders as explicit relation tables.
//!
//! Elements are dense indices `0..size`; the order is a row-major
//! `size * size` boolean table with `leq[x * size + y]` meaning x <= y.
//! Values are immutable once built, so everything here is a pure function
//! of its inputs. The degenerate empty poset is legal everywhere.

use crate::bits;
use crate::report::{ValidationReport, Violation};
use thiserror::Error;

/// Default ceiling for materialized powerset orders (2^12 = 4096 elements).
pub const DEFAULT_CAP: usize = 12;

/// Materialization ceiling: `GALCORE_CAP` from the environment, else 12.
pub fn materialization_cap() -> usize {
    std::env::var("GALCORE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("order table has {got} entries, expected {expected}")]
    LeqSize { expected: usize, got: usize },
    #[error("{got} labels for {expected} elements")]
    LabelCount { expected: usize, got: usize },
    #[error("element {index} out of range for size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("map entry {value} at position {index} exceeds codomain size {cod_size}")]
    MapRange {
        index: usize,
        value: usize,
        cod_size: usize,
    },
    #[error("map table has {got} entries, expected {expected}")]
    MapDomain { expected: usize, got: usize },
    #[error("powerset base {requested} exceeds materialization cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Wraps a relation table without checking the order axioms; shape
    /// (table length, label count) is checked. Run [`validate_poset`] to
    /// test the axioms themselves.
    pub fn new(
        size: usize,
        leq: Vec<bool>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, PosetError> {
        if leq.len() != size * size {
            return Err(PosetError::LeqSize {
                expected: size * size,
                got: leq.len(),
            });
        }
        if let Some(ls) = &labels {
            if ls.len() != size {
                return Err(PosetError::LabelCount {
                    expected: size,
                    got: ls.len(),
                });
            }
        }
        Ok(Poset { size, leq, labels })
    }

    /// Chain 1 < 2 < ... < n, labeled by those numerals.
    pub fn chain(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in x..n {
                leq[x * n + y] = true;
            }
        }
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Poset {
            size: n,
            leq,
            labels: Some(labels),
        }
    }

    /// n pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        Poset {
            size: n,
            leq,
            labels: None,
        }
    }

    /// The four-element lattice bot < a, b < top with a, b incomparable.
    pub fn diamond() -> Self {
        let names = ["bot", "a", "b", "top"];
        let mut leq = vec![false; 16];
        for x in 0..4 {
            leq[x * 4 + x] = true;
            leq[x * 4 + 3] = true;
            leq[0 * 4 + x] = true;
        }
        Poset {
            size: 4,
            leq,
            labels: Some(names.iter().map(|s| s.to_string()).collect()),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        assert!(x < self.size && y < self.size, "element out of range");
        self.leq[x * self.size + y]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, else its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        }
    }

    /// Index of the element carrying this label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(ls) => ls.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&i: &usize| i < self.size),
        }
    }

    /// Same carrier size and identical relation table; labels are ignored.
    pub fn same_order(&self, other: &Poset) -> bool {
        self.size == other.size && self.leq == other.leq
    }

    /// Elements below x, ascending. Includes x itself.
    pub fn downset(&self, x: usize) -> Vec<usize> {
        assert!(x < self.size, "element out of range");
        (0..self.size).filter(|&y| self.leq(y, x)).collect()
    }

    /// Downset as a bitmask; requires a carrier of at most 64 elements.
    pub fn downset_mask(&self, x: usize) -> u64 {
        assert!(self.size <= 64, "carrier too large for bitmask downsets");
        bits::from_elems(self.downset(x))
    }

    /// Least upper bound of the listed elements, if one exists.
    /// The empty join is the bottom element when the poset has one.
    pub fn join(&self, elems: &[usize]) -> Option<usize> {
        let uppers: Vec<usize> = (0..self.size)
            .filter(|&u| elems.iter().all(|&x| self.leq(x, u)))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&u0| uppers.iter().all(|&u| self.leq(u0, u)))
    }

    /// Greatest lower bound; the empty meet is the top element if present.
    pub fn meet(&self, elems: &[usize]) -> Option<usize> {
        let lowers: Vec<usize> = (0..self.size)
            .filter(|&l| elems.iter().all(|&x| self.leq(l, x)))
            .collect();
        lowers
            .iter()
            .copied()
            .find(|&l0| lowers.iter().all(|&l| self.leq(l, l0)))
    }

    /// (top, bottom), each absent when no such element exists.
    pub fn top_bottom(&self) -> (Option<usize>, Option<usize>) {
        let top = (0..self.size).find(|&t| (0..self.size).all(|x| self.leq(x, t)));
        let bottom = (0..self.size).find(|&b| (0..self.size).all(|x| self.leq(b, x)));
        (top, bottom)
    }

    /// Restriction of the order to the listed elements, in the given order.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let k = elems.len();
        let mut leq = vec![false; k * k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                leq[i * k + j] = self.leq(x, y);
            }
        }
        let labels = elems.iter().map(|&x| self.label(x)).collect();
        Poset {
            size: k,
            leq,
            labels: Some(labels),
        }
    }

    /// Exhaustive completeness test: every subset of elements has a join
    /// and a meet. Cost is 2^size scans, so keep carriers small.
    pub fn is_complete_lattice(&self) -> bool {
        assert!(self.size < 24, "completeness check is exhaustive");
        (0u64..(1 << self.size)).all(|mask| {
            let elems: Vec<usize> = (0..self.size).filter(|&i| mask >> i & 1 == 1).collect();
            self.join(&elems).is_some() && self.meet(&elems).is_some()
        })
    }
}

/// The lattice of all subsets of an n-element carrier, ordered by
/// inclusion. Element index i is the subset with mask i; labels render
/// the masks as `{0,2}`-style strings. Capped because the table is
/// quadratic in 2^n; the cap honors `GALCORE_CAP`.
pub fn powerset_poset(n: usize) -> Result<Poset, PosetError> {
    powerset_poset_with_cap(n, materialization_cap())
}

pub fn powerset_poset_with_cap(n: usize, cap: usize) -> Result<Poset, PosetError> {
    if n > cap {
        return Err(PosetError::CapExceeded { requested: n, cap });
    }
    let size = 1usize << n;
    let mut leq = vec![false; size * size];
    for a in 0..size {
        for b in 0..size {
            leq[a * size + b] = a & !b == 0;
        }
    }
    let labels = (0..size).map(|a| bits::format_indices(a as u64)).collect();
    Ok(Poset {
        size,
        leq,
        labels: Some(labels),
    })
}

/// Checks reflexivity, antisymmetry, and transitivity, collecting every
/// failing instance. Transitivity is the O(n^3) literal scan.
pub fn validate_poset(p: &Poset) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = p.size;
    for x in 0..n {
        if !p.leq(x, x) {
            report.push(Violation::Irreflexive { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && p.leq(x, y) && p.leq(y, x) {
                if x < y {
                    report.push(Violation::Antisymmetry { x, y });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !p.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if p.leq(y, z) && !p.leq(x, z) {
                    report.push(Violation::Transitivity { x, y, z });
                }
            }
        }
    }
    report
}

/// A total function between two carriers, as a dense table.
/// Monotonicity is not built in; it is a property to test against a
/// pair of orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderMap {
    table: Vec<usize>,
    cod_size: usize,
}

impl OrderMap {
    pub fn new(table: Vec<usize>, cod_size: usize) -> Result<Self, PosetError> {
        for (index, &value) in table.iter().enumerate() {
            if value >= cod_size {
                return Err(PosetError::MapRange {
                    index,
                    value,
                    cod_size,
                });
            }
        }
        Ok(OrderMap { table, cod_size })
    }

    pub fn identity(n: usize) -> Self {
        OrderMap {
            table: (0..n).collect(),
            cod_size: n,
        }
    }

    pub fn dom_size(&self) -> usize {
        self.table.len()
    }

    pub fn cod_size(&self) -> usize {
        self.cod_size
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// x <= y in the domain implies map(y) <= map(x) in the codomain.
    pub fn is_antitone(&self, dom: &Poset, cod: &Poset) -> bool {
        self.check_antitone(dom, cod).is_none()
    }

    /// First order-reversal failure as a witness pair (lo, hi).
    pub fn check_antitone(&self, dom: &Poset, cod: &Poset) -> Option<(usize, usize)> {
        assert_eq!(self.dom_size(), dom.size(), "map/domain size mismatch");
        assert_eq!(self.cod_size, cod.size(), "map/codomain size mismatch");
        for lo in 0..dom.size() {
            for hi in 0..dom.size() {
                if dom.leq(lo, hi) && !cod.leq(self.apply(hi), self.apply(lo)) {
                    return Some((lo, hi));
                }
            }
        }
        None
    }

    /// x <= y implies map(x) <= map(y).
    pub fn is_monotone(&self, dom: &Poset, cod: &Poset) -> bool {
        assert_eq!(self.dom_size(), dom.size(), "map/domain size mismatch");
        assert_eq!(self.cod_size, cod.size(), "map/codomain size mismatch");
        for x in 0..dom.size() {
            for y in 0..dom.size() {
                if dom.leq(x, y) && !cod.leq(self.apply(x), self.apply(y)) {
                    return false;
                }
            }
        }
        true
    }
}

/// True iff the map table is antitone between the two orders.
/// Free-function form of [`OrderMap::is_antitone`].
pub fn is_antitone(m: &OrderMap, dom: &Poset, cod: &Poset) -> bool {
    m.is_antitone(dom, cod)
}
