//! Order-reversing Galois connections between finite posets.
//!
//! A connection is a pair of antitone maps f: P -> Q and g: Q -> P with
//! p <= g(f(p)) for every p and q <= f(g(q)) for every q. Equivalently
//! (and [`validate_gc_adjoint`] checks exactly this), p <= g(q) iff
//! q <= f(p) for all pairs; the two validators accept the same quadruples.
//!
//! Terminology used throughout the crate: a *node* is a fixed point of the
//! relevant round trip (p with g(f(p)) = p), the *leaves* on a side are the
//! fibers of the outgoing map, and each leaf contains exactly one node,
//! which is its largest element. The node sets on the two sides are
//! anti-isomorphic; [`leaf_antiiso`] realizes that bijection leafwise.

use crate::poset::{OrderMap, Poset, PosetError};
use crate::report::{Side, ValidationReport, Violation};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisConnection {
    p: Poset,
    q: Poset,
    f: OrderMap,
    g: OrderMap,
}

impl GaloisConnection {
    /// Bundles the quadruple after checking shapes only: f maps P into Q,
    /// g maps Q into P. Whether the pair is actually a Galois connection
    /// is the job of [`validate_gc`].
    pub fn new(p: Poset, q: Poset, f: OrderMap, g: OrderMap) -> Result<Self, PosetError> {
        if f.dom_size() != p.size() {
            return Err(PosetError::MapDomain {
                expected: p.size(),
                got: f.dom_size(),
            });
        }
        if g.dom_size() != q.size() {
            return Err(PosetError::MapDomain {
                expected: q.size(),
                got: g.dom_size(),
            });
        }
        if f.cod_size() != q.size() {
            return Err(PosetError::MapDomain {
                expected: q.size(),
                got: f.cod_size(),
            });
        }
        if g.cod_size() != p.size() {
            return Err(PosetError::MapDomain {
                expected: p.size(),
                got: g.cod_size(),
            });
        }
        Ok(GaloisConnection { p, q, f, g })
    }

    /// Convenience constructor from raw map tables.
    pub fn from_tables(
        p: Poset,
        q: Poset,
        f: Vec<usize>,
        g: Vec<usize>,
    ) -> Result<Self, PosetError> {
        let f = OrderMap::new(f, q.size())?;
        let g = OrderMap::new(g, p.size())?;
        GaloisConnection::new(p, q, f, g)
    }

    pub fn p(&self) -> &Poset {
        &self.p
    }

    pub fn q(&self) -> &Poset {
        &self.q
    }

    pub fn f(&self) -> &OrderMap {
        &self.f
    }

    pub fn g(&self) -> &OrderMap {
        &self.g
    }

    pub fn f_at(&self, p: usize) -> usize {
        self.f.apply(p)
    }

    pub fn g_at(&self, q: usize) -> usize {
        self.g.apply(q)
    }

    /// Carrier poset of one side.
    pub fn side(&self, side: Side) -> &Poset {
        match side {
            Side::P => &self.p,
            Side::Q => &self.q,
        }
    }

    /// Round trip on one side: g(f(p)) for side P, f(g(q)) for side Q.
    pub fn closure(&self, side: Side, x: usize) -> usize {
        match side {
            Side::P => self.g.apply(self.f.apply(x)),
            Side::Q => self.f.apply(self.g.apply(x)),
        }
    }

    /// Outgoing map value on one side: f(p) for side P, g(q) for side Q.
    pub fn out(&self, side: Side, x: usize) -> usize {
        match side {
            Side::P => self.f.apply(x),
            Side::Q => self.g.apply(x),
        }
    }
}

/// Checks both antitone laws and both round-trip laws, collecting every
/// violated instance. Assumes the carriers are valid posets.
pub fn validate_gc(gc: &GaloisConnection) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (p, q) = (&gc.p, &gc.q);
    for lo in 0..p.size() {
        for hi in 0..p.size() {
            if p.leq(lo, hi) && !q.leq(gc.f_at(hi), gc.f_at(lo)) {
                report.push(Violation::NotAntitone {
                    side: Side::P,
                    lo,
                    hi,
                });
            }
        }
    }
    for lo in 0..q.size() {
        for hi in 0..q.size() {
            if q.leq(lo, hi) && !p.leq(gc.g_at(hi), gc.g_at(lo)) {
                report.push(Violation::NotAntitone {
                    side: Side::Q,
                    lo,
                    hi,
                });
            }
        }
    }
    for x in 0..p.size() {
        if !p.leq(x, gc.closure(Side::P, x)) {
            report.push(Violation::NotInflationary { side: Side::P, x });
        }
    }
    for x in 0..q.size() {
        if !q.leq(x, gc.closure(Side::Q, x)) {
            report.push(Violation::NotInflationary { side: Side::Q, x });
        }
    }
    report
}

/// The one-line characterization: p <= g(q) iff q <= f(p), checked over
/// all pairs. Antitonicity is a consequence, so nothing else is tested;
/// this accepts exactly the quadruples [`validate_gc`] accepts.
pub fn validate_gc_adjoint(gc: &GaloisConnection) -> ValidationReport {
    let mut report = ValidationReport::default();
    for p in 0..gc.p.size() {
        for q in 0..gc.q.size() {
            let left = gc.p.leq(p, gc.g_at(q));
            let right = gc.q.leq(q, gc.f_at(p));
            if left != right {
                report.push(Violation::AdjointMismatch { p, q });
            }
        }
    }
    report
}

/// Fixed points of the round trip on one side, ascending. These coincide
/// with the image of the incoming map.
pub fn nodes(gc: &GaloisConnection, side: Side) -> Vec<usize> {
    let n = gc.side(side).size();
    (0..n).filter(|&x| gc.closure(side, x) == x).collect()
}

/// The fibers of the outgoing map on one side, each with its node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafDecomposition {
    pub side: Side,
    /// Partition of the carrier; leaves sorted by node index, members
    /// ascending within each leaf.
    pub leaves: Vec<Vec<usize>>,
    /// The unique node of each leaf, parallel to `leaves`.
    pub nodes: Vec<usize>,
    order: Vec<bool>,
}

impl LeafDecomposition {
    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    /// Index of the leaf containing the element.
    pub fn leaf_of(&self, x: usize) -> usize {
        self.leaves
            .iter()
            .position(|leaf| leaf.contains(&x))
            .expect("element outside the partition")
    }

    /// Leaf order: some member of leaf i sits below some member of leaf j.
    /// This coincides with the carrier order restricted to the nodes.
    pub fn leaf_leq(&self, i: usize, j: usize) -> bool {
        self.order[i * self.leaves.len() + j]
    }
}

/// Partition of one side into the fibers of its outgoing map.
pub fn leaves(gc: &GaloisConnection, side: Side) -> LeafDecomposition {
    let n = gc.side(side).size();
    let carrier = gc.side(side);
    // Group by outgoing value; the fiber's node is the round trip of any
    // member, which lands on the member fixed by the round trip.
    let mut by_value: Vec<(usize, Vec<usize>)> = Vec::new();
    for x in 0..n {
        let v = gc.out(side, x);
        match by_value.iter_mut().find(|(val, _)| *val == v) {
            Some((_, members)) => members.push(x),
            None => by_value.push((v, vec![x])),
        }
    }
    let mut pairs: Vec<(usize, Vec<usize>)> = by_value
        .into_iter()
        .map(|(v, members)| {
            let node = match side {
                Side::P => gc.g_at(v),
                Side::Q => gc.f_at(v),
            };
            (node, members)
        })
        .collect();
    pairs.sort_by_key(|(node, _)| *node);
    let k = pairs.len();
    let mut order = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            order[i * k + j] = pairs[i]
                .1
                .iter()
                .any(|&x| pairs[j].1.iter().any(|&y| carrier.leq(x, y)));
        }
    }
    LeafDecomposition {
        side,
        nodes: pairs.iter().map(|(node, _)| *node).collect(),
        leaves: pairs.into_iter().map(|(_, members)| members).collect(),
        order,
    }
}

/// The leafwise anti-isomorphism between the two sides: each P-leaf is
/// sent to the leaf of the f-image of its node, and back.
#[derive(Clone, Debug)]
pub struct LeafAntiIso {
    pub p_leaves: LeafDecomposition,
    pub q_leaves: LeafDecomposition,
    /// P-leaf index to Q-leaf index.
    pub forward: Vec<usize>,
    /// Q-leaf index to P-leaf index; inverse of `forward`.
    pub backward: Vec<usize>,
}

pub fn leaf_antiiso(gc: &GaloisConnection) -> LeafAntiIso {
    let p_leaves = leaves(gc, Side::P);
    let q_leaves = leaves(gc, Side::Q);
    let forward: Vec<usize> = p_leaves
        .nodes
        .iter()
        .map(|&n| q_leaves.leaf_of(gc.f_at(n)))
        .collect();
    let backward: Vec<usize> = q_leaves
        .nodes
        .iter()
        .map(|&n| p_leaves.leaf_of(gc.g_at(n)))
        .collect();
    LeafAntiIso {
        p_leaves,
        q_leaves,
        forward,
        backward,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjointError {
    /// Some codomain elements have no candidate image: the defining join
    /// does not exist. No adjoint extends this f.
    #[error("adjoint joins missing at codomain elements {qs:?}")]
    MissingJoins { qs: Vec<usize> },
    /// Every join exists but the resulting pair is not a connection.
    #[error("derived pair fails validation")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Shape(#[from] PosetError),
}

/// The unique adjoint candidate of f, via g(q) = join of {p : q <= f(p)}.
/// Succeeds iff every join exists and the assembled pair validates; a
/// connection's g is determined by its f, so success is unique.
pub fn derive_adjoint(
    p: &Poset,
    q: &Poset,
    f: &OrderMap,
) -> Result<GaloisConnection, AdjointError> {
    if f.dom_size() != p.size() || f.cod_size() != q.size() {
        return Err(AdjointError::Shape(PosetError::MapDomain {
            expected: p.size(),
            got: f.dom_size(),
        }));
    }
    let mut table = Vec::with_capacity(q.size());
    let mut missing = Vec::new();
    for qi in 0..q.size() {
        let below: Vec<usize> = (0..p.size()).filter(|&pi| q.leq(qi, f.apply(pi))).collect();
        match p.join(&below) {
            Some(j) => table.push(j),
            None => missing.push(qi),
        }
    }
    if !missing.is_empty() {
        return Err(AdjointError::MissingJoins { qs: missing });
    }
    let g = OrderMap::new(table, p.size()).map_err(AdjointError::Shape)?;
    let gc = GaloisConnection::new(p.clone(), q.clone(), f.clone(), g)
        .map_err(AdjointError::Shape)?;
    let report = validate_gc(&gc);
    if report.is_valid() {
        Ok(gc)
    } else {
        Err(AdjointError::Invalid(report))
    }
}

/// Every element on both sides is a node.
pub fn is_perfect(gc: &GaloisConnection) -> bool {
    nodes(gc, Side::P).len() == gc.p.size() && nodes(gc, Side::Q).len() == gc.q.size()
}

/// fgf = f and gfg = g pointwise. Holds for every valid connection;
/// exposed so sweeps can test it against deliberately broken pairs.
pub fn idempotence_check(gc: &GaloisConnection) -> bool {
    let fgf = (0..gc.p.size()).all(|x| gc.f_at(gc.g_at(gc.f_at(x))) == gc.f_at(x));
    let gfg = (0..gc.q.size()).all(|x| gc.g_at(gc.f_at(gc.g_at(x))) == gc.g_at(x));
    fgf && gfg
}
