//! Orderings on the set of Galois connections between two fixed posets.
//!
//! Several comparisons coexist and the interesting theorems say which
//! ones coincide. [`le_pointwise`] compares adjoints value by value and
//! agrees computed through f or through g; on polarities it matches
//! plain inclusion of incidence relations ([`le_relation`]). The coarser
//! closure comparisons [`preceq_p`] and [`preceq_q`] each admit three
//! equivalent readings (pointwise closure domination, node-set
//! inclusion, leaf-partition refinement); their conjunction
//! [`preceq_pq`] is a genuine pre-order but not antisymmetric, and it
//! coincides with the node-subset test [`sq_nodes`]. Where the checks
//! are cheap the equivalences are re-verified on every call in debug
//! builds.
//!
//! [`fiber_leq`] compares connections over the same carrier sets with
//! possibly different orders: it asks whether the identity pair is a
//! connection morphism, which pins both map tables. [`extremal_gcs`]
//! builds the greatest and least connections when tops and bottoms
//! permit, and [`enumerate_gcs`] lists every connection between small
//! posets in a canonical order.

use crate::galois::{self, GaloisConnection};
use crate::oracle;
use crate::poset::{OrderMap, Poset};
use crate::report::Side;
use crate::FormalContext;
use thiserror::Error;

/// Hard bound on |P| * |Q| for exhaustive connection enumeration.
pub const ENUMERATION_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("carrier size mismatch on side {side}: {left} vs {right}")]
    CarrierMismatch { side: Side, left: usize, right: usize },
    #[error("orders differ on side {side}")]
    OrderMismatch { side: Side },
    #[error("context dimensions differ: {left_g}x{left_m} vs {right_g}x{right_m}")]
    ContextMismatch {
        left_g: usize,
        left_m: usize,
        right_g: usize,
        right_m: usize,
    },
    #[error("enumeration needs |P| * |Q| <= {cap}, got {got}")]
    EnumerationCap { got: usize, cap: usize },
}

/// Where a comparison failed: a carrier element on one side, or an
/// incidence pair of a context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Element { side: Side, index: usize },
    Pair { object: usize, attribute: usize },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Element { side, index } => write!(f, "element {index} on side {side}"),
            Witness::Pair { object, attribute } => {
                write!(f, "incidence ({object}, {attribute})")
            }
        }
    }
}

/// Outcome of one comparison: whether it holds, a counterexample when it
/// does not, and which characterization was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub via: &'static str,
}

impl OrderVerdict {
    pub fn from_witness(witness: Option<Witness>, via: &'static str) -> Self {
        OrderVerdict {
            holds: witness.is_none(),
            witness,
            via,
        }
    }
}

impl std::fmt::Display for OrderVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.witness {
            None => write!(f, "holds (via {})", self.via),
            Some(w) => write!(f, "fails at {} (via {})", w, self.via),
        }
    }
}

fn require_same_orders(a: &GaloisConnection, b: &GaloisConnection) -> Result<(), OrderingError> {
    for side in [Side::P, Side::Q] {
        let (x, y) = (a.side(side), b.side(side));
        if x.size() != y.size() {
            return Err(OrderingError::CarrierMismatch {
                side,
                left: x.size(),
                right: y.size(),
            });
        }
        if !x.same_order(y) {
            return Err(OrderingError::OrderMismatch { side });
        }
    }
    Ok(())
}

/// Pointwise comparison of the f maps in Q's order. Equivalently the
/// pointwise comparison of the g maps in P's order; debug builds verify
/// the two computations agree.
pub fn le_pointwise(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, OrderingError> {
    require_same_orders(a, b)?;
    let witness = (0..a.p().size())
        .find(|&p| !a.q().leq(a.f_at(p), b.f_at(p)))
        .map(|index| Witness::Element { side: Side::P, index });
    let verdict = OrderVerdict::from_witness(witness, "pointwise-f");
    debug_assert_eq!(
        verdict.holds,
        (0..a.q().size()).all(|q| a.p().leq(a.g_at(q), b.g_at(q))),
        "f-side and g-side pointwise comparisons disagree"
    );
    Ok(verdict)
}

/// Inclusion of incidence relations between contexts on the same
/// carriers. On small contexts debug builds confirm this matches the
/// pointwise comparison of the two derivation connections.
pub fn le_relation(
    a: &FormalContext,
    b: &FormalContext,
) -> Result<OrderVerdict, OrderingError> {
    if a.object_count() != b.object_count() || a.attribute_count() != b.attribute_count() {
        return Err(OrderingError::ContextMismatch {
            left_g: a.object_count(),
            left_m: a.attribute_count(),
            right_g: b.object_count(),
            right_m: b.attribute_count(),
        });
    }
    let mut witness = None;
    'rows: for g in 0..a.object_count() {
        let extra = a.row(g) & !b.row(g);
        for m in crate::bits::iter(extra) {
            witness = Some(Witness::Pair { object: g, attribute: m });
            break 'rows;
        }
    }
    let verdict = OrderVerdict::from_witness(witness, "relation-inclusion");
    #[cfg(debug_assertions)]
    if a.object_count() <= 4 && a.attribute_count() <= 4 {
        let pa = crate::context::materialize_polarity(a).expect("within cap");
        let pb = crate::context::materialize_polarity(b).expect("within cap");
        let pointwise = le_pointwise(&pa, &pb).expect("shared powerset carriers");
        debug_assert_eq!(
            verdict.holds, pointwise.holds,
            "relation inclusion and polarity comparison disagree"
        );
    }
    Ok(verdict)
}

/// The greatest and least connections between two posets, when they
/// exist. The greatest sends everything to the opposite top; the least
/// sends everything except the bottom to the opposite bottom, and the
/// bottom to the opposite top. Each is absent when the tops (and for
/// the least, bottoms) it needs are missing.
#[derive(Debug, Clone)]
pub struct ExtremalGcs {
    pub greatest: Option<GaloisConnection>,
    pub least: Option<GaloisConnection>,
}

pub fn extremal_gcs(p: &Poset, q: &Poset) -> ExtremalGcs {
    let (p_top, p_bot) = p.top_bottom();
    let (q_top, q_bot) = q.top_bottom();
    let greatest = match (p_top, q_top) {
        (Some(pt), Some(qt)) => {
            let f = OrderMap::new(vec![qt; p.size()], q.size()).expect("in range");
            let g = OrderMap::new(vec![pt; q.size()], p.size()).expect("in range");
            let gc = GaloisConnection::new(p.clone(), q.clone(), f, g).expect("shapes");
            debug_assert!(galois::validate_gc(&gc).is_valid());
            Some(gc)
        }
        _ => None,
    };
    let least = match (p_top, p_bot, q_top, q_bot) {
        (Some(pt), Some(pb), Some(qt), Some(qb)) => {
            let f_table: Vec<usize> = (0..p.size())
                .map(|x| if x == pb { qt } else { qb })
                .collect();
            let g_table: Vec<usize> = (0..q.size())
                .map(|y| if y == qb { pt } else { pb })
                .collect();
            let f = OrderMap::new(f_table, q.size()).expect("in range");
            let g = OrderMap::new(g_table, p.size()).expect("in range");
            let gc = GaloisConnection::new(p.clone(), q.clone(), f, g).expect("shapes");
            debug_assert!(galois::validate_gc(&gc).is_valid());
            Some(gc)
        }
        _ => None,
    };
    ExtremalGcs { greatest, least }
}

fn node_subset(a: &GaloisConnection, b: &GaloisConnection, side: Side) -> Option<usize> {
    let nb = galois::nodes(b, side);
    galois::nodes(a, side)
        .into_iter()
        .find(|x| !nb.contains(x))
}

#[cfg(debug_assertions)]
fn partition_refines(fine: &GaloisConnection, coarse: &GaloisConnection, side: Side) -> bool {
    let lf = galois::leaves(fine, side);
    let lc = galois::leaves(coarse, side);
    let n = fine.side(side).size();
    (0..n).all(|x| {
        (0..n).all(|y| lf.leaf_of(x) != lf.leaf_of(y) || lc.leaf_of(x) == lc.leaf_of(y))
    })
}

/// The closure comparison on the P side: b's round trip sits below a's
/// at every point. Equivalent to a's P-nodes being a subset of b's, and
/// to b's leaf partition of P refining a's; debug builds verify all
/// three readings agree.
pub fn preceq_p(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, OrderingError> {
    require_same_orders(a, b)?;
    let witness = (0..a.p().size())
        .find(|&p| !a.p().leq(b.closure(Side::P, p), a.closure(Side::P, p)))
        .map(|index| Witness::Element { side: Side::P, index });
    let verdict = OrderVerdict::from_witness(witness, "closure-domination-p");
    debug_assert_eq!(verdict.holds, node_subset(a, b, Side::P).is_none());
    #[cfg(debug_assertions)]
    debug_assert_eq!(verdict.holds, partition_refines(b, a, Side::P));
    Ok(verdict)
}

/// The closure comparison on the Q side, dual to [`preceq_p`].
pub fn preceq_q(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, OrderingError> {
    require_same_orders(a, b)?;
    let witness = (0..a.q().size())
        .find(|&q| !a.q().leq(b.closure(Side::Q, q), a.closure(Side::Q, q)))
        .map(|index| Witness::Element { side: Side::Q, index });
    let verdict = OrderVerdict::from_witness(witness, "closure-domination-q");
    debug_assert_eq!(verdict.holds, node_subset(a, b, Side::Q).is_none());
    #[cfg(debug_assertions)]
    debug_assert_eq!(verdict.holds, partition_refines(b, a, Side::Q));
    Ok(verdict)
}

/// Conjunction of the two closure comparisons. A pre-order: reflexive
/// and transitive but not antisymmetric.
pub fn preceq_pq(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, OrderingError> {
    let p = preceq_p(a, b)?;
    if !p.holds {
        return Ok(OrderVerdict { via: "closure-domination-both", ..p });
    }
    let q = preceq_q(a, b)?;
    Ok(OrderVerdict { via: "closure-domination-both", ..q })
}

/// Both directions of [`preceq_pq`]: the equivalence classes of the
/// pre-order.
pub fn preceq_pq_equiv(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<bool, OrderingError> {
    Ok(preceq_pq(a, b)?.holds && preceq_pq(b, a)?.holds)
}

/// Node-set inclusion on both sides. Coincides with [`preceq_pq`];
/// debug builds verify that on every call.
pub fn sq_nodes(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, OrderingError> {
    require_same_orders(a, b)?;
    let witness = node_subset(a, b, Side::P)
        .map(|index| Witness::Element { side: Side::P, index })
        .or_else(|| {
            node_subset(a, b, Side::Q)
                .map(|index| Witness::Element { side: Side::Q, index })
        });
    let verdict = OrderVerdict::from_witness(witness, "node-subsets");
    debug_assert_eq!(verdict.holds, preceq_pq(a, b)?.holds);
    Ok(verdict)
}

/// Comparison across different orders on the same carrier sets: does
/// the identity pair carry one connection to the other? The commuting
/// squares force the map tables to agree, so this is deliberately the
/// strictest comparison here; it implies node-set inclusion whenever
/// the orders also agree.
pub fn fiber_leq(
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, OrderingError> {
    for side in [Side::P, Side::Q] {
        if a.side(side).size() != b.side(side).size() {
            return Err(OrderingError::CarrierMismatch {
                side,
                left: a.side(side).size(),
                right: b.side(side).size(),
            });
        }
    }
    let h = OrderMap::identity(a.p().size());
    let k = OrderMap::identity(a.q().size());
    let inner = crate::category::is_gal_morphism(a, b, &h, &k)
        .expect("identity tables always fit the carriers");
    Ok(OrderVerdict { via: "identity-morphism", ..inner })
}

/// True when the round trip on P is the identity. A sufficient (not
/// necessary) condition for maximality in the closure pre-order.
pub fn closure_is_identity_p(gc: &GaloisConnection) -> bool {
    (0..gc.p().size()).all(|p| gc.closure(Side::P, p) == p)
}

/// True when the round trip on Q is the identity.
pub fn closure_is_identity_q(gc: &GaloisConnection) -> bool {
    (0..gc.q().size()).all(|q| gc.closure(Side::Q, q) == q)
}

/// Every Galois connection between the two posets, in lexicographic
/// order of f tables. g is reconstructed from each antitone candidate f
/// and candidates without a valid adjoint are dropped.
pub fn enumerate_gcs(p: &Poset, q: &Poset) -> Result<Vec<GaloisConnection>, OrderingError> {
    let cells = p.size() * q.size();
    if cells > ENUMERATION_CAP {
        return Err(OrderingError::EnumerationCap {
            got: cells,
            cap: ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    for table in oracle::all_maps(p.size(), q.size()) {
        let f = OrderMap::new(table, q.size()).expect("values in range");
        if !f.is_antitone(p, q) {
            continue;
        }
        if let Ok(gc) = galois::derive_adjoint(p, q, &f) {
            out.push(gc);
        }
    }
    Ok(out)
}

/// Maximality in the closure pre-order, decided by exhaustive
/// enumeration on the shared carriers: maximal means nothing sits
/// strictly above.
pub fn is_maximal_pq(gc: &GaloisConnection) -> Result<bool, OrderingError> {
    for other in enumerate_gcs(gc.p(), gc.q())? {
        if preceq_pq(gc, &other)?.holds && !preceq_pq(&other, gc)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::validate_gc;
    use crate::samples;

    #[test]
    fn pointwise_is_reflexive_and_detects_gaps() {
        let (a, b) = samples::chain_pair();
        assert!(le_pointwise(&a, &a).unwrap().holds);
        assert!(le_pointwise(&b, &b).unwrap().holds);
        // f_a(2) = 1 sits above f_b(2) = 0, so a is not below b.
        let v = le_pointwise(&a, &b).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Element { side: Side::P, index: 2 }));
    }

    #[test]
    fn pointwise_rejects_mismatched_carriers() {
        let (a, _) = samples::chain_pair();
        let (c, _) = samples::diamond_pair();
        assert!(matches!(
            le_pointwise(&a, &c),
            Err(OrderingError::CarrierMismatch { side: Side::P, left: 3, right: 4 })
        ));
    }

    #[test]
    fn relation_inclusion_on_contexts() {
        let ctx = samples::toy_context();
        assert!(le_relation(&ctx, &ctx).unwrap().holds);
        let smaller = crate::FormalContext::from_pairs(3, 3, &[(0, 0), (1, 1)]).unwrap();
        assert!(le_relation(&smaller, &ctx).unwrap().holds);
        let v = le_relation(&ctx, &smaller).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Pair { object: 0, attribute: 1 }));
        let skinny = crate::FormalContext::from_pairs(2, 3, &[]).unwrap();
        assert!(matches!(
            le_relation(&ctx, &skinny),
            Err(OrderingError::ContextMismatch { .. })
        ));
    }

    #[test]
    fn relation_inclusion_matches_polarity_order_exhaustively() {
        // Debug builds re-check each verdict against the materialized
        // polarities, so sweeping all 2x2 pairs exercises the theorem.
        let all: Vec<_> = crate::oracle::all_contexts(2, 2).collect();
        for a in &all {
            for b in &all {
                let v = le_relation(a, b).unwrap();
                let expected = (0..2).all(|g| a.row(g) & !b.row(g) == 0);
                assert_eq!(v.holds, expected);
            }
        }
    }

    #[test]
    fn extremal_connections_on_chains() {
        let p = Poset::chain(2);
        let q = Poset::chain(2);
        let ex = extremal_gcs(&p, &q);
        let greatest = ex.greatest.unwrap();
        let least = ex.least.unwrap();
        assert_eq!(greatest.f().table(), &[1, 1]);
        assert_eq!(greatest.g().table(), &[1, 1]);
        assert_eq!(least.f().table(), &[1, 0]);
        assert_eq!(least.g().table(), &[1, 0]);
        for gc in [&greatest, &least] {
            assert!(validate_gc(gc).is_valid());
        }
    }

    #[test]
    fn extremal_connections_on_diamonds() {
        let p = Poset::diamond();
        let q = Poset::diamond();
        let ex = extremal_gcs(&p, &q);
        assert!(validate_gc(&ex.greatest.unwrap()).is_valid());
        assert!(validate_gc(&ex.least.unwrap()).is_valid());
    }

    #[test]
    fn extremal_absent_without_tops() {
        let p = Poset::chain(2);
        let two = Poset::antichain(2);
        let ex = extremal_gcs(&p, &two);
        assert!(ex.greatest.is_none());
        assert!(ex.least.is_none());
        // A bottom alone is not enough for the least element.
        let vee = Poset::new(
            3,
            vec![
                true, true, true,
                false, true, false,
                false, false, true,
            ],
            None,
        )
        .unwrap();
        let ex = extremal_gcs(&Poset::chain(2), &vee);
        assert!(ex.greatest.is_none());
        assert!(ex.least.is_none());
    }

    #[test]
    fn extremal_bound_everything_enumerable() {
        for (p, q) in [
            (Poset::chain(2), Poset::chain(3)),
            (Poset::chain(3), Poset::chain(3)),
            (Poset::diamond(), Poset::chain(2)),
        ] {
            let ex = extremal_gcs(&p, &q);
            let greatest = ex.greatest.unwrap();
            let least = ex.least.unwrap();
            for gc in enumerate_gcs(&p, &q).unwrap() {
                assert!(le_pointwise(&gc, &greatest).unwrap().holds);
                assert!(le_pointwise(&least, &gc).unwrap().holds);
            }
        }
    }

    #[test]
    fn closure_comparisons_on_the_chain_pair() {
        let (a, b) = samples::chain_pair();
        assert!(preceq_p(&a, &b).unwrap().holds);
        let v = preceq_q(&a, &b).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Element { side: Side::Q, index: 1 }));
        // b's round trip lands at 2 where a's lands at 1, one step lower.
        assert_eq!(b.closure(Side::Q, 1), 2);
        assert_eq!(a.closure(Side::Q, 1), 1);
        let pq = preceq_pq(&a, &b).unwrap();
        assert!(!pq.holds);
        assert_eq!(pq.witness, Some(Witness::Element { side: Side::Q, index: 1 }));
    }

    #[test]
    fn closure_comparison_is_reflexive() {
        for gc in samples::assorted_connections() {
            assert!(preceq_p(&gc, &gc).unwrap().holds);
            assert!(preceq_q(&gc, &gc).unwrap().holds);
            assert!(preceq_pq(&gc, &gc).unwrap().holds);
            assert!(sq_nodes(&gc, &gc).unwrap().holds);
        }
    }

    #[test]
    fn equivalence_without_equality() {
        let (fixing, swapping) = samples::diamond_pair();
        assert_ne!(fixing.f().table(), swapping.f().table());
        assert!(preceq_pq_equiv(&fixing, &swapping).unwrap());
        assert!(sq_nodes(&fixing, &swapping).unwrap().holds);
        assert!(sq_nodes(&swapping, &fixing).unwrap().holds);
    }

    #[test]
    fn node_subset_test_matches_closure_comparison() {
        let p = Poset::chain(2);
        let q = Poset::chain(3);
        let gcs = enumerate_gcs(&p, &q).unwrap();
        for a in &gcs {
            for b in &gcs {
                assert_eq!(
                    sq_nodes(a, b).unwrap().holds,
                    preceq_pq(a, b).unwrap().holds
                );
            }
        }
    }

    #[test]
    fn chain_pair_nodes_tell_the_q_side_story() {
        let (a, b) = samples::chain_pair();
        let v = sq_nodes(&a, &b).unwrap();
        assert!(!v.holds);
        match v.witness {
            Some(Witness::Element { side: Side::Q, .. }) => {}
            other => panic!("expected a Q-side node witness, got {other:?}"),
        }
        assert!(node_subset(&a, &b, Side::P).is_none());
    }

    #[test]
    fn perfect_connections_are_maximal() {
        let (fixing, swapping) = samples::diamond_pair();
        assert!(galois::is_perfect(&fixing));
        assert!(is_maximal_pq(&fixing).unwrap());
        assert!(is_maximal_pq(&swapping).unwrap());
        assert!(closure_is_identity_p(&fixing));
        assert!(closure_is_identity_q(&fixing));
    }

    #[test]
    fn maximality_does_not_require_identity_closure() {
        // On mismatched chain sizes no connection closes to the
        // identity on the larger side, yet maximal elements exist.
        let p = Poset::chain(2);
        let q = Poset::chain(3);
        let gcs = enumerate_gcs(&p, &q).unwrap();
        let maximal: Vec<_> = gcs
            .iter()
            .filter(|gc| is_maximal_pq(gc).unwrap())
            .collect();
        assert!(!maximal.is_empty());
        assert!(maximal.iter().any(|gc| !closure_is_identity_q(gc)));
    }

    #[test]
    fn greatest_connection_is_preceq_minimal_in_nodes() {
        // The constant-to-top connection has single-node sides, so it
        // sits at the bottom of the closure pre-order.
        let p = Poset::chain(3);
        let q = Poset::diamond();
        let top = extremal_gcs(&p, &q).greatest.unwrap();
        for gc in enumerate_gcs(&p, &q).unwrap() {
            assert!(preceq_p(&top, &gc).unwrap().holds);
            assert!(preceq_q(&top, &gc).unwrap().holds);
        }
    }

    #[test]
    fn fiber_comparison_pins_tables() {
        let (a, b) = samples::chain_pair();
        assert!(fiber_leq(&a, &a).unwrap().holds);
        assert!(!fiber_leq(&a, &b).unwrap().holds);
        // Same tables over a reshaped Q order still compare both ways:
        // constants to an element that stays on top remain valid.
        let p = Poset::chain(3);
        let over_diamond = GaloisConnection::from_tables(
            p.clone(),
            Poset::diamond(),
            vec![3, 3, 3],
            vec![2, 2, 2, 2],
        )
        .unwrap();
        let over_chain = GaloisConnection::from_tables(
            p,
            Poset::chain(4),
            vec![3, 3, 3],
            vec![2, 2, 2, 2],
        )
        .unwrap();
        assert!(validate_gc(&over_diamond).is_valid());
        assert!(validate_gc(&over_chain).is_valid());
        assert!(!over_diamond.q().same_order(over_chain.q()));
        assert!(fiber_leq(&over_diamond, &over_chain).unwrap().holds);
        assert!(fiber_leq(&over_chain, &over_diamond).unwrap().holds);
        let (c, _) = samples::diamond_pair();
        assert!(fiber_leq(&a, &c).is_err());
    }

    #[test]
    fn fiber_comparison_implies_node_inclusion_on_shared_orders() {
        let p = Poset::chain(2);
        let q = Poset::chain(2);
        let gcs = enumerate_gcs(&p, &q).unwrap();
        for a in &gcs {
            for b in &gcs {
                if fiber_leq(a, b).unwrap().holds {
                    assert!(sq_nodes(a, b).unwrap().holds);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_canonical_order() {
        let one = Poset::chain(1);
        assert_eq!(enumerate_gcs(&one, &one).unwrap().len(), 1);
        // Brute comparison: filter every (f, g) table pair directly.
        let p = Poset::chain(2);
        let q = Poset::chain(2);
        let enumerated = enumerate_gcs(&p, &q).unwrap();
        let mut brute = 0;
        for f in oracle::all_maps(2, 2) {
            for g in oracle::all_maps(2, 2) {
                let gc = GaloisConnection::from_tables(
                    p.clone(),
                    q.clone(),
                    f.clone(),
                    g,
                )
                .unwrap();
                if validate_gc(&gc).is_valid() {
                    brute += 1;
                }
            }
        }
        assert_eq!(enumerated.len(), brute);
        let tables: Vec<&[usize]> = enumerated.iter().map(|gc| gc.f().table()).collect();
        let mut sorted = tables.clone();
        sorted.sort();
        assert_eq!(tables, sorted);
    }

    #[test]
    fn enumeration_matches_relation_count_on_powersets() {
        // Connections between powerset orders of one-element carriers
        // correspond to relations between those carriers: two of them.
        let p = crate::poset::powerset_poset(1).unwrap();
        let q = crate::poset::powerset_poset(1).unwrap();
        assert_eq!(enumerate_gcs(&p, &q).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_respects_the_cap() {
        let p = Poset::chain(5);
        let q = Poset::chain(5);
        assert!(matches!(
            enumerate_gcs(&p, &q),
            Err(OrderingError::EnumerationCap { got: 25, cap: ENUMERATION_CAP })
        ));
    }

    #[test]
    fn degenerate_carriers() {
        let zero = Poset::antichain(0);
        let two = Poset::chain(2);
        assert_eq!(enumerate_gcs(&zero, &zero).unwrap().len(), 1);
        assert!(enumerate_gcs(&zero, &two).unwrap().is_empty());
        assert!(enumerate_gcs(&two, &zero).unwrap().is_empty());
        let ex = extremal_gcs(&zero, &zero);
        assert!(ex.greatest.is_none());
        assert!(ex.least.is_none());
    }
}
