//! Connections as objects, map pairs as morphisms.
//!
//! A morphism from one connection to another is a pair of plain
//! functions (h between the P carriers, k between the Q carriers) making
//! both squares commute: k after the first f equals the second f after
//! h, and h after the first g equals the second g after k. No
//! monotonicity is demanded; order preservation is a separate flag.
//!
//! The characterization theorem gives three equivalent readings of "is a
//! morphism": the commuting squares; preservation of nodes, leaves, and
//! anti-isomorphic leaf pairs; and the same-fixed-point condition along
//! either path out of a leaf. [`characterize_morphism`] computes all of
//! them independently so tests can confirm they agree.
//!
//! Every connection embeds into a polarity between powerset orders: send
//! a subset A to the intersection of the down-sets of its f images, and
//! each element to its down-set. [`embed_into_polarity`] builds the
//! polarity and the embedding morphism, [`embedding_relation`] recovers
//! the incidence relation behind it, and [`check_initiality`] probes the
//! embedding's universal property at desk scale.

use crate::bits;
use crate::context::{materialize_polarity, ContextError, FormalContext};
use crate::galois::{self, GaloisConnection};
use crate::ordering::{OrderVerdict, Witness};
use crate::poset::{
    materialization_cap, powerset_poset_with_cap, OrderMap, Poset, PosetError,
};
use crate::report::Side;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CategoryError {
    #[error("map on side {side} must go {dom} -> {cod}, got {got_dom} -> {got_cod}")]
    MapShape {
        side: Side,
        dom: usize,
        cod: usize,
        got_dom: usize,
        got_cod: usize,
    },
    #[error("the squares do not commute: fails at {witness}")]
    NotMorphism { witness: Witness },
    #[error("composition endpoints differ")]
    EndpointMismatch,
    #[error(transparent)]
    Shape(#[from] PosetError),
    #[error(transparent)]
    Context(#[from] ContextError),
}

fn check_map_shapes(
    src: &GaloisConnection,
    dst: &GaloisConnection,
    h: &OrderMap,
    k: &OrderMap,
) -> Result<(), CategoryError> {
    let fits = |side, map: &OrderMap, dom: usize, cod: usize| {
        if map.dom_size() != dom || map.cod_size() != cod {
            Err(CategoryError::MapShape {
                side,
                dom,
                cod,
                got_dom: map.dom_size(),
                got_cod: map.cod_size(),
            })
        } else {
            Ok(())
        }
    };
    fits(Side::P, h, src.p().size(), dst.p().size())?;
    fits(Side::Q, k, src.q().size(), dst.q().size())
}

/// Do both squares commute? Returns the verdict with the first failing
/// carrier element; shape mismatches are errors, not failures.
pub fn is_gal_morphism(
    src: &GaloisConnection,
    dst: &GaloisConnection,
    h: &OrderMap,
    k: &OrderMap,
) -> Result<OrderVerdict, CategoryError> {
    check_map_shapes(src, dst, h, k)?;
    let witness = (0..src.p().size())
        .find(|&p| k.apply(src.f_at(p)) != dst.f_at(h.apply(p)))
        .map(|index| Witness::Element { side: Side::P, index })
        .or_else(|| {
            (0..src.q().size())
                .find(|&q| h.apply(src.g_at(q)) != dst.g_at(k.apply(q)))
                .map(|index| Witness::Element { side: Side::Q, index })
        });
    Ok(OrderVerdict::from_witness(witness, "squares-commute"))
}

/// A validated morphism: the endpoints plus the two maps, with the
/// commuting squares checked at construction.
#[derive(Debug, Clone)]
pub struct GalMorphism {
    src: GaloisConnection,
    dst: GaloisConnection,
    h: OrderMap,
    k: OrderMap,
}

impl GalMorphism {
    pub fn new(
        src: GaloisConnection,
        dst: GaloisConnection,
        h: OrderMap,
        k: OrderMap,
    ) -> Result<Self, CategoryError> {
        let verdict = is_gal_morphism(&src, &dst, &h, &k)?;
        match verdict.witness {
            None => Ok(GalMorphism { src, dst, h, k }),
            Some(witness) => Err(CategoryError::NotMorphism { witness }),
        }
    }

    pub fn src(&self) -> &GaloisConnection {
        &self.src
    }

    pub fn dst(&self) -> &GaloisConnection {
        &self.dst
    }

    pub fn h(&self) -> &OrderMap {
        &self.h
    }

    pub fn k(&self) -> &OrderMap {
        &self.k
    }

    /// Both maps monotone: membership test for the order-preserving
    /// subcategory.
    pub fn is_order_preserving(&self) -> bool {
        self.h.is_monotone(self.src.p(), self.dst.p())
            && self.k.is_monotone(self.src.q(), self.dst.q())
    }
}

/// Monomorphisms are exactly the componentwise injections.
pub fn is_monomorphism(m: &GalMorphism) -> bool {
    let injective = |map: &OrderMap| {
        let mut seen = vec![false; map.cod_size()];
        map.table().iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    };
    injective(m.h()) && injective(m.k())
}

pub fn identity(gc: &GaloisConnection) -> GalMorphism {
    GalMorphism::new(
        gc.clone(),
        gc.clone(),
        OrderMap::identity(gc.p().size()),
        OrderMap::identity(gc.q().size()),
    )
    .expect("identity squares always commute")
}

fn same_connection(a: &GaloisConnection, b: &GaloisConnection) -> bool {
    a.p().same_order(b.p())
        && a.q().same_order(b.q())
        && a.f().table() == b.f().table()
        && a.g().table() == b.g().table()
}

/// Composite m2 after m1.
pub fn compose(m2: &GalMorphism, m1: &GalMorphism) -> Result<GalMorphism, CategoryError> {
    if !same_connection(m1.dst(), m2.src()) {
        return Err(CategoryError::EndpointMismatch);
    }
    let h: Vec<usize> = m1.h().table().iter().map(|&x| m2.h().apply(x)).collect();
    let k: Vec<usize> = m1.k().table().iter().map(|&x| m2.k().apply(x)).collect();
    GalMorphism::new(
        m1.src().clone(),
        m2.dst().clone(),
        OrderMap::new(h, m2.dst().p().size())?,
        OrderMap::new(k, m2.dst().q().size())?,
    )
}

/// The three equivalent readings of the morphism condition, each
/// computed on its own. `squares` is the definition; `nodes`, `levels`,
/// and `antiiso_pairs` together form the structural reading; `common
/// fixed point` is the one-shot reading. The theorem says the three
/// columns agree, and [`MorphismCharacterization::consistent`] checks
/// exactly that.
#[derive(Debug, Clone, Copy)]
pub struct MorphismCharacterization {
    pub squares: OrderVerdict,
    pub nodes: OrderVerdict,
    pub levels: OrderVerdict,
    pub antiiso_pairs: OrderVerdict,
    pub common_fixed_point: OrderVerdict,
}

impl MorphismCharacterization {
    pub fn structural_holds(&self) -> bool {
        self.nodes.holds && self.levels.holds && self.antiiso_pairs.holds
    }

    pub fn consistent(&self) -> bool {
        self.squares.holds == self.structural_holds()
            && self.squares.holds == self.common_fixed_point.holds
    }
}

pub fn characterize_morphism(
    src: &GaloisConnection,
    dst: &GaloisConnection,
    h: &OrderMap,
    k: &OrderMap,
) -> Result<MorphismCharacterization, CategoryError> {
    check_map_shapes(src, dst, h, k)?;
    let squares = is_gal_morphism(src, dst, h, k)?;

    // Node preservation on each side.
    let node_witness = {
        let dst_p = galois::nodes(dst, Side::P);
        let dst_q = galois::nodes(dst, Side::Q);
        galois::nodes(src, Side::P)
            .into_iter()
            .find(|&n| !dst_p.contains(&h.apply(n)))
            .map(|index| Witness::Element { side: Side::P, index })
            .or_else(|| {
                galois::nodes(src, Side::Q)
                    .into_iter()
                    .find(|&n| !dst_q.contains(&k.apply(n)))
                    .map(|index| Witness::Element { side: Side::Q, index })
            })
    };
    let nodes = OrderVerdict::from_witness(node_witness, "node-preservation");

    // Level preservation: same leaf in, same leaf out.
    let level_witness = {
        let check = |side: Side, map: &OrderMap| {
            let ls = galois::leaves(src, side);
            let ld = galois::leaves(dst, side);
            let n = src.side(side).size();
            (0..n).find(|&x| {
                (0..n).any(|y| {
                    ls.leaf_of(x) == ls.leaf_of(y)
                        && ld.leaf_of(map.apply(x)) != ld.leaf_of(map.apply(y))
                })
            })
        };
        check(Side::P, h)
            .map(|index| Witness::Element { side: Side::P, index })
            .or_else(|| {
                check(Side::Q, k).map(|index| Witness::Element { side: Side::Q, index })
            })
    };
    let levels = OrderVerdict::from_witness(level_witness, "level-preservation");

    // Anti-isomorphic leaf pairs: p's leaf and q's leaf correspond when
    // the node of q's leaf is f(p)'s closure; the images must correspond
    // the same way downstream.
    let antiiso_witness = (0..src.p().size())
        .find(|&p| {
            (0..src.q().size()).any(|q| {
                src.closure(Side::Q, q) == src.out(Side::P, p)
                    && dst.closure(Side::Q, k.apply(q)) != dst.out(Side::P, h.apply(p))
            })
        })
        .map(|index| Witness::Element { side: Side::P, index });
    let antiiso_pairs = OrderVerdict::from_witness(antiiso_witness, "antiiso-pair-preservation");

    // Either path out of a leaf reaches one shared fixed point.
    let common_witness = {
        let p_side = {
            let ls = galois::leaves(src, Side::P);
            let n = src.p().size();
            (0..n).find(|&x| {
                (0..n).any(|y| {
                    ls.leaf_of(x) == ls.leaf_of(y) && {
                        let via_k = k.apply(src.f_at(y));
                        let via_h = dst.f_at(h.apply(x));
                        via_k != via_h || dst.closure(Side::Q, via_k) != via_k
                    }
                })
            })
        };
        let q_side = {
            let ls = galois::leaves(src, Side::Q);
            let n = src.q().size();
            (0..n).find(|&x| {
                (0..n).any(|y| {
                    ls.leaf_of(x) == ls.leaf_of(y) && {
                        let via_h = h.apply(src.g_at(y));
                        let via_g = dst.g_at(k.apply(x));
                        via_h != via_g || dst.closure(Side::P, via_h) != via_h
                    }
                })
            })
        };
        p_side
            .map(|index| Witness::Element { side: Side::P, index })
            .or_else(|| q_side.map(|index| Witness::Element { side: Side::Q, index }))
    };
    let common_fixed_point = OrderVerdict::from_witness(common_witness, "common-fixed-point");

    Ok(MorphismCharacterization {
        squares,
        nodes,
        levels,
        antiiso_pairs,
        common_fixed_point,
    })
}

fn intersection_of_downsets(poset: &Poset, elems: u64, map: &OrderMap) -> u64 {
    let mut out = bits::full(poset.size());
    for x in bits::iter(elems) {
        out &= poset.downset_mask(map.apply(x));
    }
    out
}

/// Embed a connection into a polarity between the powerset orders of
/// its carriers. The polarity sends a set of P elements to the common
/// lower bounds of their f images (empty set to everything), dually on
/// the way back; the morphism sends each element to its down-set.
pub fn embed_into_polarity(
    gc: &GaloisConnection,
) -> Result<(GaloisConnection, GalMorphism), CategoryError> {
    embed_into_polarity_with_cap(gc, materialization_cap())
}

pub fn embed_into_polarity_with_cap(
    gc: &GaloisConnection,
    cap: usize,
) -> Result<(GaloisConnection, GalMorphism), CategoryError> {
    let n = gc.p().size();
    let m = gc.q().size();
    let pow_p = powerset_poset_with_cap(n, cap)?;
    let pow_q = powerset_poset_with_cap(m, cap)?;
    let f_table: Vec<usize> = (0..1u64 << n)
        .map(|a| intersection_of_downsets(gc.q(), a, gc.f()) as usize)
        .collect();
    let g_table: Vec<usize> = (0..1u64 << m)
        .map(|b| intersection_of_downsets(gc.p(), b, gc.g()) as usize)
        .collect();
    let polarity = GaloisConnection::new(
        pow_p,
        pow_q,
        OrderMap::new(f_table, 1 << m)?,
        OrderMap::new(g_table, 1 << n)?,
    )?;
    debug_assert!(galois::validate_gc(&polarity).is_valid());
    let i_p: Vec<usize> = (0..n).map(|p| gc.p().downset_mask(p) as usize).collect();
    let i_q: Vec<usize> = (0..m).map(|q| gc.q().downset_mask(q) as usize).collect();
    let morphism = GalMorphism::new(
        gc.clone(),
        polarity.clone(),
        OrderMap::new(i_p, 1 << n)?,
        OrderMap::new(i_q, 1 << m)?,
    )?;
    Ok((polarity, morphism))
}

/// The incidence relation behind the embedding: p relates to q exactly
/// when each lies below the other's adjoint image.
pub fn embedding_relation(gc: &GaloisConnection) -> FormalContext {
    let n = gc.p().size();
    let m = gc.q().size();
    let rows: Vec<u64> = (0..n)
        .map(|p| {
            bits::from_elems(
                (0..m).filter(|&q| gc.p().leq(p, gc.g_at(q)) && gc.q().leq(q, gc.f_at(p))),
            )
        })
        .collect();
    FormalContext::new(rows, m, None, None).expect("carriers already fit in masks")
}

/// Outcome of probing the embedding's universal property: every map
/// pair into the source whose composite with the embedding is a
/// morphism must itself be a morphism.
#[derive(Debug, Clone, Default)]
pub struct InitialityReport {
    pub probes: usize,
    pub pairs_checked: usize,
    pub lifted: usize,
    pub violations: Vec<(usize, Vec<usize>, Vec<usize>)>,
}

impl InitialityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_initiality(
    m: &GalMorphism,
    probes: &[GaloisConnection],
) -> Result<InitialityReport, CategoryError> {
    let mut report = InitialityReport {
        probes: probes.len(),
        ..Default::default()
    };
    for (pi, probe) in probes.iter().enumerate() {
        let rs = crate::oracle::all_maps(probe.p().size(), m.src().p().size());
        let ss = crate::oracle::all_maps(probe.q().size(), m.src().q().size());
        for r in &rs {
            let r_map = OrderMap::new(r.clone(), m.src().p().size())?;
            for s in &ss {
                let s_map = OrderMap::new(s.clone(), m.src().q().size())?;
                report.pairs_checked += 1;
                let comp_h: Vec<usize> =
                    r.iter().map(|&x| m.h().apply(x)).collect();
                let comp_k: Vec<usize> =
                    s.iter().map(|&x| m.k().apply(x)).collect();
                let composite = is_gal_morphism(
                    probe,
                    m.dst(),
                    &OrderMap::new(comp_h, m.dst().p().size())?,
                    &OrderMap::new(comp_k, m.dst().q().size())?,
                )?;
                if !composite.holds {
                    continue;
                }
                report.lifted += 1;
                if !is_gal_morphism(probe, m.src(), &r_map, &s_map)?.holds {
                    report.violations.push((pi, r.clone(), s.clone()));
                }
            }
        }
    }
    Ok(report)
}

/// Context-level entry point for the same validator: a map pair between
/// two contexts is a morphism exactly when it is one between their
/// materialized polarities, so the maps act on subset indices.
pub fn is_fc_morphism(
    src: &FormalContext,
    dst: &FormalContext,
    h: &OrderMap,
    k: &OrderMap,
) -> Result<OrderVerdict, CategoryError> {
    let a = materialize_polarity(src)?;
    let b = materialize_polarity(dst)?;
    is_gal_morphism(&a, &b, h, k)
}
