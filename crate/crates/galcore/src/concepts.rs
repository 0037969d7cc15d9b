//! Concepts, preconcepts, and protoconcepts of a formal context.
//!
//! A concept is a pair (extent A, intent B) with the derivations meeting
//! in the middle: the common attributes of A are exactly B and the common
//! objects of B are exactly A. [`enumerate_concepts`] produces them all
//! in lectic order of intents, smallest attribute most significant, by
//! the standard closure-stepping enumeration; the result is a complete
//! lattice under extent inclusion.
//!
//! A preconcept merely asks D to sit inside the common attributes of C.
//! Around each preconcept lives an interval of concepts, and the interval
//! degenerates to a point exactly for protoconcepts. Preconcepts carry a
//! coarser pre-order (compare the derived sets, not the raw ones) whose
//! quotient [`gm_quotient`] is a genuine partial order on pairs of closed
//! sets.

use crate::bits;
use crate::context::FormalContext;
use crate::poset::Poset;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConceptError {
    #[error("({c}, {d}) is not a preconcept: {d} is not contained in the common attributes of {c}",
        c = bits::format_indices(*.0), d = bits::format_indices(*.1))]
    NotPreconcept(u64, u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Concept {
    pub extent: u64,
    pub intent: u64,
}

/// True iff the derivations close the pair both ways.
pub fn is_concept(ctx: &FormalContext, extent: u64, intent: u64) -> bool {
    ctx.common_attributes(extent) == intent && ctx.common_objects(intent) == extent
}

/// Lectic successor of a closed intent, or None after the last one.
fn next_closed_intent(ctx: &FormalContext, current: u64) -> Option<u64> {
    let m = ctx.attribute_count();
    for i in (0..m).rev() {
        let bit = 1u64 << i;
        if current & bit != 0 {
            continue;
        }
        let below = bit - 1;
        let candidate = ctx.attribute_closure((current & below) | bit);
        if candidate & below == current & below {
            return Some(candidate);
        }
    }
    None
}

/// All concepts in lectic intent order, with the extent-inclusion order
/// table. The first concept has the full object carrier as extent, the
/// last has the full attribute carrier as intent.
pub fn enumerate_concepts(ctx: &FormalContext) -> ConceptLattice {
    let mut concepts = Vec::new();
    let mut intent = ctx.attribute_closure(0);
    loop {
        concepts.push(Concept {
            extent: ctx.common_objects(intent),
            intent,
        });
        match next_closed_intent(ctx, intent) {
            Some(next) => intent = next,
            None => break,
        }
    }
    let n = concepts.len();
    let mut order = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            order[i * n + j] = bits::is_subset(concepts[i].extent, concepts[j].extent);
        }
    }
    ConceptLattice { concepts, order }
}

/// The concept lattice: concepts in enumeration order plus the relation
/// table of extent inclusion. Complete by construction; meets intersect
/// extents, joins intersect intents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptLattice {
    concepts: Vec<Concept>,
    order: Vec<bool>,
}

impl ConceptLattice {
    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn get(&self, i: usize) -> Concept {
        self.concepts[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i * self.concepts.len() + j]
    }

    pub fn index_of(&self, c: Concept) -> Option<usize> {
        self.concepts.iter().position(|&x| x == c)
    }

    /// Index of the concept whose extent is the whole object carrier.
    pub fn top_index(&self) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq(j, i)))
            .expect("a concept lattice always has a top")
    }

    pub fn bottom_index(&self) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.leq(i, j)))
            .expect("a concept lattice always has a bottom")
    }

    /// The order table as a poset over concept indices.
    pub fn as_poset(&self) -> Poset {
        Poset::new(self.len(), self.order.clone(), None).expect("square table")
    }

    /// Covering pairs (lower, upper) of the lattice order: the transitive
    /// reduction, computed by the no-element-strictly-between scan.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let strictly = |i: usize, j: usize| i != j && self.leq(i, j);
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if strictly(i, j) && !(0..n).any(|k| strictly(i, k) && strictly(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        covers
    }
}

/// D must sit inside the common attributes of C (equivalently C inside
/// the common objects of D).
pub fn is_preconcept(ctx: &FormalContext, c: u64, d: u64) -> bool {
    bits::is_subset(d, ctx.common_attributes(c))
}

fn require_preconcept(ctx: &FormalContext, c: u64, d: u64) -> Result<(), ConceptError> {
    if is_preconcept(ctx, c, d) {
        Ok(())
    } else {
        Err(ConceptError::NotPreconcept(c, d))
    }
}

/// The interval of concepts compatible with a preconcept: bottom closes
/// the object part, top closes the attribute part.
pub fn precon_interval(
    ctx: &FormalContext,
    c: u64,
    d: u64,
) -> Result<(Concept, Concept), ConceptError> {
    require_preconcept(ctx, c, d)?;
    let bottom = Concept {
        extent: ctx.object_closure(c),
        intent: ctx.common_attributes(c),
    };
    let top = Concept {
        extent: ctx.common_objects(d),
        intent: ctx.attribute_closure(d),
    };
    Ok((bottom, top))
}

/// All concepts containing the preconcept componentwise, ascending by
/// extent. Coincides with the extent interval of [`precon_interval`].
pub fn precon_members(
    ctx: &FormalContext,
    c: u64,
    d: u64,
) -> Result<Vec<Concept>, ConceptError> {
    require_preconcept(ctx, c, d)?;
    let mut members: Vec<Concept> = enumerate_concepts(ctx)
        .concepts()
        .iter()
        .copied()
        .filter(|cc| bits::is_subset(c, cc.extent) && bits::is_subset(d, cc.intent))
        .collect();
    members.sort_by_key(|cc| (cc.extent, cc.intent));
    Ok(members)
}

/// A preconcept whose concept interval is a single point: the object
/// closure of C equals the common objects of D.
pub fn is_protoconcept(ctx: &FormalContext, c: u64, d: u64) -> Result<bool, ConceptError> {
    require_preconcept(ctx, c, d)?;
    Ok(ctx.object_closure(c) == ctx.common_objects(d))
}

/// Componentwise subset order on preconcept pairs.
pub fn preconcept_sq_leq(a: (u64, u64), b: (u64, u64)) -> bool {
    bits::is_subset(a.0, b.0) && bits::is_subset(a.1, b.1)
}

/// The coarser pre-order: compare derived sets, reversed on both
/// components. Not antisymmetric on raw pairs; [`gm_quotient`] is its
/// partial-order quotient.
pub fn preconcept_preceq(
    ctx: &FormalContext,
    a: (u64, u64),
    b: (u64, u64),
) -> Result<bool, ConceptError> {
    require_preconcept(ctx, a.0, a.1)?;
    require_preconcept(ctx, b.0, b.1)?;
    Ok(bits::is_subset(ctx.common_objects(b.1), ctx.common_objects(a.1))
        && bits::is_subset(ctx.common_attributes(b.0), ctx.common_attributes(a.0)))
}

/// Same closures on both components: equivalent iff preceq both ways.
pub fn preconcept_equiv(ctx: &FormalContext, a: (u64, u64), b: (u64, u64)) -> bool {
    ctx.object_closure(a.0) == ctx.object_closure(b.0)
        && ctx.attribute_closure(a.1) == ctx.attribute_closure(b.1)
}

/// The quotient of preconcepts under closure equivalence. Each class is
/// represented by its node pair: a closed extent A and a closed intent B
/// that still form a preconcept. Ordered by reversed inclusion of the
/// derived sets, which is antisymmetric on closed representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmQuotient {
    elements: Vec<(u64, u64)>,
    order: Vec<bool>,
}

impl GmQuotient {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Node pairs (closed extent, closed intent), ascending as integers.
    pub fn elements(&self) -> &[(u64, u64)] {
        &self.elements
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i * self.elements.len() + j]
    }

    pub fn as_poset(&self) -> Poset {
        Poset::new(self.elements.len(), self.order.clone(), None).expect("square table")
    }

    /// Index of the class containing a given preconcept.
    pub fn class_of(&self, ctx: &FormalContext, c: u64, d: u64) -> Option<usize> {
        let key = (ctx.object_closure(c), ctx.attribute_closure(d));
        self.elements.iter().position(|&e| e == key)
    }
}

pub fn gm_quotient(ctx: &FormalContext) -> GmQuotient {
    let lattice = enumerate_concepts(ctx);
    let mut extents: Vec<u64> = lattice.concepts().iter().map(|c| c.extent).collect();
    let mut intents: Vec<u64> = lattice.concepts().iter().map(|c| c.intent).collect();
    extents.sort_unstable();
    extents.dedup();
    intents.sort_unstable();
    intents.dedup();
    let mut elements = Vec::new();
    for &a in &extents {
        for &b in &intents {
            if is_preconcept(ctx, a, b) {
                elements.push((a, b));
            }
        }
    }
    elements.sort_unstable();
    let n = elements.len();
    let mut order = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            let (ci, di) = elements[i];
            let (cj, dj) = elements[j];
            order[i * n + j] = bits::is_subset(ctx.common_objects(dj), ctx.common_objects(di))
                && bits::is_subset(ctx.common_attributes(cj), ctx.common_attributes(ci));
        }
    }
    GmQuotient { elements, order }
}

/// Every subset on one side whose closure is the given node: the full
/// membership of one leaf. Exponential in the carrier; meant for tiny
/// contexts behind explicit flags.
pub fn leaf_members_objects(ctx: &FormalContext, node: u64) -> Vec<u64> {
    bits::subsets(ctx.object_count())
        .filter(|&c| ctx.object_closure(c) == node)
        .collect()
}

pub fn leaf_members_attributes(ctx: &FormalContext, node: u64) -> Vec<u64> {
    bits::subsets(ctx.attribute_count())
        .filter(|&d| ctx.attribute_closure(d) == node)
        .collect()
}
