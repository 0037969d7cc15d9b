//! Deliberately naive reference implementations and exhaustive
//! enumerators. Everything here recomputes from first principles with
//! literal quantifier loops over `incident` and `leq` lookups, sharing no
//! derivation or closure code with the fast modules, so sweeps that
//! compare the two layers are meaningful.

use crate::concepts::{self, Concept};
use crate::context::{self, FormalContext};
use crate::galois::{self, GaloisConnection};
use crate::ordering;
use crate::poset::{OrderMap, Poset};
use crate::report::Side;
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force enumeration limited to carriers of {limit}, got {got}")]
    TooLarge { limit: usize, got: usize },
    #[error("unknown proposition {0:?}")]
    UnknownProposition(String),
    #[error("{proposition} refuted: {detail}")]
    Counterexample {
        proposition: String,
        detail: String,
    },
}

/// Quantifier-literal derivation: m is kept iff every object in the mask
/// is incident to it. No mask intersection tricks.
pub fn naive_common_attributes(ctx: &FormalContext, objects: u64) -> u64 {
    let mut out = 0u64;
    for m in 0..ctx.attribute_count() {
        let mut all = true;
        for g in 0..ctx.object_count() {
            if objects >> g & 1 == 1 && !ctx.incident(g, m) {
                all = false;
            }
        }
        if all {
            out |= 1 << m;
        }
    }
    out
}

pub fn naive_common_objects(ctx: &FormalContext, attrs: u64) -> u64 {
    let mut out = 0u64;
    for g in 0..ctx.object_count() {
        let mut all = true;
        for m in 0..ctx.attribute_count() {
            if attrs >> m & 1 == 1 && !ctx.incident(g, m) {
                all = false;
            }
        }
        if all {
            out |= 1 << g;
        }
    }
    out
}

/// Every concept by the definition: all (A, B) subset pairs filtered on
/// both derivation equations. Exponential in both carriers, capped at 8.
pub fn brute_concepts(ctx: &FormalContext) -> Result<Vec<Concept>, OracleError> {
    let (gn, mn) = (ctx.object_count(), ctx.attribute_count());
    let limit = 8;
    if gn > limit || mn > limit {
        return Err(OracleError::TooLarge {
            limit,
            got: gn.max(mn),
        });
    }
    let mut found = Vec::new();
    for a in 0..(1u64 << gn) {
        for b in 0..(1u64 << mn) {
            if naive_common_attributes(ctx, a) == b && naive_common_objects(ctx, b) == a {
                found.push(Concept {
                    extent: a,
                    intent: b,
                });
            }
        }
    }
    found.sort_by_key(|c| (c.extent, c.intent));
    Ok(found)
}

/// Every preconcept pair (C, D) with D inside the common attributes of C,
/// by literal filtering. Same cap as [`brute_concepts`].
pub fn brute_preconcepts(ctx: &FormalContext) -> Result<Vec<(u64, u64)>, OracleError> {
    let (gn, mn) = (ctx.object_count(), ctx.attribute_count());
    let limit = 8;
    if gn > limit || mn > limit {
        return Err(OracleError::TooLarge {
            limit,
            got: gn.max(mn),
        });
    }
    let mut found = Vec::new();
    for c in 0..(1u64 << gn) {
        for d in 0..(1u64 << mn) {
            let mut ok = true;
            for g in 0..gn {
                for m in 0..mn {
                    if c >> g & 1 == 1 && d >> m & 1 == 1 && !ctx.incident(g, m) {
                        ok = false;
                    }
                }
            }
            if ok {
                found.push((c, d));
            }
        }
    }
    Ok(found)
}

/// All non-isomorphic partial orders on n elements, by filtering every
/// reflexive relation table and keeping one canonical representative per
/// isomorphism class. Sizes up to 5 are practical.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, OracleError> {
    if n > 5 {
        return Err(OracleError::TooLarge { limit: 5, got: n });
    }
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y)
        .collect();
    let perms = permutations(n);
    let mut reps: Vec<u64> = Vec::new();
    for choice in 0u64..(1 << off_diag.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for (bit, &(x, y)) in off_diag.iter().enumerate() {
            if choice >> bit & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        if !is_partial_order(&leq, n) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|perm| encode_permuted(&leq, n, perm))
            .min()
            .unwrap_or(0);
        if !reps.contains(&canon) {
            reps.push(canon);
        }
    }
    reps.sort_unstable();
    Ok(reps.into_iter().map(|code| decode(code, n)).collect())
}

/// All non-isomorphic posets of every size up to and including n.
pub fn enumerate_posets_upto(n: usize) -> Result<Vec<Poset>, OracleError> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_posets(k)?);
    }
    Ok(out)
}

fn is_partial_order(leq: &[bool], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            if x != y && leq[x * n + y] && leq[y * n + x] {
                return false;
            }
            if !leq[x * n + y] {
                continue;
            }
            for z in 0..n {
                if leq[y * n + z] && !leq[x * n + z] {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = smaller.clone();
            perm.insert(slot, n - 1);
            out.push(perm);
        }
    }
    out
}

fn encode_permuted(leq: &[bool], n: usize, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for x in 0..n {
        for y in 0..n {
            if leq[perm[x] * n + perm[y]] {
                code |= 1 << (x * n + y);
            }
        }
    }
    code
}

fn decode(code: u64, n: usize) -> Poset {
    let mut leq = vec![false; n * n];
    for (i, cell) in leq.iter_mut().enumerate() {
        *cell = code >> i & 1 == 1;
    }
    Poset::new(n, leq, None).expect("square table")
}

/// All 2^(g*m) contexts with the given carrier sizes, default labels,
/// ascending by incidence encoding.
pub fn all_contexts(g_count: usize, m_count: usize) -> impl Iterator<Item = FormalContext> {
    let cells = g_count * m_count;
    assert!(cells < 30, "context space too large to enumerate");
    (0u64..(1 << cells)).map(move |code| {
        let rows: Vec<u64> = (0..g_count)
            .map(|g| {
                let mut row = 0u64;
                for m in 0..m_count {
                    if code >> (g * m_count + m) & 1 == 1 {
                        row |= 1 << m;
                    }
                }
                row
            })
            .collect();
        FormalContext::new(rows, m_count, None, None).expect("shape")
    })
}

/// Uniformly random incidence over fixed carriers, for sampled sweeps.
pub fn random_context<R: Rng>(g_count: usize, m_count: usize, rng: &mut R) -> FormalContext {
    let rows: Vec<u64> = (0..g_count)
        .map(|_| rng.random_range(0..(1u64 << m_count)))
        .collect();
    FormalContext::new(rows, m_count, None, None).expect("shape")
}

/// All total map tables from a domain of `dom` elements into a codomain
/// of `cod` elements, in lexicographic table order.
pub fn all_maps(dom: usize, cod: usize) -> Vec<Vec<usize>> {
    if dom == 0 {
        return vec![vec![]];
    }
    if cod == 0 {
        return vec![];
    }
    let mut tables = vec![Vec::with_capacity(dom)];
    for _ in 0..dom {
        let mut next = Vec::new();
        for t in &tables {
            for v in 0..cod {
                let mut t2 = t.clone();
                t2.push(v);
                next.push(t2);
            }
        }
        tables = next;
    }
    tables
}

/// A cross-layer claim the sweep can try to refute: every mode compares
/// an independent first-principles computation against the fast modules
/// and aborts with a counterexample dump on the first disagreement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Proposition {
    /// The structural validator (antitone maps, inflationary round
    /// trips) and the defining biconditional accept exactly the same
    /// map pairs, and both match literal re-computations.
    ValidatorAgreement,
    /// Every enumerated connection has stable round trips, image points
    /// equal to round-trip fixed points, one greatest node per fiber, a
    /// fiber partition ordered like the nodes, and mutually inverse
    /// order-reversing node bijections.
    ConnectionStructure,
    /// Comparing connections by their f maps, by their g maps, and by
    /// the fast pointwise comparison all agree.
    PointwiseAgreement,
    /// Relation inclusion between contexts matches the pointwise
    /// comparison of their derivation connections.
    RelationOrderAgreement,
    /// Closure domination, node containment, and fiber-partition
    /// refinement are the same relation on connection pairs.
    RefinementAgreement,
    /// The five protoconcept criteria agree on every preconcept and all
    /// fail on every non-preconcept pair.
    ProtoconceptConditions,
    /// Commuting squares, the structural three-part characterization,
    /// and the common-fixed-point condition classify map pairs between
    /// connections identically.
    MorphismCharacterization,
}

impl Proposition {
    pub const ALL: [Proposition; 7] = [
        Proposition::ValidatorAgreement,
        Proposition::ConnectionStructure,
        Proposition::PointwiseAgreement,
        Proposition::RelationOrderAgreement,
        Proposition::RefinementAgreement,
        Proposition::ProtoconceptConditions,
        Proposition::MorphismCharacterization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Proposition::ValidatorAgreement => "validator-agreement",
            Proposition::ConnectionStructure => "connection-structure",
            Proposition::PointwiseAgreement => "pointwise-agreement",
            Proposition::RelationOrderAgreement => "relation-order-agreement",
            Proposition::RefinementAgreement => "refinement-agreement",
            Proposition::ProtoconceptConditions => "protoconcept-conditions",
            Proposition::MorphismCharacterization => "morphism-characterization",
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.name())
    }
}

impl std::str::FromStr for Proposition {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Proposition::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| OracleError::UnknownProposition(s.to_string()))
    }
}

/// Bounds and coverage for one sweep run. Poset sizes are capped at 4
/// and context carriers at 3 because every exhaustive mode enumerates
/// complete map or relation spaces.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub max_poset_size: usize,
    pub context_objects: usize,
    pub context_attributes: usize,
    /// Sample count for modes whose exhaustive space is out of reach.
    pub samples: u64,
    pub seed: u64,
    pub propositions: Vec<Proposition>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            max_poset_size: 3,
            context_objects: 3,
            context_attributes: 3,
            samples: 2000,
            seed: 7,
            propositions: Proposition::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionReport {
    pub proposition: Proposition,
    /// Instances checked without finding a counterexample.
    pub instances: u64,
    /// Whether the whole space within the bounds was covered, as
    /// opposed to a seeded sample of it.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    pub reports: Vec<PropositionReport>,
}

impl SweepReport {
    pub fn total_instances(&self) -> u64 {
        self.reports.iter().map(|r| r.instances).sum()
    }
}

/// Runs every requested proposition within the given bounds, aborting
/// on the first counterexample. A clean run returns per-proposition
/// instance counts.
pub fn sweep(spec: &SweepSpec) -> Result<SweepReport, OracleError> {
    if spec.max_poset_size > 4 {
        return Err(OracleError::TooLarge {
            limit: 4,
            got: spec.max_poset_size,
        });
    }
    let widest = spec.context_objects.max(spec.context_attributes);
    if widest > 3 {
        return Err(OracleError::TooLarge {
            limit: 3,
            got: widest,
        });
    }
    let mut reports = Vec::new();
    for prop in &spec.propositions {
        reports.push(match prop {
            Proposition::ValidatorAgreement => check_validator_agreement(spec)?,
            Proposition::ConnectionStructure => check_connection_structure(spec)?,
            Proposition::PointwiseAgreement => check_pointwise_agreement(spec)?,
            Proposition::RelationOrderAgreement => check_relation_order_agreement(spec)?,
            Proposition::RefinementAgreement => check_refinement_agreement(spec)?,
            Proposition::ProtoconceptConditions => check_protoconcept_conditions(spec)?,
            Proposition::MorphismCharacterization => check_morphism_characterization(spec)?,
        });
    }
    Ok(SweepReport {
        spec: spec.clone(),
        reports,
    })
}

fn refuted(prop: Proposition, detail: String) -> OracleError {
    OracleError::Counterexample {
        proposition: prop.name().to_string(),
        detail,
    }
}

fn describe_poset(p: &Poset) -> String {
    let pairs: Vec<(usize, usize)> = (0..p.size())
        .flat_map(|x| (0..p.size()).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && p.leq(x, y))
        .collect();
    format!("{} elements, strict pairs {:?}", p.size(), pairs)
}

fn describe_gc(gc: &GaloisConnection) -> String {
    format!(
        "P({}) Q({}) f{:?} g{:?}",
        describe_poset(gc.p()),
        describe_poset(gc.q()),
        gc.f().table(),
        gc.g().table()
    )
}

fn naive_antitone(dom: &Poset, cod: &Poset, table: &[usize]) -> bool {
    for x in 0..dom.size() {
        for y in 0..dom.size() {
            if dom.leq(x, y) && !cod.leq(table[y], table[x]) {
                return false;
            }
        }
    }
    true
}

/// Literal reading of the defining biconditional: p below g(q) exactly
/// when q below f(p).
fn naive_connection_by_definition(p: &Poset, q: &Poset, f: &[usize], g: &[usize]) -> bool {
    for x in 0..p.size() {
        for y in 0..q.size() {
            if p.leq(x, g[y]) != q.leq(y, f[x]) {
                return false;
            }
        }
    }
    true
}

/// Literal reading of the structural test: both maps antitone and both
/// round trips inflationary.
fn naive_connection_by_structure(p: &Poset, q: &Poset, f: &[usize], g: &[usize]) -> bool {
    naive_antitone(p, q, f)
        && naive_antitone(q, p, g)
        && (0..p.size()).all(|x| p.leq(x, g[f[x]]))
        && (0..q.size()).all(|y| q.leq(y, f[g[y]]))
}

fn check_validator_agreement(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let posets = enumerate_posets_upto(spec.max_poset_size)?;
    let mut instances = 0u64;
    for p in &posets {
        for q in &posets {
            let fs: Vec<Vec<usize>> = all_maps(p.size(), q.size())
                .into_iter()
                .filter(|f| naive_antitone(p, q, f))
                .collect();
            let gs: Vec<Vec<usize>> = all_maps(q.size(), p.size())
                .into_iter()
                .filter(|g| naive_antitone(q, p, g))
                .collect();
            for f in &fs {
                for g in &gs {
                    let by_def = naive_connection_by_definition(p, q, f, g);
                    let by_struct = naive_connection_by_structure(p, q, f, g);
                    let gc = GaloisConnection::from_tables(
                        p.clone(),
                        q.clone(),
                        f.clone(),
                        g.clone(),
                    )
                    .expect("tables fit the carriers");
                    let fast_struct = galois::validate_gc(&gc).is_valid();
                    let fast_def = galois::validate_gc_adjoint(&gc).is_valid();
                    if by_def != by_struct || by_struct != fast_struct || fast_struct != fast_def
                    {
                        return Err(refuted(
                            Proposition::ValidatorAgreement,
                            format!(
                                "{}: definition {by_def}, structure {by_struct}, \
                                 validators {fast_struct}/{fast_def}",
                                describe_gc(&gc)
                            ),
                        ));
                    }
                    instances += 1;
                }
            }
        }
    }
    Ok(PropositionReport {
        proposition: Proposition::ValidatorAgreement,
        instances,
        exhaustive: true,
    })
}

fn verify_connection_structure(gc: &GaloisConnection) -> Result<(), String> {
    let p = gc.p();
    let q = gc.q();
    let f = gc.f().table();
    let g = gc.g().table();

    for x in 0..p.size() {
        if f[g[f[x]]] != f[x] {
            return Err(format!("{}: f g f moves {x}", describe_gc(gc)));
        }
    }
    for y in 0..q.size() {
        if g[f[g[y]]] != g[y] {
            return Err(format!("{}: g f g moves {y}", describe_gc(gc)));
        }
    }

    let nodes_p: Vec<usize> = (0..p.size()).filter(|&x| g[f[x]] == x).collect();
    let nodes_q: Vec<usize> = (0..q.size()).filter(|&y| f[g[y]] == y).collect();
    for x in 0..p.size() {
        let in_image = (0..q.size()).any(|y| g[y] == x);
        if in_image != nodes_p.contains(&x) {
            return Err(format!(
                "{}: {x} image membership {in_image} but fixed-point membership {}",
                describe_gc(gc),
                !in_image
            ));
        }
    }
    for y in 0..q.size() {
        let in_image = (0..p.size()).any(|x| f[x] == y);
        if in_image != nodes_q.contains(&y) {
            return Err(format!(
                "{}: {y} image membership {in_image} but fixed-point membership {}",
                describe_gc(gc),
                !in_image
            ));
        }
    }

    // One node per fiber, greatest in its fiber, and the fiber blocks
    // ordered by any-member comparison mirror the node order.
    let fiber_check = |dom: &Poset,
                       out: &[usize],
                       back: &[usize]|
     -> Result<Vec<(Vec<usize>, usize)>, String> {
        let mut blocks: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for x in 0..dom.size() {
            if seen.contains(&out[x]) {
                continue;
            }
            seen.push(out[x]);
            let fiber: Vec<usize> = (0..dom.size()).filter(|&z| out[z] == out[x]).collect();
            let stars: Vec<usize> = fiber
                .iter()
                .copied()
                .filter(|&z| back[out[z]] == z)
                .collect();
            if stars.len() != 1 {
                return Err(format!(
                    "{}: fiber {:?} holds {} nodes",
                    describe_gc(gc),
                    fiber,
                    stars.len()
                ));
            }
            let star = stars[0];
            if !fiber.iter().all(|&z| dom.leq(z, star)) {
                return Err(format!(
                    "{}: node {star} not greatest in fiber {:?}",
                    describe_gc(gc),
                    fiber
                ));
            }
            blocks.push((fiber, star));
        }
        for (fa, sa) in &blocks {
            for (fb, sb) in &blocks {
                let by_members = fa.iter().any(|&a| fb.iter().any(|&b| dom.leq(a, b)));
                if by_members != dom.leq(*sa, *sb) {
                    return Err(format!(
                        "{}: blocks {:?} vs {:?} compare {by_members} but nodes {sa},{sb} \
                         compare {}",
                        describe_gc(gc),
                        fa,
                        fb,
                        !by_members
                    ));
                }
            }
        }
        Ok(blocks)
    };
    fiber_check(p, f, g)?;
    fiber_check(q, g, f)?;

    // Mutually inverse order-reversing bijections between the node sets.
    for &n in &nodes_p {
        if !nodes_q.contains(&f[n]) || g[f[n]] != n {
            return Err(format!("{}: f breaks on node {n}", describe_gc(gc)));
        }
    }
    for &m in &nodes_q {
        if !nodes_p.contains(&g[m]) || f[g[m]] != m {
            return Err(format!("{}: g breaks on node {m}", describe_gc(gc)));
        }
    }
    for &n1 in &nodes_p {
        for &n2 in &nodes_p {
            if p.leq(n1, n2) != q.leq(f[n2], f[n1]) {
                return Err(format!(
                    "{}: node images of {n1},{n2} fail to reverse order",
                    describe_gc(gc)
                ));
            }
        }
    }

    if galois::nodes(gc, Side::P) != nodes_p || galois::nodes(gc, Side::Q) != nodes_q {
        return Err(format!(
            "{}: fast node computation disagrees with fixed points",
            describe_gc(gc)
        ));
    }
    Ok(())
}

fn check_connection_structure(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let posets = enumerate_posets_upto(spec.max_poset_size)?;
    let mut instances = 0u64;
    for p in &posets {
        for q in &posets {
            for gc in ordering::enumerate_gcs(p, q).expect("within enumeration cap") {
                verify_connection_structure(&gc)
                    .map_err(|d| refuted(Proposition::ConnectionStructure, d))?;
                instances += 1;
            }
        }
    }
    Ok(PropositionReport {
        proposition: Proposition::ConnectionStructure,
        instances,
        exhaustive: true,
    })
}

fn check_pointwise_agreement(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let posets = enumerate_posets_upto(spec.max_poset_size)?;
    let mut instances = 0u64;
    for p in &posets {
        for q in &posets {
            let gcs = ordering::enumerate_gcs(p, q).expect("within enumeration cap");
            for a in &gcs {
                for b in &gcs {
                    let by_f = (0..p.size()).all(|x| q.leq(a.f_at(x), b.f_at(x)));
                    let by_g = (0..q.size()).all(|y| p.leq(a.g_at(y), b.g_at(y)));
                    let fast = ordering::le_pointwise(a, b)
                        .expect("same carriers")
                        .holds;
                    if by_f != by_g || by_g != fast {
                        return Err(refuted(
                            Proposition::PointwiseAgreement,
                            format!(
                                "left {} right {}: f-side {by_f}, g-side {by_g}, fast {fast}",
                                describe_gc(a),
                                describe_gc(b)
                            ),
                        ));
                    }
                    instances += 1;
                }
            }
        }
    }
    Ok(PropositionReport {
        proposition: Proposition::PointwiseAgreement,
        instances,
        exhaustive: true,
    })
}

fn check_relation_order_agreement(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let contexts: Vec<FormalContext> =
        all_contexts(spec.context_objects, spec.context_attributes).collect();
    let polarities: Vec<GaloisConnection> = contexts
        .iter()
        .map(|c| context::materialize_polarity(c).expect("within materialization cap"))
        .collect();
    let mut instances = 0u64;
    for (i, a) in contexts.iter().enumerate() {
        for (j, b) in contexts.iter().enumerate() {
            let naive = (0..a.object_count())
                .all(|g| a.row(g) & !b.row(g) == 0);
            let by_relation = ordering::le_relation(a, b).expect("same carriers").holds;
            let by_pointwise = ordering::le_pointwise(&polarities[i], &polarities[j])
                .expect("same carriers")
                .holds;
            if naive != by_relation || by_relation != by_pointwise {
                return Err(refuted(
                    Proposition::RelationOrderAgreement,
                    format!(
                        "rows {:?} vs {:?}: inclusion {naive}, relation {by_relation}, \
                         pointwise {by_pointwise}",
                        (0..a.object_count()).map(|g| a.row(g)).collect::<Vec<_>>(),
                        (0..b.object_count()).map(|g| b.row(g)).collect::<Vec<_>>()
                    ),
                ));
            }
            instances += 1;
        }
    }
    Ok(PropositionReport {
        proposition: Proposition::RelationOrderAgreement,
        instances,
        exhaustive: true,
    })
}

fn check_refinement_agreement(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let posets = enumerate_posets_upto(spec.max_poset_size)?;
    let mut instances = 0u64;
    for p in &posets {
        for q in &posets {
            let gcs = ordering::enumerate_gcs(p, q).expect("within enumeration cap");
            for a in &gcs {
                for b in &gcs {
                    verify_refinement_pair(p, q, a, b)
                        .map_err(|d| refuted(Proposition::RefinementAgreement, d))?;
                    instances += 1;
                }
            }
        }
    }
    Ok(PropositionReport {
        proposition: Proposition::RefinementAgreement,
        instances,
        exhaustive: true,
    })
}

/// The three readings of connection refinement on one side: the second
/// closure everywhere below the first, first-side nodes contained in
/// second-side nodes, and second-side fibers refining first-side fibers.
fn verify_refinement_pair(
    p: &Poset,
    q: &Poset,
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<(), String> {
    let (fa, ga) = (a.f().table(), a.g().table());
    let (fb, gb) = (b.f().table(), b.g().table());

    let p_closure = (0..p.size()).all(|x| p.leq(gb[fb[x]], ga[fa[x]]));
    let p_nodes = (0..p.size())
        .filter(|&x| ga[fa[x]] == x)
        .all(|x| gb[fb[x]] == x);
    let p_partition = (0..p.size()).all(|x| {
        (0..p.size()).all(|y| fb[x] != fb[y] || fa[x] == fa[y])
    });
    let fast_p = ordering::preceq_p(a, b).expect("same carriers").holds;
    if p_closure != p_nodes || p_nodes != p_partition || p_partition != fast_p {
        return Err(format!(
            "left {} right {}: closure {p_closure}, nodes {p_nodes}, partition \
             {p_partition}, fast {fast_p}",
            describe_gc(a),
            describe_gc(b)
        ));
    }

    let q_closure = (0..q.size()).all(|y| q.leq(fb[gb[y]], fa[ga[y]]));
    let q_nodes = (0..q.size())
        .filter(|&y| fa[ga[y]] == y)
        .all(|y| fb[gb[y]] == y);
    let q_partition = (0..q.size()).all(|y| {
        (0..q.size()).all(|z| gb[y] != gb[z] || ga[y] == ga[z])
    });
    let fast_q = ordering::preceq_q(a, b).expect("same carriers").holds;
    if q_closure != q_nodes || q_nodes != q_partition || q_partition != fast_q {
        return Err(format!(
            "left {} right {}: dual closure {q_closure}, nodes {q_nodes}, partition \
             {q_partition}, fast {fast_q}",
            describe_gc(a),
            describe_gc(b)
        ));
    }

    let fast_both = ordering::preceq_pq(a, b).expect("same carriers").holds;
    if fast_both != (p_closure && q_closure) {
        return Err(format!(
            "left {} right {}: two-sided comparison {fast_both} but sides give {} and {}",
            describe_gc(a),
            describe_gc(b),
            p_closure,
            q_closure
        ));
    }
    Ok(())
}

fn check_protoconcept_conditions(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let mut instances = 0u64;
    for ctx in all_contexts(spec.context_objects, spec.context_attributes) {
        let concepts = brute_concepts(&ctx)?;
        let pol = context::materialize_polarity(&ctx).expect("within materialization cap");
        let aii = galois::leaf_antiiso(&pol);
        let rows: Vec<u64> = (0..ctx.object_count()).map(|g| ctx.row(g)).collect();
        for c in 0..(1u64 << ctx.object_count()) {
            for d in 0..(1u64 << ctx.attribute_count()) {
                let h_c = naive_common_attributes(&ctx, c);
                let k_d = naive_common_objects(&ctx, d);
                let pre = d & !h_c == 0;
                if concepts::is_preconcept(&ctx, c, d) != pre {
                    return Err(refuted(
                        Proposition::ProtoconceptConditions,
                        format!("rows {rows:?} pair ({c},{d}): preconcept tests disagree"),
                    ));
                }
                let unique = concepts
                    .iter()
                    .filter(|cc| c & !cc.extent == 0 && d & !cc.intent == 0)
                    .count()
                    == 1;
                let leaf_pair = aii.forward[aii.p_leaves.leaf_of(c as usize)]
                    == aii.q_leaves.leaf_of(d as usize);
                let closes_objects = naive_common_objects(&ctx, h_c) == k_d;
                let closes_attributes = naive_common_attributes(&ctx, k_d) == h_c;
                let pair_concept = closes_objects && closes_attributes;
                let fast = concepts::is_protoconcept(&ctx, c, d);
                if pre {
                    let fast = fast.expect("preconcept accepted");
                    if unique != leaf_pair
                        || leaf_pair != pair_concept
                        || pair_concept != closes_objects
                        || closes_objects != closes_attributes
                        || closes_attributes != fast
                    {
                        return Err(refuted(
                            Proposition::ProtoconceptConditions,
                            format!(
                                "rows {rows:?} preconcept ({c},{d}): unique {unique}, \
                                 leaves {leaf_pair}, concept {pair_concept}, object \
                                 closure {closes_objects}, attribute closure \
                                 {closes_attributes}, fast {fast}"
                            ),
                        ));
                    }
                    instances += 1;
                } else {
                    if unique
                        || leaf_pair
                        || pair_concept
                        || closes_objects
                        || closes_attributes
                        || fast.is_ok()
                    {
                        return Err(refuted(
                            Proposition::ProtoconceptConditions,
                            format!(
                                "rows {rows:?} non-preconcept ({c},{d}) passes a criterion: \
                                 unique {unique}, leaves {leaf_pair}, object closure \
                                 {closes_objects}, attribute closure {closes_attributes}"
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(PropositionReport {
        proposition: Proposition::ProtoconceptConditions,
        instances,
        exhaustive: true,
    })
}

fn verify_characterization(
    src: &GaloisConnection,
    dst: &GaloisConnection,
    h: &OrderMap,
    k: &OrderMap,
) -> Result<(), String> {
    let (f1, g1) = (src.f().table(), src.g().table());
    let (f2, g2) = (dst.f().table(), dst.g().table());
    let (ht, kt) = (h.table(), k.table());
    let squares = (0..src.p().size()).all(|x| kt[f1[x]] == f2[ht[x]])
        && (0..src.q().size()).all(|y| ht[g1[y]] == g2[kt[y]]);
    let ch = crate::category::characterize_morphism(src, dst, h, k)
        .map_err(|e| format!("characterization rejected shaped maps: {e}"))?;
    if ch.squares.holds != squares {
        return Err(format!(
            "src {} dst {} h{ht:?} k{kt:?}: literal squares {squares}, fast {}",
            describe_gc(src),
            describe_gc(dst),
            ch.squares.holds
        ));
    }
    if !ch.consistent() {
        return Err(format!(
            "src {} dst {} h{ht:?} k{kt:?}: squares {}, structure {}, fixed point {}",
            describe_gc(src),
            describe_gc(dst),
            ch.squares.holds,
            ch.structural_holds(),
            ch.common_fixed_point.holds
        ));
    }
    Ok(())
}

fn check_morphism_characterization(spec: &SweepSpec) -> Result<PropositionReport, OracleError> {
    let mut instances = 0u64;

    // Exhaustive tier over carriers of at most two elements.
    let small = enumerate_posets_upto(spec.max_poset_size.min(2))?;
    let mut connections: Vec<GaloisConnection> = Vec::new();
    for p in &small {
        for q in &small {
            connections.extend(ordering::enumerate_gcs(p, q).expect("within enumeration cap"));
        }
    }
    for src in &connections {
        for dst in &connections {
            let hs: Vec<OrderMap> = all_maps(src.p().size(), dst.p().size())
                .into_iter()
                .map(|t| OrderMap::new(t, dst.p().size()).expect("table fits"))
                .collect();
            let ks: Vec<OrderMap> = all_maps(src.q().size(), dst.q().size())
                .into_iter()
                .map(|t| OrderMap::new(t, dst.q().size()).expect("table fits"))
                .collect();
            for h in &hs {
                for k in &ks {
                    verify_characterization(src, dst, h, k)
                        .map_err(|d| refuted(Proposition::MorphismCharacterization, d))?;
                    instances += 1;
                }
            }
        }
    }
    if spec.max_poset_size <= 2 {
        return Ok(PropositionReport {
            proposition: Proposition::MorphismCharacterization,
            instances,
            exhaustive: true,
        });
    }

    // Sampled tier: random connection pairs over nonempty carriers up
    // to the bound, with uniformly random map tables.
    let reps: Vec<Poset> = enumerate_posets_upto(spec.max_poset_size)?
        .into_iter()
        .filter(|p| p.size() >= 1)
        .collect();
    let n = reps.len();
    let mut cache: Vec<Option<Vec<GaloisConnection>>> = vec![None; n * n];
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut done = 0u64;
    while done < spec.samples {
        let (pi, qi) = (rng.random_range(0..n), rng.random_range(0..n));
        let (pj, qj) = (rng.random_range(0..n), rng.random_range(0..n));
        for slot in [pi * n + qi, pj * n + qj] {
            if cache[slot].is_none() {
                cache[slot] = Some(
                    ordering::enumerate_gcs(&reps[slot / n], &reps[slot % n])
                        .expect("within enumeration cap"),
                );
            }
        }
        let srcs = cache[pi * n + qi].as_ref().expect("filled");
        let dsts = cache[pj * n + qj].as_ref().expect("filled");
        if srcs.is_empty() || dsts.is_empty() {
            continue;
        }
        let src = &srcs[rng.random_range(0..srcs.len())];
        let dst = &dsts[rng.random_range(0..dsts.len())];
        let h_table: Vec<usize> = (0..src.p().size())
            .map(|_| rng.random_range(0..dst.p().size()))
            .collect();
        let k_table: Vec<usize> = (0..src.q().size())
            .map(|_| rng.random_range(0..dst.q().size()))
            .collect();
        let h = OrderMap::new(h_table, dst.p().size()).expect("table fits");
        let k = OrderMap::new(k_table, dst.q().size()).expect("table fits");
        verify_characterization(src, dst, &h, &k)
            .map_err(|d| refuted(Proposition::MorphismCharacterization, d))?;
        instances += 1;
        done += 1;
    }
    Ok(PropositionReport {
        proposition: Proposition::MorphismCharacterization,
        instances,
        exhaustive: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::validate_poset;
    use crate::samples;

    #[test]
    fn naive_derivations_match_definition() {
        let ctx = samples::toy_context();
        assert_eq!(naive_common_attributes(&ctx, 0b011), 0b010);
        assert_eq!(naive_common_attributes(&ctx, 0), 0b111);
        assert_eq!(naive_common_objects(&ctx, 0b010), 0b011);
        assert_eq!(naive_common_objects(&ctx, 0), 0b111);
    }

    #[test]
    fn brute_concepts_on_the_toy_context() {
        let ctx = samples::toy_context();
        let cs = brute_concepts(&ctx).unwrap();
        let expected = vec![
            Concept { extent: 0b000, intent: 0b111 },
            Concept { extent: 0b001, intent: 0b011 },
            Concept { extent: 0b011, intent: 0b010 },
            Concept { extent: 0b100, intent: 0b100 },
            Concept { extent: 0b111, intent: 0b000 },
        ];
        assert_eq!(cs, expected);
    }

    #[test]
    fn brute_concept_edge_relations() {
        let empty = FormalContext::from_pairs(2, 2, &[]).unwrap();
        let cs = brute_concepts(&empty).unwrap();
        assert_eq!(
            cs,
            vec![
                Concept { extent: 0b00, intent: 0b11 },
                Concept { extent: 0b11, intent: 0b00 },
            ]
        );
        let full = FormalContext::from_pairs(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let cs = brute_concepts(&full).unwrap();
        assert_eq!(cs, vec![Concept { extent: 0b11, intent: 0b11 }]);
    }

    #[test]
    fn preconcepts_of_the_toy_context_include_concepts() {
        let ctx = samples::toy_context();
        let pre = brute_preconcepts(&ctx).unwrap();
        for c in brute_concepts(&ctx).unwrap() {
            assert!(pre.contains(&(c.extent, c.intent)));
        }
        assert!(pre.contains(&(0, 0)));
        // g3 does not have m1.
        assert!(!pre.contains(&(0b100, 0b001)));
    }

    #[test]
    fn poset_counts_by_size() {
        // Known tallies of partial orders up to isomorphism.
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_posets(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16]);
        for p in enumerate_posets_upto(4).unwrap() {
            assert!(validate_poset(&p).is_valid());
        }
    }

    #[test]
    fn map_enumeration() {
        assert_eq!(all_maps(0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(all_maps(2, 0), Vec::<Vec<usize>>::new());
        assert_eq!(all_maps(2, 2), vec![
            vec![0, 0],
            vec![0, 1],
            vec![1, 0],
            vec![1, 1]
        ]);
    }

    #[test]
    fn context_enumeration_is_exhaustive_and_distinct() {
        let all: Vec<FormalContext> = all_contexts(2, 2).collect();
        assert_eq!(all.len(), 16);
        for (i, a) in all.iter().enumerate() {
            for b in &all[..i] {
                assert!(!a.same_incidence(b));
            }
        }
    }

    fn tiny_spec(prop: Proposition) -> SweepSpec {
        SweepSpec {
            max_poset_size: 2,
            context_objects: 2,
            context_attributes: 2,
            samples: 50,
            seed: 11,
            propositions: vec![prop],
        }
    }

    #[test]
    fn sweep_runs_every_proposition_at_small_sizes() {
        for prop in Proposition::ALL {
            let report = sweep(&tiny_spec(prop)).unwrap();
            assert_eq!(report.reports.len(), 1);
            assert_eq!(report.reports[0].proposition, prop);
            assert!(report.reports[0].instances > 0, "{prop} checked nothing");
            assert!(report.reports[0].exhaustive);
        }
    }

    #[test]
    fn sweep_counts_connections_between_two_chains() {
        let spec = SweepSpec {
            propositions: vec![Proposition::ConnectionStructure],
            ..tiny_spec(Proposition::ConnectionStructure)
        };
        let report = sweep(&spec).unwrap();
        // Connection totals over all poset pairs with at most two
        // elements: one empty-empty, one singleton-singleton, one each
        // between the singleton and the two-chain, two within each
        // two-element order.
        assert_eq!(report.reports[0].instances, 8);
    }

    #[test]
    fn sweep_samples_morphisms_above_the_exhaustive_tier() {
        let spec = SweepSpec {
            max_poset_size: 3,
            samples: 40,
            propositions: vec![Proposition::MorphismCharacterization],
            ..SweepSpec::default()
        };
        let report = sweep(&spec).unwrap();
        assert!(!report.reports[0].exhaustive);
        assert!(report.reports[0].instances > 40);
        let again = sweep(&spec).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn sweep_rejects_oversized_bounds() {
        let mut spec = SweepSpec::default();
        spec.max_poset_size = 5;
        assert_eq!(sweep(&spec), Err(OracleError::TooLarge { limit: 4, got: 5 }));
        spec.max_poset_size = 3;
        spec.context_attributes = 4;
        assert_eq!(sweep(&spec), Err(OracleError::TooLarge { limit: 3, got: 4 }));
    }

    #[test]
    fn proposition_names_round_trip() {
        for prop in Proposition::ALL {
            assert_eq!(prop.name().parse::<Proposition>().unwrap(), prop);
        }
        assert!(matches!(
            "nonsense".parse::<Proposition>(),
            Err(OracleError::UnknownProposition(_))
        ));
    }

    #[test]
    fn sweep_reports_serialize_round_trip() {
        let report = sweep(&tiny_spec(Proposition::ValidatorAgreement)).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: SweepReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.total_instances(), report.total_instances());
        assert!(text.contains("validator-agreement"));
    }
}
