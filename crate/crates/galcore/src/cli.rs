//! Command-line driver. Every subcommand reads documented file formats
//! (`.cxt` contexts, JSON posets and connections, N-Triples), prints
//! deterministic text or JSON, and maps failures to exit codes: 0 for
//! success, 1 for domain errors in well-formed requests, 2 for usage
//! errors.

use crate::concepts::{
    self, enumerate_concepts, gm_quotient, precon_interval, precon_members, Concept,
};
use crate::context::{self, materialize_polarity, parse_cxt, write_cxt, FormalContext};
use crate::dot::export_dot;
use crate::galois::{self, validate_gc, validate_gc_adjoint, GaloisConnection};
use crate::json;
use crate::ordering::{self, OrderVerdict};
use crate::oracle::{self, Proposition, SweepSpec};
use crate::poset::OrderMap;
use crate::rdf;
use crate::report::Side;
use crate::{bits, category};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug)]
enum CliError {
    Domain(String),
    Usage(String),
}

macro_rules! domain_from {
    ($($ty:ty),* $(,)?) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::Domain(e.to_string())
            }
        })*
    };
}

domain_from!(
    std::io::Error,
    crate::context::ContextError,
    crate::concepts::ConceptError,
    crate::json::JsonError,
    crate::rdf::RdfError,
    crate::poset::PosetError,
    crate::ordering::OrderingError,
    crate::category::CategoryError,
    crate::oracle::OracleError,
    serde_json::Error,
);

#[derive(Parser)]
#[command(name = "galcore", version, about = "finite Galois connection toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate, print, or normalize a context file
    Ctx {
        #[command(subcommand)]
        action: CtxAction,
    },
    /// Enumerate the concept lattice of a context
    Concepts {
        file: PathBuf,
        /// Write the covering-pair digraph to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Emit the lattice as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Inspect one subset pair of a context
    Preconcept {
        file: PathBuf,
        /// Object labels, comma separated
        #[arg(long, default_value = "")]
        extent: String,
        /// Attribute labels, comma separated
        #[arg(long, default_value = "")]
        intent: String,
        /// List the concepts containing the pair
        #[arg(long)]
        members: bool,
        /// Print the bounding concept interval
        #[arg(long)]
        interval: bool,
        /// Test whether exactly one concept contains the pair
        #[arg(long)]
        proto: bool,
    },
    /// Print the quotient of preconcepts under shared derived sets
    Gm {
        file: PathBuf,
        /// List every subset in each class (exponential, carriers <= 4)
        #[arg(long)]
        exhaustive: bool,
    },
    /// Compare two contexts or two connections
    Order {
        /// Left context file
        #[arg(long)]
        a: Option<PathBuf>,
        /// Right context file
        #[arg(long)]
        b: Option<PathBuf>,
        /// Left connection file
        #[arg(long)]
        gc_a: Option<PathBuf>,
        /// Right connection file
        #[arg(long)]
        gc_b: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: OrderKind,
    },
    /// Validate a connection file and report its structure
    Galcheck {
        #[arg(long)]
        gc: PathBuf,
    },
    /// Embed a connection into the polarity of its element relation
    Embed {
        #[arg(long)]
        gc: PathBuf,
        /// Write the powerset polarity as a connection file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the element relation as a context file
        #[arg(long)]
        relation: Option<PathBuf>,
    },
    /// Check a map pair between two connections
    Morphism {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        dst: PathBuf,
        /// P-side map as comma-separated target indices
        #[arg(long, default_value = "")]
        h: String,
        /// Q-side map as comma-separated target indices
        #[arg(long, default_value = "")]
        k: String,
    },
    /// Project triple data into contexts and schemas
    Rdf {
        #[command(subcommand)]
        action: RdfAction,
    },
    /// Run certification sweeps and print a JSON report
    Oracle {
        /// `all` or a comma-separated list of proposition names
        #[arg(long, default_value = "all")]
        sweep: String,
        /// Context bounds as OBJECTSxATTRIBUTES
        #[arg(long, default_value = "3x3")]
        max: String,
        /// Largest poset carrier to enumerate
        #[arg(long, default_value_t = 3)]
        poset_max: usize,
        /// Sample count for non-exhaustive modes
        #[arg(long, default_value_t = 2000)]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CtxAction {
    /// Parse and report carrier sizes
    Validate { file: PathBuf },
    /// Print the incidence grid
    Show { file: PathBuf },
    /// Parse and re-serialize to standard output
    Roundtrip { file: PathBuf },
}

#[derive(Subcommand)]
enum RdfAction {
    /// Project subject/predicate incidence into a context file
    Ingest {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the schema classes of a context
    Schema {
        file: PathBuf,
        /// Render the class lattice as DOT instead of text
        #[arg(long)]
        dot: bool,
    },
    /// Compare the schemas of two triple files
    Diff { old: PathBuf, new: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderKind {
    /// f maps compared pointwise
    Pointwise,
    /// incidence relation inclusion
    Relation,
    /// closure domination on the P side
    P,
    /// closure domination on the Q side
    Q,
    /// closure domination on both sides
    Pq,
    /// node containment on both sides
    Nodes,
}

/// Parses argv and executes one subcommand, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = write!(out, "{e}");
                return 0;
            }
            _ => {
                let _ = write!(err, "{e}");
                return 2;
            }
        },
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Ctx { action } => cmd_ctx(action, out),
        Command::Concepts { file, dot, json } => cmd_concepts(&file, dot.as_deref(), json, out),
        Command::Preconcept {
            file,
            extent,
            intent,
            members,
            interval,
            proto,
        } => cmd_preconcept(&file, &extent, &intent, members, interval, proto, out),
        Command::Gm { file, exhaustive } => cmd_gm(&file, exhaustive, out),
        Command::Order { a, b, gc_a, gc_b, kind } => cmd_order(a, b, gc_a, gc_b, kind, out),
        Command::Galcheck { gc } => cmd_galcheck(&gc, out),
        Command::Embed { gc, out: target, relation } => {
            cmd_embed(&gc, target.as_deref(), relation.as_deref(), out)
        }
        Command::Morphism { src, dst, h, k } => cmd_morphism(&src, &dst, &h, &k, out),
        Command::Rdf { action } => cmd_rdf(action, out),
        Command::Oracle {
            sweep,
            max,
            poset_max,
            samples,
            seed,
        } => cmd_oracle(&sweep, &max, poset_max, samples, seed, out),
    }
}

fn read_context(path: &std::path::Path) -> Result<FormalContext, CliError> {
    Ok(parse_cxt(&fs::read_to_string(path)?)?)
}

fn read_connection(path: &std::path::Path) -> Result<GaloisConnection, CliError> {
    Ok(json::parse_gc(&fs::read_to_string(path)?)?)
}

fn read_valid_connection(path: &std::path::Path) -> Result<GaloisConnection, CliError> {
    let gc = read_connection(path)?;
    let report = validate_gc(&gc);
    if !report.is_valid() {
        return Err(CliError::Domain(format!(
            "{} is not a Galois connection: {report}",
            path.display()
        )));
    }
    Ok(gc)
}

fn concept_line(ctx: &FormalContext, c: Concept) -> String {
    format!(
        "extent {} intent {}",
        bits::format_subset(c.extent, ctx.object_labels()),
        bits::format_subset(c.intent, ctx.attribute_labels())
    )
}

fn cmd_ctx(action: CtxAction, out: &mut dyn Write) -> Result<(), CliError> {
    match action {
        CtxAction::Validate { file } => {
            let ctx = read_context(&file)?;
            let incidences: u32 = (0..ctx.object_count())
                .map(|g| ctx.row(g).count_ones())
                .sum();
            writeln!(
                out,
                "ok: {} objects, {} attributes, {} incidences",
                ctx.object_count(),
                ctx.attribute_count(),
                incidences
            )?;
        }
        CtxAction::Show { file } => {
            let ctx = read_context(&file)?;
            writeln!(
                out,
                "{} objects, {} attributes",
                ctx.object_count(),
                ctx.attribute_count()
            )?;
            writeln!(out, "attributes: {}", ctx.attribute_labels().join(" "))?;
            let width = ctx
                .object_labels()
                .iter()
                .map(|l| l.len())
                .max()
                .unwrap_or(0);
            for g in 0..ctx.object_count() {
                let cells: String = (0..ctx.attribute_count())
                    .map(|m| if ctx.incident(g, m) { 'X' } else { '.' })
                    .collect();
                writeln!(out, "{:<width$} {}", ctx.object_labels()[g], cells)?;
            }
        }
        CtxAction::Roundtrip { file } => {
            let ctx = read_context(&file)?;
            write!(out, "{}", write_cxt(&ctx))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ConceptJson {
    extent: Vec<String>,
    intent: Vec<String>,
}

fn cmd_concepts(
    file: &std::path::Path,
    dot: Option<&std::path::Path>,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ctx = read_context(file)?;
    let lattice = enumerate_concepts(&ctx);
    if let Some(path) = dot {
        fs::write(path, export_dot(&ctx, &lattice))?;
    }
    if as_json {
        let items: Vec<ConceptJson> = lattice
            .concepts()
            .iter()
            .map(|c| ConceptJson {
                extent: bits::elems(c.extent)
                    .into_iter()
                    .map(|g| ctx.object_labels()[g].clone())
                    .collect(),
                intent: bits::elems(c.intent)
                    .into_iter()
                    .map(|m| ctx.attribute_labels()[m].clone())
                    .collect(),
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&items)?)?;
    } else {
        writeln!(out, "{} concepts", lattice.len())?;
        for (i, &c) in lattice.concepts().iter().enumerate() {
            writeln!(out, "{i}: {}", concept_line(&ctx, c))?;
        }
    }
    Ok(())
}

fn labels_to_mask(
    raw: &str,
    labels: &[String],
    which: &str,
) -> Result<u64, CliError> {
    let mut mask = 0u64;
    for name in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match labels.iter().position(|l| l == name) {
            Some(i) => mask |= 1 << i,
            None => {
                return Err(CliError::Domain(format!("unknown {which} label {name:?}")))
            }
        }
    }
    Ok(mask)
}

fn cmd_preconcept(
    file: &std::path::Path,
    extent: &str,
    intent: &str,
    members: bool,
    interval: bool,
    proto: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let ctx = read_context(file)?;
    let c = labels_to_mask(extent, ctx.object_labels(), "object")?;
    let d = labels_to_mask(intent, ctx.attribute_labels(), "attribute")?;
    writeln!(
        out,
        "pair: extent {} intent {}",
        bits::format_subset(c, ctx.object_labels()),
        bits::format_subset(d, ctx.attribute_labels())
    )?;
    let is_pre = concepts::is_preconcept(&ctx, c, d);
    writeln!(out, "preconcept: {is_pre}")?;
    if interval {
        let (bottom, top) = precon_interval(&ctx, c, d)?;
        writeln!(out, "interval bottom: {}", concept_line(&ctx, bottom))?;
        writeln!(out, "interval top: {}", concept_line(&ctx, top))?;
    }
    if members {
        let list = precon_members(&ctx, c, d)?;
        writeln!(out, "members: {}", list.len())?;
        for m in list {
            writeln!(out, "  {}", concept_line(&ctx, m))?;
        }
    }
    if proto {
        writeln!(out, "protoconcept: {}", concepts::is_protoconcept(&ctx, c, d)?)?;
    }
    Ok(())
}

fn cmd_gm(file: &std::path::Path, exhaustive: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = read_context(file)?;
    if exhaustive && (ctx.object_count() > 4 || ctx.attribute_count() > 4) {
        return Err(CliError::Domain(
            "exhaustive class listings are limited to 4 objects and 4 attributes".into(),
        ));
    }
    let quotient = gm_quotient(&ctx);
    writeln!(out, "{} classes", quotient.len())?;
    for (i, &(a, b)) in quotient.elements().iter().enumerate() {
        writeln!(
            out,
            "{i}: extent {} intent {}",
            bits::format_subset(a, ctx.object_labels()),
            bits::format_subset(b, ctx.attribute_labels())
        )?;
        if exhaustive {
            let render = |masks: Vec<u64>, labels: &[String]| {
                masks
                    .into_iter()
                    .map(|m| bits::format_subset(m, labels))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(
                out,
                "  extent leaf: {}",
                render(concepts::leaf_members_objects(&ctx, a), ctx.object_labels())
            )?;
            writeln!(
                out,
                "  intent leaf: {}",
                render(concepts::leaf_members_attributes(&ctx, b), ctx.attribute_labels())
            )?;
        }
    }
    writeln!(out, "order:")?;
    for i in 0..quotient.len() {
        for j in 0..quotient.len() {
            if i != j && quotient.leq(i, j) {
                writeln!(out, "  {i} <= {j}")?;
            }
        }
    }
    Ok(())
}

fn compare_connections(
    kind: OrderKind,
    a: &GaloisConnection,
    b: &GaloisConnection,
) -> Result<OrderVerdict, CliError> {
    Ok(match kind {
        OrderKind::Pointwise => ordering::le_pointwise(a, b)?,
        OrderKind::P => ordering::preceq_p(a, b)?,
        OrderKind::Q => ordering::preceq_q(a, b)?,
        OrderKind::Pq => ordering::preceq_pq(a, b)?,
        OrderKind::Nodes => ordering::sq_nodes(a, b)?,
        OrderKind::Relation => unreachable!("relation kind handled on contexts"),
    })
}

fn cmd_order(
    a: Option<PathBuf>,
    b: Option<PathBuf>,
    gc_a: Option<PathBuf>,
    gc_b: Option<PathBuf>,
    kind: OrderKind,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let verdict = match (a, b, gc_a, gc_b) {
        (Some(a), Some(b), None, None) => {
            let ca = read_context(&a)?;
            let cb = read_context(&b)?;
            match kind {
                OrderKind::Relation => ordering::le_relation(&ca, &cb)?,
                _ => {
                    let pa = materialize_polarity(&ca)?;
                    let pb = materialize_polarity(&cb)?;
                    compare_connections(kind, &pa, &pb)?
                }
            }
        }
        (None, None, Some(a), Some(b)) => {
            let ga = read_valid_connection(&a)?;
            let gb = read_valid_connection(&b)?;
            match kind {
                OrderKind::Relation => {
                    let ra = context::relation_of(&ga)?;
                    let rb = context::relation_of(&gb)?;
                    ordering::le_relation(&ra, &rb)?
                }
                _ => compare_connections(kind, &ga, &gb)?,
            }
        }
        _ => {
            return Err(CliError::Usage(
                "provide either --a and --b context files or --gc-a and --gc-b \
                 connection files"
                    .into(),
            ))
        }
    };
    writeln!(out, "holds: {}", verdict.holds)?;
    writeln!(out, "verdict: {verdict}")?;
    Ok(())
}

fn write_report_line(
    out: &mut dyn Write,
    name: &str,
    value: impl Display,
) -> Result<(), CliError> {
    let text = value.to_string();
    write!(out, "{name}: {text}")?;
    if !text.ends_with('\n') {
        writeln!(out)?;
    }
    Ok(())
}

fn cmd_galcheck(path: &std::path::Path, out: &mut dyn Write) -> Result<(), CliError> {
    let gc = read_connection(path)?;
    write_report_line(out, "structural validation", validate_gc(&gc))?;
    write_report_line(out, "adjoint definition", validate_gc_adjoint(&gc))?;
    for side in [Side::P, Side::Q] {
        let nodes = bits::from_elems(galois::nodes(&gc, side).into_iter());
        writeln!(out, "nodes {side}: {}", bits::format_indices(nodes))?;
    }
    for side in [Side::P, Side::Q] {
        let decomposition = galois::leaves(&gc, side);
        let rendered: Vec<String> = decomposition
            .leaves
            .iter()
            .zip(&decomposition.nodes)
            .map(|(members, node)| {
                format!(
                    "{}:{node}",
                    bits::format_indices(bits::from_elems(members.iter().copied()))
                )
            })
            .collect();
        writeln!(out, "leaves {side}: {}", rendered.join(" "))?;
    }
    writeln!(out, "perfect: {}", galois::is_perfect(&gc))?;
    Ok(())
}

fn cmd_embed(
    path: &std::path::Path,
    target: Option<&std::path::Path>,
    relation: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let gc = read_valid_connection(path)?;
    let (polarity, inclusion) = category::embed_into_polarity(&gc)?;
    writeln!(
        out,
        "source: {} P-elements, {} Q-elements",
        gc.p().size(),
        gc.q().size()
    )?;
    writeln!(
        out,
        "polarity: {} P-subsets, {} Q-subsets",
        polarity.p().size(),
        polarity.q().size()
    )?;
    writeln!(out, "inclusion morphism: valid")?;
    writeln!(out, "monomorphism: {}", category::is_monomorphism(&inclusion))?;
    if let Some(path) = target {
        fs::write(path, json::render_gc(&polarity))?;
        writeln!(out, "wrote polarity to {}", path.display())?;
    }
    if let Some(path) = relation {
        fs::write(path, write_cxt(&category::embedding_relation(&gc)))?;
        writeln!(out, "wrote relation to {}", path.display())?;
    }
    Ok(())
}

fn parse_index_list(raw: &str, which: &str) -> Result<Vec<usize>, CliError> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{which} entry {s:?} is not an index")))
        })
        .collect()
}

fn cmd_morphism(
    src: &std::path::Path,
    dst: &std::path::Path,
    h: &str,
    k: &str,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let src = read_valid_connection(src)?;
    let dst = read_valid_connection(dst)?;
    let h = OrderMap::new(parse_index_list(h, "--h")?, dst.p().size())?;
    let k = OrderMap::new(parse_index_list(k, "--k")?, dst.q().size())?;
    let ch = category::characterize_morphism(&src, &dst, &h, &k)?;
    write_report_line(out, "squares", ch.squares)?;
    write_report_line(out, "node preservation", ch.nodes)?;
    write_report_line(out, "level preservation", ch.levels)?;
    write_report_line(out, "anti-isomorphism pairs", ch.antiiso_pairs)?;
    write_report_line(out, "common fixed point", ch.common_fixed_point)?;
    writeln!(out, "morphism: {}", ch.squares.holds)?;
    if ch.squares.holds {
        let morphism = category::GalMorphism::new(src, dst, h, k)?;
        writeln!(out, "monomorphism: {}", category::is_monomorphism(&morphism))?;
    }
    Ok(())
}

fn cmd_rdf(action: RdfAction, out: &mut dyn Write) -> Result<(), CliError> {
    match action {
        RdfAction::Ingest { file, out: target } => {
            let triples = rdf::parse_ntriples(
                &fs::read_to_string(&file)?,
                file.display().to_string(),
            )?;
            let ctx = rdf::context_from_triples(&triples)?;
            fs::write(&target, write_cxt(&ctx))?;
            writeln!(
                out,
                "parsed {} triples: {} subjects, {} predicates",
                triples.triples.len(),
                ctx.object_count(),
                ctx.attribute_count()
            )?;
            writeln!(out, "wrote {}", target.display())?;
        }
        RdfAction::Schema { file, dot } => {
            let ctx = read_context(&file)?;
            let schema = rdf::schema_classes(&ctx);
            if dot {
                write!(out, "{}", export_dot(&ctx, schema.lattice()))?;
            } else {
                let extents = schema.extents();
                writeln!(out, "{} classes", extents.len())?;
                for (i, &e) in extents.iter().enumerate() {
                    writeln!(out, "{i}: {}", bits::format_subset(e, ctx.object_labels()))?;
                }
                writeln!(out, "subsumptions:")?;
                for (lo, hi) in schema.subsumptions() {
                    writeln!(out, "  {lo} < {hi}")?;
                }
            }
        }
        RdfAction::Diff { old, new } => {
            let parse = |path: &PathBuf| -> Result<_, CliError> {
                Ok(rdf::parse_ntriples(
                    &fs::read_to_string(path)?,
                    path.display().to_string(),
                )?)
            };
            let old_ctx = rdf::context_from_triples(&parse(&old)?)?;
            let new_ctx = rdf::context_from_triples(&parse(&new)?)?;
            let diff = rdf::schema_diff(&old_ctx, &new_ctx)?;
            writeln!(out, "subjects: {}", diff.subjects.len())?;
            writeln!(out, "predicates: {}", diff.predicates.len())?;
            writeln!(
                out,
                "classes: {} old, {} new",
                diff.class_counts.0, diff.class_counts.1
            )?;
            for e in &diff.added {
                writeln!(out, "added: {}", bits::format_subset(*e, &diff.subjects))?;
            }
            for e in &diff.removed {
                writeln!(out, "removed: {}", bits::format_subset(*e, &diff.subjects))?;
            }
            writeln!(out, "preserved: {}", diff.preserved.len())?;
            write_report_line(out, "old relation <= new", diff.old_le_new)?;
            write_report_line(out, "new relation <= old", diff.new_le_old)?;
            if let Some(v) = diff.preceq_old_new {
                write_report_line(out, "old closures dominated by new", v)?;
            }
            if let Some(v) = diff.preceq_new_old {
                write_report_line(out, "new closures dominated by old", v)?;
            }
            writeln!(out, "unchanged: {}", diff.is_unchanged())?;
        }
    }
    Ok(())
}

fn parse_dims(raw: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--max expects OBJECTSxATTRIBUTES, got {raw:?}"));
    let (g, m) = raw.split_once('x').ok_or_else(bad)?;
    Ok((
        g.trim().parse().map_err(|_| bad())?,
        m.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_sweep_names(raw: &str) -> Result<Vec<Proposition>, CliError> {
    if raw.trim() == "all" {
        return Ok(Proposition::ALL.to_vec());
    }
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            name.parse::<Proposition>()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn cmd_oracle(
    sweep: &str,
    max: &str,
    poset_max: usize,
    samples: u64,
    seed: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (context_objects, context_attributes) = parse_dims(max)?;
    let spec = SweepSpec {
        max_poset_size: poset_max,
        context_objects,
        context_attributes,
        samples,
        seed,
        propositions: parse_sweep_names(sweep)?,
    };
    let report = oracle::sweep(&spec)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    Ok(())
}
