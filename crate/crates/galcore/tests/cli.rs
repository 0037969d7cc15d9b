//! Driver-level tests: exit codes, output determinism, and the file
//! formats each subcommand reads and writes.

use galcore::context::{parse_cxt, write_cxt};
use galcore::galois::validate_gc;
use galcore::oracle::SweepReport;
use galcore::{cli, json, samples};
use std::fs;
use std::path::{Path, PathBuf};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("galcore".to_string()).chain(args.iter().map(|s| s.to_string()));
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is utf-8"),
        String::from_utf8(err).expect("stderr is utf-8"),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("galcore-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

fn toy_cxt(dir: &Path) -> PathBuf {
    let path = dir.join("toy.cxt");
    fs::write(&path, write_cxt(&samples::toy_context())).expect("write context");
    path
}

#[test]
fn concepts_lists_the_lattice_and_is_deterministic() {
    let dir = scratch("concepts");
    let path = toy_cxt(&dir);
    let (code, out, err) = run(&["concepts", path.to_str().unwrap()]);
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.starts_with("5 concepts\n"));
    assert!(out.contains("0: extent {g1,g2,g3} intent {}"));
    assert!(out.contains("4: extent {} intent {m1,m2,m3}"));
    let again = run(&["concepts", path.to_str().unwrap()]);
    assert_eq!((code, out, err), again, "repeated runs must match byte for byte");
}

#[test]
fn concepts_json_and_dot_outputs() {
    let dir = scratch("concepts-json");
    let path = toy_cxt(&dir);
    let dot_path = dir.join("lattice.dot");
    let (code, out, _) = run(&[
        "concepts",
        path.to_str().unwrap(),
        "--json",
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&out).expect("stdout is JSON");
    assert_eq!(parsed.as_array().unwrap().len(), 5);
    assert_eq!(parsed[0]["extent"], serde_json::json!(["g1", "g2", "g3"]));
    let dot = fs::read_to_string(&dot_path).expect("dot file written");
    let expected = galcore::dot::export_dot(
        &samples::toy_context(),
        &galcore::concepts::enumerate_concepts(&samples::toy_context()),
    );
    assert_eq!(dot, expected);
}

#[test]
fn unknown_subcommands_and_bad_flags_are_usage_errors() {
    let (code, _, err) = run(&["transmogrify"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["order", "--kind", "sideways"]);
    assert_eq!(code, 2);
    let dir = scratch("usage");
    let path = toy_cxt(&dir);
    let (code, _, err) = run(&["order", "--a", path.to_str().unwrap(), "--kind", "pq"]);
    assert_eq!(code, 2);
    assert!(err.contains("usage error"));
}

#[test]
fn help_prints_to_stdout_with_success() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("galcore"));
    assert!(out.contains("concepts"));
}

#[test]
fn malformed_context_files_are_domain_errors_with_line_numbers() {
    let dir = scratch("malformed");
    let path = dir.join("broken.cxt");
    fs::write(&path, "B\n\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\nXq\n").unwrap();
    let (code, _, err) = run(&["ctx", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("12"), "stderr should name line 12: {err}");
    let (code, _, _) = run(&["concepts", dir.join("missing.cxt").to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn ctx_roundtrip_is_identity_on_normalized_files() {
    let dir = scratch("roundtrip");
    let path = toy_cxt(&dir);
    let original = fs::read_to_string(&path).unwrap();
    let (code, out, _) = run(&["ctx", "roundtrip", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, original);
    let (code, out, _) = run(&["ctx", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok: 3 objects, 3 attributes, 4 incidences\n");
}

#[test]
fn preconcept_report_shows_interval_members_and_protoconcept() {
    let dir = scratch("preconcept");
    let path = toy_cxt(&dir);
    let (code, out, _) = run(&[
        "preconcept",
        path.to_str().unwrap(),
        "--extent",
        "g1",
        "--intent",
        "m2",
        "--interval",
        "--members",
        "--proto",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("preconcept: true"));
    assert!(out.contains("interval bottom: extent {g1} intent {m1,m2}"));
    assert!(out.contains("interval top: extent {g1,g2} intent {m2}"));
    assert!(out.contains("members: 2"));
    assert!(out.contains("protoconcept: false"));
}

#[test]
fn preconcept_rejects_unknown_labels_and_non_preconcepts() {
    let dir = scratch("preconcept-err");
    let path = toy_cxt(&dir);
    let (code, _, err) = run(&[
        "preconcept",
        path.to_str().unwrap(),
        "--extent",
        "g9",
        "--intent",
        "m1",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown object label"));
    let (code, out, err) = run(&[
        "preconcept",
        path.to_str().unwrap(),
        "--extent",
        "g3",
        "--intent",
        "m1",
        "--interval",
    ]);
    assert_eq!(code, 1, "asking for the interval of a non-preconcept fails");
    assert!(out.contains("preconcept: false"));
    assert!(err.contains("error"));
}

#[test]
fn gm_prints_classes_and_order() {
    let dir = scratch("gm");
    let path = toy_cxt(&dir);
    let (code, out, _) = run(&["gm", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("13 classes\n"));
    assert!(out.contains("order:"));
    assert!(out.contains("  0 <= 4"));

    let (code, out, _) = run(&["gm", path.to_str().unwrap(), "--exhaustive"]);
    assert_eq!(code, 0);
    assert!(out.contains("extent {g1,g2} intent {m2}"));
    assert!(out.contains("  extent leaf: {g2} {g1,g2}"));
    assert!(out.contains("  intent leaf: {m2}"));

    let wide = dir.join("wide.cxt");
    fs::write(&wide, "B\n\n\n5\n1\n\ng1\ng2\ng3\ng4\ng5\nm1\nX\nX\nX\nX\nX\n").unwrap();
    let (code, _, err) = run(&["gm", wide.to_str().unwrap(), "--exhaustive"]);
    assert_eq!(code, 1);
    assert!(err.contains("limited to 4 objects"));
    let (code, _, _) = run(&["gm", wide.to_str().unwrap()]);
    assert_eq!(code, 0, "the summary view has no exponential step");
}

#[test]
fn order_compares_context_files() {
    let dir = scratch("order-ctx");
    let small = dir.join("small.cxt");
    let big = dir.join("big.cxt");
    fs::write(&small, "B\n\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n..\n").unwrap();
    fs::write(&big, "B\n\n\n2\n2\n\ng1\ng2\nm1\nm2\nXX\n.X\n").unwrap();
    let (code, out, _) = run(&[
        "order",
        "--a",
        small.to_str().unwrap(),
        "--b",
        big.to_str().unwrap(),
        "--kind",
        "relation",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("holds: true\n"));
    let (code, out, _) = run(&[
        "order",
        "--a",
        big.to_str().unwrap(),
        "--b",
        small.to_str().unwrap(),
        "--kind",
        "relation",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("holds: false\n"));
    assert!(out.contains("incidence (0, 1)"));
    let (code, out, _) = run(&[
        "order",
        "--a",
        small.to_str().unwrap(),
        "--b",
        big.to_str().unwrap(),
        "--kind",
        "pointwise",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("holds: true\n"));
}

#[test]
fn order_compares_connection_files() {
    let dir = scratch("order-gc");
    let (a, b) = samples::chain_pair();
    let a_path = dir.join("a.json");
    let b_path = dir.join("b.json");
    fs::write(&a_path, json::render_gc(&a)).unwrap();
    fs::write(&b_path, json::render_gc(&b)).unwrap();
    let (code, out, _) = run(&[
        "order",
        "--gc-a",
        a_path.to_str().unwrap(),
        "--gc-b",
        b_path.to_str().unwrap(),
        "--kind",
        "p",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("holds: true\n"));
    let (code, out, _) = run(&[
        "order",
        "--gc-a",
        a_path.to_str().unwrap(),
        "--gc-b",
        b_path.to_str().unwrap(),
        "--kind",
        "q",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("holds: false\n"));
    assert!(out.contains("element 1 on side Q"));
    let (code, _, err) = run(&[
        "order",
        "--gc-a",
        a_path.to_str().unwrap(),
        "--gc-b",
        b_path.to_str().unwrap(),
        "--kind",
        "relation",
    ]);
    assert_eq!(code, 1, "chains are not powerset-shaped: {err}");
}

#[test]
fn galcheck_reports_structure() {
    let dir = scratch("galcheck");
    let (_, gc) = samples::diamond_pair();
    let path = dir.join("gc.json");
    fs::write(&path, json::render_gc(&gc)).unwrap();
    let (code, out, _) = run(&["galcheck", "--gc", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("structural validation: valid"));
    assert!(out.contains("adjoint definition: valid"));
    assert!(out.contains("nodes P: {0,1,2,3}"));
    assert!(out.contains("perfect: true"));
}

#[test]
fn galcheck_diagnoses_invalid_pairs_without_failing() {
    let dir = scratch("galcheck-bad");
    let path = dir.join("bad.json");
    fs::write(
        &path,
        r#"{
            "P": { "size": 2, "leq": [[true, true], [false, true]] },
            "Q": { "size": 2, "leq": [[true, true], [false, true]] },
            "f": [0, 1],
            "g": [0, 1]
        }"#,
    )
    .unwrap();
    let (code, out, _) = run(&["galcheck", "--gc", path.to_str().unwrap()]);
    assert_eq!(code, 0, "diagnosis is the command's success path");
    assert!(out.contains("violation"));
    assert!(out.contains("not antitone"));
}

#[test]
fn embed_writes_polarity_and_relation_files() {
    let dir = scratch("embed");
    let (gc, _) = samples::chain_pair();
    let gc_path = dir.join("gc.json");
    let pol_path = dir.join("polarity.json");
    let rel_path = dir.join("relation.cxt");
    fs::write(&gc_path, json::render_gc(&gc)).unwrap();
    let (code, out, _) = run(&[
        "embed",
        "--gc",
        gc_path.to_str().unwrap(),
        "--out",
        pol_path.to_str().unwrap(),
        "--relation",
        rel_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("source: 3 P-elements, 4 Q-elements"));
    assert!(out.contains("polarity: 8 P-subsets, 16 Q-subsets"));
    assert!(out.contains("monomorphism: true"));
    let polarity = json::parse_gc(&fs::read_to_string(&pol_path).unwrap()).unwrap();
    assert!(validate_gc(&polarity).is_valid());
    assert_eq!(polarity.p().size(), 8);
    let relation = parse_cxt(&fs::read_to_string(&rel_path).unwrap()).unwrap();
    assert_eq!(relation.object_count(), 3);
    assert_eq!(relation.attribute_count(), 4);
}

#[test]
fn morphism_reports_characterization_and_injectivity() {
    let dir = scratch("morphism");
    let (gc, _) = samples::diamond_pair();
    let path = dir.join("gc.json");
    fs::write(&path, json::render_gc(&gc)).unwrap();
    let (code, out, _) = run(&[
        "morphism",
        "--src",
        path.to_str().unwrap(),
        "--dst",
        path.to_str().unwrap(),
        "--h",
        "0,1,2,3",
        "--k",
        "0,1,2,3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("morphism: true"));
    assert!(out.contains("monomorphism: true"));
    let (code, out, _) = run(&[
        "morphism",
        "--src",
        path.to_str().unwrap(),
        "--dst",
        path.to_str().unwrap(),
        "--h",
        "0,0,0,0",
        "--k",
        "0,1,2,3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("morphism: false"));
    assert!(out.contains("squares: fails"));
}

#[test]
fn rdf_pipeline_ingests_reports_and_diffs() {
    let dir = scratch("rdf");
    let old_nt = dir.join("old.nt");
    let new_nt = dir.join("new.nt");
    let ctx_path = dir.join("projected.cxt");
    fs::write(
        &old_nt,
        "<http://x/s1> <http://x/p1> <http://x/o1> .\n\
         <http://x/s1> <http://x/p2> \"two\" .\n\
         <http://x/s2> <http://x/p2> <http://x/o3> .\n",
    )
    .unwrap();
    fs::write(
        &new_nt,
        "<http://x/s1> <http://x/p1> <http://x/o1> .\n\
         <http://x/s1> <http://x/p2> \"two\" .\n\
         <http://x/s2> <http://x/p2> <http://x/o3> .\n\
         <http://x/s2> <http://x/p1> <http://x/o4> .\n",
    )
    .unwrap();
    let (code, out, _) = run(&[
        "rdf",
        "ingest",
        old_nt.to_str().unwrap(),
        "--out",
        ctx_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("parsed 3 triples: 2 subjects, 2 predicates"));
    let ctx = parse_cxt(&fs::read_to_string(&ctx_path).unwrap()).unwrap();
    assert_eq!(ctx.row(0), 0b11);
    assert_eq!(ctx.row(1), 0b10);

    let (code, out, _) = run(&["rdf", "schema", ctx_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("classes"));
    assert!(out.contains("subsumptions:"));
    let (code, dot_out, _) = run(&["rdf", "schema", ctx_path.to_str().unwrap(), "--dot"]);
    assert_eq!(code, 0);
    assert!(dot_out.starts_with("digraph concept_lattice {"));

    let (code, out, _) = run(&[
        "rdf",
        "diff",
        old_nt.to_str().unwrap(),
        new_nt.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("old relation <= new: holds"));
    assert!(out.contains("new relation <= old: fails"));
    assert!(out.contains("unchanged: false"));

    let (code, out, _) = run(&[
        "rdf",
        "diff",
        old_nt.to_str().unwrap(),
        old_nt.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("unchanged: true"));

    let broken = dir.join("broken.nt");
    fs::write(&broken, "<http://x/s1> <http://x/p1> <http://x/o1>\n").unwrap();
    let (code, _, err) = run(&["rdf", "ingest", broken.to_str().unwrap(), "--out", ctx_path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 1"));
}

#[test]
fn oracle_subcommand_emits_machine_readable_certification() {
    let (code, out, _) = run(&[
        "oracle",
        "--sweep",
        "validator-agreement,pointwise-agreement",
        "--max",
        "2x2",
        "--poset-max",
        "2",
    ]);
    assert_eq!(code, 0);
    let report: SweepReport = serde_json::from_str(&out).expect("JSON report");
    assert_eq!(report.reports.len(), 2);
    assert!(report.reports.iter().all(|r| r.exhaustive));
    assert!(report.total_instances() > 0);

    let (code, _, err) = run(&["oracle", "--sweep", "bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown proposition"));

    let (code, _, err) = run(&["oracle", "--poset-max", "9"]);
    assert_eq!(code, 1);
    assert!(err.contains("limited to"));

    let (code, _, err) = run(&["oracle", "--max", "3by3"]);
    assert_eq!(code, 2);
    assert!(err.contains("OBJECTSxATTRIBUTES"));
}

#[test]
fn installed_binary_behaves_like_the_library_driver() {
    let dir = scratch("binary");
    let path = toy_cxt(&dir);
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_galcore"))
        .args(["concepts", path.to_str().unwrap()])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let (_, lib_out, _) = run(&["concepts", path.to_str().unwrap()]);
    assert_eq!(String::from_utf8(output.stdout).unwrap(), lib_out);

    let status = std::process::Command::new(env!("CARGO_BIN_EXE_galcore"))
        .arg("transmogrify")
        .output()
        .expect("binary runs")
        .status;
    assert_eq!(status.code(), Some(2));
}
