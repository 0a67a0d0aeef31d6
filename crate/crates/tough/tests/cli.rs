//! End-to-end tests of the command-line surface: output formats, exit
//! codes, and the losslessness of `--json` output.

use std::io::Write;
use std::path::Path;

use tough::cli::run;
use tough::graph::Graph;
use tough::graph6::emit_graph6;

fn run_cli(args: &[&str]) -> (i32, String) {
    let argv = std::iter::once("tough".to_string()).chain(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).expect("utf8 output"))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

/// Net graph: triangle 0,1,2 with pendants 3,4,5.
const NET_EDGES: &str = "0 1\n1 2\n0 2\n0 3\n1 4\n2 5\n";

#[test]
fn analyze_reports_toughness_and_tough_set() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["analyze", &net]);
    assert_eq!(code, 0);
    assert_eq!(out, "toughness = 1/2, tough set {0}\n");
}

#[test]
fn analyze_handles_complete_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write_file(dir.path(), "k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let (code, out) = run_cli(&["analyze", &k4]);
    assert_eq!(code, 0);
    assert!(out.contains("toughness = inf"));
}

#[test]
fn analyze_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["analyze", &net, "--json"]);
    assert_eq!(code, 0);
    let cert: tough::ToughnessCertificate = serde_json::from_str(&out).unwrap();
    assert_eq!(cert.value, tough::ExtendedRational::new(1, 2));
    assert_eq!(cert.tough_set, Some([0].into_iter().collect()));
    assert_eq!(cert.components_after, 2);
}

#[test]
fn minimal_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["minimal", &net]);
    assert_eq!(code, 0);
    assert!(out.contains("yes, t = 1/2"));

    // Diamond with pendants is not minimally tough.
    let gdp = write_file(
        dir.path(),
        "gdp.edges",
        "0 1\n0 2\n1 2\n0 3\n1 3\n2 4\n3 5\n",
    );
    let (code, out) = run_cli(&["minimal", &gdp]);
    assert_eq!(code, 1);
    assert!(out.contains("no, removing edge (0, 1)"));

    // Complete input is a usage-level error.
    let k3 = write_file(dir.path(), "k3.edges", "0 1\n0 2\n1 2\n");
    let (code, out) = run_cli(&["minimal", &k3]);
    assert_eq!(code, 2);
    assert!(out.contains("error"));
}

#[test]
fn witness_reports_the_edge() {
    let dir = tempfile::tempdir().unwrap();
    let gdp = write_file(
        dir.path(),
        "gdp.edges",
        "0 1\n0 2\n1 2\n0 3\n1 3\n2 4\n3 5\n",
    );
    let (code, out) = run_cli(&["witness", &gdp]);
    assert_eq!(code, 0);
    assert!(out.contains("witness edge (0, 1): 3 disjoint paths"));

    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["witness", &net]);
    assert_eq!(code, 1);
    assert!(out.contains("no witness edge"));

    let (_, json) = run_cli(&["witness", &gdp, "--json"]);
    let report: Option<tough::WitnessReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(report.unwrap().edge, (0, 1));
}

#[test]
fn chordal_and_clique_tree() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["chordal", &net]);
    assert_eq!(code, 0);
    assert!(out.contains("chordal, elimination order"));

    let c4 = write_file(dir.path(), "c4.edges", "0 1\n1 2\n2 3\n3 0\n");
    let (code, out) = run_cli(&["chordal", &c4]);
    assert_eq!(code, 1);
    assert!(out.contains("not chordal"));

    let (code, out) = run_cli(&["clique-tree", &net]);
    assert_eq!(code, 0);
    assert!(out.contains("clique 0:") && out.contains("tree edge"));

    let (code, out) = run_cli(&["clique-tree", &net, "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph CliqueTree {"));
    assert!(out.contains("label=\"{0,1,2}\""));

    let (code, _) = run_cli(&["clique-tree", &c4]);
    assert_eq!(code, 2);

    let (_, json) = run_cli(&["clique-tree", &net, "--json"]);
    let ct: tough::CliqueTree = serde_json::from_str(&json).unwrap();
    assert_eq!(ct.cliques.len(), 4);
    assert!(tough::verify_clique_intersection(&ct));
}

#[test]
fn graph6_input_via_extension_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write_file(dir.path(), "k3.g6", "Bw\n");
    let (code, out) = run_cli(&["tt", "recognize", &k3]);
    assert_eq!(code, 1);
    assert!(out.contains("not a TT-graph"));
    assert!(out.contains("complete"));

    // Same bytes, explicit format flag, different extension.
    let raw = write_file(dir.path(), "k3.txt", "Bw\n");
    let (code, _) = run_cli(&["tt", "recognize", &raw, "--format", "graph6"]);
    assert_eq!(code, 1);
}

#[test]
fn tt_recognize_accepts_the_net_graph() {
    let dir = tempfile::tempdir().unwrap();
    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["tt", "recognize", &net]);
    assert_eq!(code, 0);
    assert!(out.contains("TT-graph: case a, mu = 2"));

    let (_, json) = run_cli(&["tt", "recognize", &net, "--json"]);
    let d: tough::TTDecomposition = serde_json::from_str(&json).unwrap();
    assert_eq!(d.mu, 2);
    let net_graph = tough::parse_edge_list(NET_EDGES).unwrap();
    assert!(d.verifies_for(&net_graph));
}

#[test]
fn tt_build_constructs_the_net_graph() {
    let dir = tempfile::tempdir().unwrap();
    let spider = write_file(dir.path(), "spider.edges", "0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
    let (code, out) = run_cli(&["tt", "build", "--tree", &spider, "--remove", "0"]);
    assert_eq!(code, 0);
    let expected = Graph::from_edges(6, [(0, 2), (0, 4), (2, 4), (0, 1), (2, 3), (4, 5)]).unwrap();
    assert!(out.contains(&format!("graph6: {}", emit_graph6(&expected))));
    assert!(out.contains("case a"));

    // Invalid removals are input errors.
    let (code, out) = run_cli(&["tt", "build", "--tree", &spider, "--remove", "1"]);
    assert_eq!(code, 2);
    assert!(out.contains("degree"));
}

#[test]
fn interval_and_caterpillar_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write_file(dir.path(), "p4.edges", "0 1\n1 2\n2 3\n");
    let (code, out) = run_cli(&["interval", &p4]);
    assert_eq!(code, 0);
    assert!(out.contains("interval graph"));

    let net = write_file(dir.path(), "net.edges", NET_EDGES);
    let (code, out) = run_cli(&["interval", &net]);
    assert_eq!(code, 1);
    assert!(out.contains("asteroidal triple {3,4,5}"));

    let (code, out) = run_cli(&["caterpillar", &p4]);
    assert_eq!(code, 0);
    assert!(out.contains("caterpillar"));

    let claw2 = write_file(dir.path(), "claw2.edges", "0 1\n0 2\n0 3\n1 4\n2 5\n3 6\n");
    let (code, out) = run_cli(&["caterpillar", &claw2]);
    assert_eq!(code, 1);
    assert!(out.contains("not a caterpillar"));
}

#[test]
fn sweep_writes_reports_and_exits_clean() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r.json");
    let csv_path = dir.path().join("r.csv");
    let (code, out) = run_cli(&[
        "sweep",
        "--check",
        "main",
        "--n",
        "5",
        "--out",
        out_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("mismatches: 0"));

    let report: tough::SweepReport =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report.sweep, "main");
    assert_eq!(report.n, 5);
    assert!(report.mismatches.is_empty());
    assert!(report.counts["minimally_tough"] > 0);

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("graph6,tau_num,tau_den,mu,is_tt,case_tag"));
    assert!(csv.lines().count() > 1);
    // Every row is re-checkable from its graph6 string alone.
    for line in csv.lines().skip(1) {
        let graph6 = line.split(',').next().unwrap();
        let g = tough::parse_graph6(graph6).unwrap();
        assert!(tough::is_minimally_tough(&g).unwrap().is_minimal());
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let (code, _) = run_cli(&["bogus-command"]);
    assert_eq!(code, 2);
    let (code, out) = run_cli(&["sweep", "--check", "bogus"]);
    assert_eq!(code, 2);
    assert!(out.contains("unknown sweep"));
    let (code, out) = run_cli(&["analyze", "/nonexistent/file.edges"]);
    assert_eq!(code, 2);
    assert!(out.contains("error"));
    let (code, _) = run_cli(&["sweep", "--check", "witness", "--n", "7"]);
    assert_eq!(code, 2);
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(dir.path(), "bad.edges", "0 1\n2 2\n");
    let (code, out) = run_cli(&["analyze", &bad]);
    assert_eq!(code, 2);
    assert!(out.contains("line 2"));
    assert!(out.contains("self-loop"));
}

#[test]
fn help_is_available() {
    let (code, out) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("analyze"));
    assert!(out.contains("sweep"));
}
