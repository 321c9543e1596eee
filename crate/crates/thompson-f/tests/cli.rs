//! End-to-end command tests: real files, config loading, JSON documents,
//! and exit codes, all through the same entry point the binary uses.

use std::fs;
use std::io::Write as _;

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = thompson_f::cli::run(args.iter().copied(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout.trim()).unwrap_or_else(|e| panic!("bad JSON {stdout:?}: {e}"))
}

fn write_file(dir: &TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    let mut f = fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn density_reads_a_vertex_file() {
    let dir = TempDir::new().unwrap();
    let set = write_file(&dir, "set.txt", "# the two-element example\n1\nx0\n\n");
    let (code, out, err) = run(&[
        "thf", "density", "--set", &set, "--gens", "x0,x1,x2", "--side", "right",
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    let doc = json(&out);
    assert_eq!(doc["schema"], "1");
    assert_eq!(doc["delta"], "1");
    assert_eq!(doc["iota"], "5");
    assert_eq!(doc["m"], 3);
    assert_eq!(doc["vertices"], 2);
    assert_eq!(doc["internal_edges"], 2);
    assert_eq!(doc["external_edges"], 10);
    assert_eq!(doc["identity_ok"], true);
}

#[test]
fn density_on_a_missing_file_is_an_io_error() {
    let (code, _, err) = run(&[
        "thf", "density", "--set", "/nonexistent/set.txt", "--gens", "x0",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("error[Io]"), "stderr: {err}");
}

#[test]
fn ay_ratio_counts_left_translates() {
    let dir = TempDir::new().unwrap();
    let set = write_file(&dir, "ys.txt", "1\n");
    let (code, out, _) = run(&["thf", "ay-ratio", "--set", &set, "--gens", "x0,x1"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["ratio"], "2");
    assert_eq!(doc["identity_included"], false);

    let (code, out, _) = run(&[
        "thf", "ay-ratio", "--set", &set, "--gens", "x0,x1", "--include-identity",
    ]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["ratio"], "3");
    assert_eq!(doc["identity_included"], true);
}

#[test]
fn flow_check_verifies_a_circulation() {
    let dir = TempDir::new().unwrap();
    let set = write_file(&dir, "set.txt", "1\nx0\n");
    let flow = write_file(&dir, "flow.txt", "1 +1 0\nx0 -1 0\n");
    let (code, out, err) = run(&[
        "thf", "flow-check", "--set", &set, "--gens", "x0", "--flow", &flow,
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    let doc = json(&out);
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["antisymmetric"], true);
    assert_eq!(doc["min_inflow"], "0");
    assert_eq!(doc["m"], 1);

    // a positive demanded inflow cannot be met by a circulation on two nodes
    let (code, out, _) = run(&[
        "thf", "flow-check", "--set", &set, "--gens", "x0", "--flow", &flow, "--eps", "1",
    ]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["ok"], false);
    assert_eq!(doc["antisymmetric"], true);
}

#[test]
fn flow_check_requires_every_internal_edge() {
    let dir = TempDir::new().unwrap();
    let set = write_file(&dir, "set.txt", "1\nx0\n");
    let flow = write_file(&dir, "flow.txt", "1 +1 0\n");
    let (code, _, err) = run(&[
        "thf", "flow-check", "--set", &set, "--gens", "x0", "--flow", &flow,
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("error[MissingEdgeValue]"), "stderr: {err}");
}

#[test]
fn config_file_switches_field_and_output() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(&dir, "thf.toml", "field = \"fp\"\nprime = 5\n");
    let (code, out, _) = run(&["thf", "--config", &cfg, "normalize", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3\n");

    let cfg = write_file(&dir, "json.toml", "output = \"json\"\n");
    let (code, out, _) = run(&["thf", "--config", &cfg, "normalize", "x1*x0"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    assert_eq!(doc["schema"], "1");
    assert_eq!(doc["poly"], "x0*x2");

    // command-line flags win over the file
    let cfg = write_file(&dir, "q.toml", "field = \"q\"\n");
    let (code, out, _) = run(&[
        "thf", "--config", &cfg, "--field", "fp", "--prime", "7", "normalize", "1/2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "4\n");
}

#[test]
fn config_env_var_is_honored() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(&dir, "env.toml", "field = \"fp\"\nprime = 7\n");
    std::env::set_var(thompson_f::config::CONFIG_ENV, &cfg);
    let (code, out, _) = run(&["thf", "normalize", "1/2"]);
    std::env::remove_var(thompson_f::config::CONFIG_ENV);
    assert_eq!(code, 0);
    assert_eq!(out, "4\n");

    let (code, out, _) = run(&["thf", "--field", "q", "normalize", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1/2\n");
}

#[test]
fn bad_config_is_rejected() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(&dir, "bad.toml", "no_such_key = 1\n");
    let (code, _, err) = run(&["thf", "--config", &cfg, "normalize", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("error[InvalidConfig]"), "stderr: {err}");
}

#[test]
fn search_chain_writes_a_triplet_file_deterministically() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("system.txt");
    let triplets = path.to_str().unwrap();
    let args = [
        "thf",
        "--field",
        "q",
        "search",
        "chain",
        "-m",
        "1",
        "--max-degree",
        "3",
        "--max-index",
        "3",
        "--triplets",
        triplets,
    ];
    let (code, out1, err) = run(&args);
    assert_eq!(code, 0, "stderr: {err}");
    let doc = json(&out1);
    assert_eq!(doc["schema"], "1");
    assert_eq!(doc["seed"], 0);
    assert!(!doc["candidates"].as_array().unwrap().is_empty());

    let text = fs::read_to_string(&path).unwrap();
    assert!(!text.trim().is_empty());
    for line in text.lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields.len(), 3, "triplet line {line:?}");
        fields[0].parse::<usize>().unwrap();
        fields[1].parse::<usize>().unwrap();
        thompson_f::text::parse_rational(fields[2]).unwrap();
    }

    // same seed, byte-identical output
    let (_, out2, _) = run(&args);
    assert_eq!(out1, out2);
    let text2 = fs::read_to_string(&path).unwrap();
    assert_eq!(text, text2);
}

#[test]
fn divide_v0_prints_the_frozen_split() {
    let (code, out, _) = run(&["thf", "--field", "q", "divide-v0", "x0^2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "w1 = -1\nw2 = x1\nw3 = 1 - x3\nverified: true\n");
}

#[test]
fn relation_words_round_trip_into_decomposable_solutions() {
    let relator = "X0*X0*x1*x0*x0*X1*X0*X1*x0*x1";
    let (code, out, err) = run(&[
        "thf", "--field", "q", "--json", "relation2solution", relator,
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    let doc = json(&out);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["names"], serde_json::json!(["u", "v"]));
    let u = doc["unknowns"][0].as_str().unwrap();
    let v = doc["unknowns"][1].as_str().unwrap();

    let (code, out, err) = run(&["thf", "--field", "q", "decompose", "-u", u, "-v", v]);
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.contains("verified: true"), "stdout: {out}");
}

#[test]
fn gig_prints_the_common_multiplier() {
    let (code, out, _) = run(&["thf", "gig", "(x1)^-1", "x0*X1"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let g_line = lines.next().unwrap();
    assert!(g_line.starts_with("g = "), "stdout: {out}");
    // every following line is a positive normal form
    for line in lines {
        thompson_f::text::parse_monomial(line).unwrap();
    }
}

#[test]
fn forest_counts_match_enumeration_through_the_interface() {
    let (code, out, _) = run(&[
        "thf", "forest", "count", "--kind", "s", "--roots", "2", "--leaves", "4",
    ]);
    assert_eq!(code, 0);
    let expected: usize = out.trim().parse().unwrap();

    let (code, out, _) = run(&[
        "thf", "forest", "enumerate", "--kind", "s", "--roots", "2", "--leaves", "4",
    ]);
    assert_eq!(code, 0);
    let listed: Vec<&str> = out.lines().collect();
    assert_eq!(listed.len(), expected);
    for line in &listed {
        let f = thompson_f::forests::parse_forest(line).unwrap();
        assert_eq!(f.roots(), 2);
        assert_eq!(f.leaves(), 4);
    }
}

#[test]
fn oversized_enumerations_are_refused() {
    let (code, _, err) = run(&["thf", "forest", "enumerate", "--kind", "trees", "--carets", "20"]);
    assert_eq!(code, 1);
    assert!(err.contains("error[ResourceLimit]"), "stderr: {err}");
}

#[test]
fn help_names_every_subcommand() {
    let (code, out, _) = run(&["thf", "--help"]);
    assert_eq!(code, 0);
    for name in [
        "normalize", "mul", "reduce", "lcm", "gig", "phi", "phi-relation", "solve-x0b",
        "chain", "divide-v0", "decompose", "basis-u", "relation2solution", "density",
        "ay-ratio", "flow-check", "forest", "search",
    ] {
        assert!(out.contains(name), "--help does not mention {name}");
    }
}

#[test]
fn vertex_files_accept_group_element_notation() {
    let dir = TempDir::new().unwrap();
    // mixed notations, one of them the printed p * (q)^-1 form
    let set = write_file(&dir, "set.txt", "1\nx0\nx2 * (x0)^-1\nX0*x1\n");
    let (code, out, _) = run(&["thf", "density", "--set", &set, "--gens", "x0,x1"]);
    assert_eq!(code, 0);
    let doc = json(&out);
    // X0*x1 reduces to x2 * (x0)^-1, so the set has three distinct vertices
    assert_eq!(doc["vertices"], 3);
}
