//! Command-line front end. Every solver and pipeline is exposed as a
//! subcommand with deterministic JSON output (or `--text` summaries).
//!
//! Exit codes: 0 on success, 1 on infeasibility / violated systems / defect
//! reports, 2 on usage errors (bad flags, unreadable or malformed inputs).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cover::{edge_representativeness, FamilyOfSets};
use crate::dm::{invariant_min_cover, BipartiteGraph};
use crate::graph::{EdgeSet, Graph};
use crate::perm::{
    automorphism_group, edge_permutation, orbits, Action, OrbitPartition, PermGroup, Permutation,
};
use crate::subiso::enumerate_copies;
use crate::symmetrize::{
    product_oracle, symmetrize_multiple, symmetrize_weighted, weight_lift_size, WeightedFamily,
};
use crate::tadpole::symmetric_tadpole_representatives;

#[derive(Parser)]
#[command(
    name = "symrep",
    version,
    about = "Automorphism-invariant systems of representatives on graphs"
)]
struct Cli {
    /// Human-readable summary instead of JSON
    #[arg(long, global = true)]
    text: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism generators, group order, and vertex/edge orbits of a graph
    Aut {
        /// Edge-list graph file
        graph: PathBuf,
    },
    /// All copies of a pattern graph inside a host graph
    Copies {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Minimum number of host edges meeting every pattern copy
    Upsilon {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        /// Restrict to Aut(host)-invariant edge sets
        #[arg(long)]
        symmetric: bool,
    },
    /// Turn a system of representatives into an invariant one
    Symmetrize {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Family JSON: {"sets": [[ids...],...]} for multiple,
        /// {"functions": [{"weights": [{"element": id, "w": "p/q"},...]},...]} for weighted
        #[arg(long)]
        family: PathBuf,
        /// Comma-separated element ids forming X (may be empty)
        #[arg(long)]
        x: String,
        /// Multiplicity (mode=multiple only)
        #[arg(long)]
        k: Option<usize>,
        /// Graph file (its automorphism group acts on edge ids) or a JSON
        /// list of permutation image arrays acting on element ids
        #[arg(long)]
        group: PathBuf,
        /// Also run the product-construction oracle and compare (mode=weighted only)
        #[arg(long)]
        oracle: bool,
    },
    /// Canonical invariant minimum vertex cover of a bipartite graph
    DmCover {
        /// Bipartite file: "p <a_size> <b_size>" then "a b" lines
        bipartite: PathBuf,
    },
    /// Invariant representatives for a tadpole pattern, with the full trace
    Tadpole {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        /// Comma-separated host edge ids; defaults to the exact minimum witness
        #[arg(long)]
        x: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Multiple,
    Weighted,
}

enum CliError {
    Usage(String),
    Violation(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Violation(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Violation(m) => m,
        }
    }
}

struct Output {
    json: String,
    text: String,
    code: i32,
}

impl Output {
    fn ok<T: serde::Serialize>(value: &T, text: String) -> Self {
        Output {
            json: serde_json::to_string(value).expect("output types serialize"),
            text,
            code: 0,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(output) => {
            if cli.text {
                let _ = writeln!(out, "{}", output.text.trim_end());
            } else {
                let _ = writeln!(out, "{}", output.json);
            }
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Aut { graph } => cmd_aut(graph),
        Command::Copies { pattern, host } => cmd_copies(pattern, host),
        Command::Upsilon {
            pattern,
            host,
            symmetric,
        } => cmd_upsilon(pattern, host, *symmetric),
        Command::Symmetrize {
            mode,
            family,
            x,
            k,
            group,
            oracle,
        } => cmd_symmetrize(*mode, family, x, *k, group, *oracle),
        Command::DmCover { bipartite } => cmd_dm_cover(bipartite),
        Command::Tadpole { pattern, host, x } => cmd_tadpole(pattern, host, x.as_deref()),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read_file(path)?;
    Graph::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parse_ids(text: &str) -> Result<BTreeSet<usize>, CliError> {
    let mut ids = BTreeSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let id: usize = part
            .parse()
            .map_err(|_| CliError::Usage(format!("cannot parse id {part:?}")))?;
        ids.insert(id);
    }
    Ok(ids)
}

fn violation<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Violation(e.to_string())
}

fn cmd_aut(path: &Path) -> Result<Output, CliError> {
    let g = load_graph(path)?;
    let group = automorphism_group(&g);
    let order = group.order().map_err(violation)?;
    let vertex_orbits = orbits(&group, Action::Vertices, &g).map_err(violation)?;
    let edge_orbits = orbits(&group, Action::Edges, &g).map_err(violation)?;
    #[derive(Serialize)]
    struct AutOutput<'a> {
        n: usize,
        edges: Vec<crate::graph::Edge>,
        generators: &'a [Permutation],
        order: u64,
        vertex_orbits: &'a OrbitPartition,
        edge_orbits: &'a OrbitPartition,
    }
    let json = AutOutput {
        n: g.vertex_count(),
        edges: g.edge_vec(),
        generators: group.generators(),
        order,
        vertex_orbits: &vertex_orbits,
        edge_orbits: &edge_orbits,
    };
    let mut text = format!(
        "{g}\nautomorphism group order {order} with {} generator(s)\n",
        group.generators().len()
    );
    let _ = writeln!(text, "vertex orbits: {:?}", vertex_orbits.classes());
    let _ = writeln!(
        text,
        "edge orbits (by edge id): {:?}",
        edge_orbits.classes()
    );
    Ok(Output::ok(&json, text))
}

fn cmd_copies(pattern: &Path, host: &Path) -> Result<Output, CliError> {
    let pattern = load_graph(pattern)?;
    let host = load_graph(host)?;
    let copies = enumerate_copies(&pattern, &host).map_err(violation)?;
    #[derive(Serialize)]
    struct CopiesOutput<'a> {
        count: usize,
        copies: &'a [crate::subiso::SubgraphCopy],
    }
    let json = CopiesOutput {
        count: copies.len(),
        copies: &copies,
    };
    let text = format!("{} copies of {pattern} in {host}", copies.len());
    Ok(Output::ok(&json, text))
}

fn cmd_upsilon(pattern: &Path, host: &Path, symmetric: bool) -> Result<Output, CliError> {
    let pattern = load_graph(pattern)?;
    let host = load_graph(host)?;
    let result = edge_representativeness(&pattern, &host, symmetric).map_err(violation)?;
    let kind = if symmetric { "symmetric " } else { "" };
    let text = format!(
        "{kind}edge representativeness = {} (witness edge ids: {:?})",
        result.value, result.witness
    );
    Ok(Output::ok(&result, text))
}

/// A group description: either a graph (automorphisms acting on edge ids) or
/// an explicit list of permutations of the element ids.
fn load_group_action(path: &Path) -> Result<(usize, Vec<Permutation>), CliError> {
    let text = read_file(path)?;
    if text.trim_start().starts_with('[') {
        let images: Vec<Vec<usize>> = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let degree = images.first().map(Vec::len).unwrap_or(0);
        let perms: Result<Vec<Permutation>, _> = images.into_iter().map(Permutation::new).collect();
        let perms = perms.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let group = PermGroup::new(degree, perms)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Ok((degree, group.generators().to_vec()))
    } else {
        let g =
            Graph::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let group = automorphism_group(&g);
        let edge_gens: Vec<Permutation> = group
            .generators()
            .iter()
            .map(|p| edge_permutation(&g, p))
            .collect();
        Ok((g.edge_count(), edge_gens))
    }
}

fn cmd_symmetrize(
    mode: Mode,
    family: &Path,
    x: &str,
    k: Option<usize>,
    group: &Path,
    oracle: bool,
) -> Result<Output, CliError> {
    let x = parse_ids(x)?;
    let (degree, generators) = load_group_action(group)?;
    let orbit_partition = OrbitPartition::from_generators(degree, &generators);
    let family_text = read_file(family)?;
    match mode {
        Mode::Multiple => {
            if oracle {
                return Err(CliError::Usage(
                    "--oracle applies to --mode weighted only".to_string(),
                ));
            }
            let k = k.ok_or_else(|| {
                CliError::Usage("--mode multiple requires --k <multiplicity>".to_string())
            })?;
            let fam: FamilyOfSets = serde_json::from_str(&family_text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", family.display())))?;
            let report = symmetrize_multiple(&fam, &x, k, &orbit_partition).map_err(violation)?;
            let text = report_text("k-multiple", &report);
            Ok(Output::ok(&report, text))
        }
        Mode::Weighted => {
            if k.is_some() {
                return Err(CliError::Usage(
                    "--k applies to --mode multiple only".to_string(),
                ));
            }
            let fam: WeightedFamily = serde_json::from_str(&family_text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", family.display())))?;
            let report = symmetrize_weighted(&fam, &x, &orbit_partition).map_err(violation)?;
            if !oracle {
                let text = report_text("weighted", &report);
                return Ok(Output::ok(&report, text));
            }
            let lifted = product_oracle(&fam, &x, &orbit_partition).map_err(violation)?;
            let lift_size = weight_lift_size(&fam).map_err(violation)?;
            let equal = report == lifted;
            #[derive(Serialize)]
            struct OracleComparison<'a> {
                weighted: &'a crate::symmetrize::SymmetrizationReport,
                product_oracle: &'a crate::symmetrize::SymmetrizationReport,
                lift_size: u64,
                equal: bool,
            }
            let json = serde_json::to_string(&OracleComparison {
                weighted: &report,
                product_oracle: &lifted,
                lift_size,
                equal,
            })
            .expect("reports serialize");
            let mut text = report_text("weighted", &report);
            let _ = writeln!(
                text,
                "product oracle (lift size {lift_size}) {}",
                if equal { "agrees" } else { "DISAGREES" }
            );
            Ok(Output {
                json,
                text,
                code: if equal { 0 } else { 1 },
            })
        }
    }
}

fn report_text(kind: &str, report: &crate::symmetrize::SymmetrizationReport) -> String {
    let bound = report
        .bound
        .as_ref()
        .map(crate::ratio::format_ratio)
        .unwrap_or_else(|| "undefined (empty family)".to_string());
    let mut text = format!(
        "invariant {kind} system Y of size {} (bound constant {bound})\n",
        report.y.len()
    );
    let _ = writeln!(text, "Y = {:?}", report.y);
    for entry in &report.ledger {
        let _ = writeln!(
            text,
            "orbit {}: size {}, meets X {} time(s), admitted: {}",
            entry.class_id, entry.size, entry.x_hits, entry.admitted
        );
    }
    text
}

fn cmd_dm_cover(path: &Path) -> Result<Output, CliError> {
    let text = read_file(path)?;
    let g = BipartiteGraph::parse(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let cover = invariant_min_cover(&g).map_err(violation)?;
    let summary = format!(
        "invariant minimum cover of size {}: A side {:?}, B side {:?}",
        cover.size(),
        cover.a,
        cover.b
    );
    Ok(Output::ok(&cover, summary))
}

fn cmd_tadpole(pattern: &Path, host: &Path, x: Option<&str>) -> Result<Output, CliError> {
    let pattern = load_graph(pattern)?;
    let host = load_graph(host)?;
    let edge_list = host.edge_vec();
    let x_set: Option<EdgeSet> = match x {
        None => None,
        Some(ids_text) => {
            let ids = parse_ids(ids_text)?;
            let mut set = EdgeSet::new();
            for id in ids {
                let e = *edge_list.get(id).ok_or_else(|| {
                    CliError::Usage(format!("edge id {id} out of range for the host"))
                })?;
                set.insert(e);
            }
            Some(set)
        }
    };
    let trace =
        symmetric_tadpole_representatives(&pattern, &host, x_set.as_ref()).map_err(violation)?;
    let mut text = format!(
        "invariant system Y of {} edge(s): {:?}\n",
        trace.y.len(),
        trace.y
    );
    for check in &trace.bound_checks {
        let _ = writeln!(
            text,
            "[{}] {}: {}",
            if check.holds { "ok" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    let code = if trace.all_checks_hold() { 0 } else { 1 };
    Ok(Output {
        json: serde_json::to_string(&trace).expect("trace serializes"),
        text,
        code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("symrep".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn write_temp(name: &str, contents: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("symrep-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{name}-{}", std::process::id()));
        std::fs::write(&path, contents).unwrap();
        path
    }

    #[test]
    fn upsilon_on_k4() {
        let tri = write_temp("tri.g", "0 1\n1 2\n2 0\n");
        let k4 = write_temp("k4.g", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        let (code, out, _) = run_capture(&[
            "upsilon",
            "--pattern",
            tri.to_str().unwrap(),
            "--host",
            k4.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], 2);

        let (code, out, _) = run_capture(&[
            "upsilon",
            "--pattern",
            tri.to_str().unwrap(),
            "--host",
            k4.to_str().unwrap(),
            "--symmetric",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["value"], 6);
    }

    #[test]
    fn copies_of_triangle_in_k4() {
        let tri = write_temp("tri2.g", "0 1\n1 2\n2 0\n");
        let k4 = write_temp("k4c.g", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        let (code, out, _) = run_capture(&[
            "copies",
            "--pattern",
            tri.to_str().unwrap(),
            "--host",
            k4.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 4);
        assert_eq!(v["copies"][0]["vertices"], serde_json::json!([0, 1, 2]));
    }

    #[test]
    fn symmetrize_multiple_two_triangles() {
        // Families of edge-id sets over the two-triangle graph, with its
        // automorphism group acting on edge ids via the graph form of
        // --group. Edge ids: (0,1)=0 (0,2)=1 (1,2)=2 (3,4)=3 (3,5)=4 (4,5)=5.
        let g = write_temp("twotri.g", "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
        let fam = write_temp("twotri-fam.json", r#"{"sets":[[0,1,2],[3,4,5]]}"#);
        let (code, out, _) = run_capture(&[
            "symmetrize",
            "--mode",
            "multiple",
            "--family",
            fam.to_str().unwrap(),
            "--x",
            "0,3",
            "--k",
            "1",
            "--group",
            g.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["y"], serde_json::json!([0, 1, 2, 3, 4, 5]));
        assert_eq!(v["bound"], "3");
    }

    #[test]
    fn dm_cover_single_edge() {
        let bg = write_temp("edge.bg", "p 1 1\n0 0\n");
        let (code, out, _) = run_capture(&["dm-cover", bg.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"tau":1,"a":[],"b":[0]}"#);
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run_capture(&["upsilon", "--pattern", "/nonexistent"]);
        assert_eq!(code, 2, "missing required --host: {err}");
        let (code, _, _) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
        let (code, _, err) = run_capture(&["aut", "/nonexistent-file.g"]);
        assert_eq!(code, 2);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn violations_exit_1() {
        let p3 = write_temp("p3.g", "0 1\n1 2\n");
        let k4 = write_temp("k4b.g", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        let (code, _, err) = run_capture(&[
            "tadpole",
            "--pattern",
            p3.to_str().unwrap(),
            "--host",
            k4.to_str().unwrap(),
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("degree one"));
    }

    #[test]
    fn output_is_byte_identical_across_runs() {
        let g = write_temp("tt.g", "0 1\n1 2\n1 3\n2 3\n");
        let (c1, out1, _) = run_capture(&["aut", g.to_str().unwrap()]);
        let (c2, out2, _) = run_capture(&["aut", g.to_str().unwrap()]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(out1, out2);
        let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
        assert_eq!(v["order"], 2);
        assert_eq!(v["edge_orbits"], serde_json::json!([[0], [1, 2], [3]]));
    }

    #[test]
    fn symmetrize_weighted_with_oracle() {
        let fam = write_temp(
            "stars.json",
            r#"{"functions":[
                {"weights":[{"element":0,"w":"1"},{"element":2,"w":"1/3"},{"element":3,"w":"1/3"},{"element":4,"w":"1/3"}]},
                {"weights":[{"element":1,"w":"1"},{"element":5,"w":"1/3"},{"element":6,"w":"1/3"},{"element":7,"w":"1/3"}]}
            ]}"#,
        );
        let perms = write_temp("swap.json", "[[1,0,5,6,7,2,3,4]]");
        let (code, out, _) = run_capture(&[
            "symmetrize",
            "--mode",
            "weighted",
            "--family",
            fam.to_str().unwrap(),
            "--x",
            "0,1",
            "--group",
            perms.to_str().unwrap(),
            "--oracle",
        ]);
        assert_eq!(code, 0, "oracle must agree: {out}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["equal"], true);
        assert_eq!(v["lift_size"], 3);
        assert_eq!(v["weighted"]["bound"], "2");
        assert_eq!(v["weighted"]["y"], serde_json::json!([0, 1]));
    }

    #[test]
    fn symmetrize_multiple_requires_k() {
        let fam = write_temp("fam.json", r#"{"sets":[[0,1]]}"#);
        let perms = write_temp("id.json", "[[0,1]]");
        let (code, _, err) = run_capture(&[
            "symmetrize",
            "--mode",
            "multiple",
            "--family",
            fam.to_str().unwrap(),
            "--x",
            "0",
            "--group",
            perms.to_str().unwrap(),
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("--k"));
    }

    #[test]
    fn symmetrize_invalid_x_exits_1() {
        let fam = write_temp("fam2.json", r#"{"sets":[[0,1],[2,3]]}"#);
        let perms = write_temp("id4.json", "[[0,1,2,3]]");
        let (code, _, err) = run_capture(&[
            "symmetrize",
            "--mode",
            "multiple",
            "--family",
            fam.to_str().unwrap(),
            "--x",
            "0",
            "--k",
            "1",
            "--group",
            perms.to_str().unwrap(),
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("not a valid input system"));
    }

    #[test]
    fn tadpole_with_explicit_x_and_text_mode() {
        let tt = write_temp("tt2.g", "0 1\n1 2\n1 3\n2 3\n");
        let host = write_temp("k4p.g", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n");
        // Edge ids 0 and 6 are (0,1) and (2,3): the exact minimum witness.
        let (code, out, _) = run_capture(&[
            "tadpole",
            "--pattern",
            tt.to_str().unwrap(),
            "--host",
            host.to_str().unwrap(),
            "--x",
            "0,6",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["y"].as_array().unwrap().len(), 6);

        let (code, out, _) = run_capture(&[
            "tadpole",
            "--text",
            "--pattern",
            tt.to_str().unwrap(),
            "--host",
            host.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("[ok] final_bound"), "text output: {out}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("symrep"));
    }
}
