//! The `soltes` command-line tool. All logic lives in [`run`], which takes
//! explicit streams so tests can drive it end to end; the binary is a
//! one-line wrapper.
//!
//! Exit codes: 0 = success (expected verdict, complete search), 1 = a
//! negative verdict, incomplete search, or failed check, 2 = usage, parse,
//! or I/O error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::{
    cycle_graph, general_r, irregular54, knits, knits_params, ConstructionParams, Convention,
    Variant, RESOLVED_CONVENTION,
};
use crate::hypergraph::Hypergraph;
use crate::invariants::{distance_matrix, is_connected, soltes_report, wiener, SoltesReport};
use crate::search::{search_soltes, lemma_suite, SearchSpec, SearchStatus};
use crate::verify::{run_all, VerifyOptions};
use crate::weighted::{prism_soltes, soltes_report_w, wiener_w, WSoltesReport, WeightedGraph};

#[derive(Parser)]
#[command(
    name = "soltes",
    version,
    about = "Šoltés hypergraphs: invariants, constructions, and searches",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Wiener index and distance distribution of a hypergraph (or weighted
    /// graph) read from FILE; "-" reads standard input
    Wiener {
        file: String,
        /// Treat the input as a weighted graph (implied by a .wg extension)
        #[arg(long)]
        weighted: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Audit every single-vertex deletion and report the Šoltés verdict;
    /// exits 1 when the verdict is negative
    Check {
        file: String,
        /// Treat the input as a weighted graph (implied by a .wg extension)
        #[arg(long)]
        weighted: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build a named construction, emit it in .hg (or .wg) form, and print
    /// its JSON descriptor to standard error
    Construct {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// Order (knits, cycle)
        #[arg(long)]
        n: Option<u64>,
        /// Clique parameter (general-r)
        #[arg(long)]
        s: Option<u64>,
        /// Slack parameter (general-r)
        #[arg(long)]
        t: Option<u64>,
        /// Block width (general-r)
        #[arg(long)]
        r: Option<u64>,
        /// Prism parameter: half the cycle length, at least 20
        #[arg(long)]
        k: Option<u64>,
        /// Edge-layout convention (general-r); defaults to the resolved one
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
        /// Write the object here instead of standard output
        #[arg(short, long)]
        output: Option<String>,
        /// Suppress the descriptor and summary on standard error
        #[arg(long)]
        quiet: bool,
    },
    /// Run an isomorph-free Šoltés search from a JSON spec file ("-" reads
    /// standard input) and emit NDJSON witness records plus a summary;
    /// exits 1 if the search stopped before completing
    Search {
        spec: String,
        /// Override the spec's worker count (never changes the results)
        #[arg(long)]
        partitions: Option<usize>,
        /// Write the NDJSON here instead of standard output
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Audit the distance-invariant bounds on exhaustive small cases plus
    /// random samples; exits 1 on any violation
    Lemmas {
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the complete verification battery and print one PASS/FAIL line
    /// per check; exits 1 unless everything passes
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Shrink the exhaustive ranges to finish in seconds
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads (default: SOLTES_THREADS or the CPU count)
        #[arg(long)]
        partitions: Option<usize>,
    },
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Knits,
    #[value(name = "general-r")]
    GeneralR,
    #[value(name = "irregular54")]
    Irregular54,
    Cycle,
    Prism,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    #[value(name = "inclusive-trim-middle")]
    InclusiveTrimMiddle,
    #[value(name = "half-open-middle")]
    HalfOpenMiddle,
    #[value(name = "fully-inclusive")]
    FullyInclusive,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::InclusiveTrimMiddle => Convention::InclusiveTrimMiddle,
            ConventionArg::HalfOpenMiddle => Convention::HalfOpenMiddle,
            ConventionArg::FullyInclusive => Convention::FullyInclusive,
        }
    }
}

/// Parses argv and executes one subcommand against the given streams.
/// Returns the process exit code.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.cmd, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn say(w: &mut dyn Write, text: &str) -> Result<(), String> {
    writeln!(w, "{text}").map_err(|e| e.to_string())
}

fn read_input(path: &str, stdin: &mut dyn BufRead) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| format!("standard input: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn write_output(
    path: Option<&str>,
    content: &str,
    stdout: &mut dyn Write,
) -> Result<(), String> {
    match path {
        None | Some("-") => write!(stdout, "{content}").map_err(|e| e.to_string()),
        Some(p) => fs::write(p, content).map_err(|e| format!("{p}: {e}")),
    }
}

fn env_partitions() -> Option<usize> {
    std::env::var("SOLTES_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&p| p >= 1)
}

fn require(value: Option<u64>, flag: &str, variant: &str) -> Result<u64, String> {
    value.ok_or_else(|| format!("{variant} requires {flag}"))
}

fn dispatch(
    cmd: Cmd,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    match cmd {
        Cmd::Wiener {
            file,
            weighted,
            format,
        } => {
            let text = read_input(&file, stdin)?;
            if weighted || file.ends_with(".wg") {
                let g = WeightedGraph::from_wg_str(&text).map_err(|e| e.to_string())?;
                let w = wiener_w(&g);
                match format {
                    Format::Json => say(
                        stdout,
                        &json!({"n": g.n(), "m": g.m(), "wiener": w}).to_string(),
                    )?,
                    Format::Text => {
                        say(stdout, &format!("n: {}\nm: {}\nwiener: {}", g.n(), g.m(), w))?
                    }
                }
            } else {
                let h = Hypergraph::from_hg_str(&text).map_err(|e| e.to_string())?;
                let dm = distance_matrix(&h);
                let dd = dm.distribution();
                match format {
                    Format::Json => say(
                        stdout,
                        &json!({
                            "n": h.n(), "k": h.k(), "m": h.m(),
                            "wiener": dm.wiener(), "distribution": dd,
                        })
                        .to_string(),
                    )?,
                    Format::Text => {
                        let mut line = String::new();
                        for (d, c) in &dd.counts {
                            let _ = write!(line, " {d}:{c}");
                        }
                        if dd.infinite > 0 {
                            let _ = write!(line, " inf:{}", dd.infinite);
                        }
                        say(
                            stdout,
                            &format!(
                                "n: {}\nk: {}\nm: {}\nwiener: {}\ndistribution:{}",
                                h.n(),
                                h.k(),
                                h.m(),
                                dm.wiener(),
                                line
                            ),
                        )?;
                    }
                }
            }
            Ok(0)
        }

        Cmd::Check {
            file,
            weighted,
            format,
        } => {
            let text = read_input(&file, stdin)?;
            if weighted || file.ends_with(".wg") {
                let g = WeightedGraph::from_wg_str(&text).map_err(|e| e.to_string())?;
                let rpt = soltes_report_w(&g);
                emit_weighted_report(&rpt, format, stdout)?;
                Ok(if rpt.verdict { 0 } else { 1 })
            } else {
                let h = Hypergraph::from_hg_str(&text).map_err(|e| e.to_string())?;
                let rpt = soltes_report(&h);
                emit_report(&rpt, format, stdout)?;
                Ok(if rpt.verdict { 0 } else { 1 })
            }
        }

        Cmd::Construct {
            variant,
            n,
            s,
            t,
            r,
            k,
            convention,
            output,
            quiet,
        } => {
            let conv: Option<Convention> = convention.map(Convention::from);
            match variant {
                VariantArg::Knits => {
                    let n = require(n, "--n", "knits")?;
                    if (92..100).contains(&n) {
                        let _ = writeln!(
                            stderr,
                            "note: orders in [92, 100) sit at the tight end of the \
                             parameter window; orders >= 100 have more slack"
                        );
                    }
                    let h = knits(n).map_err(|e| e.to_string())?;
                    let kp = knits_params(n).expect("knits succeeded on these parameters");
                    let desc = ConstructionParams {
                        variant: Variant::Knits,
                        s: Some(kp.s),
                        t: Some(kp.t),
                        r: None,
                        n,
                        k: kp.k,
                        convention: None,
                    };
                    emit_hypergraph(&h, &desc, output.as_deref(), quiet, stdout, stderr)
                }
                VariantArg::GeneralR => {
                    let s = require(s, "--s", "general-r")?;
                    let t = require(t, "--t", "general-r")?;
                    let r = require(r, "--r", "general-r")?;
                    let conv = conv.unwrap_or(RESOLVED_CONVENTION);
                    let h = general_r(s, t, r, conv).map_err(|e| e.to_string())?;
                    let desc = ConstructionParams {
                        variant: Variant::GeneralR,
                        s: Some(s),
                        t: Some(t),
                        r: Some(r),
                        n: h.n() as u64,
                        k: h.k() as u64,
                        convention: Some(conv),
                    };
                    emit_hypergraph(&h, &desc, output.as_deref(), quiet, stdout, stderr)
                }
                VariantArg::Irregular54 => {
                    if n.or(s).or(t).or(r).or(k).is_some() {
                        return Err("irregular54 takes no parameters".into());
                    }
                    let h = irregular54();
                    let desc = ConstructionParams {
                        variant: Variant::Irregular54,
                        s: None,
                        t: None,
                        r: None,
                        n: 54,
                        k: 9,
                        convention: None,
                    };
                    emit_hypergraph(&h, &desc, output.as_deref(), quiet, stdout, stderr)
                }
                VariantArg::Cycle => {
                    let n = require(n, "--n", "cycle")?;
                    let h = cycle_graph(n).map_err(|e| e.to_string())?;
                    let desc = ConstructionParams {
                        variant: Variant::Cycle,
                        s: None,
                        t: None,
                        r: None,
                        n,
                        k: 2,
                        convention: None,
                    };
                    emit_hypergraph(&h, &desc, output.as_deref(), quiet, stdout, stderr)
                }
                VariantArg::Prism => {
                    let k = require(k, "--k", "prism")?;
                    let g = prism_soltes(k).map_err(|e| e.to_string())?;
                    let desc = ConstructionParams {
                        variant: Variant::Prism,
                        s: None,
                        t: None,
                        r: None,
                        n: 4 * k,
                        k,
                        convention: None,
                    };
                    write_output(output.as_deref(), &g.to_wg_string(), stdout)?;
                    if !quiet {
                        let _ = writeln!(
                            stderr,
                            "{}",
                            serde_json::to_string(&desc).expect("descriptor serializes")
                        );
                        let _ = writeln!(
                            stderr,
                            "constructed weighted graph: n={} m={} connected={}",
                            g.n(),
                            g.m(),
                            g.is_connected()
                        );
                    }
                    Ok(0)
                }
            }
        }

        Cmd::Search {
            spec,
            partitions,
            output,
        } => {
            let text = read_input(&spec, stdin)?;
            let mut spec: SearchSpec =
                serde_json::from_str(&text).map_err(|e| format!("search spec: {e}"))?;
            if let Some(p) = partitions.or_else(env_partitions) {
                spec.partitions = p;
            }
            let result = search_soltes(&spec).map_err(|e| e.to_string())?;
            let mut ndjson = String::new();
            for h in &result.witnesses {
                let _ = writeln!(
                    ndjson,
                    "{}",
                    json!({"record": "witness", "hypergraph": h, "wiener": wiener(h)})
                );
            }
            let _ = writeln!(
                ndjson,
                "{}",
                json!({
                    "record": "summary",
                    "status": result.status,
                    "classes_visited": result.classes_visited,
                    "witnesses": result.witnesses.len(),
                    "stats": result.stats,
                    "spec": result.spec,
                })
            );
            write_output(output.as_deref(), &ndjson, stdout)?;
            Ok(if result.status == SearchStatus::Complete {
                0
            } else {
                1
            })
        }

        Cmd::Lemmas {
            samples,
            seed,
            format,
        } => {
            let report = lemma_suite(samples, seed);
            match format {
                Format::Json => say(
                    stdout,
                    &serde_json::to_string_pretty(&report).expect("report serializes"),
                )?,
                Format::Text => write!(stdout, "{report}").map_err(|e| e.to_string())?,
            }
            Ok(if report.pass() { 0 } else { 1 })
        }

        Cmd::VerifyPaper {
            quick,
            seed,
            partitions,
        } => {
            let opts = VerifyOptions {
                quick,
                seed,
                partitions: partitions
                    .or_else(env_partitions)
                    .unwrap_or_else(|| VerifyOptions::default().partitions),
            };
            let mut all_pass = true;
            for check in run_all(&opts) {
                all_pass &= check.pass;
                say(
                    stdout,
                    &format!(
                        "{} {}: {}",
                        if check.pass { "PASS" } else { "FAIL" },
                        check.name,
                        check.detail
                    ),
                )?;
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn emit_hypergraph(
    h: &Hypergraph,
    desc: &ConstructionParams,
    output: Option<&str>,
    quiet: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    write_output(output, &h.to_hg_string(), stdout)?;
    if !quiet {
        let _ = writeln!(
            stderr,
            "{}",
            serde_json::to_string(desc).expect("descriptor serializes")
        );
        let _ = writeln!(
            stderr,
            "constructed n={} k={} m={} connected={}",
            h.n(),
            h.k(),
            h.m(),
            is_connected(h)
        );
    }
    Ok(0)
}

fn emit_report(rpt: &SoltesReport, format: Format, stdout: &mut dyn Write) -> Result<(), String> {
    match format {
        Format::Json => say(
            stdout,
            &serde_json::to_string_pretty(rpt).expect("report serializes"),
        ),
        Format::Text => {
            let mut text = format!("wiener: {}\n", rpt.wiener);
            for v in &rpt.vertices {
                let _ = writeln!(
                    text,
                    "v={} sigma={} detour={} wiener_after={} delta={}",
                    v.label, v.sigma, v.detour_sum, v.wiener_after, v.delta
                );
            }
            let _ = write!(text, "verdict: {}", rpt.verdict);
            say(stdout, &text)
        }
    }
}

fn emit_weighted_report(
    rpt: &WSoltesReport,
    format: Format,
    stdout: &mut dyn Write,
) -> Result<(), String> {
    match format {
        Format::Json => say(
            stdout,
            &serde_json::to_string_pretty(rpt).expect("report serializes"),
        ),
        Format::Text => {
            let mut text = format!("wiener: {}\n", rpt.wiener);
            for v in &rpt.vertices {
                let _ = writeln!(
                    text,
                    "v={} sigma={} detour={} wiener_after={} delta={}",
                    v.label, v.sigma, v.detour_sum, v.wiener_after, v.delta
                );
            }
            let _ = write!(text, "verdict: {}", rpt.verdict);
            say(stdout, &text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn exec(args: &[&str], stdin_text: &str) -> (i32, String, String) {
        let mut stdin = Cursor::new(stdin_text.as_bytes().to_vec());
        let mut out: Vec<u8> = Vec::new();
        let mut err: Vec<u8> = Vec::new();
        let code = run(args.iter().copied(), &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn wiener_from_stdin() {
        let (code, out, _) = exec(&["soltes", "wiener", "-"], "3 1\n0 1 2\n");
        assert_eq!(code, 0);
        assert!(out.contains("wiener: 3"));
        assert!(out.contains("distribution: 1:3"));
    }

    #[test]
    fn wiener_handles_disconnected_input() {
        let (code, out, _) = exec(&["soltes", "wiener", "-"], "4 1\n0 1\n");
        assert_eq!(code, 0);
        assert!(out.contains("wiener: inf"));
        assert!(out.contains("inf:5"));
    }

    #[test]
    fn construct_pipes_into_check() {
        let (code, hg, err) = exec(&["soltes", "construct", "--variant", "cycle", "--n", "11"], "");
        assert_eq!(code, 0);
        assert!(err.contains("\"variant\":\"CYCLE\""));
        let (code, out, _) = exec(&["soltes", "check", "-"], &hg);
        assert_eq!(code, 0, "C11 verdict should be positive");
        assert!(out.contains("wiener: 165"));
        assert!(out.contains("verdict: true"));
    }

    #[test]
    fn check_rejects_c10() {
        let (_, hg, _) = exec(&["soltes", "construct", "--variant", "cycle", "--n", "10"], "");
        let (code, out, _) = exec(&["soltes", "check", "-", "--format", "json"], &hg);
        assert_eq!(code, 1);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], serde_json::Value::Bool(false));
        assert_eq!(v["wiener"], serde_json::json!(125));
    }

    #[test]
    fn construct_knits_warns_below_100() {
        let (code, out, err) = exec(&["soltes", "construct", "--variant", "knits", "--n", "95"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("95 95\n"));
        assert!(err.contains("note:"));
        assert!(err.contains("\"variant\":\"KNITS\""));
        let (code, _, err) =
            exec(&["soltes", "construct", "--variant", "knits", "--n", "105"], "");
        assert_eq!(code, 0);
        assert!(!err.contains("note:"));
    }

    #[test]
    fn construct_rejects_bad_parameters() {
        let (code, _, err) = exec(&["soltes", "construct", "--variant", "knits", "--n", "91"], "");
        assert_eq!(code, 2);
        assert!(err.contains("error:"));
        let (code, _, _) = exec(&["soltes", "construct", "--variant", "cycle"], "");
        assert_eq!(code, 2);
        let (code, _, _) = exec(
            &["soltes", "construct", "--variant", "irregular54", "--n", "5"],
            "",
        );
        assert_eq!(code, 2);
    }

    #[test]
    fn construct_prism_emits_weighted_format() {
        let (code, wg, err) = exec(
            &["soltes", "construct", "--variant", "prism", "--k", "20"],
            "",
        );
        assert_eq!(code, 0);
        assert!(wg.starts_with("80 120\n"));
        assert!(err.contains("\"variant\":\"PRISM\""));
        let (code, out, _) = exec(&["soltes", "check", "-", "--weighted"], &wg);
        assert_eq!(code, 0);
        assert!(out.contains("wiener: 36800"));
        let (code, out, _) = exec(
            &["soltes", "wiener", "-", "--weighted", "--format", "json"],
            &wg,
        );
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["wiener"], serde_json::json!("36800"));
    }

    #[test]
    fn search_emits_ndjson_and_status_codes() {
        let (code, out, _) = exec(
            &["soltes", "search", "-"],
            r#"{"n": 5, "k": 2, "m_max": 10}"#,
        );
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.trim_end().lines().collect();
        let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
        assert_eq!(summary["record"], "summary");
        assert_eq!(summary["status"], "COMPLETE");
        assert_eq!(summary["witnesses"], serde_json::json!(0));
        assert_eq!(lines.len(), 1);

        let (code, out, _) = exec(
            &["soltes", "search", "-", "--partitions", "3"],
            r#"{"n": 11, "k": 2, "m_max": 11, "require_all_deletions_connected": true}"#,
        );
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.trim_end().lines().collect();
        assert_eq!(lines.len(), 2);
        let witness: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(witness["record"], "witness");
        assert_eq!(witness["hypergraph"]["n"], serde_json::json!(11));
        assert_eq!(witness["wiener"], serde_json::json!(165));

        let (code, out, _) = exec(
            &["soltes", "search", "-"],
            r#"{"n": 6, "k": 3, "m_max": 8, "node_budget": 3}"#,
        );
        assert_eq!(code, 1);
        assert!(out.contains("EXHAUSTED_BUDGET"));
    }

    #[test]
    fn search_rejects_bad_specs() {
        let (code, _, err) = exec(&["soltes", "search", "-"], r#"{"n": 5}"#);
        assert_eq!(code, 2);
        assert!(err.contains("search spec"));
        let (code, _, _) = exec(&["soltes", "search", "-"], r#"{"n": 5, "k": 9, "m_max": 1}"#);
        assert_eq!(code, 2);
    }

    #[test]
    fn lemmas_small_run_passes() {
        let (code, out, _) = exec(&["soltes", "lemmas", "--samples", "300", "--seed", "7"], "");
        assert_eq!(code, 0);
        assert!(out.contains("violations: none"));
        let (code, out, _) = exec(
            &[
                "soltes", "lemmas", "--samples", "200", "--seed", "7", "--format", "json",
            ],
            "",
        );
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["violations"], serde_json::json!([]));
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, _) = exec(&["soltes", "frobnicate"], "");
        assert_eq!(code, 2);
        let (code, _, _) = exec(&["soltes", "wiener"], "");
        assert_eq!(code, 2);
        let (code, _, _) = exec(&["soltes", "wiener", "-", "--bogus"], "");
        assert_eq!(code, 2);
        let (code, _, err) = exec(&["soltes", "wiener", "/no/such/file.hg"], "");
        assert_eq!(code, 2);
        assert!(err.contains("/no/such/file.hg"));
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = exec(&["soltes", "--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("verify-paper"));
    }
}
