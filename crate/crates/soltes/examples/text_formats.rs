//! The on-disk formats: `.hg` for hypergraphs, `.wg` for weighted graphs,
//! and the JSON shapes used by the CLI.
//!
//! Both text formats are line-oriented, allow `#` comments, and round-trip
//! exactly. JSON serialization is plain serde: reports, search specs, and
//! search results all derive it, with rationals carried as strings so no
//! precision is lost.

use soltes::search::SearchSpec;
use soltes::weighted::WeightedGraph;
use soltes::{soltes_report, Hypergraph};

fn main() {
    // .hg: header `n m`, then one edge per line; k is read off the first
    // edge and every later edge must match it.
    let text = "\
# a 4-cycle as a 2-uniform hypergraph
4 4
0 1
1 2
2 3
0 3
";
    let h = Hypergraph::from_hg_str(text).expect("well-formed");
    assert_eq!((h.n(), h.k(), h.m()), (4, 2, 4));
    let round = Hypergraph::from_hg_str(&h.to_hg_string()).expect("own output parses");
    assert_eq!(round, h);
    println!(".hg round-trip:\n{}", h.to_hg_string());

    // .wg: header `n m`, then `u v w` with w an exact rational.
    let text = "\
3 3
0 1 1/2
1 2 3
0 2 0   # zero weights are allowed
";
    let g = WeightedGraph::from_wg_str(text).expect("well-formed");
    let round = WeightedGraph::from_wg_str(&g.to_wg_string()).expect("own output parses");
    assert_eq!(round, g);
    println!(".wg round-trip:\n{}", g.to_wg_string());

    // JSON: the report the CLI emits for `check --format json`.
    let report = soltes_report(&h);
    let json = serde_json::to_string_pretty(&report).expect("serializable");
    println!("SoltesReport as JSON:\n{json}\n");
    // Infinite distances serialize as the string "inf", finite ones as
    // numbers, so the schema stays lossless for disconnected inputs.

    // JSON: a search spec, as consumed by `search`. Defaults may be omitted.
    let spec: SearchSpec =
        serde_json::from_str(r#"{"n": 6, "k": 3, "m_max": 4}"#).expect("valid spec");
    assert!(spec.require_connected && spec.validate().is_ok());
    println!("SearchSpec with defaults filled in:\n{}",
        serde_json::to_string_pretty(&spec).expect("serializable"));
}
