//! CSV and text views of a payload.

use std::fmt::Write;

use serde_json::Value;

/// A JSON scalar as plain text.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn partition(v: &Value) -> String {
    let parts: Vec<String> = v.as_array().map(|a| a.iter().map(plain).collect()).unwrap_or_default();
    if parts.is_empty() {
        "∅".into()
    } else {
        format!("({})", parts.join(","))
    }
}

fn bipartition(v: &Value) -> String {
    let parts: Vec<String> = v
        .as_array()
        .map(|a| a.iter().map(|p| format!("[{},{}]", plain(&p[0]), plain(&p[1]))).collect())
        .unwrap_or_default();
    format!("{{{}}}", parts.join(","))
}

fn list(v: &Value) -> &[Value] {
    v.as_array().map(Vec::as_slice).unwrap_or(&[])
}

fn table(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn strings<const N: usize>(items: [&str; N]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

pub fn csv(command: &str, p: &Value) -> String {
    match command {
        "bipar" if p.get("bipartitions").is_none() => {
            table(strings(["k", "count"]), vec![vec![plain(&p["k"]), plain(&p["count"])]])
        }
        "bipar" => table(
            strings(["index", "bipartition"]),
            list(&p["bipartitions"])
                .iter()
                .enumerate()
                .map(|(i, b)| vec![(i + 1).to_string(), bipartition(b)])
                .collect(),
        ),
        "dims" if p.get("rows").is_some() => {
            let mut header = vec!["lambda".to_string()];
            header.extend(list(&p["weights"]).iter().map(|w| format!("K[{}]", partition(w))));
            header.extend(strings(["specht_dim", "g_dim"]));
            let rows = list(&p["rows"])
                .iter()
                .map(|r| {
                    let mut row = vec![partition(&r["lambda"])];
                    row.extend(list(&r["kostka"]).iter().map(plain));
                    row.extend([plain(&r["specht_dim"]), plain(&r["g_dim"])]);
                    row
                })
                .collect();
            table(header, rows)
        }
        "dims" => table(
            strings(["label", "dim"]),
            list(&p["labels"]).iter().zip(list(&p["dims"])).map(|(l, d)| vec![partition(l), plain(d)]).collect(),
        ),
        "decomp" => {
            let labels: Vec<String> = list(&p["labels"]).iter().map(partition).collect();
            let mut header = strings(["label", "cell_dim", "simple_dim"]);
            header.extend(labels.iter().cloned());
            let rows = labels
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    let mut row = vec![l.clone(), plain(&p["cell_dims"][i]), plain(&p["simple_dims"][i])];
                    row.extend(list(&p["matrix"][i]).iter().map(plain));
                    row
                })
                .collect();
            table(header, rows)
        }
        "rank" => {
            let keys = ["k", "t", "basis_size", "rank", "bp", "full_rank"];
            table(strings(keys), vec![keys.iter().map(|k| plain(&p[*k])).collect()])
        }
        "schur-weyl" => table(
            strings(["lambda", "g_dim", "aitken"]),
            list(&p["multiplicities"])
                .iter()
                .map(|m| vec![partition(&m["lambda"]), plain(&m["g_dim"]), plain(&m["aitken"])])
                .collect(),
        ),
        "verify" => table(
            strings(["check", "k", "n", "pass", "detail"]),
            list(&p["checks"])
                .iter()
                .map(|c| ["check", "k", "n", "pass", "detail"].iter().map(|k| plain(&c[*k])).collect())
                .collect(),
        ),
        _ => unreachable!("unknown subcommand {command}"),
    }
}

pub fn text(command: &str, p: &Value) -> String {
    let mut out = String::new();
    let o = &mut out;
    match command {
        "bipar" => {
            let _ = writeln!(o, "bp_{} = {}", plain(&p["k"]), plain(&p["count"]));
            for b in list(&p["bipartitions"]) {
                let _ = writeln!(o, "  {}", bipartition(b));
            }
        }
        "dims" if p.get("rows").is_some() => {
            let weights: Vec<String> = list(&p["weights"]).iter().map(partition).collect();
            let _ = writeln!(o, "k = {}, n = {}; columns Φ(ν) = {}", plain(&p["k"]), plain(&p["n"]), weights.join(" "));
            for r in list(&p["rows"]) {
                let entries: Vec<String> = list(&r["kostka"]).iter().map(plain).collect();
                let _ = writeln!(
                    o,
                    "  {:<16} {}  dim S = {}  dim G = {}",
                    partition(&r["lambda"]),
                    entries.join(" "),
                    plain(&r["specht_dim"]),
                    plain(&r["g_dim"])
                );
            }
            let _ =
                writeln!(o, "Σ (dim G)² = {} (centralizer {})", plain(&p["square_sum"]), plain(&p["centralizer_dim"]));
            let _ = writeln!(
                o,
                "Σ dim S · dim G = {} (dim S^k V_n = {})",
                plain(&p["pairing_sum"]),
                plain(&p["symmetric_power_dim"])
            );
        }
        "dims" => {
            let _ = writeln!(o, "k = {}, {} poset", plain(&p["k"]), plain(&p["poset"]));
            for (l, d) in list(&p["labels"]).iter().zip(list(&p["dims"])) {
                let _ = writeln!(o, "  {:<16} {}", partition(l), plain(d));
            }
            let _ = writeln!(o, "Σ dim² = {} (expected {})", plain(&p["square_sum"]), plain(&p["expected_square_sum"]));
        }
        "decomp" => {
            let labels: Vec<String> = list(&p["labels"]).iter().map(partition).collect();
            let _ = writeln!(o, "k = {}, n = {}, {} poset", plain(&p["k"]), plain(&p["n"]), plain(&p["poset"]));
            let _ = writeln!(o, "blocks:");
            for chain in list(&p["chains"]) {
                let members: Vec<&str> =
                    list(chain).iter().filter_map(Value::as_u64).map(|i| labels[i as usize].as_str()).collect();
                let _ = writeln!(o, "  {}", members.join(" -> "));
            }
            let _ = writeln!(o, "dimensions (cell, simple):");
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(o, "  {:<16} {} {}", l, plain(&p["cell_dims"][i]), plain(&p["simple_dims"][i]));
            }
        }
        "rank" => {
            let _ = writeln!(
                o,
                "k = {}, t = {}: rank {} of {} (bp_k = {})",
                plain(&p["k"]),
                plain(&p["t"]),
                plain(&p["rank"]),
                plain(&p["basis_size"]),
                plain(&p["bp"])
            );
        }
        "schur-weyl" => {
            let _ = writeln!(o, "S^{} V_{}: dim {}", plain(&p["k"]), plain(&p["n"]), plain(&p["symmetric_power_dim"]));
            for s in list(&p["summands"]) {
                let _ = writeln!(o, "  M{}  dim {}", partition(&s["alpha"]), plain(&s["dim"]));
            }
            for m in list(&p["multiplicities"]) {
                let _ = writeln!(o, "  [S^k V_n : S{}] = {}", partition(&m["lambda"]), plain(&m["g_dim"]));
            }
            let _ =
                writeln!(o, "centralizer dim {} (Σ squares {})", plain(&p["centralizer_dim"]), plain(&p["square_sum"]));
        }
        "verify" => {
            for c in list(&p["checks"]) {
                let status = if c["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                let n = if c["n"].is_null() { String::new() } else { format!(" n={}", plain(&c["n"])) };
                let _ = writeln!(o, "{status} {} k={}{n}: {}", plain(&c["check"]), plain(&c["k"]), plain(&c["detail"]));
            }
            let _ =
                writeln!(o, "{}: {} checks, {} failed", plain(&p["suite"]), plain(&p["total"]), plain(&p["failed"]));
        }
        _ => unreachable!("unknown subcommand {command}"),
    }
    out
}
