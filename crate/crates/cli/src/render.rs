use std::fmt::Write;

use fermix_core::emit_qasm;

use crate::args::Format;
use crate::commands::{Report, Results};

/// Text for `report` in its configured format. Deterministic: the same report
/// always renders to the same bytes.
pub fn render(report: &Report) -> String {
    match (report.config.format, &report.results) {
        (Format::Qasm, Results::Synth(s)) => emit_qasm(&s.circuit),
        (Format::Json, _) => {
            let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
            text.push('\n');
            text
        }
        (Format::Csv, results) => csv(results),
        (_, results) => table(results),
    }
}

fn rows_of(results: &Results) -> (Vec<&'static str>, Vec<Vec<String>>) {
    match results {
        Results::Stats(rows) => (
            vec![
                "n",
                "optimized_count",
                "optimized_depth",
                "standard_count",
                "standard_depth",
                "formula_count",
                "formula_depth",
                "match",
            ],
            rows.iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.optimized_count.to_string(),
                        r.optimized_depth.to_string(),
                        r.standard_count.to_string(),
                        r.standard_depth.to_string(),
                        r.formula_count.to_string(),
                        r.formula_depth.to_string(),
                        r.matches.to_string(),
                    ]
                })
                .collect(),
        ),
        Results::Compare(c) => (
            vec!["n", "optimized_count", "standard_count", "ratio"],
            c.rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.optimized_count.to_string(),
                        r.standard_count.to_string(),
                        format!("{:.6}", r.ratio),
                    ]
                })
                .collect(),
        ),
        Results::Verify(v) => (
            vec!["distance", "pass", "cnot_count", "cnot_depth"],
            vec![vec![
                format!("{:.3e}", v.distance),
                v.pass.to_string(),
                v.cnot_count.to_string(),
                v.cnot_depth.to_string(),
            ]],
        ),
        Results::Synth(s) => (
            vec!["kind", "angle", "operands"],
            s.gates
                .iter()
                .map(|g| {
                    let operands: Vec<String> = g.operands.iter().map(usize::to_string).collect();
                    vec![
                        g.kind.to_string(),
                        g.angle.map_or_else(String::new, |a| format!("{a:e}")),
                        operands.join(" "),
                    ]
                })
                .collect(),
        ),
    }
}

fn csv(results: &Results) -> String {
    let (header, rows) = rows_of(results);
    let mut text = header.join(",");
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    text
}

fn table(results: &Results) -> String {
    let (header, rows) = rows_of(results);
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(c, h)| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut text = line(header.clone());
    for row in &rows {
        text.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    if let Results::Compare(c) = results {
        let _ = writeln!(
            text,
            "asymptotic_ratio (n = {}): {:.6}",
            c.rows.last().map_or(0, |r| r.n),
            c.asymptotic_ratio
        );
        let _ = writeln!(text, "limit: {}", c.limit);
        let _ = writeln!(text, "monotone: {}", c.monotone);
    }
    text
}
