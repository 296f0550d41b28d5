//! Text, JSON, CSV, and DOT renderings of the reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use num_bigint::BigUint;
use schubert_core::decompose::DecompositionReport;
use schubert_core::sphericity::{ScanRow, SphericityVerdict};
use schubert_core::{GrassmannWord, LeviContext, PluckerMonomial, StandardExpansion};
use serde::Serialize;
use serde_json::json;

use crate::Format;

const PALETTE: [&str; 10] =
    ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"];

fn set(items: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn tuple(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn json_string(value: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_string<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn header(levi: &LeviContext) -> String {
    let ctx = levi.ctx();
    let blocks: Vec<String> = levi.blocks().iter().map(|b| format!("{}-{}", b.start(), b.end())).collect();
    format!(
        "w = {} in Gr({},{})\nR_Q = {}\nblocks: {}\n",
        ctx.w(),
        ctx.d(),
        ctx.n(),
        set(levi.r_q().iter().copied()),
        blocks.join(" | ")
    )
}

/// Hasse diagram with one fill color per component and heads drawn bold.
fn dot(levi: &LeviContext) -> String {
    let partition = levi.hasse_partition();
    let mut color = BTreeMap::new();
    for (k, (head, members)) in partition.iter().enumerate() {
        for m in members {
            color.insert(m.clone(), (PALETTE[k % PALETTE.len()], head));
        }
    }
    let mut out =
        String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box, style=filled, fontname=\"Helvetica\"];\n");
    let diagram = levi.ctx().hasse_diagram();
    for node in &diagram.nodes {
        let (fill, head) = color[node];
        let bold = if node == head { ", style=\"filled,bold\", penwidth=3" } else { "" };
        let _ = writeln!(out, "  \"{node}\" [fillcolor=\"{fill}\"{bold}];");
    }
    for e in &diagram.edges {
        let style = if levi.r_q().contains(&e.label) { "" } else { ", style=dashed, color=gray" };
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"{style}];", e.lower, e.upper, e.label);
    }
    out.push_str("}\n");
    out
}

pub fn heads(levi: &LeviContext, format: Format) -> Result<String> {
    let partition = levi.hasse_partition();
    match format {
        Format::Dot => Ok(dot(levi)),
        Format::Text => {
            let mut out = header(levi);
            let _ = writeln!(out, "heads: {}", partition.len());
            for (head, members) in &partition {
                let class = tuple(&levi.class_of(head)?);
                let _ = writeln!(out, "  {head}  class {class}  component size {}", members.len());
            }
            Ok(out)
        }
        Format::Json => {
            let heads: Vec<_> = partition
                .iter()
                .map(|(head, members)| Ok(json!({ "head": head, "class": levi.class_of(head)?, "component": members })))
                .collect::<Result<_>>()?;
            let ctx = levi.ctx();
            json_string(&json!({
                "N": ctx.n(),
                "d": ctx.d(),
                "w": ctx.w(),
                "r_q": levi.r_q(),
                "blocks": levi.blocks().iter().map(|b| [b.start(), b.end()]).collect::<Vec<_>>(),
                "heads": heads,
            }))
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                head: String,
                class: String,
                component_size: usize,
            }
            let rows = partition
                .iter()
                .map(|(head, members)| {
                    Ok(Row {
                        head: head.to_string(),
                        class: tuple(&levi.class_of(head)?),
                        component_size: members.len(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            csv_string(rows)
        }
    }
}

pub fn hasse(levi: &LeviContext, format: Format) -> Result<String> {
    let diagram = levi.ctx().hasse_diagram();
    let component: BTreeMap<&GrassmannWord, GrassmannWord> =
        diagram.nodes.iter().map(|n| (n, levi.head_of(n))).collect();
    match format {
        Format::Dot => Ok(dot(levi)),
        Format::Text => {
            let mut out = header(levi);
            let _ = writeln!(out, "nodes: {}  edges: {}", diagram.nodes.len(), diagram.edges.len());
            for e in &diagram.edges {
                let inside = if levi.r_q().contains(&e.label) { "" } else { "  (between components)" };
                let _ = writeln!(out, "  {} < {}  s_{}{inside}", e.lower, e.upper, e.label);
            }
            Ok(out)
        }
        Format::Json => {
            let nodes: Vec<_> = diagram.nodes.iter().map(|n| json!({ "word": n, "head": component[n] })).collect();
            json_string(&json!({ "nodes": nodes, "edges": diagram.edges }))
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                lower: String,
                upper: String,
                label: usize,
            }
            csv_string(diagram.edges.iter().map(|e| Row {
                lower: e.lower.to_string(),
                upper: e.upper.to_string(),
                label: e.label,
            }))
        }
    }
}

pub fn straightened(
    input: &PluckerMonomial,
    expansion: &StandardExpansion,
    oracle: Option<usize>,
    trials: usize,
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => {
            let terms: Vec<_> =
                expansion.iter().map(|(m, c)| json!({ "monomial": m, "coefficient": c.to_string() })).collect();
            let mut value = json!({ "input": input.to_string(), "terms": terms });
            if let Some(k) = oracle {
                value["oracle"] = json!({ "matches": k, "trials": trials });
            }
            json_string(&value)
        }
        Format::Text => {
            let mut out = format!("{expansion}\n");
            if let Some(k) = oracle {
                let _ = writeln!(out, "oracle: {k}/{trials} exact matches");
            }
            Ok(out)
        }
        _ => bail!("unsupported format"),
    }
}

pub fn count(n: &BigUint, format: Format) -> Result<String> {
    match format {
        Format::Json => json_string(&json!({ "count": n.to_string() })),
        Format::Csv => Ok(format!("count\n{n}\n")),
        _ => Ok(format!("{n}\n")),
    }
}

pub fn monomials(list: &[Vec<GrassmannWord>], format: Format) -> Result<String> {
    let text = |m: &Vec<GrassmannWord>| m.iter().map(ToString::to_string).collect::<String>();
    match format {
        Format::Json => json_string(&list),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                monomial: String,
            }
            csv_string(list.iter().map(|m| Row { monomial: text(m) }))
        }
        _ => Ok(list.iter().map(|m| text(m) + "\n").collect()),
    }
}

pub fn decomposition(report: &DecompositionReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(report.to_json() + "\n"),
        Format::Text => {
            let mut out = format!(
                "degree {} of C[X{}] in Gr({},{}), R_Q = {}\n",
                report.degree,
                report.w,
                report.d,
                report.n,
                set(report.r_q.iter().copied())
            );
            out.push_str("constituents are duals of the listed Weyl modules\n");
            for (k, e) in report.entries.iter().enumerate() {
                let shapes: Vec<String> = e.shapes.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "[{}] heads {}", k + 1, e.heads);
                let _ = writeln!(out, "    shapes {}  dim {}", shapes.join(" x "), e.tensor_dim);
                for c in &e.constituents {
                    let parts: Vec<String> = c.parts.iter().map(ToString::to_string).collect();
                    let _ = writeln!(out, "    {} x{}", parts.join(" x "), c.multiplicity);
                }
            }
            let _ = writeln!(out, "total_dim {}", report.total_dim);
            Ok(out)
        }
        _ => bail!("unsupported format"),
    }
}

pub fn verdicts(list: &[SphericityVerdict], format: Format) -> Result<String> {
    let rows: Vec<ScanRow> = list.iter().map(ScanRow::from).collect();
    match format {
        Format::Json => json_string(&list),
        Format::Csv => csv_string(&rows),
        _ => {
            let header = ["w", "dprl", "smooth", "determinantal", "theorem_verdict", "empirical_bound", "empirical_ok"];
            let cells: Vec<[String; 7]> = rows
                .iter()
                .map(|r| {
                    [
                        r.w.clone(),
                        r.dprl.to_string(),
                        r.smooth.clone(),
                        r.determinantal.clone(),
                        r.theorem_verdict.clone(),
                        r.empirical_bound.to_string(),
                        r.empirical_ok.clone(),
                    ]
                })
                .collect();
            let widths: Vec<usize> = (0..7)
                .map(|j| cells.iter().map(|c| c[j].chars().count()).chain([header[j].len()]).max().unwrap())
                .collect();
            let line = |cols: Vec<&str>| {
                let padded: Vec<String> = cols.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(header.to_vec());
            for c in &cells {
                out.push_str(&line(c.iter().map(String::as_str).collect()));
            }
            if rows.iter().any(|r| r.empirical_bound > 0) {
                out.push_str("empirical columns check degrees up to the bound only\n");
            }
            Ok(out)
        }
    }
}
