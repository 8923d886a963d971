use std::path::Path;
use std::sync::Arc;
use std::time::Duration;

use serde_json::{json, Value};

use shiftlab::aop::{decide_aop_with, verify_aop, AopCheck, AopVerdict, Budget, SearchOptions};
use shiftlab::coloring::{
    color_kab_free, coloring_to_orientation, k_star, log_color_line_digraph, orientation_to_coloring, Coloring,
};
use shiftlab::constructors::{
    acyclic_tournament, brinkmann_graph, girth5_non_aop, iterate_line_digraph, line_digraph, odd_girth_gadget,
    shift_graph, zykov,
};
use shiftlab::invariants::{
    chromatic_bounds, chromatic_number_capped, clique_number, degeneracy, dsatur_greedy, girth, odd_girth,
    CycleLength, DEFAULT_CHROMATIC_CAP,
};
use shiftlab::{AcyclicDigraph, Orientation, ParsedGraph, UndirectedGraph};

use crate::error::{CliError, CliResult};
use crate::io::{emit, read_digraph, read_file, read_graph, read_undirected, render, summary};
use crate::{AopOp, ColorOp, DeriveOp, GallaiRoyOp, GenFamily, Output};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_TIMEOUT: u8 = 2;

fn write_undirected(g: &UndirectedGraph, output: &Output, what: &str) -> CliResult<u8> {
    emit(output.out.as_deref(), &render(g, UndirectedGraph::to_json, output.dot))?;
    summary(
        output.out.as_deref(),
        &format!("{what}: {} vertices, {} edges", g.n(), g.edge_count()),
    );
    Ok(EXIT_OK)
}

fn write_directed(d: &AcyclicDigraph, output: &Output, what: &str) -> CliResult<u8> {
    emit(output.out.as_deref(), &render(d, AcyclicDigraph::to_json, output.dot))?;
    summary(
        output.out.as_deref(),
        &format!("{what}: {} vertices, {} arcs", d.n(), d.arc_count()),
    );
    Ok(EXIT_OK)
}

pub fn gen(family: GenFamily) -> CliResult<u8> {
    match family {
        GenFamily::Tournament { n, output } => write_directed(&acyclic_tournament(n)?, &output, &format!("T_{n}")),
        GenFamily::Shift { n, k, output } => write_undirected(&shift_graph(n, k)?, &output, &format!("G({n},{k})")),
        GenFamily::Zykov { n, cap, output } => write_directed(&zykov(n, cap)?.digraph(), &output, &format!("Z_{n}")),
        GenFamily::Gadget { g, output } => write_undirected(&odd_girth_gadget(g)?, &output, &format!("gadget({g})")),
        GenFamily::Girth5 { base, output } => {
            let base = match base {
                Some(path) => read_graph(&path)?.into_undirected(),
                None => brinkmann_graph(),
            };
            let built = girth5_non_aop(&base)?;
            let what = format!("girth-5 construction with {} apexes", built.apex_paths.len());
            write_undirected(&built.graph, &output, &what)
        }
    }
}

pub fn derive(op: DeriveOp) -> CliResult<u8> {
    match op {
        DeriveOp::Line { input, output } => {
            let line = line_digraph(&read_digraph(&input)?);
            write_directed(&line.digraph, &output, "line digraph")
        }
        DeriveOp::Iterate {
            input,
            times,
            cap,
            output,
        } => {
            let it = iterate_line_digraph(&read_digraph(&input)?, times, cap)?;
            write_directed(&it, &output, &format!("line digraph iterate {times}"))
        }
    }
}

fn cycle_length_json(c: CycleLength) -> Value {
    match c {
        CycleLength::Finite(len) => json!(len),
        CycleLength::Infinite => json!("inf"),
    }
}

/// Report fields in print order.
fn check_report(graph: &ParsedGraph, chi_cap: usize) -> CliResult<Vec<(&'static str, Value)>> {
    let directed = matches!(graph, ParsedGraph::Directed(_));
    let g = graph.clone().into_undirected();
    let mut report = vec![
        ("vertices", json!(g.n())),
        ("edges", json!(g.edge_count())),
        ("directed", json!(directed)),
        ("girth", cycle_length_json(girth(&g))),
        ("odd_girth", cycle_length_json(odd_girth(&g))),
        ("triangle_free", json!(!g.has_triangle())),
        ("omega", json!(clique_number(&g))),
        ("degeneracy", json!(degeneracy(&g).degeneracy)),
    ];
    if g.n() <= chi_cap {
        report.push(("chi", json!(chromatic_number_capped(&g, chi_cap)?.0)));
    } else {
        let (lower, upper) = chromatic_bounds(&g);
        report.push(("chi_lower", json!(lower)));
        report.push(("chi_upper", json!(upper)));
    }
    Ok(report)
}

pub fn check(input: &Path, chi_cap: usize, as_json: bool) -> CliResult<u8> {
    let report = check_report(&read_graph(input)?, chi_cap)?;
    let text = if as_json {
        let map: serde_json::Map<String, Value> = report.into_iter().map(|(k, v)| (k.to_owned(), v)).collect();
        serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes")
    } else {
        report
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    emit(None, &text)?;
    Ok(EXIT_OK)
}

/// Exact coloring within the default cap, DSATUR above it.
fn default_base_coloring(g: &UndirectedGraph) -> CliResult<Coloring> {
    if g.n() <= DEFAULT_CHROMATIC_CAP {
        Ok(chromatic_number_capped(g, DEFAULT_CHROMATIC_CAP)?.1)
    } else {
        Ok(dsatur_greedy(g))
    }
}

pub fn color(op: ColorOp) -> CliResult<u8> {
    match op {
        ColorOp::Log { input, base, out } => {
            let d = read_digraph(&input)?;
            let under = d.underlying();
            let base = match base {
                Some(path) => Coloring::from_json(&under, &read_file(&path)?)?,
                None => default_base_coloring(&under)?,
            };
            let line = log_color_line_digraph(&d, &base)?;
            emit(out.as_deref(), &line.to_json())?;
            summary(
                out.as_deref(),
                &format!(
                    "base colors: {}, k*: {}, line palette: {} on {} line vertices",
                    base.used_colors(),
                    k_star(base.used_colors()),
                    line.palette(),
                    line.n()
                ),
            );
        }
        ColorOp::Kabfree { input, a, b, out } => {
            let t = read_digraph(&input)?;
            let (coloring, report) = color_kab_free(&t, a, b)?;
            emit(out.as_deref(), &coloring.to_json())?;
            let mut lines = vec![
                format!("low side: {} vertices, {} colors (bound b = {b})", report.left.len(), report.left_colors),
                format!("high side: {} vertices, {} colors (bound a = {a})", report.right.len(), report.right_colors),
                format!("palette: {} (k*(a+b) = {})", report.palette, k_star(a + b)),
            ];
            match &report.witness {
                Some(w) => lines.push(format!("induced K_{{{a},{b}}} witness: {:?} | {:?}", w.a_side, w.b_side)),
                None => lines.push("witness: none".into()),
            }
            summary(out.as_deref(), &lines.join("\n"));
        }
        ColorOp::GallaiRoy { op } => match op {
            GallaiRoyOp::ToOrient { input, coloring, out } => {
                let g = read_undirected(&input)?;
                let c = Coloring::from_json(&g, &read_file(&coloring)?)?;
                let o = coloring_to_orientation(Arc::clone(&g), &c)?;
                emit(out.as_deref(), &o.to_json())?;
                summary(out.as_deref(), &format!("oriented {} edges by {} colors", g.edge_count(), c.palette()));
            }
            GallaiRoyOp::ToColor { input, orient, out } => {
                let g = read_undirected(&input)?;
                let o = Orientation::from_json(g, &read_file(&orient)?)?;
                let c = orientation_to_coloring(&o)?;
                emit(out.as_deref(), &c.to_json())?;
                summary(out.as_deref(), &format!("longest path has {} vertices", c.palette()));
            }
        },
    }
    Ok(EXIT_OK)
}

fn verdict_name(v: &AopVerdict) -> &'static str {
    match v {
        AopVerdict::HasAop(_) => "HasAOP",
        AopVerdict::NoAop => "NoAOP",
        AopVerdict::Timeout => "Timeout",
    }
}

pub fn aop(op: AopOp) -> CliResult<u8> {
    match op {
        AopOp::Verify { input, orient, json: as_json } => {
            let g = read_undirected(&input)?;
            let o = Orientation::from_json(g, &read_file(&orient)?)?;
            let check = verify_aop(&o)?;
            let violation = match &check {
                AopCheck::Holds => None,
                AopCheck::Violated(v) => Some(v.to_string()),
            };
            let text = if as_json {
                serde_json::to_string_pretty(&json!({ "aop": check.holds(), "violation": violation }))
                    .expect("report serializes")
            } else {
                match &violation {
                    None => "aop: true".to_owned(),
                    Some(v) => format!("aop: false\nviolation: {v}"),
                }
            };
            emit(None, &text)?;
            Ok(if check.holds() { EXIT_OK } else { EXIT_REFUTED })
        }
        AopOp::Decide {
            input,
            budget,
            time_limit,
            threads,
            no_propagate,
            out,
            json: as_json,
        } => {
            let g = read_undirected(&input)?;
            if threads == 0 {
                return Err(CliError::Usage("--threads must be at least 1".into()));
            }
            let max_time = match time_limit {
                Some(secs) if secs.is_finite() && secs > 0.0 => Some(Duration::from_secs_f64(secs)),
                Some(secs) => return Err(CliError::Usage(format!("--time-limit must be positive, got {secs}"))),
                None => None,
            };
            let options = SearchOptions {
                budget: Budget {
                    max_nodes: budget,
                    max_time,
                },
                propagate: !no_propagate,
                threads,
            };
            let decision = decide_aop_with(&g, &options)?;
            let stats = decision.stats;
            if let (AopVerdict::HasAop(o), Some(path)) = (&decision.verdict, out.as_deref()) {
                emit(Some(path), &o.to_json())?;
            }
            let orientation = match &decision.verdict {
                AopVerdict::HasAop(o) => serde_json::from_str::<Value>(&o.to_json()).expect("orientation JSON"),
                _ => Value::Null,
            };
            let text = if as_json {
                let report = json!({
                    "verdict": verdict_name(&decision.verdict),
                    "nodes": stats.nodes,
                    "cycle_prunes": stats.cycle_prunes,
                    "double_path_prunes": stats.double_path_prunes,
                    "wipeouts": stats.wipeouts,
                    "forced": stats.forced,
                    "orientation": orientation,
                });
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else {
                let mut lines = vec![
                    format!("verdict: {}", verdict_name(&decision.verdict)),
                    format!("nodes: {}", stats.nodes),
                    format!("cycle_prunes: {}", stats.cycle_prunes),
                    format!("double_path_prunes: {}", stats.double_path_prunes),
                    format!("wipeouts: {}", stats.wipeouts),
                    format!("forced: {}", stats.forced),
                    format!("elapsed: {:.3?}", stats.elapsed),
                ];
                if let AopVerdict::HasAop(o) = &decision.verdict {
                    if out.is_none() {
                        lines.push(format!("orientation: {}", o.to_json()));
                    }
                }
                lines.join("\n")
            };
            emit(None, &text)?;
            Ok(match decision.verdict {
                AopVerdict::HasAop(_) => EXIT_OK,
                AopVerdict::NoAop => EXIT_REFUTED,
                AopVerdict::Timeout => EXIT_TIMEOUT,
            })
        }
    }
}

