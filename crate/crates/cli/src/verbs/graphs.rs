use std::collections::BTreeSet;
use std::path::Path;

use ci::{global_markov, graphical_split, split_agreement};
use hierarchical::{bipyramid_basis, outerplanar_and_slim, sp_basis, HierModel, MarkovGraph, SpStep};
use markov_engine::{verify_markov_with_cap, Status};

use super::{engine, small_bound, Done};
use crate::error::{CliError, Result};
use crate::input;
use crate::report::{histogram, set, yes_no, Report};
use crate::{Experiment, Settings};

/// Default degree bound when comparing graded pieces of a split.
pub const SPLIT_BOUND: u64 = 4;

pub(super) fn global(path: &Path) -> Result<Done> {
    let (g, levels, _) = input::graph(path)?;
    let m = global_markov(&g, &levels)?;
    let mut r = Report::new("global");
    r.field("vertices", set(g.vertices()))
        .field("edges", g.edges().len())
        .field("statements-count", m.len())
        .section("statements", m.statements());
    Ok((r, true))
}

pub(super) fn split(path: &Path, left: &[usize], right: &[usize], s: &Settings) -> Result<Done> {
    let (g, levels, _) = input::graph(path)?;
    let v1: BTreeSet<usize> = left.iter().copied().collect();
    let v2: BTreeSet<usize> = right.iter().copied().collect();
    let sp = graphical_split(&g, &levels, &v1, &v2)?;
    let bound = small_bound(s.bound.unwrap_or(SPLIT_BOUND));
    let agree = split_agreement(&g, &levels, &sp, bound)?;
    let mut r = Report::new("split");
    r.field("separator", set(&sp.separator))
        .section("left-statements", sp.left.statements())
        .section("right-statements", sp.right.statements())
        .section("product-statements", sp.product()?.statements())
        .field("bound", agree.bound)
        .field("degrees-compared", agree.degrees)
        .field("pieces-agree", yes_no(agree.holds()));
    if let Some(d) = &agree.mismatch {
        r.field("mismatch-degree", set(d));
    }
    Ok((r, agree.holds()))
}

pub(super) fn width_bound(path: &Path, s: &Settings) -> Result<Done> {
    let (g, levels, _) = input::graph(path)?;
    let wb = hierarchical::width_bound(&g, &levels)?;
    let mut r = Report::new("width-bound");
    r.field("vertices", set(g.vertices())).field("levels", set(&levels));
    match wb.bound {
        Some(b) => r.field("bound", b),
        None => r.field("bound", "none (no rule applies)"),
    };
    if s.trace {
        r.section("trace", &wb.trace);
    }
    Ok((r, wb.bound.is_some()))
}

fn step(st: &SpStep) -> String {
    match st {
        SpStep::Parallel { ends } => format!("parallel {}-{}", ends.0, ends.1),
        SpStep::Series { vertex, ends } => format!("series {vertex} -> {}-{}", ends.0, ends.1),
        SpStep::Pendant { vertex } => format!("pendant {vertex}"),
    }
}

pub(super) fn sp(path: &Path, s: &Settings) -> Result<Done> {
    let (g, _, ends) = input::graph(path)?;
    let (top, bottom) = ends.ok_or_else(|| CliError::Input("the graph needs \"top\" and \"bottom\"".into()))?;
    let res = sp_basis(&g, top, bottom)?;
    let mut r = Report::new("sp");
    r.field("vertices", set(g.vertices()))
        .field("terminals", format!("{top}-{bottom}"))
        .field("basis", res.basis.len())
        .field("degrees", histogram(&res.degrees));
    if s.trace {
        r.section("reduction", res.reduction.iter().map(step));
    }
    let mut ok = true;
    if let Some(bound) = s.bound {
        let model = HierModel::binary(g.complex())?;
        let cap = engine(s).cap();
        let v = verify_markov_with_cap(model.config(), &res.basis, bound, cap)?;
        ok = v.status == Status::Verified;
        r.field("bound", bound)
            .field("fiber-cap", cap)
            .field("verification", if ok { "verified" } else { "refuted" });
    }
    Ok((r, ok))
}

pub(super) fn outerplanar(path: &Path) -> Result<Done> {
    let (g, _, _) = input::graph(path)?;
    let o = outerplanar_and_slim(&g)?;
    let mut r = Report::new("outerplanar");
    r.field("vertices", set(g.vertices()))
        .field("k4-minor", yes_no(o.k4_minor))
        .field("k23-minor", yes_no(o.k23_minor))
        .field("outerplanar", yes_no(o.outerplanar))
        .field("ring-graph", yes_no(o.ring_graph))
        .field("markov-slim", yes_no(o.markov_slim));
    Ok((r, true))
}

/// Largest design matrix whose width the cycle experiment computes exactly.
const EXACT_COLUMNS: usize = 48;

/// Level patterns on a cycle: all binary, then a growing run of ternary vertices.
fn cycle_levels(n: usize) -> Vec<Vec<usize>> {
    (0..=n).map(|k| (0..n).map(|i| if i < k { 3 } else { 2 }).collect()).collect()
}

pub(super) fn experiment(kind: Experiment, max: Option<usize>, s: &Settings) -> Result<Done> {
    let mut r = Report::new("experiment");
    match kind {
        Experiment::Cycle => {
            let max = max.unwrap_or(5).max(4);
            r.field("kind", "cycle").field("exact-columns-limit", EXACT_COLUMNS);
            let opts = engine(s);
            let mut lines = Vec::new();
            for n in 4..=max {
                let g = MarkovGraph::cycle(n);
                for levels in cycle_levels(n) {
                    let bound = hierarchical::width_bound(&g, &levels)?.bound;
                    let cells: usize = levels.iter().product();
                    let exact = if cells <= EXACT_COLUMNS {
                        let model = HierModel::new(g.complex(), levels.clone())?;
                        hierarchical::width(&model, &opts)?.to_string()
                    } else {
                        "not computed".into()
                    };
                    let bound = bound.map_or("none".into(), |b| b.to_string());
                    lines.push(format!("C{n} levels {}: mu {exact}, bound {bound}", set(&levels)));
                }
            }
            r.field("fiber-cap", opts.cap()).section("observations", lines);
        }
        Experiment::Bipyramid => {
            let max = max.unwrap_or(3).max(2);
            r.field("kind", "bipyramid");
            let mut lines = Vec::new();
            for n in 2..=max {
                let b = bipyramid_basis(n)?;
                lines.push(format!(
                    "B{n}: {} moves, degrees {}, justification {}",
                    b.moves.len(),
                    histogram(&b.moves.degree_histogram()),
                    b.assembly.justification
                ));
            }
            r.section("observations", lines);
        }
    }
    Ok((r, true))
}
