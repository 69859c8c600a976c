use markov_engine::{markov_basis_with, EngineOptions};

use crate::error::{HierError, Result};
use crate::graph::{ring_structure, MarkovGraph};
use crate::model::HierModel;

/// Largest degree of a minimal Markov basis element.
pub fn width(model: &HierModel, opts: &EngineOptions) -> Result<u32> {
    Ok(markov_basis_with(model.config(), opts)?.mu)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthBound {
    /// `None` when no rule applies.
    pub bound: Option<u32>,
    pub trace: Vec<String>,
}

fn names(g: &MarkovGraph, vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(|&v| g.label(v).to_string()).collect();
    parts.join("-")
}

/// Longest cyclic run of vertices with more than two levels, and whether it wraps.
fn longest_run(cycle: &[usize], d: &[usize]) -> (usize, bool) {
    let n = cycle.len();
    let hi: Vec<bool> = cycle.iter().map(|&v| d[v] > 2).collect();
    if hi.iter().all(|&h| h) {
        return (n, false);
    }
    let mut best = (0, false);
    for start in 0..n {
        if !hi[start] || hi[(start + n - 1) % n] {
            continue;
        }
        let mut len = 0;
        while hi[(start + len) % n] {
            len += 1;
        }
        if len > best.0 {
            best = (len, start + len > n);
        }
    }
    best
}

/// Bound for a single cycle from its level pattern, without splitting.
fn cycle_case(cycle: &[usize], d: &[usize]) -> Option<(u8, u32, bool)> {
    let (run, wraps) = longest_run(cycle, d);
    let max_d = cycle.iter().map(|&v| d[v]).max().unwrap_or(2);
    if run <= 1 {
        return Some((1, 4, wraps));
    }
    if max_d <= 3 && run <= 3 {
        return Some((2, 6, wraps));
    }
    if max_d <= 4 && run <= 2 {
        return Some((3, 8, wraps));
    }
    if max_d <= 5 && run <= 2 {
        return Some((4, 10, wraps));
    }
    None
}

/// First pair of nonadjacent binary vertices on a cycle, by cycle position.
fn binary_chord(cycle: &[usize], d: &[usize]) -> Option<(usize, usize)> {
    let n = cycle.len();
    for a in 0..n {
        for b in a + 2..n {
            if a == 0 && b == n - 1 {
                continue;
            }
            if d[cycle[a]] == 2 && d[cycle[b]] == 2 {
                return Some((a, b));
            }
        }
    }
    None
}

fn cycle_bound(g: &MarkovGraph, cycle: &[usize], d: &[usize], trace: &mut Vec<String>) -> Option<u32> {
    if cycle.len() > 3 {
        if let Some((a, b)) = binary_chord(cycle, d) {
            let first: Vec<usize> = cycle[a..=b].to_vec();
            let mut second: Vec<usize> = cycle[b..].to_vec();
            second.extend_from_slice(&cycle[..=a]);
            trace.push(format!(
                "cycle {}: glue paths at binary nonadjacent {} and {} (codimension one); bound is the max over {} and {} closed by that pair",
                names(g, cycle),
                g.label(cycle[a]),
                g.label(cycle[b]),
                names(g, &first),
                names(g, &second)
            ));
            let x = cycle_bound(g, &first, d, trace);
            let y = cycle_bound(g, &second, d, trace);
            return Some(x?.max(y?));
        }
    }
    match cycle_case(cycle, d) {
        Some((case, bound, wraps)) => {
            let note = if wraps { " (paths read cyclically)" } else { "" };
            trace.push(format!("cycle {}: case ({case}) gives {bound}{note}", names(g, cycle)));
            Some(bound)
        }
        None => {
            trace.push(format!("cycle {}: no case applies to its levels", names(g, cycle)));
            None
        }
    }
}

/// Upper bound on the width of the graph model from block, edge-gluing and cycle rules.
pub fn width_bound(g: &MarkovGraph, d: &[usize]) -> Result<WidthBound> {
    if d.len() != g.n() {
        return Err(HierError::InvalidLevels(format!("{} levels for {} vertices", d.len(), g.n())));
    }
    if d.iter().any(|&x| x < 2) {
        return Err(HierError::InvalidLevels("every vertex needs at least 2 levels".into()));
    }
    let mut trace = Vec::new();
    let structure = ring_structure(g);
    let comps = g.components().len();
    if structure.len() + comps > 2 {
        trace.push(format!(
            "{} blocks in {} components: gluing at a vertex or a disjoint union takes the max with 2",
            structure.len(),
            comps
        ));
    }
    let mut bound = Some(2u32);
    for (block, dec) in &structure {
        let label = names(g, &block.vertices);
        match dec {
            _ if block.is_bridge() => trace.push(format!("block {label}: single edge, bound 2")),
            None => {
                trace.push(format!("block {label}: no cycle decomposition, not a ring graph"));
                bound = None;
            }
            Some(cycles) => {
                if cycles.len() > 1 {
                    trace.push(format!(
                        "block {label}: {} cycles glued along edges (codimension zero): max rule",
                        cycles.len()
                    ));
                }
                for c in cycles {
                    let b = cycle_bound(g, c, d, &mut trace);
                    bound = match (bound, b) {
                        (Some(x), Some(y)) => Some(x.max(y)),
                        _ => None,
                    };
                }
            }
        }
    }
    match bound {
        Some(b) => trace.push(format!("bound {b}")),
        None => trace.push("no bound derivable".into()),
    }
    Ok(WidthBound { bound, trace })
}
