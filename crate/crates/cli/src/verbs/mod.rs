mod graphs;
mod ideals;
mod models;
mod products;

use markov_engine::EngineOptions;

use crate::error::Result;
use crate::report::Report;
use crate::{Settings, Verb};

/// A report, and whether the outcome was positive.
pub(crate) type Done = (Report, bool);

pub(crate) fn dispatch(verb: &Verb, s: &Settings) -> Result<Done> {
    match verb {
        Verb::Markov { input, out } => models::markov(input, out.as_deref(), s),
        Verb::Verify { input, moves } => models::verify(input, moves, s),
        Verb::Width { model } => models::width(model, s),
        Verb::Hier { model, out } => models::hier(model, out.as_deref()),
        Verb::Product(io) => products::product(io),
        Verb::Quad(io) => products::quad(io),
        Verb::Lift(io) => products::lift(io, s),
        Verb::Glue(io) => products::glue(io, s),
        Verb::Assemble(io) => products::assemble(io, s),
        Verb::Cpp(io) => products::cpp(io, s),
        Verb::Slow(io) => products::slow(io, s),
        Verb::Ci { model, with, out } => ideals::ci(model, with.as_deref(), out.as_deref()),
        Verb::Global { graph } => graphs::global(graph),
        Verb::Split { graph, left, right } => graphs::split(graph, left, right, s),
        Verb::Combine { left, right, out } => ideals::combine(left, right, out.as_deref()),
        Verb::Prune { input, left, right, out } => {
            ideals::prune(input.as_deref(), left.as_deref().zip(right.as_deref()), out.as_deref(), s)
        }
        Verb::Experiment { kind, max } => graphs::experiment(*kind, *max, s),
        Verb::WidthBound { graph } => graphs::width_bound(graph, s),
        Verb::Sp { graph } => graphs::sp(graph, s),
        Verb::Outerplanar { graph } => graphs::outerplanar(graph),
    }
}

fn engine(s: &Settings) -> EngineOptions {
    EngineOptions {
        fiber_cap: s.cap,
        ..EngineOptions::default()
    }
}

/// Narrows a `u64` bound for the polynomial side, which grades by `u32`.
fn small_bound(b: u64) -> u32 {
    u32::try_from(b).unwrap_or(u32::MAX)
}
