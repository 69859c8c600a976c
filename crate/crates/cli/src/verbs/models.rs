use std::path::Path;

use hierarchical::hier_codim;
use lattice_core::io::{format_matrix, format_moves};
use markov_engine::{default_bound, markov_basis_with, verify_markov_with_cap, Status};

use super::{engine, Done};
use crate::error::Result;
use crate::input;
use crate::report::{histogram, set, Report};
use crate::{ConfigInput, Settings};

pub(super) fn markov(io: &ConfigInput, out: Option<&Path>, s: &Settings) -> Result<Done> {
    let config = input::config(io.model.as_deref(), io.matrix.as_deref())?;
    let opts = engine(s);
    let res = markov_basis_with(&config, &opts)?;
    let mut r = Report::new("markov");
    r.field("columns", config.n())
        .field("rank", config.rank())
        .field("fiber-cap", opts.cap())
        .field("generating-set", res.generating_set_size)
        .field("basis", res.basis.len())
        .field("degrees", histogram(&res.degree_histogram))
        .field("minimal", histogram(&res.minimal_counts))
        .field("mu", res.mu);
    if let Some(path) = out {
        input::write(path, &format_moves(&res.basis, config.n()))?;
    }
    Ok((r, true))
}

pub(super) fn verify(io: &ConfigInput, moves: &Path, s: &Settings) -> Result<Done> {
    let config = input::config(io.model.as_deref(), io.matrix.as_deref())?;
    let candidate = input::moves(moves)?;
    let bound = s.bound.unwrap_or_else(|| default_bound(&candidate));
    let cap = engine(s).cap();
    let v = verify_markov_with_cap(&config, &candidate, bound, cap)?;
    let mut r = Report::new("verify");
    r.field("moves", candidate.len())
        .field("degrees", histogram(&candidate.degree_histogram()))
        .field("bound", v.bound_used)
        .field("fiber-cap", cap)
        .field("fibers-checked", v.fibers_checked);
    let status = match v.status {
        Status::Verified => "verified",
        Status::Refuted => "refuted",
        Status::Inconclusive => "inconclusive",
    };
    r.field("status", status);
    if let Some(w) = &v.witness {
        r.field("witness-degree", w.degree)
            .field("witness-rhs", set(&w.rhs))
            .section("witness-components", w.representatives.iter().map(set));
    }
    Ok((r, v.status == Status::Verified))
}

pub(super) fn width(path: &Path, s: &Settings) -> Result<Done> {
    let model = input::model(path)?;
    let opts = engine(s);
    let mu = hierarchical::width(&model, &opts)?;
    let mut r = Report::new("width");
    r.field("vertices", set(model.complex().vertices()))
        .field("levels", set(model.d()))
        .field("facets", model.complex().facets().len())
        .field("columns", model.columns())
        .field("fiber-cap", opts.cap())
        .field("mu", mu);
    Ok((r, true))
}

pub(super) fn hier(path: &Path, out: Option<&Path>) -> Result<Done> {
    let model = input::model(path)?;
    let codim = hier_codim(model.complex(), model.d())?;
    let rank = model.config().rank();
    let mut r = Report::new("hier");
    r.field("vertices", set(model.complex().vertices()))
        .field("levels", set(model.d()))
        .section(
            "facets",
            model
                .complex()
                .facets()
                .iter()
                .map(|f| set(model.complex().labels_of(f))),
        )
        .field("rows", model.matrix().rows())
        .field("columns", model.columns())
        .field("rank", rank)
        .field("codim", codim)
        .field("codim-matches-rank", crate::report::yes_no(codim == (model.columns() - rank) as u64));
    if let Some(p) = out {
        input::write(p, &format_matrix(model.matrix()))?;
    }
    Ok((r, true))
}
