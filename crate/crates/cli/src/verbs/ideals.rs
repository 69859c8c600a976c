use std::path::Path;

use ci::{ci_generators, ci_tfp, generator_identity, write_model, Cells, CIModel};
use decomp::{prune as prune_decomposition, write_decomposition, Decomposition, Method, Verdict};

use super::{small_bound, Done};
use crate::error::Result;
use crate::input;
use crate::report::{set, yes_no, Report};
use crate::Settings;

/// Default degree bound for pruning.
pub const PRUNE_BOUND: u64 = 4;

/// Components are listed one per line up to this many.
const LIST_LIMIT: usize = 64;

fn statements(r: &mut Report, title: &str, m: &CIModel) -> Result<()> {
    let cells = Cells::of(m);
    let lines = m
        .statements()
        .iter()
        .map(|st| {
            let g = ci_generators(st, &cells)?;
            let kind = if g.saturated { "saturated" } else { "marginal" };
            Ok(format!("{st}  [{} generators, {kind}]", g.len()))
        })
        .collect::<Result<Vec<_>>>()?;
    r.section(title, lines);
    Ok(())
}

pub(super) fn ci(path: &Path, with: Option<&Path>, out: Option<&Path>) -> Result<Done> {
    let m1 = input::ci_model(path)?;
    let mut r = Report::new("ci");
    r.field("vertices", set(m1.vertices())).field("levels", set(m1.levels()));
    let Some(other) = with else {
        statements(&mut r, "statements", &m1)?;
        return Ok((r, true));
    };
    let m2 = input::ci_model(other)?;
    let p = ci_tfp(&m1, &m2)?;
    let id = generator_identity(&m1, &m2)?;
    r.field("other-vertices", set(m2.vertices()));
    statements(&mut r, "product-statements", &p)?;
    r.field("product-generators", id.derived)
        .field("lifts-and-quadrics", id.lifted)
        .field("same-generators", yes_no(id.holds))
        .field("same-ideal-in-degree-2", yes_no(id.same_ideal));
    if let Some(o) = out {
        input::write(o, &write_model(&p)?)?;
    }
    Ok((r, true))
}

fn components(r: &mut Report, title: &str, d: &Decomposition) -> Result<()> {
    r.field(&format!("{title}-count"), d.len());
    if d.len() <= LIST_LIMIT {
        let lines = (0..d.len()).map(|c| d.display_component(c)).collect::<decomp::Result<Vec<_>>>()?;
        r.section(title, lines);
    }
    Ok(())
}

pub(super) fn combine(left: &Path, right: &Path, out: Option<&Path>) -> Result<Done> {
    let (l, rt) = (input::decomposition(left)?, input::decomposition(right)?);
    let d = decomp::combine(&l, &rt)?;
    let mut r = Report::new("combine");
    r.field("left-count", l.len()).field("right-count", rt.len());
    components(&mut r, "components", &d)?;
    if let Some(o) = out {
        input::write(o, &write_decomposition(&d)?)?;
    }
    Ok((r, true))
}

pub(super) fn prune(
    single: Option<&Path>,
    pair: Option<(&Path, &Path)>,
    out: Option<&Path>,
    s: &Settings,
) -> Result<Done> {
    let d = match (single, pair) {
        (Some(p), None) => input::decomposition(p)?,
        (None, Some((l, rt))) => decomp::combine(&input::decomposition(l)?, &input::decomposition(rt)?)?,
        _ => return Err(crate::CliError::Usage("give --input, or both --left and --right".into())),
    };
    let bound = small_bound(s.bound.unwrap_or(PRUNE_BOUND));
    let (pruned, cert) = prune_decomposition(&d, bound)?;
    let mut r = Report::new("prune");
    r.field("bound", bound)
        .field(
            "method",
            match cert.method {
                Method::Theorem => "factor pieces",
                Method::Direct => "component pieces",
            },
        )
        .field("degrees-checked", cert.degrees.len())
        .field("input-count", d.len())
        .section(
            "removed",
            cert.removed.iter().map(|x| format!("{} contains {}", x.removed, x.contains)),
        )
        .field("witnessed-pairs", cert.witnessed)
        .field("unknown-pairs", cert.unknown)
        .field("all-witnessed", yes_no(cert.all_witnessed()));
    if let Some(full) = &cert.fullness {
        let show = |x: &Option<decomp::FullPiece>| match x {
            Some(p) => format!("component {} in degree {}", p.component, set(&p.degree)),
            None => "none".into(),
        };
        r.field("full-left-piece", show(&full.left)).field("full-right-piece", show(&full.right));
    }
    let unknown: Vec<String> = cert
        .verdicts
        .iter()
        .filter(|v| v.verdict == Verdict::UnknownToBound)
        .map(|v| format!("{} against {}", v.first, v.second))
        .collect();
    if !unknown.is_empty() && unknown.len() <= LIST_LIMIT {
        r.section("unknown", unknown);
    }
    components(&mut r, "kept", &pruned)?;
    if let Some(o) = out {
        input::write(o, &write_decomposition(&pruned)?)?;
    }
    Ok((r, !pruned.is_empty()))
}
