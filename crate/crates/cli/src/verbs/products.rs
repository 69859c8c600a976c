use hierarchical::Split;
use lattice_core::io::format_moves;
use lattice_core::MoveSet;
use markov_engine::{markov_basis_with, verify_markov_with_cap, Status};
use tfp::{
    assemble_markov, cpp_check, default_cpp_bound, glue_sets, lift_moves, quad_moves, slow_varying_check, tilde_extend,
    AssembleOptions, Justification, Side, DEFAULT_GLUE_CAP,
};

use super::{engine, Done};
use crate::error::Result;
use crate::input;
use crate::report::{histogram, set, yes_no, Report};
use crate::{Settings, SideInput};

fn header(verb: &str, split: &Split) -> Report {
    let labels = |side| split.model(side).complex().vertices().to_vec();
    let (left, right) = (labels(Side::Left), labels(Side::Right));
    let shared = left.iter().filter(|v| right.contains(v));
    let mut r = Report::new(verb);
    r.field("left", set(&left))
        .field("right", set(&right))
        .field("separator", set(shared))
        .field("codim", split.codim());
    r
}

fn save(io: &SideInput, split: &Split, moves: &MoveSet) -> Result<()> {
    if let Some(p) = &io.out {
        let cells = split.moves_to_cells(moves);
        input::write(p, &format_moves(&cells, split.product().z_len()))?;
    }
    Ok(())
}

fn moves_fields(r: &mut Report, name: &str, moves: &MoveSet) {
    r.field(name, moves.len())
        .field(&format!("{name}-degrees"), histogram(&moves.degree_histogram()));
}

/// Minimal Markov bases of both sides.
fn side_bases(split: &Split, s: &Settings) -> Result<(MoveSet, MoveSet)> {
    let p = split.product();
    let opts = engine(s);
    Ok((
        markov_basis_with(p.left(), &opts)?.basis,
        markov_basis_with(p.right(), &opts)?.basis,
    ))
}

pub(super) fn product(io: &SideInput) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let p = split.product();
    let mut r = header("product", &split);
    r.field("classes", p.r())
        .field("left-sizes", set(p.s()))
        .field("right-sizes", set(p.t()))
        .field("columns", p.z_len())
        .field("rank", p.product().rank());
    Ok((r, true))
}

pub(super) fn quad(io: &SideInput) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let q = quad_moves(split.product());
    let mut r = header("quad", &split);
    moves_fields(&mut r, "quad", &q);
    save(io, &split, &q)?;
    Ok((r, true))
}

pub(super) fn lift(io: &SideInput, s: &Settings) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let p = split.product();
    let tilde = tilde_extend(p)?;
    let opts = engine(s);
    let ft = markov_basis_with(&tilde.tilde_left, &opts)?.basis;
    let gt = markov_basis_with(&tilde.tilde_right, &opts)?.basis;
    let left = lift_moves(&ft, Side::Left, p)?;
    let right = lift_moves(&gt, Side::Right, p)?;
    let mut r = header("lift", &split);
    r.field("fiber-cap", opts.cap());
    moves_fields(&mut r, "tilde-left", &ft);
    moves_fields(&mut r, "tilde-right", &gt);
    moves_fields(&mut r, "lift-left", &left);
    moves_fields(&mut r, "lift-right", &right);
    save(io, &split, &left.union(&right))?;
    Ok((r, true))
}

pub(super) fn glue(io: &SideInput, s: &Settings) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let (f, g) = side_bases(&split, s)?;
    let glued = glue_sets(&f, &g, split.product(), DEFAULT_GLUE_CAP)?;
    let mut r = header("glue", &split);
    r.field("fiber-cap", engine(s).cap()).field("glue-cap", DEFAULT_GLUE_CAP);
    moves_fields(&mut r, "left-basis", &f);
    moves_fields(&mut r, "right-basis", &g);
    moves_fields(&mut r, "glue", &glued);
    save(io, &split, &glued)?;
    Ok((r, true))
}

pub(super) fn assemble(io: &SideInput, s: &Settings) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let eng = engine(s);
    let opts = AssembleOptions {
        cpp_bound: s.bound,
        fiber_cap: eng.cap(),
        glue_cap: DEFAULT_GLUE_CAP,
    };
    let (asm, _) = assemble_markov(split.product(), &eng, &opts)?;
    let mut r = header("assemble", &split);
    r.field("fiber-cap", opts.fiber_cap).field("glue-cap", opts.glue_cap);
    moves_fields(&mut r, "moves", &asm.moves);
    r.field("provenance", histogram(&asm.count_by_kind()))
        .field("justification", &asm.justification);
    let justified = !matches!(asm.justification, Justification::Unjustified { .. });
    let verified = match s.bound {
        Some(bound) => {
            let v = verify_markov_with_cap(split.product().product(), &asm.moves, bound, opts.fiber_cap)?;
            r.field("bound", bound)
                .field("fibers-checked", v.fibers_checked)
                .field("verification", if v.status == Status::Verified { "verified" } else { "refuted" });
            if let Some(w) = &v.witness {
                r.field("witness-degree", w.degree).field("witness-rhs", set(&w.rhs));
            }
            v.status == Status::Verified
        }
        None => {
            r.field("verification", "not run (no --bound)");
            true
        }
    };
    save(io, &split, &asm.moves)?;
    Ok((r, justified && verified))
}

pub(super) fn cpp(io: &SideInput, s: &Settings) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let (f, g) = side_bases(&split, s)?;
    let bound = s.bound.unwrap_or_else(|| default_cpp_bound(&f, &g));
    let cap = engine(s).cap();
    let rep = cpp_check(&f, &g, split.product(), bound, None, cap)?;
    let mut r = header("cpp", &split);
    r.field("bound", rep.bound)
        .field("fiber-cap", cap)
        .field("pairs-checked", rep.pairs_checked)
        .field("holds", yes_no(rep.holds));
    if let Some(w) = &rep.witness {
        r.field("witness-b", set(&w.b))
            .field("witness-c", set(&w.c))
            .field("witness-degree", w.degree)
            .field("witness-components", w.components);
    }
    Ok((r, rep.holds))
}

pub(super) fn slow(io: &SideInput, s: &Settings) -> Result<Done> {
    let split = input::sides(&io.left, &io.right)?;
    let (f, g) = side_bases(&split, s)?;
    let rep = slow_varying_check(&f, &g, split.product())?;
    let mut r = header("slow", &split);
    r.field("fiber-cap", engine(s).cap())
        .field("kernel-generator", set(&rep.h))
        .field("holds", yes_no(rep.holds))
        .field("norm-criterion", yes_no(rep.norm_criterion));
    if let Some((side, index, image)) = &rep.witness {
        r.field("witness", format!("{} move {index} projects to {}", side.name(), set(image)));
    }
    Ok((r, rep.holds))
}
