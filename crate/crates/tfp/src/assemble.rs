use std::collections::BTreeMap;
use std::fmt;

use lattice_core::{Move, MoveSet, DEFAULT_FIBER_CAP};
use markov_engine::{markov_basis_with, EngineOptions};

use crate::checks::{cpp_check, default_cpp_bound, slow_varying_check};
use crate::codim0::{lift_move, quad_moves};
use crate::error::Result;
use crate::glue::{glue_sets_tagged, DEFAULT_GLUE_CAP};
use crate::product::{tilde_extend, ProductConfiguration, Side};

/// Where an assembled move came from. Indices refer to the input move sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    Quad,
    LiftLeft(usize),
    LiftRight(usize),
    Glue(usize, usize),
    /// Part of a caller-supplied basis of the associated codimension-zero product.
    Supplied,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Quad => write!(f, "quad"),
            Provenance::LiftLeft(i) => write!(f, "lift-left({i})"),
            Provenance::LiftRight(i) => write!(f, "lift-right({i})"),
            Provenance::Glue(a, b) => write!(f, "glue({a},{b})"),
            Provenance::Supplied => write!(f, "supplied"),
        }
    }
}

/// Which hypothesis backs the claim that the assembled set is a Markov basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    CodimZero,
    SlowVarying,
    CompatibleProjection { bound: u64 },
    Unjustified { reason: String },
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::CodimZero => write!(f, "codimension zero"),
            Justification::SlowVarying => write!(f, "slow-varying (exact)"),
            Justification::CompatibleProjection { bound } => {
                write!(f, "compatible projection property verified to degree {bound}")
            }
            Justification::Unjustified { reason } => write!(f, "unjustified: {reason}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AssembleOptions {
    /// Degree bound for the compatible projection check; default from the inputs.
    pub cpp_bound: Option<u64>,
    pub fiber_cap: usize,
    pub glue_cap: usize,
}

impl Default for AssembleOptions {
    fn default() -> Self {
        AssembleOptions {
            cpp_bound: None,
            fiber_cap: DEFAULT_FIBER_CAP,
            glue_cap: DEFAULT_GLUE_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Assembly {
    pub moves: MoveSet,
    /// Provenance of `moves[i]`.
    pub provenance: Vec<Provenance>,
    pub justification: Justification,
}

impl Assembly {
    pub fn count_by_kind(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for p in &self.provenance {
            let key = match p {
                Provenance::Quad => "quad",
                Provenance::LiftLeft(_) => "lift-left",
                Provenance::LiftRight(_) => "lift-right",
                Provenance::Glue(..) => "glue",
                Provenance::Supplied => "supplied",
            };
            *out.entry(key).or_insert(0) += 1;
        }
        out
    }
}

fn justify(f: &MoveSet, g: &MoveSet, product: &ProductConfiguration, opts: &AssembleOptions) -> Result<Justification> {
    if product.codim() == 0 {
        return Ok(Justification::CodimZero);
    }
    if product.codim() == 1 && slow_varying_check(f, g, product)?.holds {
        return Ok(Justification::SlowVarying);
    }
    let bound = opts.cpp_bound.unwrap_or_else(|| default_cpp_bound(f, g));
    let report = cpp_check(f, g, product, bound, None, opts.fiber_cap)?;
    Ok(if report.holds {
        Justification::CompatibleProjection { bound }
    } else {
        let w = report.witness.expect("failing report has a witness");
        Justification::Unjustified {
            reason: format!(
                "projection graphs over b={:?}, c={:?} intersect in {} components",
                w.b, w.c, w.components
            ),
        }
    })
}

fn finish(tagged: BTreeMap<Move, Provenance>, justification: Justification) -> Assembly {
    let moves = MoveSet::from_moves(tagged.keys().cloned());
    let provenance = moves.iter().map(|m| tagged[m]).collect();
    Assembly {
        moves,
        provenance,
        justification,
    }
}

fn add_glue(
    tagged: &mut BTreeMap<Move, Provenance>,
    f: &MoveSet,
    g: &MoveSet,
    product: &ProductConfiguration,
    opts: &AssembleOptions,
) -> Result<()> {
    for (m, (a, b)) in glue_sets_tagged(f, g, product, opts.glue_cap)? {
        tagged.entry(m.canonical()).or_insert(Provenance::Glue(a, b));
    }
    Ok(())
}

/// `H + Glue(F, G)` for a supplied Markov basis `H` of the associated
/// codimension-zero product.
pub fn assemble(h: &MoveSet, f: &MoveSet, g: &MoveSet, product: &ProductConfiguration, opts: &AssembleOptions) -> Result<Assembly> {
    let mut tagged: BTreeMap<Move, Provenance> = h.iter().map(|m| (m.clone(), Provenance::Supplied)).collect();
    add_glue(&mut tagged, f, g, product, opts)?;
    Ok(finish(tagged, justify(f, g, product, opts)?))
}

/// Builds `H` as lifts of the tilde-side bases plus quadrics, then glues.
pub fn assemble_from_tilde(
    f_tilde: &MoveSet,
    g_tilde: &MoveSet,
    f: &MoveSet,
    g: &MoveSet,
    product: &ProductConfiguration,
    opts: &AssembleOptions,
) -> Result<Assembly> {
    let mut tagged: BTreeMap<Move, Provenance> = BTreeMap::new();
    for m in quad_moves(product).iter() {
        tagged.entry(m.clone()).or_insert(Provenance::Quad);
    }
    for (side, set) in [(Side::Left, f_tilde), (Side::Right, g_tilde)] {
        for (idx, m) in set.iter().enumerate() {
            for lifted in lift_move(m, side, product, idx)? {
                let tag = match side {
                    Side::Left => Provenance::LiftLeft(idx),
                    Side::Right => Provenance::LiftRight(idx),
                };
                tagged.entry(lifted.canonical()).or_insert(tag);
            }
        }
    }
    tagged.retain(|m, _| !m.is_zero());
    add_glue(&mut tagged, f, g, product, opts)?;
    Ok(finish(tagged, justify(f, g, product, opts)?))
}

/// Side bases used by [`assemble_markov`].
#[derive(Clone, Debug)]
pub struct SideBases {
    pub left: MoveSet,
    pub right: MoveSet,
    pub tilde_left: MoveSet,
    pub tilde_right: MoveSet,
}

/// Computes minimal Markov bases of both sides and both tilde sides, then
/// assembles.
pub fn assemble_markov(product: &ProductConfiguration, engine: &EngineOptions, opts: &AssembleOptions) -> Result<(Assembly, SideBases)> {
    let tilde = tilde_extend(product)?;
    let bases = SideBases {
        left: markov_basis_with(product.left(), engine)?.basis,
        right: markov_basis_with(product.right(), engine)?.basis,
        tilde_left: markov_basis_with(&tilde.tilde_left, engine)?.basis,
        tilde_right: markov_basis_with(&tilde.tilde_right, engine)?.basis,
    };
    let asm = assemble_from_tilde(&bases.tilde_left, &bases.tilde_right, &bases.left, &bases.right, product, opts)?;
    Ok((asm, bases))
}
