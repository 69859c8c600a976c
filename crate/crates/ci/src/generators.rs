//! Quadric generators of CI ideals.
//!
//! A generator of `A ⊥ B | C` is `p(iA iB iC +) p(jA jB iC +) - p(iA jB iC +) p(jA iB iC +)`
//! where `+` sums over the unused vertices. Marginal sums are kept factored
//! and expanded only when a polynomial is needed.

use std::collections::BTreeSet;

use hierarchical::CellIndex;
use lattice_core::{Move, MoveSet};

use decomp::{Polynomial, Term};

use crate::error::{CiError, Result};
use crate::statement::{CIModel, CIStatement};

/// Largest number of terms produced by expanding one generator.
pub const EXPANSION_CAP: usize = 1_000_000;

/// Joint states of a vertex set, cells in lexicographic order.
#[derive(Clone, Debug)]
pub struct Cells {
    vertices: Vec<usize>,
    index: CellIndex,
}

impl Cells {
    /// `vertices` must be sorted.
    pub fn new(vertices: &[usize], levels: &[usize]) -> Self {
        Cells {
            vertices: vertices.to_vec(),
            index: CellIndex::new(levels),
        }
    }

    pub fn of(model: &CIModel) -> Self {
        Self::new(model.vertices(), model.levels())
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn levels(&self) -> &[usize] {
        self.index.levels()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn index(&self, cell: &[usize]) -> usize {
        self.index.index(cell)
    }

    pub fn cell(&self, i: usize) -> Vec<usize> {
        self.index.cell(i)
    }

    /// `p` followed by the 1-based states, separated by `_` when a level exceeds 9.
    pub fn name(&self, i: usize) -> String {
        let states: Vec<String> = self.cell(i).iter().map(|x| (x + 1).to_string()).collect();
        let sep = if self.levels().iter().any(|&l| l > 9) { "_" } else { "" };
        format!("p{}", states.join(sep))
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.name(i)).collect()
    }

    /// All joint states of the vertices at `positions`, in lexicographic order.
    pub fn configurations(&self, positions: &[usize]) -> Vec<Vec<usize>> {
        let levels: Vec<usize> = positions.iter().map(|&p| self.levels()[p]).collect();
        let index = CellIndex::new(&levels);
        let out = index.cells().collect();
        out
    }
}

/// States on some vertices; `None` positions are summed over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marginal(pub Vec<Option<usize>>);

impl Marginal {
    fn cells(&self, cells: &Cells) -> Vec<usize> {
        let free: Vec<usize> = (0..self.0.len()).filter(|&p| self.0[p].is_none()).collect();
        let mut base: Vec<usize> = self.0.iter().map(|x| x.unwrap_or(0)).collect();
        cells
            .configurations(&free)
            .into_iter()
            .map(|conf| {
                for (&p, &x) in free.iter().zip(&conf) {
                    base[p] = x;
                }
                cells.index(&base)
            })
            .collect()
    }

    pub fn is_cell(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }
}

/// `lead[0] lead[1] - trail[0] trail[1]`, where `lead[t]` and `trail[t]`
/// differ only on the first independent set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CIQuadric {
    pub lead: [Marginal; 2],
    pub trail: [Marginal; 2],
}

impl CIQuadric {
    pub fn expand(&self, cells: &Cells) -> Result<Polynomial> {
        let product = |pair: &[Marginal; 2], coef: i64| -> Result<Vec<Term>> {
            let (x, y) = (pair[0].cells(cells), pair[1].cells(cells));
            if x.len().saturating_mul(y.len()) > EXPANSION_CAP {
                return Err(CiError::TooLarge {
                    what: "expansion of a marginal product",
                    size: x.len().saturating_mul(y.len()),
                    limit: EXPANSION_CAP,
                });
            }
            Ok(x.iter()
                .flat_map(|&a| {
                    y.iter().map(move |&b| Term {
                        coef,
                        mono: vec![a.min(b) as u32, a.max(b) as u32],
                    })
                })
                .collect())
        };
        let mut terms = product(&self.lead, 1)?;
        terms.extend(product(&self.trail, -1)?);
        Ok(Polynomial::new(terms))
    }

    /// The binomial as a move on cells, when every marginal is a single cell.
    pub fn as_move(&self, cells: &Cells) -> Option<Move> {
        if !self.lead.iter().chain(&self.trail).all(Marginal::is_cell) {
            return None;
        }
        let idx = |m: &Marginal| cells.index(&m.0.iter().map(|x| x.expect("cell")).collect::<Vec<_>>());
        let mut v = vec![0i32; cells.len()];
        self.lead.iter().for_each(|m| v[idx(m)] += 1);
        self.trail.iter().for_each(|m| v[idx(m)] -= 1);
        Some(Move::new(v))
    }
}

#[derive(Clone, Debug)]
pub struct CIGenerators {
    pub statement: CIStatement,
    pub saturated: bool,
    pub quadrics: Vec<CIQuadric>,
}

impl CIGenerators {
    pub fn len(&self) -> usize {
        self.quadrics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quadrics.is_empty()
    }

    pub fn polynomials(&self, cells: &Cells) -> Result<Vec<Polynomial>> {
        self.quadrics.iter().map(|q| q.expand(cells)).collect()
    }

    /// Binomial moves of a saturated statement.
    pub fn moves(&self, cells: &Cells) -> Option<MoveSet> {
        if !self.saturated {
            return None;
        }
        let moves: Option<Vec<Move>> = self.quadrics.iter().map(|q| q.as_move(cells)).collect();
        moves.map(MoveSet::from_moves)
    }
}

fn positions(cells: &Cells, set: &BTreeSet<usize>) -> Result<Vec<usize>> {
    set.iter()
        .map(|&v| {
            cells
                .position(v)
                .ok_or_else(|| CiError::InvalidStatement(format!("vertex {v} is not in the model")))
        })
        .collect()
}

/// Generators for every `iA < jA`, `iB < jB` and `iC`, in that nesting.
pub fn ci_generators(stmt: &CIStatement, cells: &Cells) -> Result<CIGenerators> {
    Ok(CIGenerators {
        statement: stmt.clone(),
        saturated: stmt.saturated(cells.vertices()),
        quadrics: quadrics(stmt.a(), stmt.b(), stmt.c(), cells)?,
    })
}

/// Quadrics of `A ⊥ B | C` with `A` and `B` in the given roles, so that
/// `lead[t]` and `trail[t]` share their `B` states.
pub fn quadrics(a: &BTreeSet<usize>, b: &BTreeSet<usize>, c: &BTreeSet<usize>, cells: &Cells) -> Result<Vec<CIQuadric>> {
    let (pa, pb, pc) = (positions(cells, a)?, positions(cells, b)?, positions(cells, c)?);
    let n = cells.vertices().len();
    let marginal = |xa: &[usize], xb: &[usize], xc: &[usize]| {
        let mut m = vec![None; n];
        for (ps, xs) in [(&pa, xa), (&pb, xb), (&pc, xc)] {
            for (&p, &x) in ps.iter().zip(xs) {
                m[p] = Some(x);
            }
        }
        Marginal(m)
    };
    let (ca, cb, cc) = (cells.configurations(&pa), cells.configurations(&pb), cells.configurations(&pc));
    let mut quadrics = Vec::new();
    for (ia, xa) in ca.iter().enumerate() {
        for ya in &ca[ia + 1..] {
            for (ib, xb) in cb.iter().enumerate() {
                for yb in &cb[ib + 1..] {
                    for xc in &cc {
                        quadrics.push(CIQuadric {
                            lead: [marginal(xa, xb, xc), marginal(ya, yb, xc)],
                            trail: [marginal(ya, xb, xc), marginal(xa, yb, xc)],
                        });
                    }
                }
            }
        }
    }
    Ok(quadrics)
}

pub fn model_generators(model: &CIModel) -> Result<Vec<CIGenerators>> {
    let cells = Cells::of(model);
    model.statements().iter().map(|s| ci_generators(s, &cells)).collect()
}

/// Expanded generators of the whole model, deduplicated and sorted.
pub fn model_polynomials(model: &CIModel) -> Result<Vec<Polynomial>> {
    let cells = Cells::of(model);
    let mut out = Vec::new();
    for g in model_generators(model)? {
        out.extend(g.polynomials(&cells)?);
    }
    out.retain(|p| !p.is_zero());
    out.sort();
    out.dedup();
    Ok(out)
}
