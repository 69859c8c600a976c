//! Toric fiber products of CI models over a shared vertex set.

use std::collections::{BTreeSet, HashMap};

use decomp::{combine, quad_polynomials, ComponentIdeal, Decomposition, MonomialSpace, Piece, Polynomial, Ring};
use lattice_core::Grading;

use crate::error::{CiError, Result};
use crate::generators::{model_polynomials, quadrics, CIQuadric, Cells, Marginal};
use crate::statement::{CIModel, CIStatement};

/// The ring of cells of a model, graded by the joint state on a separator.
///
/// Variables are ordered by separator state, then by the state of the
/// remaining vertices.
#[derive(Clone, Debug)]
pub struct SeparatorRing {
    pub ring: Ring,
    pub cells: Cells,
    separator: Vec<usize>,
    rest: Vec<usize>,
    /// Cell index to ring variable.
    to_ring: Vec<u32>,
    to_cell: Vec<u32>,
}

impl SeparatorRing {
    pub fn new(vertices: &[usize], levels: &[usize], separator: &BTreeSet<usize>) -> Result<Self> {
        let cells = Cells::new(vertices, levels);
        let pos = |v: &usize| cells.position(*v).expect("separator inside the vertex set");
        if let Some(v) = separator.iter().find(|v| cells.position(**v).is_none()) {
            return Err(CiError::InvalidModel(format!("separator vertex {v} is not in the model")));
        }
        let sp: Vec<usize> = separator.iter().map(pos).collect();
        let rp: Vec<usize> = (0..vertices.len()).filter(|p| !sp.contains(p)).collect();
        let s_cells = Cells::new(&sp, &sp.iter().map(|&p| levels[p]).collect::<Vec<_>>());
        let r_cells = Cells::new(&rp, &rp.iter().map(|&p| levels[p]).collect::<Vec<_>>());
        let (classes, size) = (s_cells.len(), r_cells.len());
        let mut to_ring = vec![0u32; cells.len()];
        let mut names = vec![String::new(); cells.len()];
        for i in 0..cells.len() {
            let cell = cells.cell(i);
            let s: Vec<usize> = sp.iter().map(|&p| cell[p]).collect();
            let r: Vec<usize> = rp.iter().map(|&p| cell[p]).collect();
            let v = s_cells.index(&s) * size + r_cells.index(&r);
            to_ring[i] = v as u32;
            names[v] = cells.name(i);
        }
        let ring = Ring::class_major(&vec![size; classes], Grading::unit(classes), Some(names))?;
        Ok(SeparatorRing {
            ring,
            cells,
            separator: separator.iter().copied().collect(),
            rest: rp.iter().map(|&p| vertices[p]).collect(),
            to_cell: {
                let mut back = vec![0u32; to_ring.len()];
                for (i, &v) in to_ring.iter().enumerate() {
                    back[v as usize] = i as u32;
                }
                back
            },
            to_ring,
        })
    }

    pub fn of(model: &CIModel, separator: &BTreeSet<usize>) -> Result<Self> {
        Self::new(model.vertices(), model.levels(), separator)
    }

    pub fn separator(&self) -> &[usize] {
        &self.separator
    }

    /// Vertices outside the separator.
    pub fn rest(&self) -> &[usize] {
        &self.rest
    }

    /// Rewrites a polynomial in cell indices into ring variables.
    pub fn to_ring(&self, p: &Polynomial) -> Polynomial {
        p.rename(|v| self.to_ring[v as usize])
    }

    /// Inverse of [`SeparatorRing::to_ring`].
    pub fn to_cells(&self, p: &Polynomial) -> Polynomial {
        p.rename(|v| self.to_cell[v as usize])
    }

    /// The cell of a ring variable.
    pub fn cell_of(&self, var: usize) -> usize {
        self.to_cell[var] as usize
    }
}

/// `Some((A, B, C))` with `A` disjoint from the separator and the separator
/// inside `B ∪ C`, or `None` when neither orientation works.
///
/// When the separator lies in `C` the stored orientation is kept.
pub fn oriented(
    stmt: &CIStatement,
    separator: &BTreeSet<usize>,
) -> Option<(BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>)> {
    let fits = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| {
        a.is_disjoint(separator) && separator.iter().all(|v| b.contains(v) || stmt.c().contains(v))
    };
    if fits(stmt.a(), stmt.b()) {
        Some((stmt.a().clone(), stmt.b().clone(), stmt.c().clone()))
    } else if fits(stmt.b(), stmt.a()) {
        Some(stmt.swapped())
    } else {
        None
    }
}

/// Combinatorial homogeneity verdict for each statement, in model order.
pub fn s_homogeneous(model: &CIModel, separator: &BTreeSet<usize>) -> Vec<bool> {
    model.statements().iter().map(|s| oriented(s, separator).is_some()).collect()
}

/// Whether every expanded generator of each statement is homogeneous in the
/// separator grading, in model order.
pub fn generators_homogeneous(model: &CIModel, separator: &BTreeSet<usize>) -> Result<Vec<bool>> {
    let sr = SeparatorRing::of(model, separator)?;
    model
        .statements()
        .iter()
        .map(|s| {
            let g = crate::generators::ci_generators(s, &sr.cells)?;
            Ok(g
                .polynomials(&sr.cells)?
                .iter()
                .all(|p| sr.ring.homogeneous_degree(&sr.to_ring(p)).is_some()))
        })
        .collect()
}

fn check_homogeneous(model: &CIModel, separator: &BTreeSet<usize>) -> Result<()> {
    for s in model.statements() {
        if oriented(s, separator).is_none() {
            return Err(CiError::NotHomogeneous {
                statement: s.to_string(),
                separator: separator.iter().copied().collect(),
            });
        }
    }
    Ok(())
}

/// The shared vertices of two models, after checking their levels agree.
pub fn shared_vertices(m1: &CIModel, m2: &CIModel) -> Result<BTreeSet<usize>> {
    let mut s = BTreeSet::new();
    for &v in m1.vertices() {
        if let Some(l2) = m2.level(v) {
            if m1.level(v) != Some(l2) {
                return Err(CiError::InvalidModel(format!("vertex {v} has different levels on the two sides")));
            }
            s.insert(v);
        }
    }
    Ok(s)
}

/// The product model over `V1 ∪ V2`: the separator statement
/// `(V1∖S) ⊥ (V2∖S) | S` and each statement `A ⊥ B | C` of one side turned
/// into `A ⊥ B ∪ (other side ∖ S) | C`.
pub fn ci_tfp(m1: &CIModel, m2: &CIModel) -> Result<CIModel> {
    let sep = shared_vertices(m1, m2)?;
    check_homogeneous(m1, &sep)?;
    check_homogeneous(m2, &sep)?;
    let only = |m: &CIModel| -> BTreeSet<usize> { m.vertices().iter().copied().filter(|v| !sep.contains(v)).collect() };
    let (r1, r2) = (only(m1), only(m2));
    let mut statements = Vec::new();
    if !r1.is_empty() && !r2.is_empty() {
        statements.push(CIStatement::new(r1.clone(), r2.clone(), sep.clone())?);
    }
    for (m, other) in [(m1, &r2), (m2, &r1)] {
        for s in m.statements() {
            let (a, b, c) = oriented(s, &sep).expect("checked above");
            statements.push(CIStatement::new(a, b.union(other).copied(), c)?);
        }
    }
    let mut vl: Vec<(usize, usize)> = m1.vertices().iter().copied().zip(m1.levels().iter().copied()).collect();
    vl.extend(r2.iter().map(|&v| (v, m2.level(v).expect("vertex of the model"))));
    vl.sort_unstable();
    CIModel::new(vl.iter().map(|x| x.0).collect(), vl.iter().map(|x| x.1).collect(), statements)
}

/// Outcome of comparing the generators of the product model with the lifts
/// of the side generators and the quadratic moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorIdentity {
    /// Expanded generators of the product model.
    pub derived: usize,
    /// Lifts of both sides together with the quadratic moves.
    pub lifted: usize,
    /// Equal as sets of canonical polynomials.
    pub holds: bool,
    /// Equal as ideals.
    pub same_ideal: bool,
}

/// Compares generating sets of `ci_tfp(m1, m2)` and of the toric fiber
/// product of the two CI ideals as sets of canonical polynomials in the
/// cells of `V1 ∪ V2`.
pub fn generator_identity(m1: &CIModel, m2: &CIModel) -> Result<GeneratorIdentity> {
    let sep = shared_vertices(m1, m2)?;
    let product = ci_tfp(m1, m2)?;
    let side = |m: &CIModel| -> Result<(SeparatorRing, Decomposition)> {
        let sr = SeparatorRing::of(m, &sep)?;
        let gens = model_polynomials(m)?.iter().map(|p| sr.to_ring(p)).collect();
        let d = Decomposition::new(sr.ring.clone(), vec![ComponentIdeal::explicit(gens, false, false)])?;
        Ok((sr, d))
    };
    let ((s1, d1), (s2, d2)) = (side(m1)?, side(m2)?);
    let d = combine(&d1, &d2)?;
    let o = d.origin().expect("product decomposition");
    let all = Cells::of(&product);

    // Product variable z(class, j, k) to the cell of V1 ∪ V2.
    let mut state: HashMap<usize, usize> = HashMap::new();
    let mut z_to_cell = vec![0u32; o.product.z_len()];
    let (n1, n2) = (o.product.s(), o.product.t());
    for class in 0..n1.len() {
        for j in 0..n1[class] {
            for k in 0..n2[class] {
                state.clear();
                let c1 = s1.cells.cell(s1.cell_of(class * n1[class] + j));
                let c2 = s2.cells.cell(s2.cell_of(class * n2[class] + k));
                for (v, x) in m1.vertices().iter().zip(c1).chain(m2.vertices().iter().zip(c2)) {
                    state.insert(*v, x);
                }
                let cell: Vec<usize> = product.vertices().iter().map(|v| state[v]).collect();
                z_to_cell[o.product.z_index(class, j, k)] = all.index(&cell) as u32;
            }
        }
    }
    let mut lifted: BTreeSet<Polynomial> = quad_polynomials(&o.product)
        .iter()
        .map(|p| p.rename(|z| z_to_cell[z as usize]))
        .collect();
    lifted.extend(lift_side(m1, &sep, s2.rest(), &all)?);
    lifted.extend(lift_side(m2, &sep, s1.rest(), &all)?);
    lifted.retain(|p| !p.is_zero());
    let derived: BTreeSet<Polynomial> = model_polynomials(&product)?.into_iter().collect();
    let holds = derived == lifted;
    let same_ideal = holds || same_quadric_ideal(&product, &sep, &derived, &lifted)?;
    Ok(GeneratorIdentity {
        derived: derived.len(),
        lifted: lifted.len(),
        holds,
        same_ideal,
    })
}

/// Lifts of every generator of `m` to the cells of `all`: each factor of a
/// quadric, paired with the factor sharing its states on the side holding
/// the separator, gets its
/// own state of the vertices `other`.
fn lift_side(m: &CIModel, sep: &BTreeSet<usize>, other: &[usize], all: &Cells) -> Result<Vec<Polynomial>> {
    let own = Cells::of(m);
    let to_all: Vec<usize> = m.vertices().iter().map(|&v| all.position(v).expect("product vertex")).collect();
    let other_pos: Vec<usize> = other.iter().map(|&v| all.position(v).expect("product vertex")).collect();
    let states = all.configurations(&other_pos);
    let widen = |marginal: &Marginal, k: &[usize]| {
        let mut out = vec![None; all.vertices().len()];
        for (&p, &x) in to_all.iter().zip(&marginal.0) {
            out[p] = x;
        }
        for (&p, &x) in other_pos.iter().zip(k) {
            out[p] = Some(x);
        }
        Marginal(out)
    };
    let mut out = Vec::new();
    for stmt in m.statements() {
        let (a, b, c) = oriented(stmt, sep).expect("homogeneous statement");
        for q in &quadrics(&a, &b, &c, &own)? {
            for k0 in &states {
                for k1 in &states {
                    let lifted = CIQuadric {
                        lead: [widen(&q.lead[0], k0), widen(&q.lead[1], k1)],
                        trail: [widen(&q.trail[0], k0), widen(&q.trail[1], k1)],
                    };
                    out.push(lifted.expand(all)?);
                }
            }
        }
    }
    Ok(out)
}

/// Both sets consist of quadrics, so their ideals agree iff their pieces
/// of coarse degree two do.
fn same_quadric_ideal(
    product: &CIModel,
    sep: &BTreeSet<usize>,
    a: &BTreeSet<Polynomial>,
    b: &BTreeSet<Polynomial>,
) -> Result<bool> {
    let sr = SeparatorRing::of(product, sep)?;
    let ring = &sr.ring;
    let (a, b): (Vec<Polynomial>, Vec<Polynomial>) =
        (a.iter().map(|p| sr.to_ring(p)).collect(), b.iter().map(|p| sr.to_ring(p)).collect());
    for deg in ring.degrees_up_to(2).iter().filter(|d| d.coarse == 2) {
        let space = MonomialSpace::of_degree(ring, deg);
        let (pa, pb) = (Piece::build(ring, &space, deg, &a)?, Piece::build(ring, &space, deg, &b)?);
        if !(pa.contained_in(&pb) && pb.contained_in(&pa)) {
            return Ok(false);
        }
    }
    Ok(true)
}
