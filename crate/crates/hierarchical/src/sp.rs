use std::collections::{BTreeMap, BTreeSet};

use lattice_core::{MoveSet, DEFAULT_FIBER_CAP};
use markov_engine::select_minimal;
use tfp::{assemble_from_tilde, codim0_basis, AssembleOptions, Justification};

use crate::closed::simplex_boundary_move;
use crate::error::{HierError, Result};
use crate::graph::MarkovGraph;
use crate::model::HierModel;
use crate::split::Split;

/// One reduction step, in vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpStep {
    /// Two parallel edges between the ends merged into one.
    Parallel { ends: (usize, usize) },
    /// A degree-two vertex replaced by an edge between its neighbors.
    Series { vertex: usize, ends: (usize, usize) },
    /// A degree-one vertex removed; it hangs off the rest at a single vertex.
    Pendant { vertex: usize },
}

/// Reduces the graph to the single edge `top`-`bottom`, recording each step.
///
/// Non-terminal vertices are handled lowest label first: degree two by a series
/// step, then degree at most one by removal. Parallel edges merge as soon as they
/// appear.
pub fn recognize(g: &MarkovGraph, top: usize, bottom: usize) -> Result<Vec<SpStep>> {
    let fail = || HierError::NotSeriesParallel { top, bottom };
    let t = g.position(top).ok_or_else(|| HierError::InvalidGraph(format!("top {top} is not a vertex")))?;
    let b = g
        .position(bottom)
        .ok_or_else(|| HierError::InvalidGraph(format!("bottom {bottom} is not a vertex")))?;
    if t == b {
        return Err(HierError::InvalidGraph("top and bottom coincide".into()));
    }
    if !g.is_connected() {
        return Err(fail());
    }
    let mut edges: BTreeMap<(usize, usize), usize> = g.edges().iter().map(|&e| (e, 1)).collect();
    let mut alive: BTreeSet<usize> = (0..g.n()).collect();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&p| g.label(p));
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut steps = Vec::new();
    loop {
        for (&(x, y), c) in edges.iter_mut() {
            if *c > 1 {
                *c = 1;
                steps.push(SpStep::Parallel {
                    ends: (g.label(x), g.label(y)),
                });
            }
        }
        if alive.len() == 2 && edges.len() == 1 && edges.contains_key(&key(t, b)) {
            return Ok(steps);
        }
        let incident = |v: usize, edges: &BTreeMap<(usize, usize), usize>| -> Vec<usize> {
            edges
                .keys()
                .filter_map(|&(x, y)| if x == v { Some(y) } else if y == v { Some(x) } else { None })
                .collect()
        };
        let inner = || order.iter().copied().filter(|&v| v != t && v != b && alive.contains(&v));
        if let Some(v) = inner().find(|&v| incident(v, &edges).len() == 2) {
            let nb = incident(v, &edges);
            edges.remove(&key(v, nb[0]));
            edges.remove(&key(v, nb[1]));
            *edges.entry(key(nb[0], nb[1])).or_insert(0) += 1;
            alive.remove(&v);
            steps.push(SpStep::Series {
                vertex: g.label(v),
                ends: (g.label(nb[0]), g.label(nb[1])),
            });
            continue;
        }
        if let Some(v) = inner().find(|&v| incident(v, &edges).len() <= 1) {
            for w in incident(v, &edges) {
                edges.remove(&key(v, w));
            }
            alive.remove(&v);
            steps.push(SpStep::Pendant { vertex: g.label(v) });
            continue;
        }
        return Err(fail());
    }
}

#[derive(Clone, Debug)]
pub struct SpBasis {
    /// Moves in the cell order of the binary graph model.
    pub basis: MoveSet,
    pub degrees: BTreeMap<u32, usize>,
    pub reduction: Vec<SpStep>,
}

type CacheKey = (Vec<usize>, Vec<(usize, usize)>);

struct Builder {
    cache: BTreeMap<CacheKey, MoveSet>,
    opts: AssembleOptions,
}

fn with(part: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = part.iter().chain(extra).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl Builder {
    fn build(&mut self, g: &MarkovGraph) -> Result<MoveSet> {
        let key = (g.vertices().to_vec(), g.edges().iter().copied().collect());
        if let Some(m) = self.cache.get(&key) {
            return Ok(m.clone());
        }
        // Glued binomials sharing a cell cancel down to lower-degree moves, so
        // each piece is thinned to a minimal basis before it is reused.
        let mut out = self.build_uncached(g)?;
        if !out.is_empty() {
            let model = HierModel::binary(g.complex())?;
            out = select_minimal(model.config(), &out, DEFAULT_FIBER_CAP)?.basis;
        }
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    fn codim0(&mut self, g: &MarkovGraph, model: &HierModel, v1: &[usize], v2: &[usize]) -> Result<MoveSet> {
        let split = Split::new(model, v1, v2)?;
        let f = self.build(&g.induced(v1))?;
        let h = self.build(&g.induced(v2))?;
        Ok(split.moves_to_cells(&codim0_basis(&f, &h, split.product())?))
    }

    fn build_uncached(&mut self, g: &MarkovGraph) -> Result<MoveSet> {
        let n = g.n();
        if n <= 1 {
            return Ok(MoveSet::new());
        }
        let model = HierModel::binary(g.complex())?;
        let comps = g.components();
        if comps.len() > 1 {
            let rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
            return self.codim0(g, &model, &comps[0], &with(&rest, &[]));
        }
        if let Some(&w) = g.cut_vertices().first() {
            let parts = g.components_without(&[w]);
            let rest: Vec<usize> = parts[1..].iter().flatten().copied().collect();
            return self.codim0(g, &model, &with(&parts[0], &[w]), &with(&rest, &[w]));
        }
        if n == 2 {
            return Ok(MoveSet::new());
        }
        if n == 3 {
            return Ok(MoveSet::from_moves([simplex_boundary_move(3)]));
        }
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.sort_by_key(|&(u, v)| !g.has_edge(u, v));
        for (u, v) in pairs {
            let parts = g.components_without(&[u, v]);
            if parts.len() < 2 {
                continue;
            }
            let rest: Vec<usize> = parts[1..].iter().flatten().copied().collect();
            let v1 = with(&parts[0], &[u, v]);
            let v2 = with(&rest, &[u, v]);
            if g.has_edge(u, v) {
                return self.codim0(g, &model, &v1, &v2);
            }
            let split = Split::new(&model, &v1, &v2)?;
            let (g1, g2) = (g.induced(&v1), g.induced(&v2));
            let local = |vs: &[usize], x: usize| vs.binary_search(&x).expect("separator vertex");
            let g1t = g1.with_edge(local(&v1, u), local(&v1, v));
            let g2t = g2.with_edge(local(&v2, u), local(&v2, v));
            let f = self.build(&g1)?;
            let h = self.build(&g2)?;
            let ft = self.build(&g1t)?;
            let ht = self.build(&g2t)?;
            let asm = assemble_from_tilde(&ft, &ht, &f, &h, split.product(), &self.opts)?;
            if asm.justification == Justification::SlowVarying {
                return Ok(split.moves_to_cells(&asm.moves));
            }
        }
        Err(HierError::Construction(format!(
            "no usable separation of the graph on {:?}",
            g.vertices()
        )))
    }
}

/// A minimal Markov basis of the binary model of a series-parallel graph,
/// built from fiber products along cut vertices and separating pairs.
pub fn sp_basis(g: &MarkovGraph, top: usize, bottom: usize) -> Result<SpBasis> {
    let reduction = recognize(g, top, bottom)?;
    let mut builder = Builder {
        cache: BTreeMap::new(),
        opts: AssembleOptions::default(),
    };
    let basis = builder.build(g)?;
    Ok(SpBasis {
        degrees: basis.degree_histogram(),
        basis,
        reduction,
    })
}
