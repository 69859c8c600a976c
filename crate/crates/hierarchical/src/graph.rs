use std::collections::{BTreeSet, HashSet};

use crate::complex::SimplicialComplex;
use crate::error::{HierError, Result};

/// Largest graph accepted by the minor search.
pub const MINOR_SEARCH_LIMIT: usize = 12;

/// A simple undirected graph. Vertices carry labels; edges are stored as
/// sorted position pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovGraph {
    vertices: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl MarkovGraph {
    /// Edges are given by vertex labels.
    pub fn new(vertices: Vec<usize>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(*v) {
                return Err(HierError::InvalidGraph(format!("vertex {v} listed twice")));
            }
        }
        let pos = |l: usize| {
            vertices
                .iter()
                .position(|&v| v == l)
                .ok_or_else(|| HierError::InvalidGraph(format!("edge endpoint {l} is not a vertex")))
        };
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            let (pa, pb) = (pos(a)?, pos(b)?);
            if pa == pb {
                return Err(HierError::InvalidGraph(format!("loop at {a}")));
            }
            if !set.insert((pa.min(pb), pa.max(pb))) {
                return Err(HierError::InvalidGraph(format!("repeated edge {a}-{b}")));
            }
        }
        Ok(MarkovGraph { vertices, edges: set })
    }

    /// Vertices `0..n` with position edges.
    pub fn from_positions(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        MarkovGraph {
            vertices: (0..n).collect(),
            edges,
        }
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_positions(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_positions(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_positions(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == label)
    }

    pub fn label(&self, p: usize) -> usize {
        self.vertices[p]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// The complex whose facets are the edges and the isolated vertices.
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_positions(
            self.vertices.clone(),
            self.edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        )
    }

    /// Subgraph induced on sorted positions, re-indexed in that order.
    pub fn induced(&self, subset: &[usize]) -> MarkovGraph {
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                let pa = subset.iter().position(|&v| v == a)?;
                let pb = subset.iter().position(|&v| v == b)?;
                Some((pa.min(pb), pa.max(pb)))
            })
            .collect();
        MarkovGraph {
            vertices: subset.iter().map(|&p| self.vertices[p]).collect(),
            edges,
        }
    }

    pub fn with_edge(&self, a: usize, b: usize) -> MarkovGraph {
        let mut g = self.clone();
        if a != b {
            g.edges.insert((a.min(b), a.max(b)));
        }
        g
    }

    /// Connected components of the graph minus `removed`, each sorted, ordered by least vertex.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if removed.contains(&s) || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !removed.contains(&w) && comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.components().len();
        (0..self.n())
            .filter(|&v| {
                // Removing an isolated vertex drops a component rather than adding one.
                self.degree(v) > 0 && self.components_without(&[v]).len() > base
            })
            .collect()
    }

    /// Maximal 2-connected pieces and bridges, as sorted vertex lists with their edges.
    pub fn blocks(&self) -> Vec<Block> {
        // Two edges share a block iff they lie on a common cycle; merge edges
        // through each vertex whose removal keeps their far ends connected.
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        let m = edges.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for v in 0..self.n() {
            let comps = self.components_without(&[v]);
            let comp_of = |w: usize| comps.iter().position(|c| c.binary_search(&w).is_ok());
            let incident: Vec<usize> = (0..m).filter(|&e| edges[e].0 == v || edges[e].1 == v).collect();
            for (x, &e) in incident.iter().enumerate() {
                for &f in &incident[x + 1..] {
                    let oe = if edges[e].0 == v { edges[e].1 } else { edges[e].0 };
                    let of = if edges[f].0 == v { edges[f].1 } else { edges[f].0 };
                    if comp_of(oe) == comp_of(of) {
                        let (a, b) = (find(&mut parent, e), find(&mut parent, f));
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
        for e in 0..m {
            let r = find(&mut parent, e);
            match groups.iter_mut().find(|(root, _)| *root == r) {
                Some((_, list)) => list.push(edges[e]),
                None => groups.push((r, vec![edges[e]])),
            }
        }
        groups
            .into_iter()
            .map(|(_, es)| {
                let vs: BTreeSet<usize> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
                Block {
                    vertices: vs.into_iter().collect(),
                    edges: es,
                }
            })
            .collect()
    }
}

/// A block of a graph in the graph's positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

fn edge_key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn cycle_edges(cycle: &[usize]) -> BTreeSet<(usize, usize)> {
    (0..cycle.len())
        .map(|i| edge_key(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect()
}

/// Checks the defining property of a cycle decomposition of the edge set `edges`.
pub fn is_cycle_decomposition(cycles: &[Vec<usize>], edges: &[(usize, usize)]) -> bool {
    let mut union_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut union_v: BTreeSet<usize> = BTreeSet::new();
    for (i, c) in cycles.iter().enumerate() {
        let distinct: BTreeSet<usize> = c.iter().copied().collect();
        if c.len() < 3 || distinct.len() != c.len() {
            return false;
        }
        let ce = cycle_edges(c);
        if i > 0 {
            let common_v: Vec<usize> = distinct.intersection(&union_v).copied().collect();
            let common_e: Vec<(usize, usize)> = ce.intersection(&union_e).copied().collect();
            if common_e.len() != 1 || common_v.len() != 2 {
                return false;
            }
        }
        union_e.extend(ce);
        union_v.extend(distinct);
    }
    let target: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| edge_key(a, b)).collect();
    union_e == target
}

fn adjacency(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<(usize, Vec<usize>)> {
    vertices
        .iter()
        .map(|&v| {
            let mut nb: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
                .collect();
            nb.sort_unstable();
            (v, nb)
        })
        .collect()
}

fn trace_cycle(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    let adj = adjacency(vertices, edges);
    let nb = |v: usize| &adj.iter().find(|(w, _)| *w == v).expect("vertex").1;
    let start = vertices[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = nb(start)[0];
    while cur != start {
        cycle.push(cur);
        let next = nb(cur).iter().copied().find(|&w| w != prev).expect("degree two");
        prev = cur;
        cur = next;
    }
    cycle
}

fn pieces_without(vertices: &[usize], edges: &[(usize, usize)], u: usize, v: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = vertices.iter().copied().filter(|&x| x != u && x != v).collect();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut done: BTreeSet<usize> = BTreeSet::new();
    for &s in &rest {
        if done.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        done.insert(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(a, b) in edges {
                let y = if a == x { b } else if b == x { a } else { continue };
                if y != u && y != v && done.insert(y) {
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Reorders `cycles` so that each one meets the earlier ones in exactly one
/// edge, starting from the first cycle containing `first_edge`.
fn order_cycles(mut cycles: Vec<Vec<usize>>, first_edge: (usize, usize)) -> Option<Vec<Vec<usize>>> {
    let start = cycles.iter().position(|c| cycle_edges(c).contains(&first_edge))?;
    let mut out = vec![cycles.remove(start)];
    while !cycles.is_empty() {
        let union_e: BTreeSet<(usize, usize)> = out.iter().flat_map(|c| cycle_edges(c)).collect();
        let union_v: BTreeSet<usize> = out.iter().flatten().copied().collect();
        let pick = cycles.iter().position(|c| {
            let cv: BTreeSet<usize> = c.iter().copied().collect();
            cycle_edges(c).intersection(&union_e).count() == 1 && cv.intersection(&union_v).count() == 2
        })?;
        out.push(cycles.remove(pick));
    }
    Some(out)
}

/// Cycle decomposition of a 2-connected edge set, if it is a ring graph.
///
/// Splits along an edge whose endpoints separate the rest, recursing into
/// the pieces with that edge added to each.
pub fn cycle_decomposition(vertices: &[usize], edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if vertices.len() < 3 {
        return None;
    }
    let adj = adjacency(vertices, edges);
    if adj.iter().all(|(_, nb)| nb.len() == 2) {
        let c = trace_cycle(vertices, edges);
        return (c.len() == vertices.len()).then_some(vec![c]);
    }
    for &(u, v) in edges {
        let comps = pieces_without(vertices, edges, u, v);
        if comps.len() < 2 {
            continue;
        }
        let mut all = Vec::new();
        let mut ok = true;
        for comp in &comps {
            let mut pv = comp.clone();
            pv.push(u);
            pv.push(v);
            pv.sort_unstable();
            let mut pe: Vec<(usize, usize)> = edges
                .iter()
                .copied()
                .filter(|&(a, b)| pv.contains(&a) && pv.contains(&b) && edge_key(a, b) != edge_key(u, v))
                .collect();
            pe.push(edge_key(u, v));
            match cycle_decomposition(&pv, &pe) {
                Some(cs) => match order_cycles(cs, edge_key(u, v)) {
                    Some(cs) => all.push(cs),
                    None => ok = false,
                },
                None => ok = false,
            }
        }
        if !ok {
            continue;
        }
        let joined: Vec<Vec<usize>> = all.into_iter().flatten().collect();
        if is_cycle_decomposition(&joined, edges) {
            return Some(joined);
        }
    }
    None
}

/// Searches contractions of `g` for a quotient satisfying `found`.
///
/// Every minor is a subgraph of a contraction, so `found` should test for a
/// subgraph. States are vertex partitions, memoized.
fn minor_search(g: &MarkovGraph, min_parts: usize, found: &dyn Fn(usize, &BTreeSet<(usize, usize)>) -> bool) -> bool {
    fn canon(labels: &[usize]) -> Vec<usize> {
        let mut map: Vec<usize> = Vec::new();
        labels
            .iter()
            .map(|&l| match map.iter().position(|&m| m == l) {
                Some(p) => p,
                None => {
                    map.push(l);
                    map.len() - 1
                }
            })
            .collect()
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut stack = vec![canon(&(0..g.n()).collect::<Vec<_>>())];
    while let Some(part) = stack.pop() {
        if !seen.insert(part.clone()) {
            continue;
        }
        let parts = part.iter().max().map_or(0, |m| m + 1);
        if parts < min_parts {
            continue;
        }
        let quotient: BTreeSet<(usize, usize)> = edges
            .iter()
            .filter(|&&(a, b)| part[a] != part[b])
            .map(|&(a, b)| edge_key(part[a], part[b]))
            .collect();
        if found(parts, &quotient) {
            return true;
        }
        if parts == min_parts {
            continue;
        }
        for &(x, y) in &quotient {
            let merged: Vec<usize> = part.iter().map(|&l| if l == y { x } else { l }).collect();
            let c = canon(&merged);
            if !seen.contains(&c) {
                stack.push(c);
            }
        }
    }
    false
}

fn has_k4_subgraph(n: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    let adj = |a: usize, b: usize| edges.contains(&edge_key(a, b));
    for a in 0..n {
        for b in a + 1..n {
            if !adj(a, b) {
                continue;
            }
            for c in b + 1..n {
                if !adj(a, c) || !adj(b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if adj(a, d) && adj(b, d) && adj(c, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn has_k23_subgraph(n: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    let adj = |a: usize, b: usize| edges.contains(&edge_key(a, b));
    (0..n).any(|a| (a + 1..n).any(|b| (0..n).filter(|&c| c != a && c != b && adj(a, c) && adj(b, c)).count() >= 3))
}

fn check_minor_size(g: &MarkovGraph) -> Result<()> {
    if g.n() > MINOR_SEARCH_LIMIT {
        return Err(HierError::TooLarge {
            what: "vertices for minor search",
            size: g.n(),
            limit: MINOR_SEARCH_LIMIT,
        });
    }
    Ok(())
}

/// Both target minors are 2-connected, so each block is searched on its own.
fn block_minor(g: &MarkovGraph, min_parts: usize, found: &dyn Fn(usize, &BTreeSet<(usize, usize)>) -> bool) -> Result<bool> {
    check_minor_size(g)?;
    Ok(g.blocks()
        .iter()
        .filter(|b| b.vertices.len() >= min_parts)
        .any(|b| minor_search(&g.induced_block(b), min_parts, found)))
}

impl MarkovGraph {
    fn induced_block(&self, b: &Block) -> MarkovGraph {
        let edges = b.edges.iter().map(|&(x, y)| {
            let px = b.vertices.binary_search(&x).expect("block vertex");
            let py = b.vertices.binary_search(&y).expect("block vertex");
            (px, py)
        });
        let mut g = MarkovGraph::from_positions(b.vertices.len(), edges);
        g.vertices = b.vertices.iter().map(|&p| self.vertices[p]).collect();
        g
    }
}

pub fn has_k4_minor(g: &MarkovGraph) -> Result<bool> {
    block_minor(g, 4, &has_k4_subgraph)
}

pub fn has_k23_minor(g: &MarkovGraph) -> Result<bool> {
    block_minor(g, 5, &has_k23_subgraph)
}

/// Cycle decompositions of every non-bridge block, or `None` for a block without one.
pub fn ring_structure(g: &MarkovGraph) -> Vec<(Block, Option<Vec<Vec<usize>>>)> {
    g.blocks()
        .into_iter()
        .map(|b| {
            let dec = if b.is_bridge() {
                Some(Vec::new())
            } else {
                cycle_decomposition(&b.vertices, &b.edges)
            };
            (b, dec)
        })
        .collect()
}

pub fn is_ring_graph(g: &MarkovGraph) -> bool {
    ring_structure(g).iter().all(|(_, d)| d.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarReport {
    pub k4_minor: bool,
    pub k23_minor: bool,
    pub outerplanar: bool,
    pub ring_graph: bool,
    /// Outerplanar graphs are exactly the Markov slim ones in the minor-closed sense.
    pub markov_slim: bool,
}

pub fn outerplanar_and_slim(g: &MarkovGraph) -> Result<OuterplanarReport> {
    let k4 = has_k4_minor(g)?;
    let k23 = has_k23_minor(g)?;
    let outerplanar = !k4 && !k23;
    Ok(OuterplanarReport {
        k4_minor: k4,
        k23_minor: k23,
        outerplanar,
        ring_graph: is_ring_graph(g),
        markov_slim: outerplanar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_repeats() {
        assert!(MarkovGraph::new(vec![1, 2], &[(1, 1)]).is_err());
        assert!(MarkovGraph::new(vec![1, 2], &[(1, 2), (2, 1)]).is_err());
        assert!(MarkovGraph::new(vec![1, 2], &[(1, 3)]).is_err());
    }

    #[test]
    fn blocks_of_bowtie_with_tail() {
        // Two triangles sharing vertex 2, and a pendant edge 4-5.
        let g = MarkovGraph::from_positions(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]);
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks.iter().filter(|b| b.is_bridge()).count(), 1);
        assert_eq!(g.cut_vertices(), vec![2, 4]);
    }

    #[test]
    fn cycles_glued_along_edges_decompose() {
        // Squares 0-1-2-3 and 2-4-5-3 share the edge 2-3.
        let g = MarkovGraph::from_positions(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 3)]);
        let (b, dec) = &ring_structure(&g)[0];
        let dec = dec.as_ref().unwrap();
        assert_eq!(dec.len(), 2);
        assert!(is_cycle_decomposition(dec, &b.edges));
    }

    #[test]
    fn theta_with_long_paths_is_not_ring() {
        // K_{2,3}: three paths of length two between 0 and 1.
        let g = MarkovGraph::complete_bipartite(2, 3);
        assert!(!is_ring_graph(&g));
        assert!(is_ring_graph(&MarkovGraph::cycle(5)));
    }

    #[test]
    fn small_minors() {
        assert!(has_k4_minor(&MarkovGraph::complete(4)).unwrap());
        assert!(!has_k4_minor(&MarkovGraph::complete_bipartite(2, 3)).unwrap());
        assert!(has_k23_minor(&MarkovGraph::complete_bipartite(2, 3)).unwrap());
        assert!(!has_k23_minor(&MarkovGraph::cycle(6)).unwrap());
        // The wheel on 5 rim vertices contracts to K4.
        let mut wheel: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        wheel.extend((0..5).map(|i| (i, 5)));
        assert!(has_k4_minor(&MarkovGraph::from_positions(6, wheel)).unwrap());
    }

    #[test]
    fn outerplanar_report() {
        let tree = MarkovGraph::from_positions(5, [(0, 1), (0, 2), (2, 3), (2, 4)]);
        let r = outerplanar_and_slim(&tree).unwrap();
        assert!(r.outerplanar && r.ring_graph && r.markov_slim);
        let k4 = outerplanar_and_slim(&MarkovGraph::complete(4)).unwrap();
        assert!(!k4.outerplanar && k4.k4_minor);
    }

    #[test]
    fn minor_search_is_capped() {
        assert!(has_k4_minor(&MarkovGraph::cycle(13)).is_err());
    }
}
