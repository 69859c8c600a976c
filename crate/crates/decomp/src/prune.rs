//! Redundancy pruning with a per-pair certificate.
//!
//! For a product decomposition over a linearly independent grading, the
//! product of `(I1, J1)` fails to lie in the product of `(I2, J2)` exactly
//! when some degree `a` has `(I1)_a ⊄ (I2)_a` or `(J1)_a ⊄ (J2)_a` while
//! neither `(I2)_a` nor `(J2)_a` is the whole space. Only side pieces are
//! computed. Other decompositions compare their own pieces directly.
//!
//! A pair with no witness up to a bound at least the generator degree of the
//! smaller component is a proven containment, and the larger one is removed.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::ideal::Decomposition;
use crate::piece::{MonomialSpace, Piece};
use crate::ring::{Degree, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Side pieces of the two factors.
    Theorem,
    /// Pieces of the components themselves.
    Direct,
}

/// Which inclusion failed at the witness degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Left,
    Right,
    Component,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    /// `first ⊄ second`, shown at `certificate.degrees[degree]`.
    WitnessedIrredundant { degree: usize, kind: WitnessKind },
    UnknownToBound,
}

/// Verdict for the ordered pair `(first, second)` of surviving components,
/// indexed into the input decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub first: usize,
    pub second: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub removed: usize,
    /// A kept-or-earlier component contained in the removed one.
    pub contains: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullPiece {
    pub component: usize,
    pub degree: Vec<i64>,
}

/// Search for degrees where a factor component is the whole space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullnessCheck {
    pub left: Option<FullPiece>,
    pub right: Option<FullPiece>,
}

impl FullnessCheck {
    /// No full piece found up to the bound.
    pub fn holds(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PruneCertificate {
    pub bound: u32,
    pub method: Method,
    pub degrees: Vec<Vec<i64>>,
    pub removed: Vec<Removal>,
    pub kept: Vec<usize>,
    pub verdicts: Vec<PairVerdict>,
    pub witnessed: usize,
    pub unknown: usize,
    /// Theorem mode only: full side pieces up to the bound.
    pub fullness: Option<FullnessCheck>,
}

impl PruneCertificate {
    pub fn all_witnessed(&self) -> bool {
        self.unknown == 0
    }
}

/// Pieces of every component of `d` at one degree.
fn pieces(d: &Decomposition, degree: &Degree, which: &[usize]) -> Result<HashMap<usize, Piece>> {
    let ring: &Ring = d.ring();
    let space = MonomialSpace::of_degree(ring, degree);
    which
        .par_iter()
        .map(|&c| Ok((c, Piece::build(ring, &space, degree, &d.generators(c)?)?)))
        .collect()
}

/// Containment of piece pairs at one degree.
struct Table {
    contained: HashMap<(usize, usize), bool>,
}

fn table(pieces: &HashMap<usize, Piece>, pairs: &[(usize, usize)]) -> Table {
    let contained = pairs
        .par_iter()
        .map(|&(a, b)| ((a, b), a == b || pieces[&a].contained_in(&pieces[&b])))
        .collect();
    Table { contained }
}

struct Search {
    degrees: Vec<Vec<i64>>,
    /// `(p, q) -> witness` for pairs shown `p ⊄ q`.
    witness: HashMap<(usize, usize), (usize, WitnessKind)>,
    fullness: Option<FullnessCheck>,
}

fn search_theorem(d: &Decomposition, bound: u32) -> Result<Search> {
    let o = d.origin().expect("theorem mode needs factors");
    let prov: Vec<(usize, usize)> = (0..d.len()).map(|c| d.provenance(c).expect("product component")).collect();
    let left_ids: Vec<usize> = unique(prov.iter().map(|x| x.0));
    let right_ids: Vec<usize> = unique(prov.iter().map(|x| x.1));
    let right_degrees: HashMap<Vec<i64>, Degree> =
        o.right.ring().degrees_up_to(bound).into_iter().map(|g| (g.a.clone(), g)).collect();
    let mut open: Vec<(usize, usize)> = ordered_pairs(d.len());
    let mut search = Search {
        degrees: Vec::new(),
        witness: HashMap::new(),
        fullness: Some(FullnessCheck { left: None, right: None }),
    };
    for deg in o.left.ring().degrees_up_to(bound) {
        let rdeg = &right_degrees[&deg.a];
        let lp = pieces(&o.left, &deg, &left_ids)?;
        let rp = pieces(&o.right, rdeg, &right_ids)?;
        let fullness = search.fullness.as_mut().expect("set above");
        if fullness.left.is_none() {
            fullness.left = left_ids.iter().find(|c| lp[c].full()).map(|&c| FullPiece {
                component: c,
                degree: deg.a.clone(),
            });
        }
        if fullness.right.is_none() {
            fullness.right = right_ids.iter().find(|c| rp[c].full()).map(|&c| FullPiece {
                component: c,
                degree: deg.a.clone(),
            });
        }
        if open.is_empty() {
            continue;
        }
        // Containment is automatic when either side piece of q is full.
        let live = |q: usize| !lp[&prov[q].0].full() && !rp[&prov[q].1].full();
        let mut lpairs = Vec::new();
        let mut rpairs = Vec::new();
        for &(p, q) in &open {
            if live(q) {
                lpairs.push((prov[p].0, prov[q].0));
                rpairs.push((prov[p].1, prov[q].1));
            }
        }
        lpairs.sort_unstable();
        lpairs.dedup();
        rpairs.sort_unstable();
        rpairs.dedup();
        let lt = table(&lp, &lpairs);
        let rt = table(&rp, &rpairs);
        let idx = search.degrees.len();
        let mut any = false;
        open.retain(|&(p, q)| {
            if !live(q) {
                return true;
            }
            let kind = if !lt.contained[&(prov[p].0, prov[q].0)] {
                WitnessKind::Left
            } else if !rt.contained[&(prov[p].1, prov[q].1)] {
                WitnessKind::Right
            } else {
                return true;
            };
            search.witness.insert((p, q), (idx, kind));
            any = true;
            false
        });
        if any {
            search.degrees.push(deg.a.clone());
        }
    }
    Ok(search)
}

fn search_direct(d: &Decomposition, bound: u32) -> Result<Search> {
    let all: Vec<usize> = (0..d.len()).collect();
    let mut open = ordered_pairs(d.len());
    let mut search = Search {
        degrees: Vec::new(),
        witness: HashMap::new(),
        fullness: None,
    };
    for deg in d.ring().degrees_up_to(bound) {
        if open.is_empty() {
            break;
        }
        let ps = pieces(d, &deg, &all)?;
        let t = table(&ps, &open);
        let idx = search.degrees.len();
        let before = open.len();
        open.retain(|pq| {
            if t.contained[pq] {
                return true;
            }
            search.witness.insert(*pq, (idx, WitnessKind::Component));
            false
        });
        if open.len() < before {
            search.degrees.push(deg.a.clone());
        }
    }
    Ok(search)
}

fn unique(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q))).collect()
}

/// Whether `prune` can use the factor criterion on `d`.
pub fn theorem_applies(d: &Decomposition) -> bool {
    d.origin().is_some_and(|o| o.left.ring().linearly_independent())
        && (0..d.len()).all(|c| d.provenance(c).is_some())
}

/// Removes components that provably contain another one, and reports a
/// verdict for every ordered pair of the survivors.
pub fn prune(d: &Decomposition, bound: u32) -> Result<(Decomposition, PruneCertificate)> {
    let (method, search) = if theorem_applies(d) {
        (Method::Theorem, search_theorem(d, bound)?)
    } else {
        (Method::Direct, search_direct(d, bound)?)
    };
    let gen_deg: Vec<usize> = (0..d.len()).map(|c| d.generator_degree(c)).collect::<Result<_>>()?;
    // proven[p][q]: p ⊆ q.
    let proven = |p: usize, q: usize| !search.witness.contains_key(&(p, q)) && bound as usize >= gen_deg[p];
    let mut removed = Vec::new();
    let mut kept = Vec::new();
    for q in 0..d.len() {
        let by = (0..d.len()).find(|&p| p != q && proven(p, q) && !(proven(q, p) && q < p));
        match by {
            Some(p) => removed.push(Removal { removed: q, contains: p }),
            None => kept.push(q),
        }
    }
    let mut verdicts = Vec::with_capacity(kept.len() * kept.len().saturating_sub(1));
    let (mut witnessed, mut unknown) = (0, 0);
    for &p in &kept {
        for &q in &kept {
            if p == q {
                continue;
            }
            let verdict = match search.witness.get(&(p, q)) {
                Some(&(degree, kind)) => {
                    witnessed += 1;
                    Verdict::WitnessedIrredundant { degree, kind }
                }
                None => {
                    unknown += 1;
                    Verdict::UnknownToBound
                }
            };
            verdicts.push(PairVerdict {
                first: p,
                second: q,
                verdict,
            });
        }
    }
    let cert = PruneCertificate {
        bound,
        method,
        degrees: search.degrees,
        removed,
        verdicts,
        witnessed,
        unknown,
        fullness: search.fullness,
        kept: kept.clone(),
    };
    Ok((d.select(&kept), cert))
}

/// First component and degree up to `bound` whose piece is the whole space.
pub fn first_full_piece(d: &Decomposition, bound: u32) -> Result<Option<FullPiece>> {
    let all: Vec<usize> = (0..d.len()).collect();
    for deg in d.ring().degrees_up_to(bound) {
        let ps = pieces(d, &deg, &all)?;
        if let Some(&c) = all.iter().find(|c| ps[c].full()) {
            return Ok(Some(FullPiece {
                component: c,
                degree: deg.a,
            }));
        }
    }
    Ok(None)
}
