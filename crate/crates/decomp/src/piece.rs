//! Graded pieces `I_a` of homogeneous ideals.
//!
//! `I_a` is spanned by `m * g` over generators `g` and monomials `m` of the
//! complementary degree. When every generator is a monomial or a unit
//! binomial the quotient `K[x]_a / I_a` is computed by union-find with signs;
//! otherwise exact row reduction over `Q` is used.

use std::collections::HashMap;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{DecompError, Result};
use crate::poly::{mono_mul, Monomial, Polynomial};
use crate::ring::{compositions, Degree, Ring};

/// Largest monomial count handled by exact reduction.
pub const RREF_CAP: usize = 20_000;

/// The monomials of one degree, with a lookup index.
#[derive(Clone, Debug)]
pub struct MonomialSpace {
    monomials: Vec<Monomial>,
    packed: HashMap<u128, u32>,
    loose: HashMap<Monomial, u32>,
}

fn pack(m: &[u32]) -> Option<u128> {
    if m.len() > 8 || m.iter().any(|&v| v >= u16::MAX as u32) {
        return None;
    }
    Some(m.iter().fold(0u128, |acc, &v| acc << 16 | (v as u128 + 1)))
}

impl MonomialSpace {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let mut packed = HashMap::new();
        let mut loose = HashMap::new();
        for (i, m) in monomials.iter().enumerate() {
            match pack(m) {
                Some(k) => packed.insert(k, i as u32),
                None => loose.insert(m.clone(), i as u32),
            };
        }
        MonomialSpace {
            monomials,
            packed,
            loose,
        }
    }

    pub fn of_degree(ring: &Ring, degree: &Degree) -> Self {
        Self::new(ring.monomials(degree))
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index(&self, m: &[u32]) -> Option<usize> {
        match pack(m) {
            Some(k) => self.packed.get(&k),
            None => self.loose.get(m),
        }
        .map(|&i| i as usize)
    }
}

/// Multiplier monomials `m` with `deg(m) + deg(g) = a`, per generator degree.
struct Multipliers<'a> {
    ring: &'a Ring,
    degree: &'a Degree,
    cache: HashMap<Vec<u32>, Vec<Monomial>>,
}

impl<'a> Multipliers<'a> {
    fn new(ring: &'a Ring, degree: &'a Degree) -> Self {
        Multipliers {
            ring,
            degree,
            cache: HashMap::new(),
        }
    }

    /// Multipliers for a generator with leading class counts `counts`.
    fn get(&mut self, g: &Polynomial) -> &[Monomial] {
        let counts = self.ring.class_counts(&g.terms()[0].mono);
        let (ring, degree) = (self.ring, self.degree);
        self.cache.entry(counts).or_insert_with_key(|counts| {
            let gd: u32 = counts.iter().sum();
            if gd > degree.coarse {
                return Vec::new();
            }
            let ga = ring.degree_of_counts(counts);
            let want: Vec<i64> = degree.a.iter().zip(&ga).map(|(x, y)| x - y).collect();
            let mut out = Vec::new();
            for c in compositions(degree.coarse - gd, ring.vars().r()) {
                if ring.degree_of_counts(&c) == want {
                    out.extend(ring.monomials_with_counts(&c));
                }
            }
            out
        })
    }
}

/// `K[x]_a / I_a` for an ideal generated by monomials and unit binomials.
///
/// Each monomial maps to `sign * root` or to zero.
#[derive(Clone, Debug)]
pub struct Quotient {
    root: Vec<u32>,
    sign: Vec<i8>,
    dead: Vec<bool>,
    live_roots: usize,
}

struct UnionFind {
    parent: Vec<u32>,
    sign: Vec<i8>,
    dead: Vec<bool>,
}

impl UnionFind {
    fn find(&mut self, v: usize) -> (usize, i8) {
        let mut path = Vec::new();
        let mut cur = v;
        while self.parent[cur] as usize != cur {
            path.push(cur);
            cur = self.parent[cur] as usize;
        }
        // Walk back so each node's sign becomes relative to the root.
        let mut acc = 1i8;
        for &u in path.iter().rev() {
            acc *= self.sign[u];
            self.sign[u] = acc;
            self.parent[u] = cur as u32;
        }
        (cur, if path.is_empty() { 1 } else { self.sign[v] })
    }

    fn kill(&mut self, v: usize) {
        let (r, _) = self.find(v);
        self.dead[r] = true;
    }

    /// Imposes `x_a = s * x_b`.
    fn relate(&mut self, a: usize, b: usize, s: i8) {
        let (ra, sa) = self.find(a);
        let (rb, sb) = self.find(b);
        let rel = sa * s * sb;
        if ra == rb {
            if rel != 1 {
                self.dead[ra] = true;
            }
            return;
        }
        self.parent[ra] = rb as u32;
        self.sign[ra] = rel;
        if self.dead[ra] {
            self.dead[rb] = true;
        }
    }
}

impl Quotient {
    pub fn build(ring: &Ring, space: &MonomialSpace, degree: &Degree, gens: &[Polynomial]) -> Result<Self> {
        let n = space.len();
        let mut uf = UnionFind {
            parent: (0..n as u32).collect(),
            sign: vec![1; n],
            dead: vec![false; n],
        };
        let mut mult = Multipliers::new(ring, degree);
        let missing = || DecompError::InvalidIdeal("generator term outside its graded piece".into());
        for g in gens {
            if let [t] = g.terms() {
                for m in mult.get(g) {
                    let i = space.index(&mono_mul(&t.mono, m)).ok_or_else(missing)?;
                    uf.kill(i);
                }
            } else if let Some((a, b, s)) = g.as_unit_binomial() {
                for m in mult.get(g) {
                    let i = space.index(&mono_mul(a, m)).ok_or_else(missing)?;
                    let j = space.index(&mono_mul(b, m)).ok_or_else(missing)?;
                    uf.relate(i, j, -s);
                }
            } else {
                return Err(DecompError::Unsupported("quotient of a non-binomial ideal".into()));
            }
        }
        let mut root = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        for v in 0..n {
            let (r, s) = uf.find(v);
            root.push(r as u32);
            sign.push(s);
        }
        let dead: Vec<bool> = root.iter().map(|&r| uf.dead[r as usize]).collect();
        let live_roots = (0..n).filter(|&v| root[v] as usize == v && !dead[v]).count();
        Ok(Quotient {
            root,
            sign,
            dead,
            live_roots,
        })
    }

    pub fn len(&self) -> usize {
        self.root.len()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_empty()
    }

    /// Image of monomial `v` in the quotient.
    pub fn image(&self, v: usize) -> Option<(u32, i8)> {
        (!self.dead[v]).then(|| (self.root[v], self.sign[v]))
    }

    /// `dim I_a`.
    pub fn dim(&self) -> usize {
        self.len() - self.live_roots
    }

    pub fn full(&self) -> bool {
        self.live_roots == 0
    }

    /// Whether this piece lies in `other` (same monomial space).
    pub fn contained_in(&self, other: &Quotient) -> bool {
        (0..self.len()).all(|v| match self.image(v) {
            None => other.dead[v],
            Some((r, s)) => {
                let target = other.image(r as usize).map(|(rr, ss)| (rr, ss * s));
                other.image(v) == target
            }
        })
    }

    /// A spanning set of `I_a` as sparse rows.
    fn spanning_rows(&self) -> Vec<Vec<(usize, i64)>> {
        (0..self.len())
            .filter_map(|v| match self.image(v) {
                None => Some(vec![(v, 1)]),
                Some((r, _)) if r as usize == v => None,
                Some((r, s)) => Some(vec![(v, 1), (r as usize, -(s as i64))]),
            })
            .collect()
    }
}

/// `I_a` as a reduced row echelon basis over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: Vec<i64>,
    pub monomials: Vec<Monomial>,
    pub basis: Vec<Vec<BigRational>>,
    pub pivots: Vec<usize>,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn dense(n: usize, sparse: &[(usize, i64)]) -> Vec<BigRational> {
    let mut row = vec![BigRational::zero(); n];
    for &(i, c) in sparse {
        row[i] += q(c);
    }
    row
}

impl GradedPiece {
    fn from_rows(degree: Vec<i64>, monomials: Vec<Monomial>, mut rows: Vec<Vec<BigRational>>) -> Self {
        let pivots = lattice_core::matrix::rref(&mut rows);
        GradedPiece {
            degree,
            monomials,
            basis: rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn full(&self) -> bool {
        self.basis.len() == self.monomials.len()
    }

    /// Reduces `v` against the basis; zero exactly when `v` lies in the piece.
    fn reduce(&self, v: &mut [BigRational]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    pub fn contains_vector(&self, v: &[BigRational]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &GradedPiece) -> bool {
        self.basis.iter().all(|row| other.contains_vector(row))
    }

    /// Intersection by the Zassenhaus sum-intersection algorithm.
    pub fn intersect(&self, other: &GradedPiece) -> GradedPiece {
        let n = self.monomials.len();
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for r in &self.basis {
            rows.push(r.iter().chain(r.iter()).cloned().collect());
        }
        for r in &other.basis {
            rows.push(r.iter().cloned().chain(std::iter::repeat_n(BigRational::zero(), n)).collect());
        }
        let pivots = lattice_core::matrix::rref(&mut rows);
        let meet: Vec<Vec<BigRational>> = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        GradedPiece::from_rows(self.degree.clone(), self.monomials.clone(), meet)
    }

    /// The polynomial of a basis row, scaled to integer coefficients.
    pub fn row_polynomial(&self, row: usize) -> Polynomial {
        let denom = self.basis[row]
            .iter()
            .fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
        Polynomial::new(self.basis[row].iter().zip(&self.monomials).filter(|(x, _)| !x.is_zero()).map(|(x, m)| {
            let c = (x * BigRational::from_integer(denom.clone())).to_integer();
            let c = if c.is_negative() { -i64::try_from(-c).expect("small") } else { i64::try_from(c).expect("small") };
            crate::poly::Term { coef: c, mono: m.clone() }
        }))
    }
}

/// `I_a` for the homogeneous ideal generated by `gens`.
pub fn graded_piece(ring: &Ring, gens: &[Polynomial], degree: &Degree) -> Result<GradedPiece> {
    let space = MonomialSpace::of_degree(ring, degree);
    let n = space.len();
    if n > RREF_CAP {
        return Err(DecompError::TooLarge {
            what: "monomials in a graded piece",
            size: n,
            limit: RREF_CAP,
        });
    }
    let rows: Vec<Vec<BigRational>> = if gens.iter().all(Polynomial::is_pure) {
        Quotient::build(ring, &space, degree, gens)?
            .spanning_rows()
            .iter()
            .map(|r| dense(n, r))
            .collect()
    } else {
        let mut mult = Multipliers::new(ring, degree);
        let mut rows = Vec::new();
        for g in gens {
            for m in mult.get(g).to_vec() {
                let mut row = vec![BigRational::zero(); n];
                for t in g.terms() {
                    let i = space
                        .index(&mono_mul(&t.mono, &m))
                        .ok_or_else(|| DecompError::InvalidIdeal("generator term outside its graded piece".into()))?;
                    row[i] += q(t.coef);
                }
                rows.push(row);
            }
        }
        rows
    };
    Ok(GradedPiece::from_rows(degree.a.clone(), space.monomials().to_vec(), rows))
}

/// A piece in whichever representation its generators allow.
#[derive(Clone, Debug)]
pub enum Piece {
    Quotient(Quotient),
    Exact(GradedPiece),
}

impl Piece {
    pub fn build(ring: &Ring, space: &MonomialSpace, degree: &Degree, gens: &[Polynomial]) -> Result<Self> {
        if gens.iter().all(Polynomial::is_pure) {
            Ok(Piece::Quotient(Quotient::build(ring, space, degree, gens)?))
        } else {
            Ok(Piece::Exact(graded_piece(ring, gens, degree)?))
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Piece::Quotient(q) => q.dim(),
            Piece::Exact(p) => p.dim(),
        }
    }

    pub fn full(&self) -> bool {
        match self {
            Piece::Quotient(q) => q.full(),
            Piece::Exact(p) => p.full(),
        }
    }

    fn exact_rows(&self) -> Vec<Vec<BigRational>> {
        match self {
            Piece::Quotient(q) => q.spanning_rows().iter().map(|r| dense(q.len(), r)).collect(),
            Piece::Exact(p) => p.basis.clone(),
        }
    }

    pub fn contained_in(&self, other: &Piece) -> bool {
        match (self, other) {
            (Piece::Quotient(a), Piece::Quotient(b)) => a.contained_in(b),
            (_, Piece::Exact(b)) => self.exact_rows().iter().all(|r| b.contains_vector(r)),
            (Piece::Exact(a), Piece::Quotient(b)) => a.basis.iter().all(|row| {
                // The image of the row in the quotient must cancel.
                let mut acc: HashMap<u32, BigRational> = HashMap::new();
                for (v, x) in row.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    if let Some((r, s)) = b.image(v) {
                        *acc.entry(r).or_insert_with(BigRational::zero) += x * q(s as i64);
                    }
                }
                acc.values().all(Zero::is_zero)
            }),
        }
    }
}
