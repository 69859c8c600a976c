//! Components of a toric fiber product of two decomposed ideals.
//!
//! With the class grading `A` linearly independent, each pair of components
//! `(I_i, J_j)` gives the product component `Lift(I_i) + Lift(J_j) + Quad`.

use lattice_core::{GradedVariableSet, VectorConfiguration};
use tfp::{product_config, ProductConfiguration, Side};

use crate::error::{DecompError, Result};
use crate::ideal::{canonical_generators, ComponentIdeal, Decomposition, Origin, Source};
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// Upper bound on lifts of a single polynomial.
pub const LIFT_CAP: usize = 1_000_000;

/// `(class, position within class)` of every ring variable.
fn class_positions(ring: &Ring) -> Vec<(usize, usize)> {
    let mut seen = vec![0usize; ring.vars().r()];
    (0..ring.n())
        .map(|v| {
            let c = ring.vars().class_of(v);
            seen[c] += 1;
            (c, seen[c] - 1)
        })
        .collect()
}

fn side_config(ring: &Ring) -> Result<VectorConfiguration> {
    let vars = GradedVariableSet::class_major(ring.vars().sizes())?;
    Ok(VectorConfiguration::from_classes(vars, ring.grading().clone())?)
}

/// The ring of the product: variables `z_(class, j, k)` in class-major order.
fn product_ring(left: &Ring, right: &Ring, p: &ProductConfiguration) -> Result<Ring> {
    let vars = p.product().vars().clone();
    let fine = p.s().iter().chain(p.t()).all(|&x| x == 1);
    let names = if fine {
        // One variable per class: keep the left names.
        left.names().to_vec()
    } else {
        let _ = right;
        vars.labels()
            .iter()
            .map(|l| format!("z{}_{}_{}", l.class, l.j, l.k.expect("triple")))
            .collect()
    };
    Ring::new(vars, left.grading().clone(), Some(names))
}

/// `combine(D1, D2)`: all `m * n` product components, generated on demand.
pub fn combine(left: &Decomposition, right: &Decomposition) -> Result<Decomposition> {
    let (lr, rr) = (left.ring(), right.ring());
    if lr.grading() != rr.grading() {
        return Err(DecompError::InvalidRing("the two rings carry different class gradings".into()));
    }
    if !lr.linearly_independent() {
        return Err(DecompError::Unsupported(
            "products of decompositions need linearly independent class degrees".into(),
        ));
    }
    let product = product_config(&side_config(lr)?, &side_config(rr)?, lr.grading())?;
    let ring = product_ring(lr, rr, &product)?;
    let mut components = Vec::with_capacity(left.len() * right.len());
    for (i, a) in left.components().iter().enumerate() {
        for (j, b) in right.components().iter().enumerate() {
            let gp = a.geometrically_primary && b.geometrically_primary;
            components.push(ComponentIdeal {
                source: Source::Product { left: i, right: j },
                prime: gp && a.prime && b.prime,
                geometrically_primary: gp,
            });
        }
    }
    let origin = Origin {
        left: left.clone(),
        right: right.clone(),
        product,
    };
    Ok(Decomposition::from_product(ring, components, origin))
}

/// All lifts of a homogeneous polynomial from one side.
///
/// The variables of every term are sorted by `(class, position)`; the `t`-th
/// variable of each term then receives the same other-side index.
pub fn lift_polynomial(p: &Polynomial, side: Side, ring: &Ring, product: &ProductConfiguration) -> Result<Vec<Polynomial>> {
    let pos = class_positions(ring);
    let rows: Vec<Vec<(usize, usize)>> = p
        .terms()
        .iter()
        .map(|t| {
            let mut r: Vec<(usize, usize)> = t.mono.iter().map(|&v| pos[v as usize]).collect();
            r.sort_unstable();
            r
        })
        .collect();
    let classes: Vec<usize> = rows[0].iter().map(|x| x.0).collect();
    if rows.iter().any(|r| r.len() != classes.len() || r.iter().zip(&classes).any(|(x, &c)| x.0 != c)) {
        return Err(DecompError::InvalidIdeal("terms of a generator have different class contents".into()));
    }
    let other = match side {
        Side::Left => product.t(),
        Side::Right => product.s(),
    };
    let total = classes.iter().fold(1usize, |acc, &c| acc.saturating_mul(other[c]));
    if total > LIFT_CAP {
        return Err(DecompError::TooLarge {
            what: "lifts of one generator",
            size: total,
            limit: LIFT_CAP,
        });
    }
    let n = classes.len();
    let mut out = Vec::with_capacity(total);
    let mut choice = vec![0usize; n];
    loop {
        let terms = p.terms().iter().zip(&rows).map(|(t, r)| {
            let mut mono: Vec<u32> = r
                .iter()
                .zip(&choice)
                .map(|(&(c, j), &k)| match side {
                    Side::Left => product.z_index(c, j, k),
                    Side::Right => product.z_index(c, k, j),
                } as u32)
                .collect();
            mono.sort_unstable();
            Term { coef: t.coef, mono }
        });
        out.push(Polynomial::new(terms));
        let mut t = n;
        loop {
            if t == 0 {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            t -= 1;
            choice[t] += 1;
            if choice[t] < other[classes[t]] {
                break;
            }
            choice[t] = 0;
        }
    }
}

/// The exchange binomials `z_(i,j1,k1) z_(i,j2,k2) - z_(i,j1,k2) z_(i,j2,k1)`.
pub fn quad_polynomials(product: &ProductConfiguration) -> Vec<Polynomial> {
    tfp::quad_moves(product)
        .iter()
        .map(|m| {
            let to_mono = |v: Vec<i32>| crate::poly::dense_to_mono(&v.iter().map(|&x| x as u32).collect::<Vec<_>>());
            Polynomial::binomial(to_mono(m.plus()), to_mono(m.minus()))
        })
        .collect()
}

pub(crate) fn product_generators(o: &Origin, i: usize, j: usize) -> Result<Vec<Polynomial>> {
    let mut gens = Vec::new();
    for g in o.left.generators(i)? {
        gens.extend(lift_polynomial(&g, Side::Left, o.left.ring(), &o.product)?);
    }
    for g in o.right.generators(j)? {
        gens.extend(lift_polynomial(&g, Side::Right, o.right.ring(), &o.product)?);
    }
    gens.extend(quad_polynomials(&o.product));
    Ok(canonical_generators(gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_follow_the_row_alignment() {
        // Two classes of sizes (2, 1) on the left and (1, 2) on the right.
        let a = lattice_core::Grading::unit(2);
        let left = Ring::class_major(&[2, 1], a.clone(), None).unwrap();
        let right = Ring::class_major(&[1, 2], a, None).unwrap();
        let p = product_config(&side_config(&left).unwrap(), &side_config(&right).unwrap(), left.grading()).unwrap();
        // x0 x2 - x1 x2 lifts along the two right indices of class 1.
        let f = Polynomial::binomial(vec![0, 2], vec![1, 2]);
        let lifts = lift_polynomial(&f, Side::Left, &left, &p).unwrap();
        assert_eq!(lifts.len(), 2);
        assert_eq!(quad_polynomials(&p).len(), 0);
        for l in &lifts {
            for t in l.terms() {
                assert_eq!(t.mono.len(), 2);
            }
        }
    }
}
