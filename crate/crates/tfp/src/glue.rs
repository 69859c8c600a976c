use std::collections::BTreeMap;

use lattice_core::{Move, MoveSet};
use rayon::prelude::*;

use crate::combinat::{cartesian, compositions, tables};
use crate::error::{Result, TfpError};
use crate::product::{ProductConfiguration, Side};

/// Default cap on moves emitted while gluing.
pub const DEFAULT_GLUE_CAP: usize = 2_000_000;

/// Multiplier class contents `(x side, y side)` when `f` and `g` are compatible.
///
/// The images of `f` and `g` in `K[w]` must have the same binomial part once
/// the common factor of the two monomial parts is moved into it.
pub fn compatibility(f: &Move, g: &Move, product: &ProductConfiguration) -> Option<(Vec<i64>, Vec<i64>)> {
    let fp = product.gamma_side(Side::Left, &f.plus());
    let fm = product.gamma_side(Side::Left, &f.minus());
    let gp = product.gamma_side(Side::Right, &g.plus());
    let gm = product.gamma_side(Side::Right, &g.minus());
    let same = (0..product.r()).all(|i| fp[i] - fm[i] == gp[i] - gm[i]);
    if !same {
        return None;
    }
    let v1: Vec<i64> = fp.iter().zip(&fm).map(|(a, b)| *a.min(b)).collect();
    let v2: Vec<i64> = gp.iter().zip(&gm).map(|(a, b)| *a.min(b)).collect();
    let common: Vec<i64> = v1.iter().zip(&v2).map(|(a, b)| *a.min(b)).collect();
    let x_mult = v2.iter().zip(&common).map(|(a, c)| a - c).collect();
    let y_mult = v1.iter().zip(&common).map(|(a, c)| a - c).collect();
    Some((x_mult, y_mult))
}

/// All monomials on one side with the given class content.
pub fn monomials_with_content(product: &ProductConfiguration, side: Side, content: &[i64]) -> Vec<Vec<i32>> {
    let sizes = product.sizes(side);
    let per_class: Vec<Vec<Vec<i32>>> = (0..product.r())
        .map(|i| compositions(content[i] as i32, sizes[i]))
        .collect();
    let n = product.side(side).n();
    cartesian(&per_class)
        .into_iter()
        .map(|parts| {
            let mut v = vec![0i32; n];
            for (i, comp) in parts.iter().enumerate() {
                for (a, &x) in comp.iter().enumerate() {
                    v[product.side_index(side, i, a)] = x;
                }
            }
            v
        })
        .collect()
}

/// Product monomials projecting to `x` on the left and `y` on the right.
pub fn z_monomials(product: &ProductConfiguration, x: &[i32], y: &[i32]) -> Vec<Vec<i32>> {
    let per_class: Vec<Vec<Vec<i32>>> = (0..product.r())
        .map(|i| {
            let rows: Vec<i32> = (0..product.s()[i]).map(|j| x[product.side_index(Side::Left, i, j)]).collect();
            let cols: Vec<i32> = (0..product.t()[i]).map(|k| y[product.side_index(Side::Right, i, k)]).collect();
            tables(&rows, &cols)
        })
        .collect();
    cartesian(&per_class)
        .into_iter()
        .map(|parts| {
            let mut z = vec![0i32; product.z_len()];
            for (i, table) in parts.iter().enumerate() {
                let t = product.t()[i];
                for (cell, &c) in table.iter().enumerate() {
                    z[product.z_index(i, cell / t, cell % t)] = c;
                }
            }
            z
        })
        .collect()
}

fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn glue_oriented(f: &Move, g: &Move, product: &ProductConfiguration, cap: usize, out: &mut Vec<Move>) -> Result<()> {
    let Some((x_mult, y_mult)) = compatibility(f, g, product) else {
        return Ok(());
    };
    let xs = monomials_with_content(product, Side::Left, &x_mult);
    let ys = monomials_with_content(product, Side::Right, &y_mult);
    if xs.len().saturating_mul(ys.len()) > cap {
        return Err(TfpError::Budget {
            what: "glue multiplier combinations",
            limit: cap,
        });
    }
    let (fp, fm, gp, gm) = (f.plus(), f.minus(), g.plus(), g.minus());
    for xv in &xs {
        for yv in &ys {
            let leads = z_monomials(product, &add(&fp, xv), &add(&gp, yv));
            let trails = z_monomials(product, &add(&fm, xv), &add(&gm, yv));
            if leads.len().saturating_mul(trails.len()).saturating_add(out.len()) > cap {
                return Err(TfpError::Budget {
                    what: "glued moves",
                    limit: cap,
                });
            }
            for p in &leads {
                for q in &trails {
                    let m = Move::new(p.iter().zip(q).map(|(a, b)| a - b).collect());
                    if !m.is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Glued moves of `f` with `g` and with `-g`, over all multipliers and row matchings.
pub fn glue_pair(f: &Move, g: &Move, product: &ProductConfiguration, cap: usize) -> Result<MoveSet> {
    let mut out = Vec::new();
    glue_oriented(f, g, product, cap, &mut out)?;
    glue_oriented(f, &g.neg(), product, cap, &mut out)?;
    Ok(MoveSet::from_moves(out))
}

/// Glued moves tagged with the first `(f, g)` pair (by index) producing them.
pub fn glue_sets_tagged(
    f: &MoveSet,
    g: &MoveSet,
    product: &ProductConfiguration,
    cap: usize,
) -> Result<BTreeMap<Move, (usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..f.len()).flat_map(|a| (0..g.len()).map(move |b| (a, b))).collect();
    let results: Vec<Result<MoveSet>> = pairs
        .par_iter()
        .map(|&(a, b)| glue_pair(f.get(a), g.get(b), product, cap))
        .collect();
    let mut tagged = BTreeMap::new();
    for (&(a, b), r) in pairs.iter().zip(results) {
        for m in r?.iter() {
            tagged.entry(m.clone()).or_insert((a, b));
        }
        if tagged.len() > cap {
            return Err(TfpError::Budget {
                what: "glued moves",
                limit: cap,
            });
        }
    }
    Ok(tagged)
}

pub fn glue_sets(f: &MoveSet, g: &MoveSet, product: &ProductConfiguration, cap: usize) -> Result<MoveSet> {
    Ok(MoveSet::from_moves(glue_sets_tagged(f, g, product, cap)?.into_keys()))
}
