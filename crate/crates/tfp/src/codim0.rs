use lattice_core::{Move, MoveSet};

use crate::error::{Result, TfpError};
use crate::product::{ProductConfiguration, Side};

/// Upper bound on lifts produced from one move.
pub const LIFT_CAP: usize = 5_000_000;

/// All 2x2 exchange quadrics within each class.
pub fn quad_moves(product: &ProductConfiguration) -> MoveSet {
    let mut out = Vec::new();
    for i in 0..product.r() {
        let (s, t) = (product.s()[i], product.t()[i]);
        for j1 in 0..s {
            for j2 in j1 + 1..s {
                for k1 in 0..t {
                    for k2 in k1 + 1..t {
                        let mut v = vec![0i32; product.z_len()];
                        v[product.z_index(i, j1, k1)] += 1;
                        v[product.z_index(i, j2, k2)] += 1;
                        v[product.z_index(i, j1, k2)] -= 1;
                        v[product.z_index(i, j2, k1)] -= 1;
                        out.push(Move::new(v));
                    }
                }
            }
        }
    }
    MoveSet::from_moves(out)
}

/// Rows `(class, index)` of a monomial, sorted.
pub(crate) fn rows_of(product: &ProductConfiguration, side: Side, v: &[i32]) -> Vec<(usize, usize)> {
    let vars = product.side(side).vars();
    let mut rows = Vec::new();
    for (idx, &x) in v.iter().enumerate() {
        let l = vars.label(idx);
        for _ in 0..x.max(0) {
            rows.push((l.class, l.j));
        }
    }
    rows.sort();
    rows
}

/// Lifts of one move, in enumeration order.
///
/// Lead and trail rows are aligned by sorting both on `(class, index)`; each
/// aligned row pair then receives a common index on the other side.
pub fn lift_move(f: &Move, side: Side, product: &ProductConfiguration, index: usize) -> Result<Vec<Move>> {
    let lead = rows_of(product, side, &f.plus());
    let trail = rows_of(product, side, &f.minus());
    if lead.len() != trail.len() || lead.iter().zip(&trail).any(|(a, b)| a.0 != b.0) {
        return Err(TfpError::Unalignable { index });
    }
    let other = match side {
        Side::Left => product.t(),
        Side::Right => product.s(),
    };
    let total = lead
        .iter()
        .fold(1usize, |acc, &(c, _)| acc.saturating_mul(other[c]));
    if total > LIFT_CAP {
        return Err(TfpError::Budget {
            what: "lifts of a single move",
            limit: LIFT_CAP,
        });
    }
    let n = lead.len();
    let mut out = Vec::with_capacity(total);
    let mut choice = vec![0usize; n];
    loop {
        let mut v = vec![0i32; product.z_len()];
        for t in 0..n {
            let (class, a) = lead[t];
            let b = trail[t].1;
            let c = choice[t];
            let (p, q) = match side {
                Side::Left => (product.z_index(class, a, c), product.z_index(class, b, c)),
                Side::Right => (product.z_index(class, c, a), product.z_index(class, c, b)),
            };
            v[p] += 1;
            v[q] -= 1;
        }
        out.push(Move::new(v));
        let mut t = n;
        loop {
            if t == 0 {
                return Ok(out);
            }
            t -= 1;
            choice[t] += 1;
            if choice[t] < other[lead[t].0] {
                break;
            }
            choice[t] = 0;
        }
    }
}

pub fn lift_moves(moves: &MoveSet, side: Side, product: &ProductConfiguration) -> Result<MoveSet> {
    let mut out = Vec::new();
    for (idx, f) in moves.iter().enumerate() {
        out.extend(lift_move(f, side, product, idx)?);
    }
    Ok(MoveSet::from_moves(out))
}

/// `Lift(F) + Lift(G) + Quad` for a codimension-zero product.
pub fn codim0_basis(f: &MoveSet, g: &MoveSet, product: &ProductConfiguration) -> Result<MoveSet> {
    if product.codim() != 0 {
        return Err(TfpError::Codimension {
            expected: 0,
            found: product.codim(),
        });
    }
    let lifted = lift_moves(f, Side::Left, product)?.union(&lift_moves(g, Side::Right, product)?);
    Ok(lifted.union(&quad_moves(product)))
}
