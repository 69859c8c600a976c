use lattice_core::{Move, MoveSet};

use crate::model::CellIndex;

/// The generator of the binary model on all proper faces of a simplex with
/// `n` vertices: even cells minus odd cells, parity taken on 1-based levels.
pub fn simplex_boundary_move(n: usize) -> Move {
    let cells = CellIndex::new(&vec![2; n]);
    let v = cells
        .cells()
        .map(|c| {
            let weight: usize = c.iter().map(|x| x + 1).sum();
            if weight.is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .collect();
    Move::new(v)
}

/// Moves of the cone with a new last vertex of `apex_levels` levels: each move
/// copied once per apex level. `base_cells` is the cell count of the base model.
pub fn cone_basis(moves: &MoveSet, base_cells: usize, apex_levels: usize) -> MoveSet {
    let mut out = Vec::with_capacity(moves.len() * apex_levels);
    for m in moves {
        debug_assert_eq!(m.len(), base_cells);
        for j in 0..apex_levels {
            let mut v = vec![0i32; base_cells * apex_levels];
            for (i, &x) in m.as_slice().iter().enumerate() {
                v[i * apex_levels + j] = x;
            }
            out.push(Move::new(v));
        }
    }
    MoveSet::from_moves(out)
}
