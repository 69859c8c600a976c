//! Binary bipyramids over a simplex boundary, assembled from two cones.

use lattice_core::MoveSet;
use tfp::{assemble_from_tilde, AssembleOptions, Assembly};

use crate::closed::{cone_basis, simplex_boundary_move};
use crate::complex::SimplicialComplex;
use crate::error::{HierError, Result};
use crate::model::HierModel;
use crate::split::Split;

/// Vertices `1..=n+2`; the minimal non-faces are `{1..n}` and `{n+1, n+2}`.
pub fn bipyramid(n: usize) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(HierError::InvalidComplex("a bipyramid needs a base of at least two vertices".into()));
    }
    let facets: Vec<Vec<usize>> = (1..=n)
        .flat_map(|skip| {
            [n + 1, n + 2].map(|apex| (1..=n).filter(|&v| v != skip).chain([apex]).collect::<Vec<usize>>())
        })
        .collect();
    SimplicialComplex::new((1..=n + 2).collect(), &facets)
}

#[derive(Clone, Debug)]
pub struct BipyramidBasis {
    pub model: HierModel,
    pub split: Split,
    /// Assembled moves in product coordinates, with provenance.
    pub assembly: Assembly,
    /// The same moves in the model's cell coordinates.
    pub moves: MoveSet,
}

/// Splits the binary bipyramid into the two cones over the base boundary,
/// which meet in that boundary, and assembles the closed-form bases.
pub fn bipyramid_basis(n: usize) -> Result<BipyramidBasis> {
    let model = HierModel::binary(bipyramid(n)?)?;
    let base: Vec<usize> = (1..=n).collect();
    let v1: Vec<usize> = base.iter().copied().chain([n + 1]).collect();
    let v2: Vec<usize> = base.iter().copied().chain([n + 2]).collect();
    let split = Split::by_labels(&model, &v1, &v2)?;
    // Each side is the cone over the base boundary with the apex last; its
    // tilde side is the boundary of the simplex on all n + 1 vertices.
    let boundary = MoveSet::from_moves([simplex_boundary_move(n)]);
    let side = cone_basis(&boundary, 1 << n, 2);
    let tilde = MoveSet::from_moves([simplex_boundary_move(n + 1)]);
    let assembly = assemble_from_tilde(&tilde, &tilde, &side, &side, split.product(), &AssembleOptions::default())?;
    let moves = split.moves_to_cells(&assembly.moves);
    Ok(BipyramidBasis {
        model,
        split,
        assembly,
        moves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bipyramid_is_a_four_cycle() {
        let b = bipyramid(2).unwrap();
        assert_eq!(b.facets().len(), 4);
        assert_eq!(b.non_faces().len(), 2 + 5);
    }

    #[test]
    fn three_bipyramid_facets() {
        let b = bipyramid(3).unwrap();
        assert_eq!(b.facets().len(), 6);
        assert!(bipyramid(1).is_err());
    }
}
