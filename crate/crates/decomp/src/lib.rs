//! Primary decompositions of toric fiber products.
//!
//! Components are given as inputs. `combine` forms all pairwise products of
//! two decompositions and `prune` removes components that provably contain
//! another one, with a verdict for every remaining pair.

pub mod combine;
pub mod error;
pub mod ideal;
pub mod io;
pub mod piece;
pub mod poly;
pub mod prune;
pub mod ring;

pub use combine::{combine, lift_polynomial, quad_polynomials};
pub use error::{DecompError, Result};
pub use ideal::{canonical_generators, ComponentIdeal, Decomposition, Origin, Source};
pub use io::{parse_decomposition, write_decomposition};
pub use piece::{graded_piece, GradedPiece, MonomialSpace, Piece, Quotient};
pub use poly::{Monomial, Polynomial, Term};
pub use prune::{
    first_full_piece, prune, theorem_applies, FullPiece, FullnessCheck, Method, PairVerdict, PruneCertificate, Removal,
    Verdict, WitnessKind,
};
pub use ring::{Degree, Ring};
