//! Markov bases of toric ideals: computation, bounded verification and
//! minimal generator degrees.

use std::collections::BTreeMap;

use lattice_core::{MoveSet, VectorConfiguration, DEFAULT_FIBER_CAP};

pub mod completion;
pub mod error;
pub mod minimal;
pub mod verify;

pub use completion::{generating_set, CompletionOptions};
pub use error::{MarkovError, Result};
pub use minimal::{minimal_degrees, select_minimal, MinimalSelection};
pub use verify::{covers_basis, default_bound, realizable_images, verify_markov, verify_markov_with_cap, Status, Verdict, Witness};

#[derive(Clone, Debug, Default)]
pub struct EngineOptions {
    pub completion: CompletionOptions,
    /// Fiber point cap; `None` uses the library default.
    pub fiber_cap: Option<usize>,
}

impl EngineOptions {
    pub fn cap(&self) -> usize {
        self.fiber_cap.unwrap_or(DEFAULT_FIBER_CAP)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovResult {
    /// A minimal Markov basis.
    pub basis: MoveSet,
    pub degree_histogram: BTreeMap<u32, usize>,
    pub mu: u32,
    pub minimal_counts: BTreeMap<u32, usize>,
    /// Size of the generating set before minimal selection.
    pub generating_set_size: usize,
}

pub fn markov_basis(config: &VectorConfiguration) -> Result<MarkovResult> {
    markov_basis_with(config, &EngineOptions::default())
}

pub fn markov_basis_with(config: &VectorConfiguration, opts: &EngineOptions) -> Result<MarkovResult> {
    let gens = generating_set(config, &opts.completion)?;
    let sel = select_minimal(config, &gens, opts.cap())?;
    let mu = sel.mu();
    Ok(MarkovResult {
        degree_histogram: sel.basis.degree_histogram(),
        mu,
        minimal_counts: sel.counts.into_iter().filter(|(_, c)| *c > 0).collect(),
        basis: sel.basis,
        generating_set_size: gens.len(),
    })
}
