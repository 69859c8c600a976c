use std::fmt;
use std::sync::Arc;

use lattice_core::{GradedVariableSet, Grading};
use tfp::ProductConfiguration;

use crate::error::{DecompError, Result};
use crate::poly::{mono_divides, Polynomial};
use crate::ring::Ring;

/// Where a component's generators come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Explicit(Vec<Polynomial>),
    /// The product of component `left` of the left factor with component
    /// `right` of the right factor; generators are built on demand.
    Product { left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentIdeal {
    pub source: Source,
    /// Caller-supplied attestations, carried through products.
    pub prime: bool,
    pub geometrically_primary: bool,
}

impl ComponentIdeal {
    pub fn explicit(generators: Vec<Polynomial>, prime: bool, geometrically_primary: bool) -> Self {
        ComponentIdeal {
            source: Source::Explicit(canonical_generators(generators)),
            prime,
            geometrically_primary,
        }
    }
}

/// The factors and layout of a decomposition built by `combine`.
#[derive(Clone, Debug)]
pub struct Origin {
    pub left: Decomposition,
    pub right: Decomposition,
    pub product: ProductConfiguration,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    ring: Arc<Ring>,
    components: Vec<ComponentIdeal>,
    origin: Option<Arc<Origin>>,
}

/// Drops zeros, duplicates, monomial multiples of monomial generators and
/// polynomials whose every term is such a multiple; sorts by degree.
pub fn canonical_generators(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = gens.into_iter().filter(|p| !p.is_zero()).collect();
    gens.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
    gens.dedup();
    let mut monos: Vec<Vec<u32>> = Vec::new();
    let mut out = Vec::with_capacity(gens.len());
    for p in gens {
        let covered = |m: &[u32]| monos.iter().any(|g| mono_divides(g, m));
        if p.terms().iter().all(|t| covered(&t.mono)) {
            continue;
        }
        if p.is_monomial() {
            monos.push(p.terms()[0].mono.clone());
        }
        out.push(p);
    }
    out
}

impl Decomposition {
    /// Checks variable ranges and homogeneity of explicit generators.
    pub fn new(ring: Ring, components: Vec<ComponentIdeal>) -> Result<Self> {
        let d = Decomposition {
            ring: Arc::new(ring),
            components,
            origin: None,
        };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_product(ring: Ring, components: Vec<ComponentIdeal>, origin: Origin) -> Self {
        Decomposition {
            ring: Arc::new(ring),
            components,
            origin: Some(Arc::new(origin)),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.ring.n() as u32;
        for (ci, c) in self.components.iter().enumerate() {
            if let Source::Explicit(gens) = &c.source {
                for (gi, g) in gens.iter().enumerate() {
                    if g.terms().iter().any(|t| t.mono.iter().any(|&v| v >= n)) {
                        return Err(DecompError::InvalidIdeal(format!(
                            "generator {gi} of component {ci} uses a variable outside the ring"
                        )));
                    }
                    if self.ring.homogeneous_degree(g).is_none() {
                        return Err(DecompError::NotHomogeneous {
                            component: ci,
                            generator: gi,
                        });
                    }
                }
            } else if self.origin.is_none() {
                return Err(DecompError::InvalidIdeal(format!("component {ci} refers to missing factors")));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[ComponentIdeal] {
        &self.components
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_deref()
    }

    /// Source pair `(i, j)` of a combined component.
    pub fn provenance(&self, c: usize) -> Option<(usize, usize)> {
        match self.components[c].source {
            Source::Product { left, right } => Some((left, right)),
            Source::Explicit(_) => None,
        }
    }

    pub fn generators(&self, c: usize) -> Result<Vec<Polynomial>> {
        match &self.components[c].source {
            Source::Explicit(g) => Ok(g.clone()),
            Source::Product { left, right } => {
                let o = self.origin.as_deref().expect("validated");
                crate::combine::product_generators(o, *left, *right)
            }
        }
    }

    /// Largest generator degree of component `c`, without building product generators.
    pub fn generator_degree(&self, c: usize) -> Result<usize> {
        match &self.components[c].source {
            Source::Explicit(g) => Ok(g.iter().map(Polynomial::degree).max().unwrap_or(0)),
            Source::Product { left, right } => {
                let o = self.origin.as_deref().expect("validated");
                let quads = (0..o.product.r()).any(|i| o.product.s()[i] > 1 && o.product.t()[i] > 1);
                Ok(o.left
                    .generator_degree(*left)?
                    .max(o.right.generator_degree(*right)?)
                    .max(if quads { 2 } else { 0 }))
            }
        }
    }

    /// Keeps the listed components, in the given order.
    pub fn select(&self, keep: &[usize]) -> Decomposition {
        Decomposition {
            ring: self.ring.clone(),
            components: keep.iter().map(|&c| self.components[c].clone()).collect(),
            origin: self.origin.clone(),
        }
    }

    /// Every component with explicit generators; drops the factors.
    pub fn materialized(&self) -> Result<Decomposition> {
        let components = (0..self.len())
            .map(|c| {
                Ok(ComponentIdeal {
                    source: Source::Explicit(self.generators(c)?),
                    prime: self.components[c].prime,
                    geometrically_primary: self.components[c].geometrically_primary,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            ring: self.ring.clone(),
            components,
            origin: None,
        })
    }

    /// Renames variable `v` to `perm[v]` and regrades by `vars` and `grading`.
    pub fn permuted(&self, perm: &[usize], vars: GradedVariableSet, grading: Grading) -> Result<Decomposition> {
        let ring = self.ring.permuted(perm, vars, grading)?;
        let components = (0..self.len())
            .map(|c| {
                let gens = self.generators(c)?.iter().map(|p| p.rename(|v| perm[v as usize] as u32)).collect();
                Ok(ComponentIdeal::explicit(
                    gens,
                    self.components[c].prime,
                    self.components[c].geometrically_primary,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(ring, components)
    }

    pub fn display_component(&self, c: usize) -> Result<String> {
        let gens = self.generators(c)?;
        let parts: Vec<String> = gens.iter().map(|g| g.display(self.ring.names()).to_string()).collect();
        Ok(format!("<{}>", parts.join(", ")))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.len())
            .map(|c| self.display_component(c).unwrap_or_else(|e| format!("<error: {e}>")))
            .collect();
        write!(f, "{}", parts.join(" ∩ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_drops_multiples() {
        let x2 = Polynomial::monomial(vec![0, 0]);
        let x = Polynomial::monomial(vec![0]);
        let xy_minus_z = Polynomial::binomial(vec![0, 1], vec![0, 2]);
        let g = canonical_generators(vec![x2, x.clone(), xy_minus_z, x.clone()]);
        assert_eq!(g, vec![x]);
    }

    #[test]
    fn homogeneity_is_checked() {
        let ring = Ring::fine(&["x", "y"]).unwrap();
        let bad = ComponentIdeal::explicit(vec![Polynomial::binomial(vec![0], vec![1])], false, false);
        assert!(matches!(
            Decomposition::new(ring.clone(), vec![bad]),
            Err(DecompError::NotHomogeneous { .. })
        ));
        let ok = ComponentIdeal::explicit(vec![Polynomial::monomial(vec![0, 1])], false, false);
        let d = Decomposition::new(ring, vec![ok]).unwrap();
        assert_eq!(d.to_string(), "<x*y>");
    }
}
