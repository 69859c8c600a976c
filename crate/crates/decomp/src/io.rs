//! JSON form of a decomposition.
//!
//! ```json
//! {"ring": {"sizes": [2, 1], "grading": [[1, 0], [0, 1]], "names": ["a", "b", "c"]},
//!  "components": [{"prime": true, "geometrically_primary": true,
//!                  "generators": [[[1, [1, 0, 1]], [-1, [0, 1, 1]]]]}]}
//! ```
//!
//! Variables are class-major; `grading` lists the rows of `A`; each generator
//! is a list of `[coefficient, exponent vector]` terms.

use serde::{Deserialize, Serialize};

use crate::error::{DecompError, Result};
use crate::ideal::{ComponentIdeal, Decomposition};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Serialize, Deserialize)]
struct RingJson {
    sizes: Vec<usize>,
    grading: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    #[serde(default)]
    prime: bool,
    #[serde(default)]
    geometrically_primary: bool,
    generators: Vec<Vec<(i64, Vec<u32>)>>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    ring: RingJson,
    components: Vec<ComponentJson>,
}

pub fn parse_decomposition(text: &str) -> Result<Decomposition> {
    let d: DecompositionJson = serde_json::from_str(text)?;
    let r = d.ring.sizes.len();
    let grading = Ring::grading_from_rows(r, &d.ring.grading)?;
    let ring = Ring::class_major(&d.ring.sizes, grading, d.ring.names)?;
    let n = ring.n();
    let mut comps = Vec::with_capacity(d.components.len());
    for (ci, c) in d.components.into_iter().enumerate() {
        let mut gens = Vec::with_capacity(c.generators.len());
        for (gi, g) in c.generators.iter().enumerate() {
            if let Some((_, e)) = g.iter().find(|(_, e)| e.len() != n) {
                return Err(DecompError::InvalidIdeal(format!(
                    "generator {gi} of component {ci} has an exponent of length {} in a ring with {n} variables",
                    e.len()
                )));
            }
            let p = Polynomial::from_dense(g);
            if p.terms().len() > 2 {
                return Err(DecompError::InvalidIdeal(format!(
                    "generator {gi} of component {ci} is neither a monomial nor a binomial"
                )));
            }
            gens.push(p);
        }
        comps.push(ComponentIdeal::explicit(gens, c.prime, c.geometrically_primary));
    }
    Decomposition::new(ring, comps)
}

/// Writes `d` with one generator per line; product components are expanded.
pub fn write_decomposition(d: &Decomposition) -> Result<String> {
    let ring = d.ring();
    let rj = RingJson {
        sizes: ring.vars().sizes().to_vec(),
        grading: ring.grading_rows(),
        names: Some(ring.names().to_vec()),
    };
    if !is_class_major(ring) {
        return Err(DecompError::Unsupported("writing a ring whose variables are not class-major".into()));
    }
    let mut out = format!("{{\n  \"ring\": {},\n  \"components\": [\n", serde_json::to_string(&rj)?);
    for c in 0..d.len() {
        let comp = &d.components()[c];
        out.push_str(&format!(
            "    {{\"prime\": {}, \"geometrically_primary\": {}, \"generators\": [\n",
            comp.prime, comp.geometrically_primary
        ));
        let gens = d.generators(c)?;
        for (gi, g) in gens.iter().enumerate() {
            let sep = if gi + 1 < gens.len() { "," } else { "" };
            out.push_str(&format!("      {}{sep}\n", serde_json::to_string(&g.to_dense(ring.n()))?));
        }
        let sep = if c + 1 < d.len() { "," } else { "" };
        out.push_str(&format!("    ]}}{sep}\n"));
    }
    out.push_str("  ]\n}\n");
    Ok(out)
}

fn is_class_major(ring: &Ring) -> bool {
    (1..ring.n()).all(|v| ring.vars().class_of(v - 1) <= ring.vars().class_of(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"ring": {"sizes": [1, 1], "grading": [[1, 0], [0, 1]], "names": ["x", "y"]},
            "components": [{"prime": true, "generators": [[[1, [1, 0]]]]},
                           {"generators": [[[1, [2, 0]]], [[1, [0, 2]]]]}]}"#;
        let d = parse_decomposition(text).unwrap();
        assert_eq!(d.to_string(), "<x> ∩ <x^2, y^2>");
        assert!(d.components()[0].prime && !d.components()[1].prime);
        let again = parse_decomposition(&write_decomposition(&d).unwrap()).unwrap();
        assert_eq!(again.to_string(), d.to_string());
        assert_eq!(again.components(), d.components());
    }

    #[test]
    fn rejects_trinomials() {
        let text = r#"{"ring": {"sizes": [3], "grading": [[1]]},
            "components": [{"generators": [[[1, [1, 0, 0]], [1, [0, 1, 0]], [1, [0, 0, 1]]]]}]}"#;
        assert!(matches!(parse_decomposition(text), Err(DecompError::InvalidIdeal(_))));
    }
}
