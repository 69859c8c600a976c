use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CiError, Result};

/// `A ⊥ B | C` on vertex labels, with `min(A) < min(B)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CIStatement {
    a: BTreeSet<usize>,
    b: BTreeSet<usize>,
    c: BTreeSet<usize>,
}

impl CIStatement {
    pub fn new(
        a: impl IntoIterator<Item = usize>,
        b: impl IntoIterator<Item = usize>,
        c: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let (a, b, c): (BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>) =
            (a.into_iter().collect(), b.into_iter().collect(), c.into_iter().collect());
        if a.is_empty() || b.is_empty() {
            return Err(CiError::InvalidStatement("both independent sides must be nonempty".into()));
        }
        if !a.is_disjoint(&b) || !a.is_disjoint(&c) || !b.is_disjoint(&c) {
            return Err(CiError::InvalidStatement(format!(
                "sets {a:?}, {b:?}, {c:?} are not pairwise disjoint"
            )));
        }
        Ok(if a.first() < b.first() {
            CIStatement { a, b, c }
        } else {
            CIStatement { a: b, b: a, c }
        })
    }

    pub fn a(&self) -> &BTreeSet<usize> {
        &self.a
    }

    pub fn b(&self) -> &BTreeSet<usize> {
        &self.b
    }

    pub fn c(&self) -> &BTreeSet<usize> {
        &self.c
    }

    /// Every vertex used by the statement.
    pub fn support(&self) -> BTreeSet<usize> {
        self.a.iter().chain(&self.b).chain(&self.c).copied().collect()
    }

    /// Whether `A ∪ B ∪ C` is all of `vertices`.
    pub fn saturated(&self, vertices: &[usize]) -> bool {
        self.support().len() == vertices.len() && vertices.iter().all(|v| self.support().contains(v))
    }

    pub fn swapped(&self) -> (BTreeSet<usize>, BTreeSet<usize>, BTreeSet<usize>) {
        (self.b.clone(), self.a.clone(), self.c.clone())
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, s: &BTreeSet<usize>) -> fmt::Result {
    if s.len() == 1 {
        write!(f, "{}", s.first().expect("one element"))
    } else {
        let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Display for CIStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.a)?;
        write!(f, " _||_ ")?;
        write_set(f, &self.b)?;
        if !self.c.is_empty() {
            write!(f, " | ")?;
            write_set(f, &self.c)?;
        }
        Ok(())
    }
}

/// A set of statements over common vertices and levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIModel {
    vertices: Vec<usize>,
    levels: Vec<usize>,
    statements: BTreeSet<CIStatement>,
}

impl CIModel {
    pub fn new(vertices: Vec<usize>, levels: Vec<usize>, statements: impl IntoIterator<Item = CIStatement>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = vertices.iter().copied().zip(levels.iter().copied()).collect();
        if vertices.len() != levels.len() {
            return Err(CiError::InvalidModel(format!(
                "{} levels for {} vertices",
                levels.len(),
                vertices.len()
            )));
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(CiError::InvalidModel("repeated vertex".into()));
        }
        if pairs.iter().any(|p| p.1 < 1) {
            return Err(CiError::InvalidModel("levels must be positive".into()));
        }
        let statements: BTreeSet<CIStatement> = statements.into_iter().collect();
        let vs: BTreeSet<usize> = pairs.iter().map(|p| p.0).collect();
        if let Some(s) = statements.iter().find(|s| !s.support().is_subset(&vs)) {
            return Err(CiError::InvalidModel(format!("statement {s} uses vertices outside the model")));
        }
        Ok(CIModel {
            vertices: pairs.iter().map(|p| p.0).collect(),
            levels: pairs.iter().map(|p| p.1).collect(),
            statements,
        })
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Levels in vertex order.
    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn level(&self, v: usize) -> Option<usize> {
        self.position(v).map(|p| self.levels[p])
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn statements(&self) -> &BTreeSet<CIStatement> {
        &self.statements
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }
}

impl fmt::Display for CIModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.statements.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct StatementJson {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
    #[serde(rename = "C", default)]
    c: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    #[serde(rename = "V")]
    v: Vec<usize>,
    d: Vec<usize>,
    statements: Vec<StatementJson>,
}

/// `{"V": [...], "d": [...], "statements": [{"A": [...], "B": [...], "C": [...]}]}`.
pub fn parse_model(text: &str) -> Result<CIModel> {
    let m: ModelJson = serde_json::from_str(text)?;
    let statements = m
        .statements
        .into_iter()
        .map(|s| CIStatement::new(s.a, s.b, s.c))
        .collect::<Result<Vec<_>>>()?;
    CIModel::new(m.v, m.d, statements)
}

pub fn write_model(m: &CIModel) -> Result<String> {
    let j = ModelJson {
        v: m.vertices.clone(),
        d: m.levels.clone(),
        statements: m
            .statements
            .iter()
            .map(|s| StatementJson {
                a: s.a.iter().copied().collect(),
                b: s.b.iter().copied().collect(),
                c: s.c.iter().copied().collect(),
            })
            .collect(),
    };
    Ok(serde_json::to_string(&j)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_orientation() {
        let s = CIStatement::new([3], [1, 5], [2]).unwrap();
        assert_eq!(s.to_string(), "{1,5} _||_ 3 | 2");
        assert_eq!(s, CIStatement::new([1, 5], [3], [2]).unwrap());
        assert!(CIStatement::new([1], [1], []).is_err());
        assert!(CIStatement::new([], [1], []).is_err());
    }

    #[test]
    fn model_round_trip() {
        let text = r#"{"V": [1, 2, 3], "d": [2, 2, 3], "statements": [{"A": [2], "B": [1], "C": [3]}, {"A": [1], "B": [2], "C": [3]}]}"#;
        let m = parse_model(text).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.level(3), Some(3));
        assert_eq!(parse_model(&write_model(&m).unwrap()).unwrap(), m);
        assert!(m.statements().first().unwrap().saturated(m.vertices()));
    }
}
