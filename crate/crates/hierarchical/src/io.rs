use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::graph::MarkovGraph;
use crate::model::HierModel;

/// `{"vertices": [...], "d": [...], "facets": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub vertices: Vec<usize>,
    pub d: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexSpec {
    pub fn complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.vertices.clone(), &self.facets)
    }

    pub fn model(&self) -> Result<HierModel> {
        HierModel::new(self.complex()?, self.d.clone())
    }
}

/// `{"vertices": [...], "edges": [[u, v], ...], "top": t, "bottom": b}`,
/// optionally with levels `"d"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<usize>>,
}

impl GraphSpec {
    pub fn graph(&self) -> Result<MarkovGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        MarkovGraph::new(self.vertices.clone(), &edges)
    }

    /// Levels, defaulting to binary.
    pub fn levels(&self) -> Vec<usize> {
        self.d.clone().unwrap_or_else(|| vec![2; self.vertices.len()])
    }
}

pub fn parse_complex(text: &str) -> Result<ComplexSpec> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_complex() {
        let spec = parse_complex(r#"{"vertices":[1,2,3],"d":[2,2,3],"facets":[[1,2],[2,3]]}"#).unwrap();
        let m = spec.model().unwrap();
        assert_eq!(m.columns(), 12);
    }

    #[test]
    fn reads_graph() {
        let spec = parse_graph(r#"{"vertices":[1,2,3],"edges":[[1,2],[2,3]],"top":1,"bottom":3}"#).unwrap();
        assert_eq!(spec.graph().unwrap().edges().len(), 2);
        assert_eq!(spec.levels(), vec![2, 2, 2]);
        assert!(parse_graph(r#"{"vertices":[1],"edges":[[1]]}"#).is_err());
    }
}
