use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use ci::CIModel;
use decomp::Decomposition;
use hierarchical::{parse_complex, parse_graph, ComplexSpec, HierModel, MarkovGraph, SimplicialComplex, Split};
use lattice_core::{io, MoveSet, VectorConfiguration};

use crate::error::{CliError, Result};

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn complex_spec(path: &Path) -> Result<ComplexSpec> {
    Ok(parse_complex(&read(path)?)?)
}

pub fn model(path: &Path) -> Result<HierModel> {
    Ok(complex_spec(path)?.model()?)
}

/// A configuration from a complex file or a plain matrix file.
pub fn config(model_path: Option<&Path>, matrix_path: Option<&Path>) -> Result<VectorConfiguration> {
    match (model_path, matrix_path) {
        (Some(p), None) => Ok(model(p)?.config().clone()),
        (None, Some(p)) => Ok(VectorConfiguration::plain(io::parse_matrix(&read(p)?)?)?),
        _ => Err(CliError::Usage("give exactly one of --model and --matrix".into())),
    }
}

pub fn moves(path: &Path) -> Result<MoveSet> {
    Ok(io::parse_moves(&read(path)?)?)
}

/// The model on the union of two complexes, split between their vertex sets.
pub fn sides(left: &Path, right: &Path) -> Result<Split> {
    let (l, r) = (complex_spec(left)?, complex_spec(right)?);
    let mut levels: BTreeMap<usize, usize> = BTreeMap::new();
    for spec in [&l, &r] {
        if spec.d.len() != spec.vertices.len() {
            return Err(CliError::Input(format!(
                "{} levels for {} vertices",
                spec.d.len(),
                spec.vertices.len()
            )));
        }
        for (&v, &d) in spec.vertices.iter().zip(&spec.d) {
            if *levels.entry(v).or_insert(d) != d {
                return Err(CliError::Input(format!("vertex {v} has different levels on the two sides")));
            }
        }
    }
    let facets: Vec<Vec<usize>> = l.facets.iter().chain(&r.facets).cloned().collect();
    let complex = SimplicialComplex::new(levels.keys().copied().collect(), &facets)?;
    let model = HierModel::new(complex, levels.values().copied().collect())?;
    Ok(Split::by_labels(&model, &l.vertices, &r.vertices)?)
}

pub fn graph(path: &Path) -> Result<(MarkovGraph, Vec<usize>, Option<(usize, usize)>)> {
    let spec = parse_graph(&read(path)?)?;
    let ends = spec.top.zip(spec.bottom);
    Ok((spec.graph()?, spec.levels(), ends))
}

pub fn ci_model(path: &Path) -> Result<CIModel> {
    Ok(ci::parse_model(&read(path)?)?)
}

pub fn decomposition(path: &Path) -> Result<Decomposition> {
    Ok(decomp::parse_decomposition(&read(path)?)?)
}
