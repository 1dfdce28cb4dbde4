//! Model file: one ASCII header line `EMOTION-MODEL <version> <BACKEND>`
//! followed by the model body as a single JSON document.

use std::fs;
use std::path::Path;

use super::{Backend, ClassifierError, ClassifierModel, ModelParams, TreeNode};

pub const MODEL_MAGIC: &str = "EMOTION-MODEL";
pub const MODEL_FORMAT_VERSION: u32 = 1;

pub fn to_bytes(model: &ClassifierModel) -> Vec<u8> {
    let mut out = format!(
        "{MODEL_MAGIC} {MODEL_FORMAT_VERSION} {}\n",
        model.backend().name()
    )
    .into_bytes();
    serde_json::to_writer(&mut out, model).expect("model serializes to JSON");
    out.push(b'\n');
    out
}

pub fn from_bytes(bytes: &[u8]) -> Result<ClassifierModel, ClassifierError> {
    let corrupt = |msg: &str| ClassifierError::Corrupt(msg.to_string());
    let newline = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| corrupt("missing header line"))?;
    let header = std::str::from_utf8(&bytes[..newline]).map_err(|_| corrupt("header is not UTF-8"))?;
    let mut parts = header.split(' ');
    if parts.next() != Some(MODEL_MAGIC) {
        return Err(corrupt("not a model file"));
    }
    let version: u32 = parts
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| corrupt("unreadable version"))?;
    if version != MODEL_FORMAT_VERSION {
        return Err(ClassifierError::Version {
            found: version,
            supported: MODEL_FORMAT_VERSION,
        });
    }
    let backend: Backend = parts
        .next()
        .and_then(|b| b.parse().ok())
        .ok_or_else(|| corrupt("unknown backend in header"))?;

    let mut model: ClassifierModel = serde_json::from_slice(&bytes[newline + 1..])
        .map_err(|e| ClassifierError::Corrupt(e.to_string()))?;
    if model.backend() != backend {
        return Err(corrupt("header backend does not match body"));
    }
    model.featurizer = model.featurizer.rebuild();
    validate(&model)?;
    Ok(model)
}

fn validate(model: &ClassifierModel) -> Result<(), ClassifierError> {
    let vocab = model.vocabulary.len();
    match &model.params {
        ModelParams::Bayes(nb) => {
            if !nb.is_consistent_with(vocab) {
                return Err(ClassifierError::Corrupt("count table does not match vocabulary".into()));
            }
        }
        ModelParams::Tree(tree) => {
            let nodes = tree.nodes();
            if nodes.is_empty() {
                return Err(ClassifierError::Corrupt("tree has no nodes".into()));
            }
            for (i, node) in nodes.iter().enumerate() {
                if let TreeNode::Split { feature, absent, present } = *node {
                    if feature as usize >= vocab
                        || absent <= i
                        || present <= i
                        || absent >= nodes.len()
                        || present >= nodes.len()
                    {
                        return Err(ClassifierError::Corrupt(format!("bad split node {i}")));
                    }
                }
            }
            if tree.priors().iter().any(|p| !p.is_finite()) {
                return Err(ClassifierError::Corrupt("model has no training documents".into()));
            }
        }
    }
    Ok(())
}

pub fn save_model(model: &ClassifierModel, path: impl AsRef<Path>) -> Result<(), ClassifierError> {
    fs::write(path, to_bytes(model))?;
    Ok(())
}

pub fn load_model(path: impl AsRef<Path>) -> Result<ClassifierModel, ClassifierError> {
    from_bytes(&fs::read(path)?)
}
