//! The JSON gem format:
//! `{"dimension":4,"vertices":2,"edges":[[0,1,0],[0,1,1],...],"name":"..."}`.
//!
//! Written files are canonical: compact, edges as `[u, v, color]` with
//! `u < v`, sorted by color then by `u`, and a trailing newline.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::ColoredGraph;

use super::IoError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GemFile {
    pub dimension: usize,
    pub vertices: usize,
    pub edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl GemFile {
    pub fn from_graph(graph: &ColoredGraph, name: Option<String>) -> Self {
        GemFile {
            dimension: graph.dimension(),
            vertices: graph.num_vertices(),
            edges: graph
                .edges()
                .into_iter()
                .map(|(u, v, c)| [u, v, c])
                .collect(),
            name,
            metadata: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(IoError::parse)
    }

    /// Validates the edge list; errors carry the index of the offending edge.
    pub fn to_graph(&self) -> Result<ColoredGraph, IoError> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v, c]| (u, v, c)).collect();
        Ok(ColoredGraph::validate(
            self.dimension,
            self.vertices,
            &edges,
        )?)
    }

    /// The same file with edges oriented `u < v` and sorted by color, then `u`.
    pub fn canonicalize(&self) -> GemFile {
        let mut edges: Vec<[usize; 3]> = self
            .edges
            .iter()
            .map(|&[u, v, c]| [u.min(v), u.max(v), c])
            .collect();
        edges.sort_by_key(|&[u, v, c]| (c, u, v));
        GemFile {
            edges,
            ..self.clone()
        }
    }

    /// Canonical compact JSON with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string(&self.canonicalize()).expect("serializable");
        s.push('\n');
        s
    }
}

/// Hex SHA-256 of the canonical bytes of the graph alone (name and metadata
/// do not take part).
pub fn digest(file: &GemFile) -> String {
    let bare = GemFile {
        name: None,
        metadata: BTreeMap::new(),
        ..file.clone()
    };
    hex::encode(Sha256::digest(bare.to_canonical_string().as_bytes()))
}

pub fn read_gem_file(path: impl AsRef<Path>) -> Result<GemFile, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| IoError::io(path, e))?;
    GemFile::parse(&text)
}

pub fn read_gem(path: impl AsRef<Path>) -> Result<ColoredGraph, IoError> {
    read_gem_file(path)?.to_graph()
}

pub fn write_gem(graph: &ColoredGraph, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_gem_file(&GemFile::from_graph(graph, None), path)
}

pub fn write_gem_file(file: &GemFile, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, file.to_canonical_string()).map_err(|e| IoError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{b4_2, s4_2};
    use crate::graph::GraphError;

    const S4_2: &str =
        r#"{"dimension":4,"vertices":2,"edges":[[0,1,0],[0,1,1],[0,1,2],[0,1,3],[0,1,4]]}"#;

    #[test]
    fn parses_examples() {
        assert_eq!(GemFile::parse(S4_2).unwrap().to_graph().unwrap(), s4_2());
        let ball = S4_2.replace(",[0,1,4]", "");
        assert_eq!(GemFile::parse(&ball).unwrap().to_graph().unwrap(), b4_2());
        let looped = S4_2.replace("[0,1,3]", "[0,0,3]");
        assert!(matches!(
            GemFile::parse(&looped).unwrap().to_graph(),
            Err(IoError::Validation(GraphError::LoopEdge {
                edge: 3,
                vertex: 0
            }))
        ));
    }

    #[test]
    fn canonical_output() {
        assert_eq!(
            GemFile::from_graph(&s4_2(), None).to_canonical_string(),
            format!("{S4_2}\n")
        );
        let shuffled =
            r#"{"edges":[[1,0,4],[0,1,0],[1,0,3],[0,1,2],[0,1,1]],"vertices":2,"dimension":4}"#;
        let file = GemFile::parse(shuffled).unwrap();
        assert_eq!(file.to_canonical_string(), format!("{S4_2}\n"));
        assert_eq!(digest(&file), digest(&GemFile::parse(S4_2).unwrap()));
    }

    #[test]
    fn digest_ignores_name() {
        let plain = GemFile::from_graph(&s4_2(), None);
        let named = GemFile::from_graph(&s4_2(), Some("sphere".into()));
        assert_eq!(digest(&plain), digest(&named));
        assert_ne!(digest(&plain), digest(&GemFile::from_graph(&b4_2(), None)));
        assert_eq!(digest(&plain).len(), 64);
    }

    #[test]
    fn parse_errors_have_positions() {
        match GemFile::parse("{\"dimension\":4,\n\"vertices\":x}") {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(GemFile::parse(r#"{"dimension":4,"vertices":2,"edges":[],"extra":1}"#).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.gem");
        write_gem(&s4_2(), &path).unwrap();
        assert_eq!(read_gem(&path).unwrap(), s4_2());
        assert_eq!(std::fs::read_to_string(&path).unwrap(), format!("{S4_2}\n"));
    }
}
