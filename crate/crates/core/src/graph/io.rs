//! JSON graph files: `{"vertices":[1,2,...],"edges":[[1,2],[2,3],...]}`.

use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};

use super::{SimpleGraph, Vertex};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&SimpleGraph> for GraphFile {
    fn from(g: &SimpleGraph) -> Self {
        Self {
            vertices: g.vertices().to_vec(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for SimpleGraph {
    type Error = crate::error::Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        SimpleGraph::new(file.vertices, file.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl SimpleGraph {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(s)?;
        file.try_into()
    }

    /// Canonical JSON: sorted vertices, sorted `[a, b]` pairs with `a < b`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serializes")
    }

    pub fn load(path: impl AsRef<FsPath>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<FsPath>) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::arb_connected_graph;
    use proptest::prelude::*;

    #[test]
    fn writer_is_canonical() {
        let g = SimpleGraph::from_json_str(r#"{"vertices":[3,1,2],"edges":[[3,2],[2,1]]}"#).unwrap();
        assert_eq!(g.to_json_string(), r#"{"vertices":[1,2,3],"edges":[[1,2],[2,3]]}"#);
    }

    #[test]
    fn loader_rejects_loops_and_duplicates() {
        assert!(SimpleGraph::from_json_str(r#"{"vertices":[1],"edges":[[1,1]]}"#).is_err());
        assert!(SimpleGraph::from_json_str(r#"{"vertices":[1,2],"edges":[[1,2],[2,1]]}"#).is_err());
        assert!(SimpleGraph::from_json_str(r#"{"vertices":[1,2],"edges":[[1,3]]}"#).is_err());
        assert!(SimpleGraph::from_json_str(r#"{"vertices":[1,2]}"#).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(g in arb_connected_graph(10)) {
            prop_assert_eq!(SimpleGraph::from_json_str(&g.to_json_string()).unwrap(), g);
        }
    }
}
