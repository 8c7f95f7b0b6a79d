//! Labeled simple graphs over Z(R)*, the three zero-divisor graph kinds,
//! isomorphism testing, and DOT export.

pub mod build;
pub mod dot;
pub mod iso;
pub mod matrix;

use std::collections::HashMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use build::{build_all, build_graph, GraphTriple};
pub use dot::export_dot;
pub use iso::graphs_isomorphic;
pub use matrix::AdjacencyMatrix;

/// Which adjacency rule a zero-divisor graph uses. All three share the
/// vertex set Z(R)*; Tilde is the union of the other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// x adjacent y iff xy = 0.
    Gamma,
    /// x adjacent y iff x + y is a zero-divisor (zero included).
    ZStar,
    /// x adjacent y iff xy = 0 or x + y is a zero-divisor.
    Tilde,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Gamma, GraphKind::ZStar, GraphKind::Tilde];

    pub fn as_str(&self) -> &'static str {
        match self {
            GraphKind::Gamma => "gamma",
            GraphKind::ZStar => "zstar",
            GraphKind::Tilde => "tilde",
        }
    }
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<GraphKind, String> {
        match s {
            "gamma" => Ok(GraphKind::Gamma),
            "zstar" => Ok(GraphKind::ZStar),
            "tilde" => Ok(GraphKind::Tilde),
            other => Err(format!("unknown graph kind {other:?} (expected gamma, zstar, or tilde)")),
        }
    }
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An undirected simple graph with string vertex labels.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    adj: AdjacencyMatrix,
    label_index: HashMap<String, usize>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Graph {
        let adj = AdjacencyMatrix::new(labels.len());
        let label_index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect::<HashMap<_, _>>();
        assert_eq!(label_index.len(), labels.len(), "vertex labels must be unique");
        Graph { labels, adj, label_index }
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(labels);
        for &(a, b) in edges {
            g.adj.set_edge(a, b);
        }
        g
    }

    /// K_n with labels "0".."n-1".
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new((0..n).map(|i| i.to_string()).collect());
        for i in 0..n {
            for j in i + 1..n {
                g.adj.set_edge(i, j);
            }
        }
        g
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new((0..n).map(|i| i.to_string()).collect());
        for i in 1..n {
            g.adj.set_edge(i - 1, i);
        }
        g
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.adj.set_edge(n - 1, 0);
        g
    }

    pub(crate) fn set_edge(&mut self, i: usize, j: usize) {
        self.adj.set_edge(i, j);
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.edge_count()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj.degree(i)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.neighbors(i)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    pub fn adjacency(&self) -> &AdjacencyMatrix {
        &self.adj
    }

    /// Unordered edges (i < j) in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.vertex_count() {
            for j in self.neighbors(i) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Edges as label pairs, for readable assertions and reports.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }
}

/// A zero-divisor graph: a labeled graph plus the adjacency rule and the
/// ring it came from.
#[derive(Debug, Clone)]
pub struct ZeroDivisorGraph {
    kind: GraphKind,
    ring_spec_text: String,
    graph: Graph,
}

impl ZeroDivisorGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn ring_spec_text(&self) -> &str {
        &self.ring_spec_text
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.as_str(),
            "ring": self.ring_spec_text,
            "labels": self.graph.labels(),
            "edges": self.graph.labeled_edges(),
        })
    }
}

impl std::ops::Deref for ZeroDivisorGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}
