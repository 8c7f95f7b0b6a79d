//! Builders for the three graphs on Z(R)*.

use crate::graph::{Graph, GraphKind, ZeroDivisorGraph};
use crate::ring::{arith, Ring};

/// All three graphs from one pairwise pass over Z(R)*.
#[derive(Debug, Clone)]
pub struct GraphTriple {
    pub gamma: ZeroDivisorGraph,
    pub zstar: ZeroDivisorGraph,
    pub tilde: ZeroDivisorGraph,
}

impl GraphTriple {
    pub fn get(&self, kind: GraphKind) -> &ZeroDivisorGraph {
        match kind {
            GraphKind::Gamma => &self.gamma,
            GraphKind::ZStar => &self.zstar,
            GraphKind::Tilde => &self.tilde,
        }
    }
}

/// Builds the graph of the requested kind. Vertices are the nonzero
/// zero-divisors in enumeration order; a field yields the empty graph.
pub fn build_graph(ring: &Ring, kind: GraphKind) -> ZeroDivisorGraph {
    let (mut gamma, mut zstar, mut tilde) = empty_graphs(ring);
    fill(ring, &mut gamma, &mut zstar, &mut tilde);
    match kind {
        GraphKind::Gamma => gamma,
        GraphKind::ZStar => zstar,
        GraphKind::Tilde => tilde,
    }
}

pub fn build_all(ring: &Ring) -> GraphTriple {
    let (mut gamma, mut zstar, mut tilde) = empty_graphs(ring);
    fill(ring, &mut gamma, &mut zstar, &mut tilde);
    GraphTriple { gamma, zstar, tilde }
}

fn empty_graphs(ring: &Ring) -> (ZeroDivisorGraph, ZeroDivisorGraph, ZeroDivisorGraph) {
    let labels: Vec<String> = ring
        .zero_divisors_star()
        .iter()
        .map(|&i| ring.label(ring.element(i)))
        .collect();
    let text = ring.spec().to_text();
    let make = |kind| ZeroDivisorGraph {
        kind,
        ring_spec_text: text.clone(),
        graph: Graph::new(labels.clone()),
    };
    (make(GraphKind::Gamma), make(GraphKind::ZStar), make(GraphKind::Tilde))
}

fn fill(ring: &Ring, gamma: &mut ZeroDivisorGraph, zstar: &mut ZeroDivisorGraph, tilde: &mut ZeroDivisorGraph) {
    let verts = ring.zero_divisors_star();
    for a in 0..verts.len() {
        let x = ring.element(verts[a]);
        for b in a + 1..verts.len() {
            let y = ring.element(verts[b]);
            let product_zero = arith::is_zero(&ring.mul(x, y));
            let sum_divides_zero = ring.is_zero_divisor_index(ring.index_of(&ring.add(x, y)));
            if product_zero {
                gamma.graph.set_edge(a, b);
            }
            if sum_divides_zero {
                zstar.graph.set_edge(a, b);
            }
            if product_zero || sum_divides_zero {
                tilde.graph.set_edge(a, b);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ring_spec;

    fn ring(text: &str) -> Ring {
        Ring::new(parse_ring_spec(text).unwrap()).unwrap()
    }

    fn edge_labels(g: &ZeroDivisorGraph) -> Vec<(String, String)> {
        g.labeled_edges()
    }

    #[test]
    fn z6_figures() {
        let r = ring("Z6");
        let t = build_all(&r);
        assert_eq!(t.gamma.labels(), ["2", "3", "4"]);
        assert_eq!(
            edge_labels(&t.gamma),
            [("2".to_string(), "3".to_string()), ("3".to_string(), "4".to_string())]
        );
        assert_eq!(edge_labels(&t.zstar), [("2".to_string(), "4".to_string())]);
        assert_eq!(t.tilde.edge_count(), 3); // K_3
    }

    #[test]
    fn z2_x_z4_tilde_figure() {
        let r = ring("Z2 x Z4");
        let t = build_all(&r);
        assert_eq!(t.tilde.labels(), ["(0,1)", "(0,2)", "(0,3)", "(1,0)", "(1,2)"]);
        assert_eq!(t.tilde.edge_count(), 8);
        // The two non-edges of the figure.
        let i = |l: &str| t.tilde.index_of_label(l).unwrap();
        assert!(!t.tilde.adjacent(i("(0,1)"), i("(1,2)")));
        assert!(!t.tilde.adjacent(i("(0,3)"), i("(1,2)")));
    }

    #[test]
    fn tilde_is_union() {
        for text in ["Z6", "Z12", "Z2 x Z4", "Z2 x Z2 x Z3"] {
            let r = ring(text);
            let t = build_all(&r);
            for i in 0..t.tilde.vertex_count() {
                for j in 0..t.tilde.vertex_count() {
                    if i != j {
                        assert_eq!(
                            t.tilde.adjacent(i, j),
                            t.gamma.adjacent(i, j) || t.zstar.adjacent(i, j),
                            "{text} at ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn field_gives_empty_graph() {
        let r = ring("Z7");
        let g = build_graph(&r, GraphKind::Tilde);
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn single_kind_matches_triple() {
        let r = ring("Z12");
        let t = build_all(&r);
        for kind in GraphKind::ALL {
            let single = build_graph(&r, kind);
            assert!(single.adjacency().same_edges(t.get(kind).adjacency()));
            assert_eq!(single.kind(), kind);
        }
    }
}
