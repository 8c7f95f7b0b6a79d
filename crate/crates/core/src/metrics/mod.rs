//! Graph invariants: distance, diameter, girth, completeness, universal
//! vertices, triangle and square properties, hypotriangulation, chordality.

pub mod chordal;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use chordal::{chordless_cycle_witness, is_chordal, verify_cycle_chordless, verify_cycle_chordless_indices};

/// A path or cycle length that may be infinite. Serializes as a plain
/// number or the string "inf".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl Length {
    pub fn is_finite(&self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl PartialOrd for Length {
    fn partial_cmp(&self, other: &Length) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Length {
    fn cmp(&self, other: &Length) -> std::cmp::Ordering {
        match (self, other) {
            (Length::Finite(a), Length::Finite(b)) => a.cmp(b),
            (Length::Finite(_), Length::Infinite) => std::cmp::Ordering::Less,
            (Length::Infinite, Length::Finite(_)) => std::cmp::Ordering::Greater,
            (Length::Infinite, Length::Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for Length {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Length::Finite(k) => write!(f, "{k}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(k) => serializer.serialize_u32(*k),
            Length::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Length, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .and_then(|k| u32::try_from(k).ok())
                .map(Length::Finite)
                .ok_or_else(|| de::Error::custom("length out of range")),
            serde_json::Value::String(s) if s == "inf" => Ok(Length::Infinite),
            _ => Err(de::Error::custom("expected a number or \"inf\"")),
        }
    }
}

/// BFS distances from a source; None for unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<Option<u32>> {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    dist[src] = Some(0);
    let mut frontier = vec![src];
    let mut d = 0u32;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for v in g.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    dist
}

pub fn distance_by_index(g: &Graph, u: usize, v: usize) -> Length {
    match bfs_distances(g, u)[v] {
        Some(d) => Length::Finite(d),
        None => Length::Infinite,
    }
}

/// Distance between two vertices given by label.
pub fn distance(g: &Graph, u: &str, v: &str) -> Result<Length> {
    let ui = g.index_of_label(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
    let vi = g.index_of_label(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
    Ok(distance_by_index(g, ui, vi))
}

/// Max distance over ordered pairs of distinct vertices; 0 for graphs with
/// at most one vertex, infinite when disconnected.
pub fn diameter(g: &Graph) -> Length {
    let n = g.vertex_count();
    if n <= 1 {
        return Length::Finite(0);
    }
    let mut best = 0u32;
    for src in 0..n {
        let dist = bfs_distances(g, src);
        for (v, d) in dist.iter().enumerate() {
            match d {
                Some(d) => {
                    if v != src && *d > best {
                        best = *d;
                    }
                }
                None => return Length::Infinite,
            }
        }
    }
    Length::Finite(best)
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    bfs_distances(g, 0).iter().all(|d| d.is_some())
}

/// Length of a shortest cycle via BFS from every vertex. For each source,
/// a non-tree edge (u, v) closes a walk of length d(u)+d(v)+1 that uses
/// that edge once and hence contains a cycle no longer than it; starting
/// the BFS at a vertex of a shortest cycle attains the girth exactly.
pub fn girth(g: &Graph) -> Length {
    let n = g.vertex_count();
    let mut best: Option<u32> = None;
    for src in 0..n {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // A cycle through src using u cannot be shorter than 2d+1.
                if 2 * dist[u] + 1 >= b {
                    continue;
                }
            }
            for v in g.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let candidate = dist[u] + dist[v] + 1;
                    if best.map_or(true, |b| candidate < b) {
                        best = Some(candidate);
                        if candidate == 3 {
                            return Length::Finite(3);
                        }
                    }
                }
            }
        }
    }
    match best {
        Some(b) => Length::Finite(b),
        None => Length::Infinite,
    }
}

/// Every distinct pair adjacent; vacuously true for at most one vertex.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// Vertices adjacent to all others. The single vertex of a 1-vertex graph
/// counts as universal.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 1 {
        return vec![0];
    }
    (0..n).filter(|&v| g.degree(v) == n - 1).collect()
}

/// Per-vertex triangle witnesses.
#[derive(Debug, Clone)]
pub struct TriangleCover {
    pub holds: bool,
    /// witnesses[v] = Some([v, u, w]) with v-u, u-w, w-v all edges.
    pub witnesses: Vec<Option<[usize; 3]>>,
}

/// True iff every vertex lies on a 3-cycle.
pub fn every_vertex_in_triangle(g: &Graph) -> TriangleCover {
    let n = g.vertex_count();
    let mut witnesses = vec![None; n];
    for v in 0..n {
        'found: for u in g.neighbors(v) {
            if let Some(w) = g.adjacency().common_neighbors(v, u).next() {
                witnesses[v] = Some([v, u, w]);
                break 'found;
            }
        }
    }
    TriangleCover { holds: witnesses.iter().all(Option::is_some), witnesses }
}

/// Witnesses or a violation for the square property.
#[derive(Debug, Clone)]
pub struct SquareCheck {
    pub holds: bool,
    /// One (x, z, y, t) per non-adjacent pair: edges x-z, z-y, y-t, t-x.
    pub witnesses: Vec<[usize; 4]>,
    /// First non-adjacent pair with fewer than two common neighbors.
    pub violation: Option<(usize, usize)>,
}

/// For every non-adjacent distinct pair (x, y) there must be distinct z, t
/// adjacent to both, i.e. a square x-z-y-t. The square need not be
/// induced: a z-t chord is allowed. Vacuously true on complete graphs.
pub fn square_property(g: &Graph) -> SquareCheck {
    let n = g.vertex_count();
    let mut witnesses = Vec::new();
    let mut violation = None;
    for x in 0..n {
        for y in x + 1..n {
            if g.adjacent(x, y) {
                continue;
            }
            let mut common = g.adjacency().common_neighbors(x, y);
            match (common.next(), common.next()) {
                (Some(z), Some(t)) => witnesses.push([x, z, y, t]),
                _ => {
                    if violation.is_none() {
                        violation = Some((x, y));
                    }
                }
            }
        }
    }
    SquareCheck { holds: violation.is_none(), witnesses, violation }
}

/// Result of the hypotriangulation check.
#[derive(Debug, Clone)]
pub struct HypoCheck {
    pub holds: bool,
    /// A 2-path x-z-y with x, y non-adjacent and no alternative midpoint.
    pub violation: Option<[usize; 3]>,
}

/// For every 2-path x-z-y: x and y adjacent, or a second midpoint t != z
/// exists. Equivalently, no non-adjacent pair has exactly one common
/// neighbor.
pub fn is_hypotriangulated(g: &Graph) -> HypoCheck {
    let n = g.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            if g.adjacent(x, y) {
                continue;
            }
            if g.adjacency().common_neighbor_count(x, y) == 1 {
                let z = g.adjacency().common_neighbors(x, y).next().unwrap();
                return HypoCheck { holds: false, violation: Some([x, z, y]) };
            }
        }
    }
    HypoCheck { holds: true, violation: None }
}

/// Aggregate of every metric, with witnesses rendered as labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub is_connected: bool,
    pub diameter: Length,
    pub girth: Length,
    pub is_complete: bool,
    pub universal_vertices: Vec<String>,
    pub every_vertex_in_triangle: bool,
    pub square_property_holds: bool,
    pub is_hypotriangulated: bool,
    pub is_chordal: bool,
    pub chordless_cycle_witness: Option<Vec<String>>,
}

pub fn analyze(g: &Graph) -> AnalysisReport {
    let chordal = is_chordal(g);
    let witness = if chordal {
        None
    } else {
        let cycle = chordless_cycle_witness(g).expect("non-chordal graph has a chordless cycle");
        debug_assert_eq!(verify_cycle_chordless_indices(g, &cycle).ok(), Some(true));
        Some(cycle.into_iter().map(|v| g.label(v).to_string()).collect())
    };
    AnalysisReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        is_connected: is_connected(g),
        diameter: diameter(g),
        girth: girth(g),
        is_complete: is_complete(g),
        universal_vertices: universal_vertices(g)
            .into_iter()
            .map(|v| g.label(v).to_string())
            .collect(),
        every_vertex_in_triangle: every_vertex_in_triangle(g).holds,
        square_property_holds: square_property(g).holds,
        is_hypotriangulated: is_hypotriangulated(g).holds,
        is_chordal: chordal,
        chordless_cycle_witness: witness,
    }
}
