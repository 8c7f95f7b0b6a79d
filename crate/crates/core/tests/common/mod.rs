//! Shared helpers for the integration test suites: random graph
//! generation, brute-force metric oracles, and the standard sweep corpus.

use rand::rngs::StdRng;
use rand::Rng;

use zdg_core::graph::Graph;
use zdg_core::metrics::Length;
use zdg_core::primes::is_prime;
use zdg_core::ring::{parse_ring_spec, RingSpec};
use zdg_core::{builtin_catalog, CatalogEntry};

pub fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let mut edges = Vec::new();
    let p = rng.random_range(0.1..0.9);
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges((0..n).map(|i| i.to_string()).collect(), &edges)
}

/// Floyd-Warshall all-pairs distances.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    pub const INF: u32 = u32::MAX / 4;
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in g.neighbors(i) {
            d[i][j] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn diameter_oracle(g: &Graph) -> Length {
    const INF: u32 = u32::MAX / 4;
    let n = g.vertex_count();
    if n <= 1 {
        return Length::Finite(0);
    }
    let d = floyd_warshall(g);
    let mut best = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if d[i][j] >= INF {
                    return Length::Infinite;
                }
                best = best.max(d[i][j]);
            }
        }
    }
    Length::Finite(best)
}

/// Shortest cycle by DFS over simple paths anchored at their minimum
/// vertex; exponential, only for small graphs.
pub fn girth_oracle(g: &Graph) -> Length {
    fn dfs(g: &Graph, s: usize, u: usize, visited: &mut Vec<bool>, len: u32, best: &mut Option<u32>) {
        if let Some(b) = *best {
            if len + 1 >= b {
                return;
            }
        }
        for v in g.neighbors(u) {
            if v == s && len >= 2 {
                let cycle = len + 1;
                if best.map_or(true, |b| cycle < b) {
                    *best = Some(cycle);
                }
            } else if v > s && !visited[v] {
                visited[v] = true;
                dfs(g, s, v, visited, len + 1, best);
                visited[v] = false;
            }
        }
    }
    let n = g.vertex_count();
    let mut best = None;
    for s in 0..n {
        let mut visited = vec![false; n];
        visited[s] = true;
        dfs(g, s, s, &mut visited, 0, &mut best);
    }
    match best {
        Some(b) => Length::Finite(b),
        None => Length::Infinite,
    }
}

/// True iff some cycle of length >= 4 has no chord, by DFS over induced
/// paths anchored at their minimum vertex.
pub fn has_chordless_cycle_oracle(g: &Graph) -> bool {
    fn dfs(g: &Graph, s: usize, path: &mut Vec<usize>) -> bool {
        let u = *path.last().unwrap();
        for v in g.neighbors(u) {
            if v <= s || path.contains(&v) {
                continue;
            }
            let sees_interior = path[1..path.len() - 1].iter().any(|&w| g.adjacent(v, w));
            if sees_interior {
                continue;
            }
            let closes = g.adjacent(v, s);
            if closes && path.len() >= 3 {
                return true;
            }
            if !closes {
                path.push(v);
                if dfs(g, s, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let n = g.vertex_count();
    for s in 0..n {
        for first in g.neighbors(s) {
            if first <= s {
                continue;
            }
            let mut path = vec![s, first];
            if dfs(g, s, &mut path) {
                return true;
            }
        }
    }
    false
}

/// The sweep corpus: the builtin catalog, every composite Z_n for
/// 4 <= n <= 400, and every product of two or three factors drawn from
/// {Z2, Z3, Z4, Z2[x]/(x^2), GF(4), Z5} with order at most 512,
/// deduplicated by canonical spec text.
pub fn sweep_entries() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |spec: RingSpec| {
        let name = spec.compact_text();
        if seen.insert(name.clone()) {
            entries.push(CatalogEntry { name, spec });
        }
    };

    for e in builtin_catalog().entries {
        push(e.spec);
    }
    for n in 4..=400u64 {
        if !is_prime(n) {
            push(RingSpec::zn(n).unwrap());
        }
    }
    let bases: Vec<RingSpec> = ["Z2", "Z3", "Z4", "Z2[x]/(x^2)", "GF(4)", "Z5"]
        .iter()
        .map(|t| parse_ring_spec(t).unwrap())
        .collect();
    for i in 0..bases.len() {
        for j in i..bases.len() {
            let two = RingSpec::product(vec![bases[i].clone(), bases[j].clone()]).unwrap();
            if two.order() <= 512 {
                push(two);
            }
            for k in j..bases.len() {
                let three = RingSpec::product(vec![
                    bases[i].clone(),
                    bases[j].clone(),
                    bases[k].clone(),
                ])
                .unwrap();
                if three.order() <= 512 {
                    push(three);
                }
            }
        }
    }
    entries
}
