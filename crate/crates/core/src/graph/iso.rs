//! Small-graph isomorphism by backtracking with degree refinement.

use crate::error::{Error, Result};
use crate::graph::Graph;

const ISO_VERTEX_CAP: usize = 64;

/// Searches for an edge-preserving bijection from `g` to `h`. Returns the
/// witness as a vector mapping g-indices to h-indices, or None when the
/// graphs are not isomorphic.
///
/// Candidates are pruned by degree and by the multiset of neighbor
/// degrees; the remaining search assigns the most constrained vertices
/// first. Deterministic: the lexicographically least witness under that
/// ordering is returned.
pub fn graphs_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    for count in [n, h.vertex_count()] {
        if count > ISO_VERTEX_CAP {
            return Err(Error::IsoTooLarge { cap: ISO_VERTEX_CAP, got: count });
        }
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let g_sig = signatures(g);
    let h_sig = signatures(h);
    let mut g_sorted = g_sig.clone();
    let mut h_sorted = h_sig.clone();
    g_sorted.sort();
    h_sorted.sort();
    if g_sorted != h_sorted {
        return Ok(None);
    }

    // Candidate h-vertices per g-vertex, by matching signature.
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| g_sig[v] == h_sig[w]).collect())
        .collect();

    // Assign vertices with the fewest candidates first, high degree as a
    // tiebreak; ties broken by index for determinism.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), usize::MAX - g.degree(v), v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(g, h, &order, &candidates, 0, &mut mapping, &mut used) {
        Ok(Some(mapping))
    } else {
        Ok(None)
    }
}

/// (degree, sorted neighbor degrees) per vertex.
fn signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort();
            (g.degree(v), nd)
        })
        .collect()
}

fn assign(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'cand: for &w in &candidates[v] {
        if used[w] {
            continue;
        }
        // Adjacency with every vertex already placed must match.
        for &prev in &order[..depth] {
            if g.adjacent(v, prev) != h.adjacent(w, mapping[prev]) {
                continue 'cand;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if assign(g, h, order, candidates, depth + 1, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Re-checks a witness: every pair of g-vertices must map to an h-pair
/// with identical adjacency, and the mapping must be a bijection.
pub fn verify_isomorphism(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    let n = g.vertex_count();
    if mapping.len() != n || h.vertex_count() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &w in mapping {
        if w >= n || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent(i, j) != h.adjacent(mapping[i], mapping[j]) {
                return false;
            }
        }
    }
    true
}
