//! Symmetric bitset adjacency matrix with a false diagonal.

/// One u64 row-segment per 64 vertices; row i holds the neighborhood of
/// vertex i as a bitset, which makes common-neighbor counting a word-wise
/// AND + popcount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl AdjacencyMatrix {
    pub fn new(n: usize) -> AdjacencyMatrix {
        let words = n.div_ceil(64);
        AdjacencyMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    /// Inserts the undirected edge {i, j}; loops are rejected.
    pub fn set_edge(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "no loops in a simple graph");
        assert!(i < self.n && j < self.n, "vertex out of range");
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|i| self.degree(i)).sum();
        total / 2
    }

    pub fn neighbors(&self, i: usize) -> BitIter<'_> {
        BitIter { words: self.row(i), word_idx: 0, current: self.row(i).first().copied().unwrap_or(0) }
    }

    pub fn common_neighbor_count(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// First common neighbor of i and j beyond `skip`, if any.
    pub fn common_neighbors(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        let a = self.row(i);
        let b = self.row(j);
        (0..self.words).flat_map(move |w| {
            let mut word = a[w] & b[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let bit = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + bit)
                }
            })
        })
    }

    /// Edge set equality; meaningful between graphs on the same vertex list.
    pub fn same_edges(&self, other: &AdjacencyMatrix) -> bool {
        self == other
    }
}

/// Iterator over set bits of a row.
pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * 64 + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}
