use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; adjacency is stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Edges are unordered pairs of 1-based vertices.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "at most {MAX_VERTICES} vertices are supported"
            )));
        }
        let mut g = Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![0; n],
        };
        for &(a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!(
                    "edge {a} {b} leaves the vertex range 1..{n}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !g.edges.insert(e) {
                return Err(Error::invalid(format!("duplicate edge {} {}", e.0, e.1)));
            }
            g.adj[a - 1] |= 1 << (b - 1);
            g.adj[b - 1] |= 1 << (a - 1);
        }
        Ok(g)
    }

    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if adj[i] >> j & 1 == 1 {
                    edges.insert((i + 1, j + 1));
                }
            }
        }
        Graph { n, edges, adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, &edges).expect("valid complete graph")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges).expect("valid cycle")
    }

    /// The edge graph of the octahedron, labelled so that antipodal pairs
    /// are `{1,4}`, `{2,5}`, `{3,6}`.
    pub fn octahedron() -> Self {
        let edges = [
            (1, 2),
            (1, 3),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 4),
            (3, 5),
            (4, 5),
            (4, 6),
            (5, 6),
        ];
        Graph::new(6, &edges).expect("valid octahedron")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b
            && a >= 1
            && b >= 1
            && a <= self.n
            && b <= self.n
            && self.adj[a - 1] >> (b - 1) & 1 == 1
    }

    /// Neighbours of `v` as a bitmask over 0-based vertices.
    pub(crate) fn adj_mask(&self, v0: usize) -> u64 {
        self.adj[v0]
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub(crate) fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected components of the subgraph induced on `within` (0-based mask).
    pub(crate) fn components_mask(&self, within: u64) -> Vec<u64> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & within & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_mask(self.all_mask()).len() == 1
    }

    /// Subgraph induced on the given 1-based vertices, relabelled `1..`
    /// in increasing order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.iter().any(|&v| v == 0 || v > self.n) {
            return Err(Error::invalid("vertex out of range"));
        }
        let mut edges = Vec::new();
        for (a, &u) in vs.iter().enumerate() {
            for (b, &v) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        Graph::new(vs.len(), &edges)
    }
}

impl fmt::Display for Graph {
    /// The graph file format: `n <count>` then one edge per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (a, b) in &self.edges {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

pub(crate) fn mask_to_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

pub(crate) fn vertices_to_mask(n: usize, vs: &[usize]) -> Result<u64> {
    let mut m = 0u64;
    for &v in vs {
        if v == 0 || v > n {
            return Err(Error::invalid(format!("vertex {v} out of range 1..{n}")));
        }
        m |= 1 << (v - 1);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn validation() {
        assert!(Graph::new(3, &[(1, 1)]).is_err());
        assert!(Graph::new(3, &[(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, &[(1, 4)]).is_err());
        let g = Graph::new(3, &[(2, 1), (3, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(g.to_string(), "n 3\n1 2\n2 3\n");
    }

    #[test]
    fn octahedron_is_four_regular() {
        let g = Graph::octahedron();
        assert_eq!(g.num_edges(), 12);
        assert!((1..=6).all(|v| g.degree(v) == 4));
        assert!(!g.has_edge(1, 4) && !g.has_edge(2, 5) && !g.has_edge(3, 6));
    }

    #[test]
    fn components() {
        let g = Graph::new(5, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(
            g.components_mask(g.all_mask()),
            vec![0b00011, 0b01100, 0b10000]
        );
        assert!(!g.is_connected());
        assert!(Graph::path(4).is_connected());
        let h = Graph::octahedron().induced(&[1, 2, 4, 5]).unwrap();
        assert_eq!(h, Graph::cycle(4));
    }
}
