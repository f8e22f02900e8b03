use std::fmt;

use crate::error::{Error, Result};
use crate::pairs::VertexPair;

/// Adjacency rows are single machine words, so vertices are capped at 64.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph on vertices 1..=n, n <= 64.
///
/// `adj[v]` holds the neighborhood of v as a bitmask (bit w-1 set iff the
/// edge {v,w} is present); index 0 is unused padding so everything stays
/// 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on [n].
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::VertexCount {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n + 1],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            g.try_insert(a, b)?;
        }
        Ok(g)
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = VertexPair>) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for e in pairs {
            g.try_insert(e.a(), e.b())?;
        }
        Ok(g)
    }

    pub(crate) fn from_adj(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n + 1);
        Graph { n, adj }
    }

    fn try_insert(&mut self, a: usize, b: usize) -> Result<()> {
        let e = VertexPair::try_new(a, b)?;
        if e.b() > self.n {
            return Err(Error::Vertex {
                v: e.b(),
                n: self.n,
            });
        }
        if self.has_pair(e) {
            return Err(Error::DuplicatePair { a, b });
        }
        self.toggle_pair(e);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&row| row == 0)
    }

    /// Membership test; order of the endpoints does not matter.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        assert!(
            a >= 1 && b >= 1 && a <= self.n && b <= self.n && a != b,
            "edge query ({a}, {b}) invalid on [{}]",
            self.n
        );
        self.adj[a] >> (b - 1) & 1 == 1
    }

    pub fn has_pair(&self, e: VertexPair) -> bool {
        self.has_edge(e.a(), e.b())
    }

    /// Edge set in canonical valid order (ascending span, then left endpoint).
    pub fn edges(&self) -> Vec<VertexPair> {
        let mut out = Vec::with_capacity(self.edge_count());
        for span in 1..self.n {
            for a in 1..=self.n - span {
                if self.has_edge(a, a + span) {
                    out.push(VertexPair::new(a, a + span));
                }
            }
        }
        out
    }

    pub(crate) fn toggle_pair(&mut self, e: VertexPair) {
        debug_assert!(e.b() <= self.n);
        self.adj[e.a()] ^= 1 << (e.b() - 1);
        self.adj[e.b()] ^= 1 << (e.a() - 1);
    }

    pub(crate) fn insert_pair_unchecked(&mut self, e: VertexPair) {
        debug_assert!(!self.has_pair(e));
        self.toggle_pair(e);
    }
}

impl fmt::Display for Graph {
    /// One-line form, e.g. `n=3: 1-2 2-3` (edgeless: `n=3: -`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n)?;
        let edges = self.edges();
        if edges.is_empty() {
            return write!(f, " -");
        }
        for e in edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_queries() {
        let g = Graph::from_edges(6, &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(1, 3));
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(3, 4));
        assert_eq!(
            g.edges()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            ["1-3", "3-5", "1-5", "2-6", "1-6"]
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Graph::new(0), Err(Error::VertexCount { .. })));
        assert!(matches!(Graph::new(65), Err(Error::VertexCount { .. })));
        assert!(Graph::new(64).is_ok());
        assert!(matches!(
            Graph::from_edges(4, &[(2, 2)]),
            Err(Error::PairOrder { .. })
        ));
        assert!(matches!(
            Graph::from_edges(4, &[(3, 2)]),
            Err(Error::PairOrder { .. })
        ));
        assert!(matches!(
            Graph::from_edges(4, &[(0, 2)]),
            Err(Error::PairOrder { .. })
        ));
        assert!(matches!(
            Graph::from_edges(4, &[(2, 5)]),
            Err(Error::Vertex { v: 5, .. })
        ));
        assert!(matches!(
            Graph::from_edges(4, &[(1, 2), (1, 2)]),
            Err(Error::DuplicatePair { .. })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Graph::new(3).unwrap().to_string(), "n=3: -");
        let g = Graph::from_edges(3, &[(2, 3), (1, 2)]).unwrap();
        assert_eq!(g.to_string(), "n=3: 1-2 2-3");
    }

    #[test]
    fn equality_ignores_edge_insertion_order() {
        let g1 = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let g2 = Graph::from_edges(4, &[(3, 4), (1, 2)]).unwrap();
        assert_eq!(g1, g2);
    }
}
