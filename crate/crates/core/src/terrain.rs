//! Terrain-like graphs: recognition, exhaustive enumeration, and the
//! consecutive-edge toggle.
//!
//! A graph on [n] is terrain-like when for every two edges {a,c} and {b,d}
//! with a < b < c < d the "outer" pair {a,d} is also an edge. The number of
//! such graphs on n vertices is the n-th median Genocchi number.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pairs::{all_pairs, pair_index, VertexPair};

/// Largest n accepted by the exhaustive terrain-graph enumerator.
pub const ENUM_MAX_N: usize = 12;

/// Cutoff between the plain bitmask filter and the pruned DFS.
const FILTER_MAX_N: usize = 7;

/// A quadruple a < b < c < d witnessing a violation: {a,c} and {b,d} are
/// edges but {a,d} is not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl std::fmt::Display for XViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

/// Recognizer over edge pairs: every interleaved pair of edges must have its
/// outer closure present.
pub fn is_terrain_like(g: &Graph) -> bool {
    let edges = g.edges();
    for (k, e) in edges.iter().enumerate() {
        for f in &edges[k + 1..] {
            if e.a() < f.a() && f.a() < e.b() && e.b() < f.b() {
                if !g.has_edge(e.a(), f.b()) {
                    return false;
                }
            } else if f.a() < e.a() && e.a() < f.b() && f.b() < e.b() && !g.has_edge(f.a(), e.b()) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest violating quadruple, if any. Scans vertex
/// quadruples directly, so it also serves as the independent oracle for
/// [`is_terrain_like`].
pub fn x_violation(g: &Graph) -> Option<XViolation> {
    let n = g.vertex_count();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if !g.has_edge(a, c) {
                    continue;
                }
                for d in c + 1..=n {
                    if g.has_edge(b, d) && !g.has_edge(a, d) {
                        return Some(XViolation { a, b, c, d });
                    }
                }
            }
        }
    }
    None
}

/// Flips the edge {i, i+1}. Such a span-1 edge can never be the required
/// outer pair of an interleaving, so the class of terrain-like graphs is
/// closed under this toggle.
pub fn toggle_consecutive_edge(g: &Graph, i: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if i < 1 || i + 1 > n {
        return Err(Error::ConsecutiveIndex { i, n });
    }
    let mut out = g.clone();
    out.toggle_pair(VertexPair::new(i, i + 1));
    Ok(out)
}

/// True when every consecutive edge {i, i+1} is present (vacuously for n=1).
/// Exactly one graph per toggle orbit satisfies this, which is what the
/// normalized median Genocchi numbers count.
pub fn has_all_consecutive_edges(g: &Graph) -> bool {
    (1..g.vertex_count()).all(|i| g.has_edge(i, i + 1))
}

/// Streams every terrain-like graph on [n] in ascending order of the edge
/// bitmask (bit k = k-th pair in canonical valid order).
pub fn enumerate_terrain(n: usize) -> Result<TerrainEnumerator> {
    enumerate_terrain_prefixed(n, 0, 0)
}

/// Streams the terrain-like graphs whose membership pattern on the
/// `prefix_bits` canonically largest pairs equals `prefix` (read with its
/// highest bit deciding the largest pair). Concatenating the streams for
/// `prefix = 0..2^prefix_bits` reproduces the full enumeration in order,
/// which is how work is split across threads.
pub fn enumerate_terrain_prefixed(
    n: usize,
    prefix_bits: usize,
    prefix: u128,
) -> Result<TerrainEnumerator> {
    let strategy = if n <= FILTER_MAX_N {
        Strategy::Filter
    } else {
        Strategy::Dfs
    };
    TerrainEnumerator::with_strategy(n, prefix_bits, prefix, strategy)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Strategy {
    Filter,
    Dfs,
}

pub struct TerrainEnumerator {
    inner: Inner,
}

enum Inner {
    Filter(FilterState),
    Dfs(DfsState),
}

impl TerrainEnumerator {
    pub(crate) fn with_strategy(
        n: usize,
        prefix_bits: usize,
        prefix: u128,
        strategy: Strategy,
    ) -> Result<Self> {
        if !(1..=ENUM_MAX_N).contains(&n) {
            return Err(Error::Bound {
                what: "terrain graph enumeration",
                n,
                max: ENUM_MAX_N,
            });
        }
        let pairs = all_pairs(n);
        if prefix_bits > pairs.len() {
            return Err(Error::Bound {
                what: "enumeration prefix width",
                n: prefix_bits,
                max: pairs.len(),
            });
        }
        assert!(
            prefix_bits == 128 || prefix >> prefix_bits == 0,
            "prefix value 0x{prefix:x} wider than {prefix_bits} bits"
        );
        let inner = match strategy {
            Strategy::Filter => Inner::Filter(FilterState::new(n, pairs, prefix_bits, prefix)),
            Strategy::Dfs => Inner::Dfs(DfsState::new(n, pairs, prefix_bits, prefix)),
        };
        Ok(TerrainEnumerator { inner })
    }
}

impl Iterator for TerrainEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            Inner::Filter(s) => s.next_graph(),
            Inner::Dfs(s) => s.next_graph(),
        }
    }
}

// ---------------------------------------------------------------------------
// Strategy 1: test every bitmask in a range. Fine up to n = 7 (2^21 masks).

struct FilterState {
    n: usize,
    pairs: Vec<VertexPair>,
    next_mask: u128,
    end_mask: u128,
    scratch: Vec<VertexPair>,
}

impl FilterState {
    fn new(n: usize, pairs: Vec<VertexPair>, prefix_bits: usize, prefix: u128) -> Self {
        let m = pairs.len();
        let low = m - prefix_bits;
        FilterState {
            n,
            pairs,
            next_mask: prefix << low,
            end_mask: (prefix + 1) << low,
            scratch: Vec::with_capacity(m),
        }
    }

    fn mask_is_terrain(&mut self, mask: u128) -> bool {
        self.scratch.clear();
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.scratch.push(self.pairs[k]);
        }
        for (k, e) in self.scratch.iter().enumerate() {
            for f in &self.scratch[k + 1..] {
                let required = if e.a() < f.a() && f.a() < e.b() && e.b() < f.b() {
                    VertexPair::new(e.a(), f.b())
                } else if f.a() < e.a() && e.a() < f.b() && f.b() < e.b() {
                    VertexPair::new(f.a(), e.b())
                } else {
                    continue;
                };
                if mask >> pair_index(self.n, required) & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn next_graph(&mut self) -> Option<Graph> {
        while self.next_mask < self.end_mask {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.mask_is_terrain(mask) {
                let mut adj = vec![0u64; self.n + 1];
                let mut bits = mask;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let e = self.pairs[k];
                    adj[e.a()] |= 1 << (e.b() - 1);
                    adj[e.b()] |= 1 << (e.a() - 1);
                }
                return Some(Graph::from_adj(self.n, adj));
            }
        }
        None
    }
}

// ---------------------------------------------------------------------------
// Strategy 2: DFS deciding pairs from the canonically largest down, absent
// branch first. Emission order therefore matches the filter.
//
// When a pair e is decided present, any already-present f interleaving it is
// canonically larger, and so is the outer pair their interleaving requires;
// both were decided earlier. Checking just those decided constraints at each
// present-decision is complete: in any violating triple, the constraint is
// seen when its canonically smallest edge gets decided.

struct DfsState {
    n: usize,
    pairs: Vec<VertexPair>,
    // path[d] = decision at depth d (0 absent, 1 present); depth d decides
    // pairs[M-1-d]
    path: Vec<u8>,
    adj: Vec<u64>,
    mask: u128,
    fixed_depth: usize,
    started: bool,
    finished: bool,
}

impl DfsState {
    fn new(n: usize, pairs: Vec<VertexPair>, prefix_bits: usize, prefix: u128) -> Self {
        let m = pairs.len();
        let mut s = DfsState {
            n,
            pairs,
            path: Vec::with_capacity(m),
            adj: vec![0u64; n + 1],
            mask: 0,
            fixed_depth: prefix_bits,
            started: false,
            finished: false,
        };
        for t in 0..prefix_bits {
            if prefix >> (prefix_bits - 1 - t) & 1 == 1 {
                if !s.try_present(t) {
                    // the forced prefix already contradicts itself
                    s.finished = true;
                    return s;
                }
                s.path.push(1);
            } else {
                s.path.push(0);
            }
        }
        s
    }

    fn pair_at_depth(&self, d: usize) -> VertexPair {
        self.pairs[self.pairs.len() - 1 - d]
    }

    /// Tries to mark the pair at depth `d` present. Fails (without touching
    /// state) if that completes an interleaving whose required outer pair was
    /// already decided absent.
    fn try_present(&mut self, d: usize) -> bool {
        let e = self.pair_at_depth(d);
        let mut bits = self.mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let f = self.pairs[k];
            let required = if e.a() < f.a() && f.a() < e.b() && e.b() < f.b() {
                VertexPair::new(e.a(), f.b())
            } else if f.a() < e.a() && e.a() < f.b() && f.b() < e.b() {
                VertexPair::new(f.a(), e.b())
            } else {
                continue;
            };
            if self.mask >> pair_index(self.n, required) & 1 == 0 {
                return false;
            }
        }
        self.adj[e.a()] |= 1 << (e.b() - 1);
        self.adj[e.b()] |= 1 << (e.a() - 1);
        self.mask |= 1 << pair_index(self.n, e);
        true
    }

    fn undo_present(&mut self, d: usize) {
        let e = self.pair_at_depth(d);
        self.adj[e.a()] &= !(1 << (e.b() - 1));
        self.adj[e.b()] &= !(1 << (e.a() - 1));
        self.mask &= !(1 << pair_index(self.n, e));
    }

    /// Backtracks to the deepest absent-decision that can still flip to
    /// present, flips it, and returns true; false when the subtree is spent.
    fn advance(&mut self) -> bool {
        while self.path.len() > self.fixed_depth {
            let c = self.path.pop().unwrap();
            let d = self.path.len();
            if c == 1 {
                self.undo_present(d);
            } else if self.try_present(d) {
                self.path.push(1);
                return true;
            }
        }
        false
    }

    fn next_graph(&mut self) -> Option<Graph> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.finished = true;
            return None;
        }
        // absent decisions are always consistent, so every deepening ends at
        // a leaf, and every leaf is terrain-like
        while self.path.len() < self.pairs.len() {
            self.path.push(0);
        }
        Some(Graph::from_adj(self.n, self.adj.clone()))
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs = all_pairs(n);
        (0..1u128 << pairs.len())
            .map(|mask| {
                Graph::from_pairs(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, e)| *e),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn recognizer_examples() {
        assert!(is_terrain_like(&graph(1, &[])));
        assert!(is_terrain_like(&graph(4, &[(1, 3)])));
        assert!(is_terrain_like(&graph(
            6,
            &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)]
        )));
        let bad = graph(4, &[(1, 3), (2, 4)]);
        assert!(!is_terrain_like(&bad));
        assert_eq!(
            x_violation(&bad),
            Some(XViolation {
                a: 1,
                b: 2,
                c: 3,
                d: 4
            })
        );
        // every graph on 3 vertices is terrain-like
        for g in all_graphs(3) {
            assert!(is_terrain_like(&g));
        }
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // two violations: (1,2,3,4) and (1,2,3,5); the scan must report the
        // first in lexicographic order
        let g = graph(5, &[(1, 3), (2, 4), (2, 5)]);
        let w = x_violation(&g).unwrap();
        assert_eq!((w.a, w.b, w.c, w.d), (1, 2, 3, 4));
        assert_eq!(w.to_string(), "1 2 3 4");
    }

    #[test]
    fn recognizer_agrees_with_quadruple_oracle() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                assert_eq!(
                    is_terrain_like(&g),
                    x_violation(&g).is_none(),
                    "disagreement on {g}"
                );
            }
        }
    }

    #[test]
    fn enumeration_counts_small() {
        for (n, expect) in [(1, 1usize), (2, 2), (3, 8), (4, 56), (5, 608), (6, 9440)] {
            assert_eq!(enumerate_terrain(n).unwrap().count(), expect);
        }
    }

    #[test]
    fn enumeration_n3_mask_order() {
        let got: Vec<String> = enumerate_terrain(3)
            .unwrap()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(
            got,
            [
                "n=3: -",
                "n=3: 1-2",
                "n=3: 2-3",
                "n=3: 1-2 2-3",
                "n=3: 1-3",
                "n=3: 1-2 1-3",
                "n=3: 2-3 1-3",
                "n=3: 1-2 2-3 1-3",
            ]
        );
    }

    #[test]
    fn enumeration_is_sound_complete_and_duplicate_free() {
        for n in 1..=5 {
            let listed: Vec<Graph> = enumerate_terrain(n).unwrap().collect();
            let set: HashSet<&Graph> = listed.iter().collect();
            assert_eq!(set.len(), listed.len());
            for g in &listed {
                assert!(is_terrain_like(g));
            }
            let brute = all_graphs(n).into_iter().filter(is_terrain_like).count();
            assert_eq!(listed.len(), brute);
        }
    }

    #[test]
    fn filter_and_dfs_streams_are_identical() {
        for n in 1..=6 {
            let filter: Vec<Graph> = TerrainEnumerator::with_strategy(n, 0, 0, Strategy::Filter)
                .unwrap()
                .collect();
            let dfs: Vec<Graph> = TerrainEnumerator::with_strategy(n, 0, 0, Strategy::Dfs)
                .unwrap()
                .collect();
            assert_eq!(filter, dfs, "stream mismatch at n={n}");
        }
    }

    #[test]
    fn prefixed_streams_merge_to_the_full_enumeration() {
        let full: Vec<Graph> = enumerate_terrain(5).unwrap().collect();
        for strategy in [Strategy::Filter, Strategy::Dfs] {
            for bits in [1usize, 3, 10] {
                let mut merged = Vec::new();
                for prefix in 0..1u128 << bits {
                    merged.extend(
                        TerrainEnumerator::with_strategy(5, bits, prefix, strategy).unwrap(),
                    );
                }
                assert_eq!(merged, full, "{strategy:?} with {bits} prefix bits");
            }
        }
    }

    #[test]
    fn enumeration_bounds() {
        assert!(matches!(enumerate_terrain(0), Err(Error::Bound { .. })));
        assert!(matches!(enumerate_terrain(13), Err(Error::Bound { .. })));
        assert!(matches!(
            enumerate_terrain_prefixed(3, 4, 0),
            Err(Error::Bound { .. })
        ));
    }

    #[test]
    #[ignore = "heavy: full n=8 enumeration, run with --ignored"]
    fn dfs_count_n8() {
        assert_eq!(enumerate_terrain(8).unwrap().count(), 5_410_688);
    }

    #[test]
    fn toggle_examples() {
        let g = Graph::new(2).unwrap();
        let t = toggle_consecutive_edge(&g, 1).unwrap();
        assert!(t.has_edge(1, 2));
        assert_eq!(toggle_consecutive_edge(&t, 1).unwrap(), g);

        let six = graph(6, &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)]);
        let toggled = toggle_consecutive_edge(&six, 3).unwrap();
        assert!(toggled.has_edge(3, 4));
        assert!(is_terrain_like(&toggled));

        assert!(matches!(
            toggle_consecutive_edge(&g, 0),
            Err(Error::ConsecutiveIndex { .. })
        ));
        assert!(matches!(
            toggle_consecutive_edge(&g, 2),
            Err(Error::ConsecutiveIndex { .. })
        ));
        let one = Graph::new(1).unwrap();
        assert!(toggle_consecutive_edge(&one, 1).is_err());
    }

    #[test]
    fn toggling_preserves_terrain_likeness() {
        for n in 2..=5 {
            for g in enumerate_terrain(n).unwrap() {
                for i in 1..n {
                    let t = toggle_consecutive_edge(&g, i).unwrap();
                    assert!(is_terrain_like(&t));
                    assert_eq!(toggle_consecutive_edge(&t, i).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn all_consecutive_examples() {
        assert!(has_all_consecutive_edges(&Graph::new(1).unwrap()));
        assert!(!has_all_consecutive_edges(&Graph::new(2).unwrap()));
        assert!(has_all_consecutive_edges(&graph(3, &[(1, 2), (2, 3)])));
        assert!(!has_all_consecutive_edges(&graph(
            6,
            &[(1, 3), (1, 5), (1, 6), (2, 6), (3, 5)]
        )));
    }

    #[test]
    fn toggle_orbits_partition_the_class() {
        // orbits under consecutive-edge toggles have size 2^(n-1) and exactly
        // one member containing every consecutive edge; the orbit count is
        // the normalized median Genocchi number
        let expected_orbits = [1usize, 1, 2, 7, 38];
        for n in 1..=5 {
            let universe: HashSet<Graph> = enumerate_terrain(n).unwrap().collect();
            let mut seen: HashSet<Graph> = HashSet::new();
            let mut orbits = 0;
            for g in &universe {
                if seen.contains(g) {
                    continue;
                }
                orbits += 1;
                let mut stack = vec![g.clone()];
                let mut orbit = HashSet::from([g.clone()]);
                while let Some(cur) = stack.pop() {
                    for i in 1..n {
                        let t = toggle_consecutive_edge(&cur, i).unwrap();
                        if orbit.insert(t.clone()) {
                            stack.push(t);
                        }
                    }
                }
                assert_eq!(orbit.len(), 1 << (n - 1));
                assert_eq!(
                    orbit
                        .iter()
                        .filter(|x| has_all_consecutive_edges(x))
                        .count(),
                    1
                );
                seen.extend(orbit);
            }
            assert_eq!(seen, universe);
            assert_eq!(orbits, expected_orbits[n - 1]);
        }
    }
}
