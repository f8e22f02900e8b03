//! Vertex pairs, the nesting order on them, and valid (nesting-compatible)
//! linear orders.
//!
//! A pair {a,b} nests inside {c,d} when c <= a < b <= d. A *valid order* of a
//! set of pairs is any linear extension of that partial order: whenever one
//! pair nests inside another, the inner pair comes first. Both maps of the
//! bijection consume their pairs through valid orders, and their outputs do
//! not depend on which valid order is chosen.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Unordered pair of distinct vertices, stored as 1 <= a < b.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexPair {
    a: usize,
    b: usize,
}

impl VertexPair {
    /// Panics unless 1 <= a < b. Use [`VertexPair::try_new`] for user input.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(
            a >= 1 && a < b,
            "vertex pair needs 1 <= a < b, got ({a}, {b})"
        );
        VertexPair { a, b }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        if a >= 1 && a < b {
            Ok(VertexPair { a, b })
        } else {
            Err(Error::PairOrder { a, b })
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// b - a; the width of the interval the pair spans.
    pub fn span(&self) -> usize {
        self.b - self.a
    }

    /// Nesting order: self is nested inside (or equal to) `other`.
    pub fn precedes(&self, other: &VertexPair) -> bool {
        other.a <= self.a && self.b <= other.b
    }

    /// Sort key realizing the canonical valid order: ascending span, then
    /// ascending left endpoint. Strict nesting implies a strictly smaller
    /// span, so sorting by this key is a linear extension of the nesting
    /// order.
    pub(crate) fn canonical_key(&self) -> (usize, usize) {
        (self.span(), self.a)
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// All pairs over [n] in canonical valid order.
pub fn all_pairs(n: usize) -> Vec<VertexPair> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for span in 1..n {
        for a in 1..=n - span {
            pairs.push(VertexPair::new(a, a + span));
        }
    }
    pairs
}

/// Index of a pair within `all_pairs(n)`, without building the list.
pub(crate) fn pair_index(n: usize, e: VertexPair) -> usize {
    let s = e.span();
    // pairs of span t number n - t, for t = 1..s-1
    (s - 1) * n - s * (s - 1) / 2 + (e.a() - 1)
}

/// A duplicate-free list of pairs that is a linear extension of the nesting
/// order: a nested pair never appears after a pair it nests inside.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidOrder {
    pairs: Vec<VertexPair>,
}

impl ValidOrder {
    pub fn new(pairs: Vec<VertexPair>) -> Result<Self> {
        for (i, e) in pairs.iter().enumerate() {
            for f in &pairs[i + 1..] {
                if e == f {
                    return Err(Error::DuplicatePair { a: e.a(), b: e.b() });
                }
                if f.precedes(e) {
                    return Err(Error::OrderNotValid {
                        nested: *f,
                        outer: *e,
                    });
                }
            }
        }
        Ok(ValidOrder { pairs })
    }

    pub fn pairs(&self) -> &[VertexPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexPair> {
        self.pairs.iter()
    }
}

impl<'a> IntoIterator for &'a ValidOrder {
    type Item = &'a VertexPair;
    type IntoIter = std::slice::Iter<'a, VertexPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

fn dedup_pairs(pairs: &[VertexPair]) -> Vec<VertexPair> {
    let mut v = pairs.to_vec();
    v.sort_by_key(VertexPair::canonical_key);
    v.dedup();
    v
}

/// The canonical valid order of a set of pairs: ascending span, ties by left
/// endpoint. Duplicates in the input are collapsed.
pub fn canonical_valid_order(pairs: &[VertexPair]) -> ValidOrder {
    ValidOrder {
        pairs: dedup_pairs(pairs),
    }
}

/// A pseudo-random valid order, deterministic for a fixed seed: repeatedly
/// picks one of the currently minimal pairs uniformly at random.
pub fn random_valid_order(pairs: &[VertexPair], seed: u64) -> ValidOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining = dedup_pairs(pairs);
    let mut out = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let minimal: Vec<usize> = (0..remaining.len())
            .filter(|&i| {
                !remaining
                    .iter()
                    .enumerate()
                    .any(|(j, f)| j != i && f.precedes(&remaining[i]))
            })
            .collect();
        let pick = minimal[rng.random_range(0..minimal.len())];
        out.push(remaining.remove(pick));
    }
    ValidOrder { pairs: out }
}
