//! Dumont permutations of the second kind and their derangement subclass.
//!
//! A permutation pi of [2n] is Dumont of the second kind when pi(2i-1) >= 2i-1
//! and pi(2i) < 2i for every i in [n]. Even positions can never be fixed, so
//! the fixed-point-free members are exactly those with pi(2i-1) > 2i-1 at
//! every odd position. That derangement subclass is what the bijection with
//! terrain-like graphs ranges over; it is counted by the median Genocchi
//! numbers.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::MAX_VERTICES;
use crate::pairs::VertexPair;
use crate::perm::Permutation;

/// Largest n accepted by the exhaustive Dumont-derangement enumerator.
pub const ENUM_MAX_N: usize = 8;

pub fn is_dumont_second_kind(p: &Permutation) -> bool {
    p.word_slice().iter().enumerate().all(|(idx, &v)| {
        let pos = idx as u16 + 1;
        if pos % 2 == 1 {
            v >= pos
        } else {
            v < pos
        }
    })
}

pub fn is_dumont_derangement(p: &Permutation) -> bool {
    p.word_slice().iter().enumerate().all(|(idx, &v)| {
        let pos = idx as u16 + 1;
        if pos % 2 == 1 {
            v > pos
        } else {
            v < pos
        }
    })
}

/// Why a word fails to be a Dumont derangement of the second kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumontViolation {
    /// pi(2i-1) < 2i-1 at an odd position.
    OddBelow { pos: usize, value: usize },
    /// pi(2i) >= 2i at an even position.
    EvenNotBelow { pos: usize, value: usize },
    /// Dumont of the second kind, but with a fixed point.
    FixedPoint { pos: usize },
}

impl fmt::Display for DumontViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DumontViolation::OddBelow { pos, value } => {
                write!(f, "π({pos})={value} violates π(2i−1)≥2i−1")
            }
            DumontViolation::EvenNotBelow { pos, value } => {
                write!(f, "π({pos})={value} violates π(2i)<2i")
            }
            DumontViolation::FixedPoint { pos } => {
                write!(f, "π({pos})={pos} is a fixed point")
            }
        }
    }
}

/// First reason `p` is not a Dumont derangement: the leftmost violated
/// inequality if any, otherwise the leftmost fixed point. `None` exactly when
/// [`is_dumont_derangement`] holds.
pub fn dumont_violation(p: &Permutation) -> Option<DumontViolation> {
    for pos in 1..=p.size() {
        let value = p.value_at(pos);
        if pos % 2 == 1 && value < pos {
            return Some(DumontViolation::OddBelow { pos, value });
        }
        if pos % 2 == 0 && value >= pos {
            return Some(DumontViolation::EvenNotBelow { pos, value });
        }
    }
    (1..=p.size())
        .find(|&pos| p.value_at(pos) == pos)
        .map(|pos| DumontViolation::FixedPoint { pos })
}

pub(crate) fn base_word(n: usize) -> Vec<u16> {
    let mut word = vec![0u16; 2 * n];
    for i in 1..=n as u16 {
        word[2 * i as usize - 2] = 2 * i;
        word[2 * i as usize - 1] = 2 * i - 1;
    }
    word
}

/// The product of the adjacent transpositions (1 2)(3 4)...(2n-1 2n): the
/// image of the edgeless graph, and the unique member of the class with no
/// pair in edge configuration.
pub fn base_derangement(n: usize) -> Result<Permutation> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::VertexCount {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(Permutation::from_word_unchecked(base_word(n)))
}

/// The value transposition a vertex pair {a,b} acts by: (2a, 2b-1).
pub fn pair_transposition(e: VertexPair) -> (usize, usize) {
    (2 * e.a(), 2 * e.b() - 1)
}

/// Left-multiplies `p` by the transposition of the values (2a, 2b-1).
/// Panics if the pair does not fit the permutation's domain.
pub fn apply_pair_transposition(p: &Permutation, e: VertexPair) -> Permutation {
    let (i, j) = pair_transposition(e);
    assert!(
        j <= p.size(),
        "pair {e} does not fit a permutation of [{}]",
        p.size()
    );
    let mut out = p.clone();
    out.swap_values(i, j);
    out
}

// The predicate below on a pair of values (i, j), i even, j odd, i < j:
// their positions x = pi^-1(i), y = pi^-1(j) are compared, and the pair is in
// edge configuration iff (x < y) agrees with (x, y having equal parity).
// Swapping the values i and j swaps x and y, which always flips the verdict.
fn edge_configuration_values(p: &Permutation, i: usize, j: usize) -> bool {
    let x = p.position_of(i);
    let y = p.position_of(j);
    (x < y) == (x % 2 == y % 2)
}

/// Whether the vertex pair {u,v} is in edge configuration in `p`, i.e.
/// whether the values 2u and 2v-1 sit in positions whose order matches their
/// parity agreement. Callers feed Dumont derangements, but the predicate is
/// defined for any permutation of [2n].
pub fn edge_configuration(p: &Permutation, u: usize, v: usize) -> bool {
    assert!(
        u >= 1 && u < v && v <= p.half_size(),
        "pair ({u}, {v}) invalid for a permutation of [{}]",
        p.size()
    );
    edge_configuration_values(p, 2 * u, 2 * v - 1)
}

/// Conjugation-like move matching the toggle of a consecutive edge {i,i+1}:
/// left-multiplies by the transposition of the values (2i, 2i+1). The class
/// is closed under it.
pub fn conjugate_adjacent(p: &Permutation, i: usize) -> Result<Permutation> {
    let n = p.half_size();
    if i < 1 || i >= n {
        return Err(Error::ConsecutiveIndex { i, n });
    }
    if let Some(v) = dumont_violation(p) {
        return Err(Error::NotDumontDerangement(v));
    }
    let mut out = p.clone();
    out.swap_values(2 * i, 2 * i + 1);
    debug_assert!(is_dumont_derangement(&out));
    Ok(out)
}

/// Streams all Dumont derangements of the second kind on [2n] in
/// lexicographic order of their one-line words.
pub fn enumerate_dumont_derangements(n: usize) -> Result<DumontEnumerator> {
    enumerate_dumont_derangements_prefixed(n, &[])
}

/// Streams the Dumont derangements whose one-line word starts with `prefix`,
/// in lexicographic order. Concatenating the streams for prefixes
/// `[2]..=[2n]` reproduces the full enumeration, which is how work is split
/// across threads.
pub fn enumerate_dumont_derangements_prefixed(
    n: usize,
    prefix: &[usize],
) -> Result<DumontEnumerator> {
    if !(1..=ENUM_MAX_N).contains(&n) {
        return Err(Error::Bound {
            what: "Dumont derangement enumeration",
            n,
            max: ENUM_MAX_N,
        });
    }
    let n2 = 2 * n;
    if prefix.len() > n2 {
        return Err(Error::WordLength { len: prefix.len() });
    }
    let mut used: u64 = 0;
    let mut word = Vec::with_capacity(n2);
    let mut satisfiable = true;
    for (idx, &v) in prefix.iter().enumerate() {
        if v < 1 || v > n2 || used >> (v - 1) & 1 == 1 {
            return Err(Error::WordNotBijection {
                pos: idx + 1,
                value: v,
            });
        }
        used |= 1 << (v - 1);
        word.push(v as u16);
        // a prefix that already breaks a position constraint has no
        // completions; that is an empty stream, not an input error
        let pos = idx + 1;
        if pos % 2 == 1 && v <= pos || pos % 2 == 0 && v >= pos {
            satisfiable = false;
        }
    }
    Ok(DumontEnumerator {
        n2,
        prefix_len: word.len(),
        word,
        used,
        started: false,
        finished: !satisfiable,
    })
}

/// Backtracking iterator over Dumont derangement words: odd positions take
/// unused values above the position, even positions unused values below it.
pub struct DumontEnumerator {
    n2: usize,
    word: Vec<u16>,
    used: u64,
    prefix_len: usize,
    started: bool,
    finished: bool,
}

impl DumontEnumerator {
    fn candidate_range(&self, pos: usize) -> (usize, usize) {
        if pos % 2 == 1 {
            (pos + 1, self.n2)
        } else {
            (1, pos - 1)
        }
    }

    /// Extends the current partial word position by position, greedily taking
    /// the smallest legal value. False on a dead end.
    fn descend(&mut self) -> bool {
        while self.word.len() < self.n2 {
            let pos = self.word.len() + 1;
            let (lo, hi) = self.candidate_range(pos);
            match (lo..=hi).find(|&v| self.used >> (v - 1) & 1 == 0) {
                Some(v) => {
                    self.used |= 1 << (v - 1);
                    self.word.push(v as u16);
                }
                None => return false,
            }
        }
        true
    }

    /// Steps the deepest revisable position to its next legal value,
    /// unwinding positions that are exhausted. False once the prefix-rooted
    /// subtree is spent.
    fn advance(&mut self) -> bool {
        while self.word.len() > self.prefix_len {
            let prev = self.word.pop().unwrap() as usize;
            self.used &= !(1 << (prev - 1));
            let pos = self.word.len() + 1;
            let (_, hi) = self.candidate_range(pos);
            if let Some(v) = (prev + 1..=hi).find(|&v| self.used >> (v - 1) & 1 == 0) {
                self.used |= 1 << (v - 1);
                self.word.push(v as u16);
                return true;
            }
        }
        false
    }
}

impl Iterator for DumontEnumerator {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(Permutation::from_word_unchecked(self.word.clone()));
            }
        }
        loop {
            if !self.advance() {
                self.finished = true;
                return None;
            }
            if self.descend() {
                return Some(Permutation::from_word_unchecked(self.word.clone()));
            }
        }
    }
}
