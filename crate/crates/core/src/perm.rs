use std::fmt;

use crate::error::{Error, Result};
use crate::graph::MAX_VERTICES;

/// Permutation of [2n] in one-line notation, with its inverse kept eagerly in
/// sync so value positions resolve in constant time.
///
/// Positions and values are 1-indexed at the interface; storage is 0-indexed
/// internally (`word[p-1] = pi(p)`, `inv[v-1] = pi^-1(v)`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    word: Vec<u16>,
    inv: Vec<u16>,
}

impl Permutation {
    /// Builds from one-line notation. The length must be even (the domain is
    /// always [2n] here) and the values a bijection of 1..=len.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let len = word.len();
        if len == 0 || !len.is_multiple_of(2) {
            return Err(Error::WordLength { len });
        }
        if len / 2 > MAX_VERTICES {
            return Err(Error::VertexCount {
                n: len / 2,
                max: MAX_VERTICES,
            });
        }
        let mut inv = vec![0u16; len];
        let mut seen = vec![false; len];
        for (idx, &v) in word.iter().enumerate() {
            if v < 1 || v > len || seen[v - 1] {
                return Err(Error::WordNotBijection {
                    pos: idx + 1,
                    value: v,
                });
            }
            seen[v - 1] = true;
            inv[v - 1] = idx as u16;
        }
        Ok(Permutation {
            word: word.iter().map(|&v| v as u16).collect(),
            inv,
        })
    }

    /// `word` must already be a bijection of 1..=len with even len.
    pub(crate) fn from_word_unchecked(word: Vec<u16>) -> Self {
        let mut inv = vec![0u16; word.len()];
        for (idx, &v) in word.iter().enumerate() {
            inv[v as usize - 1] = idx as u16;
        }
        Permutation { word, inv }
    }

    /// 2n, the size of the domain.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// n, the number of vertices of the graphs this permutation pairs with.
    pub fn half_size(&self) -> usize {
        self.word.len() / 2
    }

    /// pi(pos), 1-indexed.
    pub fn value_at(&self, pos: usize) -> usize {
        assert!(
            pos >= 1 && pos <= self.size(),
            "position {pos} out of range"
        );
        self.word[pos - 1] as usize
    }

    /// pi^-1(value), 1-indexed.
    pub fn position_of(&self, value: usize) -> usize {
        assert!(
            value >= 1 && value <= self.size(),
            "value {value} out of range"
        );
        self.inv[value - 1] as usize + 1
    }

    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn word_slice(&self) -> &[u16] {
        &self.word
    }

    /// Left-multiplies by the transposition of the values i and j: the two
    /// occurrences swap places in the word, which is two writes in each of
    /// the word and inverse arrays.
    pub(crate) fn swap_values(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i >= 1 && j >= 1 && i <= self.size() && j <= self.size());
        let pi = self.inv[i - 1];
        let pj = self.inv[j - 1];
        self.word[pi as usize] = j as u16;
        self.word[pj as usize] = i as u16;
        self.inv.swap(i - 1, j - 1);
    }
}

impl fmt::Display for Permutation {
    /// Comma-separated one-line notation, e.g. `2,1,4,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.word.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_and_inverse_stay_coupled() {
        let p = Permutation::from_word(&[4, 1, 3, 2]).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.half_size(), 2);
        assert_eq!(p.value_at(1), 4);
        assert_eq!(p.position_of(4), 1);
        for pos in 1..=4 {
            assert_eq!(p.position_of(p.value_at(pos)), pos);
        }
    }

    #[test]
    fn from_word_validates() {
        assert!(matches!(
            Permutation::from_word(&[]),
            Err(Error::WordLength { len: 0 })
        ));
        assert!(matches!(
            Permutation::from_word(&[2, 1, 3]),
            Err(Error::WordLength { len: 3 })
        ));
        assert!(matches!(
            Permutation::from_word(&[1, 1]),
            Err(Error::WordNotBijection { pos: 2, value: 1 })
        ));
        assert!(matches!(
            Permutation::from_word(&[0, 1]),
            Err(Error::WordNotBijection { pos: 1, value: 0 })
        ));
        assert!(matches!(
            Permutation::from_word(&[1, 3]),
            Err(Error::WordNotBijection { pos: 2, value: 3 })
        ));
    }

    #[test]
    fn swap_values_moves_occurrences() {
        let mut p = Permutation::from_word(&[2, 1, 4, 3, 6, 5]).unwrap();
        p.swap_values(2, 3);
        assert_eq!(p.to_string(), "3,1,4,2,6,5");
        p.swap_values(2, 3);
        assert_eq!(p.to_string(), "2,1,4,3,6,5");
    }

    #[test]
    fn display_is_comma_separated() {
        let p = Permutation::from_word(&[4, 1, 11, 3, 9, 2, 8, 7, 10, 5, 12, 6]).unwrap();
        assert_eq!(p.to_string(), "4,1,11,3,9,2,8,7,10,5,12,6");
    }

    #[test]
    fn ordering_is_lexicographic_on_words() {
        let a = Permutation::from_word(&[2, 1, 4, 3]).unwrap();
        let b = Permutation::from_word(&[3, 1, 4, 2]).unwrap();
        assert!(a < b);
    }
}
