//! Median Genocchi numbers by brute enumeration.
//!
//! The n-th median Genocchi number counts both the terrain-like graphs on n
//! vertices and the Dumont derangements of the second kind on 2n points, so
//! it can be computed from either side and the two totals cross-checked.
//! Each count is divisible by 2^(n-1); the quotients are the normalized
//! median Genocchi numbers, realized directly as the graphs containing every
//! consecutive edge.

use serde::Serialize;

use crate::dumont::{self, enumerate_dumont_derangements};
use crate::error::{Error, Result};
use crate::terrain::{self, enumerate_terrain, has_all_consecutive_edges};

/// Which side of the bijection to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    ViaGraphs,
    ViaPermutations,
    /// Count both sides and insist they agree.
    Both,
}

/// The n-th median Genocchi number: 1, 2, 8, 56, 608, 9440, 198272, ...
pub fn median_genocchi(n: usize, method: CountMethod) -> Result<u64> {
    match method {
        CountMethod::ViaGraphs => {
            check_bound(n, terrain::ENUM_MAX_N, "terrain-side counting")?;
            count_stream(enumerate_terrain(n)?)
        }
        CountMethod::ViaPermutations => {
            check_bound(n, dumont::ENUM_MAX_N, "permutation-side counting")?;
            count_stream(enumerate_dumont_derangements(n)?)
        }
        CountMethod::Both => {
            check_bound(n, dumont::ENUM_MAX_N, "dual-method counting")?;
            let via_graphs = count_stream(enumerate_terrain(n)?)?;
            let via_permutations = count_stream(enumerate_dumont_derangements(n)?)?;
            if via_graphs != via_permutations {
                return Err(Error::CountMismatch {
                    via_graphs,
                    via_permutations,
                });
            }
            Ok(via_graphs)
        }
    }
}

/// The n-th normalized median Genocchi number: 1, 1, 2, 7, 38, 295, ...
/// Counted directly as the terrain-like graphs containing all consecutive
/// edges, and cross-checked against the class total divided by 2^(n-1).
pub fn normalized_median_genocchi(n: usize) -> Result<u64> {
    check_bound(n, terrain::ENUM_MAX_N, "normalized counting")?;
    let mut total: u64 = 0;
    let mut crowned: u64 = 0;
    for g in enumerate_terrain(n)? {
        total = bump(total)?;
        if has_all_consecutive_edges(&g) {
            crowned = bump(crowned)?;
        }
    }
    let scaled = crowned
        .checked_shl((n - 1) as u32)
        .ok_or(Error::Overflow("scaling the normalized count"))?;
    if scaled != total {
        return Err(Error::InvariantViolated(format!(
            "{crowned} all-consecutive graphs times 2^{} is not the class total {total}",
            n - 1
        )));
    }
    Ok(crowned)
}

/// One row of the sequence table, as emitted by the command line.
#[derive(Debug, Clone, Serialize)]
pub struct SequenceRecord {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_terrain: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_dumont: Option<u64>,
    /// count / 2^(n-1), present when the division is exact
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized: Option<u64>,
    pub divisible: bool,
}

impl SequenceRecord {
    /// The agreed-on count (both sides are equal whenever both are present).
    pub fn count(&self) -> u64 {
        self.count_terrain
            .or(self.count_dumont)
            .expect("a sequence record always carries at least one count")
    }
}

/// Counts via `method` and reports divisibility by 2^(n-1) along with the
/// quotient.
pub fn sequence_record(n: usize, method: CountMethod) -> Result<SequenceRecord> {
    let count = median_genocchi(n, method)?;
    let (count_terrain, count_dumont) = match method {
        CountMethod::ViaGraphs => (Some(count), None),
        CountMethod::ViaPermutations => (None, Some(count)),
        CountMethod::Both => (Some(count), Some(count)),
    };
    let modulus = 1u64
        .checked_shl((n - 1) as u32)
        .ok_or(Error::Overflow("computing the divisibility modulus"))?;
    let divisible = count % modulus == 0;
    Ok(SequenceRecord {
        n,
        count_terrain,
        count_dumont,
        normalized: divisible.then(|| count / modulus),
        divisible,
    })
}

fn check_bound(n: usize, max: usize, what: &'static str) -> Result<()> {
    if n < 1 || n > max {
        return Err(Error::Bound { what, n, max });
    }
    Ok(())
}

fn bump(count: u64) -> Result<u64> {
    count
        .checked_add(1)
        .ok_or(Error::Overflow("counting the class"))
}

fn count_stream<I: Iterator>(stream: I) -> Result<u64> {
    let mut count: u64 = 0;
    for _ in stream {
        count = bump(count)?;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    const VALUES: [u64; 7] = [1, 2, 8, 56, 608, 9440, 198272];

    #[test]
    fn values_agree_on_both_sides() {
        for n in 1..=5 {
            assert_eq!(
                median_genocchi(n, CountMethod::ViaGraphs).unwrap(),
                VALUES[n - 1]
            );
            assert_eq!(
                median_genocchi(n, CountMethod::ViaPermutations).unwrap(),
                VALUES[n - 1]
            );
            assert_eq!(
                median_genocchi(n, CountMethod::Both).unwrap(),
                VALUES[n - 1]
            );
        }
    }

    #[test]
    fn larger_values() {
        assert_eq!(median_genocchi(6, CountMethod::Both).unwrap(), 9440);
        assert_eq!(median_genocchi(7, CountMethod::ViaGraphs).unwrap(), 198272);
        assert_eq!(
            median_genocchi(7, CountMethod::ViaPermutations).unwrap(),
            198272
        );
    }

    #[test]
    fn counts_divide_by_powers_of_two() {
        for n in 1..=7 {
            let record = sequence_record(n, CountMethod::ViaGraphs).unwrap();
            assert!(record.divisible, "n={n}");
            assert_eq!(record.normalized, Some(VALUES[n - 1] >> (n - 1)));
        }
    }

    #[test]
    fn normalized_values() {
        let expected = [1, 1, 2, 7, 38, 295];
        for n in 1..=6 {
            assert_eq!(normalized_median_genocchi(n).unwrap(), expected[n - 1]);
        }
    }

    #[test]
    fn record_shape() {
        let r = sequence_record(3, CountMethod::Both).unwrap();
        assert_eq!((r.count_terrain, r.count_dumont), (Some(8), Some(8)));
        assert_eq!(r.count(), 8);
        assert_eq!(r.normalized, Some(2));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["count_terrain"], 8);
        assert_eq!(json["normalized"], 2);
        assert_eq!(json["divisible"], true);

        let graphs_only = sequence_record(2, CountMethod::ViaGraphs).unwrap();
        assert_eq!(graphs_only.count_dumont, None);
        assert_eq!(graphs_only.count(), 2);
        assert!(serde_json::to_string(&graphs_only)
            .unwrap()
            .contains("\"count_terrain\":2"));
    }

    #[test]
    fn bounds() {
        assert!(median_genocchi(0, CountMethod::ViaGraphs).is_err());
        assert!(median_genocchi(13, CountMethod::ViaGraphs).is_err());
        assert!(median_genocchi(9, CountMethod::ViaPermutations).is_err());
        assert!(median_genocchi(9, CountMethod::Both).is_err());
        assert!(normalized_median_genocchi(0).is_err());
        assert!(normalized_median_genocchi(13).is_err());
    }
}
