//! Test-only oracles, kept independent of the library's search paths.
//!
//! Each test binary compiles this module separately, so not every binary
//! uses every oracle.
#![allow(dead_code)]

use rootbalance::balance::SubsetSelection;
use rootbalance::{CoordVector, RootSystem, Sign};

/// Plain `2^k` enumeration for a vanishing signed combination, trying `+`
/// before `-` at every position. Returns the signs in subset order of the
/// first vanishing assignment, which is exactly the lexicographically least
/// witness with the leading sign `+`.
pub fn naive_zero_signing(rs: &RootSystem, indices: &[usize]) -> Option<Vec<Sign>> {
    let k = indices.len();
    if k == 0 {
        return Some(Vec::new());
    }
    assert!(k <= 24, "oracle is exponential; keep subsets small");
    let vectors: Vec<&CoordVector> = indices.iter().map(|&i| &rs.positive_roots()[i]).collect();
    let dim = rs.ambient_dim();
    // Position 0 is the most significant bit, so increasing masks walk the
    // sign sequences in lexicographic order with + before -.
    let minus_at = |mask: u64, pos: usize| mask & (1 << (k - 1 - pos)) != 0;
    for mask in 0u64..(1 << k) {
        let mut acc = vec![0i64; dim];
        for (pos, v) in vectors.iter().enumerate() {
            let sign = if minus_at(mask, pos) { -1 } else { 1 };
            for (a, c) in acc.iter_mut().zip(v.coords()) {
                *a += sign * c;
            }
        }
        if acc.iter().all(|&a| a == 0) {
            return Some(
                (0..k)
                    .map(|pos| {
                        if minus_at(mask, pos) {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect(),
            );
        }
    }
    None
}

/// The half-sum formulation: the subset is balanced iff some sub-subset
/// sums to half the total. Independent second route.
pub fn half_sum_subset_exists(rs: &RootSystem, indices: &[usize]) -> bool {
    let k = indices.len();
    assert!(k <= 24);
    let dim = rs.ambient_dim();
    let mut total = vec![0i64; dim];
    for &i in indices {
        for (a, c) in total.iter_mut().zip(rs.positive_roots()[i].coords()) {
            *a += c;
        }
    }
    if total.iter().any(|&t| t % 2 != 0) {
        return false;
    }
    let half: Vec<i64> = total.iter().map(|&t| t / 2).collect();
    for mask in 0u64..(1 << k) {
        let mut acc = vec![0i64; dim];
        for (pos, &i) in indices.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                for (a, c) in acc.iter_mut().zip(rs.positive_roots()[i].coords()) {
                    *a += c;
                }
            }
        }
        if acc == half {
            return true;
        }
    }
    false
}

/// All balanced subsets of a small system, by exhaustive subset scan over
/// the oracle.
pub fn all_balanced_subsets(rs: &RootSystem) -> Vec<SubsetSelection> {
    let n = rs.count();
    assert!(n <= 12);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if naive_zero_signing(rs, &indices).is_some() {
            out.push(SubsetSelection::new(rs, indices).unwrap());
        }
    }
    out
}
