//! Integer partitions and their bijection with strictly increasing wedge
//! index vectors.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so `(1, 0)` and `(1)` are the same value and the null
/// partition is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{parts:?} is not weakly decreasing"));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, 1-based, with zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    fn graded_cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.parts.cmp(&other.parts))
    }
}

/// Graded, then lexicographic on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graded_cmp(other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        if self.parts.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions with at most `r` parts and largest part at most `n - r`,
/// in graded-lex order. There are `C(n, r)` of them.
pub fn enumerate_partitions(r: usize, n: usize) -> Result<Vec<Partition>> {
    if n < r {
        return invalid(format!("n = {n} must be at least r = {r}"));
    }
    let bound = (n - r) as u32;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fill_boxed(r, bound, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill_boxed(slots: usize, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: current.clone() });
    if slots == 0 {
        return;
    }
    for p in 1..=max {
        current.push(p);
        fill_boxed(slots - 1, p, current, out);
        current.pop();
    }
}

/// All partitions of exactly `w` with at most `r` parts.
pub fn partitions_of_weight(w: u32, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    weight_rec(w, w, r, &mut current, &mut out);
    out.sort();
    out
}

fn weight_rec(rest: u32, max: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        current.push(p);
        weight_rec(rest - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// `(λ_r, 1 + λ_{r-1}, …, r - 1 + λ_1)`, the wedge indices of the basis
/// element attached to `λ` in degree `r`.
pub fn hook_indices(lambda: &Partition, r: usize) -> Result<Vec<u32>> {
    if lambda.length() > r {
        return invalid(format!("{lambda} has more than {r} parts"));
    }
    Ok((0..r).map(|k| k as u32 + lambda.part(r - k)).collect())
}

/// Inverse of [`hook_indices`]; returns the partition and the degree.
pub fn partition_from_indices(indices: &[u32]) -> Result<(Partition, usize)> {
    if indices.windows(2).any(|w| w[0] >= w[1]) {
        return invalid(format!("{indices:?} is not strictly increasing"));
    }
    let r = indices.len();
    let parts: Vec<u32> = indices.iter().enumerate().rev().map(|(k, &i)| i - k as u32).collect();
    Ok((Partition::new(parts)?, r))
}

/// `λ ± (1^r)`; `None` when subtracting from a partition with `λ_r = 0`.
pub fn add_ones(lambda: &Partition, r: usize, sign: i8) -> Result<Option<Partition>> {
    if lambda.length() > r {
        return invalid(format!("{lambda} has more than {r} parts"));
    }
    if sign >= 0 {
        let parts = (1..=r).map(|i| lambda.part(i) + 1).collect();
        return Ok(Some(Partition::new(parts)?));
    }
    if r > 0 && lambda.part(r) == 0 {
        return Ok(None);
    }
    let parts = (1..=r).map(|i| lambda.part(i) - 1).collect();
    Ok(Some(Partition::new(parts)?))
}

/// `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ … ≥ μ_r ≥ λ_r`.
pub fn pieri_interlace(lambda: &Partition, mu: &Partition, r: usize) -> bool {
    if lambda.length() > r || mu.length() > r {
        return false;
    }
    (1..=r).all(|i| mu.part(i) >= lambda.part(i) && (i == r || lambda.part(i) >= mu.part(i + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn enumerate_two_four() {
        let got = enumerate_partitions(2, 4).unwrap();
        let want = vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1]), p(&[2, 2])];
        assert_eq!(got, want);
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_partitions(3, 3).unwrap(), vec![p(&[])]);
        assert_eq!(enumerate_partitions(1, 4).unwrap(), vec![p(&[]), p(&[1]), p(&[2]), p(&[3])]);
        assert!(enumerate_partitions(3, 2).is_err());
    }

    #[test]
    fn enumeration_counts_are_binomial() {
        for n in 0..=10 {
            for r in 0..=n {
                let all = enumerate_partitions(r, n).unwrap();
                assert_eq!(all.len() as u64, binomial(n as u64, r as u64), "r={r} n={n}");
                let mut dedup = all.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 0]), p(&[1]));
        assert_eq!(p(&[0, 0]), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn hook_index_examples() {
        assert_eq!(hook_indices(&p(&[]), 2).unwrap(), vec![0, 1]);
        assert_eq!(hook_indices(&p(&[2, 2]), 2).unwrap(), vec![2, 3]);
        assert_eq!(hook_indices(&p(&[3, 1]), 3).unwrap(), vec![0, 2, 5]);
        assert!(hook_indices(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn indices_to_partition_examples() {
        assert_eq!(partition_from_indices(&[0, 1, 2]).unwrap(), (p(&[]), 3));
        assert_eq!(partition_from_indices(&[2, 3]).unwrap(), (p(&[2, 2]), 2));
        assert_eq!(partition_from_indices(&[0, 2, 5]).unwrap(), (p(&[3, 1]), 3));
        assert!(partition_from_indices(&[1, 1]).is_err());
        assert!(partition_from_indices(&[3, 1]).is_err());
    }

    #[test]
    fn add_ones_examples() {
        assert_eq!(add_ones(&p(&[2, 1]), 2, 1).unwrap(), Some(p(&[3, 2])));
        assert_eq!(add_ones(&p(&[]), 3, 1).unwrap(), Some(p(&[1, 1, 1])));
        assert_eq!(add_ones(&p(&[2, 1]), 2, -1).unwrap(), Some(p(&[1])));
        assert_eq!(add_ones(&p(&[2]), 2, -1).unwrap(), None);
    }

    #[test]
    fn interlacing_examples() {
        assert!(pieri_interlace(&p(&[]), &p(&[1]), 2));
        assert!(pieri_interlace(&p(&[1, 1]), &p(&[2, 1]), 2));
        assert!(!pieri_interlace(&p(&[2]), &p(&[1, 1]), 2));
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![p(&[2]), p(&[1, 1]), p(&[]), p(&[3]), p(&[1])];
        v.sort();
        assert_eq!(v, vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2]), p(&[3])]);
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(partitions_of_weight(4, 2), vec![p(&[2, 2]), p(&[3, 1]), p(&[4])]);
        assert_eq!(partitions_of_weight(0, 0), vec![p(&[])]);
        assert_eq!(partitions_of_weight(5, 10).len(), 7);
    }

    #[test]
    fn json_shape() {
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
