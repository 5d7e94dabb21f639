//! Integer partitions and their diagram operations.
//!
//! A partition is a weakly decreasing sequence of positive integers.
//! Diagrams are drawn in the French convention: the first (largest) part is
//! the bottom row and the smallest part sits on top.  The conjugate `λ'`
//! transposes the diagram, and `λ^{rc}` removes the first row and first
//! column at once: `λ^{rc} = (λ_2 − 1, λ_3 − 1, …)` with zero entries
//! dropped.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A weakly decreasing sequence of positive `u32` parts.
///
/// The canonical order sorts by size first, then lexicographically on the
/// part sequence.  Every serialized expansion in this crate lists its terms
/// in this order, e.g. `(1,1,1) < (2,1) < (3)` among partitions of 3.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, validating that the parts are positive and weakly
    /// decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let parts = parts.into();
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(alloc::format!(
                    "parts must be weakly decreasing, got {} before {}",
                    w[0],
                    w[1]
                )));
            }
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: alloc::vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: alloc::vec![1; n as usize] }
    }

    /// Internal constructor for sequences that are weakly decreasing by
    /// construction but may carry trailing zeros.
    pub(crate) fn from_decreasing(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-indexed), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition `λ'` (diagram transpose): `λ'_i` counts the
    /// parts of `λ` that are `≥ i`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p >= i as u32).count() as u32);
        }
        Partition { parts }
    }

    /// Cell-wise containment `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len()
            && inner.parts.iter().enumerate().all(|(i, &p)| p <= self.parts[i])
    }

    /// Removes the first row and first column: `(λ_2 − 1, λ_3 − 1, …)` with
    /// zero entries dropped.  Errors on the empty partition.
    pub fn rc(&self) -> Result<Partition, Error> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(Partition::from_decreasing(
            self.parts[1..].iter().map(|&p| p - 1).collect(),
        ))
    }

    /// Dominance order: `self ⊵ other` iff they have equal size and the
    /// prefix sums of `self` are at least those of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let rows = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..rows {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` in canonical (lexicographic) order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn gen(remaining: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            // Smallest leading part first gives lexicographic order, but the
            // leading part of a partition is its largest, so recurse with the
            // candidate largest part ascending.
            for first in 1..=remaining.min(cap) {
                prefix.push(first);
                gen(remaining - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        if n == 0 {
            return alloc::vec![Partition::empty()];
        }
        // Partitions whose largest part is `first`, for ascending `first`,
        // listing the remainder recursively, is exactly lexicographic order
        // on the full sequences.
        for first in 1..=n {
            prefix.push(first);
            gen(n - first, first, &mut prefix, &mut out);
            prefix.pop();
        }
        out
    }

    /// All partitions of size `0..=n` in canonical order.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions `μ ⊆ self`, in canonical order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn gen(lambda: &[u32], cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::from_decreasing(prefix.clone()));
            if let Some((&row, rest)) = lambda.split_first() {
                for p in 1..=row.min(cap) {
                    prefix.push(p);
                    gen(rest, p, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        gen(&self.parts, u32::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition is the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: u32 = piece
                .parse()
                .map_err(|_| Error::InvalidPartition(String::from(s)))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| Error::InvalidPartition(String::from(s)))
    }
}
