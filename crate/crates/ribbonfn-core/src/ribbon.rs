//! Ribbons (border strips) encoded by their size and descent set.
//!
//! A ribbon of size `k` is a connected skew diagram with `k` cells and no
//! 2×2 block.  Label its cells `1..k` from left to right, top to bottom
//! (French convention, smallest row on top); the descent set records the
//! labels whose successor sits in the row below.  Ribbons of size `k` are in
//! bijection with subsets of `{1, …, k−1}`, and every ribbon is the skew
//! diagram `λ/λ^{rc}` for exactly one partition `λ`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::partition::Partition;

/// A ribbon, stored as its size plus a descent bitmask (bit `i−1` set iff
/// `i` is a descent).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ribbon {
    size: u32,
    mask: u64,
}

impl Ribbon {
    /// Builds a ribbon of the given size from an explicit descent set.
    pub fn new(size: u32, descents: &[u32]) -> Result<Self, Error> {
        let mut mask = 0u64;
        for &d in descents {
            if d == 0 || d >= size {
                return Err(Error::InvalidRibbon(alloc::format!(
                    "descent {d} out of range for size {size}"
                )));
            }
            mask |= 1 << (d - 1);
        }
        Ribbon::from_mask(size, mask)
    }

    /// Builds a ribbon from a raw descent bitmask.
    pub fn from_mask(size: u32, mask: u64) -> Result<Self, Error> {
        if size == 0 || size > 64 {
            return Err(Error::InvalidRibbon(alloc::format!(
                "size must be between 1 and 64, got {size}"
            )));
        }
        if size < 64 && mask >> (size - 1) != 0 {
            return Err(Error::InvalidRibbon(alloc::format!(
                "descent mask {mask:#b} out of range for size {size}"
            )));
        }
        Ok(Ribbon { size, mask })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// The descent set, ascending.
    pub fn descents(&self) -> Vec<u32> {
        (1..self.size).filter(|d| self.mask >> (d - 1) & 1 == 1).collect()
    }

    /// `maj(R) = Σ_{i ∈ D(R)} i`.
    pub fn maj(&self) -> u32 {
        self.descents().iter().sum()
    }

    /// `comaj(R) = C(k,2) − maj(R)`.
    pub fn comaj(&self) -> u32 {
        self.size * (self.size - 1) / 2 - self.maj()
    }

    /// The ribbon with the complementary descent set.
    pub fn complement(&self) -> Ribbon {
        let full = if self.size == 1 { 0 } else { (1u64 << (self.size - 1)) - 1 };
        Ribbon { size: self.size, mask: self.mask ^ full }
    }

    /// One more cell appended rightward past the last cell: the size grows,
    /// the descent set is unchanged.
    pub fn extend_right(&self) -> Ribbon {
        assert!(self.size < 64, "ribbon size limit");
        Ribbon { size: self.size + 1, mask: self.mask }
    }

    /// One more cell added below the last cell: the size grows and the step
    /// onto the new cell is a descent.
    pub fn extend_below(&self) -> Ribbon {
        assert!(self.size < 64, "ribbon size limit");
        Ribbon { size: self.size + 1, mask: self.mask | 1 << (self.size - 1) }
    }

    /// All `2^{k−1}` ribbons of size `k`, by ascending descent bitmask.
    pub fn enumerate(k: u32) -> Result<Vec<Ribbon>, Error> {
        if k == 0 {
            return Err(Error::InvalidRibbon("size must be positive".into()));
        }
        Ok((0..1u64 << (k - 1)).map(|mask| Ribbon { size: k, mask }).collect())
    }

    /// The maximal runs of descent-free labels, top row first.
    fn runs(&self) -> Vec<u32> {
        let mut runs = Vec::new();
        let mut prev = 0;
        for d in self.descents() {
            runs.push(d - prev);
            prev = d;
        }
        runs.push(self.size - prev);
        runs
    }

    /// The unique pair `(λ, λ^{rc})` whose skew diagram realizes this
    /// ribbon's descent pattern.
    pub fn shape(&self) -> (Partition, Partition) {
        let runs = self.runs();
        let rows = runs.len();
        // Row lengths from the top run downwards: the top row of the diagram
        // is the last part of λ, and each row below extends one column past
        // the start of the row above it.
        let mut parts = alloc::vec![0u32; rows];
        parts[rows - 1] = runs[0];
        for i in (0..rows - 1).rev() {
            parts[i] = parts[i + 1] + runs[rows - 1 - i] - 1;
        }
        let outer = Partition::from_decreasing(parts);
        let inner = outer.rc().expect("ribbon outer shape is nonempty");
        (outer, inner)
    }

    /// Inverse of [`Ribbon::shape`]: requires `inner = rc(outer)`.
    pub fn from_shape(outer: &Partition, inner: &Partition) -> Result<Ribbon, Error> {
        if outer.is_empty() {
            return Err(Error::InvalidRibbon("outer shape is empty".into()));
        }
        if &outer.rc()? != inner {
            return Err(Error::InvalidRibbon(alloc::format!(
                "{outer}/{inner} is not of the form lambda over rc(lambda)"
            )));
        }
        let rows = outer.len();
        let size = outer.size() - inner.size();
        // Recover the runs (top row first), then the descents as the partial
        // sums of all but the last run.
        let mut runs = alloc::vec![outer.part(rows - 1)];
        for i in (0..rows - 1).rev() {
            runs.push(outer.part(i) - outer.part(i + 1) + 1);
        }
        let mut descents = Vec::new();
        let mut acc = 0;
        for r in &runs[..rows - 1] {
            acc += r;
            descents.push(acc);
        }
        let ribbon = Ribbon::new(size, &descents)?;
        debug_assert_eq!(&ribbon.shape().0, outer);
        Ok(ribbon)
    }
}

impl fmt::Display for Ribbon {
    /// `k:{d1,d2,…}`, e.g. `4:{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{{", self.size)?;
        for (i, d) in self.descents().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Ribbon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::InvalidRibbon(alloc::format!("expected k:{{d1,d2,…}}, got {s:?}"));
        let (size, rest) = s.trim().split_once(':').ok_or_else(err)?;
        let size: u32 = size.trim().parse().map_err(|_| err())?;
        let rest = rest.trim();
        let body = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(err)?;
        let mut descents = Vec::new();
        for piece in body.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            descents.push(piece.parse().map_err(|_| err())?);
        }
        Ribbon::new(size, &descents)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Ribbon::enumerate(1).unwrap().len(), 1);
        assert_eq!(Ribbon::enumerate(4).unwrap().len(), 8);
        assert_eq!(Ribbon::enumerate(8).unwrap().len(), 128);
        assert!(Ribbon::enumerate(0).is_err());
        assert!(Ribbon::enumerate(1).unwrap()[0].descents().is_empty());
    }

    #[test]
    fn maj_comaj_examples() {
        let r = Ribbon::new(5, &[]).unwrap();
        assert_eq!((r.maj(), r.comaj()), (0, 10));
        let r = Ribbon::new(4, &[1, 3]).unwrap();
        assert_eq!((r.maj(), r.comaj()), (4, 2));
        let r = Ribbon::new(3, &[1, 2]).unwrap();
        assert_eq!((r.maj(), r.comaj()), (3, 0));
    }

    #[test]
    fn complement_examples() {
        let r = Ribbon::new(4, &[1, 3]).unwrap();
        assert_eq!(r.complement(), Ribbon::new(4, &[2]).unwrap());
        for k in 1..=8 {
            for r in Ribbon::enumerate(k).unwrap() {
                assert_eq!(r.complement().complement(), r);
                assert_eq!(r.complement().maj(), r.comaj());
            }
        }
    }

    #[test]
    fn extensions() {
        let r = Ribbon::new(3, &[2]).unwrap();
        assert_eq!(r.extend_right(), Ribbon::new(4, &[2]).unwrap());
        assert_eq!(r.extend_below(), Ribbon::new(4, &[2, 3]).unwrap());
        // Extending rightward stretches the last row; extending below adds a
        // length-one row under everything.
        let (outer, _) = r.shape();
        let (right, _) = r.extend_right().shape();
        let (below, _) = r.extend_below().shape();
        assert_eq!(right.part(0), outer.part(0) + 1);
        assert_eq!(below.len(), outer.len() + 1);
    }

    #[test]
    fn shapes_of_named_ribbons() {
        let row = Ribbon::new(4, &[]).unwrap();
        assert_eq!(row.shape(), (p(&[4]), Partition::empty()));
        let col = Ribbon::new(4, &[1, 2, 3]).unwrap();
        assert_eq!(col.shape(), (p(&[1, 1, 1, 1]), Partition::empty()));
        let hook = Ribbon::new(3, &[2]).unwrap();
        assert_eq!(hook.shape(), (p(&[2, 2]), p(&[1])));
        let big = Ribbon::new(6, &[2, 4]).unwrap();
        assert_eq!(big.shape(), (p(&[4, 3, 2]), p(&[2, 1])));
    }

    #[test]
    fn shape_round_trip_and_geometry() {
        for k in 1..=8 {
            for r in Ribbon::enumerate(k).unwrap() {
                let (outer, inner) = r.shape();
                assert_eq!(outer.size() - inner.size(), k);
                assert_eq!(inner, outer.rc().unwrap());
                assert_eq!(Ribbon::from_shape(&outer, &inner).unwrap(), r);
                // Each row of the skew diagram is nonempty and overlaps the
                // row above in exactly one column: connected, no 2×2 block.
                for i in 0..outer.len() {
                    assert!(outer.part(i) > inner.part(i));
                    if i + 1 < outer.len() {
                        let overlap =
                            outer.part(i + 1).min(outer.part(i)) as i64 - inner.part(i).max(inner.part(i + 1)) as i64;
                        assert_eq!(overlap, 1, "rows {i},{} of {outer}/{inner}", i + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn from_shape_rejects_non_ribbons() {
        // (2,2)/() contains a 2×2 block and is not λ/rc(λ).
        assert!(Ribbon::from_shape(&p(&[2, 2]), &Partition::empty()).is_err());
        assert!(Ribbon::from_shape(&Partition::empty(), &Partition::empty()).is_err());
    }

    #[test]
    fn text_round_trip() {
        for k in 1..=6 {
            for r in Ribbon::enumerate(k).unwrap() {
                let shown = alloc::format!("{r}");
                assert_eq!(shown.parse::<Ribbon>().unwrap(), r);
            }
        }
        assert_eq!("4:{1,3}".parse::<Ribbon>().unwrap(), Ribbon::new(4, &[1, 3]).unwrap());
        assert_eq!("1:{}".parse::<Ribbon>().unwrap(), Ribbon::new(1, &[]).unwrap());
        assert!("4:{4}".parse::<Ribbon>().is_err());
        assert!("0:{}".parse::<Ribbon>().is_err());
        assert!("4:1,3".parse::<Ribbon>().is_err());
    }
}
