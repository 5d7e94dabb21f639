//! Polynomials in `q` with rational coefficients.
//!
//! Rational arithmetic is confined to the power-sum layer: plethystic
//! substitution and the p-basis conversion.  Every result that leaves that
//! layer is checked for integrality and converted back to [`QPoly`].

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qpoly::QPoly;

/// A polynomial in `q` over `Q`, exponent → nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QRatPoly {
    coeffs: BTreeMap<u32, BigRational>,
}

impl QRatPoly {
    pub fn zero() -> Self {
        QRatPoly { coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `p · num / den`, as an exact rational polynomial.
    pub fn from_scaled(p: &QPoly, num: &BigInt, den: &BigInt) -> Self {
        let mut out = QRatPoly::zero();
        out.add_scaled(p, num, den);
        out
    }

    /// Adds `p · num / den` to `self`.
    pub fn add_scaled(&mut self, p: &QPoly, num: &BigInt, den: &BigInt) {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return;
        }
        let factor = BigRational::new(num.clone(), den.clone());
        for (e, c) in p.terms() {
            let entry = self.coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += &factor * BigRational::from(c.clone());
            if entry.is_zero() {
                self.coeffs.remove(&e);
            }
        }
    }

    /// Multiplies in place by an integral polynomial.
    pub fn mul_qpoly(&mut self, p: &QPoly) {
        let mut out: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (e1, r) in &self.coeffs {
            for (e2, c) in p.terms() {
                let entry = out.entry(e1 + e2).or_insert_with(BigRational::zero);
                *entry += r * BigRational::from(c.clone());
            }
        }
        out.retain(|_, c| !c.is_zero());
        self.coeffs = out;
    }

    pub fn add_assign(&mut self, other: &QRatPoly) {
        for (&e, c) in &other.coeffs {
            let entry = self.coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                self.coeffs.remove(&e);
            }
        }
    }

    /// Ascending (exponent, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Converts back to an integral polynomial if every denominator is 1.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let mut out = QPoly::zero();
        for (&e, c) in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            out.add_term(e, c.numer());
        }
        Some(out)
    }
}

impl From<&QPoly> for QRatPoly {
    fn from(p: &QPoly) -> Self {
        QRatPoly::from_scaled(p, &BigInt::one(), &BigInt::one())
    }
}

impl fmt::Display for QRatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QRatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
