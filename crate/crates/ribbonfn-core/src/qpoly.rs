//! Sparse polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! `QPoly` is the coefficient ring for every expansion in the crate.  Zero
//! coefficients are never stored, so equality is plain structural equality.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` over `Z`, stored as exponent → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        QPoly::q_pow(1)
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: u32) -> Self {
        QPoly::monomial(BigInt::one(), e)
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(BigInt::is_one)
    }

    /// Degree in `q`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// The coefficient of `q^e`.
    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending (exponent, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// `Some((coefficient, exponent))` when the polynomial has exactly one
    /// term.
    pub fn as_monomial(&self) -> Option<(&BigInt, u32)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(&e, c)| (c, e))
        } else {
            None
        }
    }

    /// True when every coefficient is negative (used for display only).
    pub fn all_negative(&self) -> bool {
        !self.is_zero() && self.coeffs.values().all(Signed::is_negative)
    }

    pub(crate) fn add_term(&mut self, e: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// `self · c` for an integer scalar.
    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect() }
    }

    /// Evaluates at an integer value of `q` (used for the q→0 and q→1
    /// specializations).
    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut pow = BigInt::one();
        let mut at = 0u32;
        for (&e, c) in &self.coeffs {
            for _ in at..e {
                pow *= q;
            }
            at = e;
            acc += c * &pow;
        }
        acc
    }

    /// `1 − q^k` (shorthand used by the Hall-Littlewood shift rule).
    pub fn one_minus_q_pow(k: u32) -> QPoly {
        let mut p = QPoly::one();
        p.add_term(k, &BigInt::from(-1));
        p
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(BigInt::from(c))
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, &-c);
        }
        out
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers, e.g. `q + q^2`, `-1 + q`, `2*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sums an iterator of polynomials.
impl core::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        let mut acc = QPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}
