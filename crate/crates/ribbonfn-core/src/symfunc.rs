//! Finite Schur-basis expansions with `Z[q]` coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::schur;

/// A finite sum `Σ_λ c_λ(q) · s_λ`, stored as partition → nonzero `QPoly`.
///
/// Terms iterate in the canonical partition order (size, then lex), which is
/// also the serialization order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc { terms: BTreeMap::new() }
    }

    /// The constant symmetric function 1 (the vacuum `s_∅`).
    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    /// The basis element `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, QPoly::one());
        SymFunc { terms }
    }

    /// `c(q) · s_λ`.
    pub fn schur_term(lambda: Partition, coeff: QPoly) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda, &coeff);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `s_λ` (zero if absent).
    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    /// The partitions supporting this expansion, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, coeff: &QPoly) {
        use alloc::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self · c(q)`.
    pub fn scale(&self, c: &QPoly) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        let mut out = SymFunc::zero();
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), &(v * c));
        }
        out
    }

    /// `self · c` for an integer scalar.
    pub fn scale_int(&self, c: &BigInt) -> SymFunc {
        self.scale(&QPoly::constant(c.clone()))
    }

    /// Largest `|λ|` in the support, or `None` when zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// `Some(d)` when nonzero and supported entirely in degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Partition::size);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The degree-`d` part of the expansion.
    pub fn homogeneous_component(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(lam, _)| lam.size() == d)
                .map(|(lam, c)| (lam.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates every coefficient at an integer value of `q`.
    pub fn substitute_q(&self, q: &BigInt) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), &QPoly::constant(c.eval(q)));
        }
        out
    }

    /// The involution `ω`, sending `s_λ` to `s_{λ'}`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(lam, c)| (lam.conjugate(), c.clone())).collect(),
        }
    }

    /// The Hall inner product; Schur functions are orthonormal, so this is
    /// the coefficient-wise dot product.
    pub fn hall_inner(&self, other: &SymFunc) -> QPoly {
        let mut acc = QPoly::zero();
        for (lam, c) in &self.terms {
            if let Some(d) = other.terms.get(lam) {
                acc += &(c * d);
            }
        }
        acc
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (lam, c) in &rhs.terms {
            self.add_term(lam.clone(), c);
        }
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (lam, c) in &rhs.terms {
            out.add_term(lam.clone(), &-c);
        }
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc { terms: self.terms.iter().map(|(lam, c)| (lam.clone(), -c)).collect() }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

/// Product via the Littlewood-Richardson rule (iterated Pieri chains).
impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        schur::mult(self, rhs)
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        schur::mult(&self, &rhs)
    }
}

impl fmt::Display for SymFunc {
    /// Canonical text form, e.g. `s[1,1,1] + (q + q^2)*s[2,1] + q^3*s[3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::One;
        use num_traits::Signed;

        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in &self.terms {
            // Decide the sign to hoist out of the coefficient.
            let (negative, shown): (bool, QPoly) = if let Some((v, _)) = c.as_monomial() {
                (v.is_negative(), if v.is_negative() { -c } else { c.clone() })
            } else if c.all_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
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
            match shown.as_monomial() {
                Some((v, 0)) if v.is_one() => write!(f, "s[{lam}]")?,
                Some((v, 0)) => write!(f, "{v}*s[{lam}]")?,
                Some((v, e)) => {
                    if !v.is_one() {
                        write!(f, "{v}*")?;
                    }
                    if e == 1 {
                        write!(f, "q*s[{lam}]")?;
                    } else {
                        write!(f, "q^{e}*s[{lam}]")?;
                    }
                }
                None => write!(f, "({shown})*s[{lam}]")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl core::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        let mut acc = SymFunc::zero();
        for f in iter {
            acc += &f;
        }
        acc
    }
}
