//! Plethystic substitution of a scalar Laurent alphabet and the truncated
//! `z`-series algebra the generating-function operators are built on.
//!
//! [`plethystic_translate`] computes `f[X + c]` where the rule `c` adds
//! `c_k·z^{−k}` to each power sum `p_k`.  The expansion runs through the
//! power-sum layer — `f[X + C] = Σ_τ p_τ(C)/z_τ · (p_τ^⊥ f)[X]` — so
//! intermediate coefficients are rational; they must (and do) recombine to
//! `ℤ[q]` in the final Schur expansion, which is checked at runtime.
//!
//! A [`ZSeries`] is a Laurent series in `z` with symmetric-function
//! coefficients and an explicit retained window.  Exact series know every
//! coefficient; truncated series (the `Ω[±zX]` kernels) know nothing above
//! their upper bound, and extraction beyond the provable window is an error
//! rather than a silent zero.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::bases::pperp;
use crate::cache::Cache;
use crate::error::Error;
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::ratpoly::QRatPoly;
use crate::schur::mult;
use crate::symfunc::SymFunc;

/// The scalar alphabet added to each power sum by [`plethystic_translate`]:
/// `p_k ↦ p_k + c_k·z^{−k}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ShiftRule {
    /// `c_k = 0` — the identity substitution.
    Zero,
    /// `c_k = −1`, i.e. `f[X − 1/z]` (row operator kernel).
    BernsteinRow,
    /// `c_k = −(1−q^k)`, i.e. `f[X − (1−q)/z]` (Hall-Littlewood row kernel).
    JingRow,
    /// `c_k = +1`, i.e. `f[X + 1/z]` (column operator kernel).
    Column,
}

impl ShiftRule {
    /// The scalar multiplying `z^{−k}` in `c_k`.
    fn factor(self, k: u32) -> QPoly {
        match self {
            ShiftRule::Zero => QPoly::zero(),
            ShiftRule::BernsteinRow => QPoly::from(-1),
            ShiftRule::JingRow => -&QPoly::one_minus_q_pow(k),
            ShiftRule::Column => QPoly::one(),
        }
    }
}

/// Sign of the alphabet in [`omega_series`]: `Ω[zX]` or `Ω[−zX]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// A truncated Laurent series in `z` with [`SymFunc`] coefficients.
///
/// The window `[lo, hi]` brackets the retained exponents.  For an exact
/// series every coefficient outside the stored support is genuinely zero;
/// for a truncated one, exponents above `hi` are unknown and extraction
/// there reports [`Error::Window`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZSeries {
    coeffs: BTreeMap<i64, SymFunc>,
    lo: i64,
    hi: i64,
    truncated: bool,
}

impl ZSeries {
    /// An exact series from its nonzero coefficients.
    pub fn exact(mut coeffs: BTreeMap<i64, SymFunc>) -> Self {
        coeffs.retain(|_, f| !f.is_zero());
        let lo = coeffs.keys().next().copied().unwrap_or(0);
        let hi = coeffs.keys().next_back().copied().unwrap_or(0);
        ZSeries { coeffs, lo, hi, truncated: false }
    }

    pub fn zero() -> Self {
        ZSeries::exact(BTreeMap::new())
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// The coefficient of `z^m`; an error if `m` lies above a truncated
    /// window.
    pub fn coeff(&self, m: i64) -> Result<SymFunc, Error> {
        if self.truncated && m > self.hi {
            return Err(Error::Window { required: m, lo: self.lo, hi: self.hi });
        }
        Ok(self.coeffs.get(&m).cloned().unwrap_or_else(SymFunc::zero))
    }

    pub fn scale(&self, c: &QPoly) -> ZSeries {
        let mut coeffs: BTreeMap<i64, SymFunc> = BTreeMap::new();
        for (&e, f) in &self.coeffs {
            let g = f.scale(c);
            if !g.is_zero() {
                coeffs.insert(e, g);
            }
        }
        ZSeries { coeffs, lo: self.lo, hi: self.hi, truncated: self.truncated }
    }

    pub fn add(&self, other: &ZSeries) -> ZSeries {
        let truncated = self.truncated || other.truncated;
        let hi = match (self.truncated, other.truncated) {
            (false, false) => self.hi.max(other.hi),
            (true, false) => self.hi,
            (false, true) => other.hi,
            (true, true) => self.hi.min(other.hi),
        };
        let lo = self.lo.min(other.lo);
        let mut coeffs = self.coeffs.clone();
        for (&e, f) in &other.coeffs {
            if e > hi && truncated {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(SymFunc::zero);
            *entry += f;
        }
        coeffs.retain(|&e, f| !f.is_zero() && (!truncated || e <= hi));
        ZSeries { coeffs, lo, hi, truncated }
    }

    /// The coefficient of `z^m` in `self · other`, or an error when the
    /// truncated windows cannot determine it.
    pub fn product_coeff(&self, other: &ZSeries, m: i64) -> Result<SymFunc, Error> {
        if self.truncated && m - other.lo > self.hi {
            return Err(Error::Window { required: m - other.lo, lo: self.lo, hi: self.hi });
        }
        if other.truncated && m - self.lo > other.hi {
            return Err(Error::Window { required: m - self.lo, lo: other.lo, hi: other.hi });
        }
        let mut out = SymFunc::zero();
        for (&i, f) in &self.coeffs {
            let g = other.coeff(m - i)?;
            if !g.is_zero() {
                out += &mult(f, &g);
            }
        }
        Ok(out)
    }

    /// Full product over the provable window.
    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        let truncated = self.truncated || other.truncated;
        let lo = self.lo + other.lo;
        let mut hi = self.hi + other.hi;
        if self.truncated {
            hi = hi.min(self.hi + other.lo);
        }
        if other.truncated {
            hi = hi.min(other.hi + self.lo);
        }
        let mut coeffs = BTreeMap::new();
        for m in lo..=hi {
            let f = self
                .product_coeff(other, m)
                .expect("window bounds were just established");
            if !f.is_zero() {
                coeffs.insert(m, f);
            }
        }
        ZSeries { coeffs, lo, hi, truncated }
    }
}

/// `Ω[±zX]` truncated at `z^degree_bound`: coefficients `h_n` (plus sign)
/// or `(−1)^n e_n` (minus sign).
pub fn omega_series(sign: Sign, degree_bound: u32) -> ZSeries {
    let mut coeffs = BTreeMap::new();
    for n in 0..=degree_bound {
        let f = match sign {
            Sign::Plus => SymFunc::schur(Partition::row(n)),
            Sign::Minus => {
                let col = SymFunc::schur(Partition::column(n));
                if n % 2 == 0 {
                    col
                } else {
                    -col
                }
            }
        };
        coeffs.insert(n as i64, f);
    }
    ZSeries { coeffs, lo: 0, hi: degree_bound as i64, truncated: true }
}

/// `f[X + c]` for the scalar alphabet given by `rule`, as an exact series in
/// `z` with window `[−deg f, 0]`.
pub fn plethystic_translate(f: &SymFunc, rule: ShiftRule) -> ZSeries {
    let mut out = ZSeries::zero();
    for (lam, c) in f.terms() {
        out = out.add(&translate_basis(rule, lam).scale(c));
    }
    out
}

fn translate_basis(rule: ShiftRule, lam: &Partition) -> ZSeries {
    static MEMO: Cache<(ShiftRule, Partition), ZSeries> = Cache::new();
    let key = (rule, lam.clone());
    MEMO.get_or_insert_with(&key, || {
        let mut acc: BTreeMap<i64, BTreeMap<Partition, QRatPoly>> = BTreeMap::new();
        let start = SymFunc::schur(lam.clone());
        descend(
            rule,
            &start,
            0,
            lam.size(),
            0,
            &QPoly::one(),
            &BigInt::one(),
            &mut acc,
        );
        let mut coeffs = BTreeMap::new();
        for (e, terms) in acc {
            let mut f = SymFunc::zero();
            for (mu, r) in terms {
                if r.is_zero() {
                    continue;
                }
                let c = r.to_qpoly().unwrap_or_else(|| {
                    panic!("plethystic translation produced a non-integral coefficient at s_{mu:?}")
                });
                f.add_term(mu, &c);
            }
            if !f.is_zero() {
                coeffs.insert(e, f);
            }
        }
        ZSeries::exact(coeffs)
    })
}

/// Depth-first enumeration of the power-sum index `τ` (parts appended in
/// weakly decreasing order), carrying `p_τ^⊥ s_λ`, the running scalar
/// `Π_v c_v`, and `z_τ` incrementally.
#[allow(clippy::too_many_arguments)]
fn descend(
    rule: ShiftRule,
    skew: &SymFunc,
    depth: u32,
    max_part: u32,
    last_count: u32,
    num: &QPoly,
    den: &BigInt,
    acc: &mut BTreeMap<i64, BTreeMap<Partition, QRatPoly>>,
) {
    let slot = acc.entry(-(depth as i64)).or_default();
    for (mu, c) in skew.terms() {
        slot.entry(mu.clone())
            .or_insert_with(QRatPoly::zero)
            .add_scaled(&(c * num), &BigInt::one(), den);
    }
    let budget = max_part.min(skew.max_degree().unwrap_or(0));
    for v in (1..=budget).rev() {
        let factor = rule.factor(v);
        if factor.is_zero() {
            continue;
        }
        let child = pperp(skew, v);
        if child.is_zero() {
            continue;
        }
        let count = if v == max_part { last_count + 1 } else { 1 };
        let child_num = num * &factor;
        let child_den = den * BigInt::from(v) * BigInt::from(count);
        descend(rule, &child, depth + v, v, count, &child_num, &child_den, acc);
    }
}
