//! Conversions between the classical bases of symmetric functions — complete
//! homogeneous `h`, elementary `e`, power sum `p`, monomial `m` — and the
//! Schur basis.
//!
//! Everything is exact.  The `h`, `e`, and `m` conversions stay over `ℤ[q]`;
//! the `p` basis genuinely requires denominators (`s_{(1,1)} = ½p_{(1,1)} −
//! ½p_{(2)}`) and is returned with rational coefficients, flagged by the
//! expansion kind.  Power-sum multiplication and skewing walk border strips
//! on first-column hook lengths (beta numbers).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cache::Cache;
use crate::error::Error;
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::ratpoly::QRatPoly;
use crate::schur::{emul, hmul};
use crate::symfunc::SymFunc;

/// The five classical bases handled by [`basis_convert`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Basis {
    Schur,
    H,
    E,
    P,
    M,
}

/// Coefficients of a [`BasisExpansion`]: integral over `ℤ[q]` except for the
/// power-sum basis, which carries explicit rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coefficients {
    Integral(BTreeMap<Partition, QPoly>),
    Rational(BTreeMap<Partition, QRatPoly>),
}

/// A symmetric function expressed in one of the classical bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub coeffs: Coefficients,
}

impl BasisExpansion {
    /// Converts the expansion back to a Schur-basis [`SymFunc`].
    ///
    /// Power-sum expansions must recombine to integral Schur coefficients;
    /// anything else reports [`Error::NonIntegral`].
    pub fn to_symfunc(&self) -> Result<SymFunc, Error> {
        match &self.coeffs {
            Coefficients::Integral(map) => {
                let mut out = SymFunc::zero();
                for (mu, c) in map {
                    let base = match self.basis {
                        Basis::Schur => SymFunc::schur(mu.clone()),
                        Basis::H => h_to_schur(mu),
                        Basis::E => e_to_schur(mu),
                        Basis::M => m_to_schur(mu),
                        Basis::P => unreachable!("p expansions are rational"),
                    };
                    out += &base.scale(c);
                }
                Ok(out)
            }
            Coefficients::Rational(map) => {
                let mut acc: BTreeMap<Partition, QRatPoly> = BTreeMap::new();
                for (mu, c) in map {
                    for (lam, d) in p_to_schur(mu).terms() {
                        let mut scaled = c.clone();
                        scaled.mul_qpoly(d);
                        acc.entry(lam.clone()).or_insert_with(QRatPoly::zero).add_assign(&scaled);
                    }
                }
                let mut out = SymFunc::zero();
                for (lam, c) in acc {
                    if c.is_zero() {
                        continue;
                    }
                    let c = c
                        .to_qpoly()
                        .ok_or_else(|| Error::NonIntegral(alloc::format!("coefficient of s_{lam:?}")))?;
                    out.add_term(lam, &c);
                }
                Ok(out)
            }
        }
    }
}

/// Expresses a Schur-basis symmetric function in the requested basis.
///
/// Round trip through [`BasisExpansion::to_symfunc`] is the identity.
pub fn basis_convert(f: &SymFunc, basis: Basis) -> BasisExpansion {
    let coeffs = match basis {
        Basis::Schur => Coefficients::Integral(
            f.terms().map(|(lam, c)| (lam.clone(), c.clone())).collect(),
        ),
        Basis::H => Coefficients::Integral(peel(f, h_to_schur)),
        Basis::E => Coefficients::Integral(peel(&f.omega(), h_to_schur)),
        Basis::M => {
            let mut map = BTreeMap::new();
            for n in degrees(f) {
                for mu in Partition::all_of_size(n) {
                    let mut c = QPoly::zero();
                    for (lam, d) in f.terms() {
                        if lam.size() != n {
                            continue;
                        }
                        let k = kostka_number(lam, &mu);
                        if !k.is_zero() {
                            c += &d.scale(&k);
                        }
                    }
                    if !c.is_zero() {
                        map.insert(mu, c);
                    }
                }
            }
            Coefficients::Integral(map)
        }
        Basis::P => {
            let mut map = BTreeMap::new();
            for n in degrees(f) {
                for mu in Partition::all_of_size(n) {
                    let mut num = QPoly::zero();
                    for (lam, d) in f.terms() {
                        if lam.size() != n {
                            continue;
                        }
                        let chi = character(lam, &mu);
                        if !chi.is_zero() {
                            num += &d.scale(&chi);
                        }
                    }
                    if !num.is_zero() {
                        let mut c = QRatPoly::zero();
                        c.add_scaled(&num, &BigInt::one(), &z_lambda(&mu));
                        map.insert(mu, c);
                    }
                }
            }
            Coefficients::Rational(map)
        }
    };
    BasisExpansion { basis, coeffs }
}

/// Distinct homogeneous degrees present in `f`.
fn degrees(f: &SymFunc) -> Vec<u32> {
    let mut out: Vec<u32> = f.support().map(|lam| lam.size()).collect();
    out.dedup();
    out
}

/// Solves the unitriangular system `f = Σ c_μ base(μ)` where `base(μ) = s_μ +
/// (lex-larger terms)`, peeling the lex-least surviving Schur term.
fn peel(f: &SymFunc, base: fn(&Partition) -> SymFunc) -> BTreeMap<Partition, QPoly> {
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    loop {
        let next = rem.terms().next().map(|(l, c)| (l.clone(), c.clone()));
        let Some((mu, c)) = next else { break };
        rem += &base(&mu).scale(&-&c);
        out.insert(mu, c);
    }
    out
}

/// `h_λ = h_{λ_1}·h_{λ_2}…` expanded in the Schur basis.
pub fn h_to_schur(mu: &Partition) -> SymFunc {
    static H: Cache<Partition, SymFunc> = Cache::new();
    H.get_or_insert_with(mu, || {
        let mut out = SymFunc::one();
        for &part in mu.parts() {
            out = hmul(&out, part);
        }
        out
    })
}

/// `e_λ` expanded in the Schur basis.
pub fn e_to_schur(mu: &Partition) -> SymFunc {
    static E: Cache<Partition, SymFunc> = Cache::new();
    E.get_or_insert_with(mu, || {
        let mut out = SymFunc::one();
        for &part in mu.parts() {
            out = emul(&out, part);
        }
        out
    })
}

/// `p_λ` expanded in the Schur basis.
pub fn p_to_schur(mu: &Partition) -> SymFunc {
    static P: Cache<Partition, SymFunc> = Cache::new();
    P.get_or_insert_with(mu, || {
        let mut out = SymFunc::one();
        for &part in mu.parts() {
            out = pmul(&out, part);
        }
        out
    })
}

/// `m_λ` expanded in the Schur basis, by inverting `s_μ = Σ_ν K_{μν} m_ν`.
pub fn m_to_schur(mu: &Partition) -> SymFunc {
    static M: Cache<Partition, SymFunc> = Cache::new();
    M.get_or_insert_with(mu, || {
        let mut out = SymFunc::schur(mu.clone());
        for nu in Partition::all_of_size(mu.size()) {
            if &nu == mu {
                continue;
            }
            let k = kostka_number(mu, &nu);
            if !k.is_zero() {
                out += &m_to_schur(&nu).scale_int(&-k);
            }
        }
        out
    })
}

/// The Kostka number `K_{λμ}` (semistandard tableaux of shape λ, content μ),
/// read off as `⟨s_λ, h_μ⟩`.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> BigInt {
    constant_term(&h_to_schur(mu).coeff(lam))
}

/// The symmetric group character `χ^λ(μ) = ⟨s_λ, p_μ⟩`.
pub fn character(lam: &Partition, mu: &Partition) -> BigInt {
    constant_term(&p_to_schur(mu).coeff(lam))
}

fn constant_term(p: &QPoly) -> BigInt {
    debug_assert!(p.degree().unwrap_or(0) == 0, "expected a q-free value");
    p.coeff(0)
}

/// `z_λ = Π_i i^{n_i}·n_i!` where `n_i` counts parts of size `i`.
pub fn z_lambda(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0u32;
    let parts = mu.parts();
    for (i, &part) in parts.iter().enumerate() {
        run += 1;
        z *= BigInt::from(part);
        z *= BigInt::from(run);
        if i + 1 == parts.len() || parts[i + 1] != part {
            run = 0;
        }
    }
    z
}

/// Beta numbers `β_i = λ_i + rows − 1 − i` for `λ` padded to `rows` parts.
fn beta(lam: &Partition, rows: usize) -> Vec<i64> {
    (0..rows)
        .map(|i| lam.part(i) as i64 + (rows - 1 - i) as i64)
        .collect()
}

fn from_beta(mut b: Vec<i64>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    let rows = b.len();
    let parts: Vec<u32> = b
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - (rows - 1 - i) as i64) as u32)
        .collect();
    Partition::from_decreasing(parts)
}

/// Multiplication by the power sum `p_k`: add border strips of size `k` with
/// sign `(−1)^{height}`.
pub fn pmul(f: &SymFunc, k: u32) -> SymFunc {
    assert!(k >= 1, "p_0 is not a generator");
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        let rows = lam.len() + k as usize;
        let b = beta(lam, rows);
        for j in 0..rows {
            let target = b[j] + k as i64;
            if b.contains(&target) {
                continue;
            }
            let crossings = b.iter().filter(|&&v| v > b[j] && v < target).count();
            let mut nb = b.clone();
            nb[j] = target;
            let scaled = if crossings % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(from_beta(nb), &scaled);
        }
    }
    out
}

/// The adjoint of [`pmul`]: remove border strips of size `k`.
pub fn pperp(f: &SymFunc, k: u32) -> SymFunc {
    assert!(k >= 1, "p_0 is not a generator");
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        let rows = lam.len();
        let b = beta(lam, rows);
        for j in 0..rows {
            let target = b[j] - k as i64;
            if target < 0 || b.contains(&target) {
                continue;
            }
            let crossings = b.iter().filter(|&&v| v > target && v < b[j]).count();
            let mut nb = b.clone();
            nb[j] = target;
            let scaled = if crossings % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(from_beta(nb), &scaled);
        }
    }
    out
}
