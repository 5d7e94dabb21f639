//! The Schur-basis ring operations: Pieri rules, Littlewood-Richardson
//! multiplication, skewing, and straightening of integer Jacobi-Trudi
//! indices.
//!
//! Multiplication and skewing run through determinantal expansions into
//! complete-homogeneous or elementary chains followed by iterated Pieri
//! steps.  The orientation (rows vs columns) is picked per partition so the
//! determinant stays small.  Straightening applies the adjacent exchange
//! `s_{(…,a,b,…)} = −s_{(…,b−1,a+1,…)}` as bubble passes; the two routes are
//! tested against each other.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cache::Cache;
use crate::partition::Partition;
use crate::symfunc::SymFunc;

/// Straightens an integer Schur index to `±s_λ` or zero.
///
/// Repeatedly applies `s_{(…,a,b,…)} = −s_{(…,b−1,a+1,…)}` to adjacent
/// entries until the sequence is weakly decreasing; a fixed point of the
/// exchange (`b = a + 1`) or a negative final part collapses to zero
/// (`None`).  Trailing zero parts are dropped.
pub fn straighten(seq: &[i64]) -> Option<(i32, Partition)> {
    let mut v = seq.to_vec();
    let mut sign = 1i32;
    let n = v.len();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if v[i] >= v[i + 1] {
                continue;
            }
            if v[i] + 1 == v[i + 1] {
                // The exchange maps the pair to itself, so s = −s = 0.
                return None;
            }
            let (a, b) = (v[i], v[i + 1]);
            v[i] = b - 1;
            v[i + 1] = a + 1;
            sign = -sign;
            swapped = true;
        }
        if !swapped {
            break;
        }
    }
    while v.last() == Some(&0) {
        v.pop();
    }
    if v.last().is_some_and(|&p| p < 0) {
        return None;
    }
    let parts: Vec<u32> = v.iter().map(|&p| p as u32).collect();
    Some((sign, Partition::from_decreasing(parts)))
}

/// The Schur function of an arbitrary integer index, via the determinantal
/// expansion into complete-homogeneous chains.
///
/// Agrees with [`straighten`] on every input; the two are implemented
/// independently and cross-checked.
pub fn jacobi_trudi(seq: &[i64]) -> SymFunc {
    let n = seq.len();
    if n == 0 {
        return SymFunc::one();
    }
    let mut out = SymFunc::zero();
    for_each_signed_permutation(n, |perm, sign| {
        // Entry (i, j) of the determinant is h_{seq[i] − i + j} (0-indexed
        // offsets cancel).  Collect the h-indices of this permutation term.
        let mut indices = Vec::with_capacity(n);
        for (i, &j) in perm.iter().enumerate() {
            let idx = seq[i] - i as i64 + j as i64;
            if idx < 0 {
                return; // h at a negative index is zero
            }
            if idx > 0 {
                indices.push(idx as u32);
            }
        }
        let mut term = SymFunc::one();
        for &m in &indices {
            term = hmul(&term, m);
        }
        out += &term.scale_int(&BigInt::from(sign));
    });
    out
}

/// Calls `f` with every permutation of `0..n` and its sign.
fn for_each_signed_permutation(n: usize, mut f: impl FnMut(&[usize], i64)) {
    let mut perm: Vec<usize> = (0..n).collect();
    // Iterative Heap's algorithm; every step is one transposition, so the
    // sign just alternates per emission within the orbit.
    let mut c = alloc::vec![0usize; n];
    let mut sign = 1i64;
    f(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of size `m`.
fn horizontal_adds(lam: &Partition, m: u32) -> Vec<Partition> {
    let rows = lam.len() + 1;
    let mut out = Vec::new();
    let mut mu: Vec<u32> = Vec::with_capacity(rows);
    fn rec(lam: &Partition, i: usize, rows: usize, left: u32, mu: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == rows {
            if left == 0 {
                out.push(Partition::from_decreasing(mu.clone()));
            }
            return;
        }
        let lo = lam.part(i);
        // At most one new cell per column: row i of μ cannot pass the end of
        // row i−1 of λ.
        let hi = if i == 0 { lo + left } else { lam.part(i - 1).min(lo + left) };
        for v in lo..=hi {
            mu.push(v);
            rec(lam, i + 1, rows, left - (v - lo), mu, out);
            mu.pop();
        }
    }
    rec(lam, 0, rows, m, &mut mu, &mut out);
    out
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of size `m`.
fn horizontal_removals(lam: &Partition, m: u32) -> Vec<Partition> {
    let rows = lam.len();
    let mut out = Vec::new();
    let mut nu: Vec<u32> = Vec::with_capacity(rows);
    fn rec(lam: &Partition, i: usize, rows: usize, left: u32, nu: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == rows {
            if left == 0 {
                out.push(Partition::from_decreasing(nu.clone()));
            }
            return;
        }
        // λ_{i+1} ≤ ν_i ≤ λ_i keeps λ/ν one cell deep per column.
        let hi = lam.part(i);
        let lo = lam.part(i + 1).max(hi.saturating_sub(left));
        for v in lo..=hi {
            nu.push(v);
            rec(lam, i + 1, rows, left - (hi - v), nu, out);
            nu.pop();
        }
    }
    rec(lam, 0, rows, m, &mut nu, &mut out);
    out
}

/// Multiplication by `h_m` (Pieri rule: add a horizontal `m`-strip).
pub fn hmul(f: &SymFunc, m: u32) -> SymFunc {
    if m == 0 {
        return f.clone();
    }
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        for mu in horizontal_adds(lam, m) {
            out.add_term(mu, c);
        }
    }
    out
}

/// Multiplication by `e_m` (add a vertical `m`-strip).
pub fn emul(f: &SymFunc, m: u32) -> SymFunc {
    if m == 0 {
        return f.clone();
    }
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        for mu in horizontal_adds(&lam.conjugate(), m) {
            out.add_term(mu.conjugate(), c);
        }
    }
    out
}

/// The skewing operator `h_m^⊥` (remove a horizontal `m`-strip).
pub fn hperp(f: &SymFunc, m: u32) -> SymFunc {
    if m == 0 {
        return f.clone();
    }
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        for nu in horizontal_removals(lam, m) {
            out.add_term(nu, c);
        }
    }
    out
}

/// The skewing operator `e_m^⊥` (remove a vertical `m`-strip).
pub fn eperp(f: &SymFunc, m: u32) -> SymFunc {
    if m == 0 {
        return f.clone();
    }
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        for nu in horizontal_removals(&lam.conjugate(), m) {
            out.add_term(nu.conjugate(), c);
        }
    }
    out
}

/// Which generator family a determinantal expansion is phrased in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ChainKind {
    H,
    E,
}

/// Signed generator multisets expanding `s_μ` as `Σ c · g_{a_1} g_{a_2} …`
/// with `g = h` or `g = e`.
///
/// The orientation is chosen so the determinant has dimension
/// `min(ℓ(μ), μ_1)`; the coefficients are the signed permutation counts
/// after merging.
pub(crate) fn jt_chains(mu: &Partition) -> (ChainKind, Vec<(i64, Vec<u32>)>)
{
    static CHAINS: Cache<Partition, (ChainKind, Vec<(i64, Vec<u32>)>)> = Cache::new();
    CHAINS.get_or_insert_with(mu, || {
        let (kind, index) = if mu.len() as u32 <= mu.part(0) {
            (ChainKind::H, mu.clone())
        } else {
            (ChainKind::E, mu.conjugate())
        };
        (kind, jt_expand(&index))
    })
}

/// Expands `det(g_{μ_i − i + j})` over permutations and merges equal
/// generator multisets.
fn jt_expand(mu: &Partition) -> Vec<(i64, Vec<u32>)> {
    use alloc::collections::BTreeMap;
    let n = mu.len();
    let mut merged: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for_each_signed_permutation(n, |perm, sign| {
        let mut indices = Vec::with_capacity(n);
        for (i, &j) in perm.iter().enumerate() {
            let idx = mu.part(i) as i64 - i as i64 + j as i64;
            if idx < 0 {
                return;
            }
            if idx > 0 {
                indices.push(idx as u32);
            }
        }
        indices.sort_unstable_by(|a, b| b.cmp(a));
        *merged.entry(indices).or_insert(0) += sign;
    });
    merged.into_iter().filter(|&(_, c)| c != 0).map(|(idx, c)| (c, idx)).collect()
}

/// `s_λ · s_μ` with caching; the basis case of [`mult`].
pub(crate) fn mult_basis(a: &Partition, b: &Partition) -> SymFunc {
    static MULT: Cache<(Partition, Partition), SymFunc> = Cache::new();
    // The product is symmetric; normalize the key order.
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    MULT.get_or_insert_with(&key, || {
        // Expand whichever factor has the smaller determinant.
        let da = key.0.len().min(key.0.part(0) as usize);
        let db = key.1.len().min(key.1.part(0) as usize);
        let (start, expand) = if da <= db { (&key.1, &key.0) } else { (&key.0, &key.1) };
        let (kind, chains) = jt_chains(expand);
        let mut out = SymFunc::zero();
        for (coef, indices) in chains {
            let mut term = SymFunc::schur(start.clone());
            for &m in &indices {
                term = match kind {
                    ChainKind::H => hmul(&term, m),
                    ChainKind::E => emul(&term, m),
                };
            }
            out += &term.scale_int(&BigInt::from(coef));
        }
        out
    })
}

/// Bilinear product of Schur expansions (Littlewood-Richardson rule).
pub fn mult(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lam, c) in f.terms() {
        for (mu, d) in g.terms() {
            out += &mult_basis(lam, mu).scale(&(c * d));
        }
    }
    out
}

/// The skew Schur function `s_{outer/inner}` expanded in straight shapes;
/// zero when `inner ⊄ outer`.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> SymFunc {
    static SKEW: Cache<(Partition, Partition), SymFunc> = Cache::new();
    if !outer.contains(inner) {
        return SymFunc::zero();
    }
    if inner.is_empty() {
        return SymFunc::schur(outer.clone());
    }
    let key = (outer.clone(), inner.clone());
    SKEW.get_or_insert_with(&key, || {
        let (kind, chains) = jt_chains(inner);
        let mut out = SymFunc::zero();
        for (coef, indices) in chains {
            let mut term = SymFunc::schur(outer.clone());
            for &m in &indices {
                term = match kind {
                    ChainKind::H => hperp(&term, m),
                    ChainKind::E => eperp(&term, m),
                };
            }
            out += &term.scale_int(&BigInt::from(coef));
        }
        out
    })
}

/// The skewing operator `f^⊥ g`, the adjoint of multiplication by `f` under
/// the Hall inner product.
pub fn perp(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in f.terms() {
        for (nu, d) in g.terms() {
            out += &skew_schur(nu, mu).scale(&(c * d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::QPoly;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn straighten_frozen_values() {
        assert_eq!(straighten(&[]), Some((1, Partition::empty())));
        assert_eq!(straighten(&[2, 1]), Some((1, p(&[2, 1]))));
        assert_eq!(straighten(&[1, 3]), Some((-1, p(&[2, 2]))));
        assert_eq!(straighten(&[1, 2]), None);
        assert_eq!(straighten(&[2, 3]), None);
        assert_eq!(straighten(&[0, 3]), Some((-1, p(&[2, 1]))));
        assert_eq!(straighten(&[0, 2, 1]), Some((-1, p(&[1, 1, 1]))));
        assert_eq!(straighten(&[3, 0]), Some((1, p(&[3]))));
        assert_eq!(straighten(&[0]), Some((1, Partition::empty())));
        assert_eq!(straighten(&[-1]), None);
        assert_eq!(straighten(&[3, -1]), None);
        assert_eq!(straighten(&[3, 0, 2]), Some((-1, p(&[3, 1, 1]))));
        // Prepending m to a partition: the operator calculus depends on it.
        assert_eq!(straighten(&[1, 1]), Some((1, p(&[1, 1]))));
        assert_eq!(straighten(&[0, 1]), None);
    }

    #[test]
    fn jacobi_trudi_frozen_values() {
        assert_eq!(jacobi_trudi(&[2, 1]), s(&[2, 1]));
        assert_eq!(jacobi_trudi(&[1, 2]), SymFunc::zero());
        assert_eq!(jacobi_trudi(&[0, 3]), -&s(&[2, 1]));
        assert_eq!(jacobi_trudi(&[0, 2, 1]), -&s(&[1, 1, 1]));
        assert_eq!(jacobi_trudi(&[]), SymFunc::one());
        assert_eq!(jacobi_trudi(&[4]), s(&[4]));
    }

    #[test]
    fn straighten_matches_jacobi_trudi_on_small_windows() {
        for a in -1..=3i64 {
            for b in -1..=3i64 {
                for c in -1..=3i64 {
                    let seq = [a, b, c];
                    let via_det = jacobi_trudi(&seq);
                    let via_rule = match straighten(&seq) {
                        None => SymFunc::zero(),
                        Some((sign, lam)) => SymFunc::schur(lam).scale_int(&BigInt::from(sign)),
                    };
                    assert_eq!(via_det, via_rule, "seq {seq:?}");
                }
            }
        }
    }

    #[test]
    fn pieri_rules() {
        assert_eq!(hmul(&SymFunc::one(), 3), s(&[3]));
        assert_eq!(hmul(&s(&[1]), 1), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(
            hmul(&s(&[2, 1]), 2),
            [&s(&[4, 1]), &s(&[3, 2]), &s(&[3, 1, 1]), &s(&[2, 2, 1])]
                .into_iter()
                .cloned()
                .sum()
        );
        assert_eq!(emul(&SymFunc::one(), 3), s(&[1, 1, 1]));
        assert_eq!(emul(&s(&[2]), 2), &s(&[3, 1]) + &s(&[2, 1, 1]));
        assert_eq!(hperp(&s(&[2, 1]), 1), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(hperp(&s(&[2, 1]), 3), SymFunc::zero());
        assert_eq!(eperp(&s(&[2, 1]), 2), s(&[1]));
        assert_eq!(eperp(&s(&[3]), 2), SymFunc::zero());
    }

    #[test]
    fn multiplication_basics() {
        assert_eq!(mult(&s(&[1]), &s(&[1])), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(mult(&s(&[2, 1]), &SymFunc::one()), s(&[2, 1]));
        // s_{21}² has Littlewood-Richardson coefficient 2 at (3,2,1).
        let sq = mult(&s(&[2, 1]), &s(&[2, 1]));
        assert_eq!(sq.coeff(&p(&[3, 2, 1])), QPoly::from(2));
        let expected: SymFunc = [
            (&[4, 2][..], 1),
            (&[4, 1, 1][..], 1),
            (&[3, 3][..], 1),
            (&[3, 2, 1][..], 2),
            (&[3, 1, 1, 1][..], 1),
            (&[2, 2, 2][..], 1),
            (&[2, 2, 1, 1][..], 1),
        ]
        .into_iter()
        .map(|(parts, c)| s(parts).scale_int(&BigInt::from(c)))
        .sum();
        assert_eq!(sq, expected);
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew_schur(&p(&[2, 1]), &Partition::empty()), s(&[2, 1]));
        assert_eq!(skew_schur(&p(&[2, 1]), &p(&[1])), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(skew_schur(&p(&[1]), &p(&[2])), SymFunc::zero());
        // A tall inner shape takes the elementary orientation.
        assert_eq!(skew_schur(&p(&[2, 2, 2]), &p(&[1, 1])), s(&[2, 1, 1]));
    }

    #[test]
    fn perp_is_adjoint_to_mult() {
        let f = &s(&[2, 1]) + &s(&[3]);
        let g = &s(&[4, 2]) + &s(&[3, 2, 1]);
        let h = &s(&[2, 2]) + &s(&[1, 1, 1]);
        // ⟨f^⊥ g, h⟩ = ⟨g, f·h⟩.
        assert_eq!(
            perp(&f, &g).hall_inner(&h),
            g.hall_inner(&mult(&f, &h))
        );
        assert_eq!(perp(&SymFunc::one(), &g), g);
    }

    #[test]
    fn tall_shapes_use_the_elementary_orientation() {
        let (kind, chains) = jt_chains(&p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(kind, ChainKind::E);
        assert_eq!(chains, alloc::vec![(1, alloc::vec![6u32])]);
        let (kind, _) = jt_chains(&p(&[6]));
        assert_eq!(kind, ChainKind::H);
    }
}
