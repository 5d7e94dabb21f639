//! Independent combinatorial oracles.
//!
//! Everything in this module counts explicit tableau-like objects with plain
//! backtracking; nothing here touches the operator algebra or the
//! determinantal expansions.  The verification suites play these counts
//! against the algebraic routes, so the two sides must not share code.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::ribbon::Ribbon;
use crate::schur::skew_schur;
use crate::symfunc::SymFunc;

/// All permutations of `{1, ..., k}` in one-line notation.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    fn heap(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            heap(n - 1, cur, out);
            if n % 2 == 0 {
                cur.swap(i, n - 1);
            } else {
                cur.swap(0, n - 1);
            }
        }
    }
    heap(k, &mut cur, &mut out);
    out
}

/// All involutions of `{1, ..., k}` (permutations equal to their own
/// inverse).
pub fn involutions(k: usize) -> Vec<Vec<usize>> {
    permutations(k)
        .into_iter()
        .filter(|w| w.iter().enumerate().all(|(i, &wi)| w[wi - 1] == i + 1))
        .collect()
}

/// The shape of the insertion tableau of `w` under row insertion.
pub fn rsk_shape(w: &[usize]) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in w {
        let mut cur = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > cur) {
                Some(j) => core::mem::swap(&mut row[j], &mut cur),
                None => {
                    row.push(cur);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![cur]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<u32>>())
        .expect("row-insertion row lengths decrease weakly")
}

/// The major index: the sum of the descent positions of `w`.
pub fn maj(w: &[usize]) -> u32 {
    let mut total = 0;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            total += i as u32;
        }
    }
    total
}

/// The complementary major index `k(k-1)/2 - maj(w)`: the sum of the
/// non-descent positions.
pub fn comaj(w: &[usize]) -> u32 {
    let k = w.len() as u32;
    k * k.saturating_sub(1) / 2 - maj(w)
}

/// Candidate permutation statistics for the tableau-generating expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RskStatistic {
    Maj,
    Comaj,
}

/// Candidate populations for the tableau-generating expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RskPopulation {
    AllPermutations,
    Involutions,
}

/// A (statistic, population) pair defining one candidate expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RskChoice {
    pub statistic: RskStatistic,
    pub population: RskPopulation,
}

/// The ribbon route to `Hcol[k]` applied to `1`: every ribbon of size `k`
/// contributes its skew Schur function weighted by `q` to the ribbon's
/// complementary major index.
pub fn h1k_by_ribbons(k: u32) -> SymFunc {
    let mut out = SymFunc::zero();
    for r in Ribbon::enumerate(k).expect("k >= 1") {
        let (outer, inner) = r.shape();
        out += &skew_schur(&outer, &inner).scale(&QPoly::q_pow(r.comaj()));
    }
    out
}

/// The permutation route: sum `q^stat(w) * s_shape(w)` over the chosen
/// population of words of length `k`.
pub fn h1k_by_rsk(k: u32, choice: &RskChoice) -> SymFunc {
    let pop = match choice.population {
        RskPopulation::AllPermutations => permutations(k as usize),
        RskPopulation::Involutions => involutions(k as usize),
    };
    let mut out = SymFunc::zero();
    for w in pop {
        let stat = match choice.statistic {
            RskStatistic::Maj => maj(&w),
            RskStatistic::Comaj => comaj(&w),
        };
        out += &SymFunc::schur_term(rsk_shape(&w), QPoly::q_pow(stat));
    }
    out
}

/// Adjudicates which (statistic, population) pair reproduces the ribbon
/// route, by exhaustive comparison at sizes 3 and 4.  Exactly one candidate
/// survives: the complementary major index summed over involutions.
pub fn select_rsk_statistic() -> RskChoice {
    let statistics = [RskStatistic::Maj, RskStatistic::Comaj];
    let populations = [RskPopulation::AllPermutations, RskPopulation::Involutions];
    let mut winner = None;
    for statistic in statistics {
        for population in populations {
            let choice = RskChoice { statistic, population };
            if (3..=4).all(|k| h1k_by_rsk(k, &choice) == h1k_by_ribbons(k)) {
                assert!(winner.is_none(), "ambiguous statistic selection");
                winner = Some(choice);
            }
        }
    }
    winner.expect("one candidate matches the ribbon route")
}

/// Counts semistandard tableaux of the given shape and content by direct
/// enumeration: rows weakly increase, columns strictly increase, and entry
/// `i` appears `weight_i` times.
pub fn ssyt_count(shape: &Partition, weight: &Partition) -> u64 {
    if shape.size() != weight.size() {
        return 0;
    }
    if shape.is_empty() {
        return 1;
    }
    let rows = shape.len();
    let mut grid = vec![vec![0u32; shape.part(0) as usize]; rows];
    let mut remaining: Vec<u32> = weight.parts().to_vec();
    fn fill(
        shape: &Partition,
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        r: usize,
        c: usize,
    ) -> u64 {
        if r == shape.len() {
            return 1;
        }
        let (nr, nc) = if c + 1 < shape.part(r) as usize { (r, c + 1) } else { (r + 1, 0) };
        let lo = {
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            let above = if r > 0 && c < shape.part(r - 1) as usize { grid[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        let mut total = 0;
        for v in lo..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            grid[r][c] = v;
            total += fill(shape, grid, remaining, nr, nc);
            remaining[v as usize - 1] += 1;
        }
        total
    }
    fill(shape, &mut grid, &mut remaining, 0, 0)
}

/// Counts standard tableaux of the given shape by the hook length formula.
pub fn syt_count(shape: &Partition) -> u64 {
    if shape.is_empty() {
        return 1;
    }
    let mut num = BigInt::one();
    for i in 2..=u64::from(shape.size()) {
        num *= i;
    }
    let conj = shape.conjugate();
    let mut den = BigInt::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len as usize {
            let arm = len as i64 - c as i64 - 1;
            let leg = conj.part(c) as i64 - r as i64 - 1;
            den *= arm + leg + 1;
        }
    }
    (num / den).to_u64().expect("hook quotient fits in u64 at desk scale")
}

/// Counts Littlewood-Richardson fillings: semistandard tableaux of shape
/// `nu/lam` and content `mu` whose reverse reading word (right to left, top
/// to bottom) is a ballot sequence.
pub fn lr_enumerate(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lam.size() + mu.size() || !nu.contains(lam) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let rows = nu.len();
    let mut grid = vec![vec![0u32; nu.part(0) as usize]; rows];
    let mut counts = vec![0u32; mu.len()];
    // Fill rows top to bottom and each row right to left, which is exactly
    // the reverse reading order, so the ballot condition can be enforced as
    // each entry is placed.
    fn fill(
        lam: &Partition,
        mu: &Partition,
        nu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        r: usize,
        c_back: usize,
    ) -> u64 {
        if r == nu.len() {
            return 1;
        }
        let lo = lam.part(r) as usize;
        let hi = nu.part(r) as usize;
        if lo + c_back >= hi {
            return fill(lam, mu, nu, grid, counts, r + 1, 0);
        }
        let c = hi - 1 - c_back;
        let (nr, nc) = (r, c_back + 1);
        let mut total = 0;
        for v in 1..=mu.len() as u32 {
            if counts[v as usize - 1] >= mu.part(v as usize - 1) {
                continue;
            }
            // Ballot: each prefix of the reverse reading word must contain
            // at least as many (v-1)s as vs.
            if v > 1 && counts[v as usize - 2] <= counts[v as usize - 1] {
                continue;
            }
            // Row entries weakly increase left to right.
            if c + 1 < hi && grid[r][c + 1] < v {
                continue;
            }
            // Column entries strictly increase top to bottom.
            if r > 0 && c >= lam.part(r - 1) as usize && c < nu.part(r - 1) as usize && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            counts[v as usize - 1] += 1;
            total += fill(lam, mu, nu, grid, counts, nr, nc);
            counts[v as usize - 1] -= 1;
        }
        total
    }
    fill(lam, mu, nu, &mut grid, &mut counts, 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(involutions(3).len(), 4);
        assert_eq!(involutions(4).len(), 10);
        assert_eq!(involutions(5).len(), 26);
    }

    #[test]
    fn insertion_shapes() {
        assert_eq!(rsk_shape(&[2, 1, 3]), p(&[2, 1]));
        assert_eq!(rsk_shape(&[1, 2, 3, 4]), p(&[4]));
        assert_eq!(rsk_shape(&[4, 3, 2, 1]), p(&[1, 1, 1, 1]));
        assert_eq!(rsk_shape(&[3, 1, 4, 2]), p(&[2, 2]));
    }

    #[test]
    fn shapes_square_to_factorial() {
        for k in 1..=5u32 {
            let total: u64 = Partition::all_of_size(k).iter().map(|l| syt_count(l).pow(2)).sum();
            let factorial: u64 = (1..=u64::from(k)).product();
            assert_eq!(total, factorial);
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(maj(&[2, 1]), 1);
        assert_eq!(comaj(&[2, 1]), 0);
        assert_eq!(maj(&[1, 2, 3]), 0);
        assert_eq!(comaj(&[1, 2, 3]), 3);
        assert_eq!(comaj(&[1]), 0);
    }

    #[test]
    fn ribbon_route_values() {
        assert_eq!(h1k_by_ribbons(1), s(&[1]));
        assert_eq!(h1k_by_ribbons(2), &s(&[1, 1]) + &s(&[2]).scale(&QPoly::q()));
        let mut expected = s(&[1, 1, 1]);
        expected += &s(&[2, 1]).scale(&(QPoly::q() + QPoly::q_pow(2)));
        expected += &s(&[3]).scale(&QPoly::q_pow(3));
        assert_eq!(h1k_by_ribbons(3), expected);
    }

    #[test]
    fn statistic_selection() {
        let choice = select_rsk_statistic();
        assert_eq!(choice.statistic, RskStatistic::Comaj);
        assert_eq!(choice.population, RskPopulation::Involutions);
        for k in 1..=5u32 {
            assert_eq!(h1k_by_rsk(k, &choice), h1k_by_ribbons(k), "k = {}", k);
        }
    }

    #[test]
    fn q_one_specialisation_counts_standard_tableaux() {
        let choice = select_rsk_statistic();
        let one = BigInt::one();
        for k in 1..=5u32 {
            let at_one = h1k_by_rsk(k, &choice).substitute_q(&one);
            for lam in Partition::all_of_size(k) {
                assert_eq!(at_one.coeff(&lam).coeff(0), BigInt::from(syt_count(&lam)));
            }
        }
    }

    #[test]
    fn semistandard_counts() {
        assert_eq!(ssyt_count(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(ssyt_count(&p(&[3]), &p(&[1, 1, 1])), 1);
        assert_eq!(ssyt_count(&p(&[2, 2]), &p(&[2, 1, 1])), 1);
        assert_eq!(ssyt_count(&p(&[3, 2, 1]), &p(&[3, 2, 1])), 1);
        assert_eq!(ssyt_count(&p(&[2, 1]), &p(&[3])), 0);
        assert_eq!(ssyt_count(&p(&[1, 1, 1]), &p(&[2, 1])), 0);
        for lam in Partition::all_up_to(5) {
            assert_eq!(ssyt_count(&lam, &lam), 1);
        }
    }

    #[test]
    fn standard_counts() {
        assert_eq!(syt_count(&p(&[2, 1])), 2);
        assert_eq!(syt_count(&p(&[2, 2])), 2);
        assert_eq!(syt_count(&p(&[3, 2])), 5);
        assert_eq!(syt_count(&p(&[5])), 1);
        assert_eq!(syt_count(&Partition::empty()), 1);
    }

    #[test]
    fn littlewood_richardson_counts() {
        assert_eq!(lr_enumerate(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_enumerate(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_enumerate(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_enumerate(&p(&[2]), &p(&[2]), &p(&[3, 1])), 1);
        assert_eq!(lr_enumerate(&p(&[2]), &p(&[2]), &p(&[2, 2])), 1);
        assert_eq!(lr_enumerate(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(lr_enumerate(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn littlewood_richardson_matches_multiplication() {
        use crate::schur::mult;
        for a in Partition::all_up_to(3) {
            for b in Partition::all_up_to(3) {
                let product = mult(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone()));
                for nu in Partition::all_of_size(a.size() + b.size()) {
                    let coeff = product.coeff(&nu).coeff(0);
                    assert_eq!(
                        coeff,
                        BigInt::from(lr_enumerate(&a, &b, &nu)),
                        "{} * {} at {}",
                        a,
                        b,
                        nu
                    );
                }
            }
        }
    }
}
