//! The `q`-deformed basis built from row-operator chains, and its
//! Schur-transition polynomials.
//!
//! For a partition `lambda` the basis element can be produced two ways:
//!
//! * **Rows** — apply `H[lambda_1] . H[lambda_2] . ... . H[lambda_l]` to `1`,
//!   the smallest part acting first;
//! * **Columns** — apply `Hcol[mu_1] . ... . Hcol[mu_r]` to `1` where `mu` is
//!   the conjugate of `lambda`, the shortest column acting first.
//!
//! The two routes agree (the `rows-columns` suite sweeps this), and the
//! Schur coefficients of the result are polynomials in `q` with constant
//! term `delta_{lambda,mu}` at `q = 0` and the complete homogeneous
//! transition numbers at `q = 1`.

use alloc::vec::Vec;

use crate::cache::Cache;
use crate::ops::{hcol, jing_row, HcolMode};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::symfunc::SymFunc;

/// Which operator chain realises the basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HlRoute {
    Rows,
    Columns,
}

static HL_CACHE: Cache<(HlRoute, Partition), SymFunc> = Cache::new();

/// Builds the basis element of `lambda` through the requested chain.
pub fn hl_build(lambda: &Partition, route: HlRoute) -> SymFunc {
    let key = (route, lambda.clone());
    HL_CACHE.get_or_insert_with(&key, || match route {
        HlRoute::Rows => {
            let mut f = SymFunc::one();
            for &m in lambda.parts().iter().rev() {
                f = jing_row(m as i64).apply(&f);
            }
            f
        }
        HlRoute::Columns => {
            let cols = lambda.conjugate();
            let mut f = SymFunc::one();
            for &k in cols.parts().iter().rev() {
                f = hcol(k, HcolMode::Sum).apply(&f);
            }
            f
        }
    })
}

/// The transition polynomial: the coefficient of `s_mu` in the basis
/// element of `lambda`.  Zero whenever `|lambda| != |mu|`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> QPoly {
    if lambda.size() != mu.size() {
        return QPoly::zero();
    }
    hl_build(lambda, HlRoute::Rows).coeff(mu)
}

/// The full row of transition polynomials for `lambda`, over every `mu` of
/// the same size in canonical order.  Zero entries are included so callers
/// can rely on the row being complete.
pub fn kostka_table(lambda: &Partition) -> Vec<(Partition, QPoly)> {
    let f = hl_build(lambda, HlRoute::Rows);
    Partition::all_of_size(lambda.size())
        .into_iter()
        .map(|mu| {
            let c = f.coeff(&mu);
            (mu, c)
        })
        .collect()
}
