//! Named verification suites.
//!
//! Each suite sweeps one operator identity over a bounded window of inputs
//! and reports every disagreement with both sides fully printed.  Cases are
//! pure and independently runnable, so callers may execute them in parallel
//! and merge reports in case order.
//!
//! The default bounds are the ones the acceptance checks use; every suite
//! finishes in seconds to minutes at those sizes.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bases::h_to_schur;
use crate::error::Error;
use crate::hall::{hl_build, kostka_foulkes, HlRoute};
use crate::ops::{
    add, bernstein_col, bernstein_row, bernstein_row_series, compose, hat, hcol, identity,
    jing_row, k_level_equal, mul_by, omega_conj, perp_by, ribbon_op, scale, HcolMode, LinearOp,
};
use crate::oracle::{h1k_by_ribbons, h1k_by_rsk, lr_enumerate, select_rsk_statistic, ssyt_count};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::ribbon::Ribbon;
use crate::schur::{hmul, jacobi_trudi, mult};
use crate::symfunc::SymFunc;

/// Parameter bounds for a suite run.  `window` bounds the series indices in
/// the generating-function suite and is ignored elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteBounds {
    pub max_m: i64,
    pub max_k: u32,
    pub max_size: u32,
    pub window: Option<u32>,
}

/// Registry entry describing one suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
    pub default_bounds: SuiteBounds,
}

/// One disagreement: the identity instance, the inputs, and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub identity: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// A single runnable check.  Cases are pure: running one twice gives the
/// same outcome, and distinct cases share nothing but the global memo
/// tables.
pub struct SuiteCase {
    id: String,
    run: Box<dyn Fn() -> Option<Failure> + Send + Sync>,
}

impl SuiteCase {
    fn new(id: String, run: impl Fn() -> Option<Failure> + Send + Sync + 'static) -> Self {
        SuiteCase { id, run: Box::new(run) }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Runs the check; `None` means the identity held on this input.
    pub fn run(&self) -> Option<Failure> {
        (self.run)()
    }
}

/// Outcome of a whole suite run.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub suite: String,
    pub bounds: SuiteBounds,
    pub cases: u64,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All registered suites with their default bounds.
pub fn suites() -> Vec<SuiteInfo> {
    let b = |max_m: i64, max_k: u32, max_size: u32| SuiteBounds {
        max_m,
        max_k,
        max_size,
        window: None,
    };
    let mut list = Vec::new();
    list.push(SuiteInfo {
        name: "theorem1",
        description: "H[m+1] . Hcol[k] agrees with Hcol[k+1] . H[m] on Schur functions with at most k rows",
        default_bounds: b(5, 4, 6),
    });
    list.push(SuiteInfo {
        name: "lemma9",
        description: "q^(k-1)*Hcol[k] . St[2] equals hat(hat(Hcol[k]) . S[2]) for k >= 2",
        default_bounds: b(0, 3, 5),
    });
    list.push(SuiteInfo {
        name: "gf-commutation",
        description: "coefficient exchange laws: H[m] . St[l] = q*St[l] . H[m] + St[l+1] . H[m-1] for l >= 1, and H[m] . mul(h_l) = sum_j c_j mul(h_(l-j)) . H[m+j] with c_0 = 1, c_j = q^j - q^(j-1)",
        default_bounds: SuiteBounds { max_m: 3, max_k: 3, max_size: 4, window: Some(3) },
    });
    list.push(SuiteInfo {
        name: "column-chain",
        description: "Hcol[k] sends the deformed basis element of lambda to that of lambda plus a column of height k, for lambda with exactly k rows",
        default_bounds: b(0, 3, 5),
    });
    list.push(SuiteInfo {
        name: "rows-columns",
        description: "the row chain and the column chain build the same deformed basis element",
        default_bounds: b(0, 0, 7),
    });
    list.push(SuiteInfo {
        name: "hat-involution",
        description: "hat(hat(V)) = V for rows, columns, the one-parameter row operator, and ribbon operators",
        default_bounds: b(0, 3, 6),
    });
    list.push(SuiteInfo {
        name: "ribbon-extend-right",
        description: "R . St[1] equals the operator of the ribbon with one more cell in its bottom row",
        default_bounds: b(0, 4, 5),
    });
    list.push(SuiteInfo {
        name: "ribbon-extend-below",
        description: "hat(hat(R) . S[1]) equals the operator of the ribbon with a new single-cell row below",
        default_bounds: b(0, 4, 5),
    });
    list.push(SuiteInfo {
        name: "hat-row-column",
        description: "hat(V . S[m]) = sum_j (-1)^(m-j) mul(h_j) . hat(V) . St[m-j]",
        default_bounds: b(2, 0, 5),
    });
    list.push(SuiteInfo {
        name: "hat-skew-row",
        description: "hat(hat(perp(s_lambda)) . S[-m]) = perp of the determinantal function indexed by (m, lambda)",
        default_bounds: b(3, 0, 6),
    });
    list.push(SuiteInfo {
        name: "ribbon-complement",
        description: "omegaConj(hat(R)) agrees with the operator of the complementary ribbon on Schur functions with at most k rows",
        default_bounds: b(0, 3, 6),
    });
    list.push(SuiteInfo {
        name: "stilde-commutation",
        description: "St[a] . St[b] = -St[b-1] . St[a+1]; in particular St[a] . St[a+1] = 0",
        default_bounds: b(0, 3, 5),
    });
    list.push(SuiteInfo {
        name: "hcol-recursion",
        description: "the ribbon-sum and one-cell-recursion constructions of Hcol[k] agree",
        default_bounds: b(0, 4, 5),
    });
    list.push(SuiteInfo {
        name: "row-column-expansion",
        description: "the four-term expansion of H[m+1] . Hcol[k] and its two bracket reductions",
        default_bounds: b(2, 3, 5),
    });
    list.push(SuiteInfo {
        name: "bernstein-routes",
        description: "the triangular and series routes to S[m] agree, and St[m] = omegaConj(S[m])",
        default_bounds: b(4, 0, 6),
    });
    list.push(SuiteInfo {
        name: "jing-specialization",
        description: "H[m] at q = 0 is S[m]; at q = 1 it is multiplication by h_m",
        default_bounds: b(4, 0, 6),
    });
    list.push(SuiteInfo {
        name: "oracle-agreement",
        description: "Hcol[k](1) matches both combinatorial references, and Schur multiplication matches tableau enumeration",
        default_bounds: b(0, 6, 5),
    });
    list.push(SuiteInfo {
        name: "hl-specialization",
        description: "specialisations and triangularity of the transition polynomials",
        default_bounds: b(0, 0, 6),
    });
    list
}

/// Looks up the default bounds for a suite by name.
pub fn default_bounds(name: &str) -> Result<SuiteBounds, Error> {
    suites()
        .iter()
        .find(|s| s.name == name)
        .map(|s| s.default_bounds)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Builds the case list for a named suite at the given bounds.  Case order
/// is deterministic.
pub fn suite_cases(name: &str, bounds: &SuiteBounds) -> Result<Vec<SuiteCase>, Error> {
    match name {
        "theorem1" => Ok(theorem1_cases(bounds)),
        "lemma9" => Ok(lemma9_cases(bounds)),
        "gf-commutation" => Ok(gf_commutation_cases(bounds)),
        "column-chain" => Ok(column_chain_cases(bounds)),
        "rows-columns" => Ok(rows_columns_cases(bounds)),
        "hat-involution" => Ok(hat_involution_cases(bounds)),
        "ribbon-extend-right" => Ok(ribbon_extend_cases(bounds, Extend::Right)),
        "ribbon-extend-below" => Ok(ribbon_extend_cases(bounds, Extend::Below)),
        "hat-row-column" => Ok(hat_row_column_cases(bounds)),
        "hat-skew-row" => Ok(hat_skew_row_cases(bounds)),
        "ribbon-complement" => Ok(ribbon_complement_cases(bounds)),
        "stilde-commutation" => Ok(stilde_commutation_cases(bounds)),
        "hcol-recursion" => Ok(hcol_recursion_cases(bounds)),
        "row-column-expansion" => Ok(row_column_expansion_cases(bounds)),
        "bernstein-routes" => Ok(bernstein_routes_cases(bounds)),
        "jing-specialization" => Ok(jing_specialization_cases(bounds)),
        "oracle-agreement" => Ok(oracle_agreement_cases(bounds)),
        "hl-specialization" => Ok(hl_specialization_cases(bounds)),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

/// Runs a named suite sequentially and collects the report.
pub fn run_suite(name: &str, bounds: &SuiteBounds) -> Result<IdentityReport, Error> {
    let cases = suite_cases(name, bounds)?;
    let mut failures = Vec::new();
    for case in &cases {
        if let Some(f) = case.run() {
            failures.push(f);
        }
    }
    Ok(IdentityReport {
        suite: name.to_string(),
        bounds: *bounds,
        cases: cases.len() as u64,
        failures,
    })
}

fn lam_text(lam: &Partition) -> String {
    format!("[{}]", lam)
}

fn value_case(
    id: String,
    identity: String,
    inputs: String,
    f: impl Fn() -> (SymFunc, SymFunc) + Send + Sync + 'static,
) -> SuiteCase {
    SuiteCase::new(id, move || {
        let (l, r) = f();
        if l == r {
            None
        } else {
            Some(Failure {
                identity: identity.clone(),
                inputs: inputs.clone(),
                lhs: format!("{}", l),
                rhs: format!("{}", r),
            })
        }
    })
}

fn op_case(suite: &str, tag: &str, lhs: &LinearOp, rhs: &LinearOp, lam: &Partition) -> SuiteCase {
    let id = format!("{}/{}/lam={}", suite, tag, lam_text(lam));
    let identity = format!("{} = {}", lhs, rhs);
    let inputs = format!("lambda = {}", lam_text(lam));
    let lhs = lhs.clone();
    let rhs = rhs.clone();
    let lam = lam.clone();
    value_case(id, identity, inputs, move || {
        (lhs.apply_basis(&lam), rhs.apply_basis(&lam))
    })
}

fn theorem1_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for m in 0..=b.max_m {
        for k in 0..=b.max_k {
            let lhs = compose(&jing_row(m + 1), &hcol(k, HcolMode::Sum));
            let rhs = compose(&hcol(k + 1, HcolMode::Sum), &jing_row(m));
            for lam in Partition::all_up_to(b.max_size) {
                if lam.len() as u32 > k {
                    continue;
                }
                out.push(op_case("theorem1", &format!("m{}k{}", m, k), &lhs, &rhs, &lam));
            }
        }
    }
    out
}

fn lemma9_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for k in 2..=b.max_k {
        let h = hcol(k, HcolMode::Sum);
        let lhs = scale(&QPoly::q_pow(k - 1), &compose(&h, &bernstein_col(2)));
        let rhs = hat(&compose(&hat(&h), &bernstein_row(2)));
        for lam in Partition::all_up_to(b.max_size) {
            out.push(op_case("lemma9", &format!("k{}", k), &lhs, &rhs, &lam));
        }
    }
    out
}

fn h_sym(n: u32) -> SymFunc {
    SymFunc::schur(Partition::row(n))
}

fn gf_commutation_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let w = b.window.unwrap_or(3) as i64;
    let mut out = Vec::new();
    for m in 0..=w {
        // Exchange with the column operators; the l = 0 coefficient lies
        // outside the valid extraction region, so the sweep starts at 1.
        for l in 1..=w {
            let lhs = compose(&jing_row(m), &bernstein_col(l));
            let rhs = add(
                &scale(&QPoly::q(), &compose(&bernstein_col(l), &jing_row(m))),
                &compose(&bernstein_col(l + 1), &jing_row(m - 1)),
            )
            .expect("both sides shift by m + l");
            for lam in Partition::all_up_to(b.max_size) {
                out.push(op_case("gf-commutation", &format!("col/m{}l{}", m, l), &lhs, &rhs, &lam));
            }
        }
        // Exchange with multiplication by a complete homogeneous function.
        for l in 0..=w {
            let lhs = compose(&jing_row(m), &mul_by(&h_sym(l as u32)).expect("homogeneous"));
            let mut rhs = compose(&mul_by(&h_sym(l as u32)).expect("homogeneous"), &jing_row(m));
            for j in 1..=l {
                let c = QPoly::q_pow(j as u32) - QPoly::q_pow(j as u32 - 1);
                rhs = add(
                    &rhs,
                    &scale(
                        &c,
                        &compose(&mul_by(&h_sym((l - j) as u32)).expect("homogeneous"), &jing_row(m + j)),
                    ),
                )
                .expect("all summands shift by m + l");
            }
            for lam in Partition::all_up_to(b.max_size) {
                out.push(op_case("gf-commutation", &format!("mul/m{}l{}", m, l), &lhs, &rhs, &lam));
            }
        }
    }
    out
}

fn column_chain_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for k in 0..=b.max_k {
        let h = hcol(k, HcolMode::Sum);
        for lam in Partition::all_up_to(b.max_size) {
            if lam.len() as u32 != k {
                continue;
            }
            let grown = Partition::new(
                lam.parts().iter().map(|p| p + 1).collect::<Vec<u32>>(),
            )
            .expect("adding a column preserves partition shape");
            let id = format!("column-chain/k{}/lam={}", k, lam_text(&lam));
            let identity = format!("Hcol[{}] applied to the basis element of {} gives that of {}", k, lam_text(&lam), lam_text(&grown));
            let inputs = format!("lambda = {}", lam_text(&lam));
            let h = h.clone();
            out.push(value_case(id, identity, inputs, move || {
                (h.apply(&hl_build(&lam, HlRoute::Rows)), hl_build(&grown, HlRoute::Rows))
            }));
        }
    }
    out
}

fn rows_columns_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for lam in Partition::all_up_to(b.max_size) {
        let id = format!("rows-columns/lam={}", lam_text(&lam));
        let identity = String::from("row chain = column chain");
        let inputs = format!("lambda = {}", lam_text(&lam));
        out.push(value_case(id, identity, inputs, move || {
            (hl_build(&lam, HlRoute::Rows), hl_build(&lam, HlRoute::Columns))
        }));
    }
    out
}

fn hat_involution_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut ops: Vec<LinearOp> = Vec::new();
    ops.push(bernstein_row(1));
    ops.push(bernstein_row(2));
    ops.push(bernstein_col(2));
    ops.push(jing_row(2));
    for r in Ribbon::enumerate(3).expect("size 3") {
        ops.push(ribbon_op(&r));
    }
    let mut out = Vec::new();
    for v in &ops {
        let twice = hat(&hat(v));
        for lam in Partition::all_up_to(b.max_size) {
            out.push(op_case("hat-involution", &format!("{}", v), &twice, v, &lam));
        }
    }
    out
}

enum Extend {
    Right,
    Below,
}

fn ribbon_extend_cases(b: &SuiteBounds, how: Extend) -> Vec<SuiteCase> {
    let (suite, max_k) = match how {
        Extend::Right => ("ribbon-extend-right", b.max_k),
        Extend::Below => ("ribbon-extend-below", b.max_k),
    };
    let mut out = Vec::new();
    for k in 1..=max_k {
        for r in Ribbon::enumerate(k).expect("k >= 1") {
            let base = ribbon_op(&r);
            let (lhs, rhs) = match how {
                Extend::Right => (
                    compose(&base, &bernstein_col(1)),
                    ribbon_op(&r.extend_right()),
                ),
                Extend::Below => (
                    hat(&compose(&hat(&base), &bernstein_row(1))),
                    ribbon_op(&r.extend_below()),
                ),
            };
            for lam in Partition::all_up_to(b.max_size) {
                out.push(op_case(suite, &format!("{}", r), &lhs, &rhs, &lam));
            }
        }
    }
    out
}

fn hat_row_column_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let vs: Vec<(&'static str, LinearOp)> = alloc::vec![
        ("id", identity()),
        ("S[1]", bernstein_row(1)),
        ("perp(s[1])", perp_by(&SymFunc::schur(Partition::row(1))).expect("homogeneous")),
    ];
    let mut out = Vec::new();
    for (vname, v) in &vs {
        for m in -1..=b.max_m {
            let lhs_op = hat(&compose(v, &bernstein_row(m)));
            let hv = hat(v);
            for lam in Partition::all_up_to(b.max_size) {
                let id = format!("hat-row-column/{}/m{}/lam={}", vname, m, lam_text(&lam));
                let identity = format!(
                    "hat({} . S[{}]) = sum_j (-1)^({}-j) mul(h_j) . hat({}) . St[{}-j]",
                    vname, m, m, vname, m
                );
                let inputs = format!("lambda = {}", lam_text(&lam));
                let lhs_op = lhs_op.clone();
                let hv = hv.clone();
                out.push(value_case(id, identity, inputs, move || {
                    let lhs = lhs_op.apply_basis(&lam);
                    let n = lam.size() as i64;
                    let mut rhs = SymFunc::zero();
                    for j in 0..=(m + n).max(0) {
                        let dropped = bernstein_col(m - j).apply_basis(&lam);
                        if dropped.is_zero() {
                            continue;
                        }
                        let term = hmul(&hv.apply(&dropped), j as u32);
                        if (m - j).rem_euclid(2) == 0 {
                            rhs += &term;
                        } else {
                            rhs += &-term;
                        }
                    }
                    (lhs, rhs)
                }));
            }
        }
    }
    out
}

fn hat_skew_row_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let shapes = [
        Partition::empty(),
        Partition::row(1),
        Partition::row(2),
        Partition::column(2),
    ];
    let mut out = Vec::new();
    for lam in &shapes {
        for m in 1..=b.max_m.max(1) {
            let skewer = perp_by(&SymFunc::schur(lam.clone())).expect("homogeneous");
            // The inner hat matters: hat(perp(s_lam)) is the rank-one
            // functional picking out the conjugate shape, and only its
            // composite with S[-m] hats back to a skewing operator.
            let lhs = hat(&compose(&hat(&skewer), &bernstein_row(-m)));
            let mut seq: Vec<i64> = alloc::vec![m];
            seq.extend(lam.parts().iter().map(|&p| p as i64));
            let rhs = perp_by(&jacobi_trudi(&seq)).expect("determinantal functions are homogeneous");
            for gamma in Partition::all_up_to(b.max_size) {
                out.push(op_case(
                    "hat-skew-row",
                    &format!("lam={}/m{}", lam_text(lam), m),
                    &lhs,
                    &rhs,
                    &gamma,
                ));
            }
        }
    }
    out
}

fn ribbon_complement_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for k in 1..=b.max_k {
        for r in Ribbon::enumerate(k).expect("k >= 1") {
            let lhs = omega_conj(&hat(&ribbon_op(&r)));
            let rhs = ribbon_op(&r.complement());
            let id = format!("ribbon-complement/{}", r);
            let identity = format!("omegaConj(hat(R{{{}}})) = R{{{}}} at level {}", r, r.complement(), k);
            let max_size = b.max_size;
            out.push(SuiteCase::new(id, move || {
                k_level_equal(&lhs, &rhs, k, max_size).map(|w| Failure {
                    identity: identity.clone(),
                    inputs: format!("lambda = {}", lam_text(&w.lambda)),
                    lhs: format!("{}", w.lhs),
                    rhs: format!("{}", w.rhs),
                })
            }));
        }
    }
    out
}

fn stilde_commutation_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for a in 0..=b.max_k as i64 {
        for bb in 0..=b.max_k as i64 {
            let lhs = compose(&bernstein_col(a), &bernstein_col(bb));
            let rhs = scale(
                &-QPoly::one(),
                &compose(&bernstein_col(bb - 1), &bernstein_col(a + 1)),
            );
            for lam in Partition::all_up_to(b.max_size) {
                out.push(op_case("stilde-commutation", &format!("a{}b{}", a, bb), &lhs, &rhs, &lam));
            }
        }
    }
    out
}

fn hcol_recursion_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for k in 0..=b.max_k {
        let sum = hcol(k, HcolMode::Sum);
        let rec = hcol(k, HcolMode::Recursive);
        for lam in Partition::all_up_to(b.max_size) {
            out.push(op_case("hcol-recursion", &format!("k{}", k), &sum, &rec, &lam));
        }
    }
    out
}

fn row_column_expansion_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for k in 1..=b.max_k {
        let h = hcol(k, HcolMode::Sum);
        // Bracket one: the one-cell recursion, unrestricted.
        let bracket1 = add(
            &hat(&compose(&hat(&h), &bernstein_row(1))),
            &scale(&QPoly::q_pow(k), &compose(&h, &bernstein_col(1))),
        )
        .expect("both raise degree by k + 1");
        let next = hcol(k + 1, HcolMode::Sum);
        for lam in Partition::all_up_to(b.max_size) {
            out.push(op_case("row-column-expansion", &format!("bracket1/k{}", k), &bracket1, &next, &lam));
        }
        // Bracket two: the degree-two analogue, unrestricted (k >= 2).
        if k >= 2 {
            let lhs = hat(&compose(&hat(&h), &bernstein_row(2)));
            let rhs = scale(&QPoly::q_pow(k - 1), &compose(&h, &bernstein_col(2)));
            for lam in Partition::all_up_to(b.max_size) {
                out.push(op_case("row-column-expansion", &format!("bracket2/k{}", k), &lhs, &rhs, &lam));
            }
        }
        // The four-term expansion, valid at level k.
        for m in 0..=b.max_m {
            let lhs = compose(&jing_row(m + 1), &h);
            let t1 = compose(&hat(&compose(&hat(&h), &bernstein_row(1))), &jing_row(m));
            let t2 = scale(
                &QPoly::q_pow(k),
                &compose(&h, &compose(&bernstein_col(1), &jing_row(m))),
            );
            let t3 = scale(
                &-QPoly::one(),
                &compose(&hat(&compose(&hat(&h), &bernstein_row(2))), &jing_row(m - 1)),
            );
            let t4 = scale(
                &QPoly::q_pow(k - 1),
                &compose(&h, &compose(&bernstein_col(2), &jing_row(m - 1))),
            );
            let rhs = add(&add(&add(&t1, &t2).expect("equal shifts"), &t3).expect("equal shifts"), &t4)
                .expect("equal shifts");
            for lam in Partition::all_up_to(b.max_size) {
                if lam.len() as u32 > k {
                    continue;
                }
                out.push(op_case("row-column-expansion", &format!("full/k{}m{}", k, m), &lhs, &rhs, &lam));
            }
        }
    }
    out
}

fn bernstein_routes_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for m in -2..=b.max_m {
        let direct = bernstein_row(m);
        let series = bernstein_row_series(m);
        for lam in Partition::all_up_to(b.max_size) {
            out.push(op_case("bernstein-routes", &format!("row/m{}", m), &direct, &series, &lam));
        }
        let col = bernstein_col(m);
        let conj = omega_conj(&bernstein_row(m));
        for lam in Partition::all_up_to(b.max_size) {
            out.push(op_case("bernstein-routes", &format!("col/m{}", m), &col, &conj, &lam));
        }
    }
    out
}

fn jing_specialization_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for m in 0..=b.max_m {
        let deformed = jing_row(m);
        let row = bernstein_row(m);
        for lam in Partition::all_up_to(b.max_size) {
            let id = format!("jing-specialization/q0/m{}/lam={}", m, lam_text(&lam));
            let identity = format!("H[{}] at q = 0 equals S[{}]", m, m);
            let inputs = format!("lambda = {}", lam_text(&lam));
            let deformed = deformed.clone();
            let row = row.clone();
            let lam2 = lam.clone();
            out.push(value_case(id, identity, inputs, move || {
                (
                    deformed.apply_basis(&lam2).substitute_q(&BigInt::from(0)),
                    row.apply_basis(&lam2),
                )
            }));
            let id = format!("jing-specialization/q1/m{}/lam={}", m, lam_text(&lam));
            let identity = format!("H[{}] at q = 1 equals multiplication by h_{}", m, m);
            let inputs = format!("lambda = {}", lam_text(&lam));
            let deformed = jing_row(m);
            out.push(value_case(id, identity, inputs, move || {
                (
                    deformed.apply_basis(&lam).substitute_q(&BigInt::from(1)),
                    hmul(&SymFunc::schur(lam.clone()), m as u32),
                )
            }));
        }
    }
    out
}

fn oracle_agreement_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let choice = select_rsk_statistic();
    let mut out = Vec::new();
    for k in 1..=b.max_k {
        let id = format!("oracle-agreement/hcol-vs-ribbons/k{}", k);
        let identity = format!("Hcol[{}](1) = ribbon sum", k);
        out.push(value_case(id, identity, format!("k = {}", k), move || {
            (hcol(k, HcolMode::Sum).apply(&SymFunc::one()), h1k_by_ribbons(k))
        }));
        let id = format!("oracle-agreement/ribbons-vs-rsk/k{}", k);
        let identity = format!("ribbon sum = insertion sum at k = {}", k);
        out.push(value_case(id, identity, format!("k = {}", k), move || {
            (h1k_by_ribbons(k), h1k_by_rsk(k, &choice))
        }));
    }
    for a in Partition::all_up_to(b.max_size) {
        for bpart in Partition::all_up_to(b.max_size) {
            let id = format!("oracle-agreement/lr/a={}/b={}", lam_text(&a), lam_text(&bpart));
            let identity = String::from("Schur multiplication = tableau enumeration");
            let inputs = format!("lambda = {}, mu = {}", lam_text(&a), lam_text(&bpart));
            let a = a.clone();
            out.push(value_case(id, identity, inputs, move || {
                let product = mult(&SymFunc::schur(a.clone()), &SymFunc::schur(bpart.clone()));
                let mut expected = SymFunc::zero();
                for nu in Partition::all_of_size(a.size() + bpart.size()) {
                    let c = lr_enumerate(&a, &bpart, &nu);
                    if c > 0 {
                        expected += &SymFunc::schur_term(nu, QPoly::constant(BigInt::from(c)));
                    }
                }
                (product, expected)
            }));
        }
    }
    out
}

fn hl_specialization_cases(b: &SuiteBounds) -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for lam in Partition::all_up_to(b.max_size) {
        let id = format!("hl-specialization/q0/lam={}", lam_text(&lam));
        let identity = String::from("deformed basis element at q = 0 is the Schur function");
        let inputs = format!("lambda = {}", lam_text(&lam));
        let l0 = lam.clone();
        out.push(value_case(id, identity, inputs, move || {
            (
                hl_build(&l0, HlRoute::Rows).substitute_q(&BigInt::from(0)),
                SymFunc::schur(l0.clone()),
            )
        }));

        let id = format!("hl-specialization/q1/lam={}", lam_text(&lam));
        let identity = String::from("deformed basis element at q = 1 is the complete homogeneous function");
        let inputs = format!("lambda = {}", lam_text(&lam));
        let l1 = lam.clone();
        out.push(value_case(id, identity, inputs, move || {
            (hl_build(&l1, HlRoute::Rows).substitute_q(&BigInt::from(1)), h_to_schur(&l1))
        }));

        let id = format!("hl-specialization/table/lam={}", lam_text(&lam));
        let identity = String::from(
            "diagonal transition is 1; value at q = 1 counts semistandard tableaux; support respects dominance",
        );
        let inputs = format!("lambda = {}", lam_text(&lam));
        out.push(SuiteCase::new(id, move || {
            let diag = kostka_foulkes(&lam, &lam);
            if !diag.is_one() {
                return Some(Failure {
                    identity: identity.clone(),
                    inputs: inputs.clone(),
                    lhs: format!("{}", diag),
                    rhs: String::from("1"),
                });
            }
            for mu in Partition::all_of_size(lam.size()) {
                let kf = kostka_foulkes(&lam, &mu);
                let at_one = kf.eval(&BigInt::from(1));
                let tableaux = BigInt::from(ssyt_count(&mu, &lam));
                if at_one != tableaux {
                    return Some(Failure {
                        identity: identity.clone(),
                        inputs: format!("{}, mu = {}", inputs, lam_text(&mu)),
                        lhs: format!("{}", at_one),
                        rhs: format!("{}", tableaux),
                    });
                }
                if !kf.is_zero() && !mu.dominates(&lam) {
                    return Some(Failure {
                        identity: identity.clone(),
                        inputs: format!("{}, mu = {}", inputs, lam_text(&mu)),
                        lhs: format!("{}", kf),
                        rhs: String::from("0 outside the dominance cone"),
                    });
                }
            }
            None
        }));
    }
    out
}
