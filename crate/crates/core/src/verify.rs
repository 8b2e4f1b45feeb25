//! The acceptance checks, each returning a pass/fail report with timing.
//! Shared by `fqhc verify-all` and the `acceptance` test target.

use std::fmt;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::code::{herm_dual_degree, LinearCode};
use crate::decode::{
    for_each_vector, list_size_profile, plant_and_recover, quantum_list_decode, ExhaustiveDecoder,
};
use crate::folding::{orbit_chains, FoldedCode, HermitianAutomorphism};
use crate::hermitian::{genus, riemann_roch_dim_for, weierstrass_gaps, HermitianCurve};
use crate::matrix::Matrix;
use crate::quantum::{
    ea_params, fqhc_construct, fqhc_rate_radius, table1, table1_degree, table1_from_matrices,
    EaCase, EaDistance, Fqhc, QuantumError, Table1Row,
};
use crate::Rational;

/// Every `q` the curve module accepts.
pub const SUPPORTED_Q: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// Reference rows: `(q, m, N, k_c, d_c, k_q, d_q)` with dimensions as
/// `(numerator, denominator)` exactly as printed (not necessarily reduced).
pub type ExpectedRow = (u32, usize, usize, (i64, i64), usize, (i64, i64), usize);

pub const EXPECTED_ROWS: [ExpectedRow; 8] = [
    (4, 2, 32, (43, 2), 8, (11, 1), 8),
    (4, 4, 16, (43, 4), 4, (11, 2), 4),
    (5, 5, 25, (86, 5), 6, (47, 5), 6),
    (7, 7, 49, (225, 7), 14, (107, 7), 14),
    (8, 2, 256, (389, 2), 48, (133, 1), 48),
    (8, 4, 128, (389, 4), 24, (266, 4), 24),
    (16, 2, 2048, (3465, 2), 256, (1417, 1), 256),
    (16, 4, 1024, (3465, 4), 128, (2834, 4), 128),
];

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} [{}] {}: {} ({:.2} s, limit {} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub budget: u64,
    /// Run the rank of the q = 16 generator matrix (tens of seconds).
    pub full_rank_q16: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: crate::code::DEFAULT_BUDGET,
            full_rank_q16: true,
        }
    }
}

fn timed<F>(id: u8, name: &'static str, limit_s: u64, body: F) -> CriterionReport
where
    F: FnOnce() -> Result<(bool, String), QuantumError>,
{
    let start = Instant::now();
    let (ok, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_s);
    CriterionReport {
        id,
        name,
        passed: ok && elapsed <= limit,
        detail,
        elapsed,
        limit,
    }
}

fn expected(q: u32, m: usize) -> Option<Table1Row> {
    use crate::code::Distance::LowerBound;
    use crate::quantum::{ClassicalParams, QuantumParams};
    EXPECTED_ROWS
        .iter()
        .find(|row| row.0 == q && row.1 == m)
        .map(|&(q, m, n, kc, dc, kq, dq)| Table1Row {
            q,
            m,
            r: table1_degree(q).unwrap_or(0),
            classical: ClassicalParams {
                length: n,
                dimension: Rational::new(kc.0, kc.1),
                distance: LowerBound(dc),
            },
            quantum: QuantumParams {
                length: n,
                dimension: Rational::new(kq.0, kq.1),
                distance: LowerBound(dq),
            },
        })
}

/// Matrix-level rows for `q <= 8`, formula rows for `q = 16`.
pub fn table_rows_from_matrices() -> Result<Vec<(Table1Row, Fqhc)>, QuantumError> {
    crate::quantum::TABLE1_ROWS
        .iter()
        .filter(|(q, _)| *q <= 8)
        .map(|&(q, m)| table1_from_matrices(q, m))
        .collect()
}

/// Rank of the full `C(D, rP∞)` generator matrix for `q = 16`.
pub fn q16_rank() -> Result<usize, QuantumError> {
    let curve = HermitianCurve::new(16)?;
    let r = table1_degree(16).expect("q = 16 row");
    let rows = curve.evaluation_rows(r, curve.points())?;
    Ok(Matrix::from_rows(curve.len(), &rows).rank(curve.field()))
}

pub fn criterion_table(opts: &VerifyOptions) -> CriterionReport {
    timed(1, "folded Hermitian table", 600, || {
        let mut bad = Vec::new();
        for (row, f) in table_rows_from_matrices()? {
            let want = expected(row.q, row.m).expect("listed row");
            let formula = table1(row.q, row.m)?;
            if row != want || formula != want || !f.matches_formula() {
                bad.push(format!(
                    "(q={}, m={}): got {} {}",
                    row.q, row.m, row.classical, row.quantum
                ));
            }
        }
        for m in [2, 4] {
            let row = table1(16, m)?;
            if Some(row) != expected(16, m) {
                bad.push(format!("(q=16, m={m}) formula: {}", row.quantum));
            }
        }
        let rank = if opts.full_rank_q16 {
            let rank = q16_rank()?;
            if rank != 3465 {
                bad.push(format!("q=16 rank {rank} != 3465"));
            }
            format!("q=16 rank {rank}")
        } else {
            "q=16 rank skipped".to_string()
        };
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                format!("8 rows match (6 from matrices), {rank}")
            } else {
                bad.join("; ")
            },
        ))
    })
}

/// `(r, α, dual(C(rP∞)) == C(αP∞))` for every `r` with both `r` and `α`
/// in `(2g - 2, q³)`.
pub fn duality_sweep(q: u32) -> Result<Vec<(usize, usize, bool)>, QuantumError> {
    let curve = HermitianCurve::new(q)?;
    let n = curve.len();
    let low = 2 * genus(q) as i64 - 2;
    let mut out = Vec::new();
    for r in 0..n {
        let Ok(alpha) = herm_dual_degree(q, r) else {
            continue;
        };
        if (r as i64) <= low || (alpha as i64) <= low || alpha >= n {
            continue;
        }
        let dual = LinearCode::hermitian(&curve, r)?.dual();
        out.push((r, alpha, dual == LinearCode::hermitian(&curve, alpha)?));
    }
    Ok(out)
}

pub fn criterion_duality() -> CriterionReport {
    timed(2, "Hermitian duality sweep", 30, || {
        let mut total = 0;
        let mut failures = Vec::new();
        for q in [2, 3, 4] {
            for (r, alpha, ok) in duality_sweep(q)? {
                total += 1;
                if !ok {
                    failures.push(format!("q={q} r={r} α={alpha}"));
                }
            }
        }
        Ok((
            failures.is_empty(),
            format!(
                "{total} (q, r) pairs, {} failures {}",
                failures.len(),
                failures.join(" ")
            ),
        ))
    })
}

/// The q = 2 code folded by `σ_{0,1}` with `m = 2`, `C1 = C(4P∞)`, `C2 = C(6P∞)`.
pub fn example_one(budget: u64) -> Result<Fqhc, QuantumError> {
    let curve = HermitianCurve::new(2)?;
    let sigma = HermitianAutomorphism::on(&curve, 0, 1)?;
    fqhc_construct(&curve, 4, 6, 2, Some(sigma), budget)
}

pub fn criterion_example_one(opts: &VerifyOptions) -> CriterionReport {
    timed(3, "q=2 end-to-end [[4, 1, ≥2]]", 1, || {
        let f = example_one(opts.budget)?;
        let css = &f.css;
        let sym = css.symbol_distance().flatten();
        let block = css.block_distance().flatten();
        let ok = css.length() == 4
            && css.dimension() == Rational::from(1)
            && f.matches_formula()
            && sym.is_some_and(|d| d >= 2);
        let fmt = |d: Option<usize>| d.map_or("n/a".to_string(), |d| d.to_string());
        Ok((
            ok,
            format!(
                "N={} k={} set-difference weight {} (coordinates), {} (blocks), bound ≥{}",
                css.length(),
                css.dimension(),
                fmt(sym),
                fmt(block),
                f.formula.distance_bound
            ),
        ))
    })
}

pub fn criterion_fold_dual(opts: &VerifyOptions) -> CriterionReport {
    timed(4, "fold-dual commutation", 60, || {
        let mut total = 0;
        let mut bad = Vec::new();
        let mut instances: Vec<(String, Fqhc)> = table_rows_from_matrices()?
            .into_iter()
            .map(|(row, f)| (format!("q={} m={}", row.q, row.m), f))
            .collect();
        instances.push(("q=2 m=2".into(), example_one(opts.budget)?));
        for (name, f) in &instances {
            total += 1;
            let dual = f.c2.folded_dual();
            if !(f.fold_dual_commutes && f.c2.is_blockwise_dual_of(&dual)) {
                bad.push(name.clone());
            }
        }
        for q in [2, 3, 4] {
            let curve = HermitianCurve::new(q)?;
            for (r, alpha, _) in duality_sweep(q)? {
                total += 1;
                let c = FoldedCode::consecutive(LinearCode::hermitian(&curve, r)?, 1)?;
                let d = FoldedCode::consecutive(LinearCode::hermitian(&curve, alpha)?, 1)?;
                if c.folded_dual() != d || !c.is_blockwise_dual_of(&d) {
                    bad.push(format!("q={q} r={r}"));
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{total} instances, {} failures {}",
                bad.len(),
                bad.join(" ")
            ),
        ))
    })
}

pub fn criterion_riemann_roch() -> CriterionReport {
    timed(5, "Riemann-Roch consistency", 5, || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for q in SUPPORTED_Q {
            let g = genus(q);
            let gaps = weierstrass_gaps(q);
            for r in 0..(q as usize).pow(3) {
                let got = riemann_roch_dim_for(q, r)?;
                let want = if r + 1 >= 2 * g {
                    r + 1 - g
                } else {
                    r + 1 - gaps.iter().filter(|&&v| v <= r).count()
                };
                checked += 1;
                if got != want {
                    bad.push(format!("q={q} r={r}: {got} != {want}"));
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{checked} (q, r) pairs, {} failures {}",
                bad.len(),
                bad.join(" ")
            ),
        ))
    })
}

/// `(d_fold, profile)` for the folded `C(4P∞)` of [`example_one`].
pub fn example_one_profile(budget: u64) -> Result<(usize, Vec<usize>), QuantumError> {
    let f = example_one(budget)?;
    let d = f.c1.min_distance(budget)?.value();
    let profile =
        list_size_profile(&f.c1, budget).map_err(|e| QuantumError::Range(e.to_string()))?;
    Ok((d, profile))
}

pub fn criterion_list_decoding(opts: &VerifyOptions) -> CriterionReport {
    timed(6, "list decodability (q=2 folded C1)", 10, || {
        let (d, profile) = example_one_profile(opts.budget)?;
        let unique = (d - 1) / 2;
        let monotone = profile.windows(2).all(|w| w[0] <= w[1]);
        Ok((
            profile[unique] == 1 && monotone,
            format!(
                "d_fold={d}, L({unique})={}, profile {:?} over 256 cosets",
                profile[unique], profile
            ),
        ))
    })
}

/// Calls `visit(x, z)` for every Pauli error of combined block weight exactly `w`.
pub fn for_each_pauli<F>(blocks: usize, m: usize, order: u16, w: usize, mut visit: F)
where
    F: FnMut(&[u16], &[u16]),
{
    let n = blocks * m;
    let per_block = (order as u64).pow(2 * m as u32);
    for support in (0..blocks).combinations(w) {
        let mut digits = vec![1u64; w];
        loop {
            let (mut x, mut z) = (vec![0u16; n], vec![0u16; n]);
            for (&b, &val) in support.iter().zip(&digits) {
                let mut v = val;
                for i in 0..m {
                    x[b * m + i] = (v % order as u64) as u16;
                    v /= order as u64;
                    z[b * m + i] = (v % order as u64) as u16;
                    v /= order as u64;
                }
            }
            visit(&x, &z);
            let mut i = 0;
            loop {
                if i == w {
                    break;
                }
                digits[i] += 1;
                if digits[i] < per_block {
                    break;
                }
                digits[i] = 1;
                i += 1;
            }
            if i == w {
                break;
            }
        }
    }
}

pub fn criterion_l_squared(opts: &VerifyOptions) -> CriterionReport {
    timed(7, "L² bound for the q=2 code", 60, || {
        let f = example_one(opts.budget)?;
        let css = &f.css;
        let dec = ExhaustiveDecoder {
            budget: opts.budget,
        };
        let range = |e: crate::decode::DecodeError| QuantumError::Range(e.to_string());
        let p1 = list_size_profile(&f.c1, opts.budget).map_err(range)?;
        let p2 = list_size_profile(&f.c2, opts.budget).map_err(range)?;
        let field = css.c1().field().clone();
        let mut detail = Vec::new();
        let mut ok = true;
        for radius in 0..=2usize {
            let l = p1[radius].max(p2[radius]);
            let (mut worst, mut pairs, mut violations, mut dupes) = (0, 0, 0, 0);
            let mut err = None;
            for_each_vector(&field, css.c1_dual().dim(), |sx| {
                for_each_vector(&field, css.c2_dual().dim(), |sz| match quantum_list_decode(
                    css, sx, sz, radius, &dec,
                ) {
                    Ok(list) => {
                        pairs += 1;
                        worst = worst.max(list.len());
                        if list.len() > l * l {
                            violations += 1;
                        }
                        let distinct = list
                            .iter()
                            .map(|p| (&p.x_class, &p.z_class))
                            .unique()
                            .count();
                        dupes += list.len() - distinct;
                        ControlFlow::Continue(())
                    }
                    Err(e) => {
                        err = Some(e);
                        ControlFlow::Break(())
                    }
                });
                if err.is_some() {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if let Some(e) = err {
                return Err(range(e));
            }
            ok &= violations == 0 && dupes == 0;
            detail.push(format!(
                "r={radius}: max {worst} <= {}² over {pairs} pairs",
                l
            ));
        }

        // Within the unique radius the planted class is the only candidate;
        // at radius 1 every weight-1 error is still recovered.
        let t = css.unique_radius().unwrap_or(0);
        let order = field.order() as u16;
        let (mut planted, mut failed) = (0, 0);
        let mut check = |w: usize, radius: usize, unique: bool| {
            for_each_pauli(css.length(), css.m(), order, w, |x, z| {
                planted += 1;
                match plant_and_recover(css, x, z, radius, &dec) {
                    Ok((len, true)) if !unique || len == 1 => {}
                    _ => failed += 1,
                }
            });
        };
        for w in 0..=t {
            check(w, t, true);
        }
        check(1, 1, false);
        ok &= failed == 0;
        detail.push(format!(
            "unique radius {t}, {planted} planted errors, {failed} not recovered"
        ));
        Ok((ok, detail.join("; ")))
    })
}

/// Largest radius over a grid of rate pairs with `R1 + R2 - 1 = rate`.
pub fn best_grid_radius(
    rate: Rational,
    eps: Rational,
    max_den: i64,
) -> Option<(Rational, Rational)> {
    let one = Rational::from(1);
    let mut best: Option<(Rational, Rational)> = None;
    for den in 1..=max_den {
        for num in 0..=den {
            let r1 = Rational::new(num, den);
            let r2 = one + rate - r1;
            let Ok(rr) = fqhc_rate_radius(r1, r2, eps) else {
                continue;
            };
            if best.is_none_or(|(_, b)| rr.radius > b) {
                best = Some((r1, rr.radius));
            }
        }
    }
    best
}

pub fn criterion_rate_radius() -> CriterionReport {
    timed(8, "rate/radius formulas", 5, || {
        let mut bad = Vec::new();
        let mut checked = 0;
        let eps_values = [
            Rational::from(0),
            Rational::new(1, 100),
            Rational::new(1, 8),
        ];
        let rates = [
            Rational::from(0),
            Rational::new(1, 4),
            Rational::new(11, 32),
            Rational::new(1, 2),
            Rational::new(3, 4),
        ];
        for &eps in &eps_values {
            for &rate in &rates {
                checked += 1;
                let half = (Rational::from(1) + rate) / Rational::from(2);
                let rr = fqhc_rate_radius(half, half, eps)?;
                let expect = (Rational::from(1) - rate) / Rational::from(2) - eps;
                if rr.rate != rate || rr.radius != expect || rr.balanced_radius != expect {
                    bad.push(format!("R={rate} ε={eps}: balanced {}", rr.radius));
                }
                match best_grid_radius(rate, eps, 64) {
                    Some((r1, radius)) if radius == expect && r1 == half => {}
                    other => bad.push(format!("R={rate} ε={eps}: grid best {other:?}")),
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!(
                "{checked} (R, ε) cases over denominators <= 64, {} failures {}",
                bad.len(),
                bad.join(" ")
            ),
        ))
    })
}

pub fn criterion_ea(opts: &VerifyOptions) -> CriterionReport {
    timed(9, "entanglement-assisted parameters", 10, || {
        let curve = HermitianCurve::new(2)?;
        let sigma = HermitianAutomorphism::on(&curve, 0, 1)?;
        let chains = orbit_chains(&sigma, &curve, 2)?;
        let fold = |r: usize| FoldedCode::hermitian(&curve, r, &chains);
        let full = FoldedCode::along(
            LinearCode::full(curve.field().clone(), curve.len())
                .with_points(Some(chains.evaluation_order().to_vec())),
            &chains,
        )?;
        let int = |v: i64| Rational::from(v);
        let cases = [
            ("C(2P∞), C(2P∞)", fold(2)?, fold(2)?, int(0), int(2)),
            ("F^8, F^8", full.clone(), full, int(4), int(0)),
            ("C(3P∞), C(3P∞)", fold(3)?, fold(3)?, int(0), int(1)),
        ];
        let mut bad = Vec::new();
        let mut parts = Vec::new();
        for (name, a, b, c, k) in &cases {
            let ea = ea_params(a, b, opts.budget)?;
            parts.push(format!("{name} → {ea}"));
            if ea.ebits != *c || ea.dimension != *k {
                bad.push(*name);
            }
        }
        let contained = ea_params(&fold(4)?, &fold(6)?, opts.budget)?;
        let general = ea_params(&fold(2)?, &fold(2)?, opts.budget)?;
        let branches = contained.case == EaCase::DualContained
            && general.case == EaCase::General
            && matches!(contained.distance, EaDistance::Exact(_))
            && matches!(general.distance, EaDistance::Exact(_));
        parts.push(format!(
            "C(4P∞), C(6P∞) {:?} d={}; C(2P∞), C(2P∞) {:?} d={}",
            contained.case, contained.distance, general.case, general.distance
        ));
        Ok((bad.is_empty() && branches, parts.join("; ")))
    })
}

/// All nine checks in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionReport> {
    vec![
        criterion_table(opts),
        criterion_duality(),
        criterion_example_one(opts),
        criterion_fold_dual(opts),
        criterion_riemann_roch(),
        criterion_list_decoding(opts),
        criterion_l_squared(opts),
        criterion_rate_radius(),
        criterion_ea(opts),
    ]
}
