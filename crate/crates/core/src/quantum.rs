//! CSS bookkeeping for folded Hermitian codes, the entanglement-assisted
//! variant, and the rate/radius trade-off for list decoding.
//!
//! All dimensions and rates are exact rationals in folded units. Distances
//! are labelled: [`Distance::Exact`] when computed by exhaustion,
//! [`Distance::LowerBound`] when taken from designed distances.

use std::fmt;

use thiserror::Error;

use crate::code::{herm_dual_degree, CodeError, Distance, LinearCode, Weight};
use crate::folding::{orbit_chains, FoldChains, FoldError, FoldedCode, HermitianAutomorphism};
use crate::hermitian::{riemann_roch_dim_for, CurveError, HermitianCurve};
use crate::Rational;

#[derive(Debug, Error)]
pub enum QuantumError {
    #[error("containment failure: {0}")]
    Containment(String),
    #[error("constituent codes have different layouts")]
    LayoutMismatch,
    #[error("invalid rates: need 0 <= R1, R2 <= 1 and R1 + R2 >= 1")]
    InvalidRates,
    #[error("no table row for q = {q}, m = {m}")]
    UnknownRow { q: u32, m: usize },
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Fold(#[from] FoldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// `[[N, k, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumParams {
    pub length: usize,
    pub dimension: Rational,
    pub distance: Distance,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}, {}]]",
            self.length, self.dimension, self.distance
        )
    }
}

/// `[N, k, d]` for a (possibly folded) classical code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalParams {
    pub length: usize,
    pub dimension: Rational,
    pub distance: Distance,
}

impl fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}]",
            self.length, self.dimension, self.distance
        )
    }
}

/// `CSS(C1, C2)` with `C2^⊥ ⊆ C1`, both codes blocked in groups of `m`
/// (`m = 1` for the unfolded construction).
#[derive(Debug, Clone)]
pub struct CssCode {
    c1: LinearCode,
    c2: LinearCode,
    c1_dual: LinearCode,
    c2_dual: LinearCode,
    m: usize,
    designed: Option<usize>,
    symbol_distance: Option<Option<usize>>,
    block_distance: Option<Option<usize>>,
}

impl CssCode {
    fn build(
        c1: &LinearCode,
        c2: &LinearCode,
        m: usize,
        budget: u64,
    ) -> Result<Self, QuantumError> {
        if c1.len() != c2.len() || c1.field() != c2.field() {
            return Err(QuantumError::LayoutMismatch);
        }
        let c2_dual = c2.dual();
        if !c1.contains(&c2_dual)? {
            return Err(QuantumError::Containment("C2^⊥ ⊄ C1".into()));
        }
        let c1_dual = c1.dual();

        // Bound from the constituent distances, exact when cheap.
        let constituent = |c: &LinearCode| -> Option<usize> {
            match c.min_distance(budget, Weight::Symbol) {
                Ok(Distance::Exact(d)) => Some(d),
                _ => c.designed_distance(),
            }
        };
        let designed = match (constituent(c1), constituent(c2)) {
            (Some(a), Some(b)) => Some(a.min(b).div_ceil(m)),
            _ => None,
        };

        let css_weight = |metric: Weight| -> Option<Option<usize>> {
            let w1 = c1.weight_of_set_difference(&c2_dual, budget, metric).ok()?;
            let w2 = c2.weight_of_set_difference(&c1_dual, budget, metric).ok()?;
            Some(match (w1, w2) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            })
        };
        let symbol_distance = css_weight(Weight::Symbol);
        let block_distance = if m == 1 {
            symbol_distance
        } else {
            css_weight(Weight::Block(m))
        };

        Ok(CssCode {
            c1: c1.clone(),
            c2: c2.clone(),
            c1_dual,
            c2_dual,
            m,
            designed,
            symbol_distance,
            block_distance,
        })
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    /// Parity checks of `C1`; also the Z-type degeneracy group.
    pub fn c1_dual(&self) -> &LinearCode {
        &self.c1_dual
    }

    /// Parity checks of `C2`; also the X-type degeneracy group.
    pub fn c2_dual(&self) -> &LinearCode {
        &self.c2_dual
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn weight(&self) -> Weight {
        if self.m == 1 {
            Weight::Symbol
        } else {
            Weight::Block(self.m)
        }
    }

    pub fn length(&self) -> usize {
        self.c1.len() / self.m
    }

    /// `(k1 + k2 - n) / m`, i.e. `(dim C1 - dim C2^⊥) / m`.
    pub fn dimension(&self) -> Rational {
        Rational::new(
            self.c1.dim() as i64 - self.c2_dual.dim() as i64,
            self.m as i64,
        )
    }

    /// `R_C1 + R_C2 - 1`.
    pub fn rate(&self) -> Rational {
        let n = self.c1.len() as i64;
        Rational::new(self.c1.dim() as i64, n) + Rational::new(self.c2.dim() as i64, n)
            - Rational::from(1)
    }

    /// `⌈min{d(C1), d(C2)} / m⌉`, using exact constituent distances when
    /// they were cheap to compute and designed distances otherwise.
    pub fn designed_distance(&self) -> Option<usize> {
        self.designed
    }

    /// `min{wt(C1 \ C2^⊥), wt(C2 \ C1^⊥)}` counting coordinates, if it was
    /// within budget. The inner `None` means both differences are empty.
    pub fn symbol_distance(&self) -> Option<Option<usize>> {
        self.symbol_distance
    }

    /// The same minimum counting blocks of `m`.
    pub fn block_distance(&self) -> Option<Option<usize>> {
        self.block_distance
    }

    /// Exact block distance when known, otherwise the designed bound.
    pub fn params(&self) -> QuantumParams {
        let distance = match (self.block_distance, self.designed) {
            (Some(Some(d)), _) => Distance::Exact(d),
            (_, Some(d)) => Distance::LowerBound(d),
            _ => Distance::LowerBound(0),
        };
        QuantumParams {
            length: self.length(),
            dimension: self.dimension(),
            distance,
        }
    }

    /// `⌊(d - 1)/2⌋` for the exact block distance, if known.
    pub fn unique_radius(&self) -> Option<usize> {
        match self.block_distance {
            Some(Some(d)) => Some((d - 1) / 2),
            _ => None,
        }
    }
}

/// Unfolded `CSS(C1, C2)`.
pub fn css_params(c1: &LinearCode, c2: &LinearCode, budget: u64) -> Result<CssCode, QuantumError> {
    CssCode::build(c1, c2, 1, budget)
}

/// `CSS(C1^(m), C2^(m))` for two codes folded on the same chains.
pub fn css_params_folded(
    c1: &FoldedCode,
    c2: &FoldedCode,
    budget: u64,
) -> Result<CssCode, QuantumError> {
    if !c1.same_layout(c2) {
        return Err(QuantumError::LayoutMismatch);
    }
    CssCode::build(c1.code(), c2.code(), c1.m(), budget)
}

/// Parameters of the folded quantum Hermitian code from the closed-form
/// expressions: `N = q³/m`, `k = (ℓ(r1) - ℓ(α))/m` with
/// `α = q³ + q² - q - 2 - r2`, and `d ≥ ⌈min{q³ - r1, q³ - r2}/m⌉`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FqhcParams {
    pub q: u32,
    pub r1: usize,
    pub r2: usize,
    pub m: usize,
    pub alpha: usize,
    pub length: usize,
    pub dimension: Rational,
    pub distance_bound: usize,
}

impl FqhcParams {
    pub fn from_formula(q: u32, r1: usize, r2: usize, m: usize) -> Result<Self, QuantumError> {
        let n = (q as usize).pow(3);
        if m == 0 || !n.is_multiple_of(m) {
            return Err(QuantumError::Range(format!("m = {m} does not divide {n}")));
        }
        if r1 >= n || r2 >= n {
            return Err(QuantumError::Range(format!("r1, r2 must be below {n}")));
        }
        let alpha = herm_dual_degree(q, r2)?;
        if alpha > r1 {
            return Err(QuantumError::Containment(format!(
                "C2^⊥ = C(D, {alpha}P∞) ⊄ C1 = C(D, {r1}P∞)"
            )));
        }
        let k1 = riemann_roch_dim_for(q, r1)? as i64;
        let ka = riemann_roch_dim_for(q, alpha)? as i64;
        Ok(FqhcParams {
            q,
            r1,
            r2,
            m,
            alpha,
            length: n / m,
            dimension: Rational::new(k1 - ka, m as i64),
            distance_bound: (n - r1.max(r2)).div_ceil(m),
        })
    }

    pub fn quantum(&self) -> QuantumParams {
        QuantumParams {
            length: self.length,
            dimension: self.dimension,
            distance: Distance::LowerBound(self.distance_bound),
        }
    }
}

/// A folded quantum Hermitian code built from actual matrices.
#[derive(Debug, Clone)]
pub struct Fqhc {
    pub sigma: HermitianAutomorphism,
    pub chains: FoldChains,
    pub c1: FoldedCode,
    pub c2: FoldedCode,
    pub css: CssCode,
    pub formula: FqhcParams,
    /// The folded dual of `C2` equals the fold of `C(D, αP∞)` and is the
    /// blockwise-orthogonal complement of the folded `C2`.
    pub fold_dual_commutes: bool,
}

impl Fqhc {
    /// Whether the matrix-derived length and dimension match the formula.
    pub fn matches_formula(&self) -> bool {
        self.css.length() == self.formula.length && self.css.dimension() == self.formula.dimension
    }
}

/// Builds both folded codes on the chains of `sigma` (default choice when
/// `None`), checks `C2^⊥ ⊆ C1` on the folded matrices and the fold/dual
/// commutation, and derives parameters both ways.
pub fn fqhc_construct(
    curve: &HermitianCurve,
    r1: usize,
    r2: usize,
    m: usize,
    sigma: Option<HermitianAutomorphism>,
    budget: u64,
) -> Result<Fqhc, QuantumError> {
    let q = curve.q();
    let formula = FqhcParams::from_formula(q, r1, r2, m)?;
    let sigma = match sigma {
        Some(s) => s,
        None => HermitianAutomorphism::default_for(curve, m)?,
    };
    let chains = orbit_chains(&sigma, curve, m)?;
    let c1 = FoldedCode::hermitian(curve, r1, &chains)?;
    let c2 = FoldedCode::hermitian(curve, r2, &chains)?;

    let c2_dual = c2.folded_dual();
    if !c1.contains(&c2_dual)? {
        return Err(QuantumError::Containment(format!(
            "(C(D, {r2}P∞)^(σ,{m}))^⊥ ⊄ C(D, {r1}P∞)^(σ,{m})"
        )));
    }
    let via_formula = FoldedCode::hermitian(curve, formula.alpha, &chains)?;
    let fold_dual_commutes = c2_dual == via_formula && c2.is_blockwise_dual_of(&via_formula);

    let css = css_params_folded(&c1, &c2, budget)?;
    Ok(Fqhc {
        sigma,
        chains,
        c1,
        c2,
        css,
        formula,
        fold_dual_commutes,
    })
}

/// Rates and list-decoding radius of a CSS code from two classical codes
/// list-decodable up to `1 - R_i - ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RateRadius {
    pub rate: Rational,
    pub radius: Rational,
    /// `(1 + R)/2`, the common classical rate that maximises the radius.
    pub balanced_rate: Rational,
    /// `(1 - R)/2 - ε`.
    pub balanced_radius: Rational,
    /// `false` when the radius is not positive: no list-decoding guarantee.
    pub guaranteed: bool,
}

pub fn fqhc_rate_radius(
    r1: Rational,
    r2: Rational,
    eps: Rational,
) -> Result<RateRadius, QuantumError> {
    let zero = Rational::from(0);
    let one = Rational::from(1);
    let two = Rational::from(2);
    if r1 < zero || r2 < zero || r1 > one || r2 > one || r1 + r2 < one {
        return Err(QuantumError::InvalidRates);
    }
    let rate = r1 + r2 - one;
    let radius = (one - r1).min(one - r2) - eps;
    Ok(RateRadius {
        rate,
        radius,
        balanced_rate: (one + rate) / two,
        balanced_radius: (one - rate) / two - eps,
        guaranteed: radius > zero,
    })
}

/// The `(q, m)` rows reproduced from the folded Hermitian examples.
pub const TABLE1_ROWS: [(u32, usize); 8] = [
    (4, 2),
    (4, 4),
    (5, 5),
    (7, 7),
    (8, 2),
    (8, 4),
    (16, 2),
    (16, 4),
];

/// The degree `r` with `C1 = C2 = C(D, rP∞)` used for each `q`.
pub fn table1_degree(q: u32) -> Option<usize> {
    match q {
        4 => Some(48),
        5 => Some(95),
        7 => Some(245),
        8 => Some(416),
        16 => Some(3584),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    pub q: u32,
    pub m: usize,
    pub r: usize,
    pub classical: ClassicalParams,
    pub quantum: QuantumParams,
}

impl Table1Row {
    /// `q m N kc_num kc_den dc N kq_num kq_den dq`.
    pub fn record(&self) -> String {
        let c = &self.classical;
        let qp = &self.quantum;
        format!(
            "{} {} {} {} {} {} {} {} {} {}",
            self.q,
            self.m,
            c.length,
            c.dimension.numer(),
            c.dimension.denom(),
            c.distance.value(),
            qp.length,
            qp.dimension.numer(),
            qp.dimension.denom(),
            qp.distance.value()
        )
    }
}

fn table1_check(q: u32, m: usize) -> Result<usize, QuantumError> {
    if !TABLE1_ROWS.contains(&(q, m)) {
        return Err(QuantumError::UnknownRow { q, m });
    }
    Ok(table1_degree(q).expect("every listed q has a degree"))
}

/// A row from the closed-form expressions only.
pub fn table1(q: u32, m: usize) -> Result<Table1Row, QuantumError> {
    let r = table1_check(q, m)?;
    let n = (q as usize).pow(3);
    let p = FqhcParams::from_formula(q, r, r, m)?;
    Ok(Table1Row {
        q,
        m,
        r,
        classical: ClassicalParams {
            length: n / m,
            dimension: Rational::new(riemann_roch_dim_for(q, r)? as i64, m as i64),
            distance: Distance::LowerBound((n - r).div_ceil(m)),
        },
        quantum: p.quantum(),
    })
}

/// A row from folded generator matrices: dimensions by rank, containment
/// and fold/dual commutation checked. Distances stay designed bounds.
pub fn table1_from_matrices(q: u32, m: usize) -> Result<(Table1Row, Fqhc), QuantumError> {
    let r = table1_check(q, m)?;
    let curve = HermitianCurve::new(q)?;
    // Distances of these codes are far beyond exhaustive reach.
    let f = fqhc_construct(&curve, r, r, m, None, 0)?;
    let c1 = &f.c1;
    let row = Table1Row {
        q,
        m,
        r,
        classical: ClassicalParams {
            length: c1.len(),
            dimension: c1.dimension(),
            distance: Distance::LowerBound(c1.designed_distance().unwrap_or(0)),
        },
        quantum: QuantumParams {
            length: f.css.length(),
            dimension: f.css.dimension(),
            distance: Distance::LowerBound(f.css.designed_distance().unwrap_or(0)),
        },
    };
    Ok((row, f))
}

/// Which distance expression applies to an entanglement-assisted code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EaCase {
    /// `C1^⊥ ⊆ C2`: `min{wt(C1^⊥), wt(C2^⊥)}`.
    DualContained,
    /// Otherwise: `min{w1, w2}` over the two set differences.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EaDistance {
    /// Minimum block weight, computed by exhaustion.
    Exact(usize),
    /// Every set in the minimum is empty.
    Unbounded,
    /// Over budget.
    Unavailable,
}

impl fmt::Display for EaDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EaDistance::Exact(d) => write!(f, "≥{d}"),
            EaDistance::Unbounded => write!(f, "∞"),
            EaDistance::Unavailable => write!(f, "?"),
        }
    }
}

/// `[[N, k_EA, d_EA : c]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EaParams {
    pub length: usize,
    pub dimension: Rational,
    pub ebits: Rational,
    pub case: EaCase,
    pub distance: EaDistance,
}

impl fmt::Display for EaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}, {} : {}]]",
            self.length, self.dimension, self.distance, self.ebits
        )
    }
}

/// Entanglement-assisted parameters for two folded codes on the same chains;
/// no containment is required.
pub fn ea_params(c1: &FoldedCode, c2: &FoldedCode, budget: u64) -> Result<EaParams, QuantumError> {
    if !c1.same_layout(c2) {
        return Err(QuantumError::LayoutMismatch);
    }
    let m = c1.m() as i64;
    let (a, b) = (c1.code(), c2.code());
    let (a_dual, b_dual) = (a.dual(), b.dual());
    let meet = a.intersection(&b_dual)?;
    let ebits = Rational::new((a.dim() - meet.dim()) as i64, m);
    let dimension = Rational::from(c1.len() as i64) - c1.dimension() - c2.dimension() + ebits;

    let metric = c1.weight();
    let case = if b.contains(&a_dual)? {
        EaCase::DualContained
    } else {
        EaCase::General
    };
    let weights: Result<Vec<Option<usize>>, CodeError> = match case {
        EaCase::DualContained => [&a_dual, &b_dual]
            .into_iter()
            .map(|c| {
                if c.dim() == 0 {
                    return Ok(None);
                }
                match c.min_distance(budget, metric)? {
                    Distance::Exact(d) => Ok(Some(d)),
                    Distance::LowerBound(_) => Err(CodeError::OverBudget {
                        needed: c.size(),
                        budget,
                    }),
                }
            })
            .collect(),
        EaCase::General => {
            let w1 = a_dual.weight_of_set_difference(&b.intersection(&a_dual)?, budget, metric);
            let w2 = b_dual.weight_of_set_difference(&b_dual.intersection(a)?, budget, metric);
            [w1, w2].into_iter().collect()
        }
    };
    let distance = match weights {
        Ok(ws) => ws
            .into_iter()
            .flatten()
            .min()
            .map_or(EaDistance::Unbounded, EaDistance::Exact),
        Err(CodeError::OverBudget { .. }) | Err(CodeError::DistanceUnavailable) => {
            EaDistance::Unavailable
        }
        Err(e) => return Err(e.into()),
    };
    Ok(EaParams {
        length: c1.len(),
        dimension,
        ebits,
        case,
        distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn unfolded_css_q2() {
        let c = HermitianCurve::new(2).unwrap();
        let c1 = LinearCode::hermitian(&c, 4).unwrap();
        let c2 = LinearCode::hermitian(&c, 6).unwrap();
        let css = css_params(&c1, &c2, DEFAULT_BUDGET).unwrap();
        assert_eq!(css.length(), 8);
        assert_eq!(css.dimension(), Rational::from(2));
        assert_eq!(css.symbol_distance(), Some(Some(2)));
        assert_eq!(css.params().to_string(), "[[8, 2, 2]]");
        assert_eq!(css.rate(), r(1, 4));
    }

    #[test]
    fn containment_failure_is_named() {
        let c = HermitianCurve::new(2).unwrap();
        let c1 = LinearCode::hermitian(&c, 2).unwrap();
        let c2 = LinearCode::hermitian(&c, 2).unwrap();
        let err = css_params(&c1, &c2, DEFAULT_BUDGET).unwrap_err();
        assert!(err.to_string().contains("C2^⊥ ⊄ C1"), "{err}");
    }

    #[test]
    fn zero_rate_boundary() {
        // C(D, 4P∞) is self-dual for q = 2, so k1 + k2 = n.
        let c = HermitianCurve::new(2).unwrap();
        let c1 = LinearCode::hermitian(&c, 4).unwrap();
        assert_eq!(c1.dual(), c1);
        let css = css_params(&c1, &c1, DEFAULT_BUDGET).unwrap();
        assert_eq!(css.dimension(), Rational::from(0));
        assert_eq!(css.symbol_distance(), Some(None));
    }

    #[test]
    fn formula_rows() {
        let p = FqhcParams::from_formula(8, 416, 416, 2).unwrap();
        assert_eq!(p.quantum().to_string(), "[[256, 133, ≥48]]");
        let p = FqhcParams::from_formula(4, 48, 48, 4).unwrap();
        assert_eq!(p.quantum().to_string(), "[[16, 11/2, ≥4]]");
        let p = FqhcParams::from_formula(2, 4, 6, 2).unwrap();
        assert_eq!((p.length, p.dimension, p.alpha), (4, Rational::from(1), 2));
        assert!(FqhcParams::from_formula(2, 2, 2, 2).is_err());
    }

    #[test]
    fn example_one_from_matrices() {
        let c = HermitianCurve::new(2).unwrap();
        let sigma = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        let f = fqhc_construct(&c, 4, 6, 2, Some(sigma), DEFAULT_BUDGET).unwrap();
        assert!(f.fold_dual_commutes);
        assert!(f.matches_formula());
        assert_eq!(f.css.length(), 4);
        assert_eq!(f.css.dimension(), Rational::from(1));
        assert_eq!(f.css.symbol_distance(), Some(Some(2)));
        // The degree-3 polynomial in x vanishing on three x-fibres lies in
        // C2 \ C1^⊥ and occupies a single chain.
        assert_eq!(f.css.block_distance(), Some(Some(1)));
    }

    #[test]
    fn rate_radius_balanced() {
        let rr = fqhc_rate_radius(r(43, 64), r(43, 64), r(0, 1)).unwrap();
        assert_eq!(rr.rate, r(11, 32));
        assert_eq!(rr.radius, r(21, 64));
        assert_eq!(rr.balanced_radius, r(21, 64));
        let eps = r(1, 100);
        let rr = fqhc_rate_radius(r(43, 64), r(43, 64), eps).unwrap();
        assert_eq!(rr.radius, r(21, 64) - eps);
        let skew = fqhc_rate_radius(r(50, 64), r(36, 64), eps).unwrap();
        assert_eq!(skew.rate, rr.rate);
        assert!(skew.radius < skew.balanced_radius);
        assert!(matches!(
            fqhc_rate_radius(r(1, 4), r(1, 4), eps),
            Err(QuantumError::InvalidRates)
        ));
        let none = fqhc_rate_radius(Rational::from(1), Rational::from(1), eps).unwrap();
        assert!(!none.guaranteed);
    }

    #[test]
    fn table_rows_formula() {
        assert_eq!(
            table1(5, 5).unwrap().classical.to_string(),
            "[25, 86/5, ≥6]"
        );
        assert_eq!(
            table1(5, 5).unwrap().quantum.to_string(),
            "[[25, 47/5, ≥6]]"
        );
        assert_eq!(
            table1(7, 7).unwrap().quantum.to_string(),
            "[[49, 107/7, ≥14]]"
        );
        assert_eq!(
            table1(16, 2).unwrap().quantum.to_string(),
            "[[2048, 1417, ≥256]]"
        );
        assert_eq!(table1(4, 2).unwrap().record(), "4 2 32 43 2 8 32 11 1 8");
        assert!(matches!(table1(4, 3), Err(QuantumError::UnknownRow { .. })));
    }

    #[test]
    fn folded_reed_solomon_css() {
        let rs = crate::folding::fold_reed_solomon(4, 10, 3).unwrap();
        let css = css_params_folded(&rs, &rs, DEFAULT_BUDGET).unwrap();
        assert_eq!(css.params().to_string(), "[[5, 5/3, ≥2]]");
    }

    fn q2_chains() -> (HermitianCurve, FoldChains) {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        let ch = orbit_chains(&s, &c, 2).unwrap();
        (c, ch)
    }

    #[test]
    fn ea_worked_examples() {
        let (c, ch) = q2_chains();
        let c2p = FoldedCode::hermitian(&c, 2, &ch).unwrap();
        let ea = ea_params(&c2p, &c2p, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (ea.ebits, ea.dimension),
            (Rational::from(0), Rational::from(2))
        );

        let c3p = FoldedCode::hermitian(&c, 3, &ch).unwrap();
        let ea = ea_params(&c3p, &c3p, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (ea.ebits, ea.dimension),
            (Rational::from(0), Rational::from(1))
        );

        let full = FoldedCode::along(
            LinearCode::full(c.field().clone(), 8)
                .with_points(Some(ch.evaluation_order().to_vec())),
            &ch,
        )
        .unwrap();
        let ea = ea_params(&full, &full, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (ea.ebits, ea.dimension),
            (Rational::from(4), Rational::from(0))
        );
        assert_eq!(ea.case, EaCase::DualContained);
        assert_eq!(ea.distance, EaDistance::Unbounded);
    }

    #[test]
    fn ea_cases() {
        let (c, ch) = q2_chains();
        let c4 = FoldedCode::hermitian(&c, 4, &ch).unwrap();
        let c6 = FoldedCode::hermitian(&c, 6, &ch).unwrap();
        let ea = ea_params(&c4, &c6, DEFAULT_BUDGET).unwrap();
        assert_eq!(ea.case, EaCase::DualContained);
        let c2p = FoldedCode::hermitian(&c, 2, &ch).unwrap();
        let ea = ea_params(&c2p, &c2p, DEFAULT_BUDGET).unwrap();
        assert_eq!(ea.case, EaCase::General);
        assert!(matches!(ea.distance, EaDistance::Exact(_)));
    }
}
