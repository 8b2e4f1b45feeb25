//! Folding one-point Hermitian codes along orbits of the automorphisms
//! `σ_{δ,μ}: (x, y) ↦ (x + δ, y + δ^q x + μ)` with `μ^q + μ = δ^(q+1)`.
//!
//! A folded code keeps its underlying [`LinearCode`] with coordinates laid
//! out chain by chain, so block `i` of a codeword is coordinates
//! `i*m .. (i+1)*m`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::code::{CodeError, Distance, LinearCode, Weight};
use crate::gf::{prime_power, Field, FieldError};
use crate::hermitian::{CurveError, CurvePoint, HermitianCurve};
use crate::matrix::Matrix;
use crate::Rational;

#[derive(Debug, Error)]
pub enum FoldError {
    #[error("μ^q + μ ≠ δ^(q+1) for δ = {delta}, μ = {mu}")]
    InvalidParameters { delta: u16, mu: u16 },
    #[error("point {0} is not on the curve")]
    OffCurve(CurvePoint),
    #[error("m = {m} does not divide the automorphism order {order}")]
    NotDividingOrder { m: usize, order: usize },
    #[error("m = {m} does not divide the length {n}")]
    NotDividingLength { m: usize, n: usize },
    #[error("chain collision: an orbit of size {orbit} cannot be cut into chains of {m}")]
    ChainCollision { orbit: usize, m: usize },
    #[error("no σ_(δ,μ) of order divisible by {m} exists for q = {q}")]
    NoAutomorphism { q: u32, m: usize },
    #[error("code coordinates are not ordered along the chains")]
    CoordinateOrderMismatch,
    #[error("folded codes use different chains")]
    ChainMismatch,
    #[error("Reed–Solomon dimension {k} exceeds length {n}")]
    DimensionTooLarge { k: usize, n: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `σ_{δ,μ}` on the Hermitian curve over GF(q²).
#[derive(Clone)]
pub struct HermitianAutomorphism {
    field: Arc<Field>,
    q: u32,
    delta: u16,
    mu: u16,
    delta_q: u16,
}

impl fmt::Debug for HermitianAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ(δ={}, μ={})", self.delta, self.mu)
    }
}

impl HermitianAutomorphism {
    pub fn new(field: Arc<Field>, q: u32, delta: u16, mu: u16) -> Result<Self, FoldError> {
        for code in [delta, mu] {
            if code as usize >= field.order() {
                return Err(FieldError::CodeOutOfRange {
                    code: code as u32,
                    order: field.order(),
                }
                .into());
            }
        }
        if field.trace_q(mu, q)? != field.norm_q(delta, q)? {
            return Err(FoldError::InvalidParameters { delta, mu });
        }
        let delta_q = field.frobenius_q(delta, q)?;
        Ok(HermitianAutomorphism {
            field,
            q,
            delta,
            mu,
            delta_q,
        })
    }

    pub fn on(curve: &HermitianCurve, delta: u16, mu: u16) -> Result<Self, FoldError> {
        Self::new(curve.field().clone(), curve.q(), delta, mu)
    }

    pub fn identity(curve: &HermitianCurve) -> Self {
        Self::on(curve, 0, 0).expect("σ(0,0) is always valid")
    }

    /// Deterministic choice for folding parameter `m`: the identity for
    /// `m = 1`; `δ = 0` with the least nonzero trace-zero `μ` when an
    /// order-`p` map suffices; otherwise the least `δ ≠ 0` with its least `μ`.
    pub fn default_for(curve: &HermitianCurve, m: usize) -> Result<Self, FoldError> {
        let q = curve.q();
        let field = curve.field();
        if m == 1 {
            return Ok(Self::identity(curve));
        }
        let p = field.characteristic() as usize;
        if p.is_multiple_of(m) {
            let mu = field
                .solve_mu_constraint(0, q)?
                .into_iter()
                .find(|&mu| mu != 0)
                .expect("q > 1 trace-zero elements exist");
            return Self::on(curve, 0, mu);
        }
        for delta in field.elements().skip(1) {
            let mu = field.solve_mu_constraint(delta, q)?[0];
            let sigma = Self::on(curve, delta, mu)?;
            if sigma.order(curve) % m == 0 {
                return Ok(sigma);
            }
        }
        Err(FoldError::NoAutomorphism { q, m })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn delta(&self) -> u16 {
        self.delta
    }

    pub fn mu(&self) -> u16 {
        self.mu
    }

    #[inline]
    pub fn map(&self, p: CurvePoint) -> CurvePoint {
        let f = &self.field;
        CurvePoint {
            x: f.add(p.x, self.delta),
            y: f.add(f.add(p.y, f.mul(self.delta_q, p.x)), self.mu),
        }
    }

    pub fn apply(&self, curve: &HermitianCurve, p: CurvePoint) -> Result<CurvePoint, FoldError> {
        if !curve.contains(p) {
            return Err(FoldError::OffCurve(p));
        }
        Ok(self.map(p))
    }

    /// Whether every affine point is sent to an affine point of the curve.
    pub fn preserves_curve(&self, curve: &HermitianCurve) -> bool {
        curve.points().iter().all(|&p| curve.contains(self.map(p)))
    }

    /// Least `t >= 1` with `σ^t` fixing every affine point (capped at `q³`).
    pub fn order(&self, curve: &HermitianCurve) -> usize {
        let start = curve.points();
        let mut cur = start.to_vec();
        for t in 1..=start.len() {
            for p in cur.iter_mut() {
                *p = self.map(*p);
            }
            if cur == start {
                return t;
            }
        }
        start.len()
    }
}

/// A partition of the affine points into chains `(P, σP, …, σ^(m-1)P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldChains {
    m: usize,
    chains: Vec<Vec<usize>>,
    order: Vec<CurvePoint>,
}

impl FoldChains {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Point indices (into the curve's sorted point list), chain by chain.
    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    /// The points flattened chain by chain: the evaluation order of a
    /// code folded on these chains.
    pub fn evaluation_order(&self) -> &[CurvePoint] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

/// Cuts every `σ`-orbit into consecutive chains of length `m`, taking orbits
/// in order of their least unvisited point.
pub fn orbit_chains(
    sigma: &HermitianAutomorphism,
    curve: &HermitianCurve,
    m: usize,
) -> Result<FoldChains, FoldError> {
    let n = curve.len();
    if m == 0 || !n.is_multiple_of(m) {
        return Err(FoldError::NotDividingLength { m, n });
    }
    let order = sigma.order(curve);
    if !order.is_multiple_of(m) {
        return Err(FoldError::NotDividingOrder { m, order });
    }
    let mut visited = vec![false; n];
    let mut chains = Vec::with_capacity(n / m);
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut orbit = vec![start];
        let mut p = sigma.map(curve.points()[start]);
        loop {
            let idx = curve.index_of(p).ok_or(FoldError::OffCurve(p))?;
            if idx == start {
                break;
            }
            if visited[idx] || orbit.len() > n {
                return Err(FoldError::ChainCollision {
                    orbit: orbit.len(),
                    m,
                });
            }
            orbit.push(idx);
            p = sigma.map(p);
        }
        if orbit.len() % m != 0 {
            return Err(FoldError::ChainCollision {
                orbit: orbit.len(),
                m,
            });
        }
        for &i in &orbit {
            visited[i] = true;
        }
        chains.extend(orbit.chunks(m).map(<[usize]>::to_vec));
    }
    let order = chains
        .iter()
        .flatten()
        .map(|&i| curve.points()[i])
        .collect();
    Ok(FoldChains { m, chains, order })
}

/// A code viewed over the alphabet `F^m`, blocks of `m` consecutive coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedCode {
    code: LinearCode,
    m: usize,
    chains: Option<FoldChains>,
}

impl FoldedCode {
    /// Folds consecutive coordinates in blocks of `m`.
    pub fn consecutive(code: LinearCode, m: usize) -> Result<Self, FoldError> {
        if m == 0 || !code.len().is_multiple_of(m) {
            return Err(FoldError::NotDividingLength { m, n: code.len() });
        }
        Ok(FoldedCode {
            code,
            m,
            chains: None,
        })
    }

    /// Folds an evaluation code whose coordinates follow `chains`.
    pub fn along(code: LinearCode, chains: &FoldChains) -> Result<Self, FoldError> {
        if code.points() != Some(chains.evaluation_order()) {
            return Err(FoldError::CoordinateOrderMismatch);
        }
        Ok(FoldedCode {
            code,
            m: chains.m(),
            chains: Some(chains.clone()),
        })
    }

    /// `C(D, r P∞)` evaluated in chain order, then folded.
    pub fn hermitian(
        curve: &HermitianCurve,
        r: usize,
        chains: &FoldChains,
    ) -> Result<Self, FoldError> {
        let code = LinearCode::evaluation(curve, r, chains.evaluation_order())?;
        Self::along(code, chains)
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn into_code(self) -> LinearCode {
        self.code
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn chains(&self) -> Option<&FoldChains> {
        self.chains.as_ref()
    }

    pub fn weight(&self) -> Weight {
        Weight::Block(self.m)
    }

    /// Folded length `N = n / m`.
    pub fn len(&self) -> usize {
        self.code.len() / self.m
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    /// Folded dimension `k / m`, reduced.
    pub fn dimension(&self) -> Rational {
        Rational::new(self.code.dim() as i64, self.m as i64)
    }

    pub fn rate(&self) -> Rational {
        Rational::new(self.code.dim() as i64, self.code.len() as i64)
    }

    /// `⌈d/m⌉` from the designed distance of the underlying code.
    pub fn designed_distance(&self) -> Option<usize> {
        self.code.designed_distance().map(|d| d.div_ceil(self.m))
    }

    /// Minimum block weight.
    pub fn min_distance(&self, budget: u64) -> Result<Distance, CodeError> {
        self.code.min_distance(budget, self.weight())
    }

    pub fn blocks<'a>(&self, word: &'a [u16]) -> impl Iterator<Item = &'a [u16]> {
        word.chunks(self.m)
    }

    pub fn same_layout(&self, other: &FoldedCode) -> bool {
        self.m == other.m
            && self.code.len() == other.code.len()
            && self.code.points() == other.code.points()
    }

    /// Fold of the dual of the underlying code, on the same chains.
    pub fn folded_dual(&self) -> FoldedCode {
        FoldedCode {
            code: self.code.dual(),
            m: self.m,
            chains: self.chains.clone(),
        }
    }

    /// `Σ_i c^(i) · w^(i)` over the blocks.
    pub fn blockwise_inner_product(&self, a: &[u16], b: &[u16]) -> u16 {
        let f = self.code.field();
        a.chunks(self.m)
            .zip(b.chunks(self.m))
            .fold(0, |acc, (x, y)| f.add(acc, f.dot(x, y)))
    }

    /// Whether `other` is the blockwise-orthogonal complement of `self`:
    /// every generator pair has zero blockwise product and the folded
    /// dimensions add up to `N`.
    pub fn is_blockwise_dual_of(&self, other: &FoldedCode) -> bool {
        if !self.same_layout(other) {
            return false;
        }
        let orthogonal = self.code.generator().iter_rows().all(|a| {
            other
                .code
                .generator()
                .iter_rows()
                .all(|b| self.blockwise_inner_product(a, b) == 0)
        });
        orthogonal && self.dimension() + other.dimension() == Rational::from(self.len() as i64)
    }

    pub fn contains(&self, inner: &FoldedCode) -> Result<bool, FoldError> {
        if !self.same_layout(inner) {
            return Err(FoldError::ChainMismatch);
        }
        Ok(self.code.contains(&inner.code)?)
    }

    /// `[N, k/m, ≥d]` in bracket notation.
    pub fn triple(&self) -> String {
        match self.designed_distance() {
            Some(d) => format!("[{}, {}, ≥{}]", self.len(), self.dimension(), d),
            None => format!("[{}, {}]", self.len(), self.dimension()),
        }
    }
}

/// The `[q²-1, k]` Reed–Solomon code on the orbit `1, γ, γ², …` of a
/// primitive `γ` in GF(q²), folded in consecutive blocks of `m`.
pub fn fold_reed_solomon(q: u32, k: usize, m: usize) -> Result<FoldedCode, FoldError> {
    let (p, s) = prime_power(q).ok_or(CurveError::UnsupportedQ(q))?;
    let field = Arc::new(Field::new(p, 2 * s)?);
    let n = field.order() - 1;
    if m == 0 || n % m != 0 {
        return Err(FoldError::NotDividingLength { m, n });
    }
    if k > n {
        return Err(FoldError::DimensionTooLarge { k, n });
    }
    let gamma = field.primitive_element();
    let orbit: Vec<u16> = (0..n).map(|i| field.pow(gamma, i as u64)).collect();
    let mut g = Matrix::zeros(k, n);
    for j in 0..k {
        for (c, &x) in orbit.iter().enumerate() {
            g.set(j, c, field.pow(x, j as u64));
        }
    }
    let code = LinearCode::from_generators(field, n, g)
        .with_designed_distance(Some(n - k + 1))
        .with_label(format!("RS[{n}, {k}]"));
    FoldedCode::consecutive(code, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_BUDGET;

    #[test]
    fn sigma_01_on_q2() {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        assert_eq!(s.map(CurvePoint::new(0, 0)), CurvePoint::new(0, 1));
        assert_eq!(s.order(&c), 2);
        let id = HermitianAutomorphism::identity(&c);
        assert_eq!(id.order(&c), 1);
        assert!(c.points().iter().all(|&p| id.map(p) == p));
        assert!(matches!(
            HermitianAutomorphism::on(&c, 0, 2),
            Err(FoldError::InvalidParameters { .. })
        ));
        assert!(matches!(
            s.apply(&c, CurvePoint::new(1, 0)),
            Err(FoldError::OffCurve(_))
        ));
    }

    #[test]
    fn nonzero_delta_on_q4_preserves_curve_with_order_4() {
        let c = HermitianCurve::new(4).unwrap();
        let f = c.field();
        for delta in f.elements().skip(1) {
            for mu in f.solve_mu_constraint(delta, 4).unwrap() {
                let s = HermitianAutomorphism::on(&c, delta, mu).unwrap();
                assert!(s.preserves_curve(&c));
                assert_eq!(s.order(&c), 4);
            }
        }
    }

    #[test]
    fn chains_q2_pair_equal_x() {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        let ch = orbit_chains(&s, &c, 2).unwrap();
        assert_eq!(ch.len(), 4);
        for chain in ch.chains() {
            let (a, b) = (c.points()[chain[0]], c.points()[chain[1]]);
            assert_eq!(a.x, b.x);
            assert_eq!(s.map(a), b);
        }
    }

    #[test]
    fn chains_partition_and_link() {
        for (q, m) in [(4u32, 2usize), (4, 4), (5, 5), (3, 3)] {
            let c = HermitianCurve::new(q).unwrap();
            let s = HermitianAutomorphism::default_for(&c, m).unwrap();
            let ch = orbit_chains(&s, &c, m).unwrap();
            assert_eq!(ch.len(), c.len() / m);
            let mut seen = vec![0u8; c.len()];
            for chain in ch.chains() {
                assert_eq!(chain.len(), m);
                for w in chain.windows(2) {
                    assert_eq!(s.map(c.points()[w[0]]), c.points()[w[1]]);
                }
                for &i in chain {
                    seen[i] += 1;
                }
            }
            assert!(seen.iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn chain_errors() {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        assert!(matches!(
            orbit_chains(&s, &c, 4),
            Err(FoldError::NotDividingOrder { m: 4, order: 2 })
        ));
        assert!(matches!(
            orbit_chains(&s, &c, 3),
            Err(FoldError::NotDividingLength { .. })
        ));
        let c3 = HermitianCurve::new(3).unwrap();
        assert!(matches!(
            HermitianAutomorphism::default_for(&c3, 9),
            Err(FoldError::NoAutomorphism { .. })
        ));
    }

    #[test]
    fn folding_q4_rows() {
        let c = HermitianCurve::new(4).unwrap();
        let s = HermitianAutomorphism::default_for(&c, 2).unwrap();
        let ch = orbit_chains(&s, &c, 2).unwrap();
        let fc = FoldedCode::hermitian(&c, 48, &ch).unwrap();
        assert_eq!(fc.triple(), "[32, 43/2, ≥8]");
        assert_eq!(fc.rate(), Rational::new(43, 64));
        assert_eq!(fc.dimension() / Rational::from(fc.len() as i64), fc.rate());
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        let ch = orbit_chains(&s, &c, 2).unwrap();
        let mut pts = ch.evaluation_order().to_vec();
        pts.swap(1, 2);
        let code = LinearCode::evaluation(&c, 4, &pts).unwrap();
        assert!(matches!(
            FoldedCode::along(code, &ch),
            Err(FoldError::CoordinateOrderMismatch)
        ));
    }

    #[test]
    fn m1_is_identity_folding() {
        let c = HermitianCurve::new(2).unwrap();
        let id = HermitianAutomorphism::identity(&c);
        let ch = orbit_chains(&id, &c, 1).unwrap();
        assert_eq!(ch.evaluation_order(), c.points());
        let fc = FoldedCode::hermitian(&c, 4, &ch).unwrap();
        assert_eq!(fc.code(), &LinearCode::hermitian(&c, 4).unwrap());
        assert_eq!(fc.len(), 8);
    }

    #[test]
    fn folded_dual_properties() {
        let c = HermitianCurve::new(2).unwrap();
        let s = HermitianAutomorphism::on(&c, 0, 1).unwrap();
        let ch = orbit_chains(&s, &c, 2).unwrap();
        let fc = FoldedCode::hermitian(&c, 6, &ch).unwrap();
        let dual = fc.folded_dual();
        assert_eq!(dual, FoldedCode::hermitian(&c, 2, &ch).unwrap());
        assert_eq!(dual.folded_dual(), fc);
        assert!(fc.is_blockwise_dual_of(&dual));
        assert!(!fc.is_blockwise_dual_of(&fc));
    }

    #[test]
    fn reed_solomon_folds() {
        let f3 = fold_reed_solomon(4, 10, 3).unwrap();
        assert_eq!(f3.triple(), "[5, 10/3, ≥2]");
        let f5 = fold_reed_solomon(4, 10, 5).unwrap();
        assert_eq!(f5.triple(), "[3, 2, ≥2]");
        let f1 = fold_reed_solomon(4, 10, 1).unwrap();
        assert_eq!(f1.triple(), "[15, 10, ≥6]");
        // RS codes are MDS: the plain code has distance exactly n - k + 1.
        let d = f1
            .code()
            .min_distance(DEFAULT_BUDGET, Weight::Symbol)
            .unwrap();
        assert_eq!(d, Distance::Exact(6));
        assert!(matches!(
            fold_reed_solomon(4, 10, 4),
            Err(FoldError::NotDividingLength { .. })
        ));
    }
}
