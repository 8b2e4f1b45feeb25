//! The Hermitian curve `y^q + y = x^(q+1)` over GF(q²) and its one-point
//! Riemann–Roch spaces `L(r P∞)`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{prime_power, Field, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("q = {0} is not a supported prime power (need q <= 16)")]
    UnsupportedQ(u32),
    #[error("r = {r} is outside 0..{n}")]
    DegreeOutOfRange { r: usize, n: usize },
    #[error("point ({x}, {y}) is not on the curve")]
    OffCurve { x: u16, y: u16 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// An affine point, ordered by the codes of `x` then `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurvePoint {
    pub x: u16,
    pub y: u16,
}

impl CurvePoint {
    pub fn new(x: u16, y: u16) -> Self {
        CurvePoint { x, y }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The monomial `x^i y^j`, with `j < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    /// Pole order at infinity: `i q + j (q + 1)`.
    pub fn pole_order(&self, q: u32) -> usize {
        (self.i * q + self.j * (q + 1)) as usize
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: char, e: u32| match e {
            0 => String::new(),
            1 => v.to_string(),
            e => format!("{v}^{e}"),
        };
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, j) => write!(f, "{}{}", part('x', i), part('y', j)),
        }
    }
}

fn check_q(q: u32) -> Result<(u32, u32), CurveError> {
    match prime_power(q) {
        Some(ps) if q <= 16 => Ok(ps),
        _ => Err(CurveError::UnsupportedQ(q)),
    }
}

pub fn genus(q: u32) -> usize {
    (q * (q - 1) / 2) as usize
}

/// Monomials `x^i y^j` with `0 <= j < q` and pole order at most `r`, sorted by
/// pole order. Valid for `0 <= r < q³`.
pub fn monomial_basis_for(q: u32, r: usize) -> Result<Vec<Monomial>, CurveError> {
    check_q(q)?;
    let n = (q as usize).pow(3);
    if r >= n {
        return Err(CurveError::DegreeOutOfRange { r, n });
    }
    let mut out = Vec::new();
    for j in 0..q {
        let base = (j * (q + 1)) as usize;
        if base > r {
            break;
        }
        let max_i = (r - base) / q as usize;
        out.extend((0..=max_i as u32).map(|i| Monomial { i, j }));
    }
    out.sort_by_key(|m| (m.pole_order(q), m.j));
    Ok(out)
}

/// `ℓ(r P∞)`, counted from the monomial basis.
pub fn riemann_roch_dim_for(q: u32, r: usize) -> Result<usize, CurveError> {
    Ok(monomial_basis_for(q, r)?.len())
}

/// Nonnegative integers that are not pole orders at infinity.
pub fn weierstrass_gaps(q: u32) -> Vec<usize> {
    let bound = 2 * genus(q);
    let mut hit = vec![false; bound.max(1)];
    for j in 0..q {
        for i in 0.. {
            let v = (i * q + j * (q + 1)) as usize;
            if v >= bound {
                break;
            }
            hit[v] = true;
        }
    }
    (0..bound).filter(|&v| !hit[v]).collect()
}

/// The rational affine points of the Hermitian curve, sorted.
#[derive(Clone)]
pub struct HermitianCurve {
    q: u32,
    field: Arc<Field>,
    points: Vec<CurvePoint>,
}

impl fmt::Debug for HermitianCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HermitianCurve")
            .field("q", &self.q)
            .field("points", &self.points.len())
            .finish()
    }
}

impl HermitianCurve {
    pub fn new(q: u32) -> Result<Self, CurveError> {
        let (p, s) = check_q(q)?;
        let field = Arc::new(Field::new(p, 2 * s)?);
        Ok(Self::over(field, q))
    }

    /// Curve over an already constructed GF(q²).
    pub fn over(field: Arc<Field>, q: u32) -> Self {
        // y^q + y is the trace, x^(q+1) the norm; bucket y by trace.
        let mut by_trace: Vec<Vec<u16>> = vec![Vec::new(); field.order()];
        for y in field.elements() {
            let t = field.add(field.pow(y, q as u64), y);
            by_trace[t as usize].push(y);
        }
        let mut points = Vec::with_capacity((q as usize).pow(3));
        for x in field.elements() {
            let nx = field.pow(x, q as u64 + 1);
            points.extend(by_trace[nx as usize].iter().map(|&y| CurvePoint { x, y }));
        }
        points.sort();
        HermitianCurve { q, field, points }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    /// Number of affine points, `q³`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn genus(&self) -> usize {
        genus(self.q)
    }

    pub fn contains(&self, p: CurvePoint) -> bool {
        let f = &self.field;
        let lhs = f.add(f.pow(p.y, self.q as u64), p.y);
        lhs == f.pow(p.x, self.q as u64 + 1)
    }

    pub fn index_of(&self, p: CurvePoint) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    pub fn monomial_basis(&self, r: usize) -> Result<Vec<Monomial>, CurveError> {
        monomial_basis_for(self.q, r)
    }

    pub fn riemann_roch_dim(&self, r: usize) -> Result<usize, CurveError> {
        riemann_roch_dim_for(self.q, r)
    }

    pub fn evaluate(&self, m: Monomial, p: CurvePoint) -> u16 {
        let f = &self.field;
        f.mul(f.pow(p.x, m.i as u64), f.pow(p.y, m.j as u64))
    }

    /// Rows are the monomials of `L(r P∞)`, columns the points in `order`.
    pub fn evaluation_rows(
        &self,
        r: usize,
        order: &[CurvePoint],
    ) -> Result<Vec<Vec<u16>>, CurveError> {
        let basis = self.monomial_basis(r)?;
        let f = &self.field;
        let max_i = basis.iter().map(|m| m.i).max().unwrap_or(0) as usize;
        let max_j = basis.iter().map(|m| m.j).max().unwrap_or(0) as usize;
        let mut xpow = vec![vec![0u16; order.len()]; max_i + 1];
        let mut ypow = vec![vec![0u16; order.len()]; max_j + 1];
        for (c, p) in order.iter().enumerate() {
            let (mut ax, mut ay) = (1u16, 1u16);
            for row in xpow.iter_mut() {
                row[c] = ax;
                ax = f.mul(ax, p.x);
            }
            for row in ypow.iter_mut() {
                row[c] = ay;
                ay = f.mul(ay, p.y);
            }
        }
        Ok(basis
            .iter()
            .map(|m| {
                let (xs, ys) = (&xpow[m.i as usize], &ypow[m.j as usize]);
                xs.iter().zip(ys).map(|(&a, &b)| f.mul(a, b)).collect()
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        for q in [2u32, 3, 4, 5] {
            let c = HermitianCurve::new(q).unwrap();
            assert_eq!(c.len(), (q as usize).pow(3));
            assert!(c.points().windows(2).all(|w| w[0] < w[1]));
            assert!(c.points().iter().all(|&p| c.contains(p)));
        }
    }

    #[test]
    fn q3_points_by_brute_force() {
        let c = HermitianCurve::new(3).unwrap();
        let f = c.field();
        let mut brute = Vec::new();
        for x in f.elements() {
            for y in f.elements() {
                let lhs = f.add(f.mul(f.mul(y, y), y), y);
                let rhs = f.mul(f.mul(f.mul(x, x), x), x);
                if lhs == rhs {
                    brute.push(CurvePoint { x, y });
                }
            }
        }
        assert_eq!(brute.len(), 27);
        assert_eq!(brute, c.points());
    }

    #[test]
    fn unsupported_q() {
        assert_eq!(
            HermitianCurve::new(6).unwrap_err(),
            CurveError::UnsupportedQ(6)
        );
        assert_eq!(
            HermitianCurve::new(25).unwrap_err(),
            CurveError::UnsupportedQ(25)
        );
    }

    #[test]
    fn basis_small_cases() {
        let b = monomial_basis_for(2, 4).unwrap();
        assert_eq!(
            b,
            vec![
                Monomial { i: 0, j: 0 },
                Monomial { i: 1, j: 0 },
                Monomial { i: 0, j: 1 },
                Monomial { i: 2, j: 0 }
            ]
        );
        let b2 = monomial_basis_for(2, 2).unwrap();
        assert_eq!(b2, vec![Monomial { i: 0, j: 0 }, Monomial { i: 1, j: 0 }]);
        assert_eq!(monomial_basis_for(4, 48).unwrap().len(), 43);
        assert_eq!(riemann_roch_dim_for(2, 0).unwrap(), 1);
        assert!(matches!(
            monomial_basis_for(2, 8),
            Err(CurveError::DegreeOutOfRange { r: 8, n: 8 })
        ));
    }

    #[test]
    fn dimensions_from_table_rows() {
        assert_eq!(riemann_roch_dim_for(5, 95).unwrap(), 86);
        assert_eq!(riemann_roch_dim_for(16, 3584).unwrap(), 3465);
    }

    #[test]
    fn gap_count_is_genus() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16] {
            assert_eq!(weierstrass_gaps(q).len(), genus(q));
        }
        assert_eq!(weierstrass_gaps(2), vec![1]);
        assert_eq!(weierstrass_gaps(3), vec![1, 2, 5]);
    }

    #[test]
    fn evaluation_matches_pointwise() {
        let c = HermitianCurve::new(3).unwrap();
        let rows = c.evaluation_rows(7, c.points()).unwrap();
        let basis = c.monomial_basis(7).unwrap();
        for (m, row) in basis.iter().zip(&rows) {
            for (p, &v) in c.points().iter().zip(row) {
                assert_eq!(c.evaluate(*m, *p), v);
            }
        }
    }
}
