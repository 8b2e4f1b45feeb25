//! Exact arithmetic in GF(p^s).
//!
//! Elements are encoded as integers in `0..p^s`: the base-`p` digits of the
//! code are the polynomial-basis coefficients, lowest degree first. The
//! modulus is the lexicographically least monic irreducible polynomial of
//! degree `s`, so codes are reproducible across runs and platforms.
//!
//! Kernels (row reduction, enumeration) work directly on `u16` codes through
//! the methods on [`Field`]; [`FieldElement`] is the checked wrapper that
//! carries its field along.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// Fields at or below this order get full addition and multiplication tables.
const TABLE_LIMIT: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{s} exceeds 2^16")]
    OrderOverflow { p: u32, s: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{q}^2 does not equal the field order {order}")]
    NotQuadratic { q: u32, order: usize },
    #[error("element code {code} is out of range for a field of order {order}")]
    CodeOutOfRange { code: u32, order: usize },
    #[error("malformed field descriptor: {0}")]
    Descriptor(String),
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^s` into `(p, s)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut s = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p, s))
}

/// Polynomials over GF(p) as coefficient vectors, lowest degree first.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        (1..p)
            .find(|&x| (a * x) % p == 1)
            .expect("nonzero residue mod a prime")
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = (r[dr] * lead_inv) % p;
            let shift = dr - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - (c * bi) % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        rem(&out, m, p)
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as usize).pow(d as u32);
            for code in 0..count {
                let mut g = super::digits(code, p, d as u32);
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn digits(mut code: usize, p: u32, s: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(s as usize);
    for _ in 0..s {
        out.push((code % p as usize) as u32);
        code /= p as usize;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> usize {
    coeffs
        .iter()
        .rev()
        .fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// A finite field GF(p^s) with its integer element encoding.
pub struct Field {
    p: u32,
    s: u32,
    order: usize,
    modulus: Vec<u32>,
    primitive: u16,
    exp: Vec<u16>,
    log: Vec<u32>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    add_tab: Vec<u16>,
    mul_tab: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.descriptor())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(p^s) on the lexicographically least monic irreducible
    /// modulus (lower coefficients read as a base-`p` integer, constant term
    /// least significant).
    pub fn new(p: u32, s: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if s == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(s)
            .filter(|&o| o <= 1 << 16)
            .ok_or(FieldError::OrderOverflow { p, s })? as usize;

        let modulus = (0..order)
            .map(|code| {
                let mut f = digits(code, p, s);
                f.push(1);
                f
            })
            .find(|f| poly::is_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");

        Self::with_modulus(p, s, modulus)
    }

    /// Builds the field on an explicit monic modulus (checked for irreducibility).
    pub fn with_modulus(p: u32, s: u32, modulus: Vec<u32>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if s == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if (p as u64).checked_pow(s).is_none_or(|o| o > 1 << 16) {
            return Err(FieldError::OrderOverflow { p, s });
        }
        if modulus.len() != s as usize + 1
            || modulus[s as usize] != 1
            || modulus.iter().any(|&c| c >= p)
            || !poly::is_irreducible(&modulus, p)
        {
            return Err(FieldError::Descriptor(format!(
                "modulus {modulus:?} is not a monic irreducible of degree {s} over GF({p})"
            )));
        }
        let order = (p as usize).pow(s);

        // Find a primitive element by walking powers with polynomial arithmetic.
        let mut exp = Vec::new();
        let mut primitive = 0u16;
        for g in 1..order {
            let gp = digits(g, p, s);
            let mut seq = Vec::with_capacity(order - 1);
            let mut cur = vec![1u32];
            loop {
                let mut c = cur.clone();
                c.resize(s as usize, 0);
                let code = undigits(&c, p);
                if !seq.is_empty() && code == 1 {
                    break;
                }
                seq.push(code as u16);
                if seq.len() > order - 1 {
                    break;
                }
                cur = poly::mul_mod(&cur, &gp, &modulus, p);
                if cur.is_empty() {
                    break;
                }
            }
            if seq.len() == order - 1 {
                primitive = g as u16;
                exp = seq;
                break;
            }
        }
        let cycle = order - 1;
        let mut log = vec![0u32; order];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let doubled: Vec<u16> = exp.iter().chain(exp.iter()).copied().collect();

        let mut field = Field {
            p,
            s,
            order,
            modulus,
            primitive,
            exp: doubled,
            log,
            neg: Vec::new(),
            inv: Vec::new(),
            add_tab: Vec::new(),
            mul_tab: Vec::new(),
        };
        field.neg = (0..order)
            .map(|a| {
                let d: Vec<u32> = digits(a, p, s).iter().map(|&c| (p - c) % p).collect();
                undigits(&d, p) as u16
            })
            .collect();
        field.inv = (0..order)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    field.exp[(cycle - field.log[a] as usize) % cycle]
                }
            })
            .collect();
        if order <= TABLE_LIMIT {
            let mut add_tab = vec![0u16; order * order];
            let mut mul_tab = vec![0u16; order * order];
            for a in 0..order {
                for b in 0..order {
                    add_tab[a * order + b] = field.add_slow(a as u16, b as u16);
                    mul_tab[a * order + b] = field.mul_slow(a as u16, b as u16);
                }
            }
            field.add_tab = add_tab;
            field.mul_tab = mul_tab;
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Modulus coefficients, lowest degree first (length `s + 1`, monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A fixed generator of the multiplicative group (least such code).
    pub fn primitive_element(&self) -> u16 {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        (0..self.order).map(|c| c as u16)
    }

    pub fn element(&self, code: u32) -> Result<FieldElement<'_>, FieldError> {
        if (code as usize) < self.order {
            Ok(FieldElement {
                field: self,
                code: code as u16,
            })
        } else {
            Err(FieldError::CodeOutOfRange {
                code,
                order: self.order,
            })
        }
    }

    /// Polynomial-basis coefficients of an element, lowest degree first.
    pub fn coefficients(&self, a: u16) -> Vec<u32> {
        digits(a as usize, self.p, self.s)
    }

    fn add_slow(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            return a ^ b;
        }
        let (p, s) = (self.p, self.s);
        let da = digits(a as usize, p, s);
        let db = digits(b as usize, p, s);
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        undigits(&sum, p) as u16
    }

    fn mul_slow(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            a ^ b
        } else if !self.add_tab.is_empty() {
            self.add_tab[a as usize * self.order + b as usize]
        } else {
            self.add_slow(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if !self.mul_tab.is_empty() {
            self.mul_tab[a as usize * self.order + b as usize]
        } else {
            self.mul_slow(a, b)
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn div(&self, a: u16, b: u16) -> Result<u16, FieldError> {
        let bi = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, bi))
    }

    /// `a^e` by square-and-multiply.
    pub fn pow(&self, a: u16, mut e: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `dst += c * src`, elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [u16], c: u16, src: &[u16]) {
        if c == 0 {
            return;
        }
        if !self.mul_tab.is_empty() {
            let row = &self.mul_tab[c as usize * self.order..(c as usize + 1) * self.order];
            if self.p == 2 {
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d ^= row[s as usize];
                }
            } else {
                let order = self.order;
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = self.add_tab[*d as usize * order + row[s as usize] as usize];
                }
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = self.add(*d, self.mul(c, s));
            }
        }
    }

    pub fn scale(&self, v: &mut [u16], c: u16) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    pub fn dot(&self, a: &[u16], b: &[u16]) -> u16 {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    fn check_quadratic(&self, q: u32) -> Result<(), FieldError> {
        if (q as usize) * (q as usize) == self.order {
            Ok(())
        } else {
            Err(FieldError::NotQuadratic {
                q,
                order: self.order,
            })
        }
    }

    /// The Frobenius map `a ↦ a^q` of GF(q²) over GF(q).
    pub fn frobenius_q(&self, a: u16, q: u32) -> Result<u16, FieldError> {
        self.check_quadratic(q)?;
        Ok(self.pow(a, q as u64))
    }

    /// Whether `a` lies in the subfield GF(q) of GF(q²), i.e. `a^q = a`.
    pub fn in_subfield(&self, a: u16, q: u32) -> Result<bool, FieldError> {
        Ok(self.frobenius_q(a, q)? == a)
    }

    /// Relative trace `a^q + a` from GF(q²) to GF(q).
    pub fn trace_q(&self, a: u16, q: u32) -> Result<u16, FieldError> {
        Ok(self.add(self.frobenius_q(a, q)?, a))
    }

    /// Relative norm `a^(q+1)` from GF(q²) to GF(q).
    pub fn norm_q(&self, a: u16, q: u32) -> Result<u16, FieldError> {
        self.check_quadratic(q)?;
        Ok(self.pow(a, q as u64 + 1))
    }

    /// All `μ` with `μ^q + μ = δ^(q+1)`, in ascending code order.
    pub fn solve_mu_constraint(&self, delta: u16, q: u32) -> Result<Vec<u16>, FieldError> {
        let target = self.norm_q(delta, q)?;
        let mut out = Vec::with_capacity(q as usize);
        for mu in self.elements() {
            if self.trace_q(mu, q)? == target {
                out.push(mu);
            }
        }
        Ok(out)
    }

    /// `GF p s c0 c1 ... cs`.
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
        format!("GF {} {} {}", self.p, self.s, coeffs.join(" "))
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(line: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::Descriptor(line.to_string());
        let mut parts = line.split_whitespace();
        if parts.next() != Some("GF") {
            return Err(bad());
        }
        let nums: Vec<u32> = parts
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if nums.len() < 3 {
            return Err(bad());
        }
        let (p, s) = (nums[0], nums[1]);
        let modulus = nums[2..].to_vec();
        if modulus.len() != s as usize + 1 {
            return Err(bad());
        }
        Field::with_modulus(p, s, modulus)
    }
}

/// An element paired with the field it lives in.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f Field,
    code: u16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<'f> FieldElement<'f> {
    pub fn code(&self) -> u16 {
        self.code
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn arith(self, other: Self, op: ArithOp) -> Result<Self, FieldError> {
        if !std::ptr::eq(self.field, other.field) && self.field != other.field {
            return Err(FieldError::FieldMismatch);
        }
        let f = self.field;
        let code = match op {
            ArithOp::Add => f.add(self.code, other.code),
            ArithOp::Sub => f.sub(self.code, other.code),
            ArithOp::Mul => f.mul(self.code, other.code),
            ArithOp::Div => f.div(self.code, other.code)?,
        };
        Ok(FieldElement { field: f, code })
    }

    pub fn inverse(self) -> Result<Self, FieldError> {
        let code = self
            .field
            .inv(self.code)
            .ok_or(FieldError::DivisionByZero)?;
        Ok(FieldElement { code, ..self })
    }

    pub fn pow(self, e: u64) -> Self {
        FieldElement {
            code: self.field.pow(self.code, e),
            ..self
        }
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field == other.field
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({}^{})", self.code, self.field.p, self.field.s)
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl<'f> $tr for FieldElement<'f> {
            type Output = FieldElement<'f>;

            /// Panics when the operands come from different fields.
            fn $method(self, rhs: Self) -> Self::Output {
                self.arith(rhs, $op).expect("field arithmetic")
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);
binop!(Div, div, ArithOp::Div);

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;

    fn neg(self) -> Self::Output {
        FieldElement {
            code: self.field.neg(self.code),
            ..self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields_use_modulus_t() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.descriptor(), "GF 2 1 0 1");
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.mul(3, 5), 1);
        assert_eq!(f7.inv(3), Some(5));
    }

    #[test]
    fn gf4_modulus_and_alpha_squared() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // α = 2 (the class of t); α² = α + 1 = 3.
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 2), 0);
    }

    #[test]
    fn gf9_modulus_is_lex_least_irreducible() {
        let f = Field::new(3, 2).unwrap();
        // Scan all 9 monic quadratics t² + c1 t + c0 and keep the ones
        // without a root in GF(3); their codes c0 + 3 c1 order them.
        let mut irreducible = Vec::new();
        for code in 0..9u32 {
            let (c0, c1) = (code % 3, code / 3);
            let has_root = (0..3u32).any(|t| (t * t + c1 * t + c0) % 3 == 0);
            if !has_root {
                irreducible.push(vec![c0, c1, 1]);
            }
        }
        assert_eq!(irreducible.len(), 3);
        assert_eq!(f.modulus(), irreducible[0].as_slice());
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn gf9_axioms_exhaustive() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(a, b), f.add(b, a));
                for c in f.elements() {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(Field::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
        assert_eq!(
            Field::new(2, 17).unwrap_err(),
            FieldError::OrderOverflow { p: 2, s: 17 }
        );
        assert!(Field::new(2, 16).is_ok());
    }

    #[test]
    fn large_field_without_tables() {
        let f = Field::new(3, 7).unwrap();
        assert!(f.order() > TABLE_LIMIT);
        for a in [1u16, 2, 100, 2000] {
            let ai = f.inv(a).unwrap();
            assert_eq!(f.mul(a, ai), 1);
            assert_eq!(f.pow(a, f.order() as u64), a);
            assert_eq!(f.sub(f.add(a, 77), 77), a);
        }
    }

    #[test]
    fn frobenius_on_gf4_and_subfield() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.frobenius_q(2, 2).unwrap(), 3);
        assert_eq!(f.frobenius_q(1, 2).unwrap(), 1);
        assert!(matches!(
            f.frobenius_q(2, 3),
            Err(FieldError::NotQuadratic { .. })
        ));
    }

    #[test]
    fn frobenius_involution_gf16() {
        let f = Field::new(2, 4).unwrap();
        for a in f.elements() {
            let b = f.frobenius_q(a, 4).unwrap();
            assert_eq!(f.frobenius_q(b, 4).unwrap(), a);
        }
        let fixed = f
            .elements()
            .filter(|&a| f.in_subfield(a, 4).unwrap())
            .count();
        assert_eq!(fixed, 4);
    }

    #[test]
    fn mu_constraint_solutions() {
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.solve_mu_constraint(0, 2).unwrap(), vec![0, 1]);
        let f16 = Field::new(2, 4).unwrap();
        for delta in f16.elements() {
            let sols = f16.solve_mu_constraint(delta, 4).unwrap();
            assert_eq!(sols.len(), 4);
            let n = f16.norm_q(delta, 4).unwrap();
            for mu in sols {
                assert_eq!(f16.add(f16.pow(mu, 4), mu), n);
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let f = Field::new(2, 8).unwrap();
        let g: Field = f.descriptor().parse().unwrap();
        assert_eq!(f, g);
        assert!("GF 2 2 1 0 1".parse::<Field>().is_err());
        assert!("XX 2 1 0 1".parse::<Field>().is_err());
    }

    #[test]
    fn checked_elements() {
        let f = Field::new(2, 2).unwrap();
        let g = Field::new(3, 1).unwrap();
        let a = f.element(2).unwrap();
        assert_eq!((a * a).code(), 3);
        assert_eq!(
            a.arith(f.element(0).unwrap(), ArithOp::Div).unwrap_err(),
            FieldError::DivisionByZero
        );
        assert_eq!(
            a.arith(g.element(1).unwrap(), ArithOp::Add).unwrap_err(),
            FieldError::FieldMismatch
        );
        assert!(f.element(4).is_err());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
